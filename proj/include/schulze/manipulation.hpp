// Manipulation deciders: exact brute force over manipulator ballot
// assignments, the identical-votes restriction, the single-manipulator
// score condition, and the unique-winner divergence search.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "schulze/decision.hpp"
#include "schulze/election.hpp"
#include "schulze/mcgarvey.hpp"

namespace schulze {

struct ManipulationInstance {
    Election election;               // honest voters only
    std::int64_t manipulator_count = 1;
    std::string target;
    Goal goal = Goal::Constructive;
    WinnerModel model = WinnerModel::Nonunique;
};

struct ManipulationResult {
    bool possible = false;
    std::vector<Ballot> witness;     // one ballot per manipulator when possible
};

inline constexpr std::uint64_t kDefaultManipulationBudget = 2'000'000;

// All strict rankings of the candidate set, in lexicographic order.
// Enumeration order is the determinism contract for returned witnesses.
inline std::vector<Ballot> all_ballots(const std::vector<std::string>& candidates) {
    std::vector<std::string> perm(candidates);
    std::sort(perm.begin(), perm.end());
    std::vector<Ballot> out;
    do {
        out.push_back(Ballot{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace detail {

// Pairwise net-advantage contribution of a single ballot (+1/-1 per pair).
inline SquareMatrix ballot_contribution(const SquareMatrix& shape, const Ballot& b) {
    SquareMatrix contrib(shape.names());
    for (std::size_t r = 0; r < b.ranking.size(); ++r) {
        std::size_t i = contrib.index_of(b.ranking[r]);
        for (std::size_t s = r + 1; s < b.ranking.size(); ++s) {
            std::size_t j = contrib.index_of(b.ranking[s]);
            contrib.at(i, j) += 1;
            contrib.at(j, i) -= 1;
        }
    }
    return contrib;
}

inline std::uint64_t multiset_count(std::uint64_t options, std::uint64_t picks,
                                    std::uint64_t cap) {
    // C(options + picks - 1, picks), saturating at cap + 1.
    std::uint64_t n = options + picks - 1;
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < picks; ++i) {
        if (result > cap / (n - i) + 1) return cap + 1;
        result = result * (n - i) / (i + 1);
        if (result > cap) return cap + 1;
    }
    return result;
}

}  // namespace detail

inline void check_manipulation_instance(const ManipulationInstance& inst) {
    validate(inst.election);
    if (inst.manipulator_count < 1)
        throw validation_error("manipulator count must be >= 1");
    if (!std::binary_search(inst.election.candidates.begin(), inst.election.candidates.end(),
                            inst.target))
        throw validation_error("unknown target candidate: " + inst.target);
}

// Exact decision by enumerating multisets of manipulator ballots (the order
// of identical manipulators never matters).  First witness in enumeration
// order is returned.
inline ManipulationResult decide_bruteforce(const ManipulationInstance& inst,
                                            std::uint64_t max_nodes = kDefaultManipulationBudget) {
    check_manipulation_instance(inst);
    const auto perms = all_ballots(inst.election.candidates);
    const std::uint64_t count =
        detail::multiset_count(perms.size(), std::uint64_t(inst.manipulator_count), max_nodes);
    if (count > max_nodes)
        throw budget_exceeded("manipulation search too large: > " + std::to_string(max_nodes) +
                              " assignments");

    SquareMatrix base = compute_net_advantage(inst.election);
    std::vector<SquareMatrix> contribs;
    contribs.reserve(perms.size());
    for (const auto& b : perms) contribs.push_back(detail::ballot_contribution(base, b));

    std::vector<std::size_t> choice(std::size_t(inst.manipulator_count), 0);
    ManipulationResult result;
    const std::size_t m = base.size();

    auto evaluate = [&]() {
        SquareMatrix net = base;
        for (std::size_t pick : choice)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    net.at(i, j) += contribs[pick].at(i, j);
        return goal_met(winners_from_netadv(net), inst.target, inst.goal, inst.model);
    };

    // Nondecreasing index sequences enumerate every multiset exactly once.
    while (true) {
        if (evaluate()) {
            result.possible = true;
            for (std::size_t pick : choice) result.witness.push_back(perms[pick]);
            return result;
        }
        std::size_t pos = choice.size();
        while (pos > 0 && choice[pos - 1] == perms.size() - 1) --pos;
        if (pos == 0) break;
        ++choice[pos - 1];
        for (std::size_t q = pos; q < choice.size(); ++q) choice[q] = choice[pos - 1];
    }
    return result;
}

// Restriction of the above to identical manipulator votes.
inline ManipulationResult decide_identical(const ManipulationInstance& inst,
                                           std::uint64_t max_nodes = kDefaultManipulationBudget) {
    check_manipulation_instance(inst);
    const auto perms = all_ballots(inst.election.candidates);
    if (perms.size() > max_nodes)
        throw budget_exceeded("identical-vote search too large");

    SquareMatrix base = compute_net_advantage(inst.election);
    const std::size_t m = base.size();
    for (const auto& b : perms) {
        SquareMatrix contrib = detail::ballot_contribution(base, b);
        SquareMatrix net = base;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                net.at(i, j) += contrib.at(i, j) * inst.manipulator_count;
        if (goal_met(winners_from_netadv(net), inst.target, inst.goal, inst.model)) {
            ManipulationResult result;
            result.possible = true;
            result.witness.assign(std::size_t(inst.manipulator_count), b);
            return result;
        }
    }
    return {};
}

// The stated single-manipulator feasibility condition on honest-voter
// Schulze scores.  Advisory: the brute-force decider is authoritative.
inline bool single_manipulator_feasibility(const Election& e, const std::string& p,
                                           WinnerModel model) {
    SquareMatrix paths = strongest_paths(compute_net_advantage(e));
    std::size_t pi = paths.index_of(p);
    for (std::size_t a = 0; a < paths.size(); ++a) {
        if (a == pi) continue;
        std::int64_t margin = paths.at(a, pi) - paths.at(pi, a);
        if (model == WinnerModel::Unique ? margin > 0 : margin > 2) return false;
    }
    return true;
}

struct GapSearchConfig {
    int candidate_count = 4;
    int max_margin = 4;              // even net-advantage entries in [-max, max]
    std::int64_t manipulator_count = 2;
    WinnerModel model = WinnerModel::Unique;
    Goal goal = Goal::Constructive;
    std::uint64_t max_instances = 40000;
    std::uint64_t seed = 20240711;
};

struct GapSearchResult {
    bool found = false;
    ManipulationInstance instance;
    std::vector<Ballot> general_witness;   // from decide_bruteforce, distinct ballots
    std::uint64_t instances_tried = 0;
};

// Seeded search for an instance where the general decider succeeds but the
// identical-votes decider fails.  In the nonunique constructive model this
// must come up empty; in the unique model a witness exists at small scale.
inline GapSearchResult find_unique_winner_gap(const GapSearchConfig& cfg) {
    if (cfg.candidate_count < 2 || cfg.candidate_count > 26)
        throw validation_error("gap search candidate count out of range");
    std::vector<std::string> names;
    for (int i = 0; i < cfg.candidate_count; ++i) names.push_back(std::string(1, char('a' + i)));

    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> unit(-cfg.max_margin / 2, cfg.max_margin / 2);

    GapSearchResult result;
    for (std::uint64_t trial = 0; trial < cfg.max_instances; ++trial) {
        result.instances_tried = trial + 1;
        SquareMatrix target(names);
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = i + 1; j < names.size(); ++j) {
                std::int64_t w = 2 * unit(rng);
                target.at(i, j) = w;
                target.at(j, i) = -w;
            }
        Election e = synthesize(target);
        for (const auto& p : names) {
            ManipulationInstance inst{e, cfg.manipulator_count, p, cfg.goal, cfg.model};
            if (decide_identical(inst).possible) continue;
            ManipulationResult general = decide_bruteforce(inst);
            if (!general.possible) continue;
            result.found = true;
            result.instance = inst;
            result.general_witness = general.witness;
            return result;
        }
    }
    return result;
}

}  // namespace schulze
