// Electoral control: instance model for all eight control families,
// apply-and-evaluate semantics, and exact brute-force deciders.
#pragma once

#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "schulze/decision.hpp"
#include "schulze/election.hpp"

namespace schulze {

enum class ControlFamily {
    AddCandidates,            // AC
    AddCandidatesUnlimited,   // AUC
    DeleteCandidates,         // DC
    AddVoters,                // AV
    DeleteVoters,             // DV
    PartitionCandidates,      // PC
    RunoffPartitionCandidates,// RPC
    PartitionVoters,          // PV
};

inline bool family_uses_tie_model(ControlFamily f) {
    return f == ControlFamily::PartitionCandidates ||
           f == ControlFamily::RunoffPartitionCandidates ||
           f == ControlFamily::PartitionVoters;
}

inline bool family_uses_budget(ControlFamily f) {
    return f == ControlFamily::AddCandidates || f == ControlFamily::DeleteCandidates ||
           f == ControlFamily::AddVoters || f == ControlFamily::DeleteVoters;
}

struct ControlInstance {
    ControlFamily family = ControlFamily::DeleteCandidates;
    Goal goal = Goal::Constructive;
    TieModel tie = TieModel::Eliminate;

    // For AC/AUC, election.candidates = C ∪ pool and ballots rank all of
    // them; `original` is C.  For every other family original == candidates.
    Election election;
    std::vector<std::string> original;
    std::vector<std::string> pool;                 // D (AC/AUC)
    std::vector<WeightedBallot> unregistered;      // W (AV), ballots over C
    std::int64_t budget = 0;                       // k
    std::string distinguished;                     // p
};

// Family-specific witness.  Only the relevant field is used.
struct ControlAction {
    std::vector<std::string> added;        // AC/AUC: D' ⊆ pool
    std::vector<std::string> deleted;      // DC: C' ⊆ C
    std::vector<std::size_t> voters;       // AV: W' / DV: V' / PV: V1 (expanded indices)
    std::vector<std::string> first_part;   // PC/RPC: C1
};

struct ControlDecision {
    bool possible = false;
    ControlAction witness;
    std::uint64_t nodes = 0;  // actions evaluated
};

inline constexpr std::uint64_t kDefaultControlBudget = 1u << 24;

inline std::vector<Ballot> expand_ballots(const std::vector<WeightedBallot>& weighted) {
    std::vector<Ballot> out;
    for (const auto& wb : weighted)
        for (std::int64_t i = 0; i < wb.count; ++i) out.push_back(wb.ballot);
    return out;
}

inline void check_control_instance(const ControlInstance& inst) {
    validate(inst.election);
    bool ac = inst.family == ControlFamily::AddCandidates ||
              inst.family == ControlFamily::AddCandidatesUnlimited;
    std::set<std::string> orig(inst.original.begin(), inst.original.end());
    std::set<std::string> pool(inst.pool.begin(), inst.pool.end());
    if (orig.size() != inst.original.size()) throw validation_error("duplicate in original set");
    if (pool.size() != inst.pool.size()) throw validation_error("duplicate in candidate pool");
    for (const auto& c : pool)
        if (orig.count(c)) throw validation_error("pool candidate also in original set: " + c);
    std::set<std::string> all(orig);
    all.insert(pool.begin(), pool.end());
    if (!ac && !pool.empty()) throw validation_error("candidate pool only valid for AC/AUC");
    if (std::vector<std::string>(all.begin(), all.end()) != inst.election.candidates)
        throw validation_error("election candidates must equal original ∪ pool");
    if (!orig.count(inst.distinguished))
        throw validation_error("distinguished candidate not in original set: " + inst.distinguished);
    if (inst.family != ControlFamily::AddVoters && !inst.unregistered.empty())
        throw validation_error("unregistered voters only valid for AV");
    for (const auto& wb : inst.unregistered) {
        Election probe(inst.original, {wb});
        validate(probe);
    }
    if (family_uses_budget(inst.family) && inst.budget < 0)
        throw validation_error("negative budget");
}

namespace detail {

inline std::vector<std::string> survivors(const std::vector<std::string>& winner_set,
                                          TieModel tie) {
    if (tie == TieModel::Promote) return winner_set;
    // TE: only a unique winner survives a subelection.
    return winner_set.size() == 1 ? winner_set : std::vector<std::string>{};
}

inline std::vector<std::string> union_sorted(std::vector<std::string> a,
                                             const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

inline std::vector<std::string> winners_of_subset(const Election& e,
                                                  const std::vector<std::string>& subset) {
    if (subset.empty()) return {};
    return winners(restrict_to(e, subset));
}

}  // namespace detail

// Evaluate a control action on an instance: run the subelection(s) with
// ballots restricted to the participating candidates, apply tie-model
// survival, evaluate the final election, and test the goal.  An empty final
// candidate set means p is not a winner.
inline bool apply(const ControlInstance& inst, const ControlAction& act) {
    check_control_instance(inst);
    const std::string& p = inst.distinguished;
    auto finish = [&](const std::vector<std::string>& winner_set) {
        return goal_met(winner_set, p, inst.goal, WinnerModel::Nonunique);
    };
    std::set<std::string> orig(inst.original.begin(), inst.original.end());

    switch (inst.family) {
    case ControlFamily::AddCandidates:
    case ControlFamily::AddCandidatesUnlimited: {
        std::set<std::string> pool(inst.pool.begin(), inst.pool.end());
        std::set<std::string> added(act.added.begin(), act.added.end());
        if (added.size() != act.added.size()) throw validation_error("duplicate added candidate");
        for (const auto& c : added)
            if (!pool.count(c)) throw validation_error("added candidate not in pool: " + c);
        if (inst.family == ControlFamily::AddCandidates &&
            std::int64_t(added.size()) > inst.budget)
            throw validation_error("added set exceeds budget");
        auto final_set = detail::union_sorted(inst.original, act.added);
        return finish(detail::winners_of_subset(inst.election, final_set));
    }
    case ControlFamily::DeleteCandidates: {
        std::set<std::string> deleted(act.deleted.begin(), act.deleted.end());
        if (deleted.size() != act.deleted.size()) throw validation_error("duplicate deleted candidate");
        for (const auto& c : deleted)
            if (!orig.count(c)) throw validation_error("deleted candidate not in election: " + c);
        if (std::int64_t(deleted.size()) > inst.budget)
            throw validation_error("deleted set exceeds budget");
        if (inst.goal == Goal::Destructive && deleted.count(p))
            throw validation_error("distinguished candidate is not deletable");
        std::vector<std::string> remaining;
        for (const auto& c : inst.original)
            if (!deleted.count(c)) remaining.push_back(c);
        return finish(detail::winners_of_subset(inst.election, remaining));
    }
    case ControlFamily::AddVoters: {
        auto w = expand_ballots(inst.unregistered);
        std::set<std::size_t> chosen(act.voters.begin(), act.voters.end());
        if (chosen.size() != act.voters.size()) throw validation_error("duplicate added voter");
        if (std::int64_t(chosen.size()) > inst.budget)
            throw validation_error("added voters exceed budget");
        Election merged = inst.election;
        for (std::size_t idx : chosen) {
            if (idx >= w.size()) throw validation_error("added voter index out of range");
            merged.ballots.push_back(WeightedBallot{1, w[idx]});
        }
        return finish(winners(merged));
    }
    case ControlFamily::DeleteVoters: {
        auto v = expand_ballots(inst.election.ballots);
        std::set<std::size_t> chosen(act.voters.begin(), act.voters.end());
        if (chosen.size() != act.voters.size()) throw validation_error("duplicate deleted voter");
        if (std::int64_t(chosen.size()) > inst.budget)
            throw validation_error("deleted voters exceed budget");
        Election reduced(inst.original);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!chosen.count(i)) reduced.ballots.push_back(WeightedBallot{1, v[i]});
        for (std::size_t idx : chosen)
            if (idx >= v.size()) throw validation_error("deleted voter index out of range");
        return finish(winners(reduced));
    }
    case ControlFamily::PartitionCandidates: {
        std::set<std::string> one(act.first_part.begin(), act.first_part.end());
        if (one.size() != act.first_part.size()) throw validation_error("duplicate in partition");
        for (const auto& c : one)
            if (!orig.count(c)) throw validation_error("partition names unknown candidate: " + c);
        std::vector<std::string> c1(one.begin(), one.end()), c2;
        for (const auto& c : inst.original)
            if (!one.count(c)) c2.push_back(c);
        auto promoted = detail::survivors(detail::winners_of_subset(inst.election, c1), inst.tie);
        auto final_set = detail::union_sorted(promoted, c2);
        return finish(detail::winners_of_subset(inst.election, final_set));
    }
    case ControlFamily::RunoffPartitionCandidates: {
        std::set<std::string> one(act.first_part.begin(), act.first_part.end());
        if (one.size() != act.first_part.size()) throw validation_error("duplicate in partition");
        for (const auto& c : one)
            if (!orig.count(c)) throw validation_error("partition names unknown candidate: " + c);
        std::vector<std::string> c1(one.begin(), one.end()), c2;
        for (const auto& c : inst.original)
            if (!one.count(c)) c2.push_back(c);
        auto d1 = detail::survivors(detail::winners_of_subset(inst.election, c1), inst.tie);
        auto d2 = detail::survivors(detail::winners_of_subset(inst.election, c2), inst.tie);
        return finish(detail::winners_of_subset(inst.election, detail::union_sorted(d1, d2)));
    }
    case ControlFamily::PartitionVoters: {
        auto v = expand_ballots(inst.election.ballots);
        std::set<std::size_t> one(act.voters.begin(), act.voters.end());
        if (one.size() != act.voters.size()) throw validation_error("duplicate in voter partition");
        for (std::size_t idx : one)
            if (idx >= v.size()) throw validation_error("voter index out of range");
        Election e1(inst.original), e2(inst.original);
        for (std::size_t i = 0; i < v.size(); ++i)
            (one.count(i) ? e1 : e2).ballots.push_back(WeightedBallot{1, v[i]});
        auto d1 = detail::survivors(winners(e1), inst.tie);
        auto d2 = detail::survivors(winners(e2), inst.tie);
        // Final election: full voter set over the surviving candidates.
        return finish(detail::winners_of_subset(inst.election, detail::union_sorted(d1, d2)));
    }
    }
    throw validation_error("unknown control family");
}

namespace detail {

// Fast subelection evaluation.  Candidate restriction preserves relative
// ballot order, so the restricted net-advantage matrix is a submatrix of
// the full one; voter selection is additive per ballot.
inline std::vector<std::string> fast_winners(const SquareMatrix& net,
                                             const std::vector<std::string>& subset) {
    if (subset.empty()) return {};
    return winners_from_netadv(submatrix(net, subset));
}

inline SquareMatrix sum_contributions(const SquareMatrix& shape,
                                      const std::vector<SquareMatrix>& contribs,
                                      std::uint64_t mask) {
    SquareMatrix net(shape.names());
    const std::size_t m = net.size();
    for (std::size_t v = 0; v < contribs.size(); ++v) {
        if (!((mask >> v) & 1)) continue;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) net.at(i, j) += contribs[v].at(i, j);
    }
    return net;
}

inline SquareMatrix ballot_net_contribution(const SquareMatrix& shape, const Ballot& b) {
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

}  // namespace detail

// Exact brute-force decider.  Enumerates every admissible action in a
// deterministic order; the first success is replayed through apply() before
// being returned.
inline ControlDecision decide_bruteforce(const ControlInstance& inst,
                                         std::uint64_t max_nodes = kDefaultControlBudget) {
    check_control_instance(inst);
    const std::string& p = inst.distinguished;
    ControlDecision decision;

    auto accept = [&](ControlAction act) {
        if (!apply(inst, act))
            throw std::logic_error("control witness failed replay through apply()");
        decision.possible = true;
        decision.witness = std::move(act);
        return decision;
    };
    auto check_budget = [&](std::uint64_t count) {
        if (count > max_nodes)
            throw budget_exceeded("control enumeration too large: " + std::to_string(count) +
                                  " actions > " + std::to_string(max_nodes));
    };
    auto goal_ok = [&](const std::vector<std::string>& winner_set) {
        return goal_met(winner_set, p, inst.goal, WinnerModel::Nonunique);
    };

    SquareMatrix net = compute_net_advantage(inst.election);

    switch (inst.family) {
    case ControlFamily::AddCandidates:
    case ControlFamily::AddCandidatesUnlimited: {
        const auto& pool = inst.pool;
        if (pool.size() >= 63) throw budget_exceeded("candidate pool too large");
        std::uint64_t total = std::uint64_t(1) << pool.size();
        check_budget(total);
        bool limited = inst.family == ControlFamily::AddCandidates;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if (limited && std::popcount(mask) > inst.budget) continue;
            ++decision.nodes;
            std::vector<std::string> added;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if ((mask >> i) & 1) added.push_back(pool[i]);
            auto final_set = detail::union_sorted(inst.original, added);
            if (goal_ok(detail::fast_winners(net, final_set)))
                return accept(ControlAction{.added = added});
        }
        return decision;
    }
    case ControlFamily::DeleteCandidates: {
        std::vector<std::string> deletable;
        for (const auto& c : inst.original)
            if (c != p) deletable.push_back(c);
        // Count subsets of size <= budget without walking the whole 2^m space.
        const std::size_t m = deletable.size();
        const std::size_t k = std::size_t(std::min<std::int64_t>(inst.budget, std::int64_t(m)));
        std::uint64_t total = 0;
        {
            std::uint64_t binom = 1;  // C(m, i)
            for (std::size_t i = 0; i <= k; ++i) {
                total += binom;
                check_budget(total);
                if (binom > max_nodes * 2) break;  // avoid overflow; already over
                binom = binom * (m - i) / (i + 1);
            }
        }
        std::set<std::string> deleted;
        auto evaluate = [&]() {
            ++decision.nodes;
            std::vector<std::string> remaining;
            for (const auto& c : inst.original)
                if (!deleted.count(c)) remaining.push_back(c);
            return goal_ok(detail::fast_winners(net, remaining));
        };
        auto recurse = [&](auto&& self, std::size_t next) -> bool {
            if (evaluate())
                return true;
            if (deleted.size() == k) return false;
            for (std::size_t i = next; i < m; ++i) {
                deleted.insert(deletable[i]);
                bool hit = self(self, i + 1);
                if (hit) return true;
                deleted.erase(deletable[i]);
            }
            return false;
        };
        if (recurse(recurse, 0))
            return accept(ControlAction{
                .deleted = std::vector<std::string>(deleted.begin(), deleted.end())});
        return decision;
    }
    case ControlFamily::AddVoters: {
        auto w = expand_ballots(inst.unregistered);
        if (w.size() >= 63) throw budget_exceeded("unregistered voter set too large");
        std::vector<SquareMatrix> contribs;
        for (const auto& b : w) contribs.push_back(detail::ballot_net_contribution(net, b));
        std::uint64_t total = std::uint64_t(1) << w.size();
        check_budget(total);
        const std::size_t m = net.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if (std::popcount(mask) > inst.budget) continue;
            ++decision.nodes;
            SquareMatrix merged = net;
            SquareMatrix extra = detail::sum_contributions(net, contribs, mask);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) merged.at(i, j) += extra.at(i, j);
            if (goal_ok(winners_from_netadv(merged))) {
                ControlAction act;
                for (std::size_t i = 0; i < w.size(); ++i)
                    if ((mask >> i) & 1) act.voters.push_back(i);
                return accept(std::move(act));
            }
        }
        return decision;
    }
    case ControlFamily::DeleteVoters: {
        auto v = expand_ballots(inst.election.ballots);
        if (v.size() >= 63) throw budget_exceeded("voter set too large");
        std::vector<SquareMatrix> contribs;
        for (const auto& b : v) contribs.push_back(detail::ballot_net_contribution(net, b));
        std::uint64_t total = std::uint64_t(1) << v.size();
        check_budget(total);
        const std::size_t m = net.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if (std::popcount(mask) > inst.budget) continue;
            ++decision.nodes;
            SquareMatrix reduced = net;
            SquareMatrix removed = detail::sum_contributions(net, contribs, mask);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) reduced.at(i, j) -= removed.at(i, j);
            if (goal_ok(winners_from_netadv(reduced))) {
                ControlAction act;
                for (std::size_t i = 0; i < v.size(); ++i)
                    if ((mask >> i) & 1) act.voters.push_back(i);
                return accept(std::move(act));
            }
        }
        return decision;
    }
    case ControlFamily::PartitionCandidates:
    case ControlFamily::RunoffPartitionCandidates: {
        const auto& cands = inst.original;
        if (cands.size() >= 63) throw budget_exceeded("candidate set too large");
        bool runoff = inst.family == ControlFamily::RunoffPartitionCandidates;
        std::uint64_t total = std::uint64_t(1) << cands.size();
        check_budget(total);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            // RPC is symmetric in its two parts; fix the lexicographically
            // least candidate in C1 to halve the space.  PC is asymmetric
            // (C1 faces the subelection) and enumerates both roles.
            if (runoff && !cands.empty() && !(mask & 1)) continue;
            ++decision.nodes;
            std::vector<std::string> c1, c2;
            for (std::size_t i = 0; i < cands.size(); ++i)
                ((mask >> i) & 1 ? c1 : c2).push_back(cands[i]);
            std::vector<std::string> final_set;
            if (runoff) {
                auto d1 = detail::survivors(detail::fast_winners(net, c1), inst.tie);
                auto d2 = detail::survivors(detail::fast_winners(net, c2), inst.tie);
                final_set = detail::union_sorted(d1, d2);
            } else {
                auto d = detail::survivors(detail::fast_winners(net, c1), inst.tie);
                final_set = detail::union_sorted(d, c2);
            }
            if (goal_ok(detail::fast_winners(net, final_set)))
                return accept(ControlAction{.first_part = c1});
        }
        return decision;
    }
    case ControlFamily::PartitionVoters: {
        auto v = expand_ballots(inst.election.ballots);
        if (v.size() >= 63) throw budget_exceeded("voter set too large");
        std::vector<SquareMatrix> contribs;
        for (const auto& b : v) contribs.push_back(detail::ballot_net_contribution(net, b));
        std::uint64_t total = v.empty() ? 1 : std::uint64_t(1) << v.size();
        check_budget(total);
        const std::size_t m = net.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            // Voter partition is symmetric; fix voter 0 in V1.
            if (!v.empty() && !(mask & 1)) continue;
            ++decision.nodes;
            SquareMatrix n1 = detail::sum_contributions(net, contribs, mask);
            SquareMatrix n2 = net;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) n2.at(i, j) -= n1.at(i, j);
            auto d1 = detail::survivors(winners_from_netadv(n1), inst.tie);
            auto d2 = detail::survivors(winners_from_netadv(n2), inst.tie);
            auto final_set = detail::union_sorted(d1, d2);
            if (goal_ok(detail::fast_winners(net, final_set))) {
                ControlAction act;
                for (std::size_t i = 0; i < v.size(); ++i)
                    if ((mask >> i) & 1) act.voters.push_back(i);
                return accept(std::move(act));
            }
        }
        return decision;
    }
    }
    throw validation_error("unknown control family");
}

}  // namespace schulze
