#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schulze/control.hpp"
#include "schulze/mcgarvey.hpp"

using namespace schulze;

namespace {

Election paper_example() {
    Election e{{"a", "b", "c"}};
    e.ballots = {
        {3, Ballot{{"a", "b", "c"}}},
        {3, Ballot{{"b", "c", "a"}}},
        {2, Ballot{{"c", "a", "b"}}},
    };
    return e;
}

SquareMatrix random_even_target(std::mt19937_64& rng, const std::vector<std::string>& names,
                                int max_unit) {
    SquareMatrix target(names);
    std::uniform_int_distribution<int> unit(-max_unit, max_unit);
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            std::int64_t w = 2 * unit(rng);
            target.at(i, j) = w;
            target.at(j, i) = -w;
        }
    return target;
}

// Independent oracle: enumerate every admissible action and evaluate it
// through apply() only (no net-advantage shortcuts, no symmetry pruning).
bool naive_control_decide(const ControlInstance& inst) {
    auto try_subsets = [&](std::size_t n, auto make_action) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            ControlAction act = make_action(mask);
            try {
                if (apply(inst, act)) return true;
            } catch (const validation_error&) {
                // inadmissible subset (budget etc.)
            }
        }
        return false;
    };
    switch (inst.family) {
    case ControlFamily::AddCandidates:
    case ControlFamily::AddCandidatesUnlimited:
        return try_subsets(inst.pool.size(), [&](std::uint64_t mask) {
            ControlAction act;
            for (std::size_t i = 0; i < inst.pool.size(); ++i)
                if ((mask >> i) & 1) act.added.push_back(inst.pool[i]);
            return act;
        });
    case ControlFamily::DeleteCandidates:
        return try_subsets(inst.original.size(), [&](std::uint64_t mask) {
            ControlAction act;
            for (std::size_t i = 0; i < inst.original.size(); ++i)
                if ((mask >> i) & 1) act.deleted.push_back(inst.original[i]);
            return act;
        });
    case ControlFamily::AddVoters:
        return try_subsets(expand_ballots(inst.unregistered).size(), [&](std::uint64_t mask) {
            ControlAction act;
            for (std::size_t i = 0; i < 64; ++i)
                if ((mask >> i) & 1) act.voters.push_back(i);
            return act;
        });
    case ControlFamily::DeleteVoters:
    case ControlFamily::PartitionVoters:
        return try_subsets(expand_ballots(inst.election.ballots).size(), [&](std::uint64_t mask) {
            ControlAction act;
            for (std::size_t i = 0; i < 64; ++i)
                if ((mask >> i) & 1) act.voters.push_back(i);
            return act;
        });
    case ControlFamily::PartitionCandidates:
    case ControlFamily::RunoffPartitionCandidates:
        return try_subsets(inst.original.size(), [&](std::uint64_t mask) {
            ControlAction act;
            for (std::size_t i = 0; i < inst.original.size(); ++i)
                if ((mask >> i) & 1) act.first_part.push_back(inst.original[i]);
            return act;
        });
    }
    return false;
}

}  // namespace

TEST_CASE("apply: add candidates") {
    // Among {a,b} alone, b loses to a; adding c restores the paper's {a,b} tie.
    Election full = paper_example();
    ControlInstance inst;
    inst.family = ControlFamily::AddCandidates;
    inst.election = full;
    inst.original = {"a", "b"};
    inst.pool = {"c"};
    inst.budget = 1;
    inst.distinguished = "b";
    inst.goal = Goal::Constructive;
    CHECK_FALSE(apply(inst, ControlAction{}));
    CHECK(apply(inst, ControlAction{.added = {"c"}}));

    inst.budget = 0;
    CHECK_THROWS_AS(apply(inst, ControlAction{.added = {"c"}}), validation_error);
    inst.family = ControlFamily::AddCandidatesUnlimited;
    CHECK(apply(inst, ControlAction{.added = {"c"}}));  // AUC ignores the budget
    CHECK_THROWS_AS(apply(inst, ControlAction{.added = {"z"}}), validation_error);
}

TEST_CASE("apply: delete candidates") {
    ControlInstance inst;
    inst.family = ControlFamily::DeleteCandidates;
    inst.election = paper_example();
    inst.original = inst.election.candidates;
    inst.budget = 1;
    inst.distinguished = "b";
    inst.goal = Goal::Constructive;
    // b ties with a in the full election; deleting a leaves b the winner.
    CHECK(apply(inst, ControlAction{.deleted = {"a"}}));

    inst.goal = Goal::Destructive;
    CHECK_THROWS_AS(apply(inst, ControlAction{.deleted = {"b"}}), validation_error);
    CHECK_THROWS_AS(apply(inst, ControlAction{.deleted = {"a", "c"}}), validation_error);
}

TEST_CASE("apply: voter families") {
    ControlInstance av;
    av.family = ControlFamily::AddVoters;
    av.election = paper_example();
    av.original = av.election.candidates;
    av.unregistered = {{2, Ballot{{"c", "b", "a"}}}};
    av.budget = 2;
    av.distinguished = "c";
    av.goal = Goal::Constructive;
    auto d = decide_bruteforce(av);
    CHECK(d.possible == naive_control_decide(av));

    ControlInstance dv;
    dv.family = ControlFamily::DeleteVoters;
    dv.election = paper_example();
    dv.original = dv.election.candidates;
    dv.budget = 2;
    dv.distinguished = "a";
    dv.goal = Goal::Destructive;
    auto dd = decide_bruteforce(dv);
    CHECK(dd.possible == naive_control_decide(dv));
}

TEST_CASE("partition semantics: TE vs TP") {
    // Subelection {a,b}: a ties b, so TE eliminates both (final {c}, c wins)
    // while TP promotes both (final {a,b,c}, where a and b beat c).
    Election e = synthesize_relations({"a", "b", "c"}, {{"a", "c", 2}, {"b", "c", 2}});
    ControlInstance inst;
    inst.family = ControlFamily::PartitionCandidates;
    inst.election = e;
    inst.original = e.candidates;
    inst.distinguished = "c";
    inst.goal = Goal::Constructive;

    inst.tie = TieModel::Eliminate;
    // C1={a,b} eliminates both on the tie; final election is {c} alone.
    CHECK(apply(inst, ControlAction{.first_part = {"a", "b"}}));
    inst.tie = TieModel::Promote;
    CHECK_FALSE(apply(inst, ControlAction{.first_part = {"a", "b"}}));
}

TEST_CASE("empty final candidate set counts as destructive success") {
    // Two-candidate runoff with a perfect tie: TE eliminates both parts.
    Election e{{"a", "b"}};
    e.ballots = {{1, Ballot{{"a", "b"}}}, {1, Ballot{{"b", "a"}}}};
    ControlInstance inst;
    inst.family = ControlFamily::RunoffPartitionCandidates;
    inst.election = e;
    inst.original = e.candidates;
    inst.tie = TieModel::Eliminate;
    inst.distinguished = "a";
    inst.goal = Goal::Destructive;
    CHECK(apply(inst, ControlAction{.first_part = {"a", "b"}}));
}

TEST_CASE("brute force matches the naive apply-only oracle on random instances") {
    std::mt19937_64 rng(554433);
    std::vector<std::string> names{"a", "b", "c", "d"};
    const ControlFamily families[] = {
        ControlFamily::AddCandidates,     ControlFamily::AddCandidatesUnlimited,
        ControlFamily::DeleteCandidates,  ControlFamily::AddVoters,
        ControlFamily::DeleteVoters,      ControlFamily::PartitionCandidates,
        ControlFamily::RunoffPartitionCandidates, ControlFamily::PartitionVoters,
    };
    std::uniform_int_distribution<int> coin(0, 1);
    int trials = 0;
    for (int round = 0; round < 12; ++round) {
        Election e = synthesize(random_even_target(rng, names, 1));
        for (ControlFamily fam : families) {
            ControlInstance inst;
            inst.family = fam;
            inst.goal = coin(rng) ? Goal::Constructive : Goal::Destructive;
            inst.tie = coin(rng) ? TieModel::Eliminate : TieModel::Promote;
            inst.distinguished = names[std::size_t(round) % names.size()];
            if (fam == ControlFamily::AddCandidates ||
                fam == ControlFamily::AddCandidatesUnlimited) {
                inst.election = e;
                inst.original = {"a", "b"};
                inst.pool = {"c", "d"};
                inst.budget = 1;
                inst.distinguished = coin(rng) ? "a" : "b";
            } else {
                inst.election = e;
                inst.original = names;
                inst.budget = 2;
            }
            if (fam == ControlFamily::AddVoters)
                inst.unregistered = {{1, Ballot{{"d", "c", "b", "a"}}},
                                     {1, Ballot{{"b", "a", "d", "c"}}}};
            INFO("round " << round << " family " << int(fam) << " goal "
                          << (inst.goal == Goal::Constructive ? "c" : "d") << " p "
                          << inst.distinguished);
            auto fast = decide_bruteforce(inst);
            CHECK(fast.possible == naive_control_decide(inst));
            ++trials;
        }
    }
    CHECK(trials == 12 * 8);
}

TEST_CASE("budget exceeded surfaces as an error") {
    std::vector<std::string> names;
    for (int i = 0; i < 8; ++i) names.push_back(std::string(1, char('a' + i)));
    Election e{names};
    ControlInstance inst;
    inst.family = ControlFamily::PartitionCandidates;
    inst.election = e;
    inst.original = names;
    inst.distinguished = "a";
    CHECK_THROWS_AS(decide_bruteforce(inst, 10), budget_exceeded);
}

TEST_CASE("instance validation catches malformed inputs") {
    ControlInstance inst;
    inst.family = ControlFamily::DeleteCandidates;
    inst.election = paper_example();
    inst.original = inst.election.candidates;
    inst.distinguished = "z";
    CHECK_THROWS_AS(check_control_instance(inst), validation_error);

    inst.distinguished = "a";
    inst.pool = {"q"};
    CHECK_THROWS_AS(check_control_instance(inst), validation_error);
    inst.pool.clear();
    inst.budget = -1;
    CHECK_THROWS_AS(check_control_instance(inst), validation_error);
}
