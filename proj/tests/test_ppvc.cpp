#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schulze/mcgarvey.hpp"
#include "schulze/ppvc.hpp"

using namespace schulze;

namespace {

SquareMatrix random_even_target(std::mt19937_64& rng, int m, int max_unit) {
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) names.push_back(std::string(1, char('a' + i)));
    SquareMatrix target(names);
    std::uniform_int_distribution<int> unit(-max_unit, max_unit);
    for (std::size_t i = 0; i < std::size_t(m); ++i)
        for (std::size_t j = i + 1; j < std::size_t(m); ++j) {
            std::int64_t w = 2 * unit(rng);
            target.at(i, j) = w;
            target.at(j, i) = -w;
        }
    return target;
}

}  // namespace

TEST_CASE("ppvc basics") {
    PpvcInstance inst;
    inst.vertices = {"s", "t", "v"};
    inst.edges = {{"s", "v"}, {"v", "t"}, {"t", "s"}};
    inst.source = "s";
    inst.sink = "t";
    inst.budget = 1;
    auto d = ppvc_bruteforce(inst);
    REQUIRE(d.possible);
    CHECK(d.deleted == std::vector<std::string>{"v"});
    CHECK(verify_ppvc_witness(inst, d.deleted));

    // A direct s->t edge can never be cut.
    PpvcInstance direct;
    direct.vertices = {"s", "t", "v"};
    direct.edges = {{"s", "t"}, {"t", "s"}, {"s", "v"}, {"v", "t"}};
    direct.source = "s";
    direct.sink = "t";
    direct.budget = 3;
    CHECK_FALSE(ppvc_bruteforce(direct).possible);
}

TEST_CASE("ppvc validation") {
    PpvcInstance inst;
    inst.vertices = {"s", "t"};
    inst.source = "s";
    inst.sink = "s";
    CHECK_THROWS_AS(ppvc_bruteforce(inst), validation_error);
    inst.sink = "t";
    inst.deletable = std::vector<std::string>{"s"};
    CHECK_THROWS_AS(ppvc_bruteforce(inst), validation_error);
    inst.deletable.reset();
    inst.edges = {{"s", "q"}};
    CHECK_THROWS_AS(ppvc_bruteforce(inst), validation_error);
}

TEST_CASE("ppvc agrees with an independent double enumeration on random digraphs") {
    std::mt19937_64 rng(777);
    std::vector<std::string> verts{"s", "t", "u", "v", "w", "x"};
    std::uniform_int_distribution<int> coin(0, 3);
    for (int trial = 0; trial < 120; ++trial) {
        PpvcInstance inst;
        inst.vertices = verts;
        inst.source = "s";
        inst.sink = "t";
        inst.budget = trial % 3;
        for (const auto& u : verts)
            for (const auto& v : verts)
                if (u != v && coin(rng) == 0) inst.edges.push_back({u, v});

        // Independent check: try every subset of non-terminals directly.
        bool expected = false;
        std::vector<std::string> others{"u", "v", "w", "x"};
        for (std::uint64_t mask = 0; mask < 16 && !expected; ++mask) {
            if (std::popcount(mask) > inst.budget) continue;
            std::vector<std::string> del;
            for (std::size_t i = 0; i < others.size(); ++i)
                if ((mask >> i) & 1) del.push_back(others[i]);
            expected = verify_ppvc_witness(inst, del);
        }
        INFO("trial " << trial);
        auto d = ppvc_bruteforce(inst);
        CHECK(d.possible == expected);
        if (d.possible) CHECK(verify_ppvc_witness(inst, d.deleted));
    }
}

TEST_CASE("retained-pool cap and deletable restriction") {
    PpvcInstance inst;
    inst.vertices = {"s", "t", "u", "v"};
    inst.edges = {{"s", "u"}, {"u", "t"}, {"s", "v"}, {"v", "t"}, {"t", "s"}};
    inst.source = "s";
    inst.sink = "t";
    inst.budget = 2;
    inst.deletable = std::vector<std::string>{"u"};
    CHECK_FALSE(ppvc_bruteforce(inst).possible);  // v's path cannot be cut
    inst.deletable = std::vector<std::string>{"u", "v"};
    CHECK(ppvc_bruteforce(inst).possible);
    inst.retained_cap = 1;  // must delete at least one of {u, v}; still fine
    CHECK(ppvc_bruteforce(inst).possible);
    inst.budget = 1;
    inst.retained_cap = 0;  // keep none, delete both: over budget
    CHECK_FALSE(ppvc_bruteforce(inst).possible);
}

TEST_CASE("dc_candidates_via_ppvc pre-checks") {
    // p beaten already: trivial yes, zero oracle calls.
    Election beaten = synthesize_relations({"a", "b", "p"}, {{"a", "p", 4}, {"a", "b", 2}});
    ControlInstance inst;
    inst.family = ControlFamily::DeleteCandidates;
    inst.goal = Goal::Destructive;
    inst.election = beaten;
    inst.original = beaten.candidates;
    inst.budget = 1;
    inst.distinguished = "p";
    std::uint64_t calls = 0;
    PpvcOracle counting = [&](const PpvcInstance& q) {
        ++calls;
        return bruteforce_oracle()(q);
    };
    auto r = dc_candidates_via_ppvc(inst, counting);
    CHECK(r.possible);
    CHECK(r.oracle_calls == 0);
    CHECK(calls == 0);

    // p a Condorcet winner: no, and still zero oracle calls.
    Election cw = synthesize_relations({"a", "b", "p"}, {{"p", "a", 2}, {"p", "b", 4}});
    inst.election = cw;
    inst.original = cw.candidates;
    auto r2 = dc_candidates_via_ppvc(inst, counting);
    CHECK_FALSE(r2.possible);
    CHECK(r2.oracle_calls == 0);
    CHECK(calls == 0);
}

TEST_CASE("dc_candidates_via_ppvc matches brute-force control on seeded instances") {
    std::mt19937_64 rng(20240202);
    std::uniform_int_distribution<int> msize(3, 6);
    std::uniform_int_distribution<int> ksize(0, 2);
    auto oracle = bruteforce_oracle();
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int m = msize(rng);
        Election e = synthesize(random_even_target(rng, m, 3));

        ControlInstance dc;
        dc.family = ControlFamily::DeleteCandidates;
        dc.goal = Goal::Destructive;
        dc.election = e;
        dc.original = e.candidates;
        dc.budget = ksize(rng);
        dc.distinguished = e.candidates[std::size_t(trial) % e.candidates.size()];
        INFO("trial " << trial << " m " << m << " k " << dc.budget << " p " << dc.distinguished);
        auto via = dc_candidates_via_ppvc(dc, oracle);
        CHECK(via.possible == decide_bruteforce(dc).possible);
        CHECK(via.oracle_calls <= std::uint64_t(m - 1) * (std::uint64_t(m) * m));

        // AC/AUC variants: split candidates into original and pool.
        if (m >= 4) {
            ControlInstance ac;
            ac.goal = Goal::Destructive;
            ac.election = e;
            ac.original.assign(e.candidates.begin(), e.candidates.begin() + 2);
            ac.pool.assign(e.candidates.begin() + 2, e.candidates.end());
            ac.distinguished = ac.original[std::size_t(trial) % 2];
            ac.family = ControlFamily::AddCandidatesUnlimited;
            ac.budget = 0;
            auto via_aucu = dc_candidates_via_ppvc(ac, oracle);
            CHECK(via_aucu.possible == decide_bruteforce(ac).possible);
            ac.family = ControlFamily::AddCandidates;
            ac.budget = ksize(rng);
            auto via_ac = dc_candidates_via_ppvc(ac, oracle);
            CHECK(via_ac.possible == decide_bruteforce(ac).possible);
        }
        ++checked;
    }
    CHECK(checked == 120);
}
