// 3SAT -> control reduction constructions, realized as verified instance
// generators.  Candidate-control gadgets are McGarvey-realized relation
// lists; voter-partition gadgets are explicit ballot lists built from
// per-voter pairwise constraints plus a balanced completion rule.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schulze/cnf.hpp"
#include "schulze/control.hpp"
#include "schulze/mcgarvey.hpp"

namespace schulze {

enum class ReductionKind {
    CcAcLimited,
    CcAcUnlimited,
    CcDc,
    CcPcTe,
    CcPcTp,
    CcPvTe,
    CcPvTp,
    DcPvTe,
    DcPvTp,
};

inline const char* reduction_kind_name(ReductionKind k) {
    switch (k) {
    case ReductionKind::CcAcLimited: return "cc-ac";
    case ReductionKind::CcAcUnlimited: return "cc-acu";
    case ReductionKind::CcDc: return "cc-dc";
    case ReductionKind::CcPcTe: return "cc-pc-te";
    case ReductionKind::CcPcTp: return "cc-pc-tp";
    case ReductionKind::CcPvTe: return "cc-pv-te";
    case ReductionKind::CcPvTp: return "cc-pv-tp";
    case ReductionKind::DcPvTe: return "dc-pv-te";
    case ReductionKind::DcPvTp: return "dc-pv-tp";
    }
    return "?";
}

// Provenance for one generated voter (PV constructions): which bullet group
// it came from, and for assignment voters, which variable/sign it encodes.
struct VoterTag {
    int group = 0;      // 1-based bullet index within the construction
    int variable = 0;   // 1-based; 0 when not an assignment voter
    bool sign = false;  // true = "variable assigned true" voter
    // The stated pairwise constraints this ballot must satisfy (above, below).
    std::vector<std::pair<std::string, std::string>> constraints;
};

struct GeneratedInstance {
    ControlInstance instance;
    std::map<std::string, std::string> roles;  // candidate -> gadget role
    std::vector<VoterTag> voters;              // PV only; parallel to ballots
    ReductionKind kind = ReductionKind::CcAcLimited;
    CnfFormula formula;
};

namespace detail {

inline std::string cand_clause(int j) { return "c" + std::to_string(j); }
inline std::string cand_clause_prime(int j) { return "c" + std::to_string(j) + "'"; }
inline std::string cand_clause_copy(int j, int l) {
    return "c" + std::to_string(j) + "^" + std::to_string(l);
}
inline std::string cand_var(int i) { return "x" + std::to_string(i); }
inline std::string cand_var_plus(int i) { return "x" + std::to_string(i) + "+"; }
inline std::string cand_var_minus(int i) { return "x" + std::to_string(i) + "-"; }
inline std::string cand_var_prime(int i) { return "x" + std::to_string(i) + "'"; }
inline std::string cand_var_dprime(int i) { return "x" + std::to_string(i) + "''"; }
inline std::string cand_guard(int i) { return "a" + std::to_string(i) + "'"; }
inline std::string cand_occurrence(int clause, int pos) {
    return "x" + std::to_string(clause) + "^" + std::to_string(pos);
}
inline std::string cand_negation(int i, int j, int m, int n, int l) {
    return "n_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(m) + "_" +
           std::to_string(n) + "^" + std::to_string(l);
}

inline bool clause_satisfied_by(const std::array<int, 3>& clause, int var, bool sign) {
    int lit = sign ? var : -var;
    return clause[0] == lit || clause[1] == lit || clause[2] == lit;
}

}  // namespace detail

// --- Candidate-control constructions (McGarvey relation lists) -------------

inline GeneratedInstance gen_cc_ac(const CnfFormula& f, bool limited) {
    validate(f);
    using namespace detail;
    const int n = f.variable_count;
    const int K = int(f.clauses.size());

    GeneratedInstance g;
    g.kind = limited ? ReductionKind::CcAcLimited : ReductionKind::CcAcUnlimited;
    g.formula = f;

    std::vector<std::string> original{"p", "a"};
    g.roles["p"] = "distinguished";
    g.roles["a"] = "helper";
    for (int j = 1; j <= K; ++j) {
        original.push_back(cand_clause(j));
        g.roles[cand_clause(j)] = "clause";
    }
    for (int i = 1; i <= n; ++i) {
        original.push_back(cand_var_prime(i));
        original.push_back(cand_var_dprime(i));
        g.roles[cand_var_prime(i)] = "variable";
        g.roles[cand_var_dprime(i)] = "variable";
    }
    std::vector<std::string> pool;
    for (int i = 1; i <= n; ++i) {
        pool.push_back(cand_var_plus(i));
        pool.push_back(cand_var_minus(i));
        g.roles[cand_var_plus(i)] = "literal";
        g.roles[cand_var_minus(i)] = "literal";
    }

    std::vector<Relation> rel;
    for (int j = 1; j <= K; ++j) rel.push_back({cand_clause(j), "p", 2});
    for (int i = 1; i <= n; ++i) {
        rel.push_back({cand_var_prime(i), "p", 2});
        rel.push_back({"p", cand_var_dprime(i), 2});
        rel.push_back({cand_var_plus(i), cand_var_prime(i), 4});
        rel.push_back({cand_var_minus(i), cand_var_prime(i), 4});
        rel.push_back({cand_var_dprime(i), cand_var_minus(i), 4});
        rel.push_back({cand_var_minus(i), cand_var_plus(i), 4});
        rel.push_back({cand_var_plus(i), "p", 4});
        rel.push_back({"a", cand_var_plus(i), 4});
        rel.push_back({"a", cand_var_minus(i), 4});
        for (int j = 1; j <= K; ++j) {
            if (clause_satisfied_by(f.clauses[std::size_t(j - 1)], i, true))
                rel.push_back({cand_var_plus(i), cand_clause(j), 4});
            if (clause_satisfied_by(f.clauses[std::size_t(j - 1)], i, false))
                rel.push_back({cand_var_minus(i), cand_clause(j), 4});
        }
    }
    rel.push_back({"p", "a", 4});

    std::vector<std::string> all(original);
    all.insert(all.end(), pool.begin(), pool.end());

    auto& inst = g.instance;
    inst.family = limited ? ControlFamily::AddCandidates : ControlFamily::AddCandidatesUnlimited;
    inst.goal = Goal::Constructive;
    inst.election = synthesize_relations(all, rel);
    std::sort(original.begin(), original.end());
    std::sort(pool.begin(), pool.end());
    inst.original = original;
    inst.pool = pool;
    inst.budget = std::int64_t(pool.size());  // limited bound equals ||D||
    inst.distinguished = "p";
    check_control_instance(inst);
    return g;
}

inline GeneratedInstance gen_cc_dc(const CnfFormula& f) {
    validate(f);
    using namespace detail;
    const int K = int(f.clauses.size());
    const int k = K;  // deletion limit equals the clause count

    GeneratedInstance g;
    g.kind = ReductionKind::CcDc;
    g.formula = f;

    std::vector<std::string> cands{"p", "a"};
    g.roles["p"] = "distinguished";
    g.roles["a"] = "helper";
    std::vector<Relation> rel;

    for (int i = 1; i <= K; ++i) {
        for (int l = 1; l <= k + 1; ++l) {
            cands.push_back(cand_clause_copy(i, l));
            g.roles[cand_clause_copy(i, l)] = "clause";
            rel.push_back({cand_clause_copy(i, l), cand_occurrence(i, 1), 4});
        }
        for (int j = 1; j <= 3; ++j) {
            cands.push_back(cand_occurrence(i, j));
            g.roles[cand_occurrence(i, j)] = "literal";
        }
        rel.push_back({cand_occurrence(i, 1), cand_occurrence(i, 2), 4});
        rel.push_back({cand_occurrence(i, 2), cand_occurrence(i, 3), 4});
        rel.push_back({cand_occurrence(i, 3), "p", 4});
    }

    // One block of k+1 negation candidates per conflicting occurrence pair.
    for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int m = i; m <= K; ++m)
                for (int n = (m == i ? j + 1 : 1); n <= 3; ++n) {
                    int lit1 = f.clauses[std::size_t(i - 1)][std::size_t(j - 1)];
                    int lit2 = f.clauses[std::size_t(m - 1)][std::size_t(n - 1)];
                    if (lit1 != -lit2) continue;
                    for (int l = 1; l <= k + 1; ++l) {
                        std::string neg = cand_negation(i, j, m, n, l);
                        cands.push_back(neg);
                        g.roles[neg] = "negation";
                        rel.push_back({cand_occurrence(i, j), neg, 4});
                        rel.push_back({cand_occurrence(m, n), neg, 4});
                        rel.push_back({neg, "p", 2});
                    }
                }

    rel.push_back({"p", "a", 4});
    for (int i = 1; i <= K; ++i) {
        for (int j = 1; j <= 3; ++j) rel.push_back({"a", cand_occurrence(i, j), 4});
        // Keep the weight-2 detour through a from reviving a broken chain:
        // a only ties the clause copies' strength-2 alternatives.
        for (int l = 1; l <= k + 1; ++l) rel.push_back({"a", cand_clause_copy(i, l), 2});
    }

    auto& inst = g.instance;
    inst.family = ControlFamily::DeleteCandidates;
    inst.goal = Goal::Constructive;
    inst.election = synthesize_relations(cands, rel);
    inst.original = inst.election.candidates;
    inst.budget = k;
    inst.distinguished = "p";
    check_control_instance(inst);
    return g;
}

// Ties-promote partition gadget.  Every clause candidate and every x'_i
// beats p outright, so all of them must go into the first part and lose
// there.  A clause candidate is beatable in the subelection only through a
// satisfying literal (coverage); x'_i is beatable only through its guard
// a'_i, whose strength-4 in-chain x' -> x- -> x+ -> a' closes exactly when
// both literals of variable i sit in the first part (consistency).
inline GeneratedInstance gen_cc_pc_tp(const CnfFormula& f) {
    validate(f);
    using namespace detail;
    const int n = f.variable_count;
    const int K = int(f.clauses.size());

    GeneratedInstance g;
    g.kind = ReductionKind::CcPcTp;
    g.formula = f;

    std::vector<std::string> cands{"p"};
    g.roles["p"] = "distinguished";
    for (int j = 1; j <= K; ++j) {
        cands.push_back(cand_clause(j));
        g.roles[cand_clause(j)] = "clause";
    }
    for (int i = 1; i <= n; ++i) {
        cands.push_back(cand_var_plus(i));
        cands.push_back(cand_var_minus(i));
        cands.push_back(cand_var_prime(i));
        cands.push_back(cand_guard(i));
        g.roles[cand_var_plus(i)] = "literal";
        g.roles[cand_var_minus(i)] = "literal";
        g.roles[cand_var_prime(i)] = "variable";
        g.roles[cand_guard(i)] = "guard";
    }

    std::vector<Relation> rel;
    for (int j = 1; j <= K; ++j) rel.push_back({cand_clause(j), "p", 4});
    for (int i = 1; i <= n; ++i) {
        rel.push_back({cand_var_prime(i), "p", 4});
        rel.push_back({"p", cand_var_plus(i), 2});
        rel.push_back({"p", cand_var_minus(i), 2});
        rel.push_back({"p", cand_guard(i), 2});
        rel.push_back({cand_guard(i), cand_var_prime(i), 4});
        rel.push_back({cand_var_prime(i), cand_var_minus(i), 4});
        rel.push_back({cand_var_minus(i), cand_var_plus(i), 4});
        rel.push_back({cand_var_plus(i), cand_guard(i), 4});
        for (int j = 1; j <= K; ++j) {
            if (clause_satisfied_by(f.clauses[std::size_t(j - 1)], i, true))
                rel.push_back({cand_var_plus(i), cand_clause(j), 6});
            if (clause_satisfied_by(f.clauses[std::size_t(j - 1)], i, false))
                rel.push_back({cand_var_minus(i), cand_clause(j), 6});
        }
    }

    auto& inst = g.instance;
    inst.family = ControlFamily::PartitionCandidates;
    inst.goal = Goal::Constructive;
    inst.tie = TieModel::Promote;
    inst.election = synthesize_relations(cands, rel);
    inst.original = inst.election.candidates;
    inst.distinguished = "p";
    check_control_instance(inst);
    return g;
}

// Ties-eliminate partition gadget.  A tied subelection wipes out the whole
// first part under ties-eliminate, so the construction pins a spine
// candidate s that wins every subelection it joins outright; the game then
// reduces to choosing which candidates accompany p into the final round.
// The distinguished candidate survives the spine's standing threat exactly
// when the second part holds a consistent covering set of literals.
inline GeneratedInstance gen_cc_pc_te(const CnfFormula& f) {
    validate(f);
    using namespace detail;
    const int n = f.variable_count;
    const int K = int(f.clauses.size());

    GeneratedInstance g;
    g.kind = ReductionKind::CcPcTe;
    g.formula = f;

    std::vector<std::string> cands{"p", "s"};
    g.roles["p"] = "distinguished";
    g.roles["s"] = "spine";
    for (int j = 1; j <= K; ++j) {
        cands.push_back(cand_clause(j));
        g.roles[cand_clause(j)] = "clause";
    }
    for (int i = 1; i <= n; ++i) {
        cands.push_back(cand_var_plus(i));
        cands.push_back(cand_var_minus(i));
        g.roles[cand_var_plus(i)] = "literal";
        g.roles[cand_var_minus(i)] = "literal";
    }

    std::vector<Relation> rel;
    rel.push_back({"s", "p", 6});
    for (int j = 1; j <= K; ++j) rel.push_back({"s", cand_clause(j), 8});
    for (int i = 1; i <= n; ++i) {
        rel.push_back({"s", cand_var_plus(i), 8});
        rel.push_back({"s", cand_var_minus(i), 8});
        rel.push_back({"p", cand_var_plus(i), 10});
        rel.push_back({"p", cand_var_minus(i), 10});
        for (int j = 1; j <= K; ++j) {
            if (clause_satisfied_by(f.clauses[std::size_t(j - 1)], i, true))
                rel.push_back({cand_var_plus(i), cand_clause(j), 6});
            if (clause_satisfied_by(f.clauses[std::size_t(j - 1)], i, false))
                rel.push_back({cand_var_minus(i), cand_clause(j), 6});
        }
    }

    auto& inst = g.instance;
    inst.family = ControlFamily::PartitionCandidates;
    inst.goal = Goal::Constructive;
    inst.tie = TieModel::Eliminate;
    inst.election = synthesize_relations(cands, rel);
    inst.original = inst.election.candidates;
    inst.distinguished = "p";
    check_control_instance(inst);
    return g;
}

// --- Voter-partition constructions (explicit ballots) -----------------------

namespace detail {

// A ballot is assembled from ordered tiers around a fixed spine.  Each tier
// holds units (runs with fixed internal order, e.g. a constrained c'/c
// pair).  The balanced completion rule permutes units within a tier:
// ascending order for even voters of a group, descending for odd, so paired
// voters cancel on unconstrained pairs.
struct BallotPlan {
    std::vector<std::string> spine;                           // e.g. {p} or {a,p,b}
    std::vector<std::vector<std::vector<std::string>>> above; // tiers of units
    std::vector<std::vector<std::vector<std::string>>> below;
};

inline std::vector<std::string> flatten_tiers(
    std::vector<std::vector<std::vector<std::string>>> tiers, bool ascending) {
    std::vector<std::string> out;
    for (auto& tier : tiers) {
        std::sort(tier.begin(), tier.end(),
                  [&](const auto& u, const auto& v) { return ascending ? u < v : u > v; });
        for (const auto& unit : tier)
            out.insert(out.end(), unit.begin(), unit.end());
    }
    return out;
}

inline Ballot assemble(const BallotPlan& plan, bool ascending) {
    Ballot b;
    auto top = flatten_tiers(plan.above, ascending);
    auto bottom = flatten_tiers(plan.below, ascending);
    b.ranking = top;
    b.ranking.insert(b.ranking.end(), plan.spine.begin(), plan.spine.end());
    b.ranking.insert(b.ranking.end(), bottom.begin(), bottom.end());
    return b;
}

inline void constrain_chain(VoterTag& tag, const std::vector<std::string>& above,
                            const std::vector<std::string>& below) {
    for (const auto& hi : above)
        for (const auto& lo : below) tag.constraints.push_back({hi, lo});
}

}  // namespace detail

inline GeneratedInstance gen_cc_pv(const CnfFormula& f, TieModel tie) {
    validate(f);
    using namespace detail;
    const int n = f.variable_count;
    const int K = int(f.clauses.size());
    const bool te = tie == TieModel::Eliminate;
    if (te && n < 3)
        throw validation_error("cc-pv-te construction needs at least 3 variables "
                               "(it uses a group of ||U|| - 3 voters)");

    GeneratedInstance g;
    g.kind = te ? ReductionKind::CcPvTe : ReductionKind::CcPvTp;
    g.formula = f;

    std::vector<std::string> cands{"p", "a"};
    g.roles["p"] = "distinguished";
    g.roles["a"] = "helper";
    std::vector<std::string> clause_cands, var_cands;
    for (int j = 1; j <= K; ++j) {
        clause_cands.push_back(cand_clause(j));
        g.roles[cand_clause(j)] = "clause";
    }
    for (int i = 1; i <= n; ++i) {
        var_cands.push_back(cand_var(i));
        g.roles[cand_var(i)] = "variable";
    }
    cands.insert(cands.end(), clause_cands.begin(), clause_cands.end());
    cands.insert(cands.end(), var_cands.begin(), var_cands.end());

    Election e{cands};
    std::vector<VoterTag> tags;
    auto singleton_units = [](const std::vector<std::string>& names) {
        std::vector<std::vector<std::string>> units;
        for (const auto& c : names) units.push_back({c});
        return units;
    };

    // Groups 1 and 2: one assignment voter per variable per sign.
    for (int group = 1; group <= 2; ++group) {
        bool sign = group == 1;
        for (int i = 1; i <= n; ++i) {
            VoterTag tag{group, i, sign, {}};
            std::vector<std::string> sat, unsat;
            for (int j = 1; j <= K; ++j)
                (clause_satisfied_by(f.clauses[std::size_t(j - 1)], i, sign) ? sat : unsat)
                    .push_back(cand_clause(j));
            std::vector<std::string> other_vars;
            for (int v = 1; v <= n; ++v)
                if (v != i) other_vars.push_back(cand_var(v));

            BallotPlan plan;
            plan.spine = {"p"};
            plan.above = {singleton_units(unsat)};
            plan.above.push_back({{cand_var(i)}});
            plan.below = {singleton_units(sat)};
            plan.below.push_back(singleton_units(other_vars));
            plan.below.push_back({{"a"}});

            constrain_chain(tag, {cand_var(i)}, {"p"});
            constrain_chain(tag, unsat, {"p"});
            constrain_chain(tag, {"p"}, sat);
            constrain_chain(tag, {"p"}, other_vars);
            constrain_chain(tag, {"p"}, {"a"});

            e.ballots.push_back(WeightedBallot{1, assemble(plan, (i - 1) % 2 == 0)});
            tags.push_back(std::move(tag));
        }
    }

    auto push_group = [&](int group, int copies, const std::vector<std::string>& above_p,
                          const std::vector<std::string>& below_p,
                          const std::vector<std::vector<std::string>>& above_tiers,
                          const std::vector<std::vector<std::string>>& below_tiers) {
        for (int t = 0; t < copies; ++t) {
            VoterTag tag{group, 0, false, {}};
            constrain_chain(tag, above_p, {"p"});
            constrain_chain(tag, {"p"}, below_p);
            BallotPlan plan;
            plan.spine = {"p"};
            for (const auto& tier : above_tiers) plan.above.push_back(singleton_units(tier));
            for (const auto& tier : below_tiers) plan.below.push_back(singleton_units(tier));
            e.ballots.push_back(WeightedBallot{1, assemble(plan, t % 2 == 0)});
            tags.push_back(std::move(tag));
        }
    };

    std::vector<std::string> vars_and_a(var_cands);
    vars_and_a.push_back("a");
    std::vector<std::string> clauses_and_a(clause_cands);
    clauses_and_a.push_back("a");

    if (te) {
        push_group(3, n - 3, vars_and_a, clause_cands, {vars_and_a}, {clause_cands});
        push_group(4, 1, var_cands, clauses_and_a, {var_cands}, {clause_cands, {"a"}});
        std::vector<std::string> everyone_else(clause_cands);
        everyone_else.insert(everyone_else.end(), var_cands.begin(), var_cands.end());
        push_group(5, 2, {"a"}, everyone_else, {{"a"}}, {clause_cands, var_cands});
    } else {
        push_group(3, n - 1, vars_and_a, clause_cands, {vars_and_a}, {clause_cands});
        push_group(4, 1, vars_and_a, clause_cands, {{"a"}, var_cands}, {clause_cands});
        // Group 5: the full chain a > variables > clauses > p.
        for (int t = 0; t < n + 2; ++t) {
            VoterTag tag{5, 0, false, {}};
            constrain_chain(tag, {"a"}, var_cands);
            constrain_chain(tag, var_cands, clause_cands);
            constrain_chain(tag, clause_cands, {"p"});
            constrain_chain(tag, {"a"}, {"p"});
            constrain_chain(tag, {"a"}, clause_cands);
            constrain_chain(tag, var_cands, {"p"});
            BallotPlan plan;
            plan.spine = {"p"};
            plan.above = {{{"a"}}, singleton_units(var_cands), singleton_units(clause_cands)};
            e.ballots.push_back(WeightedBallot{1, assemble(plan, t % 2 == 0)});
            tags.push_back(std::move(tag));
        }
    }

    auto& inst = g.instance;
    inst.family = ControlFamily::PartitionVoters;
    inst.goal = Goal::Constructive;
    inst.tie = tie;
    inst.election = std::move(e);
    inst.original = inst.election.candidates;
    inst.distinguished = "p";
    g.voters = std::move(tags);
    check_control_instance(inst);
    return g;
}

inline GeneratedInstance gen_cc_pv_te(const CnfFormula& f) { return gen_cc_pv(f, TieModel::Eliminate); }
inline GeneratedInstance gen_cc_pv_tp(const CnfFormula& f) { return gen_cc_pv(f, TieModel::Promote); }

inline GeneratedInstance gen_dc_pv(const CnfFormula& f, TieModel tie) {
    validate(f);
    using namespace detail;
    const int n = f.variable_count;
    const int K = int(f.clauses.size());
    const bool te = tie == TieModel::Eliminate;
    if (te && n < 2)
        throw validation_error("dc-pv-te construction needs at least 2 variables "
                               "(it uses groups of 2||U|| - 2 voters)");

    GeneratedInstance g;
    g.kind = te ? ReductionKind::DcPvTe : ReductionKind::DcPvTp;
    g.formula = f;

    std::vector<std::string> cands{"p", "a", "b"};
    g.roles["p"] = "distinguished";
    g.roles["a"] = "adversary";
    g.roles["b"] = "adversary";
    std::vector<std::string> clause_all, var_all, cprimes;
    for (int j = 1; j <= K; ++j) {
        clause_all.push_back(cand_clause(j));
        clause_all.push_back(cand_clause_prime(j));
        cprimes.push_back(cand_clause_prime(j));
        g.roles[cand_clause(j)] = "clause";
        g.roles[cand_clause_prime(j)] = "clause";
    }
    for (int i = 1; i <= n; ++i) {
        var_all.push_back(cand_var(i));
        var_all.push_back(cand_var_prime(i));
        g.roles[cand_var(i)] = "variable";
        g.roles[cand_var_prime(i)] = "variable";
    }
    cands.insert(cands.end(), clause_all.begin(), clause_all.end());
    cands.insert(cands.end(), var_all.begin(), var_all.end());

    Election e{cands};
    std::vector<VoterTag> tags;

    // Groups 1 and 2: assignment voters.
    for (int group = 1; group <= 2; ++group) {
        bool sign = group == 1;
        for (int i = 1; i <= n; ++i) {
            VoterTag tag{group, i, sign, {}};
            std::vector<std::vector<std::string>> sat_pairs, unsat_pairs, other_var_pairs;
            for (int j = 1; j <= K; ++j) {
                bool sat = clause_satisfied_by(f.clauses[std::size_t(j - 1)], i, sign);
                if (sat) {
                    sat_pairs.push_back({cand_clause_prime(j), cand_clause(j)});
                    tag.constraints.push_back({cand_clause_prime(j), cand_clause(j)});
                } else {
                    unsat_pairs.push_back({cand_clause(j), cand_clause_prime(j)});
                    tag.constraints.push_back({cand_clause(j), cand_clause_prime(j)});
                }
            }
            tag.constraints.push_back({cand_var_prime(i), cand_var(i)});
            for (int v = 1; v <= n; ++v)
                if (v != i) {
                    other_var_pairs.push_back({cand_var(v), cand_var_prime(v)});
                    tag.constraints.push_back({cand_var(v), cand_var_prime(v)});
                }
            constrain_chain(tag, {"p"}, {"a", "b"});
            constrain_chain(tag, clause_all, {"a"});
            constrain_chain(tag, var_all, {"b"});

            BallotPlan plan;
            plan.spine = {"p"};
            plan.above = {unsat_pairs, {{cand_var_prime(i), cand_var(i)}}};
            plan.below = {sat_pairs, other_var_pairs};
            bool asc = (i - 1) % 2 == 0;
            Ballot b = assemble(plan, asc);
            // a and b trail everything; alternate their order.
            b.ranking.push_back(asc ? "a" : "b");
            b.ranking.push_back(asc ? "b" : "a");
            e.ballots.push_back(WeightedBallot{1, std::move(b)});
            tags.push_back(std::move(tag));
        }
    }

    // Groups 3 and 4: spine voters with the remaining candidates balanced
    // around the spine; the c' block is rotated cyclically so the c'
    // candidates develop strong paths to each other.
    const int spine_copies = te ? 2 * n - 2 : 2 * n;
    auto push_spine_group = [&](int group, const std::string& top, const std::string& bottom) {
        std::vector<std::string> rest;  // everything except spine and c'
        for (const auto& c : cands)
            if (c != top && c != bottom && c != "p" &&
                std::find(cprimes.begin(), cprimes.end(), c) == cprimes.end())
                rest.push_back(c);
        for (int t = 0; t < spine_copies; ++t) {
            VoterTag tag{group, 0, false, {}};
            tag.constraints.push_back({top, "p"});
            tag.constraints.push_back({"p", bottom});
            std::vector<std::string> cp(cprimes);
            std::rotate(cp.begin(), cp.begin() + (K > 0 ? t % K : 0), cp.end());
            std::vector<std::string> others;
            bool asc = t % 2 == 0;
            std::vector<std::string> rest_sorted(rest);
            std::sort(rest_sorted.begin(), rest_sorted.end());
            if (!asc) std::reverse(rest_sorted.begin(), rest_sorted.end());
            if (asc) {
                others = cp;
                others.insert(others.end(), rest_sorted.begin(), rest_sorted.end());
            } else {
                others = rest_sorted;
                others.insert(others.end(), cp.begin(), cp.end());
            }
            Ballot b;
            if (asc) b.ranking = others;
            b.ranking.push_back(top);
            b.ranking.push_back("p");
            b.ranking.push_back(bottom);
            if (!asc) b.ranking.insert(b.ranking.end(), others.begin(), others.end());
            e.ballots.push_back(WeightedBallot{1, std::move(b)});
            tags.push_back(std::move(tag));
        }
    };
    push_spine_group(3, "a", "b");
    push_spine_group(4, "b", "a");

    auto& inst = g.instance;
    inst.family = ControlFamily::PartitionVoters;
    inst.goal = Goal::Destructive;
    inst.tie = tie;
    inst.election = std::move(e);
    inst.original = inst.election.candidates;
    inst.distinguished = "p";
    g.voters = std::move(tags);
    check_control_instance(inst);
    return g;
}

inline GeneratedInstance gen_dc_pv_te(const CnfFormula& f) { return gen_dc_pv(f, TieModel::Eliminate); }
inline GeneratedInstance gen_dc_pv_tp(const CnfFormula& f) { return gen_dc_pv(f, TieModel::Promote); }

inline GeneratedInstance generate(const CnfFormula& f, ReductionKind kind) {
    switch (kind) {
    case ReductionKind::CcAcLimited: return gen_cc_ac(f, true);
    case ReductionKind::CcAcUnlimited: return gen_cc_ac(f, false);
    case ReductionKind::CcDc: return gen_cc_dc(f);
    case ReductionKind::CcPcTe: return gen_cc_pc_te(f);
    case ReductionKind::CcPcTp: return gen_cc_pc_tp(f);
    case ReductionKind::CcPvTe: return gen_cc_pv_te(f);
    case ReductionKind::CcPvTp: return gen_cc_pv_tp(f);
    case ReductionKind::DcPvTe: return gen_dc_pv_te(f);
    case ReductionKind::DcPvTp: return gen_dc_pv_tp(f);
    }
    throw validation_error("unknown reduction kind");
}

// The control action each proof builds from a satisfying assignment.
// assignment[i] is the value of variable i+1.
inline ControlAction recipe_action(const GeneratedInstance& g,
                                   const std::vector<bool>& assignment) {
    using namespace detail;
    const CnfFormula& f = g.formula;
    if (int(assignment.size()) != f.variable_count)
        throw validation_error("assignment size mismatch");
    ControlAction act;
    auto chosen_literal = [&](int i) {
        return assignment[std::size_t(i - 1)] ? cand_var_plus(i) : cand_var_minus(i);
    };

    switch (g.kind) {
    case ReductionKind::CcAcLimited:
    case ReductionKind::CcAcUnlimited:
        for (int i = 1; i <= f.variable_count; ++i) act.added.push_back(chosen_literal(i));
        return act;
    case ReductionKind::CcDc:
        // Delete one satisfied literal occurrence per clause.  All deleted
        // literals are true under the assignment, so no conflicting pair of
        // occurrences is ever deleted together.
        for (int i = 1; i <= int(f.clauses.size()); ++i) {
            for (int j = 1; j <= 3; ++j) {
                int lit = f.clauses[std::size_t(i - 1)][std::size_t(j - 1)];
                bool value = assignment[std::size_t(std::abs(lit) - 1)];
                if ((lit > 0) == value) {
                    act.deleted.push_back(cand_occurrence(i, j));
                    break;
                }
            }
        }
        return act;
    case ReductionKind::CcPcTe: {
        // C1 = everything except p and the chosen literal candidates; the
        // spine sweeps the first part and meets p and the assignment in the
        // final round.
        std::set<std::string> excluded{"p"};
        for (int i = 1; i <= f.variable_count; ++i) excluded.insert(chosen_literal(i));
        for (const auto& c : g.instance.original)
            if (!excluded.count(c)) act.first_part.push_back(c);
        return act;
    }
    case ReductionKind::CcPcTp: {
        // C1 = every candidate that beats p outright (clauses, x') plus the
        // guards and the chosen literals, which beat them there.
        for (int i = 1; i <= f.variable_count; ++i) {
            act.first_part.push_back(chosen_literal(i));
            act.first_part.push_back(cand_var_prime(i));
            act.first_part.push_back(cand_guard(i));
        }
        for (int j = 1; j <= int(f.clauses.size()); ++j)
            act.first_part.push_back(cand_clause(j));
        std::sort(act.first_part.begin(), act.first_part.end());
        return act;
    }
    case ReductionKind::CcPvTe:
    case ReductionKind::CcPvTp:
    case ReductionKind::DcPvTe:
    case ReductionKind::DcPvTp: {
        // V1 = assignment voters matching the satisfying assignment plus the
        // construction's designated support groups.
        std::set<int> v1_groups;
        if (g.kind == ReductionKind::CcPvTe) v1_groups = {3, 4, 5};
        else if (g.kind == ReductionKind::CcPvTp) v1_groups = {3, 4};
        else v1_groups = {3};
        for (std::size_t idx = 0; idx < g.voters.size(); ++idx) {
            const VoterTag& tag = g.voters[idx];
            bool chosen = false;
            if (tag.variable > 0)
                chosen = assignment[std::size_t(tag.variable - 1)] == tag.sign;
            else
                chosen = v1_groups.count(tag.group) != 0;
            if (chosen) act.voters.push_back(idx);
        }
        return act;
    }
    }
    throw validation_error("unknown reduction kind");
}

struct VerifyOptions {
    // For the PC constructions, solve as PC or as RPC (each serves both).
    std::optional<ControlFamily> solve_family;
    std::uint64_t control_budget = kDefaultControlBudget;
    int sat_max_vars = 20;
};

struct VerifyReport {
    enum class Check { Ok, Failed, Skipped };
    bool satisfiable = false;
    Check forward = Check::Skipped;
    Check backward = Check::Skipped;
    std::string details;
};

// Machine-check both directions of a reduction at desk scale: the proof
// recipe must succeed for a satisfying assignment (forward), and exhaustive
// control search must agree with satisfiability (backward).
inline VerifyReport verify_reduction(const CnfFormula& f, ReductionKind kind,
                                     VerifyOptions opts = {}) {
    VerifyReport report;
    GeneratedInstance g = generate(f, kind);
    ControlInstance inst = g.instance;
    if (opts.solve_family) {
        if (inst.family != ControlFamily::PartitionCandidates &&
            *opts.solve_family != inst.family)
            throw validation_error("solve-family override only applies to PC constructions");
        inst.family = *opts.solve_family;
    }

    auto assignment = solve_sat(f, opts.sat_max_vars);
    report.satisfiable = assignment.has_value();

    if (assignment) {
        ControlAction recipe = recipe_action(g, *assignment);
        bool ok = apply(inst, recipe);
        report.forward = ok ? VerifyReport::Check::Ok : VerifyReport::Check::Failed;
        if (!ok) report.details += "proof-recipe action failed to achieve the goal; ";
    } else {
        report.details += "unsatisfiable formula, forward direction vacuous; ";
    }

    try {
        ControlDecision decision = decide_bruteforce(inst, opts.control_budget);
        bool ok = decision.possible == report.satisfiable;
        report.backward = ok ? VerifyReport::Check::Ok : VerifyReport::Check::Failed;
        if (!ok) {
            report.details += std::string("brute-force control decision (") +
                              (decision.possible ? "yes" : "no") +
                              ") disagrees with satisfiability; ";
            if (inst.family == ControlFamily::PartitionVoters)
                report.details +=
                    "first suspect: the balanced-completion rule for unconstrained "
                    "ballot positions, not the construction itself; ";
        }
    } catch (const budget_exceeded&) {
        report.backward = VerifyReport::Check::Skipped;
        report.details += "backward check skipped: enumeration over budget; ";
    }
    return report;
}

}  // namespace schulze
