// Path-preserving vertex cut: delete at most k vertices of a digraph so
// that a t->s path survives while no s->t path does.  Includes the
// exhaustive solver and the Turing reduction from destructive candidate
// control (DC / AC / AUC) via threshold graphs.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "schulze/control.hpp"
#include "schulze/election.hpp"

namespace schulze {

struct PpvcInstance {
    std::vector<std::string> vertices;  // sorted, unique
    std::vector<std::pair<std::string, std::string>> edges;
    std::string source;  // s
    std::string sink;    // t
    std::int64_t budget = 0;
    // When set, only these vertices may be deleted (default: all but s, t).
    std::optional<std::vector<std::string>> deletable;
    // When set, at most this many deletable vertices may be *kept*
    // (the limited-AC mapping: retained pool vertices are added candidates).
    std::optional<std::int64_t> retained_cap;
};

struct PpvcDecision {
    bool possible = false;
    std::vector<std::string> deleted;
    std::uint64_t nodes = 0;
};

inline void check_ppvc_instance(const PpvcInstance& inst) {
    std::set<std::string> verts(inst.vertices.begin(), inst.vertices.end());
    if (verts.size() != inst.vertices.size()) throw validation_error("duplicate vertex");
    if (inst.source == inst.sink) throw validation_error("source and sink must differ");
    if (!verts.count(inst.source)) throw validation_error("source not a vertex: " + inst.source);
    if (!verts.count(inst.sink)) throw validation_error("sink not a vertex: " + inst.sink);
    for (const auto& [u, v] : inst.edges)
        if (!verts.count(u) || !verts.count(v))
            throw validation_error("edge endpoint not a vertex: " + u + " -> " + v);
    if (inst.budget < 0) throw validation_error("negative budget");
    if (inst.deletable)
        for (const auto& c : *inst.deletable) {
            if (!verts.count(c)) throw validation_error("deletable vertex unknown: " + c);
            if (c == inst.source || c == inst.sink)
                throw validation_error("source/sink cannot be deletable");
        }
    if (inst.retained_cap && *inst.retained_cap < 0)
        throw validation_error("negative retained cap");
}

namespace detail {

inline bool reachable(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges,
                      const std::set<std::string>& removed, const std::string& from,
                      const std::string& to) {
    if (removed.count(from) || removed.count(to)) return false;
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [u, v] : edges)
        if (!removed.count(u) && !removed.count(v)) adj[u].push_back(v);
    std::set<std::string> seen{from};
    std::queue<std::string> q;
    q.push(from);
    while (!q.empty()) {
        std::string u = q.front();
        q.pop();
        if (u == to) return true;
        for (const auto& v : adj[u])
            if (seen.insert(v).second) q.push(v);
    }
    return false;
}

}  // namespace detail

// True iff deleting `deleted` leaves a t->s path and no s->t path.
inline bool verify_ppvc_witness(const PpvcInstance& inst,
                                const std::vector<std::string>& deleted) {
    std::set<std::string> removed(deleted.begin(), deleted.end());
    return !detail::reachable(inst.vertices, inst.edges, removed, inst.source, inst.sink) &&
           detail::reachable(inst.vertices, inst.edges, removed, inst.sink, inst.source);
}

inline PpvcDecision ppvc_bruteforce(const PpvcInstance& inst,
                                    std::uint64_t max_nodes = kDefaultControlBudget) {
    check_ppvc_instance(inst);
    std::vector<std::string> deletable;
    if (inst.deletable) {
        deletable = *inst.deletable;
        std::sort(deletable.begin(), deletable.end());
    } else {
        for (const auto& c : inst.vertices)
            if (c != inst.source && c != inst.sink) deletable.push_back(c);
    }
    if (deletable.size() >= 63) throw budget_exceeded("deletable set too large");
    std::uint64_t total = std::uint64_t(1) << deletable.size();
    if (total > max_nodes)
        throw budget_exceeded("PPVC enumeration too large: " + std::to_string(total) +
                              " subsets > " + std::to_string(max_nodes));

    PpvcDecision decision;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        int picked = std::popcount(mask);
        if (picked > inst.budget) continue;
        if (inst.retained_cap &&
            std::int64_t(deletable.size()) - picked > *inst.retained_cap)
            continue;
        ++decision.nodes;
        std::vector<std::string> deleted;
        for (std::size_t i = 0; i < deletable.size(); ++i)
            if ((mask >> i) & 1) deleted.push_back(deletable[i]);
        if (verify_ppvc_witness(inst, deleted)) {
            decision.possible = true;
            decision.deleted = std::move(deleted);
            return decision;
        }
    }
    return decision;
}

// Oracle contract: return the deleted set on yes, nullopt on no.
using PpvcOracle = std::function<std::optional<std::vector<std::string>>(const PpvcInstance&)>;

inline PpvcOracle bruteforce_oracle(std::uint64_t max_nodes = kDefaultControlBudget) {
    return [max_nodes](const PpvcInstance& q) -> std::optional<std::vector<std::string>> {
        PpvcDecision d = ppvc_bruteforce(q, max_nodes);
        if (d.possible) return d.deleted;
        return std::nullopt;
    };
}

struct PpvcReductionResult {
    bool possible = false;
    ControlAction witness;
    std::uint64_t oracle_calls = 0;
};

// Turing reduction: destructive control by deleting or (un-)adding
// candidates reduces to PPVC queries on threshold graphs.  p fails iff for
// some adversary a and threshold tau the surviving candidates admit an a->p
// path over edges of net advantage >= tau while every p->a path over such
// edges is cut.  Only tau strictly above netadv(p,a) can work, since the
// direct p->a edge is never cuttable.
inline PpvcReductionResult dc_candidates_via_ppvc(const ControlInstance& inst,
                                                  const PpvcOracle& oracle) {
    check_control_instance(inst);
    if (inst.goal != Goal::Destructive)
        throw validation_error("PPVC reduction only handles destructive control");
    bool ac = inst.family == ControlFamily::AddCandidates ||
              inst.family == ControlFamily::AddCandidatesUnlimited;
    bool limited = inst.family == ControlFamily::AddCandidates;
    if (!ac && inst.family != ControlFamily::DeleteCandidates)
        throw validation_error("PPVC reduction only handles DC, AC and AUC");

    const std::string& p = inst.distinguished;
    PpvcReductionResult result;
    auto finish = [&](ControlAction act) {
        if (!apply(inst, act))
            throw std::logic_error("PPVC witness failed replay through apply()");
        result.possible = true;
        result.witness = std::move(act);
        return result;
    };

    // Trivial yes: p is already beaten in the baseline election.
    auto baseline = ac ? detail::winners_of_subset(inst.election, inst.original)
                       : winners(inst.election);
    if (std::find(baseline.begin(), baseline.end(), p) == baseline.end())
        return finish(ControlAction{});

    // Trivial no, zero oracle calls: p is a Condorcet winner over every
    // candidate that could ever participate, so p wins every subelection.
    SquareMatrix net = compute_net_advantage(inst.election);
    if (is_condorcet_winner(inst.election, p)) return result;

    std::vector<std::string> all = inst.election.candidates;  // original ∪ pool
    std::set<std::string> pool(inst.pool.begin(), inst.pool.end());

    std::set<std::int64_t, std::greater<>> weights;
    for (std::size_t i = 0; i < net.size(); ++i)
        for (std::size_t j = 0; j < net.size(); ++j)
            if (i != j) weights.insert(net.at(i, j));

    for (const auto& a : all) {
        if (a == p) continue;
        std::int64_t floor = net.get(p, a);
        // Limited AC must still add a itself when a comes from the pool.
        std::int64_t cap = inst.budget - (pool.count(a) ? 1 : 0);
        if (ac && limited && cap < 0) continue;

        for (std::int64_t tau : weights) {
            if (tau <= floor) break;  // descending; direct p->a edge uncuttable below
            PpvcInstance q;
            q.vertices = all;
            q.source = p;
            q.sink = a;
            for (std::size_t i = 0; i < net.size(); ++i)
                for (std::size_t j = 0; j < net.size(); ++j)
                    if (i != j && net.at(i, j) >= tau)
                        q.edges.push_back({net.names()[i], net.names()[j]});
            std::vector<std::string> deletable;
            if (ac) {
                for (const auto& c : inst.pool)
                    if (c != a) deletable.push_back(c);
                q.budget = std::int64_t(deletable.size());
                if (limited) q.retained_cap = cap;
            } else {
                for (const auto& c : inst.original)
                    if (c != p && c != a) deletable.push_back(c);
                q.budget = inst.budget;
            }
            q.deletable = deletable;

            ++result.oracle_calls;
            auto answer = oracle(q);
            if (!answer) continue;

            ControlAction act;
            if (ac) {
                std::set<std::string> removed(answer->begin(), answer->end());
                for (const auto& c : inst.pool)
                    if (!removed.count(c)) act.added.push_back(c);
            } else {
                act.deleted = *answer;
            }
            return finish(std::move(act));
        }
    }
    return result;
}

}  // namespace schulze
