// Polynomial-time deciders for destructive partition-of-candidates control
// (both tie models, shared between PC and RPC), plus the subset
// characterization used as an independent oracle.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schulze/control.hpp"
#include "schulze/election.hpp"

namespace schulze {

struct PartitionDecision {
    bool possible = false;
    std::vector<std::string> first_part;  // {a, p} when possible
};

namespace detail {

inline PartitionDecision dc_partition_check(const Election& e, const std::string& p,
                                            bool allow_tie) {
    SquareMatrix net = compute_net_advantage(e);
    std::size_t pi = net.index_of(p);
    // Lexicographically least qualifying adversary, for a deterministic witness.
    for (std::size_t a = 0; a < net.size(); ++a) {
        if (a == pi) continue;
        std::int64_t margin = net.at(a, pi);
        if (margin > 0 || (allow_tie && margin == 0)) {
            PartitionDecision d;
            d.possible = true;
            d.first_part = {net.names()[a], p};
            std::sort(d.first_part.begin(), d.first_part.end());
            return d;
        }
    }
    return {};
}

}  // namespace detail

// Ties promote: a partition defeating p exists iff some a has
// netadv(a,p) > 0, i.e. iff p is not a weak Condorcet winner.
inline PartitionDecision dc_pc_tp(const Election& e, const std::string& p) {
    return detail::dc_partition_check(e, p, /*allow_tie=*/false);
}

// Ties eliminate: netadv(a,p) >= 0 suffices (a tie already blocks p from
// promotion), so failure means p is a Condorcet winner.
inline PartitionDecision dc_pc_te(const Election& e, const std::string& p) {
    return detail::dc_partition_check(e, p, /*allow_tie=*/true);
}

// Subset characterization, decided by exhaustive enumeration (oracle role):
// TP: some C' containing p where p is not a winner of (C', V);
// TE: some C' containing p where p is not a unique winner of (C', V).
inline bool characterization_subset(const Election& e, const std::string& p, TieModel tie,
                                    std::uint64_t max_subsets = kDefaultControlBudget) {
    SquareMatrix net = compute_net_advantage(e);
    std::size_t pi = net.index_of(p);
    std::vector<std::string> others;
    for (std::size_t i = 0; i < net.size(); ++i)
        if (i != pi) others.push_back(net.names()[i]);
    if (others.size() >= 63) throw budget_exceeded("candidate set too large");
    std::uint64_t total = std::uint64_t(1) << others.size();
    if (total > max_subsets)
        throw budget_exceeded("subset enumeration too large");
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::string> subset{p};
        for (std::size_t i = 0; i < others.size(); ++i)
            if ((mask >> i) & 1) subset.push_back(others[i]);
        auto w = winners_from_netadv(submatrix(net, subset));
        bool unique_win = w.size() == 1 && w.front() == p;
        bool win = std::find(w.begin(), w.end(), p) != w.end();
        if (tie == TieModel::Eliminate ? !unique_win : !win) return true;
    }
    return false;
}

}  // namespace schulze
