// Core election model: ballots, pairwise advantage matrices, Schulze
// best-path strengths and winner extraction.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace schulze {

class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Candidate names are single tokens so they can appear unquoted in the
// election file format and in DOT output.
inline bool valid_candidate_name(const std::string& name) {
    if (name.empty()) return false;
    for (char ch : name) {
        bool ok = (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') ||
                  (ch >= '0' && ch <= '9') || ch == '_' || ch == '+' ||
                  ch == '^' || ch == '\'' || ch == '-';
        if (!ok) return false;
    }
    return true;
}

// Square integer matrix indexed by candidate name.  Used for advantage,
// net-advantage and path-strength tables.  Diagonal is kept at zero.
class SquareMatrix {
public:
    SquareMatrix() = default;

    explicit SquareMatrix(std::vector<std::string> names)
        : names_(std::move(names)), cells_(names_.size() * names_.size(), 0) {
        for (std::size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = i;
        if (index_.size() != names_.size())
            throw validation_error("duplicate candidate name in matrix");
    }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    std::int64_t at(std::size_t i, std::size_t j) const { return cells_[i * size() + j]; }
    std::int64_t& at(std::size_t i, std::size_t j) { return cells_[i * size() + j]; }

    std::size_t index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw validation_error("unknown candidate: " + name);
        return it->second;
    }

    bool has(const std::string& name) const { return index_.count(name) != 0; }

    std::int64_t get(const std::string& a, const std::string& b) const {
        return at(index_of(a), index_of(b));
    }
    void set(const std::string& a, const std::string& b, std::int64_t v) {
        at(index_of(a), index_of(b)) = v;
    }

    bool operator==(const SquareMatrix& o) const {
        return names_ == o.names_ && cells_ == o.cells_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::int64_t> cells_;
    std::map<std::string, std::size_t> index_;
};

struct Ballot {
    std::vector<std::string> ranking;  // most preferred first

    bool operator==(const Ballot& o) const { return ranking == o.ranking; }
    bool operator<(const Ballot& o) const { return ranking < o.ranking; }
};

struct WeightedBallot {
    std::int64_t count = 1;
    Ballot ballot;
};

// An election over a fixed candidate set.  Candidates are kept sorted so
// matrix indices and serialized output are reproducible.
struct Election {
    std::vector<std::string> candidates;
    std::vector<WeightedBallot> ballots;

    Election() = default;
    Election(std::vector<std::string> cands, std::vector<WeightedBallot> votes = {})
        : candidates(std::move(cands)), ballots(std::move(votes)) {
        std::sort(candidates.begin(), candidates.end());
    }

    std::int64_t voter_count() const {
        std::int64_t total = 0;
        for (const auto& wb : ballots) total += wb.count;
        return total;
    }
};

// Voter counts are bounded so that m * |V| sums stay far inside int64 range.
inline constexpr std::int64_t kMaxVoterCount = std::int64_t(1) << 40;

inline void validate(const Election& e) {
    std::set<std::string> seen;
    for (const auto& c : e.candidates) {
        if (!valid_candidate_name(c))
            throw validation_error("invalid candidate name: '" + c + "'");
        if (!seen.insert(c).second)
            throw validation_error("duplicate candidate: " + c);
    }
    if (!std::is_sorted(e.candidates.begin(), e.candidates.end()))
        throw validation_error("candidate list not sorted");
    std::int64_t total = 0;
    for (std::size_t b = 0; b < e.ballots.size(); ++b) {
        const auto& wb = e.ballots[b];
        if (wb.count < 0)
            throw validation_error("ballot " + std::to_string(b) + ": negative count");
        total += wb.count;
        if (total > kMaxVoterCount)
            throw validation_error("voter count overflow");
        if (wb.ballot.ranking.size() != e.candidates.size())
            throw validation_error("ballot " + std::to_string(b) +
                                   ": ranks " + std::to_string(wb.ballot.ranking.size()) +
                                   " of " + std::to_string(e.candidates.size()) + " candidates");
        std::set<std::string> ranked;
        for (const auto& c : wb.ballot.ranking) {
            if (!seen.count(c))
                throw validation_error("ballot " + std::to_string(b) + ": unknown candidate " + c);
            if (!ranked.insert(c).second)
                throw validation_error("ballot " + std::to_string(b) + ": duplicate candidate " + c);
        }
    }
}

// adv(a,b): number of voters ranking a above b.
inline SquareMatrix compute_advantage(const Election& e) {
    validate(e);
    SquareMatrix adv(e.candidates);
    const std::size_t m = adv.size();
    std::vector<std::size_t> pos(m);
    for (const auto& wb : e.ballots) {
        if (wb.count == 0) continue;
        for (std::size_t r = 0; r < wb.ballot.ranking.size(); ++r)
            pos[adv.index_of(wb.ballot.ranking[r])] = r;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j && pos[i] < pos[j]) adv.at(i, j) += wb.count;
    }
    return adv;
}

// netadv(a,b) = adv(a,b) - adv(b,a).  Skew-symmetric.
inline SquareMatrix compute_net_advantage(const Election& e) {
    SquareMatrix adv = compute_advantage(e);
    SquareMatrix net(adv.names());
    const std::size_t m = net.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) net.at(i, j) = adv.at(i, j) - adv.at(j, i);
    return net;
}

inline void require_skew_symmetric(const SquareMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.at(i, i) != 0) throw validation_error("nonzero diagonal entry");
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m.at(i, j) != -m.at(j, i))
                throw validation_error("matrix not skew-symmetric at (" +
                                       m.names()[i] + "," + m.names()[j] + ")");
    }
}

// Best-path strengths under the bottleneck metric: strength(i,j) is the
// maximum over i->j paths of the minimum edge weight along the path.
// Floyd-Warshall style relaxation; the diagonal is never written.
inline SquareMatrix strongest_paths(const SquareMatrix& netadv) {
    require_skew_symmetric(netadv);
    SquareMatrix paths = netadv;
    const std::size_t m = paths.size();
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                std::int64_t via = std::min(paths.at(i, k), paths.at(k, j));
                if (via > paths.at(i, j)) paths.at(i, j) = via;
            }
    return paths;
}

// Winners given precomputed path strengths: candidates with no in-edge in
// the pairwise "stronger path" graph.
inline std::vector<std::string> winners_from_strengths(const SquareMatrix& paths) {
    std::vector<std::string> result;
    const std::size_t m = paths.size();
    for (std::size_t a = 0; a < m; ++a) {
        bool beaten = false;
        for (std::size_t b = 0; b < m && !beaten; ++b)
            if (b != a && paths.at(b, a) > paths.at(a, b)) beaten = true;
        if (!beaten) result.push_back(paths.names()[a]);
    }
    return result;  // lexicographic because matrix names are sorted
}

inline std::vector<std::string> winners_from_netadv(const SquareMatrix& netadv) {
    return winners_from_strengths(strongest_paths(netadv));
}

inline std::vector<std::string> winners(const Election& e) {
    if (e.candidates.empty()) return {};
    return winners_from_netadv(compute_net_advantage(e));
}

inline bool is_condorcet_winner(const Election& e, const std::string& a) {
    SquareMatrix net = compute_net_advantage(e);
    std::size_t i = net.index_of(a);
    for (std::size_t j = 0; j < net.size(); ++j)
        if (j != i && net.at(i, j) <= 0) return false;
    return true;
}

inline bool is_weak_condorcet_winner(const Election& e, const std::string& a) {
    SquareMatrix net = compute_net_advantage(e);
    std::size_t i = net.index_of(a);
    for (std::size_t j = 0; j < net.size(); ++j)
        if (j != i && net.at(i, j) < 0) return false;
    return true;
}

// Ballots restricted to a candidate subset, preserving relative order.
inline Election restrict_to(const Election& e, const std::vector<std::string>& subset) {
    std::set<std::string> keep(subset.begin(), subset.end());
    for (const auto& c : keep)
        if (!std::binary_search(e.candidates.begin(), e.candidates.end(), c))
            throw validation_error("restriction names unknown candidate: " + c);
    Election out(std::vector<std::string>(keep.begin(), keep.end()));
    for (const auto& wb : e.ballots) {
        WeightedBallot nb;
        nb.count = wb.count;
        for (const auto& c : wb.ballot.ranking)
            if (keep.count(c)) nb.ballot.ranking.push_back(c);
        out.ballots.push_back(std::move(nb));
    }
    return out;
}

// Candidate restriction commutes with net-advantage computation, so
// submatrix extraction is the fast path for candidate-control search.
inline SquareMatrix submatrix(const SquareMatrix& m, const std::vector<std::string>& subset) {
    std::vector<std::string> names(subset.begin(), subset.end());
    std::sort(names.begin(), names.end());
    SquareMatrix out(names);
    for (std::size_t i = 0; i < names.size(); ++i) {
        std::size_t oi = m.index_of(names[i]);
        for (std::size_t j = 0; j < names.size(); ++j)
            out.at(i, j) = m.at(oi, m.index_of(names[j]));
    }
    return out;
}

}  // namespace schulze
