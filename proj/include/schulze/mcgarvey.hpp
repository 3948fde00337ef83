// McGarvey profile synthesis: build a concrete ballot profile whose
// net-advantage matrix equals a prescribed even skew-symmetric target.
#pragma once

#include <string>
#include <vector>

#include "schulze/election.hpp"

namespace schulze {

struct Relation {
    std::string winner;
    std::string loser;
    std::int64_t weight = 2;  // even, positive
};

// For each ordered pair needing +2, one voter ranks a > b > (rest ascending)
// and a second ranks (rest descending) > a > b.  Every pair other than (a,b)
// cancels between the two ballots.
inline Election synthesize(const SquareMatrix& target) {
    require_skew_symmetric(target);
    if (target.size() < 2)
        throw validation_error("McGarvey synthesis needs at least 2 candidates");
    for (std::size_t i = 0; i < target.size(); ++i)
        for (std::size_t j = i + 1; j < target.size(); ++j)
            if (target.at(i, j) % 2 != 0)
                throw validation_error("odd target entry at (" + target.names()[i] +
                                       "," + target.names()[j] + ")");

    Election e(target.names());
    const auto& names = target.names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = 0; j < names.size(); ++j) {
            if (i == j || target.at(i, j) <= 0) continue;
            std::int64_t units = target.at(i, j) / 2;
            std::vector<std::string> rest;
            for (std::size_t r = 0; r < names.size(); ++r)
                if (r != i && r != j) rest.push_back(names[r]);

            WeightedBallot first;
            first.count = units;
            first.ballot.ranking.push_back(names[i]);
            first.ballot.ranking.push_back(names[j]);
            first.ballot.ranking.insert(first.ballot.ranking.end(), rest.begin(), rest.end());

            WeightedBallot second;
            second.count = units;
            second.ballot.ranking.assign(rest.rbegin(), rest.rend());
            second.ballot.ranking.push_back(names[i]);
            second.ballot.ranking.push_back(names[j]);

            e.ballots.push_back(std::move(first));
            e.ballots.push_back(std::move(second));
        }
    }
    validate(e);
    return e;
}

// Relation lists are how the reduction constructions state their gadgets;
// unlisted pairs default to exact ties.
inline SquareMatrix relations_to_matrix(const std::vector<std::string>& candidates,
                                        const std::vector<Relation>& relations) {
    std::vector<std::string> names(candidates);
    std::sort(names.begin(), names.end());
    SquareMatrix target(names);
    std::set<std::pair<std::size_t, std::size_t>> listed;
    for (const auto& rel : relations) {
        std::size_t w = target.index_of(rel.winner);
        std::size_t l = target.index_of(rel.loser);
        if (w == l) throw validation_error("relation pairs candidate with itself: " + rel.winner);
        if (rel.weight <= 0 || rel.weight % 2 != 0)
            throw validation_error("relation weight must be positive and even: " +
                                   rel.winner + " > " + rel.loser);
        auto key = std::minmax(w, l);
        if (!listed.insert({key.first, key.second}).second)
            throw validation_error("pair listed twice: " + rel.winner + " / " + rel.loser);
        target.at(w, l) = rel.weight;
        target.at(l, w) = -rel.weight;
    }
    return target;
}

inline Election synthesize_relations(const std::vector<std::string>& candidates,
                                     const std::vector<Relation>& relations) {
    return synthesize(relations_to_matrix(candidates, relations));
}

}  // namespace schulze
