// Shared goal/tie vocabulary for the manipulation and control deciders.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace schulze {

enum class Goal { Constructive, Destructive };
enum class WinnerModel { Nonunique, Unique };
enum class TieModel { Eliminate, Promote };

// Whether the manipulative goal is met by a given winner set.
// Unique-winner "win" means being the sole winner.
inline bool goal_met(const std::vector<std::string>& winner_set, const std::string& p,
                     Goal goal, WinnerModel model = WinnerModel::Nonunique) {
    bool wins;
    if (model == WinnerModel::Unique)
        wins = winner_set.size() == 1 && winner_set.front() == p;
    else
        wins = std::find(winner_set.begin(), winner_set.end(), p) != winner_set.end();
    return goal == Goal::Constructive ? wins : !wins;
}

}  // namespace schulze
