#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <limits>
#include <random>

#include "schulze/election.hpp"
#include "schulze/mcgarvey.hpp"

using namespace schulze;

namespace {

Election worked_example() {
    Election e{{"a", "b", "c"}};
    e.ballots = {
        {3, Ballot{{"a", "b", "c"}}},
        {3, Ballot{{"b", "c", "a"}}},
        {2, Ballot{{"c", "a", "b"}}},
    };
    return e;
}

// Independent oracle: strongest path by enumerating all simple paths.
std::int64_t oracle_strength(const SquareMatrix& net, std::size_t from, std::size_t to) {
    const std::size_t m = net.size();
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    std::vector<bool> used(m, false);
    std::vector<std::pair<std::size_t, std::int64_t>> stack;  // (vertex, min so far)
    std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t v, std::int64_t low) {
        if (v == to) {
            best = std::max(best, low);
            return;
        }
        used[v] = true;
        for (std::size_t w = 0; w < m; ++w) {
            if (w == v || used[w]) continue;
            dfs(w, std::min(low, net.at(v, w)));
        }
        used[v] = false;
    };
    dfs(from, std::numeric_limits<std::int64_t>::max());
    return best;
}

}  // namespace

TEST_CASE("worked example: net advantages, strengths, winners") {
    Election e = worked_example();
    REQUIRE(e.voter_count() == 8);

    SquareMatrix net = compute_net_advantage(e);
    CHECK(net.get("a", "b") == 2);
    CHECK(net.get("b", "a") == -2);
    CHECK(net.get("b", "c") == 4);
    CHECK(net.get("c", "a") == 2);

    SquareMatrix paths = strongest_paths(net);
    CHECK(paths.get("a", "b") == 2);
    CHECK(paths.get("b", "a") == 2);
    CHECK(paths.get("b", "c") == 4);
    CHECK(paths.get("c", "b") == 2);
    CHECK(paths.get("a", "c") == 2);
    CHECK(paths.get("c", "a") == 2);

    CHECK(winners(e) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("advantage matrix counts voters ranking a above b") {
    Election e = worked_example();
    SquareMatrix adv = compute_advantage(e);
    CHECK(adv.get("a", "b") == 5);
    CHECK(adv.get("b", "a") == 3);
    CHECK(adv.get("b", "c") == 6);
    CHECK(adv.get("c", "b") == 2);
}

TEST_CASE("validation rejects malformed elections") {
    Election dup{{"a", "a"}};
    CHECK_THROWS_AS(validate(dup), validation_error);

    Election e{{"a", "b"}};
    e.ballots.push_back({1, Ballot{{"a"}}});  // incomplete ranking
    CHECK_THROWS_AS(validate(e), validation_error);

    Election e2{{"a", "b"}};
    e2.ballots.push_back({1, Ballot{{"a", "c"}}});
    CHECK_THROWS_AS(validate(e2), validation_error);

    Election e3{{"a", "b"}};
    e3.ballots.push_back({-1, Ballot{{"a", "b"}}});
    CHECK_THROWS_AS(validate(e3), validation_error);

    Election bad_name{{"a", "b c"}};
    CHECK_THROWS_AS(validate(bad_name), validation_error);
}

TEST_CASE("strongest paths match the simple-path oracle on random elections") {
    std::mt19937_64 rng(987654);
    std::uniform_int_distribution<int> msize(2, 5);
    std::uniform_int_distribution<int> unit(-4, 4);
    for (int trial = 0; trial < 500; ++trial) {
        int m = msize(rng);
        std::vector<std::string> names;
        for (int i = 0; i < m; ++i) names.push_back(std::string(1, char('a' + i)));
        SquareMatrix target(names);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                std::int64_t w = 2 * unit(rng);
                target.at(std::size_t(i), std::size_t(j)) = w;
                target.at(std::size_t(j), std::size_t(i)) = -w;
            }
        Election e = synthesize(target);
        SquareMatrix net = compute_net_advantage(e);
        REQUIRE(net == target);
        SquareMatrix paths = strongest_paths(net);
        for (std::size_t i = 0; i < net.size(); ++i)
            for (std::size_t j = 0; j < net.size(); ++j) {
                if (i == j) continue;
                INFO("trial " << trial << " pair " << names[i] << "," << names[j]);
                CHECK(paths.at(i, j) == oracle_strength(net, i, j));
            }
    }
}

TEST_CASE("winner rule and Condorcet checks") {
    Election e = worked_example();
    CHECK_FALSE(is_condorcet_winner(e, "a"));
    CHECK_FALSE(is_weak_condorcet_winner(e, "a"));

    Election cw{{"a", "b", "c"}};
    cw.ballots = {{3, Ballot{{"a", "b", "c"}}}, {1, Ballot{{"b", "c", "a"}}}};
    CHECK(is_condorcet_winner(cw, "a"));
    CHECK(winners(cw) == std::vector<std::string>{"a"});

    // A Condorcet winner is always the unique Schulze winner.
    std::mt19937_64 rng(24680);
    std::uniform_int_distribution<int> unit(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::string> names{"a", "b", "c", "d"};
        SquareMatrix target(names);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                std::int64_t w = 2 * unit(rng);
                target.at(i, j) = w;
                target.at(j, i) = -w;
            }
        Election r = synthesize(target);
        for (const auto& c : names)
            if (is_condorcet_winner(r, c))
                CHECK(winners(r) == std::vector<std::string>{c});
    }
}

TEST_CASE("restriction preserves relative ballot order and submatrix equality") {
    Election e = worked_example();
    Election r = restrict_to(e, {"a", "c"});
    REQUIRE(r.candidates == std::vector<std::string>{"a", "c"});
    SquareMatrix net = compute_net_advantage(e);
    CHECK(compute_net_advantage(r) == submatrix(net, {"a", "c"}));
    CHECK(r.ballots[0].ballot.ranking == std::vector<std::string>{"a", "c"});
    CHECK(r.ballots[1].ballot.ranking == std::vector<std::string>{"c", "a"});
}

TEST_CASE("degenerate elections") {
    Election empty{{}};
    CHECK(winners(empty).empty());

    Election one{{"a"}};
    CHECK(winners(one) == std::vector<std::string>{"a"});

    Election no_votes{{"a", "b"}};
    CHECK(winners(no_votes) == std::vector<std::string>{"a", "b"});
}
