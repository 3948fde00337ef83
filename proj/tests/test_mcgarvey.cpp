#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schulze/mcgarvey.hpp"

using namespace schulze;

TEST_CASE("round-trip: synthesized profiles reproduce the target exactly") {
    std::mt19937_64 rng(13579);
    std::uniform_int_distribution<int> msize(2, 6);
    std::uniform_int_distribution<int> unit(-4, 4);  // weights in [-8, 8], even
    for (int trial = 0; trial < 200; ++trial) {
        int m = msize(rng);
        std::vector<std::string> names;
        for (int i = 0; i < m; ++i) names.push_back(std::string(1, char('a' + i)));
        SquareMatrix target(names);
        std::int64_t abs_sum = 0;
        for (std::size_t i = 0; i < std::size_t(m); ++i)
            for (std::size_t j = i + 1; j < std::size_t(m); ++j) {
                std::int64_t w = 2 * unit(rng);
                target.at(i, j) = w;
                target.at(j, i) = -w;
                abs_sum += std::abs(w);
            }
        Election e = synthesize(target);
        INFO("trial " << trial);
        CHECK(compute_net_advantage(e) == target);
        CHECK(e.voter_count() == abs_sum);
    }
}

TEST_CASE("synthesis input validation") {
    SquareMatrix odd({"a", "b"});
    odd.at(0, 1) = 3;
    odd.at(1, 0) = -3;
    CHECK_THROWS_AS(synthesize(odd), validation_error);

    SquareMatrix skew({"a", "b"});
    skew.at(0, 1) = 2;
    skew.at(1, 0) = 2;  // not skew-symmetric
    CHECK_THROWS_AS(synthesize(skew), validation_error);

    SquareMatrix tiny({"a"});
    CHECK_THROWS_AS(synthesize(tiny), validation_error);
}

TEST_CASE("relation lists: defaults, duplicates, weights") {
    std::vector<std::string> cands{"a", "b", "c"};
    auto m = relations_to_matrix(cands, {{"a", "b", 4}});
    CHECK(m.get("a", "b") == 4);
    CHECK(m.get("b", "a") == -4);
    CHECK(m.get("a", "c") == 0);  // unlisted pairs tie

    CHECK_THROWS_AS(relations_to_matrix(cands, {{"a", "b", 4}, {"b", "a", 2}}),
                    validation_error);
    CHECK_THROWS_AS(relations_to_matrix(cands, {{"a", "b", 3}}), validation_error);
    CHECK_THROWS_AS(relations_to_matrix(cands, {{"a", "b", -2}}), validation_error);
    CHECK_THROWS_AS(relations_to_matrix(cands, {{"a", "a", 2}}), validation_error);

    Election e = synthesize_relations(cands, {{"a", "b", 2}, {"b", "c", 2}, {"c", "a", 2}});
    SquareMatrix net = compute_net_advantage(e);
    CHECK(net.get("a", "b") == 2);
    CHECK(net.get("b", "c") == 2);
    CHECK(net.get("c", "a") == 2);
}

TEST_CASE("the two-ballot gadget touches only its own pair") {
    SquareMatrix target({"a", "b", "c", "d"});
    target.at(target.index_of("b"), target.index_of("d")) = 6;
    target.at(target.index_of("d"), target.index_of("b")) = -6;
    Election e = synthesize(target);
    REQUIRE(e.ballots.size() == 2);
    CHECK(e.voter_count() == 6);
    CHECK(compute_net_advantage(e) == target);
}
