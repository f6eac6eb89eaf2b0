#include "doctest.h"

#include "shadowbound/set_family.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace shadowbound;

TEST_CASE("edges are stored canonically regardless of insertion order") {
    SetFamily f(5, 3);
    f.add_edge({2, 0, 1});
    f.add_edge({3, 1, 0});
    CHECK(f.size() == 2);
    CHECK(f.contains({1, 0, 2}));
    CHECK(f.contains({0, 1, 3}));
    CHECK_FALSE(f.contains({0, 2, 3}));
    CHECK(f.edge(0) == std::vector<int>{0, 1, 2});
    CHECK(f.edge(1) == std::vector<int>{0, 1, 3});
    CHECK(f == SetFamily::from_edges(5, 3, {{0, 1, 3}, {0, 1, 2}}));
}

TEST_CASE("adding an edge twice is idempotent") {
    SetFamily f(4, 2);
    f.add_edge({0, 1});
    f.add_edge({1, 0});
    CHECK(f.size() == 1);
}

TEST_CASE("add_edge validates size, range, and repeats") {
    SetFamily f(4, 3);
    CHECK_THROWS_AS(f.add_edge({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(f.add_edge({0, 1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(f.add_edge({0, 1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(f.add_edge({0, 1, 1}), std::invalid_argument);
    CHECK(f.size() == 0);
}

TEST_CASE("constructor validates n and k") {
    CHECK_THROWS_AS(SetFamily(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(SetFamily(5, 0), std::invalid_argument);
}

TEST_CASE("complete family sizes") {
    CHECK(complete_family(5, 3).size() == 10);
    CHECK(complete_family(4, 2).size() == 6);
    CHECK(complete_family(3, 3).size() == 1);
}

TEST_CASE("shadow of a small 3-uniform family") {
    const SetFamily f = SetFamily::from_edges(4, 3, {{0, 1, 2}, {0, 1, 3}});
    const SetFamily s = shadow(f);
    CHECK(s.k() == 2);
    CHECK(s.size() == 5);
    CHECK(s.contains({0, 1}));
    CHECK(s.contains({0, 2}));
    CHECK(s.contains({1, 2}));
    CHECK(s.contains({0, 3}));
    CHECK(s.contains({1, 3}));
    CHECK_FALSE(s.contains({2, 3}));
}

TEST_CASE("shadow of the complete 3-uniform family is the complete graph") {
    CHECK(shadow(complete_family(5, 3)) == complete_family(5, 2));
    CHECK(shadow(complete_family(6, 3)).size() == 15);
}

TEST_CASE("shadow requires k >= 2") {
    CHECK_THROWS_AS(shadow(SetFamily(4, 1)), std::invalid_argument);
}

TEST_CASE("link and degree on a small family") {
    const SetFamily f = SetFamily::from_edges(4, 3, {{0, 1, 2}, {0, 1, 3}, {1, 2, 3}});
    const SetFamily l0 = link(f, 0);
    CHECK(l0.k() == 2);
    CHECK(l0.size() == 2);
    CHECK(l0.contains({1, 2}));
    CHECK(l0.contains({1, 3}));
    CHECK(degree(f, 0) == 2);
    CHECK(degree(f, 1) == 3);
    CHECK(degree(f, 2) == 2);
    CHECK(degree(f, 3) == 2);
    CHECK(min_degree(f) == 2);
    CHECK_THROWS_AS(link(f, 4), std::invalid_argument);
    CHECK_THROWS_AS(degree(f, -1), std::invalid_argument);
}

TEST_CASE("degree of every vertex of a complete family") {
    const SetFamily f = complete_family(6, 3);
    for (int v = 0; v < 6; ++v) CHECK(degree(f, v) == 10);  // C(5,2)
    CHECK(min_degree(f) == 10);
}

TEST_CASE("random families: handshake and shadow-link identities") {
    // For a 3-uniform family: sum of degrees = 3 |F|, and each shadow pair
    // {a,b} is seen once from a's link and once from b's, so
    // sum over x of |shadow(link(F, x))| = 2 |shadow(F)|.
    std::mt19937 rng(20260823u);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 5);  // 5..9
        SetFamily f(n, 3);
        const int tries = 1 + static_cast<int>(rng() % 12);
        for (int i = 0; i < tries; ++i) {
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n),
                c = static_cast<int>(rng() % n);
            if (a == b || a == c || b == c) continue;
            f.add_edge({a, b, c});
        }
        long long degree_sum = 0, link_shadow_sum = 0;
        for (int v = 0; v < n; ++v) {
            degree_sum += degree(f, v);
            link_shadow_sum += static_cast<long long>(shadow(link(f, v)).size());
        }
        CHECK(degree_sum == 3 * static_cast<long long>(f.size()));
        CHECK(link_shadow_sum == 2 * static_cast<long long>(shadow(f).size()));
    }
}

TEST_CASE("text format round-trips and is canonical") {
    const SetFamily f = SetFamily::from_edges(4, 3, {{0, 1, 3}, {2, 1, 0}});
    CHECK(to_text(f) == "4 3\n0 1 2\n0 1 3\n");
    CHECK(family_from_text(to_text(f)) == f);

    const SetFamily empty(7, 4);
    CHECK(family_from_text(to_text(empty)) == empty);
}

TEST_CASE("family_from_text rejects malformed input") {
    CHECK_THROWS(family_from_text(""));
    CHECK_THROWS(family_from_text("4\n0 1 2\n"));        // header needs two numbers
    CHECK_THROWS(family_from_text("4 3\n0 1 x\n"));      // bad token
    CHECK_THROWS(family_from_text("4 3\n0 1\n"));        // wrong edge size
    CHECK_THROWS(family_from_text("4 3\n0 1 9\n"));      // out of range
}

TEST_CASE("large vertex sets fall back to tuple storage") {
    SetFamily f(70, 3);
    CHECK_FALSE(f.uses_masks());
    f.add_edge({69, 1, 0});
    f.add_edge({0, 68, 69});
    CHECK(f.size() == 2);
    CHECK(f.contains({0, 1, 69}));
    CHECK(f.edge(0) == std::vector<int>{0, 1, 69});
    CHECK(shadow(f).size() == 5);
    CHECK(degree(f, 69) == 2);
    CHECK(degree(f, 0) == 2);
    CHECK(min_degree(f) == 0);
    CHECK(link(f, 69).contains({0, 1}));
    CHECK_THROWS_AS(f.masks(), std::logic_error);
    CHECK(family_from_text(to_text(f)) == f);
}
