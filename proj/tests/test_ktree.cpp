#include <random>

#include "doctest.h"
#include "impro/ktree.hpp"
#include "impro/outerplanar.hpp"
#include "impro/solver.hpp"
#include "support.hpp"

using namespace impro;

TEST_CASE("gen_ktree sizes and structure") {
    SUBCASE("T_{3,4}^{(2)}") {
        auto wit = gen_ktree(2, 3, 4);
        CHECK(wit.graph.vertex_count() == 14);
        CHECK(wit.graph.edge_count() == 25);
        CHECK(wit.e1.size() == 12);
        for (int e : wit.e1) {
            auto [u, v] = wit.graph.edge(e);
            CHECK((u == 0 || v == 0));  // every E1 edge touches w1
        }
        CHECK(verify_ktree(wit.graph, 2));
    }
    SUBCASE("smallest case is a triangle") {
        auto wit = gen_ktree(2, 1, 1);
        CHECK(wit.graph.vertex_count() == 3);
        CHECK(wit.graph.edge_count() == 3);
    }
    SUBCASE("T_{2,2}^{(3)}") {
        auto wit = gen_ktree(3, 2, 2);
        CHECK(wit.graph.vertex_count() == 7);
        CHECK(wit.graph.edge_count() == 15);
        CHECK(verify_ktree(wit.graph, 3));
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(gen_ktree(1, 1, 1), std::invalid_argument);
        CHECK_THROWS_AS(gen_ktree(2, 0, 1), std::invalid_argument);
    }
    SUBCASE("size formula over a grid") {
        for (int k = 2; k <= 4; ++k)
            for (int m = 1; m <= 3; ++m)
                for (int n = 1; n <= 3; ++n) {
                    auto wit = gen_ktree(k, m, n);
                    CHECK(wit.graph.vertex_count() == k + m * n);
                    CHECK(wit.graph.edge_count() ==
                          m * n + (k - 1) * (m * n + 1) + (k - 1) * (k - 2) / 2);
                    CHECK(static_cast<int>(wit.e1.size()) == m * n);
                    CHECK(verify_ktree(wit.graph, k));
                }
    }
}

TEST_CASE("verify_ktree") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(verify_ktree(k3, 2));
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_FALSE(verify_ktree(c4, 2));
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(verify_ktree(k4, 3));
    CHECK_FALSE(verify_ktree(k4, 2));
    // a tree is a 1-tree
    Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(verify_ktree(path, 1));
}

TEST_CASE("walk_bound") {
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(walk_bound(p3, {0, 1, 2}) == 1);
    CHECK(walk_bound(p3, {0, 1}) == 0);  // zero interior vertices
    CHECK_THROWS_AS(walk_bound(p3, {0, 2}), InvalidWalkError);
    CHECK_THROWS_AS(walk_bound(p3, {0}), InvalidWalkError);

    SUBCASE("the T walk stays within m+(n+1)k-2") {
        for (int k = 2; k <= 3; ++k)
            for (int m = 1; m <= 3; ++m)
                for (int n = 1; n <= 3; ++n) {
                    auto wit = gen_ktree(k, m, n);
                    const int v0 = k - 1;
                    for (int j = 1; j <= m; ++j)
                        for (int i = 1; i <= n; ++i) {
                            std::vector<int> walk{0, v0};
                            for (int p = 1; p <= i; ++p) walk.push_back(k + (j - 1) * n + (p - 1));
                            walk.push_back(0);
                            CHECK(walk_bound(wit.graph, walk) <= m + (n + 1) * k - 2);
                        }
                }
    }
}

TEST_CASE("certificates") {
    SUBCASE("(2,14,14)") {
        auto c = certificate(2, 14, 14);
        CHECK(c.color_interval_halfwidth == 42);
        CHECK(c.color_count == 85);
        CHECK(c.lower_bound == 3);  // ceil(196/85)
        REQUIRE(c.simplified_bound.has_value());
        CHECK(*c.simplified_bound == 2);
        CHECK(c.lower_bound >= *c.simplified_bound);
    }
    SUBCASE("(2,1,1)") {
        auto c = certificate(2, 1, 1);
        CHECK(c.color_interval_halfwidth == 3);
        CHECK(c.color_count == 7);
        CHECK(c.lower_bound == 1);
    }
    SUBCASE("(3,9,9)") {
        auto c = certificate(3, 9, 9);
        CHECK(c.color_interval_halfwidth == 37);
        CHECK(c.color_count == 75);
        CHECK(c.lower_bound == 2);  // ceil(81/75)
    }
    SUBCASE("lower bound is always at least 1 and dominates the simplified form") {
        for (int k = 2; k <= 5; ++k)
            for (int n = 1; n <= 60; ++n) {
                auto c = certificate(k, n, n);
                CHECK(c.lower_bound >= 1);
                if (c.simplified_bound) CHECK(c.lower_bound >= *c.simplified_bound);
            }
    }
    SUBCASE("growth: bound at n=10^4 is >10x the bound at n=10^2") {
        for (int k = 2; k <= 5; ++k) {
            auto small = certificate(k, 100, 100);
            auto large = certificate(k, 10000, 10000);
            CHECK(large.lower_bound > 10 * small.lower_bound);
        }
    }
}

TEST_CASE("size_for_target") {
    CHECK(size_for_target(2, 1) == std::pair{1, 1});
    CHECK(size_for_target(2, 2) == std::pair{7, 7});
    for (int k = 2; k <= 4; ++k)
        for (int target = 1; target <= 10; ++target) {
            auto [m, n] = size_for_target(k, target);
            CHECK(m == n);
            CHECK(certificate(k, m, n).lower_bound >= target);
            CHECK(n <= target * (2 * k + 3));  // never beyond the sufficient choice
            if (n > std::max(1, 2 * k - 3))
                CHECK(certificate(k, n - 1, n - 1).lower_bound < target);
        }
}

TEST_CASE("lemma soundness on solver witnesses") {
    std::mt19937 rng(314159);
    for (int iter = 0; iter < 40; ++iter) {
        auto g = impro::testing::random_outerplanar(4 + iter % 6, rng, 0.2);
        if (!g.connected() || g.edge_count() == 0) continue;
        auto res = exact_impropriety(g);
        REQUIRE(res.exact());
        const auto& c = *res.witness;
        for (int w = 0; w < 30; ++w) {
            // random walk of length <= 6
            std::vector<int> walk{static_cast<int>(rng() % g.vertex_count())};
            while (g.degree(walk.back()) == 0) walk[0] = static_cast<int>(rng() % g.vertex_count());
            for (int step = 0; step < 2 + static_cast<int>(rng() % 5); ++step) {
                const auto& inc = g.incident_edges(walk.back());
                walk.push_back(g.other_end(inc[rng() % inc.size()], walk.back()));
            }
            int first = *g.find_edge(walk[0], walk[1]);
            int last = *g.find_edge(walk[walk.size() - 2], walk.back());
            CHECK(std::abs(c[first] - c[last]) <= walk_bound(g, walk));
        }
    }
}

TEST_CASE("certificate soundness against the exact solver, small grid") {
    for (auto [k, m, n] : {std::tuple{2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {2, 2, 2}}) {
        auto wit = gen_ktree(k, m, n);
        auto cert = certificate(k, m, n);
        auto res = exact_impropriety(wit.graph);
        REQUIRE(res.exact());
        CHECK(res.lower >= cert.lower_bound);
    }
}
