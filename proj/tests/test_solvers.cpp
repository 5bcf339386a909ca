#include "doctest.h"
#include "twodom/enumerate.hpp"
#include "twodom/errors.hpp"
#include "twodom/rng.hpp"
#include "twodom/solvers.hpp"
#include "twodom/tree.hpp"

using namespace twodom;

namespace {

Tree path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Tree::from_edges(n, edges);
}

Tree star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Tree::from_edges(leaves + 1, edges);
}

}  // namespace

TEST_CASE("gamma2 on small trees") {
    CHECK(solve_gamma2(Tree::from_edges(1, {}))->value == 1);
    CHECK(solve_gamma2(Tree::from_edges(2, {{0, 1}}))->value == 2);
    CHECK(solve_gamma2(path(4))->value == 3);
    CHECK(solve_gamma2(path(6))->value == 4);
    CHECK(solve_gamma2(star(3))->value == 3);
}

TEST_CASE("alpha2 on small trees") {
    CHECK(solve_alpha2(Tree::from_edges(1, {}))->value == 1);
    CHECK(solve_alpha2(Tree::from_edges(2, {{0, 1}}))->value == 2);
    CHECK(solve_alpha2(path(4))->value == 3);
    CHECK(solve_alpha2(path(5))->value == 4);
    CHECK(solve_alpha2(star(3))->value == 3);
}

TEST_CASE("witnesses satisfy their predicates and are deterministic") {
    auto g = solve_gamma2(path(4));
    REQUIRE(g.has_value());
    CHECK(g->witness.size() == g->value);
    CHECK(is_2dominating(path(4), g->witness));
    CHECK(g->witness == VertexSet({0, 1, 3}));

    auto a = solve_alpha2(path(5));
    REQUIRE(a.has_value());
    CHECK(a->witness.size() == a->value);
    CHECK(is_2independent(path(5), a->witness));
    CHECK(a->witness == VertexSet({0, 1, 3, 4}));
}

TEST_CASE("constraints") {
    Constraint leaf_out;
    leaf_out.forced_out.insert(0);
    CHECK_FALSE(solve_gamma2(path(4), leaf_out).has_value());

    Constraint wedge;
    wedge.forced_in = VertexSet({0, 1, 2});
    CHECK_FALSE(solve_alpha2(path(3), wedge).has_value());  // middle gets two set-neighbors

    Constraint pair_in;
    pair_in.forced_in = VertexSet({0, 1});
    auto a = solve_alpha2(path(4), pair_in);
    REQUIRE(a.has_value());
    CHECK(a->value == 3);

    CHECK_THROWS_AS(solve_gamma2(path(4), Constraint{VertexSet({1}), VertexSet({1})}),
                    PreconditionViolated);
}

TEST_CASE("forest solves sum over components") {
    // P5 minus its center = two K2 components.
    VertexSet removed;
    removed.insert(2);
    CHECK(solve_gamma2(path(5), {}, removed)->value == 4);
    CHECK(solve_alpha2(path(5), {}, removed)->value == 4);
    // Removing everything leaves the empty forest.
    CHECK(solve_gamma2(Tree::from_edges(1, {}), {}, VertexSet({0}))->value == 0);
}

TEST_CASE("brute oracles") {
    CHECK(brute_gamma2(path(6)) == 4);
    CHECK(brute_alpha2(path(6)) == 4);
    CHECK(brute_gamma2(path(5)) == 3);
    CHECK(brute_alpha2(path(5)) == 4);
    CHECK(brute_gamma2(Tree::from_edges(2, {{0, 1}})) == 2);
    CHECK(brute_alpha2(Tree::from_edges(2, {{0, 1}})) == 2);
    Tree big = path(23);
    CHECK_THROWS_AS(brute_gamma2(big), TooLarge);
    CHECK_THROWS_AS(brute_alpha2(big), TooLarge);
    CHECK_THROWS_AS(find_2dom_2ind_set(big), TooLarge);
}

TEST_CASE("dp equals brute force on all trees up to order 10") {
    for (int n = 1; n <= 10; ++n) {
        for_each_free_tree(n, [&](const Tree& t) {
            CHECK(solve_gamma2(t)->value == brute_gamma2(t));
            CHECK(solve_alpha2(t)->value == brute_alpha2(t));
        });
    }
}

TEST_CASE("find_2dom_2ind_set") {
    CHECK(find_2dom_2ind_set(Tree::from_edges(1, {})) == VertexSet({0}));
    CHECK(find_2dom_2ind_set(path(4)) == VertexSet({0, 1, 3}));
    CHECK(find_2dom_2ind_set(path(5)) == VertexSet({0, 1, 3, 4}));
    for (int n = 1; n <= 9; ++n) {
        for_each_free_tree(n, [&](const Tree& t) {
            VertexSet s = find_2dom_2ind_set(t);
            CHECK(is_2dominating(t, s));
            CHECK(is_2independent(t, s));
        });
    }
}

TEST_CASE("membership predicates") {
    // Leaves lie in every gamma2-set.
    for (int n = 2; n <= 8; ++n) {
        for_each_free_tree(n, [&](const Tree& t) {
            for (int v = 0; v < t.order(); ++v)
                if (t.is_leaf(v)) CHECK(in_every_gamma2_set(t, v));
        });
    }
    CHECK_FALSE(in_every_gamma2_set(path(3), 1));
    CHECK_FALSE(in_every_gamma2_set(path(4), 1));
    CHECK(in_some_gamma2_set(path(4), 1));
    CHECK_FALSE(in_some_gamma2_set(path(3), 1));
    CHECK(in_every_alpha2_set(path(2), 0));
    CHECK_FALSE(in_every_alpha2_set(path(3), 0));
}

TEST_CASE("alpha2 keeps its optimum with all leaves forced in") {
    for (int n = 2; n <= 9; ++n) {
        for_each_free_tree(n, [&](const Tree& t) {
            Constraint c;
            for (int v = 0; v < t.order(); ++v)
                if (t.is_leaf(v)) c.forced_in.insert(v);
            auto constrained = solve_alpha2(t, c);
            REQUIRE(constrained.has_value());
            CHECK(constrained->value == solve_alpha2(t)->value);
        });
    }
}

TEST_CASE("monotone consistency under forced_in") {
    CounterRng rng(2024);
    for (int n = 2; n <= 9; ++n) {
        for_each_free_tree(n, [&](const Tree& t) {
            Constraint c;
            c.forced_in.insert(static_cast<int>(rng.next_below(t.order())));
            auto g = solve_gamma2(t, c);
            REQUIRE(g.has_value());
            CHECK(g->value >= solve_gamma2(t)->value);
            auto a = solve_alpha2(t, c);
            if (a) CHECK(a->value <= solve_alpha2(t)->value);
        });
    }
}

TEST_CASE("gamma2 at most alpha2 on every tree") {
    for (int n = 1; n <= 11; ++n) {
        for_each_free_tree(n, [&](const Tree& t) {
            CHECK(solve_gamma2(t)->value <= solve_alpha2(t)->value);
        });
    }
}
