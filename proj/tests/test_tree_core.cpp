#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "twodom/canonical.hpp"
#include "twodom/enumerate.hpp"
#include "twodom/errors.hpp"
#include "twodom/graph6.hpp"
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

TEST_CASE("build_tree validates structure") {
    CHECK(Tree::from_edges(1, {}).order() == 1);
    CHECK(path(3).degree(1) == 2);
    CHECK_THROWS_AS(Tree::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}), NotATree);
    CHECK_THROWS_AS(Tree::from_edges(4, {{0, 1}, {1, 2}}), NotATree);
    CHECK_THROWS_AS(Tree::from_edges(4, {{0, 1}, {0, 1}, {2, 3}}), NotATree);
    CHECK_THROWS_AS(Tree::from_edges(2, {{0, 0}}), NotATree);
    CHECK_THROWS_AS(Tree::from_edges(2, {{0, 5}}), NotATree);
}

TEST_CASE("graph6 codec is bit-exact") {
    CHECK(graph6_encode(Tree::from_edges(1, {})) == "@");
    CHECK(graph6_encode(path(3)) == "Bg");
    CHECK(graph6_decode("Bg").edges() == path(3).edges());
    CHECK_THROWS_AS(graph6_decode(""), MalformedGraph6);
    CHECK_THROWS_AS(graph6_decode("B"), MalformedGraph6);
    CHECK_THROWS_AS(graph6_decode("Bw"), NotATree);  // triangle
}

TEST_CASE("graph6 round-trips enumerated trees") {
    for (int n = 1; n <= 10; ++n) {
        for_each_free_tree(n, [&](const Tree& t) {
            Tree back = graph6_decode(graph6_encode(t));
            CHECK(back == t);
        });
    }
}

TEST_CASE("graph6 long order form") {
    Tree p70 = path(70);
    std::string code = graph6_encode(p70);
    CHECK(code[0] == 126);
    CHECK(graph6_decode(code) == p70);
}

TEST_CASE("canonical code separates isomorphism classes") {
    Tree p4 = path(4);
    Tree relabeled = Tree::from_edges(4, {{2, 0}, {0, 3}, {3, 1}});  // still a 4-path
    CHECK(canonical_code(p4) == canonical_code(relabeled));
    CHECK(canonical_code(p4) != canonical_code(star(3)));
}

TEST_CASE("canonical code matches Pruefer dedup on order 5") {
    CHECK(twodom::testing::prufer_class_count(5) == 3);
    std::set<std::string> codes;
    for_each_free_tree(5, [&](const Tree& t) { codes.insert(canonical_code(t)); });
    CHECK(codes.size() == 3);
}

TEST_CASE("free tree enumeration counts") {
    long long expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) CHECK(count_free_trees(n) == expected[n]);
}

TEST_CASE("enumeration order starts with the path") {
    auto trees = free_trees(4);
    REQUIRE(trees.size() == 2);
    CHECK(canonical_code(trees[0]) == canonical_code(path(4)));
    CHECK(canonical_code(trees[1]) == canonical_code(star(3)));
}

TEST_CASE("enumeration matches Pruefer class counts up to 8") {
    for (int n = 3; n <= 8; ++n)
        CHECK(count_free_trees(n) == twodom::testing::prufer_class_count(n));
}

TEST_CASE("enumerated trees are valid and distinct") {
    for (int n = 1; n <= 11; ++n) {
        std::set<std::string> codes;
        for_each_free_tree(n, [&](const Tree& t) {
            CHECK(t.order() == n);
            CHECK(static_cast<int>(t.edges().size()) == n - 1);
            codes.insert(canonical_code(t));
        });
        CHECK(static_cast<long long>(codes.size()) == count_free_trees(n));
    }
}

TEST_CASE("boundary") {
    Tree p3 = path(3);
    CHECK(boundary(p3, VertexSet({0, 1})) == VertexSet({1}));
    CHECK(boundary(p3, VertexSet({0, 1, 2})).empty());
    CHECK(boundary(path(5), VertexSet({0, 1, 2})) == VertexSet({2}));
}

TEST_CASE("eccentric leaf") {
    RootedView rv(path(3), 0);
    CHECK(eccentric_leaf(rv, 1) == 2);
    CHECK(eccentric_leaf(rv, 2) == 2);  // childless

    // Spider with legs of lengths 1 and 3, rooted at its head 0.
    Tree spider = Tree::from_edges(5, {{0, 1}, {0, 2}, {2, 3}, {3, 4}});
    RootedView srv(spider, 0);
    CHECK(eccentric_leaf(srv, 0) == 4);
}

TEST_CASE("edge list round trip") {
    std::stringstream buffer;
    write_edge_list(buffer, star(3));
    CHECK(read_edge_list(buffer) == star(3));
}
