#include "doctest.h"
#include "twodom/canonical.hpp"
#include "twodom/construct.hpp"
#include "twodom/enumerate.hpp"
#include "twodom/errors.hpp"
#include "twodom/recognize.hpp"
#include "twodom/solvers.hpp"

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

TEST_CASE("reduce_once finds nothing for P5") {
    CHECK_FALSE(reduce_once(path(5)).has_value());
    CHECK(all_reductions(path(5)).empty());
}

TEST_CASE("reduce_once on P6 removes a 2-tail via T4 under O2") {
    // Scan order O1 < O2 reaches the T4+O2 six-path before the T2+O4 one.
    auto step = reduce_once(path(6));
    REQUIRE(step.has_value());
    CHECK(step->op == OpId::O2);
    CHECK(step->augmented_pattern_id == "T4+O2");
    CHECK(step->removed == std::vector<int>{4, 5});
}

TEST_CASE("reduce_once on the 4-star strips a leaf via T1 under O1") {
    auto step = reduce_once(star(4));
    REQUIRE(step.has_value());
    CHECK(step->op == OpId::O1);
    CHECK(step->augmented_pattern_id == "T1+O1");
    CHECK(step->removed.size() == 1);
}

TEST_CASE("recognize accepts small orders with empty certificates") {
    for (const Tree& t : base_trees()) {
        Verdict v = recognize(t);
        CHECK(v.accepted);
        REQUIRE(v.certificate.has_value());
        CHECK(v.certificate->steps.empty());
        CHECK(v.gamma2 == v.alpha2);
    }
}

TEST_CASE("recognize rejects P5") {
    Verdict v = recognize(path(5));
    CHECK_FALSE(v.accepted);
    CHECK(v.gamma2 == 3);
    CHECK(v.alpha2 == 4);
    CHECK_FALSE(v.certificate.has_value());
}

TEST_CASE("recognize accepts P6 with a one-step certificate") {
    Verdict v = recognize(path(6));
    CHECK(v.accepted);
    CHECK(v.gamma2 == 4);
    CHECK(v.alpha2 == 4);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->base.order() == 4);
    REQUIRE(v.certificate->steps.size() == 1);
    CHECK(v.certificate->steps[0].op == OpId::O2);
    CHECK(verify_certificate(*v.certificate, path(6)).ok);
}

TEST_CASE("recognize accepts every star") {
    for (int leaves = 1; leaves <= 9; ++leaves) {
        Verdict v = recognize(star(leaves));
        CHECK(v.accepted);
        REQUIRE(v.certificate.has_value());
        CHECK(verify_certificate(*v.certificate, star(leaves)).ok);
    }
}

TEST_CASE("certificates replay for members up to order 11") {
    for (int n = 5; n <= 11; ++n) {
        for_each_free_tree(n, [&](const Tree& t) {
            Verdict v = recognize(t);
            if (!v.accepted) return;
            REQUIRE(v.certificate.has_value());
            auto r = verify_certificate(*v.certificate, t);
            CHECK_MESSAGE(r.ok, r.reason);
        });
    }
}

TEST_CASE("verify_certificate rejects corruption") {
    Verdict v = recognize(path(6));
    REQUIRE(v.certificate.has_value());
    Certificate cert = *v.certificate;

    CHECK_FALSE(verify_certificate(cert, path(5)).ok);  // canonical mismatch

    Certificate bad_arity = cert;
    bad_arity.steps[0].added.push_back(99);
    auto r = verify_certificate(bad_arity, path(6));
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("BadStep") == 0);

    Certificate bad_pattern = cert;
    bad_pattern.steps[0].embedding->pattern_id = "T1";
    CHECK_FALSE(verify_certificate(bad_pattern, path(6)).ok);

    Certificate big_base;
    big_base.base = path(5);
    CHECK_FALSE(verify_certificate(big_base, path(5)).ok);
}

TEST_CASE("every reduction preserves the alpha2-gamma2 difference on members up to 10") {
    for (int n = 5; n <= 10; ++n) {
        for_each_free_tree(n, [&](const Tree& t) {
            int d = solve_alpha2(t)->value - solve_gamma2(t)->value;
            if (d != 0) return;  // member trees only
            for (const auto& step : all_reductions(t)) {
                Tree next = remove_vertices(t, step.removed, step.restored_edge);
                CHECK(solve_alpha2(next)->value - solve_gamma2(next)->value == d);
            }
        });
    }
}

TEST_CASE("paranoid agrees with greedy up to order 10") {
    RecognizeOptions paranoid;
    paranoid.paranoid = true;
    for (int n = 1; n <= 10; ++n) {
        for_each_free_tree(n, [&](const Tree& t) {
            Verdict fast = recognize(t);
            Verdict slow = recognize(t, paranoid);
            CHECK(fast.accepted == slow.accepted);
            if (slow.accepted) {
                REQUIRE(slow.certificate.has_value());
                CHECK(verify_certificate(*slow.certificate, t).ok);
            }
        });
    }
}

TEST_CASE("acceptance matches gamma2 == alpha2 up to order 11") {
    RecognizeOptions quiet;
    quiet.raise_on_mismatch = false;
    for (int n = 1; n <= 11; ++n) {
        for_each_free_tree(n, [&](const Tree& t) {
            Verdict v = recognize(t, quiet);
            CHECK(v.accepted == (v.gamma2 == v.alpha2));
        });
    }
}

TEST_CASE("members generated randomly are recognized") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto [t, cert] = random_member(seed, 5);
        Verdict v = recognize(t);
        CHECK(v.accepted);
        CHECK(v.gamma2 == v.alpha2);
        CHECK(verify_certificate(cert, t).ok);
    }
}
