#include <doctest.h>

#include "homcat/tree.hpp"

using namespace homcat;

namespace {
SLTree leafb(const char* l, Weight w) { return SLTree::leaf(l, Color::Black, w); }
SLTree leafw(const char* l, Weight w) { return SLTree::leaf(l, Color::White, w); }
}  // namespace

TEST_CASE("grafting absorbs units into alpha shifts") {
    CHECK(graft(SLTree::unit(), SLTree::unit()).is_unit());
    auto t = graft(SLTree::unit(), leafb("g", 0));
    REQUIRE(t.is_leaf());
    CHECK(t.node().weight == 1);
    auto u = graft(leafb("g", 2), leafw("g", 5));
    CHECK(u.is_node());
    CHECK(u.leaf_count() == 2);
}

TEST_CASE("alpha_shift is a grafting morphism and invertible") {
    auto t = graft(leafb("g", 1), leafb("g", 2));
    auto s = alpha_shift(t, 1);
    CHECK(s.left().node().weight == 2);
    CHECK(s.right().node().weight == 3);
    CHECK(alpha_shift(t, 0) == t);
    uint64_t st = 42;
    for (int i = 0; i < 100; ++i) {
        auto r = random_tree(st, 10, -3, 3, 2);
        CHECK(alpha_shift(alpha_shift(r, 1), -1) == r);
        auto r2 = random_tree(st, 6, -3, 3, 2);
        CHECK(alpha_shift(graft(r, r2), 2) == graft(alpha_shift(r, 2), alpha_shift(r2, 2)));
    }
}

TEST_CASE("redex detection: the drawn shapes and the weight condition") {
    auto sib = graft(leafb("g", 3), leafw("g", 3));
    auto rs = find_redexes(sib);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].p == 0);
    CHECK(rs[0].q == 0);

    auto ldl = graft(graft(leafb("u", 0), leafb("g", 4)), leafw("g", 5));
    rs = find_redexes(ldl);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].rule == RuleId::LDL);
    CHECK(rs[0].position == 1);

    CHECK(find_redexes(graft(leafb("g", 3), leafw("g", 4))).empty());
    // same color, equal weight: not a redex
    CHECK(find_redexes(graft(leafb("g", 3), leafb("g", 3))).empty());
    // different labels: not a redex
    CHECK(find_redexes(graft(leafb("g", 3), leafw("h", 3))).empty());
}

TEST_CASE("all eight drawn shapes fire in both modes") {
    auto phi1 = leafb("u", 0);
    auto phi2 = leafb("v", 0);
    auto x = [&](Weight w) { return leafb("g", w); };
    auto xb = [&](Weight w) { return leafw("g", w); };
    struct Case {
        SLTree t;
        RuleId rule;
    };
    const Case cases[] = {
        // LAL: attached pair inside the left subtree
        {graft(graft(phi1, graft(x(2), xb(2))), phi2), RuleId::LAL},
        // RAL: attached pair inside the right subtree
        {graft(phi1, graft(graft(x(2), xb(2)), phi2)), RuleId::RAL},
        // LDL: (u v x_b) v xbar_{b+1}
        {graft(graft(phi1, x(1)), xb(2)), RuleId::LDL},
        // RDL: x_{b+1} v (xbar_b v v)
        {graft(x(2), graft(xb(1), phi2)), RuleId::RDL},
        // DL1..DL4 boundary shapes
        {graft(graft(phi1, x(3)), graft(xb(3), phi2)), RuleId::DL1},
        {graft(graft(phi1, graft(leafb("u", 0), x(1))), graft(xb(2), phi2)), RuleId::DL2},
        {graft(graft(phi1, x(2)), graft(graft(xb(1), leafb("v", 0)), phi2)), RuleId::DL3},
        {graft(graft(phi1, graft(leafb("u", 0), x(4))), graft(graft(xb(4), leafb("v", 0)), phi2)),
         RuleId::DL4},
    };
    for (const auto& c : cases) {
        for (auto mode : {RedexMode::Strict, RedexMode::General}) {
            auto rs = find_redexes(c.t, mode);
            bool hit = false;
            for (const auto& r : rs) hit = hit || r.rule == c.rule;
            CHECK(hit);
        }
    }
}

TEST_CASE("general mode reaches beyond the drawn shapes, strict does not") {
    // pair at spine depths (3,3): cancels semantically, matches no drawn shape
    auto deep = graft(leafb("a", 0), graft(leafb("b", 0), graft(leafb("c", 0), leafb("d", 0))));
    auto t = graft(deep, hom_inverse(deep));
    CHECK(find_redexes(t, RedexMode::General).size() == 1);
    CHECK(find_redexes(t, RedexMode::Strict).empty());
    CHECK(normal_form(t).tree.is_unit());
    CHECK_FALSE(normal_form(t, Strategy::leftmost(), RedexMode::Strict).tree.is_unit());
}

TEST_CASE("reduce_step replaces the pair by units and renormalizes") {
    // (phi1 v (g_a g_a'-siblings)) v phi2 -> alpha(phi1) v phi2
    auto phi1 = graft(leafb("u", 0), leafb("u", 1));
    auto phi2 = leafb("v", 7);
    auto t = graft(graft(phi1, graft(leafb("g", 2), leafw("g", 2))), phi2);
    auto rs = find_redexes(t);
    REQUIRE(rs.size() == 1);
    auto r = reduce_step(t, rs[0]);
    CHECK(r == graft(alpha_shift(phi1, 1), phi2));

    // (phi1 v g_a) v (g_a' v phi2) -> alpha(phi1) v alpha(phi2)
    auto t2 = graft(graft(phi1, leafb("g", 2)), graft(leafw("g", 2), phi2));
    auto rs2 = find_redexes(t2);
    REQUIRE(rs2.size() == 1);
    CHECK(reduce_step(t2, rs2[0]) == graft(alpha_shift(phi1, 1), alpha_shift(phi2, 1)));

    // ((phi1 v g_a) v g'_{a+1}) v phi2 -> alpha^2(phi1) v phi2
    auto t3 = graft(graft(graft(phi1, leafb("g", 2)), leafw("g", 3)), phi2);
    auto rs3 = find_redexes(t3);
    REQUIRE(rs3.size() == 1);
    CHECK(reduce_step(t3, rs3[0]) == graft(alpha_shift(phi1, 2), phi2));

    // stale redex rejected
    Redex stale = rs3[0];
    stale.position = 0;
    CHECK_THROWS_AS(reduce_step(t3, stale), structural_error);
}

TEST_CASE("the worked reduction example") {
    auto t = parse_tree("((g@0 (g'@2 g@5)) ((g'@5 g@2) g@1))");
    auto res = normal_form(t);
    CHECK(format_tree(res.tree) == "(g@1 g@2)");
    REQUIRE(res.trace.size() == 2);
    CHECK(res.trace[0].redex.rule == RuleId::DL4);
    CHECK(res.trace[1].redex.rule == RuleId::DL1);
    // strategy independence on this input
    for (auto strat : {Strategy::rightmost(), Strategy::random(7), Strategy::random(99)})
        CHECK(normal_form(t, strat).tree == res.tree);
    // the strict system agrees here
    CHECK(normal_form(t, Strategy::leftmost(), RedexMode::Strict).tree == res.tree);
}

TEST_CASE("the labeled worked example") {
    auto t = parse_tree("((x1@0 (x2'@2 x3@5)) ((x3'@5 x2@2) x4@1))");
    CHECK(format_tree(normal_form(t).tree) == "(x1@1 x4@2)");
}

TEST_CASE("normal form of the unit") {
    CHECK(normal_form(SLTree::unit()).tree.is_unit());
    CHECK(normal_form(SLTree::unit()).trace.empty());
}

TEST_CASE("mirror inverse") {
    auto t = graft(leafw("g", 7), leafb("g", 3));
    auto m = mirror_inverse(t);
    CHECK(format_tree(m) == "(g'@3 g@7)");
    auto t3 = graft(graft(leafb("g", -1), leafb("g", 1)), leafw("g", 3));
    CHECK(format_tree(mirror_inverse(t3)) == "(g@3 (g'@1 g'@-1))");
    uint64_t st = 7;
    for (int i = 0; i < 200; ++i) {
        auto r = random_tree(st, 10, -3, 3, 2);
        CHECK(mirror_inverse(mirror_inverse(r)) == r);
    }
}

TEST_CASE("hom inverse: color flip on leaves, antimorphism, inverse law") {
    CHECK(hom_inverse(SLTree::unit()).is_unit());
    CHECK(format_tree(hom_inverse(leafb("g", 0))) == "g'@0");
    uint64_t st = 11;
    for (int i = 0; i < 500; ++i) {
        auto a = random_tree(st, 8, -3, 3, 2);
        auto b = random_tree(st, 8, -3, 3, 2);
        CHECK(hom_inverse(graft(a, b)) == graft(hom_inverse(b), hom_inverse(a)));
        auto red = normal_form(a).tree;
        CHECK(fg_multiply(red, hom_inverse(red)).is_unit());
    }
}

TEST_CASE("fg_multiply: unit laws and hom-associativity") {
    CHECK(fg_multiply(SLTree::unit(), SLTree::unit()).is_unit());
    auto c = graft(leafb("g", 1), leafb("g", 2));
    CHECK(fg_multiply(c, hom_inverse(c)).is_unit());
    uint64_t st = 13;
    for (int i = 0; i < 500; ++i) {
        auto a = normal_form(random_tree(st, 6, -3, 3, 2)).tree;
        auto b = normal_form(random_tree(st, 6, -3, 3, 2)).tree;
        auto d = normal_form(random_tree(st, 6, -3, 3, 2)).tree;
        CHECK(fg_multiply(alpha_shift(a, 1), fg_multiply(b, d)) ==
              fg_multiply(fg_multiply(a, b), alpha_shift(d, 1)));
        CHECK(fg_multiply(SLTree::unit(), a) == alpha_shift(a, 1));
        CHECK(fg_multiply(a, SLTree::unit()) == alpha_shift(a, 1));
    }
}

TEST_CASE("alpha_shift commutes with normal_form, mirror and inverse") {
    uint64_t st = 31;
    for (int i = 0; i < 200; ++i) {
        auto t = random_tree(st, 10, -3, 3, 2);
        CHECK(alpha_shift(normal_form(t).tree, 1) == normal_form(alpha_shift(t, 1)).tree);
        CHECK(alpha_shift(mirror_inverse(t), 2) == mirror_inverse(alpha_shift(t, 2)));
        CHECK(alpha_shift(hom_inverse(t), -1) == hom_inverse(alpha_shift(t, -1)));
    }
}

TEST_CASE("each step removes exactly two leaves") {
    uint64_t st = 17;
    for (int i = 0; i < 300; ++i) {
        auto t = random_tree(st, 12, -3, 3, 1);
        auto res = normal_form(t);
        int leaves = t.leaf_count();
        CHECK(static_cast<int>(res.trace.size()) <= leaves / 2);
        for (const auto& step : res.trace) {
            CHECK(step.before.leaf_count() - step.after.leaf_count() == 2);
        }
    }
}

TEST_CASE("check_free_axioms default configuration") {
    SamplerConfig cfg;
    cfg.rounds = 250;
    auto rep = check_free_axioms(cfg);
    CHECK(rep.ok());

    SamplerConfig degenerate;
    degenerate.rounds = 50;
    degenerate.labels = 1;
    degenerate.weight_lo = 0;
    degenerate.weight_hi = 0;
    CHECK(check_free_axioms(degenerate).ok());
}

TEST_CASE("parse and format round trips") {
    const char* canon[] = {"1", "g@0", "g'@-12", "((g@0 (g'@2 g@5)) ((g'@5 g@2) g@1))",
                           "(a_1@3 Zz9@-4)"};
    for (const char* s : canon) CHECK(format_tree(parse_tree(s)) == s);
    uint64_t st = 23;
    for (int i = 0; i < 500; ++i) {
        auto t = random_tree(st, 12, -9, 9, 3);
        CHECK(parse_tree(format_tree(t)) == t);
    }
}

TEST_CASE("parser failure positions") {
    CHECK_THROWS_AS(parse_tree("(g@1"), parse_error);
    CHECK_THROWS_AS(parse_tree("g@"), parse_error);
    CHECK_THROWS_AS(parse_tree("(g@1  g@2)"), parse_error);
    CHECK_THROWS_AS(parse_tree("g@1 trailing"), parse_error);
    CHECK_THROWS_AS(parse_tree("@3"), parse_error);
    CHECK_THROWS_AS(parse_tree("g@99999999999999999999"), parse_error);
    try {
        parse_tree("(g@1 g@x)");
    } catch (const parse_error& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 8);
    }
}

TEST_CASE("local confluence, exhaustive on small universes") {
    for (int leaves = 2; leaves <= 5; ++leaves) {
        // stride 1: run the full tree machinery on every multi-redex tree
        auto rep = local_confluence_exhaustive(leaves, -2, 2, RedexMode::General, 1);
        CHECK(rep.violations == 0);
        CHECK(rep.machine_mismatches == 0);
        CHECK(rep.machine_checked == rep.trees_with_two_redexes);
    }
}

TEST_CASE("leaf views and spine depths") {
    auto t = parse_tree("((g@0 (g'@2 g@5)) ((g'@5 g@2) g@1))");
    auto lv = leaf_views(t);
    REQUIRE(lv.size() == 6);
    CHECK(lv[0].depth == 2);
    CHECK(lv[2].depth == 3);
    auto pairs = adjacent_pairs(t);
    REQUIRE(pairs.size() == 5);
    CHECK(pairs[2].p == 2);  // pair (2,3) straddles the root
    CHECK(pairs[2].q == 2);
    CHECK_FALSE(pairs[2].lca_in_left_subtree);
    CHECK(pairs[0].lca_in_left_subtree);
}
