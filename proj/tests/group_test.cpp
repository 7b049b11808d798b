#include <doctest.h>

#include "catalog.hpp"
#include "homcat/group.hpp"

using namespace homcat;

TEST_CASE("z6 with 5x twist passes every axiom, regular abelian") {
    auto G = catalog::z6_5x();
    auto r = check_hom_group(G);
    CHECK(r.all_pass());
    CHECK(r.regular);
    CHECK(r.abelian);
    CHECK(r.remark_1_2_1);
    CHECK(r.remark_1_2_4);
    CHECK(r.left_cancellation);
    for (int k : r.inv_index) CHECK(k == 0);
    CHECK(G.m(1, 2) == 3);  // 5*(1+2) mod 6
}

TEST_CASE("z4 with 2x twist passes but is not regular") {
    auto G = catalog::z4_2x();
    auto r = check_hom_group(G);
    CHECK(r.all_pass());
    CHECK_FALSE(r.regular);
    CHECK(r.abelian);
    CHECK(r.remark_1_2_4);
}

TEST_CASE("ordinary group with identity twist reduces to group axioms") {
    auto G = catalog::zn_id(5);
    auto r = check_hom_group(G);
    CHECK(r.all_pass());
    CHECK(r.regular);
    for (int k : r.inv_index) CHECK(k == 0);
    for (Elt g = 0; g < G.n; ++g) CHECK(G.a(g) == g);
}

TEST_CASE("conjugation-twisted S3 is a regular non-abelian hom-group") {
    auto G = catalog::twisted_s3();
    auto r = check_hom_group(G);
    CHECK(r.all_pass());
    CHECK(r.regular);
    CHECK_FALSE(r.abelian);
}

TEST_CASE("malformed tables are a structural error, not a report") {
    auto G = catalog::z6_5x();
    G.mul[7] = 11;
    CHECK_THROWS_AS(check_hom_group(G), structural_error);
}

TEST_CASE("inverse_and_index") {
    auto G = catalog::z6_5x();
    auto [inv2, k2] = inverse_and_index(G, 2);
    CHECK(inv2 == 4);
    CHECK(k2 == 0);
    auto [inve, ke] = inverse_and_index(G, G.e);
    CHECK(inve == G.e);
    CHECK(ke == 0);
    auto H = catalog::z4_2x();
    auto [inv1, k1] = inverse_and_index(H, 1);
    CHECK(inv1 == 3);
    CHECK(k1 == 0);
}

TEST_CASE("twist_group rejects a non-homomorphism") {
    Table bad = {0, 2, 1, 3, 4, 5};  // not an endomorphism of Z/6
    CHECK_THROWS_AS(twist_group(catalog::zmod_add_table(6), bad), structural_error);
}

TEST_CASE("direct products") {
    auto P = direct_product(catalog::zn_id(2), catalog::zn_id(3));
    CHECK(P.n == 6);
    CHECK(P.e == 0);
    CHECK(check_hom_group(P).all_pass());
    // isomorphic to Z/6 as an ordinary group: the element (1,1) generates
    Elt g = 1 * 3 + 1, x = P.e;
    std::set<Elt> orbit;
    for (int i = 0; i < 6; ++i) {
        x = P.m(x, g);
        orbit.insert(x);
    }
    CHECK(orbit.size() == 6);

    auto Q = direct_product(catalog::z6_5x(), catalog::z4_2x());
    CHECK(Q.n == 24);
    auto r = check_hom_group(Q);
    CHECK(r.all_pass());
    CHECK_FALSE(r.regular);  // alpha bijective iff both factors are
}

TEST_CASE("q-additive window") {
    auto r = q_additive_window(3, 10);
    CHECK(r.failures == 0);
    CHECK(3 * (2 + 4) == 18);
    auto r1 = q_additive_window(1, 12);
    CHECK(r1.failures == 0);
    auto r2 = q_additive_window(2, 50);
    CHECK(r2.failures == 0);
    CHECK(r2.checked > 0);
    CHECK(r2.skipped > 0);
    CHECK_THROWS_AS(q_additive_window(0, 5), structural_error);
}

TEST_CASE("structure identities on the catalog") {
    auto r6 = check_structure_identities(catalog::z6_5x());
    CHECK(r6.cancellation.status == IdentityStatus::Pass);
    CHECK(r6.medial_commutation.status == IdentityStatus::Pass);
    CHECK(r6.commutation.status == IdentityStatus::Pass);
    CHECK(r6.interchange.status == IdentityStatus::Pass);
    CHECK(r6.squaring_criterion.status == IdentityStatus::Pass);

    auto rs3 = check_structure_identities(catalog::twisted_s3());
    CHECK(rs3.cancellation.status == IdentityStatus::Pass);
    CHECK(rs3.medial_commutation.status == IdentityStatus::Pass);
    CHECK(rs3.commutation.status == IdentityStatus::Pass);
    CHECK(rs3.interchange.status == IdentityStatus::NotApplicable);
    CHECK(rs3.squaring_criterion.status == IdentityStatus::Pass);

    auto r1 = check_structure_identities(catalog::zn_id(1));
    CHECK(r1.all_pass_or_na());
}

TEST_CASE("homomorphism enumeration") {
    auto Z2 = catalog::zn_id(2);
    auto res = enumerate_homomorphisms(Z2, Z2);
    REQUIRE(res.maps.size() == 2);  // zero and identity
    CHECK_FALSE(res.truncated);

    auto G = catalog::z6_5x();
    auto res2 = enumerate_homomorphisms(G, Z2);
    CHECK(res2.maps.size() == 2);
    Table parity = {0, 1, 0, 1, 0, 1};
    bool found = false;
    for (const auto& f : res2.maps) found = found || f.map == parity;
    CHECK(found);

    // constant map to e is a homomorphism whenever e*e = e
    Table conste(G.n, Z2.e);
    CHECK(is_homomorphism(G, Z2, conste));
}

TEST_CASE("Hom(G,H) pointwise structure") {
    auto Z2 = catalog::zn_id(2);
    auto H = hom_group_of_homomorphisms(Z2, Z2);
    CHECK(H.group.n == 2);
    CHECK(check_hom_group(H.group).all_pass());
    // the zero map is the hom-unit
    CHECK(H.elements[H.group.e].map == Table{0, 0});

    auto G = catalog::z6_5x();
    auto HG = hom_group_of_homomorphisms(G, G);
    CHECK(HG.group.n == 6);
    auto r = check_hom_group(HG.group);
    CHECK(r.all_pass());
    CHECK(r.abelian);
    CHECK(r.regular);

    CHECK_THROWS_AS(hom_group_of_homomorphisms(catalog::twisted_s3(), G), structural_error);
}
