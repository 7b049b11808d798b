#include <doctest.h>

#include "catalog.hpp"
#include "homcat/snf.hpp"
#include "homcat/tensor.hpp"

using namespace homcat;

TEST_CASE("smith quotient basics") {
    // Z^2 / <(2,0),(0,3)> = Z/2 x Z/3
    IntMat rel(2, 2);
    rel.at(0, 0) = 2;
    rel.at(1, 1) = 3;
    auto q = smith_quotient(rel, 2);
    CHECK(q.order() == 6);
    auto f = q.invariant_factors();
    long long prod = 1;
    for (long long d : f) prod *= d;
    CHECK(prod == 6);

    // relation lattice membership
    CHECK(q.in_lattice({2, 0}));
    CHECK(q.in_lattice({2, 3}));
    CHECK_FALSE(q.in_lattice({1, 0}));

    // Z^2 / <(1,1)> = Z (free part survives)
    IntMat rel2(1, 2);
    rel2.at(0, 0) = 1;
    rel2.at(0, 1) = 1;
    auto q2 = smith_quotient(rel2, 2);
    CHECK(q2.order() == 0);
}

TEST_CASE("smith invariant factor chain divides") {
    IntMat rel(3, 3);
    long long rows[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rel.at(i, j) = rows[i][j];
    auto q = smith_quotient(rel, 3);
    auto f = q.invariant_factors();
    for (size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i] != 0 && f[i + 1] != 0) CHECK(f[i + 1] % f[i] == 0);
    // the quotient order equals |det| for a full-rank square system
    long long prod = 1;
    for (long long d : q.diag) prod *= d;
    CHECK(prod == 624);  // |det [[2,4,4],[-6,6,12],[10,4,16]]|
}

TEST_CASE("is_hom_bilinear on hand examples") {
    auto Z2 = catalog::zn_id(2);
    auto Z3 = catalog::zn_id(3);

    // zero map is bilinear with all lemma consequences
    BilinearTable zero{Z2, Z3, Z2, Table(6, 0)};
    auto r = is_hom_bilinear(zero);
    CHECK(r.bilinear());
    CHECK(r.lemmas());

    // field product on F2
    BilinearTable mulf2{Z2, Z2, Z2, Table{0, 0, 0, 1}};
    CHECK(is_hom_bilinear(mulf2).bilinear());

    // the paper-construction map on (Z2, Z3) into Z2 x Z3 is not bilinear
    auto C = direct_product(Z2, Z3);
    Table f(6);
    for (Elt a = 0; a < 2; ++a)
        for (Elt b = 0; b < 3; ++b) f[a * 3 + b] = a * 3 + b;
    BilinearTable tau{Z2, Z3, C, f};
    auto rep = is_hom_bilinear(tau);
    CHECK_FALSE(rep.bilinear());
    REQUIRE(rep.first_witness().has_value());
    CHECK(rep.first_witness()->axiom == "bilinear-1");
    // the tuple a1=a2=1, b=1 is also a violation
    CHECK(f[Z2.m(1, 1) * 3 + Z3.a(1)] != C.m(f[1 * 3 + 1], f[1 * 3 + 1]));
}

TEST_CASE("tensor constructions on (Z2, Z3)") {
    auto Z2 = catalog::zn_id(2);
    auto Z3 = catalog::zn_id(3);

    auto paper = tensor_paper(Z2, Z3);
    CHECK(paper.carrier.n == 6);

    auto oracle = tensor_oracle(Z2, Z3);
    CHECK(oracle.carrier.n == 1);
    CHECK(oracle.invariant_factors.empty());

    auto vo = universal_property_check(Z2, Z3, oracle, catalog::zn_id(6));
    CHECK(vo.status == UniversalStatus::Satisfied);
    CHECK(vo.bilinear_maps_checked == 1);  // only the zero map

    auto vp = universal_property_check(Z2, Z3, paper, catalog::zn_id(6));
    CHECK(vp.status == UniversalStatus::Violated);
    REQUIRE(vp.witness.has_value());
    CHECK(vp.witness->axiom == "bilinear-1");
}

TEST_CASE("tensor oracle small catalog") {
    auto Z2 = catalog::zn_id(2);
    auto t22 = tensor_oracle(Z2, Z2);
    CHECK(t22.carrier.n == 2);
    CHECK(t22.invariant_factors == std::vector<long long>{2});

    auto t24 = tensor_oracle(Z2, catalog::zn_id(4));
    CHECK(t24.carrier.n == 2);

    auto S3 = catalog::twisted_s3();
    auto tss = tensor_oracle(S3, S3);
    CHECK(tss.carrier.n == 2);

    auto p = tensor_paper(S3, S3);
    CHECK(p.carrier.n == 4);  // ab(S3) x ab(S3)

    auto t66 = tensor_oracle(catalog::z6_5x(), catalog::z6_5x());
    CHECK(t66.carrier.n == 6);

    // A trivial factor collapses everything
    auto t1 = tensor_oracle(catalog::zn_id(1), Z2);
    CHECK(t1.carrier.n == 1);
}

TEST_CASE("symmetry of the oracle tensor") {
    auto Z2 = catalog::zn_id(2);
    auto Z3 = catalog::zn_id(3);
    CHECK(symmetry_check(Z2, Z3).isomorphic);
    CHECK(symmetry_check(Z2, Z2).isomorphic);
    CHECK(symmetry_check(Z2, catalog::zn_id(4)).isomorphic);
    auto v = symmetry_check(catalog::z6_5x(), Z2);
    CHECK(v.factors_match);
    CHECK(v.isomorphic);
}

TEST_CASE("universal check on the trivial pair") {
    auto T = catalog::zn_id(1);
    auto cand = tensor_oracle(T, T);
    CHECK(cand.carrier.n == 1);
    CHECK(universal_property_check(T, T, cand, catalog::zn_id(2)).status ==
          UniversalStatus::Satisfied);
}
