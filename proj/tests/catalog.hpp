#pragma once

// Shared example structures used across the test suites: cyclic twists,
// the conjugation-twisted S3, twisted group rings and small modules.

#include <algorithm>
#include <numeric>

#include "homcat/group.hpp"
#include "homcat/module.hpp"
#include "homcat/ring.hpp"

namespace catalog {

using namespace homcat;

inline Table zmod_add_table(int n) {
    Table t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return t;
}

inline Table scaling_endo(int n, int k) {
    Table t(n);
    for (int x = 0; x < n; ++x) t[x] = (k * x) % n;
    return t;
}

// (Z/n, x*y = k(x+y), alpha = kx, inv = -x)
inline FiniteHomGroup zn_twist(int n, int k) {
    return twist_group(zmod_add_table(n), scaling_endo(n, k));
}

inline FiniteHomGroup z6_5x() { return zn_twist(6, 5); }
inline FiniteHomGroup z4_2x() { return zn_twist(4, 2); }
inline FiniteHomGroup zn_id(int n) { return zn_twist(n, 1); }

// S3 as the six permutations of {0,1,2} in lexicographic order;
// composition (p*q)(x) = p(q(x)). Element 2 is the transposition (0 1).
struct S3Tables {
    Table mul;      // 6x6
    Table inv;      // 6
    Table conj;     // conjugation by the transposition t = element 2
    int t = 2;
    int rot = 3;    // a 3-cycle
};

inline S3Tables s3_tables() {
    int perms[6][3];
    {
        int p[3] = {0, 1, 2};
        for (int i = 0; i < 6; ++i) {
            std::copy(p, p + 3, perms[i]);
            std::next_permutation(p, p + 3);
        }
    }
    auto index_of = [&](const int* q) {
        for (int i = 0; i < 6; ++i)
            if (std::equal(q, q + 3, perms[i])) return i;
        return -1;
    };
    S3Tables s;
    s.mul.resize(36);
    s.inv.resize(6);
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            int c[3];
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            s.mul[static_cast<size_t>(a) * 6 + b] = index_of(c);
        }
        int iv[3];
        for (int x = 0; x < 3; ++x) iv[perms[a][x]] = x;
        s.inv[a] = index_of(iv);
    }
    s.conj.resize(6);
    for (int g = 0; g < 6; ++g)
        s.conj[g] = s.mul[static_cast<size_t>(s.mul[static_cast<size_t>(s.t) * 6 + g]) * 6 + s.t];
    return s;
}

inline FiniteHomGroup twisted_s3() {
    auto s = s3_tables();
    return twist_group(s.mul, s.conj);
}

// F2[C3] twisted by the automorphism g -> g^2 (8 elements).
inline GroupRingBasis f2c3_twist() {
    Table c3(9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) c3[static_cast<size_t>(a) * 3 + b] = (a + b) % 3;
    Table sq = {0, 2, 1};
    return twisted_group_ring(c3, sq, 2);
}

// F2[S3] twisted by conjugation (64 elements).
inline GroupRingBasis f2s3_twist() {
    auto s = s3_tables();
    return twisted_group_ring(s.mul, s.conj, 2);
}

// Z/6 with the idempotent ring endomorphism x -> 3x (non-regular twist).
inline FiniteHomRing z6_3x_ring() {
    RingTables R;
    R.n = 6;
    R.zero = 0;
    R.one = 1;
    R.add.resize(36);
    R.mul.resize(36);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            R.add[static_cast<size_t>(a) * 6 + b] = (a + b) % 6;
            R.mul[static_cast<size_t>(a) * 6 + b] = (a * b) % 6;
        }
    return twist_ring(R, scaling_endo(6, 3), scaling_endo(6, 3), 1);
}

// F2 x F2 twisted by the coordinate swap; element index is 2a + b.
inline FiniteHomRing f2xf2_swap_ring() {
    RingTables R;
    R.n = 4;
    R.zero = 0;
    R.one = 3;
    R.add.resize(16);
    R.mul.resize(16);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            R.add[static_cast<size_t>(x) * 4 + y] = x ^ y;
            R.mul[static_cast<size_t>(x) * 4 + y] = x & y;
        }
    Table swap = {0, 2, 1, 3};
    return twist_ring(R, swap, swap, 1);
}

// The swap module: compatible module F2 (+) F2 with a |> (x,y) = (a1 x, a2 y)
// and beta the coordinate swap. Simple, regular, beta-orbit length 2.
inline FiniteHomModule swap_module() {
    auto A = f2xf2_swap_ring();
    OrdinaryModule P;
    P.ring = compatible_ring(A);
    P.m = 4;
    P.mzero = 0;
    P.add.resize(16);
    P.act.resize(16);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) P.add[static_cast<size_t>(x) * 4 + y] = x ^ y;
    for (int a = 0; a < 4; ++a)
        for (int x = 0; x < 4; ++x) P.act[static_cast<size_t>(a) * 4 + x] = a & x;
    Table beta = {0, 2, 1, 3};
    return hom_module_from_compatible(A, P, beta);
}

// F2 as the identity-twist Hom-ring.
inline FiniteHomRing f2_ring() {
    FiniteHomRing A;
    A.n = 2;
    A.zero = 0;
    A.one = 1;
    A.ring_type = 1;
    A.add = {0, 1, 1, 0};
    A.mul = {0, 0, 0, 1};
    A.alpha = {0, 1};
    A.beta = {0, 1};
    A.add_inv = {0, 1};
    return A;
}

// (Z/4, x + y -> 2(x+y), beta = 2x) as a module over F2: 1 acts as beta.
// ker beta = {0, 2} is a proper submodule, so the module is never simple.
inline FiniteHomModule z4_beta2_module() {
    FiniteHomModule M;
    M.ring = f2_ring();
    M.m = 4;
    M.mzero = 0;
    M.madd.resize(16);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) M.madd[static_cast<size_t>(x) * 4 + y] = (2 * (x + y)) % 4;
    M.beta = {0, 2, 0, 2};
    M.madd_inv = {0, 1, 2, 3};
    M.act_left.resize(8);
    for (int x = 0; x < 4; ++x) {
        M.act_left[x] = 0;
        M.act_left[4 + x] = M.beta[x];
    }
    return M;
}

// F2 as the trivial (augmentation) module over the F2[C3] twist.
inline FiniteHomModule f2c3_trivial_module() {
    auto R = f2c3_twist();
    FiniteHomModule M;
    M.ring = R.ring;
    M.m = 2;
    M.mzero = 0;
    M.madd = {0, 1, 1, 0};
    M.beta = {0, 1};
    M.madd_inv = {0, 1};
    M.act_left.resize(static_cast<size_t>(R.ring.n) * 2);
    for (Elt a = 0; a < R.ring.n; ++a) {
        // augmentation: sum of coefficients mod 2
        int aug = 0, v = a;
        for (int i = 0; i < R.group_order; ++i) {
            aug ^= v % R.p;
            v /= R.p;
        }
        M.act_left[static_cast<size_t>(a) * 2 + 0] = 0;
        M.act_left[static_cast<size_t>(a) * 2 + 1] = aug;
    }
    return M;
}

}  // namespace catalog
