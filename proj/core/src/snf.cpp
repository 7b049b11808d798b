#include "homcat/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace homcat {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw internal_error("snf: multiplication overflow");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw internal_error("snf: addition overflow");
    return r;
}

long long emod(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<long long> SmithQuotient::invariant_factors() const {
    std::vector<long long> out;
    for (long long d : diag)
        if (d != 1) out.push_back(d);
    return out;
}

long long SmithQuotient::order() const {
    long long o = 1;
    for (long long d : diag) {
        if (d == 0) return 0;
        o = checked_mul(o, d);
    }
    return o;
}

std::vector<long long> SmithQuotient::coords(const std::vector<long long>& v) const {
    std::vector<long long> w(generators, 0);
    for (int i = 0; i < generators; ++i) {
        long long acc = 0;
        for (int j = 0; j < generators; ++j)
            acc = checked_add(acc, checked_mul(cinv.at(i, j), v[j]));
        w[i] = diag[i] > 0 ? emod(acc, diag[i]) : acc;
    }
    return w;
}

bool SmithQuotient::in_lattice(const std::vector<long long>& v) const {
    auto w = coords(v);
    return std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; });
}

SmithQuotient smith_quotient(const IntMat& relations_rows, int generators) {
    int r = std::max(relations_rows.rows, 1);
    IntMat M(r, generators);
    for (int i = 0; i < relations_rows.rows; ++i)
        for (int j = 0; j < generators; ++j) M.at(i, j) = relations_rows.at(i, j);

    IntMat cinv = IntMat::identity(generators);
    IntMat cfor = IntMat::identity(generators);  // inverse of cinv, maintained in lockstep

    auto row_add = [&](int dst, int src, long long k) {
        for (int c = 0; c < generators; ++c)
            M.at(dst, c) = checked_add(M.at(dst, c), checked_mul(k, M.at(src, c)));
    };
    auto row_swap = [&](int i, int j) {
        for (int c = 0; c < generators; ++c) std::swap(M.at(i, c), M.at(j, c));
    };
    auto row_neg = [&](int i) {
        for (int c = 0; c < generators; ++c) M.at(i, c) = -M.at(i, c);
    };
    // Column op on M: col_dst += k * col_src, i.e. M' = M * C with
    // C = I + k E(src,dst). The lattice transforms by C^T (row space of M
    // maps through v -> C^T v), so the coordinate matrix accumulates
    // cinv' = C^T * cinv and its inverse cfor' = cfor * (C^T)^-1.
    auto col_add = [&](int dst, int src, long long k) {
        for (int rr = 0; rr < r; ++rr)
            M.at(rr, dst) = checked_add(M.at(rr, dst), checked_mul(k, M.at(rr, src)));
        for (int c = 0; c < generators; ++c)
            cinv.at(dst, c) = checked_add(cinv.at(dst, c), checked_mul(k, cinv.at(src, c)));
        for (int rr = 0; rr < generators; ++rr)
            cfor.at(rr, src) = checked_add(cfor.at(rr, src), checked_mul(-k, cfor.at(rr, dst)));
    };
    auto col_swap = [&](int i, int j) {
        for (int rr = 0; rr < r; ++rr) std::swap(M.at(rr, i), M.at(rr, j));
        for (int c = 0; c < generators; ++c) std::swap(cinv.at(i, c), cinv.at(j, c));
        for (int rr = 0; rr < generators; ++rr) std::swap(cfor.at(rr, i), cfor.at(rr, j));
    };
    int s = 0;
    const int lim = std::min(r, generators);
    while (s < lim) {
        int pr = -1, pc = -1;
        long long best = 0;
        for (int i = s; i < r; ++i)
            for (int j = s; j < generators; ++j) {
                long long v = std::llabs(M.at(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        if (pr != s) row_swap(s, pr);
        if (pc != s) col_swap(s, pc);
        if (M.at(s, s) < 0) row_neg(s);

        bool dirty = false;
        for (int i = s + 1; i < r; ++i) {
            long long q = M.at(i, s) / M.at(s, s);
            if (q) row_add(i, s, -q);
            if (M.at(i, s)) dirty = true;
        }
        for (int j = s + 1; j < generators; ++j) {
            long long q = M.at(s, j) / M.at(s, s);
            if (q) col_add(j, s, -q);
            if (M.at(s, j)) dirty = true;
        }
        if (dirty) continue;

        bool fixed = false;
        for (int i = s + 1; i < r && !fixed; ++i)
            for (int j = s + 1; j < generators && !fixed; ++j)
                if (M.at(i, j) % M.at(s, s) != 0) {
                    row_add(s, i, 1);
                    fixed = true;
                }
        if (fixed) continue;
        ++s;
    }

    SmithQuotient q;
    q.generators = generators;
    q.diag.assign(generators, 0);
    for (int i = 0; i < lim; ++i) q.diag[i] = M.at(i, i);
    q.cinv = std::move(cinv);
    q.cinv_inv = std::move(cfor);
    return q;
}

}  // namespace homcat
