#pragma once

#include <vector>

#include "homcat/types.hpp"

namespace homcat {

// Dense integer matrix, row-major.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    static IntMat identity(int n);
};

// Smith normal form of A (relations as rows over g generators):
// U * A^T ... we reduce A in place to D with unimodular row/column
// operations, tracking the generator-side transform: writing the original
// column space through C, coordinates transform by Cinv. For the quotient
// Z^g / rowspace(A):
//   diag     — the diagonal of D (nonnegative; may be shorter than g,
//              missing entries are zero, i.e. free coordinates)
//   coords(v) = (Cinv * v) reduced mod diag — canonical coordinates
//   lift: Cinv_inv maps canonical coordinates back to generator space.
// All arithmetic is exact; overflow raises internal_error.
struct SmithQuotient {
    int generators = 0;
    std::vector<long long> diag;  // length = generators
    IntMat cinv;                  // generators x generators
    IntMat cinv_inv;              // inverse of cinv

    // Invariant factors > 1 (the reported shape of the quotient group).
    std::vector<long long> invariant_factors() const;
    // Total order; 0 means infinite.
    long long order() const;
    // Canonical coordinates of a generator-space vector.
    std::vector<long long> coords(const std::vector<long long>& v) const;
    // Whether v lies in the relation lattice.
    bool in_lattice(const std::vector<long long>& v) const;
};

SmithQuotient smith_quotient(const IntMat& relations_rows, int generators);

}  // namespace homcat
