#pragma once

#include <map>
#include <string>
#include <vector>

#include "homcat/types.hpp"

namespace homcat {

// Sparse multivariate polynomial over F_p with the variable substitution
// defining the lifted twist: atilde(X_i) = X_i^subst[i]. Coefficients live
// in F_p, where the only ring endomorphism is the identity; the twist acts
// on monomials only. No zero coefficients are stored; exponents are
// non-negative; degree is unbounded (no truncation).
struct TwistedPolynomial {
    long long p = 5;
    std::vector<uint32_t> subst;                       // per variable
    std::map<std::vector<uint32_t>, long long> terms;  // exponent vector -> coeff

    int vars() const { return static_cast<int>(subst.size()); }
    bool operator==(const TwistedPolynomial& o) const {
        return p == o.p && subst == o.subst && terms == o.terms;
    }
};

TwistedPolynomial poly_zero(long long p, std::vector<uint32_t> subst);
TwistedPolynomial poly_one(long long p, std::vector<uint32_t> subst);
TwistedPolynomial poly_monomial(long long p, std::vector<uint32_t> subst,
                                std::vector<uint32_t> exps, long long coeff);

// The displayed operations: both shift every monomial through the
// substitution; the product convolves exponents first.
//   P +^ Q = sum_m (a_m + b_m) atilde(X)^m
//   P *^ Q = sum_d sum_{m+l=d} a_m b_l atilde(X)^d
//   atilde(P) = sum_m a_m atilde(X)^m
TwistedPolynomial poly_add(const TwistedPolynomial& P, const TwistedPolynomial& Q);
TwistedPolynomial poly_mul(const TwistedPolynomial& P, const TwistedPolynomial& Q);
TwistedPolynomial poly_alpha(const TwistedPolynomial& P);

struct PolyOpsResult {
    TwistedPolynomial sum, product, alpha_image;
};
PolyOpsResult twisted_poly_ops(const TwistedPolynomial& P, const TwistedPolynomial& Q);

// Sampled type (1) identity checks (the carrier is infinite): MK1, MK2, MK3
// and the unit laws on random triples of bounded degree.
struct PolyAxiomReport {
    int rounds = 0;
    int mk1_failures = 0;
    int mk2_failures = 0;
    int mk3_failures = 0;
    int unit_failures = 0;
    bool ok() const {
        return mk1_failures == 0 && mk2_failures == 0 && mk3_failures == 0 && unit_failures == 0;
    }
};
PolyAxiomReport check_poly_identities(long long p, std::vector<uint32_t> subst, int rounds,
                                      int max_degree, uint64_t seed);

TwistedPolynomial random_poly(long long p, const std::vector<uint32_t>& subst, int max_degree,
                              int max_terms, uint64_t& state);

std::string format_poly(const TwistedPolynomial& P);

}  // namespace homcat
