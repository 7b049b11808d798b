#include "homcat/poly.hpp"

#include <algorithm>

namespace homcat {

namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long long norm(long long c, long long p) {
    c %= p;
    return c < 0 ? c + p : c;
}

std::vector<uint32_t> substituted(const std::vector<uint32_t>& exps,
                                  const std::vector<uint32_t>& subst) {
    std::vector<uint32_t> out(exps.size());
    for (size_t i = 0; i < exps.size(); ++i) out[i] = exps[i] * subst[i];
    return out;
}

void add_term(TwistedPolynomial& P, std::vector<uint32_t> exps, long long c) {
    c = norm(c, P.p);
    if (c == 0) return;
    auto it = P.terms.find(exps);
    if (it == P.terms.end()) {
        P.terms.emplace(std::move(exps), c);
    } else {
        it->second = norm(it->second + c, P.p);
        if (it->second == 0) P.terms.erase(it);
    }
}

void require_compatible(const TwistedPolynomial& P, const TwistedPolynomial& Q) {
    if (P.p != Q.p || P.subst != Q.subst)
        throw structural_error("polynomial operands use different moduli or substitutions");
}

}  // namespace

TwistedPolynomial poly_zero(long long p, std::vector<uint32_t> subst) {
    if (p < 2) throw structural_error("polynomial modulus must be at least 2");
    TwistedPolynomial P;
    P.p = p;
    P.subst = std::move(subst);
    return P;
}

TwistedPolynomial poly_one(long long p, std::vector<uint32_t> subst) {
    auto P = poly_zero(p, std::move(subst));
    add_term(P, std::vector<uint32_t>(P.subst.size(), 0), 1);
    return P;
}

TwistedPolynomial poly_monomial(long long p, std::vector<uint32_t> subst,
                                std::vector<uint32_t> exps, long long coeff) {
    auto P = poly_zero(p, std::move(subst));
    if (exps.size() != P.subst.size())
        throw structural_error("polynomial monomial arity mismatch");
    add_term(P, std::move(exps), coeff);
    return P;
}

TwistedPolynomial poly_add(const TwistedPolynomial& P, const TwistedPolynomial& Q) {
    require_compatible(P, Q);
    auto R = poly_zero(P.p, P.subst);
    for (const auto& [e, c] : P.terms) add_term(R, substituted(e, P.subst), c);
    for (const auto& [e, c] : Q.terms) add_term(R, substituted(e, P.subst), c);
    return R;
}

TwistedPolynomial poly_mul(const TwistedPolynomial& P, const TwistedPolynomial& Q) {
    require_compatible(P, Q);
    auto R = poly_zero(P.p, P.subst);
    for (const auto& [e1, c1] : P.terms)
        for (const auto& [e2, c2] : Q.terms) {
            std::vector<uint32_t> d(e1.size());
            for (size_t i = 0; i < d.size(); ++i) d[i] = e1[i] + e2[i];
            add_term(R, substituted(d, P.subst), norm(c1 * c2, P.p));
        }
    return R;
}

TwistedPolynomial poly_alpha(const TwistedPolynomial& P) {
    auto R = poly_zero(P.p, P.subst);
    for (const auto& [e, c] : P.terms) add_term(R, substituted(e, P.subst), c);
    return R;
}

PolyOpsResult twisted_poly_ops(const TwistedPolynomial& P, const TwistedPolynomial& Q) {
    return {poly_add(P, Q), poly_mul(P, Q), poly_alpha(P)};
}

TwistedPolynomial random_poly(long long p, const std::vector<uint32_t>& subst, int max_degree,
                              int max_terms, uint64_t& state) {
    auto P = poly_zero(p, subst);
    int nt = 1 + static_cast<int>(splitmix64(state) % static_cast<uint64_t>(max_terms));
    for (int t = 0; t < nt; ++t) {
        std::vector<uint32_t> e(subst.size());
        for (auto& x : e) x = static_cast<uint32_t>(splitmix64(state) % (max_degree + 1));
        add_term(P, std::move(e), static_cast<long long>(splitmix64(state) % p));
    }
    return P;
}

PolyAxiomReport check_poly_identities(long long p, std::vector<uint32_t> subst, int rounds,
                                      int max_degree, uint64_t seed) {
    PolyAxiomReport rep;
    rep.rounds = rounds;
    uint64_t st = seed;
    auto one = poly_one(p, subst);
    for (int i = 0; i < rounds; ++i) {
        auto P = random_poly(p, subst, max_degree, 4, st);
        auto Q = random_poly(p, subst, max_degree, 4, st);
        auto R = random_poly(p, subst, max_degree, 4, st);
        // MK1 with beta = alpha-tilde
        if (poly_mul(poly_alpha(P), poly_mul(Q, R)) != poly_mul(poly_mul(P, Q), poly_alpha(R)))
            ++rep.mk1_failures;
        if (poly_mul(poly_alpha(P), poly_add(Q, R)) != poly_add(poly_mul(P, Q), poly_mul(P, R)))
            ++rep.mk2_failures;
        if (poly_mul(poly_add(Q, R), poly_alpha(P)) != poly_add(poly_mul(Q, P), poly_mul(R, P)))
            ++rep.mk3_failures;
        if (poly_mul(P, one) != poly_alpha(P) || poly_mul(one, P) != poly_alpha(P) ||
            poly_alpha(one) != one)
            ++rep.unit_failures;
    }
    return rep;
}

std::string format_poly(const TwistedPolynomial& P) {
    if (P.terms.empty()) return "0";
    static const char* names = "XYZUVW";
    std::string out;
    for (const auto& [e, c] : P.terms) {
        if (!out.empty()) out += " + ";
        out += std::to_string(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) {
                out += "*";
                out += (i < 6 ? std::string(1, names[i]) : "X" + std::to_string(i));
                if (e[i] > 1) out += "^" + std::to_string(e[i]);
            }
    }
    return out;
}

}  // namespace homcat
