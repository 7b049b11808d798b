#include "homcat/tensor.hpp"

#include <algorithm>

#include "homcat/structure.hpp"

namespace homcat {

std::optional<FailureWitness> BilinearReport::first_witness() const {
    for (const AxiomVerdict* v : {&additive_left, &additive_right, &equivariance})
        if (!v->pass) return v->witness;
    return std::nullopt;
}

BilinearReport is_hom_bilinear(const BilinearTable& t) {
    const auto& A = t.A;
    const auto& B = t.B;
    const auto& C = t.C;
    if (!(A.regular() && B.regular() && C.regular()))
        throw structural_error("is_hom_bilinear: A, B, C must be regular");
    if (t.f.size() != static_cast<size_t>(A.n) * B.n)
        throw structural_error("is_hom_bilinear: bad table size");
    BilinearReport r;

    for (Elt a1 = 0; a1 < A.n && r.additive_left.pass; ++a1)
        for (Elt a2 = 0; a2 < A.n && r.additive_left.pass; ++a2)
            for (Elt b = 0; b < B.n; ++b)
                if (t.at(A.m(a1, a2), B.a(b)) != C.m(t.at(a1, b), t.at(a2, b))) {
                    r.additive_left = {false, FailureWitness{"bilinear-1", {a1, a2, b}}};
                    break;
                }
    for (Elt a = 0; a < A.n && r.additive_right.pass; ++a)
        for (Elt b1 = 0; b1 < B.n && r.additive_right.pass; ++b1)
            for (Elt b2 = 0; b2 < B.n; ++b2)
                if (t.at(A.a(a), B.m(b1, b2)) != C.m(t.at(a, b1), t.at(a, b2))) {
                    r.additive_right = {false, FailureWitness{"bilinear-2", {a, b1, b2}}};
                    break;
                }
    for (Elt a = 0; a < A.n && r.equivariance.pass; ++a)
        for (Elt b = 0; b < B.n; ++b)
            if (t.at(A.a(a), B.a(b)) != C.a(t.at(a, b))) {
                r.equivariance = {false, FailureWitness{"bilinear-3", {a, b}}};
                break;
            }
    if (!r.bilinear()) return r;

    for (Elt b = 0; b < B.n; ++b)
        if (t.at(A.e, b) != C.e) r.units_annihilate = false;
    for (Elt a = 0; a < A.n; ++a)
        if (t.at(a, B.e) != C.e) r.units_annihilate = false;
    for (Elt a = 0; a < A.n; ++a)
        for (Elt b = 0; b < B.n; ++b)
            if (t.at(A.inv[a], b) != C.inv[t.at(a, b)] || t.at(a, B.inv[b]) != C.inv[t.at(a, b)])
                r.inverse_rule = false;
    for (Elt a1 = 0; a1 < A.n && r.image_commutes; ++a1)
        for (Elt b1 = 0; b1 < B.n && r.image_commutes; ++b1)
            for (Elt a2 = 0; a2 < A.n && r.image_commutes; ++a2)
                for (Elt b2 = 0; b2 < B.n; ++b2) {
                    Elt x = t.at(a1, b1), y = t.at(a2, b2);
                    if (C.m(x, y) != C.m(y, x)) {
                        r.image_commutes = false;
                        break;
                    }
                }
    for (Elt a1 = 0; a1 < A.n && r.commutators_killed; ++a1)
        for (Elt a2 = 0; a2 < A.n && r.commutators_killed; ++a2) {
            Elt c = A.m(A.m(A.inv[a1], A.inv[a2]), A.m(a1, a2));
            for (Elt b = 0; b < B.n; ++b)
                if (t.at(c, b) != C.e) {
                    r.commutators_killed = false;
                    break;
                }
        }
    for (Elt b1 = 0; b1 < B.n && r.commutators_killed; ++b1)
        for (Elt b2 = 0; b2 < B.n && r.commutators_killed; ++b2) {
            Elt c = B.m(B.m(B.inv[b1], B.inv[b2]), B.m(b1, b2));
            for (Elt a = 0; a < A.n; ++a)
                if (t.at(a, c) != C.e) {
                    r.commutators_killed = false;
                    break;
                }
        }
    return r;
}

TensorCandidate tensor_paper(const FiniteHomGroup& A, const FiniteHomGroup& B) {
    if (!(A.regular() && B.regular())) throw structural_error("tensor_paper: inputs must be regular");
    auto abA = abelianization(A);
    auto abB = abelianization(B);
    TensorCandidate cand;
    cand.provenance = Provenance::PaperConstruction;
    cand.carrier = direct_product(abA.quotient.group, abB.quotient.group);
    cand.tau.resize(static_cast<size_t>(A.n) * B.n);
    const int hb = abB.quotient.group.n;
    for (Elt a = 0; a < A.n; ++a)
        for (Elt b = 0; b < B.n; ++b)
            cand.tau[static_cast<size_t>(a) * B.n + b] =
                abA.quotient.coset_of[a] * hb + abB.quotient.coset_of[b];
    return cand;
}

namespace {

long long index_of_full_coords(const std::vector<long long>& full, const std::vector<int>& live,
                               const std::vector<long long>& dims) {
    long long idx = 0;
    for (size_t i = live.size(); i-- > 0;) idx = idx * dims[i] + full[live[i]];
    return idx;
}

}  // namespace

Elt TwistedPresentation::class_of(const std::vector<long long>& generator_vec) const {
    return static_cast<Elt>(index_of_full_coords(q.coords(generator_vec), live, dims));
}

std::vector<long long> TwistedPresentation::lift(Elt x) const {
    const int gens = q.generators;
    std::vector<long long> full(gens, 0);
    long long idx = x;
    for (size_t i = 0; i < live.size(); ++i) {
        full[live[i]] = idx % dims[i];
        idx /= dims[i];
    }
    std::vector<long long> v(gens, 0);
    for (int i = 0; i < gens; ++i)
        for (int j = 0; j < gens; ++j) v[i] += q.cinv_inv.at(i, j) * full[j];
    return v;
}

TwistedPresentation present_twisted_abelian(const IntMat& relation_rows, int generators,
                                            const std::vector<int>& sigma_perm) {
    TwistedPresentation tp;
    tp.q = smith_quotient(relation_rows, generators);
    long long order = 1;
    for (int i = 0; i < generators; ++i)
        if (tp.q.diag[i] != 1) {
            tp.live.push_back(i);
            tp.dims.push_back(tp.q.diag[i]);
            if (tp.q.diag[i] == 0)
                throw budget_error("presented carrier is infinite (free invariant factor)");
            order *= tp.q.diag[i];
            if (order > budget().carrier)
                throw budget_error("presented carrier order exceeds budget");
        }
    tp.invariant_factors = tp.q.invariant_factors();
    const long long n = order;

    // sigma on the quotient, from the generator permutation.
    std::vector<Elt> sigma(n);
    for (long long idx = 0; idx < n; ++idx) {
        auto v = tp.lift(static_cast<Elt>(idx));
        std::vector<long long> pv(generators, 0);
        for (int g = 0; g < generators; ++g) pv[sigma_perm[g]] += v[g];
        sigma[idx] = static_cast<Elt>(index_of_full_coords(tp.q.coords(pv), tp.live, tp.dims));
    }

    auto& G = tp.carrier;
    G.n = static_cast<int>(n);
    G.e = 0;
    G.mul.resize(static_cast<size_t>(n) * n);
    G.alpha.resize(n);
    G.inv.resize(n);
    auto coords_of = [&](long long idx) {
        std::vector<long long> c(tp.live.size());
        for (size_t i = 0; i < tp.live.size(); ++i) {
            c[i] = idx % tp.dims[i];
            idx /= tp.dims[i];
        }
        return c;
    };
    for (long long x = 0; x < n; ++x) {
        G.alpha[x] = sigma[x];
        auto cx = coords_of(x);
        long long nidx = 0;
        for (size_t i = cx.size(); i-- > 0;) nidx = nidx * tp.dims[i] + (tp.dims[i] - cx[i]) % tp.dims[i];
        G.inv[x] = static_cast<Elt>(nidx);
        for (long long y = 0; y < n; ++y) {
            auto cy = coords_of(y);
            long long sidx = 0;
            for (size_t i = cx.size(); i-- > 0;) sidx = sidx * tp.dims[i] + (cx[i] + cy[i]) % tp.dims[i];
            G.mul[static_cast<size_t>(x) * n + y] = sigma[sidx];
        }
    }
    tp.generator_class.resize(generators);
    for (int g = 0; g < generators; ++g) {
        std::vector<long long> v(generators, 0);
        v[g] = 1;
        tp.generator_class[g] = tp.class_of(v);
    }
    if (!check_hom_group(G).all_pass())
        throw internal_error("present_twisted_abelian: carrier failed hom-group axioms");
    return tp;
}

TensorCandidate tensor_oracle(const FiniteHomGroup& A, const FiniteHomGroup& B) {
    if (!(A.regular() && B.regular())) throw structural_error("tensor_oracle: inputs must be regular");
    const int gens = A.n * B.n;
    auto gi = [&](Elt a, Elt b) { return a * B.n + b; };
    std::vector<std::vector<long long>> rel;
    auto add_rel = [&](int pos1, int neg1, int neg2) {
        std::vector<long long> v(gens, 0);
        v[pos1] += 1;
        v[neg1] -= 1;
        v[neg2] -= 1;
        if (std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; }))
            rel.push_back(std::move(v));
    };
    for (Elt a1 = 0; a1 < A.n; ++a1)
        for (Elt a2 = 0; a2 < A.n; ++a2)
            for (Elt b1 = 0; b1 < B.n; ++b1)
                add_rel(gi(A.m(a1, a2), B.a(b1)), gi(A.a(a1), B.a(b1)), gi(A.a(a2), B.a(b1)));
    for (Elt a1 = 0; a1 < A.n; ++a1)
        for (Elt b1 = 0; b1 < B.n; ++b1)
            for (Elt b2 = 0; b2 < B.n; ++b2)
                add_rel(gi(A.a(a1), B.m(b1, b2)), gi(A.a(a1), B.a(b1)), gi(A.a(a1), B.a(b2)));
    IntMat m(static_cast<int>(rel.size()), gens);
    for (size_t i = 0; i < rel.size(); ++i)
        for (int j = 0; j < gens; ++j) m.at(static_cast<int>(i), j) = rel[i][j];
    std::vector<int> perm(gens);
    for (Elt a = 0; a < A.n; ++a)
        for (Elt b = 0; b < B.n; ++b) perm[gi(a, b)] = gi(A.a(a), B.a(b));

    TensorCandidate cand;
    cand.provenance = Provenance::Oracle;
    cand.oracle = present_twisted_abelian(m, gens, perm);
    cand.carrier = cand.oracle->carrier;
    cand.invariant_factors = cand.oracle->invariant_factors;
    cand.tau.assign(cand.oracle->generator_class.begin(), cand.oracle->generator_class.end());

    BilinearTable tau{A, B, cand.carrier, cand.tau};
    auto rep = is_hom_bilinear(tau);
    if (!rep.bilinear() || !rep.lemmas())
        throw internal_error("tensor_oracle: canonical map failed Hom-bilinearity certification");
    return cand;
}

UniversalVerdict universal_property_check(const FiniteHomGroup& A, const FiniteHomGroup& B,
                                          const TensorCandidate& cand,
                                          const FiniteHomGroup& target) {
    UniversalVerdict v;
    if (!target.regular())
        throw structural_error("universal_property_check: target must be regular");

    BilinearTable tau{A, B, cand.carrier, cand.tau};
    auto taurep = is_hom_bilinear(tau);
    if (!taurep.bilinear()) {
        v.status = UniversalStatus::Violated;
        v.witness = taurep.first_witness();
        v.detail = "canonical map is not Hom-bilinear";
        return v;
    }

    const size_t cells = static_cast<size_t>(A.n) * B.n;
    double total = 1;
    for (size_t i = 0; i < cells; ++i) {
        total *= target.n;
        if (total > static_cast<double>(budget().bilinear_family)) {
            v.status = UniversalStatus::Truncated;
            v.detail = "bilinear family enumeration exceeds budget";
            return v;
        }
    }

    auto homs = enumerate_homomorphisms(cand.carrier, target);
    if (homs.truncated) {
        v.status = UniversalStatus::Truncated;
        v.detail = "factorization search truncated";
        return v;
    }

    Table f(cells, 0);
    while (true) {
        BilinearTable bt{A, B, target, f};
        if (is_hom_bilinear(bt).bilinear()) {
            ++v.bilinear_maps_checked;
            int count = 0;
            for (const auto& h : homs.maps) {
                bool factors = true;
                for (size_t i = 0; i < cells && factors; ++i)
                    factors = h.map[cand.tau[i]] == f[i];
                if (factors) ++count;
            }
            if (count != 1) {
                v.status = UniversalStatus::Violated;
                std::vector<Elt> wt(f.begin(), f.end());
                v.witness = FailureWitness{count == 0 ? "no-factorization" : "non-unique-factorization", wt};
                v.detail = count == 0 ? "a Hom-bilinear map admits no factorization"
                                      : "a Hom-bilinear map admits several factorizations";
                return v;
            }
        }
        size_t d = 0;
        while (d < cells && f[d] == target.n - 1) f[d++] = 0;
        if (d == cells) break;
        ++f[d];
    }
    return v;
}

SymmetryVerdict symmetry_check(const FiniteHomGroup& A, const FiniteHomGroup& B) {
    SymmetryVerdict out;
    auto tab = tensor_oracle(A, B);
    auto tba = tensor_oracle(B, A);
    out.factors_match = tab.invariant_factors == tba.invariant_factors;
    if (!out.factors_match) {
        out.detail = "invariant factors differ";
        return out;
    }
    const auto& qa = *tab.oracle;
    const auto& qb = *tba.oracle;
    const int n = tab.carrier.n;
    if (n != tba.carrier.n) {
        out.detail = "carrier orders differ";
        return out;
    }
    // Swap-induced map on generator space, pushed through both quotients.
    std::vector<Elt> h(n);
    std::vector<char> hit(n, 0);
    for (Elt x = 0; x < n; ++x) {
        auto w = qa.lift(x);
        std::vector<long long> sw(static_cast<size_t>(A.n) * B.n, 0);
        for (Elt a = 0; a < A.n; ++a)
            for (Elt b = 0; b < B.n; ++b) sw[static_cast<size_t>(b) * A.n + a] = w[static_cast<size_t>(a) * B.n + b];
        h[x] = qb.class_of(sw);
        hit[h[x]] = 1;
    }
    bool bijective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    bool hom = true;
    for (Elt x = 0; x < n && hom; ++x) {
        if (h[tab.carrier.a(x)] != tba.carrier.a(h[x])) hom = false;
        for (Elt y = 0; y < n; ++y)
            if (h[tab.carrier.m(x, y)] != tba.carrier.m(h[x], h[y])) {
                hom = false;
                break;
            }
    }
    bool tau_match = true;
    for (Elt a = 0; a < A.n; ++a)
        for (Elt b = 0; b < B.n; ++b)
            if (h[tab.tau[static_cast<size_t>(a) * B.n + b]] !=
                tba.tau[static_cast<size_t>(b) * A.n + a])
                tau_match = false;
    out.isomorphic = bijective && hom && tau_match;
    if (!out.isomorphic) out.detail = "swap-induced map failed verification";
    return out;
}

}  // namespace homcat
