#include "homcat/ring.hpp"

#include <algorithm>
#include <functional>

namespace homcat {

bool FiniteHomRing::regular() const {
    std::vector<char> sa(n, 0), sb(n, 0);
    for (Elt x = 0; x < n; ++x) {
        sa[alpha[x]] = 1;
        sb[beta[x]] = 1;
    }
    auto full = [&](const std::vector<char>& v) {
        return std::all_of(v.begin(), v.end(), [](char c) { return c != 0; });
    };
    return full(sa) && full(sb);
}

FiniteHomGroup FiniteHomRing::additive_group() const {
    FiniteHomGroup G;
    G.n = n;
    G.e = zero;
    G.mul = add;
    G.alpha = alpha;
    G.inv = add_inv;
    return G;
}

void validate_tables(const FiniteHomRing& A) {
    if (A.n <= 0) throw structural_error("hom-ring: order must be positive");
    if (A.ring_type != 1 && A.ring_type != 2) throw structural_error("hom-ring: type must be 1 or 2");
    auto chk = [&](const Table& t, size_t len, const char* name) {
        if (t.size() != len) throw structural_error(std::string("hom-ring: bad ") + name + " size");
        for (Elt v : t)
            if (v < 0 || v >= A.n)
                throw structural_error(std::string("hom-ring: ") + name + " entry out of range");
    };
    chk(A.add, static_cast<size_t>(A.n) * A.n, "add");
    chk(A.mul, static_cast<size_t>(A.n) * A.n, "mul");
    chk(A.alpha, A.n, "alpha");
    chk(A.beta, A.n, "beta");
    chk(A.add_inv, A.n, "add_inv");
    if (A.zero < 0 || A.zero >= A.n) throw structural_error("hom-ring: zero out of range");
    if (A.one && (*A.one < 0 || *A.one >= A.n))
        throw structural_error("hom-ring: one out of range");
}

bool RingReport::all_pass() const {
    if (!(additive.all_pass() && additive_abelian)) return false;
    for (const AxiomVerdict* v : {&beta_additive, &beta_commutes, &alpha_multiplicative,
                                  &beta_multiplicative, &hom_associativity, &left_distributive,
                                  &right_distributive, &unit_laws, &unit_fixed})
        if (!v->pass) return false;
    return zero_laws && negation_laws && beta_derivation;
}

std::optional<FailureWitness> RingReport::first_witness() const {
    if (!additive.all_pass()) return additive.first_witness();
    if (!additive_abelian) return FailureWitness{"additive-commutativity", {}};
    for (const AxiomVerdict* v : {&beta_additive, &beta_commutes, &alpha_multiplicative,
                                  &beta_multiplicative, &hom_associativity, &left_distributive,
                                  &right_distributive, &unit_laws, &unit_fixed})
        if (!v->pass) return v->witness;
    if (!zero_laws) return FailureWitness{"zero-law", {}};
    if (!negation_laws) return FailureWitness{"negation-law", {}};
    return std::nullopt;
}

RingReport check_hom_ring(const FiniteHomRing& A) {
    validate_tables(A);
    RingReport r;
    const int n = A.n;

    r.additive = check_hom_group(A.additive_group());
    r.additive_abelian = A.additive_group().abelian();

    for (Elt x = 0; x < n && r.beta_additive.pass; ++x)
        for (Elt y = 0; y < n; ++y)
            if (A.b(A.ad(x, y)) != A.ad(A.b(x), A.b(y))) {
                r.beta_additive = {false, FailureWitness{"beta-additive", {x, y}}};
                break;
            }
    for (Elt x = 0; x < n; ++x)
        if (A.a(A.b(x)) != A.b(A.a(x))) {
            r.beta_commutes = {false, FailureWitness{"alpha-beta-commute", {x}}};
            break;
        }
    for (Elt x = 0; x < n && r.alpha_multiplicative.pass; ++x)
        for (Elt y = 0; y < n; ++y)
            if (A.a(A.ml(x, y)) != A.ml(A.a(x), A.a(y))) {
                r.alpha_multiplicative = {false, FailureWitness{"alpha-multiplicative", {x, y}}};
                break;
            }
    for (Elt x = 0; x < n && r.beta_multiplicative.pass; ++x)
        for (Elt y = 0; y < n; ++y)
            if (A.b(A.ml(x, y)) != A.ml(A.b(x), A.b(y))) {
                r.beta_multiplicative = {false, FailureWitness{"beta-multiplicative", {x, y}}};
                break;
            }

    if (A.ring_type == 1) {
        for (Elt x = 0; x < n && r.hom_associativity.pass; ++x)
            for (Elt y = 0; y < n && r.hom_associativity.pass; ++y)
                for (Elt z = 0; z < n; ++z)
                    if (A.ml(A.b(x), A.ml(y, z)) != A.ml(A.ml(x, y), A.b(z))) {
                        r.hom_associativity = {false, FailureWitness{"MK1", {x, y, z}}};
                        break;
                    }
        for (Elt x = 0; x < n && r.left_distributive.pass; ++x)
            for (Elt y = 0; y < n && r.left_distributive.pass; ++y)
                for (Elt z = 0; z < n; ++z)
                    if (A.ml(A.a(x), A.ad(y, z)) != A.ad(A.ml(x, y), A.ml(x, z))) {
                        r.left_distributive = {false, FailureWitness{"MK2", {x, y, z}}};
                        break;
                    }
        for (Elt x = 0; x < n && r.right_distributive.pass; ++x)
            for (Elt y = 0; y < n && r.right_distributive.pass; ++y)
                for (Elt z = 0; z < n; ++z)
                    if (A.ml(A.ad(y, z), A.a(x)) != A.ad(A.ml(y, x), A.ml(z, x))) {
                        r.right_distributive = {false, FailureWitness{"MK3", {x, y, z}}};
                        break;
                    }
        if (A.one) {
            Elt u = *A.one;
            for (Elt x = 0; x < n; ++x)
                if (A.ml(x, u) != A.b(x) || A.ml(u, x) != A.b(x)) {
                    r.unit_laws = {false, FailureWitness{"MK4", {x}}};
                    break;
                }
            if (A.a(u) != u || A.b(u) != u)
                r.unit_fixed = {false, FailureWitness{"MK5", {u}}};
        }
    } else {
        for (Elt x = 0; x < n && r.hom_associativity.pass; ++x)
            for (Elt y = 0; y < n && r.hom_associativity.pass; ++y)
                for (Elt z = 0; z < n; ++z) {
                    Elt lhs = A.ml(A.b(A.a(A.a(x))), A.ml(A.b(A.a(y)), A.b(A.b(z))));
                    Elt rhs = A.ml(A.ml(A.a(A.a(x)), A.b(A.a(y))), A.b(A.b(A.a(z))));
                    if (lhs != rhs) {
                        r.hom_associativity = {false, FailureWitness{"type2-hom-assoc", {x, y, z}}};
                        break;
                    }
                }
        for (Elt x = 0; x < n && r.left_distributive.pass; ++x)
            for (Elt y = 0; y < n && r.left_distributive.pass; ++y)
                for (Elt z = 0; z < n; ++z)
                    if (A.ml(A.a(A.a(x)), A.b(A.ad(y, z))) !=
                        A.ad(A.ml(A.a(x), A.b(y)), A.ml(A.a(x), A.b(z)))) {
                        r.left_distributive = {false, FailureWitness{"type2-left-dist", {x, y, z}}};
                        break;
                    }
        for (Elt x = 0; x < n && r.right_distributive.pass; ++x)
            for (Elt y = 0; y < n && r.right_distributive.pass; ++y)
                for (Elt z = 0; z < n; ++z)
                    if (A.ml(A.a(A.ad(y, z)), A.a(A.b(x))) !=
                        A.ad(A.ml(A.a(y), A.b(x)), A.ml(A.a(z), A.b(x)))) {
                        r.right_distributive = {false, FailureWitness{"type2-right-dist", {x, y, z}}};
                        break;
                    }
        if (A.one) {
            Elt u = *A.one;
            for (Elt x = 0; x < n; ++x)
                if (A.ml(x, u) != A.b(x) || A.ml(u, x) != A.a(x)) {
                    r.unit_laws = {false, FailureWitness{"type2-unit", {x}}};
                    break;
                }
            if (A.a(u) != u || A.b(u) != u)
                r.unit_fixed = {false, FailureWitness{"type2-unit-fixed", {u}}};
        }
    }

    if (A.one && A.regular() && r.additive.all_pass() && r.hom_associativity.pass &&
        r.left_distributive.pass && r.right_distributive.pass && r.unit_laws.pass &&
        r.unit_fixed.pass) {
        for (Elt a = 0; a < n; ++a)
            if (A.ml(a, A.zero) != A.zero || A.ml(A.zero, a) != A.zero) {
                r.zero_laws = false;
                break;
            }
        for (Elt a = 0; a < n && r.negation_laws; ++a)
            for (Elt b = 0; b < n; ++b)
                if (A.ml(A.neg(a), b) != A.neg(A.ml(a, b)) ||
                    A.ml(a, A.neg(b)) != A.neg(A.ml(a, b))) {
                    r.negation_laws = false;
                    break;
                }
    }
    if (A.ring_type == 1 && A.one && r.additive.all_pass() && r.hom_associativity.pass &&
        r.left_distributive.pass && r.unit_laws.pass && r.unit_fixed.pass)
        r.beta_derivation = r.beta_additive.pass && r.beta_commutes.pass && r.beta_multiplicative.pass;
    return r;
}

void validate_ordinary_ring(const RingTables& R) {
    const int n = R.n;
    if (n <= 0) throw structural_error("ring: order must be positive");
    if (R.add.size() != static_cast<size_t>(n) * n || R.mul.size() != static_cast<size_t>(n) * n)
        throw structural_error("ring: bad table size");
    auto ad = [&](Elt x, Elt y) { return R.add[static_cast<size_t>(x) * n + y]; };
    auto ml = [&](Elt x, Elt y) { return R.mul[static_cast<size_t>(x) * n + y]; };
    for (Elt x = 0; x < n; ++x)
        if (ad(x, R.zero) != x || ad(R.zero, x) != x)
            throw structural_error("ring: zero is not an additive identity");
    for (Elt x = 0; x < n; ++x) {
        bool has = false;
        for (Elt y = 0; y < n && !has; ++y) has = ad(x, y) == R.zero && ad(y, x) == R.zero;
        if (!has) throw structural_error("ring: element lacks additive inverse");
    }
    for (Elt x = 0; x < n; ++x)
        for (Elt y = 0; y < n; ++y) {
            if (ad(x, y) != ad(y, x)) throw structural_error("ring: addition not commutative");
            for (Elt z = 0; z < n; ++z) {
                if (ad(ad(x, y), z) != ad(x, ad(y, z)))
                    throw structural_error("ring: addition not associative");
                if (ml(ml(x, y), z) != ml(x, ml(y, z)))
                    throw structural_error("ring: multiplication not associative");
                if (ml(x, ad(y, z)) != ad(ml(x, y), ml(x, z)) ||
                    ml(ad(x, y), z) != ad(ml(x, z), ml(y, z)))
                    throw structural_error("ring: distributivity fails");
            }
        }
    if (R.one)
        for (Elt x = 0; x < n; ++x)
            if (ml(x, *R.one) != x || ml(*R.one, x) != x)
                throw structural_error("ring: claimed unit is not a unit");
}

namespace {

void require_ring_endo(const RingTables& R, const Table& f, const char* name) {
    const int n = R.n;
    if (f.size() != static_cast<size_t>(n)) throw structural_error("twist_ring: bad endo size");
    auto ad = [&](Elt x, Elt y) { return R.add[static_cast<size_t>(x) * n + y]; };
    auto ml = [&](Elt x, Elt y) { return R.mul[static_cast<size_t>(x) * n + y]; };
    for (Elt x = 0; x < n; ++x)
        for (Elt y = 0; y < n; ++y) {
            if (f[ad(x, y)] != ad(f[x], f[y]))
                throw structural_error(std::string("twist_ring: ") + name +
                                       " not additive at (" + std::to_string(x) + "," +
                                       std::to_string(y) + ")");
            if (f[ml(x, y)] != ml(f[x], f[y]))
                throw structural_error(std::string("twist_ring: ") + name +
                                       " not multiplicative at (" + std::to_string(x) + "," +
                                       std::to_string(y) + ")");
        }
}

}  // namespace

FiniteHomRing twist_ring(const RingTables& R, const Table& alpha, const Table& beta,
                         int target_type) {
    validate_ordinary_ring(R);
    require_ring_endo(R, alpha, "alpha");
    require_ring_endo(R, beta, "beta");
    const int n = R.n;
    for (Elt x = 0; x < n; ++x)
        if (alpha[beta[x]] != beta[alpha[x]])
            throw structural_error("twist_ring: alpha and beta do not commute at " +
                                   std::to_string(x));

    FiniteHomRing A;
    A.n = n;
    A.zero = R.zero;
    A.ring_type = target_type;
    A.alpha = alpha;
    A.beta = beta;
    A.add.resize(static_cast<size_t>(n) * n);
    A.mul.resize(static_cast<size_t>(n) * n);
    A.add_inv.resize(n);
    auto ad = [&](Elt x, Elt y) { return R.add[static_cast<size_t>(x) * n + y]; };
    auto ml = [&](Elt x, Elt y) { return R.mul[static_cast<size_t>(x) * n + y]; };
    for (Elt x = 0; x < n; ++x) {
        for (Elt y = 0; y < n; ++y) {
            A.add[static_cast<size_t>(x) * n + y] = alpha[ad(x, y)];
            A.mul[static_cast<size_t>(x) * n + y] =
                target_type == 1 ? beta[ml(x, y)] : ml(beta[x], alpha[y]);
        }
        for (Elt y = 0; y < n; ++y)
            if (ad(x, y) == R.zero) {
                A.add_inv[x] = y;
                break;
            }
    }
    // Unit of the twist: scan for an element satisfying the unit laws of the
    // declared type (for a unital base ring this is endo(1) when it works).
    for (Elt u = 0; u < n && !A.one; ++u) {
        if (A.a(u) != u || A.b(u) != u) continue;
        bool ok = true;
        for (Elt x = 0; x < n && ok; ++x) {
            if (A.ring_type == 1)
                ok = A.ml(x, u) == A.b(x) && A.ml(u, x) == A.b(x);
            else
                ok = A.ml(x, u) == A.b(x) && A.ml(u, x) == A.a(x);
        }
        if (ok) A.one = u;
    }
    if (!check_hom_ring(A).all_pass())
        throw internal_error("twist_ring: constructed structure fails the declared axioms");
    return A;
}

RingTables compatible_ring(const FiniteHomRing& A) {
    if (!A.regular()) throw structural_error("compatible_ring: input must be regular");
    const int n = A.n;
    Table ai(n), bi(n);
    for (Elt x = 0; x < n; ++x) {
        ai[A.a(x)] = x;
        bi[A.b(x)] = x;
    }
    RingTables R;
    R.n = n;
    R.zero = A.zero;
    R.add.resize(static_cast<size_t>(n) * n);
    R.mul.resize(static_cast<size_t>(n) * n);
    for (Elt x = 0; x < n; ++x)
        for (Elt y = 0; y < n; ++y) {
            R.add[static_cast<size_t>(x) * n + y] = ai[A.ad(x, y)];
            R.mul[static_cast<size_t>(x) * n + y] =
                A.ring_type == 1 ? bi[A.ml(x, y)] : A.ml(bi[x], ai[y]);
        }
    for (Elt u = 0; u < n && !R.one; ++u) {
        bool ok = true;
        for (Elt x = 0; x < n && ok; ++x)
            ok = R.mul[static_cast<size_t>(x) * n + u] == x &&
                 R.mul[static_cast<size_t>(u) * n + x] == x;
        if (ok) R.one = u;
    }
    validate_ordinary_ring(R);
    return R;
}

bool compatible_round_trip_exact(const FiniteHomRing& A) {
    auto R = compatible_ring(A);
    auto back = twist_ring(R, A.alpha, A.beta, A.ring_type);
    return back.add == A.add && back.mul == A.mul && back.alpha == A.alpha &&
           back.beta == A.beta && back.zero == A.zero;
}

bool TypeEquivalenceReport::all_pass() const {
    return std::all_of(identities.begin(), identities.end(),
                       [](const auto& p) { return p.second.pass; });
}

TypeEquivalenceReport type_equivalence_check(const FiniteHomRing& A) {
    if (!A.regular()) throw structural_error("type_equivalence_check: input must be regular");
    if (A.alpha != A.beta)
        throw structural_error("type_equivalence_check: requires an alpha-Hom-ring (alpha == beta)");
    const int n = A.n;
    Table ai(n);
    for (Elt x = 0; x < n; ++x) ai[A.a(x)] = x;

    TypeEquivalenceReport rep;
    auto run = [&](const std::string& name, auto&& pred) {
        AxiomVerdict v;
        for (Elt x = 0; x < n && v.pass; ++x)
            for (Elt y = 0; y < n && v.pass; ++y)
                for (Elt z = 0; z < n; ++z)
                    if (!pred(x, y, z)) {
                        v = {false, FailureWitness{name, {x, y, z}}};
                        break;
                    }
        rep.identities.emplace_back(name, v);
    };
    auto a = [&](Elt x) { return A.a(x); };
    auto b = [&](Elt x) { return A.b(x); };
    run("L6.1-1", [&](Elt x, Elt y, Elt z) {
        return A.ml(b(a(a(x))), A.ml(b(a(y)), b(b(z)))) ==
               A.ml(a(A.ml(a(x), b(y))), b(b(b(z))));
    });
    run("L6.1-2", [&](Elt x, Elt y, Elt z) {
        return A.ml(A.ml(a(a(x)), b(a(y))), b(b(a(z)))) == b(a(A.ml(a(x), A.ml(y, z))));
    });
    run("L6.1-3", [&](Elt x, Elt y, Elt z) {
        return A.ml(a(a(x)), b(A.ad(y, z))) == A.ad(A.ml(a(x), b(y)), A.ml(a(x), b(z)));
    });
    run("L6.1-4", [&](Elt x, Elt y, Elt z) {
        return A.ml(a(A.ad(y, z)), a(b(x))) == A.ad(A.ml(a(y), b(x)), A.ml(a(z), b(x)));
    });
    run("L6.2-1", [&](Elt x, Elt y, Elt z) {
        return A.ml(b(x), A.ml(y, z)) == A.ml(A.ml(x, y), a(z));
    });
    run("L6.2-2", [&](Elt x, Elt y, Elt z) {
        return A.ml(A.ml(x, y), b(z)) == A.ml(b(x), A.ml(y, b(ai[z])));
    });
    run("L6.2-3", [&](Elt x, Elt y, Elt z) {
        return A.ml(a(x), A.ad(y, z)) == A.ad(A.ml(x, y), A.ml(x, z));
    });
    run("L6.2-4", [&](Elt x, Elt y, Elt z) {
        return A.ml(A.ad(y, z), a(x)) == A.ad(A.ml(y, x), A.ml(z, x));
    });
    return rep;
}

RingCenter ring_center(const FiniteHomRing& A) {
    if (!A.one || !A.regular())
        throw structural_error("ring_center: input must be unitary regular");
    const int n = A.n;
    RingCenter c;
    c.members = SubSet(n);
    for (Elt x = 0; x < n; ++x) {
        bool central = true;
        for (Elt t = 0; t < n && central; ++t)
            central = A.ring_type == 1 ? A.ml(x, t) == A.ml(t, x)
                                       : A.ml(x, A.b(t)) == A.ml(A.a(t), x);
        if (central) c.members.add(x);
    }
    auto inside = [&](Elt v) { return c.members.contains(v); };
    c.closed_add = c.closed_neg = c.closed_mul = c.closed_alpha = c.closed_beta = true;
    for (Elt x : c.members.elements()) {
        if (!inside(A.neg(x))) c.closed_neg = false;
        if (!inside(A.a(x))) c.closed_alpha = false;
        if (!inside(A.b(x))) c.closed_beta = false;
        for (Elt y : c.members.elements()) {
            if (!inside(A.ad(x, y))) c.closed_add = false;
            if (!inside(A.ml(x, y))) c.closed_mul = false;
        }
    }
    c.has_zero = inside(A.zero);
    c.has_one = inside(*A.one);
    return c;
}

EndomorphismRing endomorphism_hom_ring(const FiniteHomGroup& M) {
    if (!(M.regular() && M.abelian()))
        throw structural_error("endomorphism_hom_ring: M must be abelian regular");
    auto search = enumerate_homomorphisms(M, M);
    if (search.truncated) throw budget_error("endomorphism_hom_ring: enumeration truncated");
    std::vector<Table> elems;
    for (auto& h : search.maps) elems.push_back(h.map);
    const int m = static_cast<int>(elems.size());
    auto index_of = [&](const Table& f) -> Elt {
        for (int i = 0; i < m; ++i)
            if (elems[i] == f) return i;
        throw internal_error("endomorphism_hom_ring: operation left the endomorphism set");
    };

    EndomorphismRing out;
    auto& A = out.ring;
    A.n = m;
    A.ring_type = 1;
    A.add.resize(static_cast<size_t>(m) * m);
    A.mul.resize(static_cast<size_t>(m) * m);
    A.alpha.resize(m);
    A.beta.resize(m);
    A.add_inv.resize(m);
    A.zero = index_of(Table(M.n, M.e));
    for (int i = 0; i < m; ++i) {
        Table af(M.n), nf(M.n);
        for (Elt x = 0; x < M.n; ++x) {
            af[x] = M.a(elems[i][x]);
            nf[x] = M.inv[elems[i][x]];
        }
        A.alpha[i] = index_of(af);
        A.beta[i] = i;
        A.add_inv[i] = index_of(nf);
        for (int j = 0; j < m; ++j) {
            Table sum(M.n), comp(M.n);
            for (Elt x = 0; x < M.n; ++x) {
                sum[x] = M.m(elems[i][x], elems[j][x]);
                comp[x] = elems[i][elems[j][x]];
            }
            A.add[static_cast<size_t>(i) * m + j] = index_of(sum);
            A.mul[static_cast<size_t>(i) * m + j] = index_of(comp);
        }
    }
    Table id(M.n);
    for (Elt x = 0; x < M.n; ++x) id[x] = x;
    Elt idx = index_of(id);
    bool unit_ok = A.a(idx) == idx && A.b(idx) == idx;
    for (Elt x = 0; x < m && unit_ok; ++x)
        unit_ok = A.ml(x, idx) == A.b(x) && A.ml(idx, x) == A.b(x);
    if (unit_ok) A.one = idx;
    out.elements = std::move(elems);
    return out;
}

GroupRingBasis twisted_group_ring(const Table& group_mul, const Table& automorphism, int p) {
    const int g = static_cast<int>(automorphism.size());
    if (group_mul.size() != static_cast<size_t>(g) * g)
        throw structural_error("twisted_group_ring: table size mismatch");
    if (p < 2) throw structural_error("twisted_group_ring: p must be at least 2");
    {
        std::vector<char> seen(g, 0);
        for (Elt x : automorphism) {
            if (x < 0 || x >= g || seen[x])
                throw structural_error("twisted_group_ring: map is not a permutation");
            seen[x] = 1;
        }
    }
    long long order = 1;
    for (int i = 0; i < g; ++i) {
        order *= p;
        if (order > budget().carrier)
            throw budget_error("twisted_group_ring: carrier p^|G| exceeds budget");
    }
    const int n = static_cast<int>(order);

    std::vector<std::vector<int>> coeff(n, std::vector<int>(g));
    for (int idx = 0; idx < n; ++idx) {
        int v = idx;
        for (int i = 0; i < g; ++i) {
            coeff[idx][i] = v % p;
            v /= p;
        }
    }
    auto index_of = [&](const std::vector<int>& c) {
        int idx = 0;
        for (int i = g; i-- > 0;) idx = idx * p + c[i];
        return idx;
    };

    RingTables R;
    R.n = n;
    R.zero = 0;
    R.add.resize(static_cast<size_t>(n) * n);
    R.mul.resize(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::vector<int> s(g), m(g, 0);
            for (int i = 0; i < g; ++i) s[i] = (coeff[x][i] + coeff[y][i]) % p;
            for (int i = 0; i < g; ++i)
                if (coeff[x][i])
                    for (int j = 0; j < g; ++j)
                        if (coeff[y][j]) {
                            int t = group_mul[static_cast<size_t>(i) * g + j];
                            m[t] = (m[t] + coeff[x][i] * coeff[y][j]) % p;
                        }
            R.add[static_cast<size_t>(x) * n + y] = index_of(s);
            R.mul[static_cast<size_t>(x) * n + y] = index_of(m);
        }
    Table endo(n);
    for (int x = 0; x < n; ++x) {
        std::vector<int> c(g, 0);
        for (int i = 0; i < g; ++i) c[automorphism[i]] = coeff[x][i];
        endo[x] = index_of(c);
    }
    GroupRingBasis out;
    out.p = p;
    out.group_order = g;
    out.ring = twist_ring(R, endo, endo, 1);
    return out;
}

std::optional<Table> derive_inverse_map(int n, const Table& mul, const Table& alpha, Elt e) {
    auto m = [&](Elt x, Elt y) { return mul[static_cast<size_t>(x) * n + y]; };
    // Candidates per element: minimal invertibility index first, then value.
    std::vector<std::vector<Elt>> cand(n);
    for (Elt x = 0; x < n; ++x) {
        int best = -1;
        std::vector<std::pair<int, Elt>> found;
        for (Elt h = 0; h < n; ++h) {
            Elt u = m(x, h), v = m(h, x);
            for (int k = 0; k <= n; ++k) {
                if (u == e && v == e) {
                    found.emplace_back(k, h);
                    if (best < 0 || k < best) best = k;
                    break;
                }
                u = alpha[u];
                v = alpha[v];
            }
        }
        if (found.empty()) return std::nullopt;
        for (auto [k, h] : found)
            if (k == best) cand[x].push_back(h);
    }
    Table inv(n, -1);
    // Antimorphism consistency over all fully-assigned triples.
    auto consistent = [&](Elt x) {
        for (Elt a = 0; a < n; ++a) {
            if (inv[a] < 0) continue;
            for (Elt b = 0; b < n; ++b) {
                if (inv[b] < 0) continue;
                Elt ab = m(a, b);
                if ((ab == x || a == x || b == x) && inv[ab] >= 0 &&
                    inv[ab] != m(inv[b], inv[a]))
                    return false;
            }
        }
        return true;
    };
    std::function<bool(Elt)> assign = [&](Elt x) -> bool {
        if (x == n) return true;
        for (Elt h : cand[x]) {
            inv[x] = h;
            if (consistent(x) && assign(x + 1)) return true;
            inv[x] = -1;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return inv;
}

namespace {

void gre_validate(const GroupRingContext& ctx) {
    const int g = ctx.group_order;
    if (ctx.group_mul.size() != static_cast<size_t>(g) * g || ctx.aut.size() != static_cast<size_t>(g))
        throw structural_error("group-ring context: table size mismatch");
    if (ctx.p < 2) throw structural_error("group-ring context: p must be at least 2");
}

void gre_insert(GroupRingElem& e, Elt g, long long c, long long p) {
    c %= p;
    if (c < 0) c += p;
    if (c == 0) return;
    auto [it, fresh] = e.coeff.emplace(g, c);
    if (!fresh) {
        it->second = (it->second + c) % p;
        if (it->second == 0) e.coeff.erase(it);
    }
}

}  // namespace

GroupRingElem gre_basis(const GroupRingContext& ctx, Elt g, long long c) {
    gre_validate(ctx);
    if (g < 0 || g >= ctx.group_order) throw structural_error("group-ring basis element out of range");
    GroupRingElem e;
    gre_insert(e, g, c, ctx.p);
    return e;
}

GroupRingElem gre_alpha(const GroupRingContext& ctx, const GroupRingElem& a) {
    gre_validate(ctx);
    GroupRingElem out;
    for (auto [g, c] : a.coeff) gre_insert(out, ctx.aut[g], c, ctx.p);
    return out;
}

GroupRingElem gre_add(const GroupRingContext& ctx, const GroupRingElem& a, const GroupRingElem& b) {
    gre_validate(ctx);
    GroupRingElem out;
    for (auto [g, c] : a.coeff) gre_insert(out, ctx.aut[g], c, ctx.p);
    for (auto [g, c] : b.coeff) gre_insert(out, ctx.aut[g], c, ctx.p);
    return out;
}

GroupRingElem gre_mul(const GroupRingContext& ctx, const GroupRingElem& a, const GroupRingElem& b) {
    gre_validate(ctx);
    const int n = ctx.group_order;
    GroupRingElem out;
    for (auto [g, cg] : a.coeff)
        for (auto [h, ch] : b.coeff)
            gre_insert(out, ctx.aut[ctx.group_mul[static_cast<size_t>(g) * n + h]], cg * ch, ctx.p);
    return out;
}

}  // namespace homcat
