#include "homcat/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace homcat {

int SubSet::size() const {
    return static_cast<int>(std::count(in.begin(), in.end(), 1));
}

std::vector<Elt> SubSet::elements() const {
    std::vector<Elt> out;
    for (Elt x = 0; x < n; ++x)
        if (in[x]) out.push_back(x);
    return out;
}

bool SubSet::subset_of(const SubSet& o) const {
    for (Elt x = 0; x < n; ++x)
        if (in[x] && !o.in[x]) return false;
    return true;
}

SubgroupVerdict is_hom_subgroup(const FiniteHomGroup& G, const SubSet& S) {
    SubgroupVerdict v;
    if (S.n != G.n) throw structural_error("is_hom_subgroup: subset carrier mismatch");
    if (!S.contains(G.e)) {
        v.witness = FailureWitness{"unit-membership", {G.e}};
        return v;
    }
    for (Elt a : S.elements())
        for (Elt b : S.elements())
            if (!S.contains(G.m(a, b))) {
                v.witness = FailureWitness{"product-closure", {a, b}};
                return v;
            }
    for (Elt h : S.elements())
        if (!S.contains(G.inv[h])) {
            v.witness = FailureWitness{"inverse-closure", {h}};
            return v;
        }
    v.ok = true;
    // alpha(h) = e*h, so closure forces alpha-stability; assert it.
    v.alpha_stable = true;
    for (Elt h : S.elements())
        if (!S.contains(G.a(h))) v.alpha_stable = false;
    if (!v.alpha_stable) throw internal_error("certified subgroup not alpha-stable");
    return v;
}

SubSet generated_hom_subgroup(const FiniteHomGroup& G, const std::vector<Elt>& seeds) {
    SubSet S(G.n);
    S.add(G.e);
    for (Elt s : seeds) {
        if (s < 0 || s >= G.n) throw structural_error("generated_hom_subgroup: seed out of range");
        S.add(s);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        auto elems = S.elements();
        for (Elt a : elems) {
            if (!S.contains(G.inv[a])) { S.add(G.inv[a]); changed = true; }
            if (!S.contains(G.a(a))) { S.add(G.a(a)); changed = true; }
            for (Elt b : elems)
                if (!S.contains(G.m(a, b))) { S.add(G.m(a, b)); changed = true; }
        }
    }
    return S;
}

NormalityVerdict is_normal(const FiniteHomGroup& G, const SubSet& H) {
    auto sub = is_hom_subgroup(G, H);
    if (!sub.ok) throw structural_error("is_normal: H is not a Hom-subgroup");
    NormalityVerdict v;
    auto coset_eq = [&](Elt g) {
        std::set<Elt> left, right;
        for (Elt h : H.elements()) {
            left.insert(G.m(g, h));
            right.insert(G.m(h, g));
        }
        return left == right;
    };
    if (!G.regular()) {
        v.used_coset_fallback = true;
        for (Elt g = 0; g < G.n; ++g)
            if (!coset_eq(g)) {
                v.witness = FailureWitness{"coset-equality", {g}};
                return v;
            }
        v.normal = true;
        return v;
    }
    for (Elt g = 0; g < G.n; ++g)
        for (Elt h : H.elements())
            if (!H.contains(G.m(G.m(g, h), G.a(G.inv[g])))) {
                v.witness = FailureWitness{"conjugation", {g, h}};
                return v;
            }
    // Cross-check against the defining coset form.
    for (Elt g = 0; g < G.n; ++g)
        if (!coset_eq(g)) {
            v.witness = FailureWitness{"coset-equality", {g}};
            return v;
        }
    v.normal = true;
    return v;
}

FiniteHomGroup restrict_to(const FiniteHomGroup& G, const SubSet& S, std::vector<Elt>* order) {
    auto elems = S.elements();
    std::vector<int> pos(G.n, -1);
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    FiniteHomGroup R;
    R.n = static_cast<int>(elems.size());
    R.e = pos[G.e];
    R.mul.resize(static_cast<size_t>(R.n) * R.n);
    R.alpha.resize(R.n);
    R.inv.resize(R.n);
    for (int i = 0; i < R.n; ++i) {
        R.alpha[i] = pos[G.a(elems[i])];
        R.inv[i] = pos[G.inv[elems[i]]];
        for (int j = 0; j < R.n; ++j) {
            Elt p = G.m(elems[i], elems[j]);
            if (pos[p] < 0) throw structural_error("restrict_to: subset not closed under mul");
            R.mul[static_cast<size_t>(i) * R.n + j] = pos[p];
        }
    }
    if (R.e < 0 || std::any_of(R.alpha.begin(), R.alpha.end(), [](int v) { return v < 0; }) ||
        std::any_of(R.inv.begin(), R.inv.end(), [](int v) { return v < 0; }))
        throw structural_error("restrict_to: subset not closed");
    if (order) *order = elems;
    return R;
}

CanonicalSubgroups canonical_subgroups(const FiniteHomGroup& G, const std::optional<SubSet>& H) {
    CanonicalSubgroups out;
    out.center = SubSet(G.n);
    for (Elt g = 0; g < G.n; ++g) {
        bool central = true;
        for (Elt x = 0; x < G.n && central; ++x) central = G.m(g, x) == G.m(x, g);
        if (central) out.center.add(g);
    }
    const bool regular = G.regular();
    out.center_is_subgroup = is_hom_subgroup(G, out.center).ok;
    if (regular) {
        out.center_is_normal = is_normal(G, out.center).normal;
        out.center_alpha_orbit_stable = true;
        for (Elt g : out.center.elements()) {
            Elt x = g;
            for (int k = 0; k < G.n; ++k) {
                x = G.a(x);
                if (!out.center.contains(x)) out.center_alpha_orbit_stable = false;
            }
        }
    }
    if (H && regular) {
        auto sub = is_hom_subgroup(G, *H);
        if (!sub.ok) throw structural_error("canonical_subgroups: H must be certified");
        SubSet C(G.n), N(G.n);
        for (Elt g = 0; g < G.n; ++g) {
            bool c = true, nn = true;
            for (Elt h : H->elements()) {
                Elt v = G.m(G.m(g, h), G.a(G.inv[g]));
                if (v != G.a_pow(h, 2)) c = false;
                if (!H->contains(v)) nn = false;
            }
            if (c) C.add(g);
            if (nn) N.add(g);
        }
        if (!is_hom_subgroup(G, C).ok || !is_hom_subgroup(G, N).ok)
            throw internal_error("centralizer/normalizer failed subgroup certification");
        out.center_in_centralizer = out.center.subset_of(C);
        out.centralizer_in_normalizer = C.subset_of(N);
        std::vector<Elt> order;
        FiniteHomGroup NG = restrict_to(G, N, &order);
        std::vector<int> pos(G.n, -1);
        for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
        SubSet Cr(NG.n);
        for (Elt c : C.elements()) Cr.add(pos[c]);
        out.centralizer_normal_in_normalizer = is_normal(NG, Cr).normal;
        out.centralizer = C;
        out.normalizer = N;
    }
    if (G.underlying_mul) {
        const Table& gm = *G.underlying_mul;
        auto mm = [&](Elt a, Elt b) { return gm[static_cast<size_t>(a) * G.n + b]; };
        SubSet Za(G.n);
        for (Elt g = 0; g < G.n; ++g) {
            bool ok = true;
            for (Elt x = 0; x < G.n && ok; ++x) ok = G.a(mm(g, x)) == G.a(mm(x, g));
            if (ok) Za.add(g);
        }
        out.z_alpha = Za;
        bool injective = true;
        {
            std::vector<char> seen(G.n, 0);
            for (Elt g = 0; g < G.n; ++g) {
                if (seen[G.a(g)]) injective = false;
                seen[G.a(g)] = 1;
            }
        }
        if (injective) {
            SubSet Z0(G.n);  // ordinary-group center
            for (Elt g = 0; g < G.n; ++g) {
                bool c = true;
                for (Elt x = 0; x < G.n && c; ++x) c = mm(g, x) == mm(x, g);
                if (c) Z0.add(g);
            }
            out.z_alpha_equals_center = (Za == Z0);
            bool z_stable = true;
            for (Elt z : Z0.elements())
                if (!Z0.contains(G.a(z))) z_stable = false;
            if (z_stable) out.z_alpha_is_subgroup = is_hom_subgroup(G, Za).ok;
        }
    }
    return out;
}

QuotientHomGroup quotient(const FiniteHomGroup& G, const SubSet& H) {
    if (!G.regular()) throw structural_error("quotient: G must be regular");
    auto nv = is_normal(G, H);
    if (!nv.normal) throw structural_error("quotient: H is not normal");

    std::map<std::set<Elt>, Elt> index;
    std::vector<std::set<Elt>> cosets;
    std::vector<Elt> coset_of(G.n, -1);
    for (Elt g = 0; g < G.n; ++g) {
        std::set<Elt> c;
        for (Elt h : H.elements()) c.insert(G.m(g, h));
        auto it = index.find(c);
        if (it == index.end()) {
            index.emplace(c, static_cast<Elt>(cosets.size()));
            cosets.push_back(c);
        }
    }
    // Partition check: every element in exactly one coset.
    for (Elt x = 0; x < G.n; ++x) {
        int hits = 0;
        for (size_t i = 0; i < cosets.size(); ++i)
            if (cosets[i].count(x)) {
                coset_of[x] = static_cast<Elt>(i);
                ++hits;
            }
        if (hits != 1)
            throw structural_error("quotient: cosets do not partition the carrier at element " +
                                   std::to_string(x) + " (H not normal?)");
    }

    const int m = static_cast<int>(cosets.size());
    QuotientHomGroup Q;
    Q.coset_of = coset_of;
    Q.reps.resize(m);
    for (int i = 0; i < m; ++i) Q.reps[i] = *cosets[i].begin();
    Q.group.n = m;
    Q.group.e = coset_of[G.e];
    Q.group.mul.assign(static_cast<size_t>(m) * m, -1);
    Q.group.alpha.assign(m, -1);
    Q.group.inv.assign(m, -1);

    // Well-definedness: products/alpha/inverse of whole cosets land in a
    // single coset.
    for (int i = 0; i < m; ++i) {
        for (Elt x : cosets[i]) {
            Elt av = coset_of[G.a(x)];
            if (Q.group.alpha[i] < 0) Q.group.alpha[i] = av;
            else if (Q.group.alpha[i] != av)
                throw structural_error("quotient: alpha not well-defined on coset " + std::to_string(i));
            Elt iv = coset_of[G.inv[x]];
            if (Q.group.inv[i] < 0) Q.group.inv[i] = iv;
            else if (Q.group.inv[i] != iv)
                throw structural_error("quotient: inverse not well-defined on coset " + std::to_string(i));
        }
        for (int j = 0; j < m; ++j) {
            Elt& slot = Q.group.mul[static_cast<size_t>(i) * m + j];
            for (Elt x : cosets[i])
                for (Elt y : cosets[j]) {
                    Elt v = coset_of[G.m(x, y)];
                    if (slot < 0) slot = v;
                    else if (slot != v)
                        throw structural_error("quotient: coset product ill-defined at (" +
                                               std::to_string(i) + "," + std::to_string(j) + ")");
                }
        }
    }

    if (!check_hom_group(Q.group).all_pass())
        throw internal_error("quotient: result fails hom-group axioms");

    // Coset-equality criterion, applicable when alpha(H) = H.
    SubSet aH(G.n);
    for (Elt h : H.elements()) aH.add(G.a(h));
    if (aH == H) {
        for (Elt g = 0; g < G.n; ++g)
            for (Elt g2 = 0; g2 < G.n; ++g2) {
                bool same = coset_of[g] == coset_of[g2];
                bool crit = H.contains(G.m(G.inv[g], g2));
                if (same != crit)
                    throw internal_error("quotient: coset-equality criterion failed at (" +
                                         std::to_string(g) + "," + std::to_string(g2) + ")");
            }
    }
    return Q;
}

CommutatorResult commutator_subgroup(const FiniteHomGroup& G) {
    if (!G.regular()) throw structural_error("commutator_subgroup: G must be regular");
    SubSet bare(G.n);
    for (Elt g = 0; g < G.n; ++g)
        for (Elt h = 0; h < G.n; ++h)
            bare.add(G.m(G.m(G.inv[g], G.inv[h]), G.m(g, h)));
    CommutatorResult r;
    r.subgroup = generated_hom_subgroup(G, bare.elements());
    r.bare_set_closed = (r.subgroup == bare) || is_hom_subgroup(G, bare).ok;
    r.normal = is_normal(G, r.subgroup).normal;
    if (!r.normal) throw internal_error("commutator subgroup failed normality");
    return r;
}

Abelianization abelianization(const FiniteHomGroup& G) {
    Abelianization ab;
    auto comm = commutator_subgroup(G);
    ab.commutator = comm.subgroup;
    ab.quotient = quotient(G, comm.subgroup);
    ab.abelian = ab.quotient.group.abelian();
    ab.projection = make_hom_map(G, ab.quotient.group, ab.quotient.coset_of);
    ab.projection_is_hom = ab.projection.multiplicative && ab.projection.alpha_equivariant;

    // Minimality: [G,G] is inside every normal H with abelian quotient.
    ab.minimal = true;
    auto lat = normal_lattice(G);
    if (!lat.truncated) {
        for (const auto& H : lat.normal_subgroups) {
            auto Q = quotient(G, H);
            if (Q.group.abelian() && !ab.commutator.subset_of(H)) ab.minimal = false;
        }
    }
    return ab;
}

UniversalCheck abelianization_universal_check(const FiniteHomGroup& G, const FiniteHomGroup& H,
                                              const Table& f) {
    if (!(H.regular() && H.abelian()))
        throw structural_error("abelianization_universal_check: H must be abelian regular");
    if (!is_homomorphism(G, H, f))
        throw structural_error("abelianization_universal_check: f is not a Hom-group homomorphism");
    UniversalCheck out;
    auto ab = abelianization(G);
    const auto& co = ab.quotient.coset_of;
    const int m = ab.quotient.group.n;

    out.induced.assign(m, -1);
    out.well_defined = true;
    for (Elt g = 0; g < G.n; ++g) {
        Elt c = co[g];
        if (out.induced[c] < 0) out.induced[c] = f[g];
        else if (out.induced[c] != f[g]) out.well_defined = false;
    }
    if (!out.well_defined) return out;

    out.is_homomorphism = is_homomorphism(ab.quotient.group, H, out.induced);
    out.factors = true;
    for (Elt g = 0; g < G.n; ++g)
        if (out.induced[co[g]] != f[g]) out.factors = false;

    auto all = enumerate_homomorphisms(ab.quotient.group, H);
    if (all.truncated) throw budget_error("abelianization_universal_check: search truncated");
    int count = 0;
    for (const auto& F : all.maps) {
        bool factors = true;
        for (Elt g = 0; g < G.n && factors; ++g) factors = F.map[co[g]] == f[g];
        if (factors) ++count;
    }
    out.unique = count == 1;
    return out;
}

namespace {

// Subgroup enumeration by closures of generating sets, without the
// quotient cross-check (which would otherwise recurse forever through
// same-order quotients like G/{e}).
std::vector<SubSet> enumerate_hom_subgroups(const FiniteHomGroup& G) {
    const auto& B = budget();
    std::set<SubSet> found;
    std::vector<Elt> cur;
    std::function<void(Elt, int)> rec = [&](Elt start, int depth) {
        found.insert(generated_hom_subgroup(G, cur));
        if (depth == 0) return;
        for (Elt g = start; g < G.n; ++g) {
            cur.push_back(g);
            rec(g + 1, depth - 1);
            cur.pop_back();
        }
    };
    rec(0, B.lattice_max_gens);
    std::vector<SubSet> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const SubSet& a, const SubSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements() < b.elements();
    });
    return out;
}

bool is_simple_by_enumeration(const FiniteHomGroup& G) {
    if (G.n <= 1) return false;
    int normals = 0;
    for (const auto& S : enumerate_hom_subgroups(G))
        if (is_normal(G, S).normal) ++normals;
    return normals == 2;
}

}  // namespace

NormalLattice normal_lattice(const FiniteHomGroup& G) {
    NormalLattice lat;
    if (G.n > budget().lattice_max_n) {
        lat.truncated = true;
        return lat;
    }
    lat.subgroups = enumerate_hom_subgroups(G);
    for (const auto& S : lat.subgroups)
        if (is_normal(G, S).normal) lat.normal_subgroups.push_back(S);

    lat.is_simple = G.n > 1 && lat.normal_subgroups.size() == 2;
    if (lat.is_simple) lat.simple_implies_regular = G.regular();

    SubSet whole(G.n);
    for (Elt g = 0; g < G.n; ++g) whole.add(g);
    for (const auto& H : lat.normal_subgroups) {
        if (H == whole) continue;
        bool maximal = true;
        for (const auto& K : lat.normal_subgroups) {
            if (K == whole || K == H) continue;
            if (H.subset_of(K) && !(K == H)) maximal = false;
        }
        if (maximal) lat.maximal_normals.push_back(H);
    }
    // Cross-check: H maximal among proper normals <=> G/H simple.
    if (G.regular()) {
        for (const auto& H : lat.normal_subgroups) {
            if (H == whole) continue;
            auto Q = quotient(G, H);
            bool is_max = std::find(lat.maximal_normals.begin(), lat.maximal_normals.end(), H) !=
                          lat.maximal_normals.end();
            if (is_max != is_simple_by_enumeration(Q.group))
                lat.maximal_iff_simple_quotient = false;
        }
    }
    return lat;
}

PushPullVerdict pushforward_pullback_check(const FiniteHomGroup& G, const FiniteHomGroup& H,
                                           const Table& f, const SubSet& N, const SubSet& M) {
    if (f.size() != static_cast<size_t>(G.n))
        throw structural_error("pushforward_pullback_check: bad map size");
    if (f[G.e] != H.e) throw structural_error("pushforward_pullback_check: f(e) != e");
    if (!is_homomorphism(G, H, f))
        throw structural_error("pushforward_pullback_check: f not a homomorphism");
    if (!is_normal(G, N).normal) throw structural_error("pushforward_pullback_check: N not normal");

    PushPullVerdict v;
    SubSet image(H.n);
    for (Elt g = 0; g < G.n; ++g) image.add(f[g]);
    std::vector<Elt> order;
    FiniteHomGroup FG = restrict_to(H, image, &order);
    std::vector<int> pos(H.n, -1);
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    SubSet fN(FG.n);
    for (Elt x : N.elements()) fN.add(pos[f[x]]);
    v.image_normal = is_normal(FG, fN).normal;

    SubSet Mr(FG.n);
    for (Elt x : M.elements()) {
        if (pos[x] < 0) throw structural_error("pushforward_pullback_check: M not inside f(G)");
        Mr.add(pos[x]);
    }
    if (!is_normal(FG, Mr).normal)
        throw structural_error("pushforward_pullback_check: M not normal in f(G)");
    SubSet pre(G.n);
    for (Elt g = 0; g < G.n; ++g)
        if (M.contains(f[g])) pre.add(g);
    v.preimage_normal = is_normal(G, pre).normal;

    SubSet ker(G.n);
    for (Elt g = 0; g < G.n; ++g)
        if (f[g] == H.e) ker.add(g);
    v.kernel_normal = is_normal(G, ker).normal;
    return v;
}

}  // namespace homcat
