#include "homcat/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace homcat {

const Budget& budget() {
    static Budget b = [] {
        Budget r;
        if (const char* env = std::getenv("HOMCAT_BUDGET")) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end && *end == '\0' && v > 0) {
                r.hom_search = v;
                r.bilinear_family = v;
                r.carrier = v;
            }
        }
        return r;
    }();
    return b;
}

bool FiniteHomGroup::regular() const {
    std::vector<char> seen(n, 0);
    for (Elt g = 0; g < n; ++g) seen[alpha[g]] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool FiniteHomGroup::abelian() const {
    for (Elt g = 0; g < n; ++g)
        for (Elt h = g + 1; h < n; ++h)
            if (m(g, h) != m(h, g)) return false;
    return true;
}

void validate_tables(const FiniteHomGroup& G) {
    if (G.n <= 0) throw structural_error("hom-group: order must be positive");
    if (G.e < 0 || G.e >= G.n) throw structural_error("hom-group: unit out of range");
    auto check = [&](const Table& t, size_t len, const char* name) {
        if (t.size() != len) throw structural_error(std::string("hom-group: bad ") + name + " table size");
        for (Elt v : t)
            if (v < 0 || v >= G.n)
                throw structural_error(std::string("hom-group: ") + name + " entry out of range");
    };
    check(G.mul, static_cast<size_t>(G.n) * G.n, "mul");
    check(G.alpha, G.n, "alpha");
    check(G.inv, G.n, "inv");
}

std::optional<FailureWitness> AxiomReport::first_witness() const {
    for (const AxiomVerdict* v : {&hom_associativity, &alpha_multiplicative, &hom_unitarity,
                                  &inverse_antimorphism, &hom_invertibility})
        if (!v->pass) return v->witness;
    return std::nullopt;
}

namespace {

// Minimal k <= n with alpha^k(g g^-1) = alpha^k(g^-1 g) = e, or -1.
int invertibility_index(const FiniteHomGroup& G, Elt g) {
    Elt x = G.m(g, G.inv[g]);
    Elt y = G.m(G.inv[g], g);
    for (int k = 0; k <= G.n; ++k) {
        if (x == G.e && y == G.e) return k;
        x = G.a(x);
        y = G.a(y);
    }
    return -1;
}

}  // namespace

AxiomReport check_hom_group(const FiniteHomGroup& G) {
    validate_tables(G);
    AxiomReport r;
    const int n = G.n;

    for (Elt g = 0; g < n && r.hom_associativity.pass; ++g)
        for (Elt h = 0; h < n && r.hom_associativity.pass; ++h)
            for (Elt k = 0; k < n; ++k)
                if (G.m(G.a(g), G.m(h, k)) != G.m(G.m(g, h), G.a(k))) {
                    r.hom_associativity = {false, FailureWitness{"hom-associativity", {g, h, k}}};
                    break;
                }

    for (Elt g = 0; g < n && r.alpha_multiplicative.pass; ++g)
        for (Elt h = 0; h < n; ++h)
            if (G.a(G.m(g, h)) != G.m(G.a(g), G.a(h))) {
                r.alpha_multiplicative = {false, FailureWitness{"alpha-multiplicative", {g, h}}};
                break;
            }

    if (G.a(G.e) != G.e) {
        r.hom_unitarity = {false, FailureWitness{"hom-unitarity", {G.e}}};
    } else {
        for (Elt g = 0; g < n; ++g)
            if (G.m(g, G.e) != G.a(g) || G.m(G.e, g) != G.a(g)) {
                r.hom_unitarity = {false, FailureWitness{"hom-unitarity", {g}}};
                break;
            }
    }

    for (Elt g = 0; g < n && r.inverse_antimorphism.pass; ++g)
        for (Elt h = 0; h < n; ++h)
            if (G.inv[G.m(g, h)] != G.m(G.inv[h], G.inv[g])) {
                r.inverse_antimorphism = {false, FailureWitness{"inverse-antimorphism", {g, h}}};
                break;
            }

    r.inv_index.assign(n, -1);
    for (Elt g = 0; g < n; ++g) {
        int k = invertibility_index(G, g);
        r.inv_index[g] = k;
        if (k < 0 && r.hom_invertibility.pass)
            r.hom_invertibility = {false, FailureWitness{"hom-invertibility", {g}}};
    }

    r.regular = G.regular();
    r.abelian = G.abelian();

    // Remark 1.2(1): unitarity + hom-associativity already force the
    // multiplicativity of alpha; a passing pair with failing axiom 2 would
    // mean the checker itself is inconsistent.
    if (r.hom_unitarity.pass && r.hom_associativity.pass)
        r.remark_1_2_1 = r.alpha_multiplicative.pass;

    if (r.all_pass()) {
        for (Elt g = 0; g < n; ++g)
            if (G.a(G.inv[g]) != G.inv[G.a(g)]) {
                r.remark_1_2_4 = false;
                break;
            }
        if (r.regular) {
            for (Elt g = 0; g < n && r.left_cancellation; ++g) {
                std::vector<char> seen(n, 0);
                for (Elt h = 0; h < n; ++h) {
                    if (seen[G.m(g, h)]) {
                        r.left_cancellation = false;
                        break;
                    }
                    seen[G.m(g, h)] = 1;
                }
            }
        }
    }
    return r;
}

std::pair<Elt, int> inverse_and_index(const FiniteHomGroup& G, Elt g) {
    int k = invertibility_index(G, g);
    if (k < 0)
        throw structural_error("hom-invertibility violated for element " + std::to_string(g));
    int ka = invertibility_index(G, G.a(g));
    if (ka != std::max(k - 1, 0))
        throw internal_error("Remark 1.2(4) failed: index of alpha(g) != max(k-1,0) at g=" +
                             std::to_string(g));
    return {G.inv[g], k};
}

namespace {

// Returns the identity of a group table, or -1.
Elt group_identity(const Table& mul, int n) {
    for (Elt e = 0; e < n; ++e) {
        bool ok = true;
        for (Elt g = 0; g < n && ok; ++g)
            ok = mul[static_cast<size_t>(e) * n + g] == g && mul[static_cast<size_t>(g) * n + e] == g;
        if (ok) return e;
    }
    return -1;
}

}  // namespace

FiniteHomGroup twist_group(const Table& group_mul, const Table& endo) {
    const size_t nn = endo.size();
    const int n = static_cast<int>(nn);
    if (group_mul.size() != nn * nn) throw structural_error("twist_group: table size mismatch");
    auto gm = [&](Elt a, Elt b) { return group_mul[static_cast<size_t>(a) * n + b]; };
    for (Elt v : group_mul)
        if (v < 0 || v >= n) throw structural_error("twist_group: mul entry out of range");
    for (Elt v : endo)
        if (v < 0 || v >= n) throw structural_error("twist_group: endo entry out of range");

    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            for (Elt c = 0; c < n; ++c)
                if (gm(gm(a, b), c) != gm(a, gm(b, c)))
                    throw structural_error("twist_group: input table not associative at (" +
                                           std::to_string(a) + "," + std::to_string(b) + "," +
                                           std::to_string(c) + ")");
    Elt e = group_identity(group_mul, n);
    if (e < 0) throw structural_error("twist_group: input table has no identity");

    Table ginv(n, -1);
    for (Elt a = 0; a < n; ++a) {
        for (Elt b = 0; b < n; ++b)
            if (gm(a, b) == e && gm(b, a) == e) {
                ginv[a] = b;
                break;
            }
        if (ginv[a] < 0) throw structural_error("twist_group: input table has no inverse for " +
                                                std::to_string(a));
    }
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            if (endo[gm(a, b)] != gm(endo[a], endo[b]))
                throw structural_error("twist_group: endo not a homomorphism at (" +
                                       std::to_string(a) + "," + std::to_string(b) + ")");

    FiniteHomGroup G;
    G.n = n;
    G.e = e;
    G.alpha = endo;
    G.inv = ginv;
    G.mul.resize(nn * nn);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) G.mul[static_cast<size_t>(a) * n + b] = endo[gm(a, b)];
    G.underlying_mul = group_mul;
    return G;
}

FiniteHomGroup direct_product(const FiniteHomGroup& G, const FiniteHomGroup& H) {
    validate_tables(G);
    validate_tables(H);
    FiniteHomGroup P;
    P.n = G.n * H.n;
    auto id = [&](Elt g, Elt h) { return g * H.n + h; };
    P.e = id(G.e, H.e);
    P.mul.resize(static_cast<size_t>(P.n) * P.n);
    P.alpha.resize(P.n);
    P.inv.resize(P.n);
    for (Elt g = 0; g < G.n; ++g)
        for (Elt h = 0; h < H.n; ++h) {
            P.alpha[id(g, h)] = id(G.a(g), H.a(h));
            P.inv[id(g, h)] = id(G.inv[g], H.inv[h]);
            for (Elt g2 = 0; g2 < G.n; ++g2)
                for (Elt h2 = 0; h2 < H.n; ++h2)
                    P.mul[static_cast<size_t>(id(g, h)) * P.n + id(g2, h2)] =
                        id(G.m(g, g2), H.m(h, h2));
        }
    return P;
}

QAdditiveReport q_additive_window(long long q, long long bound) {
    if (q == 0) throw structural_error("q_additive_window: q must be nonzero");
    if (bound < 0) throw structural_error("q_additive_window: bound must be nonnegative");
    QAdditiveReport rep;
    auto in = [&](long long v) { return v >= -bound && v <= bound; };
    for (long long a = -bound; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b)
            for (long long c = -bound; c <= bound; ++c) {
                // q a +_q (b +_q c) = (a +_q b) +_q q c = q^2 (a+b+c)
                long long bc = q * (b + c);
                long long ab = q * (a + b);
                if (!in(bc) || !in(ab) || !in(q * a) || !in(q * c)) {
                    ++rep.skipped;
                    continue;
                }
                long long lhs = q * (q * a + bc);
                long long rhs = q * (ab + q * c);
                long long expect = q * q * (a + b + c);
                ++rep.checked;
                if (lhs != expect || rhs != expect) {
                    ++rep.failures;
                    if (!rep.witness) rep.witness = {{a, b, c}};
                }
            }
    return rep;
}

namespace {

// alpha^i(g) for i in [lo, lo + 2n]; covers every value alpha^i(g) takes for
// i >= lo, since the orbit is eventually periodic with preperiod+period <= n.
std::vector<Elt> orbit_window(const FiniteHomGroup& G, Elt g, int lo) {
    std::vector<Elt> out;
    Elt x = g;
    for (int i = 0; i < lo; ++i) x = G.a(x);
    for (int i = 0; i <= 2 * G.n; ++i) {
        out.push_back(x);
        x = G.a(x);
    }
    return out;
}

}  // namespace

bool StructureIdentityReport::all_pass_or_na() const {
    for (const IdentityVerdict* v :
         {&cancellation, &medial_commutation, &commutation, &interchange, &squaring_criterion})
        if (v->status == IdentityStatus::Fail) return false;
    return true;
}

StructureIdentityReport check_structure_identities(const FiniteHomGroup& G) {
    StructureIdentityReport rep;
    const int n = G.n;
    std::vector<int> idx(n);
    std::vector<std::vector<Elt>> win(n);
    for (Elt g = 0; g < n; ++g) {
        idx[g] = invertibility_index(G, g);
        if (idx[g] < 0) throw structural_error("check_structure_identities: input fails hom-invertibility");
        win[g] = orbit_window(G, g, idx[g]);
    }
    const bool regular = G.regular();
    const bool abelian = G.abelian();

    // Prop R1: alpha^i(g)h = alpha^i(g)k for all i >= index(g)  =>  a^2(h) = a^2(k).
    for (Elt g = 0; g < n && rep.cancellation.status == IdentityStatus::Pass; ++g)
        for (Elt h = 0; h < n && rep.cancellation.status == IdentityStatus::Pass; ++h)
            for (Elt k = 0; k < n; ++k) {
                bool hyp = true;
                for (Elt ag : win[g])
                    if (G.m(ag, h) != G.m(ag, k)) {
                        hyp = false;
                        break;
                    }
                if (hyp && G.a_pow(h, 2) != G.a_pow(k, 2)) {
                    rep.cancellation = {IdentityStatus::Fail, FailureWitness{"R1", {g, h, k}}};
                    break;
                }
            }

    // Lemma RR1: (a^i(g)h)(k a^j(l)) = (a^i(g)k)(h a^j(l)) for all i,j  =>  a^3(hk) = a^3(kh).
    for (Elt g = 0; g < n && rep.medial_commutation.status == IdentityStatus::Pass; ++g)
        for (Elt l = 0; l < n && rep.medial_commutation.status == IdentityStatus::Pass; ++l)
            for (Elt h = 0; h < n && rep.medial_commutation.status == IdentityStatus::Pass; ++h)
                for (Elt k = 0; k < n; ++k) {
                    bool hyp = true;
                    for (Elt ag : win[g]) {
                        for (Elt al : win[l])
                            if (G.m(G.m(ag, h), G.m(k, al)) != G.m(G.m(ag, k), G.m(h, al))) {
                                hyp = false;
                                break;
                            }
                        if (!hyp) break;
                    }
                    if (hyp && G.a_pow(G.m(h, k), 3) != G.a_pow(G.m(k, h), 3)) {
                        rep.medial_commutation = {IdentityStatus::Fail, FailureWitness{"RR1", {g, l, h, k}}};
                        break;
                    }
                }

    // Prop RRR1: (a^i(g^-1) a^j(h^-1))(a^i(g) a^j(h)) = e for all i,j
    //            =>  a^{i+5}(g) a^{j+5}(h) = a^{j+5}(h) a^{i+5}(g).
    for (Elt g = 0; g < n && rep.commutation.status == IdentityStatus::Pass; ++g)
        for (Elt h = 0; h < n; ++h) {
            const auto& wg = win[g];
            const auto& wh = win[h];
            const auto& wgi = orbit_window(G, G.inv[g], idx[g]);
            const auto& whi = orbit_window(G, G.inv[h], idx[h]);
            bool hyp = true;
            for (size_t i = 0; i < wg.size() && hyp; ++i)
                for (size_t j = 0; j < wh.size(); ++j)
                    if (G.m(G.m(wgi[i], whi[j]), G.m(wg[i], wh[j])) != G.e) {
                        hyp = false;
                        break;
                    }
            if (!hyp) continue;
            bool concl = true;
            for (size_t i = 0; i < wg.size() && concl; ++i)
                for (size_t j = 0; j < wh.size(); ++j) {
                    Elt x = G.a_pow(wg[i], 5), y = G.a_pow(wh[j], 5);
                    if (G.m(x, y) != G.m(y, x)) {
                        concl = false;
                        break;
                    }
                }
            if (!concl) {
                rep.commutation = {IdentityStatus::Fail, FailureWitness{"RRR1", {g, h}}};
                break;
            }
        }

    // lemmeRS: on abelian regular G, (g h)(k l) = (g k)(h l).
    if (!(regular && abelian)) {
        rep.interchange.status = IdentityStatus::NotApplicable;
    } else {
        for (Elt g = 0; g < n && rep.interchange.status == IdentityStatus::Pass; ++g)
            for (Elt h = 0; h < n && rep.interchange.status == IdentityStatus::Pass; ++h)
                for (Elt k = 0; k < n && rep.interchange.status == IdentityStatus::Pass; ++k)
                    for (Elt l = 0; l < n; ++l)
                        if (G.m(G.m(g, h), G.m(k, l)) != G.m(G.m(g, k), G.m(h, l))) {
                            rep.interchange = {IdentityStatus::Fail, FailureWitness{"lemmeRS", {g, h, k, l}}};
                            break;
                        }
    }

    // Squaring criterion: on regular G, g -> g*g is a homomorphism iff G abelian.
    if (!regular) {
        rep.squaring_criterion.status = IdentityStatus::NotApplicable;
    } else {
        Table sq(n);
        for (Elt g = 0; g < n; ++g) sq[g] = G.m(g, g);
        bool is_hom = is_homomorphism(G, G, sq);
        if (is_hom != abelian)
            rep.squaring_criterion = {IdentityStatus::Fail,
                                      FailureWitness{"squaring-criterion", {is_hom ? 1 : 0}}};
    }
    return rep;
}

bool is_homomorphism(const FiniteHomGroup& G, const FiniteHomGroup& H, const Table& f) {
    for (Elt g = 0; g < G.n; ++g)
        if (f[G.a(g)] != H.a(f[g])) return false;
    for (Elt g = 0; g < G.n; ++g)
        for (Elt h = 0; h < G.n; ++h)
            if (f[G.m(g, h)] != H.m(f[g], f[h])) return false;
    return true;
}

HomMap make_hom_map(const FiniteHomGroup& G, const FiniteHomGroup& H, const Table& f) {
    HomMap m;
    m.map = f;
    m.multiplicative = true;
    m.alpha_equivariant = true;
    for (Elt g = 0; g < G.n && m.multiplicative; ++g)
        for (Elt h = 0; h < G.n; ++h)
            if (f[G.m(g, h)] != H.m(f[g], f[h])) {
                m.multiplicative = false;
                break;
            }
    for (Elt g = 0; g < G.n; ++g)
        if (f[G.a(g)] != H.a(f[g])) {
            m.alpha_equivariant = false;
            break;
        }
    m.unit_preserving = f[G.e] == H.e;
    return m;
}

namespace {

// Depth-first assignment of f(0), f(1), ... with incremental checks against
// every already-assigned pair. Visits at most `budget` nodes.
struct HomSearch {
    const FiniteHomGroup& G;
    const FiniteHomGroup& H;
    long long nodes = 0;
    long long node_cap;
    bool truncated = false;
    Table f;
    std::vector<HomMap>& out;

    HomSearch(const FiniteHomGroup& g, const FiniteHomGroup& h, std::vector<HomMap>& o)
        : G(g), H(h), node_cap(budget().hom_search), f(g.n, -1), out(o) {}

    bool consistent(Elt g) const {
        if (f[G.a(g)] >= 0 && f[G.a(g)] != H.a(f[g])) return false;
        for (Elt x = 0; x < G.n; ++x) {
            if (f[x] < 0) continue;
            if (f[G.m(g, x)] >= 0 && f[G.m(g, x)] != H.m(f[g], f[x])) return false;
            if (f[G.m(x, g)] >= 0 && f[G.m(x, g)] != H.m(f[x], f[g])) return false;
        }
        return true;
    }

    void run(Elt g) {
        if (truncated) return;
        if (g == G.n) {
            out.push_back(make_hom_map(G, H, f));
            return;
        }
        for (Elt v = 0; v < H.n; ++v) {
            if (++nodes > node_cap) {
                truncated = true;
                return;
            }
            f[g] = v;
            if (consistent(g)) run(g + 1);
            f[g] = -1;
            if (truncated) return;
        }
    }
};

}  // namespace

HomSearchResult enumerate_homomorphisms(const FiniteHomGroup& G, const FiniteHomGroup& H) {
    validate_tables(G);
    validate_tables(H);
    HomSearchResult res;
    HomSearch s(G, H, res.maps);
    s.run(0);
    res.truncated = s.truncated;
    if (s.truncated) res.maps.clear();
    return res;
}

HomGroupOfMaps hom_group_of_homomorphisms(const FiniteHomGroup& G, const FiniteHomGroup& H) {
    if (!(G.regular() && G.abelian() && H.regular() && H.abelian()))
        throw structural_error("hom_group_of_homomorphisms: requires abelian regular G and H");
    auto search = enumerate_homomorphisms(G, H);
    if (search.truncated) throw budget_error("hom_group_of_homomorphisms: search truncated");
    auto& maps = search.maps;
    const int m = static_cast<int>(maps.size());

    auto index_of = [&](const Table& f) -> Elt {
        for (int i = 0; i < m; ++i)
            if (maps[i].map == f) return i;
        throw internal_error("Hom(G,H) not closed under the pointwise operation");
    };

    HomGroupOfMaps out;
    out.group.n = m;
    out.group.mul.resize(static_cast<size_t>(m) * m);
    out.group.alpha.resize(m);
    out.group.inv.resize(m);
    Table zero(G.n, H.e);
    out.group.e = index_of(zero);
    for (int i = 0; i < m; ++i) {
        Table af(G.n), nf(G.n);
        for (Elt x = 0; x < G.n; ++x) {
            af[x] = H.a(maps[i].map[x]);
            nf[x] = H.inv[maps[i].map[x]];
        }
        out.group.alpha[i] = index_of(af);
        out.group.inv[i] = index_of(nf);
        for (int j = 0; j < m; ++j) {
            Table s(G.n);
            for (Elt x = 0; x < G.n; ++x) s[x] = H.m(maps[i].map[x], maps[j].map[x]);
            out.group.mul[static_cast<size_t>(i) * m + j] = index_of(s);
        }
    }
    out.elements = std::move(maps);
    return out;
}

}  // namespace homcat
