#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "homcat/types.hpp"

namespace homcat {

// Finite Hom-group (G, mu, e, alpha) with a chosen inverse map. The inverse
// is input data, not inferred: with non-injective alpha several elements can
// satisfy hom-invertibility, and the antimorphism axiom constrains the whole
// map, not single entries.
struct FiniteHomGroup {
    int n = 0;
    Elt e = 0;
    Table mul;    // n*n
    Table alpha;  // n
    Table inv;    // n

    // Set by twist_group: the underlying ordinary group product, used by the
    // Z_alpha(G) diagnostics.
    std::optional<Table> underlying_mul;

    Elt m(Elt g, Elt h) const { return mul[static_cast<size_t>(g) * n + h]; }
    Elt a(Elt g) const { return alpha[g]; }
    Elt a_pow(Elt g, int k) const {
        for (int i = 0; i < k; ++i) g = alpha[g];
        return g;
    }
    bool regular() const;
    bool abelian() const;
};

// Checks table sizes and ranges; throws structural_error.
void validate_tables(const FiniteHomGroup& G);

struct AxiomVerdict {
    bool pass = true;
    std::optional<FailureWitness> witness;
};

struct AxiomReport {
    AxiomVerdict hom_associativity;
    AxiomVerdict alpha_multiplicative;
    AxiomVerdict hom_unitarity;
    AxiomVerdict inverse_antimorphism;
    AxiomVerdict hom_invertibility;
    bool regular = false;
    bool abelian = false;
    std::vector<int> inv_index;  // per element, when hom_invertibility passes

    // Derived assertions, checked whenever their hypotheses pass:
    //   remark_1_2_1: unitarity + hom-associativity force multiplicativity
    //   remark_1_2_4: alpha(inv g) = inv(alpha g)
    //   left_cancellation: on regular G, g*h = g*k => h = k
    bool remark_1_2_1 = true;
    bool remark_1_2_4 = true;
    bool left_cancellation = true;

    bool all_pass() const {
        return hom_associativity.pass && alpha_multiplicative.pass && hom_unitarity.pass &&
               inverse_antimorphism.pass && hom_invertibility.pass;
    }
    std::optional<FailureWitness> first_witness() const;
};

AxiomReport check_hom_group(const FiniteHomGroup& G);

// (inv(g), k) with k minimal such that alpha^k(g g^-1) = alpha^k(g^-1 g) = e.
// Also asserts Remark 1.2(4): the index of alpha(g) is max(k-1, 0).
std::pair<Elt, int> inverse_and_index(const FiniteHomGroup& G, Elt g);

// Twist group G_alpha: mu_a(g,h) = endo(g*h), inverse = group inverse.
// group_mul must be an honest group table and endo one of its endomorphisms;
// violations are rejected with a witness in the exception message.
FiniteHomGroup twist_group(const Table& group_mul, const Table& endo);

FiniteHomGroup direct_product(const FiniteHomGroup& G, const FiniteHomGroup& H);

// q-additive integers on the window [-bound, bound]: n +_q m = q(n+m),
// alpha(n) = q n. Triples whose intermediates leave the window are skipped
// and counted, never failed.
struct QAdditiveReport {
    long long checked = 0;
    long long skipped = 0;
    long long failures = 0;
    std::optional<std::array<long long, 3>> witness;
};
QAdditiveReport q_additive_window(long long q, long long bound);

enum class IdentityStatus { Pass, Fail, NotApplicable };

struct IdentityVerdict {
    IdentityStatus status = IdentityStatus::Pass;
    std::optional<FailureWitness> witness;
};

// The section-1 identity propositions, each as a literal quantified
// assertion over tuples (hypothesis ranges sampled over a full alpha-orbit
// period so "for all i >= index" is covered).
struct StructureIdentityReport {
    IdentityVerdict cancellation;         // Prop R1
    IdentityVerdict medial_commutation;   // Lemma RR1
    IdentityVerdict commutation;          // Prop RRR1
    IdentityVerdict interchange;          // lemmeRS, abelian regular only
    IdentityVerdict squaring_criterion;   // g -> g*g homomorphism iff abelian, regular only
    bool all_pass_or_na() const;
};
StructureIdentityReport check_structure_identities(const FiniteHomGroup& G);

// Hom-group homomorphism as a value table; flags recomputed from the tables.
struct HomMap {
    Table map;
    bool multiplicative = false;
    bool alpha_equivariant = false;
    bool unit_preserving = false;
};

struct HomSearchResult {
    std::vector<HomMap> maps;
    bool truncated = false;
};

// All f with f(g*h) = f(g)f(h) and f.alpha_G = alpha_H.f, by backtracking
// with early pruning; truncates at the configured budget.
HomSearchResult enumerate_homomorphisms(const FiniteHomGroup& G, const FiniteHomGroup& H);

// Hom(G,H) for abelian regular G, H: pointwise sum, alpha(f) = alpha_H o f.
struct HomGroupOfMaps {
    FiniteHomGroup group;
    std::vector<HomMap> elements;  // element i of .group is elements[i]
};
HomGroupOfMaps hom_group_of_homomorphisms(const FiniteHomGroup& G, const FiniteHomGroup& H);

bool is_homomorphism(const FiniteHomGroup& G, const FiniteHomGroup& H, const Table& f);
HomMap make_hom_map(const FiniteHomGroup& G, const FiniteHomGroup& H, const Table& f);

}  // namespace homcat
