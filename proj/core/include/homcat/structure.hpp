#pragma once

#include <optional>
#include <set>
#include <vector>

#include "homcat/group.hpp"
#include "homcat/types.hpp"

namespace homcat {

// Subset of a structure's carrier, kept as a membership mask.
struct SubSet {
    int n = 0;
    std::vector<char> in;

    SubSet() = default;
    explicit SubSet(int order) : n(order), in(order, 0) {}
    static SubSet of(int order, std::initializer_list<Elt> xs) {
        SubSet s(order);
        for (Elt x : xs) s.in[x] = 1;
        return s;
    }
    bool contains(Elt x) const { return in[x] != 0; }
    void add(Elt x) { in[x] = 1; }
    int size() const;
    std::vector<Elt> elements() const;
    bool operator==(const SubSet& o) const { return n == o.n && in == o.in; }
    bool operator<(const SubSet& o) const { return in < o.in; }
    bool subset_of(const SubSet& o) const;
};

struct SubgroupVerdict {
    bool ok = false;
    std::optional<FailureWitness> witness;
    bool alpha_stable = false;  // alpha(S) subset of S; consequence of closure, asserted
};

SubgroupVerdict is_hom_subgroup(const FiniteHomGroup& G, const SubSet& S);

// Least superset of seeds containing e and closed under mul, inv, alpha.
SubSet generated_hom_subgroup(const FiniteHomGroup& G, const std::vector<Elt>& seeds);

struct NormalityVerdict {
    bool normal = false;
    std::optional<FailureWitness> witness;
    bool used_coset_fallback = false;  // non-regular G: only gH = Hg was tested
};

NormalityVerdict is_normal(const FiniteHomGroup& G, const SubSet& H);

// The sub-Hom-group on S as a structure of its own (elements reindexed in
// increasing order). S must be certified first.
FiniteHomGroup restrict_to(const FiniteHomGroup& G, const SubSet& S, std::vector<Elt>* order = nullptr);

struct CanonicalSubgroups {
    SubSet center;
    std::optional<SubSet> centralizer;       // when H given
    std::optional<SubSet> normalizer;        // when H given
    bool center_is_subgroup = false;
    bool center_is_normal = false;
    bool center_alpha_orbit_stable = false;  // alpha^k(Z) subset Z for k <= n
    bool centralizer_normal_in_normalizer = false;
    bool center_in_centralizer = false;
    bool centralizer_in_normalizer = false;
    // Twist-group diagnostics (underlying group available):
    std::optional<SubSet> z_alpha;
    std::optional<bool> z_alpha_equals_center;  // asserted when alpha injective
    std::optional<bool> z_alpha_is_subgroup;    // when alpha injective and alpha(Z) subset Z
};

CanonicalSubgroups canonical_subgroups(const FiniteHomGroup& G,
                                       const std::optional<SubSet>& H = std::nullopt);

struct QuotientHomGroup {
    FiniteHomGroup group;
    std::vector<Elt> coset_of;  // carrier element -> coset index
    std::vector<Elt> reps;      // coset index -> smallest member
};

// Left-coset quotient of a regular G by a normal H; asserts the coset family
// partitions G and the induced tables are single-valued, and that the result
// passes check_hom_group. When alpha(H) = H, also cross-checks the coset
// equality criterion gH = g'H  <=>  g^-1 g' in H.
QuotientHomGroup quotient(const FiniteHomGroup& G, const SubSet& H);

struct CommutatorResult {
    SubSet subgroup;       // generated closure of the commutator set
    bool bare_set_closed;  // whether {[g,h]} was already a Hom-subgroup
    bool normal;
};
CommutatorResult commutator_subgroup(const FiniteHomGroup& G);

struct Abelianization {
    QuotientHomGroup quotient;
    SubSet commutator;
    HomMap projection;   // G -> quotient.group
    bool abelian = false;
    bool projection_is_hom = false;
    bool minimal = false;  // [G,G] contained in every normal H with abelian G/H
};
Abelianization abelianization(const FiniteHomGroup& G);

struct UniversalCheck {
    bool well_defined = false;
    bool is_homomorphism = false;
    bool factors = false;   // f~ o pi = f
    bool unique = false;    // exactly one homomorphism G^ab -> H factoring f
    Table induced;          // f~ on coset indices
    bool ok() const { return well_defined && is_homomorphism && factors && unique; }
};
UniversalCheck abelianization_universal_check(const FiniteHomGroup& G, const FiniteHomGroup& H,
                                              const Table& f);

struct NormalLattice {
    std::vector<SubSet> subgroups;        // all Hom-subgroups found
    std::vector<SubSet> normal_subgroups;
    bool is_simple = false;
    std::vector<SubSet> maximal_normals;  // proper normal, maximal among proper normals
    bool simple_implies_regular = true;   // asserted on the simple verdict
    bool maximal_iff_simple_quotient = true;
    bool truncated = false;
};
NormalLattice normal_lattice(const FiniteHomGroup& G);

struct PushPullVerdict {
    bool image_normal = false;     // f(N) normal in f(G)
    bool preimage_normal = false;  // f^-1(M) normal in G
    bool kernel_normal = false;    // Ker f normal in G
    bool ok() const { return image_normal && preimage_normal && kernel_normal; }
};

// f must send e_G to e_H; N normal in G; M normal in f(G).
PushPullVerdict pushforward_pullback_check(const FiniteHomGroup& G, const FiniteHomGroup& H,
                                           const Table& f, const SubSet& N, const SubSet& M);

}  // namespace homcat
