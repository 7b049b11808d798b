#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homcat/group.hpp"
#include "homcat/structure.hpp"
#include "homcat/types.hpp"

namespace homcat {

// Hom-ring over element indices. ring_type is declared, never inferred, so
// one set of tables can be checked against either axiom system. beta = id is
// an explicit table like any other.
struct FiniteHomRing {
    int n = 0;
    Elt zero = 0;
    std::optional<Elt> one;
    Table add, mul;       // n*n
    Table alpha, beta;    // n
    Table add_inv;        // n
    int ring_type = 1;    // 1 or 2

    Elt ad(Elt x, Elt y) const { return add[static_cast<size_t>(x) * n + y]; }
    Elt ml(Elt x, Elt y) const { return mul[static_cast<size_t>(x) * n + y]; }
    Elt a(Elt x) const { return alpha[x]; }
    Elt b(Elt x) const { return beta[x]; }
    Elt neg(Elt x) const { return add_inv[x]; }
    bool regular() const;
    FiniteHomGroup additive_group() const;
};

void validate_tables(const FiniteHomRing& A);

struct RingReport {
    AxiomReport additive;            // abelian Hom-group (+, 0, alpha)
    bool additive_abelian = false;
    AxiomVerdict beta_additive;      // beta endo of the additive Hom-group
    AxiomVerdict beta_commutes;      // alpha.beta = beta.alpha
    AxiomVerdict alpha_multiplicative;
    AxiomVerdict beta_multiplicative;
    AxiomVerdict hom_associativity;  // MK1 or the type-2 form
    AxiomVerdict left_distributive;  // MK2 or the type-2 form
    AxiomVerdict right_distributive; // MK3 or the type-2 form
    AxiomVerdict unit_laws;          // MK4 (or x1 = beta x, 1x = alpha x) -- unitary only
    AxiomVerdict unit_fixed;         // MK5 -- unitary only
    // Derived laws, asserted for unitary regular inputs:
    bool zero_laws = true;           // a 0 = 0 a = 0
    bool negation_laws = true;       // (-a)b = a(-b) = -(ab)
    // Unitary type (1): MK1+MK2+MK4+MK5 already force beta to be an
    // endomorphism and multiplicative; asserted whenever those pass.
    bool beta_derivation = true;
    bool all_pass() const;
    std::optional<FailureWitness> first_witness() const;
};

RingReport check_hom_ring(const FiniteHomRing& A);

// Ordinary (associative, distributive) ring given by tables.
struct RingTables {
    int n = 0;
    Elt zero = 0;
    std::optional<Elt> one;
    Table add, mul;
};

// Validates ring axioms; throws structural_error with a witness location.
void validate_ordinary_ring(const RingTables& R);

// Twist ring: x +~ y = alpha(x+y); type (1): x *~ y = beta(x y),
// type (2): x *~ y = beta(x) alpha(y). alpha and beta must be commuting ring
// endomorphisms. The unit, when one exists satisfying the unit laws, is
// endo-image of the base unit (they coincide for bijective twists).
FiniteHomRing twist_ring(const RingTables& R, const Table& alpha, const Table& beta,
                         int target_type);

// Untwisting a regular Hom-ring: x +' y = alpha^-1(x+y); type (1):
// x *' y = beta^-1(x y); type (2): x *' y = beta^-1(x) alpha^-1(y).
RingTables compatible_ring(const FiniteHomRing& A);

// twist_ring(compatible_ring(A)) == A, table for table.
bool compatible_round_trip_exact(const FiniteHomRing& A);

// The eight identities of the type-equivalence lemmas, verified exhaustively
// on a regular alpha-Hom-ring (alpha == beta).
struct TypeEquivalenceReport {
    std::vector<std::pair<std::string, AxiomVerdict>> identities;
    bool all_pass() const;
};
TypeEquivalenceReport type_equivalence_check(const FiniteHomRing& A);

struct RingCenter {
    SubSet members;
    bool closed_add = false, closed_neg = false, closed_mul = false;
    bool closed_alpha = false, closed_beta = false;
    bool has_zero = false, has_one = false;
    bool certified() const {
        return closed_add && closed_neg && closed_mul && closed_alpha && closed_beta && has_zero &&
               has_one;
    }
};
RingCenter ring_center(const FiniteHomRing& A);

// (End(M), pointwise +, composition, 0, alpha_M o -, id) for an abelian
// regular Hom-group M, exactly as the source construction states it.
struct EndomorphismRing {
    FiniteHomRing ring;
    std::vector<Table> elements;  // ring element i is the map elements[i]
};
EndomorphismRing endomorphism_hom_ring(const FiniteHomGroup& M);

// Twisted group ring F_p[G] for a group table and one of its automorphisms;
// the carrier (all coefficient vectors, p^|G| elements) must fit the budget.
struct GroupRingBasis {
    FiniteHomRing ring;
    int p = 0;
    int group_order = 0;
    // element index is the base-p expansion over group-element coefficients
};
GroupRingBasis twisted_group_ring(const Table& group_mul, const Table& automorphism, int p);

// Backtracking derivation of an inverse map for an additive/multiplicative
// structure lacking one: per element, candidates with minimal invertibility
// index, assembled into an antimorphism-consistent table (lexicographically
// least). Returns nullopt when no assignment works.
std::optional<Table> derive_inverse_map(int n, const Table& mul, const Table& alpha, Elt e);

// Sparse group-ring element over F_p: group element -> coefficient, zero
// coefficients dropped. Element-level arithmetic stays available past the
// carrier bound that gates whole-ring materialization.
struct GroupRingElem {
    std::map<Elt, long long> coeff;
    bool operator==(const GroupRingElem& o) const { return coeff == o.coeff; }
};

struct GroupRingContext {
    Table group_mul;  // g*g
    Table aut;        // g, a group automorphism
    int group_order = 0;
    long long p = 2;
};

GroupRingElem gre_basis(const GroupRingContext& ctx, Elt g, long long c = 1);
// x +~ y: coefficients added, then reindexed through the automorphism.
GroupRingElem gre_add(const GroupRingContext& ctx, const GroupRingElem& a, const GroupRingElem& b);
// x *~ y: convolution over the group, then reindexed.
GroupRingElem gre_mul(const GroupRingContext& ctx, const GroupRingElem& a, const GroupRingElem& b);
GroupRingElem gre_alpha(const GroupRingContext& ctx, const GroupRingElem& a);

}  // namespace homcat
