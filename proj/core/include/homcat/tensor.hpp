#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcat/group.hpp"
#include "homcat/snf.hpp"
#include "homcat/types.hpp"

namespace homcat {

// Hom-bilinear candidate f : A x B -> C as a full value table (row a, col b).
struct BilinearTable {
    FiniteHomGroup A, B, C;
    Table f;  // |A| * |B|
    Elt at(Elt a, Elt b) const { return f[static_cast<size_t>(a) * B.n + b]; }
};

struct BilinearReport {
    AxiomVerdict additive_left;    // f(a1 a2, alpha_B b) = f(a1,b) + f(a2,b)
    AxiomVerdict additive_right;   // f(alpha_A a, b1 b2) = f(a,b1) + f(a,b2)
    AxiomVerdict equivariance;     // f(alpha_A a, alpha_B b) = alpha_C f(a,b)
    // Lemma consequences, asserted once the identities pass:
    bool units_annihilate = true;      // f(e,b) = f(a,e) = 0
    bool inverse_rule = true;          // f(a^-1,b) = -f(a,b), f(a,b^-1) = -f(a,b)
    bool image_commutes = true;
    bool commutators_killed = true;    // f([a1,a2],b) = f(a,[b1,b2]) = 0
    bool bilinear() const {
        return additive_left.pass && additive_right.pass && equivariance.pass;
    }
    bool lemmas() const {
        return units_annihilate && inverse_rule && image_commutes && commutators_killed;
    }
    std::optional<FailureWitness> first_witness() const;
};

BilinearReport is_hom_bilinear(const BilinearTable& f);

enum class Provenance { PaperConstruction, Oracle };

// Finitely presented abelian group materialized as a twisted Hom-group:
// generators modulo integer relations, with the hom-addition x + y =
// sigma(x +o y) induced by a permutation of the generators.
struct TwistedPresentation {
    FiniteHomGroup carrier;
    std::vector<Elt> generator_class;  // generator index -> carrier element
    std::vector<long long> invariant_factors;
    SmithQuotient q;
    std::vector<int> live;        // coordinates with diag != 1
    std::vector<long long> dims;  // their moduli

    Elt class_of(const std::vector<long long>& generator_vec) const;
    std::vector<long long> lift(Elt x) const;  // a generator-space representative
};

TwistedPresentation present_twisted_abelian(const IntMat& relation_rows, int generators,
                                            const std::vector<int>& sigma_perm);

struct TensorCandidate {
    FiniteHomGroup carrier;
    Table tau;  // (a * |B| + b) -> carrier element
    Provenance provenance = Provenance::Oracle;
    std::vector<long long> invariant_factors;
    std::optional<TwistedPresentation> oracle;
};

// Paper construction: carrier = A^ab x B^ab, tau(a,b) = (pi_A a, pi_B b).
// Bilinearity of tau is measured by the caller, never assumed.
TensorCandidate tensor_paper(const FiniteHomGroup& A, const FiniteHomGroup& B);

// Relation-quotient oracle: the abelian group presented by generators a(x)b
// and the relations Hom-bilinearity of the canonical map forces, computed by
// exact integer Smith reduction; the twist permutes generators by
// (a,b) -> (alpha a, alpha b). The canonical map is certified Hom-bilinear.
TensorCandidate tensor_oracle(const FiniteHomGroup& A, const FiniteHomGroup& B);

enum class UniversalStatus { Satisfied, Violated, Truncated };

struct UniversalVerdict {
    UniversalStatus status = UniversalStatus::Satisfied;
    // When violated: either tau itself is not Hom-bilinear (witness from the
    // report) or some bilinear f lacks (or admits several) factorizations.
    std::optional<FailureWitness> witness;
    std::string detail;
    long long bilinear_maps_checked = 0;
};

UniversalVerdict universal_property_check(const FiniteHomGroup& A, const FiniteHomGroup& B,
                                          const TensorCandidate& cand,
                                          const FiniteHomGroup& target);

struct SymmetryVerdict {
    bool isomorphic = false;
    bool factors_match = false;
    std::string detail;
};
SymmetryVerdict symmetry_check(const FiniteHomGroup& A, const FiniteHomGroup& B);

}  // namespace homcat
