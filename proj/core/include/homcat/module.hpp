#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcat/ring.hpp"
#include "homcat/snf.hpp"
#include "homcat/structure.hpp"
#include "homcat/types.hpp"

namespace homcat {

enum class ModuleSide { Left, Right, Bi };

// Which reading of the printed module-homomorphism condition applies when
// comparing maps; the source text's line is ill-typed, the twisted reading
// is the one that makes kernels and images submodules.
enum class ModuleHomConvention { Twisted /* f(am) = alpha(a) f(m) */, Plain /* f(am) = a f(m) */ };

// Module over an alpha-Hom-ring of type (1) (alpha == beta on the ring).
struct FiniteHomModule {
    FiniteHomRing ring;  // must be unitary type (1) with alpha == beta
    int m = 0;
    Elt mzero = 0;
    Table madd;      // m*m
    Table beta;      // m
    Table madd_inv;  // m
    Table act_left;  // |ring| * m
    std::optional<Table> act_right;  // m * |ring|

    Elt ad(Elt x, Elt y) const { return madd[static_cast<size_t>(x) * m + y]; }
    Elt b(Elt x) const { return beta[x]; }
    Elt act(Elt a, Elt x) const { return act_left[static_cast<size_t>(a) * m + x]; }
    Elt actr(Elt x, Elt a) const { return (*act_right)[static_cast<size_t>(x) * ring.n + a]; }
    bool regular() const;
    FiniteHomGroup additive_group() const;
};

void validate_tables(const FiniteHomModule& M);

struct ModuleReport {
    AxiomReport additive;
    bool additive_abelian = false;
    AxiomVerdict m1, m2, m3, m4;       // per requested side (left uses act_left, ...)
    AxiomVerdict m5;                   // derived: beta(am) = alpha(a) beta(m)
    AxiomVerdict zero_laws;            // 0_A m = 0_M (and m 0_A = 0_M on the right)
    AxiomVerdict bimodule_compat;      // (am)alpha(b) = alpha(a)(mb), Bi only
    bool all_pass() const;
    std::optional<FailureWitness> first_witness() const;
};

ModuleReport check_module(const FiniteHomModule& M, ModuleSide side);

// A over itself: left/right action by multiplication.
FiniteHomModule ring_as_module(const FiniteHomRing& A);

FiniteHomModule direct_sum(const FiniteHomModule& M, const FiniteHomModule& N);

SubSet submodule_closure(const FiniteHomModule& M, const std::vector<Elt>& seeds);

struct SubmoduleAnalysis {
    std::vector<SubSet> submodules;
    bool is_simple = false;
    SubSet ker_beta;
    bool ker_beta_is_submodule = false;
    bool simple_implies_regular = true;  // asserted when simple
    bool truncated = false;
};
SubmoduleAnalysis submodule_analysis(const FiniteHomModule& M);

// Ordinary module over the compatible ring.
struct OrdinaryModule {
    RingTables ring;
    int m = 0;
    Elt mzero = 0;
    Table add;  // m*m
    Table act;  // |ring| * m
};
void validate_ordinary_module(const OrdinaryModule& M);

struct CompatibleModule {
    OrdinaryModule forward;  // a |> m = beta^-1(a m), + = beta^-1 o +_M
    bool compat_eq = false;  // beta(a |> m) = alpha(a) |> beta(m) on all pairs
};
CompatibleModule compatible_module(const FiniteHomModule& M);

// Theorem-backed rebuild: ordinary module + automorphism beta satisfying the
// compatibility equation gives back the Hom-module with a m = beta(a |> m).
FiniteHomModule hom_module_from_compatible(const FiniteHomRing& A, const OrdinaryModule& M,
                                           const Table& beta);
bool compatible_round_trip_exact(const FiniteHomModule& M);

struct SemisimpleDecomposition {
    Elt chosen_m = 0;
    int orbit_length = 0;              // k: least k with beta^k(m) = m
    std::vector<SubSet> summands;      // A |> beta^i(m) inside the compatible module
    bool direct = false;
    bool covers = false;               // sum equals the whole carrier
    std::optional<FailureWitness> overlap_witness;
    std::vector<bool> summand_simple;  // over the compatible ring
};
SemisimpleDecomposition semisimple_decomposition(const FiniteHomModule& M);

// Module homomorphism f : M -> N over the same ring: additive over the
// hom-addition, beta-equivariant, and compatible with the action under the
// chosen convention (Twisted: f(a m) = alpha(a) f(m); Plain: f(a m) = a f(m)).
struct ModuleHomReport {
    bool additive = false;
    bool beta_equivariant = false;
    bool action_compatible = false;
    bool is_hom() const { return additive && beta_equivariant && action_compatible; }
    // kernel/image closure under the module operations, the property that
    // separates the two readings on twisted instances
    bool kernel_is_submodule = false;
    bool image_is_submodule = false;
};
ModuleHomReport check_module_homomorphism(const FiniteHomModule& M, const FiniteHomModule& N,
                                          const Table& f,
                                          ModuleHomConvention convention = ModuleHomConvention::Twisted);

struct RingSimplicity {
    SubmoduleAnalysis over_itself;
    bool simple = false;
    bool semisimple = false;
    bool regular_asserted = true;  // simple => alpha bijective
    bool truncated = false;
};
RingSimplicity hom_ring_simplicity(const FiniteHomRing& A);

// Hom-R-bilinear table f : M x N -> C (M right, N left over the same ring;
// C an abelian regular Hom-group).
struct HomRBilinearTable {
    const FiniteHomModule* M = nullptr;  // right module (act_right set)
    const FiniteHomModule* N = nullptr;  // left module
    FiniteHomGroup C;
    Table f;  // |M| * |N|
    Elt at(Elt x, Elt y) const { return f[static_cast<size_t>(x) * N->m + y]; }
};
struct HomRBilinearReport {
    AxiomVerdict additive_left, additive_right, equivariance, balanced;
    bool bilinear() const {
        return additive_left.pass && additive_right.pass && equivariance.pass && balanced.pass;
    }
    std::optional<FailureWitness> first_witness() const;
};
HomRBilinearReport hom_R_bilinear_check(const HomRBilinearTable& f);

struct TensorOverRing {
    FiniteHomGroup carrier;
    Table tau;  // (x * |N| + y) -> carrier element
    std::vector<long long> invariant_factors;
    bool tau_certified = false;
    // Bimodule case: left action r (x(x)y) = (r x)(x)y, when well-defined.
    std::optional<Table> left_action;  // |ring| * carrier
    bool left_action_well_defined = false;
    bool left_module_axioms = false;
};
TensorOverRing tensor_over_R_oracle(const FiniteHomModule& M, const FiniteHomModule& N);

}  // namespace homcat
