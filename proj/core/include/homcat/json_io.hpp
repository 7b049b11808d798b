#pragma once

#include <string>

#include <json.hpp>

#include "homcat/group.hpp"
#include "homcat/module.hpp"
#include "homcat/poly.hpp"
#include "homcat/ring.hpp"
#include "homcat/structure.hpp"
#include "homcat/tensor.hpp"

namespace homcat {

using json = nlohmann::json;

// {"n", "e", "mul": [[..]], "alpha": [..], "inv": [..]?} — row-major,
// elements 0..n-1. A missing "inv" is derived (minimal invertibility index,
// antimorphism-consistent); derivation failure is a schema error.
FiniteHomGroup group_from_json(const json& j);
json group_to_json(const FiniteHomGroup& G);

// {"n","zero","one"?,"add","mul","alpha","beta","type"}; the additive
// inverse table is derived the same way.
FiniteHomRing ring_from_json(const json& j);
json ring_to_json(const FiniteHomRing& A);

// {"ring": <inline ring>, "m", "mzero", "madd", "beta", "act_left",
//  "act_right"?}
FiniteHomModule module_from_json(const json& j);
json module_to_json(const FiniteHomModule& M);

// {"A": <group>, "B": <group>, "C": <group>, "f": [[..]]}
BilinearTable bilinear_from_json(const json& j);

// {"p", "subst": {"X": k, ...}, "terms": [[exponent, coeff], ...]} —
// single-variable form; multivariate uses exponent arrays.
TwistedPolynomial poly_from_json(const json& j);
json poly_to_json(const TwistedPolynomial& P);

json subset_to_json(const SubSet& S);
json axiom_report_to_json(const AxiomReport& r);
json ring_report_to_json(const RingReport& r);
json module_report_to_json(const ModuleReport& r);
json witness_to_json(const FailureWitness& w);

}  // namespace homcat
