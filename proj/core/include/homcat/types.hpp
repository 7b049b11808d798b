#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homcat {

// Element of a finite table-based structure: an index in [0, n).
using Elt = int;

// Tables are stored row-major: mul[g*n + h] = g*h.
using Table = std::vector<Elt>;

// Raised when an input table is malformed (entry out of range, wrong size,
// missing inverse, ...). Structures that fail here never get an axiom report.
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed the configured budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal invariant breach (reduction step accounting, SNF overflow, ...).
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg), line(line_), column(col_) {}
};

// Enumeration bounds. HOMCAT_BUDGET, when set, overrides every count-style
// bound with a single value; structure-size bounds stay put.
struct Budget {
    long long hom_search = 10'000'000;      // |H|^|G| cap for map enumeration
    long long bilinear_family = 10'000'000; // |C|^(|A||B|) cap
    long long carrier = 4096;               // materialized-carrier cap (group rings, tensors)
    int lattice_max_n = 24;                 // subgroup/submodule lattice enumeration
    int lattice_max_gens = 3;
};

const Budget& budget();

// Smallest-witness convention: reports carry the lexicographically first
// failing tuple, so every verdict is deterministic.
struct FailureWitness {
    std::string axiom;
    std::vector<Elt> tuple;
};

}  // namespace homcat
