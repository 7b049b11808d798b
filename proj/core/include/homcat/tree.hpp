#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homcat/types.hpp"

namespace homcat {

enum class Color : uint8_t { Black, White };  // black = generator, white = its inverse

using Weight = long long;

// Super-leaf weighted bicolored binary tree. Unit is the empty tree; interior
// Units never survive construction (grafting absorbs them into alpha-shifts),
// so every SLTree is canonical in the unit-absorption sense.
class SLTree {
  public:
    struct Node;
    using Ptr = std::shared_ptr<const Node>;

    struct Node {
        bool leaf;
        // leaf payload
        std::string label;
        Color color = Color::Black;
        Weight weight = 0;
        // node payload
        Ptr left, right;
    };

    SLTree() = default;  // Unit

    static SLTree unit() { return SLTree(); }
    static SLTree leaf(std::string label, Color c, Weight w);

    bool is_unit() const { return !node_; }
    bool is_leaf() const { return node_ && node_->leaf; }
    bool is_node() const { return node_ && !node_->leaf; }
    const Node& node() const { return *node_; }
    SLTree left() const { return SLTree(node_->left); }
    SLTree right() const { return SLTree(node_->right); }

    int leaf_count() const;
    bool operator==(const SLTree& o) const { return equal(node_, o.node_); }
    bool operator!=(const SLTree& o) const { return !(*this == o); }

  private:
    explicit SLTree(Ptr p) : node_(std::move(p)) {}
    static bool equal(const Ptr& a, const Ptr& b);
    Ptr node_;
    friend SLTree graft_raw(const SLTree&, const SLTree&);
    friend SLTree alpha_shift(const SLTree&, Weight);
    friend SLTree mirror_inverse(const SLTree&);
};

// Grafting with eager unit absorption: 1 v t = t v 1 = alpha(t), 1 v 1 = 1.
SLTree graft(const SLTree& a, const SLTree& b);

// Every leaf weight shifted by k (the k-th power of the twist map).
SLTree alpha_shift(const SLTree& t, Weight k);

// Children of every node interchanged and every leaf color flipped. On
// 1-trees the child swap is vacuous and only the color flips, which makes
// the map a global involution agreeing with the inverse map on leaves.
SLTree mirror_inverse(const SLTree& t);

// The inverse map: unit -> unit, leaf -> color flip, n-tree -> mirror.
SLTree hom_inverse(const SLTree& t);

// Leaves in planar order plus, per adjacent pair, the LCA-relative spine
// depths: p = right-spine depth of leaf i below the LCA's left child,
// q = left-spine depth of leaf i+1 below the LCA's right child.
struct LeafView {
    int position = 0;
    std::string label;
    Color color = Color::Black;
    Weight weight = 0;
    int depth = 0;  // edges from the root
};
struct AdjacentPair {
    int left_pos = 0;  // pair (left_pos, left_pos+1)
    int p = 0;
    int q = 0;
    bool lca_in_left_subtree = false;   // LCA strictly inside the root's left subtree
    bool lca_in_right_subtree = false;
};
std::vector<LeafView> leaf_views(const SLTree& t);
std::vector<AdjacentPair> adjacent_pairs(const SLTree& t);

enum class RuleId : uint8_t { LAL, RAL, LDL, RDL, DL1, DL2, DL3, DL4, GEN };
std::string rule_name(RuleId r, int p, int q);

// strict: only the eight shallow shapes, (p,q) in
// {(0,0),(1,0),(0,1),(1,1),(2,1),(1,2),(2,2)}, with their weight offsets.
// general: any pair with w_i + p = w_{i+1} + q (the cancellation condition
// the Hom-group semantics forces at arbitrary spine depth).
enum class RedexMode : uint8_t { Strict, General };

struct Redex {
    int position = 0;  // leaf pair (position, position+1)
    RuleId rule = RuleId::GEN;
    int p = 0;
    int q = 0;
    Weight left_weight = 0;
    Weight right_weight = 0;
};

std::vector<Redex> find_redexes(const SLTree& t, RedexMode mode = RedexMode::General);

// Replaces the pair's leaves by the unit and renormalizes. Throws
// structural_error if r is stale (not currently a redex of t).
SLTree reduce_step(const SLTree& t, const Redex& r);

struct ReductionStep {
    SLTree before;
    Redex redex;
    SLTree after;
};
using ReductionTrace = std::vector<ReductionStep>;

struct Strategy {
    enum class Kind : uint8_t { Leftmost, Rightmost, Random } kind = Kind::Leftmost;
    uint64_t seed = 0;
    static Strategy leftmost() { return {}; }
    static Strategy rightmost() { return {Kind::Rightmost, 0}; }
    static Strategy random(uint64_t seed) { return {Kind::Random, seed}; }
};

struct NormalFormResult {
    SLTree tree;
    ReductionTrace trace;
};

// Reduces until no redex remains. Reduced trees are only unique up to the
// word they spell (leaf i contributes alpha^(w_i + depth_i) of the
// generator), so the general mode returns the canonical comb representative
// of that word; strategy choice then only affects the trace. Strict mode
// returns the raw final tree so divergences from the drawn-shape system stay
// observable.
NormalFormResult normal_form(const SLTree& t, Strategy strategy = Strategy::leftmost(),
                             RedexMode mode = RedexMode::General);

// The word spelled by a tree and its canonical comb tree.
struct WordSymbol {
    std::string label;
    Color color;
    Weight shifted_weight;  // w_i + depth_i
    bool operator==(const WordSymbol& o) const = default;
};
std::vector<WordSymbol> tree_word(const SLTree& t);
SLTree comb_tree_of_word(const std::vector<WordSymbol>& w);

// Product and inverse of the free regular Hom-group: reduced grafting.
SLTree fg_multiply(const SLTree& a, const SLTree& b);

// Randomized law checker for the free Hom-group.
struct SamplerConfig {
    int rounds = 1000;
    int max_leaves = 12;
    Weight weight_lo = -3;
    Weight weight_hi = 3;
    int labels = 2;
    uint64_t seed = 0x5eed;
};
struct FreeAxiomReport {
    int rounds = 0;
    int alpha_multiplicative_failures = 0;
    int hom_associativity_failures = 0;
    int unit_law_failures = 0;
    int inverse_law_failures = 0;
    int antimorphism_failures = 0;
    int strategy_divergences = 0;
    int strict_general_divergences = 0;  // reported, not failed
    std::vector<std::string> failure_trees;
    std::vector<std::string> strict_divergence_witnesses;
    bool ok() const {
        return alpha_multiplicative_failures == 0 && hom_associativity_failures == 0 &&
               unit_law_failures == 0 && inverse_law_failures == 0 &&
               antimorphism_failures == 0 && strategy_divergences == 0;
    }
};
FreeAxiomReport check_free_axioms(const SamplerConfig& cfg);

SLTree random_tree(uint64_t& state, int max_leaves, Weight lo, Weight hi, int labels);

// Byte-exact tree grammar:
//   tree  := "1" | leaf | "(" tree " " tree ")"
//   leaf  := label ["'"] "@" weight
//   label := [a-zA-Z][a-zA-Z0-9_]*
//   weight:= ["-"] digits        (|weight| < 2^62; larger literals rejected)
SLTree parse_tree(const std::string& text);
std::string format_tree(const SLTree& t);

// Exhaustive local-confluence joinability over every tree with the given
// leaf count, one label, and weights in [lo, hi]: for each tree with at
// least two redexes, all one-step reducts must share a normal form. Every
// multi-redex tree is joined at the word level; every machine_stride-th one
// additionally runs the full SLTree reduce_step / normal_form machinery and
// must agree with the word prediction.
struct JoinabilityReport {
    long long trees_with_two_redexes = 0;
    long long violations = 0;
    long long machine_checked = 0;
    long long machine_mismatches = 0;
    std::optional<std::string> witness;
};
JoinabilityReport local_confluence_exhaustive(int leaves, Weight lo, Weight hi,
                                              RedexMode mode = RedexMode::General,
                                              long long machine_stride = 64);

}  // namespace homcat
