#include "homcat/tree.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>

namespace homcat {

namespace {

constexpr Weight kWeightCap = (1LL << 62);

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t rng_below(uint64_t& state, uint64_t n) { return splitmix64(state) % n; }

}  // namespace

SLTree SLTree::leaf(std::string label, Color c, Weight w) {
    auto n = std::make_shared<Node>();
    n->leaf = true;
    n->label = std::move(label);
    n->color = c;
    n->weight = w;
    return SLTree(std::move(n));
}

bool SLTree::equal(const Ptr& a, const Ptr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->leaf != b->leaf) return false;
    if (a->leaf)
        return a->label == b->label && a->color == b->color && a->weight == b->weight;
    return equal(a->left, b->left) && equal(a->right, b->right);
}

int SLTree::leaf_count() const {
    if (is_unit()) return 0;
    if (is_leaf()) return 1;
    return left().leaf_count() + right().leaf_count();
}

SLTree graft_raw(const SLTree& a, const SLTree& b) {
    auto n = std::make_shared<SLTree::Node>();
    n->leaf = false;
    n->left = a.node_;
    n->right = b.node_;
    return SLTree(std::move(n));
}

SLTree graft(const SLTree& a, const SLTree& b) {
    if (a.is_unit() && b.is_unit()) return SLTree::unit();
    if (a.is_unit()) return alpha_shift(b, 1);
    if (b.is_unit()) return alpha_shift(a, 1);
    return graft_raw(a, b);
}

SLTree alpha_shift(const SLTree& t, Weight k) {
    if (t.is_unit() || k == 0) return t;
    if (t.is_leaf()) {
        const auto& l = t.node();
        if (l.weight > kWeightCap - std::abs(k) || l.weight < -kWeightCap + std::abs(k))
            throw internal_error("alpha_shift: weight out of range");
        return SLTree::leaf(l.label, l.color, l.weight + k);
    }
    return graft_raw(alpha_shift(t.left(), k), alpha_shift(t.right(), k));
}

SLTree mirror_inverse(const SLTree& t) {
    if (t.is_unit()) return t;
    if (t.is_leaf()) {
        const auto& l = t.node();
        return SLTree::leaf(l.label, l.color == Color::Black ? Color::White : Color::Black,
                            l.weight);
    }
    return graft_raw(mirror_inverse(t.right()), mirror_inverse(t.left()));
}

SLTree hom_inverse(const SLTree& t) { return mirror_inverse(t); }

namespace {

void walk_leaves(const SLTree& t, int depth, std::vector<LeafView>& leaves,
                 std::vector<std::vector<uint8_t>>& paths, std::vector<uint8_t>& path) {
    if (t.is_unit()) return;
    if (t.is_leaf()) {
        const auto& l = t.node();
        leaves.push_back({static_cast<int>(leaves.size()), l.label, l.color, l.weight, depth});
        paths.push_back(path);
        return;
    }
    path.push_back(0);
    walk_leaves(t.left(), depth + 1, leaves, paths, path);
    path.back() = 1;
    walk_leaves(t.right(), depth + 1, leaves, paths, path);
    path.pop_back();
}

struct TreeScan {
    std::vector<LeafView> leaves;
    std::vector<AdjacentPair> pairs;
};

TreeScan scan(const SLTree& t) {
    TreeScan s;
    std::vector<std::vector<uint8_t>> paths;
    std::vector<uint8_t> path;
    walk_leaves(t, 0, s.leaves, paths, path);
    for (size_t i = 0; i + 1 < s.leaves.size(); ++i) {
        const auto& a = paths[i];
        const auto& b = paths[i + 1];
        size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
        AdjacentPair pr;
        pr.left_pos = static_cast<int>(i);
        pr.p = static_cast<int>(a.size() - k - 1);
        pr.q = static_cast<int>(b.size() - k - 1);
        pr.lca_in_left_subtree = k > 0 && a[0] == 0;
        pr.lca_in_right_subtree = k > 0 && a[0] == 1;
        s.pairs.push_back(pr);
    }
    return s;
}

}  // namespace

std::vector<LeafView> leaf_views(const SLTree& t) { return scan(t).leaves; }
std::vector<AdjacentPair> adjacent_pairs(const SLTree& t) { return scan(t).pairs; }

std::string rule_name(RuleId r, int p, int q) {
    switch (r) {
        case RuleId::LAL: return "LAL";
        case RuleId::RAL: return "RAL";
        case RuleId::LDL: return "LDL";
        case RuleId::RDL: return "RDL";
        case RuleId::DL1: return "DL1";
        case RuleId::DL2: return "DL2";
        case RuleId::DL3: return "DL3";
        case RuleId::DL4: return "DL4";
        case RuleId::GEN: break;
    }
    return "GEN(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

namespace {

RuleId classify(const AdjacentPair& pr) {
    if (pr.p == 0 && pr.q == 0) return pr.lca_in_right_subtree ? RuleId::RAL : RuleId::LAL;
    if (pr.p == 1 && pr.q == 0) return RuleId::LDL;
    if (pr.p == 0 && pr.q == 1) return RuleId::RDL;
    if (pr.p == 1 && pr.q == 1) return RuleId::DL1;
    if (pr.p == 2 && pr.q == 1) return RuleId::DL2;
    if (pr.p == 1 && pr.q == 2) return RuleId::DL3;
    if (pr.p == 2 && pr.q == 2) return RuleId::DL4;
    return RuleId::GEN;
}

}  // namespace

std::vector<Redex> find_redexes(const SLTree& t, RedexMode mode) {
    auto s = scan(t);
    std::vector<Redex> out;
    for (const auto& pr : s.pairs) {
        const auto& a = s.leaves[pr.left_pos];
        const auto& b = s.leaves[pr.left_pos + 1];
        if (a.label != b.label || a.color == b.color) continue;
        if (a.weight + pr.p != b.weight + pr.q) continue;
        RuleId rule = classify(pr);
        if (mode == RedexMode::Strict && rule == RuleId::GEN) continue;
        out.push_back({pr.left_pos, rule, pr.p, pr.q, a.weight, b.weight});
    }
    return out;
}

namespace {

// Rebuilds t with leaves i and i+1 replaced by the unit; grafting absorbs.
SLTree drop_pair(const SLTree& t, int i, int& counter) {
    if (t.is_unit()) return t;
    if (t.is_leaf()) {
        int j = counter++;
        if (j == i || j == i + 1) return SLTree::unit();
        return t;
    }
    SLTree l = drop_pair(t.left(), i, counter);
    SLTree r = drop_pair(t.right(), i, counter);
    return graft(l, r);
}

}  // namespace

SLTree reduce_step(const SLTree& t, const Redex& r) {
    auto current = find_redexes(t, RedexMode::General);
    bool live = false;
    for (const auto& c : current)
        if (c.position == r.position && c.p == r.p && c.q == r.q &&
            c.left_weight == r.left_weight && c.right_weight == r.right_weight) {
            live = true;
            break;
        }
    if (!live) throw structural_error("reduce_step: stale redex");
    int counter = 0;
    return drop_pair(t, r.position, counter);
}

std::vector<WordSymbol> tree_word(const SLTree& t) {
    std::vector<WordSymbol> w;
    for (const auto& l : leaf_views(t)) w.push_back({l.label, l.color, l.weight + l.depth});
    return w;
}

SLTree comb_tree_of_word(const std::vector<WordSymbol>& w) {
    const int m = static_cast<int>(w.size());
    if (m == 0) return SLTree::unit();
    if (m == 1) return SLTree::leaf(w[0].label, w[0].color, w[0].shifted_weight);
    // Left comb: leaf 0 sits at depth m-1, leaf j >= 1 at depth m-j.
    SLTree t = SLTree::leaf(w[0].label, w[0].color, w[0].shifted_weight - (m - 1));
    for (int j = 1; j < m; ++j)
        t = graft_raw(t, SLTree::leaf(w[j].label, w[j].color, w[j].shifted_weight - (m - j)));
    return t;
}

NormalFormResult normal_form(const SLTree& t, Strategy strategy, RedexMode mode) {
    NormalFormResult res;
    res.tree = t;
    uint64_t rng = strategy.seed ^ 0x9e3779b97f4a7c15ULL;
    const int max_steps = t.leaf_count() / 2;
    while (true) {
        auto rs = find_redexes(res.tree, mode);
        if (rs.empty()) break;
        if (static_cast<int>(res.trace.size()) >= max_steps)
            throw internal_error("normal_form: step count exceeded leaf budget");
        const Redex* pick = &rs.front();
        if (strategy.kind == Strategy::Kind::Rightmost) pick = &rs.back();
        else if (strategy.kind == Strategy::Kind::Random) pick = &rs[rng_below(rng, rs.size())];
        SLTree next = reduce_step(res.tree, *pick);
        res.trace.push_back({res.tree, *pick, next});
        res.tree = next;
    }
    if (mode == RedexMode::General) res.tree = comb_tree_of_word(tree_word(res.tree));
    return res;
}

SLTree fg_multiply(const SLTree& a, const SLTree& b) {
    return normal_form(graft(a, b)).tree;
}

SLTree random_tree(uint64_t& state, int max_leaves, Weight lo, Weight hi, int labels) {
    static const char* names[] = {"g", "h", "u", "v", "w", "x", "y", "z"};
    int nl = 1 + static_cast<int>(rng_below(state, static_cast<uint64_t>(max_leaves)));
    std::function<SLTree(int)> build = [&](int n) -> SLTree {
        if (n == 1) {
            int li = static_cast<int>(rng_below(state, static_cast<uint64_t>(std::min(labels, 8))));
            Color c = rng_below(state, 2) ? Color::White : Color::Black;
            Weight w = lo + static_cast<Weight>(rng_below(state, static_cast<uint64_t>(hi - lo + 1)));
            return SLTree::leaf(names[li], c, w);
        }
        int k = 1 + static_cast<int>(rng_below(state, static_cast<uint64_t>(n - 1)));
        return graft_raw(build(k), build(n - k));
    };
    return build(nl);
}

FreeAxiomReport check_free_axioms(const SamplerConfig& cfg) {
    FreeAxiomReport rep;
    rep.rounds = cfg.rounds;
    uint64_t st = cfg.seed;
    auto sample_reduced = [&](int max_leaves) {
        return normal_form(random_tree(st, max_leaves, cfg.weight_lo, cfg.weight_hi, cfg.labels)).tree;
    };
    for (int round = 0; round < cfg.rounds; ++round) {
        SLTree raw = random_tree(st, cfg.max_leaves, cfg.weight_lo, cfg.weight_hi, cfg.labels);
        SLTree raw2 = random_tree(st, cfg.max_leaves, cfg.weight_lo, cfg.weight_hi, cfg.labels);
        SLTree a = sample_reduced(cfg.max_leaves / 2 + 1);
        SLTree b = sample_reduced(cfg.max_leaves / 2 + 1);
        SLTree c = sample_reduced(cfg.max_leaves / 2 + 1);

        if (fg_multiply(alpha_shift(a, 1), alpha_shift(b, 1)) !=
            alpha_shift(fg_multiply(a, b), 1)) {
            ++rep.alpha_multiplicative_failures;
            rep.failure_trees.push_back("alpha-mult: " + format_tree(a) + " , " + format_tree(b));
        }
        if (fg_multiply(alpha_shift(a, 1), fg_multiply(b, c)) !=
            fg_multiply(fg_multiply(a, b), alpha_shift(c, 1))) {
            ++rep.hom_associativity_failures;
            rep.failure_trees.push_back("hom-assoc: " + format_tree(a) + " , " + format_tree(b) +
                                        " , " + format_tree(c));
        }
        if (fg_multiply(SLTree::unit(), a) != alpha_shift(a, 1) ||
            fg_multiply(a, SLTree::unit()) != alpha_shift(a, 1)) {
            ++rep.unit_law_failures;
            rep.failure_trees.push_back("unit: " + format_tree(a));
        }
        if (!fg_multiply(a, hom_inverse(a)).is_unit()) {
            ++rep.inverse_law_failures;
            rep.failure_trees.push_back("inverse: " + format_tree(a));
        }
        if (hom_inverse(graft(raw, raw2)) != graft(hom_inverse(raw2), hom_inverse(raw))) {
            ++rep.antimorphism_failures;
            rep.failure_trees.push_back("antimorphism: " + format_tree(raw));
        }
        SLTree nf_l = normal_form(raw, Strategy::leftmost()).tree;
        SLTree nf_r = normal_form(raw, Strategy::rightmost()).tree;
        SLTree nf_s = normal_form(raw, Strategy::random(splitmix64(st))).tree;
        if (nf_l != nf_r || nf_l != nf_s) {
            ++rep.strategy_divergences;
            rep.failure_trees.push_back("strategy: " + format_tree(raw));
        }
        SLTree strict_nf = normal_form(raw, Strategy::leftmost(), RedexMode::Strict).tree;
        if (comb_tree_of_word(tree_word(strict_nf)) != nf_l) {
            ++rep.strict_general_divergences;
            if (rep.strict_divergence_witnesses.size() < 16)
                rep.strict_divergence_witnesses.push_back(format_tree(raw));
        }
    }
    return rep;
}

std::string format_tree(const SLTree& t) {
    if (t.is_unit()) return "1";
    if (t.is_leaf()) {
        const auto& l = t.node();
        return l.label + (l.color == Color::White ? "'" : "") + "@" + std::to_string(l.weight);
    }
    return "(" + format_tree(t.left()) + " " + format_tree(t.right()) + ")";
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int line = 1;
    int col = 1;
    int depth = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, line, col); }

    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    char get() {
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    SLTree tree() {
        if (++depth > 100000) fail("tree nesting too deep");
        char c = peek();
        SLTree out;
        if (c == '1') {
            get();
            out = SLTree::unit();
        } else if (c == '(') {
            get();
            SLTree l = tree();
            expect(' ');
            SLTree r = tree();
            expect(')');
            if (l.is_unit() || r.is_unit())
                fail("unit as a child of a node is not grammar-canonical");
            out = graft(l, r);
        } else {
            out = leaf();
        }
        --depth;
        return out;
    }

    SLTree leaf() {
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a leaf label");
        std::string label;
        label += get();
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') label += get();
        Color color = Color::Black;
        if (peek() == '\'') {
            get();
            color = Color::White;
        }
        expect('@');
        bool neg = false;
        if (peek() == '-') {
            get();
            neg = true;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a weight");
        Weight w = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            int d = get() - '0';
            if (w > (kWeightCap - d) / 10) fail("weight literal out of range");
            w = w * 10 + d;
        }
        return SLTree::leaf(label, color, neg ? -w : w);
    }
};

}  // namespace

SLTree parse_tree(const std::string& text) {
    Parser p(text);
    SLTree t = p.tree();
    if (p.pos != text.size()) p.fail("trailing input after tree");
    return t;
}

namespace {

// Abstract shape with per-leaf depth and per-pair spine data, instantiated
// many times during exhaustive enumeration.
struct Shape {
    SLTree placeholder;                   // all-black g@0 instance
    std::vector<int> depth;               // per leaf
    std::vector<std::pair<int, int>> pq;  // per adjacent pair
};

void shapes_with(int leaves, std::vector<SLTree>& out) {
    if (leaves == 1) {
        out.push_back(SLTree::leaf("g", Color::Black, 0));
        return;
    }
    for (int k = 1; k < leaves; ++k) {
        std::vector<SLTree> ls, rs;
        shapes_with(k, ls);
        shapes_with(leaves - k, rs);
        for (const auto& l : ls)
            for (const auto& r : rs) out.push_back(graft_raw(l, r));
    }
}

SLTree instantiate(const SLTree& shape, uint32_t colors, const std::vector<Weight>& ws,
                   int& counter) {
    if (shape.is_leaf()) {
        int i = counter++;
        return SLTree::leaf("g", (colors >> i) & 1 ? Color::White : Color::Black, ws[i]);
    }
    SLTree l = instantiate(shape.left(), colors, ws, counter);
    SLTree r = instantiate(shape.right(), colors, ws, counter);
    return graft_raw(l, r);
}

}  // namespace

namespace {

// Free-group reduction of a one-label word given as (color, shifted weight)
// pairs with one position pair removed; stack-based, allocation-free.
int word_nf_skipping(const uint32_t colors, const Weight* c, int n, int skip,
                     std::pair<int, Weight>* out) {
    int top = 0;
    for (int i = 0; i < n; ++i) {
        if (i == skip || i == skip + 1) continue;
        int col = (colors >> i) & 1;
        if (top > 0 && out[top - 1].first != col && out[top - 1].second == c[i]) {
            --top;
        } else {
            out[top++] = {col, c[i]};
        }
    }
    return top;
}

}  // namespace

JoinabilityReport local_confluence_exhaustive(int leaves, Weight lo, Weight hi, RedexMode mode,
                                              long long machine_stride) {
    if (mode != RedexMode::General)
        throw structural_error(
            "local_confluence_exhaustive: the strict system is order-sensitive; joinability is "
            "defined for the general mode");
    JoinabilityReport rep;
    if (leaves < 2) return rep;
    std::vector<SLTree> raw;
    shapes_with(leaves, raw);
    std::vector<Shape> shapes;
    for (auto& t : raw) {
        Shape s;
        s.placeholder = t;
        for (const auto& l : leaf_views(t)) s.depth.push_back(l.depth);
        for (const auto& pr : adjacent_pairs(t)) s.pq.emplace_back(pr.p, pr.q);
        shapes.push_back(std::move(s));
    }
    const int span = static_cast<int>(hi - lo + 1);
    std::vector<Weight> ws(leaves, lo);
    std::vector<Weight> shifted(leaves);
    std::vector<std::pair<int, Weight>> nf_a(leaves), nf_b(leaves);
    for (const auto& sh : shapes) {
        for (uint32_t colors = 0; colors < (1u << leaves); ++colors) {
            // A redex needs opposite colors; skip colorings that cannot host two.
            int candidates = 0;
            for (int i = 0; i + 1 < leaves; ++i)
                if (((colors >> i) & 1) != ((colors >> (i + 1)) & 1)) ++candidates;
            if (candidates < 2) continue;
            std::fill(ws.begin(), ws.end(), lo);
            while (true) {
                int matches = 0;
                int first_pos = -1;
                for (int i = 0; i + 1 < leaves; ++i)
                    if (((colors >> i) & 1) != ((colors >> (i + 1)) & 1) &&
                        ws[i] + sh.pq[i].first == ws[i + 1] + sh.pq[i].second) {
                        if (matches == 0) first_pos = i;
                        ++matches;
                    }
                if (matches >= 2) {
                    ++rep.trees_with_two_redexes;
                    for (int i = 0; i < leaves; ++i) shifted[i] = ws[i] + sh.depth[i];
                    int na = word_nf_skipping(colors, shifted.data(), leaves, first_pos, nf_a.data());
                    bool joined = true;
                    for (int i = first_pos + 1; i + 1 < leaves; ++i) {
                        if (((colors >> i) & 1) == ((colors >> (i + 1)) & 1) ||
                            ws[i] + sh.pq[i].first != ws[i + 1] + sh.pq[i].second)
                            continue;
                        int nb = word_nf_skipping(colors, shifted.data(), leaves, i, nf_b.data());
                        if (nb != na || !std::equal(nf_a.begin(), nf_a.begin() + na, nf_b.begin()))
                            joined = false;
                    }
                    if (!joined) ++rep.violations;
                    // Full tree machinery on a deterministic subsample: the
                    // one-step reducts' normal forms must agree with each
                    // other and with the word prediction.
                    if (machine_stride > 0 &&
                        (rep.trees_with_two_redexes % machine_stride) == 0) {
                        ++rep.machine_checked;
                        int counter = 0;
                        SLTree t = instantiate(sh.placeholder, colors, ws, counter);
                        auto rs = find_redexes(t, mode);
                        bool bad = rs.size() < 2;
                        SLTree first;
                        if (!bad) {
                            first = normal_form(reduce_step(t, rs[0]), Strategy::leftmost(), mode).tree;
                            for (size_t k = 1; k < rs.size() && !bad; ++k)
                                bad = normal_form(reduce_step(t, rs[k]), Strategy::leftmost(), mode)
                                          .tree != first;
                            if (!bad && mode == RedexMode::General) {
                                std::vector<WordSymbol> w;
                                for (int i = 0; i < na; ++i)
                                    w.push_back({"g",
                                                 nf_a[i].first ? Color::White : Color::Black,
                                                 nf_a[i].second});
                                bad = comb_tree_of_word(w) != first;
                            }
                        }
                        if (bad) {
                            ++rep.machine_mismatches;
                            if (!rep.witness) rep.witness = format_tree(t);
                        }
                    }
                    if (!joined && !rep.witness) {
                        int counter = 0;
                        rep.witness = format_tree(instantiate(sh.placeholder, colors, ws, counter));
                    }
                }
                int d = 0;
                while (d < leaves) {
                    if (ws[d] - lo + 1 < span) {
                        ++ws[d];
                        std::fill(ws.begin(), ws.begin() + d, lo);
                        break;
                    }
                    ++d;
                }
                if (d == leaves) break;
            }
        }
    }
    return rep;
}

}  // namespace homcat
