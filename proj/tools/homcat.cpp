// homcat: reduction, verification and report tooling over the table/tree
// formats. Exit codes: 0 pass, 1 mathematical violation, 2 input error,
// 3 internal invariant, 4 budget exceeded.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "homcat/json_io.hpp"
#include "homcat/tree.hpp"

using namespace homcat;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitBudget = 4;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw structural_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw structural_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

Strategy parse_strategy(const std::string& s) {
    if (s == "leftmost" || s.empty()) return Strategy::leftmost();
    if (s == "rightmost") return Strategy::rightmost();
    if (s.rfind("random", 0) == 0) {
        uint64_t seed = 0;
        auto colon = s.find(':');
        if (colon != std::string::npos) seed = std::stoull(s.substr(colon + 1));
        return Strategy::random(seed);
    }
    throw structural_error("unknown strategy: " + s);
}

int run_reduce(const std::string& literal, bool strict, bool trace, const std::string& strategy) {
    SLTree t = parse_tree(literal);
    auto res = normal_form(t, parse_strategy(strategy),
                           strict ? RedexMode::Strict : RedexMode::General);
    if (trace)
        for (const auto& step : res.trace)
            std::cout << rule_name(step.redex.rule, step.redex.p, step.redex.q) << "@"
                      << step.redex.position << ": " << format_tree(step.before) << " → "
                      << format_tree(step.after) << "\n";
    std::cout << format_tree(res.tree) << "\n";
    return kExitPass;
}

int finish_check(const std::string& kind, bool pass, const std::optional<FailureWitness>& witness,
                 json detail) {
    std::cout << kind << ": " << (pass ? "all axioms pass" : "VIOLATION") << "\n";
    if (!pass && witness)
        std::cout << "first witness: " << witness->axiom << " at tuple "
                  << json(witness->tuple).dump() << "\n";
    std::cout << detail.dump(2) << "\n";
    return pass ? kExitPass : kExitViolation;
}

int run_check(const std::string& kind, const std::string& path, int force_type,
              const std::string& side) {
    json j = load_json(path);
    if (kind == "group") {
        auto G = group_from_json(j);
        auto rep = check_hom_group(G);
        return finish_check("group", rep.all_pass(), rep.first_witness(),
                            axiom_report_to_json(rep));
    }
    if (kind == "ring") {
        auto A = ring_from_json(j);
        if (force_type) A.ring_type = force_type;
        auto rep = check_hom_ring(A);
        return finish_check("ring(type " + std::to_string(A.ring_type) + ")", rep.all_pass(),
                            rep.first_witness(), ring_report_to_json(rep));
    }
    if (kind == "module") {
        auto M = module_from_json(j);
        ModuleSide s = side == "right" ? ModuleSide::Right
                       : side == "bi"  ? ModuleSide::Bi
                                       : ModuleSide::Left;
        auto rep = check_module(M, s);
        return finish_check("module(" + (side.empty() ? "left" : side) + ")", rep.all_pass(),
                            rep.first_witness(), module_report_to_json(rep));
    }
    if (kind == "bilinear") {
        auto t = bilinear_from_json(j);
        auto rep = is_hom_bilinear(t);
        json detail;
        detail["bilinear"] = rep.bilinear();
        detail["lemmas"] = rep.lemmas();
        if (auto w = rep.first_witness()) detail["witness"] = witness_to_json(*w);
        return finish_check("bilinear", rep.bilinear() && rep.lemmas(), rep.first_witness(),
                            detail);
    }
    throw structural_error("unknown check kind: " + kind);
}

json lattice_report(const FiniteHomGroup& G) {
    if (!check_hom_group(G).all_pass())
        throw structural_error("lattice: input fails check_hom_group; certify it first");
    auto lat = normal_lattice(G);
    json j;
    j["truncated"] = lat.truncated;
    j["is_simple"] = lat.is_simple;
    j["simple_implies_regular"] = lat.simple_implies_regular;
    j["maximal_iff_simple_quotient"] = lat.maximal_iff_simple_quotient;
    json subs = json::array(), norms = json::array(), maxs = json::array();
    for (const auto& s : lat.subgroups) subs.push_back(subset_to_json(s));
    for (const auto& s : lat.normal_subgroups) norms.push_back(subset_to_json(s));
    for (const auto& s : lat.maximal_normals) maxs.push_back(subset_to_json(s));
    j["subgroups"] = subs;
    j["normal_subgroups"] = norms;
    j["maximal_normals"] = maxs;
    return j;
}

json abelianize_report(const FiniteHomGroup& G) {
    if (!check_hom_group(G).all_pass())
        throw structural_error("abelianize: input fails check_hom_group; certify it first");
    auto ab = abelianization(G);
    json j;
    j["commutator_subgroup"] = subset_to_json(ab.commutator);
    j["quotient_order"] = ab.quotient.group.n;
    j["quotient"] = group_to_json(ab.quotient.group);
    j["abelian"] = ab.abelian;
    j["projection_is_hom"] = ab.projection_is_hom;
    j["minimal"] = ab.minimal;
    return j;
}

struct TensorOutcome {
    json report;
    bool violated = false;
};

TensorOutcome tensor_report(const FiniteHomGroup& A, const FiniteHomGroup& B, bool paper,
                            const std::optional<FiniteHomGroup>& against,
                            const std::string& against_name = "") {
    for (const auto* g : {&A, &B})
        if (!check_hom_group(*g).all_pass())
            throw structural_error("tensor: input fails check_hom_group; certify it first");
    TensorOutcome out;
    TensorCandidate cand = paper ? tensor_paper(A, B) : tensor_oracle(A, B);
    out.report["candidate"] = paper ? "paper-construction" : "oracle";
    out.report["carrier_order"] = cand.carrier.n;
    if (!cand.invariant_factors.empty()) out.report["invariant_factors"] = cand.invariant_factors;

    BilinearTable tau{A, B, cand.carrier, cand.tau};
    auto rep = is_hom_bilinear(tau);
    out.report["tau_hom_bilinear"] = rep.bilinear();
    if (auto w = rep.first_witness()) out.report["witness"] = witness_to_json(*w);

    std::string status = rep.bilinear() ? "satisfied" : "violated";
    if (against) {
        out.report["target"] = against_name;
        auto v = universal_property_check(A, B, cand, *against);
        out.report["bilinear_maps_checked"] = v.bilinear_maps_checked;
        if (v.status == UniversalStatus::Truncated) status = "truncated";
        else if (v.status == UniversalStatus::Violated) status = "violated";
        if (v.witness) out.report["witness"] = witness_to_json(*v.witness);
        if (!v.detail.empty()) out.report["detail"] = v.detail;
    }
    if (!paper) {
        auto sym = symmetry_check(A, B);
        out.report["symmetry"] = sym.isomorphic;
    }
    out.report["status"] = status;
    out.violated = status == "violated";
    return out;
}

json simplicity_report(const FiniteHomRing& A) {
    if (!check_hom_ring(A).all_pass())
        throw structural_error("simplicity: ring fails check_hom_ring; certify it first");
    auto s = hom_ring_simplicity(A);
    json j;
    j["simple"] = s.simple;
    j["semisimple"] = s.semisimple;
    j["regular_asserted"] = s.regular_asserted;
    j["truncated"] = s.truncated;
    json subs = json::array();
    for (const auto& sm : s.over_itself.submodules) subs.push_back(subset_to_json(sm));
    j["submodules"] = subs;
    j["ker_beta"] = subset_to_json(s.over_itself.ker_beta);
    return j;
}

json decompose_report(const FiniteHomModule& M) {
    auto rep = check_module(M, ModuleSide::Left);
    if (!rep.all_pass())
        throw structural_error("decompose: module fails check_module; certify it first");
    auto d = semisimple_decomposition(M);
    json j;
    j["chosen_m"] = d.chosen_m;
    j["orbit_length"] = d.orbit_length;
    j["direct"] = d.direct;
    j["covers"] = d.covers;
    json sums = json::array();
    for (const auto& s : d.summands) sums.push_back(subset_to_json(s));
    j["summands"] = sums;
    j["summand_simple"] = d.summand_simple;
    if (d.overlap_witness) j["overlap_witness"] = witness_to_json(*d.overlap_witness);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homcat: Hom-group, Hom-ring and Hom-module toolkit"};
    app.require_subcommand(1);

    std::string literal, strategy = "leftmost";
    bool strict = false, trace = false;
    auto* reduce = app.add_subcommand("reduce", "reduce a tree literal to its normal form");
    reduce->add_option("tree", literal, "tree literal")->required();
    reduce->add_flag("--strict", strict, "use only the eight drawn reduction shapes");
    reduce->add_flag("--trace", trace, "print one line per elementary reduction");
    reduce->add_option("--strategy", strategy, "leftmost|rightmost|random[:seed]");

    std::string kind, file, side;
    int force_type = 0;
    auto* check = app.add_subcommand("check", "verify the axioms of a structure file");
    check->add_option("kind", kind, "group|ring|module|bilinear")->required();
    check->add_option("file", file, "JSON input")->required();
    check->add_option("--type", force_type, "check a ring against type 1 or 2");
    check->add_option("--side", side, "module side: left|right|bi");

    std::string ckind, cfile, cfile2;
    auto* construct = app.add_subcommand("construct", "build a structure and print its JSON");
    construct->add_option("what", ckind, "twist-group|direct-product|twist-ring|group-ring|endo-ring")
        ->required();
    construct->add_option("file", cfile, "input JSON")->required();
    construct->add_option("file2", cfile2, "second input (direct-product)");
    int ctype = 1;
    construct->add_option("--type", ctype, "twist-ring target type");

    std::string lfile;
    auto* lattice = app.add_subcommand("lattice", "normal Hom-subgroup lattice report");
    lattice->add_option("file", lfile, "group JSON")->required();

    std::string tA, tB, tC;
    bool use_paper = false, use_oracle = false;
    auto* tensor = app.add_subcommand("tensor", "tensor-product candidate report");
    tensor->add_option("A", tA, "left factor group JSON")->required();
    tensor->add_option("B", tB, "right factor group JSON")->required();
    tensor->add_flag("--paper", use_paper, "use the paper-construction candidate (abelianization product)");
    tensor->add_flag("--oracle", use_oracle, "use the relation-quotient oracle (default)");
    tensor->add_option("--against", tC, "target group for the universal-property check");

    std::string target, rfile, rfile2;
    bool r_paper = false, r_oracle = false;
    auto* report = app.add_subcommand("report", "structured reports over certified inputs");
    report->add_option("--target", target, "lattice|abelianize|tensor|simplicity|decompose")
        ->required();
    report->add_option("file", rfile, "input JSON")->required();
    report->add_option("file2", rfile2, "second input (tensor)");
    report->add_flag("--paper", r_paper, "tensor: paper-construction candidate");
    report->add_flag("--oracle", r_oracle, "tensor: oracle construction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*reduce) return run_reduce(literal, strict, trace, strategy);
        if (*check) return run_check(kind, file, force_type, side);
        if (*construct) {
            json out;
            if (ckind == "twist-group") {
                json in = load_json(cfile);
                Table gmul, endo;
                for (const auto& row : in.at("mul"))
                    for (const auto& v : row) gmul.push_back(v.get<Elt>());
                for (const auto& v : in.at("endo")) endo.push_back(v.get<Elt>());
                out = group_to_json(twist_group(gmul, endo));
            } else if (ckind == "direct-product") {
                if (cfile2.empty()) throw structural_error("direct-product needs two files");
                out = group_to_json(
                    direct_product(group_from_json(load_json(cfile)), group_from_json(load_json(cfile2))));
            } else if (ckind == "twist-ring") {
                json in = load_json(cfile);
                RingTables R;
                R.n = in.at("n").get<int>();
                R.zero = in.at("zero").get<Elt>();
                if (in.contains("one") && !in.at("one").is_null()) R.one = in.at("one").get<Elt>();
                for (const auto& row : in.at("add"))
                    for (const auto& v : row) R.add.push_back(v.get<Elt>());
                for (const auto& row : in.at("mul"))
                    for (const auto& v : row) R.mul.push_back(v.get<Elt>());
                Table alpha, beta;
                for (const auto& v : in.at("alpha")) alpha.push_back(v.get<Elt>());
                for (const auto& v : in.at("beta")) beta.push_back(v.get<Elt>());
                out = ring_to_json(twist_ring(R, alpha, beta, ctype));
            } else if (ckind == "group-ring") {
                json in = load_json(cfile);
                Table gmul, aut;
                for (const auto& row : in.at("group_mul"))
                    for (const auto& v : row) gmul.push_back(v.get<Elt>());
                for (const auto& v : in.at("auto")) aut.push_back(v.get<Elt>());
                out = ring_to_json(twisted_group_ring(gmul, aut, in.at("p").get<int>()).ring);
            } else if (ckind == "endo-ring") {
                out = ring_to_json(endomorphism_hom_ring(group_from_json(load_json(cfile))).ring);
            } else {
                throw structural_error("unknown construct kind: " + ckind);
            }
            std::cout << out.dump(2) << "\n";
            return kExitPass;
        }
        if (*lattice) {
            std::cout << lattice_report(group_from_json(load_json(lfile))).dump(2) << "\n";
            return kExitPass;
        }
        if (*tensor) {
            std::optional<FiniteHomGroup> against;
            if (!tC.empty()) against = group_from_json(load_json(tC));
            auto outcome = tensor_report(group_from_json(load_json(tA)),
                                         group_from_json(load_json(tB)), use_paper && !use_oracle,
                                         against, tC);
            std::cout << outcome.report.dump(2) << "\n";
            return outcome.violated ? kExitViolation : kExitPass;
        }
        if (*report) {
            if (target == "lattice") {
                std::cout << lattice_report(group_from_json(load_json(rfile))).dump(2) << "\n";
            } else if (target == "abelianize") {
                std::cout << abelianize_report(group_from_json(load_json(rfile))).dump(2) << "\n";
            } else if (target == "tensor") {
                if (rfile2.empty()) throw structural_error("tensor report needs two files");
                auto outcome =
                    tensor_report(group_from_json(load_json(rfile)),
                                  group_from_json(load_json(rfile2)), r_paper && !r_oracle, {});
                std::cout << outcome.report.dump(2) << "\n";
                return outcome.violated ? kExitViolation : kExitPass;
            } else if (target == "simplicity") {
                std::cout << simplicity_report(ring_from_json(load_json(rfile))).dump(2) << "\n";
            } else if (target == "decompose") {
                std::cout << decompose_report(module_from_json(load_json(rfile))).dump(2) << "\n";
            } else {
                throw structural_error("unknown report target: " + target);
            }
            return kExitPass;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error at line " << e.line << ", column " << e.column << ": "
                  << e.what() << "\n";
        return kExitInput;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const structural_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const internal_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitPass;
}
