#include "homcat/json_io.hpp"

namespace homcat {

namespace {

Table table_from_json(const json& j, const char* name, bool square, int expect = -1) {
    if (!j.is_array()) throw structural_error(std::string("schema: ") + name + " must be an array");
    Table t;
    if (square) {
        for (const auto& row : j) {
            if (!row.is_array()) throw structural_error(std::string("schema: ") + name + " rows");
            for (const auto& v : row) t.push_back(v.get<Elt>());
        }
    } else {
        for (const auto& v : j) t.push_back(v.get<Elt>());
    }
    if (expect >= 0 && t.size() != static_cast<size_t>(expect))
        throw structural_error(std::string("schema: ") + name + " has wrong length");
    return t;
}

json square_to_json(const Table& t, int n) {
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < n; ++j2) row.push_back(t[static_cast<size_t>(i) * n + j2]);
        rows.push_back(std::move(row));
    }
    return rows;
}

void require(const json& j, const char* key) {
    if (!j.contains(key)) throw structural_error(std::string("schema: missing \"") + key + "\"");
}

}  // namespace

FiniteHomGroup group_from_json(const json& j) {
    for (const char* k : {"n", "e", "mul", "alpha"}) require(j, k);
    FiniteHomGroup G;
    G.n = j.at("n").get<int>();
    G.e = j.at("e").get<Elt>();
    G.mul = table_from_json(j.at("mul"), "mul", true, G.n * G.n);
    G.alpha = table_from_json(j.at("alpha"), "alpha", false, G.n);
    if (j.contains("inv") && !j.at("inv").is_null()) {
        G.inv = table_from_json(j.at("inv"), "inv", false, G.n);
    } else {
        for (Elt v : G.mul)
            if (v < 0 || v >= G.n) throw structural_error("schema: mul entry out of range");
        auto inv = derive_inverse_map(G.n, G.mul, G.alpha, G.e);
        if (!inv)
            throw structural_error(
                "schema: no antimorphism-consistent inverse map exists; supply \"inv\"");
        G.inv = *inv;
    }
    validate_tables(G);
    return G;
}

json group_to_json(const FiniteHomGroup& G) {
    json j;
    j["n"] = G.n;
    j["e"] = G.e;
    j["mul"] = square_to_json(G.mul, G.n);
    j["alpha"] = G.alpha;
    j["inv"] = G.inv;
    return j;
}

FiniteHomRing ring_from_json(const json& j) {
    for (const char* k : {"n", "zero", "add", "mul", "alpha", "beta", "type"}) require(j, k);
    FiniteHomRing A;
    A.n = j.at("n").get<int>();
    A.zero = j.at("zero").get<Elt>();
    A.ring_type = j.at("type").get<int>();
    A.add = table_from_json(j.at("add"), "add", true, A.n * A.n);
    A.mul = table_from_json(j.at("mul"), "mul", true, A.n * A.n);
    A.alpha = table_from_json(j.at("alpha"), "alpha", false, A.n);
    A.beta = table_from_json(j.at("beta"), "beta", false, A.n);
    if (j.contains("one") && !j.at("one").is_null()) A.one = j.at("one").get<Elt>();
    if (j.contains("add_inv") && !j.at("add_inv").is_null()) {
        A.add_inv = table_from_json(j.at("add_inv"), "add_inv", false, A.n);
    } else {
        for (Elt v : A.add)
            if (v < 0 || v >= A.n) throw structural_error("schema: add entry out of range");
        auto inv = derive_inverse_map(A.n, A.add, A.alpha, A.zero);
        if (!inv)
            throw structural_error(
                "schema: no antimorphism-consistent additive inverse exists; supply \"add_inv\"");
        A.add_inv = *inv;
    }
    validate_tables(A);
    return A;
}

json ring_to_json(const FiniteHomRing& A) {
    json j;
    j["n"] = A.n;
    j["zero"] = A.zero;
    if (A.one) j["one"] = *A.one;
    j["add"] = square_to_json(A.add, A.n);
    j["mul"] = square_to_json(A.mul, A.n);
    j["alpha"] = A.alpha;
    j["beta"] = A.beta;
    j["type"] = A.ring_type;
    j["add_inv"] = A.add_inv;
    return j;
}

FiniteHomModule module_from_json(const json& j) {
    for (const char* k : {"ring", "m", "mzero", "madd", "beta", "act_left"}) require(j, k);
    FiniteHomModule M;
    M.ring = ring_from_json(j.at("ring"));
    M.m = j.at("m").get<int>();
    M.mzero = j.at("mzero").get<Elt>();
    M.madd = table_from_json(j.at("madd"), "madd", true, M.m * M.m);
    M.beta = table_from_json(j.at("beta"), "beta", false, M.m);
    if (j.contains("act_left"))
        M.act_left = table_from_json(j.at("act_left"), "act_left", true, M.ring.n * M.m);
    if (j.contains("act_right") && !j.at("act_right").is_null())
        M.act_right = table_from_json(j.at("act_right"), "act_right", true, M.m * M.ring.n);
    if (j.contains("madd_inv") && !j.at("madd_inv").is_null()) {
        M.madd_inv = table_from_json(j.at("madd_inv"), "madd_inv", false, M.m);
    } else {
        for (Elt v : M.madd)
            if (v < 0 || v >= M.m) throw structural_error("schema: madd entry out of range");
        auto inv = derive_inverse_map(M.m, M.madd, M.beta, M.mzero);
        if (!inv)
            throw structural_error(
                "schema: no antimorphism-consistent madd inverse exists; supply \"madd_inv\"");
        M.madd_inv = *inv;
    }
    validate_tables(M);
    return M;
}

json module_to_json(const FiniteHomModule& M) {
    json j;
    j["ring"] = ring_to_json(M.ring);
    j["m"] = M.m;
    j["mzero"] = M.mzero;
    j["madd"] = square_to_json(M.madd, M.m);
    j["beta"] = M.beta;
    j["madd_inv"] = M.madd_inv;
    {
        json rows = json::array();
        for (int a = 0; a < M.ring.n; ++a) {
            json row = json::array();
            for (int x = 0; x < M.m; ++x) row.push_back(M.act(a, x));
            rows.push_back(std::move(row));
        }
        j["act_left"] = std::move(rows);
    }
    if (M.act_right) {
        json rows = json::array();
        for (int x = 0; x < M.m; ++x) {
            json row = json::array();
            for (int a = 0; a < M.ring.n; ++a) row.push_back(M.actr(x, a));
            rows.push_back(std::move(row));
        }
        j["act_right"] = std::move(rows);
    }
    return j;
}

BilinearTable bilinear_from_json(const json& j) {
    for (const char* k : {"A", "B", "C", "f"}) require(j, k);
    BilinearTable t;
    t.A = group_from_json(j.at("A"));
    t.B = group_from_json(j.at("B"));
    t.C = group_from_json(j.at("C"));
    t.f = table_from_json(j.at("f"), "f", true, t.A.n * t.B.n);
    for (Elt v : t.f)
        if (v < 0 || v >= t.C.n) throw structural_error("schema: f entry out of range");
    return t;
}

TwistedPolynomial poly_from_json(const json& j) {
    for (const char* k : {"p", "subst", "terms"}) require(j, k);
    long long p = j.at("p").get<long long>();
    const auto& sj = j.at("subst");
    if (!sj.is_object() || sj.empty()) throw structural_error("schema: subst must be an object");
    std::vector<uint32_t> subst;
    for (auto it = sj.begin(); it != sj.end(); ++it) subst.push_back(it->get<uint32_t>());
    auto P = poly_zero(p, subst);
    for (const auto& term : j.at("terms")) {
        if (!term.is_array() || term.size() != 2)
            throw structural_error("schema: terms entries must be [exponent, coeff]");
        std::vector<uint32_t> exps;
        if (term[0].is_array())
            for (const auto& e : term[0]) exps.push_back(e.get<uint32_t>());
        else
            exps.push_back(term[0].get<uint32_t>());
        if (exps.size() != subst.size()) throw structural_error("schema: exponent arity mismatch");
        auto Q = poly_monomial(p, subst, exps, term[1].get<long long>());
        // direct accumulation, not the twisted sum
        for (const auto& [e, c] : Q.terms) {
            auto it = P.terms.find(e);
            long long v = ((it == P.terms.end() ? 0 : it->second) + c) % p;
            if (it != P.terms.end()) P.terms.erase(it);
            if (v) P.terms.emplace(e, v);
        }
    }
    return P;
}

json poly_to_json(const TwistedPolynomial& P) {
    json j;
    j["p"] = P.p;
    json subst = json::object();
    static const char* names = "XYZUVW";
    for (size_t i = 0; i < P.subst.size(); ++i)
        subst[i < 6 ? std::string(1, names[i]) : "X" + std::to_string(i)] = P.subst[i];
    j["subst"] = std::move(subst);
    json terms = json::array();
    for (const auto& [e, c] : P.terms) {
        json ex;
        if (e.size() == 1)
            ex = e[0];
        else
            ex = e;
        terms.push_back(json::array({ex, c}));
    }
    j["terms"] = std::move(terms);
    return j;
}

json subset_to_json(const SubSet& S) { return json(S.elements()); }

json witness_to_json(const FailureWitness& w) {
    return json{{"axiom", w.axiom}, {"tuple", w.tuple}};
}

namespace {

json verdict_to_json(const AxiomVerdict& v) {
    json j;
    j["pass"] = v.pass;
    if (v.witness) j["witness"] = witness_to_json(*v.witness);
    return j;
}

}  // namespace

json axiom_report_to_json(const AxiomReport& r) {
    json j;
    j["hom_associativity"] = verdict_to_json(r.hom_associativity);
    j["alpha_multiplicative"] = verdict_to_json(r.alpha_multiplicative);
    j["hom_unitarity"] = verdict_to_json(r.hom_unitarity);
    j["inverse_antimorphism"] = verdict_to_json(r.inverse_antimorphism);
    j["hom_invertibility"] = verdict_to_json(r.hom_invertibility);
    j["regular"] = r.regular;
    j["abelian"] = r.abelian;
    j["inv_index"] = r.inv_index;
    j["remark_1_2_1"] = r.remark_1_2_1;
    j["remark_1_2_4"] = r.remark_1_2_4;
    j["left_cancellation"] = r.left_cancellation;
    j["all_pass"] = r.all_pass();
    return j;
}

json ring_report_to_json(const RingReport& r) {
    json j;
    j["additive"] = axiom_report_to_json(r.additive);
    j["additive_abelian"] = r.additive_abelian;
    j["beta_additive"] = verdict_to_json(r.beta_additive);
    j["beta_commutes"] = verdict_to_json(r.beta_commutes);
    j["alpha_multiplicative"] = verdict_to_json(r.alpha_multiplicative);
    j["beta_multiplicative"] = verdict_to_json(r.beta_multiplicative);
    j["hom_associativity"] = verdict_to_json(r.hom_associativity);
    j["left_distributive"] = verdict_to_json(r.left_distributive);
    j["right_distributive"] = verdict_to_json(r.right_distributive);
    j["unit_laws"] = verdict_to_json(r.unit_laws);
    j["unit_fixed"] = verdict_to_json(r.unit_fixed);
    j["zero_laws"] = r.zero_laws;
    j["negation_laws"] = r.negation_laws;
    j["beta_derivation"] = r.beta_derivation;
    j["all_pass"] = r.all_pass();
    return j;
}

json module_report_to_json(const ModuleReport& r) {
    json j;
    j["additive"] = axiom_report_to_json(r.additive);
    j["additive_abelian"] = r.additive_abelian;
    j["M1"] = verdict_to_json(r.m1);
    j["M2"] = verdict_to_json(r.m2);
    j["M3"] = verdict_to_json(r.m3);
    j["M4"] = verdict_to_json(r.m4);
    j["M5"] = verdict_to_json(r.m5);
    j["zero_laws"] = verdict_to_json(r.zero_laws);
    j["bimodule_compat"] = verdict_to_json(r.bimodule_compat);
    j["all_pass"] = r.all_pass();
    return j;
}

}  // namespace homcat
