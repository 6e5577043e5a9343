#pragma once

// JSON encodings of the domain types, matching the documented schemas:
//   field spec   {"p": int, "n": int, "modulus": [ints]}
//   polynomial   {"coeffs": [elem, ...]}, ascending in u = t^{-1}
//   witt vector  {"p": int, "e": int, "coords": [poly, ...]}, a_1 first
//   asw class    witt vector + {"field": .., "flags": {..}}
//   jumps        {"p": int, "convention": "upper"|"lower", "jumps": [ints]}
// Field elements are coefficient vectors over the prime field; bare integers
// are accepted on input as a shorthand. Keys keep insertion order so reports
// diff cleanly in CI.

#include <json.hpp>

#include "aswkit/asw.hpp"
#include "aswkit/oracle.hpp"
#include "aswkit/ow.hpp"
#include "aswkit/ramification.hpp"
#include "aswkit/splitting.hpp"
#include "aswkit/sweep.hpp"

namespace aswkit {

using json = nlohmann::ordered_json;

struct JsonError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace jsondetail {

inline const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw JsonError(std::string("missing key \"") + key + "\"");
    return *it;
}

inline int64_t need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer()) throw JsonError(std::string("key \"") + key + "\" must be an integer");
    return v.get<int64_t>();
}

}  // namespace jsondetail

// --- field ------------------------------------------------------------------

inline json field_to_json(const Field& k) {
    return json{{"p", k.p()}, {"n", k.n()}, {"modulus", k.modulus()}};
}

inline Field field_from_json(const json& j) {
    int64_t p = jsondetail::need_int(j, "p");
    if (j.contains("modulus")) {
        std::vector<int64_t> mod = jsondetail::need(j, "modulus").get<std::vector<int64_t>>();
        Field k(p, mod);
        if (j.contains("n") && jsondetail::need_int(j, "n") != k.n())
            throw JsonError("field spec: n disagrees with the modulus degree");
        return k;
    }
    if (j.contains("n") && jsondetail::need_int(j, "n") != 1)
        throw JsonError("field spec: extension fields need an explicit modulus");
    return Field(p);
}

// --- elements and polynomials -----------------------------------------------

inline json elem_to_json(const Field&, const FieldElem& a) { return json(a); }

inline FieldElem elem_from_json(const Field& k, const json& j) {
    if (j.is_number_integer()) return k.from_int(j.get<int64_t>());
    if (!j.is_array()) throw JsonError("field element must be an integer or coefficient array");
    std::vector<int64_t> v = j.get<std::vector<int64_t>>();
    if (static_cast<int>(v.size()) > k.n())
        throw JsonError("field element has more coordinates than the field degree");
    FieldElem e(static_cast<size_t>(k.n()), 0);
    for (size_t i = 0; i < v.size(); ++i) e[i] = ((v[i] % k.p()) + k.p()) % k.p();
    return e;
}

inline json poly_to_json(const Field& k, const Poly& f) {
    json coeffs = json::array();
    for (auto& c : f.c) coeffs.push_back(elem_to_json(k, c));
    return json{{"coeffs", coeffs}};
}

inline Poly poly_from_json(const Field& k, const json& j) {
    const json& arr = j.is_array() ? j : jsondetail::need(j, "coeffs");
    if (!arr.is_array()) throw JsonError("polynomial coeffs must be an array");
    Poly f;
    for (auto& c : arr) f.c.push_back(elem_from_json(k, c));
    poly_trim(k, f);
    return f;
}

// --- witt vectors and classes -----------------------------------------------

inline json witt_to_json(const Field& k, const WittVector& w) {
    json coords = json::array();
    for (auto& c : w.coords) coords.push_back(poly_to_json(k, c));
    return json{{"p", k.p()}, {"e", w.length()}, {"coords", coords}};
}

inline WittVector witt_from_json(const Field& k, const json& j) {
    if (j.contains("p") && jsondetail::need_int(j, "p") != k.p())
        throw JsonError("witt vector: p disagrees with the field");
    const json& coords = jsondetail::need(j, "coords");
    if (!coords.is_array() || coords.empty())
        throw JsonError("witt vector needs a nonempty coords array");
    WittVector w;
    for (auto& c : coords) w.coords.push_back(poly_from_json(k, c));
    if (j.contains("e") && jsondetail::need_int(j, "e") != w.length())
        throw JsonError("witt vector: e disagrees with coords length");
    return w;
}

inline json asw_to_json(const AswClass& a) {
    json j = witt_to_json(a.field, a.gen);
    j["field"] = field_to_json(a.field);
    j["flags"] = json{{"standard_form", a.flags.standard_form},
                      {"normalized", a.flags.normalized},
                      {"separable", a.flags.separable}};
    return j;
}

/// fallback_field supplies the coefficient field when the payload omits it.
inline AswClass asw_from_json(const json& j, const std::optional<Field>& fallback_field = {}) {
    Field k = j.contains("field") ? field_from_json(j["field"])
                                  : (fallback_field.has_value()
                                         ? *fallback_field
                                         : (j.contains("p") ? Field(jsondetail::need_int(j, "p"))
                                                            : throw JsonError(
                                                                  "asw class: no field given")));
    WittVector w = witt_from_json(k, j);
    AswClass a{k, w, classify_flags(k, w)};
    return a;
}

inline json certificate_to_json(const Field& k, const ReductionCertificate& c) {
    json residuals = json::array();
    for (auto& g : c.residual_constants) residuals.push_back(elem_to_json(k, g));
    return json{{"c", witt_to_json(k, c.c)},
                {"residual_constants", residuals},
                {"needs_extension", c.needs_extension}};
}

// --- jump sequences and derived reports --------------------------------------

inline json jumps_to_json(const JumpSequence& s) {
    return json{{"p", s.p()},
                {"convention", s.convention() == JumpConvention::upper ? "upper" : "lower"},
                {"jumps", s.jumps()}};
}

inline JumpSequence jumps_from_json(const json& j) {
    int64_t p = jsondetail::need_int(j, "p");
    std::vector<int64_t> jumps = jsondetail::need(j, "jumps").get<std::vector<int64_t>>();
    JumpConvention conv = JumpConvention::upper;
    if (j.contains("convention")) {
        std::string c = j["convention"].get<std::string>();
        if (c == "lower")
            conv = JumpConvention::lower;
        else if (c != "upper")
            throw JsonError("convention must be \"upper\" or \"lower\"");
    }
    return JumpSequence(p, conv, std::move(jumps));
}

inline json essential_to_json(const EssentialDecomposition& d) {
    return json{{"p", d.p},     {"e", d.e}, {"q", d.q},       {"eps", d.eps},
                {"r", d.r},     {"d", d.d}, {"N", d.N},       {"e0", d.e0()},
                {"has_essential", d.has_essential()}};
}

inline json verify_report_to_json(const PlanVerifyReport& r) {
    return json{{"ok", r.ok},
                {"combin_identity_ok", r.combin_identity_ok},
                {"combin_prefix_ok", r.combin_prefix_ok},
                {"kato_ledger_ok", r.kato_ledger_ok},
                {"profiles_valid_ok", r.profiles_valid_ok},
                {"emu_monotone_ok", r.emu_monotone_ok},
                {"recursion_ok", r.recursion_ok},
                {"detail", r.detail}};
}

inline json plan_to_json(const SplitPlan& plan) {
    json branches = json::array();
    for (size_t mu = 0; mu < plan.branch_profiles.size(); ++mu) {
        branches.push_back(json{{"mu", mu + 1},
                                {"label", "x_" + std::to_string(mu + 1)},
                                {"e_mu", plan.branch_profiles[mu].e()},
                                {"jumps", plan.branch_profiles[mu].jumps()},
                                {"different", plan.branch_different[mu]},
                                {"block", plan.block_of_branch[mu]}});
    }
    return json{{"input", jumps_to_json(plan.input)},
                {"decomposition", essential_to_json(plan.dec)},
                {"N", plan.N()},
                {"theta", plan.theta.rows},
                {"branches", branches},
                {"special_different", plan.special_different},
                {"verification", verify_report_to_json(plan.verification)}};
}

inline json star_entry_to_json(const StarEntry& e) {
    json w;
    if (e.witness.has_value())
        w = *e.witness;
    else
        w = nullptr;
    return json{{"nu", e.nu},       {"delta", e.delta},         {"bound_num", e.bound_num},
                {"bound_den", e.bound_den}, {"witness", w},     {"holds", e.holds}};
}

inline json star_prime_to_json(const StarPrimeEntry& e) {
    return json{{"nu", e.nu},
                {"r", e.r},
                {"eta", e.eta},
                {"holds", e.holds},
                {"in_remark_regime", e.in_remark_regime}};
}

inline json oracle_to_json(const OracleResult& r) {
    return json{{"jump", r.jump},
                {"different", r.different},
                {"equation_residual_valuation", r.equation_residual_valuation},
                {"t_invariance_valuation", r.t_invariance_valuation},
                {"precision", r.precision},
                {"consistent", r.consistent},
                {"rescale_invariant", r.rescale_invariant}};
}

inline json materialized_to_json(const MaterializedGenerator& m, const JumpSequence& input) {
    const Field& K = m.emb.to;
    json factors = json::array();
    for (size_t rho = 0; rho < m.factors.size(); ++rho) {
        json row = json::array();
        for (auto& f : m.factors[rho]) row.push_back(poly_to_json(K, f));
        factors.push_back(row);
    }
    json scalars = json::array();
    for (auto& c : m.branch_scalars) scalars.push_back(elem_to_json(K, c));
    return json{{"input", jumps_to_json(input)},
                {"splitting_field", field_to_json(K)},
                {"ext_multiplier", m.ext_multiplier},
                {"embedding_gen_image", elem_to_json(K, m.emb.gen_image)},
                {"factors", factors},
                {"branch_scalars", scalars},
                {"seed", m.seed}};
}

inline json sweep_to_json(const SweepOutcome& o) {
    return json{{"suite", o.name},
                {"checked", o.checked},
                {"failures", o.failures},
                {"ok", o.ok()},
                {"first_counterexample", o.first_counterexample}};
}

}  // namespace aswkit
