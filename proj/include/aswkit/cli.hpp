#pragma once

// Batch front end. One verb per module operation plus the sweep suites:
//
//   jumps standard-form degree herbrand different essential genus
//   plan verify materialize ow oracle sweep
//
// Input is a JSON payload given inline or as a file path; output is a JSON
// report on stdout (or --out). Exit codes: 0 success, 1 domain error with a
// structured error object, 2 usage error. Seeds and field specs are echoed
// into reports so any run can be reproduced.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "aswkit/json_io.hpp"

namespace aswkit {

namespace clidetail {

struct Options {
    std::string input;        // positional: inline JSON or a path
    std::string in_path;      // --in
    std::string inline_json;  // --json
    std::string field_json;   // --field
    std::string out_path;     // --out
    std::string suite = "all";
    std::string to_convention;
    uint64_t seed = 0;
    int64_t precision = 0;
    int64_t max_jump = 0;
    int max_e = 0;
    int samples = 0;
};

inline json load_payload(const Options& o) {
    std::string text;
    if (!o.inline_json.empty()) {
        text = o.inline_json;
    } else if (!o.in_path.empty()) {
        std::ifstream f(o.in_path);
        if (!f) throw JsonError("cannot open input file: " + o.in_path);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else if (!o.input.empty()) {
        if (o.input[0] == '{' || o.input[0] == '[') {
            text = o.input;
        } else {
            std::ifstream f(o.input);
            if (!f) throw JsonError("cannot open input file: " + o.input);
            std::ostringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
    } else {
        throw JsonError("no input payload (pass inline JSON or a path)");
    }
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonError(std::string("malformed JSON: ") + e.what());
    }
}

inline std::optional<Field> field_from_options(const Options& o) {
    if (o.field_json.empty()) return std::nullopt;
    try {
        return field_from_json(json::parse(o.field_json));
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonError(std::string("malformed --field JSON: ") + e.what());
    }
}

inline JumpSequence jumps_payload(const Options& o) { return jumps_from_json(load_payload(o)); }

inline json dispatch(const std::string& verb, const Options& o) {
    if (verb == "jumps") {
        AswClass a = asw_from_json(load_payload(o), field_from_options(o));
        if (!a.flags.standard_form && !a.flags.normalized) {
            auto [s, cert] = standard_form(a);
            a = s;
        }
        JumpSequence s = upper_jumps(a);
        json j = jumps_to_json(s);
        j["artin_conductor"] = s.artin_conductor();
        return j;
    }
    if (verb == "standard-form") {
        AswClass a = asw_from_json(load_payload(o), field_from_options(o));
        auto [s, cert] = standard_form(a);
        return json{{"standard", asw_to_json(s)},
                    {"certificate", certificate_to_json(a.field, cert)}};
    }
    if (verb == "degree") {
        AswClass a = asw_from_json(load_payload(o), field_from_options(o));
        ExtensionDegree d = extension_degree(a);
        int64_t deg = 1;
        for (int i = 0; i < d.m; ++i) deg *= a.field.p();
        json b;
        if (d.m > 0)
            b = witt_to_json(a.field, d.b);
        else
            b = nullptr;
        return json{{"m", d.m}, {"degree", deg}, {"b", b}};
    }
    if (verb == "herbrand") {
        JumpSequence s = jumps_payload(o);
        JumpConvention target;
        if (o.to_convention.empty()) {
            target = s.convention() == JumpConvention::upper ? JumpConvention::lower
                                                             : JumpConvention::upper;
        } else if (o.to_convention == "upper") {
            target = JumpConvention::upper;
        } else if (o.to_convention == "lower") {
            target = JumpConvention::lower;
        } else {
            throw JsonError("--to must be \"upper\" or \"lower\"");
        }
        return jumps_to_json(herbrand(s, target));
    }
    if (verb == "different") {
        JumpSequence s = jumps_payload(o);
        return json{{"input", jumps_to_json(s)}, {"different_degree", different_degree(s)}};
    }
    if (verb == "essential") {
        JumpSequence s = jumps_payload(o);
        return essential_to_json(essential_decomposition(s));
    }
    if (verb == "genus") {
        JumpSequence s = jumps_payload(o);
        return json{{"input", jumps_to_json(s)}, {"genus", kg_genus(s)}};
    }
    if (verb == "plan") {
        return plan_to_json(split_plan(jumps_payload(o)));
    }
    if (verb == "verify") {
        json payload = load_payload(o);
        JumpSequence s = payload.contains("input") ? jumps_from_json(payload["input"])
                                                   : jumps_from_json(payload);
        SplitPlan plan = split_plan(s);
        json out = json{{"input", jumps_to_json(s)},
                        {"verification", verify_report_to_json(plan.verification)}};
        if (payload.contains("theta")) {
            auto given = payload["theta"].get<std::vector<std::vector<int64_t>>>();
            out["theta_matches_input"] = (given == plan.theta.rows);
        }
        return out;
    }
    if (verb == "materialize") {
        AswClass a = asw_from_json(load_payload(o), field_from_options(o));
        if (!a.flags.standard_form) a = standard_form(a).first;
        NormalizeResult norm = normalize_generator(a, o.seed);
        SplitPlan plan = split_plan(upper_jumps(norm.gen));
        MaterializedGenerator m = materialize(norm.gen, plan, o.seed);
        json j = materialized_to_json(m, plan.input);
        j["normalized_generator"] = asw_to_json(norm.gen);
        j["normalize_attempts"] = norm.attempts;
        j["plan"] = plan_to_json(plan);
        return j;
    }
    if (verb == "ow") {
        JumpSequence s = jumps_payload(o);
        json stars = json::array();
        for (int nu = 1; nu < s.e(); ++nu) stars.push_back(star_entry_to_json(star_condition(s, nu)));
        json primes = json::array();
        for (int nu = 2; nu < s.e(); ++nu)
            primes.push_back(star_prime_to_json(star_prime_condition(s, nu)));
        return json{{"input", jumps_to_json(s)},
                    {"no_essential", !essential_decomposition(s).has_essential()},
                    {"liftable_no_essential", ow_liftable_no_essential(s)},
                    {"hypothesis_nu_ge_3", obus_wewers_hypothesis(s)},
                    {"star", stars},
                    {"star_prime", primes}};
    }
    if (verb == "oracle") {
        json payload = load_payload(o);
        Field k = payload.contains("field")
                      ? field_from_json(payload["field"])
                      : (field_from_options(o).has_value()
                             ? *field_from_options(o)
                             : (payload.contains("p") ? Field(payload["p"].get<int64_t>())
                                                      : throw JsonError("oracle: no field")));
        Poly f = payload.contains("f") ? poly_from_json(k, payload["f"])
                                       : poly_from_json(k, payload);
        OracleResult r = oracle_e1(k, f, o.precision);
        json j = oracle_to_json(r);
        j["field"] = field_to_json(k);
        j["f"] = poly_to_json(k, f);
        return j;
    }
    if (verb == "sweep") {
        int max_e = o.max_e > 0 ? o.max_e : 4;
        int64_t max_jump = o.max_jump > 0 ? o.max_jump : 200;
        int samples = o.samples > 0 ? o.samples : 1000;
        uint64_t seed = o.seed;
        std::vector<SweepOutcome> outs;
        auto want = [&](const std::string& name) {
            return o.suite == "all" || o.suite == name;
        };
        if (want("witt")) outs.push_back(sweep_witt({2, 3, 5}, max_e, samples, seed));
        if (want("combin"))
            outs.push_back(sweep_combinatorial_identity({2, 3, 5}, max_e, max_jump));
        if (want("different"))
            outs.push_back(sweep_different_conservation({2, 3, 5}, max_e, max_jump));
        if (want("no-essential"))
            outs.push_back(sweep_no_essential_profiles({2, 3, 5}, max_e, max_jump));
        if (want("herbrand")) outs.push_back(sweep_herbrand_different({2, 3, 5}, max_e, max_jump));
        if (want("genus")) outs.push_back(sweep_genus({2, 3, 5}, max_e, max_jump));
        if (want("ow-implication"))
            outs.push_back(sweep_ow_implication({2, 3, 5, 7}, max_e,
                                                o.max_jump > 0 ? o.max_jump : 500));
        if (want("ow-equivalence"))
            outs.push_back(sweep_ow_equivalence({2, 3, 5, 7}, max_e,
                                                o.max_jump > 0 ? o.max_jump : 500));
        if (want("oracle"))
            outs.push_back(sweep_oracle({2, 3}, 9, samples > 0 ? std::min(samples, 50) : 20,
                                        seed));
        if (outs.empty()) throw JsonError("unknown sweep suite: " + o.suite);
        bool all_ok = true;
        json arr = json::array();
        for (auto& s : outs) {
            arr.push_back(sweep_to_json(s));
            all_ok = all_ok && s.ok();
        }
        return json{{"seed", seed}, {"ok", all_ok}, {"suites", arr}};
    }
    throw JsonError("unknown verb: " + verb);
}

}  // namespace clidetail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ramification toolkit for cyclic p-power extensions presented by Witt vectors"};
    app.require_subcommand(0, 1);
    clidetail::Options opts;
    std::string verb;

    const std::vector<std::string> verbs = {"jumps",     "standard-form", "degree",
                                            "herbrand",  "different",     "essential",
                                            "genus",     "plan",          "verify",
                                            "materialize", "ow",          "oracle",
                                            "sweep"};
    for (const auto& v : verbs) {
        CLI::App* sub = app.add_subcommand(v);
        sub->add_option("input", opts.input, "inline JSON payload or a path to one");
        sub->add_option("--in", opts.in_path, "payload file");
        sub->add_option("--json", opts.inline_json, "inline payload");
        sub->add_option("--field", opts.field_json, "field spec JSON, e.g. {\"p\":3,\"n\":1}");
        sub->add_option("--out", opts.out_path, "write the report here instead of stdout");
        sub->add_option("--seed", opts.seed, "PRNG seed (echoed into reports)");
        sub->add_option("--precision", opts.precision, "series working precision");
        sub->add_option("--max-jump", opts.max_jump, "sweep bound on iota_e");
        sub->add_option("--max-e", opts.max_e, "sweep bound on e");
        sub->add_option("--samples", opts.samples, "sample count for randomized suites");
        sub->add_option("--suite", opts.suite,
                        "sweep suite: witt|combin|different|no-essential|herbrand|genus|"
                        "ow-implication|ow-equivalence|oracle|all");
        sub->add_option("--to", opts.to_convention, "target convention for herbrand");
        sub->callback([&verb, v]() { verb = v; });
    }

    std::vector<const char*> argv;
    argv.push_back("aswkit");
    for (auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    if (verb.empty()) {
        err << app.help();
        return 2;
    }

    json result;
    int code = 0;
    try {
        result = clidetail::dispatch(verb, opts);
        if (verb == "sweep" && result.contains("ok") && !result["ok"].get<bool>()) code = 1;
    } catch (const std::exception& e) {
        result = json{{"error", json{{"verb", verb}, {"message", e.what()}}}};
        code = 1;
    }
    std::string text = result.dump(2);
    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path);
        if (!f) {
            err << "cannot write " << opts.out_path << "\n";
            return 1;
        }
        f << text << "\n";
    } else {
        out << text << "\n";
    }
    return code;
}

}  // namespace aswkit
