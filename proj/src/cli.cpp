#include "galmeasure/cli.hpp"

#include <fstream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "galmeasure/asymptotics.hpp"
#include "galmeasure/catalog.hpp"
#include "galmeasure/measure.hpp"
#include "galmeasure/montecarlo.hpp"
#include "galmeasure/report.hpp"
#include "galmeasure/scenario_io.hpp"
#include "galmeasure/sylow_measure.hpp"

namespace galmeas {

using nlohmann::json;

namespace {

struct CommonOpts {
    std::string input;
    std::string format = "json";
    int e = 1;
    int start = 1;
    long long prime = 2;
    std::string target;
    long long samples = 10000;
    uint64_t seed = 1;
    long long max_group_order = Limits{}.max_group_order;
    long long max_enumeration = Limits{}.max_enumeration;

    Limits limits() const {
        Limits l;
        l.max_group_order = max_group_order;
        l.max_enumeration = max_enumeration;
        return l;
    }
};

struct LoadedInput {
    bool is_tower = false;
    std::optional<CoverScenario> scenario;
    std::optional<TowerScenario> tower;
    std::string digest;
};

LoadedInput load_input(const std::string& input, const Limits& limits) {
    LoadedInput out;
    if (input.rfind("catalog:", 0) == 0) {
        std::string id = input.substr(8);
        if (!catalog_has(id)) fail("ParseError", "unknown catalog entry '" + id + "'");
        if (catalog_is_tower(id)) {
            out.is_tower = true;
            out.tower = catalog_tower(id, limits);
            out.digest = fnv1a_hex(input);
        } else {
            out.scenario = catalog_scenario(id, limits);
            out.digest = fnv1a_hex(canonical_scenario_text(catalog_doc(id)));
        }
        return out;
    }
    std::ifstream in(input, std::ios::binary);
    if (!in) fail("ParseError", "cannot read scenario file '" + input + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    out.digest = fnv1a_hex(text);
    out.scenario = realize_scenario(parse_scenario_text(text), input, limits);
    return out;
}

CoverScenario need_scenario(LoadedInput& in) {
    if (!in.scenario) fail("ParseError", "this subcommand needs a scenario, not a tower");
    return *in.scenario;
}

TowerScenario need_tower(LoadedInput& in) {
    if (!in.tower) fail("ParseError", "this subcommand needs a tower input");
    return *in.tower;
}

json params_json(const CommonOpts& o, std::initializer_list<const char*> keys) {
    json p;
    for (const char* k : keys) {
        std::string key = k;
        if (key == "e") p["e"] = o.e;
        if (key == "start") p["start"] = o.start;
        if (key == "prime") p["prime"] = o.prime;
        if (key == "target") p["target"] = o.target;
        if (key == "samples") p["samples"] = o.samples;
        if (key == "seed") p["seed"] = o.seed;
        if (key == "input") p["input"] = o.input;
        if (key == "max-group-order") p["max-group-order"] = o.max_group_order;
        if (key == "max-enumeration") p["max-enumeration"] = o.max_enumeration;
    }
    return p;
}

json measure_results(const MeasureReport& r) {
    json targets = json::array();
    for (const auto& t : r.per_target)
        targets.push_back(json{{"name", t.name},
                               {"numerator", t.numerator.to_string()},
                               {"denominator", t.denominator.to_string()},
                               {"value", rational_str(t.value)}});
    return json{{"e", r.e},
                {"method", r.method},
                {"regular-total", r.regular_total.to_string()},
                {"targets", targets}};
}

json form_json(const SignedPowerSum& form) {
    json terms = json::array();
    for (const auto& t : form.terms)
        terms.push_back(json{{"coeff", t.coeff.to_string()}, {"scale", t.scale}});
    return json{{"base", form.base}, {"e1", form.e1}, {"terms", terms}};
}

std::vector<std::string> target_filter(const CoverScenario& s, const std::string& name) {
    if (name.empty()) return {};
    return {s.target(name).name};
}

MeasureReport filter_report(MeasureReport r, const std::string& name) {
    if (name.empty()) return r;
    MeasureReport out = r;
    out.per_target.clear();
    out.per_target.push_back(r.target(name));
    return out;
}

int dispatch(const std::string& command, CommonOpts& opts, std::ostream& out) {
    const Limits limits = opts.limits();
    const std::string fmt = opts.format;

    if (command == "catalog") {
        json entries = json::array();
        for (const auto& id : catalog_ids())
            entries.push_back(json{{"id", id},
                                   {"kind", catalog_is_tower(id) ? "tower" : "scenario"},
                                   {"description", catalog_description(id)}});
        json doc = make_report("catalog", json::object(), fnv1a_hex("catalog"),
                               json{{"entries", entries}});
        out << render_report(doc, fmt);
        return 0;
    }

    LoadedInput in = load_input(opts.input, limits);

    if (command == "validate") {
        json results;
        if (in.is_tower) {
            const auto& t = *in.tower;
            results = json{{"valid", true},
                           {"kind", "tower"},
                           {"upper-order", t.upper.group()->order()},
                           {"lower-order", t.lower.group()->order()}};
        } else {
            const auto& s = *in.scenario;
            json targets = json::array();
            for (const auto& tc : s.targets())
                targets.push_back(json{
                    {"name", tc.name},
                    {"order", s.lattice()->node(tc.node).order()},
                    {"class-size",
                     static_cast<long long>(s.lattice()->class_members(tc.class_id).size())}});
            results = json{{"valid", true},
                           {"kind", "scenario"},
                           {"group-order", s.group()->order()},
                           {"g0-order", s.g0().order()},
                           {"quotient-order", s.group()->order() / s.g0().order()},
                           {"split", s.split()},
                           {"subgroup-count", s.lattice()->size()},
                           {"targets", targets}};
        }
        out << render_report(
            make_report("validate", params_json(opts, {"input"}), in.digest, results), fmt);
        return 0;
    }

    if (command == "measure") {
        auto s = need_scenario(in);
        auto r = filter_report(measure_at(s, opts.e), opts.target);
        out << render_report(make_report("measure", params_json(opts, {"input", "e", "target"}),
                                         in.digest, measure_results(r)),
                             fmt);
        return 0;
    }

    if (command == "measure-split") {
        auto s = need_scenario(in);
        auto r = filter_report(measure_split_at(s, opts.e, std::nullopt, limits), opts.target);
        out << render_report(
            make_report("measure-split", params_json(opts, {"input", "e", "target"}), in.digest,
                        measure_results(r)),
            fmt);
        return 0;
    }

    if (command == "closed-form") {
        auto s = need_scenario(in);
        if (opts.target.empty()) fail("ParseError", "closed-form needs --target");
        auto form = closed_form(s, opts.target);
        json results = form_json(form);
        json evals = json::array();
        for (int e = 1; e <= 8; ++e)
            evals.push_back(json{{"e", e}, {"value", rational_str(form.evaluate(e))}});
        results["evaluations"] = evals;
        out << render_report(
            make_report("closed-form", params_json(opts, {"input", "target"}), in.digest, results),
            fmt);
        return 0;
    }

    if (command == "omega-sum") {
        auto s = need_scenario(in);
        if (opts.target.empty()) fail("ParseError", "omega-sum needs --target");
        auto r = omega_sum(closed_form(s, opts.target), opts.start);
        json results{{"start", r.start}, {"form", form_json(r.form)}};
        results["value"] = r.infinite ? json("infinity") : json(rational_str(r.value));
        out << render_report(
            make_report("omega-sum", params_json(opts, {"input", "target", "start"}), in.digest,
                        results),
            fmt);
        return 0;
    }

    if (command == "ultralimit") {
        auto s = need_scenario(in);
        if (opts.target.empty()) fail("ParseError", "ultralimit needs --target");
        auto r = ultralimit(closed_form(s, opts.target));
        json results{{"value", r.value}, {"form", form_json(r.form)}};
        results["generic-target"] = generic_target(s);
        out << render_report(
            make_report("ultralimit", params_json(opts, {"input", "target"}), in.digest, results),
            fmt);
        return 0;
    }

    if (command == "spectrum") {
        auto s = need_scenario(in);
        auto spec = tuple_spectrum(s.lattice(), opts.e);
        const auto& L = *s.lattice();
        json classes = json::array();
        for (int c = 0; c < L.num_classes(); ++c)
            classes.push_back(
                json{{"representative-node", L.class_rep(c)},
                     {"order", L.node(L.class_rep(c)).order()},
                     {"class-size", static_cast<long long>(L.class_members(c).size())},
                     {"regular", s.node_regular(L.class_rep(c))},
                     {"count", spec.class_counts[static_cast<size_t>(c)].to_string()}});
        json results{{"e", opts.e}, {"total", spec.total().to_string()}, {"classes", classes}};
        out << render_report(
            make_report("spectrum", params_json(opts, {"input", "e"}), in.digest, results), fmt);
        return 0;
    }

    if (command == "gaschutz") {
        Epimorphism epi = in.is_tower ? in.tower->restriction
                                      : in.scenario->to_quotient();
        auto r = gaschutz_count(epi, opts.e, std::nullopt, limits);
        bool multiplicative = r.source_gen_count == r.lift_count * r.target_gen_count;
        json results{{"e", r.e},
                     {"lift-count", r.lift_count.to_string()},
                     {"source-generating", r.source_gen_count.to_string()},
                     {"target-generating", r.target_gen_count.to_string()},
                     {"target-tuple", r.target_tuple},
                     {"multiplicative", multiplicative}};
        out << render_report(
            make_report("gaschutz", params_json(opts, {"input", "e"}), in.digest, results), fmt);
        return 0;
    }

    if (command == "verify-refinement") {
        auto t = need_tower(in);
        auto r = verify_refinement(t, opts.e, limits);
        json targets = json::array();
        for (const auto& [name, lower, upper] : r.per_target)
            targets.push_back(json{{"name", name},
                                   {"lower", rational_str(lower)},
                                   {"upper-sum", rational_str(upper)},
                                   {"equal", lower == upper}});
        json results{{"e", r.e},
                     {"regular-lower-tuples", r.regular_lower_tuples},
                     {"counts-all-equal", r.counts_all_equal},
                     {"common-count", r.common_count.to_string()},
                     {"gaschutz-factor", r.gaschutz_factor.to_string()},
                     {"kernel-power", r.kernel_power.to_string()},
                     {"predicted", r.predicted.to_string()},
                     {"matches-prediction", r.matches_prediction},
                     {"measures-agree", r.measures_agree},
                     {"targets", targets}};
        out << render_report(
            make_report("verify-refinement", params_json(opts, {"input", "e"}), in.digest,
                        results),
            fmt);
        return 0;
    }

    if (command == "prop-measure") {
        auto s = need_scenario(in);
        auto r = prop_measure_at(s, opts.prime, opts.e, target_filter(s, opts.target), {}, limits);
        json results = measure_results(r);
        results["prime"] = opts.prime;
        out << render_report(
            make_report("prop-measure", params_json(opts, {"input", "e", "prime", "target"}),
                        in.digest, results),
            fmt);
        return 0;
    }

    if (command == "bijection-factor") {
        auto s = need_scenario(in);
        if (opts.target.empty()) fail("ParseError", "bijection-factor needs --target");
        auto r = bijection_factor(s, opts.target, opts.e);
        json results{{"e", r.e},
                     {"target", r.target},
                     {"normalizer-index", r.normalizer_index},
                     {"factor", rational_str(r.factor)},
                     {"original-value", rational_str(r.original.value)},
                     {"induced-value", rational_str(r.induced_value)},
                     {"induced-numerator", r.induced_numerator.to_string()},
                     {"induced-group-order", r.induced.group()->order()},
                     {"identity-holds", r.identity_holds},
                     {"preserved-at-e1", r.preserved_at_e1}};
        out << render_report(
            make_report("bijection-factor", params_json(opts, {"input", "e", "target"}), in.digest,
                        results),
            fmt);
        return 0;
    }

    if (command == "montecarlo") {
        auto s = need_scenario(in);
        if (opts.target.empty()) fail("ParseError", "montecarlo needs --target");
        auto r = sample_measure(s, opts.target, opts.e, opts.samples, opts.seed);
        json results{{"e", r.e},
                     {"samples", r.samples},
                     {"seed", r.seed},
                     {"generator", r.generator},
                     {"accepted", r.accepted},
                     {"hits", r.hits},
                     {"no-regular-samples", r.no_regular_samples},
                     {"estimate", rational_str(r.estimate)},
                     {"exact", rational_str(r.exact)},
                     {"abs-error", rational_str(r.abs_error)},
                     {"sigma", sigma_str(r.sigma)},
                     {"within-4-sigma", r.within_4_sigma}};
        out << render_report(
            make_report("montecarlo",
                        params_json(opts, {"input", "e", "target", "samples", "seed"}), in.digest,
                        results),
            fmt);
        return 0;
    }

    fail("ParseError", "unknown subcommand '" + command + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact measures on Galois cover scenarios via finite group counting"};
    app.require_subcommand(1);

    static const std::vector<std::pair<std::string, std::string>> kScenarioCommands = {
        {"validate", "check a scenario or tower and summarize it"},
        {"measure", "exact measure of each target at rank e"},
        {"measure-split", "the same measure via the split coset counting"},
        {"closed-form", "signed power sum in e for one target"},
        {"omega-sum", "exact series value of a closed form over e >= start"},
        {"ultralimit", "0/1 limit of a closed form as e grows"},
        {"spectrum", "tuple counts per subgroup conjugacy class"},
        {"gaschutz", "generating-lift count along the quotient or tower map"},
        {"verify-refinement", "constant-lift-count check along a tower"},
        {"prop-measure", "measure computed inside a p-Sylow subgroup"},
        {"bijection-factor", "normalizer-refinement scaling factor for a target"},
        {"montecarlo", "seeded sampling estimate against the exact value"}};

    std::map<std::string, CommonOpts> opts;
    for (const auto& [name, blurb] : kScenarioCommands) {
        auto* sub = app.add_subcommand(name, blurb);
        auto& o = opts[name];
        sub->add_option("input", o.input, "scenario file path or catalog:<id>")->required();
        sub->add_option("--format", o.format, "json or table");
        sub->add_option("--max-group-order", o.max_group_order);
        sub->add_option("--max-enumeration", o.max_enumeration);
        if (name != "validate" && name != "closed-form" && name != "omega-sum" &&
            name != "ultralimit")
            sub->add_option("--e", o.e, "tuple length");
        if (name == "omega-sum") sub->add_option("--start", o.start, "series start index");
        if (name == "prop-measure") sub->add_option("--prime", o.prime)->required();
        if (name != "validate" && name != "spectrum" && name != "gaschutz" &&
            name != "verify-refinement")
            sub->add_option("--target", o.target, "target name");
        if (name == "montecarlo") {
            sub->add_option("--samples", o.samples);
            sub->add_option("--seed", o.seed);
        }
    }
    auto* cat = app.add_subcommand("catalog", "list built-in scenarios");
    auto& cat_opts = opts["catalog"];
    cat->add_option("--format", cat_opts.format, "json or table");

    try {
        std::vector<const char*> argv;
        argv.push_back("galmeasure");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 64;
    }

    std::string command;
    for (auto* sub : app.get_subcommands()) command = sub->get_name();
    try {
        return dispatch(command, opts[command], out);
    } catch (const ResourceError& e) {
        err << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace galmeas
