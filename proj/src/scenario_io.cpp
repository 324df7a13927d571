#include "galmeasure/scenario_io.hpp"

#include <fstream>

namespace galmeas {

using nlohmann::json;

namespace {

std::vector<std::vector<int>> perm_list(const json& j, const std::string& field) {
    if (!j.is_array()) fail("ParseError", "'" + field + "' must be an array of permutations");
    std::vector<std::vector<int>> out;
    for (const auto& p : j) {
        if (!p.is_array()) fail("ParseError", "permutations are arrays of 0-based images");
        out.push_back(p.get<std::vector<int>>());
    }
    return out;
}

GroupSpec parse_group(const json& j);

GroupSpec parse_construction(const json& j) {
    GroupSpec g;
    const std::string name = j.at("construction").get<std::string>();
    auto binary_args = [&](GroupSpec::Kind kind) {
        g.kind = kind;
        const auto& args = j.at("args");
        if (!args.is_array() || args.size() != 2)
            fail("ParseError", "'" + name + "' takes exactly two operand groups");
        g.args.push_back(parse_group(args[0]));
        g.args.push_back(parse_group(args[1]));
    };
    if (name == "cyclic" || name == "symmetric" || name == "dihedral") {
        g.kind = name == "cyclic" ? GroupSpec::Kind::Cyclic
                 : name == "symmetric" ? GroupSpec::Kind::Symmetric
                                       : GroupSpec::Kind::Dihedral;
        g.n = j.at("n").get<int>();
    } else if (name == "direct-product") {
        binary_args(GroupSpec::Kind::DirectProduct);
    } else if (name == "wreath") {
        binary_args(GroupSpec::Kind::Wreath);
    } else if (name == "semidirect") {
        binary_args(GroupSpec::Kind::Semidirect);
        const auto& action = j.at("action");
        if (action.contains("power")) {
            g.action_power = action.at("power").get<long long>();
        } else if (action.contains("tables")) {
            for (const auto& t : action.at("tables")) g.action_tables.push_back(t.get<std::vector<int>>());
        } else {
            fail("ParseError", "semidirect action needs 'power' or 'tables'");
        }
    } else {
        fail("ParseError", "unknown construction '" + name + "'");
    }
    return g;
}

GroupSpec parse_group(const json& j) {
    if (!j.is_object()) fail("ParseError", "'group' must be an object");
    if (j.contains("construction")) return parse_construction(j);
    GroupSpec g;
    g.kind = GroupSpec::Kind::Explicit;
    g.degree = j.at("degree").get<int>();
    g.generators = perm_list(j.at("generators"), "generators");
    return g;
}

json group_to_json(const GroupSpec& g) {
    json j;
    switch (g.kind) {
        case GroupSpec::Kind::Cyclic:
            j["construction"] = "cyclic";
            j["n"] = g.n;
            break;
        case GroupSpec::Kind::Symmetric:
            j["construction"] = "symmetric";
            j["n"] = g.n;
            break;
        case GroupSpec::Kind::Dihedral:
            j["construction"] = "dihedral";
            j["n"] = g.n;
            break;
        case GroupSpec::Kind::DirectProduct:
        case GroupSpec::Kind::Wreath:
        case GroupSpec::Kind::Semidirect: {
            j["construction"] = g.kind == GroupSpec::Kind::DirectProduct ? "direct-product"
                                : g.kind == GroupSpec::Kind::Wreath      ? "wreath"
                                                                         : "semidirect";
            j["args"] = json::array({group_to_json(g.args.at(0)), group_to_json(g.args.at(1))});
            if (g.kind == GroupSpec::Kind::Semidirect) {
                if (g.action_power) {
                    j["action"] = json{{"power", *g.action_power}};
                } else {
                    j["action"] = json{{"tables", g.action_tables}};
                }
            }
            break;
        }
        case GroupSpec::Kind::Explicit:
            j["degree"] = g.degree;
            j["generators"] = g.generators;
            break;
    }
    return j;
}

}  // namespace

ScenarioDoc parse_scenario_json(const json& j) {
    if (!j.is_object()) fail("ParseError", "scenario file must hold a JSON object");
    ScenarioDoc doc;
    doc.format_version = j.at("format-version").get<std::string>();
    if (doc.format_version != "1")
        fail("ParseError", "unrecognized format-version '" + doc.format_version + "'");
    if (j.contains("metadata")) doc.metadata = j.at("metadata").get<std::string>();
    doc.group = parse_group(j.at("group"));
    doc.g0 = perm_list(j.at("g0"), "g0");
    if (j.contains("complement")) doc.complement = perm_list(j.at("complement"), "complement");
    if (!j.contains("targets") || !j.at("targets").is_array())
        fail("ParseError", "'targets' must be an array");
    for (const auto& t : j.at("targets")) {
        TargetDoc td;
        td.name = t.at("name").get<std::string>();
        td.generators = perm_list(t.at("generators"), "target generators");
        doc.targets.push_back(std::move(td));
    }
    return doc;
}

ScenarioDoc parse_scenario_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail("ParseError", "input is not valid JSON");
    return parse_scenario_json(j);
}

ScenarioDoc load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("ParseError", "cannot read scenario file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_scenario_text(text);
}

json scenario_to_json(const ScenarioDoc& doc) {
    json j;
    j["format-version"] = doc.format_version;
    if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
    j["group"] = group_to_json(doc.group);
    j["g0"] = doc.g0;
    if (doc.complement) j["complement"] = *doc.complement;
    j["targets"] = json::array();
    for (const auto& t : doc.targets)
        j["targets"].push_back(json{{"name", t.name}, {"generators", t.generators}});
    return j;
}

std::string canonical_scenario_text(const ScenarioDoc& doc) {
    return scenario_to_json(doc).dump(2) + "\n";
}

}  // namespace galmeas
