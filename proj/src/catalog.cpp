#include "galmeasure/catalog.hpp"

#include <algorithm>

namespace galmeas {

namespace {

GroupSpec cyclic_spec(int n) {
    GroupSpec g;
    g.kind = GroupSpec::Kind::Cyclic;
    g.n = n;
    return g;
}

ScenarioDoc squares_doc() {
    ScenarioDoc d;
    d.metadata = "quadratic cover: measure of the set of squares";
    d.group = cyclic_spec(2);
    d.g0 = {{1, 0}};
    d.complement = std::vector<std::vector<int>>{};
    d.targets = {{"trivial", {}}, {"full", {{1, 0}}}};
    return d;
}

ScenarioDoc fifth_root_doc() {
    ScenarioDoc d;
    d.metadata = "fifth roots: order-20 Frobenius group with kernel C5";
    d.group.kind = GroupSpec::Kind::Explicit;
    d.group.degree = 5;
    d.group.generators = {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}};
    d.g0 = {{1, 2, 3, 4, 0}};
    d.complement = std::vector<std::vector<int>>{{0, 2, 4, 1, 3}};
    d.targets = {{"image", {{0, 2, 4, 1, 3}}},
                 {"full", {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}}}};
    return d;
}

ScenarioDoc s5_doc() {
    ScenarioDoc d;
    d.metadata = "S5 cover regular over the base; transposition target";
    d.group.kind = GroupSpec::Kind::Symmetric;
    d.group.n = 5;
    d.g0 = {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}};
    d.complement = std::vector<std::vector<int>>{};
    d.targets = {{"transposition", {{1, 0, 2, 3, 4}}},
                 {"full", {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}}};
    return d;
}

ScenarioDoc wreath_doc() {
    ScenarioDoc d;
    d.metadata = "wreath product C5 wr C2 on ten points";
    d.group.kind = GroupSpec::Kind::Wreath;
    d.group.args = {cyclic_spec(5), cyclic_spec(2)};
    d.g0 = {{1, 2, 3, 4, 0, 5, 6, 7, 8, 9},
            {0, 1, 2, 3, 4, 6, 7, 8, 9, 5},
            {5, 6, 7, 8, 9, 0, 1, 2, 3, 4}};
    d.complement = std::vector<std::vector<int>>{};
    d.targets = {{"factor", {{1, 2, 3, 4, 0, 5, 6, 7, 8, 9}}},
                 {"full",
                  {{1, 2, 3, 4, 0, 5, 6, 7, 8, 9},
                   {0, 1, 2, 3, 4, 6, 7, 8, 9, 5},
                   {5, 6, 7, 8, 9, 0, 1, 2, 3, 4}}}};
    return d;
}

ScenarioDoc tower_upper_doc() {
    ScenarioDoc d;
    d.metadata = "upper level of the C4-over-C2 tower";
    d.group = cyclic_spec(4);
    d.g0 = {{1, 2, 3, 0}};
    d.complement = std::vector<std::vector<int>>{};
    d.targets = {{"trivial", {}}, {"half", {{2, 3, 0, 1}}}, {"full", {{1, 2, 3, 0}}}};
    return d;
}

ScenarioDoc tower_lower_doc() {
    ScenarioDoc d;
    d.metadata = "lower level of the C4-over-C2 tower";
    d.group = cyclic_spec(2);
    d.g0 = {{1, 0}};
    d.complement = std::vector<std::vector<int>>{};
    d.targets = {{"trivial", {}}, {"full", {{1, 0}}}};
    return d;
}

const std::vector<std::string> kIds = {"squares", "fifth-root", "s5-transposition", "wreath-5-2",
                                       "c4-over-c2-tower"};

}  // namespace

const std::vector<std::string>& catalog_ids() { return kIds; }

bool catalog_has(const std::string& id) {
    return std::find(kIds.begin(), kIds.end(), id) != kIds.end();
}

bool catalog_is_tower(const std::string& id) { return id == "c4-over-c2-tower"; }

std::string catalog_description(const std::string& id) {
    if (catalog_is_tower(id)) return "C4 level over its C2 quotient, for refinement checks";
    return catalog_doc(id).metadata;
}

ScenarioDoc catalog_doc(const std::string& id) {
    if (id == "squares") return squares_doc();
    if (id == "fifth-root") return fifth_root_doc();
    if (id == "s5-transposition") return s5_doc();
    if (id == "wreath-5-2") return wreath_doc();
    fail("ParseError", "unknown catalog scenario '" + id + "'");
}

CoverScenario catalog_scenario(const std::string& id, const Limits& limits) {
    return realize_scenario(catalog_doc(id), "catalog:" + id, limits);
}

TowerScenario catalog_tower(const std::string& id, const Limits& limits) {
    if (id != "c4-over-c2-tower") fail("ParseError", "unknown catalog tower '" + id + "'");
    CoverScenario upper = realize_scenario(tower_upper_doc(), "catalog:" + id + ":upper", limits);
    CoverScenario lower = realize_scenario(tower_lower_doc(), "catalog:" + id + ":lower", limits);
    int sq = upper.group()->index_of(Permutation({2, 3, 0, 1}));
    std::vector<int> sg{sq};
    Epimorphism pi = quotient_map(upper.group(), subgroup_generated(upper.group(), sg));
    Epimorphism restriction = retarget_epimorphism(pi, lower.group());
    return make_tower("catalog:" + id, std::move(upper), std::move(lower), std::move(restriction));
}

}  // namespace galmeas
