#include "galmeasure/scenario_doc.hpp"

namespace galmeas {

std::vector<int> element_indices(const FiniteGroup& G,
                                 const std::vector<std::vector<int>>& perms) {
    std::vector<int> out;
    out.reserve(perms.size());
    for (const auto& images : perms) {
        Permutation p(images);
        if (p.degree() != G.degree())
            fail("InvalidPermutation", "permutation degree does not match the group");
        int idx = G.index_of(p);
        if (idx < 0)
            fail("InvalidPermutation", "permutation " + p.to_string() + " is not a group member");
        out.push_back(idx);
    }
    return out;
}

CoverScenario realize_scenario(const ScenarioDoc& doc, const std::string& id,
                               const Limits& limits) {
    if (doc.format_version != "1")
        fail("ParseError", "unrecognized format-version '" + doc.format_version + "'");
    GroupPtr G = build_group(doc.group, limits);
    std::vector<int> g0 = element_indices(*G, doc.g0);
    std::optional<std::vector<int>> comp;
    if (doc.complement) comp = element_indices(*G, *doc.complement);
    std::vector<std::pair<std::string, std::vector<int>>> targets;
    for (const auto& t : doc.targets) targets.emplace_back(t.name, element_indices(*G, t.generators));
    return CoverScenario::make(id, G, g0, comp, targets, limits);
}

Epimorphism retarget_epimorphism(const Epimorphism& f, const GroupPtr& new_target) {
    std::vector<int> relabel(static_cast<size_t>(f.target->order()));
    for (int q = 0; q < f.target->order(); ++q) {
        int idx = new_target->index_of(f.target->element(q));
        if (idx < 0)
            fail("BadTower", "target realizations do not agree as permutation groups");
        relabel[static_cast<size_t>(q)] = idx;
    }
    std::vector<int> image(static_cast<size_t>(f.source->order()));
    for (int g = 0; g < f.source->order(); ++g)
        image[static_cast<size_t>(g)] = relabel[static_cast<size_t>(f.map(g))];
    return Epimorphism{f.source, new_target, std::move(image)};
}

}  // namespace galmeas
