#include "galmeasure/lattice.hpp"

#include <algorithm>
#include <deque>

namespace galmeas {

namespace {

Subgroup make_node(const GroupPtr& G, ElemSet members, std::vector<int> gens) {
    Subgroup H;
    H.parent = G;
    H.member_list = members.to_list();
    H.members = std::move(members);
    H.generators = std::move(gens);
    return H;
}

}  // namespace

std::shared_ptr<const SubgroupLattice> SubgroupLattice::build(GroupPtr G, const Limits& limits) {
    auto L = std::shared_ptr<SubgroupLattice>(new SubgroupLattice());
    L->G_ = G;
    const int n = G->order();

    // Seed with the trivial and all cyclic subgroups, then close under
    // pairwise joins. Every subgroup is a join of cyclic ones.
    std::vector<Subgroup>& nodes = L->nodes_;
    auto& index = L->index_;
    auto add_node = [&](ElemSet members, std::vector<int> gens) -> int {
        auto it = index.find(members);
        if (it != index.end()) return it->second;
        if (static_cast<long long>(nodes.size()) + 1 > limits.max_subgroups)
            fail_cap("LatticeTooLarge", "subgroup count exceeds the configured cap of " +
                                            std::to_string(limits.max_subgroups));
        int id = static_cast<int>(nodes.size());
        nodes.push_back(make_node(G, std::move(members), std::move(gens)));
        index.emplace(nodes.back().members, id);
        return id;
    };

    add_node(closure_set(*G, std::span<const int>{}), {});
    for (int g = 1; g < n; ++g) {
        int one[] = {g};
        add_node(closure_set(*G, one), {g});
    }

    // Join each node against every earlier one; new joins enter the worklist
    // in turn, so all pairs get visited without materializing them.
    std::deque<int> work;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) work.push_back(i);
    while (!work.empty()) {
        int j = work.front();
        work.pop_front();
        for (int i = 0; i < j; ++i) {
            if (nodes[i].members.subset_of(nodes[j].members) ||
                nodes[j].members.subset_of(nodes[i].members))
                continue;
            std::vector<int> gens = nodes[i].generators;
            gens.insert(gens.end(), nodes[j].generators.begin(), nodes[j].generators.end());
            ElemSet joined = closure_set(*G, gens);
            if (index.contains(joined)) continue;
            int before = static_cast<int>(nodes.size());
            int id = add_node(std::move(joined), std::move(gens));
            if (id == before) work.push_back(id);
        }
    }

    // Canonical order: lexicographic on member index lists.
    std::vector<int> perm(nodes.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        return nodes[static_cast<size_t>(a)].member_list < nodes[static_cast<size_t>(b)].member_list;
    });
    std::vector<Subgroup> sorted;
    sorted.reserve(nodes.size());
    for (int p : perm) sorted.push_back(std::move(nodes[static_cast<size_t>(p)]));
    nodes = std::move(sorted);
    index.clear();
    for (size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i].members, static_cast<int>(i));
    const int count = static_cast<int>(nodes.size());
    for (int i = 0; i < count; ++i)
        if (nodes[static_cast<size_t>(i)].order() == n) L->full_ = i;

    L->below_.assign(static_cast<size_t>(count), {});
    for (int h = 0; h < count; ++h)
        for (int k = 0; k < count; ++k)
            if (L->leq(k, h)) L->below_[static_cast<size_t>(h)].push_back(k);

    // Möbius columns by downward recursion: walk k under h in decreasing
    // subgroup order so every d with k < d <= h is already done.
    L->mobius_col_.assign(static_cast<size_t>(count), {});
    for (int h = 0; h < count; ++h) {
        const auto& bel = L->below_[static_cast<size_t>(h)];
        std::vector<int> by_order(bel.begin(), bel.end());
        std::sort(by_order.begin(), by_order.end(), [&](int a, int b) {
            int oa = nodes[static_cast<size_t>(a)].order(), ob = nodes[static_cast<size_t>(b)].order();
            return oa != ob ? oa > ob : a < b;
        });
        std::vector<long long> val(static_cast<size_t>(count), 0);
        for (int k : by_order) {
            if (k == h) {
                val[static_cast<size_t>(k)] = 1;
                continue;
            }
            long long sum = 0;
            for (int d : bel)
                if (d != k && L->leq(k, d)) sum += val[static_cast<size_t>(d)];
            val[static_cast<size_t>(k)] = -sum;
        }
        auto& col = L->mobius_col_[static_cast<size_t>(h)];
        col.reserve(bel.size());
        for (int k : bel) col.push_back(val[static_cast<size_t>(k)]);
    }

    // Conjugacy classes: orbits of nodes under conjugation by generators.
    L->class_of_.assign(static_cast<size_t>(count), -1);
    const auto& gens = G->generator_indices();
    for (int start = 0; start < count; ++start) {
        if (L->class_of_[static_cast<size_t>(start)] >= 0) continue;
        int cid = static_cast<int>(L->class_reps_.size());
        L->class_reps_.push_back(start);
        L->class_members_.push_back({});
        std::deque<int> orbit{start};
        L->class_of_[static_cast<size_t>(start)] = cid;
        while (!orbit.empty()) {
            int cur = orbit.front();
            orbit.pop_front();
            L->class_members_.back().push_back(cur);
            for (int g : gens) {
                ElemSet img(n);
                for (int x : nodes[static_cast<size_t>(cur)].member_list) img.set(G->conj(g, x));
                int next = L->node_of(img);
                if (L->class_of_[static_cast<size_t>(next)] < 0) {
                    L->class_of_[static_cast<size_t>(next)] = cid;
                    orbit.push_back(next);
                }
            }
        }
        std::sort(L->class_members_.back().begin(), L->class_members_.back().end());
    }

    // Normalizers. Conjugation is an automorphism, so probing the stored
    // generators of each node is enough.
    L->normalizer_.assign(static_cast<size_t>(count), -1);
    for (int h = 0; h < count; ++h) {
        const auto& H = nodes[static_cast<size_t>(h)];
        const auto& probe = H.generators.empty() ? H.member_list : H.generators;
        ElemSet norm(n);
        for (int g = 0; g < n; ++g) {
            bool keeps = true;
            for (int x : probe) {
                if (!H.contains(G->conj(g, x))) {
                    keeps = false;
                    break;
                }
            }
            if (keeps) norm.set(g);
        }
        L->normalizer_[static_cast<size_t>(h)] = L->node_of(norm);
    }
    return L;
}

long long SubgroupLattice::mobius(int k, int h) const {
    const auto& bel = below_[static_cast<size_t>(h)];
    auto it = std::lower_bound(bel.begin(), bel.end(), k);
    if (it == bel.end() || *it != k) fail("NotSubgroup", "mobius(k,h) requires k <= h");
    return mobius_col_[static_cast<size_t>(h)][static_cast<size_t>(it - bel.begin())];
}

int SubgroupLattice::node_of(const ElemSet& members) const {
    auto it = index_.find(members);
    return it == index_.end() ? -1 : it->second;
}

int SubgroupLattice::join(int a, int b) const {
    if (leq(a, b)) return b;
    if (leq(b, a)) return a;
    std::vector<int> gens = nodes_[static_cast<size_t>(a)].generators;
    gens.insert(gens.end(), nodes_[static_cast<size_t>(b)].generators.begin(),
                nodes_[static_cast<size_t>(b)].generators.end());
    int id = node_of(closure_set(*G_, gens));
    return id;
}

Subgroup sylow_subgroup(const SubgroupLattice& L, long long p) {
    if (p < 2) fail("NotPrime", std::to_string(p) + " is not prime");
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) fail("NotPrime", std::to_string(p) + " is not prime");
    long long ppart = 1;
    long long n = L.group()->order();
    while (n % p == 0) {
        ppart *= p;
        n /= p;
    }
    for (int i = 0; i < L.size(); ++i)
        if (L.node(i).order() == ppart) return L.node(i);
    fail("NotPrime", "unreachable: Sylow subgroup missing");  // Sylow's theorem says otherwise
}

}  // namespace galmeas
