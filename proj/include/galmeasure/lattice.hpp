#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "galmeasure/group.hpp"

namespace galmeas {

// All subgroups of a finite group: containment order, Möbius values,
// conjugacy classes with canonical representatives, and normalizers.
// Nodes are sorted lexicographically on their member index lists, so node 0
// is the trivial subgroup and ids are reproducible across runs.
class SubgroupLattice {
public:
    static std::shared_ptr<const SubgroupLattice> build(GroupPtr G, const Limits& limits = {});

    const GroupPtr& group() const noexcept { return G_; }
    int size() const noexcept { return static_cast<int>(nodes_.size()); }
    const Subgroup& node(int i) const { return nodes_[static_cast<size_t>(i)]; }
    int trivial_node() const noexcept { return 0; }
    int full_node() const noexcept { return full_; }

    // Containment relation K <= H on node ids.
    bool leq(int k, int h) const {
        return nodes_[static_cast<size_t>(k)].members.subset_of(nodes_[static_cast<size_t>(h)].members);
    }
    const std::vector<int>& below(int h) const { return below_[static_cast<size_t>(h)]; }

    // Möbius function of the subgroup lattice; requires k <= h.
    long long mobius(int k, int h) const;
    // Values mobius(k, h) aligned with below(h).
    const std::vector<long long>& mobius_column(int h) const {
        return mobius_col_[static_cast<size_t>(h)];
    }

    int node_of(const ElemSet& members) const;  // -1 when absent
    int node_of(const Subgroup& H) const { return node_of(H.members); }

    int num_classes() const noexcept { return static_cast<int>(class_reps_.size()); }
    int class_of(int node) const { return class_of_[static_cast<size_t>(node)]; }
    int class_rep(int c) const { return class_reps_[static_cast<size_t>(c)]; }
    const std::vector<int>& class_members(int c) const { return class_members_[static_cast<size_t>(c)]; }

    int normalizer_node(int h) const { return normalizer_[static_cast<size_t>(h)]; }

    // Smallest node that contains both operands.
    int join(int a, int b) const;

private:
    SubgroupLattice() = default;

    GroupPtr G_;
    int full_ = 0;
    std::vector<Subgroup> nodes_;
    std::unordered_map<ElemSet, int, ElemSetHash> index_;
    std::vector<std::vector<int>> below_;
    // Per node h: Möbius values mobius(k, h) for k in below_[h] (same order).
    std::vector<std::vector<long long>> mobius_col_;
    std::vector<int> class_of_;
    std::vector<int> class_reps_;
    std::vector<std::vector<int>> class_members_;
    std::vector<int> normalizer_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

// Deterministic Sylow p-subgroup: the first node of full p-power order in
// canonical lattice order. Throws NotPrime.
Subgroup sylow_subgroup(const SubgroupLattice& L, long long p);

}  // namespace galmeas
