#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "galmeasure/errors.hpp"
#include "galmeasure/perm.hpp"

namespace galmeas {

// Fixed-universe bitset over element indices.
class ElemSet {
public:
    ElemSet() = default;
    explicit ElemSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    int universe() const noexcept { return n_; }
    void set(int i) { words_[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return words_[i >> 6] >> (i & 63) & 1; }
    int count() const;
    bool subset_of(const ElemSet& o) const;
    ElemSet intersect(const ElemSet& o) const;
    ElemSet unite(const ElemSet& o) const;
    std::vector<int> to_list() const;

    bool operator==(const ElemSet& o) const noexcept = default;
    size_t hash() const noexcept;

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

struct ElemSetHash {
    size_t operator()(const ElemSet& s) const noexcept { return s.hash(); }
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite permutation group with the full element table materialized.
// Elements are sorted lexicographically by image list, so index 0 is the
// identity and every downstream report is reproducible.
class FiniteGroup {
public:
    static GroupPtr from_generators(int degree, std::vector<Permutation> gens,
                                    const Limits& limits = {});

    int degree() const noexcept { return degree_; }
    int order() const noexcept { return static_cast<int>(elements_.size()); }
    const Permutation& element(int i) const { return elements_[static_cast<size_t>(i)]; }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    const std::vector<int>& generator_indices() const noexcept { return gen_idx_; }

    int index_of(const Permutation& p) const;  // -1 when absent
    int identity_index() const noexcept { return 0; }

    int mul(int a, int b) const {
        if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * elements_.size() + b];
        return mul_slow(a, b);
    }
    int inv(int a) const { return inverse_[static_cast<size_t>(a)]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    int element_order(int x) const;

private:
    FiniteGroup() = default;
    int mul_slow(int a, int b) const;

    int degree_ = 0;
    std::vector<Permutation> elements_;
    std::vector<int> gen_idx_;
    std::vector<int> inverse_;
    std::vector<int32_t> mul_table_;  // empty when order*order*degree is too big
    // (image hash, element index), sorted by hash; lookups compare one u64
    // per probe instead of whole image vectors
    std::vector<std::pair<uint64_t, int32_t>> hash_index_;
};

// Subgroup of a parent group, stored as a member bitset plus the generating
// set it was built from.
struct Subgroup {
    GroupPtr parent;
    ElemSet members;
    std::vector<int> member_list;  // ascending element indices
    std::vector<int> generators;   // element indices

    int order() const noexcept { return static_cast<int>(member_list.size()); }
    bool contains(int i) const { return members.test(i); }
    bool is_trivial() const noexcept { return member_list.size() == 1; }
};

// Closure of `seed` under multiplication (identity always included).
ElemSet closure_set(const FiniteGroup& G, std::span<const int> seed);

Subgroup subgroup_generated(const GroupPtr& G, std::span<const int> elems);
Subgroup full_subgroup(const GroupPtr& G);
Subgroup trivial_subgroup(const GroupPtr& G);

bool is_normal(const FiniteGroup& G, const Subgroup& H);
Subgroup normalizer(const GroupPtr& G, const Subgroup& H);

// |A·B| for subgroups, via |A||B|/|A∩B|.
long long product_set_order(const Subgroup& A, const Subgroup& B);

struct Epimorphism {
    GroupPtr source;
    GroupPtr target;
    std::vector<int> image;  // source element index -> target element index

    int map(int i) const { return image[static_cast<size_t>(i)]; }
};

// Validates surjectivity and the homomorphism law on all pairs.
Epimorphism make_epimorphism(GroupPtr source, GroupPtr target, std::vector<int> image);
Epimorphism identity_epimorphism(const GroupPtr& G);

// Natural projection onto the quotient, realized as the permutation group on
// left cosets of N. Throws NotNormal.
Epimorphism quotient_map(const GroupPtr& G, const Subgroup& N);

}  // namespace galmeas
