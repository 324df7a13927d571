#include "galmeasure/group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>

namespace galmeas {

int ElemSet::count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool ElemSet::subset_of(const ElemSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

ElemSet ElemSet::intersect(const ElemSet& o) const {
    ElemSet out(n_);
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & o.words_[i];
    return out;
}

ElemSet ElemSet::unite(const ElemSet& o) const {
    ElemSet out(n_);
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | o.words_[i];
    return out;
}

std::vector<int> ElemSet::to_list() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (int i = 0; i < n_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

size_t ElemSet::hash() const noexcept {
    uint64_t h = 0xcbf29ce484222325ull;
    for (uint64_t w : words_) {
        h ^= w;
        h *= 0x100000001b3ull;
    }
    return static_cast<size_t>(h);
}

namespace {

uint64_t hash_images(const std::vector<int>& images) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (int v : images) {
        h ^= static_cast<uint64_t>(static_cast<uint32_t>(v));
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace

GroupPtr FiniteGroup::from_generators(int degree, std::vector<Permutation> gens,
                                      const Limits& limits) {
    if (degree < 1) fail("InvalidPermutation", "degree must be positive");
    for (const auto& g : gens)
        if (g.degree() != degree)
            fail("InvalidPermutation", "generator degree does not match group degree");

    // BFS closure: right-multiplying words by generators reaches the whole
    // group; inverses come for free in a finite group.
    std::map<std::vector<int>, int> seen;
    std::vector<Permutation> elems;
    elems.push_back(Permutation::identity(degree));
    seen.emplace(elems[0].images(), 0);
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        int cur = todo.front();
        todo.pop();
        for (const auto& g : gens) {
            Permutation next = compose(elems[static_cast<size_t>(cur)], g);
            auto [it, inserted] = seen.emplace(next.images(), static_cast<int>(elems.size()));
            if (inserted) {
                if (static_cast<long long>(elems.size()) + 1 > limits.max_group_order)
                    fail_cap("GroupTooLarge",
                             "closure exceeds the configured group order cap of " +
                                 std::to_string(limits.max_group_order));
                elems.push_back(std::move(next));
                todo.push(it->second);
            }
        }
    }

    auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    G->degree_ = degree;
    std::sort(elems.begin(), elems.end());
    G->elements_ = std::move(elems);

    const size_t n = G->elements_.size();
    G->hash_index_.reserve(n);
    for (size_t i = 0; i < n; ++i)
        G->hash_index_.emplace_back(hash_images(G->elements_[i].images()), static_cast<int32_t>(i));
    std::sort(G->hash_index_.begin(), G->hash_index_.end());
    if (n * n * static_cast<size_t>(degree) <= 200000000ull) {
        G->mul_table_.resize(n * n);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                G->mul_table_[a * n + b] =
                    G->index_of(compose(G->elements_[a], G->elements_[b]));
    }
    G->inverse_.resize(n);
    for (size_t a = 0; a < n; ++a) G->inverse_[a] = G->index_of(G->elements_[a].inverse());
    for (const auto& g : gens) G->gen_idx_.push_back(G->index_of(g));
    std::sort(G->gen_idx_.begin(), G->gen_idx_.end());
    G->gen_idx_.erase(std::unique(G->gen_idx_.begin(), G->gen_idx_.end()), G->gen_idx_.end());
    return G;
}

int FiniteGroup::index_of(const Permutation& p) const {
    uint64_t h = hash_images(p.images());
    auto it = std::lower_bound(hash_index_.begin(), hash_index_.end(),
                               std::make_pair(h, int32_t{-1}));
    for (; it != hash_index_.end() && it->first == h; ++it)
        if (elements_[static_cast<size_t>(it->second)] == p) return it->second;
    return -1;
}

int FiniteGroup::mul_slow(int a, int b) const {
    return index_of(compose(elements_[static_cast<size_t>(a)], elements_[static_cast<size_t>(b)]));
}

int FiniteGroup::element_order(int x) const {
    int ord = 1;
    int cur = x;
    while (cur != 0) {
        cur = mul(cur, x);
        ++ord;
    }
    return ord;
}

ElemSet closure_set(const FiniteGroup& G, std::span<const int> seed) {
    ElemSet members(G.order());
    members.set(0);
    std::queue<int> todo;
    todo.push(0);
    for (int s : seed) {
        if (s < 0 || s >= G.order()) fail("InvalidPermutation", "element index out of range");
        if (!members.test(s)) {
            members.set(s);
            todo.push(s);
        }
    }
    while (!todo.empty()) {
        int cur = todo.front();
        todo.pop();
        for (int s : seed) {
            int next = G.mul(cur, s);
            if (!members.test(next)) {
                members.set(next);
                todo.push(next);
            }
        }
    }
    return members;
}

Subgroup subgroup_generated(const GroupPtr& G, std::span<const int> elems) {
    Subgroup H;
    H.parent = G;
    H.members = closure_set(*G, elems);
    H.member_list = H.members.to_list();
    H.generators.assign(elems.begin(), elems.end());
    std::sort(H.generators.begin(), H.generators.end());
    H.generators.erase(std::unique(H.generators.begin(), H.generators.end()), H.generators.end());
    return H;
}

Subgroup full_subgroup(const GroupPtr& G) {
    return subgroup_generated(G, G->generator_indices());
}

Subgroup trivial_subgroup(const GroupPtr& G) {
    return subgroup_generated(G, std::span<const int>{});
}

// Conjugation by a fixed g is an automorphism, so g H g^-1 = H exactly when
// every generator of H lands back in H.
static bool conjugation_fixes(const FiniteGroup& G, const Subgroup& H, int g) {
    const std::vector<int>& probe = H.generators.empty() ? H.member_list : H.generators;
    for (int h : probe)
        if (!H.contains(G.conj(g, h))) return false;
    return true;
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
    for (int g = 0; g < G.order(); ++g)
        if (!conjugation_fixes(G, H, g)) return false;
    return true;
}

Subgroup normalizer(const GroupPtr& G, const Subgroup& H) {
    std::vector<int> norm;
    for (int g = 0; g < G->order(); ++g) {
        if (conjugation_fixes(*G, H, g)) norm.push_back(g);
    }
    Subgroup N;
    N.parent = G;
    N.members = ElemSet(G->order());
    for (int g : norm) N.members.set(g);
    N.member_list = std::move(norm);
    N.generators = N.member_list;
    return N;
}

long long product_set_order(const Subgroup& A, const Subgroup& B) {
    long long inter = A.members.intersect(B.members).count();
    return static_cast<long long>(A.order()) * B.order() / inter;
}

Epimorphism make_epimorphism(GroupPtr source, GroupPtr target, std::vector<int> image) {
    if (static_cast<int>(image.size()) != source->order())
        fail("BadTower", "image map size does not match source order");
    ElemSet hit(target->order());
    for (int v : image) {
        if (v < 0 || v >= target->order()) fail("BadTower", "image map value out of range");
        hit.set(v);
    }
    if (hit.count() != target->order()) fail("BadTower", "map is not surjective");
    for (int a = 0; a < source->order(); ++a)
        for (int b = 0; b < source->order(); ++b)
            if (image[static_cast<size_t>(source->mul(a, b))] !=
                target->mul(image[static_cast<size_t>(a)], image[static_cast<size_t>(b)]))
                fail("BadTower", "map does not respect composition");
    return Epimorphism{std::move(source), std::move(target), std::move(image)};
}

Epimorphism identity_epimorphism(const GroupPtr& G) {
    std::vector<int> image(static_cast<size_t>(G->order()));
    for (int i = 0; i < G->order(); ++i) image[static_cast<size_t>(i)] = i;
    return Epimorphism{G, G, std::move(image)};
}

Epimorphism quotient_map(const GroupPtr& G, const Subgroup& N) {
    if (!is_normal(*G, N)) fail("NotNormal", "subgroup is not normal, quotient undefined");

    // Left cosets in canonical order (by least member index).
    std::vector<int> coset_of(static_cast<size_t>(G->order()), -1);
    std::vector<int> reps;
    for (int x = 0; x < G->order(); ++x) {
        if (coset_of[static_cast<size_t>(x)] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int n : N.member_list) coset_of[static_cast<size_t>(G->mul(x, n))] = id;
    }
    const int m = static_cast<int>(reps.size());

    auto coset_perm = [&](int g) {
        std::vector<int> im(static_cast<size_t>(m));
        for (int c = 0; c < m; ++c)
            im[static_cast<size_t>(c)] = coset_of[static_cast<size_t>(G->mul(g, reps[static_cast<size_t>(c)]))];
        return Permutation(std::move(im));
    };

    std::vector<Permutation> qgens;
    for (int g : G->generator_indices()) qgens.push_back(coset_perm(g));
    GroupPtr Q = FiniteGroup::from_generators(m, std::move(qgens));
    if (Q->order() != m)
        fail("NotNormal", "coset action has unexpected kernel");  // unreachable for normal N

    std::vector<int> image(static_cast<size_t>(G->order()));
    for (int g = 0; g < G->order(); ++g) image[static_cast<size_t>(g)] = Q->index_of(coset_perm(g));
    return Epimorphism{G, Q, std::move(image)};
}

}  // namespace galmeas
