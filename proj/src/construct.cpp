#include "galmeasure/construct.hpp"

#include <map>
#include <numeric>
#include <queue>

#include "galmeasure/bigint.hpp"

namespace galmeas {

namespace {

void check_order_cap(const BigInt& order, const Limits& limits) {
    if (order > BigInt(limits.max_group_order))
        fail_cap("GroupTooLarge", "construction order " + order.to_string() +
                                      " exceeds the cap of " +
                                      std::to_string(limits.max_group_order));
}

bool is_automorphism(const FiniteGroup& K, const std::vector<int>& table) {
    if (static_cast<int>(table.size()) != K.order()) return false;
    std::vector<char> seen(table.size(), 0);
    for (int v : table) {
        if (v < 0 || v >= K.order() || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    if (table[0] != 0) return false;
    for (int a = 0; a < K.order(); ++a)
        for (int b = 0; b < K.order(); ++b)
            if (table[static_cast<size_t>(K.mul(a, b))] !=
                K.mul(table[static_cast<size_t>(a)], table[static_cast<size_t>(b)]))
                return false;
    return true;
}

std::vector<int> compose_tables(const std::vector<int>& outer, const std::vector<int>& inner) {
    std::vector<int> out(inner.size());
    for (size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<size_t>(inner[i])];
    return out;
}

}  // namespace

GroupPtr cyclic_group(int n, const Limits& limits) {
    if (n < 1) fail("InvalidPermutation", "cyclic group order must be positive");
    check_order_cap(BigInt(n), limits);
    if (n == 1) return FiniteGroup::from_generators(1, {}, limits);
    std::vector<int> im(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = (i + 1) % n;
    return FiniteGroup::from_generators(n, {Permutation(std::move(im))}, limits);
}

GroupPtr symmetric_group(int n, const Limits& limits) {
    if (n < 1) fail("InvalidPermutation", "symmetric group degree must be positive");
    BigInt fact(1);
    for (int i = 2; i <= n; ++i) fact *= BigInt(i);
    check_order_cap(fact, limits);
    if (n == 1) return FiniteGroup::from_generators(1, {}, limits);
    std::vector<int> cyc(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cyc[static_cast<size_t>(i)] = (i + 1) % n;
    std::vector<int> swp(static_cast<size_t>(n));
    std::iota(swp.begin(), swp.end(), 0);
    std::swap(swp[0], swp[1]);
    return FiniteGroup::from_generators(
        n, {Permutation(std::move(swp)), Permutation(std::move(cyc))}, limits);
}

GroupPtr dihedral_group(int n, const Limits& limits) {
    if (n < 3) fail("InvalidAction", "dihedral(n) needs n >= 3 for a faithful n-point action");
    check_order_cap(BigInt(2ll * n), limits);
    std::vector<int> rot(static_cast<size_t>(n)), refl(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        rot[static_cast<size_t>(i)] = (i + 1) % n;
        refl[static_cast<size_t>(i)] = (n - i) % n;
    }
    return FiniteGroup::from_generators(
        n, {Permutation(std::move(rot)), Permutation(std::move(refl))}, limits);
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits) {
    check_order_cap(BigInt(a.order()) * BigInt(b.order()), limits);
    const int da = a.degree(), db = b.degree();
    std::vector<Permutation> gens;
    for (int g : a.generator_indices()) {
        std::vector<int> im(static_cast<size_t>(da + db));
        for (int i = 0; i < da; ++i) im[static_cast<size_t>(i)] = a.element(g)[i];
        for (int i = 0; i < db; ++i) im[static_cast<size_t>(da + i)] = da + i;
        gens.emplace_back(std::move(im));
    }
    for (int g : b.generator_indices()) {
        std::vector<int> im(static_cast<size_t>(da + db));
        std::iota(im.begin(), im.begin() + da, 0);
        for (int i = 0; i < db; ++i) im[static_cast<size_t>(da + i)] = da + b.element(g)[i];
        gens.emplace_back(std::move(im));
    }
    return FiniteGroup::from_generators(da + db, std::move(gens), limits);
}

std::vector<int> power_automorphism(const FiniteGroup& kernel, long long exponent) {
    std::vector<int> table(static_cast<size_t>(kernel.order()));
    for (int x = 0; x < kernel.order(); ++x) {
        int acc = 0;
        long long e = ((exponent % kernel.order()) + kernel.order()) % kernel.order();
        for (long long k = 0; k < e; ++k) acc = kernel.mul(acc, x);
        table[static_cast<size_t>(x)] = acc;
    }
    if (!is_automorphism(kernel, table))
        fail("InvalidAction", "x -> x^" + std::to_string(exponent) +
                                  " is not an automorphism of the kernel");
    return table;
}

GroupPtr semidirect_product(const GroupPtr& kernel, const GroupPtr& acting,
                            const std::vector<std::vector<int>>& action, const Limits& limits) {
    const auto& agens = acting->generator_indices();
    if (action.size() != agens.size())
        fail("InvalidAction", "need one automorphism per generator of the acting group");
    for (const auto& t : action)
        if (!is_automorphism(*kernel, t))
            fail("InvalidAction", "action table is not an automorphism of the kernel");

    // Extend the generator assignment to every element of the acting group,
    // checking consistency along the way.
    std::vector<std::vector<int>> phi(static_cast<size_t>(acting->order()));
    std::vector<char> known(static_cast<size_t>(acting->order()), 0);
    phi[0].resize(static_cast<size_t>(kernel->order()));
    std::iota(phi[0].begin(), phi[0].end(), 0);
    known[0] = 1;
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        int a = todo.front();
        todo.pop();
        for (size_t gi = 0; gi < agens.size(); ++gi) {
            int next = acting->mul(agens[gi], a);
            std::vector<int> t = compose_tables(action[gi], phi[static_cast<size_t>(a)]);
            if (!known[static_cast<size_t>(next)]) {
                phi[static_cast<size_t>(next)] = std::move(t);
                known[static_cast<size_t>(next)] = 1;
                todo.push(next);
            } else if (phi[static_cast<size_t>(next)] != t) {
                fail("InvalidAction",
                     "generator automorphisms do not extend to a homomorphism of the acting group");
            }
        }
    }

    check_order_cap(BigInt(kernel->order()) * BigInt(acting->order()), limits);

    // Left multiplication on K x A: (k1,a1)(k2,a2) = (k1 * phi_{a1}(k2), a1*a2).
    const int ka = acting->order();
    const int points = kernel->order() * ka;
    auto point = [&](int k, int a) { return k * ka + a; };
    std::vector<Permutation> gens;
    for (int kg : kernel->generator_indices()) {
        std::vector<int> im(static_cast<size_t>(points));
        for (int k = 0; k < kernel->order(); ++k)
            for (int a = 0; a < ka; ++a)
                im[static_cast<size_t>(point(k, a))] = point(kernel->mul(kg, k), a);
        gens.emplace_back(std::move(im));
    }
    for (int ag : acting->generator_indices()) {
        std::vector<int> im(static_cast<size_t>(points));
        for (int k = 0; k < kernel->order(); ++k)
            for (int a = 0; a < ka; ++a)
                im[static_cast<size_t>(point(k, a))] =
                    point(phi[static_cast<size_t>(ag)][static_cast<size_t>(k)], acting->mul(ag, a));
        gens.emplace_back(std::move(im));
    }
    auto G = FiniteGroup::from_generators(points, std::move(gens), limits);
    if (G->order() != kernel->order() * acting->order())
        fail("InvalidAction", "semidirect realization has unexpected order");
    return G;
}

GroupPtr wreath_product(const GroupPtr& base, const GroupPtr& top, const Limits& limits) {
    const int m = top->degree();
    BigInt order = BigInt::power(BigInt(base->order()), static_cast<unsigned long long>(m)) *
                   BigInt(top->order());
    check_order_cap(order, limits);

    const int db = base->degree();
    const int points = db * m;
    auto point = [&](int i, int block) { return block * db + i; };
    std::vector<Permutation> gens;
    for (int block = 0; block < m; ++block) {
        for (int bg : base->generator_indices()) {
            std::vector<int> im(static_cast<size_t>(points));
            std::iota(im.begin(), im.end(), 0);
            for (int i = 0; i < db; ++i)
                im[static_cast<size_t>(point(i, block))] = point(base->element(bg)[i], block);
            gens.emplace_back(std::move(im));
        }
    }
    for (int tg : top->generator_indices()) {
        std::vector<int> im(static_cast<size_t>(points));
        for (int block = 0; block < m; ++block)
            for (int i = 0; i < db; ++i)
                im[static_cast<size_t>(point(i, block))] = point(i, top->element(tg)[block]);
        gens.emplace_back(std::move(im));
    }
    auto G = FiniteGroup::from_generators(points, std::move(gens), limits);
    if (BigInt(G->order()) != order) fail("InvalidAction", "wreath realization has unexpected order");
    return G;
}

GroupPtr build_group(const GroupSpec& spec, const Limits& limits) {
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic:
            return cyclic_group(spec.n, limits);
        case GroupSpec::Kind::Symmetric:
            return symmetric_group(spec.n, limits);
        case GroupSpec::Kind::Dihedral:
            return dihedral_group(spec.n, limits);
        case GroupSpec::Kind::DirectProduct: {
            auto a = build_group(spec.args.at(0), limits);
            auto b = build_group(spec.args.at(1), limits);
            return direct_product(*a, *b, limits);
        }
        case GroupSpec::Kind::Semidirect: {
            auto k = build_group(spec.args.at(0), limits);
            auto a = build_group(spec.args.at(1), limits);
            std::vector<std::vector<int>> action = spec.action_tables;
            if (spec.action_power) {
                action.clear();
                for (size_t i = 0; i < a->generator_indices().size(); ++i)
                    action.push_back(power_automorphism(*k, *spec.action_power));
            }
            return semidirect_product(k, a, action, limits);
        }
        case GroupSpec::Kind::Wreath: {
            auto b = build_group(spec.args.at(0), limits);
            auto t = build_group(spec.args.at(1), limits);
            return wreath_product(b, t, limits);
        }
        case GroupSpec::Kind::Explicit: {
            std::vector<Permutation> gens;
            for (const auto& im : spec.generators) gens.emplace_back(im);
            return FiniteGroup::from_generators(spec.degree, std::move(gens), limits);
        }
    }
    fail("ParseError", "unknown construction kind");
}

}  // namespace galmeas
