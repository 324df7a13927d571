#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galmeasure/group.hpp"

namespace galmeas {

// Recursive descriptor for a named group construction; mirrors the scenario
// file format. `Explicit` carries raw generator image lists.
struct GroupSpec {
    enum class Kind { Cyclic, Symmetric, Dihedral, DirectProduct, Semidirect, Wreath, Explicit };

    Kind kind = Kind::Cyclic;
    int n = 0;                      // cyclic / symmetric / dihedral parameter
    std::vector<GroupSpec> args;    // operands for the binary constructions

    // Semidirect action: either "the canonical generator of the acting group
    // acts by x -> x^k" (abelian kernels), or one explicit automorphism table
    // per generator of the acting group.
    std::optional<long long> action_power;
    std::vector<std::vector<int>> action_tables;

    int degree = 0;                           // Explicit
    std::vector<std::vector<int>> generators; // Explicit
};

GroupPtr cyclic_group(int n, const Limits& limits = {});
GroupPtr symmetric_group(int n, const Limits& limits = {});
GroupPtr dihedral_group(int n, const Limits& limits = {});
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits = {});

// Semidirect product K ⋊ A realized by left multiplication on K x A.
// `action` maps each generator of A to an automorphism of K given as a table
// over K's element indices. Throws InvalidAction when a table is not an
// automorphism or the assignment does not extend to a homomorphism A -> Aut(K).
GroupPtr semidirect_product(const GroupPtr& kernel, const GroupPtr& acting,
                            const std::vector<std::vector<int>>& action,
                            const Limits& limits = {});

// x -> x^e as an automorphism table; throws InvalidAction when it is not one.
std::vector<int> power_automorphism(const FiniteGroup& kernel, long long exponent);

// Imprimitive wreath product: |top-domain| copies of the base domain, top
// permuting the blocks. Order = |base|^(top degree) * |top|.
GroupPtr wreath_product(const GroupPtr& base, const GroupPtr& top, const Limits& limits = {});

GroupPtr build_group(const GroupSpec& spec, const Limits& limits = {});

}  // namespace galmeas
