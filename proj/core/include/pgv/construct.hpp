#pragma once

#include <string>
#include <vector>

#include "pgv/group_table.hpp"
#include "pgv/presentation.hpp"

namespace pgv {

/// Builds the multiplication table of a presented group by collection from
/// the left. Elements are normal-form exponent vectors, ranked with the first
/// generator most significant (identity = rank 0).
///
/// Inconsistent presentations (the presented group is smaller than p^m) are
/// detected after the fact: the collected table fails axiom validation and an
/// Error explaining the shortfall is thrown. A runaway collection hits the
/// per-product step budget instead of looping.
GroupTable build_from_presentation(const Presentation& pres, std::string id = "",
                                   long long step_budget = 1'000'000);

/// Closure of the given permutations of [0, degree) under composition; the
/// product f*g acts as "f then g". Elements are sorted lexicographically
/// (identity first). Throws BoundExceeded past `max_order`.
GroupTable build_from_permutations(int degree,
                                   const std::vector<std::vector<int>>& gens,
                                   std::string id = "", int max_order = 729);

/// B ⋊ <a> with a of order p acting on the abelian group B by the
/// automorphism alpha (given as an element map, alpha = conjugation by a).
/// Element i*|B|+b represents a^i * b.
GroupTable semidirect_product(const GroupTable& base, const std::vector<int>& alpha,
                              int p, std::string id = "");

}  // namespace pgv
