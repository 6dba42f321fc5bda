#pragma once

#include <optional>
#include <vector>

#include "pgv/group_table.hpp"

namespace pgv {

/// Searches for an isomorphism G -> H (element map, by index). Returns
/// nullopt only after the backtracking over generator images is exhausted;
/// a returned map has been verified to be a bijective homomorphism.
///
/// Images of a minimal generating set of G are tried among H elements with
/// matching invariants (order, class size, power order), pruned by partial
/// closure consistency. Throws on order mismatch.
std::optional<std::vector<int>> are_isomorphic(const GroupTable& g, const GroupTable& h);

}  // namespace pgv
