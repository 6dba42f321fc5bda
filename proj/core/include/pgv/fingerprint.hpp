#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pgv/group_table.hpp"

namespace pgv {

/// Isomorphism-invariant summary of a p-group. Equal fingerprints are a
/// necessary (not sufficient) condition for isomorphism.
struct Fingerprint {
  int order = 0;
  int exponent = 0;
  int center_order = 0;
  int derived_order = 0;
  int nilpotency_class = 0;
  /// Cyclic factor orders of G/G', largest first (empty for the trivial
  /// abelianization).
  std::vector<int> abelianization;
  /// (element order, count), ascending by order.
  std::vector<std::pair<int, int>> element_order_histogram;
  /// (conjugacy class size, count), ascending by size.
  std::vector<std::pair<int, int>> class_size_histogram;

  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const GroupTable& g);

/// Cyclic factor orders of an abelian p-group, largest first.
std::vector<int> abelian_invariants(const GroupTable& abelian_group);

}  // namespace pgv
