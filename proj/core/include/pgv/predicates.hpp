#pragma once

#include <optional>
#include <vector>

#include "pgv/algebra.hpp"

namespace pgv {

struct IsolationResult {
  bool isolated = false;
  /// Least violating x (x not in H, <x> meets H nontrivially) when not
  /// isolated.
  std::optional<int> witness;
};

/// H is isolated in the ambient group when every ambient element x satisfies
/// x in H or <x> ∩ H = 1.
IsolationResult is_isolated(const Subgroup& h, const Subgroup& ambient);
IsolationResult is_isolated(const Subgroup& h, const GroupTable& g);

/// Nonabelian with every maximal subgroup abelian.
bool is_minimal_nonabelian(const Subgroup& h);

/// All subgroups passing is_minimal_nonabelian, in the deterministic
/// subgroup order.
std::vector<Subgroup> minimal_nonabelian_subgroups(const GroupTable& g,
                                                   int order_bound = 0);

/// Recognizes S(p^3), the nonabelian group of order p^3 and exponent p:
/// |H| = p^3, exp(H) = p, H nonabelian. Characterizes S(p^3) for odd p;
/// always false for p = 2 (no such group exists).
bool is_S_p3(const Subgroup& h);
bool is_S_p3(const GroupTable& g);

/// Hughes subgroup H_p(G) = <x : o(x) != p>, the identity contributing
/// nothing; trivial when exp(G) = p.
Subgroup hughes_subgroup(const GroupTable& g);

struct MnaEntry {
  Subgroup subgroup;
  bool s_p3 = false;
  Subgroup normalizer;
  bool isolated_in_normalizer = false;
  std::optional<int> witness_in_normalizer;
  bool isolated_in_group = false;
  std::optional<int> witness_in_group;
};

struct MnaReport {
  std::vector<MnaEntry> entries;
};

/// One entry per minimal nonabelian subgroup of G.
MnaReport mna_report(const GroupTable& g, int order_bound = 0);

}  // namespace pgv
