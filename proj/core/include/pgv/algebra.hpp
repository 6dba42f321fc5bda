#pragma once

#include <optional>
#include <vector>

#include "pgv/group_table.hpp"

namespace pgv {

/// A subgroup of one parent table, stored as a member bitset.
///
/// Equality is bitset equality within one parent; comparing subgroups of
/// different parents throws.
struct Subgroup {
  const GroupTable* parent = nullptr;
  ElementSet members;

  int order() const { return members.count(); }
  bool contains(int g) const { return members.test(g); }
  bool contains(const Subgroup& o) const { return members.contains(o.members); }
  bool is_whole_group() const { return parent && order() == parent->order(); }

  bool operator==(const Subgroup& o) const {
    if (parent != o.parent)
      throw Error("comparing subgroups of different parent groups");
    return members == o.members;
  }
};

Subgroup trivial_subgroup(const GroupTable& g);
Subgroup whole_group(const GroupTable& g);

/// Wraps a member set that must already be closed; throws otherwise.
Subgroup subgroup_from_members(const GroupTable& g, ElementSet members);

int element_order(const GroupTable& g, int x);

/// Smallest subgroup containing `gens`; the empty set yields the trivial
/// subgroup.
Subgroup closure(const GroupTable& g, const std::vector<int>& gens);
Subgroup closure(const GroupTable& g, const ElementSet& seed);

/// <H, x>.
Subgroup join(const Subgroup& h, int x);

Subgroup center(const GroupTable& g);
Subgroup center(const Subgroup& h);

/// C_inside(h) = elements of `inside` commuting with h.
Subgroup centralizer(const GroupTable& g, const Subgroup& inside, int h);

/// N_G(H). Always contains H.
Subgroup normalizer(const GroupTable& g, const Subgroup& h);

bool is_normal(const GroupTable& g, const Subgroup& h);

Subgroup derived_subgroup(const Subgroup& h);
Subgroup derived_subgroup(const GroupTable& g);

/// Agemo: <h^p : h in H>, p the parent's prime.
Subgroup agemo1(const Subgroup& h);
Subgroup agemo1(const GroupTable& g);

/// Intersection of all maximal subgroups. For p-groups this is computed as
/// H'*agemo1(H) and cross-checked against the maximal-subgroup intersection.
Subgroup frattini(const Subgroup& h);
Subgroup frattini(const GroupTable& g);

int exponent(const Subgroup& h);
int exponent(const GroupTable& g);

struct SeriesReport {
  enum class Kind { UpperCentral, LowerCentral };
  Kind kind;
  std::vector<Subgroup> terms;
};

/// Z_0 = 1 < Z_1 = Z(G) < ... < Z_c = G. Throws when the series stabilizes
/// before reaching G (a non-nilpotent input; impossible for valid p-groups).
SeriesReport upper_central_series(const GroupTable& g);

/// G = gamma_1 >= gamma_2 = G' >= ... down to the stable term.
SeriesReport lower_central_series(const GroupTable& g);

int nilpotency_class(const GroupTable& g);
int nilpotency_class(const Subgroup& h);

bool is_abelian(const Subgroup& h);
bool is_abelian(const GroupTable& g);

/// Regularity by the definition: for all a, b, (ab)^p lies in
/// a^p b^p * agemo1(<a,b>'). Requires a p-group.
bool is_regular_pgroup(const GroupTable& g);

/// Order p^n with class n-1. Defined only for n >= 3; smaller orders throw.
bool is_maximal_class(const GroupTable& g);
bool is_maximal_class(const Subgroup& h);

/// Every subgroup exactly once, sorted by (order, member-set order).
/// `order_bound` caps the parent order (0 = default p^5); exceeding it throws
/// BoundExceeded.
std::vector<Subgroup> all_subgroups(const GroupTable& g, int order_bound = 0);
std::vector<Subgroup> all_subgroups(const Subgroup& within, int order_bound = 0);

/// Index-p subgroups of a p-subgroup, via the hyperplanes of H/Phi(H).
std::vector<Subgroup> maximal_subgroups(const Subgroup& h);

/// Coset table G/N; `projection`, when given, receives the element -> coset
/// index map. Throws when N is not normal.
GroupTable quotient(const GroupTable& g, const Subgroup& n,
                    std::vector<int>* projection = nullptr);

/// Materializes a subgroup as a standalone validated table (elements renumbered
/// in ascending parent index), together with the member list mapping new
/// indices back to parent indices.
GroupTable subgroup_table(const Subgroup& h, std::vector<int>* member_map = nullptr);

/// Deterministic order used everywhere subgroup lists are exposed.
void sort_subgroups(std::vector<Subgroup>& list);

int default_enumeration_bound(const GroupTable& g);

}  // namespace pgv
