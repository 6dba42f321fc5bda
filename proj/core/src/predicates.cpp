#include "pgv/predicates.hpp"

namespace pgv {

IsolationResult is_isolated(const Subgroup& h, const Subgroup& ambient) {
  if (h.parent != ambient.parent)
    throw Error("is_isolated: subgroup and ambient have different parents");
  if (!ambient.members.contains(h.members))
    throw Error("is_isolated: H is not contained in the ambient subgroup");
  const GroupTable& g = *h.parent;
  for (int x : ambient.members) {
    if (h.members.test(x)) continue;
    ElementSet meet = g.cyclic_subgroup(x) & h.members;
    if (meet.count() > 1) return {false, x};
  }
  return {true, std::nullopt};
}

IsolationResult is_isolated(const Subgroup& h, const GroupTable& g) {
  return is_isolated(h, whole_group(g));
}

bool is_minimal_nonabelian(const Subgroup& h) {
  if (is_abelian(h)) return false;
  for (const Subgroup& m : maximal_subgroups(h))
    if (!is_abelian(m)) return false;
  return true;
}

std::vector<Subgroup> minimal_nonabelian_subgroups(const GroupTable& g, int order_bound) {
  std::vector<Subgroup> out;
  for (const Subgroup& h : all_subgroups(g, order_bound))
    if (is_minimal_nonabelian(h)) out.push_back(h);
  return out;
}

bool is_S_p3(const Subgroup& h) {
  const GroupTable& g = *h.parent;
  if (!g.is_p_group()) throw Error("is_S_p3: parent is not a p-group");
  const int p = g.prime();
  if (p == 2) return false;
  return h.order() == p * p * p && exponent(h) == p && !is_abelian(h);
}

bool is_S_p3(const GroupTable& g) { return is_S_p3(whole_group(g)); }

Subgroup hughes_subgroup(const GroupTable& g) {
  if (!g.is_p_group()) throw Error("hughes_subgroup: group is not a p-group");
  const int p = g.prime();
  ElementSet gens(g.order());
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) > p) gens.set(x);
  return closure(g, gens);
}

MnaReport mna_report(const GroupTable& g, int order_bound) {
  MnaReport rep;
  for (Subgroup& s : minimal_nonabelian_subgroups(g, order_bound)) {
    MnaEntry e;
    e.s_p3 = is_S_p3(s);
    e.normalizer = normalizer(g, s);
    IsolationResult in_norm = is_isolated(s, e.normalizer);
    e.isolated_in_normalizer = in_norm.isolated;
    e.witness_in_normalizer = in_norm.witness;
    IsolationResult in_g = is_isolated(s, g);
    e.isolated_in_group = in_g.isolated;
    e.witness_in_group = in_g.witness;
    e.subgroup = std::move(s);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace pgv
