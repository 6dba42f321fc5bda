#include "pgv/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace pgv {

namespace {

void require_parent(const GroupTable& g, const Subgroup& h, const char* what) {
  if (h.parent != &g)
    throw Error(std::string(what) + ": subgroup belongs to a different parent group");
}

int require_prime(const GroupTable& g, const char* what) {
  if (!g.is_p_group())
    throw Error(std::string(what) + ": group '" + g.id() + "' is not a p-group");
  return g.prime();
}

int log_base(int p, int n) {
  int k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

// BFS closure: everything in `initial` plus all right-products by `gens`.
// `initial` must contain the identity.
ElementSet closure_seeded(const GroupTable& g, ElementSet initial,
                          const std::vector<int>& gens) {
  std::vector<int> queue = initial.to_indices();
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int x : gens) {
      int v = g.mul(u, x);
      if (!initial.test(v)) {
        initial.set(v);
        queue.push_back(v);
      }
    }
  }
  return initial;
}

}  // namespace

Subgroup trivial_subgroup(const GroupTable& g) {
  return {&g, ElementSet::singleton(g.order(), g.identity())};
}

Subgroup whole_group(const GroupTable& g) {
  return {&g, ElementSet(g.order(), true)};
}

Subgroup subgroup_from_members(const GroupTable& g, ElementSet members) {
  if (members.universe() != g.order() || !members.test(g.identity()))
    throw Error("subgroup_from_members: set does not contain the identity");
  for (int a : members)
    for (int b : members)
      if (!members.test(g.mul(a, b)))
        throw Error("subgroup_from_members: set is not closed under multiplication");
  return {&g, std::move(members)};
}

int element_order(const GroupTable& g, int x) { return g.element_order(x); }

Subgroup closure(const GroupTable& g, const std::vector<int>& gens) {
  ElementSet initial = ElementSet::singleton(g.order(), g.identity());
  for (int x : gens) {
    g.check_index(x);
    initial.set(x);
  }
  return {&g, closure_seeded(g, std::move(initial), gens)};
}

Subgroup closure(const GroupTable& g, const ElementSet& seed) {
  ElementSet initial = seed;
  initial.set(g.identity());
  return {&g, closure_seeded(g, std::move(initial), seed.to_indices())};
}

Subgroup join(const Subgroup& h, int x) {
  const GroupTable& g = *h.parent;
  g.check_index(x);
  ElementSet initial = h.members;
  initial.set(g.identity());
  std::vector<int> gens = h.members.to_indices();
  gens.push_back(x);
  initial.set(x);
  return {&g, closure_seeded(g, std::move(initial), gens)};
}

Subgroup center(const GroupTable& g) { return center(whole_group(g)); }

Subgroup center(const Subgroup& h) {
  const GroupTable& g = *h.parent;
  std::vector<int> members = h.members.to_indices();
  ElementSet z(g.order());
  for (int x : members) {
    bool central = true;
    for (int y : members)
      if (g.mul(x, y) != g.mul(y, x)) {
        central = false;
        break;
      }
    if (central) z.set(x);
  }
  return {&g, std::move(z)};
}

Subgroup centralizer(const GroupTable& g, const Subgroup& inside, int h) {
  require_parent(g, inside, "centralizer");
  g.check_index(h);
  ElementSet c(g.order());
  for (int x : inside.members)
    if (g.mul(x, h) == g.mul(h, x)) c.set(x);
  return {&g, std::move(c)};
}

Subgroup normalizer(const GroupTable& g, const Subgroup& h) {
  require_parent(g, h, "normalizer");
  ElementSet n(g.order());
  for (int x = 0; x < g.order(); ++x) {
    bool normalizes = true;
    for (int m : h.members)
      if (!h.members.test(g.conjugate(m, x))) {
        normalizes = false;
        break;
      }
    if (normalizes) n.set(x);
  }
  return {&g, std::move(n)};
}

bool is_normal(const GroupTable& g, const Subgroup& h) {
  require_parent(g, h, "is_normal");
  for (int x = 0; x < g.order(); ++x)
    for (int m : h.members)
      if (!h.members.test(g.conjugate(m, x))) return false;
  return true;
}

Subgroup derived_subgroup(const Subgroup& h) {
  const GroupTable& g = *h.parent;
  std::vector<int> members = h.members.to_indices();
  ElementSet comms(g.order());
  for (int x : members)
    for (int y : members) comms.set(g.commutator(x, y));
  return closure(g, comms);
}

Subgroup derived_subgroup(const GroupTable& g) {
  return derived_subgroup(whole_group(g));
}

Subgroup agemo1(const Subgroup& h) {
  const GroupTable& g = *h.parent;
  int p = require_prime(g, "agemo1");
  ElementSet powers(g.order());
  for (int x : h.members) powers.set(g.power(x, p));
  return closure(g, powers);
}

Subgroup agemo1(const GroupTable& g) { return agemo1(whole_group(g)); }

namespace {

// Phi(H) = H' * agemo1(H); the formula route, used internally by the
// hyperplane enumeration of maximal subgroups.
Subgroup frattini_formula(const Subgroup& h) {
  Subgroup d = derived_subgroup(h);
  Subgroup u = agemo1(h);
  return closure(*h.parent, d.members | u.members);
}

}  // namespace

std::vector<Subgroup> maximal_subgroups(const Subgroup& h) {
  const GroupTable& g = *h.parent;
  int p = require_prime(g, "maximal_subgroups");
  Subgroup phi = frattini_formula(h);

  // Coset labels over Phi; reps are the minimal indices, found ascending.
  std::vector<int> rep_of(static_cast<size_t>(g.order()), -1);
  std::vector<int> reps;
  std::vector<int> phi_members = phi.members.to_indices();
  for (int x : h.members) {
    if (rep_of[static_cast<size_t>(x)] >= 0) continue;
    reps.push_back(x);
    for (int f : phi_members) rep_of[static_cast<size_t>(g.mul(x, f))] = x;
  }
  const int d = log_base(p, static_cast<int>(reps.size()));
  if (d == 0) return {};

  // Pick a basis of the elementary abelian quotient H/Phi.
  std::vector<int> basis;
  Subgroup span = phi;
  for (int r : reps) {
    if (span.members.test(r)) continue;
    basis.push_back(r);
    span = join(span, r);
    if (static_cast<int>(basis.size()) == d) break;
  }

  // Coordinates of each coset with respect to the basis.
  std::unordered_map<int, std::vector<int>> coords;
  coords[rep_of[static_cast<size_t>(g.identity())]] = std::vector<int>(d, 0);
  std::vector<int> queue{rep_of[static_cast<size_t>(g.identity())]};
  for (size_t head = 0; head < queue.size(); ++head) {
    int r = queue[head];
    for (int i = 0; i < d; ++i) {
      int r2 = rep_of[static_cast<size_t>(g.mul(r, basis[static_cast<size_t>(i)]))];
      if (!coords.count(r2)) {
        std::vector<int> c = coords[r];
        c[static_cast<size_t>(i)] = (c[static_cast<size_t>(i)] + 1) % p;
        coords[r2] = std::move(c);
        queue.push_back(r2);
      }
    }
  }

  // One functional per hyperplane: coefficient vectors with leading entry 1.
  std::vector<Subgroup> out;
  std::vector<int> coeff(static_cast<size_t>(d), 0);
  auto emit = [&]() {
    ElementSet m(g.order());
    for (int x : h.members) {
      const std::vector<int>& c = coords[rep_of[static_cast<size_t>(x)]];
      int s = 0;
      for (int i = 0; i < d; ++i) s += coeff[static_cast<size_t>(i)] * c[static_cast<size_t>(i)];
      if (s % p == 0) m.set(x);
    }
    out.push_back({&g, std::move(m)});
  };
  for (int lead = 0; lead < d; ++lead) {
    std::fill(coeff.begin(), coeff.end(), 0);
    coeff[static_cast<size_t>(lead)] = 1;
    // Enumerate all tails over the positions after `lead`.
    int tail = d - lead - 1;
    int total = 1;
    for (int i = 0; i < tail; ++i) total *= p;
    for (int t = 0; t < total; ++t) {
      int v = t;
      for (int i = lead + 1; i < d; ++i) {
        coeff[static_cast<size_t>(i)] = v % p;
        v /= p;
      }
      emit();
    }
  }
  sort_subgroups(out);
  return out;
}

Subgroup frattini(const Subgroup& h) {
  if (h.order() <= 1) throw Error("frattini: trivial group has no maximal subgroups");
  Subgroup formula = frattini_formula(h);
  ElementSet meet = h.members;
  for (const Subgroup& m : maximal_subgroups(h)) meet &= m.members;
  if (!(meet == formula.members))
    throw Error("internal: frattini maximal-intersection disagrees with G'*agemo1(G)");
  return {h.parent, std::move(meet)};
}

Subgroup frattini(const GroupTable& g) { return frattini(whole_group(g)); }

int exponent(const Subgroup& h) {
  const GroupTable& g = *h.parent;
  long long e = 1;
  for (int x : h.members) e = std::lcm(e, static_cast<long long>(g.element_order(x)));
  return static_cast<int>(e);
}

int exponent(const GroupTable& g) { return exponent(whole_group(g)); }

SeriesReport upper_central_series(const GroupTable& g) {
  SeriesReport rep{SeriesReport::Kind::UpperCentral, {}};
  Subgroup z = trivial_subgroup(g);
  rep.terms.push_back(z);
  while (z.order() < g.order()) {
    ElementSet next(g.order());
    for (int x = 0; x < g.order(); ++x) {
      bool in = true;
      for (int y = 0; y < g.order(); ++y)
        if (!z.members.test(g.commutator(x, y))) {
          in = false;
          break;
        }
      if (in) next.set(x);
    }
    if (next == z.members)
      throw Error("upper_central_series: series stabilized below the whole group "
                  "(non-nilpotent input)");
    z = {&g, std::move(next)};
    rep.terms.push_back(z);
  }
  return rep;
}

SeriesReport lower_central_series(const GroupTable& g) {
  SeriesReport rep{SeriesReport::Kind::LowerCentral, {}};
  Subgroup term = whole_group(g);
  rep.terms.push_back(term);
  while (true) {
    ElementSet comms(g.order());
    for (int a : term.members)
      for (int y = 0; y < g.order(); ++y) comms.set(g.commutator(a, y));
    Subgroup next = closure(g, comms);
    if (next.members == term.members) break;
    term = next;
    rep.terms.push_back(term);
  }
  return rep;
}

int nilpotency_class(const GroupTable& g) {
  return static_cast<int>(upper_central_series(g).terms.size()) - 1;
}

int nilpotency_class(const Subgroup& h) {
  const GroupTable& g = *h.parent;
  int c = 0;
  Subgroup term = h;
  while (term.order() > 1) {
    ElementSet comms(g.order());
    for (int a : term.members)
      for (int y : h.members) comms.set(g.commutator(a, y));
    Subgroup next = closure(g, comms);
    if (next.members == term.members)
      throw Error("nilpotency_class: lower central series of subgroup stabilized "
                  "above the identity (non-nilpotent input)");
    term = next;
    ++c;
  }
  return c;
}

bool is_abelian(const Subgroup& h) {
  const GroupTable& g = *h.parent;
  std::vector<int> members = h.members.to_indices();
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j)
      if (g.mul(members[i], members[j]) != g.mul(members[j], members[i])) return false;
  return true;
}

bool is_abelian(const GroupTable& g) { return is_abelian(whole_group(g)); }

bool is_regular_pgroup(const GroupTable& g) {
  const int p = require_prime(g, "is_regular_pgroup");
  const int n = g.order();

  // <a,b> depends only on the pair of cyclic subgroups, so the defect group
  // agemo1(<a,b>') is memoized by that pair.
  std::vector<int> cyc_id(static_cast<size_t>(n));
  std::unordered_map<ElementSet, int, ElementSetHash> cyc_ids;
  for (int x = 0; x < n; ++x) {
    auto [it, fresh] = cyc_ids.try_emplace(g.cyclic_subgroup(x),
                                           static_cast<int>(cyc_ids.size()));
    cyc_id[static_cast<size_t>(x)] = it->second;
  }
  std::unordered_map<long long, ElementSet> defect_groups;

  std::vector<int> pth(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) pth[static_cast<size_t>(x)] = g.power(x, p);

  auto defect_ok = [&](int a, int b, const ElementSet* u) {
    int lhs = g.power(g.mul(a, b), p);
    int rhs = g.mul(pth[static_cast<size_t>(a)], pth[static_cast<size_t>(b)]);
    int defect = g.mul(g.inverse(rhs), lhs);
    return u ? u->test(defect) : defect == g.identity();
  };

  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      if (g.mul(a, b) == g.mul(b, a)) {
        // <a,b> abelian: the defect group is trivial.
        if (!defect_ok(a, b, nullptr) || !defect_ok(b, a, nullptr)) return false;
        continue;
      }
      long long key = static_cast<long long>(std::min(cyc_id[a], cyc_id[b])) * n * n +
                      std::max(cyc_id[a], cyc_id[b]);
      auto it = defect_groups.find(key);
      if (it == defect_groups.end()) {
        ElementSet initial = g.cyclic_subgroup(a) | g.cyclic_subgroup(b);
        Subgroup k{&g, closure_seeded(g, std::move(initial), {a, b})};
        Subgroup u = agemo1(derived_subgroup(k));
        it = defect_groups.emplace(key, u.members).first;
      }
      if (!defect_ok(a, b, &it->second) || !defect_ok(b, a, &it->second)) return false;
    }
  }
  return true;
}

bool is_maximal_class(const GroupTable& g) {
  const int p = require_prime(g, "is_maximal_class");
  const int k = log_base(p, g.order());
  if (k < 3)
    throw Error("is_maximal_class: defined only for order >= p^3 (got order " +
                std::to_string(g.order()) + ")");
  return nilpotency_class(g) == k - 1;
}

bool is_maximal_class(const Subgroup& h) {
  const int p = require_prime(*h.parent, "is_maximal_class");
  const int k = log_base(p, h.order());
  if (k < 3)
    throw Error("is_maximal_class: defined only for order >= p^3 (got order " +
                std::to_string(h.order()) + ")");
  return nilpotency_class(h) == k - 1;
}

int default_enumeration_bound(const GroupTable& g) {
  if (!g.is_p_group()) return g.order();
  long long b = 1;
  for (int i = 0; i < 5; ++i) b *= g.prime();
  return static_cast<int>(std::min<long long>(b, 1 << 20));
}

std::vector<Subgroup> all_subgroups(const Subgroup& within, int order_bound) {
  const GroupTable& g = *within.parent;
  const int bound = order_bound > 0 ? order_bound : default_enumeration_bound(g);
  if (within.order() > bound)
    throw BoundExceeded("all_subgroups: order " + std::to_string(within.order()) +
                        " exceeds enumeration bound " + std::to_string(bound));

  // Breadth-first closure over joins: every subgroup K arises as <M, x> for a
  // maximal subgroup M of K (strictly smaller), so processing known subgroups
  // in ascending order and joining one new element at a time finds all of
  // them. Joins of H are iterated one element per H-coset.
  struct Node {
    ElementSet set;
    std::vector<int> gens;
  };
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::map<int, std::vector<Node>> layers;

  Node triv{trivial_subgroup(g).members, {}};
  seen.insert(triv.set);
  layers[1].push_back(std::move(triv));

  for (auto it = layers.begin(); it != layers.end(); ++it) {
    // New layers may be inserted ahead while iterating; std::map iterators
    // stay valid.
    for (size_t idx = 0; idx < it->second.size(); ++idx) {
      Node node = it->second[idx];  // copy: the vector may reallocate below
      ElementSet covered = node.set;
      for (int x : within.members) {
        if (covered.test(x)) continue;
        // x is the least element of its coset; mark the whole coset.
        for (int h : node.set) covered.set(g.mul(h, x));

        ElementSet initial = node.set | g.cyclic_subgroup(x);
        std::vector<int> gens = node.gens;
        gens.push_back(x);
        ElementSet closed = closure_seeded(g, std::move(initial), gens);
        if (seen.insert(closed).second) {
          int o = closed.count();
          layers[o].push_back(Node{std::move(closed), std::move(gens)});
        }
      }
    }
  }

  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (auto& [o, nodes] : layers)
    for (Node& nd : nodes) out.push_back({&g, std::move(nd.set)});
  sort_subgroups(out);
  return out;
}

std::vector<Subgroup> all_subgroups(const GroupTable& g, int order_bound) {
  return all_subgroups(whole_group(g), order_bound);
}

GroupTable quotient(const GroupTable& g, const Subgroup& n,
                    std::vector<int>* projection) {
  require_parent(g, n, "quotient");
  if (!is_normal(g, n)) throw Error("quotient: subgroup is not normal in '" + g.id() + "'");

  std::vector<int> coset(static_cast<size_t>(g.order()), -1);
  std::vector<int> reps;
  std::vector<int> nm = n.members.to_indices();
  for (int x = 0; x < g.order(); ++x) {
    if (coset[static_cast<size_t>(x)] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : nm) coset[static_cast<size_t>(g.mul(x, m))] = idx;
  }

  const int q = static_cast<int>(reps.size());
  std::vector<uint16_t> table(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[static_cast<size_t>(i) * q + j] =
          static_cast<uint16_t>(coset[static_cast<size_t>(g.mul(reps[static_cast<size_t>(i)], reps[static_cast<size_t>(j)]))]);

  if (projection) *projection = coset;
  return GroupTable(g.id() + "/" + std::to_string(n.order()), q, std::move(table));
}

GroupTable subgroup_table(const Subgroup& h, std::vector<int>* member_map) {
  const GroupTable& g = *h.parent;
  std::vector<int> members = h.members.to_indices();
  std::vector<int> local(static_cast<size_t>(g.order()), -1);
  for (size_t i = 0; i < members.size(); ++i) local[static_cast<size_t>(members[i])] = static_cast<int>(i);

  const int m = static_cast<int>(members.size());
  std::vector<uint16_t> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int prod = g.mul(members[static_cast<size_t>(i)], members[static_cast<size_t>(j)]);
      int li = local[static_cast<size_t>(prod)];
      if (li < 0) throw Error("subgroup_table: member set is not closed");
      table[static_cast<size_t>(i) * m + j] = static_cast<uint16_t>(li);
    }
  if (member_map) *member_map = members;
  return GroupTable(g.id() + "[" + std::to_string(m) + "]", m, std::move(table));
}

void sort_subgroups(std::vector<Subgroup>& list) {
  std::sort(list.begin(), list.end(), [](const Subgroup& a, const Subgroup& b) {
    int oa = a.order(), ob = b.order();
    if (oa != ob) return oa < ob;
    return a.members.lex_less(b.members);
  });
}

}  // namespace pgv
