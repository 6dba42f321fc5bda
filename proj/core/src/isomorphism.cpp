#include "pgv/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "pgv/algebra.hpp"
#include "pgv/fingerprint.hpp"

namespace pgv {

namespace {

using Signature = std::tuple<int, int, int>;  // order, class size, order of x^p

std::vector<Signature> element_signatures(const GroupTable& g) {
  const int n = g.order();
  std::vector<int> class_size(static_cast<size_t>(n), 0);
  ElementSet seen(n);
  for (int x = 0; x < n; ++x) {
    if (seen.test(x)) continue;
    ElementSet orbit(n);
    for (int y = 0; y < n; ++y) orbit.set(g.conjugate(x, y));
    int sz = orbit.count();
    for (int m : orbit) class_size[static_cast<size_t>(m)] = sz;
    seen |= orbit;
  }
  std::vector<Signature> sig(static_cast<size_t>(n));
  const int p = g.prime() ? g.prime() : 2;
  for (int x = 0; x < n; ++x)
    sig[static_cast<size_t>(x)] = {g.element_order(x), class_size[static_cast<size_t>(x)],
                                   g.element_order(g.power(x, p))};
  return sig;
}

// Minimal generating set via the Burnside basis theorem: greedily extend the
// span of Phi(G).
std::vector<int> minimal_generating_set(const GroupTable& g) {
  if (g.order() == 1) return {};
  Subgroup span = g.is_p_group() ? frattini(g) : trivial_subgroup(g);
  std::vector<int> gens;
  for (int x = 0; x < g.order() && span.order() < g.order(); ++x) {
    if (span.members.test(x)) continue;
    gens.push_back(x);
    span = join(span, x);
  }
  return gens;
}

struct Search {
  const GroupTable& g;
  const GroupTable& h;
  std::vector<int> gens;
  // Per level k: BFS order of <g_0..g_k> and the (previous element, generator)
  // edge producing each non-identity element.
  std::vector<std::vector<int>> level_elements;
  std::vector<std::vector<std::pair<int, int>>> level_edge;
  std::vector<Signature> sig_h;
  std::vector<Signature> gen_sig;
  std::vector<int> phi;  // g-element -> h-element, -1 unset

  bool found = false;
  std::vector<int> result;

  explicit Search(const GroupTable& g_, const GroupTable& h_)
      : g(g_), h(h_), phi(static_cast<size_t>(g_.order()), -1) {
    gens = minimal_generating_set(g);
    sig_h = element_signatures(h);
    auto sig_g = element_signatures(g);
    for (int x : gens) gen_sig.push_back(sig_g[static_cast<size_t>(x)]);

    level_elements.resize(gens.size());
    level_edge.resize(gens.size());
    ElementSet in(g.order());
    in.set(g.identity());
    std::vector<int> order{g.identity()};
    std::vector<std::pair<int, int>> edge{{-1, -1}};
    for (size_t k = 0; k < gens.size(); ++k) {
      for (size_t head = 0; head < order.size(); ++head) {
        for (size_t i = 0; i <= k; ++i) {
          int v = g.mul(order[head], gens[i]);
          if (!in.test(v)) {
            in.set(v);
            order.push_back(v);
            edge.push_back({static_cast<int>(head), static_cast<int>(i)});
          }
        }
      }
      level_elements[k] = order;
      level_edge[k] = edge;
    }
  }

  // Tries image candidates for generator k given consistent images for 0..k-1.
  void descend(size_t k, std::vector<int>& images) {
    if (found) return;
    if (k == gens.size()) {
      finish(images);
      return;
    }
    for (int cand = 0; cand < h.order(); ++cand) {
      if (sig_h[static_cast<size_t>(cand)] != gen_sig[k]) continue;
      images.push_back(cand);
      if (consistent(k, images)) descend(k + 1, images);
      images.pop_back();
      if (found) return;
    }
  }

  // Maps <g_0..g_k> along the BFS edges and checks every product edge.
  bool consistent(size_t k, const std::vector<int>& images) {
    const auto& order = level_elements[k];
    const auto& edge = level_edge[k];
    std::vector<int> map(order.size());
    ElementSet used(h.order());
    map[0] = h.identity();
    used.set(h.identity());
    for (size_t idx = 1; idx < order.size(); ++idx) {
      auto [prev, gi] = edge[idx];
      int im = h.mul(map[static_cast<size_t>(prev)], images[static_cast<size_t>(gi)]);
      if (used.test(im)) return false;  // not injective
      used.set(im);
      map[idx] = im;
    }
    // Positions of mapped elements for O(1) lookup.
    for (size_t idx = 0; idx < order.size(); ++idx)
      phi[static_cast<size_t>(order[idx])] = map[idx];
    bool ok = true;
    for (size_t idx = 0; idx < order.size() && ok; ++idx)
      for (size_t i = 0; i <= k && ok; ++i) {
        int v = g.mul(order[idx], gens[i]);
        if (phi[static_cast<size_t>(v)] !=
            h.mul(map[idx], images[i]))
          ok = false;
      }
    for (size_t idx = 0; idx < order.size(); ++idx)
      phi[static_cast<size_t>(order[idx])] = -1;
    return ok;
  }

  void finish(const std::vector<int>& images) {
    const auto& order = level_elements.back();
    const auto& edge = level_edge.back();
    if (static_cast<int>(order.size()) != g.order()) return;  // gens do not span
    std::vector<int> map(static_cast<size_t>(g.order()), -1);
    std::vector<int> pos(static_cast<size_t>(g.order()), -1);
    map[static_cast<size_t>(g.identity())] = h.identity();
    for (size_t idx = 1; idx < order.size(); ++idx) {
      auto [prev, gi] = edge[idx];
      map[static_cast<size_t>(order[idx])] =
          h.mul(map[static_cast<size_t>(order[static_cast<size_t>(prev)])],
                images[static_cast<size_t>(gi)]);
    }
    // Full verification: bijective homomorphism.
    ElementSet image(h.order());
    for (int x = 0; x < g.order(); ++x) {
      if (map[static_cast<size_t>(x)] < 0 || image.test(map[static_cast<size_t>(x)])) return;
      image.set(map[static_cast<size_t>(x)]);
    }
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y)
        if (map[static_cast<size_t>(g.mul(x, y))] !=
            h.mul(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]))
          return;
    found = true;
    result = std::move(map);
  }
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const GroupTable& g, const GroupTable& h) {
  if (g.order() != h.order())
    throw Error("are_isomorphic: order mismatch (" + std::to_string(g.order()) + " vs " +
                std::to_string(h.order()) + ")");
  const int n = g.order();
  if (g.same_table(h)) {
    std::vector<int> identity(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) identity[static_cast<size_t>(i)] = i;
    return identity;
  }
  if (n == 1) return std::vector<int>{0};
  if (!(fingerprint(g) == fingerprint(h))) return std::nullopt;

  Search search(g, h);
  std::vector<int> images;
  search.descend(0, images);
  if (search.found) return search.result;
  return std::nullopt;
}

}  // namespace pgv
