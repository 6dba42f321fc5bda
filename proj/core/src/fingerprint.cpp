#include "pgv/fingerprint.hpp"

#include <map>

#include "pgv/algebra.hpp"

namespace pgv {

std::vector<int> abelian_invariants(const GroupTable& a) {
  if (!is_abelian(a)) throw Error("abelian_invariants: group is not abelian");
  if (a.order() == 1) return {};
  const int p = a.prime();
  if (p == 0) throw Error("abelian_invariants: group is not a p-group");

  // m_k = log_p |agemo_k(A)|; the number of cyclic factors of order >= p^{k+1}
  // is m_k - m_{k+1}.
  std::vector<int> logs;
  Subgroup u = whole_group(a);
  while (true) {
    int lg = 0;
    for (int o = u.order(); o > 1; o /= p) ++lg;
    logs.push_back(lg);
    if (u.order() == 1) break;
    u = agemo1(u);
  }

  std::vector<int> factors;
  for (size_t k = 0; k + 1 < logs.size(); ++k) {
    int parts_ge = logs[k] - logs[k + 1];  // parts of size >= k+1 minus those >= k+2
    // parts of exact size k+1:
    int next = (k + 2 < logs.size()) ? logs[k + 1] - logs[k + 2] : 0;
    int exact = parts_ge - next;
    long long val = 1;
    for (size_t i = 0; i <= k; ++i) val *= p;
    for (int c = 0; c < exact; ++c) factors.push_back(static_cast<int>(val));
  }
  std::sort(factors.rbegin(), factors.rend());
  return factors;
}

Fingerprint fingerprint(const GroupTable& g) {
  Fingerprint f;
  f.order = g.order();
  f.exponent = exponent(g);
  f.center_order = center(g).order();
  Subgroup d = derived_subgroup(g);
  f.derived_order = d.order();
  f.nilpotency_class = nilpotency_class(g);

  GroupTable ab = quotient(g, d);
  f.abelianization = abelian_invariants(ab);

  std::map<int, int> order_hist;
  for (int x = 0; x < g.order(); ++x) ++order_hist[g.element_order(x)];
  f.element_order_histogram.assign(order_hist.begin(), order_hist.end());

  std::map<int, int> class_hist;
  ElementSet seen(g.order());
  for (int x = 0; x < g.order(); ++x) {
    if (seen.test(x)) continue;
    ElementSet orbit(g.order());
    for (int y = 0; y < g.order(); ++y) orbit.set(g.conjugate(x, y));
    seen |= orbit;
    ++class_hist[orbit.count()];
  }
  f.class_size_histogram.assign(class_hist.begin(), class_hist.end());
  return f;
}

std::string Fingerprint::to_string() const {
  std::string s = "order=" + std::to_string(order) +
                  " exp=" + std::to_string(exponent) +
                  " |Z|=" + std::to_string(center_order) +
                  " |G'|=" + std::to_string(derived_order) +
                  " class=" + std::to_string(nilpotency_class) + " ab=[";
  for (size_t i = 0; i < abelianization.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(abelianization[i]);
  }
  s += "] orders={";
  for (size_t i = 0; i < element_order_histogram.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(element_order_histogram[i].first) + ":" +
         std::to_string(element_order_histogram[i].second);
  }
  s += "} classes={";
  for (size_t i = 0; i < class_size_histogram.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(class_size_histogram[i].first) + ":" +
         std::to_string(class_size_histogram[i].second);
  }
  s += "}";
  return s;
}

}  // namespace pgv
