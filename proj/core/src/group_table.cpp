#include "pgv/group_table.hpp"

namespace pgv {

namespace {

int prime_of_order(int n) {
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1 ? p : 0;
    }
  }
  return n > 1 ? n : 0;  // n prime, or n == 1 (no prime)
}

int find_identity(int n, const std::vector<uint16_t>& t) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = t[static_cast<size_t>(e) * n + a] == a && t[static_cast<size_t>(a) * n + e] == a;
    if (ok) return e;
  }
  return -1;
}

}  // namespace

std::string AxiomReport::summary() const {
  if (all_ok()) return "ok";
  std::string s;
  if (!order_ok) s += "entries out of range; ";
  if (!identity_ok) s += "no two-sided identity; ";
  if (!inverses_ok) s += "missing inverses; ";
  if (!associativity_ok) {
    s += "associativity fails";
    if (failing_triple) {
      auto [i, j, k] = *failing_triple;
      s += " at (" + std::to_string(i) + "," + std::to_string(j) + "," +
           std::to_string(k) + ")";
    }
    s += "; ";
  }
  if (s.size() >= 2) s.resize(s.size() - 2);
  return s;
}

AxiomReport validate_axioms(int order, const std::vector<uint16_t>& table) {
  AxiomReport r;
  const int n = order;
  if (n < 1 || table.size() != static_cast<size_t>(n) * n) return r;
  for (uint16_t v : table)
    if (v >= n) return r;
  r.order_ok = true;

  int e = find_identity(n, table);
  if (e < 0) return r;
  r.identity_ok = true;

  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b) {
      if (table[static_cast<size_t>(a) * n + b] == e &&
          table[static_cast<size_t>(b) * n + a] == e) {
        found = true;
        break;
      }
    }
    if (!found) return r;
  }
  r.inverses_ok = true;

  // Full scan. Largest supported tables are 729 x 729; the triple loop stays
  // within a few hundred million lookups.
  const uint16_t* t = table.data();
  for (int i = 0; i < n; ++i) {
    const uint16_t* ti = t + static_cast<size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      const int ij = ti[j];
      const uint16_t* tj = t + static_cast<size_t>(j) * n;
      const uint16_t* tij = t + static_cast<size_t>(ij) * n;
      for (int k = 0; k < n; ++k) {
        if (tij[k] != ti[tj[k]]) {
          r.failing_triple = std::array<int, 3>{i, j, k};
          return r;
        }
      }
    }
  }
  r.associativity_ok = true;
  return r;
}

AxiomReport validate_axioms(const GroupTable& g) {
  std::vector<uint16_t> t(static_cast<size_t>(g.order()) * g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      t[static_cast<size_t>(a) * g.order() + b] = static_cast<uint16_t>(g.mul(a, b));
  return validate_axioms(g.order(), t);
}

GroupTable::GroupTable(std::string id, int order, std::vector<uint16_t> table)
    : id_(std::move(id)), n_(order), table_(std::move(table)) {
  if (n_ > 729)
    throw Error("group '" + id_ + "': order " + std::to_string(n_) +
                " exceeds the supported maximum of 729");
  AxiomReport rep = validate_axioms(n_, table_);
  if (!rep.all_ok())
    throw Error("group '" + id_ + "': table is not a group: " + rep.summary());

  prime_ = prime_of_order(n_);
  identity_ = find_identity(n_, table_);

  inverse_.assign(static_cast<size_t>(n_), 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[static_cast<size_t>(a)] = static_cast<uint16_t>(b);
        break;
      }

  orders_.assign(static_cast<size_t>(n_), 0);
  cyclic_.assign(static_cast<size_t>(n_), ElementSet(n_));
  for (int g = 0; g < n_; ++g) {
    ElementSet& cyc = cyclic_[static_cast<size_t>(g)];
    int x = identity_;
    int k = 0;
    do {
      cyc.set(x);
      x = mul(x, g);
      ++k;
    } while (x != identity_);
    orders_[static_cast<size_t>(g)] = k;
  }
}

int GroupTable::power(int g, long long e) const {
  check_index(g);
  const int o = orders_[static_cast<size_t>(g)];
  long long r = e % o;
  if (r < 0) r += o;
  int acc = identity_;
  for (long long i = 0; i < r; ++i) acc = mul(acc, g);
  return acc;
}

}  // namespace pgv
