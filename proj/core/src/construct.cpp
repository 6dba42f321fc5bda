#include "pgv/construct.hpp"

#include <algorithm>
#include <map>

#include "pgv/algebra.hpp"

namespace pgv {

namespace {

// Letters are single generator indices; a word is their left-to-right product.
using Word = std::vector<uint8_t>;

void append_vector_letters(Word& w, const std::vector<int>& exps) {
  for (size_t i = 0; i < exps.size(); ++i)
    for (int k = 0; k < exps[i]; ++k) w.push_back(static_cast<uint8_t>(i));
}

// Collection from the left: repeatedly rewrite the leftmost reducible pattern
// (scanning left to right) until the word is a normal form.
//   g_j g_i -> g_i (g_j^{g_i})   for j > i
//   g_i^p   -> power_rhs(i)
std::vector<int> collect(const Presentation& pres, Word w, long long budget) {
  const int p = pres.prime;
  const int m = pres.num_generators();
  long long steps = 0;

  while (true) {
    int rewrite_at = -1;
    bool is_power = false;
    int run = 1;
    for (size_t i = 1; i <= w.size(); ++i) {
      if (i < w.size() && w[i - 1] > w[i]) {
        rewrite_at = static_cast<int>(i - 1);
        break;
      }
      if (i < w.size() && w[i] == w[i - 1]) {
        if (++run == p) {
          rewrite_at = static_cast<int>(i) - p + 1;
          is_power = true;
          break;
        }
      } else {
        run = 1;
      }
    }
    if (rewrite_at < 0) break;

    if (++steps > budget)
      throw Error("collection exceeded the step budget of " + std::to_string(budget));

    Word replacement;
    size_t erase_len;
    if (is_power) {
      int g = w[static_cast<size_t>(rewrite_at)];
      erase_len = static_cast<size_t>(p);
      append_vector_letters(replacement, pres.power_rhs[static_cast<size_t>(g)]);
    } else {
      int hi = w[static_cast<size_t>(rewrite_at)];
      int lo = w[static_cast<size_t>(rewrite_at) + 1];
      erase_len = 2;
      replacement.push_back(static_cast<uint8_t>(lo));
      append_vector_letters(replacement, pres.conjugate_rhs(lo, hi));
    }
    w.erase(w.begin() + rewrite_at, w.begin() + rewrite_at + static_cast<long>(erase_len));
    w.insert(w.begin() + rewrite_at, replacement.begin(), replacement.end());
  }

  std::vector<int> vec(static_cast<size_t>(m), 0);
  for (uint8_t g : w) ++vec[static_cast<size_t>(g)];
  return vec;
}

int rank_of(const Presentation& pres, const std::vector<int>& vec) {
  int r = 0;
  for (size_t i = 0; i < vec.size(); ++i) r = r * pres.prime + vec[i];
  return r;
}

std::vector<int> unrank(const Presentation& pres, int rank) {
  const int m = pres.num_generators();
  std::vector<int> vec(static_cast<size_t>(m), 0);
  for (int i = m - 1; i >= 0; --i) {
    vec[static_cast<size_t>(i)] = rank % pres.prime;
    rank /= pres.prime;
  }
  return vec;
}

}  // namespace

GroupTable build_from_presentation(const Presentation& pres, std::string id,
                                   long long step_budget) {
  const long long n_ll = pres.group_order();
  if (n_ll > 729)
    throw Error("presentation defines a group of order " + std::to_string(n_ll) +
                ", above the supported maximum of 729");
  const int n = static_cast<int>(n_ll);
  if (id.empty()) id = "pcp:" + std::to_string(pres.prime) + "^" +
                       std::to_string(pres.num_generators());

  std::vector<Word> letters(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) {
    Word w;
    append_vector_letters(w, unrank(pres, r));
    letters[static_cast<size_t>(r)] = std::move(w);
  }

  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      Word w = letters[static_cast<size_t>(u)];
      w.insert(w.end(), letters[static_cast<size_t>(v)].begin(),
               letters[static_cast<size_t>(v)].end());
      table[static_cast<size_t>(u) * n + v] =
          static_cast<uint16_t>(rank_of(pres, collect(pres, std::move(w), step_budget)));
    }
  }

  AxiomReport rep = validate_axioms(n, table);
  if (!rep.all_ok())
    throw Error("inconsistent presentation for '" + id + "': " + rep.summary() +
                "; the presented group has order smaller than " + std::to_string(n));
  return GroupTable(std::move(id), n, std::move(table));
}

GroupTable build_from_permutations(int degree, const std::vector<std::vector<int>>& gens,
                                   std::string id, int max_order) {
  if (degree < 1) throw Error("build_from_permutations: degree must be positive");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree)
      throw Error("build_from_permutations: generator has wrong degree");
    std::vector<bool> seen(static_cast<size_t>(degree), false);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[static_cast<size_t>(v)])
        throw Error("build_from_permutations: generator is not a permutation");
      seen[static_cast<size_t>(v)] = true;
    }
  }

  std::vector<int> identity(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) identity[static_cast<size_t>(i)] = i;

  auto compose = [degree](const std::vector<int>& f, const std::vector<int>& g) {
    // "f then g"
    std::vector<int> h(static_cast<size_t>(degree));
    for (int x = 0; x < degree; ++x)
      h[static_cast<size_t>(x)] = g[static_cast<size_t>(f[static_cast<size_t>(x)])];
    return h;
  };

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elements{identity};
  index[identity] = 0;
  for (size_t head = 0; head < elements.size(); ++head) {
    std::vector<int> cur = elements[head];  // copy: elements may reallocate
    for (const auto& g : gens) {
      std::vector<int> prod = compose(cur, g);
      if (index.emplace(prod, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(prod));
        if (static_cast<int>(elements.size()) > max_order)
          throw BoundExceeded("build_from_permutations: closure exceeds order bound " +
                              std::to_string(max_order));
      }
    }
  }

  // Canonical element order: lexicographic on the permutation vectors. The
  // identity is lex-minimal, so it lands at index 0, and the table does not
  // depend on the generator list order.
  std::sort(elements.begin(), elements.end());
  for (size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);

  const int n = static_cast<int>(elements.size());
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(
          index.at(compose(elements[static_cast<size_t>(a)], elements[static_cast<size_t>(b)])));

  if (id.empty()) id = "perm:" + std::to_string(n);
  return GroupTable(std::move(id), n, std::move(table));
}

GroupTable semidirect_product(const GroupTable& base, const std::vector<int>& alpha,
                              int p, std::string id) {
  if (!is_abelian(base))
    throw Error("semidirect_product: base group '" + base.id() + "' is not abelian");
  if (p < 2) throw Error("semidirect_product: p must be a prime >= 2");
  const int nb = base.order();
  if (static_cast<int>(alpha.size()) != nb)
    throw Error("semidirect_product: alpha has wrong size");

  std::vector<bool> seen(static_cast<size_t>(nb), false);
  for (int v : alpha) {
    if (v < 0 || v >= nb || seen[static_cast<size_t>(v)])
      throw Error("semidirect_product: alpha is not a bijection");
    seen[static_cast<size_t>(v)] = true;
  }
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b)
      if (alpha[static_cast<size_t>(base.mul(a, b))] !=
          base.mul(alpha[static_cast<size_t>(a)], alpha[static_cast<size_t>(b)]))
        throw Error("semidirect_product: alpha is not an automorphism");

  // alpha^j for j in [0, p); alpha^p must be the identity map.
  std::vector<std::vector<int>> pow(static_cast<size_t>(p));
  pow[0].resize(static_cast<size_t>(nb));
  for (int b = 0; b < nb; ++b) pow[0][static_cast<size_t>(b)] = b;
  for (int j = 1; j < p; ++j) {
    pow[static_cast<size_t>(j)].resize(static_cast<size_t>(nb));
    for (int b = 0; b < nb; ++b)
      pow[static_cast<size_t>(j)][static_cast<size_t>(b)] =
          alpha[static_cast<size_t>(pow[static_cast<size_t>(j - 1)][static_cast<size_t>(b)])];
  }
  for (int b = 0; b < nb; ++b)
    if (alpha[static_cast<size_t>(pow[static_cast<size_t>(p - 1)][static_cast<size_t>(b)])] != b)
      throw Error("semidirect_product: alpha^p is not the identity");

  const long long n_ll = static_cast<long long>(nb) * p;
  if (n_ll > 729)
    throw Error("semidirect_product: resulting order " + std::to_string(n_ll) +
                " exceeds the supported maximum of 729");
  const int n = static_cast<int>(n_ll);

  // (a^i b)(a^j c) = a^{i+j} alpha^j(b) c
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < p; ++i)
    for (int b = 0; b < nb; ++b)
      for (int j = 0; j < p; ++j)
        for (int c = 0; c < nb; ++c) {
          int lhs = i * nb + b;
          int rhs = j * nb + c;
          int k = (i + j) % p;
          int d = base.mul(pow[static_cast<size_t>(j)][static_cast<size_t>(b)], c);
          table[static_cast<size_t>(lhs) * n + rhs] = static_cast<uint16_t>(k * nb + d);
        }

  if (id.empty()) id = base.id() + ":C" + std::to_string(p);
  return GroupTable(std::move(id), n, std::move(table));
}

}  // namespace pgv
