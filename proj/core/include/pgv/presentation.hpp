#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pgv/errors.hpp"

namespace pgv {

/// A parsed polycyclic presentation of a finite p-group.
///
/// Text format (.pcp): statements separated by ';', '#' comments to end of
/// line, whitespace insignificant.
///
///   p=3;                    # the prime; must come first
///   gens a,b,c;             # collection order; every generator has relative
///                           # order p
///   b^3 = c;                # power relation g^p = word (omitted: g^p = 1)
///   b^a = b*c;              # conjugation relation y^x = word, x earlier in
///                           # the generator list (omitted: y^x = y)
///
/// Words are '*'-separated generator powers in normal form (ascending
/// generators, exponents in [0,p)), e.g. "b^2*c", or "1" for the identity.
/// Power relation right-hand sides may only use generators later than the
/// one on the left.
struct Presentation {
  int prime = 0;
  std::vector<std::string> generators;
  /// power_rhs[i] is the exponent vector of g_i^p (all zero = identity).
  std::vector<std::vector<int>> power_rhs;
  /// conj_rhs[i * m + j], i < j, is the exponent vector of g_j^{g_i}
  /// (defaults to g_j itself).
  std::vector<std::vector<int>> conj_rhs;
  std::string source_text;

  int num_generators() const { return static_cast<int>(generators.size()); }
  long long group_order() const {
    long long n = 1;
    for (size_t i = 0; i < generators.size(); ++i) n *= prime;
    return n;
  }
  const std::vector<int>& conjugate_rhs(int i, int j) const {
    return conj_rhs[static_cast<size_t>(i) * generators.size() + static_cast<size_t>(j)];
  }
};

/// Parses the .pcp format above. Unparsed trailing input is an error; all
/// errors carry line/column.
Presentation parse_pcp(std::string_view text);

/// Renders the element with the given normal-form rank as a word, e.g.
/// "a^2*c" (identity: "1"). Ranks follow build_from_presentation's element
/// order.
std::string element_name(const Presentation& pres, int rank);

}  // namespace pgv
