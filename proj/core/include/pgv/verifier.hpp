#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pgv/catalog.hpp"

namespace pgv {

using json = nlohmann::ordered_json;

/// NotApplicable = the group fails the statement's hypotheses. Error = the
/// check could not run (enumeration bound, invalid input); suite runs report
/// these as entries instead of aborting.
enum class CheckStatus { Pass, Fail, NotApplicable, Error };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string check_id;
  std::string group_id;
  CheckStatus status = CheckStatus::NotApplicable;
  /// Structured witness (elements/subgroups by index); null unless Fail.
  json counterexample;
  /// Extra structured information (pass-side witnesses, informational
  /// findings); null when there is none.
  json details;
  /// Hypothesis configurations examined by the quantifier scan.
  long long configurations = 0;
  double elapsed_ms = 0.0;
};

struct RunBounds {
  /// Cap on group orders for subgroup enumeration (0 = per-group default p^5).
  int enumeration_bound = 0;
};

// One checker per statement. Quantifier scan order is fixed (ascending
// element index, ascending subgroup order), so witnesses are reproducible.

/// 2-groups: every proper isolated subgroup is abelian.
CheckResult check_lemma1(const GroupTable& g, const RunBounds& bounds = {});

/// 3-groups: for maximal M with g^3 = 1 outside M, commuting a, b in M give
/// [a^x, b] = 1 for all x outside M.
CheckResult check_lemma2(const GroupTable& g, const RunBounds& bounds = {});

/// p-groups: a proper minimal nonabelian subgroup isolated in G is S(p^3).
CheckResult check_lemma3(const GroupTable& g, const RunBounds& bounds = {});

/// 3-groups: (x a^-1)^3 = x^3 [x,a]^3 [x,a,x] [x,a,a] a^-3 whenever H is
/// maximal in T <= G with T' <= Z(H), x in T-H, a in H.
CheckResult check_cube_identity(const GroupTable& g, const RunBounds& bounds = {});

/// Odd-p nonabelian groups: all minimal nonabelian subgroups are S(p^3) iff
/// exp(G) = p or the Hughes subgroup is abelian of index p with an order-p
/// complement element. The block decomposition of the Hughes subgroup is
/// searched for |G| <= p^4 and reported informationally.
CheckResult check_lemma4(const GroupTable& g, const RunBounds& bounds = {});

/// p >= 5, exp(G) > p, all minimal nonabelian subgroups S(p^3): every
/// minimal nonabelian subgroup has a normalizer of exponent p.
CheckResult check_lemma5(const GroupTable& g, const RunBounds& bounds = {});

/// Nonabelian, exp > p, not minimal nonabelian: all minimal nonabelian
/// subgroups isolated in their normalizers iff all are S(p^3) and p >= 5.
CheckResult check_theorem6(const GroupTable& g, const RunBounds& bounds = {});

/// Nonabelian, not minimal nonabelian: all minimal nonabelian subgroups
/// isolated in G iff exp(G) = p. For exp > p the report carries a concrete
/// non-isolated subgroup with its witness element.
CheckResult check_theorem7(const GroupTable& g, const RunBounds& bounds = {});

/// Nonabelian groups are generated by their minimal nonabelian subgroups.
CheckResult check_generated_by_mna(const GroupTable& g, const RunBounds& bounds = {});

/// Class < p implies regular.
CheckResult check_regularity_class(const GroupTable& g, const RunBounds& bounds = {});

/// Catalog-level: every maximal-class entry of declared order 81 has
/// exponent > 3. Entries are selected by declared order, so a mis-declared
/// fixture exercises the Fail path.
CheckResult check_order81_maximal_class_exponent(const Catalog& catalog);

/// Canonical check names in canonical execution order.
const std::vector<std::string>& all_check_names();
bool is_check_name(const std::string& name);

struct Report {
  json run;  // filter, bounds, determinism note
  std::vector<CheckResult> results;
  long long passes = 0, fails = 0, not_applicable = 0, errors = 0;

  void recount();
};

/// Runs the selected checks over every catalog entry matching the filter.
/// Results are sorted by (group_id, check_id); per-check failures and errors
/// become result entries, never exceptions.
Report run_suite(const Catalog& catalog, const CatalogFilter& filter,
                 const std::vector<std::string>& checks, const RunBounds& bounds = {});

}  // namespace pgv
