#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgv/algebra.hpp"
#include "pgv/fingerprint.hpp"
#include "pgv/presentation.hpp"

namespace pgv {

/// One identified small group. Loaded entries carry a built and validated
/// table whose id equals the entry id.
struct CatalogEntry {
  std::string id;
  std::string source_path;  // manifest-relative .pcp path; empty for in-memory entries
  int declared_order = 0;
  std::vector<std::string> tags;  // sorted
  std::string external_ref;
  std::shared_ptr<const GroupTable> table;
  std::shared_ptr<const Presentation> presentation;  // null for in-memory entries

  bool has_tag(const std::string& t) const;
};

struct CatalogFilter {
  int prime = 0;        // 0 = any
  int order = 0;        // 0 = any
  std::string tag;      // empty = any
};

/// Immutable after load; safe for concurrent reads.
class Catalog {
public:
  /// Reads `manifest.txt` in `dir` (one entry per line: id, path, declared
  /// order, comma-separated tags, optional free-text reference). Entries
  /// tagged "extended" are skipped unless `extended` is set. Every source is
  /// parsed, built and validated; a declared-order mismatch is an error.
  static Catalog load(const std::filesystem::path& dir, bool extended = false);

  /// Builds a catalog from prebuilt entries (test fixtures). No validation
  /// beyond unique ids.
  static Catalog from_entries(std::vector<CatalogEntry> entries);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<const CatalogEntry*> list(const CatalogFilter& filter = {}) const;
  const CatalogEntry& entry(const std::string& id) const;
  const GroupTable& get(const std::string& id) const;

private:
  std::vector<CatalogEntry> entries_;  // sorted by id
};

/// Catalog groups G (prime p, order <= max_order) with exp(G) > p whose
/// minimal nonabelian subgroups are all S(p^3); per the structure theorem
/// each should decompose as an abelian Hughes subgroup of index p with an
/// order-p complement, which is located and re-verified here.
struct Lemma4Witness {
  const CatalogEntry* entry = nullptr;
  Subgroup hughes;
  bool hughes_abelian = false;
  bool hughes_index_p = false;
  std::optional<int> complement;  // least a outside Hughes with o(a) = p
};

std::vector<Lemma4Witness> find_lemma4_witnesses(const Catalog& catalog, int p,
                                                 int max_order);

}  // namespace pgv
