#include "pgv/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pgv/construct.hpp"
#include "pgv/predicates.hpp"

namespace pgv {

bool CatalogEntry::has_tag(const std::string& t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

namespace {

std::vector<std::string> split_tags(const std::string& field) {
  std::vector<std::string> tags;
  if (field == "-") return tags;
  std::string cur;
  for (char c : field) {
    if (c == ',') {
      if (!cur.empty()) tags.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tags.push_back(cur);
  std::sort(tags.begin(), tags.end());
  return tags;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Catalog Catalog::load(const std::filesystem::path& dir, bool extended) {
  const std::filesystem::path manifest_path = dir / "manifest.txt";
  std::ifstream manifest(manifest_path);
  if (!manifest)
    throw Error("catalog manifest not found: " + manifest_path.string());

  std::vector<CatalogEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(manifest, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    CatalogEntry e;
    std::string tag_field;
    if (!(fields >> e.id)) continue;  // blank line
    if (!(fields >> e.source_path >> e.declared_order >> tag_field))
      throw Error("manifest line " + std::to_string(lineno) +
                  ": expected 'id path order tags [reference]'");
    e.tags = split_tags(tag_field);
    std::getline(fields, e.external_ref);
    while (!e.external_ref.empty() && e.external_ref.front() == ' ')
      e.external_ref.erase(e.external_ref.begin());

    if (!extended && e.has_tag("extended")) continue;

    const std::filesystem::path src = dir / e.source_path;
    Presentation pres = parse_pcp(read_file(src));
    GroupTable table = build_from_presentation(pres, e.id);
    if (table.order() != e.declared_order)
      throw Error("catalog entry '" + e.id + "': built order " +
                  std::to_string(table.order()) + " does not match declared order " +
                  std::to_string(e.declared_order));
    e.presentation = std::make_shared<Presentation>(std::move(pres));
    e.table = std::make_shared<GroupTable>(std::move(table));
    entries.push_back(std::move(e));
  }
  return from_entries(std::move(entries));
}

Catalog Catalog::from_entries(std::vector<CatalogEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
  for (size_t i = 1; i < entries.size(); ++i)
    if (entries[i].id == entries[i - 1].id)
      throw Error("duplicate catalog id '" + entries[i].id + "'");
  Catalog c;
  c.entries_ = std::move(entries);
  return c;
}

std::vector<const CatalogEntry*> Catalog::list(const CatalogFilter& filter) const {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : entries_) {
    if (filter.order && e.declared_order != filter.order) continue;
    if (filter.prime && e.table->prime() != filter.prime) continue;
    if (!filter.tag.empty() && !e.has_tag(filter.tag)) continue;
    out.push_back(&e);
  }
  return out;
}

const CatalogEntry& Catalog::entry(const std::string& id) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                             [](const CatalogEntry& e, const std::string& v) { return e.id < v; });
  if (it == entries_.end() || it->id != id)
    throw Error("unknown catalog id '" + id + "'");
  return *it;
}

const GroupTable& Catalog::get(const std::string& id) const { return *entry(id).table; }

std::vector<Lemma4Witness> find_lemma4_witnesses(const Catalog& catalog, int p,
                                                 int max_order) {
  if (p < 3) throw Error("find_lemma4_witnesses: requires an odd prime p >= 3");
  std::vector<Lemma4Witness> out;
  for (const CatalogEntry& e : catalog.entries()) {
    const GroupTable& g = *e.table;
    if (g.prime() != p || g.order() > max_order) continue;
    if (is_abelian(g) || exponent(g) <= p) continue;
    std::vector<Subgroup> mna = minimal_nonabelian_subgroups(g);
    bool all_sp3 = !mna.empty();
    for (const Subgroup& s : mna)
      if (!is_S_p3(s)) {
        all_sp3 = false;
        break;
      }
    if (!all_sp3) continue;

    Lemma4Witness w;
    w.entry = &e;
    w.hughes = hughes_subgroup(g);
    w.hughes_abelian = is_abelian(w.hughes);
    w.hughes_index_p = w.hughes.order() * p == g.order();
    for (int a = 0; a < g.order(); ++a)
      if (!w.hughes.contains(a) && g.element_order(a) == p) {
        w.complement = a;
        break;
      }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace pgv
