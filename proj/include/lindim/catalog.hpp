#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lindim/group.hpp"

namespace lindim {

struct CatalogEntry {
  std::string name;
  std::size_t degree;
  std::uint64_t order;       // known group order, cross-checked in tests
  std::string definition;    // group file text
};

// built-in groups: transitive groups of degree up to 7 (nTk names), symmetric
// groups through degree 10, C15, and the Table-of-constants groups on their
// listed domains; common aliases (S4, A5, D6, ...) resolve to nTk entries
const std::vector<CatalogEntry>& catalog_entries();
bool catalog_has(const std::string& name);
PermGroup catalog_group(const std::string& name);
const CatalogEntry& catalog_entry(const std::string& name);
std::vector<std::string> catalog_names();

// group file format: "degree n", then "gen <cycles>" lines with 1-based
// points; blank lines and "#" comments ignored
PermGroup parse_group_text(const std::string& text);
PermGroup parse_group_file(const std::string& path);

}  // namespace lindim
