#include "lindim/catalog.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "lindim/error.hpp"

namespace lindim {

namespace {

const std::vector<CatalogEntry>& raw_entries() {
  static const std::vector<CatalogEntry> entries = {
#include "catalog_data.inc"
  };
  return entries;
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> m = {
      {"C1", "1T1"},  {"C2", "2T1"},  {"S2", "2T1"},  {"C3", "3T1"},
      {"A3", "3T1"},  {"S3", "3T2"},  {"C4", "4T1"},  {"V4", "4T2"},
      {"D4", "4T3"},  {"A4", "4T4"},  {"S4", "4T5"},  {"C5", "5T1"},
      {"D5", "5T2"},  {"F20", "5T3"}, {"A5", "5T4"},  {"S5", "5T5"},
      {"C6", "6T1"},  {"D6", "6T3"},  {"A6", "6T15"}, {"S6", "6T16"},
      {"C7", "7T1"},  {"D7", "7T2"},  {"F21", "7T3"}, {"F42", "7T4"},
      {"PSL32", "7T5"}, {"A7", "7T6"}, {"S7", "7T7"},
  };
  return m;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() { return raw_entries(); }

const CatalogEntry& catalog_entry(const std::string& name) {
  std::string key = name;
  auto al = aliases().find(key);
  if (al != aliases().end()) key = al->second;
  for (const CatalogEntry& e : raw_entries())
    if (e.name == key) return e;
  fail("UnknownGroup", "no catalog entry named '" + name + "'");
}

bool catalog_has(const std::string& name) {
  if (aliases().count(name)) return true;
  for (const CatalogEntry& e : raw_entries())
    if (e.name == name) return true;
  return false;
}

PermGroup catalog_group(const std::string& name) {
  return parse_group_text(catalog_entry(name).definition);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const CatalogEntry& e : raw_entries()) out.push_back(e.name);
  for (const auto& [alias, target] : aliases()) out.push_back(alias + "=" + target);
  return out;
}

PermGroup parse_group_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!have_degree) {
      if (line.rfind("degree ", 0) != 0)
        fail("ParseError", "group file must start with 'degree n'");
      try {
        degree = std::stoul(trim(line.substr(7)));
      } catch (const std::exception&) {
        fail("ParseError", "bad degree line");
      }
      if (degree < 1) fail("ParseError", "degree must be at least 1");
      have_degree = true;
    } else {
      if (line.rfind("gen ", 0) != 0 && line != "gen")
        fail("ParseError", "expected 'gen <cycles>' line");
      gens.push_back(Permutation::parse_cycles(trim(line.substr(3)), degree));
    }
  }
  if (!have_degree) fail("ParseError", "group file has no degree line");
  if (gens.empty()) fail("ParseError", "group file has no generators");
  return PermGroup(degree, std::move(gens));
}

PermGroup parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("ParseError", "cannot open group file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str());
}

}  // namespace lindim
