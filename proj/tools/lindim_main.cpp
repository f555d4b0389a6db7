#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lindim/catalog.hpp"
#include "lindim/error.hpp"
#include "lindim/fgmodule.hpp"
#include "lindim/formulas.hpp"
#include "lindim/gfq.hpp"
#include "lindim/lindim.hpp"
#include "lindim/suites.hpp"
#include "lindim/witness.hpp"

namespace {

using namespace lindim;

// "p" or "p^t"
const Field& parse_field(const std::string& text) {
  std::size_t caret = text.find('^');
  if (caret == std::string::npos)
    return Field::get_order(static_cast<std::uint32_t>(std::stoul(text)));
  std::uint32_t p = static_cast<std::uint32_t>(std::stoul(text.substr(0, caret)));
  std::uint32_t t =
      static_cast<std::uint32_t>(std::stoul(text.substr(caret + 1)));
  return Field::get(p, t);
}

PermGroup load_group(const std::string& catalog_name,
                     const std::string& group_file) {
  if (!catalog_name.empty()) return catalog_group(catalog_name);
  if (!group_file.empty()) return parse_group_file(group_file);
  fail("BadParameter", "need --catalog or --group");
}

struct ActionDesc {
  std::string kind;  // natural | regular | ksets | cosets | wreath-imp | ...
  std::string arg;
};

ActionDesc split_action(const std::string& text) {
  std::size_t colon = text.find(':');
  if (colon == std::string::npos) return {text, ""};
  return {text.substr(0, colon), text.substr(colon + 1)};
}

std::pair<std::string, std::string> split_pair(const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    fail("BadParameter", "wreath descriptors take K,L");
  return {text.substr(0, comma), text.substr(comma + 1)};
}

GroupAction build_action(const ActionDesc& desc,
                         const std::string& catalog_name,
                         const std::string& group_file) {
  if (desc.kind == "natural")
    return action_natural(load_group(catalog_name, group_file));
  if (desc.kind == "regular")
    return action_regular(load_group(catalog_name, group_file));
  if (desc.kind == "ksets")
    return action_ksubsets(load_group(catalog_name, group_file),
                           std::stoul(desc.arg));
  if (desc.kind == "partitions")
    return action_uniform_partitions(load_group(catalog_name, group_file),
                                     std::stoul(desc.arg));
  if (desc.kind == "cosets") {
    PermGroup g = load_group(catalog_name, group_file);
    PermGroup sub = parse_group_file(desc.arg);
    if (sub.degree() != g.degree())
      fail("BadParameter", "subgroup file has the wrong degree");
    return action_cosets(g, sub.generators());
  }
  if (desc.kind == "wreath-imp" || desc.kind == "wreath-prod") {
    auto [kname, lname] = split_pair(desc.arg);
    PermGroup k = catalog_group(kname);
    PermGroup l = catalog_group(lname);
    return desc.kind == "wreath-imp" ? action_wreath_imprimitive(k, l)
                                     : action_wreath_product(k, l);
  }
  fail("BadParameter", "unknown action descriptor: " + desc.kind);
}

std::uint64_t field_char(const Field& f) {
  std::uint32_t q = f.q(), p = 2;
  while (q % p != 0) ++p;
  return p;
}

// closed-form route; only defined for the families the formulas cover
LinDimResult run_formula(const ActionDesc& desc,
                         const std::string& catalog_name,
                         const std::string& group_file, const Field& f) {
  std::uint64_t p = field_char(f);
  LinDimResult r;
  r.method = "formula";
  auto is_sym = [](const PermGroup& g) {
    std::uint64_t fact = 1;
    for (std::uint64_t i = 2; i <= g.degree(); ++i) fact *= i;
    return g.order() == fact;
  };
  if (desc.kind == "natural") {
    PermGroup g = load_group(catalog_name, group_file);
    if (!is_sym(g))
      fail("BadParameter", "formula mode for natural needs a full S_n");
    r.lo = r.hi = formula_sn_family(SnFamily::natural, g.degree(), 0, p);
    return r;
  }
  if (desc.kind == "ksets") {
    PermGroup g = load_group(catalog_name, group_file);
    if (!is_sym(g))
      fail("BadParameter", "formula mode for ksets needs a full S_n");
    r.lo = r.hi = formula_sn_family(SnFamily::ksets, g.degree(),
                                    std::stoul(desc.arg), p);
    return r;
  }
  if (desc.kind == "partitions") {
    PermGroup g = load_group(catalog_name, group_file);
    if (!is_sym(g))
      fail("BadParameter", "formula mode for partitions needs a full S_n");
    r.lo = r.hi = formula_sn_family(SnFamily::uniform, g.degree(),
                                    std::stoul(desc.arg), p);
    return r;
  }
  if (desc.kind == "wreath-imp") {
    auto [kname, lname] = split_pair(desc.arg);
    PermGroup k = catalog_group(kname);
    PermGroup l = catalog_group(lname);
    bool regular = k.order() == k.degree();
    std::uint64_t lk = 0;
    if (!(regular && k.degree() == p))
      lk = lindim_auto(action_natural(k), f).value();
    r.lo = r.hi = formula_wreath_imprimitive(k.degree(), l.degree(), regular,
                                             lk, p);
    return r;
  }
  if (desc.kind == "wreath-prod") {
    auto [kname, lname] = split_pair(desc.arg);
    PermGroup k = catalog_group(kname);
    PermGroup l = catalog_group(lname);
    if (!is_sym(k) || !is_sym(l))
      fail("BadParameter", "formula mode for wreath-prod needs S_k wr S_l");
    r.lo = r.hi = formula_wreath_product(k.degree(), l.degree(), p);
    return r;
  }
  fail("BadParameter", "no closed form for action: " + desc.kind);
}

struct RunConfig {
  std::string catalog_name;
  std::string group_file;
  std::string action_text = "natural";
  std::string field_text = "2";
  std::string mode = "auto";
  std::string out_path;
  std::string witness_path;
  std::string suite_name;
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultLatticeCap;
  bool json = false;
};

int cmd_compute(const RunConfig& cfg) {
  ActionDesc desc = split_action(cfg.action_text);
  const Field& f = parse_field(cfg.field_text);

  LinDimResult r;
  if (cfg.mode == "formula") {
    r = run_formula(desc, cfg.catalog_name, cfg.group_file, f);
  } else {
    GroupAction a = build_action(desc, cfg.catalog_name, cfg.group_file);
    if (cfg.mode == "auto")
      r = lindim_auto(a, f, cfg.cap, cfg.seed);
    else if (cfg.mode == "general")
      r = lindim_general(a, f, cfg.cap, cfg.seed);
    else if (cfg.mode == "primitive")
      r = lindim_primitive(a, f, cfg.seed);
    else if (cfg.mode == "oracle")
      r = lindim_oracle(a, f);
    else
      fail("BadParameter", "unknown mode: " + cfg.mode);
  }

  if (!cfg.out_path.empty() && r.witness.has_value()) {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) fail("BadParameter", "cannot write " + cfg.out_path);
    out << witness_str(*r.witness);
  }

  if (r.complete) {
    std::cout << "lindim=" << r.hi << "\n";
    return 0;
  }
  std::cout << "lindim=[" << r.lo << "," << r.hi << "]\n";
  return 3;
}

int cmd_verify(const RunConfig& cfg) {
  std::ifstream in(cfg.witness_path, std::ios::binary);
  if (!in) fail("ParseError", "cannot read " + cfg.witness_path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  WitnessCertificate w = witness_parse(text);
  GroupAction a = build_action(split_action(cfg.action_text),
                               cfg.catalog_name, cfg.group_file);
  VerifyReport rep;
  try {
    rep = witness_verify(w, a);
  } catch (const Error& e) {
    std::cout << "verify: " << e.what() << "\n";
    return 4;
  }
  if (!rep.ok) {
    std::cout << "verify: " << rep.code << " " << rep.detail << "\n";
    return 4;
  }
  std::cout << "verify: ok\n";
  return 0;
}

int cmd_suite(const RunConfig& cfg) {
  std::vector<SuiteRow> rows;
  if (cfg.suite_name == "oracle")
    rows = suite_oracle();
  else if (cfg.suite_name == "theorems")
    rows = suite_theorems();
  else if (cfg.suite_name == "invariants")
    rows = suite_invariants();
  else
    fail("BadParameter", "unknown suite: " + cfg.suite_name);
  std::cout << suite_report(rows, cfg.json);
  return suite_pass(rows) ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"F-linear dimension of finite group actions"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env_cap = std::getenv("LINDIM_CAP"))
    cfg.cap = static_cast<std::size_t>(std::stoull(env_cap));

  CLI::App* compute = app.add_subcommand("compute", "compute a lindim value");
  compute->add_option("--catalog", cfg.catalog_name, "catalog group name");
  compute->add_option("--group", cfg.group_file, "group file path");
  compute->add_option("--action", cfg.action_text,
                      "natural | regular | ksets:k | cosets:file | "
                      "wreath-imp:K,L | wreath-prod:K,L | partitions:k");
  compute->add_option("--field", cfg.field_text, "p or p^t");
  compute->add_option("--mode", cfg.mode,
                      "auto | general | primitive | oracle | formula");
  compute->add_option("--seed", cfg.seed, "search seed");
  compute->add_option("--cap", cfg.cap, "submodule lattice node cap");
  compute->add_option("--out", cfg.out_path, "witness output path");

  CLI::App* verify = app.add_subcommand("verify", "verify a witness file");
  verify->add_option("--witness", cfg.witness_path, "witness file")
      ->required();
  verify->add_option("--catalog", cfg.catalog_name, "catalog group name");
  verify->add_option("--group", cfg.group_file, "group file path");
  verify->add_option("--action", cfg.action_text, "action descriptor");

  CLI::App* suite = app.add_subcommand("suite", "run a report suite");
  suite->add_option("name", cfg.suite_name, "oracle | theorems | invariants")
      ->required();
  suite->add_flag("--json", cfg.json, "key/value records instead of rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (compute->parsed()) return cmd_compute(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return cmd_suite(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == "ParseError" || e.code() == "BadParameter") return 1;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
