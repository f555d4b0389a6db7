#pragma once

#include <string>
#include <vector>

namespace lindim {

struct SuiteRow {
  std::string case_name;
  std::string field;     // "GF(q)"
  std::string computed;  // value or "[lo,hi]"
  std::string expected;
  std::string tag;  // short provenance label printed in brackets
  bool pass = false;
};

// lattice search against the brute-force oracle on every catalog group of
// degree at most 6, over GF(2) and GF(3)
std::vector<SuiteRow> suite_oracle();

// computed values against the closed forms and the pinned worked examples
std::vector<SuiteRow> suite_theorems();

// sampled structural properties: monotonicity under subgroups, field
// extension bounds, the cyclic criterion for value 1, intransitive
// sandwiching, witness re-verification, fixed spaces, and the two-witness
// distinguisher
std::vector<SuiteRow> suite_invariants();

// rows sorted by (case, field); json emits one key/value record per line
std::string suite_report(std::vector<SuiteRow> rows, bool json);

bool suite_pass(const std::vector<SuiteRow>& rows);

}  // namespace lindim
