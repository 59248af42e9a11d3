#pragma once

#include "cisupport/rng.hpp"
#include "cisupport/script.hpp"
#include "cisupport/verdier.hpp"

namespace cisupport {

struct RunConfig {
  std::optional<uint32_t> p_override;  // --p
  int window = 0;                      // 0: default 2c + 10
  uint64_t seed = 0;
  std::string format = "json";  // "json" | "table"
  int sweep = 3;                // random modules per ring in audit-all
  bool inject_fault = false;    // harness self-test: force one FAIL
  size_t budget_terms = 0;      // term cap; 0 = unlimited
};

// Exit codes: 0 all PASS/INAPPLICABLE/WINDOW-LIMITED; 1 at least one FAIL;
// 2 usage/parse/module error; 3 budget exceeded.
struct RunResult {
  int exit_code = 0;
  std::string output;  // one report object per line (or a table)
};

RunResult run_script(const std::string& text, const RunConfig& cfg);
RunResult audit_all(const RunConfig& cfg);

// Seeded random homogeneous presentation, MCM-ified; bit-stable per seed.
ModulePresentation random_module(Analyzer& an, Rng& rng, int rows, int cols,
                                 int degree_bound);

}  // namespace cisupport
