#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "esdmem/codes.hpp"

namespace esdmem {

using ClosedFormFn = std::function<double(CodeName, NoiseKind, const StoredQubit&, double)>;

struct ValidationOptions {
  std::uint64_t seed = 1;
  int jobs = 1;
  // Closed forms the oracle suites compare against; replaceable for negative controls.
  ClosedFormFn closed_form = closed_form_fidelity;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the built-in oracle and invariant suites in a fixed order.
std::vector<SuiteResult> run_validation(const ValidationOptions& options = {});

// One "PASS name: detail" / "FAIL name: detail" line per suite; returns true iff all passed.
bool print_report(std::ostream& out, const std::vector<SuiteResult>& results);

}  // namespace esdmem
