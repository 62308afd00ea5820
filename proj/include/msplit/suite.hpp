#pragma once

// Executable verification of the theory's propositions.  Every registered
// property is a theorem, so a failure always means an implementation bug;
// failures carry the full instance and replay deterministically.
//
// Exhaustive sweeps run over all labeled topologies up to the configured
// point count; randomized sweeps draw seeded instances.  Statements with
// Hausdorff or regularity hypotheses quantify over discrete codomains only,
// which is what those hypotheses mean on finite spaces.

#include <string>
#include <vector>

#include "json.hpp"
#include "msplit/enumerate.hpp"
#include "msplit/multisplit.hpp"

namespace msplit {

struct SuiteOptions {
  std::uint64_t trials = 200; // random instances per property
  std::uint64_t seed = 1;
  int exhaustive_max = 3; // 0 disables exhaustive sweeps
  unsigned long long selection_cap = SelectionStream::kDefaultSelectionCap;
};

struct PropertyResult {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t skipped = 0; // instances abandoned at a documented cap
  std::vector<std::string> failures;
  double elapsed_seconds = 0;

  bool pass() const { return failures.empty(); }
};

const std::vector<std::string>& property_names();
const std::string& property_note(const std::string& name);

PropertyResult run_property(const std::string& name, const SuiteOptions& opt);
std::vector<PropertyResult> run_all(const SuiteOptions& opt);

// Re-executes a serialized failure record; true if it still fails.
bool replay_failure(const std::string& record);

} // namespace msplit
