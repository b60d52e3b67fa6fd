#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cstar/binary_code.hpp"

namespace cstar {

// A named instance of the coupled three-level scheme together with the
// reference values its analysis is expected to reproduce. Component codes
// come either from the built-in catalog or from a generator-matrix file
// looked up in the data directory (CSTAR_DATA_DIR, or ./data by default).
struct PresetSpec {
  std::string name;
  int n = 0;

  bool from_file = false;
  std::string source;  // builtin name, or file basename under the data dir

  // Requirements the component code must satisfy (validated after loading).
  int require_k = 0;
  std::optional<int> require_d;
  bool require_self_dual = false;

  // Reference values for the analysis.
  bool expect_lattice = false;
  std::optional<uint64_t> expect_d_sq;
  std::optional<double> expect_density;
  double density_tol = 0;
  std::optional<double> expect_hermite;
  double hermite_tol = 0;

  // Published figures that disagree with what the implementation computes;
  // the differences are reported as documented discrepancies, not failures.
  std::optional<uint64_t> published_d_sq;
  std::optional<double> published_density;
  std::optional<double> published_hermite;

  std::string comment;
};

const std::vector<PresetSpec>& presets();

// Throws ValidationError for unknown names (with a pointer to the n = 16
// gap, which is deliberately left open).
const PresetSpec& preset(const std::string& name);

// Directory searched for preset matrix files: CSTAR_DATA_DIR when set,
// otherwise "data" relative to the working directory.
std::string data_dir();

// Load and validate the component code of a preset. `file_override`
// replaces the data-dir lookup for file-sourced presets. Throws
// ValidationError when the file is missing or the code fails the preset's
// requirements.
BinaryCode resolve_preset_code(const PresetSpec& spec,
                               const std::optional<std::string>& file_override,
                               uint64_t enum_budget = kDefaultEnumBudget);

}  // namespace cstar
