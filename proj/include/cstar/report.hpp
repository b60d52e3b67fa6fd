#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cstar/analysis.hpp"
#include "cstar/presets.hpp"

namespace cstar {

inline constexpr const char* kAnalysisSchema = "cstar-analysis-v1";
inline constexpr const char* kTableSchema = "cstar-table-v1";

struct AnalysisOptions {
  uint64_t enum_budget = kDefaultEnumBudget;
  uint64_t quotient_budget = kDefaultQuotientBudget;
  uint64_t pair_budget = kDefaultPairBudget;
  uint64_t trials = 100000;
  uint64_t seed = 0;
};

struct CodeSummary {
  int n = 0;
  int k = 0;
  std::optional<int> min_distance;
  std::string distance_status;  // "verified" | "asserted" | "unknown"
  bool self_orthogonal = false;
  bool self_dual = false;
  bool contains_all_ones = false;
};

CodeSummary summarize_code(const BinaryCode& code,
                           uint64_t enum_budget = kDefaultEnumBudget);

enum class MatchStatus { none, matched, flagged, mismatched };

const char* to_string(MatchStatus s);

// Everything the analyze pipeline learned about one scheme. Field values
// are deterministic functions of the scheme, the options and the seed.
struct AnalysisResult {
  std::optional<std::string> preset;
  std::string scheme;
  int n = 0;
  int levels = 0;
  std::optional<CodeSummary> c2;

  double log2_points = 0;
  std::optional<uint64_t> points;

  std::optional<LatticeVerdict> theorem2;
  std::optional<LatticeVerdict> theorem1;
  std::optional<LatticeVerdict> closure;
  Tri is_lattice = Tri::unknown;
  std::string lattice_method;  // method that settled the conclusion
  std::optional<WitnessPair> witness;

  std::optional<uint64_t> d_exhaustive;
  std::optional<uint64_t> d_formula;
  std::optional<uint64_t> d_min_sq;
  std::string d_status;  // "exhaustive" | "formula" | "formula+verified"

  std::optional<PackingReport> packing;

  MatchStatus match = MatchStatus::none;
  std::vector<std::string> match_notes;
  std::vector<std::string> notes;

  AnalysisOptions options;
};

// Run every applicable check on the scheme: theorem 2 (coupled bodies),
// theorem 1, a closure check (exhaustive within budget, sampled otherwise),
// minimum distance (exhaustive and/or level formula) and the packing
// report. Never throws on budget exhaustion; whatever could not be
// computed is left empty with an explanatory note.
AnalysisResult analyze_scheme(const MainCode& main, const AnalysisOptions& opt);

// Compare a result against a preset's reference values; fills match /
// match_notes. A divergence listed as a documented discrepancy downgrades
// to `flagged` instead of `mismatched`.
void check_expectations(AnalysisResult& r, const PresetSpec& spec);

nlohmann::ordered_json to_json(const AnalysisResult& r);
std::string to_table(const AnalysisResult& r);

nlohmann::ordered_json to_json(const CodeSummary& s);

// One line per preset; file-sourced presets whose matrix is absent are
// reported as skipped rather than failing the whole table.
struct TableRow {
  std::string preset;
  std::optional<AnalysisResult> result;
  std::string skip_reason;
};

std::vector<TableRow> reference_table(const AnalysisOptions& opt);
nlohmann::ordered_json to_json(const std::vector<TableRow>& rows);
std::string to_table(const std::vector<TableRow>& rows);

}  // namespace cstar
