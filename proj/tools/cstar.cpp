#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cstar/catalog.hpp"
#include "cstar/errors.hpp"
#include "cstar/report.hpp"

namespace {

using namespace cstar;

// Exit codes: 0 success, 1 no witness found, 2 bad input, 3 reference
// mismatch, 4 budget exhausted without a usable result.
enum ExitCode { kOk = 0, kNoWitness = 1, kBadInput = 2, kMismatch = 3, kBudget = 4 };

struct SourceOpts {
  std::string preset_name;
  std::string c2_file;
  std::string builtin;
  std::optional<int> n;
};

struct CommonOpts {
  std::string format = "table";
  AnalysisOptions analysis;
};

void add_source_flags(CLI::App* cmd, SourceOpts& src) {
  cmd->add_option("--preset", src.preset_name,
                  "named scheme with reference values (see README)");
  cmd->add_option("--c2-file", src.c2_file,
                  "generator matrix file for the component code C2");
  cmd->add_option("--builtin", src.builtin,
                  "built-in component code (golay24, rm-<r>-<m>, ...)");
  cmd->add_option("--n", src.n,
                  "expected dimension n (validated against the code length)");
}

void add_common_flags(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--format", c.format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--seed", c.analysis.seed, "seed for randomized checks");
  cmd->add_option("--trials", c.analysis.trials,
                  "pair samples for the sampled closure check");
  cmd->add_option("--enum-budget", c.analysis.enum_budget,
                  "max codewords enumerated per component code");
  cmd->add_option("--quotient-budget", c.analysis.quotient_budget,
                  "max quotient points materialized");
  cmd->add_option("--pair-budget", c.analysis.pair_budget,
                  "max point pairs scanned");
}

// Resolve the component code and build the coupled scheme. Returns the
// preset spec alongside when one was named so expectations can be checked.
MainCode build_scheme(const SourceOpts& src, const CommonOpts& opt,
                      std::optional<PresetSpec>& spec_out) {
  const int given = !src.preset_name.empty() + !src.c2_file.empty() +
                    !src.builtin.empty();
  if (given == 0)
    throw ValidationError("one of --preset, --c2-file or --builtin is required");
  auto check_n = [&](const BinaryCode& c2) {
    if (src.n && c2.length() != *src.n)
      throw ValidationError("--n " + std::to_string(*src.n) +
                            " does not match the component code length " +
                            std::to_string(c2.length()));
    return c2;
  };
  if (!src.preset_name.empty()) {
    const PresetSpec& spec = preset(src.preset_name);
    spec_out = spec;
    std::optional<std::string> file_override;
    if (!src.c2_file.empty()) file_override = src.c2_file;
    return MainCode::coupled3(check_n(
        resolve_preset_code(spec, file_override, opt.analysis.enum_budget)));
  }
  if (given > 1)
    throw ValidationError("--c2-file and --builtin are mutually exclusive");
  if (!src.c2_file.empty()) {
    LoadedCode loaded = load_code(src.c2_file, opt.analysis.enum_budget);
    for (const auto& w : loaded.warnings)
      std::cerr << "warning: " << w << "\n";
    return MainCode::coupled3(check_n(loaded.code));
  }
  return MainCode::coupled3(check_n(builtin_code(src.builtin)));
}

int run_code_info(const SourceOpts& src, const CommonOpts& opt) {
  BinaryCode code = [&] {
    if (!src.builtin.empty()) return builtin_code(src.builtin);
    if (!src.c2_file.empty()) {
      LoadedCode loaded = load_code(src.c2_file, opt.analysis.enum_budget);
      for (const auto& w : loaded.warnings)
        std::cerr << "warning: " << w << "\n";
      return loaded.code;
    }
    throw ValidationError("code-info needs --builtin or --file");
  }();

  CodeSummary s = summarize_code(code, opt.analysis.enum_budget);
  std::optional<std::vector<uint64_t>> wenum;
  try {
    wenum = weight_enumerator(code, opt.analysis.enum_budget);
  } catch (const BudgetExceeded&) {
  }

  const std::string source =
      !src.builtin.empty() ? src.builtin : src.c2_file;
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = "cstar-code-v1";
    j["source"] = source;
    nlohmann::ordered_json body = to_json(s);
    for (auto& [k, v] : body.items()) j[k] = v;
    j["weight_enumerator"] =
        wenum ? nlohmann::ordered_json(*wenum) : nlohmann::ordered_json(nullptr);
    std::cout << j.dump(2) << "\n";
    return kOk;
  }

  std::string dims = "[" + std::to_string(s.n) + "," + std::to_string(s.k);
  if (s.min_distance) dims += "," + std::to_string(*s.min_distance);
  dims += "]";
  std::cout << source << ": " << dims;
  if (s.min_distance)
    std::cout << " (d " << s.distance_status << ")";
  else
    std::cout << " (d unknown: enumeration over budget)";
  std::cout << "\n";
  std::cout << "self-orthogonal: " << (s.self_orthogonal ? "yes" : "no") << "\n";
  std::cout << "self-dual: " << (s.self_dual ? "yes" : "no") << "\n";
  std::cout << "contains all-ones: " << (s.contains_all_ones ? "yes" : "no")
            << "\n";
  if (wenum) {
    std::cout << "weight enumerator:";
    for (size_t w = 0; w < wenum->size(); ++w)
      if ((*wenum)[w]) std::cout << " A" << w << "=" << (*wenum)[w];
    std::cout << "\n";
  }
  return kOk;
}

int run_analyze(const SourceOpts& src, const CommonOpts& opt) {
  std::optional<PresetSpec> spec;
  MainCode scheme = build_scheme(src, opt, spec);
  AnalysisResult r = analyze_scheme(scheme, opt.analysis);
  if (spec) {
    r.preset = spec->name;
    check_expectations(r, *spec);
  }

  if (opt.format == "json")
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_table(r);

  if (r.match == MatchStatus::mismatched) return kMismatch;
  if (r.is_lattice == Tri::unknown && !r.d_min_sq) return kBudget;
  return kOk;
}

int run_find_counterexample(const SourceOpts& src, const CommonOpts& opt,
                            uint64_t budget) {
  std::optional<PresetSpec> spec;
  MainCode scheme = build_scheme(src, opt, spec);
  auto witness = counterexample_search(scheme, budget, opt.analysis.seed,
                                       opt.analysis.quotient_budget);
  auto vec = [](const std::vector<int64_t>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = "cstar-counterexample-v1";
    j["scheme"] = scheme.describe();
    j["seed"] = opt.analysis.seed;
    j["budget"] = budget;
    if (witness) {
      nlohmann::ordered_json w;
      w["a"] = witness->a;
      w["b"] = witness->b;
      w["sum"] = witness->sum();
      j["witness"] = w;
    } else {
      j["witness"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
  } else if (witness) {
    std::cout << "counterexample: " << vec(witness->a) << " + "
              << vec(witness->b) << " = " << vec(witness->sum())
              << " is outside the constellation\n";
  } else {
    std::cout << "no counterexample found within " << budget << " checks\n";
  }
  return witness ? kOk : kNoWitness;
}

int run_reference_table(const CommonOpts& opt) {
  std::vector<TableRow> rows = reference_table(opt.analysis);
  if (opt.format == "json")
    std::cout << to_json(rows).dump(2) << "\n";
  else
    std::cout << to_table(rows);
  for (const auto& row : rows)
    if (row.result && row.result->match == MatchStatus::mismatched)
      return kMismatch;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multilevel constellations from binary linear codes"};
  app.require_subcommand(1);

  SourceOpts info_src;
  CommonOpts info_opt;
  auto* info = app.add_subcommand("code-info",
                                  "parameters and predicates of one code");
  info->add_option("--builtin", info_src.builtin, "built-in code name");
  info->add_option("--file", info_src.c2_file, "generator matrix file");
  info->add_option("--enum-budget", info_opt.analysis.enum_budget,
                   "max codewords enumerated");
  info->add_option("--format", info_opt.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  SourceOpts an_src;
  CommonOpts an_opt;
  auto* an = app.add_subcommand("analyze",
                                "full lattice/distance/packing analysis of a "
                                "coupled three-level scheme");
  add_source_flags(an, an_src);
  add_common_flags(an, an_opt);

  SourceOpts cx_src;
  CommonOpts cx_opt;
  uint64_t cx_budget = 1000000;
  auto* cx = app.add_subcommand("find-counterexample",
                                "search for an additivity violation");
  add_source_flags(cx, cx_src);
  add_common_flags(cx, cx_opt);
  cx->add_option("--budget", cx_budget, "max membership checks spent");

  CommonOpts tbl_opt;
  auto* tbl = app.add_subcommand("paper-table",
                                 "analyze every preset and compare against "
                                 "the reference values");
  add_common_flags(tbl, tbl_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (info->parsed()) return run_code_info(info_src, info_opt);
    if (an->parsed()) return run_analyze(an_src, an_opt);
    if (cx->parsed()) return run_find_counterexample(cx_src, cx_opt, cx_budget);
    if (tbl->parsed()) return run_reference_table(tbl_opt);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
