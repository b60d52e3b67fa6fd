// End-to-end acceptance suite: one line per criterion, [PASS]/[FAIL]/[SKIP].
// Exits nonzero iff any criterion fails. Tolerances and runtime caps are
// pinned inline at each check. Criteria that depend on optional matrix
// files under the data directory are skipped per missing file rather than
// failed.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cstar/analysis.hpp"
#include "cstar/catalog.hpp"
#include "cstar/presets.hpp"
#include "cstar/report.hpp"

using namespace cstar;

namespace {

int g_failed = 0;
int g_passed = 0;
int g_skipped = 0;

// Accumulates sub-check outcomes for one numbered criterion and prints a
// single verdict line (plus indented detail lines for anything notable).
class Criterion {
 public:
  Criterion(int id, std::string title, double time_cap_sec = 0)
      : id_(id),
        title_(std::move(title)),
        cap_(time_cap_sec),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) details_.push_back("failed: " + what);
  }

  void note(const std::string& line) { details_.push_back(line); }

  // Marks the whole criterion skipped (used when every input it depends on
  // is absent). Overridden by any recorded failure.
  void skip(const std::string& why) { skip_reason_ = why; }

  ~Criterion() {
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
    if (cap_ > 0 && secs > cap_) {
      char buf[128];
      std::snprintf(buf, sizeof(buf),
                    "failed: runtime %.1fs exceeds the %.0fs cap", secs, cap_);
      details_.push_back(buf);
    }
    bool failed = false;
    for (const auto& d : details_)
      if (d.rfind("failed:", 0) == 0) failed = true;

    const char* tag = failed ? "[FAIL]" : (skip_reason_ ? "[SKIP]" : "[PASS]");
    if (failed)
      ++g_failed;
    else if (skip_reason_)
      ++g_skipped;
    else
      ++g_passed;

    std::printf("%s %d. %s  (%d checks, %.2fs)\n", tag, id_, title_.c_str(),
                checks_, secs);
    if (skip_reason_ && !failed) std::printf("       %s\n", skip_reason_->c_str());
    for (const auto& d : details_) std::printf("       %s\n", d.c_str());
    std::fflush(stdout);
  }

 private:
  int id_;
  std::string title_;
  double cap_;
  std::chrono::steady_clock::time_point start_;
  int checks_ = 0;
  std::vector<std::string> details_;
  std::optional<std::string> skip_reason_;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt_point(const std::vector<int64_t>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Every linear subspace of F2^n (the zero code included), deduplicated by
// canonical generator matrix.
std::vector<BinaryCode> all_subspaces(int n) {
  std::vector<BinaryCode> out = {BinaryCode::zero_code(n)};
  std::map<std::string, bool> seen;
  const int top = 1 << n;
  std::vector<int> picks;

  auto key = [](const BinaryCode& c) {
    std::string s;
    for (const auto& g : c.generator()) s += g.to_string() + "|";
    return s;
  };
  auto rec = [&](auto&& self, int start) -> void {
    if (!picks.empty()) {
      std::vector<BitWord> rows;
      for (int v : picks)
        rows.push_back(BitWord::from_limb(static_cast<uint64_t>(v), n));
      BinaryCode c = BinaryCode::from_rows(std::move(rows));
      if (auto k = key(c); !seen[k]) {
        seen[k] = true;
        out.push_back(c);
      }
    }
    if (static_cast<int>(picks.size()) == n) return;
    for (int v = start; v < top; ++v) {
      picks.push_back(v);
      self(self, v + 1);
      picks.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

BitWord random_word(int n, std::mt19937_64& rng) {
  BitWord w(n);
  for (int i = 0; i < n; ++i) w.set(i, (rng() >> 17) & 1);
  return w;
}

std::string generator_key(const BinaryCode& c) {
  std::string s;
  for (const auto& g : c.generator()) s += g.to_string() + "|";
  return s;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& cli, const std::string& args) {
  RunResult r;
  std::string cmd = cli + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), p)) > 0) r.output.append(buf, got);
  int st = pclose(p);
  if (WIFEXITED(st)) r.exit_code = WEXITSTATUS(st);
  return r;
}

// ---------------------------------------------------------------------------

void criterion1() {
  Criterion cr(1, "E8 reproduction from the [8,4,4] extended Hamming code",
               10.0);
  try {
    const PresetSpec& spec = preset("dim8_e8");
    AnalysisOptions opt;
    AnalysisResult r =
        analyze_scheme(build_coupled_scheme(resolve_preset_code(spec, {})), opt);
    check_expectations(r, spec);

    cr.require(r.theorem2 && r.theorem2->is_lattice == Tri::yes,
               "theorem2 declares the scheme a lattice");
    cr.require(r.closure &&
                   r.closure->method == CheckMethod::exhaustive_closure &&
                   r.closure->is_lattice == Tri::yes,
               "exhaustive closure scan confirms a lattice");
    cr.require(r.points && *r.points == 4096,
               "quotient has 4096 points, got " +
                   (r.points ? std::to_string(*r.points) : std::string("none")));
    cr.require(r.d_exhaustive && *r.d_exhaustive == 16,
               "exhaustive d_min_sq == 16");
    cr.require(r.d_formula && *r.d_formula == 16, "level formula gives 16");
    cr.require(r.d_status == "formula+verified",
               "the two distance computations corroborate");
    cr.require(r.packing && std::abs(r.packing->density - 0.25367) <= 5e-5,
               "density within 5e-5 of 0.25367, got " +
                   (r.packing ? fmt(r.packing->density) : std::string("none")));
    cr.require(r.packing && std::abs(r.packing->hermite - 2.0) <= 1e-9,
               "Hermite parameter == 2 within 1e-9, got " +
                   (r.packing ? fmt(r.packing->hermite) : std::string("none")));
    cr.require(r.match == MatchStatus::matched,
               "all reference values matched, status: " +
                   std::string(to_string(r.match)));
  } catch (const std::exception& e) {
    cr.require(false, std::string("unexpected exception: ") + e.what());
  }
}

void criterion2() {
  Criterion cr(2, "dimension-4 non-lattice scheme from RM(1,2)", 5.0);
  try {
    const PresetSpec& spec = preset("dim4_rm12");
    MainCode m = build_coupled_scheme(resolve_preset_code(spec, {}));
    AnalysisOptions opt;
    AnalysisResult r = analyze_scheme(m, opt);
    check_expectations(r, spec);

    cr.require(r.is_lattice == Tri::no, "scheme is not a lattice");
    cr.require(r.witness && verify_witness(m, *r.witness),
               "a closure-violating pair is produced and re-verified");
    if (r.witness)
      cr.note("witness: " + fmt_point(r.witness->a) + " + " +
              fmt_point(r.witness->b) + " = " + fmt_point(r.witness->sum()) +
              ", which is outside the constellation");

    const std::vector<int64_t> a = {4, 6, 0, 2};
    const std::vector<int64_t> b = {4, 4, 2, 2};
    const std::vector<int64_t> s = {8, 10, 2, 4};
    cr.require(m.contains(a) && m.contains(b) && !m.contains(s),
               "(4,6,0,2) and (4,4,2,2) are members but their sum "
               "(8,10,2,4) is not");

    // Required reference values for this scheme: d_min_sq == 8 and density
    // pi^2/16 ~= 0.61685. Both are stated as-is and checked faithfully.
    // The constellation does not attain them: RM(1,2) is not
    // self-orthogonal, so points whose difference is +-1 in every
    // coordinate exist, giving squared distance n = 4 (witnessed below,
    // confirmed by the full pairwise scan and by the level formula). The
    // packing ball then has radius 1, not sqrt(2), scaling the density by
    // 2^-4 to pi^2/64.
    cr.require(r.d_exhaustive && *r.d_exhaustive == 8,
               "exhaustive d_min_sq == 8; computed " +
                   (r.d_exhaustive ? std::to_string(*r.d_exhaustive)
                                   : std::string("none")) +
                   " (full scan over all quotient point pairs; the level "
                   "formula agrees)");
    const double pi2_16 = std::numbers::pi * std::numbers::pi / 16.0;
    cr.require(std::abs(pi2_16 - 0.61685) <= 5e-6,
               "pi^2/16 is 0.61685 to five decimals");
    cr.require(r.packing && std::abs(r.packing->density - pi2_16) <= 1e-9,
               "density == pi^2/16 (~0.61685) within 1e-9; computed " +
                   (r.packing ? fmt(r.packing->density) : std::string("none")) +
                   " = pi^2/64, the direct consequence of d_min_sq = 4");
  } catch (const std::exception& e) {
    cr.require(false, std::string("unexpected exception: ") + e.what());
  }
}

void criterion3() {
  Criterion cr(3, "Leech-parameter scheme from the [24,12,8] Golay code",
               30.0);
  try {
    const PresetSpec& spec = preset("dim24_leech");
    BinaryCode g = resolve_preset_code(spec, {});
    cr.require(g.length() == 24 && g.dimension() == 12,
               "Golay code has parameters [24,12]");
    cr.require(min_hamming_distance(g) == 8, "Golay minimum distance is 8");
    cr.require(is_self_dual(g), "Golay code is self-dual");

    AnalysisOptions opt;
    AnalysisResult r = analyze_scheme(build_coupled_scheme(g), opt);
    check_expectations(r, spec);
    cr.require(r.theorem2 && r.theorem2->is_lattice == Tri::yes &&
                   r.is_lattice == Tri::yes,
               "theorem2 declares the scheme a lattice");
    cr.require(r.d_formula && *r.d_formula == 32, "level formula gives 32");
    cr.require(r.packing && std::abs(r.packing->hermite - 4.0) <= 1e-9,
               "Hermite parameter == 4 within 1e-9, got " +
                   (r.packing ? fmt(r.packing->hermite) : std::string("none")));
    cr.require(r.match == MatchStatus::matched,
               "all reference values matched, status: " +
                   std::string(to_string(r.match)));
  } catch (const std::exception& e) {
    cr.require(false, std::string("unexpected exception: ") + e.what());
  }
}

void criterion4() {
  Criterion cr(4, "dimension-32 scheme from RM(2,5)");
  try {
    const PresetSpec& spec = preset("dim32_bw");
    BinaryCode rm = resolve_preset_code(spec, {});
    cr.require(rm.length() == 32 && rm.dimension() == 16,
               "RM(2,5) has parameters [32,16]");
    cr.require(min_hamming_distance(rm) == 8, "RM(2,5) minimum distance is 8");
    cr.require(is_self_dual(rm), "RM(2,5) is self-dual");

    AnalysisOptions opt;
    AnalysisResult r = analyze_scheme(build_coupled_scheme(rm), opt);
    check_expectations(r, spec);
    cr.require(r.is_lattice == Tri::yes, "scheme is a lattice");
    cr.require(r.packing && std::abs(r.packing->hermite - 4.0) <= 1e-9,
               "Hermite parameter == 4 within 1e-9, got " +
                   (r.packing ? fmt(r.packing->hermite) : std::string("none")));
    cr.require(r.match == MatchStatus::matched,
               "all reference values matched, status: " +
                   std::string(to_string(r.match)));
  } catch (const std::exception& e) {
    cr.require(false, std::string("unexpected exception: ") + e.what());
  }
}

void criterion5() {
  Criterion cr(5, "file-based presets in dimensions 14, 18 and 40");
  try {
    int present = 0;

    auto analyze_preset = [&](const char* name) -> std::optional<AnalysisResult> {
      const PresetSpec& spec = preset(name);
      auto path = std::filesystem::path(data_dir()) / spec.source;
      if (!std::filesystem::exists(path)) {
        cr.note("skipped " + spec.name + ": " + path.string() +
                " not present");
        return std::nullopt;
      }
      ++present;
      AnalysisOptions opt;
      AnalysisResult r =
          analyze_scheme(build_coupled_scheme(resolve_preset_code(spec, {})),
                         opt);
      check_expectations(r, spec);
      return r;
    };

    if (auto r = analyze_preset("dim14_selfdual")) {
      cr.require(r->is_lattice == Tri::yes, "dim14: scheme is a lattice");
      cr.require(r->packing && r->packing->hermite == 2.0,
                 "dim14: Hermite parameter == 2 exactly, got " +
                     (r->packing ? fmt(r->packing->hermite)
                                 : std::string("none")));
      cr.require(r->match == MatchStatus::matched,
                 "dim14: reference values matched, status: " +
                     std::string(to_string(r->match)));
    }
    if (auto r = analyze_preset("dim18_nonlattice")) {
      cr.require(r->is_lattice == Tri::no, "dim18: scheme is not a lattice");
      cr.require(r->match == MatchStatus::flagged,
                 "dim18: divergences from the published figures are flagged, "
                 "status: " +
                     std::string(to_string(r->match)));
    }
    if (auto r = analyze_preset("dim40_extremal")) {
      cr.require(r->is_lattice == Tri::yes, "dim40 lattice: is a lattice");
      cr.require(r->packing &&
                     std::abs(r->packing->hermite - 4.0) <= 1e-9,
                 "dim40 lattice: Hermite parameter == 4 within 1e-9, got " +
                     (r->packing ? fmt(r->packing->hermite)
                                 : std::string("none")));
      cr.require(r->match == MatchStatus::matched,
                 "dim40 lattice: reference values matched, status: " +
                     std::string(to_string(r->match)));
    }
    if (auto r = analyze_preset("dim40_nonlattice")) {
      cr.require(r->is_lattice == Tri::no,
                 "dim40 non-lattice: is not a lattice");
      const double expected = 32.0 * std::exp2(-57.0 / 20.0);
      cr.require(r->packing &&
                     std::abs(r->packing->hermite - expected) <= 1e-9,
                 "dim40 non-lattice: Hermite parameter == 32 * 2^(-57/20) "
                 "within 1e-9, got " +
                     (r->packing ? fmt(r->packing->hermite)
                                 : std::string("none")));
      bool flagged_known = r->match == MatchStatus::flagged;
      bool mentions = false;
      for (const auto& n : r->match_notes)
        if (n.find("4.287") != std::string::npos) mentions = true;
      cr.require(flagged_known && mentions,
                 "dim40 non-lattice: divergence from the published 4.287 is "
                 "reported as a documented discrepancy");
    }

    if (present == 0)
      cr.skip("no component matrix files present under " + data_dir());
  } catch (const std::exception& e) {
    cr.require(false, std::string("unexpected exception: ") + e.what());
  }
}

void criterion6() {
  Criterion cr(6, "theorem2 verdict equals exhaustive closure on all F2^4 "
                  "subspaces", 60.0);
  try {
    auto spaces = all_subspaces(4);
    cr.require(spaces.size() == 67,
               "F2^4 has 67 subspaces, got " + std::to_string(spaces.size()));
    int agree = 0;
    for (const auto& c2 : spaces) {
      MainCode m = build_coupled_scheme(c2);
      LatticeVerdict by_theorem = theorem2_check(m);
      LatticeVerdict by_scan = closure_check_exhaustive(quotient(m));
      bool decided = by_theorem.is_lattice != Tri::unknown &&
                     by_scan.is_lattice != Tri::unknown;
      bool same = decided && by_theorem.is_lattice == by_scan.is_lattice;
      bool witness_ok =
          by_scan.is_lattice != Tri::no ||
          (by_scan.witness && verify_witness(m, *by_scan.witness));
      if (same && witness_ok) {
        ++agree;
      } else {
        cr.require(false, "verdicts disagree on C2 = {" + generator_key(c2) +
                              "}: theorem2 says " +
                              to_string(by_theorem.is_lattice) +
                              ", the scan says " +
                              to_string(by_scan.is_lattice));
      }
    }
    cr.require(agree == static_cast<int>(spaces.size()),
               "100% agreement, got " + std::to_string(agree) + "/" +
                   std::to_string(spaces.size()));
  } catch (const std::exception& e) {
    cr.require(false, std::string("unexpected exception: ") + e.what());
  }
}

void criterion7() {
  Criterion cr(7, "level formula equals exhaustive minimum distance");
  try {
    auto spaces = all_subspaces(4);
    int agree = 0;
    for (const auto& c2 : spaces) {
      MainCode m = build_coupled_scheme(c2);
      uint64_t by_formula = min_dist_level_formula(m);
      // Most of these schemes are not closed under addition, so the scan
      // must cover all point pairs.
      uint64_t by_scan = min_dist_exhaustive(quotient(m), false);
      if (by_formula == by_scan) {
        ++agree;
      } else {
        cr.require(false, "formula " + std::to_string(by_formula) +
                              " != exhaustive " + std::to_string(by_scan) +
                              " on C2 = {" + generator_key(c2) + "}");
      }
    }
    cr.require(agree == static_cast<int>(spaces.size()),
               "agreement on all " + std::to_string(spaces.size()) +
                   " subspaces of F2^4, got " + std::to_string(agree));

    MainCode e8 = build_coupled_scheme(
        resolve_preset_code(preset("dim8_e8"), {}));
    uint64_t f = min_dist_level_formula(e8);
    // This scheme is a lattice (criterion 1), so the single-pass scan over
    // nonzero points is exact.
    uint64_t x = min_dist_exhaustive(quotient(e8), true);
    cr.require(f == 16 && x == 16,
               "dim8_e8: formula and exhaustive scan both give 16, got " +
                   std::to_string(f) + " and " + std::to_string(x));
  } catch (const std::exception& e) {
    cr.require(false, std::string("unexpected exception: ") + e.what());
  }
}

void criterion8() {
  Criterion cr(8, "algebraic property suite");
  try {
    // Carry identity x + y = (x xor y) + 2 (x and y), coordinatewise, on
    // 10^4 seeded random pairs across word lengths up to 192.
    {
      std::mt19937_64 rng(20250819);
      int bad = 0;
      for (int t = 0; t < 10000; ++t) {
        int n = 1 + static_cast<int>(rng() % 192);
        BitWord a = random_word(n, rng), b = random_word(n, rng);
        BitWord x = a ^ b, s = schur(a, b);
        for (int i = 0; i < n; ++i)
          if (static_cast<int>(a.get(i)) + static_cast<int>(b.get(i)) !=
              static_cast<int>(x.get(i)) + 2 * static_cast<int>(s.get(i)))
            ++bad;
      }
      cr.require(bad == 0, "carry identity holds on 10^4 random pairs, " +
                               std::to_string(bad) + " coordinate failures");
    }

    // Dual involution and the dimension identity on 100 random codes.
    {
      std::mt19937_64 rng(20250820);
      int bad = 0;
      for (int t = 0; t < 100; ++t) {
        int n = 1 + static_cast<int>(rng() % 14);
        int k = static_cast<int>(rng() % (n + 1));
        std::vector<BitWord> rows;
        for (int i = 0; i < k; ++i) rows.push_back(random_word(n, rng));
        BinaryCode c = rows.empty() ? BinaryCode::zero_code(n)
                                    : BinaryCode::from_rows(std::move(rows));
        BinaryCode d = dual(c);
        if (generator_key(dual(d)) != generator_key(c)) ++bad;
        if (c.dimension() + d.dimension() != n) ++bad;
      }
      cr.require(bad == 0,
                 "dual involution and dim(C) + dim(C-perp) = n on 100 random "
                 "codes, " + std::to_string(bad) + " failures");
    }

    // Reed-Muller nesting and duality for m <= 5.
    {
      bool ok = true;
      for (int m = 1; m <= 5; ++m) {
        for (int r = 0; r + 1 <= m; ++r) {
          BinaryCode lo = reed_muller(r, m), hi = reed_muller(r + 1, m);
          for (const auto& g : lo.generator())
            if (!hi.contains(g)) ok = false;
        }
        for (int r = 0; r <= m - 1; ++r)
          if (generator_key(dual(reed_muller(r, m))) !=
              generator_key(reed_muller(m - r - 1, m)))
            ok = false;
      }
      cr.require(ok, "RM(r,m) nests in RM(r+1,m) and dualizes to "
                     "RM(m-r-1,m) for m <= 5");
    }

    // Self-orthogonal codes have even-weight-only enumerators; checked on
    // known self-orthogonal codes plus every self-orthogonal code found in
    // a random sample.
    {
      std::vector<BinaryCode> pool = {repetition(2), repetition(4),
                                      repetition(8), extended_hamming8(),
                                      reed_muller(1, 4), golay24()};
      std::mt19937_64 rng(20250821);
      int found = 0;
      for (int t = 0; t < 1500; ++t) {
        int n = 2 + static_cast<int>(rng() % 9);
        int k = 1 + static_cast<int>(rng() % (n / 2 > 0 ? n / 2 : 1));
        std::vector<BitWord> rows;
        for (int i = 0; i < k; ++i) rows.push_back(random_word(n, rng));
        BinaryCode c = BinaryCode::from_rows(std::move(rows));
        if (is_self_orthogonal(c) && c.dimension() > 0) {
          pool.push_back(c);
          ++found;
        }
      }
      cr.require(found >= 20, "random sample yields at least 20 "
                 "self-orthogonal codes, got " + std::to_string(found));
      int bad = 0;
      for (const auto& c : pool) {
        if (!is_self_orthogonal(c)) ++bad;
        auto we = weight_enumerator(c);
        for (size_t w = 1; w < we.size(); w += 2)
          if (we[w] != 0) ++bad;
      }
      cr.require(bad == 0, "every self-orthogonal code has an even-weight "
                 "enumerator (" + std::to_string(pool.size()) +
                 " codes checked)");
    }

    // Independently built Construction C equals the quotient of the
    // product main code on 20 random instances.
    {
      std::mt19937_64 rng(20250822);
      int bad = 0;
      for (int t = 0; t < 20; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);
        int levels = 1 + static_cast<int>(rng() % 3);
        std::vector<BinaryCode> cs;
        for (int l = 0; l < levels; ++l) {
          int k = static_cast<int>(rng() % (n + 1));
          std::vector<BitWord> rows;
          for (int i = 0; i < k; ++i) rows.push_back(random_word(n, rng));
          cs.push_back(rows.empty()
                           ? BinaryCode::zero_code(n)
                           : BinaryCode::from_rows(std::move(rows)));
        }
        ConstellationQuotient direct = construction_c(cs);
        ConstellationQuotient via_main = quotient(MainCode::product(cs));
        if (direct.points().size() != via_main.points().size()) {
          ++bad;
          continue;
        }
        for (size_t i = 0; i < direct.points().size(); ++i)
          if (direct.points()[i].plane != via_main.points()[i].plane) ++bad;
      }
      cr.require(bad == 0, "construction_c == quotient(product) as point "
                 "sets on 20 random instances, " + std::to_string(bad) +
                 " mismatches");
    }
  } catch (const std::exception& e) {
    cr.require(false, std::string("unexpected exception: ") + e.what());
  }
}

void criterion9() {
  Criterion cr(9, "byte-identical deterministic output");
  try {
    const char* cli = std::getenv("CSTAR_CLI");
    cr.require(cli != nullptr, "CSTAR_CLI points at the command-line binary");
    if (cli) {
      const std::string args =
          "analyze --preset dim4_rm12 --format json --seed 7";
      RunResult a = run_cli(cli, args);
      RunResult b = run_cli(cli, args);
      cr.require(a.exit_code == 0 && b.exit_code == 0,
                 "both runs exit 0, got " + std::to_string(a.exit_code) +
                     " and " + std::to_string(b.exit_code));
      cr.require(!a.output.empty() && a.output == b.output,
                 "two runs with the same seed produce byte-identical output");
    }
  } catch (const std::exception& e) {
    cr.require(false, std::string("unexpected exception: ") + e.what());
  }
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();

  std::printf("\n%d passed, %d failed, %d skipped\n", g_passed, g_failed,
              g_skipped);
  return g_failed == 0 ? 0 : 1;
}
