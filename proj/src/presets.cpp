#include "cstar/presets.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "cstar/catalog.hpp"
#include "cstar/errors.hpp"

namespace cstar {

const std::vector<PresetSpec>& presets() {
  static const std::vector<PresetSpec> table = [] {
    std::vector<PresetSpec> t;

    {
      PresetSpec p;
      p.name = "dim4_rm12";
      p.n = 4;
      p.source = "rm-1-2";
      p.require_k = 3;
      p.require_d = 2;
      p.expect_lattice = false;
      // RM(1,2) is even but not self-orthogonal (<0011, 0101> = 1), so the
      // constellation contains cross-level pairs differing by (+-1,...,+-1):
      // for example 2*(0,0,1,1) and (1,1,1,1) + 2*(0,1,0,1) + 4*(0,1,0,0)
      // sit at squared distance 4. The published figures (d^2 = 8, the D4
      // density pi^2/16, gamma = sqrt 2) implicitly assume the cross-level
      // bound of the self-orthogonal case and overstate the packing.
      p.expect_d_sq = 4;
      p.expect_density = std::numbers::pi * std::numbers::pi / 64.0;
      p.density_tol = 1e-9;
      p.expect_hermite = std::exp2(-0.5);
      p.hermite_tol = 1e-9;
      p.published_d_sq = 8;
      p.published_density = std::numbers::pi * std::numbers::pi / 16.0;
      p.published_hermite = std::sqrt(2.0);
      p.comment = "smallest non-lattice instance of the coupled scheme";
      t.push_back(p);
    }
    {
      PresetSpec p;
      p.name = "dim8_e8";
      p.n = 8;
      p.source = "extended-hamming8";
      p.require_k = 4;
      p.require_d = 4;
      p.require_self_dual = true;
      p.expect_lattice = true;
      p.expect_d_sq = 16;
      p.expect_density = 0.25367;
      p.density_tol = 5e-5;
      p.expect_hermite = 2.0;
      p.hermite_tol = 1e-9;
      p.comment = "rescaled E8 (densest possible packing in dimension 8)";
      t.push_back(p);
    }
    {
      PresetSpec p;
      p.name = "dim14_selfdual";
      p.n = 14;
      p.from_file = true;
      p.source = "c2_14_7_4.txt";
      p.require_k = 7;
      p.require_d = 4;
      p.require_self_dual = true;
      p.expect_lattice = true;
      p.expect_d_sq = 16;
      p.expect_hermite = 2.0;
      p.hermite_tol = 0.0;  // exact power-of-two volume, computed exactly
      p.comment = "best known lattice packing in dimension 14 has gamma ~ 2.4886";
      t.push_back(p);
    }
    {
      PresetSpec p;
      p.name = "dim18_nonlattice";
      p.n = 18;
      p.from_file = true;
      p.source = "c2_18_9_6.txt";
      p.require_k = 9;
      p.require_d = 6;
      p.expect_lattice = false;
      // A [18,9,6] code cannot be self-orthogonal (it would be self-dual,
      // and no self-dual [18,9] code has distance 6), so cross-level pairs
      // at squared distance n = 18 exist and undercut the published
      // min{9 + 17, 4*6, 32} = 24 (gamma 3.0, the best known in dimension
      // 18).
      p.expect_d_sq = 18;
      p.expect_hermite = 2.25;
      p.hermite_tol = 0.0;  // 18 / 2^3, exact power-of-two volume
      p.published_d_sq = 24;
      p.published_hermite = 3.0;
      p.comment = "non-lattice constellation from the unique [18,9,6] code";
      t.push_back(p);
    }
    {
      PresetSpec p;
      p.name = "dim24_leech";
      p.n = 24;
      p.source = "golay24";
      p.require_k = 12;
      p.require_d = 8;
      p.require_self_dual = true;
      p.expect_lattice = true;
      p.expect_d_sq = 32;
      p.expect_hermite = 4.0;
      p.hermite_tol = 1e-9;
      p.comment = "Leech-lattice density via the extended Golay code";
      t.push_back(p);
    }
    {
      PresetSpec p;
      p.name = "dim32_bw";
      p.n = 32;
      p.source = "rm-2-5";
      p.require_k = 16;
      p.require_d = 8;
      p.require_self_dual = true;
      p.expect_lattice = true;
      p.expect_d_sq = 32;
      p.expect_hermite = 4.0;
      p.hermite_tol = 1e-9;
      p.comment = "Barnes-Wall-type packing from the second-order Reed-Muller code";
      t.push_back(p);
    }
    {
      PresetSpec p;
      p.name = "dim40_extremal";
      p.n = 40;
      p.from_file = true;
      p.source = "c2_40_20_8.txt";
      p.require_k = 20;
      p.require_d = 8;
      p.require_self_dual = true;
      p.expect_lattice = true;
      p.expect_d_sq = 32;
      p.expect_hermite = 4.0;
      p.hermite_tol = 1e-9;
      p.comment = "extremal self-dual [40,20,8] code";
      t.push_back(p);
    }
    {
      PresetSpec p;
      p.name = "dim40_nonlattice";
      p.n = 40;
      p.from_file = true;
      p.source = "c2_40_23_8.txt";
      p.require_k = 23;
      p.require_d = 8;
      p.expect_lattice = false;
      p.expect_d_sq = 32;
      // 32 / 2^(2*57/40); disagrees with the published 4.287, which is
      // surfaced as a documented discrepancy.
      p.expect_hermite = 32.0 * std::exp2(-57.0 / 20.0);
      p.hermite_tol = 1e-9;
      p.published_hermite = 4.287;
      p.comment = "denser-than-lattice constellation claim in dimension 40";
      t.push_back(p);
    }
    return t;
  }();
  return table;
}

const PresetSpec& preset(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  if (name.rfind("dim16", 0) == 0)
    throw ValidationError(
        "no preset is defined for n = 16: whether the coupled scheme can "
        "match the best known packing there is an open question");
  std::string known;
  for (const auto& p : presets()) known += (known.empty() ? "" : ", ") + p.name;
  throw ValidationError("unknown preset '" + name + "' (known: " + known + ")");
}

std::string data_dir() {
  if (const char* env = std::getenv("CSTAR_DATA_DIR"); env && *env)
    return env;
  return "data";
}

BinaryCode resolve_preset_code(const PresetSpec& spec,
                               const std::optional<std::string>& file_override,
                               uint64_t enum_budget) {
  BinaryCode code = [&] {
    if (!spec.from_file && !file_override)
      return builtin_code(spec.source);
    const std::string path =
        file_override ? *file_override : data_dir() + "/" + spec.source;
    return load_code(path, enum_budget).code;
  }();

  if (code.length() != spec.n)
    throw ValidationError("preset " + spec.name + " needs a code of length " +
                          std::to_string(spec.n) + ", got " +
                          std::to_string(code.length()));
  if (code.dimension() != spec.require_k)
    throw ValidationError("preset " + spec.name + " needs dimension " +
                          std::to_string(spec.require_k) + ", got " +
                          std::to_string(code.dimension()));
  if (spec.require_d) {
    int d;
    try {
      d = min_hamming_distance(code, enum_budget);
    } catch (const BudgetExceeded&) {
      throw ValidationError("preset " + spec.name +
                            ": minimum distance could not be verified within "
                            "the enumeration budget and none was asserted");
    }
    if (d != *spec.require_d)
      throw ValidationError("preset " + spec.name + " needs minimum distance " +
                            std::to_string(*spec.require_d) + ", got " +
                            std::to_string(d));
  }
  if (spec.require_self_dual && !is_self_dual(code))
    throw ValidationError("preset " + spec.name + " needs a self-dual code");
  return code;
}

}  // namespace cstar
