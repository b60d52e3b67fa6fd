#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cstar/quotient.hpp"

namespace cstar {

enum class Tri { yes, no, unknown };

const char* to_string(Tri t);

enum class CheckMethod {
  theorem2,            // exact iff for the coupled scheme
  theorem1_sufficient, // chain + Schur closure; proves yes, never no
  exhaustive_closure,  // full pair scan of the quotient
  sampled_closure,     // randomized pair sampling; proves no, never yes
};

const char* to_string(CheckMethod m);

// A pair of constellation residues whose integer sum leaves the
// constellation - the certificate that it is not a lattice.
struct WitnessPair {
  std::vector<int64_t> a;
  std::vector<int64_t> b;

  std::vector<int64_t> sum() const;
};

struct LatticeVerdict {
  Tri is_lattice = Tri::unknown;
  CheckMethod method;
  std::optional<WitnessPair> witness;  // present only for is_lattice == no
  std::string notes;
};

// True iff a and b are members and a+b is not; every verdict carrying a
// witness has had it re-checked through this.
bool verify_witness(const MainCode& main, const WitnessPair& w);

// Exact lattice test for the coupled scheme: the constellation is a
// lattice iff C2 is self-orthogonal and contains the all-ones word.
// Throws for other main code bodies.
LatticeVerdict theorem2_check(const MainCode& main);

// Sufficient condition for a general main code: the chain
// C_1 <= S_2(0) <= C_2 <= ... <= S_L(0) <= C_L must hold with each
// projection Schur-closed into the next antiprojection at zero. Verified
// exactly on generator bases (the Schur product is bilinear over F2 and
// every target here is linear, so basis pairs decide set closure).
// Returns yes or unknown, never no; on unknown the failing link is named
// in the notes.
LatticeVerdict theorem1_check(const MainCode& main);

// Brute-force closure of the quotient under digit-wise addition mod 2^L.
// Scans all unordered point pairs (diagonal included) in lexicographic
// order, so a returned witness is the lexicographically smallest violating
// pair. Exact: decides latticeness of the full constellation.
LatticeVerdict closure_check_exhaustive(const ConstellationQuotient& q,
                                        uint64_t pair_budget = kDefaultPairBudget);

// Randomized closure probe: `trials` independent pairs of uniform random
// codewords. Finds witnesses for non-lattices with high probability but
// can only ever answer no or unknown. Deterministic for a fixed seed.
LatticeVerdict closure_check_sampled(const MainCode& main, uint64_t trials,
                                     uint64_t seed);

// Minimum squared Euclidean distance of the constellation, computed on the
// quotient with folded per-digit norms and capped at 2^(2L) (the distance
// between translates of one point). When the point set is known to be
// additively closed the scan is a single pass over nonzero points;
// otherwise all pairs are examined (subject to pair_budget).
uint64_t min_dist_exhaustive(const ConstellationQuotient& q,
                             bool additively_closed,
                             uint64_t pair_budget = kDefaultPairBudget);

// Level-wise minimum distance of the coupled scheme:
//   min{ cross, 4 * d_H(C2), 32 }
// where cross = 9 + (n-1) when C2 is self-orthogonal (the best cross-level
// difference is then one digit at distance 3 and the rest at 1) and
// cross = n otherwise (all digits can sit at distance 1 exactly when some
// u, v in C2 have |supp(v) \ supp(u)| odd, which happens iff C2 is not
// self-orthogonal). The 32 term is 16 * 2: level-3 words of one parity
// class differ in at least two places. Exact; cross-validated against
// min_dist_exhaustive by the test suite. The 4*d_H term needs d_H(C2), so
// the C2 distance must be computable within enum_budget or previously
// asserted.
uint64_t min_dist_level_formula(const MainCode& main,
                                uint64_t enum_budget = kDefaultEnumBudget);

enum class DminStatus { exhaustive, formula, formula_verified };

const char* to_string(DminStatus s);

// Geometry of a constellation with 2^log2_points points per cube of side
// 2^levels: packing radius sqrt(d_min_sq)/2, density, and Hermite
// parameter d_min_sq / V^{2/n} with V the volume per point. Powers of two
// with integral exponents are computed exactly.
struct PackingReport {
  int n = 0;
  int levels = 0;
  uint64_t d_min_sq = 0;
  DminStatus d_status = DminStatus::exhaustive;
  double log2_points = 0;
  double log2_volume_per_point = 0;
  double density = 0;
  double hermite = 0;
};

PackingReport packing_report(int n, int levels, double log2_points,
                             uint64_t d_min_sq, DminStatus d_status);

// Hunt for a closure violation: first an ordered exhaustive pass over the
// quotient (when it is materializable), then seeded random pairs, spending
// at most `check_budget` membership tests in total. Absence of a witness
// is "none found", not a proof of closure.
std::optional<WitnessPair> counterexample_search(
    const MainCode& main, uint64_t check_budget, uint64_t seed,
    uint64_t quotient_budget = kDefaultQuotientBudget);

}  // namespace cstar
