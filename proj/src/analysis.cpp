#include "cstar/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "cstar/errors.hpp"
#include "cstar/gf2.hpp"
#include "cstar/util.hpp"

namespace cstar {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    default: return "unknown";
  }
}

const char* to_string(CheckMethod m) {
  switch (m) {
    case CheckMethod::theorem2: return "theorem2";
    case CheckMethod::theorem1_sufficient: return "theorem1_sufficient";
    case CheckMethod::exhaustive_closure: return "exhaustive_closure";
    default: return "sampled_closure";
  }
}

const char* to_string(DminStatus s) {
  switch (s) {
    case DminStatus::exhaustive: return "exhaustive";
    case DminStatus::formula: return "formula";
    default: return "formula+verified";
  }
}

std::vector<int64_t> WitnessPair::sum() const {
  std::vector<int64_t> s(a.size());
  for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

bool verify_witness(const MainCode& main, const WitnessPair& w) {
  return main.contains(w.a) && main.contains(w.b) && !main.contains(w.sum());
}

namespace {

WitnessPair make_witness(const MainCode& main, const QuotientPoint& a,
                         const QuotientPoint& b) {
  WitnessPair w{to_digits(a, main.n()), to_digits(b, main.n())};
  if (!verify_witness(main, w))
    throw std::logic_error("internal error: closure witness failed re-verification");
  return w;
}

}  // namespace

LatticeVerdict theorem2_check(const MainCode& main) {
  auto* c = main.as_coupled3();
  if (!c)
    throw std::invalid_argument("theorem2_check applies to the coupled scheme only");
  const bool ortho = is_self_orthogonal(c->c2);
  const bool ones = c->c2.contains(BitWord::ones(main.n()));
  LatticeVerdict v;
  v.method = CheckMethod::theorem2;
  v.is_lattice = (ortho && ones) ? Tri::yes : Tri::no;
  v.notes = std::string("C2 self-orthogonal: ") + (ortho ? "yes" : "no") +
            "; all-ones word in C2: " + (ones ? "yes" : "no");
  return v;
}

namespace {

// A subspace of F2^n held in reduced form for membership queries.
struct Basis {
  std::vector<BitWord> rows;
  std::vector<int> pivots;

  static Basis of(std::vector<BitWord> r) {
    Basis b;
    b.rows = std::move(r);
    b.pivots = gf2::rref(b.rows);
    return b;
  }
  bool contains(const BitWord& w) const {
    return gf2::in_span(w, rows, pivots);
  }
};

// Basis of the level-i antiprojection at zero, S_i(0,...,0): eliminate on
// all columns outside block i; rows left without an outside pivot have
// support inside the block and span the fibre over zero.
Basis antiproj_zero_basis(const std::vector<BitWord>& gen, int n, int L,
                          int level) {
  std::vector<BitWord> rows = gen;
  const int block = (level - 1) * n;
  size_t rank = 0;
  for (int col = 0; col < n * L; ++col) {
    if (col >= block && col < block + n) continue;
    size_t pr = rank;
    while (pr < rows.size() && !rows[pr].get(col)) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[rank], rows[pr]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    ++rank;
  }
  std::vector<BitWord> inside;
  for (size_t r = rank; r < rows.size(); ++r) {
    BitWord b = rows[r].subword(block, n);
    if (!b.is_zero()) inside.push_back(std::move(b));
  }
  return Basis::of(std::move(inside));
}

Basis projection_basis(const std::vector<BitWord>& gen, int n, int level) {
  std::vector<BitWord> rows;
  rows.reserve(gen.size());
  for (const auto& g : gen) rows.push_back(g.subword((level - 1) * n, n));
  return Basis::of(std::move(rows));
}

}  // namespace

LatticeVerdict theorem1_check(const MainCode& main) {
  LatticeVerdict v;
  v.method = CheckMethod::theorem1_sufficient;

  auto gen = main.linear_generator();
  if (!gen) {
    v.notes = "main code is not linear; the chain condition requires a linear code";
    return v;
  }
  const int n = main.n();
  const int L = main.levels();

  std::vector<Basis> proj;
  for (int i = 1; i <= L; ++i) proj.push_back(projection_basis(*gen, n, i));

  for (int i = 2; i <= L; ++i) {
    const Basis s0 = antiproj_zero_basis(*gen, n, L, i);
    const Basis& lower = proj[static_cast<size_t>(i - 2)];
    const Basis& upper = proj[static_cast<size_t>(i - 1)];

    for (const auto& g : lower.rows) {
      if (!s0.contains(g)) {
        v.notes = "chain broken at link " + std::to_string(i - 1) + " -> " +
                  std::to_string(i) + ": projection C_" + std::to_string(i - 1) +
                  " is not contained in S_" + std::to_string(i) + "(0,...,0)";
        return v;
      }
    }
    for (const auto& s : s0.rows) {
      if (!upper.contains(s)) {
        // Cannot happen for a well-formed main code; surface it rather
        // than silently claiming success.
        v.notes = "S_" + std::to_string(i) + "(0,...,0) is not contained in C_" +
                  std::to_string(i);
        return v;
      }
    }
    for (size_t a = 0; a < lower.rows.size(); ++a) {
      for (size_t b = a; b < lower.rows.size(); ++b) {
        if (!s0.contains(schur(lower.rows[a], lower.rows[b]))) {
          v.notes = "Schur closure fails at link " + std::to_string(i - 1) +
                    " -> " + std::to_string(i) + ": a product of level-" +
                    std::to_string(i - 1) + " projection words leaves S_" +
                    std::to_string(i) + "(0,...,0)";
          return v;
        }
      }
    }
  }

  v.is_lattice = Tri::yes;
  v.notes = "chain containments and Schur closure hold at every link";
  return v;
}

LatticeVerdict closure_check_exhaustive(const ConstellationQuotient& q,
                                        uint64_t pair_budget) {
  const auto& pts = q.points();
  const uint64_t npts = pts.size();
  const uint64_t pairs = npts * (npts + 1) / 2;
  if (pairs > pair_budget)
    throw BudgetExceeded("closure scan needs " + std::to_string(pairs) +
                         " pair checks, over the budget of " +
                         std::to_string(pair_budget));

  LatticeVerdict v;
  v.method = CheckMethod::exhaustive_closure;
  const int L = q.levels();
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i; j < pts.size(); ++j) {
      if (!q.contains(add_mod(pts[i], pts[j], L))) {
        v.is_lattice = Tri::no;
        v.witness = make_witness(q.source(), pts[i], pts[j]);
        v.notes = "first violating pair in lexicographic scan order";
        return v;
      }
    }
  }
  v.is_lattice = Tri::yes;
  v.notes = "all " + std::to_string(pairs) +
            " unordered point pairs stay inside the quotient";
  return v;
}

namespace {

// Uniform random codeword of the main code, as quotient planes.
QuotientPoint random_point(const MainCode& main, SplitMix64& rng) {
  const int n = main.n();
  QuotientPoint p;

  auto span_sample = [&](const BinaryCode& code) -> uint64_t {
    uint64_t w = 0;
    uint64_t pick = rng.next_bits(code.dimension());
    const auto& gen = code.generator();
    while (pick) {
      int i = std::countr_zero(pick);
      pick &= pick - 1;
      w ^= gen[static_cast<size_t>(i)].as_limb();
    }
    return w;
  };

  if (auto* c = main.as_coupled3()) {
    const bool c1 = rng.next() & 1;
    p.plane[0] = c1 ? low_mask(n) : 0;
    p.plane[1] = span_sample(c->c2);
    uint64_t w3 = c1 ? 1 : 0;  // parity anchor
    uint64_t pick = rng.next_bits(n - 1);
    while (pick) {
      int i = std::countr_zero(pick);
      pick &= pick - 1;
      w3 ^= uint64_t{0b11} << i;  // adjacent-pair basis of the even code
    }
    p.plane[2] = w3;
    return p;
  }
  if (auto* pr = main.as_product()) {
    for (int i = 0; i < main.levels(); ++i)
      p.plane[static_cast<size_t>(i)] = span_sample(pr->levels[static_cast<size_t>(i)]);
    return p;
  }
  if (auto* e = main.as_explicit()) {
    BitWord w(e->code.length());
    uint64_t pick = rng.next_bits(e->code.dimension());
    while (pick) {
      int i = std::countr_zero(pick);
      pick &= pick - 1;
      w ^= e->code.generator()[static_cast<size_t>(i)];
    }
    for (int i = 0; i < main.levels(); ++i)
      p.plane[static_cast<size_t>(i)] = w.subword(i * n, n).as_limb();
    return p;
  }
  const auto& words = main.as_explicit_set()->words;
  const BitWord& w = words[static_cast<size_t>(rng.next_below(words.size()))];
  for (int i = 0; i < main.levels(); ++i)
    p.plane[static_cast<size_t>(i)] = w.subword(i * n, n).as_limb();
  return p;
}

}  // namespace

LatticeVerdict closure_check_sampled(const MainCode& main, uint64_t trials,
                                     uint64_t seed) {
  LatticeVerdict v;
  v.method = CheckMethod::sampled_closure;
  const int L = main.levels();
  for (uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_seed(seed, t));
    const QuotientPoint a = random_point(main, rng);
    const QuotientPoint b = random_point(main, rng);
    if (!main.contains_residues(add_mod(a, b, L).plane)) {
      v.is_lattice = Tri::no;
      v.witness = make_witness(main, a, b);
      v.notes = "violation at sampled trial " + std::to_string(t) + " (seed " +
                std::to_string(seed) + ")";
      return v;
    }
  }
  v.is_lattice = Tri::unknown;
  v.notes = "no violation among " + std::to_string(trials) +
            " sampled pairs (seed " + std::to_string(seed) + ")";
  return v;
}

uint64_t min_dist_exhaustive(const ConstellationQuotient& q,
                             bool additively_closed, uint64_t pair_budget) {
  const auto& pts = q.points();
  const int n = q.n();
  const int L = q.levels();
  const uint64_t cap = uint64_t{1} << (2 * L);  // translate of one point

  uint64_t best = cap;
  if (additively_closed) {
    // Differences of members are members: one pass over nonzero points.
    const QuotientPoint zero{};
    for (const auto& p : pts) {
      if (p == zero) continue;
      best = std::min(best, folded_sq_norm(p, n, L));
    }
    return best;
  }

  const uint64_t npts = pts.size();
  const uint64_t pairs = npts * (npts - 1) / 2;
  if (pairs > pair_budget)
    throw BudgetExceeded("distance scan needs " + std::to_string(pairs) +
                         " pair checks, over the budget of " +
                         std::to_string(pair_budget));
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      best = std::min(best, folded_sq_norm(sub_mod(pts[i], pts[j], L), n, L));
  return best;
}

uint64_t min_dist_level_formula(const MainCode& main, uint64_t enum_budget) {
  auto* c = main.as_coupled3();
  if (!c)
    throw std::invalid_argument(
        "min_dist_level_formula applies to the coupled scheme only");
  const int n = main.n();

  // Cross-level pairs differ by an odd digit in every coordinate, so they
  // cost at least 1 per coordinate.  An all-(+-1) difference needs second
  // level words u, v whose supports satisfy |v & ~u| odd, and such a pair
  // exists exactly when C2 is not self-orthogonal (take u = 0 against an
  // odd-weight word, or any pair with <u,v> = 1 when all weights are even).
  // A self-orthogonal C2 rules that out and the best cross-level difference
  // upgrades a single digit to +-3, costing 9 + (n - 1).
  const uint64_t best_cross =
      is_self_orthogonal(c->c2) ? uint64_t(n) + 8 : uint64_t(n);
  uint64_t best = best_cross;

  if (c->c2.dimension() > 0) {
    const uint64_t d2 = static_cast<uint64_t>(min_hamming_distance(c->c2, enum_budget));
    best = std::min(best, 4 * d2);
  }
  best = std::min(best, uint64_t{32});
  return best;
}

PackingReport packing_report(int n, int levels, double log2_points,
                             uint64_t d_min_sq, DminStatus d_status) {
  if (n < 1 || levels < 1 || d_min_sq < 1)
    throw std::invalid_argument("packing_report needs n, levels, d_min_sq >= 1");

  // exp2 with an exactness guarantee for integral exponents.
  auto exp2_exact = [](double e) {
    return (e == std::rint(e) && std::abs(e) < 1000)
               ? std::ldexp(1.0, static_cast<int>(e))
               : std::exp2(e);
  };

  PackingReport r;
  r.n = n;
  r.levels = levels;
  r.d_min_sq = d_min_sq;
  r.d_status = d_status;
  r.log2_points = log2_points;
  r.log2_volume_per_point = levels * n - log2_points;

  const double vn = std::pow(std::numbers::pi, n / 2.0) /
                    std::tgamma(n / 2.0 + 1.0);
  // density = points * V_n * (sqrt(d)/2)^n / 2^(levels*n)
  const double log2_scale =
      log2_points + n * (0.5 * std::log2(static_cast<double>(d_min_sq)) - 1.0) -
      levels * n;
  r.density = vn * exp2_exact(log2_scale);
  r.hermite = static_cast<double>(d_min_sq) *
              exp2_exact(-2.0 * r.log2_volume_per_point / n);
  return r;
}

std::optional<WitnessPair> counterexample_search(const MainCode& main,
                                                 uint64_t check_budget,
                                                 uint64_t seed,
                                                 uint64_t quotient_budget) {
  const int L = main.levels();
  uint64_t used = 0;
  bool truncated = true;  // stays true unless the exhaustive pass finishes

  try {
    const ConstellationQuotient q = quotient(main, quotient_budget);
    const auto& pts = q.points();
    for (size_t i = 0; i < pts.size() && used < check_budget; ++i) {
      for (size_t j = i; j < pts.size() && used < check_budget; ++j) {
        ++used;
        if (!q.contains(add_mod(pts[i], pts[j], L)))
          return make_witness(main, pts[i], pts[j]);
      }
    }
    truncated = used < pts.size() * (pts.size() + 1) / 2;
  } catch (const BudgetExceeded&) {
    // Quotient too large to materialize; go straight to sampling.
  }
  if (!truncated) return std::nullopt;  // every pair checked: provably closed

  for (uint64_t t = 0; used < check_budget; ++t, ++used) {
    SplitMix64 rng(derive_seed(seed, t));
    const QuotientPoint a = random_point(main, rng);
    const QuotientPoint b = random_point(main, rng);
    if (!main.contains_residues(add_mod(a, b, L).plane))
      return make_witness(main, a, b);
  }
  return std::nullopt;
}

}  // namespace cstar
