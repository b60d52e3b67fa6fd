#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cstar/main_code.hpp"

namespace cstar {

inline constexpr uint64_t kDefaultQuotientBudget = uint64_t{1} << 24;
inline constexpr uint64_t kDefaultPairBudget = uint64_t{1} << 26;

// One residue vector of (Z / 2^L Z)^n, n <= 64, stored as bit planes:
// plane[i] holds bit i of every digit, one coordinate per bit position.
// Planes at or above the level count are zero by invariant, which makes
// comparison independent of L.
struct QuotientPoint {
  std::array<uint64_t, 4> plane{};

  friend bool operator==(const QuotientPoint&, const QuotientPoint&) = default;
};

// Lexicographic order by coordinate, each coordinate compared as a digit.
bool point_less(const QuotientPoint& a, const QuotientPoint& b);

// Digit-wise sum / difference mod 2^levels (plane-parallel carry chains).
QuotientPoint add_mod(const QuotientPoint& a, const QuotientPoint& b, int levels);
QuotientPoint sub_mod(const QuotientPoint& a, const QuotientPoint& b, int levels);

// Squared Euclidean norm of the representative closest to the origin:
// per digit v, min(v, 2^levels - v)^2, summed over the n coordinates.
// This is exactly min ||x - y||^2 over integer points x, y with the given
// difference residue.
uint64_t folded_sq_norm(const QuotientPoint& p, int n, int levels);

std::vector<int64_t> to_digits(const QuotientPoint& p, int n);
QuotientPoint from_integers(std::span<const int64_t> v, int levels);

// The finite image of a constellation in (Z / 2^L Z)^n: one point per main
// codeword. Points are kept sorted, so membership is a binary search and
// scanning in order yields lexicographically minimal findings.
class ConstellationQuotient {
 public:
  ConstellationQuotient(MainCode source, std::vector<QuotientPoint> points);

  int n() const { return source_.n(); }
  int levels() const { return source_.levels(); }
  const std::vector<QuotientPoint>& points() const { return points_; }
  const MainCode& source() const { return source_; }

  bool contains(const QuotientPoint& p) const;

 private:
  MainCode source_;
  std::vector<QuotientPoint> points_;
};

// Materialize the quotient of a main code. Throws BudgetExceeded when the
// codeword count exceeds point_budget.
ConstellationQuotient quotient(const MainCode& main,
                               uint64_t point_budget = kDefaultQuotientBudget);

// Construction C: levels chosen independently, points c_1 + 2 c_2 + ... as
// plain integer digit arithmetic (no carries arise: each digit is already
// below 2^L). Deliberately built without going through quotient() so the
// two can be cross-checked against each other.
ConstellationQuotient construction_c(
    std::vector<BinaryCode> levels,
    uint64_t point_budget = kDefaultQuotientBudget);

// The level-i projection of the main code (set of level-i blocks of its
// codewords), i in [1, levels]. Sorted lexicographically.
std::vector<BitWord> projection_code(const MainCode& main, int level,
                                     uint64_t budget = kDefaultQuotientBudget);

// The level-i antiprojection: all level-i blocks completing the given
// fixed blocks (the other levels, in increasing level order) to a main
// codeword. Possibly empty; a coset of the level-i antiprojection at zero
// when the main code is linear.
std::vector<BitWord> antiprojection(const MainCode& main, int level,
                                    const std::vector<BitWord>& fixed,
                                    uint64_t budget = kDefaultQuotientBudget);

}  // namespace cstar
