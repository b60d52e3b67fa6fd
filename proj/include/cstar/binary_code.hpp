#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "cstar/bitword.hpp"

namespace cstar {

inline constexpr uint64_t kDefaultEnumBudget = uint64_t{1} << 28;

enum class DistanceStatus { unknown, asserted, verified };

// Binary linear [n, k] code, n <= 64, stored as the canonical RREF basis
// of its row space. Canonical form makes equality of codes a plain
// row-by-row comparison. Value semantics; copies share a small result
// cache (minimum distance, weight enumerator) guarded by a mutex.
class BinaryCode {
 public:
  static constexpr int kMaxLen = 64;

  // Span of the given rows (need not be independent; dependent rows are
  // absorbed). All rows must share a length in [1, 64].
  static BinaryCode from_rows(std::vector<BitWord> rows);

  // The [n, 0] code {0}.
  static BinaryCode zero_code(int n);

  int length() const { return n_; }
  int dimension() const { return static_cast<int>(rows_.size()); }

  const std::vector<BitWord>& generator() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const BitWord& w) const;

  // Codes are equal iff they are the same subspace of the same F2^n.
  friend bool operator==(const BinaryCode& a, const BinaryCode& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

  // Record an externally supplied minimum distance. It is trusted only
  // until an enumeration can check it: min_hamming_distance() throws
  // ValidationError if the assertion turns out to be wrong.
  void assert_min_distance(int d) const;

  DistanceStatus distance_status() const;
  std::optional<int> known_min_distance() const;

  friend int min_hamming_distance(const BinaryCode&, uint64_t);
  friend std::vector<uint64_t> weight_enumerator(const BinaryCode&, uint64_t);

 private:
  BinaryCode(int n, std::vector<BitWord> rows, std::vector<int> pivots);

  struct Cache {
    std::mutex mu;
    std::optional<int> distance;
    DistanceStatus status = DistanceStatus::unknown;
    std::shared_ptr<const std::vector<uint64_t>> enumerator;
  };

  int n_;
  std::vector<BitWord> rows_;   // canonical RREF, sorted by pivot
  std::vector<int> pivots_;
  std::shared_ptr<Cache> cache_;
};

// Dual code under the standard inner product; dim = n - k.
BinaryCode dual(const BinaryCode& c);

// C subset of its dual (equivalently G * G^T = 0).
bool is_self_orthogonal(const BinaryCode& c);

// C == dual(C) (equivalently self-orthogonal with k = n/2).
bool is_self_dual(const BinaryCode& c);

// Minimum Hamming weight of a nonzero codeword, by Gray-code enumeration
// of all 2^k codewords. Requires k >= 1. If 2^k exceeds the budget,
// returns a previously asserted value when one exists, otherwise throws
// BudgetExceeded. Verified results are cached on the code.
int min_hamming_distance(const BinaryCode& c,
                         uint64_t enum_budget = kDefaultEnumBudget);

// Full weight distribution A_0..A_n (sums to 2^k). Same budget rules,
// but there is no asserted fallback.
std::vector<uint64_t> weight_enumerator(
    const BinaryCode& c, uint64_t enum_budget = kDefaultEnumBudget);

}  // namespace cstar
