#pragma once

#include <span>
#include <vector>

#include "cstar/bitword.hpp"

namespace cstar::gf2 {

// In-place reduced row echelon form. Zero rows are dropped; surviving rows
// end up sorted by pivot column, each pivot column holding a single 1.
// The result is the unique canonical basis of the row space, so two row
// sets span the same code iff their RREFs are identical. Returns the pivot
// columns in increasing order.
std::vector<int> rref(std::vector<BitWord>& rows);

// RREF processing columns in the given order instead of left to right.
// Used to eliminate "everything outside one block": list the other blocks'
// columns first and rows whose support lies inside the block of interest
// sink to the bottom. Returns pivot columns in elimination order.
std::vector<int> rref_ordered(std::vector<BitWord>& rows,
                              std::span<const int> column_order);

// Remainder of w after reduction by RREF rows (pivots as returned by rref).
BitWord reduce(BitWord w, const std::vector<BitWord>& rows,
               const std::vector<int>& pivots);

inline bool in_span(const BitWord& w, const std::vector<BitWord>& rows,
                    const std::vector<int>& pivots) {
  return reduce(w, rows, pivots).is_zero();
}

// All 2^k words of the span, in no particular order (Gray-code walk).
// Only valid for rows of length <= 64. Throws BudgetExceeded when the
// span has more than `budget` elements.
std::vector<BitWord> enumerate_span(const std::vector<BitWord>& rows,
                                    uint64_t budget);

}  // namespace cstar::gf2
