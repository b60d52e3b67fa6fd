#include "cstar/gf2.hpp"

#include <bit>
#include <numeric>
#include <utility>

#include "cstar/errors.hpp"

namespace cstar::gf2 {

namespace {

std::vector<int> eliminate(std::vector<BitWord>& rows,
                           std::span<const int> order) {
  std::vector<int> pivots;
  size_t rank = 0;
  for (int col : order) {
    size_t pivot_row = rank;
    while (pivot_row < rows.size() && !rows[pivot_row].get(col)) ++pivot_row;
    if (pivot_row == rows.size()) continue;
    std::swap(rows[rank], rows[pivot_row]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

}  // namespace

std::vector<int> rref(std::vector<BitWord>& rows) {
  if (rows.empty()) return {};
  std::vector<int> order(static_cast<size_t>(rows[0].length()));
  std::iota(order.begin(), order.end(), 0);
  return eliminate(rows, order);
}

std::vector<int> rref_ordered(std::vector<BitWord>& rows,
                              std::span<const int> column_order) {
  return eliminate(rows, column_order);
}

BitWord reduce(BitWord w, const std::vector<BitWord>& rows,
               const std::vector<int>& pivots) {
  for (size_t r = 0; r < rows.size(); ++r)
    if (w.get(pivots[r])) w ^= rows[r];
  return w;
}

std::vector<BitWord> enumerate_span(const std::vector<BitWord>& rows,
                                    uint64_t budget) {
  const int k = static_cast<int>(rows.size());
  const int n = rows.empty() ? 0 : rows[0].length();
  if (k >= 64 || (uint64_t{1} << k) > budget)
    throw BudgetExceeded("span enumeration over 2^" + std::to_string(k) +
                         " words exceeds budget");
  std::vector<uint64_t> gens(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) gens[i] = rows[i].as_limb();

  std::vector<BitWord> out;
  out.reserve(uint64_t{1} << k);
  uint64_t w = 0;
  out.push_back(BitWord::from_limb(0, n));
  for (uint64_t i = 1; i < (uint64_t{1} << k); ++i) {
    w ^= gens[static_cast<size_t>(std::countr_zero(i))];
    out.push_back(BitWord::from_limb(w, n));
  }
  return out;
}

}  // namespace cstar::gf2
