#include "cstar/binary_code.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cstar/errors.hpp"
#include "cstar/gf2.hpp"

namespace cstar {

BinaryCode::BinaryCode(int n, std::vector<BitWord> rows, std::vector<int> pivots)
    : n_(n),
      rows_(std::move(rows)),
      pivots_(std::move(pivots)),
      cache_(std::make_shared<Cache>()) {}

BinaryCode BinaryCode::from_rows(std::vector<BitWord> rows) {
  if (rows.empty())
    throw std::invalid_argument("a code needs at least one generator row");
  const int n = rows[0].length();
  if (n < 1 || n > kMaxLen)
    throw std::invalid_argument("code length must be in [1, 64]");
  for (const auto& r : rows)
    if (r.length() != n)
      throw std::invalid_argument("generator rows have inconsistent lengths");
  auto pivots = gf2::rref(rows);
  return BinaryCode(n, std::move(rows), std::move(pivots));
}

BinaryCode BinaryCode::zero_code(int n) {
  if (n < 1 || n > kMaxLen)
    throw std::invalid_argument("code length must be in [1, 64]");
  return BinaryCode(n, {}, {});
}

bool BinaryCode::contains(const BitWord& w) const {
  if (w.length() != n_)
    throw std::invalid_argument("word length does not match code length");
  return gf2::in_span(w, rows_, pivots_);
}

void BinaryCode::assert_min_distance(int d) const {
  if (d < 1 || d > n_)
    throw std::invalid_argument("asserted distance out of range");
  std::lock_guard lock(cache_->mu);
  if (cache_->distance && *cache_->distance != d) {
    throw ValidationError(
        "asserted minimum distance " + std::to_string(d) + " conflicts with " +
        (cache_->status == DistanceStatus::verified ? "computed" : "previously asserted") +
        " value " + std::to_string(*cache_->distance));
  }
  if (cache_->status == DistanceStatus::unknown) {
    cache_->distance = d;
    cache_->status = DistanceStatus::asserted;
  }
}

DistanceStatus BinaryCode::distance_status() const {
  std::lock_guard lock(cache_->mu);
  return cache_->status;
}

std::optional<int> BinaryCode::known_min_distance() const {
  std::lock_guard lock(cache_->mu);
  return cache_->distance;
}

BinaryCode dual(const BinaryCode& c) {
  const int n = c.length();
  const auto& gen = c.generator();
  const auto& pivots = c.pivots();

  // One dual generator per free column f: put 1 at f and copy column f of
  // the RREF generator into the pivot positions. Orthogonality is immediate
  // because each generator row has a 1 only at its own pivot.
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

  std::vector<BitWord> rows;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    BitWord w(n);
    w.set(f, true);
    for (size_t r = 0; r < gen.size(); ++r)
      if (gen[r].get(f)) w.set(pivots[r], true);
    rows.push_back(w);
  }
  if (rows.empty()) return BinaryCode::zero_code(n);
  return BinaryCode::from_rows(std::move(rows));
}

bool is_self_orthogonal(const BinaryCode& c) {
  const auto& gen = c.generator();
  for (size_t i = 0; i < gen.size(); ++i)
    for (size_t j = i; j < gen.size(); ++j)
      if (inner_product(gen[i], gen[j])) return false;
  return true;
}

bool is_self_dual(const BinaryCode& c) {
  return 2 * c.dimension() == c.length() && is_self_orthogonal(c);
}

namespace {

// Gray-code walk over all 2^k codewords; visit(word) is called for each
// nonzero codeword. Requires 2^k <= budget.
template <typename Visit>
void walk_codewords(const BinaryCode& c, uint64_t budget, Visit visit) {
  const int k = c.dimension();
  if (k >= 63 || (uint64_t{1} << k) > budget)
    throw BudgetExceeded("codeword enumeration over 2^" + std::to_string(k) +
                         " words exceeds budget " + std::to_string(budget));
  std::vector<uint64_t> gens;
  gens.reserve(c.generator().size());
  for (const auto& r : c.generator()) gens.push_back(r.as_limb());
  uint64_t w = 0;
  const uint64_t total = uint64_t{1} << k;
  for (uint64_t i = 1; i < total; ++i) {
    w ^= gens[static_cast<size_t>(std::countr_zero(i))];
    visit(w);
  }
}

}  // namespace

int min_hamming_distance(const BinaryCode& c, uint64_t enum_budget) {
  if (c.dimension() == 0)
    throw std::invalid_argument("minimum distance undefined for the zero code");
  {
    std::lock_guard lock(c.cache_->mu);
    if (c.cache_->status == DistanceStatus::verified) return *c.cache_->distance;
  }

  const int k = c.dimension();
  if (k >= 63 || (uint64_t{1} << k) > enum_budget) {
    std::lock_guard lock(c.cache_->mu);
    if (c.cache_->status == DistanceStatus::asserted) return *c.cache_->distance;
    throw BudgetExceeded("codeword enumeration over 2^" + std::to_string(k) +
                         " words exceeds budget " + std::to_string(enum_budget));
  }

  int best = c.length() + 1;
  walk_codewords(c, enum_budget, [&](uint64_t w) {
    int wt = std::popcount(w);
    if (wt < best) best = wt;
  });

  std::lock_guard lock(c.cache_->mu);
  if (c.cache_->status == DistanceStatus::asserted && *c.cache_->distance != best)
    throw ValidationError("asserted minimum distance " +
                          std::to_string(*c.cache_->distance) +
                          " disproved by enumeration: actual distance is " +
                          std::to_string(best));
  c.cache_->distance = best;
  c.cache_->status = DistanceStatus::verified;
  return best;
}

std::vector<uint64_t> weight_enumerator(const BinaryCode& c,
                                        uint64_t enum_budget) {
  {
    std::lock_guard lock(c.cache_->mu);
    if (c.cache_->enumerator) return *c.cache_->enumerator;
  }

  std::vector<uint64_t> counts(static_cast<size_t>(c.length()) + 1, 0);
  counts[0] = 1;  // the zero word
  walk_codewords(c, enum_budget,
                 [&](uint64_t w) { ++counts[static_cast<size_t>(std::popcount(w))]; });

  // The enumeration also settles the minimum distance; record it.
  int d = 0;
  for (size_t i = 1; i < counts.size(); ++i)
    if (counts[i]) { d = static_cast<int>(i); break; }

  std::lock_guard lock(c.cache_->mu);
  if (c.dimension() > 0 && d > 0) {
    if (c.cache_->status == DistanceStatus::asserted && *c.cache_->distance != d)
      throw ValidationError("asserted minimum distance " +
                            std::to_string(*c.cache_->distance) +
                            " disproved by enumeration: actual distance is " +
                            std::to_string(d));
    c.cache_->distance = d;
    c.cache_->status = DistanceStatus::verified;
  }
  c.cache_->enumerator = std::make_shared<const std::vector<uint64_t>>(counts);
  return counts;
}

}  // namespace cstar
