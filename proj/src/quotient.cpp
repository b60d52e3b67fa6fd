#include "cstar/quotient.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

#include "cstar/errors.hpp"
#include "cstar/gf2.hpp"

namespace cstar {

bool point_less(const QuotientPoint& a, const QuotientPoint& b) {
  uint64_t any = (a.plane[0] ^ b.plane[0]) | (a.plane[1] ^ b.plane[1]) |
                 (a.plane[2] ^ b.plane[2]) | (a.plane[3] ^ b.plane[3]);
  if (!any) return false;
  const int j = std::countr_zero(any);
  unsigned da = 0, db = 0;
  for (int i = 0; i < 4; ++i) {
    da |= ((a.plane[i] >> j) & 1) << i;
    db |= ((b.plane[i] >> j) & 1) << i;
  }
  return da < db;
}

QuotientPoint add_mod(const QuotientPoint& a, const QuotientPoint& b,
                      int levels) {
  QuotientPoint out;
  uint64_t carry = 0;
  for (int i = 0; i < levels; ++i) {
    const uint64_t x = a.plane[i], y = b.plane[i];
    out.plane[i] = x ^ y ^ carry;
    carry = (x & y) | (carry & (x ^ y));
  }
  return out;
}

QuotientPoint sub_mod(const QuotientPoint& a, const QuotientPoint& b,
                      int levels) {
  QuotientPoint out;
  uint64_t borrow = 0;
  for (int i = 0; i < levels; ++i) {
    const uint64_t x = a.plane[i], y = b.plane[i];
    out.plane[i] = x ^ y ^ borrow;
    borrow = (~x & y) | (~(x ^ y) & borrow);
  }
  return out;
}

uint64_t folded_sq_norm(const QuotientPoint& p, int n, int levels) {
  const uint64_t nmask = low_mask(n);
  const int m = 1 << levels;
  uint64_t total = 0;
  for (int digit = 1; digit < m; ++digit) {
    uint64_t sel = nmask;
    for (int i = 0; i < levels; ++i)
      sel &= ((digit >> i) & 1) ? p.plane[i] : ~p.plane[i];
    const uint64_t folded =
        static_cast<uint64_t>(digit < m - digit ? digit : m - digit);
    total += static_cast<uint64_t>(std::popcount(sel)) * folded * folded;
  }
  return total;
}

std::vector<int64_t> to_digits(const QuotientPoint& p, int n) {
  std::vector<int64_t> out(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < 4; ++i)
      out[static_cast<size_t>(j)] |= static_cast<int64_t>((p.plane[i] >> j) & 1)
                                     << i;
  return out;
}

QuotientPoint from_integers(std::span<const int64_t> v, int levels) {
  if (v.size() > 64) throw std::invalid_argument("at most 64 coordinates");
  const int64_t m = int64_t{1} << levels;
  QuotientPoint p;
  for (size_t j = 0; j < v.size(); ++j) {
    const int64_t d = ((v[j] % m) + m) % m;
    for (int i = 0; i < levels; ++i)
      if ((d >> i) & 1) p.plane[static_cast<size_t>(i)] |= uint64_t{1} << j;
  }
  return p;
}

ConstellationQuotient::ConstellationQuotient(MainCode source,
                                             std::vector<QuotientPoint> points)
    : source_(std::move(source)), points_(std::move(points)) {
  std::sort(points_.begin(), points_.end(), point_less);
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool ConstellationQuotient::contains(const QuotientPoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p, point_less);
}

namespace {

void check_point_budget(const MainCode& main, uint64_t budget) {
  auto count = main.codeword_count();  // nullopt when beyond 2^63
  if (!count || *count > budget) {
    char log2s[32];
    std::snprintf(log2s, sizeof log2s, "%g", main.log2_codeword_count());
    throw BudgetExceeded("quotient would materialize 2^" + std::string(log2s) +
                         " points, over the budget of " +
                         std::to_string(budget));
  }
}

// enumerate_span cannot recover the ambient length from an empty basis, so
// the zero code's single word is built here.
std::vector<BitWord> span_words(const std::vector<BitWord>& rows, int n,
                                uint64_t budget) {
  if (rows.empty()) return {BitWord(n)};
  return gf2::enumerate_span(rows, budget);
}

}  // namespace

ConstellationQuotient quotient(const MainCode& main, uint64_t point_budget) {
  check_point_budget(main, point_budget);
  const int n = main.n();
  std::vector<QuotientPoint> pts;

  if (auto* c = main.as_coupled3()) {
    const int k = c->c2.dimension();
    std::vector<uint64_t> c2_rows;
    for (const auto& g : c->c2.generator()) c2_rows.push_back(g.as_limb());
    pts.reserve(uint64_t{2} << (k + n - 1));
    const uint64_t nmask = low_mask(n);
    for (int c1 = 0; c1 < 2; ++c1) {
      const uint64_t p0 = c1 ? nmask : 0;
      uint64_t w2 = 0;
      for (uint64_t a = 0; a < (uint64_t{1} << k); ++a) {
        if (a) w2 ^= c2_rows[static_cast<size_t>(std::countr_zero(a))];
        // Level 3 runs over one parity class: the even-weight code,
        // shifted by e_1 when c1 is all-ones.
        uint64_t w3 = c1 ? 1 : 0;
        pts.push_back(QuotientPoint{{p0, w2, w3, 0}});
        for (uint64_t b = 1; b < (uint64_t{1} << (n - 1)); ++b) {
          w3 ^= uint64_t{0b11} << std::countr_zero(b);
          pts.push_back(QuotientPoint{{p0, w2, w3, 0}});
        }
      }
    }
  } else if (auto* p = main.as_product()) {
    std::vector<std::vector<BitWord>> lists;
    for (const auto& code : p->levels)
      lists.push_back(span_words(code.generator(), n, point_budget));
    std::array<size_t, 4> idx{};
    const int L = main.levels();
    for (;;) {
      QuotientPoint q;
      for (int i = 0; i < L; ++i)
        q.plane[i] = lists[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]]
                         .as_limb();
      pts.push_back(q);
      int i = 0;
      while (i < L && ++idx[static_cast<size_t>(i)] ==
                          lists[static_cast<size_t>(i)].size()) {
        idx[static_cast<size_t>(i)] = 0;
        ++i;
      }
      if (i == L) break;
    }
  } else if (auto* e = main.as_explicit()) {
    const auto& gen = e->code.generator();
    const int k = static_cast<int>(gen.size());
    BitWord w(e->code.length());
    auto emit = [&](const BitWord& word) {
      QuotientPoint q;
      for (int i = 0; i < main.levels(); ++i)
        q.plane[static_cast<size_t>(i)] = word.subword(i * n, n).as_limb();
      pts.push_back(q);
    };
    emit(w);
    for (uint64_t a = 1; a < (uint64_t{1} << k); ++a) {
      w ^= gen[static_cast<size_t>(std::countr_zero(a))];
      emit(w);
    }
  } else {
    for (const auto& word : main.as_explicit_set()->words) {
      QuotientPoint q;
      for (int i = 0; i < main.levels(); ++i)
        q.plane[static_cast<size_t>(i)] = word.subword(i * n, n).as_limb();
      pts.push_back(q);
    }
  }

  return ConstellationQuotient(main, std::move(pts));
}

ConstellationQuotient construction_c(std::vector<BinaryCode> levels,
                                     uint64_t point_budget) {
  MainCode source = MainCode::product(levels);
  const int n = source.n();
  const int L = source.levels();
  check_point_budget(source, point_budget);

  std::vector<std::vector<BitWord>> lists;
  for (const auto& code : levels)
    lists.push_back(span_words(code.generator(), n, point_budget));

  std::vector<QuotientPoint> pts;
  std::vector<int64_t> digits(static_cast<size_t>(n));
  std::array<size_t, 4> idx{};
  for (;;) {
    std::fill(digits.begin(), digits.end(), 0);
    for (int i = 0; i < L; ++i) {
      const BitWord& w = lists[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
      for (int j = 0; j < n; ++j)
        digits[static_cast<size_t>(j)] += static_cast<int64_t>(w.get(j)) << i;
    }
    pts.push_back(from_integers(digits, L));
    int i = 0;
    while (i < L &&
           ++idx[static_cast<size_t>(i)] == lists[static_cast<size_t>(i)].size()) {
      idx[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == L) break;
  }
  return ConstellationQuotient(std::move(source), std::move(pts));
}

namespace {

void check_level(const MainCode& main, int level) {
  if (level < 1 || level > main.levels())
    throw std::invalid_argument("level index must be in [1, levels]");
}

std::vector<BitWord> sorted_unique(std::vector<BitWord> words) {
  std::sort(words.begin(), words.end(),
            [](const BitWord& a, const BitWord& b) { return lex_less(a, b); });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

}  // namespace

std::vector<BitWord> projection_code(const MainCode& main, int level,
                                     uint64_t budget) {
  check_level(main, level);
  const int n = main.n();
  const int block = (level - 1) * n;

  if (auto* s = main.as_explicit_set()) {
    std::vector<BitWord> words;
    words.reserve(s->words.size());
    for (const auto& w : s->words) words.push_back(w.subword(block, n));
    return sorted_unique(std::move(words));
  }

  // Linear: the projection is the span of the projected generators.
  const auto gen = *main.linear_generator();
  std::vector<BitWord> rows;
  for (const auto& g : gen) rows.push_back(g.subword(block, n));
  gf2::rref(rows);
  return sorted_unique(span_words(rows, n, budget));
}

std::vector<BitWord> antiprojection(const MainCode& main, int level,
                                    const std::vector<BitWord>& fixed,
                                    uint64_t budget) {
  check_level(main, level);
  const int n = main.n();
  const int L = main.levels();
  if (static_cast<int>(fixed.size()) != L - 1)
    throw std::invalid_argument("antiprojection needs the other L-1 blocks");
  for (const auto& w : fixed)
    if (w.length() != n)
      throw std::invalid_argument("fixed blocks must have length n");

  const int block = (level - 1) * n;

  if (auto* s = main.as_explicit_set()) {
    std::vector<BitWord> words;
    for (const auto& w : s->words) {
      bool match = true;
      for (int i = 0, f = 0; i < L && match; ++i) {
        if (i == level - 1) continue;
        match = w.subword(i * n, n) == fixed[static_cast<size_t>(f)];
        ++f;
      }
      if (match) words.push_back(w.subword(block, n));
    }
    return sorted_unique(std::move(words));
  }

  // Linear: run elimination with pivots restricted to the columns outside
  // the chosen block. Rows that survive with an outside pivot express the
  // fixed blocks; rows whose support sinks into the block span the
  // antiprojection at zero, and the reduction accumulates one particular
  // solution on the block coordinates.
  std::vector<BitWord> rows = *main.linear_generator();
  std::vector<int> outside;
  for (int col = 0; col < n * L; ++col)
    if (col < block || col >= block + n) outside.push_back(col);

  size_t rank = 0;
  std::vector<int> pivots;
  for (int col : outside) {
    size_t pr = rank;
    while (pr < rows.size() && !rows[pr].get(col)) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[rank], rows[pr]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    pivots.push_back(col);
    ++rank;
  }

  BitWord x(n * L);
  for (int i = 0, f = 0; i < L; ++i) {
    if (i == level - 1) continue;
    for (int j = 0; j < n; ++j)
      if (fixed[static_cast<size_t>(f)].get(j)) x.set(i * n + j, true);
    ++f;
  }
  for (size_t r = 0; r < rank; ++r)
    if (x.get(pivots[r])) x ^= rows[r];
  for (int col : outside)
    if (x.get(col)) return {};  // fixed blocks not reachable: empty fibre

  const BitWord particular = x.subword(block, n);
  std::vector<BitWord> kernel;
  for (size_t r = rank; r < rows.size(); ++r) {
    BitWord b = rows[r].subword(block, n);
    if (!b.is_zero()) kernel.push_back(std::move(b));
  }
  gf2::rref(kernel);

  std::vector<BitWord> words = span_words(kernel, n, budget);
  for (auto& w : words) w ^= particular;
  return sorted_unique(std::move(words));
}

}  // namespace cstar
