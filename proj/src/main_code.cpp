#include "cstar/main_code.hpp"

#include <algorithm>
#include <cmath>

#include "cstar/errors.hpp"

namespace cstar {

namespace {

void check_shape(int n, int levels) {
  if (n < 1 || n > 64)
    throw std::invalid_argument("per-level length n must be in [1, 64]");
  if (levels < 1 || levels > 4)
    throw std::invalid_argument("number of levels must be in [1, 4]");
  if (n * levels > BitWord::kMaxLen)
    throw std::invalid_argument("n * levels may not exceed 192");
}

}  // namespace

MainCode MainCode::coupled3(BinaryCode c2) {
  const int n = c2.length();
  if (n % 2 != 0)
    throw std::invalid_argument("the coupled scheme requires even n");
  check_shape(n, 3);
  return MainCode(n, 3, Coupled3{std::move(c2)});
}

MainCode MainCode::product(std::vector<BinaryCode> levels) {
  if (levels.empty() || levels.size() > 4)
    throw std::invalid_argument("product main code needs 1 to 4 level codes");
  const int n = levels[0].length();
  for (const auto& c : levels)
    if (c.length() != n)
      throw std::invalid_argument("level codes must share one length");
  check_shape(n, static_cast<int>(levels.size()));
  const int count = static_cast<int>(levels.size());
  return MainCode(n, count, Product{std::move(levels)});
}

MainCode MainCode::explicit_linear(BinaryCode code, int n, int levels) {
  check_shape(n, levels);
  if (code.length() != n * levels)
    throw std::invalid_argument("explicit main code must have length n * levels");
  return MainCode(n, levels, Explicit{std::move(code)});
}

MainCode MainCode::explicit_set(std::vector<BitWord> words, int n, int levels) {
  check_shape(n, levels);
  if (words.empty())
    throw std::invalid_argument("explicit main code set may not be empty");
  for (const auto& w : words)
    if (w.length() != n * levels)
      throw std::invalid_argument("explicit codewords must have length n * levels");
  std::sort(words.begin(), words.end(),
            [](const BitWord& a, const BitWord& b) { return lex_less(a, b); });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return MainCode(n, levels, ExplicitSet{std::move(words)});
}

double MainCode::log2_codeword_count() const {
  if (auto* c = as_coupled3()) return c->c2.dimension() + n_;
  if (auto* p = as_product()) {
    int k = 0;
    for (const auto& c : p->levels) k += c.dimension();
    return k;
  }
  if (auto* e = as_explicit()) return e->code.dimension();
  return std::log2(static_cast<double>(as_explicit_set()->words.size()));
}

std::optional<uint64_t> MainCode::codeword_count() const {
  if (auto* s = as_explicit_set()) return s->words.size();
  double k = log2_codeword_count();
  if (k > 63.5) return std::nullopt;
  return uint64_t{1} << static_cast<int>(k);
}

bool MainCode::contains_residues(const std::array<uint64_t, 4>& plane) const {
  const uint64_t nmask = low_mask(n_);
  for (int i = levels_; i < 4; ++i)
    if (plane[i] & nmask) return false;  // digits must be < 2^levels
  for (int i = 0; i < 4; ++i)
    if (plane[i] & ~nmask)
      throw std::invalid_argument("residue planes have bits beyond n");

  if (auto* c = as_coupled3()) {
    const uint64_t c1 = plane[0];
    if (c1 != 0 && c1 != nmask) return false;       // level 1 is repetition
    if (!c->c2.contains(BitWord::from_limb(plane[1], n_))) return false;
    const int parity = std::popcount(plane[2]) & 1;  // level 3 parity tied to c1
    return parity == (c1 == 0 ? 0 : 1);
  }
  if (auto* p = as_product()) {
    for (int i = 0; i < levels_; ++i)
      if (!p->levels[static_cast<size_t>(i)].contains(
              BitWord::from_limb(plane[i], n_)))
        return false;
    return true;
  }

  BitWord w(n_ * levels_);
  for (int i = 0; i < levels_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((plane[i] >> j) & 1) w.set(i * n_ + j, true);
  if (auto* e = as_explicit()) return e->code.contains(w);
  const auto& words = as_explicit_set()->words;
  return std::binary_search(
      words.begin(), words.end(), w,
      [](const BitWord& a, const BitWord& b) { return lex_less(a, b); });
}

bool MainCode::contains(std::span<const int64_t> point) const {
  if (static_cast<int>(point.size()) != n_)
    throw std::invalid_argument("point dimension does not match n");
  const int64_t m = int64_t{1} << levels_;
  std::array<uint64_t, 4> plane{};
  for (int j = 0; j < n_; ++j) {
    int64_t d = ((point[static_cast<size_t>(j)] % m) + m) % m;
    for (int i = 0; i < levels_; ++i)
      if ((d >> i) & 1) plane[static_cast<size_t>(i)] |= uint64_t{1} << j;
  }
  return contains_residues(plane);
}

std::optional<std::vector<BitWord>> MainCode::linear_generator() const {
  const int width = n_ * levels_;
  auto block_word = [&](int level, const BitWord& w) {
    BitWord out(width);
    for (int j = 0; j < n_; ++j)
      if (w.get(j)) out.set(level * n_ + j, true);
    return out;
  };

  if (auto* c = as_coupled3()) {
    std::vector<BitWord> rows;
    for (const auto& g : c->c2.generator()) rows.push_back(block_word(1, g));
    // Even-weight words are free at level 3...
    for (int j = 0; j + 1 < n_; ++j) {
      BitWord pair(n_);
      pair.set(j, true);
      pair.set(j + 1, true);
      rows.push_back(block_word(2, pair));
    }
    // ...and flipping level 1 to all-ones flips the level-3 parity.
    BitWord tie = block_word(0, BitWord::ones(n_));
    tie.set(2 * n_, true);
    rows.push_back(tie);
    return rows;
  }
  if (auto* p = as_product()) {
    std::vector<BitWord> rows;
    for (int i = 0; i < levels_; ++i)
      for (const auto& g : p->levels[static_cast<size_t>(i)].generator())
        rows.push_back(block_word(i, g));
    return rows;
  }
  if (auto* e = as_explicit()) return e->code.generator();
  return std::nullopt;
}

std::string MainCode::describe() const {
  auto dims = [](const BinaryCode& c) {
    return "[" + std::to_string(c.length()) + "," +
           std::to_string(c.dimension()) + "]";
  };
  if (auto* c = as_coupled3()) return "coupled3(C2=" + dims(c->c2) + ")";
  if (auto* p = as_product()) {
    std::string s = "product(";
    for (size_t i = 0; i < p->levels.size(); ++i)
      s += (i ? ", " : "") + dims(p->levels[i]);
    return s + ")";
  }
  if (auto* e = as_explicit())
    return "explicit(" + dims(e->code) + ", levels=" + std::to_string(levels_) + ")";
  return "explicit-set(" + std::to_string(as_explicit_set()->words.size()) +
         " words, levels=" + std::to_string(levels_) + ")";
}

}  // namespace cstar
