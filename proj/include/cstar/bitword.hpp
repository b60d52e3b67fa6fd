#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cstar/util.hpp"

namespace cstar {

// Fixed-length word over F2, up to 192 coordinates, packed into three
// 64-bit limbs. Coordinate 0 is the leftmost character in the text
// representation and the lowest bit of limb 0. Bits above length() are
// kept zero as a class invariant, so whole-limb operations (xor, and,
// popcount) never need per-call masking.
class BitWord {
 public:
  static constexpr int kMaxLen = 192;

  BitWord() : len_(0), limb_{0, 0, 0} {}

  explicit BitWord(int len) : len_(len), limb_{0, 0, 0} { check_len(len); }

  static BitWord zeros(int len) { return BitWord(len); }

  static BitWord ones(int len) {
    BitWord w(len);
    for (int i = 0; i < 3; ++i) {
      int take = len - 64 * i;
      if (take > 0) w.limb_[i] = low_mask(take > 64 ? 64 : take);
    }
    return w;
  }

  // Low `len` bits of a single limb; bit 0 becomes coordinate 0.
  static BitWord from_limb(uint64_t bits, int len) {
    if (len > 64) throw std::invalid_argument("from_limb: length exceeds 64");
    BitWord w(len);
    w.limb_[0] = bits & low_mask(len);
    return w;
  }

  static BitWord from_string(std::string_view s) {
    BitWord w(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        w.set(static_cast<int>(i), true);
      else if (s[i] != '0')
        throw std::invalid_argument("binary word may contain only '0'/'1'");
    }
    return w;
  }

  int length() const { return len_; }

  bool get(int i) const {
    check_index(i);
    return (limb_[i >> 6] >> (i & 63)) & 1;
  }

  void set(int i, bool v) {
    check_index(i);
    uint64_t bit = uint64_t{1} << (i & 63);
    if (v)
      limb_[i >> 6] |= bit;
    else
      limb_[i >> 6] &= ~bit;
  }

  uint64_t limb(int i) const { return limb_[i]; }

  // Single-limb view for words of length <= 64 (the common case for
  // component codes; hot loops work on these directly).
  uint64_t as_limb() const {
    if (len_ > 64) throw std::logic_error("as_limb: word longer than 64");
    return limb_[0];
  }

  BitWord& operator^=(const BitWord& o) {
    check_same(o);
    limb_[0] ^= o.limb_[0];
    limb_[1] ^= o.limb_[1];
    limb_[2] ^= o.limb_[2];
    return *this;
  }

  BitWord& operator&=(const BitWord& o) {
    check_same(o);
    limb_[0] &= o.limb_[0];
    limb_[1] &= o.limb_[1];
    limb_[2] &= o.limb_[2];
    return *this;
  }

  friend BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }
  friend BitWord operator&(BitWord a, const BitWord& b) { return a &= b; }

  int weight() const {
    return std::popcount(limb_[0]) + std::popcount(limb_[1]) +
           std::popcount(limb_[2]);
  }

  // Weight parity: 0 even, 1 odd.
  int parity() const { return weight() & 1; }

  bool is_zero() const { return (limb_[0] | limb_[1] | limb_[2]) == 0; }

  bool all_ones() const { return *this == ones(len_); }

  friend bool operator==(const BitWord&, const BitWord&) = default;

  // Lexicographic order reading coordinates left to right with 0 < 1
  // (i.e. the order of the text representation).
  friend bool lex_less(const BitWord& a, const BitWord& b) {
    a.check_same(b);
    for (int i = 0; i < 3; ++i) {
      uint64_t diff = a.limb_[i] ^ b.limb_[i];
      if (diff) {
        int j = std::countr_zero(diff);
        return ((a.limb_[i] >> j) & 1) == 0;
      }
    }
    return false;
  }

  // Index of the first set coordinate, or length() if zero.
  int leading_bit() const {
    for (int i = 0; i < 3; ++i)
      if (limb_[i]) return 64 * i + std::countr_zero(limb_[i]);
    return len_;
  }

  std::string to_string() const {
    std::string s(static_cast<size_t>(len_), '0');
    for (int i = 0; i < len_; ++i)
      if (get(i)) s[static_cast<size_t>(i)] = '1';
    return s;
  }

  // Coordinates [pos, pos+len) as a new word.
  BitWord subword(int pos, int len) const {
    if (pos < 0 || len < 0 || pos + len > len_)
      throw std::invalid_argument("subword: range out of bounds");
    BitWord w(len);
    for (int i = 0; i < len; ++i)
      if (get(pos + i)) w.set(i, true);
    return w;
  }

  BitWord concat(const BitWord& tail) const {
    BitWord w(len_ + tail.len_);
    for (int i = 0; i < len_; ++i)
      if (get(i)) w.set(i, true);
    for (int i = 0; i < tail.len_; ++i)
      if (tail.get(i)) w.set(len_ + i, true);
    return w;
  }

 private:
  static void check_len(int len) {
    if (len < 0 || len > kMaxLen)
      throw std::invalid_argument("word length must be in [0, 192]");
  }
  void check_index(int i) const {
    if (i < 0 || i >= len_)
      throw std::out_of_range("coordinate index out of range");
  }
  void check_same(const BitWord& o) const {
    if (len_ != o.len_)
      throw std::invalid_argument("length mismatch between binary words");
  }

  int len_;
  std::array<uint64_t, 3> limb_;
};

// Standard inner product over F2: parity of the coordinatewise AND.
inline int inner_product(const BitWord& a, const BitWord& b) {
  return (a & b).parity();
}

// Schur (coordinatewise) product.
inline BitWord schur(const BitWord& a, const BitWord& b) { return a & b; }

// Decomposition of an integer sum of 0/1 vectors: x + y = (x xor y) + 2*(x and y)
// holds coordinatewise over the integers.
struct CarryParts {
  BitWord xor_part;
  BitWord carry;
};

inline CarryParts carry_decompose(const BitWord& x, const BitWord& y) {
  return CarryParts{x ^ y, x & y};
}

}  // namespace cstar
