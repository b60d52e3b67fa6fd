#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cstar/binary_code.hpp"

namespace cstar {

// A main code selects which digit vectors (c_1, ..., c_L) a multilevel
// constellation may use: a point x in Z^n belongs to the constellation iff
// x = c_1 + 2 c_2 + ... + 2^{L-1} c_L (mod 2^L) coordinatewise with
// (c_1 | ... | c_L) in the main code, viewed as one word of length n*L.
//
// Bodies:
//   Coupled3    - the three-level coupled scheme over a component code C2:
//                 level 1 is {0^n, 1^n}, level 2 is C2, level 3 is all of
//                 F2^n restricted to even weight when c_1 = 0^n and odd
//                 weight when c_1 = 1^n. Linear, dimension dim(C2) + n.
//   Product     - independent level codes C_1 x ... x C_L (Construction C).
//   Explicit    - an arbitrary linear code of length n*L.
//   ExplicitSet - an arbitrary (possibly nonlinear) list of words.
class MainCode {
 public:
  struct Coupled3 {
    BinaryCode c2;
  };
  struct Product {
    std::vector<BinaryCode> levels;
  };
  struct Explicit {
    BinaryCode code;
  };
  struct ExplicitSet {
    std::vector<BitWord> words;  // sorted, unique, length n*levels
  };

  // The coupled three-level scheme; requires even n (the parity tie between
  // levels 1 and 3 needs the all-ones shift to preserve weight parity).
  static MainCode coupled3(BinaryCode c2);

  // Independent level codes, all of the same length; 1 to 4 levels.
  static MainCode product(std::vector<BinaryCode> levels);

  static MainCode explicit_linear(BinaryCode code, int n, int levels);

  static MainCode explicit_set(std::vector<BitWord> words, int n, int levels);

  int n() const { return n_; }
  int levels() const { return levels_; }

  bool is_linear() const {
    return !std::holds_alternative<ExplicitSet>(body_);
  }

  // log2 of the number of codewords; exact (an integer) for linear bodies.
  double log2_codeword_count() const;

  // Exact count when it fits in uint64.
  std::optional<uint64_t> codeword_count() const;

  // Membership of a residue vector given as bit planes: plane[i] holds bit i
  // of every digit (one coordinate per bit position, low n bits used).
  bool contains_residues(const std::array<uint64_t, 4>& plane) const;

  // Membership of an arbitrary integer vector: reduces mod 2^levels and
  // tests the digit word. Translation by 2^levels Z^n is invisible here,
  // matching the constellation's definition.
  bool contains(std::span<const int64_t> point) const;

  // Generator rows of the main code as words of length n*levels (level i
  // occupies coordinates [(i-1)n, in)). Empty for the zero main code;
  // nullopt when the body is not linear.
  std::optional<std::vector<BitWord>> linear_generator() const;

  const Coupled3* as_coupled3() const { return std::get_if<Coupled3>(&body_); }
  const Product* as_product() const { return std::get_if<Product>(&body_); }
  const Explicit* as_explicit() const { return std::get_if<Explicit>(&body_); }
  const ExplicitSet* as_explicit_set() const {
    return std::get_if<ExplicitSet>(&body_);
  }

  // Short human-readable form, e.g. "coupled3(C2=[8,4])".
  std::string describe() const;

 private:
  using Body = std::variant<Coupled3, Product, Explicit, ExplicitSet>;
  MainCode(int n, int levels, Body body)
      : n_(n), levels_(levels), body_(std::move(body)) {}

  int n_;
  int levels_;
  Body body_;
};

// Named constructor for the coupled scheme, matching the terminology used
// throughout the analysis layer.
inline MainCode build_coupled_scheme(BinaryCode c2) {
  return MainCode::coupled3(std::move(c2));
}

}  // namespace cstar
