#pragma once

#include <string>
#include <vector>

#include "cstar/binary_code.hpp"

namespace cstar {

// ---- built-in code families ------------------------------------------------

// [n, 1, n] repetition code.
BinaryCode repetition(int n);

// [n, n-1, 2] even-weight (single parity check) code.
BinaryCode parity_check(int n);

// Reed-Muller RM(r, m) of length 2^m via the (u, u+v) recursion.
// Requires 0 <= r <= m and 1 <= m <= 6.
BinaryCode reed_muller(int r, int m);

// [8, 4, 4] extended Hamming code (= RM(1, 3)); self-dual.
BinaryCode extended_hamming8();

// [24, 12, 8] extended binary Golay code, built from the length-23 cyclic
// code by an overall parity bit. Self-dual, 759 words of weight 8.
BinaryCode golay24();

// Look up a built-in by CLI name: "golay24", "extended-hamming8",
// "rm-<r>-<m>", "repetition-<n>", "parity-<n>". Throws ValidationError
// for unknown names.
BinaryCode builtin_code(const std::string& name);
std::vector<std::string> builtin_names();

// ---- generator-matrix files -------------------------------------------------

// Text format: one row per line, characters '0'/'1', leftmost character is
// coordinate 1. Blank lines and lines starting with '#' are ignored, except
// that a comment of the form "# d=<int>" asserts the minimum distance
// (checked by enumeration when feasible, see BinaryCode::assert_min_distance).
struct LoadedCode {
  BinaryCode code;
  int input_rows = 0;
  std::vector<std::string> warnings;  // e.g. dependent rows absorbed
};

LoadedCode load_code(const std::string& path,
                     uint64_t enum_budget = kDefaultEnumBudget);

// Raw codeword list (possibly nonlinear): same text format but the file
// must carry a "# explicit" marker line. Returns the de-duplicated words.
std::vector<BitWord> load_explicit_words(const std::string& path);

}  // namespace cstar
