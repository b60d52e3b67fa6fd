#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "cstar/bitword.hpp"

using namespace cstar;

TEST_CASE("construction and round trip") {
  BitWord w = BitWord::from_string("10110");
  CHECK(w.length() == 5);
  CHECK(w.get(0));
  CHECK_FALSE(w.get(1));
  CHECK(w.get(2));
  CHECK(w.to_string() == "10110");
  CHECK(w.weight() == 3);
  CHECK(w.parity() == 1);

  CHECK(BitWord::zeros(7).is_zero());
  CHECK(BitWord::ones(7).weight() == 7);
  CHECK(BitWord::ones(7).all_ones());
  CHECK(BitWord::from_string("").length() == 0);
  CHECK_THROWS_AS(BitWord::from_string("10x"), std::invalid_argument);
  CHECK_THROWS_AS(BitWord(193), std::invalid_argument);
}

TEST_CASE("multi-limb words keep high bits clean") {
  // Lengths straddling the 64- and 128-bit limb boundaries.
  for (int len : {63, 64, 65, 127, 128, 129, 192}) {
    BitWord ones = BitWord::ones(len);
    CHECK(ones.weight() == len);
    BitWord w(len);
    w.set(len - 1, true);
    CHECK(w.weight() == 1);
    CHECK(w.leading_bit() == len - 1);
    CHECK((w ^ w).is_zero());
    CHECK(w.to_string().back() == '1');
  }
}

TEST_CASE("from_limb maps bit i to coordinate i") {
  BitWord w = BitWord::from_limb(0b1011, 6);
  CHECK(w.to_string() == "110100");
  CHECK(w.as_limb() == 0b1011);
  CHECK_THROWS_AS(BitWord::from_limb(0, 65), std::invalid_argument);
}

TEST_CASE("xor and schur") {
  BitWord a = BitWord::from_string("1011");
  BitWord b = BitWord::from_string("1101");
  CHECK((a ^ b).to_string() == "0110");
  CHECK(schur(a, b).to_string() == "1001");
  CHECK(schur(a, a) == a);
  CHECK(schur(a, BitWord::zeros(4)).is_zero());
  CHECK(inner_product(a, b) == 0);
  CHECK(inner_product(a, a) == 1);
  CHECK_THROWS_AS(a ^ BitWord::zeros(5), std::invalid_argument);
}

TEST_CASE("carry decomposition on fixed pairs") {
  auto [x, c] = carry_decompose(BitWord::from_string("11"),
                                BitWord::from_string("01"));
  CHECK(x.to_string() == "10");
  CHECK(c.to_string() == "01");

  BitWord w = BitWord::from_string("10101100");
  auto [x0, c0] = carry_decompose(w, BitWord::zeros(8));
  CHECK(x0 == w);
  CHECK(c0.is_zero());
}

TEST_CASE("carry identity x + y = (x xor y) + 2 (x and y), 10^4 random pairs") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 10000; ++trial) {
    int len = 1 + static_cast<int>(rng() % BitWord::kMaxLen);
    BitWord x(len), y(len);
    for (int i = 0; i < len; ++i) {
      x.set(i, rng() & 1);
      y.set(i, rng() & 1);
    }
    auto [xr, cr] = carry_decompose(x, y);
    for (int i = 0; i < len; ++i) {
      int lhs = int(x.get(i)) + int(y.get(i));
      int rhs = int(xr.get(i)) + 2 * int(cr.get(i));
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("lexicographic order matches string order") {
  std::vector<std::string> sorted = {"0010", "0101", "0110", "1000", "1001"};
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = 0; j < sorted.size(); ++j) {
      bool expect = sorted[i] < sorted[j];
      CHECK(lex_less(BitWord::from_string(sorted[i]),
                     BitWord::from_string(sorted[j])) == expect);
    }

  // Cross-limb comparison: equal first limb, difference in the second.
  // Coordinate 70 is the first difference; b holds '0' there, so b < a.
  BitWord a(100), b(100);
  a.set(70, true);
  b.set(71, true);
  CHECK(lex_less(b, a));
  CHECK_FALSE(lex_less(a, b));
  CHECK_FALSE(lex_less(a, a));
}

TEST_CASE("lex order random agreement with strings") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    int len = 1 + static_cast<int>(rng() % 150);
    BitWord a(len), b(len);
    for (int i = 0; i < len; ++i) {
      a.set(i, rng() & 1);
      b.set(i, rng() & 1);
    }
    CHECK(lex_less(a, b) == (a.to_string() < b.to_string()));
  }
}

TEST_CASE("subword and concat") {
  BitWord w = BitWord::from_string("110100101");
  CHECK(w.subword(0, 3).to_string() == "110");
  CHECK(w.subword(3, 4).to_string() == "1001");
  CHECK(w.subword(9, 0).length() == 0);
  CHECK_THROWS_AS(w.subword(7, 3), std::invalid_argument);

  BitWord head = BitWord::from_string("110");
  BitWord tail = BitWord::from_string("100101");
  CHECK(head.concat(tail).to_string() == "110100101");
  CHECK(head.concat(tail).subword(0, 3) == head);
  CHECK(head.concat(tail).subword(3, 6) == tail);
}

TEST_CASE("leading bit") {
  CHECK(BitWord::zeros(12).leading_bit() == 12);
  CHECK(BitWord::from_string("001").leading_bit() == 2);
  BitWord w(150);
  w.set(131, true);
  w.set(140, true);
  CHECK(w.leading_bit() == 131);
}
