#include "cstar/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cstar/errors.hpp"

namespace cstar {

BinaryCode repetition(int n) {
  return BinaryCode::from_rows({BitWord::ones(n)});
}

BinaryCode parity_check(int n) {
  if (n < 2) throw std::invalid_argument("parity check code needs n >= 2");
  std::vector<BitWord> rows;
  for (int i = 0; i + 1 < n; ++i)
    rows.push_back(BitWord::from_limb(uint64_t{0b11} << i, n));
  return BinaryCode::from_rows(std::move(rows));
}

namespace {

// Generator rows of RM(r, m) as packed words of length 2^m.
std::vector<uint64_t> rm_rows(int r, int m) {
  const int n = 1 << m;
  if (r == 0) return {low_mask(n)};
  if (r == m) {
    std::vector<uint64_t> rows;
    for (int i = 0; i < n; ++i) rows.push_back(uint64_t{1} << i);
    return rows;
  }
  // (u, u+v): rows (g | g) for g in RM(r, m-1) and (0 | h) for h in RM(r-1, m-1).
  const int half = 1 << (m - 1);
  std::vector<uint64_t> rows;
  for (uint64_t g : rm_rows(r, m - 1)) rows.push_back(g | (g << half));
  for (uint64_t h : rm_rows(r - 1, m - 1)) rows.push_back(h << half);
  return rows;
}

}  // namespace

BinaryCode reed_muller(int r, int m) {
  if (m < 1 || m > 6 || r < 0 || r > m)
    throw std::invalid_argument("reed_muller requires 0 <= r <= m and 1 <= m <= 6");
  std::vector<BitWord> rows;
  for (uint64_t w : rm_rows(r, m)) rows.push_back(BitWord::from_limb(w, 1 << m));
  return BinaryCode::from_rows(std::move(rows));
}

BinaryCode extended_hamming8() { return reed_muller(1, 3); }

BinaryCode golay24() {
  // Cyclic [23, 12, 7] code generated by x^11+x^9+x^7+x^6+x^5+x+1,
  // extended by an overall parity bit.
  constexpr uint64_t g = 0xAE3;  // coefficient bits, x^0 at bit 0
  std::vector<BitWord> rows;
  for (int i = 0; i < 12; ++i) {
    uint64_t shifted = g << i;
    BitWord row = BitWord::from_limb(shifted, 23);
    rows.push_back(row.concat(BitWord::from_limb(row.parity(), 1)));
  }
  return BinaryCode::from_rows(std::move(rows));
}

namespace {

int parse_int(const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ValidationError("expected an integer, got '" + s + "'");
  return v;
}

}  // namespace

BinaryCode builtin_code(const std::string& name) {
  if (name == "golay24") return golay24();
  if (name == "extended-hamming8") return extended_hamming8();
  auto starts = [&](const char* p) { return name.rfind(p, 0) == 0; };
  if (starts("rm-")) {
    auto rest = name.substr(3);
    auto dash = rest.find('-');
    if (dash != std::string::npos)
      return reed_muller(parse_int(rest.substr(0, dash)),
                         parse_int(rest.substr(dash + 1)));
  }
  if (starts("repetition-")) return repetition(parse_int(name.substr(11)));
  if (starts("parity-")) return parity_check(parse_int(name.substr(7)));
  throw ValidationError("unknown builtin code '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"golay24", "extended-hamming8", "rm-<r>-<m>", "repetition-<n>",
          "parity-<n>"};
}

namespace {

struct ParsedFile {
  std::vector<BitWord> words;
  std::optional<int> asserted_d;
  bool explicit_marker = false;
};

ParsedFile parse_binary_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open code file '" + path + "'");
  ParsedFile out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // Trim trailing spaces; leading whitespace is not allowed in data lines.
    while (!line.empty() && line.back() == ' ') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      auto first = body.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      body = body.substr(first);
      if (body == "explicit") out.explicit_marker = true;
      if (body.rfind("d=", 0) == 0) out.asserted_d = parse_int(body.substr(2));
      continue;
    }
    BitWord w = BitWord::from_string(line);  // throws on stray characters
    if (!out.words.empty() && w.length() != out.words[0].length())
      throw ValidationError(path + ":" + std::to_string(lineno) +
                            ": row length differs from previous rows");
    out.words.push_back(std::move(w));
  }
  if (out.words.empty())
    throw ValidationError("code file '" + path + "' contains no rows");
  return out;
}

}  // namespace

LoadedCode load_code(const std::string& path, uint64_t enum_budget) {
  ParsedFile parsed = parse_binary_matrix(path);
  if (parsed.explicit_marker)
    throw ValidationError("'" + path +
                          "' is an explicit codeword list, not a generator matrix");
  if (parsed.words[0].length() > BinaryCode::kMaxLen)
    throw ValidationError("generator rows longer than 64 are not supported");

  LoadedCode out{BinaryCode::from_rows(parsed.words),
                 static_cast<int>(parsed.words.size()),
                 {}};
  if (out.code.dimension() < out.input_rows)
    out.warnings.push_back(
        std::to_string(out.input_rows - out.code.dimension()) +
        " dependent generator row(s) absorbed; dimension is " +
        std::to_string(out.code.dimension()));
  if (parsed.asserted_d) {
    out.code.assert_min_distance(*parsed.asserted_d);
    try {
      min_hamming_distance(out.code, enum_budget);  // verifies the assertion
    } catch (const BudgetExceeded&) {
      out.warnings.push_back("asserted distance not verified (enumeration over budget)");
    }
  }
  return out;
}

std::vector<BitWord> load_explicit_words(const std::string& path) {
  ParsedFile parsed = parse_binary_matrix(path);
  if (!parsed.explicit_marker)
    throw ValidationError("'" + path + "' lacks the '# explicit' marker");
  std::sort(parsed.words.begin(), parsed.words.end(),
            [](const BitWord& a, const BitWord& b) { return lex_less(a, b); });
  parsed.words.erase(std::unique(parsed.words.begin(), parsed.words.end()),
                     parsed.words.end());
  return parsed.words;
}

}  // namespace cstar
