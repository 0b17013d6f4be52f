#include "sel/graph6.hpp"

#include <cstdint>

namespace sel {

namespace {

constexpr int kLo = 63;   // '?'
constexpr int kHi = 126;  // '~'

int need_byte(std::string_view s, std::size_t i) {
  if (i >= s.size()) throw Graph6ParseError("unexpected end of input", i);
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < kLo || c > kHi)
    throw Graph6ParseError("byte outside graph6 range '?'..'~'", i);
  return c - kLo;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  // Tolerate one trailing newline, as emitted by most graph6 tools.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw Graph6ParseError("empty input", 0);

  std::size_t pos = 0;
  std::int64_t n = 0;
  int first = need_byte(text, pos);
  if (first < 63) {
    n = first;
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    // 126 126 b b b b b b : 36-bit order.
    if (static_cast<unsigned char>(text[0]) != 126)
      throw Graph6ParseError("bad order header", 0);
    n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | need_byte(text, i);
    pos = 8;
  } else {
    // 126 b b b : 18-bit order.
    n = 0;
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | need_byte(text, i);
    pos = 4;
  }
  if (n < 1) throw Graph6ParseError("graph order must be >= 1", 0);
  if (n > kMaxGraphOrder)
    throw Graph6ParseError("graph order exceeds supported cap", 0);

  Graph g(static_cast<int>(n));
  std::int64_t nbits = n * (n - 1) / 2;
  std::int64_t expect_bytes = (nbits + 5) / 6;
  if (static_cast<std::int64_t>(text.size() - pos) != expect_bytes)
    throw Graph6ParseError(
        "body length mismatch: expected " + std::to_string(expect_bytes) +
            " bytes",
        text.size());

  std::int64_t bit = 0;
  int acc = 0, used = 6;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      if (used == 6) {
        acc = need_byte(text, pos);
        ++pos;
        used = 0;
      }
      if (acc & (1 << (5 - used))) g.add_edge(row, col);
      ++used;
    }
  }
  // Padding bits must be zero.
  while (used < 6) {
    if (acc & (1 << (5 - used)))
      throw Graph6ParseError("nonzero padding bits", pos - 1);
    ++used;
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  std::string out;
  std::int64_t n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(kLo + n));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(kLo + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kLo + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kLo + (n & 63)));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(kLo + ((n >> shift) & 63)));
  }
  int acc = 0, used = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(kLo + acc));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(kLo + (acc << (6 - used))));
  return out;
}

}  // namespace sel
