#include "wiener/graph6.hpp"

#include "wiener/errors.hpp"

namespace wiener {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr int kMaxShortOrder = 62;

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty record");

  for (char ch : text) {
    const int c = static_cast<unsigned char>(ch);
    if (c < 63 || c > 126) throw ParseError("graph6: character " + std::to_string(c) + " out of range 63..126");
  }
  const int head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw ParseError("graph6: multi-byte order header not supported (order > 62)");
  const int n = head - kBias;
  if (n < 1 || n > kMaxShortOrder) throw ParseError("graph6: malformed length header");

  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  const std::string_view body = text.substr(1);
  if (body.size() != byte_count) {
    throw ParseError("graph6: expected " + std::to_string(byte_count) + " data bytes for order " + std::to_string(n) +
                     ", got " + std::to_string(body.size()));
  }

  Graph g(n);
  std::size_t k = 0;
  auto bit = [&](std::size_t idx) {
    const int byte = static_cast<unsigned char>(body[idx / 6]) - kBias;
    return (byte >> (5 - idx % 6)) & 1;
  };
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bit(k)) g.add_edge(i, j);
    }
  }
  for (; k < byte_count * 6; ++k) {
    if (bit(k)) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxShortOrder) throw DomainError("graph6 encoding supports order <= 62");
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
  return out;
}

}  // namespace wiener
