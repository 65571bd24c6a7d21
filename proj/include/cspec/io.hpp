#pragma once

// graph6 and plain edge-list text formats.
//
// graph6 (orders up to 62): one size byte n + 63, followed by the upper
// triangle of the adjacency matrix read column by column -- (0,1), (0,2),
// (1,2), (0,3), ... -- packed into 6-bit groups, most significant bit first,
// zero-padded, each group stored as the byte value + 63.

#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cspec/graph.hpp"

namespace cspec {

inline constexpr int kGraph6MaxOrder = 62;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw std::invalid_argument("graph6: orders above 62 need the long header");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

inline Graph graph6_decode(std::string_view bytes) {
  // tolerate the optional ">>graph6<<" header and a trailing newline
  constexpr std::string_view header = ">>graph6<<";
  if (bytes.substr(0, header.size()) == header) bytes.remove_prefix(header.size());
  while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r')) bytes.remove_suffix(1);
  if (bytes.empty()) throw FormatError("graph6: empty input");
  for (char c : bytes) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) throw FormatError("graph6: byte outside 63..126");
  }
  const int n = static_cast<unsigned char>(bytes[0]) - 63;
  if (n > kGraph6MaxOrder) throw FormatError("graph6: long-form headers are not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 < 0 ? 0 : n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (bytes.size() != 1 + groups) {
    throw FormatError("graph6: expected " + std::to_string(1 + groups) + " bytes for order " + std::to_string(n) +
                      ", got " + std::to_string(bytes.size()));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int value = static_cast<unsigned char>(bytes[1 + k / 6]) - 63;
      if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(bytes.back()) - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw FormatError("graph6: non-zero padding bits");
  }
  return g;
}

/// "n m" on the first line, then one "u v" line per edge.
inline std::string edgelist_encode(const Graph& g) {
  std::ostringstream out;
  const auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

inline Graph edgelist_decode(std::istream& in) {
  int n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw FormatError("edge list: bad header");
  Graph g(n);
  for (long long e = 0; e < m; ++e) {
    int u = 0;
    int v = 0;
    if (!(in >> u >> v)) throw FormatError("edge list: truncated");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw FormatError("edge list: bad edge");
    g.add_edge(u, v);
  }
  return g;
}

inline Graph edgelist_decode(std::string_view text) {
  std::istringstream in{std::string(text)};
  return edgelist_decode(in);
}

}  // namespace cspec
