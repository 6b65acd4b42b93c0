#include "genus/graph6.hpp"

#include <string_view>

namespace genus {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kMinByte = 63;
constexpr int kMaxByte = 126;
constexpr int kMaxFourByteN = 258047;  // 2^18 - 1

bool printable(unsigned char c) { return c >= kMinByte && c <= kMaxByte; }

}  // namespace

Graph parse_graph6(const std::string& line) {
  std::string_view s(line);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  std::size_t base = 0;
  if (s.substr(0, kHeader.size()) == kHeader) {
    base = kHeader.size();
    s.remove_prefix(kHeader.size());
  }
  if (s.empty()) throw parse_error("empty graph6 line", base);

  // Vertex count.
  long n = 0;
  std::size_t body = 0;
  unsigned char c0 = static_cast<unsigned char>(s[0]);
  if (!printable(c0)) throw parse_error("graph6 byte out of range", base);
  if (c0 == '~') {
    if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == '~') {
      throw parse_error("graph6 8-byte vertex counts (n > 258047) are not supported", base + 1);
    }
    if (s.size() < 4) throw parse_error("truncated graph6 vertex count", base + s.size());
    long parts[3];
    for (int i = 0; i < 3; ++i) {
      unsigned char c = static_cast<unsigned char>(s[1 + i]);
      if (!printable(c)) throw parse_error("graph6 byte out of range", base + 1 + i);
      parts[i] = c - kMinByte;
    }
    n = (parts[0] << 12) | (parts[1] << 6) | parts[2];
    body = 4;
  } else {
    n = c0 - kMinByte;
    body = 1;
  }
  if (n == 0) throw validation_error("graph6 line encodes an empty graph");
  if (n > kMaxFourByteN) throw parse_error("graph6 vertex count out of range", base);

  // Body: ceil(n(n-1)/2 / 6) bytes of packed upper-triangle bits.
  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t need = (bits + 5) / 6;
  if (s.size() - body < need) {
    throw parse_error("graph6 body too short", base + s.size());
  }
  if (s.size() - body > need) {
    throw parse_error("trailing bytes after graph6 body", base + body + need);
  }
  for (std::size_t i = 0; i < need; ++i) {
    if (!printable(static_cast<unsigned char>(s[body + i]))) {
      throw parse_error("graph6 byte out of range", base + body + i);
    }
  }

  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;  // bit cursor
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i, ++k) {
      int byte = static_cast<unsigned char>(s[body + k / 6]) - kMinByte;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  // Padding bits must be zero.
  for (; k < need * 6; ++k) {
    int byte = static_cast<unsigned char>(s[body + k / 6]) - kMinByte;
    if ((byte >> (5 - k % 6)) & 1) {
      throw parse_error("nonzero graph6 padding bits", base + body + k / 6);
    }
  }

  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
  if (!g.is_simple()) {
    throw validation_error("graph6 encodes simple graphs only (no loops or parallel edges)");
  }
  long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kMinByte + n));
  } else if (n <= kMaxFourByteN) {
    out.push_back('~');
    out.push_back(static_cast<char>(kMinByte + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kMinByte + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kMinByte + (n & 63)));
  } else {
    throw validation_error("graph too large for supported graph6 encodings");
  }

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;

  int group = 0, filled = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i) {
      group = (group << 1) | (adj[i][j] ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kMinByte + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(kMinByte + group));
  }
  return out;
}

}  // namespace genus
