#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graphdyn/graph.hpp"

namespace graphdyn {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kGraph6MaxOrder = 62;

// graph6 with a single-byte order header (n <= 62). Payload bits are the
// upper triangle in column order (j = 1..n-1, i = 0..j-1), six per byte,
// most significant first, each byte offset by 63.
inline std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw FormatError("graph6 output supports at most 62 vertices; use edgelist");
  std::string out(1, static_cast<char>(n + 63));
  int filled = 0;
  unsigned acc = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw FormatError("graph6: empty input");
  for (char ch : text)
    if (static_cast<unsigned char>(ch) < 63 || static_cast<unsigned char>(ch) > 126)
      throw FormatError("graph6: character out of range 63..126");
  const std::size_t header = static_cast<unsigned char>(text[0]) - 63;
  if (header == 63) throw FormatError("graph6: multi-byte order headers (n > 62) are not supported");
  if (header == 0) throw FormatError("graph6: bad header, order 0");
  const std::size_t n = header;
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - 1 != bytes)
    throw FormatError("graph6: payload has " + std::to_string(text.size() - 1) + " bytes, expected " + std::to_string(bytes));
  auto bit = [&](std::size_t t) { return ((static_cast<unsigned char>(text[1 + t / 6]) - 63) >> (5 - t % 6)) & 1U; };
  for (std::size_t t = bits; t < bytes * 6; ++t)
    if (bit(t)) throw FormatError("graph6: nonzero padding bits");
  GraphBuilder b(n);
  std::size_t t = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++t)
      if (bit(t)) b.add_edge(i, j);
  return std::move(b).build();
}

/// Text format: a header line "n <count>" followed by "u v" lines with
/// 0-based labels. Blank lines and '#' comments are ignored.
inline Graph parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<GraphBuilder> b;
  auto fail = [&](const std::string& what) -> FormatError {
    return FormatError("edgelist line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string s; fields >> s;) tok.push_back(s);
    if (tok.empty()) continue;
    auto number = [&](const std::string& s) -> std::size_t {
      if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw fail("expected a non-negative integer, got '" + s + "'");
      return std::stoul(s);
    };
    if (!b) {
      if (tok.size() != 2 || tok[0] != "n") throw fail("expected header 'n <count>'");
      const std::size_t n = number(tok[1]);
      if (n == 0) throw fail("a graph needs at least one vertex");
      if (n > kMaxOrder) throw fail("order exceeds the supported maximum");
      b.emplace(n);
      continue;
    }
    if (tok.size() != 2) throw fail("expected 'u v'");
    const std::size_t u = number(tok[0]), v = number(tok[1]);
    if (u >= b->order() || v >= b->order()) throw fail("endpoint out of range");
    if (u == v) throw fail("self-loop");
    b->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!b) throw FormatError("edgelist: missing header 'n <count>'");
  return std::move(*b).build();
}

inline std::string emit_edgelist(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

namespace detail {
inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}
}  // namespace detail

/// Undirected DOT. With labels, every vertex is declared with its label;
/// without, only isolated vertices are declared. Edges follow in
/// lexicographic order.
inline std::string emit_dot(const Graph& g, std::span<const std::string> labels = {}) {
  if (!labels.empty() && labels.size() != g.order()) throw GraphError("emit_dot: one label per vertex required");
  std::string out = "graph {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!labels.empty())
      out += "  " + std::to_string(v) + " [label=" + detail::dot_quote(labels[v]) + "];\n";
    else if (g.degree(v) == 0)
      out += "  " + std::to_string(v) + ";\n";
  }
  for (const auto& [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace graphdyn
