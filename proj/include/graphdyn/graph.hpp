#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphdyn {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Hard ceiling on the vertex count of any Graph value.
inline constexpr std::size_t kMaxOrder = std::size_t{1} << 16;

/// Raised when an argument violates an operation's precondition.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ResourceKind {
  Order,            // a result would exceed the permitted vertex count
  Substructures,    // an enumeration produced too many members
  Canonicalization, // graph too large for exact canonical labeling
  Search,           // a backtracking search ran out of nodes
};

/// Raised when a configured cap is exceeded. Never raised for bad input.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(ResourceKind kind, std::size_t observed, const std::string& what)
      : std::runtime_error(what), kind_(kind), observed_(observed) {}

  ResourceKind kind() const noexcept { return kind_; }
  std::size_t observed() const noexcept { return observed_; }

 private:
  ResourceKind kind_;
  std::size_t observed_;
};

inline Edge normalized(Vertex u, Vertex v) noexcept {
  return u < v ? Edge{u, v} : Edge{v, u};
}

class GraphBuilder;

// Immutable simple undirected graph on vertices 0..n-1 with one adjacency
// bitset row per vertex. Symmetric and irreflexive by construction.
class Graph {
 public:
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return test(u, v);
  }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    std::size_t d = 0;
    for (std::uint64_t w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for_each_neighbor(v, [&](Vertex u) { out.push_back(u); });
    return out;
  }

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    const auto r = row(v);
    for (std::size_t w = 0; w < r.size(); ++w) {
      std::uint64_t bits = r[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for_each_neighbor(u, [&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  // Labeled equality: same order and identical edge sets.
  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  explicit Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

  bool test(Vertex u, Vertex v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
  }
  void check_vertex(Vertex v) const {
    if (v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Empty is the result of an operator applied outside its domain; it is not
/// a graph of order zero.
using MaybeGraph = std::optional<Graph>;

// Mutable staging area for constructing a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(checked_order(n)) {}

  std::size_t order() const noexcept { return g_.n_; }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    if (u >= g_.n_ || v >= g_.n_)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint out of range for order " +
                       std::to_string(g_.n_));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    set(u, v);
    set(v, u);
    return *this;
  }

  bool has_edge(Vertex u, Vertex v) const { return g_.test(u, v); }

  Graph build() && {
    std::size_t twice = 0;
    for (std::uint64_t w : g_.bits_) twice += static_cast<std::size_t>(std::popcount(w));
    g_.m_ = twice / 2;
    return std::move(g_);
  }

 private:
  static std::size_t checked_order(std::size_t n) {
    if (n == 0) throw GraphError("a graph needs at least one vertex");
    if (n > kMaxOrder) throw GraphError("order " + std::to_string(n) + " exceeds the supported maximum");
    return n;
  }
  void set(Vertex u, Vertex v) { g_.bits_[static_cast<std::size_t>(u) * g_.words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  Graph g_;
};

inline Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline std::size_t order(const Graph& g) noexcept { return g.order(); }
inline std::size_t size(const Graph& g) noexcept { return g.size(); }
inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }
inline bool are_adjacent(const Graph& g, Vertex u, Vertex v) { return g.adjacent(u, v); }

/// Connected components, each sorted ascending, ordered by smallest member.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      g.for_each_neighbor(u, [&](Vertex v) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

/// Subgraph induced by `subset`, relabeled 0..|S|-1 by ascending original label.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  if (subset.empty()) throw GraphError("induced_subgraph needs a non-empty vertex set");
  std::vector<Vertex> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Vertex v : s)
    if (v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " not in graph");
  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(b).build();
}

inline Graph induced_subgraph(const Graph& g, std::initializer_list<Vertex> subset) {
  return induced_subgraph(g, std::span<const Vertex>(subset.begin(), subset.size()));
}

/// G followed by H, with H's labels shifted by order(G).
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.order());
  GraphBuilder b(g.order() + h.order());
  for (const auto& [u, v] : g.edges()) b.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) b.add_edge(u + shift, v + shift);
  return std::move(b).build();
}

/// The graph pi·G in which vertex v of G is renamed perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw GraphError("permutation length does not match graph order");
  std::vector<bool> hit(perm.size(), false);
  for (Vertex p : perm) {
    if (p >= perm.size() || hit[p]) throw GraphError("not a permutation");
    hit[p] = true;
  }
  GraphBuilder b(g.order());
  for (const auto& [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

}  // namespace graphdyn
