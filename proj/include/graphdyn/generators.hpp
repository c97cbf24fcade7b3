#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "graphdyn/graph.hpp"

namespace graphdyn {

namespace detail {
inline void require(bool ok, const char* what) {
  if (!ok) throw GraphError(what);
}
}  // namespace detail

inline Graph edgeless(std::size_t n) {
  detail::require(n >= 1, "edgeless graph needs n >= 1");
  return GraphBuilder(n).build();
}

/// P_n: vertices 0..n-1 joined in sequence.
inline Graph path(std::size_t n) {
  detail::require(n >= 1, "path needs n >= 1");
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

inline Graph cycle(std::size_t n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, static_cast<Vertex>((i + 1) % n));
  return std::move(b).build();
}

inline Graph complete(std::size_t n) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

/// K_{a,b} with parts 0..a-1 and a..a+b-1; K_{1,3} is the claw centered at 0.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  detail::require(a >= 1 && b >= 1, "complete bipartite graph needs both parts non-empty");
  GraphBuilder g(a + b);
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) g.add_edge(i, static_cast<Vertex>(a + j));
  return std::move(g).build();
}

/// K_q with the edge {0,1} removed.
inline Graph complete_minus_edge(std::size_t q) {
  detail::require(q >= 3, "K_q - e needs q >= 3");
  GraphBuilder b(q);
  for (Vertex i = 0; i < q; ++i)
    for (Vertex j = i + 1; j < q; ++j)
      if (!(i == 0 && j == 1)) b.add_edge(i, j);
  return std::move(b).build();
}

/// P_m x P_n, vertex (i, j) labeled i*n + j.
inline Graph grid(std::size_t m, std::size_t n) {
  detail::require(m >= 1 && n >= 1, "grid dimensions must be positive");
  GraphBuilder b(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = static_cast<Vertex>(i * n + j);
      if (j + 1 < n) b.add_edge(v, v + 1);
      if (i + 1 < m) b.add_edge(v, static_cast<Vertex>(v + n));
    }
  return std::move(b).build();
}

/// GP(n,k): outer cycle u_i = i, spokes u_i v_i with v_i = n + i, inner
/// edges v_i v_{i+k mod n}.
inline Graph generalized_petersen(std::size_t n, std::size_t k) {
  detail::require(n >= 3 && k >= 1 && 2 * k < n, "generalized Petersen graph needs n >= 3 and 1 <= k < n/2");
  GraphBuilder b(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = static_cast<Vertex>(i);
    const auto v = static_cast<Vertex>(n + i);
    b.add_edge(u, static_cast<Vertex>((i + 1) % n));
    b.add_edge(u, v);
    b.add_edge(v, static_cast<Vertex>(n + (i + k) % n));
  }
  return std::move(b).build();
}

inline Graph petersen() { return generalized_petersen(5, 2); }

inline bool is_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

inline bool is_triangle_free(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c)
        if (g.adjacent(a, c) && g.adjacent(b, c)) return false;
    }
  return true;
}

/// Adds a hat: a new vertex x = order(G) joined to y and to two distinct
/// neighbours n1, n2 of y. G must be triangle-free and cubic.
inline Graph add_hat(const Graph& g, Vertex y, Vertex n1, Vertex n2) {
  detail::require(is_cubic(g), "add_hat: graph is not cubic");
  detail::require(is_triangle_free(g), "add_hat: graph is not triangle-free");
  detail::require(y < g.order() && n1 < g.order() && n2 < g.order(), "add_hat: vertex out of range");
  detail::require(n1 != n2, "add_hat: the two neighbours must be distinct");
  detail::require(g.adjacent(y, n1) && g.adjacent(y, n2), "add_hat: n1 and n2 must be neighbours of y");
  const auto x = static_cast<Vertex>(g.order());
  GraphBuilder b(g.order() + 1);
  for (const auto& [u, v] : g.edges()) b.add_edge(u, v);
  b.add_edge(x, y).add_edge(x, n1).add_edge(x, n2);
  return std::move(b).build();
}

/// Hat on vertex 0 and its two lowest-labeled neighbours.
inline Graph add_hat(const Graph& g) {
  detail::require(g.order() >= 1, "add_hat: empty graph");
  const auto nb = g.neighbors(0);
  detail::require(nb.size() >= 2, "add_hat: vertex 0 has fewer than two neighbours");
  return add_hat(g, 0, nb[0], nb[1]);
}

}  // namespace graphdyn
