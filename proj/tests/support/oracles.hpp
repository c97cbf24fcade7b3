#pragma once

// Brute-force reference implementations. Deliberately naive and independent
// of the library's algorithms: everything here works from subset scans,
// full permutation search, or counting formulas.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "graphdyn/graph.hpp"

namespace oracle {

using graphdyn::Edge;
using graphdyn::Graph;
using graphdyn::GraphBuilder;
using graphdyn::Vertex;

inline std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> out;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) out.emplace_back(i, j);
  return out;
}

/// Labeled graph on n vertices whose edge set is selected by `mask` over all_pairs(n).
inline Graph from_mask(std::size_t n, std::uint64_t mask) {
  GraphBuilder b(n);
  const auto pairs = all_pairs(n);
  for (std::size_t t = 0; t < pairs.size(); ++t)
    if ((mask >> t) & 1U) b.add_edge(pairs[t].first, pairs[t].second);
  return std::move(b).build();
}

inline bool adj(const Graph& g, Vertex u, Vertex v) { return g.adjacent(u, v); }

/// Least adjacency code over all n! relabelings (n <= 8).
inline std::uint64_t min_code(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::uint64_t best = ~std::uint64_t{0};
  const auto pairs = all_pairs(n);
  do {
    std::uint64_t code = 0;
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if (adj(g, perm[pairs[t].first], perm[pairs[t].second])) code |= std::uint64_t{1} << t;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool ok = true;
    for (Vertex u = 0; u < g.order() && ok; ++u)
      for (Vertex v = u + 1; v < g.order() && ok; ++v) ok = adj(g, u, v) == adj(h, perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Number of unlabeled graphs on n vertices by Burnside's lemma: the mean,
/// over all permutations, of 2^(cycles induced on vertex pairs).
inline std::uint64_t burnside_count(std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  const auto pairs = all_pairs(n);
  long double total = 0;
  std::uint64_t perms = 0;
  do {
    std::vector<bool> seen(pairs.size(), false);
    std::size_t cycles = 0;
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      if (seen[t]) continue;
      ++cycles;
      std::size_t cur = t;
      while (!seen[cur]) {
        seen[cur] = true;
        Vertex a = perm[pairs[cur].first], b = perm[pairs[cur].second];
        if (a > b) std::swap(a, b);
        cur = static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), Edge{a, b}) - pairs.begin());
      }
    }
    total += static_cast<long double>(std::uint64_t{1} << cycles);
    ++perms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<std::uint64_t>(total / static_cast<long double>(perms) + 0.5L);
}

/// Vertex subsets (sorted) of size >= min_size whose induced subgraph satisfies pred.
inline std::set<std::vector<Vertex>> subset_scan(const Graph& g, std::size_t min_size,
                                                 const std::function<bool(const Graph&)>& pred) {
  std::set<std::vector<Vertex>> out;
  const std::size_t n = g.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1U) s.push_back(v);
    if (s.size() < min_size) continue;
    if (pred(graphdyn::induced_subgraph(g, s))) out.insert(s);
  }
  return out;
}

inline std::vector<std::size_t> degrees(const Graph& h) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < h.order(); ++v) d.push_back(h.degree(v));
  return d;
}

inline bool connected(const Graph& h) { return graphdyn::components(h).size() == 1; }

inline bool is_path_shape(const Graph& h) {
  const auto d = degrees(h);
  return h.order() >= 2 && connected(h) && h.size() + 1 == h.order() && *std::max_element(d.begin(), d.end()) <= 2;
}
inline bool is_cycle_shape(const Graph& h) {
  const auto d = degrees(h);
  return h.order() >= 3 && connected(h) && std::all_of(d.begin(), d.end(), [](std::size_t x) { return x == 2; });
}
inline bool is_triangle_shape(const Graph& h) { return h.order() == 3 && h.size() == 3; }
inline bool is_claw_shape(const Graph& h) {
  const auto d = degrees(h);
  return h.order() == 4 && h.size() == 3 && std::count(d.begin(), d.end(), std::size_t{3}) == 1;
}

/// Exhaustive search over all set partitions of E(G) for one whose blocks
/// are cliques (block edges = all pairs of block vertices) with every vertex
/// in at most two blocks. Feasible for size(G) <= ~11.
inline bool has_krausz_partition(const Graph& g) {
  const auto edges = g.edges();
  std::vector<std::size_t> block(edges.size(), 0);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) -> bool {
    if (i == edges.size()) {
      std::vector<std::size_t> uses(g.order(), 0);
      for (std::size_t b = 0; b < blocks; ++b) {
        std::set<Vertex> vs;
        std::size_t count = 0;
        for (std::size_t e = 0; e < edges.size(); ++e)
          if (block[e] == b) {
            vs.insert(edges[e].first);
            vs.insert(edges[e].second);
            ++count;
          }
        if (count != vs.size() * (vs.size() - 1) / 2) return false;
        for (Vertex v : vs) ++uses[v];
      }
      return std::all_of(uses.begin(), uses.end(), [](std::size_t u) { return u <= 2; });
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      block[i] = b;
      if (rec(i + 1, std::max(blocks, b + 1))) return true;
    }
    return false;
  };
  return rec(0, 0);
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) b.add_edge(i, j);
  return std::move(b).build();
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
