#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphdyn/enumeration.hpp"
#include "graphdyn/graph.hpp"

namespace graphdyn {

enum class OperatorId { Line, PathGraph, TriangleGraph, CycleGraph, ClawGraph, Complement, Subdivision, Shadow };

inline constexpr std::array<OperatorId, 8> kAllOperators = {
    OperatorId::Line,     OperatorId::PathGraph,  OperatorId::TriangleGraph, OperatorId::CycleGraph,
    OperatorId::ClawGraph, OperatorId::Complement, OperatorId::Subdivision,   OperatorId::Shadow,
};

inline std::string_view name(OperatorId id) {
  switch (id) {
    case OperatorId::Line: return "line";
    case OperatorId::PathGraph: return "path";
    case OperatorId::TriangleGraph: return "triangle";
    case OperatorId::CycleGraph: return "cycle";
    case OperatorId::ClawGraph: return "claw";
    case OperatorId::Complement: return "complement";
    case OperatorId::Subdivision: return "subdivision";
    case OperatorId::Shadow: return "shadow";
  }
  return "?";
}

inline std::optional<OperatorId> parse_operator(std::string_view text) {
  for (OperatorId id : kAllOperators)
    if (name(id) == text) return id;
  return std::nullopt;
}

// Caps applied while building an operator's result. max_order bounds the
// result's vertex count; max_substructures bounds enumeration output.
struct OperatorLimits {
  std::size_t max_order = kMaxOrder;
  std::size_t max_substructures = 1'000'000;
};

struct IntersectionSpec {
  SubstructureKind kind;
};

namespace detail {

inline void check_result_order(std::size_t order, const OperatorLimits& limits) {
  const std::size_t cap = std::min(limits.max_order, kMaxOrder);
  if (order > cap)
    throw ResourceError(ResourceKind::Order, order,
                        "result order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
}

}  // namespace detail

/// Vertices are the edges of G in lexicographic order; two are adjacent when
/// they share an endpoint. Empty when G has no edges.
inline MaybeGraph line_graph(const Graph& g, const OperatorLimits& limits = {}) {
  if (g.size() == 0) return std::nullopt;
  detail::check_result_order(g.size(), limits);
  const auto edges = g.edges();
  std::vector<std::vector<Vertex>> incident(g.order());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].first].push_back(static_cast<Vertex>(i));
    incident[edges[i].second].push_back(static_cast<Vertex>(i));
  }
  GraphBuilder b(edges.size());
  for (const auto& inc : incident)
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) b.add_edge(inc[i], inc[j]);
  return std::move(b).build();
}

/// Intersection graph of a substructure family: vertex i is members[i], and
/// i ~ j iff i != j and their edge sets meet.
inline Graph intersection_graph(const SubstructureSet& family) {
  std::vector<std::pair<Edge, Vertex>> occurrences;
  for (std::size_t i = 0; i < family.edge_sets.size(); ++i)
    for (const Edge& e : family.edge_sets[i]) occurrences.emplace_back(e, static_cast<Vertex>(i));
  std::sort(occurrences.begin(), occurrences.end());
  GraphBuilder b(family.size());
  for (std::size_t lo = 0; lo < occurrences.size();) {
    std::size_t hi = lo;
    while (hi < occurrences.size() && occurrences[hi].first == occurrences[lo].first) ++hi;
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = i + 1; j < hi; ++j) b.add_edge(occurrences[i].second, occurrences[j].second);
    lo = hi;
  }
  return std::move(b).build();
}

/// Shared implementation of the path, triangle, cycle and claw graph
/// operators. Empty when G has no substructure of the requested kind.
inline MaybeGraph intersection_operator(IntersectionSpec spec, const Graph& g, const OperatorLimits& limits = {}) {
  const std::size_t order_cap = std::min(limits.max_order, kMaxOrder);
  const bool order_binds = order_cap < limits.max_substructures;
  SubstructureSet family;
  try {
    family = enumerate(spec.kind, g, EnumerationLimits{std::min(order_cap, limits.max_substructures)});
  } catch (const ResourceError& e) {
    if (order_binds && e.kind() == ResourceKind::Substructures)
      throw ResourceError(ResourceKind::Order, e.observed(),
                          "result order exceeds cap " + std::to_string(order_cap) + " (" + e.what() + ")");
    throw;
  }
  if (family.empty()) return std::nullopt;
  return intersection_graph(family);
}

inline MaybeGraph path_graph(const Graph& g, const OperatorLimits& limits = {}) {
  return intersection_operator({SubstructureKind::InducedPath}, g, limits);
}
inline MaybeGraph triangle_graph(const Graph& g, const OperatorLimits& limits = {}) {
  return intersection_operator({SubstructureKind::Triangle}, g, limits);
}
inline MaybeGraph cycle_graph(const Graph& g, const OperatorLimits& limits = {}) {
  return intersection_operator({SubstructureKind::InducedCycle}, g, limits);
}
inline MaybeGraph claw_graph(const Graph& g, const OperatorLimits& limits = {}) {
  return intersection_operator({SubstructureKind::Claw}, g, limits);
}

inline MaybeGraph complement(const Graph& g, const OperatorLimits& limits = {}) {
  detail::check_result_order(g.order(), limits);
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

/// Each edge ab (the i-th in lexicographic order) becomes a-x, x-b with
/// x = order(G) + i.
inline MaybeGraph subdivision(const Graph& g, const OperatorLimits& limits = {}) {
  detail::check_result_order(g.order() + g.size(), limits);
  const auto edges = g.edges();
  GraphBuilder b(g.order() + edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto x = static_cast<Vertex>(g.order() + i);
    b.add_edge(edges[i].first, x).add_edge(x, edges[i].second);
  }
  return std::move(b).build();
}

/// D_2(G): G, a copy G' (v' = order(G) + v), and v'x for every edge vx.
/// v' is not adjacent to v.
inline MaybeGraph shadow(const Graph& g, const OperatorLimits& limits = {}) {
  detail::check_result_order(2 * g.order(), limits);
  const auto n = static_cast<Vertex>(g.order());
  GraphBuilder b(2 * g.order());
  for (const auto& [u, v] : g.edges()) {
    b.add_edge(u, v).add_edge(u + n, v + n);
    b.add_edge(u + n, v).add_edge(u, v + n);
  }
  return std::move(b).build();
}

/// Whether G lies in the operator's domain, i.e. the result is not Empty.
inline bool in_domain(OperatorId id, const Graph& g) {
  switch (id) {
    case OperatorId::Line:
    case OperatorId::PathGraph: return g.size() > 0;
    case OperatorId::TriangleGraph: return !triangles(g).empty();
    // A graph has an induced cycle iff it is not a forest.
    case OperatorId::CycleGraph: return g.size() + components(g).size() > g.order();
    case OperatorId::ClawGraph: return !claws(g).empty();
    case OperatorId::Complement:
    case OperatorId::Subdivision:
    case OperatorId::Shadow: return true;
  }
  return false;
}

inline MaybeGraph apply(OperatorId id, const Graph& g, const OperatorLimits& limits = {}) {
  switch (id) {
    case OperatorId::Line: return line_graph(g, limits);
    case OperatorId::PathGraph: return path_graph(g, limits);
    case OperatorId::TriangleGraph: return triangle_graph(g, limits);
    case OperatorId::CycleGraph: return cycle_graph(g, limits);
    case OperatorId::ClawGraph: return claw_graph(g, limits);
    case OperatorId::Complement: return complement(g, limits);
    case OperatorId::Subdivision: return subdivision(g, limits);
    case OperatorId::Shadow: return shadow(g, limits);
  }
  throw GraphError("unknown operator");
}

/// Gamma(empty) = empty.
inline MaybeGraph apply(OperatorId id, const MaybeGraph& g, const OperatorLimits& limits = {}) {
  if (!g) return std::nullopt;
  return apply(id, *g, limits);
}

}  // namespace graphdyn
