#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "graphdyn/dynamics.hpp"
#include "graphdyn/enumeration.hpp"
#include "graphdyn/generators.hpp"
#include "graphdyn/graph.hpp"
#include "graphdyn/operators.hpp"

namespace graphdyn {

struct OracleVanishing {
  friend bool operator==(const OracleVanishing&, const OracleVanishing&) = default;
};
struct OracleExpanding {
  friend bool operator==(const OracleExpanding&, const OracleExpanding&) = default;
};
struct OraclePeriodic {
  std::optional<std::size_t> period_hint;
  friend bool operator==(const OraclePeriodic&, const OraclePeriodic&) = default;
};
struct NotCovered {
  friend bool operator==(const NotCovered&, const NotCovered&) = default;
};

using OracleVerdict = std::variant<OracleVanishing, OracleExpanding, OraclePeriodic, NotCovered>;

inline std::string to_string(const OracleVerdict& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, OracleVanishing>) return "vanishing";
        else if constexpr (std::is_same_v<T, OracleExpanding>) return "expanding";
        else if constexpr (std::is_same_v<T, OraclePeriodic>)
          return x.period_hint ? "periodic period=" + std::to_string(*x.period_hint) : std::string("periodic");
        else return "not-covered";
      },
      v);
}

namespace detail {

inline bool all_degrees(const Graph& g, std::size_t d) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

inline bool is_complete(const Graph& g) { return 2 * g.size() == g.order() * (g.order() - 1); }

inline bool is_complete_minus_edge(const Graph& g) {
  return g.order() >= 3 && 2 * g.size() + 2 == g.order() * (g.order() - 1);
}

}  // namespace detail

/// Iterated line graphs of a connected graph: cycles and the claw are
/// periodic, paths vanish, everything else expands. Disconnected input is
/// not covered.
inline OracleVerdict line_verdict(const Graph& g) {
  if (!is_connected(g)) return NotCovered{};
  const std::size_t n = g.order();
  if (n >= 3 && g.size() == n && detail::all_degrees(g, 2)) return OraclePeriodic{1};
  if (n == 4 && g.size() == 3) {
    // A connected tree on 4 vertices is either P_4 or the claw.
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) == 3) return OraclePeriodic{1};
  }
  if (g.size() + 1 == n) {
    bool max_two = true;
    for (Vertex v = 0; v < n; ++v) max_two = max_two && g.degree(v) <= 2;
    if (max_two) return OracleVanishing{};
  }
  return OracleExpanding{};
}

// The three structural conditions characterizing path-graph dynamics.
struct PathPredicates {
  bool all_complete = false;       // every component is complete
  bool shared_p3_pair = false;     // two induced P_3 share an edge
  bool one_near_complete = false;  // one component is K_q - e (q >= 3), the rest complete
};

inline PathPredicates path_predicates(const Graph& g) {
  PathPredicates p;
  std::size_t complete = 0, near = 0;
  const auto comps = components(g);
  for (const auto& comp : comps) {
    const Graph h = induced_subgraph(g, comp);
    if (detail::is_complete(h)) ++complete;
    else if (detail::is_complete_minus_edge(h)) ++near;
  }
  p.all_complete = complete == comps.size();
  p.one_near_complete = near == 1 && complete + 1 == comps.size();

  // Direct search over pairs of induced P_3s.
  const auto paths = induced_paths(g);
  std::vector<const std::vector<Edge>*> p3;
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (paths.members[i].size() == 3) p3.push_back(&paths.edge_sets[i]);
  for (std::size_t i = 0; i < p3.size() && !p.shared_p3_pair; ++i)
    for (std::size_t j = i + 1; j < p3.size() && !p.shared_p3_pair; ++j)
      for (const Edge& e : *p3[i])
        if (std::find(p3[j]->begin(), p3[j]->end(), e) != p3[j]->end()) {
          p.shared_p3_pair = true;
          break;
        }
  return p;
}

/// Three-way characterization of path-graph dynamics for graphs with an edge.
/// Returns NotCovered for edgeless input, or if no predicate holds.
inline OracleVerdict path_verdict(const Graph& g) {
  if (g.size() == 0) return NotCovered{};
  const PathPredicates p = path_predicates(g);
  if (p.all_complete) return OracleVanishing{};
  if (p.shared_p3_pair) return OracleExpanding{};
  if (p.one_near_complete) return OraclePeriodic{};
  return NotCovered{};
}

/// Vertices x such that G - x is triangle-free cubic and N(x) = {y, n1, n2}
/// with n1, n2 neighbours of y.
inline std::vector<Vertex> hat_vertices(const Graph& g) {
  std::vector<Vertex> out;
  if (g.order() < 5) return out;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (g.degree(x) != 3) continue;
    const auto nb = g.neighbors(x);
    bool has_apex = false;
    for (std::size_t i = 0; i < 3; ++i) {
      const Vertex y = nb[i], a = nb[(i + 1) % 3], b = nb[(i + 2) % 3];
      if (g.adjacent(y, a) && g.adjacent(y, b) && !g.adjacent(a, b)) has_apex = true;
    }
    if (!has_apex) continue;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.order(); ++v)
      if (v != x) rest.push_back(v);
    const Graph base = induced_subgraph(g, rest);
    if (is_cubic(base) && is_triangle_free(base)) out.push_back(x);
  }
  return out;
}

/// Triangle-free cubic graphs are claw-periodic with period 1; a
/// triangle-free cubic graph with one hat is claw-expanding.
inline OracleVerdict claw_verdict(const Graph& g) {
  if (is_cubic(g) && is_triangle_free(g)) return OraclePeriodic{1};
  if (hat_vertices(g).size() == 1) return OracleExpanding{};
  return NotCovered{};
}

/// Krausz: G is a line graph iff E(G) splits into cliques with every vertex
/// in at most two. Edgeless graphs are line graphs of matchings.
inline Decision is_line_graph(const Graph& g, const CliquePartitionLimits& limits = {}) {
  if (g.size() == 0) return Decision::Yes;
  return clique_edge_partition(g, limits).found;
}

enum class Agreement { Agree, Disagree, OracleNotCovered, EmpiricalInconclusive };

inline const char* to_string(Agreement a) {
  switch (a) {
    case Agreement::Agree: return "agree";
    case Agreement::Disagree: return "DISAGREE";
    case Agreement::OracleNotCovered: return "oracle-not-covered";
    case Agreement::EmpiricalInconclusive: return "empirical-inconclusive";
  }
  return "?";
}

struct CrossValidation {
  OperatorId op;
  OracleVerdict oracle;
  Verdict empirical;
  Agreement agreement;
  std::vector<std::size_t> orders;  // per-step orders of the empirical run
};

inline std::optional<OracleVerdict> oracle_for(OperatorId id, const Graph& g) {
  switch (id) {
    case OperatorId::Line: return line_verdict(g);
    case OperatorId::PathGraph: return path_verdict(g);
    case OperatorId::ClawGraph: return claw_verdict(g);
    default: return std::nullopt;
  }
}

inline Agreement compare(const OracleVerdict& oracle, const Verdict& empirical) {
  if (std::holds_alternative<NotCovered>(oracle)) return Agreement::OracleNotCovered;
  const bool budget = std::holds_alternative<BudgetExceeded>(empirical);
  if (std::holds_alternative<OracleExpanding>(oracle)) return budget ? Agreement::Agree : Agreement::Disagree;
  if (budget) return Agreement::EmpiricalInconclusive;
  if (std::holds_alternative<OracleVanishing>(oracle))
    return std::holds_alternative<Vanishing>(empirical) ? Agreement::Agree : Agreement::Disagree;
  const auto& hint = std::get<OraclePeriodic>(oracle).period_hint;
  const auto* per = std::get_if<Periodic>(&empirical);
  if (per == nullptr) return Agreement::Disagree;
  return (!hint || *hint == per->period) ? Agreement::Agree : Agreement::Disagree;
}

/// Runs the empirical classifier next to the matching theorem oracle.
inline CrossValidation cross_validate(OperatorId id, const Graph& g, const Budget& budget = {}) {
  const IterationTrace trace = iterate(id, g, budget);
  std::vector<std::size_t> orders;
  for (const auto& s : trace.steps) orders.push_back(s.order);
  const auto oracle = oracle_for(id, g);
  CrossValidation out{id, oracle.value_or(NotCovered{}), trace.terminal, Agreement::OracleNotCovered, std::move(orders)};
  out.agreement = compare(out.oracle, out.empirical);
  return out;
}

}  // namespace graphdyn
