#pragma once

// Exhaustive generation of small graphs up to isomorphism. Used by the test
// suites and by the CLI's `check` command; not part of the library proper.

#include <cstddef>
#include <map>
#include <vector>

#include "graphdyn/graph.hpp"
#include "graphdyn/iso.hpp"

namespace graphdyn::census {

/// One representative (in canonical labeling) per isomorphism class of
/// graphs of order n, sorted by canonical form. Every order-n graph is an
/// order-(n-1) class representative plus one vertex with some neighbourhood,
/// so extending each representative in all 2^(n-1) ways reaches every class.
inline std::vector<Graph> graphs_of_order(std::size_t n) {
  if (n == 0) throw GraphError("census needs n >= 1");
  if (n == 1) return {GraphBuilder(1).build()};
  std::map<CanonicalForm, Graph> classes;
  for (const Graph& base : graphs_of_order(n - 1)) {
    const auto edges = base.edges();
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
      GraphBuilder b(n);
      for (const auto& [u, v] : edges) b.add_edge(u, v);
      for (Vertex v = 0; v + 1 < n; ++v)
        if ((mask >> v) & 1U) b.add_edge(v, static_cast<Vertex>(n - 1));
      Graph g = std::move(b).build();
      CanonicalForm form = canonical_form(g);
      if (classes.contains(form)) continue;
      const auto lab = canonical_labeling(g);
      classes.emplace(std::move(form), relabel(g, lab));
    }
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [form, g] : classes) out.push_back(std::move(g));
  return out;
}

/// All classes with 1 <= order <= max_n, in order of increasing n.
inline std::vector<Graph> graphs_up_to(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (Graph& g : graphs_of_order(n)) out.push_back(std::move(g));
  return out;
}

}  // namespace graphdyn::census
