#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "graphdyn/graph.hpp"

namespace graphdyn {

enum class SubstructureKind { InducedPath, InducedCycle, Triangle, Claw };

inline const char* to_string(SubstructureKind k) {
  switch (k) {
    case SubstructureKind::InducedPath: return "induced-path";
    case SubstructureKind::InducedCycle: return "induced-cycle";
    case SubstructureKind::Triangle: return "triangle";
    case SubstructureKind::Claw: return "claw";
  }
  return "?";
}

// Induced substructures identified by their vertex sets. members[i] is sorted
// ascending and edge_sets[i] lists the edges of its induced subgraph in
// lexicographic order. Members are in shortlex order (size, then
// lexicographic), so the output is a deterministic function of the input.
struct SubstructureSet {
  SubstructureKind kind;
  std::vector<std::vector<Vertex>> members;
  std::vector<std::vector<Edge>> edge_sets;

  std::size_t size() const noexcept { return members.size(); }
  bool empty() const noexcept { return members.empty(); }
};

struct EnumerationLimits {
  std::size_t max_members = 1'000'000;
};

namespace detail {

class MemberCollector {
 public:
  MemberCollector(SubstructureKind kind, const EnumerationLimits& limits) : set_{kind, {}, {}}, limits_(limits) {}

  void add(std::vector<Vertex> vertices, std::vector<Edge> edges) {
    if (set_.members.size() >= limits_.max_members)
      throw ResourceError(ResourceKind::Substructures, set_.members.size() + 1,
                          std::string("more than ") + std::to_string(limits_.max_members) + " " + to_string(set_.kind) +
                              " members");
    std::sort(vertices.begin(), vertices.end());
    for (auto& e : edges) e = normalized(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    set_.members.push_back(std::move(vertices));
    set_.edge_sets.push_back(std::move(edges));
  }

  SubstructureSet finish() && {
    std::vector<std::size_t> idx(set_.members.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    const auto& m = set_.members;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (m[a].size() != m[b].size()) return m[a].size() < m[b].size();
      return m[a] < m[b];
    });
    SubstructureSet out{set_.kind, {}, {}};
    out.members.reserve(idx.size());
    out.edge_sets.reserve(idx.size());
    for (std::size_t i : idx) {
      out.members.push_back(std::move(set_.members[i]));
      out.edge_sets.push_back(std::move(set_.edge_sets[i]));
    }
    return out;
  }

 private:
  SubstructureSet set_;
  EnumerationLimits limits_;
};

// Tracks a growing vertex sequence and, for every vertex, how many sequence
// members it is adjacent to.
class PathState {
 public:
  explicit PathState(const Graph& g) : g_(g), in_path_(g.order(), false), touching_(g.order(), 0) {}

  void push(Vertex v) {
    seq_.push_back(v);
    in_path_[v] = true;
    g_.for_each_neighbor(v, [&](Vertex u) { ++touching_[u]; });
  }
  void pop() {
    const Vertex v = seq_.back();
    seq_.pop_back();
    in_path_[v] = false;
    g_.for_each_neighbor(v, [&](Vertex u) { --touching_[u]; });
  }

  const std::vector<Vertex>& seq() const noexcept { return seq_; }
  bool in_path(Vertex v) const { return in_path_[v]; }
  std::size_t touching(Vertex v) const { return touching_[v]; }

  std::vector<Edge> path_edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < seq_.size(); ++i) out.emplace_back(seq_[i], seq_[i + 1]);
    return out;
  }

 private:
  const Graph& g_;
  std::vector<Vertex> seq_;
  std::vector<bool> in_path_;
  std::vector<std::size_t> touching_;
};

}  // namespace detail

/// Every vertex set of size >= 2 inducing a path. Each path is found from both
/// ends and kept from the end with the smaller label.
inline SubstructureSet induced_paths(const Graph& g, const EnumerationLimits& limits = {}) {
  detail::MemberCollector out(SubstructureKind::InducedPath, limits);
  detail::PathState st(g);
  auto extend = [&](auto&& self) -> void {
    const Vertex last = st.seq().back();
    g.for_each_neighbor(last, [&](Vertex w) {
      if (st.in_path(w) || st.touching(w) != 1) return;
      st.push(w);
      if (st.seq().front() < w) out.add(st.seq(), st.path_edges());
      self(self);
      st.pop();
    });
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    st.push(s);
    extend(extend);
    st.pop();
  }
  return std::move(out).finish();
}

/// Every vertex set inducing a chordless cycle of length >= 3. Cycles are
/// rooted at their least vertex and kept in one traversal direction. A path
/// is extended only while some chordless completion back to the root exists,
/// so every search branch ends in at least one cycle.
inline SubstructureSet induced_cycles(const Graph& g, const EnumerationLimits& limits = {}) {
  detail::MemberCollector out(SubstructureKind::InducedCycle, limits);
  detail::PathState st(g);
  Vertex root = 0;
  std::vector<Vertex> queue;
  std::vector<bool> seen(g.order(), false);

  // Whether the current path root..w closes into a chordless cycle through
  // vertices outside it. Interior vertices of a completion may touch only w;
  // the closing vertex touches only w's side and the root, and exceeds seq[1]
  // so each cycle is kept in one direction. A shortest such completion is
  // chordless, so reachability decides it.
  auto can_close = [&]() -> bool {
    const Vertex w = st.seq().back();
    const Vertex first = st.seq()[1];
    auto allowed = [&](Vertex u) {
      if (u <= root || st.in_path(u) || seen[u]) return false;
      const std::size_t expected = (g.adjacent(u, w) ? 1 : 0) + (g.adjacent(u, root) ? 1 : 0);
      return st.touching(u) == expected;
    };
    queue.clear();
    bool found = false;
    auto visit = [&](Vertex u) {
      if (found || !allowed(u)) return;
      seen[u] = true;
      queue.push_back(u);
      if (g.adjacent(u, root) && u > first) found = true;
    };
    g.for_each_neighbor(w, visit);
    for (std::size_t head = 0; head < queue.size() && !found; ++head) {
      const Vertex x = queue[head];
      if (g.adjacent(x, root)) continue;  // a closing vertex, not an interior one
      g.for_each_neighbor(x, visit);
    }
    for (Vertex u : queue) seen[u] = false;
    return found;
  };

  auto extend = [&](auto&& self) -> void {
    const Vertex last = st.seq().back();
    g.for_each_neighbor(last, [&](Vertex w) {
      if (w <= root || st.in_path(w)) return;
      if (st.seq().size() >= 2 && g.adjacent(w, root)) {
        // Closing vertex: it may touch only the root and the current end.
        if (st.touching(w) == 2 && st.seq()[1] < w) {
          st.push(w);
          auto edges = st.path_edges();
          edges.emplace_back(w, root);
          out.add(st.seq(), std::move(edges));
          st.pop();
        }
        return;
      }
      if (st.seq().size() >= 2 && st.touching(w) != 1) return;
      st.push(w);
      if (can_close()) self(self);
      st.pop();
    });
  };
  for (root = 0; root < g.order(); ++root) {
    st.push(root);
    extend(extend);
    st.pop();
  }
  return std::move(out).finish();
}

inline SubstructureSet triangles(const Graph& g, const EnumerationLimits& limits = {}) {
  detail::MemberCollector out(SubstructureKind::Triangle, limits);
  for (Vertex a = 0; a < g.order(); ++a)
    g.for_each_neighbor(a, [&](Vertex b) {
      if (b <= a) return;
      g.for_each_neighbor(b, [&](Vertex c) {
        if (c <= b || !g.adjacent(a, c)) return;
        out.add({a, b, c}, {{a, b}, {a, c}, {b, c}});
      });
    });
  return std::move(out).finish();
}

/// Induced K_{1,3}s: a centre with three pairwise non-adjacent neighbours.
/// The centre is the unique degree-3 vertex, so each claw appears once.
inline SubstructureSet claws(const Graph& g, const EnumerationLimits& limits = {}) {
  detail::MemberCollector out(SubstructureKind::Claw, limits);
  for (Vertex c = 0; c < g.order(); ++c) {
    const auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (g.adjacent(nb[i], nb[k]) || g.adjacent(nb[j], nb[k])) continue;
          out.add({c, nb[i], nb[j], nb[k]}, {{c, nb[i]}, {c, nb[j]}, {c, nb[k]}});
        }
      }
  }
  return std::move(out).finish();
}

inline SubstructureSet enumerate(SubstructureKind kind, const Graph& g, const EnumerationLimits& limits = {}) {
  switch (kind) {
    case SubstructureKind::InducedPath: return induced_paths(g, limits);
    case SubstructureKind::InducedCycle: return induced_cycles(g, limits);
    case SubstructureKind::Triangle: return triangles(g, limits);
    case SubstructureKind::Claw: return claws(g, limits);
  }
  throw GraphError("unknown substructure kind");
}

// ---------------------------------------------------------------------------
// Clique edge partitions (Krausz)

enum class Decision { No, Yes, Unknown };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::No: return "no";
    case Decision::Yes: return "yes";
    case Decision::Unknown: return "unknown";
  }
  return "?";
}

struct CliquePartitionLimits {
  std::size_t max_width = 0;           // largest clique tried; 0 means unbounded
  std::size_t max_nodes = 5'000'000;   // search nodes before giving up
};

struct CliquePartition {
  Decision found = Decision::No;
  std::vector<std::vector<Vertex>> cliques;  // witness when found == Yes
};

namespace detail {

class CliquePartitionSearch {
 public:
  CliquePartitionSearch(const Graph& g, const CliquePartitionLimits& limits)
      : g_(g), limits_(limits), n_(g.order()), uncovered_(n_ * n_, false), uses_(n_, 0), open_degree_(n_, 0) {
    for (const auto& [u, v] : g.edges()) {
      uncovered_[u * n_ + v] = uncovered_[v * n_ + u] = true;
      ++open_degree_[u];
      ++open_degree_[v];
    }
  }

  CliquePartition run() {
    CliquePartition out;
    try {
      if (search()) {
        out.found = Decision::Yes;
        out.cliques = chosen_;
      }
    } catch (const ResourceError&) {
      out.found = Decision::Unknown;
    }
    return out;
  }

 private:
  bool open(Vertex u, Vertex v) const { return uncovered_[u * n_ + v]; }

  bool search() {
    if (++nodes_ > limits_.max_nodes)
      throw ResourceError(ResourceKind::Search, nodes_, "clique partition search exceeded its node budget");
    // A vertex with one slot left fixes its last clique, so branch there first.
    Vertex u = static_cast<Vertex>(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (open_degree_[v] == 0) continue;
      if (uses_[v] >= 2) return false;
      if (u == n_ || (uses_[v] == 1 && uses_[u] == 0)) u = v;
    }
    if (u == n_) return true;
    Vertex v = 0;
    while (!open(u, v)) ++v;

    std::vector<Vertex> base{u, v};
    std::vector<Vertex> pool;
    for (Vertex w = 0; w < n_; ++w)
      if (w != u && w != v && open(u, w) && open(v, w) && uses_[w] < 2) pool.push_back(w);

    std::vector<std::vector<Vertex>> candidates;
    std::vector<Vertex> cur = base;
    grow(pool, 0, cur, candidates);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });

    for (const auto& clique : candidates) {
      if (!admissible(clique)) continue;
      apply(clique, true);
      chosen_.push_back(clique);
      if (search()) return true;
      chosen_.pop_back();
      apply(clique, false);
    }
    return false;
  }

  void grow(const std::vector<Vertex>& pool, std::size_t from, std::vector<Vertex>& cur,
            std::vector<std::vector<Vertex>>& out) const {
    out.push_back(cur);
    if (limits_.max_width != 0 && cur.size() >= limits_.max_width) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      const Vertex w = pool[i];
      bool ok = true;
      for (std::size_t j = 2; j < cur.size() && ok; ++j) ok = open(w, cur[j]);
      if (!ok) continue;
      cur.push_back(w);
      grow(pool, i + 1, cur, out);
      cur.pop_back();
    }
  }

  // After taking the clique, a vertex on its second clique must have no
  // uncovered edges left.
  bool admissible(const std::vector<Vertex>& clique) const {
    if (limits_.max_width != 0 && clique.size() > limits_.max_width) return false;
    for (Vertex w : clique)
      if (uses_[w] == 1 && open_degree_[w] != clique.size() - 1) return false;
    return true;
  }

  void apply(const std::vector<Vertex>& clique, bool take) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      const Vertex a = clique[i];
      if (take) {
        ++uses_[a];
        open_degree_[a] -= clique.size() - 1;
      } else {
        --uses_[a];
        open_degree_[a] += clique.size() - 1;
      }
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        const Vertex b = clique[j];
        uncovered_[a * n_ + b] = uncovered_[b * n_ + a] = !take;
      }
    }
  }

  const Graph& g_;
  CliquePartitionLimits limits_;
  std::size_t n_;
  std::vector<bool> uncovered_;
  std::vector<std::size_t> uses_;
  std::vector<std::size_t> open_degree_;
  std::vector<std::vector<Vertex>> chosen_;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// Searches for a partition of E(G) into cliques such that every vertex lies
/// in at most two of them. Unknown means the node budget ran out.
inline CliquePartition clique_edge_partition(const Graph& g, const CliquePartitionLimits& limits = {}) {
  if (g.size() == 0) throw GraphError("clique_edge_partition needs at least one edge");
  return detail::CliquePartitionSearch(g, limits).run();
}

}  // namespace graphdyn
