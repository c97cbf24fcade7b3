#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "graphdyn/graph.hpp"

namespace graphdyn {

// Byte string shared by exactly the graphs of one isomorphism class:
// a 4-byte big-endian order followed by the least upper-triangle adjacency
// bit string (column order, MSB first) found by the labeling search.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (std::uint8_t b : bytes_) {
      out.push_back(kDigits[b >> 4]);
      out.push_back(kDigits[b & 0xF]);
    }
    return out;
  }

  // 64-bit FNV-1a over the bytes, for compact trace output.
  std::string digest() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint8_t b : bytes_) {
      h ^= b;
      h *= 0x100000001b3ULL;
    }
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kDigits[h & 0xF];
    return out;
  }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

struct CanonOptions {
  std::size_t max_order = 512;
};

namespace detail {

// Ordered vertex coloring; colors are dense 0..count-1.
struct Coloring {
  std::vector<Vertex> color;
  std::size_t count = 0;

  bool discrete() const noexcept { return count == color.size(); }
};

// Colour refinement to the coarsest stable refinement. New colours are ranked
// by (old colour, sorted neighbour colours), so the result commutes with
// vertex relabeling and never merges cells.
inline void refine(const Graph& g, Coloring& c) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> sig(n);
  std::vector<Vertex> idx(n);
  while (!c.discrete()) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(c.color[v]);
      g.for_each_neighbor(v, [&](Vertex u) { s.push_back(c.color[u]); });
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(idx.begin(), idx.end(), Vertex{0});
    std::sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
    std::vector<Vertex> next(n);
    Vertex rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++rank;
      next[idx[i]] = rank;
    }
    const std::size_t count = static_cast<std::size_t>(rank) + 1;
    c.color = std::move(next);
    if (count == c.count) break;
    c.count = count;
  }
}

inline Coloring individualize(const Coloring& c, Vertex v) {
  Coloring out{c.color, c.count + 1};
  const Vertex cv = c.color[v];
  for (Vertex u = 0; u < out.color.size(); ++u)
    if (u != v && c.color[u] >= cv) ++out.color[u];
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }
  Vertex find(Vertex x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<Vertex> parent_;
};

// Individualization-refinement search for the labeling whose permuted
// adjacency code is least. Automorphisms discovered at equivalent leaves
// prune sibling subtrees in the same orbit of the prefix stabilizer, and an
// equivalence with the first leaf backjumps to the divergence point.
class LabelingSearch {
 public:
  explicit LabelingSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<Vertex> run() {
    seed_twin_automorphisms();
    in_prefix_.assign(n_, false);
    Coloring root{std::vector<Vertex>(n_, 0), 1};
    refine(g_, root);
    std::vector<Vertex> prefix;
    dfs(root, prefix);
    return best_lab_;
  }

  const std::vector<std::uint64_t>& best_code() const noexcept { return best_code_; }

 private:
  static constexpr std::size_t kNoJump = static_cast<std::size_t>(-1);

  std::size_t dfs(const Coloring& c, std::vector<Vertex>& prefix) {
    const std::size_t depth = prefix.size();
    if (c.discrete()) return leaf(c, prefix);

    std::vector<std::size_t> cell_size(c.count, 0);
    for (Vertex col : c.color) ++cell_size[col];
    Vertex target = 0;
    std::size_t target_size = kNoJump;
    for (Vertex col = 0; col < c.count; ++col)
      if (cell_size[col] > 1 && cell_size[col] < target_size) {
        target = col;
        target_size = cell_size[col];
      }

    // Orbits of the group generated by the automorphisms found so far that
    // fix the prefix pointwise; grown as new generators arrive.
    UnionFind orbits(n_);
    std::size_t absorbed = 0;
    std::vector<Vertex> explored;
    for (Vertex w = 0; w < n_; ++w) {
      if (c.color[w] != target) continue;
      for (; absorbed < generators_.size(); ++absorbed) {
        const auto& gen = generators_[absorbed];
        if (std::none_of(gen.support.begin(), gen.support.end(), [&](Vertex p) { return in_prefix_[p]; }))
          for (Vertex v : gen.support) orbits.unite(v, gen.perm[v]);
      }
      const Vertex rw = orbits.find(w);
      if (std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return orbits.find(u) == rw; })) continue;
      explored.push_back(w);
      Coloring child = individualize(c, w);
      refine(g_, child);
      prefix.push_back(w);
      in_prefix_[w] = true;
      const std::size_t r = dfs(child, prefix);
      in_prefix_[w] = false;
      prefix.pop_back();
      if (r != kNoJump && r < depth) return r;
    }
    return kNoJump;
  }

  std::size_t leaf(const Coloring& c, const std::vector<Vertex>& prefix) {
    const std::vector<Vertex>& lab = c.color;  // vertex -> label
    std::vector<std::uint64_t> code = encode(lab);
    if (first_lab_.empty()) {
      first_lab_ = lab;
      first_code_ = code;
      first_path_ = prefix;
      best_lab_ = lab;
      best_code_ = std::move(code);
      return kNoJump;
    }
    if (code == first_code_) {
      record_automorphism(lab, first_lab_);
      std::size_t d = 0;
      while (d < prefix.size() && d < first_path_.size() && prefix[d] == first_path_[d]) ++d;
      return d;
    }
    if (code == best_code_) {
      record_automorphism(lab, best_lab_);
    } else if (code < best_code_) {
      best_code_ = std::move(code);
      best_lab_ = lab;
    }
    return kNoJump;
  }

  // Both labelings give the same permuted graph, so v -> other^-1(lab[v]) is
  // an automorphism.
  void record_automorphism(const std::vector<Vertex>& lab, const std::vector<Vertex>& other) {
    std::vector<Vertex> inv(n_);
    for (Vertex v = 0; v < n_; ++v) inv[other[v]] = v;
    Automorphism gen;
    gen.perm.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      gen.perm[v] = inv[lab[v]];
      if (gen.perm[v] != v) gen.support.push_back(v);
    }
    if (!gen.support.empty()) generators_.push_back(std::move(gen));
  }

  // Vertices with equal open (or closed) neighbourhoods can be swapped
  // freely; their transpositions are automorphisms known up front.
  void seed_twin_automorphisms() {
    for (const bool closed : {false, true}) {
      std::vector<std::vector<std::uint64_t>> rows(n_);
      for (Vertex v = 0; v < n_; ++v) {
        const auto r = g_.row(v);
        rows[v].assign(r.begin(), r.end());
        if (closed) rows[v][v / 64] |= std::uint64_t{1} << (v % 64);
      }
      std::vector<Vertex> idx(n_);
      std::iota(idx.begin(), idx.end(), Vertex{0});
      std::stable_sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) { return rows[a] < rows[b]; });
      for (std::size_t i = 1; i < n_; ++i) {
        if (rows[idx[i]] != rows[idx[i - 1]]) continue;
        Automorphism gen;
        gen.perm.resize(n_);
        std::iota(gen.perm.begin(), gen.perm.end(), Vertex{0});
        std::swap(gen.perm[idx[i]], gen.perm[idx[i - 1]]);
        gen.support = {std::min(idx[i], idx[i - 1]), std::max(idx[i], idx[i - 1])};
        generators_.push_back(std::move(gen));
      }
    }
  }

  std::vector<std::uint64_t> encode(const std::vector<Vertex>& lab) const {
    std::vector<Vertex> inv(n_);
    for (Vertex v = 0; v < n_; ++v) inv[lab[v]] = v;
    const std::size_t bits = n_ * (n_ - 1) / 2;
    std::vector<std::uint64_t> code((bits + 63) / 64, 0);
    std::size_t t = 0;
    for (Vertex j = 1; j < n_; ++j) {
      const auto rj = g_.row(inv[j]);
      for (Vertex i = 0; i < j; ++i, ++t) {
        const Vertex u = inv[i];
        if ((rj[u / 64] >> (u % 64)) & 1U) code[t / 64] |= std::uint64_t{1} << (63 - t % 64);
      }
    }
    return code;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> first_lab_, best_lab_, first_path_;
  std::vector<std::uint64_t> first_code_, best_code_;
  struct Automorphism {
    std::vector<Vertex> perm;
    std::vector<Vertex> support;  // points moved by perm
  };

  std::vector<Automorphism> generators_;
  std::vector<bool> in_prefix_;
};

inline void check_canon_order(const Graph& g, const CanonOptions& opts) {
  if (g.order() > opts.max_order)
    throw ResourceError(ResourceKind::Canonicalization, g.order(),
                        "order " + std::to_string(g.order()) + " exceeds canonicalization cap " + std::to_string(opts.max_order));
}

}  // namespace detail

/// Canonical labeling: vertex v of G receives label result[v]. Relabeling G
/// by it yields the same labeled graph for every member of G's class.
inline std::vector<Vertex> canonical_labeling(const Graph& g, const CanonOptions& opts = {}) {
  detail::check_canon_order(g, opts);
  return detail::LabelingSearch(g).run();
}

inline CanonicalForm canonical_form(const Graph& g, const CanonOptions& opts = {}) {
  detail::check_canon_order(g, opts);
  detail::LabelingSearch search(g);
  search.run();
  const std::size_t n = g.order();
  const std::size_t bits = n * (n - 1) / 2;
  std::vector<std::uint8_t> bytes;
  bytes.reserve(4 + (bits + 7) / 8);
  for (int s = 24; s >= 0; s -= 8) bytes.push_back(static_cast<std::uint8_t>(n >> s));
  const auto& code = search.best_code();
  for (std::size_t i = 0; i < (bits + 7) / 8; ++i)
    bytes.push_back(static_cast<std::uint8_t>(code[i / 8] >> (56 - 8 * (i % 8))));
  return CanonicalForm(std::move(bytes));
}

inline bool is_isomorphic(const Graph& g, const Graph& h, const CanonOptions& opts = {}) {
  if (g.order() != h.order() || g.size() != h.size()) {
    detail::check_canon_order(g, opts);
    detail::check_canon_order(h, opts);
    return false;
  }
  return canonical_form(g, opts) == canonical_form(h, opts);
}

}  // namespace graphdyn
