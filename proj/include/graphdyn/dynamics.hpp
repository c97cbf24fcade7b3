#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <type_traits>
#include <variant>
#include <vector>

#include "graphdyn/graph.hpp"
#include "graphdyn/iso.hpp"
#include "graphdyn/operators.hpp"

namespace graphdyn {

struct Budget {
  std::size_t max_steps = 64;
  std::size_t max_order = 2000;
  std::size_t max_substructures = 1'000'000;
  // Steps above this order are not canonicalized; see iterate().
  std::size_t max_canon_order = 512;

  void validate() const {
    if (max_steps == 0 || max_order == 0 || max_substructures == 0 || max_canon_order == 0)
      throw GraphError("budget limits must all be positive");
  }
};

struct Vanishing {
  std::size_t steps;  // least k with Gamma^k(G) empty
  friend bool operator==(const Vanishing&, const Vanishing&) = default;
};

struct Periodic {
  std::size_t tail;
  std::size_t period;
  friend bool operator==(const Periodic&, const Periodic&) = default;
};

enum class BudgetReason { StepCap, OrderCap, SubstructureCap };

// Evidence of expansion only; no finite run proves it.
struct BudgetExceeded {
  BudgetReason reason;
  std::size_t last_order;
  friend bool operator==(const BudgetExceeded&, const BudgetExceeded&) = default;
};

using Verdict = std::variant<Vanishing, Periodic, BudgetExceeded>;

inline const char* to_string(BudgetReason r) {
  switch (r) {
    case BudgetReason::StepCap: return "step-cap";
    case BudgetReason::OrderCap: return "order-cap";
    case BudgetReason::SubstructureCap: return "substructure-cap";
  }
  return "?";
}

/// "vanishing k=K" | "periodic tail=M period=P" | "budget-exceeded reason=R last-order=N"
inline std::string to_string(const Verdict& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Vanishing>) {
          return "vanishing k=" + std::to_string(x.steps);
        } else if constexpr (std::is_same_v<T, Periodic>) {
          return "periodic tail=" + std::to_string(x.tail) + " period=" + std::to_string(x.period);
        } else {
          return std::string("budget-exceeded reason=") + to_string(x.reason) + " last-order=" + std::to_string(x.last_order);
        }
      },
      v);
}

struct TraceStep {
  std::size_t k;
  std::size_t order;
  std::size_t size;
  std::optional<CanonicalForm> form;  // absent when order > max_canon_order
};

struct IterationTrace {
  OperatorId op;
  std::vector<TraceStep> steps;  // steps[k] describes Gamma^k(G)
  Verdict terminal;
};

namespace detail {

// Isomorphism invariant used to bucket steps; only steps sharing it can repeat.
using StepKey = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;

inline StepKey step_key(const Graph& g) {
  std::vector<std::size_t> degrees(g.order());
  for (Vertex v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end());
  return {g.order(), g.size(), std::move(degrees)};
}

inline std::optional<BudgetReason> reason_for(const ResourceError& e) {
  switch (e.kind()) {
    case ResourceKind::Order:
    case ResourceKind::Canonicalization: return BudgetReason::OrderCap;
    case ResourceKind::Substructures: return BudgetReason::SubstructureCap;
    case ResourceKind::Search: return std::nullopt;
  }
  return std::nullopt;
}

// Walks the orbit, calling visit(k, graph) on each materialized term. Returns
// the verdict reached; the orbit is rho-shaped on isomorphism classes, so the
// first repeated class gives the least tail and period.
template <class Visit>
Verdict walk_orbit(OperatorId id, const Graph& start, const Budget& budget, Visit&& visit) {
  budget.validate();
  const OperatorLimits limits{budget.max_order, budget.max_substructures};
  const CanonOptions canon{budget.max_canon_order};
  std::map<StepKey, std::vector<std::pair<std::size_t, std::optional<CanonicalForm>>>> seen;

  Graph current = start;
  for (std::size_t k = 0;; ++k) {
    if (current.order() > budget.max_order) return BudgetExceeded{BudgetReason::OrderCap, current.order()};
    std::optional<CanonicalForm> form;
    if (current.order() <= budget.max_canon_order) form = canonical_form(current, canon);
    visit(k, current, form);

    auto& bucket = seen[step_key(current)];
    for (const auto& [earlier, earlier_form] : bucket) {
      // Same invariants but one side too large to canonicalize: undecidable here.
      if (!form || !earlier_form) return BudgetExceeded{BudgetReason::OrderCap, current.order()};
      if (*form == *earlier_form) return Periodic{earlier, k - earlier};
    }
    bucket.emplace_back(k, std::move(form));

    if (k == budget.max_steps) return BudgetExceeded{BudgetReason::StepCap, current.order()};
    MaybeGraph next;
    try {
      next = apply(id, current, limits);
    } catch (const ResourceError& e) {
      const auto reason = reason_for(e);
      if (!reason) throw;
      return BudgetExceeded{*reason, current.order()};
    }
    if (!next) return Vanishing{k + 1};
    current = std::move(*next);
  }
}

}  // namespace detail

/// Materializes Gamma^k(G), k = 0, 1, ..., until it vanishes, repeats up to
/// isomorphism, or a budget cap trips.
///
/// Every step of order <= max_canon_order is canonicalized. Larger steps are
/// compared only through (order, size, degree sequence); a collision there
/// ends the run with OrderCap since the repeat cannot be decided.
inline IterationTrace iterate(OperatorId id, const Graph& g, const Budget& budget = {}) {
  IterationTrace trace{id, {}, Vanishing{0}};
  trace.terminal = detail::walk_orbit(id, g, budget, [&](std::size_t k, const Graph& h, const std::optional<CanonicalForm>& f) {
    trace.steps.push_back(TraceStep{k, h.order(), h.size(), f});
  });
  return trace;
}

inline Verdict classify(OperatorId id, const Graph& g, const Budget& budget = {}) {
  return iterate(id, g, budget).terminal;
}

/// Gamma^0(G) .. Gamma^k_max(G), stopping early at the first empty term.
/// Raises ResourceError if a term cannot be built within the budget.
inline std::vector<Graph> orbit_prefix(OperatorId id, const Graph& g, std::size_t k_max, const Budget& budget = {}) {
  budget.validate();
  if (k_max > budget.max_steps) throw GraphError("k_max exceeds the budget's step cap");
  const OperatorLimits limits{budget.max_order, budget.max_substructures};
  std::vector<Graph> out{g};
  for (std::size_t k = 1; k <= k_max; ++k) {
    MaybeGraph next = apply(id, out.back(), limits);
    if (!next) break;
    out.push_back(std::move(*next));
  }
  return out;
}

inline std::vector<std::size_t> orbit_orders(OperatorId id, const Graph& g, std::size_t k_max, const Budget& budget = {}) {
  std::vector<std::size_t> out;
  for (const Graph& h : orbit_prefix(id, g, k_max, budget)) out.push_back(h.order());
  return out;
}

}  // namespace graphdyn
