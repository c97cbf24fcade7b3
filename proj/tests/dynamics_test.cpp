#include <algorithm>
#include <random>
#include <variant>
#include <vector>

#include "graphdyn/dynamics.hpp"
#include "graphdyn/generators.hpp"
#include "graphdyn/iso.hpp"
#include "graphdyn_support/census.hpp"
#include "gtest/gtest.h"
#include "support/oracles.hpp"

namespace graphdyn {
namespace {

const Graph kSpider = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});

// Re-derives the orbit independently and checks the verdict against it.
void audit(OperatorId id, const Graph& g, const Verdict& v) {
  if (const auto* per = std::get_if<Periodic>(&v)) {
    ASSERT_GE(per->period, 1u);
    const auto orbit = orbit_prefix(id, g, per->tail + per->period);
    ASSERT_EQ(orbit.size(), per->tail + per->period + 1);
    EXPECT_TRUE(is_isomorphic(orbit[per->tail], orbit[per->tail + per->period]));
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (std::size_t j = i + 1; j < orbit.size(); ++j) {
        if (i == per->tail && j == per->tail + per->period) continue;
        EXPECT_FALSE(is_isomorphic(orbit[i], orbit[j])) << "repeat at " << i << "," << j << " is earlier";
      }
  } else if (const auto* van = std::get_if<Vanishing>(&v)) {
    ASSERT_GE(van->steps, 1u);
    const auto orbit = orbit_prefix(id, g, van->steps);
    ASSERT_EQ(orbit.size(), van->steps);
    EXPECT_FALSE(apply(id, orbit.back()));
  }
}

TEST(DynamicsTest, LineGraphExamples) {
  EXPECT_EQ(classify(OperatorId::Line, cycle(5)), Verdict(Periodic{0, 1}));
  EXPECT_EQ(classify(OperatorId::Line, complete_bipartite(1, 3)), Verdict(Periodic{1, 1}));
  EXPECT_EQ(classify(OperatorId::Line, path(4)), Verdict(Vanishing{4}));
  const Verdict k14 = classify(OperatorId::Line, complete_bipartite(1, 4));
  ASSERT_TRUE(std::holds_alternative<BudgetExceeded>(k14));
  EXPECT_EQ(std::get<BudgetExceeded>(k14).reason, BudgetReason::OrderCap);
}

TEST(DynamicsTest, ConnectedLineGraphCases) {
  for (std::size_t n = 3; n <= 8; ++n) EXPECT_EQ(classify(OperatorId::Line, cycle(n)), Verdict(Periodic{0, 1}));
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(classify(OperatorId::Line, path(n)), Verdict(Vanishing{n}));
  for (const Graph& g : {complete(4), complete_bipartite(1, 4), kSpider}) {
    const IterationTrace t = iterate(OperatorId::Line, g);
    ASSERT_TRUE(std::holds_alternative<BudgetExceeded>(t.terminal));
    std::size_t run = 0, best = 0;
    for (std::size_t k = 1; k < t.steps.size(); ++k) {
      run = t.steps[k].order > t.steps[k - 1].order ? run + 1 : 0;
      best = std::max(best, run);
    }
    EXPECT_GE(best, 5u);
  }
}

TEST(DynamicsTest, OtherOperatorExamples) {
  EXPECT_EQ(classify(OperatorId::Complement, complete(3)), Verdict(Periodic{0, 2}));
  EXPECT_EQ(classify(OperatorId::Complement, path(4)), Verdict(Periodic{0, 1}));
  EXPECT_EQ(classify(OperatorId::ClawGraph, petersen()), Verdict(Periodic{0, 1}));
  EXPECT_EQ(classify(OperatorId::Subdivision, edgeless(3)), Verdict(Periodic{0, 1}));
  EXPECT_EQ(classify(OperatorId::PathGraph, complete_minus_edge(4)), Verdict(Periodic{2, 1}));
  const Verdict d = classify(OperatorId::Shadow, complete(1));
  EXPECT_EQ(d, Verdict(BudgetExceeded{BudgetReason::OrderCap, 1024}));
}

TEST(DynamicsTest, LadderVanishesUnderClawGraph) {
  const IterationTrace t = iterate(OperatorId::ClawGraph, grid(5, 2));
  EXPECT_EQ(t.terminal, Verdict(Vanishing{3}));
  ASSERT_EQ(t.steps.size(), 3u);
  EXPECT_EQ(t.steps[0].order, 10u);
  EXPECT_EQ(t.steps[1].order, 6u);
  EXPECT_EQ(t.steps[2].order, 2u);
  EXPECT_EQ(t.steps[0].form, canonical_form(grid(5, 2)));
}

TEST(DynamicsTest, OrbitOrders) {
  EXPECT_EQ(orbit_orders(OperatorId::Line, path(5), 4), (std::vector<std::size_t>{5, 4, 3, 2, 1}));
  EXPECT_EQ(orbit_orders(OperatorId::Shadow, complete(2), 3), (std::vector<std::size_t>{2, 4, 8, 16}));
  EXPECT_EQ(orbit_orders(OperatorId::Line, path(3), 10), (std::vector<std::size_t>{3, 2, 1}));
  EXPECT_THROW(orbit_orders(OperatorId::Line, path(3), 65), GraphError);
}

TEST(DynamicsTest, HatGrowth) {
  const auto orders = orbit_orders(OperatorId::ClawGraph, add_hat(petersen()), 3, Budget{64, 5000});
  EXPECT_EQ(orders, (std::vector<std::size_t>{11, 12, 14, 20}));
}

TEST(DynamicsTest, SubdivisionOfEdgeGrows) {
  const auto orders = orbit_orders(OperatorId::Subdivision, complete(2), 6);
  for (std::size_t k = 1; k < orders.size(); ++k) EXPECT_GT(orders[k], orders[k - 1]);
  EXPECT_TRUE(std::holds_alternative<BudgetExceeded>(classify(OperatorId::Subdivision, complete(2))));
}

TEST(DynamicsTest, CapsReported) {
  const Verdict steps = classify(OperatorId::Subdivision, complete(2), Budget{5});
  EXPECT_EQ(steps, Verdict(BudgetExceeded{BudgetReason::StepCap, 33}));
  const Verdict subs = classify(OperatorId::PathGraph, complete_bipartite(1, 3), Budget{64, 100000, 50});
  ASSERT_TRUE(std::holds_alternative<BudgetExceeded>(subs));
  EXPECT_EQ(std::get<BudgetExceeded>(subs).reason, BudgetReason::SubstructureCap);
  EXPECT_THROW(classify(OperatorId::Line, path(3), Budget{0}), GraphError);
}

TEST(DynamicsTest, UncanonicalizedCollisionIsOrderCap) {
  // C_n is line-periodic, but with the canon cap below n the repeat cannot
  // be confirmed.
  Budget b;
  b.max_canon_order = 5;
  EXPECT_EQ(classify(OperatorId::Line, cycle(8), b), Verdict(BudgetExceeded{BudgetReason::OrderCap, 8}));
  EXPECT_EQ(classify(OperatorId::Line, cycle(5), b), Verdict(Periodic{0, 1}));
}

TEST(DynamicsTest, TraceShape) {
  const IterationTrace t = iterate(OperatorId::Line, complete_bipartite(1, 3));
  ASSERT_EQ(t.steps.size(), 3u);
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    EXPECT_EQ(t.steps[k].k, k);
    EXPECT_TRUE(t.steps[k].form.has_value());
  }
  EXPECT_EQ(t.steps[1].form, t.steps[2].form);
}

TEST(DynamicsTest, VerdictText) {
  EXPECT_EQ(to_string(Verdict(Vanishing{4})), "vanishing k=4");
  EXPECT_EQ(to_string(Verdict(Periodic{1, 1})), "periodic tail=1 period=1");
  EXPECT_EQ(to_string(Verdict(BudgetExceeded{BudgetReason::StepCap, 7})), "budget-exceeded reason=step-cap last-order=7");
  EXPECT_EQ(to_string(Verdict(BudgetExceeded{BudgetReason::OrderCap, 2})), "budget-exceeded reason=order-cap last-order=2");
  EXPECT_EQ(to_string(Verdict(BudgetExceeded{BudgetReason::SubstructureCap, 3})),
            "budget-exceeded reason=substructure-cap last-order=3");
}

// Every operator on every graph of order <= 6 terminates in one arm, and
// definitive verdicts survive the independent audit.
TEST(DynamicsTest, TrichotomyAndAuditsOnSmallGraphs) {
  const Budget budget{64, 300};
  for (const Graph& g : census::graphs_up_to(6))
    for (OperatorId id : kAllOperators) {
      const Verdict v = classify(id, g, budget);
      audit(id, g, v);
      if (id == OperatorId::Shadow)
        EXPECT_EQ(std::get<BudgetExceeded>(v).reason, BudgetReason::OrderCap);
    }
}

TEST(DynamicsTest, RelabelingInvariance) {
  std::mt19937_64 rng(8);
  const Budget budget{64, 300};
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const Graph g = oracle::random_graph(rng, n, 0.4);
    const Graph h = relabel(g, oracle::random_permutation(rng, n));
    for (OperatorId id : kAllOperators) EXPECT_EQ(classify(id, g, budget), classify(id, h, budget)) << name(id);
  }
}

}  // namespace
}  // namespace graphdyn
