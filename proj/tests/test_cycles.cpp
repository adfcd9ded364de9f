// Copyright 2026 The systole Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "support/test_support.hpp"
#include "systole/cycles.hpp"
#include "systole/datasets.hpp"
#include "systole/error.hpp"
#include "systole/rational.hpp"

namespace systole {
namespace {

using testing::EdgeSet;

std::set<EdgeSet> edge_sets(const std::vector<Cycle>& cycles) {
  std::set<EdgeSet> out;
  for (const Cycle& c : cycles) out.insert(c.edge_set());
  return out;
}

const Rational kThird(1, 3);

TEST(Cycle, FromStepsValidates) {
  const MetricGraph t = testing::theta(1, 1, 1);
  const Cycle c = Cycle::from_steps(t, {{0, true}, {1, false}});
  EXPECT_EQ(c.size(), 2U);
  EXPECT_EQ(c.length(t), 2);
  EXPECT_EQ(c.to_string(), "0+ 1-");
  EXPECT_THROW(Cycle::from_steps(t, {{0, true}, {1, true}}), Error);  // does not close
  EXPECT_THROW(Cycle::from_steps(t, {{0, true}, {0, false}}), Error);  // repeats an edge
  EXPECT_THROW(Cycle::from_steps(t, {{9, true}}), Error);
  const MetricGraph r = testing::rose({1, 1});
  EXPECT_EQ(Cycle::from_steps(r, {{1, true}}).size(), 1U);
  // Figure eight through one vertex twice is not embedded.
  EXPECT_THROW(Cycle::from_steps(r, {{0, true}, {1, true}}), Error);
}

TEST(Cycle, CanonicalForm) {
  const MetricGraph g = testing::k4(1);
  // Triangle 0-1-2 as edges 0 (0-1), 3 (1-2), 1 (0-2).
  const Cycle a = Cycle::from_steps(g, {{3, true}, {1, false}, {0, true}});
  const Cycle canon = a.canonical();
  EXPECT_TRUE(canon.is_canonical());
  EXPECT_EQ(canon.edge_sequence().front(), 0U);
  EXPECT_EQ(canon, a.reversed().canonical());
  EXPECT_TRUE(a.same_curve(a.reversed()));
  EXPECT_EQ(Cycle::from_edge_set(g, {0, 1, 3}), canon);
  EXPECT_EQ(a.edge_set(), (std::set<EdgeId>{0, 1, 3}));
  EXPECT_EQ(a.vertex_set(g), (std::set<VertexId>{0, 1, 2}));
}

TEST(ShortestCycle, Examples) {
  const MetricGraph t = testing::theta(kThird, kThird, kThird);
  const auto s = shortest_cycle(t);
  EXPECT_EQ(s.length, Rational(2, 3));
  EXPECT_EQ(s.witness.edge_set(), (EdgeSet{0, 1}));

  const auto d = shortest_cycle(testing::dumbbell(kThird, kThird, kThird));
  EXPECT_EQ(d.length, kThird);
  EXPECT_EQ(d.witness.edge_set(), EdgeSet{0});

  const auto klein = std::get<CombinatorialMap>(bundled_dataset("klein_73")).skeleton();
  EXPECT_EQ(shortest_cycle(klein).length, 7);
}

TEST(ShortestCycle, Errors) {
  const MetricGraph tree("tree", 2, {{0, 0, 1, 1}});
  EXPECT_EQ([&] {
    try {
      shortest_cycle(tree);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  }(), ErrorKind::NoCycle);
  EXPECT_THROW(all_systoles(tree), Error);
  const MetricGraph t = testing::theta(1, 1, 1);
  EdgeWeights negative{1, -1, 1};
  EXPECT_THROW(shortest_cycle(t, negative), Error);
}

TEST(AllSystoles, Examples) {
  const auto theta = all_systoles(testing::theta(kThird, kThird, kThird));
  ASSERT_EQ(theta.size(), 3U);
  for (const Cycle& c : theta) EXPECT_EQ(c.length(testing::theta(kThird, kThird, kThird)), Rational(2, 3));

  const MetricGraph k4 = testing::k4(Rational(1, 6));
  const auto k4s = all_systoles(k4);
  ASSERT_EQ(k4s.size(), 4U);
  for (const Cycle& c : k4s) {
    EXPECT_EQ(c.size(), 3U);
    EXPECT_EQ(c.length(k4), Rational(1, 2));
  }
  EXPECT_TRUE(std::is_sorted(k4s.begin(), k4s.end()));

  const auto d = all_systoles(testing::dumbbell(Rational(1, 4), Rational(5, 12), kThird));
  ASSERT_EQ(d.size(), 1U);
  EXPECT_EQ(d[0].edge_set(), EdgeSet{0});
}

TEST(CyclesUpToLength, Examples) {
  EXPECT_EQ(cycles_up_to_length(testing::theta(kThird, kThird, kThird), Rational(2, 3)).size(), 3U);
  EXPECT_EQ(cycles_up_to_length(testing::k4(Rational(1, 6)), Rational(2, 3)).size(), 7U);
  const auto heawood = std::get<CombinatorialMap>(bundled_dataset("heawood_torus")).skeleton();
  const auto six = cycles_up_to_length(heawood, 6);
  EXPECT_EQ(six.size(), 28U);
  EXPECT_GT(six.size(), 7U);
}

TEST(CyclesUpToLength, BudgetExceeded) {
  CycleSearchOptions tight;
  tight.cycle_cap = 3;
  try {
    cycles_up_to_length(testing::k4(Rational(1, 6)), Rational(2, 3), tight);
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
  tight.cycle_cap = 7;
  EXPECT_EQ(cycles_up_to_length(testing::k4(Rational(1, 6)), Rational(2, 3), tight).size(), 7U);
}

TEST(ShortestCycleAbove, Examples) {
  const MetricGraph t = testing::theta(kThird, kThird, kThird);
  EXPECT_FALSE(shortest_cycle_above(t, t.lengths(), Rational(2, 3)).has_value());
  const MetricGraph k4 = testing::k4(Rational(1, 6));
  const auto above = shortest_cycle_above(k4, k4.lengths(), Rational(1, 2));
  ASSERT_TRUE(above.has_value());
  EXPECT_EQ(above->length, Rational(2, 3));
  EXPECT_EQ(above->witness.size(), 4U);
  const MetricGraph d = testing::dumbbell(kThird, kThird, kThird);
  EXPECT_FALSE(shortest_cycle_above(d, d.lengths(), kThird).has_value());
}

TEST(Bridges, Dumbbell) {
  EXPECT_EQ(find_bridges(testing::dumbbell(1, 1, 1)), (std::vector<bool>{false, false, true}));
  EXPECT_EQ(find_bridges(testing::theta(1, 1, 1)), (std::vector<bool>{false, false, false}));
}

// Brute-force agreement on every random multigraph with up to nine edges.
TEST(Oracle, AgreesOnSmallGraphs) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 600; ++i) {
    const std::size_t e = 1 + static_cast<std::size_t>(i) % 9;
    const MetricGraph g = testing::random_small_graph(rng, e, 1 + i % 4);
    const auto oracle = testing::oracle_cycles(g);
    ASSERT_FALSE(oracle.empty());
    const auto systoles = all_systoles(g);
    EXPECT_EQ(edge_sets(systoles), testing::oracle_systoles(g)) << serialize_graph(g);
    for (const Cycle& c : systoles) {
      EXPECT_TRUE(c.is_canonical());
      EXPECT_EQ(c.length(g), systoles.front().length(g));
    }
    EXPECT_EQ(shortest_cycle(g).length, systoles.front().length(g));

    // Bound at a random oracle cycle length.
    const Rational bound = oracle[rng() % oracle.size()].length;
    const auto bounded = cycles_up_to_length(g, bound);
    EXPECT_EQ(edge_sets(bounded), testing::oracle_cycles_up_to(g, bound)) << serialize_graph(g);
    EXPECT_EQ(bounded.size(), edge_sets(bounded).size());

    // Shortest strictly above the bound.
    std::optional<Rational> expected;
    for (const auto& c : oracle)
      if (c.length > bound && (!expected || c.length < *expected)) expected = c.length;
    const auto above = shortest_cycle_above(g, g.lengths(), bound);
    ASSERT_EQ(above.has_value(), expected.has_value()) << serialize_graph(g);
    if (above) {
      EXPECT_EQ(above->length, *expected);
      EXPECT_EQ(above->witness.length(g), *expected);
    }
    const Rational girth = systoles.front().length(g);
    const bool all_girth = std::all_of(oracle.begin(), oracle.end(),
                                       [&](const auto& c) { return c.length == girth; });
    EXPECT_EQ(!shortest_cycle_above(g, g.lengths(), girth).has_value(), all_girth);
  }
}

TEST(Oracle, SystolesAreEquivariant) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const MetricGraph g = testing::random_outer_space_graph(rng, 2 + i % 4, 2);
    const auto r = testing::random_relabeling(rng, g);
    const MetricGraph h = relabel(g, r.vertex_map, r.edge_map);
    std::set<EdgeSet> mapped;
    for (const Cycle& c : all_systoles(g)) {
      EdgeSet s;
      for (EdgeId id : c.edge_set()) s.insert(r.edge_map.at(id));
      mapped.insert(s);
    }
    EXPECT_EQ(edge_sets(all_systoles(h)), mapped);
  }
}

}  // namespace
}  // namespace systole
