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
#include "systole/error.hpp"
#include "systole/graph.hpp"
#include "systole/rational.hpp"

namespace systole {
namespace {

using testing::dumbbell;
using testing::theta;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Internal;
}

TEST(Parse, ThetaFile) {
  const MetricGraph g = parse_graph(
      "# three parallel edges\ngraph theta\nvertices 2\n"
      "edge 0 0 1 1/3\nedge 1 0 1 1/3\nedge 2 0 1 1/3\n",
      GraphMode::OuterSpace);
  EXPECT_EQ(g.name(), "theta");
  EXPECT_EQ(g.num_vertices(), 2U);
  EXPECT_EQ(g.num_edges(), 3U);
  EXPECT_EQ(g.edge(1).length, Rational(1, 3));
  EXPECT_EQ(g.volume(), 1);
}

TEST(Parse, Errors) {
  EXPECT_EQ(kind_of([] { parse_graph("graph g\nvertices 1\nedge 0 0 0 0/1\nedge 1 0 0 1/2\n"); }),
            ErrorKind::NonPositiveLength);
  EXPECT_EQ(kind_of([] { parse_graph("graph g\nvertices 1\nedge 0 0 0 -1/2\n"); }),
            ErrorKind::NonPositiveLength);
  EXPECT_EQ(kind_of([] {
              parse_graph("graph g\nvertices 2\nedge 0 0 0 1/2\nedge 1 1 1 1/2\n");
            }),
            ErrorKind::Disconnected);
  EXPECT_EQ(kind_of([] { parse_graph("graph g\nvertices 1\nedge 0 0 0 1/2\nedge 0 0 0 1/2\n"); }),
            ErrorKind::DuplicateEdgeId);
  EXPECT_EQ(kind_of([] { parse_graph("graph g\nvertices 1\nedge 0 0 0 0.5\n"); }),
            ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([] { parse_graph("graph g\nvertices 1\nedge 0 0 0 1/0\n"); }),
            ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([] { parse_graph("graph g\nvertices 1\nedge 0 0 3 1/2\n"); }),
            ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([] { parse_graph("graph g\nvertices 1\nbogus\n"); }), ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([] { parse_graph("vertices 1\nedge 0 0 0 1/2\n"); }), ErrorKind::MalformedLine);
}

TEST(Parse, ModeChecks) {
  const std::string path = "graph p\nvertices 2\nedge 0 0 1 1/2\nedge 1 0 1 1/2\n";
  EXPECT_NO_THROW(parse_graph(path, GraphMode::Permissive));
  EXPECT_EQ(kind_of([&] { parse_graph(path, GraphMode::OuterSpace); }), ErrorKind::RankTooSmall);
  const std::string lollipop =
      "graph l\nvertices 3\nedge 0 0 0 1/4\nedge 1 0 0 1/4\nedge 2 0 1 1/4\nedge 3 1 2 1/4\n";
  EXPECT_EQ(kind_of([&] { parse_graph(lollipop, GraphMode::OuterSpace); }),
            ErrorKind::InvalidGraph);
  EXPECT_NO_THROW(parse_graph(lollipop, GraphMode::Permissive));
  EXPECT_EQ(kind_of([] { parse_graph("graph t\nvertices 2\nedge 0 0 1 1/1\n"); }),
            ErrorKind::RankTooSmall);
}

TEST(Parse, RoundTripIsIdentity) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const MetricGraph g = testing::random_outer_space_graph(rng, 2 + i % 4, 50);
    const std::string text = serialize_graph(g);
    const MetricGraph back = parse_graph(text, GraphMode::OuterSpace);
    EXPECT_EQ(back, g);
    EXPECT_EQ(serialize_graph(back), text);
  }
}

TEST(Normalize, Examples) {
  const auto lengths = [](const MetricGraph& g) { return g.lengths(); };
  EXPECT_EQ(lengths(normalize_volume(theta(1, 1, 1))),
            (EdgeWeights{Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
  const MetricGraph third = theta(Rational(1, 3), Rational(1, 3), Rational(1, 3));
  EXPECT_EQ(normalize_volume(third), third);
  EXPECT_EQ(lengths(normalize_volume(theta(2, 3, 5))),
            (EdgeWeights{Rational(1, 5), Rational(3, 10), Rational(1, 2)}));
}

TEST(Normalize, IdempotentAndRatioPreserving) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> scale(1, 9);
  for (int i = 0; i < 100; ++i) {
    const MetricGraph g = testing::random_outer_space_graph(rng, 2 + i % 4, 30);
    EdgeWeights w = g.lengths();
    for (auto& x : w) x *= scale(rng);
    const MetricGraph scaled = g.with_lengths(w);
    const MetricGraph n1 = normalize_volume(scaled);
    EXPECT_EQ(n1.volume(), 1);
    EXPECT_EQ(normalize_volume(n1), n1);
    for (std::size_t k = 1; k < w.size(); ++k) {
      EXPECT_EQ(n1.edge_at(k).length / n1.edge_at(0).length, w[k] / w[0]);
    }
  }
}

TEST(Rank, Formula) {
  EXPECT_EQ(theta(1, 1, 1).rank(), 2);
  EXPECT_EQ(testing::k4(1).rank(), 3);
  EXPECT_EQ(testing::rose({1, 1, 1, 1}).rank(), 4);
}

TEST(Contract, DumbbellBarGivesRose) {
  const MetricGraph g = dumbbell(Rational(1, 3), Rational(1, 3), Rational(1, 3));
  const Contraction c = contract_forest(g, {2});
  EXPECT_EQ(c.graph.num_vertices(), 1U);
  EXPECT_EQ(c.graph.num_edges(), 2U);
  EXPECT_EQ(c.graph.edge(0).length, Rational(1, 3));
  EXPECT_EQ(c.graph.edge(1).length, Rational(1, 3));
  EXPECT_TRUE(c.graph.edge(0).is_loop() && c.graph.edge(1).is_loop());
  EXPECT_EQ(c.contracted, std::vector<EdgeId>{2});
  EXPECT_EQ(c.surviving, (std::vector<EdgeId>{0, 1}));
  EXPECT_EQ(c.graph.rank(), g.rank());
}

TEST(Contract, EmptyIsIdentity) {
  const MetricGraph g = theta(1, 2, 3);
  const Contraction c = contract_forest(g, {});
  EXPECT_EQ(c.graph, g);
  EXPECT_EQ(c.vertex_map, (std::vector<VertexId>{0, 1}));
}

TEST(Contract, RejectsCyclesAndLoops) {
  EXPECT_EQ(kind_of([] { contract_forest(theta(1, 1, 1), {0, 1}); }), ErrorKind::ContractionOfCycle);
  EXPECT_EQ(kind_of([] { contract_forest(dumbbell(1, 1, 1), {0}); }), ErrorKind::ContractionOfCycle);
  EXPECT_EQ(kind_of([] { contract_forest(dumbbell(1, 1, 1), {7}); }), ErrorKind::ForeignCycle);
}

TEST(Contract, RandomForestsPreserveRank) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const MetricGraph g = testing::random_outer_space_graph(rng, 2 + i % 4, 10);
    // Grow a random forest greedily in shuffled edge order.
    std::vector<std::size_t> order(g.num_edges());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<VertexId> comp(g.num_vertices());
    std::iota(comp.begin(), comp.end(), 0);
    std::set<EdgeId> forest;
    for (std::size_t k : order) {
      const Edge& e = g.edge_at(k);
      if (comp[e.u] == comp[e.v] || rng() % 2) continue;
      const VertexId from = comp[e.v];
      for (auto& x : comp)
        if (x == from) x = comp[e.u];
      forest.insert(e.id);
    }
    const Contraction c = contract_forest(g, forest);
    EXPECT_EQ(c.graph.rank(), g.rank());
    EXPECT_EQ(c.graph.num_vertices(), g.num_vertices() - forest.size());
  }
}

TEST(Isomorphism, Examples) {
  const MetricGraph t = theta(Rational(1, 3), Rational(1, 3), Rational(1, 3));
  const MetricGraph flipped("theta", 2, {{5, 1, 0, Rational(1, 3)}, {7, 0, 1, Rational(1, 3)},
                                         {9, 1, 0, Rational(1, 3)}});
  const auto iso = are_isomorphic(t, flipped);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(iso->edge_map.size(), 3U);
  const MetricGraph d = dumbbell(Rational(1, 3), Rational(1, 3), Rational(1, 3));
  EXPECT_FALSE(are_isomorphic(t, d).has_value());
  EXPECT_FALSE(are_isomorphic(d, dumbbell(Rational(1, 4), Rational(1, 4), Rational(1, 2))).has_value());
}

TEST(Isomorphism, RandomRelabelings) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    const MetricGraph g = testing::random_outer_space_graph(rng, 2 + i % 4, 3);
    EXPECT_TRUE(are_isomorphic(g, g).has_value());
    const auto r = testing::random_relabeling(rng, g);
    const MetricGraph h = relabel(g, r.vertex_map, r.edge_map);
    const auto forward = are_isomorphic(g, h);
    ASSERT_TRUE(forward.has_value());
    ASSERT_TRUE(are_isomorphic(h, g).has_value());
    // The returned maps really are a length-preserving isomorphism.
    for (const Edge& e : g.edges()) {
      const Edge& image = h.edge(forward->edge_map.at(e.id));
      EXPECT_EQ(image.length, e.length);
      const std::set<VertexId> ends{forward->vertex_map[e.u], forward->vertex_map[e.v]};
      EXPECT_EQ(ends, (std::set<VertexId>{image.u, image.v}));
    }
    // Changing one length breaks it.
    EdgeWeights w = h.lengths();
    w[0] += 1;
    EXPECT_FALSE(are_isomorphic(g, h.with_lengths(w)).has_value());
  }
}

}  // namespace
}  // namespace systole
