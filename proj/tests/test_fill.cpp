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
#include "systole/datasets.hpp"
#include "systole/error.hpp"
#include "systole/fill.hpp"

namespace systole {
namespace {

const Rational kThird(1, 3);

TEST(Support, Examples) {
  const auto theta = systole_support(testing::theta(kThird, kThird, kThird));
  EXPECT_EQ(theta.edges, (std::set<EdgeId>{0, 1, 2}));
  EXPECT_EQ(theta.length, 1);
  EXPECT_TRUE(theta.complement.empty());

  const MetricGraph equal = testing::dumbbell(kThird, kThird, kThird);
  const auto de = systole_support(equal);
  EXPECT_EQ(de.edges, (std::set<EdgeId>{0, 1}));
  EXPECT_EQ(de.vertices, (std::set<VertexId>{0, 1}));
  EXPECT_EQ(de.length, Rational(2, 3));
  EXPECT_EQ(de.complement, std::set<EdgeId>{2});
  EXPECT_EQ(support_betti_number(equal, de), 2);

  const MetricGraph unequal = testing::dumbbell(Rational(1, 4), Rational(5, 12), kThird);
  const auto du = systole_support(unequal);
  EXPECT_EQ(du.edges, std::set<EdgeId>{0});
  EXPECT_EQ(du.length, Rational(1, 4));
  EXPECT_EQ(support_betti_number(unequal, du), 1);
}

TEST(Fill, Examples) {
  EXPECT_TRUE(topologically_fills(testing::dumbbell(kThird, kThird, kThird)));
  EXPECT_FALSE(topologically_fills(testing::dumbbell(Rational(1, 4), Rational(5, 12), kThird)));
  EXPECT_TRUE(topologically_fills(testing::theta(kThird, kThird, kThird)));
  EXPECT_TRUE(geometrically_fills(testing::theta(kThird, kThird, kThird)));
  EXPECT_FALSE(geometrically_fills(testing::dumbbell(kThird, kThird, kThird)));
}

TEST(Fill, TouchingAtAVertexCountsAsMeeting) {
  // Two short loops at vertex 0 and a long bigon through vertices 0 and 1.
  const MetricGraph g("touch", 2, {{0, 0, 0, 1}, {1, 0, 0, 1}, {2, 0, 1, 5}, {3, 0, 1, 5}});
  EXPECT_TRUE(topologically_fills(g));
  EXPECT_TRUE(testing::oracle_topologically_fills(g));
  EXPECT_FALSE(geometrically_fills(g));
}

TEST(Fill, KleinSkeletonIsCovered) {
  const MetricGraph klein = std::get<CombinatorialMap>(bundled_dataset("klein_73")).skeleton();
  EXPECT_TRUE(geometrically_fills(klein));
}

TEST(Membership, Examples) {
  const auto equal = classify_membership(testing::dumbbell(kThird, kThird, kThird));
  EXPECT_TRUE(equal.in_W);
  EXPECT_TRUE(equal.in_V);
  EXPECT_FALSE(equal.in_Vprime);
  const auto theta = classify_membership(testing::theta(kThird, kThird, kThird));
  EXPECT_TRUE(theta.in_W && theta.in_V && theta.in_Vprime);
  EXPECT_EQ(theta.systoles.size(), 3U);
  EXPECT_EQ(theta.systole_length, Rational(2, 3));
  const auto unequal = classify_membership(testing::dumbbell(Rational(1, 4), Rational(5, 12), kThird));
  EXPECT_FALSE(unequal.in_W || unequal.in_V || unequal.in_Vprime);
}

TEST(Membership, RefusesRankOne) {
  try {
    classify_membership(testing::rose({1}));
    FAIL() << "expected RankTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankTooSmall);
  }
}

// Exhaustive oracle on 1000 random rank-2 and rank-3 graphs.
TEST(Membership, OracleAndContainments) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 1000; ++t) {
    const MetricGraph g = testing::random_outer_space_graph(rng, 2 + t % 2, 1 + t % 3);
    const Membership m = classify_membership(g);
    EXPECT_EQ(m.in_V, testing::oracle_topologically_fills(g)) << serialize_graph(g);
    if (m.in_W) EXPECT_TRUE(m.in_V);
    if (m.in_Vprime) EXPECT_TRUE(m.in_V);
    EXPECT_EQ(m.in_Vprime, m.support.complement.empty());
    // Invariance under relabeling.
    const auto r = testing::random_relabeling(rng, g);
    const Membership h = classify_membership(relabel(g, r.vertex_map, r.edge_map));
    EXPECT_EQ(std::tie(h.in_W, h.in_V, h.in_Vprime), std::tie(m.in_W, m.in_V, m.in_Vprime));
  }
}

}  // namespace
}  // namespace systole
