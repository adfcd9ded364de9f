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
#include "systole/fill.hpp"
#include "systole/flow.hpp"

namespace systole {
namespace {

const Rational kThird(1, 3);

MetricGraph theta_long() { return testing::theta(Rational(1, 2), Rational(1, 4), Rational(1, 4)); }
MetricGraph dumbbell_equal() { return testing::dumbbell(kThird, kThird, kThird); }
MetricGraph dumbbell_unequal() { return testing::dumbbell(Rational(1, 4), Rational(5, 12), kThird); }

TEST(FlowLengths, Examples) {
  const FlowState d = FlowState::start(dumbbell_equal());
  EXPECT_EQ(flow_lengths_at(d, 1), dumbbell_equal().lengths());
  EXPECT_EQ(d.max_u(), Rational(3, 2));
  EXPECT_EQ(flow_lengths_at(d, Rational(3, 2)), (EdgeWeights{Rational(1, 2), Rational(1, 2), 0}));

  const FlowState t = FlowState::start(theta_long());
  EXPECT_EQ(t.support.edges, (std::set<EdgeId>{1, 2}));
  EXPECT_EQ(t.support.length, Rational(1, 2));
  EXPECT_EQ(flow_lengths_at(t, Rational(4, 3)), (EdgeWeights{kThird, kThird, kThird}));
}

TEST(FlowLengths, VolumeIsConstant) {
  const FlowState s = FlowState::start(dumbbell_unequal());
  for (Rational u = 1; u <= s.max_u(); u += Rational(1, 7)) {
    Rational total = 0;
    for (const Rational& x : flow_lengths_at(s, u)) total += x;
    EXPECT_EQ(total, 1);
  }
}

TEST(FlowLengths, OutOfRange) {
  const FlowState s = FlowState::start(dumbbell_equal());
  for (const Rational& u : {Rational(1, 2), Rational(2)}) {
    try {
      flow_lengths_at(s, u);
      ADD_FAILURE() << "expected ParameterOutOfRange";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParameterOutOfRange);
    }
  }
}

TEST(NextEvent, Examples) {
  const FlowEvent a = next_event(FlowState::start(dumbbell_unequal()));
  EXPECT_EQ(a.kind, EventKind::NewSystoles);
  EXPECT_EQ(a.u, Rational(10, 7));
  ASSERT_EQ(a.new_systoles.size(), 1U);
  EXPECT_EQ(a.new_systoles[0].edge_set(), std::set<EdgeId>{1});
  EXPECT_TRUE(a.contracted.empty());
  EXPECT_EQ(a.systole_length, Rational(5, 14));

  const FlowEvent b = next_event(FlowState::start(dumbbell_equal()));
  EXPECT_EQ(b.kind, EventKind::StageComplete);
  EXPECT_EQ(b.u, Rational(3, 2));
  EXPECT_EQ(b.contracted, std::vector<EdgeId>{2});
  EXPECT_EQ(b.snapshot.num_vertices(), 1U);

  const FlowEvent c = next_event(FlowState::start(theta_long()));
  EXPECT_EQ(c.kind, EventKind::NewSystoles);
  EXPECT_EQ(c.u, Rational(4, 3));
  ASSERT_EQ(c.new_systoles.size(), 2U);
  for (const Cycle& cyc : c.new_systoles) EXPECT_TRUE(cyc.edge_set().count(0));
  EXPECT_EQ(c.systoles.size(), 3U);
}

TEST(NextEvent, RefusesFillingGraph) {
  EXPECT_THROW(next_event(FlowState::start(testing::theta(kThird, kThird, kThird))), Error);
}

TEST(Retract, Examples) {
  const Trajectory t = retract_to_spine(theta_long());
  ASSERT_EQ(t.events.size(), 1U);
  EXPECT_EQ(t.events[0].u, Rational(4, 3));
  EXPECT_TRUE(are_isomorphic(t.final_graph(), testing::theta(kThird, kThird, kThird)).has_value());
  EXPECT_EQ(t.final_systole_length(), Rational(2, 3));

  const Trajectory d = retract_to_spine(dumbbell_equal());
  ASSERT_EQ(d.events.size(), 1U);
  EXPECT_EQ(d.events[0].kind, EventKind::StageComplete);
  EXPECT_TRUE(are_isomorphic(d.final_graph(), testing::rose({Rational(1, 2), Rational(1, 2)})));
  EXPECT_EQ(d.initial_systole_length, kThird);
  EXPECT_EQ(d.final_systole_length(), Rational(1, 2));

  const Trajectory u = retract_to_spine(dumbbell_unequal());
  ASSERT_EQ(u.events.size(), 2U);
  EXPECT_EQ(u.events[1].kind, EventKind::StageComplete);
  EXPECT_EQ(u.events[1].u, 2);
  EXPECT_TRUE(are_isomorphic(u.final_graph(), testing::rose({Rational(1, 2), Rational(1, 2)})));

  const Trajectory still = retract_to_spine(testing::theta(kThird, kThird, kThird));
  EXPECT_TRUE(still.events.empty());
  EXPECT_EQ(still.final_graph(), testing::theta(kThird, kThird, kThird));
}

TEST(Retract, Preconditions) {
  EXPECT_THROW(retract_to_spine(testing::theta(1, 1, 1)), Error);  // volume 3
  const MetricGraph path("p", 2, {{0, 0, 1, Rational(1, 2)}, {1, 0, 1, Rational(1, 2)}});
  EXPECT_THROW(retract_to_spine(path), Error);  // rank 1
}

TEST(Retract, Caps) {
  FlowLimits one_event;
  one_event.max_events_per_stage = 1;
  try {
    retract_to_spine(dumbbell_unequal(), one_event);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceededError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
    EXPECT_EQ(e.partial().events.size(), 2U);
    EXPECT_EQ(e.partial().events[0].u, Rational(10, 7));
  }
  FlowLimits no_contraction;
  no_contraction.max_contractions = 0;
  try {
    retract_to_spine(dumbbell_equal(), no_contraction);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceededError& e) {
    EXPECT_EQ(e.partial().events.size(), 1U);
  }
}

// Structural laws along random trajectories.
TEST(Retract, RandomTrajectoryLaws) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 120; ++t) {
    const MetricGraph g = testing::random_outer_space_graph(rng, 2 + t % 4, 1 + t % 5);
    const Trajectory traj = retract_to_spine(g);
    Rational stage_sigma = traj.initial_systole_length;
    Rational last_u = 1, last_sigma = stage_sigma;
    long last_betti = traj.initial_support_betti;
    std::size_t stage = 0, contracted = 0;
    for (const FlowEvent& e : traj.events) {
      if (e.stage != stage) {
        stage = e.stage;
        last_u = 1;
      }
      EXPECT_GT(e.u, last_u);
      EXPECT_EQ(e.systole_length, e.u * stage_sigma) << serialize_graph(g);
      EXPECT_EQ(e.snapshot.volume(), 1);
      EXPECT_GE(e.systole_length, last_sigma);
      EXPECT_GE(e.support_betti, last_betti);
      EXPECT_EQ(e.snapshot.rank(), g.rank());
      EXPECT_EQ(e.systoles, all_systoles(e.snapshot));
      if (e.kind == EventKind::NewSystoles) {
        EXPECT_FALSE(e.new_systoles.empty());
      } else {
        EXPECT_FALSE(e.contracted.empty());
        stage_sigma = e.systole_length;
      }
      contracted += e.contracted.size();
      last_u = e.u;
      last_sigma = e.systole_length;
      last_betti = e.support_betti;
    }
    EXPECT_LE(contracted, g.num_vertices() - 1);
    EXPECT_TRUE(geometrically_fills(traj.final_graph()));
  }
}

}  // namespace
}  // namespace systole
