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

#include "systole/flow.hpp"

#include <algorithm>
#include <iterator>

namespace systole {

namespace {

bool in_support(const FlowState& state, const Edge& e) { return state.support.edges.count(e.id) > 0; }

}  // namespace

FlowState FlowState::start(const MetricGraph& g, const CycleSearchOptions& options) {
  auto systoles = all_systoles(g, options);
  auto support = systole_support(g, systoles);
  Rational sigma = systoles.front().length(g);
  return FlowState{g, std::move(systoles), std::move(support), std::move(sigma), Rational(1)};
}

std::string_view to_string(EventKind kind) {
  return kind == EventKind::NewSystoles ? "NewSystoles" : "StageComplete";
}

EdgeWeights flow_lengths_at(const FlowState& state, const Rational& u) {
  if (u < state.u || u > state.max_u()) {
    throw Error(ErrorKind::ParameterOutOfRange,
                "flow parameter " + to_fraction_string(u) + " outside [" +
                    to_fraction_string(state.u) + ", " + to_fraction_string(state.max_u()) + "]");
  }
  const Rational v = u / state.u;
  const Rational& s = state.support.length;
  EdgeWeights w = state.graph.lengths();
  if (s == 1) return w;
  const Rational shrink = (1 - v * s) / (1 - s);
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] *= in_support(state, state.graph.edge_at(i)) ? v : shrink;
  }
  return w;
}

FlowEvent next_event(const FlowState& state, const CycleSearchOptions& options) {
  const MetricGraph& g = state.graph;
  if (state.support.complement.empty()) {
    throw Error(ErrorKind::InvalidGraph, "systoles already cover '" + g.name() + "'");
  }
  const Rational& s = state.support.length;
  const Rational& sigma = state.sigma;
  const Rational u_max = state.max_u();

  // Length of a cycle along the segment is a*v + b*(1 - v s)/(1 - s) with a, b
  // its systole-edge and other-edge lengths at v = 1. Root of that piece
  // against v*sigma.
  auto piece_root = [&](const Cycle& c) -> Rational {
    Rational a = 0, b = 0;
    for (const Step& step : c.steps()) {
      const Edge& e = g.edge(step.edge);
      (in_support(state, e) ? a : b) += e.length;
    }
    const Rational denominator = sigma - a + b * s / (1 - s);
    if (sgn(denominator) <= 0) throw Error(ErrorKind::Internal, "flow piece is not decreasing");
    return state.u * (b / (1 - s)) / denominator;
  };

  // Parametric Newton from the right end on the concave function
  // min_{non-systole C} len_C(u) - u*sigma/state.u.
  Rational u = u_max;
  const std::size_t iteration_limit = 4 * g.num_edges() + 1000;
  for (std::size_t iteration = 0;; ++iteration) {
    if (iteration > iteration_limit) {
      throw Error(ErrorKind::Internal, "event search did not converge");
    }
    const EdgeWeights w = flow_lengths_at(state, u);
    const Rational target = sigma * u / state.u;
    auto girth = detail::girth_any_witness(g, w);
    if (!girth) throw Error(ErrorKind::Internal, "flow graph lost its cycles");
    if (girth->length < target) {
      Rational root = piece_root(girth->witness);
      if (root >= u || root <= state.u) throw Error(ErrorKind::Internal, "event search stalled");
      u = root;
      continue;
    }
    if (girth->length > target) throw Error(ErrorKind::Internal, "systoles lost minimality");

    std::vector<Cycle> minimal = cycles_up_to_length(g, w, target, options);
    std::vector<Cycle> added;
    std::set_difference(minimal.begin(), minimal.end(), state.systoles.begin(),
                        state.systoles.end(), std::back_inserter(added));
    if (added.empty() && u != u_max) {
      throw Error(ErrorKind::Internal, "event search converged to a non-event");
    }

    {
      Rational volume = 0;
      for (const auto& x : w) volume += x;
      if (volume != 1) throw Error(ErrorKind::Internal, "flow left the unit-volume slice");
    }
    const EventKind kind = added.empty() ? EventKind::StageComplete : EventKind::NewSystoles;
    if (u != u_max) {
      MetricGraph snapshot = g.with_lengths(w);
      const long betti = support_betti_number(snapshot, systole_support(snapshot, minimal));
      return FlowEvent{kind, u, 0, std::move(added), {}, std::move(snapshot),
                       std::move(minimal), target, betti};
    }
    // Non-systole edges have length zero: collapse them.
    Contraction contraction = [&] {
      try {
        return contract_forest(g, state.support.complement);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::ContractionOfCycle) throw;
        throw Error(ErrorKind::DegenerateStage,
                    "non-systole edges of '" + g.name() + "' contain a cycle at collapse");
      }
    }();
    EdgeWeights surviving;
    for (EdgeId id : contraction.surviving) surviving.push_back(w[*g.index_of(id)]);
    MetricGraph snapshot = contraction.graph.with_lengths(surviving);
    auto systoles = all_systoles(snapshot, options);
    const long betti = support_betti_number(snapshot, systole_support(snapshot, systoles));
    return FlowEvent{kind,    u,        0, std::move(added), contraction.contracted,
                     std::move(snapshot), std::move(systoles), target, betti};
  }
}

Trajectory retract_to_spine(const MetricGraph& g, const FlowLimits& limits) {
  check_mode(g, GraphMode::OuterSpace);
  if (g.volume() != 1) {
    throw Error(ErrorKind::InvalidGraph, "graph '" + g.name() + "' has volume " +
                                             to_fraction_string(g.volume()) + ", expected 1/1");
  }
  const std::size_t max_events = limits.max_events_per_stage.value_or(10 * g.num_edges());
  const std::size_t max_contractions = limits.max_contractions.value_or(10 * g.num_vertices());

  FlowState state = FlowState::start(g, limits.search);
  Trajectory trajectory{g, state.systoles, state.sigma,
                        support_betti_number(g, state.support), {}};
  std::size_t stage = 0;
  std::size_t events_in_stage = 0;
  std::size_t contractions = 0;
  while (!state.support.complement.empty()) {
    FlowEvent event = next_event(state, limits.search);
    event.stage = stage;
    const bool collapsed = !event.contracted.empty();
    contractions += event.contracted.size();
    ++events_in_stage;
    trajectory.events.push_back(event);
    if (events_in_stage > max_events) {
      throw CapExceededError("more than " + std::to_string(max_events) + " events in stage " +
                                 std::to_string(stage),
                             trajectory);
    }
    if (contractions > max_contractions) {
      throw CapExceededError(
          "more than " + std::to_string(max_contractions) + " edge contractions", trajectory);
    }
    if (collapsed) {
      state = FlowState::start(event.snapshot, limits.search);
      ++stage;
      events_in_stage = 0;
    } else {
      auto support = systole_support(event.snapshot, event.systoles);
      state = FlowState{std::move(event.snapshot), std::move(event.systoles), std::move(support),
                        std::move(event.systole_length), std::move(event.u)};
    }
  }
  return trajectory;
}

}  // namespace systole
