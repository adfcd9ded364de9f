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

#pragma once

#include <optional>
#include <vector>

#include "systole/cycles.hpp"
#include "systole/error.hpp"
#include "systole/fill.hpp"

namespace systole {

// A point on a flow line. Within a stage the flow is parametrized by
// u = e^t; edge lengths are linear in u on each segment between events, so
// every event time is an exact rational.
struct FlowState {
  MetricGraph graph;            // lengths at parameter u; volume 1
  std::vector<Cycle> systoles;  // canonical, sorted
  SystoleSupport support;
  Rational sigma;               // current systole length
  Rational u;                   // stage parameter, starts at 1

  static FlowState start(const MetricGraph& g, const CycleSearchOptions& options = {});

  // Largest parameter reachable without changing the systole set: the point
  // where the non-systole edges reach length zero.
  Rational max_u() const { return u / support.length; }
};

// Systole edges scaled by u / state.u, the others by (1 - v s) / (1 - s) with
// v = u / state.u and s the support length. Requires state.u <= u <= max_u().
EdgeWeights flow_lengths_at(const FlowState& state, const Rational& u);

enum class EventKind { NewSystoles, StageComplete };

std::string_view to_string(EventKind kind);

struct FlowEvent {
  EventKind kind = EventKind::NewSystoles;
  Rational u;
  std::size_t stage = 0;
  std::vector<Cycle> new_systoles;   // edge ids of the pre-contraction graph
  std::vector<EdgeId> contracted;    // empty unless the non-systole forest collapsed
  MetricGraph snapshot;              // graph right after the event
  std::vector<Cycle> systoles;       // full systole set of snapshot
  Rational systole_length;
  long support_betti = 0;            // first Betti number of the systole union
};

// The first event after state.u. A tie between new systoles and the collapse
// of the non-systole edges at max_u() is reported as NewSystoles, and the
// collapse is carried out in the same event.
// Throws Error(DegenerateStage) if the collapsing edges contain a cycle.
FlowEvent next_event(const FlowState& state, const CycleSearchOptions& options = {});

struct FlowLimits {
  std::optional<std::size_t> max_events_per_stage;  // default 10 E
  std::optional<std::size_t> max_contractions;      // default 10 V
  CycleSearchOptions search;
};

struct Trajectory {
  MetricGraph initial;
  std::vector<Cycle> initial_systoles;
  Rational initial_systole_length;
  long initial_support_betti = 0;
  std::vector<FlowEvent> events;

  const MetricGraph& final_graph() const {
    return events.empty() ? initial : events.back().snapshot;
  }
  const std::vector<Cycle>& final_systoles() const {
    return events.empty() ? initial_systoles : events.back().systoles;
  }
  const Rational& final_systole_length() const {
    return events.empty() ? initial_systole_length : events.back().systole_length;
  }
};

class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& message, Trajectory partial)
      : Error(ErrorKind::CapExceeded, message), partial_(std::move(partial)) {}
  const Trajectory& partial() const { return partial_; }

 private:
  Trajectory partial_;
};

// Flows g (Outer-space mode, volume 1) until its systoles cover the graph.
Trajectory retract_to_spine(const MetricGraph& g, const FlowLimits& limits = {});

}  // namespace systole
