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

#include "systole/cycle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "systole/error.hpp"

namespace systole {

namespace {

VertexId tail(const MetricGraph& g, const Step& s) {
  const Edge& e = g.edge(s.edge);
  return s.forward ? e.u : e.v;
}

VertexId head(const MetricGraph& g, const Step& s) {
  const Edge& e = g.edge(s.edge);
  return s.forward ? e.v : e.u;
}

std::vector<Step> reflect(const std::vector<Step>& steps) {
  std::vector<Step> out(steps.rbegin(), steps.rend());
  for (auto& s : out) s.forward = !s.forward;
  return out;
}

// Orders by edge id first, then prefers forward steps.
bool canonical_less(const std::vector<Step>& a, const std::vector<Step>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].edge != b[i].edge) return a[i].edge < b[i].edge;
    if (a[i].forward != b[i].forward) return a[i].forward;
  }
  return false;
}

}  // namespace

Cycle Cycle::from_steps(const MetricGraph& g, std::vector<Step> steps) {
  if (steps.empty()) throw Error(ErrorKind::ForeignCycle, "empty cycle");
  std::vector<VertexId> tails;
  std::vector<EdgeId> ids;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    if (!g.has_edge(s.edge)) {
      throw Error(ErrorKind::ForeignCycle, "cycle uses edge " + std::to_string(s.edge) +
                                               " which is not in the graph");
    }
    const Step& next = steps[(i + 1) % steps.size()];
    if (head(g, s) != tail(g, next)) {
      throw Error(ErrorKind::ForeignCycle, "cycle steps do not connect");
    }
    tails.push_back(tail(g, s));
    ids.push_back(s.edge);
  }
  std::sort(tails.begin(), tails.end());
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(tails.begin(), tails.end()) != tails.end() ||
      std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw Error(ErrorKind::ForeignCycle, "cycle is not embedded");
  }
  return Cycle(std::move(steps));
}

Cycle Cycle::from_edge_set(const MetricGraph& g, const std::set<EdgeId>& edges) {
  if (edges.empty()) throw Error(ErrorKind::ForeignCycle, "empty edge set");
  const EdgeId first = *edges.begin();
  const Edge& e0 = g.edge(first);
  std::vector<Step> steps{{first, true}};
  if (!e0.is_loop()) {
    std::map<VertexId, std::vector<EdgeId>> at;
    for (EdgeId id : edges) {
      const Edge& e = g.edge(id);
      at[e.u].push_back(id);
      at[e.v].push_back(id);
    }
    VertexId current = e0.v;
    EdgeId previous = first;
    while (current != e0.u) {
      const auto& here = at[current];
      if (here.size() != 2) throw Error(ErrorKind::ForeignCycle, "edge set is not a cycle");
      EdgeId next = here[0] == previous ? here[1] : here[0];
      const Edge& e = g.edge(next);
      steps.push_back({next, e.u == current});
      current = e.other(current);
      previous = next;
      if (steps.size() > edges.size()) {
        throw Error(ErrorKind::ForeignCycle, "edge set is not a cycle");
      }
    }
  }
  if (steps.size() != edges.size()) throw Error(ErrorKind::ForeignCycle, "edge set is not a cycle");
  return from_steps(g, std::move(steps)).canonical();
}

std::vector<EdgeId> Cycle::edge_sequence() const {
  std::vector<EdgeId> ids;
  ids.reserve(steps_.size());
  for (const Step& s : steps_) ids.push_back(s.edge);
  return ids;
}

std::set<EdgeId> Cycle::edge_set() const {
  std::set<EdgeId> ids;
  for (const Step& s : steps_) ids.insert(s.edge);
  return ids;
}

std::set<VertexId> Cycle::vertex_set(const MetricGraph& g) const {
  std::set<VertexId> vs;
  for (const Step& s : steps_) vs.insert(tail(g, s));
  return vs;
}

Rational Cycle::length(const MetricGraph& g) const {
  Rational total = 0;
  for (const Step& s : steps_) total += g.edge(s.edge).length;
  return total;
}

Rational Cycle::length(const MetricGraph& g, std::span<const Rational> weights) const {
  Rational total = 0;
  for (const Step& s : steps_) total += weights[*g.index_of(s.edge)];
  return total;
}

Cycle Cycle::canonical() const {
  std::vector<Step> best = steps_;
  const std::size_t n = steps_.size();
  for (const auto& base : {steps_, reflect(steps_)}) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Step> candidate(n);
      for (std::size_t i = 0; i < n; ++i) candidate[i] = base[(r + i) % n];
      if (canonical_less(candidate, best)) best = std::move(candidate);
    }
  }
  return Cycle(std::move(best));
}

Cycle Cycle::reversed() const { return Cycle(reflect(steps_)); }

std::string Cycle::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out << ' ';
    out << steps_[i].edge << (steps_[i].forward ? '+' : '-');
  }
  return out.str();
}

}  // namespace systole
