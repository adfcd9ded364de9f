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

#include "systole/fill.hpp"

#include <numeric>

#include "systole/error.hpp"

namespace systole {

namespace {

// Components of the subgraph formed by the given vertices and edges.
long count_components(const MetricGraph& g, const std::set<VertexId>& vertices,
                      const std::vector<const Edge*>& edges) {
  std::vector<VertexId> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  long components = static_cast<long>(vertices.size());
  for (const Edge* e : edges) {
    VertexId a = find(e->u), b = find(e->v);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --components;
    }
  }
  return components;
}

}  // namespace

SystoleSupport systole_support(const MetricGraph& g, std::span<const Cycle> systoles) {
  SystoleSupport support;
  support.length = 0;
  for (const Cycle& c : systoles) {
    for (const Step& s : c.steps()) support.edges.insert(s.edge);
  }
  for (const Edge& e : g.edges()) {
    if (support.edges.count(e.id)) {
      support.length += e.length;
      support.vertices.insert(e.u);
      support.vertices.insert(e.v);
    } else {
      support.complement.insert(e.id);
    }
  }
  return support;
}

SystoleSupport systole_support(const MetricGraph& g, const CycleSearchOptions& options) {
  const auto systoles = all_systoles(g, options);
  return systole_support(g, systoles);
}

long support_betti_number(const MetricGraph& g, const SystoleSupport& support) {
  std::vector<const Edge*> edges;
  for (EdgeId id : support.edges) edges.push_back(&g.edge(id));
  return static_cast<long>(edges.size()) - static_cast<long>(support.vertices.size()) +
         count_components(g, support.vertices, edges);
}

bool topologically_fills(const MetricGraph& g, const SystoleSupport& support) {
  std::set<VertexId> outside;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!support.vertices.count(v)) outside.insert(v);
  }
  std::vector<const Edge*> edges;
  for (const Edge& e : g.edges()) {
    if (outside.count(e.u) && outside.count(e.v)) edges.push_back(&e);
  }
  // A forest has E = V - (number of components).
  const long components = count_components(g, outside, edges);
  return static_cast<long>(edges.size()) == static_cast<long>(outside.size()) - components;
}

bool topologically_fills(const MetricGraph& g, const CycleSearchOptions& options) {
  return topologically_fills(g, systole_support(g, options));
}

bool geometrically_fills(const MetricGraph& g, const SystoleSupport& support) {
  return support.edges.size() == g.num_edges();
}

bool geometrically_fills(const MetricGraph& g, const CycleSearchOptions& options) {
  return geometrically_fills(g, systole_support(g, options));
}

Membership classify_membership(const MetricGraph& g, const CycleSearchOptions& options) {
  check_mode(g, GraphMode::OuterSpace);
  Membership m;
  m.systoles = all_systoles(g, options);
  m.systole_length = m.systoles.front().length(g);
  m.lattice = cycle_lattice(g, m.systoles);
  m.support = systole_support(g, m.systoles);
  m.in_W = m.lattice.rank == static_cast<std::size_t>(g.rank());
  m.in_V = topologically_fills(g, m.support);
  m.in_Vprime = geometrically_fills(g, m.support);
  if ((m.in_W && !m.in_V) || (m.in_Vprime && !m.in_V)) {
    throw Error(ErrorKind::Internal, "membership containments violated for '" + g.name() + "'");
  }
  return m;
}

}  // namespace systole
