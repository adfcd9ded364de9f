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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "systole/rational.hpp"

namespace systole {

using EdgeId = std::uint32_t;
using VertexId = std::uint32_t;

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;
  Rational length;

  bool is_loop() const { return u == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
};

// An edge end seen from a vertex. Loops appear twice in their vertex's list,
// once per end.
struct Incidence {
  std::size_t edge_index;
  VertexId neighbor;
  int end;  // 0 when the vertex is edge.u at this end, 1 for edge.v
};

// Per-edge weights indexed by position in MetricGraph::edges().
using EdgeWeights = std::vector<Rational>;

enum class GraphMode {
  // Rank >= 2 and every vertex of degree >= 3 (loops count twice).
  OuterSpace,
  // Rank >= 1, any degrees.
  Permissive,
};

// A finite connected multigraph with exact positive rational edge lengths.
// Edges are stored sorted by id; ids need not be contiguous.
class MetricGraph {
 public:
  MetricGraph(std::string name, std::size_t num_vertices, std::vector<Edge> edges);

  const std::string& name() const { return name_; }
  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge_at(std::size_t index) const { return edges_[index]; }

  // Throws Error(ForeignCycle) for unknown ids.
  const Edge& edge(EdgeId id) const;
  std::optional<std::size_t> index_of(EdgeId id) const;
  bool has_edge(EdgeId id) const { return index_of(id).has_value(); }

  const std::vector<Incidence>& incidences(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  // First Betti number E - V + 1.
  long rank() const;
  Rational volume() const;
  EdgeWeights lengths() const;

  // Same combinatorics with new lengths (indexed like edges()); lengths must
  // be positive.
  MetricGraph with_lengths(std::span<const Rational> lengths) const;
  MetricGraph renamed(std::string name) const;

 private:
  std::string name_;
  std::size_t num_vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

bool operator==(const MetricGraph& a, const MetricGraph& b);

// Throws Error(InvalidGraph) / Error(RankTooSmall) if g violates the mode.
void check_mode(const MetricGraph& g, GraphMode mode);
bool satisfies_mode(const MetricGraph& g, GraphMode mode);

// Line-based graph file. Rotation and twist lines are collected for map
// construction and otherwise ignored.
struct GraphFile {
  std::string name;
  std::size_t num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<std::pair<VertexId, std::vector<std::pair<EdgeId, int>>>> rotations;
  std::vector<EdgeId> twists;
};

GraphFile parse_graph_file(std::string_view text);
MetricGraph parse_graph(std::string_view text, GraphMode mode = GraphMode::Permissive);
std::string serialize_graph(const MetricGraph& g);

MetricGraph normalize_volume(const MetricGraph& g);

// Result of contracting a forest. Surviving edges keep their ids and lengths.
struct Contraction {
  MetricGraph graph;
  std::vector<VertexId> vertex_map;       // old vertex -> new vertex
  std::vector<EdgeId> contracted;         // sorted
  std::vector<EdgeId> surviving;          // sorted
};

// Throws Error(ContractionOfCycle) if the edges contain a loop or a cycle.
Contraction contract_forest(const MetricGraph& g, const std::set<EdgeId>& edge_ids);

struct Isomorphism {
  std::vector<VertexId> vertex_map;   // g1 vertex -> g2 vertex
  std::map<EdgeId, EdgeId> edge_map;  // g1 edge id -> g2 edge id
};

// Length-preserving multigraph isomorphism, or nullopt. Deterministic.
std::optional<Isomorphism> are_isomorphic(const MetricGraph& g1, const MetricGraph& g2);

// Applies a vertex permutation and an edge-id relabeling (old id -> new id).
MetricGraph relabel(const MetricGraph& g, std::span<const VertexId> vertex_map,
                    const std::map<EdgeId, EdgeId>& edge_map);

}  // namespace systole
