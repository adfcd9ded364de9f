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

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "systole/cycles.hpp"
#include "systole/graph.hpp"

namespace systole {

// One end of an edge: end 0 sits at edge.u, end 1 at edge.v.
struct Dart {
  EdgeId edge = 0;
  int end = 0;

  auto operator<=>(const Dart&) const = default;
};

// A graph with a rotation system: the cyclic (counterclockwise) order of darts
// at every vertex. Edges may carry a twist, which makes the surface
// non-orientable; without twists the surface is oriented and faces are the
// orbits of sigma∘alpha.
//
// Internally dart d = 2 * edge_index + end, and a flag is 2 * d + side, where
// side 0 is the corner between d and sigma(d) and side 1 the corner between
// sigma^-1(d) and d.
class CombinatorialMap {
 public:
  CombinatorialMap(MetricGraph graph, std::vector<std::vector<Dart>> rotations,
                   std::set<EdgeId> twisted = {});

  const MetricGraph& graph() const { return graph_; }
  // The underlying graph with every edge of length 1.
  MetricGraph skeleton() const;
  const std::vector<std::vector<Dart>>& rotations() const { return rotations_; }
  const std::set<EdgeId>& twisted_edges() const { return twisted_ids_; }

  std::size_t num_darts() const { return 2 * graph_.num_edges(); }
  std::size_t num_flags() const { return 4 * graph_.num_edges(); }
  std::size_t alpha(std::size_t d) const { return d ^ 1U; }
  std::size_t sigma(std::size_t d) const { return sigma_[d]; }
  std::size_t sigma_inverse(std::size_t d) const { return sigma_inv_[d]; }
  VertexId vertex_of(std::size_t d) const;
  Dart dart(std::size_t d) const;

  // Flag involutions: r0 changes the vertex, r1 the edge, r2 the face.
  std::size_t r0(std::size_t flag) const;
  std::size_t r1(std::size_t flag) const;
  std::size_t r2(std::size_t flag) const { return flag ^ 1U; }

  bool orientable() const;

 private:
  MetricGraph graph_;
  std::vector<std::vector<Dart>> rotations_;
  std::set<EdgeId> twisted_ids_;
  std::vector<bool> twisted_;  // by edge index
  std::vector<std::size_t> sigma_;
  std::vector<std::size_t> sigma_inv_;
};

CombinatorialMap parse_map(std::string_view text);
std::string serialize_map(const CombinatorialMap& m);

struct Face {
  std::vector<Step> boundary;
  bool embedded = false;
};

struct FaceTrace {
  std::vector<Face> faces;
  long euler_characteristic = 0;
  bool orientable = true;
  long genus = 0;  // handles if orientable, crosscaps otherwise
  bool all_embedded = true;

  // Canonical boundary cycles of the embedded faces (duplicates removed).
  std::vector<Cycle> boundary_cycles(const MetricGraph& skeleton) const;
};

FaceTrace trace_faces(const CombinatorialMap& m);

struct MapType {
  std::size_t p = 0;  // common face length, 0 if faces differ
  std::size_t q = 0;  // common vertex degree, 0 if degrees differ
  bool uniform = false;
  std::map<std::size_t, std::size_t> face_lengths;    // length -> count
  std::map<std::size_t, std::size_t> vertex_degrees;  // degree -> count
};

MapType map_type_check(const CombinatorialMap& m);

struct EulerRelations {
  long V = 0, E = 0, F = 0, p = 0, n = 0;
  bool vertex_edge = false;   // 3V = 2E
  bool edge_face = false;     // 2E = pF
  bool rank_formula = false;  // n = 1 + V/2
  bool face_count = false;    // F = (6/p)(n - 1)

  bool all() const { return vertex_edge && edge_face && rank_formula && face_count; }
};

// Throws Error(NotCubic) unless the map is uniform with q = 3.
EulerRelations euler_relations(const CombinatorialMap& m);

struct FlagTransitivity {
  bool transitive = false;
  std::size_t aut_order = 0;  // automorphisms, reflections included
  std::size_t flags = 0;
  bool vertex_transitive = false;
  bool face_transitive = false;
};

// An automorphism of a connected map is determined by the image of one flag,
// so each candidate image is tested by propagation.
FlagTransitivity flag_transitivity(const CombinatorialMap& m);

struct FaceSystoleCheck {
  long girth = 0;
  std::size_t face_length = 0;
  std::size_t face_count = 0;
  std::size_t girth_cycle_count = 0;
  bool equal = false;
  std::vector<Cycle> extra_min_cycles;  // girth cycles that bound no face
};

// Whether the unit-length systoles are exactly the face boundaries.
// Throws Error(InvalidMap) for non-uniform maps.
FaceSystoleCheck systoles_equal_faces(const CombinatorialMap& m,
                                      const CycleSearchOptions& options = {});

}  // namespace systole
