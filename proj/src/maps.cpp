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

#include "systole/maps.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "systole/error.hpp"

namespace systole {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidMap, what); }

std::string dart_name(const Dart& d) { return std::to_string(d.edge) + "." + std::to_string(d.end); }

}  // namespace

CombinatorialMap::CombinatorialMap(MetricGraph graph, std::vector<std::vector<Dart>> rotations,
                                   std::set<EdgeId> twisted)
    : graph_(std::move(graph)),
      rotations_(std::move(rotations)),
      twisted_ids_(std::move(twisted)),
      twisted_(graph_.num_edges(), false),
      sigma_(2 * graph_.num_edges()),
      sigma_inv_(2 * graph_.num_edges()) {
  if (graph_.num_edges() == 0) invalid("map has no edges");
  if (rotations_.size() != graph_.num_vertices()) invalid("rotation count differs from vertex count");
  std::vector<bool> placed(num_darts(), false);
  for (VertexId v = 0; v < rotations_.size(); ++v) {
    const auto& rotation = rotations_[v];
    if (rotation.empty()) invalid("vertex " + std::to_string(v) + " has an empty rotation");
    for (std::size_t i = 0; i < rotation.size(); ++i) {
      const Dart& dt = rotation[i];
      auto index = graph_.index_of(dt.edge);
      if (!index || (dt.end != 0 && dt.end != 1)) invalid("unknown dart " + dart_name(dt));
      const Edge& e = graph_.edge_at(*index);
      if ((dt.end == 0 ? e.u : e.v) != v) {
        invalid("dart " + dart_name(dt) + " does not sit at vertex " + std::to_string(v));
      }
      const std::size_t d = 2 * *index + static_cast<std::size_t>(dt.end);
      if (placed[d]) invalid("dart " + dart_name(dt) + " listed twice");
      placed[d] = true;
      const Dart& nx = rotation[(i + 1) % rotation.size()];
      const std::size_t next = 2 * *graph_.index_of(nx.edge) + static_cast<std::size_t>(nx.end);
      sigma_[d] = next;
    }
  }
  if (!std::all_of(placed.begin(), placed.end(), [](bool b) { return b; })) {
    invalid("some darts are missing from the rotation system");
  }
  for (std::size_t d = 0; d < num_darts(); ++d) sigma_inv_[sigma_[d]] = d;
  for (EdgeId id : twisted_ids_) {
    auto index = graph_.index_of(id);
    if (!index) invalid("twist on unknown edge " + std::to_string(id));
    twisted_[*index] = true;
  }
}

MetricGraph CombinatorialMap::skeleton() const {
  EdgeWeights ones(graph_.num_edges(), Rational(1));
  return graph_.with_lengths(ones);
}

VertexId CombinatorialMap::vertex_of(std::size_t d) const {
  const Edge& e = graph_.edge_at(d / 2);
  return d % 2 == 0 ? e.u : e.v;
}

Dart CombinatorialMap::dart(std::size_t d) const {
  return {graph_.edge_at(d / 2).id, static_cast<int>(d % 2)};
}

std::size_t CombinatorialMap::r0(std::size_t flag) const {
  const std::size_t d = flag / 2;
  const std::size_t side = flag % 2;
  const std::size_t flip = twisted_[d / 2] ? 0 : 1;
  return 2 * alpha(d) + (side ^ flip);
}

std::size_t CombinatorialMap::r1(std::size_t flag) const {
  const std::size_t d = flag / 2;
  return flag % 2 == 0 ? 2 * sigma(d) + 1 : 2 * sigma_inverse(d);
}

namespace {

// Two-colouring of the flag graph (each involution flips the colour), or
// nullopt if the surface is non-orientable.
std::optional<std::vector<int>> flag_colouring(const CombinatorialMap& m) {
  std::vector<int> colour(m.num_flags(), -1);
  std::vector<std::size_t> queue{0};
  colour[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t f = queue[i];
    for (std::size_t g : {m.r0(f), m.r1(f), m.r2(f)}) {
      if (colour[g] < 0) {
        colour[g] = 1 - colour[f];
        queue.push_back(g);
      } else if (colour[g] == colour[f]) {
        return std::nullopt;
      }
    }
  }
  return colour;
}

}  // namespace

bool CombinatorialMap::orientable() const { return flag_colouring(*this).has_value(); }

CombinatorialMap parse_map(std::string_view text) {
  GraphFile file = parse_graph_file(text);
  MetricGraph g(file.name, file.num_vertices, file.edges);
  std::vector<std::vector<Dart>> rotations(g.num_vertices());
  std::vector<bool> seen(g.num_vertices(), false);
  for (const auto& [v, darts] : file.rotations) {
    if (v >= g.num_vertices()) invalid("rotation for unknown vertex " + std::to_string(v));
    if (seen[v]) invalid("repeated rotation for vertex " + std::to_string(v));
    seen[v] = true;
    for (const auto& [edge, end] : darts) rotations[v].push_back({edge, end});
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!seen[v]) invalid("missing rotation for vertex " + std::to_string(v));
  }
  return CombinatorialMap(std::move(g), std::move(rotations),
                          std::set<EdgeId>(file.twists.begin(), file.twists.end()));
}

std::string serialize_map(const CombinatorialMap& m) {
  std::ostringstream out;
  out << serialize_graph(m.graph());
  for (VertexId v = 0; v < m.rotations().size(); ++v) {
    out << "rotation " << v << ":";
    for (const Dart& d : m.rotations()[v]) out << " " << dart_name(d);
    out << "\n";
  }
  if (!m.twisted_edges().empty()) {
    out << "twist";
    for (EdgeId id : m.twisted_edges()) out << " " << id;
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------- faces

std::vector<Cycle> FaceTrace::boundary_cycles(const MetricGraph& skeleton) const {
  std::vector<Cycle> cycles;
  for (const Face& f : faces) {
    if (f.embedded) cycles.push_back(Cycle::from_steps(skeleton, f.boundary).canonical());
  }
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  return cycles;
}

FaceTrace trace_faces(const CombinatorialMap& m) {
  FaceTrace trace;
  const MetricGraph& g = m.graph();
  // On orientable surfaces every face starts from a colour-0 flag, so the
  // boundaries are coherently oriented (the orbits of sigma o alpha).
  const auto colouring = flag_colouring(m);
  std::vector<bool> seen(m.num_flags(), false);
  for (std::size_t start = 0; start < m.num_flags(); ++start) {
    if (seen[start] || (colouring && (*colouring)[start] != 0)) continue;
    Face face;
    std::size_t f = start;
    do {
      seen[f] = true;
      const std::size_t d = f / 2;
      face.boundary.push_back({g.edge_at(d / 2).id, d % 2 == 0});
      f = m.r0(f);
      seen[f] = true;
      f = m.r1(f);
    } while (f != start);
    try {
      Cycle::from_steps(g, face.boundary);
      face.embedded = true;
    } catch (const Error&) {
      face.embedded = false;
      trace.all_embedded = false;
    }
    trace.faces.push_back(std::move(face));
  }
  trace.euler_characteristic = static_cast<long>(g.num_vertices()) -
                               static_cast<long>(g.num_edges()) +
                               static_cast<long>(trace.faces.size());
  trace.orientable = colouring.has_value();
  trace.genus = trace.orientable ? (2 - trace.euler_characteristic) / 2
                                 : 2 - trace.euler_characteristic;
  return trace;
}

MapType map_type_check(const CombinatorialMap& m) {
  MapType type;
  for (const Face& f : trace_faces(m).faces) ++type.face_lengths[f.boundary.size()];
  for (VertexId v = 0; v < m.graph().num_vertices(); ++v) ++type.vertex_degrees[m.graph().degree(v)];
  if (type.face_lengths.size() == 1) type.p = type.face_lengths.begin()->first;
  if (type.vertex_degrees.size() == 1) type.q = type.vertex_degrees.begin()->first;
  type.uniform = type.p > 0 && type.q > 0;
  return type;
}

EulerRelations euler_relations(const CombinatorialMap& m) {
  const MapType type = map_type_check(m);
  if (!type.uniform || type.q != 3) {
    throw Error(ErrorKind::NotCubic, "map '" + m.graph().name() + "' is not a uniform cubic map");
  }
  EulerRelations r;
  r.V = static_cast<long>(m.graph().num_vertices());
  r.E = static_cast<long>(m.graph().num_edges());
  r.F = static_cast<long>(type.face_lengths.begin()->second);
  r.p = static_cast<long>(type.p);
  r.n = m.graph().rank();
  r.vertex_edge = 3 * r.V == 2 * r.E;
  r.edge_face = 2 * r.E == r.p * r.F;
  r.rank_formula = 2 * (r.n - 1) == r.V;
  r.face_count = r.F * r.p == 6 * (r.n - 1);
  return r;
}

FlagTransitivity flag_transitivity(const CombinatorialMap& m) {
  const std::size_t flags = m.num_flags();
  FlagTransitivity result;
  result.flags = flags;

  // Face label of every flag, for the face-orbit check.
  std::vector<std::size_t> face_of(flags, 0);
  {
    std::vector<bool> seen(flags, false);
    std::size_t label = 0;
    for (std::size_t start = 0; start < flags; ++start) {
      if (seen[start]) continue;
      std::size_t f = start;
      do {
        seen[f] = true;
        face_of[f] = label;
        f = m.r0(f);
        seen[f] = true;
        face_of[f] = label;
        f = m.r1(f);
      } while (f != start);
      ++label;
    }
  }

  std::set<VertexId> vertex_images;
  std::set<std::size_t> face_images;
  std::vector<long> image(flags);
  std::vector<std::size_t> queue;
  for (std::size_t target = 0; target < flags; ++target) {
    std::fill(image.begin(), image.end(), -1);
    image[0] = static_cast<long>(target);
    queue.assign(1, 0);
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      const std::size_t f = queue[i];
      const auto fi = static_cast<std::size_t>(image[f]);
      const std::pair<std::size_t, std::size_t> moves[] = {
          {m.r0(f), m.r0(fi)}, {m.r1(f), m.r1(fi)}, {m.r2(f), m.r2(fi)}};
      for (const auto& [from, to] : moves) {
        if (image[from] < 0) {
          image[from] = static_cast<long>(to);
          queue.push_back(from);
        } else if (image[from] != static_cast<long>(to)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    ++result.aut_order;
    vertex_images.insert(m.vertex_of(target / 2));
    face_images.insert(face_of[target]);
  }
  std::set<std::size_t> all_faces(face_of.begin(), face_of.end());
  result.transitive = result.aut_order == flags;
  result.vertex_transitive = vertex_images.size() == m.graph().num_vertices();
  result.face_transitive = face_images.size() == all_faces.size();
  return result;
}

FaceSystoleCheck systoles_equal_faces(const CombinatorialMap& m, const CycleSearchOptions& options) {
  const MapType type = map_type_check(m);
  if (!type.uniform) invalid("map '" + m.graph().name() + "' is not uniform");
  const MetricGraph skeleton = m.skeleton();
  const FaceTrace trace = trace_faces(m);

  FaceSystoleCheck check;
  check.face_length = type.p;
  check.face_count = trace.faces.size();
  auto girth = detail::girth_any_witness(skeleton, skeleton.lengths());
  if (!girth) throw Error(ErrorKind::NoCycle, "map skeleton has no cycle");
  check.girth = girth->length.get_num().get_si();
  const auto minimal = cycles_up_to_length(skeleton, girth->length, options);
  check.girth_cycle_count = minimal.size();
  const auto faces = trace.boundary_cycles(skeleton);
  for (const Cycle& c : minimal) {
    if (!std::binary_search(faces.begin(), faces.end(), c)) check.extra_min_cycles.push_back(c);
  }
  check.equal = trace.all_embedded && check.girth == static_cast<long>(type.p) && minimal == faces;
  return check;
}

}  // namespace systole
