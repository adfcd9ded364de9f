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

#include "systole/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <tuple>

#include "systole/error.hpp"

namespace systole {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string edge_label(EdgeId id) { return "edge " + std::to_string(id); }

}  // namespace

MetricGraph::MetricGraph(std::string name, std::size_t num_vertices, std::vector<Edge> edges)
    : name_(std::move(name)), num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ == 0) throw Error(ErrorKind::InvalidGraph, "graph has no vertices");
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (i > 0 && edges_[i - 1].id == e.id) {
      throw Error(ErrorKind::DuplicateEdgeId, "duplicate " + edge_label(e.id));
    }
    if (e.u >= num_vertices_ || e.v >= num_vertices_) {
      throw Error(ErrorKind::InvalidGraph, edge_label(e.id) + " has an endpoint out of range");
    }
    if (sgn(e.length) <= 0) {
      throw Error(ErrorKind::NonPositiveLength,
                  edge_label(e.id) + " has non-positive length " + to_fraction_string(e.length));
    }
  }
  adjacency_.assign(num_vertices_, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[e.u].push_back({i, e.v, 0});
    adjacency_[e.v].push_back({i, e.u, 1});
  }
  DisjointSets components(num_vertices_);
  std::size_t count = num_vertices_;
  for (const Edge& e : edges_) {
    if (components.unite(e.u, e.v)) --count;
  }
  if (count != 1) {
    throw Error(ErrorKind::Disconnected,
                "graph has " + std::to_string(count) + " connected components");
  }
}

const Edge& MetricGraph::edge(EdgeId id) const {
  auto index = index_of(id);
  if (!index) throw Error(ErrorKind::ForeignCycle, "no " + edge_label(id) + " in graph");
  return edges_[*index];
}

std::optional<std::size_t> MetricGraph::index_of(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId x) { return e.id < x; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

long MetricGraph::rank() const {
  return static_cast<long>(edges_.size()) - static_cast<long>(num_vertices_) + 1;
}

Rational MetricGraph::volume() const {
  Rational total = 0;
  for (const Edge& e : edges_) total += e.length;
  return total;
}

EdgeWeights MetricGraph::lengths() const {
  EdgeWeights w;
  w.reserve(edges_.size());
  for (const Edge& e : edges_) w.push_back(e.length);
  return w;
}

MetricGraph MetricGraph::with_lengths(std::span<const Rational> lengths) const {
  if (lengths.size() != edges_.size()) {
    throw Error(ErrorKind::InvalidGraph, "length vector does not match edge count");
  }
  std::vector<Edge> edges = edges_;
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].length = lengths[i];
  return MetricGraph(name_, num_vertices_, std::move(edges));
}

MetricGraph MetricGraph::renamed(std::string name) const {
  MetricGraph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool operator==(const MetricGraph& a, const MetricGraph& b) {
  if (a.name() != b.name() || a.num_vertices() != b.num_vertices() ||
      a.num_edges() != b.num_edges()) {
    return false;
  }
  for (std::size_t i = 0; i < a.num_edges(); ++i) {
    const Edge& x = a.edge_at(i);
    const Edge& y = b.edge_at(i);
    if (x.id != y.id || x.u != y.u || x.v != y.v || x.length != y.length) return false;
  }
  return true;
}

void check_mode(const MetricGraph& g, GraphMode mode) {
  const long minimum_rank = mode == GraphMode::OuterSpace ? 2 : 1;
  if (g.rank() < minimum_rank) {
    throw Error(ErrorKind::RankTooSmall, "graph '" + g.name() + "' has rank " +
                                             std::to_string(g.rank()) + " < " +
                                             std::to_string(minimum_rank));
  }
  if (mode == GraphMode::OuterSpace) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) < 3) {
        throw Error(ErrorKind::InvalidGraph,
                    "vertex " + std::to_string(v) + " has degree " +
                        std::to_string(g.degree(v)) +
                        " < 3 (use permissive mode for such graphs)");
      }
    }
  }
}

bool satisfies_mode(const MetricGraph& g, GraphMode mode) {
  try {
    check_mode(g, mode);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// ---------------------------------------------------------------- file format

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

[[noreturn]] void malformed(std::size_t line_number, const std::string& what) {
  throw Error(ErrorKind::MalformedLine, "line " + std::to_string(line_number) + ": " + what);
}

std::uint64_t parse_count(std::string_view word, std::size_t line_number) {
  if (word.empty() || word.size() > 9) malformed(line_number, "bad integer '" + std::string(word) + "'");
  std::uint64_t value = 0;
  for (char c : word) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      malformed(line_number, "bad integer '" + std::string(word) + "'");
    }
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

std::pair<EdgeId, int> parse_dart(std::string_view word, std::size_t line_number) {
  auto dot = word.find('.');
  if (dot == std::string_view::npos) malformed(line_number, "dart must be <edge>.<0|1>");
  auto end = word.substr(dot + 1);
  if (end != "0" && end != "1") malformed(line_number, "dart end must be 0 or 1");
  return {static_cast<EdgeId>(parse_count(word.substr(0, dot), line_number)), end == "1" ? 1 : 0};
}

}  // namespace

GraphFile parse_graph_file(std::string_view text) {
  GraphFile file;
  bool have_name = false;
  bool have_vertices = false;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view line = text.substr(pos, next - pos);
    pos = next + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto words = split_words(line);
    if (words.empty() || words[0].front() == '#') continue;
    const std::string_view key = words[0];
    if (key == "graph") {
      if (words.size() != 2) malformed(line_number, "expected 'graph <name>'");
      if (have_name) malformed(line_number, "repeated graph line");
      file.name = std::string(words[1]);
      have_name = true;
    } else if (key == "vertices") {
      if (words.size() != 2) malformed(line_number, "expected 'vertices <V>'");
      if (have_vertices) malformed(line_number, "repeated vertices line");
      file.num_vertices = parse_count(words[1], line_number);
      have_vertices = true;
    } else if (key == "edge") {
      if (words.size() != 5) malformed(line_number, "expected 'edge <id> <u> <v> <num>/<den>'");
      if (!have_vertices) malformed(line_number, "edge before vertices line");
      Edge e;
      e.id = static_cast<EdgeId>(parse_count(words[1], line_number));
      auto u = parse_count(words[2], line_number);
      auto v = parse_count(words[3], line_number);
      if (u >= file.num_vertices || v >= file.num_vertices) {
        malformed(line_number, "endpoint out of range");
      }
      e.u = static_cast<VertexId>(u);
      e.v = static_cast<VertexId>(v);
      try {
        e.length = parse_fraction(words[4]);
      } catch (const Error& err) {
        malformed(line_number, err.what());
      }
      if (sgn(e.length) <= 0) {
        throw Error(ErrorKind::NonPositiveLength,
                    "line " + std::to_string(line_number) + ": non-positive length " +
                        std::string(words[4]));
      }
      file.edges.push_back(std::move(e));
    } else if (key == "rotation") {
      if (words.size() < 2) malformed(line_number, "expected 'rotation <v>: <darts>'");
      std::size_t first_dart = 2;
      std::string_view vertex_word = words[1];
      if (vertex_word.back() == ':') {
        vertex_word.remove_suffix(1);
      } else if (words.size() > 2 && words[2] == ":") {
        first_dart = 3;
      } else {
        malformed(line_number, "expected ':' after rotation vertex");
      }
      auto v = parse_count(vertex_word, line_number);
      std::vector<std::pair<EdgeId, int>> darts;
      for (std::size_t i = first_dart; i < words.size(); ++i) {
        darts.push_back(parse_dart(words[i], line_number));
      }
      file.rotations.emplace_back(static_cast<VertexId>(v), std::move(darts));
    } else if (key == "twist") {
      for (std::size_t i = 1; i < words.size(); ++i) {
        file.twists.push_back(static_cast<EdgeId>(parse_count(words[i], line_number)));
      }
    } else {
      malformed(line_number, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!have_name) throw Error(ErrorKind::MalformedLine, "missing 'graph <name>' line");
  if (!have_vertices) throw Error(ErrorKind::MalformedLine, "missing 'vertices <V>' line");
  return file;
}

MetricGraph parse_graph(std::string_view text, GraphMode mode) {
  GraphFile file = parse_graph_file(text);
  MetricGraph g(std::move(file.name), file.num_vertices, std::move(file.edges));
  check_mode(g, mode);
  return g;
}

std::string serialize_graph(const MetricGraph& g) {
  std::ostringstream out;
  out << "graph " << g.name() << "\n";
  out << "vertices " << g.num_vertices() << "\n";
  for (const Edge& e : g.edges()) {
    out << "edge " << e.id << " " << e.u << " " << e.v << " " << to_fraction_string(e.length)
        << "\n";
  }
  return out.str();
}

MetricGraph normalize_volume(const MetricGraph& g) {
  const Rational scale = 1 / g.volume();
  EdgeWeights w = g.lengths();
  for (auto& x : w) x *= scale;
  return g.with_lengths(w);
}

// ---------------------------------------------------------------- contraction

Contraction contract_forest(const MetricGraph& g, const std::set<EdgeId>& edge_ids) {
  DisjointSets sets(g.num_vertices());
  for (EdgeId id : edge_ids) {
    const Edge& e = g.edge(id);
    if (e.is_loop()) {
      throw Error(ErrorKind::ContractionOfCycle, "cannot contract loop " + edge_label(id));
    }
    if (!sets.unite(e.u, e.v)) {
      throw Error(ErrorKind::ContractionOfCycle,
                  "contracted edges contain a cycle through " + edge_label(id));
    }
  }
  std::vector<VertexId> vertex_map(g.num_vertices());
  std::vector<long> new_id(g.num_vertices(), -1);
  VertexId next = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto root = sets.find(v);
    if (new_id[root] < 0) new_id[root] = next++;
    vertex_map[v] = static_cast<VertexId>(new_id[root]);
  }
  std::vector<Edge> edges;
  Contraction result{g, vertex_map, {}, {}};
  for (const Edge& e : g.edges()) {
    if (edge_ids.count(e.id)) {
      result.contracted.push_back(e.id);
      continue;
    }
    result.surviving.push_back(e.id);
    edges.push_back({e.id, vertex_map[e.u], vertex_map[e.v], e.length});
  }
  result.graph = MetricGraph(g.name(), next, std::move(edges));
  return result;
}

// ---------------------------------------------------------------- isomorphism

namespace {

using PairKey = std::pair<VertexId, VertexId>;

std::map<PairKey, std::vector<Rational>> pair_lengths(const MetricGraph& g) {
  std::map<PairKey, std::vector<Rational>> out;
  for (const Edge& e : g.edges()) {
    out[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.length);
  }
  for (auto& [key, lengths] : out) std::sort(lengths.begin(), lengths.end());
  return out;
}

// Colour refinement run jointly on both graphs so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const MetricGraph& a,
                                                             const MetricGraph& b) {
  using Signature = std::pair<int, std::vector<std::pair<Rational, int>>>;
  auto initial = [](const MetricGraph& g) {
    std::vector<std::vector<std::pair<Rational, int>>> sig(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      for (const Incidence& inc : g.incidences(v)) {
        sig[v].push_back({g.edge_at(inc.edge_index).length, inc.neighbor == v ? 1 : 0});
      }
      std::sort(sig[v].begin(), sig[v].end());
    }
    return sig;
  };
  std::map<std::vector<std::pair<Rational, int>>, int> first_ids;
  auto sa = initial(a);
  auto sb = initial(b);
  for (auto& s : sa) first_ids.emplace(s, 0);
  for (auto& s : sb) first_ids.emplace(s, 0);
  int counter = 0;
  for (auto& [s, id] : first_ids) id = counter++;
  std::vector<int> ca(a.num_vertices()), cb(b.num_vertices());
  for (VertexId v = 0; v < a.num_vertices(); ++v) ca[v] = first_ids[sa[v]];
  for (VertexId v = 0; v < b.num_vertices(); ++v) cb[v] = first_ids[sb[v]];

  std::size_t classes = first_ids.size();
  for (std::size_t round = 0; round < a.num_vertices() + b.num_vertices(); ++round) {
    auto signatures = [](const MetricGraph& g, const std::vector<int>& colour) {
      std::vector<Signature> sig(g.num_vertices());
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        sig[v].first = colour[v];
        for (const Incidence& inc : g.incidences(v)) {
          sig[v].second.push_back({g.edge_at(inc.edge_index).length, colour[inc.neighbor]});
        }
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      return sig;
    };
    auto na = signatures(a, ca);
    auto nb = signatures(b, cb);
    std::map<Signature, int> ids;
    for (auto& s : na) ids.emplace(s, 0);
    for (auto& s : nb) ids.emplace(s, 0);
    counter = 0;
    for (auto& [s, id] : ids) id = counter++;
    for (VertexId v = 0; v < a.num_vertices(); ++v) ca[v] = ids[na[v]];
    for (VertexId v = 0; v < b.num_vertices(); ++v) cb[v] = ids[nb[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {ca, cb};
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const MetricGraph& a, const MetricGraph& b)
      : a_(a), b_(b), pairs_a_(pair_lengths(a)), pairs_b_(pair_lengths(b)) {
    std::tie(colour_a_, colour_b_) = refine_colours(a, b);
  }

  std::optional<std::vector<VertexId>> run() {
    const std::size_t n = a_.num_vertices();
    {
      auto sa = colour_a_, sb = colour_b_;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return std::nullopt;
    }
    // Connected order: BFS from a vertex of the rarest colour.
    std::map<int, int> frequency;
    for (int c : colour_a_) ++frequency[c];
    VertexId start = 0;
    for (VertexId v = 1; v < n; ++v) {
      if (std::make_pair(frequency[colour_a_[v]], colour_a_[v]) <
          std::make_pair(frequency[colour_a_[start]], colour_a_[start])) {
        start = v;
      }
    }
    std::vector<bool> seen(n, false);
    order_.push_back(start);
    seen[start] = true;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (const Incidence& inc : a_.incidences(order_[i])) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          order_.push_back(inc.neighbor);
        }
      }
    }
    map_.assign(n, kUnmapped);
    used_.assign(n, false);
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  static constexpr VertexId kUnmapped = static_cast<VertexId>(-1);

  const std::vector<Rational>& lengths_between(
      const std::map<PairKey, std::vector<Rational>>& pairs, VertexId x, VertexId y) const {
    static const std::vector<Rational> kEmpty;
    auto it = pairs.find({std::min(x, y), std::max(x, y)});
    return it == pairs.end() ? kEmpty : it->second;
  }

  bool consistent(VertexId v, VertexId image) const {
    if (colour_a_[v] != colour_b_[image]) return false;
    if (lengths_between(pairs_a_, v, v) != lengths_between(pairs_b_, image, image)) return false;
    for (VertexId w : order_) {
      if (map_[w] == kUnmapped) break;
      if (lengths_between(pairs_a_, v, w) != lengths_between(pairs_b_, image, map_[w])) {
        return false;
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const VertexId v = order_[depth];
    for (VertexId image = 0; image < b_.num_vertices(); ++image) {
      if (used_[image] || !consistent(v, image)) continue;
      map_[v] = image;
      used_[image] = true;
      if (extend(depth + 1)) return true;
      map_[v] = kUnmapped;
      used_[image] = false;
    }
    return false;
  }

  const MetricGraph& a_;
  const MetricGraph& b_;
  std::map<PairKey, std::vector<Rational>> pairs_a_, pairs_b_;
  std::vector<int> colour_a_, colour_b_;
  std::vector<VertexId> order_;
  std::vector<VertexId> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Isomorphism> are_isomorphic(const MetricGraph& g1, const MetricGraph& g2) {
  if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges()) {
    return std::nullopt;
  }
  {
    auto l1 = g1.lengths(), l2 = g2.lengths();
    std::sort(l1.begin(), l1.end());
    std::sort(l2.begin(), l2.end());
    if (l1 != l2) return std::nullopt;
  }
  auto vertex_map = IsomorphismSearch(g1, g2).run();
  if (!vertex_map) return std::nullopt;

  // Within each vertex pair, match edges by (length, id).
  Isomorphism iso{*vertex_map, {}};
  std::map<PairKey, std::vector<const Edge*>> bucket2;
  for (const Edge& e : g2.edges()) {
    bucket2[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(&e);
  }
  std::map<PairKey, std::vector<const Edge*>> bucket1;
  for (const Edge& e : g1.edges()) {
    VertexId x = iso.vertex_map[e.u], y = iso.vertex_map[e.v];
    bucket1[{std::min(x, y), std::max(x, y)}].push_back(&e);
  }
  auto by_length = [](const Edge* x, const Edge* y) {
    return std::tie(x->length, x->id) < std::tie(y->length, y->id);
  };
  for (auto& [key, edges1] : bucket1) {
    auto& edges2 = bucket2[key];
    std::sort(edges1.begin(), edges1.end(), by_length);
    std::sort(edges2.begin(), edges2.end(), by_length);
    for (std::size_t i = 0; i < edges1.size(); ++i) iso.edge_map[edges1[i]->id] = edges2[i]->id;
  }
  return iso;
}

MetricGraph relabel(const MetricGraph& g, std::span<const VertexId> vertex_map,
                    const std::map<EdgeId, EdgeId>& edge_map) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    auto it = edge_map.find(e.id);
    EdgeId id = it == edge_map.end() ? e.id : it->second;
    edges.push_back({id, vertex_map[e.u], vertex_map[e.v], e.length});
  }
  return MetricGraph(g.name(), g.num_vertices(), std::move(edges));
}

}  // namespace systole
