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

#include "systole/cycles.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "systole/error.hpp"

namespace systole {

namespace {

void check_weights(const MetricGraph& g, std::span<const Rational> weights) {
  if (weights.size() != g.num_edges()) {
    throw Error(ErrorKind::InvalidGraph, "weight vector does not match edge count");
  }
  for (const Rational& w : weights) {
    if (sgn(w) < 0) throw Error(ErrorKind::NonPositiveLength, "negative cycle weight");
  }
}

struct Path {
  Rational length;
  std::vector<Step> steps;
  std::vector<VertexId> vertices;  // steps.size() + 1 entries
};

// Single-target Dijkstra over the edges allowed by edge_ok and vertices not
// in blocked. Ties resolve toward the first relaxation, which depends only on
// incidence order.
std::optional<Path> dijkstra_path(const MetricGraph& g, std::span<const Rational> weights,
                                  VertexId source, VertexId target,
                                  const std::vector<bool>& edge_ok,
                                  const std::vector<bool>& blocked) {
  const std::size_t n = g.num_vertices();
  std::vector<std::optional<Rational>> dist(n);
  std::vector<std::optional<Incidence>> via(n);
  std::vector<VertexId> from(n);
  std::vector<bool> done(n, false);
  using Item = std::pair<Rational, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = Rational(0);
  queue.push({Rational(0), source});
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (done[x]) continue;
    done[x] = true;
    if (x == target) break;
    for (const Incidence& inc : g.incidences(x)) {
      if (!edge_ok[inc.edge_index] || blocked[inc.neighbor] || done[inc.neighbor]) continue;
      Rational nd = d + weights[inc.edge_index];
      if (!dist[inc.neighbor] || nd < *dist[inc.neighbor]) {
        dist[inc.neighbor] = nd;
        via[inc.neighbor] = inc;
        from[inc.neighbor] = x;
        queue.push({nd, inc.neighbor});
      }
    }
  }
  if (!done[target]) return std::nullopt;
  Path path;
  path.length = *dist[target];
  for (VertexId x = target; x != source; x = from[x]) {
    const Incidence& inc = *via[x];
    // inc was seen from `from[x]`; its end tells the direction of travel.
    path.steps.push_back({g.edge_at(inc.edge_index).id, inc.end == 0});
    path.vertices.push_back(x);
  }
  path.vertices.push_back(source);
  std::reverse(path.steps.begin(), path.steps.end());
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

// Distances from source within the allowed edges; nullopt = unreachable.
std::vector<std::optional<Rational>> dijkstra_all(const MetricGraph& g,
                                                  std::span<const Rational> weights,
                                                  VertexId source,
                                                  const std::vector<bool>& edge_ok) {
  const std::size_t n = g.num_vertices();
  std::vector<std::optional<Rational>> dist(n);
  std::vector<bool> done(n, false);
  using Item = std::pair<Rational, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = Rational(0);
  queue.push({Rational(0), source});
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (done[x]) continue;
    done[x] = true;
    for (const Incidence& inc : g.incidences(x)) {
      if (!edge_ok[inc.edge_index] || done[inc.neighbor]) continue;
      Rational nd = d + weights[inc.edge_index];
      if (!dist[inc.neighbor] || nd < *dist[inc.neighbor]) {
        dist[inc.neighbor] = nd;
        queue.push({nd, inc.neighbor});
      }
    }
  }
  return dist;
}

class BoundedCycleSearch {
 public:
  BoundedCycleSearch(const MetricGraph& g, std::span<const Rational> weights,
                     const Rational& bound, const CycleSearchOptions& options)
      : g_(g), weights_(weights), bound_(bound), options_(options) {}

  std::vector<Cycle> run() {
    const auto bridge = find_bridges(g_);
    // Each cycle is found exactly once, from its smallest edge id, as that
    // edge followed by the unique path back through larger-id edges.
    for (std::size_t i = 0; i < g_.num_edges(); ++i) {
      if (bridge[i]) continue;
      const Edge& e = g_.edge_at(i);
      if (weights_[i] > bound_) continue;
      if (e.is_loop()) {
        record({{e.id, true}});
        continue;
      }
      edge_ok_.assign(g_.num_edges(), false);
      for (std::size_t j = i + 1; j < g_.num_edges(); ++j) {
        edge_ok_[j] = !bridge[j] && !g_.edge_at(j).is_loop();
      }
      remaining_ = bound_ - weights_[i];
      target_ = e.u;
      to_target_ = dijkstra_all(g_, weights_, target_, edge_ok_);
      if (!to_target_[e.v] || *to_target_[e.v] > remaining_) continue;
      visited_.assign(g_.num_vertices(), false);
      visited_[e.u] = true;
      visited_[e.v] = true;
      steps_.assign(1, {e.id, true});
      extend(e.v, Rational(0));
    }
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void extend(VertexId x, const Rational& so_far) {
    for (const Incidence& inc : g_.incidences(x)) {
      if (!edge_ok_[inc.edge_index]) continue;
      const Rational next = so_far + weights_[inc.edge_index];
      const VertexId y = inc.neighbor;
      const Step step{g_.edge_at(inc.edge_index).id, inc.end == 0};
      if (y == target_) {
        if (next <= remaining_) {
          steps_.push_back(step);
          record(steps_);
          steps_.pop_back();
        }
        continue;
      }
      if (visited_[y] || !to_target_[y] || next + *to_target_[y] > remaining_) continue;
      visited_[y] = true;
      steps_.push_back(step);
      extend(y, next);
      steps_.pop_back();
      visited_[y] = false;
    }
  }

  void record(const std::vector<Step>& steps) {
    if (found_.size() >= options_.cycle_cap) {
      throw Error(ErrorKind::BudgetExceeded,
                  "cycle enumeration exceeded the cap of " + std::to_string(options_.cycle_cap) +
                      " cycles");
    }
    found_.push_back(Cycle::from_steps(g_, steps).canonical());
  }

  const MetricGraph& g_;
  std::span<const Rational> weights_;
  Rational bound_;
  const CycleSearchOptions& options_;
  std::vector<bool> edge_ok_;
  std::vector<bool> visited_;
  std::vector<std::optional<Rational>> to_target_;
  std::vector<Step> steps_;
  Rational remaining_;
  VertexId target_ = 0;
  std::vector<Cycle> found_;
};

// Yen's k shortest simple paths, produced lazily in nondecreasing length.
class SimplePaths {
 public:
  SimplePaths(const MetricGraph& g, std::span<const Rational> weights, VertexId source,
              VertexId target, std::vector<bool> edge_ok)
      : g_(g), weights_(weights), source_(source), target_(target), edge_ok_(std::move(edge_ok)) {}

  std::optional<Path> next() {
    if (accepted_.empty()) {
      std::vector<bool> blocked(g_.num_vertices(), false);
      auto first = dijkstra_path(g_, weights_, source_, target_, edge_ok_, blocked);
      if (!first) return std::nullopt;
      accept(std::move(*first));
      return accepted_.back();
    }
    spur_from(accepted_.back());
    if (candidates_.empty()) return std::nullopt;
    auto it = candidates_.begin();
    Path best = it->second;
    candidates_.erase(it);
    accept(std::move(best));
    return accepted_.back();
  }

 private:
  void accept(Path p) {
    seen_.insert(p.steps);
    accepted_.push_back(std::move(p));
  }

  void spur_from(const Path& last) {
    for (std::size_t i = 0; i < last.steps.size(); ++i) {
      const VertexId spur = last.vertices[i];
      std::vector<bool> edge_ok = edge_ok_;
      for (const Path& p : accepted_) {
        if (p.steps.size() > i && std::equal(p.steps.begin(), p.steps.begin() + i,
                                             last.steps.begin())) {
          edge_ok[*g_.index_of(p.steps[i].edge)] = false;
        }
      }
      std::vector<bool> blocked(g_.num_vertices(), false);
      Rational root_length = 0;
      for (std::size_t j = 0; j < i; ++j) {
        blocked[last.vertices[j]] = true;
        root_length += weights_[*g_.index_of(last.steps[j].edge)];
      }
      auto tail = dijkstra_path(g_, weights_, spur, target_, edge_ok, blocked);
      if (!tail) continue;
      Path candidate;
      candidate.length = root_length + tail->length;
      candidate.steps.assign(last.steps.begin(), last.steps.begin() + i);
      candidate.steps.insert(candidate.steps.end(), tail->steps.begin(), tail->steps.end());
      candidate.vertices.assign(last.vertices.begin(), last.vertices.begin() + i);
      candidate.vertices.insert(candidate.vertices.end(), tail->vertices.begin(),
                                tail->vertices.end());
      if (seen_.count(candidate.steps)) continue;
      seen_.insert(candidate.steps);
      auto key = std::make_pair(candidate.length, candidate.steps);
      candidates_.emplace(std::move(key), std::move(candidate));
    }
  }

  const MetricGraph& g_;
  std::span<const Rational> weights_;
  VertexId source_;
  VertexId target_;
  std::vector<bool> edge_ok_;
  std::vector<Path> accepted_;
  std::set<std::vector<Step>> seen_;
  std::map<std::pair<Rational, std::vector<Step>>, Path> candidates_;
};

}  // namespace

std::vector<bool> find_bridges(const MetricGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> bridge(g.num_edges(), false);
  std::vector<long> order(n, -1), low(n, 0);
  long counter = 0;
  std::function<void(VertexId, long)> visit = [&](VertexId x, long parent_edge) {
    order[x] = low[x] = counter++;
    for (const Incidence& inc : g.incidences(x)) {
      const long idx = static_cast<long>(inc.edge_index);
      if (idx == parent_edge) continue;
      const VertexId y = inc.neighbor;
      if (order[y] < 0) {
        visit(y, idx);
        low[x] = std::min(low[x], low[y]);
        if (low[y] > order[x]) bridge[inc.edge_index] = true;
      } else {
        low[x] = std::min(low[x], order[y]);
      }
    }
  };
  for (VertexId v = 0; v < n; ++v) {
    if (order[v] < 0) visit(v, -1);
  }
  return bridge;
}

namespace detail {

std::optional<ShortestCycle> girth_any_witness(const MetricGraph& g,
                                               std::span<const Rational> weights) {
  check_weights(g, weights);
  const auto bridge = find_bridges(g);
  std::optional<ShortestCycle> best;
  std::vector<bool> blocked(g.num_vertices(), false);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (bridge[i]) continue;
    const Edge& e = g.edge_at(i);
    if (best && weights[i] >= best->length) continue;
    if (e.is_loop()) {
      best = ShortestCycle{weights[i], Cycle::from_steps(g, {{e.id, true}})};
      continue;
    }
    std::vector<bool> edge_ok(g.num_edges(), true);
    edge_ok[i] = false;
    auto path = dijkstra_path(g, weights, e.v, e.u, edge_ok, blocked);
    if (!path) continue;
    Rational total = weights[i] + path->length;
    if (!best || total < best->length) {
      std::vector<Step> steps{{e.id, true}};
      steps.insert(steps.end(), path->steps.begin(), path->steps.end());
      best = ShortestCycle{total, Cycle::from_steps(g, std::move(steps))};
    }
  }
  return best;
}

}  // namespace detail

ShortestCycle shortest_cycle(const MetricGraph& g, std::span<const Rational> weights,
                             const CycleSearchOptions& options) {
  auto girth = detail::girth_any_witness(g, weights);
  if (!girth) throw Error(ErrorKind::NoCycle, "graph '" + g.name() + "' has no cycle");
  auto minimal = cycles_up_to_length(g, weights, girth->length, options);
  return {girth->length, minimal.front()};
}

ShortestCycle shortest_cycle(const MetricGraph& g, const CycleSearchOptions& options) {
  return shortest_cycle(g, g.lengths(), options);
}

std::vector<Cycle> all_systoles(const MetricGraph& g, std::span<const Rational> weights,
                                const CycleSearchOptions& options) {
  auto girth = detail::girth_any_witness(g, weights);
  if (!girth) throw Error(ErrorKind::NoCycle, "graph '" + g.name() + "' has no cycle");
  return cycles_up_to_length(g, weights, girth->length, options);
}

std::vector<Cycle> all_systoles(const MetricGraph& g, const CycleSearchOptions& options) {
  return all_systoles(g, g.lengths(), options);
}

std::vector<Cycle> cycles_up_to_length(const MetricGraph& g, std::span<const Rational> weights,
                                       const Rational& bound,
                                       const CycleSearchOptions& options) {
  check_weights(g, weights);
  return BoundedCycleSearch(g, weights, bound, options).run();
}

std::vector<Cycle> cycles_up_to_length(const MetricGraph& g, const Rational& bound,
                                       const CycleSearchOptions& options) {
  const auto w = g.lengths();
  return cycles_up_to_length(g, w, bound, options);
}

std::optional<ShortestCycle> shortest_cycle_above(const MetricGraph& g,
                                                  std::span<const Rational> weights,
                                                  const Rational& threshold) {
  check_weights(g, weights);
  const auto bridge = find_bridges(g);
  std::optional<ShortestCycle> best;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (bridge[i]) continue;
    const Edge& e = g.edge_at(i);
    if (e.is_loop()) {
      if (weights[i] > threshold && (!best || weights[i] < best->length)) {
        best = ShortestCycle{weights[i], Cycle::from_steps(g, {{e.id, true}}).canonical()};
      }
      continue;
    }
    std::vector<bool> edge_ok(g.num_edges());
    for (std::size_t j = 0; j < g.num_edges(); ++j) {
      edge_ok[j] = j != i && !bridge[j] && !g.edge_at(j).is_loop();
    }
    SimplePaths paths(g, weights, e.v, e.u, std::move(edge_ok));
    while (auto p = paths.next()) {
      const Rational total = weights[i] + p->length;
      if (best && total >= best->length) break;
      if (total > threshold) {
        std::vector<Step> steps{{e.id, true}};
        steps.insert(steps.end(), p->steps.begin(), p->steps.end());
        best = ShortestCycle{total, Cycle::from_steps(g, std::move(steps)).canonical()};
        break;
      }
    }
  }
  return best;
}

}  // namespace systole
