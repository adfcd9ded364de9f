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

#include "systole/homology.hpp"

#include <algorithm>
#include <map>

#include "systole/error.hpp"

namespace systole {

HomologyBasis HomologyBasis::build(const MetricGraph& g) {
  HomologyBasis basis;
  std::vector<bool> reached(g.num_vertices(), false);
  std::vector<VertexId> queue{0};
  reached[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Incidence& inc : g.incidences(queue[i])) {
      if (reached[inc.neighbor]) continue;
      reached[inc.neighbor] = true;
      basis.tree_.insert(g.edge_at(inc.edge_index).id);
      queue.push_back(inc.neighbor);
    }
  }
  for (const Edge& e : g.edges()) {
    if (!basis.tree_.count(e.id)) basis.chords_.push_back(e.id);
  }
  basis.change_ = IntMatrix::identity(basis.chords_.size());
  return basis;
}

Cycle HomologyBasis::fundamental_cycle(const MetricGraph& g, std::size_t i) const {
  const Edge& chord = g.edge(chords_.at(i));
  std::vector<Step> steps{{chord.id, true}};
  if (!chord.is_loop()) {
    // Tree path from chord.v back to chord.u.
    std::vector<std::optional<Step>> via(g.num_vertices());
    std::vector<VertexId> from(g.num_vertices());
    std::vector<bool> reached(g.num_vertices(), false);
    std::vector<VertexId> queue{chord.v};
    reached[chord.v] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (const Incidence& inc : g.incidences(queue[k])) {
        const EdgeId id = g.edge_at(inc.edge_index).id;
        if (!tree_.count(id) || reached[inc.neighbor]) continue;
        reached[inc.neighbor] = true;
        via[inc.neighbor] = Step{id, inc.end == 0};
        from[inc.neighbor] = queue[k];
        queue.push_back(inc.neighbor);
      }
    }
    std::vector<Step> path;
    for (VertexId x = chord.u; x != chord.v; x = from[x]) path.push_back(*via[x]);
    std::reverse(path.begin(), path.end());
    steps.insert(steps.end(), path.begin(), path.end());
  }
  return Cycle::from_steps(g, std::move(steps));
}

HomologyClass walk_class(const MetricGraph& g, const HomologyBasis& basis,
                         std::span<const Step> steps) {
  std::map<EdgeId, std::size_t> position;
  for (std::size_t i = 0; i < basis.chords().size(); ++i) position[basis.chords()[i]] = i;
  HomologyClass cls(basis.rank(), 0);
  for (const Step& s : steps) {
    if (!g.has_edge(s.edge)) {
      throw Error(ErrorKind::ForeignCycle,
                  "edge " + std::to_string(s.edge) + " is not in graph '" + g.name() + "'");
    }
    auto it = position.find(s.edge);
    if (it == position.end()) continue;
    cls[it->second] += s.forward ? 1 : -1;
  }
  return cls;
}

HomologyClass cycle_class(const MetricGraph& g, const HomologyBasis& basis, const Cycle& c) {
  return walk_class(g, basis, c.steps());
}

HomologyBasis rebase_after_contraction(const HomologyBasis& old_basis,
                                       const MetricGraph& old_graph,
                                       const Contraction& contraction) {
  HomologyBasis fresh = HomologyBasis::build(contraction.graph);
  const std::size_t n = old_basis.rank();
  if (fresh.rank() != n) throw Error(ErrorKind::Internal, "contraction changed the rank");
  const std::set<EdgeId> contracted(contraction.contracted.begin(), contraction.contracted.end());
  IntMatrix step(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Step> image;
    const Cycle fundamental = old_basis.fundamental_cycle(old_graph, i);
    for (const Step& s : fundamental.steps()) {
      if (!contracted.count(s.edge)) image.push_back(s);
    }
    HomologyClass cls = walk_class(contraction.graph, fresh, image);
    for (std::size_t j = 0; j < n; ++j) step(i, j) = cls[j];
  }
  if (abs(determinant(step)) != 1) {
    throw Error(ErrorKind::Internal, "change of basis across contraction is not unimodular");
  }
  fresh.change_ = old_basis.change_of_basis() * step;
  return fresh;
}

bool operator==(const LatticeVerdict& a, const LatticeVerdict& b) {
  return a.ambient_rank == b.ambient_rank && a.rank == b.rank && a.divisors == b.divisors &&
         a.index == b.index;
}

LatticeVerdict lattice_of(const IntMatrix& generators, std::size_t ambient_rank) {
  LatticeVerdict verdict;
  verdict.generators = generators;
  verdict.ambient_rank = ambient_rank;
  SmithDecomposition snf = smith_normal_form(generators);
  if (!verify_smith(generators, snf)) {
    throw Error(ErrorKind::Internal, "Smith normal form failed its self-check");
  }
  verdict.rank = snf.rank();
  verdict.divisors = snf.divisors;
  if (verdict.rank == ambient_rank) {
    Integer index = 1;
    for (const Integer& d : verdict.divisors) index *= d;
    verdict.index = index;
  }
  return verdict;
}

LatticeVerdict cycle_lattice(const MetricGraph& g, std::span<const Cycle> cycles) {
  const HomologyBasis basis = HomologyBasis::build(g);
  std::vector<std::vector<Integer>> rows;
  rows.reserve(cycles.size());
  for (const Cycle& c : cycles) rows.push_back(cycle_class(g, basis, c));
  return lattice_of(IntMatrix::from_rows(rows, basis.rank()), basis.rank());
}

LatticeVerdict systole_lattice(const MetricGraph& g, const CycleSearchOptions& options) {
  const auto systoles = all_systoles(g, options);
  return cycle_lattice(g, systoles);
}

WellRoundedness is_well_rounded(const MetricGraph& g, const CycleSearchOptions& options) {
  LatticeVerdict lattice = systole_lattice(g, options);
  const bool full = lattice.rank == static_cast<std::size_t>(g.rank());
  return {full, std::move(lattice)};
}

}  // namespace systole
