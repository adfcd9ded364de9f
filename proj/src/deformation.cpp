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

#include "systole/deformation.hpp"

#include <algorithm>

#include "systole/error.hpp"

namespace systole {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col] == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const Rational pivot = m[row][col];
    for (auto& x : m[row]) x /= pivot;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(const RationalMatrix& rows, std::size_t cols) {
  RationalMatrix m = rows;
  return row_reduce(m, cols).size();
}

RationalMatrix kernel_basis(const RationalMatrix& rows, std::size_t cols) {
  RationalMatrix m = rows;
  const auto pivots = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

RationalMatrix equality_system(const MetricGraph& g, std::span<const Cycle> cycles) {
  const std::size_t e = g.num_edges();
  auto indicator = [&](const Cycle& c) {
    std::vector<Rational> row(e, Rational(0));
    for (const Step& s : c.steps()) row[*g.index_of(s.edge)] += 1;
    return row;
  };
  RationalMatrix system;
  for (std::size_t i = 0; i + 1 < cycles.size(); ++i) {
    auto next = indicator(cycles[i + 1]);
    auto here = indicator(cycles[i]);
    for (std::size_t j = 0; j < e; ++j) next[j] -= here[j];
    system.push_back(std::move(next));
  }
  system.emplace_back(e, Rational(1));
  return system;
}

RationalMatrix systole_equality_system(const MetricGraph& g, const CycleSearchOptions& options) {
  const auto systoles = all_systoles(g, options);
  return equality_system(g, systoles);
}

namespace {

DeformationDimension dimension_of(const MetricGraph& g, std::span<const Cycle> family) {
  RationalMatrix differences = equality_system(g, family);
  differences.pop_back();
  DeformationDimension d;
  d.edges = g.num_edges();
  d.systoles = family.size();
  d.rank_difference = rational_rank(differences, d.edges);
  // The volume row is never in the span of the differences: g itself solves
  // the homogeneous differences but has volume != 0.
  d.dimension = d.edges - 1 - d.rank_difference;
  d.lower_bound = static_cast<long>(d.edges) - static_cast<long>(d.systoles);
  d.positive_direction =
      std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return sgn(e.length) > 0; });
  if (static_cast<long>(d.dimension) < d.lower_bound) {
    throw Error(ErrorKind::Internal, "deformation dimension below E - F");
  }
  return d;
}

}  // namespace

DeformationDimension local_deformation_dimension(const MetricGraph& g,
                                                 const CycleSearchOptions& options) {
  check_mode(g, GraphMode::OuterSpace);
  const auto systoles = all_systoles(g, options);
  const Rational sigma = systoles.front().length(g);
  DeformationDimension d = dimension_of(g, systoles);
  if (auto next = shortest_cycle_above(g, g.lengths(), sigma)) d.gap = next->length - sigma;
  return d;
}

DeformationDimension local_deformation_dimension(const MetricGraph& g,
                                                 std::span<const Cycle> family) {
  check_mode(g, GraphMode::OuterSpace);
  if (family.empty()) throw Error(ErrorKind::InvalidGraph, "empty cycle family");
  std::vector<Cycle> canonical;
  for (const Cycle& c : family) {
    Cycle::from_steps(g, {c.steps().begin(), c.steps().end()});
    canonical.push_back(c.canonical());
  }
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());
  const Rational length = canonical.front().length(g);
  for (const Cycle& c : canonical) {
    if (c.length(g) != length) {
      throw Error(ErrorKind::InvalidGraph, "cycle family has unequal lengths");
    }
  }
  const auto girth = detail::girth_any_witness(g, g.lengths());
  if (girth->length < length) {
    throw Error(ErrorKind::InvalidGraph, "a cycle outside the family is strictly shorter");
  }
  const auto minimal = cycles_up_to_length(g, length);
  if (minimal != canonical) {
    std::string extra;
    for (const Cycle& c : minimal) {
      if (!std::binary_search(canonical.begin(), canonical.end(), c)) {
        extra = c.to_string();
        break;
      }
    }
    throw Error(ErrorKind::NotStrictlyShorter,
                "cycle " + extra + " ties the family length " + to_fraction_string(length));
  }
  DeformationDimension d = dimension_of(g, canonical);
  if (auto next = shortest_cycle_above(g, g.lengths(), length)) d.gap = next->length - length;
  return d;
}

VcdWitness vcd_witness(const MetricGraph& g, const DeformationDimension& dim) {
  VcdWitness w;
  w.dimension = dim.dimension;
  w.vcd = 2 * g.rank() - 3;
  w.exceeds = static_cast<long>(w.dimension) > w.vcd;
  return w;
}

VcdWitness vcd_witness(const MetricGraph& g, const CycleSearchOptions& options) {
  return vcd_witness(g, local_deformation_dimension(g, options));
}

}  // namespace systole
