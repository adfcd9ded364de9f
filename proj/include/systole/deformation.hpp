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
#include <optional>
#include <vector>

#include "systole/cycles.hpp"

namespace systole {

// Dense rational matrix, one vector per row.
using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact rank by Gaussian elimination over Q.
std::size_t rational_rank(const RationalMatrix& rows, std::size_t cols);
// Basis of {x : rows * x = 0}.
RationalMatrix kernel_basis(const RationalMatrix& rows, std::size_t cols);

// Rows 1..F-1: indicator(γ_{i+1}) - indicator(γ_i), columns in edge order.
// Last row: all ones (the volume constraint).
RationalMatrix equality_system(const MetricGraph& g, std::span<const Cycle> cycles);
RationalMatrix systole_equality_system(const MetricGraph& g,
                                       const CycleSearchOptions& options = {});

struct DeformationDimension {
  std::size_t edges = 0;            // E
  std::size_t systoles = 0;         // F
  std::size_t rank_difference = 0;  // rank of the F-1 difference rows
  std::size_t dimension = 0;        // E - 1 - rank_difference
  long lower_bound = 0;             // E - F
  // Whether the solution space meets the open positive orthant, i.e. the
  // local dimension is realized by metric graphs. Checked at the base point.
  bool positive_direction = false;
  // Next cycle length minus the systole length; nullopt if no longer cycle.
  std::optional<Rational> gap;
};

// Local dimension, at g, of the set of unit-volume metrics on the same graph
// in which the systoles stay exactly the systoles of g.
DeformationDimension local_deformation_dimension(const MetricGraph& g,
                                                 const CycleSearchOptions& options = {});

// Same for a prescribed family of equal-length cycles, which must be exactly
// the cycles of minimal length. Throws Error(NotStrictlyShorter) when another
// cycle ties them and Error(InvalidGraph) when some other cycle is shorter or
// the family's lengths differ.
DeformationDimension local_deformation_dimension(const MetricGraph& g,
                                                 std::span<const Cycle> family);

struct VcdWitness {
  std::size_t dimension = 0;
  long vcd = 0;  // 2n - 3
  bool exceeds = false;
};

VcdWitness vcd_witness(const MetricGraph& g, const DeformationDimension& dim);
VcdWitness vcd_witness(const MetricGraph& g, const CycleSearchOptions& options = {});

}  // namespace systole
