// Copyright 2026 The epcx Authors
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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "epcx/graph/weighted_multigraph.hpp"
#include "epcx/lset/int_set.hpp"

namespace epcx::verify {

/// Gadget cycles: weight = grid_length * x + offset with |offset| <= grid_length.
struct LiftDecomposition {
  std::uint64_t grid_length = 0;
  std::int64_t offset = 0;
};

struct CycleRecord {
  /// Closed walk without the repeated endpoint; starts at the smallest vertex
  /// and continues towards the smaller of its two cycle neighbours.
  std::vector<VertexId> vertices;
  /// edges[i] joins vertices[i] and vertices[(i + 1) % size].
  std::vector<EdgeId> edges;
  BigInt weight;
  bool in_l = false;
  std::optional<LiftDecomposition> lift;
  /// Wall cycles: 1-based indices of the chords used.
  std::vector<std::size_t> chords;
};

struct CycleEnumerationOptions {
  std::optional<BigInt> weight_cap;
  std::uint64_t cycle_cap = 10'000'000;
};

/// Rotates and reflects a cycle into canonical form in place.
void canonicalize_cycle(std::vector<VertexId>& vertices, std::vector<EdgeId>& edges);

/// Every simple cycle of weight <= cap, each exactly once, in discovery
/// order. `set` may be null, in which case `in_l` stays false. Throws
/// CapExceeded once more than `cycle_cap` cycles are found.
std::vector<CycleRecord> enumerate_cycles(const graph::WeightedMultigraph& g,
                                          const lset::IntSet* set,
                                          const CycleEnumerationOptions& options = {});

/// Number of simple cycles, without materialising them.
std::uint64_t count_cycles(const graph::WeightedMultigraph& g,
                           std::uint64_t cycle_cap = UINT64_MAX);

}  // namespace epcx::verify
