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
#include <vector>

#include "epcx/verify/cycles.hpp"

namespace epcx::verify {

struct ProbeOptions {
  std::uint64_t cycle_cap = 100'000;
  std::uint64_t node_cap = 100'000'000;  // search nodes per side
};

struct ProbeResult {
  std::vector<CycleRecord> l_cycles;
  /// Largest m <= k with m distinct L-cycles, no vertex in more than t.
  std::size_t packing = 0;
  std::vector<std::size_t> packing_cycles;  // indices into l_cycles
  bool packing_exact = true;
  /// Smallest vertex set meeting every L-cycle.
  std::size_t hitting = 0;
  std::vector<VertexId> hitting_set;
  bool hitting_exact = true;
};

/// Exact packing and hitting-set numbers for the L-cycles of a small graph.
/// Results stay valid lower/upper bounds when a node cap cuts the search
/// short; the `*_exact` flags say whether that happened.
ProbeResult probe_erdos_posa(const graph::WeightedMultigraph& g, const lset::IntSet& set,
                             std::size_t k, std::size_t t, const ProbeOptions& options = {});

}  // namespace epcx::verify
