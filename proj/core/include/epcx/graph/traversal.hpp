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
#include <functional>
#include <optional>
#include <span>

#include "epcx/graph/weighted_multigraph.hpp"

namespace epcx::graph {

struct CycleSearchOptions {
  /// Vertices no cycle may touch.
  const VertexSet* excluded = nullptr;
  std::optional<std::size_t> max_edges;
  /// When non-empty, per-edge weights used to prune cycles heavier than
  /// `weight_cap`.
  std::span<const std::uint64_t> weights;
  std::optional<std::uint64_t> weight_cap;
  /// Only cycles whose smallest vertex lies in [start_begin, start_end).
  VertexId start_begin = 0;
  std::optional<VertexId> start_end;
};

/// Receives the vertex sequence (starting at the cycle's smallest vertex) and
/// the edge sequence of a cycle. Return false to stop the enumeration.
using CycleVisitor = std::function<bool(std::span<const VertexId>, std::span<const EdgeId>)>;

/// Visits every simple cycle exactly once, including 2-cycles formed by
/// parallel edges. Returns false iff the visitor stopped the search.
bool for_each_simple_cycle(const WeightedMultigraph& g, const CycleVisitor& visit,
                           const CycleSearchOptions& options = {});

struct PathSearchOptions {
  const VertexSet* excluded = nullptr;
  /// Called on the vertex set of every partial path; returning true cuts the
  /// branch. Must be monotone: if it cuts a path it cuts every extension.
  std::function<bool(const VertexSet&)> prune;
};

using PathVisitor = std::function<bool(std::span<const VertexId>)>;

struct PathSearchStats {
  std::uint64_t complete_paths = 0;
  std::uint64_t pruned_branches = 0;
  bool stopped = false;
};

/// Visits every simple from-to path (as a vertex sequence). Branches that can
/// no longer reach `to` are skipped.
PathSearchStats for_each_simple_path(const WeightedMultigraph& g, VertexId from, VertexId to,
                                     const PathVisitor& visit,
                                     const PathSearchOptions& options = {});

/// True iff `to` is reachable from `from` without touching `blocked`.
bool reachable(const WeightedMultigraph& g, VertexId from, VertexId to, const VertexSet& blocked);

}  // namespace epcx::graph
