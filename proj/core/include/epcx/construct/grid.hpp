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

#include "epcx/graph/weighted_multigraph.hpp"

namespace epcx::construct {

using graph::WeightedMultigraph;

/// Row-major id of the 1-based grid position (row, col) in a side x side grid.
constexpr VertexId grid_vertex(std::size_t side, std::size_t row, std::size_t col) {
  return static_cast<VertexId>((row - 1) * side + (col - 1));
}

/// The side x side grid with unit weights. Vertices are numbered row-major;
/// edges are numbered in canonical order: vertices row-major, and at each
/// vertex the edge to the right before the edge below.
WeightedMultigraph build_grid(std::size_t side);

/// Id of an edge joining u and v, if any.
std::optional<EdgeId> edge_between(const WeightedMultigraph& g, VertexId u, VertexId v);

/// The side x side grid with every edge replaced by three internally disjoint
/// paths of lengths x-1, x, x+1 (tagged variant -1, 0, +1). Grid vertices keep
/// ids 0 .. side^2 - 1; internal vertices follow, grouped by host edge.
WeightedMultigraph build_theta_gadget_graph(std::size_t side, std::uint64_t x);

/// Replaces each weight-w edge by a path of w unit edges. Refuses to create
/// more than `max_new_vertices` vertices.
WeightedMultigraph subdivide_to_unit(const WeightedMultigraph& g,
                                     std::uint64_t max_new_vertices = 10'000'000);

}  // namespace epcx::construct
