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

#include "epcx/construct/grid.hpp"

namespace epcx::construct {

using graph::EdgeKind;
using graph::EdgeTag;
using graph::GridLabel;

WeightedMultigraph build_grid(std::size_t side) {
  if (side < 2) throw InvalidArgument("grid side must be at least 2");
  WeightedMultigraph g;
  for (std::size_t r = 1; r <= side; ++r) {
    for (std::size_t c = 1; c <= side; ++c) {
      g.add_vertex(GridLabel{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)});
    }
  }
  const EdgeTag tag{EdgeKind::kGrid, 0, 0};
  for (std::size_t r = 1; r <= side; ++r) {
    for (std::size_t c = 1; c <= side; ++c) {
      if (c < side) g.add_edge(grid_vertex(side, r, c), grid_vertex(side, r, c + 1), 1, tag);
      if (r < side) g.add_edge(grid_vertex(side, r, c), grid_vertex(side, r + 1, c), 1, tag);
    }
  }
  return g;
}

std::optional<EdgeId> edge_between(const WeightedMultigraph& g, VertexId u, VertexId v) {
  for (const auto& inc : g.incident(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return std::nullopt;
}

WeightedMultigraph build_theta_gadget_graph(std::size_t side, std::uint64_t x) {
  if (x < 2) throw InvalidArgument("theta gadget needs x >= 2 so the shortest path has an edge");
  const WeightedMultigraph grid = build_grid(side);
  WeightedMultigraph g;
  for (VertexId v = 0; v < grid.vertex_count(); ++v) g.add_vertex(grid.label(v));
  for (EdgeId e = 0; e < grid.edge_count(); ++e) {
    const auto& host = grid.edge(e);
    for (int variant = -1; variant <= 1; ++variant) {
      const EdgeTag tag{EdgeKind::kGadgetPath, variant, e};
      const std::uint64_t length = x + variant;
      VertexId prev = host.u;
      for (std::uint64_t step = 1; step < length; ++step) {
        VertexId inner = g.add_vertex();
        g.add_edge(prev, inner, 1, tag);
        prev = inner;
      }
      g.add_edge(prev, host.v, 1, tag);
    }
  }
  return g;
}

WeightedMultigraph subdivide_to_unit(const WeightedMultigraph& g, std::uint64_t max_new_vertices) {
  BigInt extra = 0;
  for (const auto& e : g.edges()) extra += e.weight - 1;
  if (extra > max_new_vertices) {
    throw InvalidArgument("subdivision would add " + extra.str() + " vertices (limit " +
                          std::to_string(max_new_vertices) + ")");
  }
  WeightedMultigraph out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.label(v));
  for (const auto& e : g.edges()) {
    const auto pieces = static_cast<std::uint64_t>(e.weight);
    VertexId prev = e.u;
    for (std::uint64_t step = 1; step < pieces; ++step) {
      VertexId inner = out.add_vertex();
      out.add_edge(prev, inner, 1, e.tag);
      prev = inner;
    }
    out.add_edge(prev, e.v, 1, e.tag);
  }
  return out;
}

}  // namespace epcx::construct
