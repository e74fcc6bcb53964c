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

#include "epcx/verify/cycles.hpp"

#include <algorithm>

#include "epcx/graph/traversal.hpp"

namespace epcx::verify {

void canonicalize_cycle(std::vector<VertexId>& vertices, std::vector<EdgeId>& edges) {
  const std::size_t n = vertices.size();
  if (n == 0 || edges.size() != n) throw InvalidArgument("canonicalize: malformed cycle");
  const auto start =
      static_cast<std::size_t>(std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
  std::rotate(vertices.begin(), vertices.begin() + static_cast<std::ptrdiff_t>(start),
              vertices.end());
  std::rotate(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(start), edges.end());
  // Forward direction leaves along edges[0]; backward along edges[n-1].
  const bool reverse = n > 2 ? vertices[1] > vertices[n - 1] : edges[0] > edges[n - 1];
  if (reverse) {
    std::reverse(vertices.begin() + 1, vertices.end());
    std::reverse(edges.begin(), edges.end());
  }
}

std::vector<CycleRecord> enumerate_cycles(const graph::WeightedMultigraph& g,
                                          const lset::IntSet* set,
                                          const CycleEnumerationOptions& options) {
  graph::CycleSearchOptions search;
  std::vector<std::uint64_t> weights;
  if (options.weight_cap) {
    auto narrow = g.weights_u64();
    auto cap = to_u64(*options.weight_cap);
    if (narrow && cap) {
      weights = std::move(*narrow);
      search.weights = weights;
      search.weight_cap = *cap;
    }
  }
  std::vector<CycleRecord> out;
  graph::for_each_simple_cycle(
      g,
      [&](std::span<const VertexId> vs, std::span<const EdgeId> es) {
        CycleRecord rec;
        rec.weight = g.weight_of(es);
        if (options.weight_cap && rec.weight > *options.weight_cap) return true;
        if (out.size() >= options.cycle_cap) {
          throw CapExceeded("cycle cap of " + std::to_string(options.cycle_cap) + " exceeded",
                            out.size());
        }
        rec.vertices.assign(vs.begin(), vs.end());
        rec.edges.assign(es.begin(), es.end());
        canonicalize_cycle(rec.vertices, rec.edges);
        if (set) rec.in_l = set->contains(rec.weight);
        for (EdgeId e : rec.edges) {
          const auto& tag = g.edge(e).tag;
          if (tag.kind == graph::EdgeKind::kChord) rec.chords.push_back(tag.index);
        }
        std::sort(rec.chords.begin(), rec.chords.end());
        out.push_back(std::move(rec));
        return true;
      },
      search);
  return out;
}

std::uint64_t count_cycles(const graph::WeightedMultigraph& g, std::uint64_t cycle_cap) {
  std::uint64_t count = 0;
  graph::for_each_simple_cycle(g, [&](std::span<const VertexId>, std::span<const EdgeId>) {
    if (++count > cycle_cap) {
      throw CapExceeded("cycle cap of " + std::to_string(cycle_cap) + " exceeded", count - 1);
    }
    return true;
  });
  return count;
}

}  // namespace epcx::verify
