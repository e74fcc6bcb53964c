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

#include "epcx/verify/probe.hpp"

#include <algorithm>

namespace epcx::verify {

using graph::VertexSet;

ProbeResult probe_erdos_posa(const graph::WeightedMultigraph& g, const lset::IntSet& set,
                             std::size_t k, std::size_t t, const ProbeOptions& options) {
  if (t == 0) throw InvalidArgument("probe: t must be positive");
  ProbeResult out;
  CycleEnumerationOptions enum_options;
  enum_options.cycle_cap = options.cycle_cap;
  for (auto& c : enumerate_cycles(g, &set, enum_options)) {
    if (c.in_l) out.l_cycles.push_back(std::move(c));
  }
  const std::size_t n = g.vertex_count();
  const std::size_t count = out.l_cycles.size();

  // Packing: choose cycles in index order under per-vertex load t.
  {
    std::vector<std::size_t> load(n, 0);
    std::vector<std::size_t> chosen;
    std::uint64_t nodes = 0;
    auto dfs = [&](auto&& self, std::size_t from) -> void {
      if (chosen.size() > out.packing) {
        out.packing = chosen.size();
        out.packing_cycles = chosen;
      }
      if (out.packing >= k) return;
      for (std::size_t i = from; i < count; ++i) {
        if (chosen.size() + (count - i) <= out.packing) return;
        if (++nodes > options.node_cap) {
          out.packing_exact = false;
          return;
        }
        const auto& vs = out.l_cycles[i].vertices;
        if (std::any_of(vs.begin(), vs.end(), [&](VertexId v) { return load[v] >= t; })) continue;
        for (VertexId v : vs) ++load[v];
        chosen.push_back(i);
        self(self, i + 1);
        chosen.pop_back();
        for (VertexId v : vs) --load[v];
        if (out.packing >= k || !out.packing_exact) return;
      }
    };
    dfs(dfs, 0);
  }

  // Hitting set: iterative deepening, branching on the first unhit cycle.
  {
    std::vector<VertexSet> cycles;
    for (const auto& c : out.l_cycles) cycles.emplace_back(n, c.vertices);
    VertexSet removed(n);
    std::vector<VertexId> picked;
    std::uint64_t nodes = 0;
    auto search = [&](auto&& self, std::size_t budget) -> bool {
      if (++nodes > options.node_cap) return false;
      const auto unhit = std::find_if(cycles.begin(), cycles.end(),
                                      [&](const VertexSet& c) { return !c.intersects(removed); });
      if (unhit == cycles.end()) return true;
      if (budget == 0) return false;
      for (VertexId v : unhit->members()) {
        removed.insert(v);
        picked.push_back(v);
        if (self(self, budget - 1)) return true;
        picked.pop_back();
        removed.erase(v);
      }
      return false;
    };
    bool found = false;
    for (std::size_t size = 0; size <= n && !found; ++size) {
      found = search(search, size);
      if (nodes > options.node_cap) break;
      if (found) out.hitting = size;
    }
    if (!found) {
      // Fall back to all vertices of all L-cycles, an upper bound.
      out.hitting_exact = false;
      VertexSet all(n);
      for (const auto& c : cycles) all |= c;
      picked = all.members();
      out.hitting = picked.size();
    }
    std::sort(picked.begin(), picked.end());
    out.hitting_set = picked;
  }
  return out;
}

}  // namespace epcx::verify
