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

#include "epcx/graph/traversal.hpp"

#include <algorithm>
#include <vector>

namespace epcx::graph {

bool for_each_simple_cycle(const WeightedMultigraph& g, const CycleVisitor& visit,
                           const CycleSearchOptions& options) {
  const std::size_t n = g.vertex_count();
  const std::size_t end = std::min<std::size_t>(options.start_end.value_or(n), n);
  const bool weighted = !options.weights.empty() && options.weight_cap.has_value();
  if (!options.weights.empty() && options.weights.size() != g.edge_count()) {
    throw InvalidArgument("cycle search: weight vector does not match edge count");
  }
  const std::size_t max_edges = options.max_edges.value_or(n == 0 ? 0 : n + 1);

  std::vector<char> on_path(n, 0);
  std::vector<VertexId> path_vertices;
  std::vector<EdgeId> path_edges;
  std::vector<std::size_t> cursor;
  path_vertices.reserve(n);
  path_edges.reserve(n + 1);
  cursor.reserve(n);

  for (std::size_t s_index = options.start_begin; s_index < end; ++s_index) {
    const auto s = static_cast<VertexId>(s_index);
    if (options.excluded && options.excluded->contains(s)) continue;
    std::uint64_t weight = 0;
    path_vertices.assign(1, s);
    path_edges.clear();
    cursor.assign(1, 0);
    on_path[s] = 1;

    while (!cursor.empty()) {
      const std::size_t depth = cursor.size() - 1;
      const VertexId v = path_vertices[depth];
      const auto incident = g.incident(v);
      if (cursor[depth] == incident.size()) {
        on_path[v] = 0;
        path_vertices.pop_back();
        cursor.pop_back();
        if (!path_edges.empty()) {
          if (weighted) weight -= options.weights[path_edges.back()];
          path_edges.pop_back();
        }
        continue;
      }
      const auto [w, e] = incident[cursor[depth]++];
      if (!path_edges.empty() && e == path_edges.back()) continue;
      if (weighted && weight + options.weights[e] > *options.weight_cap) continue;
      if (w == s) {
        // Each cycle is met in both directions; keep the one whose first edge
        // has the smaller id.
        if (path_edges.empty() || path_edges.front() >= e) continue;
        if (path_edges.size() + 1 > max_edges) continue;
        path_edges.push_back(e);
        const bool keep_going = visit(path_vertices, path_edges);
        path_edges.pop_back();
        if (!keep_going) {
          for (VertexId u : path_vertices) on_path[u] = 0;
          return false;
        }
        continue;
      }
      if (w < s || on_path[w]) continue;
      if (options.excluded && options.excluded->contains(w)) continue;
      if (path_edges.size() + 2 > max_edges) continue;
      path_edges.push_back(e);
      path_vertices.push_back(w);
      cursor.push_back(0);
      on_path[w] = 1;
      if (weighted) weight += options.weights[e];
    }
  }
  return true;
}

bool reachable(const WeightedMultigraph& g, VertexId from, VertexId to, const VertexSet& blocked) {
  if (from == to) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> queue{from};
  seen[from] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& [w, e] : g.incident(queue[head])) {
      if (seen[w] || blocked.contains(w)) continue;
      if (w == to) return true;
      seen[w] = 1;
      queue.push_back(w);
    }
  }
  return false;
}

PathSearchStats for_each_simple_path(const WeightedMultigraph& g, VertexId from, VertexId to,
                                     const PathVisitor& visit, const PathSearchOptions& options) {
  PathSearchStats stats;
  const std::size_t n = g.vertex_count();
  if (from >= n || to >= n) throw InvalidArgument("path search: terminal out of range");
  if (options.excluded && (options.excluded->contains(from) || options.excluded->contains(to))) {
    return stats;
  }
  if (from == to) {
    const VertexId single[] = {from};
    ++stats.complete_paths;
    stats.stopped = !visit(single);
    return stats;
  }

  VertexSet used(n);
  if (options.excluded) used |= *options.excluded;
  used.insert(from);
  if (options.prune && options.prune(used)) {
    ++stats.pruned_branches;
    return stats;
  }

  std::vector<VertexId> path{from};
  std::vector<std::size_t> cursor{0};
  while (!cursor.empty()) {
    const std::size_t depth = cursor.size() - 1;
    const VertexId v = path[depth];
    const auto incident = g.incident(v);
    if (cursor[depth] == incident.size()) {
      if (depth > 0) used.erase(v);
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    const VertexId w = incident[cursor[depth]++].neighbor;
    if (used.contains(w)) continue;
    if (w == to) {
      path.push_back(w);
      ++stats.complete_paths;
      const bool keep_going = visit(path);
      path.pop_back();
      if (!keep_going) {
        stats.stopped = true;
        return stats;
      }
      continue;
    }
    used.insert(w);
    if ((options.prune && options.prune(used)) || !reachable(g, w, to, used)) {
      used.erase(w);
      ++stats.pruned_branches;
      continue;
    }
    path.push_back(w);
    cursor.push_back(0);
  }
  return stats;
}

}  // namespace epcx::graph
