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

#include "epcx/construct/wall.hpp"

#include <numeric>

#include "epcx/construct/grid.hpp"
#include "epcx/lset/searches.hpp"

namespace epcx::construct {

using graph::EdgeKind;
using graph::EdgeTag;

std::vector<std::vector<VertexId>> route_half_integral_paths(std::size_t ell) {
  if (ell < 1) throw InvalidArgument("wall: ell must be positive");
  const std::size_t side = 6 * ell;
  std::vector<std::vector<VertexId>> paths;
  paths.reserve(3 * ell);
  for (std::size_t i = 1; i <= 3 * ell; ++i) {
    const std::size_t row = 2 * i;
    const std::size_t far_col = side + 1 - i;
    std::vector<VertexId> q;
    q.reserve(12 * ell - 2 * i + 1);
    for (std::size_t r = 1; r <= row; ++r) q.push_back(grid_vertex(side, r, i));
    for (std::size_t c = i + 1; c <= far_col; ++c) q.push_back(grid_vertex(side, row, c));
    for (std::size_t r = row + 1; r <= side; ++r) q.push_back(grid_vertex(side, r, far_col));
    paths.push_back(std::move(q));
  }
  return paths;
}

std::vector<std::uint32_t> path_multiplicity(std::size_t side,
                                             const std::vector<std::vector<VertexId>>& paths) {
  std::vector<std::uint32_t> count(side * side, 0);
  for (const auto& q : paths) {
    for (VertexId v : q) ++count.at(v);
  }
  return count;
}

std::string to_string(WeightSource source) {
  switch (source) {
    case WeightSource::kAuto:
      return "auto";
    case WeightSource::kGreedy:
      return "greedy";
    case WeightSource::kScaledBlock:
      return "scaled-block";
  }
  throw InternalError("unknown weight source");
}

WeightSource weight_source_from_string(const std::string& text) {
  if (text == "auto") return WeightSource::kAuto;
  if (text == "greedy") return WeightSource::kGreedy;
  if (text == "scaled-block") return WeightSource::kScaledBlock;
  throw InvalidArgument("unknown weight source '" + text + "' (auto | greedy | scaled-block)");
}

BigInt find_block_scale(const lset::IntSet& set, std::uint64_t m, std::uint64_t scale_bound) {
  for (std::uint64_t c = 1; c <= scale_bound; ++c) {
    const bool small = static_cast<unsigned __int128>(c) * m <= UINT64_MAX;
    bool clean = true;
    for (std::uint64_t k = 1; k <= m && clean; ++k) {
      clean = small ? !set.contains(c * k) : !set.contains(BigInt(c) * k);
    }
    if (clean) return c;
  }
  throw BoundExhausted("no block scale below bound: every c <= " + std::to_string(scale_bound) +
                       " has a multiple c*k in L with k <= " + std::to_string(m));
}

namespace {

std::vector<BigInt> greedy_weights(const lset::IntSet& set, std::size_t count,
                                   const WallOptions& options) {
  std::vector<BigInt> out;
  out.reserve(count);
  while (out.size() < count) {
    BigInt y = lset::far_from_l_extend(set, out, options.probe_budget);
    if (msb(y) + 1 > options.greedy_bit_cap) {
      throw BoundExhausted("greedy far-from-L weights exceed " +
                           std::to_string(options.greedy_bit_cap) + " bits at element " +
                           std::to_string(out.size() + 1) + " of " + std::to_string(count));
    }
    out.push_back(std::move(y));
  }
  return out;
}

std::vector<BigInt> block_weights(const lset::IntSet& set, std::size_t count,
                                  const WallOptions& options, BigInt& scale) {
  const std::uint64_t n = count;
  scale = find_block_scale(set, n * (n + 1) / 2, options.scale_bound);
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::uint64_t j = 1; j <= n; ++j) out.push_back(scale * j);
  return out;
}

}  // namespace

std::vector<BigInt> choose_wall_weights(const lset::IntSet& set, std::size_t count,
                                        const WallOptions& options, WeightSource& used,
                                        BigInt& scale) {
  scale = 0;
  switch (options.source) {
    case WeightSource::kGreedy:
      used = WeightSource::kGreedy;
      return greedy_weights(set, count, options);
    case WeightSource::kScaledBlock:
      used = WeightSource::kScaledBlock;
      return block_weights(set, count, options, scale);
    case WeightSource::kAuto:
      try {
        used = WeightSource::kGreedy;
        return greedy_weights(set, count, options);
      } catch (const BoundExhausted&) {
        used = WeightSource::kScaledBlock;
        return block_weights(set, count, options, scale);
      }
  }
  throw InternalError("unknown weight source");
}

WallWitness assemble_wall_witness(const lset::IntSet& set, std::size_t ell, WeightSource source,
                                  const BigInt& scale, std::vector<BigInt> weights,
                                  std::vector<BigInt> p) {
  if (ell < 1) throw InvalidArgument("wall: ell must be positive");
  const std::size_t side = 6 * ell;
  const WeightedMultigraph unit = build_grid(side);
  if (weights.size() != unit.edge_count()) {
    throw InvalidArgument("wall: expected " + std::to_string(unit.edge_count()) +
                          " edge weights, got " + std::to_string(weights.size()));
  }
  if (p.size() != 3 * ell) {
    throw InvalidArgument("wall: expected " + std::to_string(3 * ell) + " lonely values, got " +
                          std::to_string(p.size()));
  }

  WallWitness w{set, ell, source, scale, {}, std::move(weights), 0, {}, {}, std::move(p), {}, {}};
  for (VertexId v = 0; v < unit.vertex_count(); ++v) w.grid.add_vertex(unit.label(v));
  for (EdgeId e = 0; e < unit.edge_count(); ++e) {
    const auto& edge = unit.edge(e);
    w.grid.add_edge(edge.u, edge.v, w.weights[e], edge.tag);
  }
  w.alpha = std::accumulate(w.weights.begin(), w.weights.end(), BigInt(0));
  w.paths = route_half_integral_paths(ell);

  w.graph = w.grid;
  for (std::size_t i = 1; i <= 3 * ell; ++i) {
    const auto& q = w.paths[i - 1];
    BigInt length = 0;
    for (std::size_t j = 0; j + 1 < q.size(); ++j) {
      auto e = edge_between(w.grid, q[j], q[j + 1]);
      if (!e) throw InternalError("wall: routed path leaves the grid");
      length += w.grid.edge(*e).weight;
    }
    w.path_weights.push_back(length);
    const BigInt& target = w.p[i - 1];
    const BigInt chord_weight = target - length;
    if (chord_weight < 1) {
      throw InternalError("wall: nonpositive chord weight " + chord_weight.str() + " for chord " +
                          std::to_string(i));
    }
    Chord chord;
    chord.index = i;
    chord.a = grid_vertex(side, 1, i);
    chord.b = grid_vertex(side, side, side + 1 - i);
    chord.weight = chord_weight;
    chord.edge = w.graph.add_edge(chord.a, chord.b, chord_weight,
                                  EdgeTag{EdgeKind::kChord, 0, static_cast<std::uint32_t>(i)});
    w.chords.push_back(std::move(chord));
  }
  return w;
}

WallWitness construct_wall_witness(const lset::IntSet& set, std::size_t ell,
                                   const WallOptions& options) {
  if (ell < 1) throw InvalidArgument("wall: ell must be positive");
  const std::size_t side = 6 * ell;
  const std::size_t edge_count = 2 * side * (side - 1);
  WeightSource used = WeightSource::kAuto;
  BigInt scale;
  std::vector<BigInt> weights = choose_wall_weights(set, edge_count, options, used, scale);
  const BigInt alpha = std::accumulate(weights.begin(), weights.end(), BigInt(0));
  std::vector<BigInt> p = lset::lonely_sequence(set, 3 * ell, alpha, options.probe_budget);
  return assemble_wall_witness(set, ell, used, scale, std::move(weights), std::move(p));
}

}  // namespace epcx::construct
