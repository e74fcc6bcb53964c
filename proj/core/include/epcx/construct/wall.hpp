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
#include <string>
#include <vector>

#include "epcx/graph/weighted_multigraph.hpp"
#include "epcx/lset/int_set.hpp"

namespace epcx::construct {

/// Q_i for i = 1..3ell in the 6ell x 6ell grid: down column i to row 2i,
/// right along row 2i to column 6ell+1-i, down to the last row.
std::vector<std::vector<VertexId>> route_half_integral_paths(std::size_t ell);

/// Number of routed paths through each grid vertex.
std::vector<std::uint32_t> path_multiplicity(std::size_t side,
                                             const std::vector<std::vector<VertexId>>& paths);

enum class WeightSource {
  kAuto,         // greedy first, scaled block if the greedy values blow up
  kGreedy,  // iterated smallest far-from-L extension
  kScaledBlock,  // {c, 2c, ..., Nc} with c*k outside L for all k <= N(N+1)/2
};

std::string to_string(WeightSource source);
WeightSource weight_source_from_string(const std::string& text);

struct WallOptions {
  std::uint64_t probe_budget = 1'000'000;
  WeightSource source = WeightSource::kAuto;
  /// Greedy gives up once an element exceeds this many bits.
  std::size_t greedy_bit_cap = 4096;
  /// Largest scale factor tried for the scaled block.
  std::uint64_t scale_bound = 1'000'000;
};

struct Chord {
  std::size_t index = 0;  // 1-based
  VertexId a = 0;
  VertexId b = 0;
  BigInt weight;
  EdgeId edge = 0;  // id in the full graph
};

struct WallWitness {
  lset::IntSet set;
  std::size_t ell = 0;
  WeightSource source = WeightSource::kScaledBlock;  // never kAuto once built
  BigInt scale;                                     // c for the scaled block, else 0
  graph::WeightedMultigraph grid;                   // W with weights from A
  std::vector<BigInt> weights;                      // A in canonical edge order
  BigInt alpha;
  std::vector<std::vector<VertexId>> paths;
  std::vector<BigInt> path_weights;
  std::vector<BigInt> p;
  std::vector<Chord> chords;
  graph::WeightedMultigraph graph;  // W plus chords

  std::size_t side() const { return 6 * ell; }
};

/// Smallest c <= scale_bound with c*k outside L for every k in [1, m].
BigInt find_block_scale(const lset::IntSet& set, std::uint64_t m, std::uint64_t scale_bound);

/// Far-from-L weights for `count` edges according to the options. Reports the
/// source actually used and, for the scaled block, its scale.
std::vector<BigInt> choose_wall_weights(const lset::IntSet& set, std::size_t count,
                                        const WallOptions& options, WeightSource& used,
                                        BigInt& scale);

WallWitness construct_wall_witness(const lset::IntSet& set, std::size_t ell,
                                   const WallOptions& options = {});

/// Rebuilds grid, paths and chords from the recorded numbers. Used when
/// loading a witness; checks every stored quantity it can recompute.
WallWitness assemble_wall_witness(const lset::IntSet& set, std::size_t ell, WeightSource source,
                                  const BigInt& scale, std::vector<BigInt> weights,
                                  std::vector<BigInt> p);

}  // namespace epcx::construct
