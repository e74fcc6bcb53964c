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

#include <numeric>

#include "doctest.h"
#include "epcx/construct/gadget.hpp"
#include "epcx/construct/grid.hpp"
#include "epcx/construct/wall.hpp"
#include "epcx/lset/searches.hpp"
#include "support/oracles.hpp"

using namespace epcx;
using namespace epcx::construct;

TEST_CASE("ell window") {
  // 2t g / (2t-1) <= ell^2 <= 3t g / (3t-2)
  for (std::uint64_t t = 1; t <= 6; ++t)
    for (std::uint64_t g = 1; g <= 400; ++g) {
      const auto w = ell_window(t, g);
      for (std::uint64_t ell = 1; ell <= 40; ++ell) {
        const bool in = ell * ell * (2 * t - 1) >= 2 * t * g && ell * ell * (3 * t - 2) <= 3 * t * g;
        REQUIRE(in == (ell >= w.lo && ell <= w.hi));
      }
    }
  CHECK(ell_window(1, 17).lo == 6);
  CHECK(g_large_enough(17, 1, 1));
  CHECK_FALSE(g_large_enough(16, 1, 1));
  CHECK(g_large_enough(145, 1, 3));
}

TEST_CASE("gadget parameters for squares") {
  const auto p = choose_gadget_parameters(lset::IntSet::squares(), 1, 1, 1000, 1000);
  CHECK(p.x == 119);
  CHECK(p.g == 17);
  CHECK(p.ell == 6);
  CHECK(p.g == lset::g_of(lset::IntSet::squares(), p.x, 1000));
}

TEST_CASE("gadget parameters for cubes") {
  std::vector<BigInt> cubes;
  for (int j = 1; j <= 2000; ++j) cubes.push_back(BigInt(j) * j * j);
  const auto p = choose_gadget_parameters(lset::IntSet::explicit_list(cubes), 1, 1, 1000, 1000);
  CHECK(p.x == 59);
  CHECK(p.g == 17);
  CHECK(p.ell == 6);
}

TEST_CASE("gadget parameters for a single huge element") {
  const auto set = lset::IntSet::explicit_list({BigInt(1'000'000)});
  const auto p = choose_gadget_parameters(set, 1, 1, 10, 400'000);
  CHECK(p.x == 2);
  CHECK(p.g == 333334);
  CHECK(p.ell == 817);
  CHECK_THROWS_AS(choose_gadget_parameters(set, 1, 1, 10, 50), NoFeasibleX);
}

TEST_CASE("gadget search failures are typed") {
  CHECK_THROWS_AS(choose_gadget_parameters(lset::IntSet::arithmetic(0, 1), 1, 1, 50, 100),
                  NoFeasibleX);
  CHECK_THROWS_AS(choose_gadget_parameters(lset::IntSet::squares(), 0, 1, 50, 100),
                  InvalidArgument);
}

TEST_CASE("gadget witness graphs") {
  const auto w = construct_gadget_witness(lset::IntSet::squares(), 1, 1, 1000, 1000);
  CHECK(w.grid.vertex_count() == 36);
  CHECK(w.graph.vertex_count() == 21276);
  CHECK(w.graph.edge_count() == 21420);
  std::array<std::size_t, 3> by_variant{};
  for (const auto& e : w.graph.edges()) {
    CHECK(e.tag.kind == graph::EdgeKind::kGadgetPath);
    ++by_variant[e.tag.variant + 1];
  }
  CHECK(by_variant[0] == 60 * 118);
  CHECK(by_variant[1] == 60 * 119);
  CHECK(by_variant[2] == 60 * 120);
}

TEST_CASE("half-integral routing") {
  for (std::size_t ell = 1; ell <= 4; ++ell) {
    const auto side = 6 * ell;
    const auto paths = route_half_integral_paths(ell);
    REQUIRE(paths.size() == 3 * ell);
    const auto grid = build_grid(side);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const auto& q = paths[i];
      CHECK(q.front() == grid_vertex(side, 1, i + 1));
      CHECK(q.back() == grid_vertex(side, side, side - i));
      std::set<VertexId> distinct(q.begin(), q.end());
      CHECK(distinct.size() == q.size());
      for (std::size_t j = 0; j + 1 < q.size(); ++j)
        CHECK(edge_between(grid, q[j], q[j + 1]).has_value());
    }
    const auto mult = path_multiplicity(side, paths);
    CHECK(*std::max_element(mult.begin(), mult.end()) == 2);
  }
}

TEST_CASE("block scale") {
  CHECK(find_block_scale(lset::IntSet::squares(), 1, 100) == 2);
  CHECK(find_block_scale(lset::IntSet::squares(), 1830, 1'000'000) == 1831);
  CHECK_THROWS_AS(find_block_scale(lset::IntSet::arithmetic(0, 1), 3, 100), BoundExhausted);
  const auto c = find_block_scale(lset::IntSet::primes(), 50, 1'000'000);
  for (std::uint64_t k = 1; k <= 50; ++k) CHECK_FALSE(lset::IntSet::primes().contains(BigInt(c * k)));
}

TEST_CASE("wall witness for squares") {
  const auto w = construct_wall_witness(lset::IntSet::squares(), 1);
  CHECK(w.side() == 6);
  CHECK(w.source == WeightSource::kScaledBlock);
  CHECK(w.scale == 1831);
  CHECK(w.alpha == 3350730);
  REQUIRE(w.p.size() == 3);
  CHECK(w.p[0] == BigInt("2806847883225"));
  CHECK(w.p[1] == BigInt("1969603462390079961852484"));
  CHECK(w.p[2] == BigInt("969834449767511974653189576601944810309727968400"));
  CHECK(w.alpha == std::accumulate(w.weights.begin(), w.weights.end(), BigInt(0)));
  REQUIRE(w.chords.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(oracle::is_square(w.p[i]));
    CHECK(w.chords[i].weight > 0);
    CHECK(w.chords[i].weight + w.path_weights[i] == w.p[i]);
    CHECK(w.graph.edge(w.chords[i].edge).tag.kind == graph::EdgeKind::kChord);
  }
  CHECK(w.graph.edge_count() == 63);
}

TEST_CASE("wall weight sources") {
  WallOptions greedy;
  greedy.source = WeightSource::kGreedy;
  CHECK_THROWS_AS(construct_wall_witness(lset::IntSet::squares(), 1, greedy), BoundExhausted);
  const auto w = construct_wall_witness(lset::IntSet::powers(10), 1);
  CHECK(w.weights.size() == 60);
  for (const auto& e : {"auto", "greedy", "scaled-block"})
    CHECK(to_string(weight_source_from_string(e)) == e);
  CHECK_THROWS_AS(weight_source_from_string("random"), InvalidArgument);
}

TEST_CASE("wall reassembly catches tampering") {
  const auto w = construct_wall_witness(lset::IntSet::squares(), 1);
  CHECK_NOTHROW(assemble_wall_witness(w.set, 1, w.source, w.scale, w.weights, w.p));
  auto p = w.p;
  p[0] = 4;
  CHECK_THROWS(assemble_wall_witness(w.set, 1, w.source, w.scale, w.weights, p));
}
