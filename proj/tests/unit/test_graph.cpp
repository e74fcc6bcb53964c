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

#include <set>

#include "doctest.h"
#include "epcx/construct/grid.hpp"
#include "epcx/graph/traversal.hpp"
#include "epcx/verify/cycles.hpp"
#include "support/oracles.hpp"

using namespace epcx;
using graph::VertexSet;
using graph::WeightedMultigraph;

TEST_CASE("vertex sets") {
  VertexSet a(130), b(130);
  a.insert(3);
  a.insert(129);
  b.insert(129);
  CHECK(a.count() == 2);
  CHECK(a.intersects(b));
  b.erase(129);
  CHECK(b.empty());
  CHECK_FALSE(a.intersects(b));
  const std::vector<VertexId> m{1, 64, 65};
  VertexSet c(130, m);
  c |= a;
  CHECK(c.members() == std::vector<VertexId>{1, 3, 64, 65, 129});
  c &= a;
  CHECK(c == a);
}

TEST_CASE("multigraph bookkeeping") {
  auto g = oracle::from_edges(3, {{0, 1, 4}, {1, 2, 5}, {0, 1, 1}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.incident(1).size() == 3);
  const std::vector<EdgeId> es{0, 1};
  CHECK(g.weight_of(es) == 9);
  CHECK_FALSE(g.has_unit_weights());
  CHECK(g.weights_u64()->at(1) == 5);
  CHECK_THROWS_AS(g.add_edge(2, 2), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(0, 9), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(0, 1, 0), InvalidArgument);
  g.add_edge(0, 2, BigInt(1) << 70);
  CHECK_FALSE(g.weights_u64().has_value());
}

TEST_CASE("edge kind names round-trip") {
  for (auto k : {graph::EdgeKind::kPlain, graph::EdgeKind::kGrid, graph::EdgeKind::kGadgetPath,
                 graph::EdgeKind::kChord})
    CHECK(graph::edge_kind_from_string(graph::to_string(k)) == k);
  CHECK_THROWS_AS(graph::edge_kind_from_string("bogus"), InvalidArgument);
}

TEST_CASE("grid shape") {
  CHECK_THROWS_AS(construct::build_grid(1), InvalidArgument);
  for (std::size_t side = 2; side <= 7; ++side) {
    const auto g = construct::build_grid(side);
    CHECK(g.vertex_count() == side * side);
    CHECK(g.edge_count() == 2 * side * (side - 1));
    for (std::size_t r = 1; r <= side; ++r)
      for (std::size_t c = 1; c <= side; ++c) {
        const auto v = construct::grid_vertex(side, r, c);
        CHECK(g.label(v)->row == r);
        CHECK(g.label(v)->col == c);
      }
  }
  const auto g = construct::build_grid(3);
  CHECK(construct::edge_between(g, 0, 1).has_value());
  CHECK_FALSE(construct::edge_between(g, 0, 4).has_value());
}

TEST_CASE("theta gadget graph counts") {
  for (std::uint64_t x : {2, 3, 7}) {
    const auto g = construct::build_theta_gadget_graph(3, x);
    CHECK(g.vertex_count() == 9 + 12 * (3 * x - 3));
    CHECK(g.edge_count() == 12 * 3 * x);
    CHECK(g.has_unit_weights());
  }
  CHECK_THROWS_AS(construct::build_theta_gadget_graph(3, 1), InvalidArgument);
}

TEST_CASE("subdivision to unit weights") {
  const auto g = oracle::from_edges(3, {{0, 1, 3}, {1, 2, 1}, {2, 0, 2}});
  const auto u = construct::subdivide_to_unit(g);
  CHECK(u.has_unit_weights());
  CHECK(u.edge_count() == 6);
  CHECK(u.vertex_count() == 6);
  CHECK(verify::count_cycles(u) == 1);
  CHECK_THROWS_AS(construct::subdivide_to_unit(g, 2), InvalidArgument);
}

TEST_CASE("cycle enumeration agrees with the edge-subset oracle") {
  for (const auto& item : oracle::corpus()) {
    if (item.g.edge_count() > 16) continue;
    CAPTURE(item.name);
    const auto expected = oracle::cycles_by_edge_subsets(item.g);
    const auto got = verify::enumerate_cycles(item.g, nullptr);
    REQUIRE(got.size() == expected.size());
    std::multiset<std::pair<std::uint32_t, std::string>> a, b;
    for (const auto& c : expected) a.insert({c.edge_mask, c.weight.str()});
    for (const auto& c : got) {
      std::uint32_t mask = 0;
      for (auto e : c.edges) mask |= 1u << e;
      b.insert({mask, c.weight.str()});
      CHECK(c.vertices.size() == c.edges.size());
    }
    CHECK(a == b);
    CHECK(verify::count_cycles(item.g) == expected.size());
  }
}

TEST_CASE("cycles come out canonical") {
  const auto g = construct::build_grid(3);
  const auto cycles = verify::enumerate_cycles(g, nullptr);
  CHECK(cycles.size() == 13);
  for (auto c : cycles) {
    auto v = c.vertices;
    auto e = c.edges;
    CHECK(v.front() == *std::min_element(v.begin(), v.end()));
    verify::canonicalize_cycle(v, e);
    CHECK(v == c.vertices);
    CHECK(e == c.edges);
    std::reverse(v.begin() + 1, v.end());
    std::rotate(e.begin(), e.end() - 1, e.end());
    std::reverse(e.begin(), e.end());
    verify::canonicalize_cycle(v, e);
    CHECK(v == c.vertices);
  }
}

TEST_CASE("cycle options: caps, exclusions and weight limits") {
  const auto g = oracle::complete(5);
  CHECK(verify::count_cycles(g) == 37);
  CHECK_THROWS_AS(verify::count_cycles(g, 10), CapExceeded);
  VertexSet excluded(5);
  excluded.insert(4);
  std::size_t n = 0;
  graph::CycleSearchOptions opt;
  opt.excluded = &excluded;
  graph::for_each_simple_cycle(g, [&](auto, auto) { return ++n, true; }, opt);
  CHECK(n == 7);
  verify::CycleEnumerationOptions eo;
  eo.weight_cap = BigInt(3);
  CHECK(verify::enumerate_cycles(g, nullptr, eo).size() == 10);
  CHECK(verify::count_cycles(construct::build_grid(4)) == 213);
}

TEST_CASE("simple paths and reachability") {
  const auto g = construct::build_grid(3);
  std::size_t n = 0;
  graph::for_each_simple_path(g, 0, 8, [&](auto p) {
    CHECK(p.front() == 0);
    CHECK(p.back() == 8);
    return ++n, true;
  });
  CHECK(n == 12);
  VertexSet blocked(9);
  blocked.insert(1);
  blocked.insert(3);
  CHECK_FALSE(graph::reachable(g, 0, 8, blocked));
  blocked.erase(3);
  CHECK(graph::reachable(g, 0, 8, blocked));
}
