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

#include <sstream>

#include "doctest.h"
#include "epcx/construct/gadget.hpp"
#include "epcx/construct/wall.hpp"
#include "epcx/io/witness_io.hpp"
#include "epcx/lset/set_spec.hpp"

using namespace epcx;
using namespace epcx::io;

namespace {

std::filesystem::path data(const char* name) { return std::filesystem::path(EPCX_TEST_DATA) / name; }

}  // namespace

TEST_CASE("big integers in JSON") {
  CHECK(bigint_to_json(BigInt(42)).is_number_unsigned());
  const BigInt huge = BigInt(1) << 100;
  CHECK(bigint_to_json(huge).is_string());
  CHECK(bigint_from_json(bigint_to_json(huge)) == huge);
  CHECK(bigint_from_json(json(7)) == 7);
  CHECK_THROWS_AS(bigint_from_json(json("12a")), InvalidArgument);
  CHECK_THROWS_AS(bigint_from_json(json(-3)), InvalidArgument);
}

TEST_CASE("sets in JSON") {
  for (const char* spec : {"primes", "powers:10", "perturb:squares", "explicit:3,8"}) {
    const auto s = lset::parse_set_spec(spec);
    CHECK(set_from_json(set_to_json(s)).spec() == s.spec());
  }
  const auto bounded = lset::parse_set_spec("primes", BigInt(500));
  CHECK(*set_from_json(set_to_json(bounded)).enumeration_bound() == 500);
}

TEST_CASE("graphs in JSON") {
  graph::WeightedMultigraph g;
  g.add_vertex(graph::GridLabel{1, 1});
  g.add_vertex(graph::GridLabel{1, 2});
  g.add_vertex(graph::GridLabel{2, 1});
  g.add_edge(0, 1, 3, {graph::EdgeKind::kGrid, 0, 0});
  g.add_edge(1, 2, BigInt(1) << 80, {graph::EdgeKind::kChord, 0, 1});
  g.add_edge(0, 1, 1, {graph::EdgeKind::kGadgetPath, -1, 0});
  const auto back = graph_from_json(graph_to_json(g));
  REQUIRE(back.edge_count() == 3);
  for (EdgeId e = 0; e < 3; ++e) {
    CHECK(back.edge(e).u == g.edge(e).u);
    CHECK(back.edge(e).weight == g.edge(e).weight);
    CHECK(back.edge(e).tag == g.edge(e).tag);
  }
  CHECK(back.label(2) == g.label(2));
  CHECK(graph_to_json(back) == graph_to_json(g));
}

TEST_CASE("gadget witness round-trip") {
  const auto w = construct::construct_gadget_witness(lset::IntSet::squares(), 1, 1, 1000, 1000);
  const auto doc = gadget_to_json(w, json{{"note", "x"}});
  CHECK(doc["format"] == kWitnessFormat);
  CHECK(doc["version"] == kFormatVersion);
  const auto loaded = witness_from_json(doc);
  REQUIRE(loaded.kind == WitnessKind::kGadget);
  CHECK(loaded.gadget->params.x == 119);
  CHECK(loaded.config["note"] == "x");
  CHECK(gadget_to_json(*loaded.gadget, loaded.config) == doc);
}

TEST_CASE("wall witness round-trip and tamper detection") {
  const auto w = construct::construct_wall_witness(lset::IntSet::squares(), 1);
  auto doc = wall_to_json(w);
  const auto loaded = witness_from_json(doc);
  REQUIRE(loaded.kind == WitnessKind::kWall);
  CHECK(loaded.wall->p == w.p);
  CHECK(wall_to_json(*loaded.wall) == doc);

  const auto path = std::filesystem::temp_directory_path() / "epcx_wall_io.json";
  write_json_file(path, doc);
  CHECK(load_witness(path).wall->alpha == w.alpha);
  std::filesystem::remove(path);

  auto bad = doc;
  bad["version"] = 99;
  CHECK_THROWS_AS(witness_from_json(bad), InvalidArgument);
  bad = doc;
  bad["format"] = "something-else";
  CHECK_THROWS_AS(witness_from_json(bad), InvalidArgument);
}

TEST_CASE("tampered gadget graph is rejected") {
  const auto w = construct::construct_gadget_witness(lset::IntSet::squares(), 1, 1, 1000, 1000);
  auto doc = gadget_to_json(w);
  doc["parameters"]["x"] = 120;
  CHECK_THROWS(witness_from_json(doc));
}

TEST_CASE("edge lists") {
  const auto k4 = read_edge_list(data("k4.txt"));
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  const auto tt = read_edge_list(data("two_triangles.txt"));
  CHECK(tt.vertex_count() == 6);
  CHECK(tt.edge(3).u == 3);

  std::istringstream in("# header\n1 2 5   # trailing comment\n2 3 7\n");
  const auto g = parse_edge_list(in, "inline");
  CHECK(g.edge(0).weight == 5);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("edge list errors carry line numbers") {
  auto expect_line = [](const char* file, std::size_t line) {
    try {
      read_edge_list(data(file));
      FAIL("expected a parse error for " << file);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_line("bad_weight.txt", 2);
  expect_line("bad_vertex.txt", 2);
  expect_line("bad_arity.txt", 1);
  std::istringstream loop("1 1 1\n");
  CHECK_THROWS_AS(parse_edge_list(loop), ParseError);
  CHECK_THROWS_AS(read_edge_list(data("missing.txt")), InvalidArgument);
}

TEST_CASE("DOT output") {
  const auto w = construct::construct_wall_witness(lset::IntSet::squares(), 1);
  const auto dot = to_dot(w.graph, "wall");
  CHECK(dot.rfind("graph \"wall\" {", 0) == 0);
  CHECK(dot.find("color=red") != std::string::npos);
  CHECK(dot.find("label=\"" + w.chords[0].weight.str() + "\"") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == w.graph.edge_count());
}
