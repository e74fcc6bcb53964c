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

#include "epcx/io/witness_io.hpp"

#include <fstream>
#include <sstream>

#include "epcx/lset/set_spec.hpp"

namespace epcx::io {

using construct::GadgetParameters;
using construct::GadgetWitness;
using construct::WallWitness;
using graph::EdgeTag;
using graph::GridLabel;
using graph::WeightedMultigraph;

json bigint_to_json(const BigInt& n) {
  if (n >= 0) {
    if (auto small = to_u64(n)) return *small;
  }
  return n.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw InvalidArgument("expected an integer, got " + j.dump());
}

json set_to_json(const lset::IntSet& set) {
  const auto& bound = set.enumeration_bound();
  return {{"spec", set.spec()}, {"bound", bound ? bigint_to_json(*bound) : json()}};
}

lset::IntSet set_from_json(const json& j) {
  std::optional<BigInt> bound;
  if (j.contains("bound") && !j.at("bound").is_null()) bound = bigint_from_json(j.at("bound"));
  return lset::parse_set_spec(j.at("spec").get<std::string>(), bound);
}

json graph_to_json(const WeightedMultigraph& g) {
  json labels = json::array();
  bool any_label = false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& l = g.label(v);
    if (l) {
      labels.push_back({l->row, l->col});
      any_label = true;
    } else {
      labels.push_back(nullptr);
    }
  }
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({e.u, e.v, bigint_to_json(e.weight), graph::to_string(e.tag.kind),
                     e.tag.variant, e.tag.index});
  }
  json out{{"vertex_count", g.vertex_count()}, {"edges", std::move(edges)}};
  if (any_label) out["labels"] = std::move(labels);
  return out;
}

WeightedMultigraph graph_from_json(const json& j) {
  WeightedMultigraph g;
  const auto n = j.at("vertex_count").get<std::size_t>();
  const json* labels = j.contains("labels") ? &j.at("labels") : nullptr;
  if (labels && labels->size() != n) throw InvalidArgument("graph: label count mismatch");
  for (std::size_t v = 0; v < n; ++v) {
    std::optional<GridLabel> label;
    if (labels && !(*labels)[v].is_null()) {
      label = GridLabel{(*labels)[v].at(0).get<std::uint32_t>(),
                        (*labels)[v].at(1).get<std::uint32_t>()};
    }
    g.add_vertex(label);
  }
  for (const auto& e : j.at("edges")) {
    const auto u = e.at(0).get<VertexId>();
    const auto v = e.at(1).get<VertexId>();
    if (u >= n || v >= n) throw InvalidArgument("graph: edge endpoint out of range");
    EdgeTag tag{graph::edge_kind_from_string(e.at(3).get<std::string>()), e.at(4).get<int>(),
                e.at(5).get<std::uint32_t>()};
    g.add_edge(u, v, bigint_from_json(e.at(2)), tag);
  }
  return g;
}

namespace {

json header(const char* kind, const json& config) {
  return {{"format", kWitnessFormat}, {"version", kFormatVersion}, {"kind", kind},
          {"config", config}};
}

json bigint_array(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(bigint_to_json(v));
  return out;
}

std::vector<BigInt> bigint_vector(const json& j) {
  std::vector<BigInt> out;
  for (const auto& v : j) out.push_back(bigint_from_json(v));
  return out;
}

void require_equal(const json& stored, const json& rebuilt, const std::string& what) {
  if (stored != rebuilt) {
    throw InvalidArgument("witness inconsistent: stored " + what +
                          " differs from the one rebuilt from its parameters");
  }
}

}  // namespace

json gadget_to_json(const GadgetWitness& w, const json& config) {
  const auto& p = w.params;
  const auto window = construct::ell_window(p.t, p.g);
  json doc = header("gadget", config);
  doc["set"] = set_to_json(w.set);
  doc["parameters"] = {{"t", p.t},         {"s", p.s},         {"x", p.x},
                       {"g", p.g},         {"ell", p.ell},     {"x_bound", p.x_bound},
                       {"a_max", p.a_max}, {"undetermined_x", p.undetermined_x}};
  doc["certificates"] = {
      {"ell_window", {window.lo, window.hi}},
      {"g_threshold", bigint_to_json(16 * BigInt(p.t) * p.t * p.s * p.s)},
      {"theta_lengths", {bigint_to_json(2 * BigInt(p.x) - 1), bigint_to_json(2 * BigInt(p.x)),
                         bigint_to_json(2 * BigInt(p.x) + 1)}}};
  doc["grid"] = graph_to_json(w.grid);
  doc["graph"] = graph_to_json(w.graph);
  return doc;
}

json wall_to_json(const WallWitness& w, const json& config) {
  json doc = header("wall", config);
  doc["set"] = set_to_json(w.set);
  doc["ell"] = w.ell;
  doc["weight_source"] = construct::to_string(w.source);
  doc["scale"] = bigint_to_json(w.scale);
  doc["weights"] = bigint_array(w.weights);
  doc["alpha"] = bigint_to_json(w.alpha);
  doc["paths"] = w.paths;
  doc["path_weights"] = bigint_array(w.path_weights);
  doc["p"] = bigint_array(w.p);
  json chords = json::array();
  for (const auto& c : w.chords) {
    chords.push_back({{"index", c.index},
                      {"a", c.a},
                      {"b", c.b},
                      {"weight", bigint_to_json(c.weight)},
                      {"edge", c.edge}});
  }
  doc["chords"] = std::move(chords);
  doc["graph"] = graph_to_json(w.graph);
  return doc;
}

LoadedWitness witness_from_json(const json& doc) {
  if (doc.value("format", "") != kWitnessFormat) {
    throw InvalidArgument("not an epcx witness document");
  }
  const int version = doc.value("version", 0);
  if (version != kFormatVersion) {
    throw InvalidArgument("unsupported witness version " + std::to_string(version));
  }
  LoadedWitness out;
  out.config = doc.value("config", json());
  const auto set = set_from_json(doc.at("set"));
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "gadget") {
    const auto& pj = doc.at("parameters");
    GadgetParameters p;
    p.t = pj.at("t").get<std::uint64_t>();
    p.s = pj.at("s").get<std::uint64_t>();
    p.x = pj.at("x").get<std::uint64_t>();
    p.g = pj.at("g").get<std::uint64_t>();
    p.ell = pj.at("ell").get<std::uint64_t>();
    p.x_bound = pj.value("x_bound", std::uint64_t{0});
    p.a_max = pj.value("a_max", std::uint64_t{0});
    p.undetermined_x = pj.value("undetermined_x", std::uint64_t{0});
    GadgetWitness w = construct::assemble_gadget_witness(set, p);
    if (doc.contains("grid")) require_equal(doc.at("grid"), graph_to_json(w.grid), "grid");
    if (doc.contains("graph")) require_equal(doc.at("graph"), graph_to_json(w.graph), "graph");
    out.kind = WitnessKind::kGadget;
    out.gadget = std::move(w);
  } else if (kind == "wall") {
    const auto source = construct::weight_source_from_string(doc.at("weight_source").get<std::string>());
    WallWitness w = construct::assemble_wall_witness(
        set, doc.at("ell").get<std::size_t>(), source, bigint_from_json(doc.at("scale")),
        bigint_vector(doc.at("weights")), bigint_vector(doc.at("p")));
    const json rebuilt = wall_to_json(w);
    for (const char* key : {"alpha", "paths", "path_weights", "chords", "graph"}) {
      if (doc.contains(key)) require_equal(doc.at(key), rebuilt.at(key), key);
    }
    out.kind = WitnessKind::kWall;
    out.wall = std::move(w);
  } else {
    throw InvalidArgument("unknown witness kind '" + kind + "'");
  }
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string(), 0, e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << doc.dump(1) << "\n";
}

LoadedWitness load_witness(const std::filesystem::path& path) {
  return witness_from_json(read_json_file(path));
}

WeightedMultigraph parse_edge_list(std::istream& in, const std::string& source) {
  struct Triple {
    std::uint64_t u, v;
    BigInt w;
  };
  std::vector<Triple> triples;
  std::uint64_t max_vertex = 0;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw ParseError(source, number, "expected 'u v w', got " + std::to_string(tokens.size()) +
                                           " fields");
    }
    Triple t;
    try {
      const BigInt u = parse_bigint(tokens[0]);
      const BigInt v = parse_bigint(tokens[1]);
      t.w = parse_bigint(tokens[2]);
      if (u < 1 || v < 1) throw InvalidArgument("vertices are numbered from 1");
      if (u > 10'000'000 || v > 10'000'000) throw InvalidArgument("vertex id too large");
      if (u == v) throw InvalidArgument("self-loop");
      if (t.w < 1) throw InvalidArgument("weights must be positive");
      t.u = static_cast<std::uint64_t>(u);
      t.v = static_cast<std::uint64_t>(v);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(source, number, e.what());
    }
    max_vertex = std::max({max_vertex, t.u, t.v});
    triples.push_back(std::move(t));
  }
  WeightedMultigraph g;
  for (std::uint64_t v = 0; v < max_vertex; ++v) g.add_vertex();
  for (auto& t : triples) {
    g.add_edge(static_cast<VertexId>(t.u - 1), static_cast<VertexId>(t.v - 1), t.w);
  }
  return g;
}

WeightedMultigraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  return parse_edge_list(in, path.string());
}

std::string to_dot(const WeightedMultigraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n  node [shape=point];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& l = g.label(v);
    if (!l) continue;
    out << "  " << v << " [shape=circle, width=0.2, label=\"" << l->row << "," << l->col
        << "\", pos=\"" << l->col << "," << -static_cast<long>(l->row) << "!\"];\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    std::vector<std::string> attrs;
    if (e.weight != 1 || e.tag.kind == graph::EdgeKind::kChord) {
      attrs.push_back("label=\"" + e.weight.str() + "\"");
    }
    if (e.tag.kind == graph::EdgeKind::kChord) {
      attrs.push_back("color=red");
      attrs.push_back("penwidth=2.5");
      attrs.push_back("xlabel=\"e" + std::to_string(e.tag.index) + "\"");
    }
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace epcx::io
