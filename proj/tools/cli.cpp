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

#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "epcx/construct/gadget.hpp"
#include "epcx/construct/wall.hpp"
#include "epcx/io/witness_io.hpp"
#include "epcx/lset/searches.hpp"
#include "epcx/lset/set_spec.hpp"
#include "epcx/verify/gadget_checks.hpp"
#include "epcx/verify/probe.hpp"
#include "epcx/verify/wall_checks.hpp"

namespace epcx::cli {

using nlohmann::json;

json RunConfig::to_json() const {
  json j{{"subcommand", subcommand}, {"format_version", io::kFormatVersion}};
  auto put = [&](const char* key, auto value) { j[key] = value; };
  if (!set_spec.empty()) put("set", set_spec);
  if (!bound.empty()) put("bound", bound);
  if (!input.empty()) put("input", input);
  if (!output.empty()) put("output", output);
  if (subcommand == "construct-gadget") {
    put("t", t);
    put("s", s);
    put("x_bound", x_bound);
    put("a_max", a_max);
  } else if (subcommand == "construct-wall") {
    put("ell", ell);
    put("probe_budget", probe_budget);
    put("weights", weights);
    put("greedy_bit_cap", greedy_bit_cap);
    put("scale_bound", scale_bound);
  } else if (subcommand == "verify") {
    put("mode", mode);
    put("jobs", jobs);
    put("cycle_cap", cycle_cap);
    put("path_cap", path_cap);
    put("case_cap", case_cap);
  } else if (subcommand == "probe") {
    put("k", k);
    put("t", t);
    put("cycle_cap", cycle_cap);
  } else if (subcommand == "density") {
    put("n", n);
    put("gap_lengths", gap_lengths);
  } else if (subcommand == "export") {
    put("format", format);
  }
  return j;
}

namespace {

std::optional<BigInt> parse_bound(const std::string& text) {
  if (text.empty()) return std::nullopt;
  BigInt b = parse_bigint(text);
  if (b < 1) throw InvalidArgument("--bound must be positive");
  return b;
}

lset::IntSet config_set(const RunConfig& c) {
  if (c.set_spec.empty()) throw InvalidArgument("--set is required");
  return lset::parse_set_spec(c.set_spec, parse_bound(c.bound));
}

void emit_json(const RunConfig& c, const json& doc, std::ostream& out) {
  if (c.output.empty() || c.output == "-") {
    out << doc.dump(1) << "\n";
  } else {
    io::write_json_file(c.output, doc);
  }
}

verify::VerifyOptions verify_options(const RunConfig& c) {
  verify::VerifyOptions o;
  o.mode = verify::verify_mode_from_string(c.mode);
  o.jobs = c.jobs;
  o.cycle_cap = c.cycle_cap;
  o.path_cap = c.path_cap;
  o.case_cap = c.case_cap;
  return o;
}

int construct_gadget(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto set = config_set(c);
  const auto w = construct::construct_gadget_witness(set, c.t, c.s, c.x_bound, c.a_max);
  const auto& p = w.params;
  err << "gadget: x=" << p.x << " g=" << p.g << " ell=" << p.ell << " ("
      << w.graph.vertex_count() << " vertices, " << w.graph.edge_count() << " edges";
  if (p.undetermined_x) err << ", " << p.undetermined_x << " smaller x had g > a_max";
  err << ")\n";
  emit_json(c, io::gadget_to_json(w, c.to_json()), out);
  return kExitPass;
}

int construct_wall(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto set = config_set(c);
  construct::WallOptions o;
  o.probe_budget = c.probe_budget;
  o.source = construct::weight_source_from_string(c.weights);
  o.greedy_bit_cap = c.greedy_bit_cap;
  o.scale_bound = c.scale_bound;
  const auto w = construct::construct_wall_witness(set, c.ell, o);
  err << "wall: ell=" << w.ell << " weights=" << construct::to_string(w.source);
  if (w.scale != 0) err << " (scale " << w.scale << ")";
  err << " alpha=" << w.alpha << " p=[";
  for (std::size_t i = 0; i < w.p.size(); ++i) err << (i ? ", " : "") << w.p[i];
  err << "]\n";
  emit_json(c, io::wall_to_json(w, c.to_json()), out);
  return kExitPass;
}

int verify_witness(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto loaded = io::load_witness(c.input);
  const auto options = verify_options(c);
  const auto report = loaded.kind == io::WitnessKind::kGadget
                          ? verify::verify_gadget(*loaded.gadget, options)
                          : verify::verify_wall(*loaded.wall, options);
  if (c.format == "json") {
    out << report.to_json().dump(1) << "\n";
  } else {
    out << report.to_text();
  }
  if (!c.output.empty()) {
    json doc{{"format", io::kReportFormat},
             {"version", io::kFormatVersion},
             {"config", c.to_json()},
             {"witness_config", loaded.config},
             {"report", report.to_json()}};
    io::write_json_file(c.output, doc);
  }
  (void)err;
  return report.passed() ? kExitPass : kExitVerificationFailed;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int probe(const RunConfig& c, std::ostream& out, std::ostream& err) {
  graph::WeightedMultigraph g;
  std::optional<lset::IntSet> set;
  if (ends_with(c.input, ".json")) {
    auto loaded = io::load_witness(c.input);
    if (loaded.kind == io::WitnessKind::kGadget) {
      g = loaded.gadget->graph;
      set = loaded.gadget->set;
    } else {
      g = loaded.wall->graph;
      set = loaded.wall->set;
    }
  } else {
    g = io::read_edge_list(c.input);
  }
  if (!c.set_spec.empty()) set = config_set(c);
  if (!set) throw InvalidArgument("--set is required for edge-list input");
  verify::ProbeOptions o;
  o.cycle_cap = c.cycle_cap;
  const auto r = verify::probe_erdos_posa(g, *set, c.k, c.t, o);
  json cycles = json::array();
  for (const auto& cyc : r.l_cycles) {
    json vs = json::array();
    for (auto v : cyc.vertices) vs.push_back(v + 1);
    cycles.push_back({{"vertices", vs}, {"weight", io::bigint_to_json(cyc.weight)}});
  }
  json hitting = json::array();
  for (auto v : r.hitting_set) hitting.push_back(v + 1);
  json doc{{"format", "epcx-probe"},
           {"version", io::kFormatVersion},
           {"config", c.to_json()},
           {"l_cycles", cycles},
           {"packing", {{"value", r.packing}, {"cycles", r.packing_cycles}, {"exact", r.packing_exact}}},
           {"hitting_set", {{"size", r.hitting}, {"vertices", hitting}, {"exact", r.hitting_exact}}}};
  out << "L-cycles: " << r.l_cycles.size() << "\n"
      << "packing (k=" << c.k << ", t=" << c.t << "): " << r.packing
      << (r.packing_exact ? "" : " (search capped, lower bound)") << "\n"
      << "hitting set: " << r.hitting << (r.hitting_exact ? "" : " (search capped, upper bound)")
      << " {";
  for (std::size_t i = 0; i < r.hitting_set.size(); ++i) out << (i ? ", " : "") << r.hitting_set[i] + 1;
  out << "}\n";
  if (!c.output.empty()) io::write_json_file(c.output, doc);
  (void)err;
  return kExitPass;
}

int export_dot(const RunConfig& c, std::ostream& out, std::ostream&) {
  const auto loaded = io::load_witness(c.input);
  const graph::WeightedMultigraph* g = nullptr;
  std::string name;
  if (loaded.kind == io::WitnessKind::kGadget) {
    g = c.format == "grid" ? &loaded.gadget->grid : &loaded.gadget->graph;
    name = "gadget";
  } else {
    g = c.format == "grid" ? &loaded.wall->grid : &loaded.wall->graph;
    name = "wall";
  }
  const std::string dot = "// " + c.to_json().dump() + "\n" + io::to_dot(*g, name);
  if (c.output.empty() || c.output == "-") {
    out << dot;
  } else {
    std::ofstream f(c.output);
    if (!f) throw InvalidArgument("cannot write " + c.output);
    f << dot;
  }
  return kExitPass;
}

int density(const RunConfig& c, std::ostream& out, std::ostream&) {
  const auto set = config_set(c);
  std::vector<std::uint64_t> checkpoints;
  for (std::uint64_t p = 10; p < c.n; p *= 10) checkpoints.push_back(p);
  checkpoints.push_back(c.n);
  json rows = json::array();
  out << std::setw(14) << "n" << std::setw(14) << "count" << "  ratio\n";
  for (auto n : checkpoints) {
    const auto d = lset::lower_density_prefix(set, n);
    const double approx = static_cast<double>(d.count) / static_cast<double>(d.n);
    out << std::setw(14) << d.n << std::setw(14) << d.count << "  " << d.ratio << " ~ "
        << std::setprecision(6) << approx << "\n";
    rows.push_back({{"n", d.n}, {"count", d.count}, {"ratio", d.ratio.str()}});
  }
  json gaps = json::array();
  for (auto len : c.gap_lengths) {
    const auto y = lset::gap_witness(set, len, c.n);
    out << "gap of length " << len << ": " << (y ? "starts at " + y->str() : "none below " + std::to_string(c.n)) << "\n";
    gaps.push_back({{"length", len}, {"start", y ? io::bigint_to_json(*y) : json()}});
  }
  if (!c.output.empty()) {
    io::write_json_file(c.output, {{"format", "epcx-density"},
                                   {"version", io::kFormatVersion},
                                   {"config", c.to_json()},
                                   {"prefix", rows},
                                   {"gaps", gaps}});
  }
  return kExitPass;
}

}  // namespace

int run_config(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.subcommand == "construct-gadget") return construct_gadget(c, out, err);
  if (c.subcommand == "construct-wall") return construct_wall(c, out, err);
  if (c.subcommand == "verify") return verify_witness(c, out, err);
  if (c.subcommand == "probe") return probe(c, out, err);
  if (c.subcommand == "export") return export_dot(c, out, err);
  if (c.subcommand == "density") return density(c, out, err);
  throw InvalidArgument("unknown subcommand '" + c.subcommand + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Counterexample graphs for the Erdos-Posa property of L-cycles"};
  app.require_subcommand(1);
  auto add_set = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--set", c.set_spec,
                                "set spec: primes | squares | powers:<b> | factorials | "
                                "arith:<a>,<m> | explicit:<n1>,... | file:<path> | perturb:<spec>");
    if (required) opt->required();
    sub->add_option("--bound", c.bound, "largest integer the set may be asked about");
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", c.output, "output path"); };
  auto positive = CLI::PositiveNumber;

  auto* gadget = app.add_subcommand("construct-gadget", "build a theta-gadget witness");
  add_set(gadget, true);
  gadget->add_option("--t", c.t, "fractionality t")->check(positive);
  gadget->add_option("--s", c.s, "deletion budget s")->check(positive);
  gadget->add_option("--x-bound", c.x_bound, "largest x tried")->check(positive);
  gadget->add_option("--a-max", c.a_max, "largest a scanned for g(x)")->check(positive);
  add_output(gadget);

  auto* wall = app.add_subcommand("construct-wall", "build a weighted wall witness");
  add_set(wall, true);
  wall->add_option("--ell", c.ell, "wall size ell")->check(positive);
  wall->add_option("--probe-budget", c.probe_budget, "member steps per growth search")
      ->check(positive);
  wall->add_option("--weights", c.weights, "edge weight source")
      ->check(CLI::IsMember({"auto", "greedy", "scaled-block"}));
  wall->add_option("--greedy-bit-cap", c.greedy_bit_cap, "largest greedy weight, in bits")
      ->check(positive);
  wall->add_option("--scale-bound", c.scale_bound, "largest block scale tried")->check(positive);
  add_output(wall);

  auto* ver = app.add_subcommand("verify", "verify a witness file");
  ver->add_option("witness", c.input, "witness JSON")->required()->check(CLI::ExistingFile);
  ver->add_option("--mode", c.mode, "exhaustive | certificate")
      ->check(CLI::IsMember({"exhaustive", "certificate"}));
  ver->add_option("--jobs", c.jobs, "worker threads (0: all cores)");
  ver->add_option("--cycle-cap", c.cycle_cap, "cycle enumeration cap")->check(positive);
  ver->add_option("--path-cap", c.path_cap, "disjoint-path search cap")->check(positive);
  ver->add_option("--case-cap", c.case_cap, "deletion case cap")->check(positive);
  ver->add_option("--format", c.format, "stdout format")->check(CLI::IsMember({"text", "json"}));
  add_output(ver);

  auto* prb = app.add_subcommand("probe", "exact packing and hitting numbers of L-cycles");
  prb->add_option("graph", c.input, "edge list (u v w per line) or witness JSON")
      ->required()
      ->check(CLI::ExistingFile);
  add_set(prb, false);
  prb->add_option("--k", c.k, "packing target k")->check(positive);
  prb->add_option("--t", c.t, "load per vertex t")->check(positive);
  prb->add_option("--cycle-cap", c.cycle_cap, "cycle enumeration cap")->check(positive);
  add_output(prb);

  auto* exp = app.add_subcommand("export", "write a witness graph as DOT");
  exp->add_option("witness", c.input, "witness JSON")->required()->check(CLI::ExistingFile);
  c.format = "text";
  exp->add_option("--graph", c.format, "graph | grid")->check(CLI::IsMember({"graph", "grid"}));
  add_output(exp);

  auto* den = app.add_subcommand("density", "prefix densities and gap witnesses");
  add_set(den, true);
  den->add_option("--n", c.n, "largest prefix")->check(positive);
  den->add_option("--gap", c.gap_lengths, "gap lengths to locate below n");
  add_output(den);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  if (c.subcommand == "export" && c.format == "text") c.format = "graph";
  try {
    return run_config(c, out, err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundExhausted& e) {
    err << "bound exhausted: " << e.what() << "\n";
    return kExitBoundExhausted;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitBoundExhausted;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace epcx::cli
