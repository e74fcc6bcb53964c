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

#include "epcx/verify/gadget_checks.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "epcx/construct/grid.hpp"
#include "epcx/graph/traversal.hpp"
#include "epcx/util/parallel.hpp"
#include "check_helpers.hpp"

namespace epcx::verify {

using construct::GadgetWitness;
using graph::WeightedMultigraph;
using nlohmann::json;

std::string to_string(VerifyMode mode) {
  return mode == VerifyMode::kExhaustive ? "exhaustive" : "certificate";
}

VerifyMode verify_mode_from_string(const std::string& text) {
  if (text == "exhaustive") return VerifyMode::kExhaustive;
  if (text == "certificate") return VerifyMode::kCertificate;
  throw InvalidArgument("unknown verification mode '" + text + "' (exhaustive | certificate)");
}

std::vector<bool> attainable_offsets(std::span<const std::uint8_t> variant_masks) {
  const std::size_t a = variant_masks.size();
  std::vector<bool> reach(2 * a + 1, false);
  // Sums over the first k edges, shifted by a.
  reach[a] = true;
  std::vector<bool> next(reach.size());
  for (std::uint8_t mask : variant_masks) {
    std::fill(next.begin(), next.end(), false);
    for (std::size_t j = 0; j < reach.size(); ++j) {
      if (!reach[j]) continue;
      if ((mask & 1) && j >= 1) next[j - 1] = true;
      if (mask & 2) next[j] = true;
      if ((mask & 4) && j + 1 < next.size()) next[j + 1] = true;
    }
    reach.swap(next);
  }
  return reach;
}

bool lift_meets_l(const lset::IntSet& set, std::uint64_t a, std::uint64_t x,
                  const std::vector<bool>& offsets) {
  const BigInt centre = BigInt(a) * x;
  const BigInt lo = centre - a;
  const BigInt hi = centre + a;
  auto m = set.next_member(lo);
  while (m && *m <= hi) {
    const auto j = static_cast<std::size_t>(*m - lo);
    if (j < offsets.size() && offsets[j]) return true;
    m = set.next_member(*m + 1);
  }
  return false;
}

bool lift_meets_l(const lset::IntSet& set, std::uint64_t a, std::uint64_t x) {
  const BigInt centre = BigInt(a) * x;
  auto m = set.next_member(centre - a);
  return m && *m <= centre + a;
}

namespace {

std::uint64_t checked_pow3(std::uint64_t a) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < a; ++i) {
    if (v > UINT64_MAX / 3) throw CapExceeded("3^a overflows 64 bits", 0);
    v *= 3;
  }
  return v;
}

}  // namespace

GadgetCensus classify_gadget_cycles(const GadgetWitness& witness, const VerifyOptions& options) {
  const WeightedMultigraph& grid = witness.grid;
  const std::uint64_t x = witness.params.x;
  const std::size_t n = grid.vertex_count();
  const std::size_t m = grid.edge_count();

  std::vector<char> lifts(n + 1, 0);
  for (std::uint64_t a = 2; a <= n; ++a) lifts[a] = lift_meets_l(witness.set, a, x) ? 1 : 0;

  struct Partial {
    std::map<std::uint64_t, std::uint64_t> lengths;
    std::map<std::uint64_t, std::uint64_t> l_lengths;
    std::uint64_t below_g = 0;
    std::vector<std::vector<VertexId>> examples;
    BitFamily vertices;
    BitFamily edges;
  };
  std::vector<Partial> parts(n);
  std::atomic<std::uint64_t> total{0};
  util::parallel_for(n, options.jobs, [&](std::size_t start) {
    Partial& part = parts[start];
    part.vertices = BitFamily(n);
    part.edges = BitFamily(m);
    graph::CycleSearchOptions search;
    search.start_begin = static_cast<VertexId>(start);
    search.start_end = static_cast<VertexId>(start + 1);
    graph::for_each_simple_cycle(
        grid,
        [&](std::span<const VertexId> vs, std::span<const EdgeId> es) {
          if (++total > options.cycle_cap) {
            throw CapExceeded("grid cycle cap of " + std::to_string(options.cycle_cap) +
                                  " exceeded",
                              options.cycle_cap);
          }
          const std::uint64_t a = es.size();
          ++part.lengths[a];
          if (!lifts[a]) return true;
          ++part.l_lengths[a];
          if (a < witness.params.g) {
            ++part.below_g;
            if (part.examples.size() < 3) part.examples.emplace_back(vs.begin(), vs.end());
          }
          part.vertices.add(vs);
          part.edges.add(es);
          return true;
        },
        search);
  });

  GadgetCensus census;
  census.class_vertices = BitFamily(n);
  census.class_edges = BitFamily(m);
  for (auto& part : parts) {
    for (auto [a, c] : part.lengths) {
      census.length_histogram[a] += c;
      census.grid_cycles += c;
    }
    for (auto [a, c] : part.l_lengths) census.l_length_histogram[a] += c;
    census.l_classes_below_g += part.below_g;
    for (auto& ex : part.examples) {
      if (census.below_g_examples.size() < 3) census.below_g_examples.push_back(std::move(ex));
    }
    census.class_vertices.append(part.vertices);
    census.class_edges.append(part.edges);
  }
  if (!census.l_length_histogram.empty()) {
    census.min_l_length = census.l_length_histogram.begin()->first;
  }
  census.theta_cycles = 3 * m;
  for (std::int64_t b = -1; b <= 1; ++b) {
    if (witness.set.contains(BigInt(2 * x) + b)) census.theta_in_l += m;
  }
  return census;
}

StructureCheck check_cycle_structure(std::size_t ell, std::uint64_t x, std::uint64_t cycle_cap) {
  StructureCheck out;
  out.ell = ell;
  out.x = x;
  const WeightedMultigraph grid = construct::build_grid(ell);
  const WeightedMultigraph g = construct::build_theta_gadget_graph(ell, x);
  const std::size_t m = grid.edge_count();

  out.expected = 3 * m;
  graph::for_each_simple_cycle(grid, [&](std::span<const VertexId>, std::span<const EdgeId> es) {
    out.expected += checked_pow3(es.size());
    return true;
  });
  if (out.expected > cycle_cap) {
    throw CapExceeded("replica has " + std::to_string(out.expected) + " cycles", 0);
  }

  std::vector<std::uint64_t> used(3 * m, 0);
  std::vector<std::size_t> touched;
  std::vector<std::uint32_t> degree(grid.vertex_count(), 0);
  graph::for_each_simple_cycle(g, [&](std::span<const VertexId>, std::span<const EdgeId> es) {
    ++out.cycles;
    touched.clear();
    for (EdgeId e : es) {
      const auto& tag = g.edge(e).tag;
      const std::size_t key = tag.index * 3 + static_cast<std::size_t>(tag.variant + 1);
      if (used[key]++ == 0) touched.push_back(key);
    }
    auto full_chain = [&](std::size_t key) {
      return used[key] == x + static_cast<std::uint64_t>(key % 3) - 1;
    };
    bool classified = false;
    if (touched.size() == 2 && touched[0] / 3 == touched[1] / 3 && full_chain(touched[0]) &&
        full_chain(touched[1])) {
      ++out.theta;
      classified = true;
    } else {
      bool lift = true;
      std::vector<std::size_t> hosts;
      std::int64_t offset = 0;
      for (std::size_t key : touched) {
        if (!full_chain(key)) lift = false;
        hosts.push_back(key / 3);
        offset += static_cast<std::int64_t>(key % 3) - 1;
      }
      std::sort(hosts.begin(), hosts.end());
      if (std::adjacent_find(hosts.begin(), hosts.end()) != hosts.end()) lift = false;
      if (lift) {
        for (std::size_t h : hosts) {
          ++degree[grid.edge(static_cast<EdgeId>(h)).u];
          ++degree[grid.edge(static_cast<EdgeId>(h)).v];
        }
        for (std::size_t h : hosts) {
          for (VertexId v : {grid.edge(static_cast<EdgeId>(h)).u, grid.edge(static_cast<EdgeId>(h)).v}) {
            if (degree[v] != 2) lift = false;
          }
        }
        for (std::size_t h : hosts) {
          degree[grid.edge(static_cast<EdgeId>(h)).u] = 0;
          degree[grid.edge(static_cast<EdgeId>(h)).v] = 0;
        }
      }
      if (lift) {
        ++out.lifts;
        classified = true;
        const auto a = static_cast<std::int64_t>(hosts.size());
        const auto len = static_cast<std::int64_t>(es.size());
        if (len != a * static_cast<std::int64_t>(x) + offset || offset < -a || offset > a) {
          ++out.bad_lengths;
        }
      }
    }
    if (!classified) ++out.unclassified;
    for (std::size_t key : touched) used[key] = 0;
    return true;
  });
  return out;
}

bool intersection_certificate(const BitFamily& family, std::size_t t) {
  if (t == 0) throw InvalidArgument("intersection: t must be positive");
  if (family.size() == 0) return true;
  std::uint32_t min_size = UINT32_MAX;
  for (std::size_t i = 0; i < family.size(); ++i) min_size = std::min(min_size, family.row_size(i));
  return BigInt(t) * min_size > BigInt(t - 1) * family.universe();
}

IntersectionResult check_common_intersection(const BitFamily& family, std::size_t t,
                                             std::uint64_t subset_cap) {
  if (t == 0) throw InvalidArgument("intersection: t must be positive");
  IntersectionResult result;
  result.certificate_applies = intersection_certificate(family, t);
  const std::size_t count = family.size();
  const std::size_t words = family.words();
  const std::uint64_t budget = static_cast<std::uint64_t>(t - 1) * family.universe();

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return family.row_size(a) < family.row_size(b);
  });

  std::vector<std::vector<std::uint64_t>> running(t + 1, std::vector<std::uint64_t>(words));
  std::fill(running[0].begin(), running[0].end(), ~std::uint64_t{0});
  std::vector<std::size_t> chosen;

  // Returns true once a violating t-set is found.
  auto dfs = [&](auto&& self, std::size_t depth, std::size_t start, std::uint64_t sum) -> bool {
    const std::size_t remaining = t - depth;
    for (std::size_t j = start; j + remaining <= count; ++j) {
      const std::uint64_t size = family.row_size(order[j]);
      if (sum + size * remaining > budget) break;
      if (++result.subsets_examined > subset_cap) {
        throw CapExceeded("intersection search cap of " + std::to_string(subset_cap) +
                              " exceeded",
                          subset_cap);
      }
      auto row = family.row(order[j]);
      bool empty = true;
      for (std::size_t w = 0; w < words; ++w) {
        running[depth + 1][w] = running[depth][w] & row[w];
        if (running[depth + 1][w]) empty = false;
      }
      chosen.push_back(order[j]);
      if (remaining == 1 ? empty : self(self, depth + 1, j + 1, sum + size)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (t == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      ++result.subsets_examined;
      if (family.row_size(i) == 0) {
        result.passed = false;
        result.violation = {i};
        break;
      }
    }
  } else if (dfs(dfs, 0, 0, 0)) {
    result.passed = false;
    result.violation = chosen;
    std::sort(result.violation.begin(), result.violation.end());
  }
  result.exhaustive = true;
  return result;
}

namespace {

bool binomial_sum_exceeds(std::uint64_t n, std::size_t s, std::uint64_t cap, std::uint64_t& total) {
  BigInt sum = 0;
  BigInt term = 1;
  for (std::size_t k = 0; k <= s && k <= n; ++k) {
    if (k > 0) term = term * (n - k + 1) / k;
    sum += term;
    if (sum > cap) return true;
  }
  total = static_cast<std::uint64_t>(sum);
  return false;
}

// Lexicographic subsets of [0, n) of size at most s.
std::vector<std::vector<std::uint32_t>> small_subsets(std::uint32_t n, std::size_t s) {
  std::vector<std::vector<std::uint32_t>> out{{}};
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t from) -> void {
    if (cur.size() == s) return;
    for (std::uint32_t i = from; i < n; ++i) {
      cur.push_back(i);
      out.push_back(cur);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool case_survives(const GadgetWitness& w, const GadgetCensus& census, const DeletionCase& dc) {
  const std::size_t n = w.grid.vertex_count();
  const std::size_t m = w.grid.edge_count();
  std::vector<std::uint64_t> deleted((n + 63) / 64, 0);
  for (VertexId v : dc.vertices) deleted[v >> 6] |= std::uint64_t{1} << (v & 63);
  std::vector<std::uint64_t> restricted((m + 63) / 64, 0);
  std::vector<std::uint8_t> mask(m, 7);
  for (auto [e, variant] : dc.variants) {
    restricted[e >> 6] |= std::uint64_t{1} << (e & 63);
    mask[e] &= static_cast<std::uint8_t>(~(1u << (variant + 1)));
  }
  std::vector<std::uint8_t> masks;
  for (std::size_t i = 0; i < census.class_vertices.size(); ++i) {
    if (census.class_vertices.row_intersects(i, deleted)) continue;
    if (!census.class_edges.row_intersects(i, restricted)) return true;
    masks.clear();
    for (auto e : census.class_edges.members(i)) masks.push_back(mask[e]);
    if (std::find(masks.begin(), masks.end(), 0) != masks.end()) continue;
    if (lift_meets_l(w.set, masks.size(), w.params.x, attainable_offsets(masks))) return true;
  }
  return false;
}

}  // namespace

DeletionResult check_deletion_survival(const GadgetWitness& witness, const GadgetCensus& census,
                                       std::size_t s, const VerifyOptions& options) {
  const std::uint32_t n = static_cast<std::uint32_t>(witness.grid.vertex_count());
  const std::uint32_t items = n + 3 * static_cast<std::uint32_t>(witness.grid.edge_count());
  std::uint64_t total = 0;
  if (binomial_sum_exceeds(items, s, options.case_cap, total)) {
    throw CapExceeded("more than " + std::to_string(options.case_cap) + " deletion cases", 0);
  }
  const auto subsets = small_subsets(items, s);
  std::vector<DeletionCase> cases(subsets.size());
  for (std::size_t c = 0; c < subsets.size(); ++c) {
    for (std::uint32_t item : subsets[c]) {
      if (item < n) {
        cases[c].vertices.push_back(item);
      } else {
        const std::uint32_t k = item - n;
        cases[c].variants.emplace_back(k / 3, static_cast<int>(k % 3) - 1);
      }
    }
  }
  std::vector<char> ok(cases.size(), 0);
  util::parallel_for(cases.size(), options.jobs,
                     [&](std::size_t c) { ok[c] = case_survives(witness, census, cases[c]); });
  DeletionResult result;
  result.cases = cases.size();
  for (std::size_t c = 0; c < cases.size(); ++c) {
    if (ok[c]) continue;
    ++result.failing;
    if (!result.counterexample) result.counterexample = cases[c];
  }
  result.passed = result.failing == 0;
  return result;
}

std::optional<std::uint64_t> scalar_certificate_failure(std::uint64_t t_max) {
  using boost::multiprecision::cpp_rational;
  for (std::uint64_t t = 1; t <= t_max; ++t) {
    const cpp_rational lhs(BigInt(2 * t), BigInt(2 * t - 1));
    const cpp_rational root(BigInt(4 * t + 1), BigInt(4 * t));
    if (lhs < root * root) return t;
  }
  return std::nullopt;
}

using detail::fail;
using detail::labels;
using detail::pass;
using detail::skipped;
using detail::verdict;

VerificationReport verify_gadget(const GadgetWitness& w, const VerifyOptions& options) {
  const auto& p = w.params;
  const BigInt t = p.t, s = p.s, g = p.g, ell = p.ell, x = p.x;
  const std::uint64_t grid_edges = w.grid.edge_count();
  const bool exhaustive = options.mode == VerifyMode::kExhaustive;
  VerificationReport report;
  report.subject = "gadget witness for " + w.set.spec() + " (t=" + std::to_string(p.t) +
                   ", s=" + std::to_string(p.s) + ", x=" + std::to_string(p.x) +
                   ", g=" + std::to_string(p.g) + ", ell=" + std::to_string(p.ell) + ")";

  report.checks.push_back(timed_check("parameters", [&] {
    std::vector<std::string> bad;
    if (!(g > 16 * t * t * s * s)) bad.push_back("g <= 16 t^2 s^2");
    if (ell * ell * (2 * t - 1) < 2 * t * g) bad.push_back("ell^2 below window");
    if (ell * ell * (3 * t - 2) > 3 * t * g) bad.push_back("ell^2 above window");
    if (w.grid.vertex_count() != p.ell * p.ell || grid_edges != 2 * p.ell * (p.ell - 1)) {
      bad.push_back("grid size");
    }
    if (w.graph.vertex_count() != p.ell * p.ell + grid_edges * (3 * p.x - 3) ||
        w.graph.edge_count() != grid_edges * 3 * p.x || !w.graph.has_unit_weights()) {
      bad.push_back("theta graph size");
    }
    std::string detail = bad.empty() ? "g > 16 t^2 s^2, ell in window, graph sizes match" : "";
    for (const auto& b : bad) detail += (detail.empty() ? "" : "; ") + b;
    return verdict(bad.empty(), Evidence::kArithmetic, detail);
  }));

  report.checks.push_back(timed_check("g-recheck", [&] {
    const bool small = p.g <= 3000;
    for (std::uint64_t a = 1; a < p.g; ++a) {
      bool hit = false;
      if (small) {
        for (std::int64_t b = -static_cast<std::int64_t>(a); b <= static_cast<std::int64_t>(a); ++b) {
          if (w.set.contains(BigInt(a) * p.x + b)) hit = true;
        }
      } else {
        hit = lift_meets_l(w.set, a, p.x);
      }
      if (hit) return fail(Evidence::kExhaustive, "a*x+b in L for a = " + std::to_string(a) + " < g");
    }
    if (!lift_meets_l(w.set, p.g, p.x)) {
      return fail(Evidence::kExhaustive, "no member of L in [g x - g, g x + g]");
    }
    return pass(Evidence::kExhaustive, std::string("a*x+b outside L for all a < g, |b| <= a (") +
                                           (small ? "double loop" : "interval scan") +
                                           "); g itself attained");
  }));

  report.checks.push_back(timed_check("theta-cycles", [&] {
    json hits = json::array();
    for (std::int64_t b = -1; b <= 1; ++b) {
      const BigInt len = 2 * x + b;
      if (w.set.contains(len)) hits.push_back(len.str());
    }
    return verdict(hits.empty(), Evidence::kArithmetic,
                   "theta lengths 2x-1, 2x, 2x+1 " +
                       std::string(hits.empty() ? "avoid L" : "meet L"),
                   hits.empty() ? json() : hits);
  }));

  report.checks.push_back(timed_check("cycle-structure", [&] {
    if (!exhaustive) return skipped("certificate mode");
    json replicas = json::array();
    bool ok = true;
    for (auto [re, rx] : {std::pair<std::size_t, std::uint64_t>{2, p.x},
                          std::pair<std::size_t, std::uint64_t>{3, 2}}) {
      const StructureCheck sc = check_cycle_structure(re, rx, options.cycle_cap);
      ok = ok && sc.passed();
      replicas.push_back({{"ell", sc.ell},
                          {"x", sc.x},
                          {"cycles", sc.cycles},
                          {"expected", sc.expected},
                          {"theta", sc.theta},
                          {"lifts", sc.lifts},
                          {"unclassified", sc.unclassified},
                          {"bad_lengths", sc.bad_lengths}});
    }
    return verdict(ok, Evidence::kExhaustive,
                   "every cycle of each replica is a theta cycle or a grid-cycle lift", replicas);
  }));

  std::optional<GadgetCensus> census;
  report.checks.push_back(timed_check("grid-census", [&] {
    if (!exhaustive) return skipped("certificate mode");
    try {
      census = classify_gadget_cycles(w, options);
    } catch (const CapExceeded& e) {
      return skipped(e.what());
    }
    json hist = json::object();
    for (auto [a, c] : census->l_length_histogram) hist[std::to_string(a)] = c;
    json ex = json::array();
    for (const auto& vs : census->below_g_examples) ex.push_back(labels(w.grid, vs));
    const bool ok = census->l_classes_below_g == 0 && census->theta_in_l == 0;
    std::string detail = std::to_string(census->grid_cycles) + " grid cycles, " +
                         std::to_string(census->class_vertices.size()) + " lift into L";
    if (census->min_l_length) {
      detail += ", shortest at grid length " + std::to_string(*census->min_l_length);
    }
    detail += "; " + std::to_string(census->l_classes_below_g) + " below g";
    return verdict(ok, Evidence::kExhaustive, detail,
                   json{{"l_length_histogram", hist}, {"below_g_examples", ex}});
  }));

  report.checks.push_back(timed_check("pigeonhole-certificate", [&] {
    bool ok = t * g > (t - 1) * ell * ell;
    std::string detail = "t g > (t-1) ell^2";
    if (p.t >= 2) {
      // ell^2 <= 3tg/(3t-2) <= tg/(t-1)
      ok = ok && ell * ell * (3 * t - 2) <= 3 * t * g && 3 * (t - 1) <= 3 * t - 2;
      detail += " via ell^2 <= 3tg/(3t-2) <= tg/(t-1)";
    }
    return verdict(ok, Evidence::kCertificate, detail);
  }));

  report.checks.push_back(timed_check("common-intersection", [&] {
    const bool cert = t * g > (t - 1) * ell * ell;
    if (!exhaustive || !census) {
      return verdict(cert, Evidence::kCertificate,
                     "every L-cycle covers at least g of ell^2 grid vertices; t g > (t-1) ell^2");
    }
    IntersectionResult r;
    try {
      r = check_common_intersection(census->class_vertices, p.t, options.subset_cap);
    } catch (const CapExceeded& e) {
      return verdict(cert, Evidence::kCertificate, std::string("exhaustive search aborted: ") +
                                                       e.what() + "; counting certificate only");
    }
    json witness;
    if (!r.passed) {
      witness = json::array();
      for (auto i : r.violation) {
        witness.push_back(labels(w.grid, census->class_vertices.members(i)));
      }
    }
    return verdict(r.passed && cert, Evidence::kExhaustive,
                   "t-subsets of " + std::to_string(census->class_vertices.size()) +
                       " L-classes searched, " + std::to_string(r.subsets_examined) +
                       " examined after the size bound; counting certificate " +
                       (cert ? "holds" : "fails"),
                   witness);
  }));

  report.checks.push_back(timed_check("survival-certificate", [&] {
    const bool ok = ell >= s && (ell - s) * (ell - s) >= g;
    return verdict(ok, Evidence::kCertificate, "(ell - s)^2 >= g");
  }));

  report.checks.push_back(timed_check("scalar-certificate", [&] {
    auto bad = scalar_certificate_failure(10'000);
    return verdict(!bad, Evidence::kCertificate,
                   bad ? "fails at t = " + std::to_string(*bad)
                       : "sqrt(2t/(2t-1)) - 1/(4t) >= 1 for t in [1, 10000] (squared form)");
  }));

  report.checks.push_back(timed_check("deletion-survival", [&] {
    if (!exhaustive || !census) return skipped(exhaustive ? "no census" : "certificate mode");
    DeletionResult r;
    try {
      r = check_deletion_survival(w, *census, p.s, options);
    } catch (const CapExceeded& e) {
      return skipped(e.what());
    }
    json witness;
    if (r.counterexample) {
      json vs = json::array();
      for (auto v : r.counterexample->vertices) vs.push_back(v);
      json var = json::array();
      for (auto [e, b] : r.counterexample->variants) var.push_back({e, b});
      witness = {{"vertices", vs}, {"variants", var}};
    }
    return verdict(r.passed, Evidence::kExhaustive,
                   std::to_string(r.cases) +
                       " reduced cases (grid vertices and single path variants, at most s "
                       "deletions, including none); " +
                       std::to_string(r.failing) + " leave no L-cycle",
                   witness);
  }));
  return report;
}

}  // namespace epcx::verify
