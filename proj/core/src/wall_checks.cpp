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

#include "epcx/verify/wall_checks.hpp"

#include <algorithm>
#include <set>

#include "epcx/construct/grid.hpp"
#include "epcx/graph/traversal.hpp"
#include "epcx/util/parallel.hpp"
#include "check_helpers.hpp"

namespace epcx::verify {

using construct::WallWitness;
using detail::fail;
using detail::labels;
using detail::pass;
using detail::skipped;
using detail::verdict;
using graph::VertexSet;
using graph::WeightedMultigraph;
using nlohmann::json;

DisjointPathsResult two_disjoint_paths(const WeightedMultigraph& g, VertexId a1, VertexId b1,
                                       VertexId a2, VertexId b2, std::uint64_t path_cap) {
  DisjointPathsResult result;
  const std::size_t n = g.vertex_count();
  if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) {
    result.paths_explored = 0;
    return result;  // shared terminal: never disjoint
  }
  VertexSet excluded(n);
  excluded.insert(a2);
  excluded.insert(b2);
  graph::PathSearchOptions options;
  options.excluded = &excluded;
  VertexSet blocked(n);
  options.prune = [&](const VertexSet& used) {
    // `used` holds the excluded terminals too; only the path itself blocks.
    blocked = used;
    blocked.erase(a2);
    blocked.erase(b2);
    return !graph::reachable(g, a2, b2, blocked);
  };
  auto stats = graph::for_each_simple_path(
      g, a1, b1,
      [&](std::span<const VertexId> path) {
        if (result.paths_explored >= path_cap) {
          result.capped = true;
          return false;
        }
        ++result.paths_explored;
        VertexSet on_path(n, path);
        if (!graph::reachable(g, a2, b2, on_path)) return true;
        result.found = true;
        result.first.assign(path.begin(), path.end());
        // Recover a witness a2-b2 path by BFS in the residue.
        std::vector<VertexId> parent(n, static_cast<VertexId>(n));
        std::vector<VertexId> queue{a2};
        parent[a2] = a2;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          for (const auto& inc : g.incident(queue[head])) {
            if (parent[inc.neighbor] != n || on_path.contains(inc.neighbor)) continue;
            parent[inc.neighbor] = queue[head];
            queue.push_back(inc.neighbor);
          }
        }
        for (VertexId v = b2; v != a2; v = parent[v]) result.second.push_back(v);
        result.second.push_back(a2);
        std::reverse(result.second.begin(), result.second.end());
        return false;
      },
      options);
  (void)stats;
  return result;
}

std::optional<std::string> far_from_l_failure(const lset::IntSet& set,
                                              std::span<const BigInt> weights,
                                              std::string* method) {
  auto note = [&](const std::string& m) {
    if (method) *method = m;
  };
  if (weights.empty()) {
    note("empty");
    return std::nullopt;
  }
  std::vector<BigInt> sorted(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end());
  const std::uint64_t n = sorted.size();

  // Scaled block: subset sums are exactly c*k for k in [1, n(n+1)/2].
  const BigInt& c = sorted.front();
  bool block = c >= 1;
  for (std::uint64_t j = 0; j < n && block; ++j) block = sorted[j] == c * (j + 1);
  if (block) {
    note("scaled block c = " + c.str());
    const std::uint64_t m = n * (n + 1) / 2;
    for (std::uint64_t k = 1; k <= m; ++k) {
      if (set.contains(BigInt(c * k))) return "subset sum " + BigInt(c * k).str() + " = c*" + std::to_string(k) + " lies in L";
    }
    return std::nullopt;
  }

  // Interval chain: each element exceeds the sum of the smaller ones and
  // [a_j, a_j + S_{j-1}] is member-free, so every subset sum whose largest
  // term is a_j lands in a gap.
  bool chain = true;
  BigInt prefix = 0;
  for (std::uint64_t j = 0; j < n && chain; ++j) {
    chain = sorted[j] > prefix;
    prefix += sorted[j];
  }
  if (chain) {
    note("interval chain");
    prefix = 0;
    for (const auto& a : sorted) {
      auto m = set.next_member(a);
      if (m && *m <= a + prefix) {
        return "member " + m->str() + " lies in [" + a.str() + ", " + BigInt(a + prefix).str() + "]";
      }
      prefix += a;
    }
    return std::nullopt;
  }

  if (n <= 20) {
    note("all subset sums");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      BigInt sum = 0;
      for (std::uint64_t j = 0; j < n; ++j) {
        if (mask >> j & 1) sum += sorted[j];
      }
      if (set.contains(sum)) return "subset sum " + sum.str() + " lies in L";
    }
    return std::nullopt;
  }
  note("none");
  return "no certificate applies to " + std::to_string(n) + " weights";
}

namespace {

CheckRecord grid_cycles_check(const WallWitness& w, const VerifyOptions& options) {
  std::string method;
  auto cert = far_from_l_failure(w.set, w.weights, &method);
  if (cert) return fail(Evidence::kCertificate, "far-from-L certificate fails: " + *cert);

  const WeightedMultigraph& grid = w.grid;
  auto narrow = grid.weights_u64();
  std::uint64_t cycles = 0;
  bool capped = false;
  std::optional<std::vector<VertexId>> hit;
  if (options.mode == VerifyMode::kExhaustive) {
    graph::for_each_simple_cycle(grid, [&](std::span<const VertexId> vs,
                                           std::span<const EdgeId> es) {
      if (cycles >= options.cycle_cap) {
        capped = true;
        return false;
      }
      ++cycles;
      bool in_l = false;
      if (narrow) {
        unsigned __int128 sum = 0;
        for (EdgeId e : es) sum += (*narrow)[e];
        in_l = sum <= UINT64_MAX ? w.set.contains(static_cast<std::uint64_t>(sum))
                                 : w.set.contains(grid.weight_of(es));
      } else {
        in_l = w.set.contains(grid.weight_of(es));
      }
      if (in_l) {
        hit.emplace(vs.begin(), vs.end());
        return false;
      }
      return true;
    });
  }
  if (hit) {
    return fail(Evidence::kExhaustive, "a cycle of W has its weight in L",
                labels(grid, *hit));
  }
  const std::string base = "nonempty subset sums of A avoid L (" + method + ")";
  if (options.mode != VerifyMode::kExhaustive) return pass(Evidence::kCertificate, base);
  if (capped) {
    return pass(Evidence::kCertificate, base + "; first " + std::to_string(cycles) +
                                            " cycles of W enumerated before the cap, all avoid L");
  }
  return pass(Evidence::kExhaustive,
              base + "; all " + std::to_string(cycles) + " cycles of W enumerated, all avoid L");
}

CheckRecord multi_chord_check(const WallWitness& w) {
  std::vector<std::string> bad;
  const BigInt& alpha = w.alpha;
  if (!w.p.empty() && w.p.front() < 2 * alpha) bad.push_back("p_1 < 2 alpha");
  for (std::size_t k = 1; k < w.p.size(); ++k) {
    if (w.p[k] <= w.p[k - 1]) bad.push_back("p not increasing at " + std::to_string(k + 1));
  }
  for (const auto& c : w.chords) {
    if (c.weight < alpha) bad.push_back("chord " + std::to_string(c.index) + " lighter than alpha");
  }
  BigInt before = 0;
  json gaps = json::array();
  for (std::size_t k = 0; k < w.p.size(); ++k) {
    const BigInt hi = w.p[k] + before + alpha;
    auto next = w.set.next_member(w.p[k] + 1);
    if (next && *next <= hi) {
      bad.push_back("member " + next->str() + " in (p_" + std::to_string(k + 1) + ", " +
                    hi.str() + "]");
    }
    gaps.push_back({{"k", k + 1}, {"p", w.p[k].str()}, {"gap_end", hi.str()},
                    {"next_member", next ? next->str() : "none"}});
    before += w.p[k];
  }
  std::string text;
  for (const auto& b : bad) text += (text.empty() ? "" : "; ") + b;
  if (bad.empty()) {
    text = "p_1 >= 2 alpha, chords weigh >= alpha, and (p_k, p_k + sum_{i<k} p_i + alpha] is "
           "member-free for every k, so every cycle through two or more chords has weight in "
           "such a gap";
  }
  return verdict(bad.empty(), Evidence::kArithmetic, text, gaps);
}

CheckRecord crossing_check(const WallWitness& w, const VerifyOptions& options) {
  if (options.mode != VerifyMode::kExhaustive) return skipped("certificate mode");
  const std::size_t k = w.chords.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  }
  std::vector<DisjointPathsResult> results(pairs.size());
  util::parallel_for(pairs.size(), options.jobs, [&](std::size_t idx) {
    const auto& ci = w.chords[pairs[idx].first];
    const auto& cj = w.chords[pairs[idx].second];
    results[idx] = two_disjoint_paths(w.grid, ci.a, ci.b, cj.a, cj.b, options.path_cap);
  });
  json per_pair = json::array();
  bool any_found = false;
  bool any_capped = false;
  std::uint64_t total = 0;
  json witness;
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto& r = results[idx];
    total += r.paths_explored;
    any_capped = any_capped || r.capped;
    per_pair.push_back({{"pair", {pairs[idx].first + 1, pairs[idx].second + 1}},
                        {"paths", r.paths_explored},
                        {"capped", r.capped},
                        {"disjoint", r.found}});
    if (r.found && !any_found) {
      any_found = true;
      witness = {{"pair", {pairs[idx].first + 1, pairs[idx].second + 1}},
                 {"first", labels(w.grid, r.first)},
                 {"second", labels(w.grid, r.second)}};
    }
  }
  if (any_found) {
    return fail(Evidence::kExhaustive, "two chord terminal pairs are joined by disjoint paths",
                witness);
  }
  const std::string text = std::to_string(pairs.size()) + " chord pairs, " +
                           std::to_string(total) + " terminal paths explored, none disjoint";
  if (any_capped) {
    return pass(Evidence::kSampled, text + " (path cap reached; crossing not proved)", per_pair);
  }
  return pass(Evidence::kExhaustive, text, per_pair);
}

}  // namespace

std::vector<CheckRecord> check_wall_disjointness(const WallWitness& w,
                                                 const VerifyOptions& options) {
  std::vector<CheckRecord> out;
  out.push_back(timed_check("wall-cycles-avoid-l", [&] { return grid_cycles_check(w, options); }));
  out.push_back(timed_check("multi-chord-gaps", [&] { return multi_chord_check(w); }));
  out.push_back(timed_check("chord-crossing", [&] { return crossing_check(w, options); }));
  return out;
}

WallDeletionResult check_wall_deletion(const WallWitness& w, std::size_t max_deleted,
                                       const VerifyOptions& options) {
  WallDeletionResult result;
  const std::size_t side = w.side();
  const auto mult = construct::path_multiplicity(side, w.paths);
  result.max_multiplicity = *std::max_element(mult.begin(), mult.end());

  const std::size_t n = w.grid.vertex_count();
  const std::size_t m = w.grid.edge_count();
  const std::size_t k = w.chords.size();
  const std::uint64_t items = n + m + k;

  // Which paths each item destroys.
  std::vector<std::vector<std::size_t>> kills(items);
  for (std::size_t i = 0; i < w.paths.size(); ++i) {
    const auto& q = w.paths[i];
    for (std::size_t j = 0; j < q.size(); ++j) {
      kills[q[j]].push_back(i);
      if (j + 1 < q.size()) {
        auto e = construct::edge_between(w.grid, q[j], q[j + 1]);
        kills[n + *e].push_back(i);
      }
    }
    kills[n + m + i].push_back(i);
  }

  BigInt total = 0, term = 1;
  for (std::size_t d = 0; d <= max_deleted && d <= items; ++d) {
    if (d > 0) term = term * (items - d + 1) / d;
    total += term;
  }
  if (total > options.case_cap) {
    // Each item lies on at most two paths, so at most 2d of the 3 ell die.
    std::uint32_t item_max = 0;
    for (const auto& kl : kills) item_max = std::max<std::uint32_t>(item_max, kl.size());
    result.exhaustive = false;
    result.passed = k >= static_cast<std::size_t>(item_max) * max_deleted + max_deleted;
    result.min_surviving = k - std::min<std::size_t>(k, item_max * max_deleted);
    return result;
  }

  std::vector<std::vector<std::uint32_t>> cases{{}};
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t from) -> void {
    if (cur.size() == max_deleted) return;
    for (std::uint32_t it = from; it < items; ++it) {
      cur.push_back(it);
      cases.push_back(cur);
      self(self, it + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);

  std::vector<std::uint64_t> surviving(cases.size(), 0);
  util::parallel_for(cases.size(), options.jobs, [&](std::size_t c) {
    std::vector<char> dead(k, 0);
    for (auto it : cases[c]) {
      for (auto i : kills[it]) dead[i] = 1;
    }
    std::set<BigInt> lengths;
    for (std::size_t i = 0; i < k; ++i) {
      if (!dead[i] && w.set.contains(w.p[i])) lengths.insert(w.p[i]);
    }
    surviving[c] = lengths.size();
  });
  result.exhaustive = true;
  result.cases = cases.size();
  result.min_surviving = UINT64_MAX;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    result.min_surviving = std::min(result.min_surviving, surviving[c]);
    if (surviving[c] >= max_deleted || result.counterexample) continue;
    WallDeletionCase dc;
    for (auto it : cases[c]) {
      if (it < n) {
        dc.vertices.push_back(it);
      } else if (it < n + m) {
        dc.grid_edges.push_back(it - n);
      } else {
        dc.chords.push_back(it - n - m + 1);
      }
    }
    result.counterexample = dc;
  }
  result.passed = !result.counterexample && result.max_multiplicity <= 2;
  return result;
}

VerificationReport verify_wall(const WallWitness& w, const VerifyOptions& options) {
  VerificationReport report;
  report.subject = "wall witness for " + w.set.spec() + " (ell=" + std::to_string(w.ell) +
                   ", weights=" + construct::to_string(w.source) + ")";
  const std::size_t side = w.side();

  report.checks.push_back(timed_check("routing", [&] {
    std::vector<std::string> bad;
    if (w.paths.size() != 3 * w.ell) bad.push_back("path count");
    for (std::size_t i = 1; i <= w.paths.size(); ++i) {
      const auto& q = w.paths[i - 1];
      if (q.front() != construct::grid_vertex(side, 1, i) ||
          q.back() != construct::grid_vertex(side, side, side + 1 - i)) {
        bad.push_back("endpoints of Q_" + std::to_string(i));
      }
      std::vector<VertexId> sorted(q);
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        bad.push_back("Q_" + std::to_string(i) + " repeats a vertex");
      }
      for (std::size_t j = 0; j + 1 < q.size(); ++j) {
        if (!construct::edge_between(w.grid, q[j], q[j + 1])) {
          bad.push_back("Q_" + std::to_string(i) + " leaves the grid");
          break;
        }
      }
      if (q.size() != 12 * w.ell - 2 * i + 1) bad.push_back("length of Q_" + std::to_string(i));
    }
    const auto mult = construct::path_multiplicity(side, w.paths);
    std::map<std::uint32_t, std::uint32_t> hist;
    for (auto c : mult) ++hist[c];
    const auto max_mult = hist.rbegin()->first;
    if (max_mult > 2) bad.push_back("a vertex lies on " + std::to_string(max_mult) + " paths");
    json h = json::object();
    for (auto [c, cnt] : hist) h[std::to_string(c)] = cnt;
    std::string text = "3 ell simple paths a_i-b_i, max multiplicity " + std::to_string(max_mult);
    for (const auto& b : bad) text += "; " + b;
    return verdict(bad.empty(), Evidence::kExhaustive, text, json{{"multiplicity_histogram", h}});
  }));

  report.checks.push_back(timed_check("chords", [&] {
    std::vector<std::string> bad;
    if (w.weights.size() != w.grid.edge_count()) bad.push_back("|A| != |E(W)|");
    {
      std::vector<BigInt> sorted(w.weights);
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        bad.push_back("weights not distinct");
      }
    }
    BigInt alpha = 0;
    for (const auto& a : w.weights) alpha += a;
    if (alpha != w.alpha) bad.push_back("alpha != sum A");
    for (const auto& c : w.chords) {
      const std::size_t i = c.index;
      if (c.weight < 1) bad.push_back("chord " + std::to_string(i) + " nonpositive");
      if (w.path_weights[i - 1] + c.weight != w.p[i - 1]) {
        bad.push_back("w(Q_" + std::to_string(i) + ") + w(e_" + std::to_string(i) + ") != p_" +
                      std::to_string(i));
      }
      if (!w.set.contains(w.p[i - 1])) bad.push_back("p_" + std::to_string(i) + " not in L");
      const auto& e = w.graph.edge(c.edge);
      if (e.weight != c.weight || e.tag.kind != graph::EdgeKind::kChord) {
        bad.push_back("chord edge " + std::to_string(i) + " mismatch");
      }
    }
    std::string text = "chord weights positive, weight(Q_i + e_i) = p_i in L for all i";
    if (!bad.empty()) {
      text.clear();
      for (const auto& b : bad) text += (text.empty() ? "" : "; ") + b;
    }
    return verdict(bad.empty(), Evidence::kArithmetic, text);
  }));

  for (auto& rec : check_wall_disjointness(w, options)) report.checks.push_back(std::move(rec));

  report.checks.push_back(timed_check("wall-deletion", [&] {
    WallDeletionResult r = check_wall_deletion(w, w.ell, options);
    json witness;
    if (r.counterexample) {
      witness = {{"vertices", labels(w.grid, r.counterexample->vertices)},
                 {"grid_edges", r.counterexample->grid_edges},
                 {"chords", r.counterexample->chords}};
    }
    if (!r.exhaustive) {
      return verdict(r.passed, Evidence::kCertificate,
                     "case cap exceeded; multiplicity argument: every deleted item meets at most "
                     "two paths, so at least " +
                         std::to_string(r.min_surviving) + " of 3 ell chord cycles survive",
                     witness);
    }
    return verdict(r.passed, Evidence::kExhaustive,
                   std::to_string(r.cases) +
                       " deletions of at most ell grid vertices, grid edges or chords "
                       "(including none); fewest surviving L-lengths " +
                       std::to_string(r.min_surviving) + ", max multiplicity " +
                       std::to_string(r.max_multiplicity),
                   witness);
  }));
  return report;
}

}  // namespace epcx::verify
