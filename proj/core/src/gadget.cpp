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

#include "epcx/construct/gadget.hpp"

#include <algorithm>

#include "epcx/construct/grid.hpp"
#include "epcx/lset/searches.hpp"

namespace epcx::construct {

EllWindow ell_window(std::uint64_t t, std::uint64_t g) {
  if (t < 1) throw InvalidArgument("t must be positive");
  const BigInt bt = t;
  const BigInt bg = g;
  // ell^2 >= ceil(2tg / (2t-1)) and ell^2 <= floor(3tg / (3t-2)).
  const BigInt low_den = 2 * bt - 1;
  const BigInt low_sq = (2 * bt * bg + low_den - 1) / low_den;
  const BigInt high_sq = (3 * bt * bg) / (3 * bt - 2);
  EllWindow w;
  w.lo = static_cast<std::uint64_t>(std::max(ceil_sqrt(low_sq), BigInt(1)));
  w.hi = static_cast<std::uint64_t>(isqrt(high_sq));
  return w;
}

bool g_large_enough(std::uint64_t g, std::uint64_t t, std::uint64_t s) {
  return BigInt(g) > 16 * BigInt(t) * t * s * s;
}

GadgetParameters choose_gadget_parameters(const lset::IntSet& set, std::uint64_t t,
                                          std::uint64_t s, std::uint64_t x_bound,
                                          std::uint64_t a_max) {
  if (t < 1) throw InvalidArgument("t must be positive");
  std::uint64_t best_g = 0;
  std::uint64_t undetermined = 0;
  bool window_blocked = false;
  for (std::uint64_t x = 2; x <= x_bound; ++x) {
    std::uint64_t g = 0;
    try {
      g = lset::g_of(set, x, a_max);
    } catch (const lset::GExceedsAMax&) {
      ++undetermined;
      continue;
    }
    best_g = std::max(best_g, g);
    if (!g_large_enough(g, t, s)) continue;
    const EllWindow window = ell_window(t, g);
    if (window.empty() || window.hi < 2) {
      window_blocked = true;
      continue;
    }
    GadgetParameters p;
    p.t = t;
    p.s = s;
    p.x = x;
    p.g = g;
    p.ell = std::max<std::uint64_t>(window.lo, 2);
    p.x_bound = x_bound;
    p.a_max = a_max;
    p.undetermined_x = undetermined;
    return p;
  }
  std::string message;
  if (window_blocked) {
    message = "window empty at every candidate: every x <= " + std::to_string(x_bound) +
              " with g > 16 t^2 s^2 has no integer ell in its window";
  } else {
    message = "no feasible x below bound: best g found for x <= " + std::to_string(x_bound) +
              " is " + std::to_string(best_g) + ", need g > " +
              (16 * BigInt(t) * t * s * s).str();
  }
  if (undetermined > 0) {
    message += " (" + std::to_string(undetermined) + " candidates had g > a_max = " +
               std::to_string(a_max) + ")";
  }
  throw NoFeasibleX(message, best_g, window_blocked);
}

GadgetWitness assemble_gadget_witness(const lset::IntSet& set, const GadgetParameters& params) {
  return GadgetWitness{set, params, build_grid(params.ell),
                       build_theta_gadget_graph(params.ell, params.x)};
}

GadgetWitness construct_gadget_witness(const lset::IntSet& set, std::uint64_t t,
                                       std::uint64_t s, std::uint64_t x_bound,
                                       std::uint64_t a_max) {
  return assemble_gadget_witness(set, choose_gadget_parameters(set, t, s, x_bound, a_max));
}

}  // namespace epcx::construct
