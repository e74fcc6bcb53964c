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

#include <fstream>

#include "doctest.h"
#include "epcx/lset/int_set.hpp"
#include "epcx/lset/searches.hpp"
#include "epcx/lset/set_spec.hpp"
#include "support/oracles.hpp"

using namespace epcx;
using namespace epcx::lset;

namespace {

IntSet pow10() { return IntSet::powers(10); }
IntSet empty_set() { return IntSet::explicit_list({}); }
IntSet everything() { return IntSet::arithmetic(0, 1); }

}  // namespace

TEST_CASE("membership basics") {
  CHECK(IntSet::primes().contains(std::uint64_t{7}));
  CHECK_FALSE(IntSet::squares().contains(std::uint64_t{8}));
  CHECK(pow10().contains(std::uint64_t{100}));
  CHECK(pow10().contains(std::uint64_t{1}));
  CHECK(IntSet::factorials().contains(std::uint64_t{720}));
  CHECK_FALSE(IntSet::factorials().contains(std::uint64_t{721}));
  CHECK(IntSet::arithmetic(2, 5).contains(std::uint64_t{12}));
  CHECK_FALSE(IntSet::squares().contains(BigInt(0)));
}

TEST_CASE("big and small membership paths agree") {
  const auto sieve = oracle::prime_sieve(5000);
  for (const auto& set : {IntSet::primes(), IntSet::squares(), pow10(), IntSet::factorials(),
                          IntSet::arithmetic(3, 7), IntSet::perturbed(IntSet::primes())}) {
    for (std::uint64_t n = 1; n <= 5000; ++n)
      REQUIRE(set.contains(n) == set.contains(BigInt(n)));
  }
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    REQUIRE(IntSet::primes().contains(n) == sieve[n]);
    REQUIRE(IntSet::squares().contains(n) == oracle::is_square(n));
    REQUIRE(pow10().contains(n) == oracle::is_power_of(10, n));
    REQUIRE(IntSet::factorials().contains(n) == oracle::is_factorial(n));
  }
}

TEST_CASE("huge squares are recognised") {
  const BigInt r = BigInt(1) << 300;
  CHECK(IntSet::squares().contains(BigInt(r * r)));
  CHECK_FALSE(IntSet::squares().contains(BigInt(r * r + 1)));
  CHECK(oracle::is_square(BigInt(r * r)));
}

TEST_CASE("bounded sets refuse to decide past their bound") {
  const auto bounded = IntSet::primes().with_bound(100);
  CHECK(bounded.contains(std::uint64_t{97}));
  CHECK_THROWS_AS(bounded.contains(std::uint64_t{101}), UndecidableBeyondBound);
  CHECK_THROWS_AS(bounded.require_decidable(1000), BoundExhausted);
  CHECK_NOTHROW(IntSet::explicit_list({5}).contains(std::uint64_t{1'000'000}));
}

TEST_CASE("file-backed sets") {
  const auto path = std::filesystem::temp_directory_path() / "epcx_set_test.txt";
  {
    std::ofstream f(path);
    f << "# a few values\n3\n\n7 # trailing\n12\n";
  }
  const auto set = IntSet::from_file(path);
  CHECK(set.contains(std::uint64_t{7}));
  CHECK_FALSE(set.contains(std::uint64_t{8}));
  REQUIRE(set.enumeration_bound());
  CHECK(*set.enumeration_bound() == 12);
  CHECK_THROWS_AS(set.contains(std::uint64_t{13}), UndecidableBeyondBound);
  {
    std::ofstream f(path);
    f << "3\nfour\n";
  }
  CHECK_THROWS_AS(IntSet::from_file(path), InvalidArgument);
  std::filesystem::remove(path);
}

TEST_CASE("set spec language") {
  CHECK(parse_set_spec("powers:10").spec() == "powers:10");
  CHECK(parse_set_spec("perturb:primes").spec() == "perturb:primes");
  CHECK(parse_set_spec("arith:1,4").contains(std::uint64_t{9}));
  CHECK(parse_set_spec("explicit:4,9").contains(std::uint64_t{9}));
  CHECK(*parse_set_spec("squares", BigInt(50)).enumeration_bound() == 50);
  for (const char* bad : {"", "cubes", "powers:", "powers:1", "arith:1", "arith:1,0",
                          "explicit:1,x", "perturb:", "powers:-3"})
    CHECK_THROWS_AS(parse_set_spec(bad), InvalidArgument);
}

TEST_CASE("lower density prefix") {
  auto d = lower_density_prefix(IntSet::primes(), 10);
  CHECK(d.count == 4);
  CHECK(d.ratio == Rational(4, 10));
  CHECK(lower_density_prefix(empty_set(), 5).count == 0);
  CHECK(lower_density_prefix(everything(), 7).ratio == 1);
  CHECK(lower_density_prefix(IntSet::perturbed(IntSet::primes()), 10).count == 3);
}

TEST_CASE("gap witness") {
  CHECK(gap_witness(IntSet::squares(), 3, 100) == BigInt(5));
  CHECK(gap_witness(empty_set(), 4, 10) == BigInt(1));
  CHECK_FALSE(gap_witness(everything(), 1, 10).has_value());
}

TEST_CASE("g_of examples and regression values") {
  CHECK(g_of(pow10(), 3, 10) == 3);
  CHECK(g_of(pow10(), 77, 20) == 13);
  CHECK(g_of(pow10(), 7, 20) == 13);
  CHECK(g_of(IntSet::explicit_list({5}), 2, 5) == 2);
  CHECK_THROWS_AS(g_of(IntSet::explicit_list({BigInt(1'000'000)}), 2, 50), GExceedsAMax);
}

TEST_CASE("g_of matches the double loop") {
  for (std::uint64_t x = 2; x <= 120; ++x) {
    const auto g = g_of(IntSet::squares(), x, 1000);
    CHECK(g == oracle::g_brute([](std::uint64_t n) { return oracle::is_square(n); }, x, 1000));
    const auto h = g_of(pow10(), x, 1000);
    CHECK(h == oracle::g_brute([](std::uint64_t n) { return oracle::is_power_of(10, n); }, x,
                               1000));
  }
}

TEST_CASE("find_x") {
  CHECK(find_x(IntSet::squares(), 1, 20) == 6);
  CHECK(find_x(empty_set(), 5, 1) == 1);
  CHECK(find_x(IntSet::primes(), 2, 200) == 92);
  CHECK_THROWS_AS(find_x(everything(), 1, 50), BoundExhausted);
  for (std::uint64_t t = 1; t <= 3; ++t) {
    const auto x = find_x(IntSet::squares(), t, 10'000);
    CHECK_THROWS_AS(g_of(IntSet::squares(), x, t), GExceedsAMax);
  }
}

TEST_CASE("find_x_with_g_at_least") {
  auto r = find_x_with_g_at_least(pow10(), 13, 100, 20);
  CHECK(r.x == 7);
  CHECK(r.g == 13);
  r = find_x_with_g_at_least(IntSet::explicit_list({BigInt(1'000'000)}), 2, 10, 50);
  CHECK(r.x == 2);
  CHECK_FALSE(r.g_exact);
  CHECK(r.g == 51);
  r = find_x_with_g_at_least(IntSet::squares(), 1, 10, 10);
  CHECK(r.x == 2);
  CHECK(r.g == g_of(IntSet::squares(), 2, 10));
}

TEST_CASE("far-from-L extension") {
  const std::vector<BigInt> two{2};
  CHECK(far_from_l_extend(IntSet::squares(), two, 100) == 5);
  CHECK(far_from_l_extend(IntSet::squares(), {}, 100) == 2);
  const std::vector<BigInt> z{3, 4};
  CHECK(far_from_l_extend(empty_set(), z, 10) == 8);
  CHECK_THROWS_AS(far_from_l_extend(everything(), two, 1000), BoundExhausted);

  CHECK(far_from_l_set(IntSet::squares(), 1, 100) == std::vector<BigInt>{2});
  CHECK(far_from_l_set(IntSet::squares(), 2, 100) == std::vector<BigInt>{2, 5});
  CHECK(far_from_l_set(IntSet::primes(), 0, 10).empty());
  const std::vector<BigInt> prefix{2, 5, 17, 170, 9605, 24010001};
  CHECK(far_from_l_set(IntSet::squares(), 6, 1'000'000) == prefix);
}

TEST_CASE("far-from-L sets have no subset sum in L") {
  for (const auto& set : {IntSet::squares(), pow10(), IntSet::factorials()}) {
    const auto f = far_from_l_set(set, 10, 1'000'000);
    REQUIRE(f.size() == 10);
    CHECK(std::is_sorted(f.begin(), f.end()));
    for (std::uint32_t mask = 1; mask < (1u << f.size()); ++mask) {
      BigInt sum = 0;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1) sum += f[i];
      REQUIRE_FALSE(set.contains(sum));
    }
  }
}

TEST_CASE("lonely elements") {
  CHECK(find_lonely(IntSet::squares(), 5, 1, 100) == 4);
  CHECK(find_lonely(IntSet::squares(), 1, 1, 100) == 1);
  CHECK(find_lonely(pow10(), 50, 1, 10'000) == 10);
  CHECK(find_lonely(IntSet::squares(), 5, 1, 100, Loneliness::kStrictlyMore) == 9);
  CHECK(find_lonely(IntSet::primes(), 10, 1, 100'000) == 113);
  CHECK_THROWS_AS(find_lonely(IntSet::explicit_list({3, 5}), 4, 1, 100), BoundExhausted);
}

TEST_CASE("lonely sequences") {
  CHECK(lonely_sequence(IntSet::squares(), 1, 3, 10'000) == std::vector<BigInt>{9});
  CHECK(lonely_sequence(IntSet::primes(), 0, 5, 10).empty());
  CHECK(lonely_sequence(pow10(), 2, 5, 1'000'000) == std::vector<BigInt>{10, 100});
  for (const auto& [set, count] : {std::pair{IntSet::squares(), 4}, {IntSet::primes(), 2},
                                    {pow10(), 4}}) {
    const BigInt alpha = 7;
    const auto p = lonely_sequence(set, count, alpha, 1'000'000);
    REQUIRE(p.size() == static_cast<std::size_t>(count));
    CHECK(p[0] >= 2 * alpha);
    CHECK(std::is_sorted(p.begin(), p.end()));
    BigInt prefix = 0;
    for (const auto& pk : p) {
      CHECK(set.contains(pk));
      const auto next = set.next_member(BigInt(pk + 1));
      REQUIRE(next);
      CHECK(*next > pk + prefix + alpha);
      prefix += pk;
    }
  }
}

TEST_CASE("perturbation") {
  const auto pp = perturb(IntSet::primes());
  CHECK_FALSE(pp.contains(std::uint64_t{3}));
  CHECK(pp.contains(std::uint64_t{5}));
  CHECK_FALSE(pp.contains(std::uint64_t{11}));
  CHECK(pp.spec() == "perturb:primes");
  CHECK(lower_density_prefix(pp, 1000).count == 163);
  const auto bounded = perturb(IntSet::primes().with_bound(100'000));
  BigInt three = 3;
  for (std::uint64_t t = 1; three + t <= 100'000; ++t, three *= 3) {
    const auto w = gap_witness(bounded, t + 1, BigInt(three + 1));
    REQUIRE(w);
    CHECK(*w <= three);
  }
  CHECK(in_perturbation_window(BigInt(29)));
  CHECK_FALSE(in_perturbation_window(BigInt(32)));
}

TEST_CASE("enumeration and next member") {
  CHECK(IntSet::squares().enumerate(10, 50) == std::vector<BigInt>{16, 25, 36, 49});
  CHECK(IntSet::primes().next_member(BigInt(90)) == BigInt(97));
  CHECK_FALSE(IntSet::explicit_list({4}).next_member(BigInt(5)).has_value());
  CHECK(IntSet::factorials().enumerate(1, 130) == std::vector<BigInt>{1, 2, 6, 24, 120});
}

TEST_CASE("operations are pure") {
  const auto a = far_from_l_set(IntSet::squares(), 8, 1'000'000);
  const auto b = far_from_l_set(IntSet::squares(), 8, 1'000'000);
  CHECK(a == b);
  CHECK(g_of(IntSet::factorials(), 41, 1000) == g_of(IntSet::factorials(), 41, 1000));
}
