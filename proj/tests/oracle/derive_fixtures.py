# Copyright 2026 The epcx Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent brute-force derivation of the regression constants frozen in
the C++ tests. Plain loops only; shares no code with the library."""

from math import isqrt


def is_square(n):
    return n >= 1 and isqrt(n) ** 2 == n


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def is_pow10(n):
    while n >= 10 and n % 10 == 0:
        n //= 10
    return n == 1


def g_of(member, x, a_max):
    for a in range(1, a_max + 1):
        if any(member(a * x + b) for b in range(-a, a + 1)):
            return a
    return None


def find_x(member, t, x_bound):
    for x in range(1, x_bound + 1):
        if not any(member(a * x + b) for a in range(1, t + 1) for b in range(-t, t + 1)):
            return x
    return None


def gadget(member, t, s, x_bound, a_max):
    for x in range(2, x_bound + 1):
        g = g_of(member, x, a_max)
        if g is None or g <= 16 * t * t * s * s:
            continue
        lo = 1
        while lo * lo * (2 * t - 1) < 2 * t * g:
            lo += 1
        hi = lo
        while (hi + 1) ** 2 * (3 * t - 2) <= 3 * t * g:
            hi += 1
        if lo * lo * (3 * t - 2) <= 3 * t * g:
            return x, g, max(lo, 2)
    return None


def next_square(n):
    r = isqrt(n)
    return n if r * r == n else (r + 1) ** 2


def lonely_square(k, min_p):
    # smallest square p >= min_p whose next square q has q - p > k
    m = isqrt(max(min_p, 1) - 1) + 1
    m = max(m, (k + 1) // 2)  # gap 2m+1 exceeds k
    return m * m


def block_scale(member, m):
    c = 1
    while any(member(c * k) for k in range(1, m + 1)):
        c += 1
    return c


def greedy_far(count):
    out = []
    for _ in range(count):
        s = sum(out)
        y = s + 1
        while next_square(y) <= y + s:
            y = next_square(y) + 1
        out.append(y)
    return out


if __name__ == "__main__":
    cubes = {j ** 3 for j in range(1, 2000)}
    print("g_of pow10 (3,10):", g_of(is_pow10, 3, 10))
    print("g_of pow10 (77,20):", g_of(is_pow10, 77, 20))
    print("g_of pow10 (7,20):", g_of(is_pow10, 7, 20))
    print("g_of {5} (2,5):", g_of(lambda n: n == 5, 2, 5))
    print("find_x primes t=2:", find_x(is_prime, 2, 200))
    print("find_x squares t=1:", find_x(is_square, 1, 20))
    print("gadget squares:", gadget(is_square, 1, 1, 1000, 1000))
    print("gadget cubes:", gadget(lambda n: n in cubes, 1, 1, 1000, 1000))
    # single member M: a*x - a <= M <= a*x + a  <=>  M/(x+1) <= a <= M/(x-1)
    m, x = 10 ** 6, 2
    g = -(-m // (x + 1))
    lo = isqrt(2 * g - 1) + 1 if isqrt(2 * g) ** 2 != 2 * g else isqrt(2 * g)
    print("gadget {10^6} at x=2: g =", g, "ell =", max(lo, 2))
    print("greedy squares first 6:", greedy_far(6))
    n = 60
    c = block_scale(is_square, n * (n + 1) // 2)
    alpha = c * n * (n + 1) // 2
    p, run, lo = [], alpha, 2 * alpha
    for _ in range(3):
        q = lonely_square(run, lo)
        p.append(q)
        run += q
        lo = q + 1
    print("wall squares: c =", c, "alpha =", alpha)
    for i, v in enumerate(p, 1):
        print(f"  p_{i} = {v}")
    print("density primes 10:", sum(is_prime(k) for k in range(1, 11)))
    print("perturb primes <= 1000:",
          sum(1 for k in range(1, 1001) if is_prime(k) and not any(
              3 ** t <= k <= 3 ** t + t for t in range(1, 8))))
