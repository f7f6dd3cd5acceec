"""Elementary arithmetic: divisors, Moebius inversion, binomials, partitions,
and the periodic divisor-weight tables used on the divisor-sum side of the
identities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import KOutOfRange, NonIntegralExponent, ParamsOutOfRange


def divisors(n: int) -> list[int]:
    """Positive divisors of n in ascending order (trial division to sqrt n)."""
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def mobius_table(M: int) -> list[int]:
    """mu(0..M) by a linear sieve; entry 0 is unused and set to 0."""
    mu = [1] * (M + 1)
    if M >= 0:
        mu[0] = 0
    is_comp = [False] * (M + 1)
    primes: list[int] = []
    for i in range(2, M + 1):
        if not is_comp[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > M:
                break
            is_comp[i * p] = True
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return mu


def divisor_sum_transform(a: Sequence[int]) -> list[int]:
    """b_n = sum_{d|n} d*a_d, with a[0] holding a_1."""
    M = len(a)
    b = [0] * M
    for d in range(1, M + 1):
        ad = a[d - 1]
        if ad:
            for n in range(d, M + 1, d):
                b[n - 1] += d * ad
    return b


def invert_divisor_sum(b: Sequence[int]) -> list[int]:
    """Recover a from b_n = sum_{d|n} d*a_d (lists start at index n=1).

    a_n = (1/n) * sum_{d|n} mu(n/d) b_d; raises NonIntegralExponent when n
    does not divide the Moebius sum.
    """
    M = len(b)
    mu = mobius_table(M)
    acc = [0] * M
    for d in range(1, M + 1):
        bd = b[d - 1]
        if not bd:
            continue
        for n in range(d, M + 1, d):
            m = mu[n // d]
            if m:
                acc[n - 1] += m * bd
    a = []
    for n, s in enumerate(acc, start=1):
        q, r = divmod(s, n)
        if r:
            raise NonIntegralExponent(f"Moebius sum {s} at n={n} is not divisible by {n}")
        a.append(q)
    return a


def gen_binomial(c: int, k: int) -> int:
    """c(c-1)...(c-k+1)/k! for any integer c."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if c >= 0:
        return math.comb(c, k)
    # upper negation: binom(c, k) = (-1)^k binom(k - c - 1, k)
    v = math.comb(k - c - 1, k)
    return -v if k % 2 else v


def enumerate_partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Yield every (nu_1, ..., nu_max_part) >= 0 with sum i*nu_i = n.

    Multiplicity vectors are produced lazily, largest parts decided first.
    """
    if n < 0 or max_part < 0:
        raise ValueError("n and max_part must be non-negative")
    nu = [0] * max_part

    def rec(remaining: int, part: int):
        if part == 1:
            nu[0] = remaining
            yield tuple(nu)
            nu[0] = 0
            return
        for count in range(remaining // part, -1, -1):
            nu[part - 1] = count
            yield from rec(remaining - count * part, part - 1)
        nu[part - 1] = 0

    if max_part == 0:
        if n == 0:
            yield ()
        return
    yield from rec(n, max_part)


def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            j += 1
        p[m] = total
    return p[n]


def two_adic_split(n: int) -> tuple[int, int]:
    """(t, n') with n = 2**t * n' and n' odd."""
    if n < 1:
        raise ValueError("n must be positive")
    t = (n & -n).bit_length() - 1
    return t, n >> t


def sigma(n: int) -> int:
    return sum(divisors(n))


# -- periodic divisor weights ------------------------------------------------


@dataclass(frozen=True)
class WeightTable:
    """A periodic weight d -> w_d stored as one period of values.

    Built from a list of congruence classes (residue, modulus, weight); each
    residue class a value falls in contributes its weight, so classes that
    coincide add up.
    """

    name: str
    params: dict = field(compare=False)
    period: int
    values: tuple[int, ...] = field(repr=False)

    def __call__(self, d: int) -> int:
        return self.values[d % self.period]

    __getitem__ = __call__

    def divisor_sum(self, n: int) -> int:
        """sum_{d|n} d*w_d."""
        vals, p = self.values, self.period
        return sum(d * vals[d % p] for d in divisors(n))


def _from_classes(name, params, period, classes) -> WeightTable:
    vals = [0] * period
    for residue, modulus, weight in classes:
        if period % modulus:
            raise ValueError(f"modulus {modulus} does not divide period {period}")
        for r in range(residue % modulus, period, modulus):
            vals[r] += weight
    return WeightTable(name, dict(params), period, tuple(vals))


def c_weights(N: int = 1) -> WeightTable:
    """2 on N^2 mod 2N^2, -3 on 2N^2 mod 4N^2, -1 on 0 mod 4N^2."""
    if N < 1:
        raise ParamsOutOfRange("N must be positive")
    N2 = N * N
    return _from_classes(
        "c", {"N": N}, 4 * N2,
        [(N2, 2 * N2, 2), (2 * N2, 4 * N2, -3), (0, 4 * N2, -1)],
    )


def e_weights(h: int, N: int) -> WeightTable:
    """Weights for h != 0, N != +-2h: +1 on +-(N^2+2hN) mod 2N^2 and -1 on
    0, 2N^2, +-(2N^2+4hN) mod 4N^2, summed over coinciding classes."""
    if N < 1:
        raise ParamsOutOfRange("N must be positive")
    if h % N == 0 or (2 * h) % N == 0:
        raise ParamsOutOfRange(f"e-weights need h != 0 and N != +-2h (got h={h}, N={N})")
    N2 = N * N
    a, b = N2 + 2 * h * N, 2 * N2 + 4 * h * N
    return _from_classes(
        "e", {"h": h, "N": N}, 4 * N2,
        [
            (a, 2 * N2, 1), (-a, 2 * N2, 1),
            (0, 4 * N2, -1), (2 * N2, 4 * N2, -1), (b, 4 * N2, -1), (-b, 4 * N2, -1),
        ],
    )


def f_weights(h: int) -> WeightTable:
    """+1 on 8h^2 mod 16h^2, -1 on 0 mod 16h^2."""
    if h == 0:
        raise ParamsOutOfRange("f-weights need h != 0")
    H = 16 * h * h
    return _from_classes("f", {"h": abs(h)}, H, [(H // 2, H, 1), (0, H, -1)])


def e_prime_weights(k: int) -> WeightTable:
    """+1 on +-(k-3) mod (k-2); -1 on 0, k-2, +-2(k-3) mod 2(k-2); summed."""
    if k <= 4:
        raise KOutOfRange(f"k-gonal weights need k > 4 (got k={k})")
    K = k - 2
    return _from_classes(
        "e_prime", {"k": k}, 2 * K,
        [
            (k - 3, K, 1), (-(k - 3), K, 1),
            (0, 2 * K, -1), (K, 2 * K, -1), (2 * (k - 3), 2 * K, -1), (-2 * (k - 3), 2 * K, -1),
        ],
    )


def alt_weights() -> WeightTable:
    """(-1)^(d+1)."""
    return _from_classes("alt", {}, 2, [(1, 2, 1), (0, 2, -1)])


def c_prime_weights() -> WeightTable:
    """c' after rescaling by N^2: 2 odd, -3 on 2 mod 4, -1 on 0 mod 4."""
    t = c_weights(1)
    return WeightTable("c_prime", {}, t.period, t.values)


def f_prime_weights() -> WeightTable:
    """f' after rescaling by 8h^2: +1 odd, -1 even."""
    t = alt_weights()
    return WeightTable("f_prime", {}, t.period, t.values)


@lru_cache(maxsize=None)
def _cached(kind: str, *args) -> WeightTable:
    return {
        "c": c_weights,
        "e": e_weights,
        "f": f_weights,
        "e_prime": e_prime_weights,
        "alt": alt_weights,
    }[kind](*args)


def weights(kind: str, *args) -> WeightTable:
    """Memoized access to the named weight rules."""
    return _cached(kind, *args)
