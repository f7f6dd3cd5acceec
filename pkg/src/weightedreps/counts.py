"""Signed counts of ordered representations, computed combinatorially.

For a set of positive parts (with multiplicities) the signed count of m is
sum over ordered tuples of parts summing to m of (-1)**(tuple length).  The
empty tuple makes the count of 0 equal to 1.  Nothing here touches the series
machinery; these tables serve as the independent side of every identity.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import InputTooLarge, KOutOfRange, ParamsOutOfRange

BRUTE_FORCE_MAX_N = 40

SQUARES = "squares"
TRIANGULAR = "triangular"
KGONAL = "kgonal"
CONGRUENCE = "congruence"
CONGRUENCE_PLUS = "congruence_plus"


def polygonal(k: int, m: int) -> int:
    """The m-th generalized k-gonal number ((k-2)m^2 - (k-4)m)/2."""
    return ((k - 2) * m * m - (k - 4) * m) // 2


def triangular(x: int) -> int:
    return x * (x + 1) // 2


@dataclass(frozen=True)
class PartSystem:
    """Which parts may appear, described by the index set that generates them.

    Use the classmethod constructors; ``params`` is () for squares and
    triangular, (k,) for kgonal and (h, N) for the congruence systems.
    """

    kind: str
    params: tuple = ()

    @classmethod
    def squares(cls) -> PartSystem:
        return cls(SQUARES)

    @classmethod
    def triangular(cls) -> PartSystem:
        return cls(TRIANGULAR)

    @classmethod
    def kgonal(cls, k: int) -> PartSystem:
        # k = 3 would admit the part p_3(-1) = 0
        if k < 4:
            raise KOutOfRange(f"generalized k-gonal parts need k >= 4 (got k={k})")
        return cls(KGONAL, (k,))

    @classmethod
    def congruence(cls, h: int, N: int) -> PartSystem:
        if N < 1 or 2 * abs(h) >= N:
            raise ParamsOutOfRange(f"congruence parts need |h| < N/2 (got h={h}, N={N})")
        return cls(CONGRUENCE, (h, N))

    @classmethod
    def congruence_plus(cls, h: int, N: int) -> PartSystem:
        if N < 1 or N + 2 * h <= 0:
            raise ParamsOutOfRange(f"positive-index parts need N + 2h > 0 (got h={h}, N={N})")
        return cls(CONGRUENCE_PLUS, (h, N))

    def index_part(self, s: int) -> int:
        """Part value produced by index s."""
        if self.kind == SQUARES:
            return s * s
        if self.kind == TRIANGULAR:
            return triangular(s)
        if self.kind == KGONAL:
            return polygonal(self.params[0], s)
        h, N = self.params
        return s * s * N * N + 2 * s * h * N

    def indices(self, bound: int) -> Iterator[int]:
        """Every admissible index whose part is at most bound.

        Parts grow monotonically in |s| on each side, so each side stops at
        the first part above bound.
        """
        sides = (1,) if self.kind in (TRIANGULAR, CONGRUENCE_PLUS) else (1, -1)
        for sign in sides:
            s = sign
            while self.index_part(s) <= bound:
                yield s
                s += sign

    def parts(self, bound: int) -> dict[int, int]:
        """Map part value -> number of indices producing it, for values <= bound."""
        return dict(sorted(Counter(self.index_part(s) for s in self.indices(bound)).items()))

    def label(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}{self.params}"


@dataclass(frozen=True)
class SignedCountTable:
    system: PartSystem
    values: tuple[int, ...]

    def __getitem__(self, m):
        return self.values[m]

    def __len__(self):
        return len(self.values)

    @property
    def n_max(self) -> int:
        return len(self.values) - 1


def build_signed_counts(sys: PartSystem, n_max: int) -> SignedCountTable:
    """v_0 = 1, v_m = -sum_p mu(p) v_(m-p), splitting off the first part."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    parts = list(sys.parts(n_max).items())
    v = [0] * (n_max + 1)
    v[0] = 1
    for m in range(1, n_max + 1):
        acc = 0
        for p, mult in parts:
            if p > m:
                break
            acc += mult * v[m - p]
        v[m] = -acc
    return SignedCountTable(sys, tuple(v))


def build_parity_counts(sys: PartSystem, n_max: int) -> tuple[list[int], list[int]]:
    """Unsigned counts of ordered tuples with an even / odd number of parts."""
    parts = list(sys.parts(n_max).items())
    even = [0] * (n_max + 1)
    odd = [0] * (n_max + 1)
    even[0] = 1
    for m in range(1, n_max + 1):
        e = o = 0
        for p, mult in parts:
            if p > m:
                break
            e += mult * odd[m - p]
            o += mult * even[m - p]
        even[m], odd[m] = e, o
    return even, odd


def brute_force_signed_count(sys: PartSystem, n: int, limit: int = BRUTE_FORCE_MAX_N) -> int:
    """Signed tuple count of n, enumerating the first index of every tuple.

    Works from the index set directly (no part-value multiplicities); the
    count of tuples with a given remaining sum is memoized per call.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > limit:
        raise InputTooLarge(f"brute force limited to n <= {limit} (got {n})")
    idx = list(sys.indices(n))

    @lru_cache(maxsize=None)
    def count(rest: int) -> int:
        if rest == 0:
            return 1
        total = 0
        for s in idx:
            p = sys.index_part(s)
            if p <= rest:
                total -= count(rest - p)
        return total

    return count(n)


# -- weighted left-hand sides ------------------------------------------------


def _need(counts: SignedCountTable, n: int) -> None:
    if n > counts.n_max:
        raise ValueError(f"count table only reaches {counts.n_max}, need {n}")


def weighted_lhs_squares(n: int, counts: SignedCountTable) -> int:
    """sum_{m in Z} m^2 v(n - m^2)."""
    _need(counts, n)
    total = 0
    for m in range(1, math.isqrt(n) + 1):
        total += 2 * m * m * counts[n - m * m]
    return total


def weighted_lhs_triangular_x8(n: int, counts: SignedCountTable) -> int:
    """sum_{m >= 0} (2m+1)^2 v(n - T_m), i.e. eight times the rational sum."""
    _need(counts, n)
    total, m = 0, 0
    while triangular(m) <= n:
        total += (2 * m + 1) ** 2 * counts[n - triangular(m)]
        m += 1
    return total


def weighted_lhs_kgonal_scaled(k: int, n: int, counts: SignedCountTable) -> int:
    """sum_{m in Z} (8(k-2) p_k(m) + (k-4)^2) v(n - p_k(m))."""
    if k <= 4:
        raise KOutOfRange(f"the k-gonal identity needs k > 4 (got k={k})")
    _need(counts, n)
    c = (k - 4) ** 2
    total = c * counts[n]
    for sign in (1, -1):
        m = sign
        while (p := polygonal(k, m)) <= n:
            total += (8 * (k - 2) * p + c) * counts[n - p]
            m += sign
    return total


def check_general_params(h: int, N: int) -> None:
    if N < 1 or h == 0 or 2 * abs(h) >= N:
        raise ParamsOutOfRange(
            f"need h != 0, N != +-2h and |h| < N/2 (got h={h}, N={N});"
            " for N = 2|h| use prop21_2"
        )


def congruence_weighted_sum(h: int, N: int, n: int, counts: SignedCountTable,
                            positive_only: bool = False) -> int:
    """sum over m = h (mod N), m^2 - h^2 <= n, of m^2 v(n - m^2 + h^2).

    With positive_only the sum runs over m >= 1.
    """
    _need(counts, n)
    total = 0
    hh = h * h
    for sign in (1, -1):
        j = 0 if sign == 1 else -1
        while True:
            m = h + j * N
            shift = m * m - hh
            if shift > n:
                break
            if m > 0 or (m < 0 and not positive_only):
                total += m * m * counts[n - shift]
            j += sign
    return total


def weighted_lhs_general(h: int, N: int, n: int, counts: SignedCountTable) -> int:
    check_general_params(h, N)
    return congruence_weighted_sum(h, N, n, counts)


def weighted_lhs_half(h: int, n: int, counts: SignedCountTable) -> int:
    """Positive-m sum for N = 2|h|; counts must be for congruence_plus(|h|, 2|h|)."""
    if h == 0:
        raise ParamsOutOfRange("h must be nonzero")
    h = abs(h)
    return congruence_weighted_sum(h, 2 * h, n, counts, positive_only=True)
