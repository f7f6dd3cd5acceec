"""Unary theta functions sum_{n = h mod N} q^(n^2) and their product forms."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from . import arith
from .report import IdentityReport, compare_series
from .series import Series, div_exact, mul, pentagonal_euler, product_from_exponents

GENERIC = "generic"
H_ZERO = "h_zero"
HALF = "half"


@dataclass(frozen=True)
class ThetaParams:
    """(h, N) with h reduced into (-N/2, N/2]."""

    h: int
    N: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be a positive integer")
        r = self.h % self.N
        if 2 * r > self.N:
            r -= self.N
        object.__setattr__(self, "h", r)

    @property
    def case(self) -> str:
        if self.h == 0:
            return H_ZERO
        if 2 * self.h == self.N:
            return HALF
        return GENERIC

    @property
    def doubled(self) -> bool:
        """True when h and -h are both minimal in the class (N = 2|h|)."""
        return self.case == HALF

    def as_dict(self) -> dict:
        return {"h": self.h, "N": self.N}


def _params(p, N=None) -> ThetaParams:
    if isinstance(p, ThetaParams):
        return p
    if N is None:
        h, N = p
        return ThetaParams(h, N)
    return ThetaParams(p, N)


@dataclass(frozen=True)
class ExponentTable:
    """n -> a_n with theta = (1 + delta) q^(h^2) prod (1 - q^n)^(-a_n)."""

    params: ThetaParams
    weights: arith.WeightTable

    @property
    def period(self) -> int:
        return self.weights.period

    def __call__(self, n: int) -> int:
        return self.weights(n)

    __getitem__ = __call__


def exponent_table(p: ThetaParams) -> ExponentTable:
    p = _params(p)
    if p.case == H_ZERO:
        w = arith.weights("c", p.N)
    elif p.case == HALF:
        w = arith.weights("f", p.h)
    else:
        w = arith.weights("e", p.h, p.N)
    return ExponentTable(p, w)


def theta_series(p: ThetaParams, M: int) -> Series:
    """Coefficient of q^m counts n = h mod N with n^2 = m, for m < M."""
    p = _params(p)
    if M < 1:
        raise ValueError("order must be positive")
    out = [0] * M
    J = math.isqrt(M) // p.N + 2
    for j in range(-J, J + 1):
        n = p.h + j * p.N
        if n * n < M:
            out[n * n] += 1
    return Series(out)


def _mul_one_plus(c: list[int], a: int, sign: int) -> None:
    M = len(c)
    if a >= M:
        return
    if sign > 0:
        c[a:] = [x + y for x, y in zip(c[a:], c[: M - a])]
    else:
        c[a:] = [x - y for x, y in zip(c[a:], c[: M - a])]


def triple_product_series(p: ThetaParams, M: int) -> Series:
    """q^(h^2) prod_n (1+q^((2n-1)N^2+2hN)) (1+q^((2n-1)N^2-2hN)) (1-q^(2nN^2))."""
    p = _params(p)
    h, N = p.h, p.N
    base = h * h
    if base >= M:
        return Series.zero(M)
    order = M - base
    c = [0] * order
    c[0] = 1
    scalar = 1
    n = 1
    while True:
        odd = (2 * n - 1) * N * N
        a1, a2, a3 = odd + 2 * h * N, odd - 2 * h * N, 2 * n * N * N
        if min(a1, a2, a3) >= order:
            break
        for a in (a1, a2):
            if a == 0:
                scalar *= 2
            else:
                _mul_one_plus(c, a, +1)
        _mul_one_plus(c, a3, -1)
        n += 1
    return Series([0] * base + [scalar * x for x in c])


def exponent_product_series(p: ThetaParams, M: int) -> Series:
    """(1 + delta_{N=2|h|}) q^(h^2) prod_{n>=1} (1 - q^n)^(-a_n)."""
    p = _params(p)
    base = p.h * p.h
    if base >= M:
        return Series.zero(M)
    prod = product_from_exponents(exponent_table(p), M - base)
    if p.doubled:
        prod = prod.scale(2)
    return Series([0] * base + list(prod))


def triple_product_exponents(p: ThetaParams, n_max: int) -> list[int]:
    """a_1..a_n_max read off the triple product factor by factor.

    (1 + q^a) = (1 - q^(2a)) / (1 - q^a) contributes +1 at a and -1 at 2a;
    (1 - q^a) contributes -1 at a.  Independent of the closed-form tables.
    """
    p = _params(p)
    h, N = p.h, p.N
    a = [0] * (n_max + 1)

    def bump(e, w):
        if 0 < e <= n_max:
            a[e] += w

    n = 1
    while True:
        odd = (2 * n - 1) * N * N
        a1, a2, a3 = odd + 2 * h * N, odd - 2 * h * N, 2 * n * N * N
        if min(x for x in (a1, a2, a3) if x > 0) > n_max:
            break
        for x in (a1, a2):
            if x > 0:
                bump(x, 1)
                bump(2 * x, -1)
        bump(a3, -1)
        n += 1
    return a[1:]


def verify_product_formula(p: ThetaParams, M: int) -> IdentityReport:
    """theta_series == triple_product_series == exponent product, to order M."""
    p = _params(p)
    t0 = time.perf_counter()
    theta = theta_series(p, M)
    failures = compare_series(theta, triple_product_series(p, M))
    failures += compare_series(theta, exponent_product_series(p, M))
    return IdentityReport.build("prod_formula", p.as_dict(), (0, M - 1), failures, t0)


def eta_factor(d: int, M: int) -> Series:
    """prod_{n>=1} (1 - q^(dn)) to order M."""
    return pentagonal_euler(-(-M // d)).dilate(d, M)


def verify_theta_eta_quotient(M: int) -> IdentityReport:
    """theta = prod (1-q^2n)^5 / ((1-q^4n)^2 (1-q^n)^2), checked three ways.

    Against the c-exponent product, against the quotient assembled from
    pentagonal-series eta factors, and multiplicatively (no division) as
    theta * E1^2 * E4^2 == E2^5.
    """
    if M < 1:
        raise ValueError("order must be positive")
    t0 = time.perf_counter()
    theta = theta_series(ThetaParams(0, 1), M)
    failures = compare_series(theta, product_from_exponents(arith.weights("c", 1), M))
    e1, e2, e4 = eta_factor(1, M), eta_factor(2, M), eta_factor(4, M)
    den = mul(mul(e4, e4), mul(e1, e1))
    num = e2 ** 5
    failures += compare_series(theta, div_exact(num, den))
    failures += compare_series(mul(theta, den), num)
    return IdentityReport.build("eta_quotient", {}, (0, M - 1), failures, t0)
