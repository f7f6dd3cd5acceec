"""Truncated power series in q with exact integer coefficients.

A :class:`Series` of order ``M`` stores the coefficients of ``q**0`` through
``q**(M-1)``; everything at or above ``q**M`` is unknown.  Binary operations on
series of different orders work to the smaller order.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .errors import NonIntegralQuotient, ZeroDivisor

__all__ = [
    "Series",
    "monomial",
    "add",
    "mul",
    "q_dq",
    "div_exact",
    "log_derivative",
    "product_from_exponents",
    "lambert_series",
    "pentagonal_euler",
]


class Series:
    """Immutable dense truncated power series over the integers."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        c = tuple(int(x) for x in coeffs)
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            c = c[:order] + (0,) * (order - len(c))
        self._c = c

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> Series:
        return monomial(1, 0, order)

    @property
    def order(self) -> int:
        return len(self._c)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, idx):
        return self._c[idx]

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, Series):
            return self._c == other._c
        if isinstance(other, (list, tuple)):
            return self._c == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        terms = []
        for e, c in enumerate(self._c):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            elif e == 1:
                terms.append(f"{c}*q")
            else:
                terms.append(f"{c}*q^{e}")
        terms.append(f"O(q^{self.order})")
        return " + ".join(terms)

    def valuation(self) -> int | None:
        """Lowest exponent with a nonzero coefficient, or None for zero."""
        for e, c in enumerate(self._c):
            if c:
                return e
        return None

    def is_zero(self) -> bool:
        return not any(self._c)

    def truncate(self, order: int) -> Series:
        return Series(self._c[:order], min(order, self.order))

    def shift(self, k: int) -> Series:
        """Multiply by q**k (k >= 0) or divide by q**(-k) (k < 0).

        Dividing requires the dropped low coefficients to be zero.
        """
        if k >= 0:
            return Series((0,) * k + self._c, self.order)
        k = -k
        if any(self._c[:k]):
            raise NonIntegralQuotient(f"series is not divisible by q^{k}")
        return Series(self._c[k:])

    def dilate(self, d: int, order: int | None = None) -> Series:
        """Substitute q -> q**d."""
        if order is None:
            order = self.order * d - (d - 1)
        out = [0] * order
        for e, c in enumerate(self._c):
            if e * d >= order:
                break
            out[e * d] = c
        return Series(out)

    def decimate(self, step: int) -> Series:
        """Coefficients at exponents 0, step, 2*step, ..."""
        return Series(self._c[::step])

    def scale(self, c: int) -> Series:
        return Series(c * x for x in self._c)

    def exact_scale_div(self, c: int) -> Series:
        out = []
        for e, x in enumerate(self._c):
            qt, r = divmod(x, c)
            if r:
                raise NonIntegralQuotient(f"coefficient {x} at q^{e} is not divisible by {c}")
            out.append(qt)
        return Series(out)

    def __neg__(self):
        return Series(-x for x in self._c)

    def __add__(self, other):
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, -_coerce(other, self.order))

    def __rsub__(self, other):
        return add(_coerce(other, self.order), -self)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return div_exact(Series.one(self.order), self ** (-n))
        result = Series.one(self.order)
        base = self
        while n:
            if n & 1:
                result = mul(result, base)
            n >>= 1
            if n:
                base = mul(base, base)
        return result


def _coerce(x, order: int) -> Series:
    if isinstance(x, Series):
        return x
    if isinstance(x, int):
        return monomial(x, 0, order)
    raise TypeError(f"cannot use {type(x).__name__} as a series")


def monomial(c: int, e: int, M: int) -> Series:
    """c * q**e truncated to order M."""
    if e < 0 or M <= 0:
        raise ValueError("need e >= 0 and M > 0")
    out = [0] * M
    if e < M:
        out[e] = c
    return Series(out)


def add(a: Series, b: Series) -> Series:
    m = min(a.order, b.order)
    return Series(x + y for x, y in zip(a.coeffs[:m], b.coeffs[:m]))


def _nonzero_terms(c: Sequence[int]) -> list[tuple[int, int]]:
    return [(e, x) for e, x in enumerate(c) if x]


def mul(a: Series, b: Series) -> Series:
    """Cauchy product, truncated at the smaller order.

    Loops over the nonzero terms of the sparser factor, which keeps products
    with theta series (a handful of nonzero terms) linear in the order.
    """
    m = min(a.order, b.order)
    ta = _nonzero_terms(a.coeffs[:m])
    tb = _nonzero_terms(b.coeffs[:m])
    if len(ta) > len(tb):
        ta, tb = tb, ta
    dense = [0] * m
    for e, x in tb:
        dense[e] = x
    out = [0] * m
    for e, x in ta:
        if x == 1:
            for i in range(e, m):
                out[i] += dense[i - e]
        else:
            for i in range(e, m):
                d = dense[i - e]
                if d:
                    out[i] += x * d
    return Series(out)


def q_dq(a: Series) -> Series:
    """Apply q*d/dq termwise: n*a_n."""
    return Series(n * x for n, x in enumerate(a.coeffs))


def div_exact(a: Series, b: Series) -> Series:
    """The series x with a = b*x, by long division over the integers.

    With v the valuation of b, the result has order min(a.order, b.order) - v.
    Raises NonIntegralQuotient when a coefficient division is inexact or a is
    not divisible by q**v, and ZeroDivisor when b vanishes below its order.
    """
    v = b.valuation()
    if v is None:
        raise ZeroDivisor("division by the zero series")
    m = min(a.order, b.order)
    if any(a.coeffs[:v]):
        raise NonIntegralQuotient(f"dividend has valuation below {v}")
    num = a.coeffs[v:m]
    den = b.coeffs[v:m]
    lead = den[0]
    tail = _nonzero_terms(den)[1:]
    out: list[int] = []
    for n, x in enumerate(num):
        acc = x
        for j, d in tail:
            if j > n:
                break
            acc -= d * out[n - j]
        if lead == 1:
            out.append(acc)
            continue
        qt, r = divmod(acc, lead)
        if r:
            raise NonIntegralQuotient(
                f"coefficient {acc} at q^{n + v} not divisible by leading coefficient {lead}"
            )
        out.append(qt)
    return Series(out)


def log_derivative(a: Series) -> Series:
    """q*a'/a as a series: valuation plus q*u'/u where a = q**v * u."""
    v = a.valuation()
    if v is None:
        raise ZeroDivisor("logarithmic derivative of the zero series")
    u = a.shift(-v)
    out = div_exact(q_dq(u), u)
    return out + v


def _times_binomial(c: list[int], n: int, sign: int) -> None:
    """In place: c *= (1 + sign*q**n)."""
    M = len(c)
    if n >= M:
        return
    if sign > 0:
        c[n:] = [x + y for x, y in zip(c[n:], c[: M - n])]
    else:
        c[n:] = [x - y for x, y in zip(c[n:], c[: M - n])]


def _over_one_minus(c: list[int], n: int) -> None:
    """In place: c /= (1 - q**n), i.e. c_i += c_{i-n} in increasing i."""
    M = len(c)
    for start in range(n, M, n):
        stop = min(start + n, M)
        c[start:stop] = [x + y for x, y in zip(c[start:stop], c[start - n : stop - n])]


def product_from_exponents(a: Callable[[int], int], M: int) -> Series:
    """prod_{n=1}^{M-1} (1 - q**n)**(-a(n)) truncated to order M.

    ``a`` maps each n >= 1 to an integer exponent.
    """
    if M <= 0:
        raise ValueError("order must be positive")
    c = [0] * M
    c[0] = 1
    for n in range(1, M):
        e = a(n)
        if e > 0:
            for _ in range(e):
                _over_one_minus(c, n)
        elif e < 0:
            for _ in range(-e):
                _times_binomial(c, n, -1)
    return Series(c)


def lambert_series(w: Callable[[int], int], M: int) -> Series:
    """sum_{n=1}^{M-1} (sum_{d|n} d*w(d)) q**n; the constant term is 0."""
    if M <= 0:
        raise ValueError("order must be positive")
    out = [0] * M
    for d in range(1, M):
        wd = w(d)
        if wd:
            dw = d * wd
            for n in range(d, M, d):
                out[n] += dw
    return Series(out)


def pentagonal_euler(M: int) -> Series:
    """prod_{n>=1} (1 - q**n) via the pentagonal number theorem."""
    out = [0] * M
    j = 0
    while True:
        hit = False
        for k in ((j, -j) if j else (0,)):
            e = k * (3 * k - 1) // 2
            if e < M:
                out[e] += -1 if k % 2 else 1
                hit = True
        if not hit:
            break
        j += 1
    return Series(out)
