"""Sweeps checking the weighted representation identities.

Each verifier computes the weighted signed-count sum from ``counts`` and the
divisor-weighted sum from ``arith`` and records every n where they disagree.
The triangular and k-gonal identities have rational left-hand sides; both
sides are multiplied by 8 (resp. 8(k-2)) so everything stays in the integers.
"""

from __future__ import annotations

import time
from functools import lru_cache

from . import arith, counts
from .arith import divisors, two_adic_split
from .counts import PartSystem, build_signed_counts
from .errors import InputTooLarge, KOutOfRange, NonIntegralExponent, NonIntegralQuotient, ParamsOutOfRange
from .report import Failure, IdentityReport, compare_series
from .series import lambert_series, log_derivative, product_from_exponents
from .theta import ThetaParams, exponent_table, theta_series, verify_product_formula, verify_theta_eta_quotient

KM_MAX_N = 40

# (identity, params, n_max or order) for the full acceptance run
ACCEPTANCE_MATRIX = (
    [("thm1", {}, 2000), ("thm2", {}, 2000)]
    + [("thm3", {"k": k}, 500) for k in range(5, 13)]
    + [("thm4", {"h": h, "N": N}, 1000) for h, N in ((1, 3), (1, 4), (1, 5), (2, 5), (2, 7), (3, 7))]
    + [("prop21_2", {"h": h}, 1000) for h in (1, 2, 3)]
    + [("prod_formula", {"h": h, "N": N}, 2000) for h, N in ((0, 1), (1, 3), (1, 4), (2, 5), (1, 2), (2, 4))]
    + [("eta_quotient", {}, 2000)]
    + [("lambert", {"h": h, "N": N}, 1000) for h, N in ((0, 1), (1, 3), (1, 4), (2, 5), (1, 2), (2, 4))]
    + [("exponent_roundtrip", {"h": h, "N": N}, 501) for h, N in ((0, 1), (1, 3), (1, 4), (2, 5), (1, 2), (2, 4))]
    + [("km_recursion", {}, 30)]
)


# -- divisor-sum sides -------------------------------------------------------


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError("the identities are stated for n >= 1")


def rhs_thm1(n: int) -> int:
    _check_n(n)
    return arith.weights("c", 1).divisor_sum(n)


def rhs_thm1_2adic(n: int) -> int:
    """(2 - 6[t > 0]) sigma(n') - 4 sigma(n/4), with n = 2^t n'."""
    _check_n(n)
    t, odd = two_adic_split(n)
    quarter = arith.sigma(n // 4) if n % 4 == 0 else 0
    return (2 - 6 * (t > 0)) * arith.sigma(odd) - 4 * quarter


def rhs_thm2(n: int) -> int:
    _check_n(n)
    return sum(d if d % 2 else -d for d in divisors(n))


def rhs_thm3(k: int, n: int) -> int:
    _check_n(n)
    return arith.weights("e_prime", k).divisor_sum(n)


def rhs_thm4(h: int, N: int, n: int) -> int:
    _check_n(n)
    counts.check_general_params(h, N)
    return arith.weights("e", h, N).divisor_sum(n)


def rhs_prop21_2(h: int, n: int) -> int:
    _check_n(n)
    return arith.weights("f", abs(h)).divisor_sum(n)


def e_weight_direct(h: int, N: int, d: int) -> int:
    """e_d straight from the congruence conditions, counting each match."""
    N2 = N * N
    a, b = N2 + 2 * h * N, 2 * N2 + 4 * h * N
    plus = sum((d - r) % (2 * N2) == 0 for r in (a, -a))
    minus = sum((d - r) % (4 * N2) == 0 for r in (0, 2 * N2, b, -b))
    return plus - minus


def rhs_thm4_direct(h: int, N: int, n: int) -> int:
    return sum(d * e_weight_direct(h, N, d) for d in divisors(n))


# -- left-hand sides -----------------------------------------------------------


@lru_cache(maxsize=64)
def signed_counts(system: PartSystem, n_max: int):
    return build_signed_counts(system, n_max)


def _system_for(identity: str, params: dict) -> PartSystem:
    if identity in ("thm1", "thm1_2adic"):
        return PartSystem.squares()
    if identity == "thm2":
        return PartSystem.triangular()
    if identity == "thm3":
        return PartSystem.kgonal(params["k"])
    if identity == "thm4":
        return PartSystem.congruence(params["h"], params["N"])
    if identity == "prop21_2":
        h = abs(params["h"])
        return PartSystem.congruence_plus(h, 2 * h)
    raise ValueError(f"no part system for {identity!r}")


def validate(identity: str, params: dict) -> dict:
    """Check and normalize parameters; raises ParamsOutOfRange/KOutOfRange."""
    identity = identity.replace("-", "_")
    if identity == "thm3":
        k = params.get("k")
        if k is None:
            raise KOutOfRange("thm3 needs k")
        if k <= 4:
            raise KOutOfRange(f"the k-gonal identity holds only for k > 4 (got k={k})")
        return {"k": k}
    if identity == "thm4":
        h, N = params.get("h"), params.get("N")
        if h is None or N is None:
            raise ParamsOutOfRange("thm4 needs h and N")
        counts.check_general_params(h, N)
        return {"h": h, "N": N}
    if identity == "prop21_2":
        h = params.get("h")
        if not h:
            raise ParamsOutOfRange("prop21_2 needs a nonzero h")
        return {"h": abs(h)}
    if identity in ("prod_formula", "lambert", "exponent_roundtrip"):
        h, N = params.get("h"), params.get("N")
        if h is None or N is None:
            raise ParamsOutOfRange(f"{identity} needs h and N")
        if N < 1:
            raise ParamsOutOfRange("N must be positive")
        p = ThetaParams(h, N)
        return {"h": p.h, "N": p.N}
    if identity in ("thm1", "thm1_2adic", "thm2", "eta_quotient", "km_recursion"):
        return {}
    raise ValueError(f"unknown identity {identity!r}")


def _lhs(identity: str, params: dict, n: int, table) -> int:
    if identity in ("thm1", "thm1_2adic"):
        return counts.weighted_lhs_squares(n, table)
    if identity == "thm2":
        return counts.weighted_lhs_triangular_x8(n, table)
    if identity == "thm3":
        return counts.weighted_lhs_kgonal_scaled(params["k"], n, table)
    if identity == "thm4":
        return counts.weighted_lhs_general(params["h"], params["N"], n, table)
    return counts.weighted_lhs_half(params["h"], n, table)


def _rhs(identity: str, params: dict, n: int) -> int:
    if identity == "thm1":
        return rhs_thm1(n)
    if identity == "thm1_2adic":
        return rhs_thm1_2adic(n)
    if identity == "thm2":
        return 8 * rhs_thm2(n)
    if identity == "thm3":
        return 8 * (params["k"] - 2) * rhs_thm3(params["k"], n)
    if identity == "thm4":
        return rhs_thm4(params["h"], params["N"], n)
    return rhs_prop21_2(params["h"], n)


def verify_identity(identity: str, params: dict | None = None, n_max: int = 100) -> IdentityReport:
    """Compare both sides for 1 <= n <= n_max and collect every mismatch.

    Also dispatches the series-level checks (prod_formula, eta_quotient,
    lambert, exponent_roundtrip, km_recursion), for which n_max is the order
    or bound those take.
    """
    identity = identity.replace("-", "_")
    params = validate(identity, dict(params or {}))
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if identity == "prod_formula":
        return verify_product_formula(ThetaParams(params["h"], params["N"]), n_max)
    if identity == "eta_quotient":
        return verify_theta_eta_quotient(n_max)
    if identity == "lambert":
        return verify_lambert(params["h"], params["N"], n_max)
    if identity == "exponent_roundtrip":
        return extract_exponents_roundtrip(params["h"], params["N"], n_max)
    if identity == "km_recursion":
        return km_recursion_check(n_max)

    t0 = time.perf_counter()
    table = signed_counts(_system_for(identity, params), n_max)
    failures = []
    for n in range(1, n_max + 1):
        lhs, rhs = _lhs(identity, params, n, table), _rhs(identity, params, n)
        if lhs != rhs:
            failures.append(Failure(n, lhs, rhs))
        elif identity == "thm1":
            other = rhs_thm1_2adic(n)
            if other != rhs:
                failures.append(Failure(n, rhs, other))
    return IdentityReport.build(identity, params, (1, n_max), failures, t0)


# -- series-level checks -----------------------------------------------------


def verify_lambert(h: int, N: int, M: int) -> IdentityReport:
    """q theta'/theta against h^2 + sum_n (sum_{d|n} d a_d) q^n, to order M."""
    p = ThetaParams(h, N)
    t0 = time.perf_counter()
    try:
        lhs = log_derivative(theta_series(p, M))
    except NonIntegralQuotient as exc:
        return IdentityReport.build("lambert", p.as_dict(), (0, M - 1), [Failure(-1, 0, 0)], t0,
                                    {"error": str(exc)})
    rhs = lambert_series(exponent_table(p), M) + p.h * p.h
    return IdentityReport.build("lambert", p.as_dict(), (0, M - 1), compare_series(lhs, rhs), t0)


def recover_exponents(h: int, N: int, M: int) -> list[int]:
    """a_1..a_(M-1) from the theta coefficients alone (log derivative, then
    Moebius inversion of the divisor sums)."""
    p = ThetaParams(h, N)
    ld = log_derivative(theta_series(p, M + p.h * p.h))
    if ld[0] != p.h * p.h:
        raise NonIntegralExponent(f"constant term {ld[0]} is not h^2 = {p.h * p.h}")
    return arith.invert_divisor_sum(list(ld[1:M]))


def extract_exponents_roundtrip(h: int, N: int, M: int) -> IdentityReport:
    p = ThetaParams(h, N)
    t0 = time.perf_counter()
    table = exponent_table(p)
    try:
        got = recover_exponents(p.h, p.N, M)
    except (NonIntegralExponent, NonIntegralQuotient) as exc:
        return IdentityReport.build("exponent_roundtrip", p.as_dict(), (1, M - 1),
                                    [Failure(-1, 0, 0)], t0, {"error": str(exc)})
    failures = [Failure(n, a, table(n)) for n, a in enumerate(got, start=1) if a != table(n)]
    return IdentityReport.build("exponent_roundtrip", p.as_dict(), (1, M - 1), failures, t0,
                                {"recovered": [str(a) for a in got]})


# -- multinomial recursion ---------------------------------------------------


def multinomial_sum(n: int, c) -> int:
    """S(n) = sum over nu_1 + 2nu_2 + ... + (n-1)nu_(n-1) = n of
    (-1)^(sum nu) prod binom(c_i, nu_i)."""
    total = 0
    for nu in arith.enumerate_partitions(n, n - 1):
        term = -1 if sum(nu) % 2 else 1
        for i, v in enumerate(nu, start=1):
            if v:
                term *= arith.gen_binomial(c(i), v)
                if not term:
                    break
        total += term
    return total


def km_rows(n_max: int) -> list[dict]:
    """Per-n values S(n), the truncated-product coefficient, u_n, c_n and 2a(n) - S(n)."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if n_max > KM_MAX_N:
        raise InputTooLarge(f"multinomial sum limited to n <= {KM_MAX_N} (got {n_max})")
    c = arith.weights("c", 1)
    theta = theta_series(ThetaParams(0, 1), n_max + 1)
    # prod_{i>=1} (1 - q^i)^(c_i); coefficient n only sees factors i <= n
    full = product_from_exponents(lambda i: -c(i), n_max + 1)
    rows = []
    for n in range(1, n_max + 1):
        s = multinomial_sum(n, c)
        partial = product_from_exponents(lambda i: -c(i) if i < n else 0, n + 1)[n]
        u = full[n]
        rows.append({
            "n": n,
            "S": s,
            "partial_product": partial,
            "u": u,
            "c_recovered": s - u,
            "c": c(n),
            "two_a_minus_S": 2 * theta[n] - s,
        })
    return rows


def km_recursion_check(n_max: int) -> IdentityReport:
    """S(n) equals the coefficient of q^n in prod_{i<n} (1-q^i)^(c_i), and
    c_n = S(n) - u_n with u_n from the full product.

    2a(n) - S(n) is recorded for comparison only.
    """
    t0 = time.perf_counter()
    rows = km_rows(n_max)
    failures = []
    for r in rows:
        if r["S"] != r["partial_product"]:
            failures.append(Failure(r["n"], r["S"], r["partial_product"]))
        if r["c_recovered"] != r["c"]:
            failures.append(Failure(r["n"], r["c_recovered"], r["c"]))
    extra = {"two_a_minus_S": [str(r["two_a_minus_S"]) for r in rows],
             "S": [str(r["S"]) for r in rows]}
    return IdentityReport.build("km_recursion", {}, (1, n_max), failures, t0, extra)


def run_matrix(entries=ACCEPTANCE_MATRIX) -> list[IdentityReport]:
    return [verify_identity(i, p, n) for i, p, n in entries]


__all__ = [
    "ACCEPTANCE_MATRIX",
    "rhs_thm1", "rhs_thm1_2adic", "rhs_thm2", "rhs_thm3", "rhs_thm4", "rhs_prop21_2",
    "rhs_thm4_direct", "e_weight_direct",
    "verify_identity", "verify_lambert", "extract_exponents_roundtrip", "recover_exponents",
    "multinomial_sum", "km_rows", "km_recursion_check", "run_matrix",
]
