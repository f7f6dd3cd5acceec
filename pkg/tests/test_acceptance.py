"""Exit criteria. Every identity is exact, so every comparison is equality."""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from weightedreps import arith
from weightedreps.counts import PartSystem, brute_force_signed_count, build_signed_counts
from weightedreps.identities import (
    extract_exponents_roundtrip,
    km_rows,
    verify_identity,
    verify_lambert,
)
from weightedreps.series import Series, div_exact
from weightedreps.theta import ThetaParams, theta_series, verify_product_formula, verify_theta_eta_quotient

THETA_SET = [(0, 1), (1, 3), (1, 4), (2, 5), (1, 2), (2, 4)]
THM4_SET = [(1, 3), (1, 4), (1, 5), (2, 5), (2, 7), (3, 7)]


@pytest.fixture
def criterion(request):
    t0 = time.perf_counter()

    def record(number, title, ok, detail=""):
        ms = int((time.perf_counter() - t0) * 1000)
        status = "PASS" if ok else "FAIL"
        line = f"criterion {number}: {status} {title} ({ms} ms){' - ' + detail if detail else ''}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def failed(reports):
    return [f"{r.identity}{r.params}: n={[f.n for f in r.failures[:5]]}" for r in reports if not r.passed]


def test_criterion_01_squares(criterion):
    r = verify_identity("thm1", {}, 2000)
    r2 = verify_identity("thm1_2adic", {}, 2000)
    ok = r.passed and r2.passed
    assert criterion(1, "sums of squares, both divisor forms, n <= 2000", ok, "; ".join(failed([r, r2])))


def test_criterion_02_triangular(criterion):
    r = verify_identity("thm2", {}, 2000)
    assert criterion(2, "triangular numbers (x8), n <= 2000", r.passed, "; ".join(failed([r])))


def test_criterion_03_kgonal(criterion):
    reps = [verify_identity("thm3", {"k": k}, 500) for k in range(5, 13)]
    ok = all(r.passed for r in reps)
    assert criterion(3, "k-gonal (x8(k-2)), k = 5..12, n <= 500", ok, "; ".join(failed(reps)))


def test_criterion_04_congruence_classes(criterion):
    reps = [verify_identity("thm4", {"h": h, "N": N}, 1000) for h, N in THM4_SET]
    ok = all(r.passed for r in reps)
    assert criterion(4, "congruence classes, 6 (h,N), n <= 1000", ok, "; ".join(failed(reps)))


def test_criterion_05_half_case(criterion):
    reps = [verify_identity("prop21_2", {"h": h}, 1000) for h in (1, 2, 3)]
    ok = all(r.passed for r in reps)
    assert criterion(5, "N = 2|h| positive-index form, h = 1..3, n <= 1000", ok, "; ".join(failed(reps)))


def test_criterion_06_product_formulas(criterion):
    reps = [verify_product_formula(ThetaParams(h, N), 2000) for h, N in THETA_SET]
    reps.append(verify_theta_eta_quotient(2000))
    ok = all(r.passed for r in reps)
    assert criterion(6, "theta = triple product = exponent product, eta quotient, M = 2000", ok,
                     "; ".join(failed(reps)))


def test_criterion_07_lambert(criterion):
    reps = [verify_lambert(h, N, 1000) for h, N in THETA_SET]
    ok = all(r.passed for r in reps)
    assert criterion(7, "log derivative = h^2 + Lambert series, M = 1000", ok, "; ".join(failed(reps)))


def _oracle_systems():
    return (
        [PartSystem.squares(), PartSystem.triangular()]
        + [PartSystem.kgonal(k) for k in range(5, 13)]
        + [PartSystem.congruence(h, N) for h, N in THM4_SET]
        + [PartSystem.congruence_plus(h, 2 * h) for h in (1, 2, 3)]
    )


def _inverse_theta(h, N, order):
    p = ThetaParams(h, N)
    u = theta_series(p, order + p.h * p.h).shift(-p.h * p.h)
    if p.case == "half":
        u = u.exact_scale_div(2)
    return div_exact(Series.one(u.order), u)


def test_criterion_08_oracle_equivalence(criterion):
    bad = []
    for s in _oracle_systems():
        dp = build_signed_counts(s, 25).values
        if [brute_force_signed_count(s, n) for n in range(26)] != list(dp):
            bad.append(f"brute {s.label()}")
    n = 500
    native = [(PartSystem.squares(), (0, 1), 1)]
    native += [(PartSystem.congruence(h, N), (h, N), 1) for h, N in THM4_SET]
    native += [(PartSystem.congruence_plus(h, 2 * h), (h, 2 * h), 1) for h in (1, 2, 3)]
    native += [(PartSystem.triangular(), (1, 2), 8)]
    native += [(PartSystem.kgonal(k), (4 - k, 2 * (k - 2)), 8 * (k - 2)) for k in range(5, 13)]
    for s, hN, step in native:
        inv = _inverse_theta(*hN, step * n + 1).decimate(step)
        if list(inv) != list(build_signed_counts(s, n).values):
            bad.append(f"series {s.label()}")
    assert criterion(8, "brute force = DP (n <= 25), DP = 1/theta (n <= 500)", not bad, ", ".join(bad))


def test_criterion_09_exponent_roundtrip(criterion):
    reps = [extract_exponents_roundtrip(h, N, 501) for h, N in THETA_SET]
    ok = all(r.passed for r in reps)
    assert criterion(9, "exponent tables recovered from theta coefficients, n <= 500", ok,
                     "; ".join(failed(reps)))


def test_criterion_10_km_cancellation(criterion):
    rows = km_rows(30)
    c = arith.c_weights(1)
    ok_i = all(r["S"] == r["partial_product"] for r in rows)
    ok_ii = [r["c_recovered"] for r in rows] == [c(n) for n in range(1, 31)]
    periodic = [r["c_recovered"] for r in rows] == ([2, -3, 2, -1] * 8)[:30]
    biggest = max(abs(r["S"]) for r in rows)
    ok = ok_i and ok_ii and periodic
    assert criterion(10, "multinomial sum cancellation, n <= 30", ok, f"max |S(n)| = {biggest}")
