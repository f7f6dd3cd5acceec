import pytest

from weightedreps import arith
from weightedreps.errors import InputTooLarge, KOutOfRange, ParamsOutOfRange
from weightedreps.identities import (
    e_weight_direct,
    extract_exponents_roundtrip,
    km_recursion_check,
    km_rows,
    multinomial_sum,
    rhs_prop21_2,
    rhs_thm1,
    rhs_thm1_2adic,
    rhs_thm2,
    rhs_thm3,
    rhs_thm4,
    rhs_thm4_direct,
    verify_identity,
    verify_lambert,
)
from weightedreps.theta import ThetaParams, theta_series, triple_product_exponents


def test_rhs_thm1_forms():
    assert rhs_thm1(1) == rhs_thm1_2adic(1) == 2
    assert rhs_thm1(4) == rhs_thm1_2adic(4) == -8
    assert rhs_thm1(2) == rhs_thm1_2adic(2) == -4
    assert all(rhs_thm1(n) == rhs_thm1_2adic(n) for n in range(1, 2001))


def test_rhs_examples():
    assert rhs_thm2(2) == -1
    assert rhs_thm3(5, 1) == 1
    assert rhs_thm4(1, 3, 3) == 3
    assert rhs_prop21_2(1, 8) == 8
    assert rhs_prop21_2(2, 32) == 32


def test_rhs_param_errors():
    with pytest.raises(ParamsOutOfRange):
        rhs_thm4(1, 2, 5)
    with pytest.raises(KOutOfRange):
        rhs_thm3(4, 5)
    with pytest.raises(ValueError):
        rhs_thm1(0)


@pytest.mark.parametrize("h,N", [(1, 3), (1, 4), (1, 5), (2, 5), (2, 7), (3, 7), (-1, 6), (-4, 12)])
def test_rhs_thm4_table_vs_raw_conditions(h, N):
    for n in range(1, 501):
        assert rhs_thm4(h, N, n) == rhs_thm4_direct(h, N, n)


def test_h_zero_multiplicity_reading_gives_c():
    # counting the congruence classes with multiplicity at h = 0 reproduces c
    for N in (1, 2, 3):
        c = arith.c_weights(N)
        assert all(e_weight_direct(0, N, d) == c(d) for d in range(1, 8 * N * N))


@pytest.mark.parametrize("k", range(5, 13))
def test_e_prime_is_rescaled_e(k):
    # e'_d = a_{8(k-2)d} for theta_{4-k, 2(k-2)}, read off the triple product
    s = 8 * (k - 2)
    a = triple_product_exponents(ThetaParams(4 - k, 2 * (k - 2)), s * 40)
    w = arith.e_prime_weights(k)
    assert [a[s * d - 1] for d in range(1, 41)] == [w(d) for d in range(1, 41)]
    assert all(a[n - 1] == 0 for n in range(1, s * 40 + 1) if n % s)


def test_k4_case_list_with_multiplicity_is_c_prime():
    # the k-gonal case list at k = 4, counted with multiplicity, is c'
    K = 2
    for d in range(1, 40):
        plus = sum((d - r) % K == 0 for r in (1, -1))
        minus = sum((d - r) % (2 * K) == 0 for r in (0, K, 2, -2))
        assert plus - minus == arith.c_prime_weights()(d)


@pytest.mark.parametrize("ident,params,n_max", [
    ("thm1", {}, 300),
    ("thm1_2adic", {}, 300),
    ("thm2", {}, 300),
    ("thm3", {"k": 5}, 200),
    ("thm3", {"k": 9}, 200),
    ("thm4", {"h": 1, "N": 3}, 300),
    ("thm4", {"h": -2, "N": 7}, 300),
    ("thm4", {"h": -1, "N": 6}, 300),
    ("prop21_2", {"h": 2}, 300),
    ("prop21_2", {"h": -1}, 300),
])
def test_verify_identity_passes(ident, params, n_max):
    r = verify_identity(ident, params, n_max)
    assert r.passed, r.failures[:5]
    assert r.range == (1, n_max)


def test_verify_identity_param_errors():
    with pytest.raises(KOutOfRange):
        verify_identity("thm3", {"k": 4}, 10)
    with pytest.raises(KOutOfRange):
        verify_identity("thm3", {"k": 3}, 10)
    with pytest.raises(ParamsOutOfRange):
        verify_identity("thm4", {"h": 1, "N": 2}, 10)
    with pytest.raises(ParamsOutOfRange):
        verify_identity("thm4", {"h": 0, "N": 5}, 10)
    with pytest.raises(ValueError):
        verify_identity("thm9", {}, 10)


def test_wrong_weights_are_caught(monkeypatch):
    # break c_4 and the sweep must report exactly the multiples of 4
    import weightedreps.identities as ids

    good = arith.weights("c", 1)
    bad = arith.WeightTable("c", {}, 4, (0, 2, -3, 2))
    monkeypatch.setattr(ids.arith, "weights", lambda kind, *a: bad if kind == "c" else good)
    r = ids.verify_identity("thm1", {}, 40)
    assert r.status == "fail"
    assert {f.n for f in r.failures} == set(range(4, 41, 4))


@pytest.mark.parametrize("hN", [(0, 1), (1, 2), (1, 3)])
def test_verify_lambert(hN):
    assert verify_lambert(*hN, 500).passed


def test_roundtrip_recovers_tables():
    r = extract_exponents_roundtrip(0, 1, 200)
    assert r.passed
    assert r.extra["recovered"][:8] == ["2", "-3", "2", "-1", "2", "-3", "2", "-1"]
    assert extract_exponents_roundtrip(1, 3, 200).passed
    r = extract_exponents_roundtrip(1, 2, 200)
    assert r.passed and r.extra["recovered"][7] == "1" and r.extra["recovered"][15] == "-1"


def test_multinomial_sum_small():
    c = arith.weights("c", 1)
    assert multinomial_sum(1, c) == 0
    # n = 2: only nu_1 = 2, giving binom(2, 2)
    assert multinomial_sum(2, c) == 1
    # n = 3: (3,0) -> -binom(2,3) = 0 and (1,1) -> binom(2,1) binom(-3,1) = -6
    assert multinomial_sum(3, c) == -6


def test_km_rows():
    rows = km_rows(4)
    assert rows[0]["u"] == -2 and rows[0]["c_recovered"] == 2
    assert rows[3]["c_recovered"] == -1
    assert all(r["S"] == r["partial_product"] for r in rows)


def test_km_recursion_periodic():
    r = km_recursion_check(30)
    assert r.passed
    rows = km_rows(30)
    assert [row["c_recovered"] for row in rows] == [2, -3, 2, -1] * 7 + [2, -3]
    # recorded but not asserted against c_n
    theta = theta_series(ThetaParams(0, 1), 31)
    assert r.extra["two_a_minus_S"][0] == str(2 * theta[1] - rows[0]["S"])
    with pytest.raises(InputTooLarge):
        km_rows(100)
