"""Tests for the exact truncated-series ring."""

from fractions import Fraction as Fr

import pytest

from cylq.series import (
    PochFactor,
    TruncatedSeries,
    Window,
    gauss_binomial,
    inv_poch_finite,
    make_series,
    monomial,
    one,
    poch_finite,
    poch_infinite,
    poch_product,
    qf,
    series_from_json,
    series_to_json,
    theta_sum,
    zero,
    zf,
)

W = Window(24)
WB = Window(16, 8)


def test_finite_pochhammer_is_standard():
    # (q;q)_3 = (1-q)(1-q^2)(1-q^3): the j=0 factor must be (1-q)
    s = poch_finite(qf(1, 1), 3, Window(None))
    expect = make_series(
        [(0, 0, 1), (0, 1, -1), (0, 2, -1), (0, 4, 1), (0, 5, 1), (0, 6, -1)],
        Window(None),
    )
    assert s == expect


def test_finite_pochhammer_with_z():
    # (zq^3; q^4)_2 = (1 - zq^3)(1 - zq^7)
    s = poch_finite(zf(1, 3, 4), 2, Window(None, 4))
    expect = make_series(
        [(0, 0, 1), (1, 3, -1), (1, 7, -1), (2, 10, 1)], Window(None, 4)
    )
    assert s == expect


def test_negative_sign_factor():
    # (-q;q)_2 = (1+q)(1+q^2)
    s = poch_finite(qf(1, 1, -1), 2, Window(None))
    expect = make_series([(0, 0, 1), (0, 1, 1), (0, 2, 1), (0, 3, 1)], Window(None))
    assert s == expect


def test_euler_pentagonal():
    s = poch_infinite(qf(1, 1), Window(27))
    expect = make_series(
        [(0, 0, 1), (0, 1, -1), (0, 2, -1), (0, 5, 1), (0, 7, 1),
         (0, 12, -1), (0, 15, -1), (0, 22, 1), (0, 26, 1)],
        Window(27),
    )
    assert s == expect


def test_partition_numbers():
    p = poch_infinite(qf(1, 1), W).invert()
    got = [p.coefficient(0, n) for n in range(12)]
    assert got == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56]


def test_gauss_binomial_example():
    g = gauss_binomial(4, 2, Window(None))
    expect = make_series(
        [(0, 0, 1), (0, 1, 1), (0, 2, 2), (0, 3, 1), (0, 4, 1)], Window(None)
    )
    assert g == expect
    assert gauss_binomial(3, 5, W).is_zero()
    assert gauss_binomial(3, -1, W).is_zero()
    assert gauss_binomial(5, 0, Window(None)) == one(Window(None))


def test_gauss_binomial_symmetry_and_pascal():
    # [n m] = [n n-m]; [n m] = [n-1 m-1] + q^m [n-1 m]
    for n in range(7):
        for m in range(n + 1):
            a = gauss_binomial(n, m, Window(None))
            assert a == gauss_binomial(n, n - m, Window(None))
            if 0 < m:
                b = gauss_binomial(n - 1, m - 1, Window(None))
                c = gauss_binomial(n - 1, m, Window(None)).times_monomial(0, m)
                total = b + c
                assert a.first_difference(total) is None


def test_theta_is_euler_product():
    assert theta_sum(1, 2, W).agrees_with(poch_infinite(qf(1, 1), W))


def test_theta_2_3_is_mod5_product():
    prod = poch_product([qf(2, 5), qf(3, 5), qf(5, 5)], [], W)
    assert theta_sum(2, 3, W).agrees_with(prod)


def test_theta_rational_arguments():
    # theta(b1,b2)(q) = theta(1,2) at q -> q^b with b = 1/2: grid scale 2
    t = theta_sum(Fr(1, 2), 1, Window(10))
    base = theta_sum(1, 2, Window(20))
    for m in range(20):
        assert t.coefficient(0, Fr(m, 2)) == base.coefficient(0, m)


def test_ring_axioms_spot():
    a = poch_finite(zf(1, 1, 1), 3, WB)
    b = poch_infinite(qf(2, 3), WB)
    c = monomial(2, 5, WB, coefficient=-4)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert (a - a).is_zero()
    assert a * one(WB) == a
    assert (a * zero(WB)).is_zero()


def test_invert_roundtrip():
    a = poch_finite(zf(1, 1, 1), 4, WB)
    inv = a.invert()
    assert (a * inv).agrees_with(one(WB))
    # (q;q)_inf * 1/(q;q)_inf == 1
    e = poch_infinite(qf(1, 1), W)
    assert (e * e.invert()).agrees_with(one(W))


def test_invert_needs_unit():
    with pytest.raises(ValueError):
        make_series([(0, 1, 1)], W).invert()
    with pytest.raises(ValueError):
        make_series([(0, 0, 2)], W).invert()


def test_invert_needs_window():
    poly = poch_finite(zf(1, 1, 1), 1, Window(6))  # z window unbounded
    with pytest.raises(ValueError):
        poly.invert()
    assert poly.invert(z_truncation=3).coefficient(3, 3) == 1


def test_inv_poch_negative_index_is_zero():
    assert inv_poch_finite(qf(1, 1), -1, W).is_zero()
    assert inv_poch_finite(qf(1, 1), -5, W).is_zero()
    assert inv_poch_finite(qf(1, 1), 0, W) == one(W)


def test_poch_finite_rejects_negative_index():
    with pytest.raises(ValueError):
        poch_finite(qf(1, 1), -1, W)


def test_divergent_at_origin_rejected():
    with pytest.raises(ValueError, match="divergent-at-origin"):
        poch_infinite(qf(0, 1), W)
    # but (z q^0; q)_inf is fine
    s = poch_infinite(zf(1, 0, 1), WB)
    assert s.coefficient(1, 0) == -1


def test_window_validation():
    with pytest.raises(ValueError):
        Window(0)
    with pytest.raises(ValueError):
        Window(-3)
    with pytest.raises(ValueError):
        Window(5, -1)
    with pytest.raises(ValueError):
        Window(5, 2, 0)


def test_window_intersection():
    a = poch_infinite(qf(1, 1), Window(20)).invert()
    b = poch_infinite(qf(1, 1), Window(12))
    prod = a * b
    assert prod.q_truncation == 12
    assert prod.agrees_with(one(Window(12)))
    with pytest.raises(ValueError):
        prod.coefficient(0, 12)


def test_scale_unification():
    half = monomial(0, Fr(1, 2), Window(4))
    third = monomial(0, Fr(1, 3), Window(4))
    prod = half * third
    assert prod.q_scale == 6
    assert prod.coefficient(0, Fr(5, 6)) == 1


def test_euler_identity_bivariate():
    # sum_n z^n q^n / (q;q)_n == 1/(zq;q)_inf
    lhs = zero(WB)
    for n in range(WB.z_truncation + 1):
        lhs = lhs + inv_poch_finite(qf(1, 1), n, WB).times_monomial(n, n)
    rhs = poch_infinite(zf(1, 1, 1), WB).invert()
    assert lhs.agrees_with(rhs)


def test_substitute_z():
    s = make_series([(0, 1, 1), (1, Fr(3, 2), 2)], Window(10, 5))
    t = s.substitute_z(Fr(1, 2), sign=-1)
    assert t.coefficient(0, 1) == 1
    assert t.coefficient(1, 2) == -2
    # substitution by q^0 with sign -1 is z -> -z
    u = s.substitute_z(0, sign=-1)
    assert u.coefficient(1, Fr(3, 2)) == -2
    with pytest.raises(ValueError):
        s.substitute_z(-1)


def test_substitute_z_functional():
    # F(z) = 1/(zq;q)_inf, then F(zq^2) = 1/(zq^3;q)_inf
    f = poch_infinite(zf(1, 1, 1), WB).invert()
    g = poch_infinite(zf(1, 3, 1), WB).invert()
    assert f.substitute_z(2).agrees_with(g)


def test_coefficient_outside_window_rejected():
    s = one(Window(5, 3))
    with pytest.raises(ValueError):
        s.coefficient(0, 5)
    with pytest.raises(ValueError):
        s.coefficient(4, 1)
    assert s.coefficient(3, 4) == 0
    assert s.coefficient(0, Fr(9, 2)) == 0


def test_z_slice_and_collapse():
    f = poch_infinite(zf(1, 1, 1), Window(10, 10)).invert()
    col = f.z_slice(3)
    expect = inv_poch_finite(qf(1, 1), 3, Window(10)).times_monomial(0, 3)
    assert col.agrees_with(expect)
    # collapse at z=1: generating function of partitions into parts >= 1
    # with multiplicity weight... here just check it sums columns
    g = make_series([(0, 0, 1), (1, 1, 1), (2, 1, 1)], Window(3, 4))
    assert g.collapse_z().coefficient(0, 1) == 2


def test_collapse_z_guard():
    s = one(Window(10, 3))
    with pytest.raises(ValueError):
        s.collapse_z()


def test_canonical_and_eq():
    a = monomial(0, Fr(2, 2), Window(5))  # lands on integer grid
    b = monomial(0, 1, Window(5))
    assert a == b
    c = monomial(0, Fr(1, 2), Window(5))
    assert a != c


def test_json_roundtrip():
    s = poch_finite(zf(2, Fr(1, 2), Fr(3, 2), -1), 2, Window(9, 6))
    payload = series_to_json(s)
    assert payload["schema"] == "cylq-series/1"
    back = series_from_json(payload)
    assert back == s


def test_pochfactor_validation():
    with pytest.raises(ValueError):
        PochFactor(-1, Fr(1))
    with pytest.raises(ValueError):
        PochFactor(0, Fr(-1))
    with pytest.raises(ValueError):
        PochFactor(0, Fr(1), 2)
    with pytest.raises(ValueError):
        PochFactor(0, Fr(1), 1, Fr(0))


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        TruncatedSeries({(0, -1): 1}, 5, None, 1)
    with pytest.raises(ValueError):
        TruncatedSeries({(-1, 0): 1}, 5, None, 1)
