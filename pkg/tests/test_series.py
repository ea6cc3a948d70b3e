import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prudentwalks.series import (
    CPoly,
    SeriesError,
    TSeries,
    cp_divided_difference,
    cp_substitute,
    geometric,
    pochhammer,
    ts_compose,
    ts_inv,
    ts_mul,
    ts_sqrt,
)


def ts(order, terms):
    return TSeries.from_terms(order, terms)


# -- inverse ----------------------------------------------------------------

def test_inv_geometric():
    assert ts_inv(ts(8, {0: 1, 1: -1})).coeffs == [1] * 9


def test_inv_pell():
    # long-division oracle: b_n = 2 b_(n-1) + b_(n-2)
    b = [1, 2]
    while len(b) < 9:
        b.append(2 * b[-1] + b[-2])
    assert ts_inv(ts(8, {0: 1, 1: -2, 2: -1})).coeffs == b


def test_partially_directed_series():
    got = ts_mul(ts(6, {0: 1, 1: 1}), ts_inv(ts(6, {0: 1, 1: -2, 2: -1})))
    assert got.coeffs == [1, 3, 7, 17, 41, 99, 239]


def test_inv_zero_constant_rejected():
    with pytest.raises(SeriesError):
        ts_inv(ts(4, {1: 1}))


# -- sqrt -------------------------------------------------------------------

def test_sqrt_one():
    assert ts_sqrt(TSeries.one(6)) == TSeries.one(6)


def test_sqrt_product_form():
    a = ts_mul(ts(8, {0: 1, 4: -1}), ts(8, {0: 1, 1: -2, 2: -1}))
    r = ts_sqrt(a)
    assert (r * r) == a
    assert r.coeffs[:7] == [1, -1, -1, -1, -2, -2, -4]


def test_sqrt_quotient_form():
    a = ts_mul(ts(8, {0: 1, 4: -1}), ts_inv(ts(8, {0: 1, 1: -2, 2: -1})))
    r = ts_sqrt(a)
    assert (r * r) == a
    assert r.coeffs[:6] == [1, 1, 2, 4, 8, 18]


def test_sqrt_needs_unit_constant():
    with pytest.raises(SeriesError):
        ts_sqrt(ts(4, {0: 4}))


# -- hypothesis properties --------------------------------------------------

coeffs_strategy = st.lists(
    st.one_of(st.integers(-9, 9), st.fractions(max_denominator=7)),
    min_size=1,
    max_size=8,
)


@settings(max_examples=60, deadline=None)
@given(coeffs_strategy)
def test_mul_inv_roundtrip(cs):
    cs[0] = 1 if cs[0] == 0 else cs[0]
    a = TSeries(cs, 7)
    assert (a * ts_inv(a)) == TSeries.one(7)


@settings(max_examples=60, deadline=None)
@given(coeffs_strategy)
def test_sqrt_square_roundtrip(cs):
    cs[0] = 1
    a = TSeries(cs, 7)
    r = ts_sqrt(a)
    assert (r * r) == a
    assert r.coeffs[0] == 1


@settings(max_examples=40, deadline=None)
@given(coeffs_strategy, coeffs_strategy)
def test_mul_commutes_and_truncates(ca, cb):
    a, b = TSeries(ca, 7), TSeries(cb, 5)
    p = a * b
    assert p == b * a
    assert p.order == 5


# -- compose ----------------------------------------------------------------

def test_compose_identity():
    w = CPoly.monomial(("w",), 6, (1,))
    assert ts_compose(w, TSeries.t(6)) == TSeries.t(6)


def test_compose_rejects_unit_without_dominance():
    # sum_j w^j at t^0 violates valuation dominance: w := 1 must be refused
    f = CPoly(("w",), 4)
    for j in range(5):
        f.slices[0][(j,)] = 1
    with pytest.raises(SeriesError):
        ts_compose(f, TSeries.one(4))


def test_compose_zero_keeps_constant_term():
    f = CPoly(("w",), 5)
    f.slices[1][(0,)] = 1
    f.slices[2][(1,)] = 3
    assert ts_compose(f, 0) == TSeries.from_terms(5, {1: 1})


# -- substitution -----------------------------------------------------------

def test_substitute_zero():
    f = CPoly(("u",), 4)
    f.slices[0][(1,)] = 5  # u*5
    f.slices[1][(0,)] = 2  # 2t
    assert cp_substitute(f, "u", 0) == CPoly.from_tseries(("u",), ts(4, {1: 2}))


def test_substitute_t_times_var():
    # u^2 c(t) -> t^2 v^2 c(t)
    f = CPoly.monomial(("u", "v"), 6, (2, 0), c=3, tpow=1)
    got = cp_substitute(f, "u", ("t", "v"))
    assert got == CPoly.monomial(("u", "v"), 6, (0, 2), c=3, tpow=3)


def test_substitute_unsupported_image_rejected():
    f = CPoly.monomial(("u",), 4, (1,))
    with pytest.raises(SeriesError):
        cp_substitute(f, "u", ("q", "u"))
    with pytest.raises(SeriesError):
        cp_substitute(f, "u", 2)


def _random_cpoly(rng, vars, order, nterms=6, max_exp=3):
    p = CPoly(tuple(vars), order)
    for _ in range(nterms):
        n = rng.randrange(order + 1)
        key = tuple(rng.randrange(max_exp + 1) for _ in vars)
        c = rng.randrange(-5, 6)
        if c:
            p.slices[n][key] = p.slices[n].get(key, 0) + c
    return p


def test_substitution_composes():
    # u -> tv then v -> 0: only the u^0 v^0 terms survive (u^i v^j maps to
    # t^i v^(i+j)); checked against direct extraction on random inputs
    rng = random.Random(7)
    for _ in range(30):
        f = _random_cpoly(rng, ("u", "v"), 8)
        a = cp_substitute(cp_substitute(f, "u", ("t", "v")), "v", 0)
        direct = CPoly(("u", "v"), 8)
        for n, slc in enumerate(f.slices):
            c = slc.get((0, 0))
            if c:
                direct.slices[n][(0, 0)] = c
        assert a == direct


# -- divided differences ----------------------------------------------------

def test_dd_simple():
    f = CPoly.monomial(("u", "v"), 6, (2, 0))  # u^2
    got = cp_divided_difference(f, "u", ("t", "v"))
    want = CPoly.monomial(("u", "v"), 6, (1, 0)) + CPoly.monomial(
        ("u", "v"), 6, (0, 1), tpow=1
    )
    assert got == want


def test_dd_constant_is_zero():
    f = CPoly.constant(("u",), 5, 7)
    assert cp_divided_difference(f, "u", "t").is_zero()


def test_dd_exactness_identity():
    # r (var - repl) == f - f[var:=repl] exactly, on random polynomials
    rng = random.Random(13)
    for _ in range(25):
        f = _random_cpoly(rng, ("u", "v"), 9)
        r = cp_divided_difference(f, "u", ("t", "v"))
        u = CPoly.monomial(("u", "v"), 9, (1, 0))
        tv = CPoly.monomial(("u", "v"), 9, (0, 1), tpow=1)
        lhs = r * (u - tv)
        rhs = f - cp_substitute(f, "u", ("t", "v"))
        assert lhs == rhs


def test_dd_matches_monomial_sum():
    # dd(u*f, u, t) expands each u^i into sum_k t^k u^(i-k), k = 0..i
    rng = random.Random(99)
    for _ in range(10):
        f = _random_cpoly(rng, ("u",), 8)
        got = cp_divided_difference(f.mul_mono((1,)), "u", "t")
        want = CPoly(("u",), 8)
        for n, slc in enumerate(f.slices):
            for (i,), c in slc.items():
                for k in range(i + 1):
                    if n + k <= 8:
                        key = (i - k,)
                        want.slices[n + k][key] = want.slices[n + k].get(key, 0) + c
        want = want.normalized()
        assert got.normalized() == want


# -- pochhammer -------------------------------------------------------------

def test_pochhammer_empty():
    a = TSeries.t(6)
    assert pochhammer(a, TSeries.t(6), 0) == TSeries.one(6)


def test_pochhammer_t_t_2():
    got = pochhammer(TSeries.t(6), TSeries.t(6), 2)
    assert got == TSeries.from_terms(6, {0: 1, 1: -1, 2: -1, 3: 1})


def test_pochhammer_y_factor():
    from prudentwalks.closedforms import y_series

    Y = y_series(8)
    yb = Y * TSeries.from_terms(8, {0: 1, 2: -2})
    got = pochhammer(yb, TSeries.t(8), 1)
    assert got == TSeries.one(8) - yb
    assert got.coeffs[0] == 1 and got.coeffs[1] == -1  # valuation-1 series


# -- CPoly plumbing ---------------------------------------------------------

def test_cpoly_mul_matches_tseries():
    rng = random.Random(3)
    for _ in range(10):
        a = TSeries([rng.randrange(-4, 5) for _ in range(7)], 6)
        b = TSeries([rng.randrange(-4, 5) for _ in range(7)], 6)
        pa = CPoly.from_tseries(("u",), a)
        pb = CPoly.from_tseries(("u",), b)
        assert (pa * pb).coefficient((0,)) == a * b


def test_cpoly_inv_and_sqrt():
    rng = random.Random(5)
    for _ in range(10):
        p = _random_cpoly(rng, ("z",), 7).mul_mono(tpow=1)
        p = p + CPoly.constant(("z",), 7)  # constant term exactly 1
        assert (p * p.inv()) == CPoly.constant(("z",), 7)
        assert (p * p).sqrt() == p


def test_laurent_z_exponents():
    p = CPoly.monomial(("z",), 4, (-2,), c=3, tpow=1)
    q = p.invert_var("z")
    assert q == CPoly.monomial(("z",), 4, (2,), c=3, tpow=1)


def test_geometric_prefactor():
    g = CPoly.geom(("u",), 5, 1, (1,))
    for n in range(6):
        assert g.slices[n] == {(n,): 1}


def test_json_roundtrip():
    rng = random.Random(17)
    p = _random_cpoly(rng, ("u", "z"), 6)
    p.slices[2][(1, -2)] = Fraction(3, 7)
    obj = p.to_json()
    q = CPoly.from_json(obj, vars=("u", "z"))
    assert q == p.normalized()


def test_tseries_json_roundtrip():
    a = TSeries([1, Fraction(1, 2), -3], 4)
    assert TSeries.from_json(a.to_json()) == a


def test_mismatched_orders_truncate():
    a = TSeries.one(8)
    b = TSeries.one(5)
    assert (a + b).order == 5
    assert (a * b).order == 5
