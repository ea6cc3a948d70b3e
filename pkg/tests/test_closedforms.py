import pytest

from prudentwalks.closedforms import (
    TruncationError,
    euler_identity_check,
    kernel_root_u_of_w,
    q_series,
    three_sided_closed,
    three_sided_length_series,
    triangular_box_formula,
    triangular_closed,
    triangular_kernel_parametrization_residual,
    three_sided_q_homogeneity_residual,
    two_sided_closed,
    two_sided_endpoint_closed,
    two_sided_kernel_residual,
    two_sided_p1_display,
    x_kernel_residual,
    x_of_u,
    y_alg_residual_of,
    y_series,
)
from prudentwalks.funceq import (
    iterate_2sided,
    iterate_3sided,
    iterate_triangular,
    solve_2sided_refined_sum,
)
from prudentwalks.series import TSeries, ts_compose, ts_inv
from prudentwalks.walks import enumerate_tri_by_box


def test_kernel_root_bivariate():
    # (U - t)(1 - tU) = t w U (1 - t^2) as an identity in w and t
    from prudentwalks.series import CPoly

    N = 24
    U = kernel_root_u_of_w(N)
    wv = ("w",)
    t = CPoly.from_tseries(wv, TSeries.t(N))
    lhs = (U - t) * (CPoly.constant(wv, N) - U.shift(1))
    rhs = U.mul_mono((1,), 1) * CPoly.from_tseries(
        wv, TSeries.from_terms(N, {0: 1, 2: -1})
    )
    assert lhs == rhs
    # U(0) = t
    assert U.substitute("w", 0).specialize_ones() == TSeries.t(N)


def test_q_series_values():
    q = q_series(10)
    assert q.coeffs[:6] == [0, 1, 1, 1, 1, 2]
    # q is the power-series root of the 2-sided kernel
    N = 10
    lhs = (1 - q.shift(1)) * (q - TSeries.t(N))
    rhs = q.shift(1) * TSeries.from_terms(N, {0: 1, 2: -1})
    assert lhs == rhs


def test_compose_unit_dominance_allows_q():
    # U(t;w) has coefficient valuation >= w-exponent, so w := 1 is exact
    Uw = kernel_root_u_of_w(12)
    assert ts_compose(Uw, 1).normalized() == q_series(12)


def test_compose_with_zero_gives_t():
    Uw = kernel_root_u_of_w(12)
    assert ts_compose(Uw, 0) == TSeries.t(12)
    assert ts_compose(Uw, TSeries.zero(12)).normalized() == TSeries.t(12)


def test_two_sided_closed_matches_everything():
    U, P, P1 = two_sided_closed(14)
    assert U.coeffs[1:6] == [1, 1, 1, 1, 2]
    assert P1.integer_coeffs()[:6] == [1, 4, 10, 26, 66, 168]
    assert two_sided_p1_display(14) == P1
    # full catalytic agreement with the functional-equation route
    assert P.normalized() == iterate_2sided(14)[1].normalized()
    # the sqrt-formula root coincides with the fixed-point q, byte for byte
    assert U == q_series(14)


def test_two_sided_kernel_residual():
    assert two_sided_kernel_residual(40).is_zero()


def test_two_sided_endpoint_closed():
    P = two_sided_endpoint_closed(10)
    ref = solve_2sided_refined_sum(10)[1]
    assert P.normalized() == ref.truncate(P.order).normalized()
    # z = 1 reduces to the unrefined series
    z1 = P.substitute("z", 1).substitute("u", 1).specialize_ones()
    assert z1.integer_coeffs()[:6] == [1, 4, 10, 26, 66, 168]
    assert P.slices[1] == {(1, -1): 2, (0, 1): 2}


def test_two_sided_endpoint_kernel_root_quadratic():
    # (z - tU)(U - tz) = t U z^2 (1 - t^2), and U(t,1) is the unrefined root
    from prudentwalks.closedforms import two_sided_endpoint_kernel_root
    from prudentwalks.series import CPoly

    N = 20
    U = two_sided_endpoint_kernel_root(N)
    zv = ("z",)
    z = CPoly.monomial(zv, N, (1,))
    residual = (z - U.shift(1)) * (U - z.shift(1)) - U.mul_mono(
        (2,), 1
    ) * CPoly.from_tseries(zv, TSeries.from_terms(N, {0: 1, 2: -1}))
    assert residual.normalized().is_zero()
    assert U.substitute("z", 1).specialize_ones().normalized() == q_series(N)


def test_three_sided_closed_cross_checks():
    T1t, Pu, P1 = three_sided_closed(12)
    T1f, P1f = three_sided_length_series(12)
    assert T1t == T1f.truncate(T1t.order)
    assert P1 == P1f.truncate(P1.order)
    assert P1.integer_coeffs()[:9] == [1, 4, 12, 34, 90, 236, 612, 1580, 4060]
    # Ptu-expr agrees with the iterated functional equation in full
    ref = iterate_3sided(12)[2]
    assert Pu.normalized() == ref.truncate(Pu.order).normalized()


def test_three_sided_summand_valuations_grow():
    # successive summands gain at least three orders of valuation each, so
    # the measured-valuation auto truncation terminates
    N = 40
    Uw = kernel_root_u_of_w(N + 1)
    q = ts_compose(Uw, 1).normalized()
    A = (TSeries.t(N) * ts_inv(1 - q.truncate(N).shift(1))).normalized()
    qp = TSeries.one(N + 1)
    numprod = TSeries.one(N)
    vals = [0]
    for i in range(1, 6):
        qp = (qp * q).normalized()
        numprod = (numprod * (A - ts_compose(Uw, qp).truncate(N))).normalized()
        vals.append(numprod.valuation())
    assert all(b >= a + 3 for a, b in zip(vals, vals[1:]))


def test_three_sided_k_terms_too_small():
    with pytest.raises(TruncationError):
        three_sided_length_series(30, k_terms=2)


def test_q_homogeneity():
    assert three_sided_q_homogeneity_residual(40).is_zero()


def test_triangular_closed_values():
    Y, R1t, P1 = triangular_closed(14)
    assert P1.integer_coeffs()[:2] == [1, 6]
    assert P1.integer_coeffs() == iterate_triangular(14)[1].specialize_ones().integer_coeffs()
    assert y_alg_residual_of(Y).is_zero()


def test_triangular_k_terms_too_small():
    with pytest.raises(TruncationError):
        triangular_closed(30, k_terms=2)


def test_triangular_kernel_parametrization():
    assert triangular_kernel_parametrization_residual(40).is_zero()


def test_x_series():
    assert x_kernel_residual(24).is_zero()
    X = x_of_u(12)
    Y = y_series(12)
    assert X.substitute("u", 1).specialize_ones().shift(1).normalized() == Y


def test_box_formula_values():
    assert [triangular_box_formula(k)[0] for k in range(5)] == [
        1,
        12,
        144,
        1920,
        28800,
    ]
    total, r = triangular_box_formula(2)
    assert r[(1, 1)] == 16 and r[(0, 2)] == 32


def test_box_formula_vs_oracle():
    for k in range(4):
        assert triangular_box_formula(k) == enumerate_tri_by_box(k)


def test_euler_identity_zero_case():
    assert euler_identity_check(30, TSeries.zero(30))
    assert euler_identity_check(0, TSeries.zero(2))


def test_euler_identity_comment_value():
    # a = t^3/(1-2t^2)^2 reproduces the product form of the especially
    # simple specialization of the right-edge series
    N = 30
    a = TSeries.t(N, 3) * ts_inv(
        TSeries.from_terms(N, {0: 1, 2: -2}) * TSeries.from_terms(N, {0: 1, 2: -2})
    )
    assert euler_identity_check(N, a)
