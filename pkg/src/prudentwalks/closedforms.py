"""Closed-form expansions: the algebraic 2-sided solution, the iterated
3-sided sum, the triangular q-series, and the box-spanning formulas.

Each kernel-root series is checked against its defining algebraic equation;
infinite sums and products are truncated automatically by measuring when the
next summand or factor stops contributing below the truncation order (their
valuations increase strictly, so the loops terminate).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from prudentwalks.series import (
    CPoly,
    SeriesError,
    TSeries,
    pochhammer,
    ts_compose,
    ts_inv,
    ts_sqrt,
)


class TruncationError(SeriesError):
    """An explicit k_terms was too small for the requested order."""


def _ts(order, terms):
    return TSeries.from_terms(order, terms)


# --------------------------------------------------------------------------
# kernel roots
# --------------------------------------------------------------------------

def kernel_root_u_of_w(order):
    """U(t;w): the unique power series with (U-t)(1-tU) = t w U (1-t^2).

    Computed from the equivalent fixed point U = t + tU^2 - t^2 U + twU(1-t^2),
    whose coefficients are integer polynomials in w.  CPoly over ("w",).
    """
    N = order
    slices = [dict() for _ in range(N + 1)]

    def mul_into(dst, a, b, scale=1):
        for (ja,), ca in a.items():
            for (jb,), cb in b.items():
                key = (ja + jb,)
                acc = dst.get(key, 0) + scale * ca * cb
                if acc:
                    dst[key] = acc
                elif key in dst:
                    del dst[key]

    for n in range(N + 1):
        cur = {}
        if n == 1:
            cur[(0,)] = 1
        # + t U^2
        for a in range(1, n - 1):
            mul_into(cur, slices[a], slices[n - 1 - a])
        # - t^2 U
        if n >= 2:
            for key, c in slices[n - 2].items():
                acc = cur.get(key, 0) - c
                if acc:
                    cur[key] = acc
                elif key in cur:
                    del cur[key]
        # + t w U - t^3 w U
        for off, sgn in ((1, 1), (3, -1)):
            if n >= off:
                for (j,), c in slices[n - off].items():
                    key = (j + 1,)
                    acc = cur.get(key, 0) + sgn * c
                    if acc:
                        cur[key] = acc
                    elif key in cur:
                        del cur[key]
        slices[n] = cur

    U = CPoly(("w",), N)
    U.slices = slices
    return U


def q_series(order):
    """q(t) = U(t;1), the power-series kernel root of the 2-sided class."""
    return ts_compose(kernel_root_u_of_w(order), 1).normalized()


def y_series(order):
    """Y(t) = (1 - 2t - t^2 - sqrt((1-t)(1-3t-t^2-t^3)))/(2 t^2).

    Satisfies Y = t/(1-t) (1+Y)(1+tY); integer coefficients.
    """
    N = order + 2
    disc = _ts(N, {0: 1, 1: -1}) * _ts(N, {0: 1, 1: -3, 2: -1, 3: -1})
    num = _ts(N, {0: 1, 1: -2, 2: -1}) - ts_sqrt(disc)
    Y = (num.shift_down(2) / 2).normalized().truncate(order)
    assert y_alg_residual_of(Y).is_zero(), "Y fails its algebraic equation"
    return Y


def y_alg_residual_of(Y):
    """Y - t/(1-t)(1+Y)(1+tY), which must vanish identically."""
    N = Y.order
    one = TSeries.one(N)
    rhs = TSeries.t(N) * ts_inv(_ts(N, {0: 1, 1: -1})) * (one + Y) * (one + Y.shift(1))
    return Y - rhs


def x_of_u(order):
    """X(t;u): the power series with u(1+tX)(1+t^2 X) = X(1-t).

    CPoly over ("u",) with integer coefficients; X(t;1) = Y/t.
    """
    N = order
    slices = [dict() for _ in range(N + 1)]

    def sq(b):  # (X^2)_b
        out = {}
        for a in range(b + 1):
            for (ja,), ca in slices[a].items():
                for (jb,), cb in slices[b - a].items():
                    key = (ja + jb,)
                    out[key] = out.get(key, 0) + ca * cb
        return out

    for n in range(N + 1):
        cur = {}
        # X = u/(1-t) * W, W = 1 + tX + t^2 X + t^3 X^2; slice n pulls W_b, b<=n
        for b in range(n + 1):
            w_b = {}
            if b == 0:
                w_b[(0,)] = 1
            if b >= 1:
                for key, c in slices[b - 1].items():
                    w_b[key] = w_b.get(key, 0) + c
            if b >= 2:
                for key, c in slices[b - 2].items():
                    w_b[key] = w_b.get(key, 0) + c
            if b >= 3:
                for key, c in sq(b - 3).items():
                    w_b[key] = w_b.get(key, 0) + c
            for (j,), c in w_b.items():
                if c:
                    key = (j + 1,)
                    cur[key] = cur.get(key, 0) + c
        slices[n] = {k: c for k, c in cur.items() if c}

    X = CPoly(("u",), N)
    X.slices = slices
    return X


# --------------------------------------------------------------------------
# 2-sided closed form (kernel method, one catalytic variable)
# --------------------------------------------------------------------------

def two_sided_closed(order):
    """U, P(t;u) and P(t;1) for 2-sided walks.

    U = (1 - t + t^2 + t^3 - sqrt((1-t^4)(1-2t-t^2)))/(2t) via ts_sqrt;
    P(t;u) = 2(1-t^2)(1-t) U / ((1-uU)(1-tU)(2t-U)) - 1.
    """
    N = order + 2
    disc = _ts(N, {0: 1, 4: -1}) * _ts(N, {0: 1, 1: -2, 2: -1})
    num = _ts(N, {0: 1, 1: -1, 2: 1, 3: 1}) - ts_sqrt(disc)
    U = (num.shift_down(1) / 2).normalized().truncate(order)
    V = num.shift_down(2) / 2  # U/t, constant term 1
    # U/(2t - U) = V/(2 - V); 2 - V has constant term 1
    body = (V * ts_inv(2 - V)).normalized().truncate(order)
    pref = (
        _ts(order, {0: 2, 2: -2}) * _ts(order, {0: 1, 1: -1}) * body
        * ts_inv(1 - U.shift(1))
    )
    # 1/(1 - uU) = sum_m u^m U^m
    P = CPoly.zero(("u",), order)
    upow = TSeries.one(order)
    m = 0
    while True:
        coeff = (pref * upow).normalized()
        if coeff.is_zero() and m > 0:
            break
        for n, c in enumerate(coeff.coeffs):
            if c:
                P.slices[n][(m,)] = c
        upow = (upow * U).normalized()
        if upow.is_zero():
            break
        m += 1
    P = P - 1
    P1 = P.substitute("u", 1).specialize_ones().normalized()
    return U, P, P1


def two_sided_p1_display(order):
    """The displayed P(t;1) = (1+t-t^3 + t(1-t) sqrt((1-t^4)/(1-2t-t^2)))
    / (1-2t-2t^2+2t^3)."""
    N = order
    root = ts_sqrt((_ts(N, {0: 1, 4: -1}) * ts_inv(_ts(N, {0: 1, 1: -2, 2: -1}))))
    num = _ts(N, {0: 1, 1: 1, 3: -1}) + _ts(N, {1: 1, 2: -1}) * root
    return (num * ts_inv(_ts(N, {0: 1, 1: -2, 2: -2, 3: 2}))).normalized()


def two_sided_endpoint_kernel_root(order):
    """U(t,z): the power-series root of (z - tU)(U - tz) = t U z^2 (1 - t^2).

    U = z (1 - tz + t^2 + t^3 z - sqrt((1-t^2)(1+t-tz+t^2z)(1-t-tz-t^2z)))/(2t);
    CPoly over ("z",), valuation 1.
    """
    N = order + 1
    zv = ("z",)
    A = CPoly(zv, N)
    A.slices[0][(0,)] = 1
    A.slices[1] = {(0,): 1, (1,): -1}
    A.slices[2] = {(1,): 1}
    B = CPoly(zv, N)
    B.slices[0][(0,)] = 1
    B.slices[1] = {(0,): -1, (1,): -1}
    B.slices[2] = {(1,): -1}
    C = CPoly(zv, N)
    C.slices[0][(0,)] = 1
    C.slices[2][(0,)] = -1
    S = (C * A * B).sqrt()
    num = CPoly(zv, N)
    num.slices[0][(0,)] = 1
    num.slices[1][(1,)] = -1
    num.slices[2][(0,)] = 1
    num.slices[3][(1,)] = 1
    num = (num - S).normalized()
    return num.shift_down(1).mul_mono((1,), 0, Fraction(1, 2)).normalized()


def two_sided_endpoint_closed(order):
    """P(t,z;u) for 2-sided walks with z marking X+Y (Laurent in z).

    P = 2 z^3 (1-t^2)(1-tz) U / ((z^2-uU)(z-tU)(2tz-U)) - 1 at U = U(t,z).
    """
    zv = ("z",)
    U = two_sided_endpoint_kernel_root(order + 1)  # order + 1
    V = U.mul_mono((-1,)).shift_down(1)  # U/(tz), constant term 1
    two_minus_V = (CPoly.constant(zv, V.order, 2) - V).normalized()
    body = (V * two_minus_V.inv()).normalized()  # U/(2tz - U)
    ord2 = body.order
    pref = (
        CPoly.from_tseries(zv, _ts(ord2, {0: 2, 2: -2}))
        * (CPoly.constant(zv, ord2) - CPoly.monomial(zv, ord2, (1,), 1, 1))
        * body
    ).normalized()
    # embed into ("u","z") and multiply the two geometric inverses
    uz = ("u", "z")
    pref_uz = pref.reorder(uz)
    U_uz = U.truncate(ord2).reorder(uz)
    # sum_m (u U z^-2)^m and sum_m (t U z^-1)^m
    g1 = CPoly.constant(uz, ord2)
    term = CPoly.constant(uz, ord2)
    while True:
        term = (term * U_uz).mul_mono((1, -2)).normalized()
        if term.is_zero():
            break
        g1 = g1 + term
    g2 = CPoly.constant(uz, ord2)
    term = CPoly.constant(uz, ord2)
    while True:
        term = (term * U_uz).mul_mono((0, -1), 1).normalized()
        if term.is_zero():
            break
        g2 = g2 + term
    P = (pref_uz * g1 * g2 - 1).normalized()
    return P.truncate(min(order, P.order))


# --------------------------------------------------------------------------
# 3-sided closed form (iterated kernel sum)
# --------------------------------------------------------------------------

def _phi(x):
    """(x - t)/(t (1 - t x)) for a kernel-root series x = t + O(t^2)."""
    N = x.order
    return ((x - TSeries.t(N)).shift_down(1) * ts_inv(1 - x.truncate(N - 1).shift(1))).normalized()


def three_sided_length_series(order, k_terms=None):
    """(T(t;1,t), P(t;1)) for 3-sided walks from the iterated sum at u=1.

    The k-th summand gains at least three orders of valuation per step, so
    the loop stops once a summand vanishes modulo t^(order+1).
    """
    N = order
    M = N + 1  # internal order; phi consumes one
    Uw = kernel_root_u_of_w(M + 1)
    q = ts_compose(Uw, 1).normalized()
    qpow = [TSeries.one(M + 1), q]

    def u_of_qi(i):
        while len(qpow) <= i:
            qpow.append((qpow[-1] * q).normalized())
        if i == 0:
            return q.truncate(M)
        return ts_compose(Uw, qpow[i]).normalized().truncate(M)

    A = (TSeries.t(M) * ts_inv(1 - (q.truncate(M) * TSeries.t(M)))).normalized()  # t/(1-tq)
    B = ((1 - q.truncate(M).shift(1)) * ts_inv(_ts(M, {0: 1, 2: -1}))).normalized()  # tq/(q-t)
    us = [u_of_qi(0), u_of_qi(1)]
    T = TSeries.zero(N)
    numprod = TSeries.one(M)
    invden = ts_inv(B - us[0])
    k = 0
    while True:
        while len(us) < k + 2:
            us.append(u_of_qi(len(us)))
        if k > 0:
            numprod = (numprod * (A - us[k])).normalized()
            invden = (invden * ts_inv(B - us[k])).normalized()
        term = (numprod.truncate(N) * invden.truncate(N)
                * (1 + _phi(us[k]).truncate(N) + _phi(us[k + 1]).truncate(N))).normalized()
        if term.is_zero():
            break
        if k_terms is not None and k >= k_terms:
            raise TruncationError(
                "k_terms=%d leaves a nonzero summand at order %d" % (k_terms, N)
            )
        T = T + (term if k % 2 == 0 else -term)
        k += 1
    qN = q.truncate(N)
    P1 = (
        ts_inv(_ts(N, {0: 1, 1: -2, 2: -1}))
        * (2 * qN.shift(2) * T + _ts(N, {0: 1, 1: 1}) * (_ts(N, {0: 2, 1: -1}) - qN.shift(2)) * ts_inv(1 - qN.shift(1)))
        - ts_inv(_ts(N, {0: 1, 1: -1}))
    ).normalized()
    return T, P1


def three_sided_closed(order, k_terms=None):
    """(T(t;1,t), P(t;u), P(t;1)) for 3-sided walks.

    P(t;u) follows the rational expression in U(u) and T(u,tu); its second
    term carries an explicit (1-u) factor, so the u=1 specialization reduces
    to the displayed length series.
    """
    M = order + 1  # internal order: phi consumes one
    Uw = kernel_root_u_of_w(M + 1)
    q = ts_compose(Uw, 1).normalized()
    qpow = [TSeries.one(M + 1)]

    def qp(m):
        while len(qpow) <= m:
            qpow.append((qpow[-1] * q).normalized())
        return qpow[m]

    uvar = ("u",)

    def u_of_uqi(i):
        """U(u q^i) = sum_j coeff_j(t) q^(i j) u^j as a CPoly in u."""
        out = CPoly(uvar, M)
        for (j,), coeff in Uw.terms().items():
            piece = (coeff * qp(i * j)).normalized() if i * j else coeff
            for n, c in enumerate(piece.coeffs[: M + 1]):
                if c:
                    out.slices[n][(j,)] = out.slices[n].get((j,), 0) + c
        return out.normalized()

    A = (TSeries.t(M) * ts_inv(1 - (q.truncate(M) * TSeries.t(M)))).normalized()
    B = ((1 - q.truncate(M).shift(1)) * ts_inv(_ts(M, {0: 1, 2: -1}))).normalized()
    A_u = CPoly.from_tseries(uvar, A)
    B_u = CPoly.from_tseries(uvar, B)

    def phi_u(X):
        return (X - CPoly.from_tseries(uvar, TSeries.t(X.order))).shift_down(1) * (
            CPoly.constant(uvar, X.order - 1) - X.truncate(X.order - 1).shift(1)
        ).inv()

    us = [u_of_uqi(0), u_of_uqi(1)]
    T = CPoly.zero(uvar, order)
    numprod = CPoly.constant(uvar, M)
    invden = (B_u - us[0]).inv()
    k = 0
    while True:
        while len(us) < k + 2:
            us.append(u_of_uqi(len(us)))
        if k > 0:
            numprod = (numprod * (A_u - us[k])).normalized()
            invden = (invden * (B_u - us[k]).inv()).normalized()
        one = CPoly.constant(uvar, order)
        term = (
            numprod.truncate(order) * invden.truncate(order)
            * (one + phi_u(us[k]).truncate(order) + phi_u(us[k + 1]).truncate(order))
        ).normalized()
        if term.is_zero():
            break
        if k_terms is not None and k >= k_terms:
            raise TruncationError(
                "k_terms=%d leaves a nonzero summand at order %d" % (k_terms, order)
            )
        T = T + (term if k % 2 == 0 else -term)
        k += 1
    T = T.normalized()
    Nt = T.order
    Uu = us[0].truncate(Nt)
    inv_1tU = (CPoly.constant(uvar, Nt) - Uu.shift(1)).inv()
    c1 = CPoly.from_tseries(uvar, ts_inv(_ts(Nt, {0: 1, 1: -2, 2: -1})))
    one_t = CPoly.from_tseries(uvar, _ts(Nt, {0: 1, 1: 1}))
    first = c1 * (
        Uu.shift(2) * T * 2
        + one_t * (CPoly.from_tseries(uvar, _ts(Nt, {0: 2, 1: -1})) - Uu.shift(2)) * inv_1tU
    )
    one_minus_u = CPoly.constant(uvar, Nt) - CPoly.monomial(uvar, Nt, (1,))
    den2 = CPoly(uvar, Nt)
    den2.slices[0][(0,)] = 1
    den2.slices[1] = {(0,): -1, (1,): -1}
    den2.slices[2] = {(1,): -1}
    second = (
        (CPoly.constant(uvar, Nt) - Uu) * one_t * one_minus_u * c1 * den2.inv()
        * (T.shift(2) + one_t.shift(1) * inv_1tU) * -2
    )
    P = (first + second - CPoly.from_tseries(uvar, ts_inv(_ts(Nt, {0: 1, 1: -1})))).normalized()
    T1t = T.substitute("u", 1).specialize_ones().normalized()
    P1 = P.substitute("u", 1).specialize_ones().normalized()
    return T1t, P, P1


# --------------------------------------------------------------------------
# triangular closed form (q-series)
# --------------------------------------------------------------------------

def triangular_closed(order, k_terms=None):
    """(Y, R(t;1,t), P(t;1)) for triangular prudent walks.

    R(t;1,t) = (1+Y)(1+tY) sum_k t^C(k+1,2) (Y(1-2t^2))^k / (Y(1-2t^2);t)_{k+1}
    * (Y t^2/(1-2t^2); t)_k, with the (1-2t^2) powers cancelled exactly:
    (Y(1-2t^2))^k (Yt^2/(1-2t^2);t)_k = Y^k prod_i (1-2t^2 - Y t^(2+i)).
    """
    N = order
    Y = y_series(N)
    one = TSeries.one(N)
    YB = (Y * _ts(N, {0: 1, 2: -2})).normalized()  # Y (1-2t^2)
    total = TSeries.zero(N)
    ypow = one
    numfac = one
    invden = ts_inv(one - YB)  # (Y(1-2t^2); t)_1 inverse
    k = 0
    while True:
        tri = k * (k + 1) // 2
        if tri > N:
            break
        if k > 0:
            ypow = (ypow * Y).normalized()
            numfac = (numfac * (_ts(N, {0: 1, 2: -2}) - Y.shift(k + 1))).normalized()
            invden = (invden * ts_inv(one - YB.shift(k))).normalized()
        term = (ypow.shift(tri) * numfac * invden).normalized()
        if term.is_zero():
            break
        if k_terms is not None and k >= k_terms:
            raise TruncationError(
                "k_terms=%d leaves a nonzero summand at order %d" % (k_terms, N)
            )
        total = total + term
        k += 1
    R1t = ((one + Y) * (one + Y.shift(1)) * total).normalized()
    P1 = (
        1
        + _ts(N, {1: 6, 2: 6})
        * ts_inv(_ts(N, {0: 1, 1: -3, 2: -2}))
        * (one + _ts(N, {1: 1, 2: 2}) * R1t)
    ).normalized()
    return Y, R1t, P1


def triangular_box_total(k):
    """2^(k-1) (k+1) (k+2)!, the number of walks spanning a size-k box."""
    return (2 ** k * (k + 1) * factorial(k + 2)) // 2


def triangular_box_r(i, j):
    """Spanning walks ending on the right edge at distances (i, j), i+j = k.

    Coefficient of u^i v^j in (2^k (k+2)!/6)(u^k + v^k + sum_{a+b=k} u^a v^b):
    the two-case display of the formula assumes k >= 1; at k = 0 the three
    terms coincide and the coefficient is 1.
    """
    k = i + j
    weight = 1 + (1 if i == k else 0) + (1 if j == k else 0)
    return (2 ** k * factorial(k + 2) * weight) // 6


def triangular_box_formula(k):
    """(total, {(i, j): count}) from the closed formulas."""
    return triangular_box_total(k), {
        (i, k - i): triangular_box_r(i, k - i) for i in range(k + 1)
    }


# --------------------------------------------------------------------------
# q-series identity (numerical check of the product form)
# --------------------------------------------------------------------------

def euler_identity_check(order, a):
    """Check sum_n t^C(n+1,2) (a;t)_n/(t;t)_n = prod_m (1+t^m)(1-a t^(2m-1))
    modulo t^(order+1) for a series `a` of valuation >= 1 (or zero)."""
    N = order
    if N == 0:
        return True
    a = a.truncate(N) if a.order > N else a
    if not a.is_zero() and a.valuation() < 1:
        raise SeriesError("needs a of valuation >= 1")
    one = TSeries.one(N)
    lhs = TSeries.zero(N)
    poch_a = one  # (a;t)_n
    inv_poch_t = one  # 1/(t;t)_n
    n = 0
    while n * (n + 1) // 2 <= N:
        lhs = lhs + (poch_a * inv_poch_t).shift(n * (n + 1) // 2)
        poch_a = (poch_a * (one - a.shift(n))).normalized()
        inv_poch_t = (inv_poch_t * ts_inv(one - TSeries.t(N, n + 1))).normalized()
        n += 1
    rhs = one
    va = a.valuation() if not a.is_zero() else N + 1
    m = 1
    while m <= N or va + 2 * m - 1 <= N:
        f = one + TSeries.t(N, m) if m <= N else one
        g = one - a.shift(2 * m - 1) if va + 2 * m - 1 <= N else one
        rhs = (rhs * f * g).normalized()
        m += 1
    return lhs.normalized() == rhs.normalized()


# --------------------------------------------------------------------------
# kernel identities (series-level checks of the solution structure)
# --------------------------------------------------------------------------

def two_sided_kernel_residual(order):
    """(1-tU)(U-t) - tU(1-t^2) at the 2-sided kernel root U; must vanish."""
    U = q_series(order)
    t = TSeries.t(order)
    return ((1 - U.shift(1)) * (U - t) - U.shift(1) * _ts(order, {0: 1, 2: -1})).normalized()


def three_sided_q_homogeneity_residual(order):
    """K(u, qu) for K(u,v) = (u-tv)(v-tu) - tuv(1-t^2); vanishes since the
    kernel is homogeneous and q = U(t;1) cancels it."""
    N = order
    q = q_series(N)
    uv = ("u", "v")
    u = CPoly.monomial(uv, N, (1, 0))
    v = CPoly.monomial(uv, N, (0, 1))
    K = (u - v.shift(1)) * (v - u.shift(1)) - (u * v * CPoly.from_tseries(uv, _ts(N, {1: 1, 3: -1})))
    qu = CPoly.from_tseries(("u",), q).mul_mono((1,)).reorder(uv)
    return K.substitute("v", qu).normalized()


def triangular_kernel_parametrization_residual(order):
    """K(U(x), U(tx)) as a polynomial identity in x mod t^(order+1), with
    U(x) = x(1-t)/((1+tx)(1+t^2x)) and K(u,v) = (u-tv)(v-tu) - tuv(1-t^2)(u+v)."""
    N = order
    xv = ("x",)
    x = CPoly.monomial(xv, N, (1,))
    one = CPoly.constant(xv, N)
    u = (x * CPoly.from_tseries(xv, _ts(N, {0: 1, 1: -1}))) * (
        (one + x.shift(1)) * (one + x.shift(2))
    ).inv()
    u = u.normalized()
    v = u.substitute("x", ("t", "x")).normalized()  # U(tx)
    K = (u - v.shift(1)) * (v - u.shift(1)) - (
        u * v * (u + v) * CPoly.from_tseries(xv, _ts(N, {1: 1, 3: -1}))
    )
    return K.normalized()


def x_kernel_residual(order):
    """u(1+tX)(1+t^2X) - X(1-t) for X = x_of_u; must vanish."""
    N = order
    X = x_of_u(N)
    uvar = ("u",)
    one = CPoly.constant(uvar, N)
    lhs = CPoly.monomial(uvar, N, (1,)) * (one + X.shift(1)) * (one + X.shift(2))
    rhs = X * CPoly.from_tseries(uvar, _ts(N, {0: 1, 1: -1}))
    return (lhs - rhs).normalized()
