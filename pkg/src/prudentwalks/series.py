"""Exact truncated power series in t and polynomials in catalytic variables.

All coefficients are exact: Python ints, or fractions.Fraction where square
roots and inverses force denominators.  Every series carries an explicit
truncation order N and is exact modulo t^(N+1); binary operations on
mismatched orders truncate to the smaller one.

Divided differences are computed monomial-wise through the finite geometric
sum (x^i - r^i)/(x - r) = sum_k x^(i-1-k) r^k.  No rational-function
arithmetic appears anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction

Rat = Fraction  # exact rational coefficients; plain ints are used when no division occurs


class SeriesError(ValueError):
    """Invalid input to a series operation."""


def _half(c):
    """Exact c/2, staying an int when possible."""
    if isinstance(c, int):
        return c // 2 if c % 2 == 0 else Fraction(c, 2)
    return c / 2


def coeff_to_str(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def coeff_from_str(s):
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return int(s)


class TSeries:
    """Power series in t with exact coefficients, truncated at t^order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            if not coeffs:
                raise SeriesError("empty coefficient list needs an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise SeriesError("order must be >= 0")
        if len(coeffs) <= order:
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        else:
            del coeffs[order + 1:]
        self.order = order
        self.coeffs = coeffs

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order):
        return cls([0], order)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def t(cls, order, power=1, c=1):
        coeffs = [0] * (order + 1)
        if power <= order:
            coeffs[power] = c
        return cls(coeffs, order)

    @classmethod
    def from_terms(cls, order, terms):
        """terms: mapping exponent -> coefficient."""
        coeffs = [0] * (order + 1)
        for e, c in terms.items():
            if 0 <= e <= order:
                coeffs[e] = c
        return cls(coeffs, order)

    # -- basics ------------------------------------------------------------

    def __getitem__(self, n):
        if not 0 <= n <= self.order:
            raise IndexError("coefficient t^%d outside truncation order %d" % (n, self.order))
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return self.order + 1

    def __eq__(self, other):
        if isinstance(other, TSeries):
            return self.order == other.order and all(
                a == b for a, b in zip(self.coeffs, other.coeffs)
            )
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash((self.order, tuple(Fraction(c) for c in self.coeffs)))

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[: min(8, self.order + 1)])
        tail = ", ..." if self.order >= 8 else ""
        return "TSeries([%s%s], order=%d)" % (shown, tail, self.order)

    def agrees(self, other, order=None):
        """Equality modulo t^(min order + 1)."""
        n = min(self.order, other.order)
        if order is not None:
            n = min(n, order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    def is_zero(self):
        return not any(self.coeffs)

    def valuation(self):
        """Index of the first nonzero coefficient, or None for the zero series."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def truncate(self, order):
        if order > self.order:
            raise SeriesError("cannot extend truncation order %d to %d" % (self.order, order))
        return TSeries(self.coeffs[: order + 1], order)

    def shift(self, k):
        """Multiplication by t^k (k >= 0), same truncation order."""
        if k < 0:
            raise SeriesError("negative shift")
        return TSeries([0] * k + self.coeffs[: self.order + 1 - k], self.order)

    def shift_down(self, k):
        """Exact division by t^k; requires valuation >= k.  Order drops by k."""
        if any(self.coeffs[:k]):
            raise SeriesError("series is not divisible by t^%d" % k)
        if self.order - k < 0:
            raise SeriesError("order too small for shift_down")
        return TSeries(self.coeffs[k:], self.order - k)

    def integer_coeffs(self):
        """Coefficients as ints; raises if any coefficient is non-integral."""
        out = []
        for n, c in enumerate(self.coeffs):
            f = Fraction(c)
            if f.denominator != 1:
                raise SeriesError("coefficient of t^%d is not an integer: %s" % (n, c))
            out.append(f.numerator)
        return out

    def normalized(self):
        """Same series with integral Fractions demoted to plain ints."""
        return TSeries(
            [
                c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c
                for c in self.coeffs
            ],
            self.order,
        )

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            coeffs = self.coeffs[:]
            coeffs[0] = coeffs[0] + other
            return TSeries(coeffs, self.order)
        order = min(self.order, other.order)
        return TSeries(
            [self.coeffs[k] + other.coeffs[k] for k in range(order + 1)], order
        )

    __radd__ = __add__

    def __neg__(self):
        return TSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return TSeries.zero(self.order)
            return TSeries([c * other for c in self.coeffs], self.order)
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (order + 1)
        for i in range(order + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(order + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TSeries(out, order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            inv = Fraction(1, 1) / other
            return self * inv
        return self * other.inv()

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise SeriesError("only non-negative integer powers")
        result = TSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def inv(self):
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self.coeffs[0]
        if not c0:
            raise SeriesError("ts_inv requires a nonzero constant term")
        if c0 == 1:
            b0 = 1
        elif c0 == -1:
            b0 = -1
        else:
            b0 = Fraction(1, 1) / c0
        n = self.order
        out = [0] * (n + 1)
        out[0] = b0
        a = self.coeffs
        for m in range(1, n + 1):
            s = 0
            for k in range(1, m + 1):
                ak = a[k]
                if ak:
                    s += ak * out[m - k]
            out[m] = -b0 * s if b0 != 1 else -s
        return TSeries(out, n)

    def sqrt(self):
        """Square root with constant term 1; r*r == self mod t^(order+1)."""
        if self.coeffs[0] != 1:
            raise SeriesError("ts_sqrt requires constant term 1")
        n = self.order
        out = [0] * (n + 1)
        out[0] = 1
        a = self.coeffs
        for m in range(1, n + 1):
            s = a[m]
            for k in range(1, m):
                rk = out[k]
                if rk:
                    s -= rk * out[m - k]
            out[m] = _half(s)
        return TSeries(out, n)

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return {
            "order": self.order,
            "terms": [
                {
                    "u": 0,
                    "v": 0,
                    "w": 0,
                    "z": 0,
                    "coeffs": [coeff_to_str(c) for c in self.coeffs],
                }
            ],
        }

    @classmethod
    def from_json(cls, obj):
        (term,) = obj["terms"]
        return cls([coeff_from_str(s) for s in term["coeffs"]], obj["order"])


# spec-named wrappers ------------------------------------------------------

def ts_add(a, b):
    return a + b


def ts_mul(a, b):
    return a * b


def ts_inv(a):
    return a.inv()


def ts_sqrt(a):
    return a.sqrt()


def geometric(order, shift=1, c=1):
    """1/(1 - c*t^shift) as a TSeries (shift >= 1)."""
    if shift < 1:
        raise SeriesError("geometric needs shift >= 1")
    coeffs = [0] * (order + 1)
    power = 1
    for m in range(0, order // shift + 1):
        coeffs[m * shift] = power
        power *= c
    return TSeries(coeffs, order)


def pochhammer(a, q, n):
    """(a;q)_n = (1-a)(1-aq)...(1-aq^(n-1)) over TSeries; (a;q)_0 = 1."""
    order = min(a.order, q.order)
    result = TSeries.one(order)
    aq = a.truncate(order)
    for _ in range(n):
        result = result * (TSeries.one(order) - aq)
        aq = aq * q
    return result


def ts_compose(outer, inner):
    """Substitute `inner` (a TSeries, or 0/1) for the auxiliary variable of `outer`.

    `outer` is a single-variable CPoly: a series in t whose coefficients are
    polynomials in one catalytic variable.  The substitution is exact modulo
    t^(order+1) when inner has valuation >= 1.  An inner series with nonzero
    constant term is accepted only when every stored term of `outer` has
    coefficient valuation >= its variable exponent (then the slice at t^n of
    the composition still only involves finitely many terms); otherwise it is
    rejected as invalid input.
    """
    if len(outer.vars) != 1:
        raise SeriesError("ts_compose expects a single-variable outer series")
    order = outer.order
    if isinstance(inner, int):
        if inner == 0:
            return outer.coefficient((0,)).truncate(order)
        if inner == 1:
            inner = TSeries.one(order)
        else:
            raise SeriesError("constant inner must be 0 or 1")
    order = min(order, inner.order)
    if inner.coeffs[0] != 0:
        for exps, coeff in outer.terms().items():
            e = exps[0]
            val = coeff.valuation()
            if e > 0 and (val is None or val < e):
                raise SeriesError(
                    "inner has nonzero constant term and outer violates the "
                    "valuation-dominance condition at exponent %d" % e
                )
    # group coefficients by variable exponent, then Horner-free direct sum
    by_exp = {}
    for n in range(min(outer.order, order) + 1):
        for exps, c in outer.slices[n].items():
            by_exp.setdefault(exps[0], {})[n] = c
    result = TSeries.zero(order)
    power = TSeries.one(order)
    for e in range(0, max(by_exp) + 1 if by_exp else 0):
        if e > 0:
            power = power * inner
            if power.is_zero():
                break
        if e in by_exp:
            result = result + TSeries.from_terms(order, by_exp[e]) * power
    return result


# --------------------------------------------------------------------------
# CPoly: polynomials in catalytic variables with TSeries coefficients.
# Stored slice-wise: slices[n] maps exponent tuples to the t^n coefficient.
# --------------------------------------------------------------------------

def _dict_add_into(dst, src, scale=1):
    for key, c in src.items():
        c = c * scale if scale != 1 else c
        acc = dst.get(key, 0) + c
        if acc:
            dst[key] = acc
        elif key in dst:
            del dst[key]


def _dict_mul(a, b):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            acc = out.get(key, 0) + ca * cb
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
    return out


class CPoly:
    """Truncated series in t whose coefficients are (Laurent) monomial sums
    in named catalytic variables.

    Exponents may be negative only for the refinement variable z.  A stored
    term is dropped as soon as its coefficient vanishes modulo t^(N+1).
    """

    __slots__ = ("vars", "order", "slices")

    def __init__(self, vars, order, slices=None):
        self.vars = tuple(vars)
        self.order = order
        if slices is None:
            slices = [dict() for _ in range(order + 1)]
        self.slices = slices

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars, order):
        return cls(vars, order)

    @classmethod
    def constant(cls, vars, order, c=1):
        p = cls(vars, order)
        if c:
            p.slices[0][(0,) * len(p.vars)] = c
        return p

    @classmethod
    def monomial(cls, vars, order, exps, c=1, tpow=0):
        p = cls(vars, order)
        if c and tpow <= order:
            p.slices[tpow][tuple(exps)] = c
        return p

    @classmethod
    def from_tseries(cls, vars, ts, exps=None):
        vars = tuple(vars)
        if exps is None:
            exps = (0,) * len(vars)
        p = cls(vars, ts.order)
        for n, c in enumerate(ts.coeffs):
            if c:
                p.slices[n][tuple(exps)] = c
        return p

    @classmethod
    def geom(cls, vars, order, tpow, exps, c=1):
        """1/(1 - c * t^tpow * mono(exps)); requires tpow >= 1."""
        if tpow < 1:
            raise SeriesError("geom needs a positive t-power for convergence")
        vars = tuple(vars)
        p = cls(vars, order)
        power = 1
        for m in range(order // tpow + 1):
            p.slices[m * tpow][tuple(e * m for e in exps)] = power
            power *= c
        return p

    # -- views -------------------------------------------------------------

    def _vi(self, var):
        try:
            return self.vars.index(var)
        except ValueError:
            raise SeriesError("unknown catalytic variable %r" % var) from None

    def terms(self):
        """Mapping exponent tuple -> TSeries coefficient (no zero series)."""
        acc = {}
        for n, slc in enumerate(self.slices):
            for key, c in slc.items():
                acc.setdefault(key, [0] * (self.order + 1))[n] = c
        return {key: TSeries(cs, self.order) for key, cs in acc.items() if any(cs)}

    def coefficient(self, exps):
        exps = tuple(exps)
        cs = [slc.get(exps, 0) for slc in self.slices]
        return TSeries(cs, self.order)

    def t_slice(self, n):
        return dict(self.slices[n])

    def is_zero(self):
        return all(not slc for slc in self.slices)

    def max_degree(self, var):
        k = self._vi(var)
        degs = [key[k] for slc in self.slices for key in slc]
        return max(degs) if degs else 0

    def __eq__(self, other):
        if not isinstance(other, CPoly):
            return NotImplemented
        if self.vars != other.vars or self.order != other.order:
            return False
        for a, b in zip(self.slices, other.slices):
            if len(a) != len(b):
                return False
            for key, c in a.items():
                if key not in b or b[key] != c:
                    return False
        return True

    def __repr__(self):
        nterms = sum(len(s) for s in self.slices)
        return "CPoly(vars=%r, order=%d, %d stored monomials)" % (
            self.vars,
            self.order,
            nterms,
        )

    # -- arithmetic --------------------------------------------------------

    def _check_vars(self, other):
        if self.vars != other.vars:
            raise SeriesError("variable sets differ: %r vs %r" % (self.vars, other.vars))

    def truncate(self, order):
        if order > self.order:
            raise SeriesError("cannot extend truncation order")
        return CPoly(self.vars, order, [dict(s) for s in self.slices[: order + 1]])

    def copy(self):
        return CPoly(self.vars, self.order, [dict(s) for s in self.slices])

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CPoly.constant(self.vars, self.order, other)
        self._check_vars(other)
        order = min(self.order, other.order)
        out = CPoly(self.vars, order, [dict(s) for s in self.slices[: order + 1]])
        for n in range(order + 1):
            _dict_add_into(out.slices[n], other.slices[n])
        return out

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CPoly.constant(self.vars, self.order, other)
        return self + (other * -1)

    def __rsub__(self, other):
        return (self * -1) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return CPoly.zero(self.vars, self.order)
            out = CPoly(self.vars, self.order)
            for n, slc in enumerate(self.slices):
                out.slices[n] = {k: c * other for k, c in slc.items()}
            return out
        if isinstance(other, TSeries):
            other = CPoly.from_tseries(self.vars, other)
        self._check_vars(other)
        order = min(self.order, other.order)
        out = CPoly(self.vars, order)
        for na in range(order + 1):
            sa = self.slices[na]
            if not sa:
                continue
            for nb in range(order + 1 - na):
                sb = other.slices[nb]
                if sb:
                    _dict_add_into(out.slices[na + nb], _dict_mul(sa, sb))
        return out

    __rmul__ = __mul__

    def mul_mono(self, exps=None, tpow=0, c=1):
        """Multiply by c * t^tpow * mono(exps) (fast path)."""
        out = CPoly(self.vars, self.order)
        if exps is None:
            exps = (0,) * len(self.vars)
        exps = tuple(exps)
        for n, slc in enumerate(self.slices):
            m = n + tpow
            if m > self.order:
                break
            tgt = out.slices[m]
            for key, coeff in slc.items():
                tgt[tuple(x + y for x, y in zip(key, exps))] = coeff * c
        return out

    def shift(self, k):
        return self.mul_mono(tpow=k)

    def shift_down(self, k):
        """Exact division by t^k; the k lowest slices must vanish."""
        if any(self.slices[m] for m in range(k)):
            raise SeriesError("CPoly not divisible by t^%d" % k)
        out = CPoly(self.vars, self.order - k)
        out.slices = [dict(s) for s in self.slices[k:]]
        return out

    def normalized(self):
        """Demote integral Fraction coefficients to ints, drop zeros."""
        out = CPoly(self.vars, self.order)
        for n, slc in enumerate(self.slices):
            tgt = out.slices[n]
            for key, c in slc.items():
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = c.numerator
                if c:
                    tgt[key] = c
        return out

    def inv(self):
        """Inverse when the t^0 slice is a nonzero constant (no catalytic part)."""
        zero_key = (0,) * len(self.vars)
        s0 = self.slices[0]
        if list(s0.keys()) not in ([zero_key], []) or not s0.get(zero_key):
            raise SeriesError("CPoly.inv needs a pure nonzero constant term")
        c0 = s0[zero_key]
        if c0 == 1:
            b0 = 1
        elif c0 == -1:
            b0 = -1
        else:
            b0 = Fraction(1, 1) / c0
        out = CPoly(self.vars, self.order)
        out.slices[0][zero_key] = b0
        for m in range(1, self.order + 1):
            acc = {}
            for k in range(1, m + 1):
                sk = self.slices[k]
                if sk:
                    _dict_add_into(acc, _dict_mul(sk, out.slices[m - k]))
            out.slices[m] = {key: -b0 * c for key, c in acc.items() if c}
        return out

    def sqrt(self):
        """Square root when the t^0 slice is exactly 1."""
        zero_key = (0,) * len(self.vars)
        if self.slices[0] != {zero_key: 1}:
            raise SeriesError("CPoly.sqrt needs constant term exactly 1")
        out = CPoly(self.vars, self.order)
        out.slices[0][zero_key] = 1
        for m in range(1, self.order + 1):
            acc = dict(self.slices[m])
            for k in range(1, m):
                sk = out.slices[k]
                if sk:
                    _dict_add_into(acc, _dict_mul(sk, out.slices[m - k]), -1)
            out.slices[m] = {key: _half(c) for key, c in acc.items() if c}
        return out

    # -- substitution and divided differences ------------------------------

    def substitute(self, var, image):
        """Substitute `image` for `var`.

        Supported images:
          0, 1                  -- specialization
          "t"                   -- var := t
          another variable name -- var := that variable (merge exponents)
          ("t", name)           -- var := t * name
          ("t", name, exp)      -- var := t * name^exp  (exp = +-1)
          TSeries               -- var := series value
        Monomials whose t-order exceeds the truncation order are dropped.
        """
        k = self._vi(var)
        out = CPoly(self.vars, self.order)
        if image == 0:
            for n, slc in enumerate(self.slices):
                tgt = out.slices[n]
                for key, c in slc.items():
                    if key[k] == 0:
                        _dict_add_into(tgt, {key: c})
            return out
        if image == 1:
            for n, slc in enumerate(self.slices):
                tgt = out.slices[n]
                for key, c in slc.items():
                    nk = list(key)
                    nk[k] = 0
                    _dict_add_into(tgt, {tuple(nk): c})
            return out
        if image == "t":
            for n, slc in enumerate(self.slices):
                for key, c in slc.items():
                    e = key[k]
                    if e < 0:
                        raise SeriesError("cannot substitute t for a negative exponent")
                    m = n + e
                    if m <= self.order:
                        nk = list(key)
                        nk[k] = 0
                        _dict_add_into(out.slices[m], {tuple(nk): c})
            return out
        if isinstance(image, str):
            j = self._vi(image)
            for n, slc in enumerate(self.slices):
                tgt = out.slices[n]
                for key, c in slc.items():
                    nk = list(key)
                    e = nk[k]
                    nk[k] = 0
                    nk[j] += e
                    _dict_add_into(tgt, {tuple(nk): c})
            return out
        if isinstance(image, tuple) and image and image[0] == "t":
            name = image[1]
            exp = image[2] if len(image) > 2 else 1
            j = self._vi(name)
            for n, slc in enumerate(self.slices):
                for key, c in slc.items():
                    e = key[k]
                    if e < 0:
                        raise SeriesError("t*var image needs non-negative exponents")
                    m = n + e
                    if m <= self.order:
                        nk = list(key)
                        nk[k] = 0 if j != k else nk[k] - e
                        nk[j] += e * exp
                        _dict_add_into(out.slices[m], {tuple(nk): c})
            return out
        if isinstance(image, TSeries):
            order = min(self.order, image.order)
            out = CPoly(self.vars, order)
            powers = [TSeries.one(order)]
            for n in range(order + 1):
                for key, c in self.slices[n].items():
                    e = key[k]
                    if e < 0:
                        raise SeriesError("series image needs non-negative exponents")
                    while len(powers) <= e:
                        powers.append(powers[-1] * image)
                    nk = list(key)
                    nk[k] = 0
                    nk = tuple(nk)
                    for m, pc in enumerate(powers[e].coeffs):
                        if pc and n + m <= order:
                            _dict_add_into(out.slices[n + m], {nk: c * pc})
            return out
        if isinstance(image, CPoly):
            order = min(self.order, image.order)
            image = image.reorder(self.vars)
            out = CPoly(self.vars, order)
            powers = [CPoly.constant(self.vars, order)]
            for n in range(order + 1):
                for key, c in self.slices[n].items():
                    e = key[k]
                    if e < 0:
                        raise SeriesError("cpoly image needs non-negative exponents")
                    while len(powers) <= e:
                        powers.append(powers[-1] * image)
                    nk = list(key)
                    nk[k] = 0
                    nk = tuple(nk)
                    pw = powers[e]
                    for m in range(order + 1 - n):
                        slc = pw.slices[m]
                        if slc:
                            _dict_add_into(
                                out.slices[n + m],
                                {tuple(x + y for x, y in zip(nk, kk)): c * cc
                                 for kk, cc in slc.items()},
                            )
            return out
        raise SeriesError("unsupported substitution image %r" % (image,))

    def divided_difference(self, var, replacement):
        """(f - f[var:=r]) / (var - r), computed monomial-wise.

        replacement is "t" (r = t) or ("t", name[, exp]) (r = t*name^exp).
        Exact: the returned g satisfies g*(var - r) = f - f[var:=r].
        """
        k = self._vi(var)
        if replacement == "t":
            j, exp = None, 0
        elif isinstance(replacement, tuple) and replacement[0] == "t":
            j = self._vi(replacement[1])
            exp = replacement[2] if len(replacement) > 2 else 1
        else:
            raise SeriesError("unsupported divided-difference replacement %r" % (replacement,))
        out = CPoly(self.vars, self.order)
        for n, slc in enumerate(self.slices):
            for key, c in slc.items():
                e = key[k]
                if e < 0:
                    raise SeriesError("divided difference needs non-negative exponents")
                # x^e -> sum_{m=0}^{e-1} x^(e-1-m) r^m
                for m in range(e):
                    tn = n + m
                    if tn > self.order:
                        break
                    nk = list(key)
                    nk[k] = e - 1 - m
                    if j is not None:
                        nk[j] += m * exp
                    _dict_add_into(out.slices[tn], {tuple(nk): c})
        return out

    def invert_var(self, var):
        """var -> 1/var (negate exponents; meaningful for the Laurent variable z)."""
        k = self._vi(var)
        out = CPoly(self.vars, self.order)
        for n, slc in enumerate(self.slices):
            tgt = out.slices[n]
            for key, c in slc.items():
                nk = list(key)
                nk[k] = -nk[k]
                tgt[tuple(nk)] = c
        return out

    def rename(self, mapping):
        """Rename variables; mapping old->new must be a bijection on names."""
        new_vars = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(new_vars)) != len(new_vars):
            raise SeriesError("rename would collide variables")
        return CPoly(new_vars, self.order, [dict(s) for s in self.slices])

    def reorder(self, vars):
        """Return an equal CPoly over the given variable tuple (a permutation,
        superset, or subset-with-zero-exponents of the current one)."""
        vars = tuple(vars)
        pos = {v: i for i, v in enumerate(vars)}
        drop = [i for i, v in enumerate(self.vars) if v not in pos]
        out = CPoly(vars, self.order)
        for n, slc in enumerate(self.slices):
            tgt = out.slices[n]
            for key, c in slc.items():
                if any(key[i] for i in drop):
                    raise SeriesError("cannot drop variable with nonzero exponent")
                nk = [0] * len(vars)
                for i, v in enumerate(self.vars):
                    if v in pos:
                        nk[pos[v]] = key[i]
                _dict_add_into(tgt, {tuple(nk): c})
        return out

    def specialize_ones(self):
        """TSeries obtained by setting every catalytic variable to 1."""
        cs = [0] * (self.order + 1)
        for n, slc in enumerate(self.slices):
            cs[n] = sum(slc.values())
        return TSeries(cs, self.order)

    def counting_coeffs(self):
        """Specialize all variables to 1 and assert integrality (walk counts)."""
        return self.specialize_ones().integer_coeffs()

    # -- serialization -----------------------------------------------------

    _JSON_FIELDS = ("u", "v", "w", "z")

    def to_json(self):
        terms = []
        for key in sorted(self.terms().keys()):
            coeff = self.coefficient(key)
            entry = {f: 0 for f in self._JSON_FIELDS}
            for v, e in zip(self.vars, key):
                if v not in self._JSON_FIELDS:
                    raise SeriesError("JSON schema only covers variables u, v, w, z")
                entry[v] = e
            entry["coeffs"] = [coeff_to_str(c) for c in coeff.coeffs]
            terms.append(entry)
        return {"order": self.order, "terms": terms}

    @classmethod
    def from_json(cls, obj, vars=None):
        order = obj["order"]
        if vars is None:
            used = set()
            for term in obj["terms"]:
                for f in cls._JSON_FIELDS:
                    if term.get(f, 0):
                        used.add(f)
            vars = tuple(f for f in cls._JSON_FIELDS if f in used) or ("u",)
        p = cls(tuple(vars), order)
        for term in obj["terms"]:
            key = tuple(term.get(v, 0) for v in p.vars)
            for n, s in enumerate(term["coeffs"]):
                if n > order:
                    break
                c = coeff_from_str(s)
                if c:
                    _dict_add_into(p.slices[n], {key: c})
        return p


# spec-named wrappers ------------------------------------------------------

def cp_substitute(f, var, image):
    return f.substitute(var, image)


def cp_divided_difference(f, var, replacement):
    return f.divided_difference(var, replacement)
