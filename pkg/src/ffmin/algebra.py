"""Exact arithmetic over GF(p): field helpers, dense univariate polynomials,
rational functions, truncated Laurent series, and kernels of matrices.

Everything is immutable after construction; all operations are pure.  The
degree of the zero polynomial / zero rational function is NEG_INF, which is
an explicit sentinel participating in max/min logic, never a magic integer.
"""

from ffmin import _core
from ffmin.errors import InternalConsistencyError

NEG_INF = float("-inf")
POS_INF = float("inf")

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, valid far beyond the 2^31 modulus cap."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def fp_inv(a, p):
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of 0 in GF(p)")
    return pow(a, p - 2, p)


def fp_is_square(a, p):
    """Quadratic-residue test by the Euler criterion; 0 counts as a square."""
    a %= p
    if a == 0:
        return True
    return pow(a, (p - 1) // 2, p) == 1


def fp_sqrt(a, p):
    """Canonical square root in GF(p): the smaller of the two roots.

    Tonelli-Shanks in the general case, with the p % 4 == 3 shortcut.
    """
    a %= p
    if a == 0:
        return 0
    if not fp_is_square(a, p):
        raise ValueError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    # write p - 1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while fp_is_square(z, p):
        z += 1
    m, c = s, pow(z, q, p)
    t, r = pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


class Poly:
    """Dense univariate polynomial over GF(p), coefficients low to high."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs=()):
        self.p = p
        c = [int(x) % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, p):
        return cls(p)

    @classmethod
    def one(cls, p):
        return cls(p, (1,))

    @classmethod
    def const(cls, p, c):
        return cls(p, (c,))

    @classmethod
    def x(cls, p):
        return cls(p, (0, 1))

    @classmethod
    def monomial(cls, p, k, c=1):
        return cls(p, (0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self):
        if self.is_zero() or self.lc() == 1:
            return self
        inv = fp_inv(self.lc(), self.p)
        return Poly(self.p, [c * inv for c in self.coeffs])

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        return Poly(self.p, _core.poly_add(list(self.coeffs), list(other.coeffs), self.p))

    def __sub__(self, other):
        other = self._coerce(other)
        return Poly(self.p, _core.poly_sub(list(self.coeffs), list(other.coeffs), self.p))

    def __neg__(self):
        return Poly(self.p, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return Poly(self.p, _core.poly_mul(list(self.coeffs), list(other.coeffs), self.p))

    __rmul__ = __mul__

    def scale(self, c):
        c %= self.p
        if c == 0:
            return Poly.zero(self.p)
        return Poly(self.p, [c * x for x in self.coeffs])

    def __pow__(self, k):
        out = Poly.one(self.p)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other):
        other = self._coerce(other)
        q, r = _core.poly_divmod(list(self.coeffs), list(other.coeffs), self.p)
        return Poly(self.p, q), Poly(self.p, r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def gcd(self, other):
        other = self._coerce(other)
        return Poly(self.p, _core.poly_gcd(list(self.coeffs), list(other.coeffs), self.p))

    def derivative(self):
        return Poly(self.p, [i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x0):
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x0 + c) % self.p
        return acc

    def shifted_arg(self, x0):
        """Coefficients of self(X + x0): Taylor recentering without factorials."""
        x0 %= self.p
        if x0 == 0 or self.is_zero():
            return self
        c = list(self.coeffs)
        n = len(c)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                c[j] = (c[j] + x0 * c[j + 1]) % self.p
        return Poly(self.p, c)

    def reversed_coeffs(self):
        """self read at 1/X: coefficient list reversed (exact, no padding)."""
        return Poly(self.p, tuple(reversed(self.coeffs)))

    def order_at(self, x0):
        """Multiplicity of the root x0 (0 if f(x0) != 0); zero poly -> POS_INF."""
        if self.is_zero():
            return POS_INF
        k = 0
        f = self
        lin = Poly(self.p, ((-x0) % self.p, 1))
        while f.eval(x0) == 0:
            f, r = f.divmod(lin)
            assert r.is_zero()
            k += 1
        return k

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(self.p, other)
        raise TypeError(f"cannot coerce {type(other).__name__} to Poly")

    def render(self, var="x"):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*{var}" if c != 1 else var)
            else:
                terms.append(f"{c}*{var}^{i}" if c != 1 else f"{var}^{i}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Poly(GF({self.p}), {self.render()})"


def poly_divmod(a, b):
    return a.divmod(b)


def poly_gcd(a, b):
    return a.gcd(b)


def poly_is_squarefree(f):
    """True iff gcd(f, f') is constant.

    In odd characteristic this is the usual criterion; f' = 0 (f a p-th
    power) makes the gcd equal f itself, which is then non-constant.
    """
    if f.is_zero():
        raise ValueError("squarefreeness of 0 is undefined")
    if f.degree == 0:
        return True
    d = f.derivative()
    if d.is_zero():
        return False
    return f.gcd(d).degree == 0


class RatFun:
    """Rational function over GF(p) in canonical form: reduced, monic den."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            raise TypeError("pass Poly operands; use RatFun.const for scalars")
        if den is None:
            den = Poly.one(num.p)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Poly.one(num.p)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, r = num.divmod(g)
                assert r.is_zero()
                den, r = den.divmod(g)
                assert r.is_zero()
            if den.lc() != 1:
                inv = fp_inv(den.lc(), den.p)
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, f):
        return cls(f)

    @classmethod
    def zero(cls, p):
        return cls(Poly.zero(p))

    @classmethod
    def one(cls, p):
        return cls(Poly.one(p))

    @classmethod
    def const(cls, p, c):
        return cls(Poly.const(p, c))

    @property
    def p(self):
        return self.num.p

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den.degree == 0

    @property
    def deg(self):
        """deg num - deg den; NEG_INF for the zero function."""
        if self.is_zero():
            return NEG_INF
        return self.num.degree - self.den.degree

    def __eq__(self, other):
        return (
            isinstance(other, RatFun)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        other = self._coerce(other)
        return RatFun(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFun(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, Poly):
            return RatFun(other)
        if isinstance(other, int):
            return RatFun.const(self.p, other)
        raise TypeError(f"cannot coerce {type(other).__name__} to RatFun")

    def order_at(self, x0):
        """(X - x0)-adic order: root multiplicity in num minus in den."""
        if self.is_zero():
            return POS_INF
        return self.num.order_at(x0) - self.den.order_at(x0)

    def render(self, var="x"):
        if self.is_poly():
            return self.num.render(var)
        num = self.num.render(var)
        den = self.den.render(var)
        if "+" in num or "-" in num:
            num = f"({num})"
        if "+" in den or "-" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RatFun(GF({self.p}), {self.render()})"


def ratfun_deg(r):
    return r.deg


def proper_split(r):
    """Unique decomposition r = whole + frac with deg(frac) <= -1."""
    q, rem = r.num.divmod(r.den)
    return q, RatFun(rem, r.den)


class LaurentSeries:
    """Truncated Laurent series over GF(p).

    `lead` is the exponent of the first stored coefficient, `prec` the
    exponent of the first unknown term.  A series that is zero as far as it
    is known is stored with empty coefficients and lead == prec.
    """

    __slots__ = ("p", "lead", "coeffs", "prec")

    def __init__(self, p, lead, coeffs, prec):
        c = [int(x) % p for x in coeffs]
        if lead + len(c) > prec:
            del c[prec - lead:]
        while c and c[0] == 0:
            c.pop(0)
            lead += 1
        while c and c[-1] == 0:
            c.pop()
        if not c:
            lead = prec
        self.p = p
        self.lead = lead
        self.coeffs = tuple(c)
        self.prec = prec

    @classmethod
    def zero(cls, p, prec):
        return cls(p, prec, (), prec)

    @classmethod
    def from_poly(cls, f, prec, shift=0):
        """Series of f * t^shift, exact up to the requested precision."""
        return cls(f.p, shift, f.coeffs, prec)

    def order(self):
        """Exponent of the first nonzero coefficient; None if zero to prec."""
        return self.lead if self.coeffs else None

    def coeff(self, e):
        if e >= self.prec:
            raise ValueError(f"coefficient {e} beyond precision {self.prec}")
        i = e - self.lead
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def truncate(self, prec):
        if prec >= self.prec:
            return self
        return LaurentSeries(self.p, self.lead, self.coeffs, prec)

    def shift(self, k):
        return LaurentSeries(self.p, self.lead + k, self.coeffs, self.prec + k)

    def __add__(self, other):
        prec = min(self.prec, other.prec)
        lead = min(self.lead, other.lead, prec)
        out = [0] * (prec - lead)
        for i, c in enumerate(self.coeffs):
            e = self.lead + i
            if e < prec:
                out[e - lead] = c
        for i, c in enumerate(other.coeffs):
            e = other.lead + i
            if e < prec:
                out[e - lead] = (out[e - lead] + c) % self.p
        return LaurentSeries(self.p, lead, out, prec)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentSeries(self.p, self.lead, [-c for c in self.coeffs], self.prec)

    def scale(self, c):
        return LaurentSeries(self.p, self.lead, [c * x for x in self.coeffs], self.prec)

    def __mul__(self, other):
        p = self.p
        prec = min(self.prec + other.lead, other.prec + self.lead)
        lead = self.lead + other.lead
        n = prec - lead
        if n <= 0 or not self.coeffs or not other.coeffs:
            return LaurentSeries.zero(p, prec)
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            jmax = min(len(other.coeffs), n - i)
            for j in range(jmax):
                out[i + j] = (out[i + j] + a * other.coeffs[j]) % p
        return LaurentSeries(p, lead, out, prec)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentSeries)
            and (self.p, self.lead, self.coeffs, self.prec)
            == (other.p, other.lead, other.coeffs, other.prec)
        )

    def __hash__(self):
        return hash((self.p, self.lead, self.coeffs, self.prec))

    def __repr__(self):
        terms = [f"{c}*t^{self.lead + i}" for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"<{body} + O(t^{self.prec})>"


def series_div(a, b):
    """Long division of Laurent series; b must have a known nonzero lead."""
    if b.order() is None:
        raise ZeroDivisionError("division by a series with no known nonzero term")
    p = a.p
    rel = min(a.prec - a.lead, b.prec - b.lead)
    lead = a.lead - b.lead
    if not a.coeffs:
        return LaurentSeries.zero(p, a.prec - b.lead)
    rel = min(rel, a.prec - a.lead)
    binv = fp_inv(b.coeffs[0], p)
    # normalized remainders: work on coefficient windows of length rel
    r = [a.coeff(a.lead + i) if a.lead + i < a.prec else 0 for i in range(rel)]
    bc = [b.coeff(b.lead + i) if b.lead + i < b.prec else 0 for i in range(rel)]
    q = [0] * rel
    for k in range(rel):
        c = (r[k] * binv) % p
        q[k] = c
        if c:
            for j in range(k, rel):
                r[j] = (r[j] - c * bc[j - k]) % p
    return LaurentSeries(p, lead, q, lead + rel)


def series_sqrt(s, prec):
    """Square root of a Laurent series by Newton iteration t <- (t + s/t)/2.

    Requires an even leading exponent and a square leading coefficient; the
    branch is fixed by taking the canonical (smaller) square root of the
    leading coefficient.
    """
    p = s.p
    if s.order() is None:
        return LaurentSeries.zero(p, (s.prec + 1) // 2)
    e = s.lead
    if e % 2:
        raise ValueError("odd leading exponent has no Laurent square root")
    c0 = s.coeffs[0]
    if not fp_is_square(c0, p):
        raise ValueError(f"leading coefficient {c0} is not a square mod {p}")
    unit = s.shift(-e)
    rel_target = min(prec, s.prec) - e
    if rel_target <= 0:
        return LaurentSeries.zero(p, prec)
    inv2 = fp_inv(2, p)
    t = LaurentSeries(p, 0, (fp_sqrt(c0, p),), 1)
    rel = 1
    while rel < rel_target:
        rel = min(2 * rel, rel_target)
        u = unit.truncate(rel)
        t = LaurentSeries(p, t.lead, t.coeffs, rel)
        t = (t + series_div(u, t)).scale(inv2)
    return t.shift(e // 2).truncate(e // 2 + rel_target)


class FpMatrix:
    """Dense matrix over GF(p); thin wrapper for kernel computation."""

    __slots__ = ("p", "nrows", "ncols", "rows")

    def __init__(self, p, nrows, ncols, rows):
        rows = [tuple(int(x) % p for x in row) for row in rows]
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError("inconsistent matrix dimensions")
        self.p = p
        self.nrows = nrows
        self.ncols = ncols
        self.rows = tuple(rows)

    def kernel(self):
        """Echelonized basis of the right kernel; empty for full column rank."""
        basis = _core.nullspace([list(r) for r in self.rows], self.ncols, self.p)
        return [tuple(v) for v in basis]

    def mul_vector(self, v):
        return tuple(sum(a * b for a, b in zip(row, v)) % self.p for row in self.rows)


def kernel(m):
    return m.kernel()


def discriminant_in_T(coeffs):
    """Discriminant of a monic polynomial in T with Poly coefficients.

    Computed as (-1)^(m(m-1)/2) * Res(g, g') via a Sylvester-matrix
    determinant over k[X], evaluated by fraction-free (Bareiss) elimination.
    """
    coeffs = list(coeffs)
    m = len(coeffs) - 1
    if m < 1:
        raise ValueError("need degree >= 1 in T")
    top = coeffs[-1]
    p = top.p
    if top != Poly.one(p):
        raise ValueError("input must be monic in T")
    if m % p == 0:
        raise ValueError("characteristic divides the T-degree (wild case)")
    dcoeffs = [coeffs[i].scale(i) for i in range(1, m + 1)]  # g', degree m-1
    n = 2 * m - 1
    zero, one = Poly.zero(p), Poly.one(p)
    g_hi = [coeffs[m - i] for i in range(m + 1)]
    d_hi = [dcoeffs[m - 1 - i] for i in range(m)]
    mat = []
    for i in range(m - 1):
        mat.append([zero] * i + g_hi + [zero] * (n - i - m - 1))
    for i in range(m):
        mat.append([zero] * i + d_hi + [zero] * (n - i - m))
    sign = 1
    prev = one
    for k in range(n - 1):
        if mat[k][k].is_zero():
            for i in range(k + 1, n):
                if not mat[i][k].is_zero():
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return Poly.zero(p)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j]
                q, r = num.divmod(prev)
                if not r.is_zero():
                    raise InternalConsistencyError("Bareiss exact division failed")
                mat[i][j] = q
            mat[i][k] = zero
        prev = mat[k][k]
    det = mat[n - 1][n - 1]
    if sign < 0:
        det = -det
    if (m * (m - 1) // 2) % 2:
        det = -det
    return det
