"""Curve models Y^2 = f(X) over GF(p) (plus a combinatorial superelliptic
descriptor Y^m = f), their genus, places, valuations of function-field
elements, canonical divisor and discriminant degree.

Places are closed points: over a non-algebraically-closed base a place may
have residue degree 2 (an inert Galois orbit of two geometric points).
Affine places are constructible over GF(p)-rational x-coordinates only.
"""

import enum
from dataclasses import dataclass
from functools import lru_cache

from ffmin.algebra import (
    NEG_INF,
    POS_INF,
    LaurentSeries,
    Poly,
    discriminant_in_T,
    fp_is_square,
    fp_sqrt,
    is_prime,
    poly_is_squarefree,
    series_div,
    series_sqrt,
)
from ffmin.errors import CurveError, InternalConsistencyError, PlaceError


class InfinityKind(enum.Enum):
    RAMIFIED = "RAMIFIED"
    SPLIT = "SPLIT"
    INERT = "INERT"


class PlaceKind(enum.IntEnum):
    AFFINE_RAMIFIED = 0
    AFFINE_SPLIT = 1
    AFFINE_INERT = 2
    INF_RAMIFIED = 3
    INF_SPLIT = 4
    INF_INERT = 5


_AFFINE_KINDS = (PlaceKind.AFFINE_RAMIFIED, PlaceKind.AFFINE_SPLIT, PlaceKind.AFFINE_INERT)


@dataclass(frozen=True)
class Place:
    """A closed point of the curve, of residue degree 1 or 2."""

    kind: PlaceKind
    x0: int | None = None
    y0: int | None = None
    sign: int | None = None

    @property
    def degree(self):
        if self.kind in (PlaceKind.AFFINE_INERT, PlaceKind.INF_INERT):
            return 2
        return 1

    @property
    def ramification_index(self):
        if self.kind in (PlaceKind.AFFINE_RAMIFIED, PlaceKind.INF_RAMIFIED):
            return 2
        return 1

    @property
    def is_infinite(self):
        return self.kind in (PlaceKind.INF_RAMIFIED, PlaceKind.INF_SPLIT, PlaceKind.INF_INERT)

    @property
    def is_rational(self):
        return self.degree == 1

    def sort_key(self):
        # affine places first by x0, infinite places last; split branches by tag
        return (
            1 if self.is_infinite else 0,
            self.x0 if self.x0 is not None else 0,
            int(self.kind),
            self.y0 if self.y0 is not None else 0,
            self.sign if self.sign is not None else 0,
        )

    def label(self):
        if self.kind == PlaceKind.INF_SPLIT:
            return "inf+" if self.sign > 0 else "inf-"
        if self.is_infinite:
            return "inf"
        if self.kind == PlaceKind.AFFINE_SPLIT:
            return f"x={self.x0},y={self.y0}"
        return f"x={self.x0}"

    def __repr__(self):
        return f"Place({self.kind.name}, {self.label()})"


class Divisor:
    """Finite formal integer combination of places."""

    __slots__ = ("items",)

    def __init__(self, items=()):
        acc = {}
        for place, n in items:
            if n:
                acc[place] = acc.get(place, 0) + n
        self.items = tuple(
            (P, n) for P, n in sorted(acc.items(), key=lambda kv: kv[0].sort_key()) if n
        )

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def of(cls, place, n=1):
        return cls([(place, n)])

    def degree(self):
        return sum(n * P.degree for P, n in self.items)

    def coeff(self, place):
        for P, n in self.items:
            if P == place:
                return n
        return 0

    def support(self):
        return [P for P, _ in self.items]

    def is_effective(self):
        return all(n > 0 for _, n in self.items)

    def __add__(self, other):
        return Divisor(self.items + other.items)

    def __sub__(self, other):
        return Divisor(self.items + tuple((P, -n) for P, n in other.items))

    def __neg__(self):
        return Divisor(tuple((P, -n) for P, n in self.items))

    def scale(self, k):
        return Divisor(tuple((P, k * n) for P, n in self.items))

    def __eq__(self, other):
        return isinstance(other, Divisor) and self.items == other.items

    def __hash__(self):
        return hash(self.items)

    def render(self):
        if not self.items:
            return "0"
        parts = []
        for P, n in self.items:
            term = P.label() if abs(n) == 1 else f"{abs(n)}*{P.label()}"
            parts.append(("- " if n < 0 else "+ ") + term)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self):
        return f"Divisor({self.render()})"


class CurveModel:
    """Validated model Y^m = f(X) over GF(p); m = 2 is the hyperelliptic case."""

    __slots__ = ("p", "f", "m")

    def __init__(self, p, f, m=2):
        if not is_prime(p):
            raise CurveError(f"{p} is not prime")
        if p == 2:
            raise CurveError("even characteristic is not supported")
        if p > 2**31:
            raise CurveError("modulus too large (need p <= 2^31)")
        if not isinstance(f, Poly):
            f = Poly(p, f)
        if f.p != p:
            raise CurveError("f defined over a different field")
        if f.is_zero() or f.degree < 1:
            raise CurveError("f must be non-constant")
        if not poly_is_squarefree(f):
            raise CurveError(f"f = {f.render()} is not squarefree mod {p}")
        if m == 2:
            if f.degree < 3:
                raise CurveError("hyperelliptic model needs deg f >= 3")
        else:
            if m < 2:
                raise CurveError("need m >= 2")
            if p % m == 0:
                raise CurveError("characteristic divides m (wild ramification)")
            import math

            if math.gcd(m, f.degree) != 1:
                raise CurveError("superelliptic model needs gcd(m, deg f) = 1")
        self.p = p
        self.f = f
        self.m = m

    @property
    def is_hyperelliptic(self):
        return self.m == 2

    @property
    def genus(self):
        if self.m == 2:
            return (self.f.degree - 1) // 2
        return (self.m - 1) * (self.f.degree - 1) // 2

    @property
    def infinity_kind(self):
        self._require_hyperelliptic()
        if self.f.degree % 2 == 1:
            return InfinityKind.RAMIFIED
        if fp_is_square(self.f.lc(), self.p):
            return InfinityKind.SPLIT
        return InfinityKind.INERT

    def equation(self):
        return f"y^{self.m} = {self.f.render()} over gf({self.p})"

    def _require_hyperelliptic(self):
        if self.m != 2:
            raise CurveError("operation needs a hyperelliptic (m = 2) model")

    def __eq__(self, other):
        return (
            isinstance(other, CurveModel)
            and (self.p, self.f, self.m) == (other.p, other.f, other.m)
        )

    def __hash__(self):
        return hash((self.p, self.f, self.m))

    def __repr__(self):
        return f"CurveModel({self.equation()}, g={self.genus})"


def make_curve(p, f, m=2):
    return CurveModel(p, f, m)


def genus(c):
    return c.genus


def infinity_places(c):
    """The places above infinity and their splitting kind."""
    kind = c.infinity_kind
    if kind == InfinityKind.RAMIFIED:
        places = [Place(PlaceKind.INF_RAMIFIED)]
    elif kind == InfinityKind.SPLIT:
        places = [Place(PlaceKind.INF_SPLIT, sign=+1), Place(PlaceKind.INF_SPLIT, sign=-1)]
    else:
        places = [Place(PlaceKind.INF_INERT)]
    return kind, places


def affine_place(c, x0):
    """Places above X = x0: one ramified, two split, or one inert of degree 2."""
    c._require_hyperelliptic()
    x0 %= c.p
    v = c.f.eval(x0)
    if v == 0:
        return [Place(PlaceKind.AFFINE_RAMIFIED, x0=x0)]
    if fp_is_square(v, c.p):
        r = fp_sqrt(v, c.p)
        return [
            Place(PlaceKind.AFFINE_SPLIT, x0=x0, y0=r),
            Place(PlaceKind.AFFINE_SPLIT, x0=x0, y0=(c.p - r) % c.p),
        ]
    return [Place(PlaceKind.AFFINE_INERT, x0=x0)]


def validate_place(c, P):
    """Raise PlaceError unless P is a place of this curve."""
    c._require_hyperelliptic()
    if P.is_infinite:
        kind = c.infinity_kind
        ok = (
            (P.kind == PlaceKind.INF_RAMIFIED and kind == InfinityKind.RAMIFIED)
            or (P.kind == PlaceKind.INF_SPLIT and kind == InfinityKind.SPLIT and P.sign in (1, -1))
            or (P.kind == PlaceKind.INF_INERT and kind == InfinityKind.INERT)
        )
        if not ok:
            raise PlaceError(f"{P!r} does not exist on {c.equation()}")
        return
    if P.x0 is None or not 0 <= P.x0 < c.p:
        raise PlaceError(f"bad x-coordinate in {P!r}")
    v = c.f.eval(P.x0)
    if P.kind == PlaceKind.AFFINE_RAMIFIED:
        ok = v == 0
    elif P.kind == PlaceKind.AFFINE_SPLIT:
        ok = v != 0 and P.y0 is not None and (P.y0 * P.y0) % c.p == v
    else:
        ok = v != 0 and not fp_is_square(v, c.p)
    if not ok:
        raise PlaceError(f"{P!r} does not exist on {c.equation()}")


def canonical_divisor(c):
    """div(dX/Y) = (2g-2) * infinity on odd-degree models."""
    c._require_hyperelliptic()
    if c.infinity_kind != InfinityKind.RAMIFIED:
        raise CurveError("canonical divisor is only materialized on odd-degree models")
    w = Divisor.of(Place(PlaceKind.INF_RAMIFIED), 2 * c.genus - 2)
    if w.degree() != 2 * c.genus - 2:
        raise InternalConsistencyError("canonical divisor degree mismatch")
    return w


def discriminant_degree(c):
    """Degree of disc(T^m - f): deg f for m = 2, (m-1) deg f in general."""
    p = c.p
    coeffs = [-c.f] + [Poly.zero(p)] * (c.m - 1) + [Poly.one(p)]
    d = discriminant_in_T(coeffs)
    if d.is_zero():
        raise InternalConsistencyError("vanishing discriminant on a squarefree model")
    return d.degree


def is_tame_at_infinity(c):
    """True iff no ramification index above infinity is divisible by p."""
    if c.m == 2:
        es = (2,) if c.infinity_kind == InfinityKind.RAMIFIED else (1,)
    else:
        # gcd(m, deg f) = 1 forces total ramification of index m above infinity
        es = (c.m,)
    return all(e % c.p != 0 for e in es)


# ---------------------------------------------------------------------------
# local expansions


def _poly_series_at_inf(f, prec):
    """Series of the polynomial f in t = 1/X (exponents -deg f .. 0)."""
    if f.is_zero():
        return LaurentSeries.zero(f.p, prec)
    return LaurentSeries(f.p, -f.degree, tuple(reversed(f.coeffs)), prec)


def _ratfun_series_at(r, x0, prec):
    if r.is_zero():
        return LaurentSeries.zero(r.p, prec)
    pad = prec + r.num.degree + r.den.degree + 2
    num = LaurentSeries.from_poly(r.num.shifted_arg(x0), pad)
    den = LaurentSeries.from_poly(r.den.shifted_arg(x0), pad)
    return series_div(num, den).truncate(prec)


def _ratfun_series_at_inf(r, prec):
    if r.is_zero():
        return LaurentSeries.zero(r.p, prec)
    pad = prec + r.num.degree + r.den.degree + 2
    num = _poly_series_at_inf(r.num, pad)
    den = _poly_series_at_inf(r.den, pad)
    return series_div(num, den).truncate(prec)


@lru_cache(maxsize=4096)
def _y_series_affine(c, x0, y0, prec):
    """Expansion of Y at the split place (x0, y0), in t = X - x0."""
    fs = c.f.shifted_arg(x0)
    t = series_sqrt(LaurentSeries.from_poly(fs, prec), prec)
    if t.coeff(0) != y0:
        t = -t
    if t.coeff(0) != y0:
        raise InternalConsistencyError("square-root branch does not match place")
    return t

@lru_cache(maxsize=1024)
def _y_series_inf(c, prec):
    """The + branch of Y at split infinity, in t = 1/X (order -(g+1))."""
    gg = c.genus
    rev = Poly(c.p, tuple(reversed(c.f.coeffs)))
    t = series_sqrt(LaurentSeries.from_poly(rev, prec + gg + 1), prec + gg + 1)
    return t.shift(-(gg + 1))


def _round_prec(n):
    return ((n // 16) + 1) * 16


def _zero_order_bound(c, a, b):
    """Upper bound for the valuation of a nonzero element a + Y b."""

    def d(poly):
        return 0 if poly.is_zero() else poly.degree

    total = d(a.num) + d(a.den) + d(b.num) + d(b.den)
    return 2 * total + 2 * c.f.degree + 4 * c.genus + 8


def _series_valuation(c, expand, bound):
    """Adaptive-precision order computation for a local expansion.

    `expand(prec)` returns the local series of the element; precision starts
    small and doubles until a nonzero coefficient appears.  A nonzero
    element's order cannot exceed `bound`, so running past it (or the hard
    cap) means a bug in the expansion machinery.
    """
    prec = 2 * (4 + 4)
    cap = 4 * c.f.degree * (bound + c.genus + 4)
    while True:
        s = expand(prec)
        order = s.order()
        if order is not None:
            return order
        if prec > bound:
            raise InternalConsistencyError(
                "expansion of a nonzero element vanished past its order bound"
            )
        prec = min(2 * prec, cap)
        if prec > cap:
            raise InternalConsistencyError("precision cap exceeded")


def valuation(c, P, x):
    """Order of vanishing of x = a + Y b at the place P (POS_INF for 0).

    Ramified and inert places use closed forms: their two arms live in
    different parity classes / residue classes, so no cancellation is
    possible.  Split places expand a + y(t) b with adaptive precision.
    """
    validate_place(c, P)
    a, b = x.a, x.b
    if a.is_zero() and b.is_zero():
        return POS_INF
    g = c.genus

    if P.kind == PlaceKind.AFFINE_RAMIFIED:
        va = 2 * a.order_at(P.x0) if not a.is_zero() else POS_INF
        vb = 1 + 2 * b.order_at(P.x0) if not b.is_zero() else POS_INF
        return min(va, vb)
    if P.kind == PlaceKind.AFFINE_INERT:
        va = a.order_at(P.x0) if not a.is_zero() else POS_INF
        vb = b.order_at(P.x0) if not b.is_zero() else POS_INF
        return min(va, vb)
    if P.kind == PlaceKind.INF_RAMIFIED:
        va = -2 * a.deg if not a.is_zero() else POS_INF
        vb = -(2 * g + 1) - 2 * b.deg if not b.is_zero() else POS_INF
        return min(va, vb)
    if P.kind == PlaceKind.INF_INERT:
        va = -a.deg if not a.is_zero() else POS_INF
        vb = -(g + 1) - b.deg if not b.is_zero() else POS_INF
        return min(va, vb)

    bound = _zero_order_bound(c, a, b)
    if P.kind == PlaceKind.AFFINE_SPLIT:

        def expand(prec, _prec_round=_round_prec):
            pr = _prec_round(prec)
            y = _y_series_affine(c, P.x0, P.y0, pr)
            return _ratfun_series_at(a, P.x0, pr) + y * _ratfun_series_at(b, P.x0, pr)

        return _series_valuation(c, expand, bound)

    # INF_SPLIT: orders can reach -(g + 1 + deg b), so expand a bit deeper
    def expand(prec, _prec_round=_round_prec):
        pr = _prec_round(prec)
        y = _y_series_inf(c, pr)
        if P.sign < 0:
            y = -y
        return _ratfun_series_at_inf(a, pr) + y * _ratfun_series_at_inf(b, pr)

    return _series_valuation(c, expand, bound)
