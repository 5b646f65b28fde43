"""Arithmetic in K = k(X)[Y]/(Y^2 - f): elements a + Y b, norms, S-degrees
with respect to the places above infinity, exact Euclidean reduction at
inert/ramified infinity, a brute-force inner-minimum oracle, and the
minimum dispatcher.
"""

import enum
from dataclasses import dataclass

from ffmin import _core
from ffmin.algebra import NEG_INF, Poly, RatFun, proper_split, ratfun_deg
from ffmin.curve import (
    CurveModel,
    InfinityKind,
    Place,
    PlaceKind,
    infinity_places,
    validate_place,
    valuation,
)
from ffmin.errors import CapExceededError, CurveError, InternalConsistencyError, ReductionError

BRUTE_FORCE_PAIR_CAP = 10**7


class FFElem:
    """Element a + Y b of the function field, components in k(X)."""

    __slots__ = ("curve", "a", "b")

    def __init__(self, curve, a, b=None):
        curve._require_hyperelliptic()
        self.curve = curve
        self.a = self._coerce(curve, a)
        self.b = self._coerce(curve, b) if b is not None else RatFun.zero(curve.p)

    @staticmethod
    def _coerce(curve, v):
        if isinstance(v, RatFun):
            return v
        if isinstance(v, Poly):
            return RatFun(v)
        if isinstance(v, int):
            return RatFun.const(curve.p, v)
        raise TypeError(f"cannot coerce {type(v).__name__} to a field component")

    @classmethod
    def zero(cls, curve):
        return cls(curve, 0)

    @classmethod
    def one(cls, curve):
        return cls(curve, 1)

    @classmethod
    def x(cls, curve):
        return cls(curve, Poly.x(curve.p))

    @classmethod
    def y(cls, curve):
        return cls(curve, 0, 1)

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def _check(self, other):
        if self.curve != other.curve:
            raise CurveError("elements live on different curves")

    def __add__(self, other):
        self._check(other)
        return FFElem(self.curve, self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        self._check(other)
        return FFElem(self.curve, self.a - other.a, self.b - other.b)

    def __neg__(self):
        return FFElem(self.curve, -self.a, -self.b)

    def __mul__(self, other):
        self._check(other)
        f = RatFun(self.curve.f)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return FFElem(self.curve, a1 * a2 + f * b1 * b2, a1 * b2 + a2 * b1)

    def conj(self):
        return FFElem(self.curve, self.a, -self.b)

    def __eq__(self, other):
        return (
            isinstance(other, FFElem)
            and self.curve == other.curve
            and (self.a, self.b) == (other.a, other.b)
        )

    def __hash__(self):
        return hash((self.curve, self.a, self.b))

    def render(self):
        return f"{self.a.render()};{self.b.render()}"

    def __repr__(self):
        return f"FFElem({self.a.render()} + y*({self.b.render()}))"


def norm(x):
    """a^2 - f b^2 = x * conj(x) restricted to the k(X)-component."""
    f = RatFun(x.curve.f)
    return x.a * x.a - f * x.b * x.b


def deg_s(x):
    """Minus the sum of infinite-place valuations, weighted by residue degree.

    Computed both from valuations and as deg(norm); the two routes must
    agree, so a mismatch is raised as an internal error.
    """
    if x.is_zero():
        return NEG_INF
    c = x.curve
    _, places = infinity_places(c)
    via_val = -sum(valuation(c, P, x) * P.degree for P in places)
    via_norm = ratfun_deg(norm(x))
    if via_val != via_norm:
        raise InternalConsistencyError(
            f"deg_S mismatch: valuations give {via_val}, norm gives {via_norm}"
        )
    return via_val


@dataclass(frozen=True)
class ReduceResult:
    """Best integral approximation y and the degree of the defect x - y."""

    y: "FFElem"
    value: int | float


def euclidean_reduce(x):
    """Minimize deg_S(x - y) over y in k[X][Y], at inert/ramified infinity.

    Taking c, d = polynomial parts of the components is optimal: the two
    arms of the degree formula fall in disjoint parity classes (ramified)
    or distinct residue classes (inert), so the minimization separates and
    no cross-cancellation can beat the proper fractional parts.
    """
    c = x.curve
    kind = c.infinity_kind
    if kind == InfinityKind.SPLIT:
        raise ReductionError("no exact reduction at split infinity")
    wa, fa = proper_split(x.a)
    wb, fb = proper_split(x.b)
    y = FFElem(c, wa, wb)
    g = c.genus
    da, db = fa.deg, fb.deg
    if fa.is_zero() and fb.is_zero():
        value = NEG_INF
    elif kind == InfinityKind.INERT:
        value = 2 * max(da, g + 1 + db)
    else:
        value = max(2 * da, 2 * g + 1 + 2 * db)
    check = deg_s(x - y)
    if check != value:
        raise InternalConsistencyError(
            f"reduce value {value} disagrees with deg_S(x - y) = {check}"
        )
    return ReduceResult(y=y, value=value)


def _max_agreement(urows, vrows, length, width):
    """Longest common top-coefficient run between any u-row and v-row."""
    lo, hi = 0, length
    while lo < hi:
        mid = (lo + hi + 1) // 2
        n = mid * width
        prefixes = {u[:n] for u in urows}
        if any(v[:n] in prefixes for v in vrows):
            lo = mid
        else:
            hi = mid - 1
    return lo


def brute_force_min(x, degree_bound, cap=BRUTE_FORCE_PAIR_CAP):
    """Exhaustive min of deg_S(x - y) over y = c + Y d, deg c, d <= bound.

    Independent oracle for the reduction: evaluates the degree of
    (a-c)^2 - f (b-d)^2 per candidate from the definition.  The candidate
    pair count p^(2(bound+1)) must stay within `cap`.
    """
    c = x.curve
    p = c.p
    if degree_bound < 0:
        raise ValueError("degree bound must be >= 0")
    pairs = p ** (2 * (degree_bound + 1))
    if pairs > cap:
        raise CapExceededError(f"{pairs} candidate pairs exceed the cap {cap}")
    an, ad = list(x.a.num.coeffs), list(x.a.den.coeffs)
    bn, bd = list(x.b.num.coeffs), list(x.b.den.coeffs)
    f = list(c.f.coeffs)
    post_u = _core.poly_mul(bd, bd, p)
    post_v = _core.poly_mul(_core.poly_mul(ad, ad, p), f, p)
    B = degree_bound
    du = 2 * max(len(an) - 1, B + len(ad) - 1) + len(post_u) - 1
    dv = 2 * max(len(bn) - 1, B + len(bd) - 1) + len(post_v) - 1
    length = max(du, dv, 0) + 1
    width = 1 if p < 256 else 4
    urows = _core.norm_table(an, ad, post_u, B, p, width, length)
    vrows = _core.norm_table(bn, bd, post_v, B, p, width, length)
    agree = _max_agreement(urows, vrows, length, width)
    if agree == length:
        return NEG_INF
    return (length - 1 - agree) - 2 * (len(ad) - 1) - 2 * (len(bd) - 1)


class MinimumStatus(enum.Enum):
    EXACT = "EXACT"
    UPPER_BOUND = "UPPER_BOUND"


class MinimumMethod(enum.Enum):
    PROP3 = "PROP3"
    THM10 = "THM10"
    THM2_MU = "THM2_MU"


@dataclass(frozen=True)
class MinimumResult:
    status: MinimumStatus
    value: int
    method: MinimumMethod
    witness: FFElem | None = None


def minimum(c, places, height_bound=None, want_witness=True):
    """Euclidean minimum of K with respect to the place set S.

    Exact when S is a single rational place (largest Weierstrass gap) or
    the inert infinite place (2g, witness Y/X); otherwise the speciality
    index of S is returned as an upper bound.
    """
    S = sorted(set(places), key=Place.sort_key)
    if not S:
        raise ValueError("empty place set")
    for P in S:
        validate_place(c, P)
    from ffmin import riemannroch

    if len(S) == 1 and S[0].is_rational:
        P = S[0]
        value = riemannroch.mu_singleton(c, P)
        witness = riemannroch.pole_witness(c, P, value) if want_witness else None
        return MinimumResult(MinimumStatus.EXACT, value, MinimumMethod.PROP3, witness)
    if len(S) == 1 and S[0].kind == PlaceKind.INF_INERT:
        witness = None
        if want_witness:
            witness = FFElem(c, RatFun.zero(c.p), RatFun(Poly.one(c.p), Poly.x(c.p)))
        return MinimumResult(
            MinimumStatus.EXACT, 2 * c.genus, MinimumMethod.THM10, witness
        )
    res = riemannroch.mu(c, S, height_bound)
    return MinimumResult(MinimumStatus.UPPER_BOUND, res.value, MinimumMethod.THM2_MU, None)
