"""Riemann-Roch spaces L(D) by exact linear algebra over GF(p), speciality
indices, Weierstrass gap sequences and tests, and the speciality index
mu(S) of a place set.

Basis candidates are (u(X) + Y v(X)) / h(X) with h supported on the affine
x-coordinates of the divisor.  Pole conditions at parity/residue-protected
places reduce to separate order conditions on u and v; split places
contribute linear rows built from truncated local expansions.  Every
returned basis function is re-checked post hoc against the valuation
oracle.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from ffmin.algebra import FpMatrix, Poly, RatFun
from ffmin.curve import (
    Divisor,
    InfinityKind,
    Place,
    PlaceKind,
    affine_place,
    canonical_divisor,
    infinity_places,
    validate_place,
    valuation,
    _round_prec,
    _y_series_affine,
    _y_series_inf,
)
from ffmin.elements import FFElem
from ffmin.errors import ClassicalityError, InternalConsistencyError, PlaceError


@dataclass(frozen=True)
class LBasis:
    divisor: Divisor
    functions: tuple
    dimension: int


@dataclass(frozen=True)
class GapSequence:
    place: Place
    gaps: tuple


@dataclass(frozen=True)
class MuResult:
    value: int
    witness: Divisor
    exhaustive: bool


def _shifted_monomials(p, x0, top):
    """Coefficient lists of (x0 + t)^i for i = 0..top."""
    out = [[1]]
    for _ in range(top):
        prev = out[-1]
        nxt = [0] * (len(prev) + 1)
        for j, cj in enumerate(prev):
            nxt[j] = (nxt[j] + cj * x0) % p
            nxt[j + 1] = cj
        out.append(nxt)
    return out


@lru_cache(maxsize=16384)
def l_space(c, D):
    """Basis of L(D) = {x : v_P(x) + n_P >= 0 for all P}."""
    c._require_hyperelliptic()
    p, g = c.p, c.genus
    for P in D.support():
        validate_place(c, P)

    kind = c.infinity_kind
    n_inf = {P: D.coeff(P) for P in infinity_places(c)[1]}

    # common denominator h = prod (X - x0)^e over affine support
    affine_x0s = sorted({P.x0 for P in D.support() if not P.is_infinite})
    exps = {}
    for x0 in affine_x0s:
        e = 0
        for P in affine_place(c, x0):
            n = D.coeff(P)
            if n > 0:
                need = (n + 1) // 2 if P.kind == PlaceKind.AFFINE_RAMIFIED else n
                e = max(e, need)
        exps[x0] = e
    h = Poly.one(p)
    for x0 in affine_x0s:
        if exps[x0]:
            h = h * Poly(p, ((-x0) % p, 1)) ** exps[x0]
    dh = 0 if h.degree == 0 else h.degree

    # degree bounds on u, v from the infinite-place conditions
    if kind == InfinityKind.RAMIFIED:
        n = n_inf[Place(PlaceKind.INF_RAMIFIED)]
        bu = dh + math.floor(n / 2)
        bv = dh + math.floor((n - (2 * g + 1)) / 2)
    elif kind == InfinityKind.INERT:
        n = n_inf[Place(PlaceKind.INF_INERT)]
        bu = dh + n
        bv = dh + n - (g + 1)
    else:
        m = max(n_inf[Place(PlaceKind.INF_SPLIT, sign=+1)],
                n_inf[Place(PlaceKind.INF_SPLIT, sign=-1)])
        bu = dh + m
        bv = dh + m - (g + 1)
    nu = bu + 1 if bu >= 0 else 0
    nv = bv + 1 if bv >= 0 else 0
    ncols = nu + nv
    if ncols == 0:
        return LBasis(D, (), 0)

    rows = []
    for x0 in affine_x0s:
        e = exps[x0]
        shifted = _shifted_monomials(p, x0, max(bu, bv, 0))
        for P in sorted(affine_place(c, x0), key=Place.sort_key):
            n = D.coeff(P)
            if P.kind == PlaceKind.AFFINE_RAMIFIED:
                r = 2 * e - n
                ku = min((r + 1) // 2, nu) if r > 0 else 0
                kv = min(r // 2, nv) if r > 1 else 0
                for j in range(ku):
                    row = [0] * ncols
                    for i in range(nu):
                        if j < len(shifted[i]):
                            row[i] = shifted[i][j]
                    rows.append(row)
                for j in range(kv):
                    row = [0] * ncols
                    for k in range(nv):
                        if j < len(shifted[k]):
                            row[nu + k] = shifted[k][j]
                    rows.append(row)
            elif P.kind == PlaceKind.AFFINE_INERT:
                r = e - n
                for j in range(min(r, nu) if r > 0 else 0):
                    row = [0] * ncols
                    for i in range(nu):
                        if j < len(shifted[i]):
                            row[i] = shifted[i][j]
                    rows.append(row)
                for j in range(min(r, nv) if r > 0 else 0):
                    row = [0] * ncols
                    for k in range(nv):
                        if j < len(shifted[k]):
                            row[nu + k] = shifted[k][j]
                    rows.append(row)
            else:
                r = e - n
                if r <= 0:
                    continue
                y = _y_series_affine(c, x0, P.y0, _round_prec(r + 1))
                for j in range(r):
                    row = [0] * ncols
                    for i in range(nu):
                        if j < len(shifted[i]):
                            row[i] = shifted[i][j]
                    for k in range(nv):
                        acc = 0
                        sk = shifted[k]
                        for l in range(min(j, len(sk) - 1) + 1):
                            acc += sk[l] * y.coeff(j - l)
                        row[nu + k] = acc % p
                    rows.append(row)

    if kind == InfinityKind.SPLIT:
        emin = 0
        if nu:
            emin = min(emin, -bu)
        if nv:
            emin = min(emin, -(g + 1) - bv)
        for P in sorted(n_inf, key=Place.sort_key):
            r = -n_inf[P] - dh
            if r <= emin:
                continue
            y = _y_series_inf(c, _round_prec(r + bv + g + 2))
            for j in range(emin, r):
                row = [0] * ncols
                for i in range(nu):
                    if j == -i:
                        row[i] = 1
                for k in range(nv):
                    coeff = y.coeff(j + k)
                    if P.sign < 0:
                        coeff = (-coeff) % p
                    row[nu + k] = coeff
                rows.append(row)

    kern = FpMatrix(p, len(rows), ncols, rows).kernel()
    functions = []
    for vec in kern:
        u = Poly(p, vec[:nu])
        v = Poly(p, vec[nu:])
        functions.append(FFElem(c, RatFun(u, h), RatFun(v, h)))
    check_basis(c, D, functions)
    return LBasis(D, tuple(functions), len(functions))


def check_basis(c, D, functions):
    """Re-verify every basis function against the valuation oracle."""
    places = set(D.support()) | set(infinity_places(c)[1])
    for x0 in {P.x0 for P in D.support() if not P.is_infinite}:
        places.update(affine_place(c, x0))
    for x in functions:
        for P in sorted(places, key=Place.sort_key):
            if valuation(c, P, x) + D.coeff(P) < 0:
                raise InternalConsistencyError(
                    f"basis function {x!r} violates the divisor bound at {P!r}"
                )


def speciality_index(c, D):
    """i(D) = l(D) - deg D + g - 1; cross-checked via the canonical divisor
    on odd-degree models, where l(W - D) must agree."""
    g = c.genus
    value = l_space(c, D).dimension - D.degree() + g - 1
    if c.infinity_kind == InfinityKind.RAMIFIED:
        other = l_space(c, canonical_divisor(c) - D).dimension
        if other != value:
            raise InternalConsistencyError(
                f"speciality cross-check failed: {value} vs l(W-D) = {other}"
            )
    return value


@lru_cache(maxsize=4096)
def gap_sequence(c, P):
    """The g integers n in (0, 2g) with l(nP) = l((n-1)P)."""
    validate_place(c, P)
    if not P.is_rational:
        raise PlaceError("gap sequences are computed at rational places only")
    g = c.genus
    gaps = []
    prev = l_space(c, Divisor.zero()).dimension
    for n in range(1, 2 * g):
        cur = l_space(c, Divisor.of(P, n)).dimension
        if cur == prev:
            gaps.append(n)
        prev = cur
    if len(gaps) != g or (gaps and not 0 < gaps[0] <= gaps[-1] < 2 * g):
        raise InternalConsistencyError(f"gap count {len(gaps)} != genus {g} at {P!r}")
    return GapSequence(place=P, gaps=tuple(gaps))


def mu_singleton(c, P):
    """The largest Weierstrass gap at the rational place P."""
    return gap_sequence(c, P).gaps[-1]


def mu(c, places, height_bound=None):
    """Minimal degree of a divisor supported on S with vanishing speciality.

    Enumerates coefficient vectors of height <= height_bound inside the
    degree window [g-1, 2g-2+d_min]; the all-effective divisor on the
    smallest-degree place is always included, so the result is an upper
    bound for mu(S), exact whenever the true minimizer's height is within
    the bound (always so for singletons).
    """
    S = sorted(set(places), key=Place.sort_key)
    if not S:
        raise ValueError("empty place set")
    for P in S:
        validate_place(c, P)
    g = c.genus
    H = height_bound if height_bound is not None else 2 * g + 2
    degs = [P.degree for P in S]
    d_min = min(degs)
    lo, hi = g - 1, 2 * g - 2 + d_min
    candidates = set()
    stack = [(0, ())]
    while stack:
        i, vec = stack.pop()
        if i == len(S):
            d = sum(n * dd for n, dd in zip(vec, degs))
            if lo <= d <= hi:
                candidates.add((d, vec))
            continue
        for n in range(-H, H + 1):
            stack.append((i + 1, vec + (n,)))
    k = -((2 * g - 1) // -d_min)  # ceil: forced nonspecial effective divisor
    imin = min(range(len(S)), key=lambda i: degs[i])
    forced = tuple(k if i == imin else 0 for i in range(len(S)))
    candidates.add((k * d_min, forced))
    for d, vec in sorted(candidates):
        D = Divisor(tuple(zip(S, vec)))
        if speciality_index(c, D) == 0:
            if d < g - 1:
                raise InternalConsistencyError("mu below the forced lower bound")
            return MuResult(value=d, witness=D, exhaustive=len(S) == 1)
    raise InternalConsistencyError("no nonspecial divisor found in the degree window")


def is_weierstrass_point(c, P):
    """True iff the gap sequence at P differs from (1, ..., g).

    Refuses small characteristic (p <= 2g), where the generic gap sequence
    need not be the classical one.
    """
    validate_place(c, P)
    if not P.is_rational:
        raise PlaceError("Weierstrass-point test needs a rational place")
    g = c.genus
    if c.p <= 2 * g:
        raise ClassicalityError(f"p = {c.p} <= 2g = {2 * g}: classicality not guaranteed")
    return gap_sequence(c, P).gaps != tuple(range(1, g + 1))


def pole_witness(c, P, order):
    """A function with pole order exactly `order` at P and poles only in
    {P, Q} for the first constructible auxiliary place Q != P."""
    for x0 in range(c.p):
        for Q in affine_place(c, x0):
            if Q == P:
                continue
            t = 2 * c.genus
            big = Divisor.of(P, order) + Divisor.of(Q, t)
            small = Divisor.of(P, order - 1) + Divisor.of(Q, t)
            small_dim = l_space(c, small).dimension
            basis = l_space(c, big)
            if basis.dimension != small_dim + P.degree:
                raise InternalConsistencyError("unexpected jump in l(D) at witness search")
            for x in basis.functions:
                if valuation(c, P, x) == -order:
                    return x
            raise InternalConsistencyError("no basis function attains the pole order")
    raise InternalConsistencyError("no auxiliary place available")
