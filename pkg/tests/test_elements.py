import random

import pytest

from ffmin.algebra import NEG_INF, Poly, RatFun
from ffmin.curve import InfinityKind, make_curve
from ffmin.elements import (
    FFElem,
    MinimumMethod,
    MinimumStatus,
    brute_force_min,
    deg_s,
    euclidean_reduce,
    minimum,
    norm,
)
from ffmin.errors import CapExceededError, CurveError, ReductionError


def odd7():
    return make_curve(7, Poly(7, (1, 2, 0, 0, 0, 1)))  # g=2 ramified


def inert7():
    return make_curve(7, Poly(7, (0, 1, 0, 0, 0, 0, 3)))  # g=2 inert


def y_over_x(c):
    return FFElem(c, RatFun.zero(c.p), RatFun(Poly.one(c.p), Poly.x(c.p)))


def random_elem(rng, c, maxdeg=3):
    def rf():
        num = Poly(c.p, [rng.randrange(c.p) for _ in range(rng.randrange(0, maxdeg + 2))])
        den = Poly(c.p, [rng.randrange(c.p) for _ in range(maxdeg)] + [1])
        return RatFun(num, den)

    return FFElem(c, rf(), rf())


def test_ring_axioms():
    c = odd7()
    y = FFElem.y(c)
    assert y * y == FFElem(c, c.f)
    one = FFElem.one(c)
    assert (one + y) * (one - y) == FFElem(c, Poly.one(7) - c.f)
    rng = random.Random(0)
    for _ in range(30):
        x = random_elem(rng, c)
        assert x.conj().conj() == x
        z = random_elem(rng, c)
        assert (x + z).conj() == x.conj() + z.conj()
        assert (x * z).conj() == x.conj() * z.conj()
    with pytest.raises(CurveError):
        FFElem.x(odd7()) + FFElem.x(inert7())


def test_norm_frozen():
    c = make_curve(7, Poly(7, (1, 0, 0, 1)))  # y^2 = x^3 + 1
    y = FFElem.y(c)
    assert norm(y) == RatFun(-c.f)
    a = FFElem(c, Poly(7, (2, 3)))
    assert norm(a) == RatFun(Poly(7, (2, 3)) * Poly(7, (2, 3)))
    assert norm(FFElem.one(c) + y) == RatFun(Poly(7, (0, 0, 0, -1)))  # -x^3


def test_norm_multiplicative():
    rng = random.Random(1)
    for c in (odd7(), inert7()):
        for _ in range(40):
            x, z = random_elem(rng, c), random_elem(rng, c)
            assert norm(x * z) == norm(x) * norm(z)
            assert norm(x) == (x * x.conj()).a
            assert (x * x.conj()).b.is_zero()


def test_deg_s_frozen():
    split7 = make_curve(7, Poly(7, (1, 0, 0, 0, 0, 0, 1)))
    for c in (odd7(), inert7(), split7):
        assert deg_s(FFElem.x(c)) == 2
        assert deg_s(FFElem.zero(c)) == NEG_INF
    assert deg_s(FFElem.y(odd7())) == 5  # norm -f, deg f = 5


def test_deg_s_axioms():
    rng = random.Random(2)
    split7 = make_curve(7, Poly(7, (1, 0, 0, 0, 0, 0, 1)))
    for c in (odd7(), inert7(), split7):
        for _ in range(40):
            x, z = random_elem(rng, c, 2), random_elem(rng, c, 2)
            if x.is_zero() or z.is_zero():
                continue
            assert deg_s(x * z) == deg_s(x) + deg_s(z)
            s = x + z
            assert deg_s(s) <= max(deg_s(x), deg_s(z))


def test_deg_s_integral_elements():
    # for nonzero x in k[X][Y]: deg_S >= 0, equality iff nonzero constant
    rng = random.Random(3)
    for c in (odd7(), inert7()):
        for _ in range(60):
            a = Poly(7, [rng.randrange(7) for _ in range(rng.randrange(0, 4))])
            b = Poly(7, [rng.randrange(7) for _ in range(rng.randrange(0, 3))])
            x = FFElem(c, a, b)
            if x.is_zero():
                continue
            d = deg_s(x)
            assert d >= 0
            constant = b.is_zero() and a.degree == 0
            assert (d == 0) == constant


def test_euclidean_reduce_frozen():
    # Y/X on the inert genus-2 model: value 2g = 4
    r = euclidean_reduce(y_over_x(inert7()))
    assert r.value == 4 and r.y == FFElem.zero(inert7())
    # members of k[X][Y] reduce to themselves with value NEG_INF
    c = odd7()
    x = FFElem(c, Poly(7, (1, 2, 3)), Poly(7, (4,)))
    r = euclidean_reduce(x)
    assert r.value == NEG_INF and r.y == x
    # Y/X on the ramified genus-2 model: 2g - 1 = 3
    r = euclidean_reduce(y_over_x(odd7()))
    assert r.value == 3
    assert brute_force_min(y_over_x(odd7()), 3) == 3
    with pytest.raises(ReductionError):
        euclidean_reduce(y_over_x(make_curve(7, Poly(7, (1, 0, 0, 0, 0, 0, 1)))))


def test_brute_force_frozen():
    # inert g=2 over GF(3): f = 2x^6 + x + 1 squarefree, 2 nonsquare mod 3
    c = make_curve(3, Poly(3, (1, 1, 0, 0, 0, 0, 2)))
    assert brute_force_min(y_over_x(c), 3) == 4
    # an integral element within the bound
    x = FFElem(c, Poly(3, (1, 2)), Poly(3, (2,)))
    assert brute_force_min(x, 2) == NEG_INF
    # 1/X: norm degree -2, best at y = 0
    inv_x = FFElem(c, RatFun(Poly.one(3), Poly.x(3)))
    assert brute_force_min(inv_x, 0) == -2
    assert brute_force_min(inv_x, 0, cap=10**9) == -2
    with pytest.raises(CapExceededError):
        brute_force_min(inv_x, 30)


def test_reduce_matches_brute_force():
    rng = random.Random(4)
    models = [
        make_curve(3, Poly(3, (1, 1, 0, 0, 0, 0, 2))),  # inert g=2
        make_curve(3, Poly(3, (2, 1, 0, 0, 2))),  # inert g=1
        make_curve(3, Poly(3, (1, 2, 0, 1))),  # ramified g=1
        make_curve(3, Poly(3, (1, 0, 0, 0, 0, 1))),  # ramified g=2
    ]
    for c in models:
        for _ in range(12):
            x = random_elem(rng, c, 1)
            comp = [x.a.num, x.a.den, x.b.num, x.b.den]
            mx = max((f.degree for f in comp if not f.is_zero()), default=0)
            bound = int(mx) + c.genus + 2
            assert euclidean_reduce(x).value == brute_force_min(x, bound)


def test_minimum_dispatch():
    from ffmin.curve import infinity_places, valuation

    # singleton ramified infinity: exact largest gap = 2g - 1
    c = odd7()
    _, pls = infinity_places(c)
    res = minimum(c, pls)
    assert res.status == MinimumStatus.EXACT and res.method == MinimumMethod.PROP3
    assert res.value == 3
    assert valuation(c, pls[0], res.witness) == -3
    # inert infinity: exact 2g with witness Y/X
    ci = inert7()
    _, pls = infinity_places(ci)
    res = minimum(ci, pls)
    assert res.status == MinimumStatus.EXACT and res.method == MinimumMethod.THM10
    assert res.value == 4
    assert euclidean_reduce(res.witness).value == 4
    # split infinity: theorem-2 upper bound via mu
    cs = make_curve(7, Poly(7, (1, 0, 0, 0, 0, 0, 1)))
    _, pls = infinity_places(cs)
    res = minimum(cs, pls)
    assert res.status == MinimumStatus.UPPER_BOUND
    assert res.method == MinimumMethod.THM2_MU
    with pytest.raises(ValueError):
        minimum(c, [])
