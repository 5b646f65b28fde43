"""Bound-checking harness: evaluates every named inequality over explicit
curves and enumerated families and produces deterministic machine-readable
pass/fail reports with witnesses.

Report wire format: one JSON record per outcome with fields exactly
check_id, curve, inputs, observed, bound, passed, witness, then a trailing
summary record.  passed is true/false, or null for checks skipped as
inapplicable.  Degree sentinels serialize as the strings "-inf"/"inf".
"""

import json
import random
from dataclasses import dataclass, field

from ffmin.algebra import NEG_INF, Poly, RatFun, proper_split, ratfun_deg
from ffmin.curve import (
    CurveModel,
    InfinityKind,
    Place,
    PlaceKind,
    _ratfun_series_at_inf,
    _y_series_inf,
    discriminant_degree,
    infinity_places,
    is_tame_at_infinity,
    make_curve,
    poly_is_squarefree,
    validate_place,
)
from ffmin.elements import (
    BRUTE_FORCE_PAIR_CAP,
    FFElem,
    brute_force_min,
    deg_s,
    euclidean_reduce,
    minimum,
)
from ffmin.errors import CurveError, PlaceError
from ffmin.riemannroch import gap_sequence, mu, mu_singleton
from ffmin.semigroup import semigroup_gaps

CHECK_IDS = (
    "LEMMA1",
    "THM2",
    "PROP3",
    "COR4",
    "COR5_SEMIGROUP",
    "COR6",
    "THM8",
    "THM9",
    "THM10",
    "MU_EXCESS_SECT4",
)


def _jsonable(v):
    if v == NEG_INF:
        return "-inf"
    if isinstance(v, float):
        return "inf" if v == float("inf") else v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    return v


@dataclass(frozen=True)
class CheckOutcome:
    check_id: str
    curve: str
    inputs: dict
    observed: dict
    bound: dict
    passed: bool | None
    witness: str | None = None

    def record(self):
        return {
            "check_id": self.check_id,
            "curve": self.curve,
            "inputs": _jsonable(self.inputs),
            "observed": _jsonable(self.observed),
            "bound": _jsonable(self.bound),
            "passed": self.passed,
            "witness": self.witness,
        }


@dataclass
class BoundsReport:
    outcomes: list = field(default_factory=list)
    seed: int = 0
    config: dict = field(default_factory=dict)

    def add(self, outcome):
        self.outcomes.append(outcome)

    def extend(self, outcomes):
        self.outcomes.extend(outcomes)

    def sorted_outcomes(self):
        return sorted(
            self.outcomes,
            key=lambda o: (o.check_id, o.curve, json.dumps(_jsonable(o.inputs), sort_keys=True)),
        )

    def summary(self):
        total = len(self.outcomes)
        passed = sum(1 for o in self.outcomes if o.passed is True)
        failed = sum(1 for o in self.outcomes if o.passed is False)
        skipped = sum(1 for o in self.outcomes if o.passed is None)
        return {
            "total": total,
            "passed": passed,
            "failed": failed,
            "skipped": skipped,
            "seed": self.seed,
            "config": _jsonable(self.config),
        }

    @property
    def failed(self):
        return sum(1 for o in self.outcomes if o.passed is False)

    def to_ndjson(self):
        lines = [
            json.dumps(o.record(), separators=(",", ":")) for o in self.sorted_outcomes()
        ]
        lines.append(json.dumps({"summary": self.summary()}, separators=(",", ":")))
        return "\n".join(lines) + "\n"


def _skipped(check_id, c, reason):
    return CheckOutcome(
        check_id=check_id,
        curve=c.equation(),
        inputs={},
        observed={"status": "SKIPPED", "reason": reason},
        bound={},
        passed=None,
    )


# ---------------------------------------------------------------------------
# element sampling


def random_ratfun(rng, p, max_deg):
    num = Poly(p, [rng.randrange(p) for _ in range(rng.randrange(0, max_deg + 2))])
    den = Poly(p, [rng.randrange(p) for _ in range(rng.randrange(0, max_deg + 1))] + [1])
    return RatFun(num, den)


def random_element(rng, c, max_deg=None):
    if max_deg is None:
        max_deg = 2 * c.genus + 3
    return FFElem(c, random_ratfun(rng, c.p, max_deg), random_ratfun(rng, c.p, max_deg))


# ---------------------------------------------------------------------------
# individual checks


def check_lemma1(c, places):
    """g - 1 <= mu(S) <= 2g - 1 for S consisting of rational places."""
    S = sorted(set(places), key=Place.sort_key)
    for P in S:
        validate_place(c, P)
        if not P.is_rational:
            raise PlaceError(
                "the classical upper bound needs rational places; "
                "use check_mu_excess for inert configurations"
            )
    g = c.genus
    res = mu(c, S)
    return CheckOutcome(
        check_id="LEMMA1",
        curve=c.equation(),
        inputs={"places": [P.label() for P in S]},
        observed={"mu": res.value, "exhaustive": res.exhaustive},
        bound={"lower": g - 1, "upper": 2 * g - 1},
        passed=g - 1 <= res.value <= 2 * g - 1,
        witness=res.witness.render(),
    )


def check_mu_excess(c):
    """A genus-1 inert model has mu(S) = 2, beating the classical bound 2g-1."""
    if not (c.is_hyperelliptic and c.genus == 1 and c.infinity_kind == InfinityKind.INERT):
        raise CurveError("needs a genus-1 model inert at infinity")
    res = mu(c, infinity_places(c)[1])
    return CheckOutcome(
        check_id="MU_EXCESS_SECT4",
        curve=c.equation(),
        inputs={"places": ["inf"]},
        observed={"mu": res.value},
        bound={"classical_upper": 1, "expected": 2},
        passed=res.value == 2,
        witness=res.witness.render(),
    )


def _split_inner_upper_bound(c, x):
    """Upper bound for min_y deg_S(x - y) at split infinity.

    Candidates: the componentwise polynomial parts, improved by the
    polynomial part of +-sqrt(f) * frac(b), which cancels the top of the
    norm form through its split square root.  The returned value is the
    exact deg_S of the best candidate (computed by exact arithmetic), hence
    always an upper bound for the inner minimum, and provably <= g - 1 when
    frac(b) != 0.
    """
    wa, fa = proper_split(x.a)
    wb, fb = proper_split(x.b)
    candidates = [FFElem(c, wa, wb)]
    if not fb.is_zero():
        g = c.genus
        pr = g + 4
        sb = _y_series_inf(c, pr) * _ratfun_series_at_inf(fb, pr)
        coeffs = []
        e = sb.lead
        while e <= 0:
            coeffs.append(sb.coeff(e) if e >= sb.lead else 0)
            e += 1
        cpoly = Poly(c.p, list(reversed(coeffs)))  # exponent -e in t is X^e
        for sgn in (1, -1):
            candidates.append(FFElem(c, wa + cpoly.scale(sgn), wb))
    return min(deg_s(x - y) for y in candidates)


def check_theorem2(c, places=None, sample_count=200, seed=0):
    """min_y deg_S(x - y) <= mu(S) on sampled elements, S = infinity places.

    Exact inner minimum at inert/ramified infinity; split infinity uses the
    constructive bounded search, whose value is an upper bound for the
    minimum, so the inequality test remains sound.
    """
    kind, S = infinity_places(c)
    if places is not None and sorted(set(places), key=Place.sort_key) != sorted(
        set(S), key=Place.sort_key
    ):
        raise PlaceError("theorem-2 sampling is wired to S = places above infinity")
    mu_val = mu(c, S).value
    rng = random.Random(seed)
    values = []
    failures = 0
    for _ in range(sample_count):
        x = random_element(rng, c)
        if kind == InfinityKind.SPLIT:
            val = _split_inner_upper_bound(c, x)
        else:
            val = euclidean_reduce(x).value
        values.append(val)
        if not val <= mu_val:
            failures += 1
    finite = [v for v in values if v != NEG_INF]
    return CheckOutcome(
        check_id="THM2",
        curve=c.equation(),
        inputs={"samples": sample_count, "seed": seed, "places": [P.label() for P in S]},
        observed={
            "max_inner_min": max(finite) if finite else NEG_INF,
            "equality_count": sum(1 for v in finite if v == mu_val),
            "failures": failures,
        },
        bound={"mu": mu_val},
        passed=failures == 0,
    )


def check_prop3_cor4_cor6(c, P, want_witness=True):
    """Exact minimum at a single rational place equals the largest gap;
    2g-1 at hyperelliptic ramification places, g at classical generic ones."""
    validate_place(c, P)
    g = c.genus
    res = minimum(c, [P], want_witness=want_witness)
    gaps = gap_sequence(c, P).gaps
    n_g = mu_singleton(c, P)
    passed = res.value == n_g
    bound = {}
    check_id = "PROP3"
    if P.ramification_index == 2:
        check_id = "COR4"
        bound["weierstrass_value"] = 2 * g - 1
        passed = passed and res.value == 2 * g - 1
    elif gaps == tuple(range(1, g + 1)):
        check_id = "COR6"
        bound["ordinary_value"] = g
        passed = passed and res.value == g
    return CheckOutcome(
        check_id=check_id,
        curve=c.equation(),
        inputs={"place": P.label()},
        observed={"minimum": res.value, "mu_singleton": n_g, "gaps": list(gaps)},
        bound=bound,
        passed=passed,
        witness=res.witness.render() if res.witness is not None else None,
    )


def _exact_minimum_value(c):
    """The exactly computable M for tame models, with the route used."""
    if not c.is_hyperelliptic:
        s = semigroup_gaps(c.m, c.f.degree)
        return s.frobenius, "semigroup"
    kind = c.infinity_kind
    if kind == InfinityKind.RAMIFIED:
        return (
            minimum(c, infinity_places(c)[1], want_witness=False).value,
            "largest_gap",
        )
    if kind == InfinityKind.INERT:
        return minimum(c, infinity_places(c)[1], want_witness=False).value, "inert_2g"
    raise CurveError("no exact minimum available at split infinity")


def check_theorem8(c):
    """M <= deg(d_K) - n for tame-at-infinity models with computable M."""
    if not is_tame_at_infinity(c):
        raise CurveError("needs tame ramification above infinity")
    value, method = _exact_minimum_value(c)
    n = c.m
    dk = discriminant_degree(c)
    return CheckOutcome(
        check_id="THM8",
        curve=c.equation(),
        inputs={},
        observed={"M": value, "method": method, "disc_degree": dk, "equality": value == dk - n},
        bound={"upper": dk - n},
        passed=value <= dk - n,
    )


def check_theorem9(c):
    """(deg(d_K) - n - 1)/2 <= M <= deg(d_K) - n for total ramification at
    infinity; the singleton-route lower bound g is recorded alongside."""
    totally_ramified = (
        c.infinity_kind == InfinityKind.RAMIFIED if c.is_hyperelliptic else True
    )
    if not totally_ramified:
        raise CurveError("needs total ramification above infinity")
    value, method = _exact_minimum_value(c)
    n = c.m
    dk = discriminant_degree(c)
    num = dk - n - 1
    if num % 2:
        raise CurveError("odd Hurwitz count; model outside the tame bookkeeping")
    lower = num // 2
    return CheckOutcome(
        check_id="THM9",
        curve=c.equation(),
        inputs={},
        observed={"M": value, "method": method, "disc_degree": dk, "gap_route_lower": c.genus},
        bound={"lower": lower, "upper": dk - n},
        passed=lower <= value <= dk - n,
    )


def check_theorem10(c, brute_cap=BRUTE_FORCE_PAIR_CAP, confirm_witness=True):
    """M = 2g at inert infinity; the witness Y/X is brute-force confirmed
    whenever the enumeration fits the cap."""
    if not (c.is_hyperelliptic and c.infinity_kind == InfinityKind.INERT):
        raise CurveError("needs a model inert at infinity")
    g = c.genus
    res = minimum(c, infinity_places(c)[1], want_witness=True)
    brute = None
    bound = g + 2
    if confirm_witness and c.p ** (2 * (bound + 1)) <= brute_cap:
        yx = FFElem(c, RatFun.zero(c.p), RatFun(Poly.one(c.p), Poly.x(c.p)))
        brute = brute_force_min(yx, bound, cap=brute_cap)
    passed = res.value == 2 * g and (brute is None or brute == 2 * g)
    return CheckOutcome(
        check_id="THM10",
        curve=c.equation(),
        inputs={"brute_bound": bound if brute is not None else None},
        observed={"minimum": res.value, "brute_force": brute},
        bound={"expected": 2 * g},
        passed=passed,
        witness=res.witness.render(),
    )


def check_cor5_semigroup(m, r):
    """Combinatorial content of the etale-cover value: for the Artin-Schreier
    descriptor (m, r) the largest gap of <m, r> is 2g - 1."""
    s = semigroup_gaps(m, r)
    return CheckOutcome(
        check_id="COR5_SEMIGROUP",
        curve=f"semigroup<{m},{r}>",
        inputs={"m": m, "r": r},
        observed={"gap_count": len(s.gaps), "largest_gap": s.frobenius},
        bound={"genus": s.genus, "expected_largest": 2 * s.genus - 1},
        passed=len(s.gaps) == s.genus and s.frobenius == 2 * s.genus - 1,
    )


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class SweepConfig:
    thm2_samples: int = 20
    expensive_per_class: int = 4
    brute_cap: int = BRUTE_FORCE_PAIR_CAP
    max_enumeration: int = 200_000
    sample_size: int = 500

    def as_dict(self):
        return {
            "thm2_samples": self.thm2_samples,
            "expensive_per_class": self.expensive_per_class,
            "brute_cap": self.brute_cap,
            "max_enumeration": self.max_enumeration,
            "sample_size": self.sample_size,
        }


def _curve_checks(c, expensive, seed, config):
    """Applicable checks for one curve; expensive ones only when selected."""
    out = []
    kind = c.infinity_kind
    S = infinity_places(c)[1]
    if kind == InfinityKind.RAMIFIED:
        inf = S[0]
        out.append(check_prop3_cor4_cor6(c, inf, want_witness=False))
        out.append(check_lemma1(c, [inf]))
        out.append(check_theorem8(c))
        out.append(check_theorem9(c))
        if expensive:
            out.append(check_theorem2(c, sample_count=config.thm2_samples, seed=seed))
    elif kind == InfinityKind.INERT:
        out.append(
            check_theorem10(c, brute_cap=config.brute_cap, confirm_witness=expensive)
        )
        out.append(check_theorem8(c))
        if c.genus == 1:
            out.append(check_mu_excess(c))
        if expensive:
            out.append(check_theorem2(c, sample_count=config.thm2_samples, seed=seed))
    else:
        if expensive:
            out.append(check_lemma1(c, S))
            out.append(check_theorem2(c, sample_count=config.thm2_samples, seed=seed))
    return out


def _iter_family(p, degree, seed, config):
    """Deterministic iteration over degree-`degree` coefficient vectors."""
    total = (p - 1) * p**degree
    if total <= config.max_enumeration:
        indices = range(total)
    else:
        rng = random.Random(f"family:{seed}:{p}:{degree}")
        indices = sorted(rng.sample(range(total), min(config.sample_size, total)))
    for idx in indices:
        lc = idx // p**degree + 1
        rest = idx % p**degree
        coeffs = [(rest // p**i) % p for i in range(degree)] + [lc]
        yield Poly(p, coeffs)


def family_sweep(p, degrees, kinds=None, seed=0, config=None):
    """Enumerate (or sample) squarefree models of each degree, classify the
    infinity fiber, and run the applicable checks on each.

    The cheap exact checks run on every model; checks needing split-place
    linear algebra or brute-force confirmation run on a deterministic
    per-(degree, kind) prefix of the enumeration, sized by the config.
    """
    config = config or SweepConfig()
    if kinds is not None:
        kinds = {InfinityKind(k) if not isinstance(k, InfinityKind) else k for k in kinds}
    report = BoundsReport(seed=seed, config={"p": p, "degrees": list(degrees), **config.as_dict()})
    n_skipped_squarefree = 0
    class_seen = {}
    for degree in degrees:
        if degree < 3:
            raise ValueError("family degrees start at 3")
        for f in _iter_family(p, degree, seed, config):
            if not poly_is_squarefree(f):
                n_skipped_squarefree += 1
                continue
            c = CurveModel(p, f)
            kind = c.infinity_kind
            if kinds is not None and kind not in kinds:
                continue
            key = (degree, kind)
            class_seen[key] = class_seen.get(key, 0) + 1
            expensive = class_seen[key] <= config.expensive_per_class
            report.extend(_curve_checks(c, expensive, seed, config))
    report.config["non_squarefree_skipped"] = n_skipped_squarefree
    return report


def single_curve_report(c, seed=0, samples=200, cor5=(), config=None):
    """Every named check on one model, with SKIPPED outcomes where a check
    does not apply to its shape."""
    config = config or SweepConfig(thm2_samples=samples)
    report = BoundsReport(
        seed=seed, config={"curve": c.equation(), "samples": samples, **config.as_dict()}
    )
    if not c.is_hyperelliptic:
        report.add(check_theorem8(c))
        report.add(check_theorem9(c))
        for cid in ("LEMMA1", "THM2", "PROP3", "THM10", "MU_EXCESS_SECT4"):
            report.add(_skipped(cid, c, "superelliptic descriptor: no element arithmetic"))
    else:
        kind, S = infinity_places(c)
        if kind == InfinityKind.RAMIFIED:
            report.add(check_prop3_cor4_cor6(c, S[0]))
            report.add(check_lemma1(c, S))
            report.add(check_theorem2(c, sample_count=samples, seed=seed))
            report.add(check_theorem8(c))
            report.add(check_theorem9(c))
            report.add(_skipped("THM10", c, "infinity is not inert"))
            report.add(_skipped("MU_EXCESS_SECT4", c, "needs a genus-1 inert model"))
        elif kind == InfinityKind.INERT:
            report.add(check_theorem10(c, brute_cap=config.brute_cap))
            report.add(check_theorem8(c))
            report.add(check_theorem2(c, sample_count=samples, seed=seed))
            if c.genus == 1:
                report.add(check_mu_excess(c))
            else:
                report.add(_skipped("MU_EXCESS_SECT4", c, "needs genus 1"))
            report.add(_skipped("LEMMA1", c, "infinite place is not rational"))
            report.add(_skipped("PROP3", c, "no rational infinite place"))
            report.add(_skipped("THM9", c, "not totally ramified above infinity"))
        else:
            report.add(check_lemma1(c, S))
            report.add(check_theorem2(c, sample_count=samples, seed=seed))
            report.add(_skipped("PROP3", c, "minimum not exactly computable"))
            report.add(_skipped("THM8", c, "minimum not exactly computable"))
            report.add(_skipped("THM9", c, "not totally ramified above infinity"))
            report.add(_skipped("THM10", c, "infinity is not inert"))
            report.add(_skipped("MU_EXCESS_SECT4", c, "needs an inert model"))
    for m, r in cor5:
        report.add(check_cor5_semigroup(m, r))
    return report
