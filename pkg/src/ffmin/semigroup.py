"""Combinatorial gap computation at a totally ramified point of Y^m = f via
the numerical semigroup <m, r>: pole orders there are exactly the
nonnegative combinations of m (pole order of X) and r (pole order of Y).
Independent oracle for the linear-algebra gap machinery.
"""

import math
from dataclasses import dataclass

from ffmin.errors import InternalConsistencyError


@dataclass(frozen=True)
class SemigroupGaps:
    m: int
    r: int
    gaps: tuple
    genus: int
    frobenius: int


def _representable_flags(m, r, limit):
    """flags[s] = True iff s = i*m + j*r with i, j >= 0, for s = 0..limit."""
    flags = [False] * (limit + 1)
    flags[0] = True
    for s in range(1, limit + 1):
        if (s >= m and flags[s - m]) or (s >= r and flags[s - r]):
            flags[s] = True
    return flags


def semigroup_gaps(m, r):
    """Positive integers not representable in <m, r>, for coprime m, r >= 2."""
    if m < 2 or r < 2:
        raise ValueError("need generators >= 2")
    if math.gcd(m, r) != 1:
        raise ValueError(f"generators {m}, {r} are not coprime")
    flags = _representable_flags(m, r, m * r)
    gaps = tuple(s for s in range(1, m * r + 1) if not flags[s])
    genus = (m - 1) * (r - 1) // 2
    frobenius = m * r - m - r
    if len(gaps) != genus or (gaps and gaps[-1] != frobenius):
        raise InternalConsistencyError("semigroup gap census mismatch")
    return SemigroupGaps(m=m, r=r, gaps=gaps, genus=genus, frobenius=frobenius)


def ell_counts(m, r, nmax):
    """l(nP) = #{s in <m, r> : s <= n} for n = 0..nmax."""
    if m < 2 or r < 2:
        raise ValueError("need generators >= 2")
    if math.gcd(m, r) != 1:
        raise ValueError(f"generators {m}, {r} are not coprime")
    flags = _representable_flags(m, r, max(nmax, 0))
    out = []
    acc = 0
    for n in range(nmax + 1):
        acc += flags[n]
        out.append(acc)
    return out
