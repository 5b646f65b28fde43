"""Exact invariants of hyperelliptic function fields over prime fields:
Riemann-Roch spaces, Weierstrass gaps, speciality indices and Euclidean
minima, plus a harness that machine-checks the classical bounds relating
them on explicit curves and enumerated families.
"""

from ffmin._core import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
