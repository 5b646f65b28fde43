"""Expression grammar for the CLI.

Curves:    y^2 = <polyexpr> over gf(<p>)   or   y^<m> = <polyexpr> over gf(<p>)
Polyexpr:  terms in x with + - * ^ and integer literals, whitespace-insensitive.
Elements:  <polyexpr>[/<polyexpr>] ; <polyexpr>[/<polyexpr>]   (a and b parts)
Places:    inf | inf+ | inf- | x=<c> | x=<c>,y=<c>   (semicolon-separated lists;
           x=<c> expands to every place above that coordinate)
"""

import math
import re
from dataclasses import dataclass

from ffmin.algebra import Poly, RatFun, is_prime, poly_is_squarefree
from ffmin.curve import CurveModel, affine_place, infinity_places, validate_place
from ffmin.errors import ParseError, SemanticError

_TOKEN_RE = re.compile(r"(\d+)|([a-z]+)|(\^|\+|-|\*|/|\(|\)|=|;|,)|(\S)")


def _tokenize(text):
    tokens = []
    for m in _TOKEN_RE.finditer(text.lower()):
        pos = m.start()
        if m.group(1):
            tokens.append(("NUM", int(m.group(1)), pos))
        elif m.group(2):
            tokens.append(("NAME", m.group(2), pos))
        elif m.group(3):
            tokens.append(("OP", m.group(3), pos))
        else:
            raise ParseError(f"unexpected character {m.group(4)!r}", pos)
    tokens.append(("END", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            raise ParseError(f"expected {want!r}, found {tok[1]!r}", tok[2])
        return tok

    def at_op(self, value):
        tok = self.peek()
        return tok[0] == "OP" and tok[1] == value

    def parse_poly_terms(self):
        """Sum of terms; returns a dict exponent -> integer coefficient."""
        acc = {}
        sign = 1
        if self.at_op("+") or self.at_op("-"):
            sign = -1 if self.next()[1] == "-" else 1
        while True:
            coeff, exp = self.parse_term()
            acc[exp] = acc.get(exp, 0) + sign * coeff
            if self.at_op("+") or self.at_op("-"):
                sign = -1 if self.next()[1] == "-" else 1
                continue
            return acc

    def parse_term(self):
        coeff, exp = self.parse_factor()
        while self.at_op("*"):
            self.next()
            c2, e2 = self.parse_factor()
            coeff *= c2
            exp += e2
        return coeff, exp

    def parse_factor(self):
        tok = self.next()
        if tok[0] == "NUM":
            return tok[1], 0
        if tok[0] == "NAME" and tok[1] == "x":
            if self.at_op("^"):
                self.next()
                etok = self.expect("NUM")
                return 1, etok[1]
            return 1, 1
        raise ParseError(f"expected a number or x, found {tok[1]!r}", tok[2])


def _terms_to_poly(terms, p):
    if not terms:
        return Poly.zero(p)
    top = max(terms)
    coeffs = [0] * (top + 1)
    for e, cval in terms.items():
        coeffs[e] = cval % p
    return Poly(p, coeffs)


@dataclass(frozen=True)
class CurveSpec:
    p: int
    m: int
    f: Poly

    def curve(self):
        return CurveModel(self.p, self.f, self.m)

    def render(self):
        return f"y^{self.m} = {self.f.render()} over gf({self.p})"


def parse_curve(text):
    """Parse and validate a curve expression; returns a CurveSpec."""
    ps = _Parser(text)
    ps.expect("NAME", "y")
    ps.expect("OP", "^")
    mtok = ps.expect("NUM")
    m = mtok[1]
    ps.expect("OP", "=")
    terms = ps.parse_poly_terms()
    ps.expect("NAME", "over")
    ps.expect("NAME", "gf")
    ps.expect("OP", "(")
    ptok = ps.expect("NUM")
    p = ptok[1]
    ps.expect("OP", ")")
    ps.expect("END")
    if not is_prime(p):
        raise SemanticError("NOT_PRIME", f"{p} is not prime")
    if p == 2:
        raise SemanticError("EVEN_CHAR", "characteristic 2 is not supported")
    if m < 2:
        raise SemanticError("BAD_M", f"need y-exponent >= 2, got {m}")
    f = _terms_to_poly(terms, p)
    if f.is_zero() or f.degree < 1:
        raise SemanticError("DEGREE_TOO_SMALL", "right-hand side must be non-constant")
    if m == 2 and f.degree < 3:
        raise SemanticError("DEGREE_TOO_SMALL", "hyperelliptic models need deg f >= 3")
    if not poly_is_squarefree(f):
        raise SemanticError("NOT_SQUAREFREE", f"{f.render()} is not squarefree mod {p}")
    if m != 2:
        if p % m == 0:
            raise SemanticError("BAD_M", f"characteristic {p} divides m = {m}")
        if math.gcd(m, f.degree) != 1:
            raise SemanticError("BAD_M", f"need gcd(m, deg f) = 1, got gcd({m}, {f.degree})")
    return CurveSpec(p=p, m=m, f=f)


def parse_ratfun(text, p):
    """<polyexpr>[/<polyexpr>] over GF(p)."""
    ps = _Parser(text)
    num = _terms_to_poly(ps.parse_poly_terms(), p)
    if ps.at_op("/"):
        ps.next()
        den = _terms_to_poly(ps.parse_poly_terms(), p)
        ps.expect("END")
        if den.is_zero():
            raise SemanticError("ZERO_DENOMINATOR", "denominator reduces to 0")
        return RatFun(num, den)
    ps.expect("END")
    return RatFun(num)


def parse_element(text, curve):
    """Two rational-function expressions 'a;b' for the components of a + Y b."""
    parts = text.split(";")
    if len(parts) != 2:
        raise ParseError("element syntax is '<a>;<b>' with rational-function parts")
    from ffmin.elements import FFElem

    a = parse_ratfun(parts[0], curve.p)
    b = parse_ratfun(parts[1], curve.p)
    return FFElem(curve, a, b)


def parse_place_spec(text, curve):
    """One place spec; x=<c> expands to every place above that x-coordinate."""
    s = text.strip().lower()
    if s in ("inf", "inf+", "inf-"):
        kind, places = infinity_places(curve)
        if s == "inf":
            return list(places)
        sign = 1 if s.endswith("+") else -1
        matches = [P for P in places if P.sign == sign]
        if not matches:
            raise SemanticError("BAD_PLACE", f"{s}: infinity does not split on this curve")
        return matches
    m = re.fullmatch(r"x\s*=\s*(-?\d+)(?:\s*,\s*y\s*=\s*(-?\d+))?", s)
    if not m:
        raise ParseError(f"bad place spec {text!r} (use inf, inf+, inf-, x=<c> or x=<c>,y=<c>)")
    x0 = int(m.group(1)) % curve.p
    places = affine_place(curve, x0)
    if m.group(2) is None:
        return places
    y0 = int(m.group(2)) % curve.p
    for P in places:
        if P.y0 == y0:
            validate_place(curve, P)
            return [P]
    raise SemanticError("BAD_PLACE", f"no place at x={x0}, y={y0} on this curve")


def parse_places(text, curve):
    """Semicolon-separated place specs, deduplicated, canonically ordered."""
    out = []
    for part in text.split(";"):
        if part.strip():
            out.extend(parse_place_spec(part, curve))
    seen = []
    for P in out:
        if P not in seen:
            seen.append(P)
    if not seen:
        raise ParseError("empty place list")
    return sorted(seen, key=lambda P: P.sort_key())
