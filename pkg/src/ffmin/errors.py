"""Exception types shared across the package."""


class CurveError(ValueError):
    """Invalid curve model (bad characteristic, non-squarefree f, ...)."""


class PlaceError(ValueError):
    """Place inconsistent with the curve, or unsupported in this context."""


class ReductionError(ValueError):
    """Exact Euclidean reduction requested where none is implemented."""


class CapExceededError(RuntimeError):
    """Brute-force enumeration would exceed the configured candidate cap."""


class ClassicalityError(CurveError):
    """Weierstrass-point test refused: characteristic too small vs genus."""


class InternalConsistencyError(RuntimeError):
    """Two independent computation routes disagreed; indicates a bug here."""


class ParseError(ValueError):
    """Syntax error in a curve/element/place expression, with position."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at column {position + 1})"
        super().__init__(message)


class SemanticError(ParseError):
    """Well-formed expression with invalid content; carries an error code."""

    CODES = (
        "NOT_PRIME",
        "EVEN_CHAR",
        "NOT_SQUAREFREE",
        "BAD_EXPONENT",
        "BAD_M",
        "DEGREE_TOO_SMALL",
        "ZERO_DENOMINATOR",
        "BAD_PLACE",
    )

    def __init__(self, code, message):
        assert code in self.CODES
        self.code = code
        super().__init__(f"{code}: {message}")
