"""Exception types shared across the package."""


class DimAlgError(Exception):
    """Base class for every error raised by dimalg."""


class DimensionMismatch(DimAlgError):
    """A slice-wise operation was applied to elements of distinct dimensions.

    Addition (and anything built on it) is only defined within a single
    dimension slice; the two offending dimensions are kept for reporting.
    """

    def __init__(self, left, right, context: str = ""):
        self.left = left
        self.right = right
        msg = f"undefined across dimensions {left!r} and {right!r}"
        if context:
            msg = f"{context}: {msg}"
        super().__init__(msg)


class DimensionMapMismatch(DimAlgError):
    """Pointwise addition of maps whose dimension maps differ."""


class CarrierError(DimAlgError):
    """A value does not belong to a slice carrier, or the carrier kind is unsupported."""


class ConstructionError(DimAlgError):
    """A structure failed its construction-time validation (with a witness)."""


class ExprSyntaxError(DimAlgError):
    """Lexing or parsing failure in a quantity/polynomial expression."""

    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} (at offset {pos})")


class UnknownSymbolError(ExprSyntaxError):
    """An expression referenced a symbol the resolver does not know."""

    def __init__(self, symbol: str, pos: int):
        self.symbol = symbol
        super().__init__(f"unknown symbol {symbol!r}", pos)


class InputFormatError(DimAlgError):
    """A registry/structure/poisson document is malformed (distinct from axiom failures)."""
