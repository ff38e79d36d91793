"""Error types shared across the library."""


class TropError(Exception):
    """Base class for every error raised by this library."""


class DimensionMismatch(TropError):
    """Operands or points have incompatible arities."""


class DegenerateInput(TropError):
    """The operation is undefined for this degenerate input."""


class NonLatticePolygon(TropError):
    """A lattice polygon was required but the vertices are not integral."""


class PolygonTooLarge(TropError):
    """Enumeration was refused because the polygon exceeds the size bound."""


class LexError(TropError):
    """Tokenization failure; carries the byte offset of the bad character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class ParseError(TropError):
    """Parse failure; carries the token position and what was expected."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position
