"""The max-plus semiring, tropical Laurent polynomials and rational functions.

Coefficients are exact rationals; the additive zero (-inf) is represented by
absence: a dropped term, or the empty polynomial.  Every value is immutable
and every operation is a pure function.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from . import geom
from .errors import DegenerateInput, DimensionMismatch, TropError

Exponent = tuple


def as_q(x) -> Fraction:
    """Coerce an exact rational-like value; floats are rejected."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__!s}")


@dataclass(frozen=True)
class TropNum:
    """A tropical scalar: an exact rational or bottom (-inf, value None)."""

    value: Fraction | None = None

    def __post_init__(self):
        if self.value is not None:
            object.__setattr__(self, "value", as_q(self.value))

    @classmethod
    def bottom(cls) -> "TropNum":
        return cls(None)

    @classmethod
    def of(cls, x) -> "TropNum":
        return cls(as_q(x))

    @property
    def is_bottom(self) -> bool:
        return self.value is None

    def __add__(self, other: "TropNum") -> "TropNum":  # tropical sum: max
        if self.is_bottom:
            return other
        if other.is_bottom:
            return self
        return TropNum(max(self.value, other.value))

    def __mul__(self, other: "TropNum") -> "TropNum":  # tropical product: +
        if self.is_bottom or other.is_bottom:
            return TropNum(None)
        return TropNum(self.value + other.value)

    def __truediv__(self, other: "TropNum") -> "TropNum":  # tropical quotient: -
        if other.is_bottom:
            raise ZeroDivisionError("tropical division by -inf")
        if self.is_bottom:
            return TropNum(None)
        return TropNum(self.value - other.value)

    def __pow__(self, k: int) -> "TropNum":  # tropical power: integer multiple
        if self.is_bottom:
            if k <= 0:
                raise ZeroDivisionError("nonpositive power of -inf")
            return self
        return TropNum(self.value * k)

    def _key(self):
        return (0, Fraction(0)) if self.is_bottom else (1, self.value)

    def __lt__(self, other):
        return self._key() < other._key()

    def __le__(self, other):
        return self._key() <= other._key()

    def __gt__(self, other):
        return self._key() > other._key()

    def __ge__(self, other):
        return self._key() >= other._key()

    def __repr__(self):
        return "TropNum(-inf)" if self.is_bottom else f"TropNum({self.value})"


BOTTOM = TropNum(None)


class TropPoly:
    """A tropical Laurent polynomial: finite map exponent -> finite rational.

    The empty map is the polynomial -inf.  Instances are immutable and
    hashable; arithmetic returns new values.
    """

    __slots__ = ("arity", "_terms", "_hash", "_canonical")

    def __init__(self, arity: int, terms: Mapping[Exponent, object] | None = None):
        if arity < 1:
            raise TropError("arity must be at least 1")
        clean: dict = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != arity or not all(isinstance(i, int) for i in e):
                raise DimensionMismatch(f"exponent {e} does not fit arity {arity}")
            clean[e] = as_q(c)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_canonical", False)

    def __setattr__(self, *_):
        raise AttributeError("TropPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "TropPoly":
        return cls(arity, {})

    @classmethod
    def constant(cls, arity: int, c) -> "TropPoly":
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def monomial(cls, exponent, c) -> "TropPoly":
        e = tuple(exponent)
        return cls(len(e), {e: c})

    @classmethod
    def variable(cls, index: int, arity: int) -> "TropPoly":
        e = tuple(1 if i == index else 0 for i in range(arity))
        return cls(arity, {e: 0})

    # -- inspection --------------------------------------------------------

    @property
    def is_bottom(self) -> bool:
        return not self._terms

    @property
    def is_unit(self) -> bool:
        return len(self._terms) == 1

    @property
    def support(self):
        return tuple(sorted(self._terms))

    def items(self):
        return tuple(sorted(self._terms.items()))

    def coeff(self, exponent) -> Fraction | None:
        return self._terms.get(tuple(exponent))

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        return (
            isinstance(other, TropPoly)
            and self.arity == other.arity
            and self._terms == other._terms
        )

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.arity, frozenset(self._terms.items()))))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{e}: {c}" for e, c in self.items())
        return f"TropPoly({self.arity}, {{{body}}})"

    # -- evaluation and arithmetic ------------------------------------------

    def __call__(self, point) -> TropNum:
        p = tuple(as_q(x) for x in point)
        if len(p) != self.arity:
            raise DimensionMismatch(
                f"point of dimension {len(p)} for arity {self.arity}"
            )
        best = None
        for e, c in self._terms.items():
            v = c + sum(i * x for i, x in zip(e, p))
            if best is None or v > best:
                best = v
        return TropNum(best)

    def _check(self, other: "TropPoly"):
        if self.arity != other.arity:
            raise DimensionMismatch(
                f"arity {self.arity} vs {other.arity}"
            )

    def __add__(self, other: "TropPoly") -> "TropPoly":
        self._check(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            cur = terms.get(e)
            if cur is None or c > cur:
                terms[e] = c
        return TropPoly(self.arity, terms)

    def __mul__(self, other: "TropPoly") -> "TropPoly":
        self._check(other)
        terms: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 + c2
                cur = terms.get(e)
                if cur is None or c > cur:
                    terms[e] = c
        return TropPoly(self.arity, terms)

    def __pow__(self, k: int) -> "TropPoly":
        if k == 0:
            return TropPoly.constant(self.arity, 0)
        if k < 0:
            if not self.is_unit:
                raise TropError("negative power of a non-monomial")
            ((e, c),) = self._terms.items()
            return TropPoly(self.arity, {tuple(k * i for i in e): c * k})
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def shift(self, v) -> "TropPoly":
        """Multiply by the unit x^v: translate every exponent by v."""
        v = tuple(v)
        return TropPoly(
            self.arity,
            {tuple(a + b for a, b in zip(e, v)): c for e, c in self._terms.items()},
        )

    def scale(self, c) -> "TropPoly":
        """Multiply by the constant c (add it to every coefficient)."""
        c = as_q(c)
        return TropPoly(self.arity, {e: cc + c for e, cc in self._terms.items()})


def eval_poly(f: TropPoly, point) -> TropNum:
    return f(point)


def trop_add(f: TropPoly, g: TropPoly) -> TropPoly:
    return f + g


def trop_mul(f: TropPoly, g: TropPoly) -> TropPoly:
    return f * g


def is_unit(f: TropPoly) -> bool:
    return f.is_unit


def newton_polygon(f: TropPoly) -> geom.Polygon:
    """Newton polygon of a 2-variable polynomial."""
    if f.arity != 2:
        raise DimensionMismatch("newton_polygon needs arity 2")
    if f.is_bottom:
        raise DegenerateInput("the -inf polynomial has no Newton polygon")
    return geom.hull2(f.support)


def newton_range(f: TropPoly) -> tuple[int, int]:
    """[min, max] exponent of a univariate polynomial."""
    if f.arity != 1:
        raise DimensionMismatch("newton_range needs arity 1")
    if f.is_bottom:
        raise DegenerateInput("the -inf polynomial has no Newton segment")
    exps = [e[0] for e in f.support]
    return min(exps), max(exps)


def stack_pair(f: TropPoly, g: TropPoly) -> TropPoly:
    """The (n+1)-variable polynomial f + (x_{n+1} * g) used for pairs."""
    if f.arity != g.arity:
        raise DimensionMismatch("stack_pair needs equal arities")
    if g.is_bottom:
        raise DegenerateInput("denominator must not be -inf")
    terms = {e + (0,): c for e, c in f.items()}
    for e, c in g.items():
        key = e + (1,)
        cur = terms.get(key)
        if cur is None or c > cur:
            terms[key] = c
    return TropPoly(f.arity + 1, terms)


# ---------------------------------------------------------------------------
# canonical (concave envelope) form


def _canonicalize_1d(f: TropPoly) -> TropPoly:
    pairs = [(e[0], c) for e, c in f.items()]
    hull = geom.upper_envelope_1d(pairs)
    lo, hi = min(x for x, _ in pairs), max(x for x, _ in pairs)
    return TropPoly(
        1, {(x,): geom.envelope_value_1d(hull, x) for x in range(lo, hi + 1)}
    )


def _canonicalize_2d(f: TropPoly) -> TropPoly:
    support = f.support
    newt = geom.hull2(support)
    if newt.dim == 0:
        return f
    if newt.dim == 1:
        a = min(newt.vertices)
        d = geom.primitive(geom._sub(max(newt.vertices), a))
        params = {}
        for e in support:
            t = (e[0] - a[0]) * d[0] + (e[1] - a[1]) * d[1]
            t //= d[0] * d[0] + d[1] * d[1]
            params[t] = f.coeff(e)
        hull = geom.upper_envelope_1d(sorted(params.items()))
        tmax = max(params)
        terms = {}
        for t in range(0, tmax + 1):
            e = (a[0] + t * d[0], a[1] + t * d[1])
            terms[e] = geom.envelope_value_1d(hull, t)
        return TropPoly(2, terms)
    lifted = [(e, c) for e, c in f.items()]
    facets, planes = geom.upper_faces_2d(lifted)
    hulls = [geom.hull2(facet) for facet in facets]
    terms = {}
    for q in geom.lattice_points(newt):
        for cell, plane in zip(hulls, planes):
            if cell.contains(q):
                terms[q] = geom.plane_value(plane, q)
                break
        else:  # pragma: no cover - facets cover the Newton polygon
            raise TropError(f"no facet covers {q}")
    return TropPoly(2, terms)


@lru_cache(maxsize=8192)
def _canonical_cached(f: TropPoly) -> TropPoly:
    if f.arity == 1:
        out = _canonicalize_1d(f)
    elif f.arity == 2:
        out = _canonicalize_2d(f)
    else:
        raise TropError("canonical form is implemented for arity 1 and 2")
    object.__setattr__(out, "_canonical", True)
    return out


def canonicalize(f: TropPoly) -> TropPoly:
    """Concave-envelope representative: support = all lattice points of the
    Newton polytope, coefficients on the upper envelope.  Function-preserving
    and idempotent."""
    if f.is_bottom or f._canonical or f.is_unit:
        return f
    return _canonical_cached(f)


def func_eq(f: TropPoly, g: TropPoly) -> bool:
    """Equality of f and g as functions (canonical forms coincide)."""
    if f.arity != g.arity:
        raise DimensionMismatch(f"arity {f.arity} vs {g.arity}")
    return canonicalize(f).items() == canonicalize(g).items()


# ---------------------------------------------------------------------------
# rational functions


@dataclass(frozen=True)
class TropRational:
    """A formal quotient num / den of tropical polynomials, den != -inf."""

    num: TropPoly
    den: TropPoly

    def __post_init__(self):
        if self.den.is_bottom:
            raise DegenerateInput("denominator must not be -inf")
        if self.num.arity != self.den.arity:
            raise DimensionMismatch("numerator and denominator arity differ")

    @property
    def arity(self) -> int:
        return self.num.arity

    def __call__(self, point) -> TropNum:
        return self.num(point) / self.den(point)


def rat_eval(phi: TropRational, point) -> TropNum:
    return phi(point)


def rat_eq(phi1: TropRational, phi2: TropRational) -> bool:
    """Pointwise equality, decided exactly by cross multiplication."""
    if phi1.arity != phi2.arity:
        raise DimensionMismatch("arity mismatch")
    return func_eq(phi1.num * phi2.den, phi2.num * phi1.den)
