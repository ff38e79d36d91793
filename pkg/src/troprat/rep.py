"""Representation analysis for tropical rational functions: pair volumes,
univariate factorization and minimum-volume representations, residuation
division, bounded factorization search, irreducibility, and complexity."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import geom
from .core import (
    TropPoly,
    TropRational,
    canonicalize,
    func_eq,
    newton_polygon,
    newton_range,
)
from .errors import DegenerateInput, DimensionMismatch, TropError
from .subdiv import mcomp


def vol_pair(f: TropPoly, g: TropPoly) -> Fraction:
    """Volume of the pair (f, g): the (n+1)-volume of the Newton polytope of
    f + (x_{n+1} * g); 0 when that body is lower-dimensional."""
    if g.is_bottom:
        raise DegenerateInput("denominator must not be -inf")
    if f.arity != g.arity:
        raise DimensionMismatch("arity mismatch")
    if f.is_bottom:
        return Fraction(0)
    if f.arity == 1:
        lo_f, hi_f = newton_range(f)
        lo_g, hi_g = newton_range(g)
        return Fraction((hi_f - lo_f) + (hi_g - lo_g), 2)
    if f.arity == 2:
        return geom.volume_stacked(
            geom.StackedHull(newton_polygon(f), newton_polygon(g))
        )
    raise TropError("pair volumes are implemented for arity 1 and 2")


@dataclass(frozen=True)
class RepPair:
    """A representation num/den with its cached pair volume."""

    num: TropPoly
    den: TropPoly
    volume: Fraction

    @classmethod
    def of(cls, num: TropPoly, den: TropPoly) -> "RepPair":
        return cls(num, den, vol_pair(num, den))

    def rational(self) -> TropRational:
        return TropRational(self.num, self.den)


# ---------------------------------------------------------------------------
# univariate roots and factorization


@dataclass(frozen=True)
class FactoredUni:
    """alpha * x^k * prod (x + root)^mult, roots sorted ascending."""

    unit_coeff: Fraction
    monomial_exp: int
    roots: tuple


def uni_roots(f: TropPoly):
    """Roots with multiplicity: breakpoints of the concave envelope; the gap
    between consecutive upper-hull exponents is the multiplicity."""
    if f.arity != 1:
        raise DimensionMismatch("uni_roots needs arity 1")
    if f.is_bottom:
        raise DegenerateInput("-inf has no roots")
    hull = geom.upper_envelope_1d([(e[0], c) for e, c in f.items()])
    return [
        (Fraction(c0 - c1, x1 - x0), x1 - x0)
        for (x0, c0), (x1, c1) in zip(hull, hull[1:])
    ]


def uni_factor(f: TropPoly) -> FactoredUni:
    if f.arity != 1:
        raise DimensionMismatch("uni_factor needs arity 1")
    if f.is_bottom:
        raise DegenerateInput("-inf cannot be factored")
    hull = geom.upper_envelope_1d([(e[0], c) for e, c in f.items()])
    return FactoredUni(
        unit_coeff=Fraction(hull[-1][1]),
        monomial_exp=hull[0][0],
        roots=tuple(uni_roots(f)),
    )


def uni_expand(F: FactoredUni) -> TropPoly:
    out = TropPoly.monomial((F.monomial_exp,), F.unit_coeff)
    for root, mult in F.roots:
        linear = TropPoly(1, {(1,): 0, (0,): root})
        for _ in range(mult):
            out = out * linear
    return out


def minrep_uni(phi: TropRational) -> RepPair:
    """The minimum-volume representation of a univariate rational function.

    Common roots are cancelled at minimum multiplicity, then the pair is
    normalized by a unit so the denominator has monomial exponent 0 and unit
    coefficient 0.
    """
    if phi.arity != 1:
        raise DimensionMismatch("minrep_uni needs arity 1")
    if phi.num.is_bottom:
        return RepPair.of(TropPoly.zero(1), TropPoly.constant(1, 0))
    fn = uni_factor(phi.num)
    fd = uni_factor(phi.den)
    dn = dict(fn.roots)
    dd = dict(fd.roots)
    for r in set(dn) & set(dd):
        m = min(dn[r], dd[r])
        for d in (dn, dd):
            d[r] -= m
            if d[r] == 0:
                del d[r]
    num = FactoredUni(
        fn.unit_coeff - fd.unit_coeff,
        fn.monomial_exp - fd.monomial_exp,
        tuple(sorted(dn.items())),
    )
    den = FactoredUni(Fraction(0), 0, tuple(sorted(dd.items())))
    return RepPair.of(uni_expand(num), uni_expand(den))


# ---------------------------------------------------------------------------
# residuation division and bounded factorization search


def _residual(fc: TropPoly, g: TropPoly) -> TropPoly | None:
    """Raw residuation: the maximal h with g*h <= f pointwise.

    `fc` must be canonical.  h is supported on the erosion of Newt(f) by
    Newt(g): the shifts keeping the whole support of g inside.
    """
    gc = canonicalize(g)
    fsup = set(fc.support)
    shifts = None
    for i in gc.support:
        ks = {tuple(a - b for a, b in zip(e, i)) for e in fsup}
        shifts = ks if shifts is None else shifts & ks
        if not shifts:
            return None
    terms = {}
    for k in shifts:
        terms[k] = min(
            fc.coeff(tuple(a + b for a, b in zip(k, i))) - gc.coeff(i)
            for i in gc.support
        )
    return TropPoly(fc.arity, terms)


def try_divide(f: TropPoly, g: TropPoly) -> TropPoly | None:
    """Maximal h with g*h <= f pointwise; returned only when g*h = f as
    functions, in canonical form."""
    if f.arity != g.arity:
        raise DimensionMismatch("arity mismatch")
    if g.is_bottom:
        raise DegenerateInput("cannot divide by -inf")
    if f.is_bottom:
        return TropPoly.zero(f.arity)
    h = _residual(canonicalize(f), g)
    if h is not None and func_eq(g * h, f):
        return canonicalize(h)
    return None


def unit_normalize(f: TropPoly) -> TropPoly:
    """Divide by a unit: shift the componentwise-minimal exponent to zero and
    the coefficient at the lex-least support point to zero."""
    if f.is_bottom:
        return f
    support = f.support
    mins = tuple(min(e[i] for e in support) for i in range(f.arity))
    shifted = f.shift(tuple(-m for m in mins))
    anchor = min(shifted.support)
    return shifted.scale(-shifted.coeff(anchor))


def _poly_key(p: TropPoly):
    return tuple(
        (e, (c.numerator, c.denominator)) for e, c in p.items()
    )


def _segment_splits(fc: TropPoly, newt):
    """Splits of a polynomial whose Newton polygon is a segment.

    Such a polynomial is a unit times a univariate polynomial in the
    primitive segment direction, so every root yields a linear factor."""
    a, b = min(newt.vertices), max(newt.vertices)
    d = geom.primitive((b[0] - a[0], b[1] - a[1]))
    dd = d[0] * d[0] + d[1] * d[1]
    along = {}
    for e, c in fc.items():
        t = ((e[0] - a[0]) * d[0] + (e[1] - a[1]) * d[1]) // dd
        along[(t,)] = c
    out = []
    for root, _mult in uni_roots(TropPoly(1, along)):
        linear = TropPoly(2, {d: Fraction(0), (0, 0): root})
        g = _residual(fc, linear)
        if g is None or g.is_bottom or g.is_unit:
            continue
        if func_eq(linear * g, fc):
            out.append((linear, g))
    return out


def _splits(f: TropPoly):
    """Verified two-factor splits recovered by alternating residuation from
    the Minkowski summand pairs of the Newton polygon.

    Starting from the all-zero polynomial on a summand's lattice points, two
    residuation rounds reach the fixpoint pair; only pairs that multiply back
    to f as functions are kept.  Segment Newton polygons are split exactly
    via their univariate roots instead.
    """
    fc = canonicalize(f)
    newt = newton_polygon(f)
    if newt.dim == 1 and geom.lattice_length(*newt.vertices) > 1:
        return _segment_splits(fc, newt)
    out = []
    seen = set()
    for pair in geom.summand_decompositions(newt):
        for summand in pair:
            seed = TropPoly(2, {p: 0 for p in geom.lattice_points(summand)})
            g = _residual(fc, seed)
            if g is None or g.is_bottom or g.is_unit:
                continue
            h = _residual(fc, g)
            if h is None or h.is_bottom or h.is_unit:
                continue
            g2 = _residual(fc, h)
            if g2 is not None and not g2.is_bottom:
                g = g2
            if not func_eq(g * h, f):
                continue
            key = tuple(
                sorted((_poly_key(unit_normalize(g)), _poly_key(unit_normalize(h))))
            )
            if key in seen:
                continue
            seen.add(key)
            out.append((g, h))
    return out


def enumerate_factorizations(f: TropPoly, depth: int = 8):
    """The trivial factorization plus every complete factorization found by
    recursive residuation splitting.

    Complete for all-zero-coefficient inputs; for general coefficients the
    search is sound (every result is verified with func_eq) but not proven
    exhaustive.
    """
    if f.arity != 2:
        raise DimensionMismatch("enumerate_factorizations needs arity 2")
    if f.is_bottom:
        raise DegenerateInput("-inf cannot be factored")
    memo: dict = {}

    def complete(p: TropPoly, budget: int):
        key = _poly_key(unit_normalize(canonicalize(p)))
        if key in memo:
            return memo[key]
        trivial = frozenset({(key,)})
        if budget == 0 or p.is_unit:
            memo[key] = trivial
            return trivial
        splits = _splits(p)
        if not splits:
            memo[key] = trivial
            return trivial
        results = set()
        for g, h in splits:
            for left in complete(g, budget - 1):
                for right in complete(h, budget - 1):
                    results.add(tuple(sorted(left + right)))
        memo[key] = frozenset(results)
        return memo[key]

    norm = unit_normalize(canonicalize(f))
    found = {(_poly_key(norm),)} | set(complete(f, depth))
    factorizations = []
    for multiset in sorted(found):
        factorizations.append(
            tuple(TropPoly(2, {e: Fraction(*c) for e, c in keyed}) for keyed in multiset)
        )
    return tuple(factorizations)


# ---------------------------------------------------------------------------
# complexity and irreducibility


def fcomp(factors) -> int:
    """Sum of the factors' monomial complexities minus (k - 1)."""
    factors = list(factors)
    if not factors:
        raise TropError("fcomp needs at least one factor")
    if any(p.is_bottom for p in factors):
        raise DegenerateInput("-inf factors have no complexity")
    return sum(mcomp(p) for p in factors) - (len(factors) - 1)


def newton_irreducible(f: TropPoly) -> bool:
    """No decomposition of Newt(f) into two non-point lattice summands."""
    if f.is_bottom:
        raise DegenerateInput("-inf has no Newton polytope")
    if f.arity == 1:
        lo, hi = newton_range(f)
        return hi - lo == 1
    newt = newton_polygon(f)
    if newt.dim == 0:
        return False
    return not geom.summand_decompositions(newt)


def curve_irreducible(f: TropPoly) -> bool:
    """Irreducibility of the curve of an all-zero-coefficient polynomial."""
    if f.arity != 2:
        raise DimensionMismatch("curve_irreducible needs arity 2")
    if f.is_bottom:
        raise DegenerateInput("-inf defines no curve")
    if any(c != 0 for _e, c in f.items()):
        raise TropError(
            "curve_irreducible applies only to all-zero-coefficient polynomials"
        )
    return newton_irreducible(f)


def monotonicity_check(f: TropPoly, g: TropPoly, h: TropPoly):
    """Volumes (vol(f, g), vol(f*h, g*h)); the second never falls below the
    first and they agree exactly when h is a unit."""
    if h.is_bottom or g.is_bottom:
        raise DegenerateInput("g and h must not be -inf")
    before = vol_pair(f, g)
    if before == 0:
        raise DegenerateInput("the pair body must have full affine span")
    after = vol_pair(f * h, g * h)
    if after < before or (after == before) != h.is_unit:
        raise TropError("volume monotonicity violated (internal error)")
    return before, after
