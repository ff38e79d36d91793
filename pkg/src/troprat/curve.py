"""Tropical hypersurfaces: membership, plane-curve cell structure, weighted
divisor arithmetic, and the graph membership check for rational functions."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import geom
from .core import TropNum, TropPoly, canonicalize, stack_pair
from .errors import DegenerateInput, DimensionMismatch, TropError
from .subdiv import Subdivision, cell_endpoints, dual_subdivision


def hypersurface_member(f: TropPoly, point) -> bool:
    """True iff the defining max of f is attained by at least two exponents.

    The hypersurface of the -inf polynomial is all of R^n.
    """
    p = tuple(Fraction(x) for x in point)
    if len(p) != f.arity:
        raise DimensionMismatch(f"point of dimension {len(p)} for arity {f.arity}")
    if f.is_bottom:
        return True
    best = None
    hits = 0
    for e, c in f.items():
        v = c + sum(i * x for i, x in zip(e, p))
        if best is None or v > best:
            best, hits = v, 1
        elif v == best:
            hits += 1
    return hits >= 2


@dataclass(frozen=True)
class CurveEdge:
    a: tuple
    b: tuple
    weight: int
    dual: frozenset


@dataclass(frozen=True)
class CurveRay:
    base: tuple
    direction: tuple
    weight: int
    dual: frozenset


@dataclass(frozen=True)
class CurveLine:
    base: tuple
    direction: tuple
    weight: int
    dual: frozenset


@dataclass(frozen=True)
class PlaneCurve:
    """A weighted tropical plane curve with its dual subdivision attached."""

    vertices: tuple
    edges: tuple
    rays: tuple
    lines: tuple
    subdivision: Subdivision


def _cell_vertex(cell, coeff):
    """The point where every monomial of a 2-cell attains the maximum."""
    pts = sorted(cell)
    e0 = pts[0]
    c0 = coeff[e0]
    rows = [
        (e[0] - e0[0], e[1] - e0[1], c0 - coeff[e]) for e in pts[1:]
    ]
    for (a1, b1, r1), (a2, b2, r2) in combinations(rows, 2):
        det = a1 * b2 - a2 * b1
        if det:
            return (Fraction(r1 * b2 - r2 * b1, det), Fraction(a1 * r2 - a2 * r1, det))
    raise TropError("cell is not two-dimensional")


def plane_curve(f: TropPoly) -> PlaneCurve:
    """Curve dual to the subdivision: vertices from 2-cells, edges and rays
    from 1-cells, weights from dual lattice lengths."""
    if f.arity != 2:
        raise DimensionMismatch("plane_curve needs arity 2")
    if f.is_bottom:
        raise DegenerateInput("V(-inf) is the whole plane, not a curve")
    if f.is_unit:
        raise DegenerateInput("a monomial defines an empty hypersurface")
    g = canonicalize(f)
    sub = dual_subdivision(f)
    coeff = dict(g.items())
    newt = geom.hull2(g.support)

    if newt.dim == 1:
        lines = []
        for cell in sub.cells:
            p, q = cell_endpoints(cell)
            n = (p[0] - q[0], p[1] - q[1])  # tie: n . x = c_q - c_p
            delta = coeff[q] - coeff[p]
            nn = n[0] * n[0] + n[1] * n[1]
            base = (Fraction(delta * n[0], nn), Fraction(delta * n[1], nn))
            d = geom.primitive((-n[1], n[0]))
            lines.append(CurveLine(base, d, geom.lattice_length(p, q), cell))
        lines.sort(key=lambda L: (L.direction, L.base))
        return PlaneCurve((), (), (), tuple(lines), sub)

    vertex_of = {cell: _cell_vertex(cell, coeff) for cell in sub.cells}
    edges = []
    rays = []
    for one_cell, parents in sub.one_cells().items():
        u, v = cell_endpoints(one_cell)
        w = geom.lattice_length(u, v)
        if len(parents) == 2:
            p1 = vertex_of[sub.cells[parents[0]]]
            p2 = vertex_of[sub.cells[parents[1]]]
            a, b = sorted((p1, p2))
            edges.append(CurveEdge(a, b, w, one_cell))
        else:
            cell = sub.cells[parents[0]]
            base = vertex_of[cell]
            n = geom.primitive((-(v[1] - u[1]), v[0] - u[0]))
            probe = next(p for p in cell if geom._cross(u, v, p) != 0)
            if n[0] * (probe[0] - u[0]) + n[1] * (probe[1] - u[1]) > 0:
                n = (-n[0], -n[1])
            rays.append(CurveRay(base, n, w, one_cell))
    vertices = tuple(sorted(set(vertex_of.values())))
    edges.sort(key=lambda e: (e.a, e.b))
    rays.sort(key=lambda r: (r.direction, r.base))
    return PlaneCurve(vertices, tuple(edges), tuple(rays), (), sub)


def balancing_check(C: PlaneCurve) -> bool:
    """Weighted primitive directions around every vertex sum to zero."""
    sums = {v: [0, 0] for v in C.vertices}
    def bump(v, d, w):
        if v in sums:
            sums[v][0] += w * d[0]
            sums[v][1] += w * d[1]
    for e in C.edges:
        d = geom.primitive_of_rational(e.b[0] - e.a[0], e.b[1] - e.a[1])
        bump(e.a, d, e.weight)
        bump(e.b, (-d[0], -d[1]), e.weight)
    for r in C.rays:
        bump(r.base, r.direction, r.weight)
    return all(sx == 0 and sy == 0 for sx, sy in sums.values())


def recession_fan(f: TropPoly) -> PlaneCurve:
    """Curve of the zero-coefficient polynomial on Newt(f)'s lattice points."""
    if f.arity != 2:
        raise DimensionMismatch("recession_fan needs arity 2")
    if f.is_bottom:
        raise DegenerateInput("-inf has no recession fan")
    if f.is_unit:
        raise DegenerateInput("a monomial has no recession fan")
    newt = geom.hull2(f.support)
    flat = TropPoly(2, {p: 0 for p in geom.lattice_points(newt)})
    return plane_curve(flat)


# ---------------------------------------------------------------------------
# divisors: integer-weighted sums of segments, rays and lines


def _line_key(point, direction):
    """Canonical (normal, offset) for the line through `point` along
    `direction`; the canonical direction along the line is rot90(normal)."""
    n = geom.primitive_of_rational(-direction[1], direction[0])
    if n[0] < 0 or (n[0] == 0 and n[1] < 0):
        n = (-n[0], -n[1])
    c = n[0] * Fraction(point[0]) + n[1] * Fraction(point[1])
    return n, c


def _line_direction(n):
    return (-n[1], n[0])


def _line_anchor(key):
    n, c = key
    nn = n[0] * n[0] + n[1] * n[1]
    return (Fraction(c * n[0], nn), Fraction(c * n[1], nn))


def _param(key, point):
    d = _line_direction(key[0])
    dd = d[0] * d[0] + d[1] * d[1]
    return Fraction(d[0] * Fraction(point[0]) + d[1] * Fraction(point[1]), dd)


def _point_at(key, t):
    a = _line_anchor(key)
    d = _line_direction(key[0])
    return (a[0] + t * d[0], a[1] + t * d[1])


def _canonical_pieces(raw):
    """Refine raw (lo, hi, w) intervals on one line into maximal constant-
    weight pieces: split at all endpoints, add, merge, drop zeros."""
    ends = sorted({t for lo, hi, _ in raw for t in (lo, hi) if t is not None})
    if not ends:
        total = sum(w for lo, hi, w in raw)
        return [(None, None, total)] if total else []
    bounds = [None] + ends + [None]
    intervals = list(zip(bounds, bounds[1:]))
    weighted = []
    for lo, hi in intervals:
        if lo is not None and hi is not None and lo == hi:
            continue
        w = 0
        for plo, phi, pw in raw:
            if (plo is None or (lo is not None and plo <= lo)) and (
                phi is None or (hi is not None and hi <= phi)
            ):
                w += pw
        weighted.append([lo, hi, w])
    merged = []
    for lo, hi, w in weighted:
        if merged and merged[-1][2] == w and merged[-1][1] == lo:
            merged[-1][1] = hi
        else:
            merged.append([lo, hi, w])
    return [(lo, hi, w) for lo, hi, w in merged if w != 0]


@dataclass(frozen=True)
class Divisor:
    """Formal integer-weighted sum of lines, rays and segments, stored in
    canonical refined form so equality is structural."""

    lines: tuple  # ((normal, offset), ((lo, hi, weight), ...)) sorted

    @classmethod
    def from_raw(cls, pieces) -> "Divisor":
        by_line: dict = {}
        for key, lo, hi, w in pieces:
            by_line.setdefault(key, []).append((lo, hi, w))
        out = []
        for key in sorted(by_line, key=lambda k: (k[0], k[1])):
            canon = _canonical_pieces(by_line[key])
            if canon:
                out.append((key, tuple(canon)))
        return cls(tuple(out))

    @classmethod
    def empty(cls) -> "Divisor":
        return cls(())

    @property
    def is_empty(self) -> bool:
        return not self.lines

    def _raw(self):
        for key, pieces in self.lines:
            for lo, hi, w in pieces:
                yield key, lo, hi, w

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor.from_raw(list(self._raw()) + list(other._raw()))

    def __neg__(self) -> "Divisor":
        return Divisor.from_raw((k, lo, hi, -w) for k, lo, hi, w in self._raw())

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def _weight_on(self, key, lo, hi) -> int | None:
        """Constant weight on the interval (lo, hi) of the keyed line, or None
        if the weight function is not constant there."""
        pieces = dict(self.lines).get(key, ())
        overlapping = []
        for plo, phi, w in pieces:
            left = plo if lo is None else (lo if plo is None else max(plo, lo))
            right = phi if hi is None else (hi if phi is None else min(phi, hi))
            if left is None or right is None or left < right:
                overlapping.append((plo, phi, w))
        if not overlapping:
            return 0
        if len(overlapping) > 1:
            return None
        plo, phi, w = overlapping[0]
        lo_ok = plo is None or (lo is not None and plo <= lo)
        hi_ok = phi is None or (hi is not None and hi <= phi)
        return w if lo_ok and hi_ok else None

    def weight_on_ray(self, base, direction) -> int | None:
        key = _line_key(base, direction)
        t = _param(key, base)
        d = _line_direction(key[0])
        forward = geom.primitive_of_rational(*direction) == d
        return self._weight_on(key, t, None) if forward else self._weight_on(key, None, t)

    def weight_on_segment(self, a, b) -> int | None:
        key = _line_key(a, (b[0] - a[0], b[1] - a[1]))
        t0, t1 = sorted((_param(key, a), _param(key, b)))
        return self._weight_on(key, t0, t1)

    def pieces(self):
        """Geometric pieces: (kind, data..., weight) for display purposes."""
        out = []
        for key, pieces in self.lines:
            d = _line_direction(key[0])
            for lo, hi, w in pieces:
                if lo is None and hi is None:
                    out.append(("line", _line_anchor(key), d, w))
                elif lo is None:
                    out.append(("ray", _point_at(key, hi), (-d[0], -d[1]), w))
                elif hi is None:
                    out.append(("ray", _point_at(key, lo), d, w))
                else:
                    out.append(
                        ("segment", _point_at(key, lo), _point_at(key, hi), w)
                    )
        return out


def curve_to_divisor(C: PlaneCurve) -> Divisor:
    raw = []
    for e in C.edges:
        key = _line_key(e.a, (e.b[0] - e.a[0], e.b[1] - e.a[1]))
        t0, t1 = sorted((_param(key, e.a), _param(key, e.b)))
        raw.append((key, t0, t1, e.weight))
    for r in C.rays:
        key = _line_key(r.base, r.direction)
        t = _param(key, r.base)
        if geom.primitive_of_rational(*r.direction) == _line_direction(key[0]):
            raw.append((key, t, None, r.weight))
        else:
            raw.append((key, None, t, r.weight))
    for L in C.lines:
        key = _line_key(L.base, L.direction)
        raw.append((key, None, None, L.weight))
    return Divisor.from_raw(raw)


def divisor_add(d1: Divisor, d2: Divisor) -> Divisor:
    return d1 + d2


def divisor_sub(d1: Divisor, d2: Divisor) -> Divisor:
    return d1 - d2


# ---------------------------------------------------------------------------
# the graph membership check for rational-function pairs


@dataclass(frozen=True)
class DualityReport:
    total: int
    graph_hits: int
    below_hits: int
    above_hits: int
    member_hits: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def graph_duality_check(f: TropPoly, g: TropPoly, samples) -> DualityReport:
    """Check on each sample (x, t) that membership in the hypersurface of
    f + (x_{n+1} * g) is equivalent to: t equals phi(x) != -inf, or x lies on
    V(f) with t below phi(x), or x lies on V(g) with t above phi(x)."""
    if g.is_bottom:
        raise DegenerateInput("denominator must not be -inf")
    if f.arity != g.arity:
        raise DimensionMismatch("arity mismatch")
    stacked = stack_pair(f, g)
    graph = below = above = member_hits = 0
    violations = []
    total = 0
    for pt in samples:
        pt = tuple(Fraction(x) for x in pt)
        total += 1
        x, t = pt[:-1], TropNum(pt[-1])
        member = hypersurface_member(stacked, pt)
        phi = f(x) / g(x)
        on_graph = (not phi.is_bottom) and t == phi
        on_f = t < phi and hypersurface_member(f, x)
        on_g = t > phi and hypersurface_member(g, x)
        graph += on_graph
        below += on_f
        above += on_g
        member_hits += member
        if member != (on_graph or on_f or on_g):
            violations.append((pt, member, on_graph, on_f, on_g))
    return DualityReport(
        total, graph, below, above, member_hits, tuple(violations)
    )


def _rand_q(rng: random.Random, span: int = 8, max_den: int = 64) -> Fraction:
    d = rng.randint(1, max_den)
    return Fraction(rng.randint(-span * d, span * d), d)


def _envelope_breaks(f: TropPoly):
    """Breakpoints of a univariate polynomial's piecewise-linear graph."""
    hull = geom.upper_envelope_1d([(e[0], c) for e, c in f.items()])
    return [
        Fraction(c0 - c1, x1 - x0) for (x0, c0), (x1, c1) in zip(hull, hull[1:])
    ]


def _locus_pieces(f: TropPoly):
    """Sampleable pieces of V(f), or an empty list when V(f) is trivial."""
    if f.is_bottom or f.is_unit:
        return []
    if f.arity == 1:
        return [("root", (b,)) for b in _envelope_breaks(f)]
    try:
        C = plane_curve(f)
    except TropError:
        return []
    return (
        [("edge", e) for e in C.edges]
        + [("ray", r) for r in C.rays]
        + [("line", L) for L in C.lines]
    )


def _locus_point(pieces, rng: random.Random):
    """A random rational point from precomputed locus pieces."""
    if not pieces:
        return None
    kind, obj = pieces[rng.randrange(len(pieces))]
    if kind == "root":
        return obj
    if kind == "edge":
        t = Fraction(rng.randint(0, 16), 16)
        return (
            obj.a[0] + t * (obj.b[0] - obj.a[0]),
            obj.a[1] + t * (obj.b[1] - obj.a[1]),
        )
    t = Fraction(rng.randint(0, 64), 8) if kind == "ray" else Fraction(rng.randint(-64, 64), 8)
    return (obj.base[0] + t * obj.direction[0], obj.base[1] + t * obj.direction[1])


def duality_samples(f: TropPoly, g: TropPoly, count: int, seed: int):
    """Deterministic sample mix: graph points, points below V(f) and above
    V(g), near-graph probes, and fully random points."""
    rng = random.Random(seed)
    n = f.arity
    num_pieces = _locus_pieces(f)
    den_pieces = _locus_pieces(g)
    out = []
    while len(out) < count:
        mode = len(out) % 5
        x = tuple(_rand_q(rng) for _ in range(n))
        phi = f(x) / g(x)
        if mode == 0 and not phi.is_bottom:
            out.append(x + (phi.value,))
            continue
        if mode == 2:
            p = _locus_point(num_pieces, rng)
            if p is not None:
                v = f(p) / g(p)
                if not v.is_bottom:
                    out.append(p + (v.value - 1 - abs(_rand_q(rng, span=2)),))
                    continue
        if mode == 3:
            p = _locus_point(den_pieces, rng)
            if p is not None:
                v = f(p) / g(p)
                base = v.value if not v.is_bottom else Fraction(0)
                out.append(p + (base + 1 + abs(_rand_q(rng, span=2)),))
                continue
        if mode == 4 and not phi.is_bottom:
            eps = Fraction(1, rng.randint(2, 64))
            out.append(x + (phi.value + (eps if rng.random() < 0.5 else -eps),))
            continue
        out.append(x + (_rand_q(rng),))
    return out
