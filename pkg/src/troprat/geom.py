"""Exact lattice-polygon geometry and stacked 3-d volumes.

All computations are exact: coordinates are Python ints or Fractions and no
floating point is used anywhere.  Polygons are convex, stored as minimal
counterclockwise vertex tuples starting at the lexicographically smallest
vertex; points and segments are first-class degenerate polygons.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations, product as iter_product
from math import gcd, lcm

from .errors import NonLatticePolygon, PolygonTooLarge

Point2 = tuple  # (x, y) with int or Fraction entries


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _is_int(x) -> bool:
    return isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)


@dataclass(frozen=True)
class Polygon:
    """Convex polygon: ccw minimal vertices; a point or a segment is allowed."""

    vertices: tuple

    @property
    def dim(self) -> int:
        return min(len(self.vertices) - 1, 2)

    @property
    def is_lattice(self) -> bool:
        return all(_is_int(x) and _is_int(y) for x, y in self.vertices)

    def translate(self, v) -> "Polygon":
        return Polygon(tuple((x + v[0], y + v[1]) for x, y in self.vertices))

    def edges(self):
        """Directed ccw boundary edges; a segment yields its single edge."""
        vs = self.vertices
        if len(vs) == 1:
            return []
        if len(vs) == 2:
            return [(vs[0], vs[1])]
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def contains(self, p) -> bool:
        vs = self.vertices
        if len(vs) == 1:
            return tuple(p) == vs[0]
        if len(vs) == 2:
            a, b = vs
            if _cross(a, b, p) != 0:
                return False
            lo, hi = min(a, b), max(a, b)
            return lo <= tuple(p) <= hi
        return all(_cross(a, b, p) >= 0 for a, b in self.edges())

    def bbox(self):
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


def hull2(points) -> Polygon:
    """Exact convex hull (monotone chain); drops collinear boundary points."""
    pts = sorted({(p[0], p[1]) for p in points})
    if not pts:
        raise ValueError("hull of an empty point set")
    if len(pts) == 1:
        return Polygon((pts[0],))
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 or all(_cross(hull[0], hull[1], q) == 0 for q in hull[2:]):
        return Polygon((pts[0], pts[-1]))
    return Polygon(tuple(hull))


def area2(P: Polygon) -> Fraction:
    """Shoelace area; 0 for points and segments."""
    vs = P.vertices
    if len(vs) < 3:
        return Fraction(0)
    twice = 0
    for i in range(len(vs)):
        x0, y0 = vs[i]
        x1, y1 = vs[(i + 1) % len(vs)]
        twice += x0 * y1 - x1 * y0
    return Fraction(twice, 2)


def lattice_length(a, b) -> int:
    """gcd of the coordinate differences of two integer points."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    if not (_is_int(dx) and _is_int(dy)):
        raise NonLatticePolygon("lattice length needs integer endpoints")
    return gcd(abs(int(dx)), abs(int(dy)))


def primitive(v):
    """Reduce an integer vector to its primitive direction."""
    x, y = int(v[0]), int(v[1])
    g = gcd(abs(x), abs(y))
    if g == 0:
        raise ValueError("zero vector has no direction")
    return (x // g, y // g)


def primitive_of_rational(dx, dy):
    """Primitive integer direction of a rational vector."""
    fx, fy = Fraction(dx), Fraction(dy)
    m = lcm(fx.denominator, fy.denominator)
    return primitive((int(fx * m), int(fy * m)))


def _require_lattice(P: Polygon):
    if not P.is_lattice:
        raise NonLatticePolygon(f"not a lattice polygon: {P.vertices}")


def lattice_points(P: Polygon):
    """All integer points of a lattice polygon, sorted."""
    _require_lattice(P)
    x0, y0, x1, y1 = P.bbox()
    out = []
    for x in range(int(x0), int(x1) + 1):
        for y in range(int(y0), int(y1) + 1):
            if P.contains((x, y)):
                out.append((x, y))
    return out

def boundary_lattice_count(P: Polygon) -> int:
    _require_lattice(P)
    if P.dim == 0:
        return 1
    if P.dim == 1:
        return lattice_length(*P.vertices) + 1
    return sum(lattice_length(a, b) for a, b in P.edges())


def pick_area(P: Polygon) -> Fraction:
    """Interior count + boundary/2 - 1; defined as 0 for degenerate polygons."""
    _require_lattice(P)
    if P.dim < 2:
        return Fraction(0)
    boundary = boundary_lattice_count(P)
    interior = len(lattice_points(P)) - boundary
    return Fraction(interior) + Fraction(boundary, 2) - 1


def minkowski_sum2(P: Polygon, Q: Polygon) -> Polygon:
    """Exact Minkowski sum of convex polygons (hull of vertex sums)."""
    return hull2([_add(p, q) for p in P.vertices for q in Q.vertices])


def _angle_cmp(u, v):
    """Exact ccw angular order starting from the positive x-axis."""
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return hu - hv
    c = u[0] * v[1] - u[1] * v[0]
    return 0 if c == 0 else (-1 if c > 0 else 1)


# ---------------------------------------------------------------------------
# stacked hulls and volumes


@dataclass(frozen=True)
class StackedHull:
    """conv(bottom x {0}  U  top x {1}) in R^3."""

    bottom: Polygon
    top: Polygon

    def points3(self):
        return [(x, y, 0) for x, y in self.bottom.vertices] + [
            (x, y, 1) for x, y in self.top.vertices
        ]


def volume_stacked(S: StackedHull) -> Fraction:
    """Exact volume via Simpson's rule.

    The slice area at height h is quadratic in h (a Minkowski combination of
    the two polygons), so (A0 + A(bottom+top) + A1)/6 is exact; every
    degenerate case (affine span below 3) comes out as 0 automatically.
    """
    a0 = area2(S.bottom)
    a1 = area2(S.top)
    am = area2(minkowski_sum2(S.bottom, S.top))
    return Fraction(a0 + am + a1, 6)


def _cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot3(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _sub3(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def _affine_rank3(pts) -> int:
    p0 = pts[0]
    basis = []
    for p in pts[1:]:
        v = _sub3(p, p0)
        if not basis:
            if v != (0, 0, 0):
                basis.append(v)
        elif len(basis) == 1:
            if _cross3(basis[0], v) != (0, 0, 0):
                basis.append(v)
        else:
            if _dot3(_cross3(basis[0], basis[1]), v) != 0:
                return 3
    return len(basis)


def _primitive3(n):
    fs = [Fraction(c) for c in n]
    m = lcm(*(f.denominator for f in fs))
    ints = [int(f * m) for f in fs]
    g = gcd(*(abs(c) for c in ints))
    return tuple(c // g for c in ints)


def volume3(points) -> Fraction:
    """Volume of the convex hull of finitely many exact 3-d points.

    Supporting planes are enumerated from point triples; each facet is fanned
    into tetrahedra from the centroid.  Quadratic in facet count but exact,
    which is all the oracle role asks for.
    """
    pts = sorted(set(points))
    if _affine_rank3(pts) < 3:
        return Fraction(0)
    m = len(pts)
    c = tuple(Fraction(sum(p[i] for p in pts), m) for i in range(3))
    seen = set()
    total = Fraction(0)
    for i, j, k in combinations(range(m), 3):
        n = _cross3(_sub3(pts[j], pts[i]), _sub3(pts[k], pts[i]))
        if n == (0, 0, 0):
            continue
        d = _dot3(n, pts[i])
        side = _dot3(n, c) - d
        if side == 0:
            continue
        if side > 0:
            n = tuple(-x for x in n)
            d = -d
        key = _primitive3(n)
        if key in seen:
            continue
        vals = [_dot3(n, p) - d for p in pts]
        if any(v > 0 for v in vals):
            continue
        seen.add(key)
        facet = [p for p, v in zip(pts, vals) if v == 0]
        fc = tuple(Fraction(sum(p[i] for p in facet), len(facet)) for i in range(3))
        ax = max(range(3), key=lambda t: abs(key[t]))
        u, v = [t for t in range(3) if t != ax]
        dirs = sorted(
            facet,
            key=cmp_to_key(
                lambda p, q: _angle_cmp(
                    (p[u] - fc[u], p[v] - fc[v]), (q[u] - fc[u], q[v] - fc[v])
                )
            ),
        )
        for t in range(1, len(dirs) - 1):
            det = _dot3(
                _cross3(_sub3(dirs[t], dirs[0]), _sub3(dirs[t + 1], dirs[0])),
                _sub3(dirs[0], c),
            )
            total += Fraction(abs(det), 6)
    return total


def volume_oracle(S: StackedHull) -> Fraction:
    """Independent stacked volume: full 3-d hull, tetrahedral fan."""
    return volume3(S.points3())


# ---------------------------------------------------------------------------
# Minkowski summand enumeration


def _edge_multiset(P: Polygon):
    """ccw boundary as (primitive direction, lattice length) pairs."""
    if P.dim == 0:
        return []
    if P.dim == 1:
        a, b = P.vertices
        d = primitive(_sub(b, a))
        return [(d, lattice_length(a, b)), ((-d[0], -d[1]), lattice_length(a, b))]
    out = []
    for a, b in P.edges():
        out.append((primitive(_sub(b, a)), lattice_length(a, b)))
    return out


def _polygon_from_edges(edges) -> Polygon:
    moves = [(d, c) for d, c in edges if c > 0]
    moves.sort(key=cmp_to_key(lambda A, B: _angle_cmp(A[0], B[0])))
    cur = (0, 0)
    pts = [cur]
    for d, c in moves:
        cur = (cur[0] + d[0] * c, cur[1] + d[1] * c)
        pts.append(cur)
    return hull2(pts)


def normalize_origin(P: Polygon) -> Polygon:
    """Translate so the lexicographically smallest vertex is the origin."""
    m = min(P.vertices)
    return P.translate((-m[0], -m[1]))


def summand_decompositions(P: Polygon, max_edge_sum: int = 24):
    """All unordered pairs (Q, R) of non-point lattice summands with Q+R = P.

    Works on the primitive edge multiset: a summand picks t_e in [0, len_e]
    per direction subject to the picks summing to zero.  Summands are
    translated so their lex-min vertex is the origin.
    """
    _require_lattice(P)
    if P.dim == 0:
        return ()
    edges = _edge_multiset(P)
    lens = [c for _, c in edges]
    if sum(lens) > max_edge_sum:
        raise PolygonTooLarge(
            f"edge multiplicity sum {sum(lens)} exceeds bound {max_edge_sum}"
        )
    combos = 1
    for c in lens:
        combos *= c + 1
    if combos > 300_000:
        raise PolygonTooLarge(f"{combos} candidate edge subsets is too many")
    target = normalize_origin(P)
    found = set()
    for picks in iter_product(*(range(c + 1) for c in lens)):
        if all(t == 0 for t in picks) or all(t == c for t, c in zip(picks, lens)):
            continue
        sx = sum(d[0] * t for (d, _), t in zip(edges, picks))
        sy = sum(d[1] * t for (d, _), t in zip(edges, picks))
        if sx != 0 or sy != 0:
            continue
        q = _polygon_from_edges([(d, t) for (d, _), t in zip(edges, picks)])
        r = _polygon_from_edges(
            [(d, c - t) for (d, c), t in zip(edges, picks)]
        )
        q, r = normalize_origin(q), normalize_origin(r)
        pair = tuple(sorted((q, r), key=lambda poly: poly.vertices))
        if pair in found:
            continue
        if minkowski_sum2(q, r) != target:
            continue
        found.add(pair)
    return tuple(sorted(found, key=lambda pr: (pr[0].vertices, pr[1].vertices)))


# ---------------------------------------------------------------------------
# upper (regular) envelopes of lifted point sets


def upper_envelope_1d(pairs):
    """Upper concave hull of (position, value) pairs, left to right."""
    pts = sorted(pairs)
    if len(pts) == 1:
        return list(pts)
    hull = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) >= 0:
            hull.pop()
        hull.append(p)
    return hull


def envelope_value_1d(hull, x) -> Fraction:
    if len(hull) == 1:
        if x != hull[0][0]:
            raise ValueError("point outside envelope support")
        return Fraction(hull[0][1])
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        if x0 <= x <= x1:
            return Fraction(y0) + Fraction(y1 - y0, x1 - x0) * (x - x0)
    raise ValueError("point outside envelope support")


def _plane3(A, B, R):
    """Plane through three lifted points as (n, d) with n·X = d, n_z > 0."""
    n = _cross3(_sub3(B, A), _sub3(R, A))
    if n[2] < 0:
        n = tuple(-x for x in n)
    return n, _dot3(n, A)


def plane_value(plane, q) -> Fraction:
    n, d = plane
    return Fraction(d - n[0] * q[0] - n[1] * q[1], n[2])


def _collinear_between(a, b, p) -> bool:
    if _cross(a, b, p) != 0:
        return False
    lo, hi = min(a, b), max(a, b)
    return lo <= p <= hi


def _one_cells_of(points, corners):
    """Split a cell boundary into maximal collinear runs of its points."""
    out = []
    k = len(corners)
    for i in range(k):
        u, v = corners[i], corners[(i + 1) % k]
        members = frozenset(p for p in points if _collinear_between(u, v, p))
        out.append(((u, v), members))
    return out


def upper_faces_2d(lifted):
    """Facets of the upper hull of lifted plane points, by gift wrapping.

    `lifted` is a sequence of ((x, y), value) pairs with a full-dimensional
    projection.  Returns (facets, planes): parallel lists where each facet is
    the frozenset of input points lying on the corresponding upper plane.
    """
    val = {(p[0], p[1]): c for p, c in lifted}
    pts = list(val)
    hull = hull2(pts)
    if hull.dim != 2:
        raise ValueError("upper_faces_2d needs a full-dimensional projection")
    lift3 = {p: (p[0], p[1], val[p]) for p in pts}

    # seed with the upper-hull edges of every boundary face: the 1-d envelope
    # of the lifts along each hull edge (interior lattice points may be lifted
    # below the envelope and must not produce seeds)
    queue = deque()
    for a, b in hull.edges():
        on_edge = {}
        for p in pts:
            if _collinear_between(a, b, p):
                t = (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])
                on_edge[t] = p
        chain = upper_envelope_1d((t, val[p]) for t, p in on_edge.items())
        for (t0, _), (t1, _) in zip(chain, chain[1:]):
            queue.append((on_edge[t0], on_edge[t1]))

    plane_keys = {}
    facets = []
    planes = []
    while queue:
        a, b = queue.popleft()
        A, B = lift3[a], lift3[b]
        best = None
        n = d = None
        for r in pts:
            if _cross(a, b, r) <= 0:
                continue
            R = lift3[r]
            if best is None or _dot3(n, R) > d:
                best = r
                n, d = _plane3(A, B, lift3[best])
        if best is None:
            continue
        key = (_primitive3(n), plane_value((n, d), (0, 0)))
        if key in plane_keys:
            continue
        plane_keys[key] = True
        facet = frozenset(p for p in pts if _dot3(n, lift3[p]) == d)
        facets.append(facet)
        planes.append((n, d))
        corners = hull2(facet).vertices
        for (u, v), _members in _one_cells_of(facet, corners):
            queue.append((v, u))

    order = sorted(range(len(facets)), key=lambda i: tuple(sorted(facets[i])))
    return [facets[i] for i in order], [planes[i] for i in order]
