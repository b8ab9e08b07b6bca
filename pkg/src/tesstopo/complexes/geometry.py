"""Exact rational geometry: vectors, convex polyhedra, polygon clipping.

Everything works over plain :class:`~fractions.Fraction` values. There is no
floating point and no epsilon anywhere in this module; every incidence,
containment, and degeneracy question is decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from ..errors import NonConvexCellError

Vec = tuple[Fraction, Fraction, Fraction]
Vec2 = tuple[Fraction, Fraction]
Mat = tuple[Vec, Vec, Vec]

_F = Fraction
ZERO3: Vec = (_F(0), _F(0), _F(0))


def vec3(x, y, z) -> Vec:
    return (_F(x), _F(y), _F(z))


def add(a: Vec, b: Vec) -> Vec:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def sub(a: Vec, b: Vec) -> Vec:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def neg(a: Vec) -> Vec:
    return (-a[0], -a[1], -a[2])


def smul(t, a: Vec) -> Vec:
    t = _F(t)
    return (t * a[0], t * a[1], t * a[2])


def dot(a: Vec, b: Vec) -> Fraction:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a: Vec, b: Vec) -> Vec:
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def det3(m: Mat) -> Fraction:
    return dot(m[0], cross(m[1], m[2]))


def mat_vec(m: Mat, v: Vec) -> Vec:
    return (dot(m[0], v), dot(m[1], v), dot(m[2], v))


def transpose(m: Mat) -> Mat:
    return ((m[0][0], m[1][0], m[2][0]),
            (m[0][1], m[1][1], m[2][1]),
            (m[0][2], m[1][2], m[2][2]))


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)  # type: ignore[return-value]


def inverse(m: Mat) -> Mat:
    d = det3(m)
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    c0 = cross(m[1], m[2])
    c1 = cross(m[2], m[0])
    c2 = cross(m[0], m[1])
    # rows of the adjugate are the cofactor columns
    return ((c0[0] / d, c1[0] / d, c2[0] / d),
            (c0[1] / d, c1[1] / d, c2[1] / d),
            (c0[2] / d, c1[2] / d, c2[2] / d))


def identity3() -> Mat:
    one, zero = _F(1), _F(0)
    return ((one, zero, zero), (zero, one, zero), (zero, zero, one))


def orient3d(a: Vec, b: Vec, c: Vec, d: Vec) -> Fraction:
    """Signed volume form: positive iff d lies on the side of plane(a,b,c)
    pointed to by cross(b-a, c-a)."""
    return det3((sub(b, a), sub(c, a), sub(d, a)))


def primitive(v: Vec) -> Vec:
    """Scale a nonzero rational vector to coprime integers, keeping direction."""
    if v == ZERO3:
        raise ValueError("zero vector has no primitive form")
    scale = 1
    for comp in v:
        scale = scale * comp.denominator // gcd(scale, comp.denominator)
    ints = [int(comp * scale) for comp in v]
    g = gcd(gcd(abs(ints[0]), abs(ints[1])), abs(ints[2]))
    return (_F(ints[0] // g), _F(ints[1] // g), _F(ints[2] // g))


def on_segment(p: Vec, a: Vec, b: Vec, *, strict: bool) -> bool:
    """Whether p lies on segment ab; strict excludes the endpoints."""
    d = sub(b, a)
    r = sub(p, a)
    if cross(d, r) != ZERO3:
        return False
    t_num = dot(r, d)
    t_den = dot(d, d)
    if strict:
        return 0 < t_num < t_den
    return 0 <= t_num <= t_den


# ---------------------------------------------------------------------------
# 2d helpers (used for plate computation inside a shared facet plane)

def cross2(o: Vec2, a: Vec2, b: Vec2) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def signed_area2(ring: list[Vec2]) -> Fraction:
    total = _F(0)
    for i, p in enumerate(ring):
        q = ring[(i + 1) % len(ring)]
        total += p[0] * q[1] - q[0] * p[1]
    return total / 2


def clean_ring2(ring: list[Vec2]) -> list[Vec2]:
    """Drop consecutive duplicates, then collinear points."""
    out: list[Vec2] = []
    for p in ring:
        if not out or p != out[-1]:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    changed = True
    while changed and len(out) >= 3:
        changed = False
        for i in range(len(out)):
            o, a, b = out[i - 1], out[i], out[(i + 1) % len(out)]
            if cross2(o, a, b) == 0:
                out.pop(i)
                changed = True
                break
    return out


def clip_keep_left(ring: list[Vec2], a: Vec2, b: Vec2) -> list[Vec2]:
    """Clip a polygon by the halfplane on the left of the directed line ab."""
    if not ring:
        return []
    out: list[Vec2] = []
    n = len(ring)
    side = [cross2(a, b, p) for p in ring]
    for i in range(n):
        p, q = ring[i], ring[(i + 1) % n]
        sp, sq = side[i], side[(i + 1) % n]
        if sp >= 0:
            out.append(p)
        if (sp > 0 and sq < 0) or (sp < 0 and sq > 0):
            t = sp / (sp - sq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def convex_intersection2(p_ring: list[Vec2], q_ring: list[Vec2]) -> list[Vec2]:
    """Intersection of two convex polygons, both counterclockwise.

    Returns a cleaned counterclockwise ring; fewer than 3 points (or zero
    area) means the intersection is not two-dimensional.
    """
    out = list(p_ring)
    for i in range(len(q_ring)):
        out = clip_keep_left(out, q_ring[i], q_ring[(i + 1) % len(q_ring)])
        if not out:
            return []
    return clean_ring2(out)


def point_in_ring2(pt: Vec2, ring: list[Vec2], *, strict: bool) -> bool:
    """Point in a counterclockwise convex polygon. Strict means the open
    interior; non-strict includes the boundary."""
    for i in range(len(ring)):
        c = cross2(ring[i], ring[(i + 1) % len(ring)], pt)
        if strict and c <= 0:
            return False
        if not strict and c < 0:
            return False
    return True


def drop_axis(n: Vec) -> int:
    """Coordinate to drop when projecting a plane with normal n to 2d."""
    k, best = 0, abs(n[0])
    for i in (1, 2):
        if abs(n[i]) > best:
            k, best = i, abs(n[i])
    return k


def project2(p: Vec, k: int) -> Vec2:
    if k == 0:
        return (p[1], p[2])
    if k == 1:
        return (p[2], p[0])
    return (p[0], p[1])


def lift3(xy: Vec2, k: int, normal: Vec, offset: Fraction) -> Vec:
    """Inverse of project2 for points on the plane normal . x == offset."""
    if k == 0:
        y, z = xy
        x = (offset - normal[1] * y - normal[2] * z) / normal[0]
        return (x, y, z)
    if k == 1:
        z, x = xy
        y = (offset - normal[2] * z - normal[0] * x) / normal[1]
        return (x, y, z)
    x, y = xy
    z = (offset - normal[0] * x - normal[1] * y) / normal[2]
    return (x, y, z)


def ring_ccw2(ring: list[Vec2]) -> list[Vec2]:
    return ring if signed_area2(ring) > 0 else ring[::-1]


# ---------------------------------------------------------------------------
# convex polyhedra

@dataclass(frozen=True)
class Facet:
    """One 2-face. The cell satisfies normal . x <= offset, with equality
    exactly on this facet; the ring lists apex indices counterclockwise as
    seen from outside."""

    normal: Vec  # primitive integer vector
    offset: Fraction
    ring: tuple[int, ...]


@dataclass(frozen=True)
class Polyhedron:
    apices: tuple[Vec, ...]
    facets: tuple[Facet, ...]
    ridges: tuple[tuple[int, int], ...]
    volume: Fraction

    def bounds(self) -> tuple[Vec, Vec]:
        lo = tuple(min(p[i] for p in self.apices) for i in range(3))
        hi = tuple(max(p[i] for p in self.apices) for i in range(3))
        return lo, hi  # type: ignore[return-value]

    def translate(self, s: Vec) -> Polyhedron:
        apices = tuple(add(p, s) for p in self.apices)
        facets = tuple(Facet(f.normal, f.offset + dot(f.normal, s), f.ring)
                       for f in self.facets)
        return Polyhedron(apices, facets, self.ridges, self.volume)

    def facet_equalities(self, p: Vec) -> list[int] | None:
        """Indices of facet planes through p, or None when p is outside."""
        hits: list[int] = []
        for i, f in enumerate(self.facets):
            val = dot(f.normal, p)
            if val > f.offset:
                return None
            if val == f.offset:
                hits.append(i)
        return hits

    def facet_ring_points(self, i: int) -> list[Vec]:
        return [self.apices[j] for j in self.facets[i].ring]


def _initial_tetrahedron(points: list[Vec]) -> tuple[list[int], list[tuple[int, int, int]]] | None:
    i0 = 0
    i1 = next((i for i in range(len(points)) if points[i] != points[i0]), None)
    if i1 is None:
        return None
    i2 = next((i for i in range(len(points))
               if cross(sub(points[i1], points[i0]), sub(points[i], points[i0])) != ZERO3),
              None)
    if i2 is None:
        return None
    i3 = next((i for i in range(len(points))
               if orient3d(points[i0], points[i1], points[i2], points[i]) != 0),
              None)
    if i3 is None:
        return None
    corners = [i0, i1, i2, i3]
    tris: list[tuple[int, int, int]] = []
    for tri in combinations(range(4), 3):
        other = ({0, 1, 2, 3} - set(tri)).pop()
        a, b, c = (corners[t] for t in tri)
        d = corners[other]
        if orient3d(points[a], points[b], points[c], points[d]) > 0:
            a, b = b, a
        tris.append((a, b, c))
    return corners, tris


def _assemble_ring(edges: list[tuple[int, int]]) -> list[int]:
    succ: dict[int, int] = {}
    for u, v in edges:
        if u in succ:
            raise NonConvexCellError("facet boundary is not a simple cycle")
        succ[u] = v
    start = edges[0][0]
    ring = [start]
    cur = succ[start]
    while cur != start:
        ring.append(cur)
        cur = succ[cur]
        if len(ring) > len(edges):
            raise NonConvexCellError("facet boundary is not a single cycle")
    if len(ring) != len(edges):
        raise NonConvexCellError("facet boundary splits into several cycles")
    return ring


def _strip_collinear(ring: list[int], points: list[Vec]) -> list[int]:
    out = list(ring)
    changed = True
    while changed and len(out) >= 3:
        changed = False
        for i in range(len(out)):
            o = points[out[i - 1]]
            a = points[out[i]]
            b = points[out[(i + 1) % len(out)]]
            if cross(sub(a, o), sub(b, a)) == ZERO3:
                out.pop(i)
                changed = True
                break
    return out


def convex_hull(raw_points: list[Vec]) -> Polyhedron:
    """Exact incremental hull. Input points that are not extreme (interior,
    on a facet, or in the relative interior of a ridge) are dropped."""
    points: list[Vec] = []
    seen: set[Vec] = set()
    for p in raw_points:
        if p not in seen:
            seen.add(p)
            points.append(p)
    start = _initial_tetrahedron(points)
    if start is None:
        raise NonConvexCellError("cell is not three-dimensional")
    corners, tris_list = start
    tris: set[tuple[int, int, int]] = set(tris_list)
    used = set(corners)
    for idx, p in enumerate(points):
        if idx in used:
            continue
        visible = [t for t in tris
                   if orient3d(points[t[0]], points[t[1]], points[t[2]], p) > 0]
        if not visible:
            continue
        vis_edges: set[tuple[int, int]] = set()
        for a, b, c in visible:
            vis_edges.update(((a, b), (b, c), (c, a)))
        horizon = [(u, v) for (u, v) in vis_edges if (v, u) not in vis_edges]
        tris.difference_update(visible)
        tris.update((u, v, idx) for u, v in horizon)

    # merge coplanar triangles into facets
    groups: dict[tuple[Vec, Fraction], list[tuple[int, int, int]]] = {}
    for t in tris:
        n = cross(sub(points[t[1]], points[t[0]]), sub(points[t[2]], points[t[0]]))
        np_ = primitive(n)
        groups.setdefault((np_, dot(np_, points[t[0]])), []).append(t)

    facet_rings: list[tuple[Vec, Fraction, list[int]]] = []
    for (n, c), group in groups.items():
        edges: set[tuple[int, int]] = set()
        for a, b, cc in group:
            for e in ((a, b), (b, cc), (cc, a)):
                if (e[1], e[0]) in edges:
                    edges.remove((e[1], e[0]))
                else:
                    edges.add(e)
        ring = _assemble_ring(sorted(edges))
        ring = _strip_collinear(ring, points)
        if len(ring) < 3:
            raise NonConvexCellError("degenerate facet after merging")
        facet_rings.append((n, c, ring))

    hull_indices = sorted({i for _, _, ring in facet_rings for i in ring},
                          key=lambda i: points[i])
    remap = {old: new for new, old in enumerate(hull_indices)}
    apices = tuple(points[i] for i in hull_indices)

    facets: list[Facet] = []
    for n, c, ring in facet_rings:
        mapped = [remap[i] for i in ring]
        low = mapped.index(min(mapped))
        facets.append(Facet(n, c, tuple(mapped[low:] + mapped[:low])))
    facets.sort(key=lambda f: (f.normal, f.offset))

    edge_count: dict[tuple[int, int], int] = {}
    for f in facets:
        for i in range(len(f.ring)):
            a, b = f.ring[i], f.ring[(i + 1) % len(f.ring)]
            key = (a, b) if a < b else (b, a)
            edge_count[key] = edge_count.get(key, 0) + 1
    if any(v != 2 for v in edge_count.values()):
        raise NonConvexCellError("hull surface is not closed")
    ridges = tuple(sorted(edge_count))

    volume = _F(0)
    for f in facets:
        q0 = apices[f.ring[0]]
        for i in range(1, len(f.ring) - 1):
            volume += dot(q0, cross(apices[f.ring[i]], apices[f.ring[i + 1]]))
    volume /= 6
    if volume <= 0:
        raise NonConvexCellError("cell volume is not positive")
    return Polyhedron(apices, tuple(facets), ridges, volume)


def _recession_ray_exists(normals: list[Vec]) -> bool:
    """Whether some direction d != 0 has n . d <= 0 for every normal."""
    base = [n for n in normals if n != ZERO3]
    if not base:
        return True
    # rank below 3: a direction orthogonal to every normal exists
    rank_dirs: list[Vec] = []
    for n in base:
        if not rank_dirs:
            rank_dirs.append(n)
        elif len(rank_dirs) == 1:
            if cross(rank_dirs[0], n) != ZERO3:
                rank_dirs.append(n)
        elif det3((rank_dirs[0], rank_dirs[1], n)) != 0:
            rank_dirs.append(n)
    if len(rank_dirs) < 3:
        return True
    candidates: list[Vec] = []
    for a, b in combinations(base, 2):
        d = cross(a, b)
        if d != ZERO3:
            candidates.extend((d, neg(d)))
    candidates.extend(neg(n) for n in base)
    return any(all(dot(n, d) <= 0 for n in base) for d in candidates)


def hull_from_halfspaces(planes: list[tuple[Vec, Fraction]]) -> Polyhedron:
    """Bounded intersection of halfspaces normal . x <= offset."""
    if len(planes) < 4:
        raise NonConvexCellError("fewer than four halfspaces cannot bound a cell")
    if _recession_ray_exists([n for n, _ in planes]):
        raise NonConvexCellError("halfspace intersection is unbounded")
    pts: set[Vec] = set()
    for (n1, c1), (n2, c2), (n3, c3) in combinations(planes, 3):
        m = (n1, n2, n3)
        d = det3(m)
        if d == 0:
            continue
        x = solve3(m, (c1, c2, c3))
        if all(dot(n, x) <= c for n, c in planes):
            pts.add(x)
    if len(pts) < 4:
        raise NonConvexCellError("halfspace intersection is empty or flat")
    return convex_hull(sorted(pts))


def solve3(m: Mat, rhs: Vec) -> Vec:
    """Solve m x = rhs for a nonsingular 3x3 system by Cramer's rule."""
    d = det3(m)
    x0 = det3(((rhs[0], m[0][1], m[0][2]),
               (rhs[1], m[1][1], m[1][2]),
               (rhs[2], m[2][1], m[2][2])))
    x1 = det3(((m[0][0], rhs[0], m[0][2]),
               (m[1][0], rhs[1], m[1][2]),
               (m[2][0], rhs[2], m[2][2])))
    x2 = det3(((m[0][0], m[0][1], rhs[0]),
               (m[1][0], m[1][1], rhs[1]),
               (m[2][0], m[2][1], rhs[2])))
    return (x0 / d, x1 / d, x2 / d)
