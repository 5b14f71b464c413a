"""Exact line arrangement on the effective-cone cross-section.

All geometry runs in homogeneous integer coordinates: a slice point (x, y) is
stored as (X, Y, W) with x = X/W, y = Y/W, W > 0 and gcd 1, and a line
{ax + by + c = 0} as the integer triple (a, b, c).  Incidence predicates are
then integer determinants, so no face is ever lost or invented by rounding.

The line set is the union of the zero-set line of every catalog curve and the
line through every pair of distinct named divisor rays; the cells of the
arrangement, clipped to the effective-cone triangle, refine the chamber
decomposition, and equal-label cells are merged back by
:func:`merge_chambers`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .catalog import Catalog, CatalogError
from .linalg import NSVector, SlicePoint, ns, slice_point

__all__ = [
    "Pt",
    "Line",
    "Face",
    "Chamber",
    "Arrangement",
    "ArrangementError",
    "build_arrangement",
    "face_sign_profile",
    "merge_chambers",
    "homogenize",
    "point_to_slice",
    "ray_of_point",
]

Pt = tuple[int, int, int]
LineKey = tuple[int, int, int]


class ArrangementError(CatalogError):
    """Degenerate input or a violated construction invariant."""


# -- homogeneous primitives -------------------------------------------------


def homogenize(p: SlicePoint) -> Pt:
    w = p.x.denominator * p.y.denominator // gcd(p.x.denominator, p.y.denominator)
    x = int(p.x * w)
    y = int(p.y * w)
    g = gcd(gcd(abs(x), abs(y)), w)
    return (x // g, y // g, w // g)


def point_to_slice(p: Pt) -> SlicePoint:
    return SlicePoint(Fraction(p[0], p[2]), Fraction(p[1], p[2]))


def ray_of_point(p: Pt) -> NSVector:
    """Integer representative of the ray through a slice point (phi = W)."""
    x, y, w = p
    return ns(x, y, w - 2 * x - 2 * y)


def _norm_line(a: int, b: int, c: int) -> Optional[LineKey]:
    if a == 0 and b == 0:
        return None  # empty or whole plane; no slice line
    g = gcd(gcd(abs(a), abs(b)), abs(c))
    a, b, c = a // g, b // g, c // g
    lead = a if a != 0 else b
    if lead < 0:
        a, b, c = -a, -b, -c
    return (a, b, c)


def line_eval(line: Sequence[int], p: Pt) -> int:
    return line[0] * p[0] + line[1] * p[1] + line[2] * p[2]


def line_through(p: Pt, q: Pt) -> Optional[LineKey]:
    a = p[1] * q[2] - p[2] * q[1]
    b = p[2] * q[0] - p[0] * q[2]
    c = p[0] * q[1] - p[1] * q[0]
    return _norm_line(a, b, c)


def _intersect(l1: Sequence[int], l2: Sequence[int]) -> Optional[Pt]:
    x = l1[1] * l2[2] - l1[2] * l2[1]
    y = l1[2] * l2[0] - l1[0] * l2[2]
    w = l1[0] * l2[1] - l1[1] * l2[0]
    if w == 0:
        return None
    if w < 0:
        x, y, w = -x, -y, -w
    g = gcd(gcd(abs(x), abs(y)), w)
    return (x // g, y // g, w // g)


def orient(p: Pt, q: Pt, r: Pt) -> int:
    d = (
        p[0] * (q[1] * r[2] - q[2] * r[1])
        - p[1] * (q[0] * r[2] - q[2] * r[0])
        + p[2] * (q[0] * r[1] - q[1] * r[0])
    )
    return (d > 0) - (d < 0)


def _midpoint(p: Pt, q: Pt) -> Pt:
    x = p[0] * q[2] + q[0] * p[2]
    y = p[1] * q[2] + q[1] * p[2]
    w = 2 * p[2] * q[2]
    g = gcd(gcd(abs(x), abs(y)), w)
    return (x // g, y // g, w // g)


def _centroid(points: Sequence[Pt]) -> Pt:
    lcm = 1
    for p in points:
        lcm = lcm * p[2] // gcd(lcm, p[2])
    x = sum(p[0] * (lcm // p[2]) for p in points)
    y = sum(p[1] * (lcm // p[2]) for p in points)
    w = len(points) * lcm
    g = gcd(gcd(abs(x), abs(y)), w)
    return (x // g, y // g, w // g)


def polygon_area(points: Sequence[Pt]) -> Fraction:
    total = Fraction(0)
    n = len(points)
    for i in range(n):
        px, py, pw = points[i]
        qx, qy, qw = points[(i + 1) % n]
        total += Fraction(px * qy - qx * py, pw * qw)
    return total / 2


# -- convex hulls of generator slice points (for cone membership) ------------


class Hull:
    """Closed convex hull of up to three slice points, with exact membership.

    For generators with positive slice functional, a ray lies in their cone
    iff its slice point lies in this hull, so the upper-bound rule reduces to
    planar containment tests.
    """

    def __init__(self, points: Iterable[Pt]):
        pts = list(dict.fromkeys(points))
        self.kind: str
        if len(pts) == 1:
            self.kind = "point"
            self.data = pts
            return
        if len(pts) == 3 and orient(*pts) != 0:
            if orient(*pts) < 0:
                pts = [pts[0], pts[2], pts[1]]
            self.kind = "triangle"
            self.data = pts
            return
        # Collinear: keep the two extreme points along the spanning direction.
        axis = 0 if any(
            p[0] * q[2] != q[0] * p[2] for p in pts for q in pts
        ) else 1
        key = lambda p: Fraction(p[axis], p[2])
        pts.sort(key=key)
        self.kind = "segment"
        self.axis = axis
        self.data = [pts[0], pts[-1]]

    def contains(self, m: Pt) -> bool:
        if self.kind == "point":
            return m == self.data[0]
        if self.kind == "triangle":
            a, b, c = self.data
            return (
                orient(a, b, m) >= 0
                and orient(b, c, m) >= 0
                and orient(c, a, m) >= 0
            )
        p, q = self.data
        if orient(p, q, m) != 0:
            return False
        j = self.axis
        lo = m[j] * p[2] >= p[j] * m[2]
        hi = m[j] * q[2] <= q[j] * m[2]
        return lo and hi


# -- arrangement ------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    """A cell of the clipped arrangement: a 2-face, an edge, or a vertex."""

    index: int
    dimension: int
    vertices: tuple[Pt, ...]
    sample: Pt
    lines: tuple[LineKey, ...]


@dataclass(frozen=True)
class Chamber:
    """A maximal connected union of equal-label 2-faces."""

    index: int
    face_indices: tuple[int, ...]
    label: frozenset[str]
    resolution: str = "resolved"  # "resolved" | "gap"


@dataclass
class Arrangement:
    catalog: Catalog
    rays: dict[str, Pt]
    lines: dict[LineKey, tuple[str, ...]]
    triangle: tuple[Pt, Pt, Pt]
    faces2: list[Face]
    edges: list[Face]
    vertices: list[Face]
    edge_faces: dict[tuple[Pt, Pt], tuple[int, ...]]
    adjacency: dict[int, set[int]]
    curve_eval: dict[str, tuple[int, int, int]]

    @property
    def faces(self) -> list[Face]:
        return self.faces2 + self.edges + self.vertices

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces2)

    def ray_point(self, name: str) -> Pt:
        return self.rays[name]

    def named_ray_at(self, p: Pt) -> Optional[str]:
        for name, q in self.rays.items():
            if p == q:
                return name
        return None

    def face_of_polygon_containing(self, p: Pt) -> Optional[Face]:
        for face in self.faces2:
            verts = face.vertices
            n = len(verts)
            if all(orient(verts[i], verts[(i + 1) % n], p) >= 0 for i in range(n)):
                return face
        return None

    def locate(self, p: Pt) -> Optional[Face]:
        """The unique cell (vertex, edge or 2-face) containing a point."""
        for v in self.vertices:
            if v.sample == p:
                return v
        for e in self.edges:
            a, b = e.vertices
            if orient(a, b, p) == 0:
                axis = 0 if a[0] * b[2] != b[0] * a[2] else 1
                lo, hi = sorted((Fraction(a[axis], a[2]), Fraction(b[axis], b[2])))
                val = Fraction(p[axis], p[2])
                if lo < val < hi:
                    return e
        # Not on any vertex or edge: if inside the closed triangle at all, the
        # point is strictly interior to exactly one 2-face.
        return self.face_of_polygon_containing(p)


def _curve_eval_triple(row) -> Optional[tuple[int, int, int]]:
    r1, r2, r3 = (Fraction(r) for r in row)
    lcm = 1
    for r in (r1, r2, r3):
        lcm = lcm * r.denominator // gcd(lcm, r.denominator)
    a = int((r1 - 2 * r3) * lcm)
    b = int((r2 - 2 * r3) * lcm)
    c = int(r3 * lcm)
    if a == 0 and b == 0:
        return None  # pairing proportional to the slice functional; no zero line
    return (a, b, c)


def _split(poly: list[Pt], line: LineKey) -> tuple[Optional[list[Pt]], Optional[list[Pt]]]:
    evs = [line_eval(line, p) for p in poly]
    if all(e >= 0 for e in evs):
        return poly, None
    if all(e <= 0 for e in evs):
        return None, poly
    pos: list[Pt] = []
    neg: list[Pt] = []
    n = len(poly)
    for i in range(n):
        p, ep = poly[i], evs[i]
        q, eq = poly[(i + 1) % n], evs[(i + 1) % n]
        if ep >= 0:
            pos.append(p)
        if ep <= 0:
            neg.append(p)
        if (ep > 0 > eq) or (ep < 0 < eq):
            cross = _intersect(line, line_through(p, q))
            pos.append(cross)
            neg.append(cross)
    return pos, neg


def build_arrangement(catalog: Catalog) -> Arrangement:
    """Enumerate all cells of the clipped arrangement with exact coordinates."""
    rays: dict[str, Pt] = {}
    for div in catalog.divisors:
        pt = homogenize(slice_point(div.cls))
        for other, q in rays.items():
            if q == pt:
                raise ArrangementError(
                    f"degenerate catalog: rays {other} and {div.name} coincide"
                )
        rays[div.name] = pt

    curve_eval: dict[str, tuple[int, int, int]] = {}
    lines: dict[LineKey, list[str]] = {}
    for curve in catalog.curves:
        triple = _curve_eval_triple(curve.row)
        if triple is None:
            continue
        curve_eval[curve.name] = triple
        key = _norm_line(*triple)
        lines.setdefault(key, []).append(f"curve:{curve.name}")
    names = list(rays)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            key = line_through(rays[a], rays[b])
            lines.setdefault(key, []).append(f"rays:{a}~{b}")

    tri = [rays["Ddeg"], rays["Dunb"], rays["Delta"]]
    if orient(*tri) == 0:
        raise ArrangementError("effective-cone generators are collinear on the slice")
    if orient(*tri) < 0:
        tri = [tri[0], tri[2], tri[1]]

    polys: list[list[Pt]] = [tri]
    for key in sorted(lines):
        nxt: list[list[Pt]] = []
        for poly in polys:
            pos, neg = _split(poly, key)
            if pos is not None:
                nxt.append(pos)
            if neg is not None:
                nxt.append(neg)
        polys = nxt

    polys.sort(key=lambda poly: sorted(poly))

    faces2: list[Face] = []
    edge_map: dict[tuple[Pt, Pt], list[int]] = {}
    for idx, poly in enumerate(polys):
        supporting = []
        n = len(poly)
        for i in range(n):
            a, b = poly[i], poly[(i + 1) % n]
            keyline = line_through(a, b)
            supporting.append(keyline)
            ekey = (a, b) if a <= b else (b, a)
            edge_map.setdefault(ekey, []).append(idx)
        faces2.append(
            Face(
                index=idx,
                dimension=2,
                vertices=tuple(poly),
                sample=_centroid(poly),
                lines=tuple(dict.fromkeys(supporting)),
            )
        )

    edges: list[Face] = []
    edge_faces: dict[tuple[Pt, Pt], tuple[int, ...]] = {}
    vertex_points: dict[Pt, set[LineKey]] = {}
    for eidx, (ekey, incident) in enumerate(sorted(edge_map.items())):
        a, b = ekey
        supp = line_through(a, b)
        edges.append(
            Face(
                index=len(polys) + eidx,
                dimension=1,
                vertices=(a, b),
                sample=_midpoint(a, b),
                lines=(supp,),
            )
        )
        edge_faces[ekey] = tuple(sorted(incident))
        for p in ekey:
            vertex_points.setdefault(p, set()).add(supp)

    vertices: list[Face] = []
    base = len(polys) + len(edges)
    for vidx, (p, supp) in enumerate(sorted(vertex_points.items())):
        vertices.append(
            Face(
                index=base + vidx,
                dimension=0,
                vertices=(p,),
                sample=p,
                lines=tuple(sorted(supp)),
            )
        )

    adjacency: dict[int, set[int]] = {i: set() for i in range(len(polys))}
    for incident in edge_faces.values():
        if len(incident) == 2:
            i, j = incident
            adjacency[i].add(j)
            adjacency[j].add(i)

    return Arrangement(
        catalog=catalog,
        rays=rays,
        lines={k: tuple(v) for k, v in sorted(lines.items())},
        triangle=tuple(tri),
        faces2=faces2,
        edges=edges,
        vertices=vertices,
        edge_faces=edge_faces,
        adjacency=adjacency,
        curve_eval=curve_eval,
    )


def face_sign_profile(face: Face, arrangement: Arrangement) -> dict[str, int]:
    """Sign of every catalog curve pairing at the face's sample point.

    A 2-face sample evaluating to zero means its zero line was missing from
    the arrangement, which the construction rules out.
    """
    profile: dict[str, int] = {}
    for curve in arrangement.catalog.curves:
        triple = arrangement.curve_eval.get(curve.name)
        if triple is None:
            val = 1  # pairing is a positive multiple of the slice functional
        else:
            val = line_eval(triple, face.sample)
        sign = (val > 0) - (val < 0)
        if sign == 0 and face.dimension == 2:
            raise ArrangementError(
                f"arrangement incomplete: curve {curve.name} vanishes on a 2-face sample"
            )
        profile[curve.name] = sign
    return profile


def merge_chambers(
    arrangement: Arrangement,
    labels: Sequence[tuple[frozenset[str], frozenset[str]]],
) -> list[Chamber]:
    """Connected components of equal-label 2-faces under shared-edge adjacency.

    ``labels[i]`` is the (lower, upper) bound pair of 2-face i; faces merge
    when the whole pair agrees, so unresolved faces never fuse with resolved
    neighbors.
    """
    n = len(arrangement.faces2)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    for i in range(n):
        for j in arrangement.adjacency[i]:
            if labels[i] == labels[j]:
                union(i, j)

    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)

    chambers = []
    for ci, (_, members) in enumerate(sorted(groups.items())):
        lower, upper = labels[members[0]]
        chambers.append(
            Chamber(
                index=ci,
                face_indices=tuple(sorted(members)),
                label=lower,
                resolution="resolved" if lower == upper else "gap",
            )
        )

    # Maximality: adjacent chambers must carry different labels.
    face_chamber = {}
    for ch in chambers:
        for f in ch.face_indices:
            face_chamber[f] = ch.index
    for i in range(n):
        for j in arrangement.adjacency[i]:
            if face_chamber[i] != face_chamber[j] and labels[i] == labels[j]:
                raise ArrangementError("merge failed to join equal-label neighbors")
    return chambers
