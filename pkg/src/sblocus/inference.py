"""Stable-base-locus inference: moving-curve lower bounds, combination upper
bounds, face resolution, and verification against the expected chamber tables.

The two rules form a sound sandwich.  A catalog curve B covering a locus X
with B . D < 0 forces X into the stable base locus of D (lower bound).  If a
face lies in the closed cone of fact-carrying divisors G, the stable base
locus on the face is contained in the union of their recorded loci; a locus is
admitted by the upper bound only when every such G dominates it through the
containment poset.  A face is resolved when the two bounds agree as
antichains.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

from .arrangement import (
    Arrangement,
    Chamber,
    Face,
    Hull,
    Pt,
    build_arrangement,
    homogenize,
    line_eval,
    merge_chambers,
    orient,
)
from .catalog import Catalog, ExpectedChamber, Wall, load
from .linalg import NSVector, pair, slice_point

__all__ = [
    "FaceLabel",
    "SoundnessError",
    "lower_bound",
    "UpperBoundEngine",
    "resolve_face",
    "label_point",
    "Decomposition",
    "decompose",
    "default_decomposition",
    "VerificationReport",
    "verify_theorem",
]


class SoundnessError(Exception):
    """Lower bound not contained in upper bound: the catalog data is wrong."""


@dataclass(frozen=True)
class FaceLabel:
    lower: frozenset[str]
    upper: frozenset[str]
    status: str  # "resolved" | "gap"

    @property
    def resolved(self) -> bool:
        return self.status == "resolved"


def lower_bound(D: NSVector, catalog: Catalog) -> frozenset[str]:
    """Antichain of loci covered by curves pairing negatively with D."""
    neg = set()
    for c in catalog.curves:
        if c.covers is not None and pair(c.row, D) < 0:
            neg.add(c.covers)
    return catalog.antichain(neg)


class UpperBoundEngine:
    """Precomputed generator-subset hulls for the upper-bound rule.

    Subsets of size <= 3 drawn from fact-carrying divisors are enumerated once;
    a subset G is valid for a face when every face vertex lies in the closed
    cone of G, tested as planar hull membership on the slice.
    """

    def __init__(self, catalog: Catalog, arrangement: Arrangement):
        self.catalog = catalog
        facts = catalog.fact_divisors()
        self.all_loci = [l.name for l in catalog.loci]
        self.subsets: list[tuple[frozenset[str], Hull, frozenset[str]]] = []
        pts = {d.name: arrangement.rays[d.name] for d in facts}
        for size in (1, 2, 3):
            for combo in combinations(facts, size):
                names = frozenset(d.name for d in combo)
                hull = Hull([pts[d.name] for d in combo])
                candidate = frozenset().union(*(d.fact_loci for d in combo))
                self.subsets.append((names, hull, candidate))
        self._cache: dict[frozenset, tuple[frozenset[str], bool]] = {}

    def valid_subsets(self, points: Sequence[Pt]) -> list[tuple[frozenset[str], frozenset[str]]]:
        sample = points[0]
        found: list[tuple[frozenset[str], frozenset[str]]] = []
        for names, hull, candidate in self.subsets:
            if any(names > prev for prev, _ in found):
                continue  # a valid subset already implies this superset
            if not hull.contains(sample):
                continue
            if all(hull.contains(p) for p in points[1:]):
                found.append((names, candidate))
        return found

    def bound(self, points: Sequence[Pt]) -> tuple[frozenset[str], bool]:
        """Upper bound over a cell given by its vertices.

        Returns (antichain, had_valid_subset); with no valid subset the bound
        degrades to the top element (all maximal loci).
        """
        valid = self.valid_subsets(points)
        if not valid:
            return self.catalog.antichain(self.all_loci), False
        key = frozenset(candidate for _, candidate in valid)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        admitted = [
            locus
            for locus in self.all_loci
            if all(self.catalog.dominated(locus, candidate) for candidate in key)
        ]
        result = (self.catalog.antichain(admitted), True)
        self._cache[key] = result
        return result


def _lower_bound_at_point(p: Pt, catalog: Catalog, arrangement: Arrangement) -> frozenset[str]:
    neg = set()
    for c in catalog.curves:
        if c.covers is None:
            continue
        triple = arrangement.curve_eval.get(c.name)
        if triple is None:
            continue  # pairing is a positive multiple of the slice functional
        if line_eval(triple, p) < 0:
            neg.add(c.covers)
    return catalog.antichain(neg)


def _make_label(lower: frozenset[str], upper: frozenset[str], catalog: Catalog, where: str) -> FaceLabel:
    for locus in lower:
        if not catalog.dominated(locus, upper):
            raise SoundnessError(
                f"soundness violation at {where}: lower bound member {locus} "
                f"not contained in upper bound {catalog.format_locus_set(upper)}"
            )
    status = "resolved" if lower == upper else "gap"
    return FaceLabel(lower, upper, status)


def resolve_face(face: Face, catalog: Catalog, arrangement: Arrangement,
                 engine: UpperBoundEngine) -> FaceLabel:
    """Sandwich a cell: lower bound at its sample, upper bound over its vertices."""
    lower = _lower_bound_at_point(face.sample, catalog, arrangement)
    upper, _ = engine.bound(list(face.vertices) or [face.sample])
    return _make_label(lower, upper, catalog, f"face {face.index}")


def label_point(p: Pt, catalog: Catalog, arrangement: Arrangement,
                engine: UpperBoundEngine) -> FaceLabel:
    lower = _lower_bound_at_point(p, catalog, arrangement)
    upper, _ = engine.bound([p])
    return _make_label(lower, upper, catalog, f"point {p}")


# ---------------------------------------------------------------------------
# Whole-space decomposition and verification
# ---------------------------------------------------------------------------


@dataclass
class Decomposition:
    catalog: Catalog
    arrangement: Arrangement
    engine: UpperBoundEngine
    labels: list[FaceLabel]
    chambers: list[Chamber]
    face_chamber: dict[int, int]

    def chamber_of_face(self, face_index: int) -> Chamber:
        return self.chambers[self.face_chamber[face_index]]


def decompose(catalog: Catalog) -> Decomposition:
    """Build the arrangement, resolve every 2-face, and merge chambers."""
    arrangement = build_arrangement(catalog)
    engine = UpperBoundEngine(catalog, arrangement)
    labels = [resolve_face(f, catalog, arrangement, engine) for f in arrangement.faces2]
    chambers = merge_chambers(arrangement, [(lab.lower, lab.upper) for lab in labels])
    face_chamber = {}
    for ch in chambers:
        for fi in ch.face_indices:
            face_chamber[fi] = ch.index
    return Decomposition(catalog, arrangement, engine, labels, chambers, face_chamber)


@dataclass
class ChamberMatch:
    chamber_index: int
    item_id: Optional[int]
    locus: frozenset[str]
    rays: tuple[str, ...]
    match: bool
    note: str = ""


@dataclass
class VerificationReport:
    """Outcome of checking a decomposition against its expected table."""

    space: str
    chamber_count: int
    expected_count: int
    per_chamber: list[ChamberMatch]
    wall_results: list[tuple[str, bool]]
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.chamber_count == self.expected_count
            and all(m.match for m in self.per_chamber)
            and all(ok for _, ok in self.wall_results)
            and not self.failures
        )

    def to_text(self, catalog: Catalog) -> str:
        lines = [
            f"space {self.space}: {self.chamber_count} chambers "
            f"({self.expected_count} expected)"
        ]
        for m in self.per_chamber:
            item = f"item {m.item_id}" if m.item_id is not None else "unmatched"
            flag = "ok" if m.match else "MISMATCH"
            rays = " ".join(m.rays)
            lines.append(
                f"  {item:<10} | {rays:<18} | {catalog.format_locus_set(m.locus)} | {flag}"
            )
        for desc, ok in self.wall_results:
            lines.append(f"  wall {desc}: {'ok' if ok else 'MISMATCH'}")
        for f in self.failures:
            lines.append(f"  failure: {f}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)

    def to_json(self, catalog: Catalog) -> str:
        payload = {
            "space": self.space,
            "chamber_count": self.chamber_count,
            "expected_count": self.expected_count,
            "passed": self.passed,
            "chambers": [
                {
                    "item": m.item_id,
                    "rays": list(m.rays),
                    "locus": catalog.locus_sorted(m.locus),
                    "match": m.match,
                    "note": m.note,
                }
                for m in self.per_chamber
            ],
            "walls": [{"wall": desc, "match": ok} for desc, ok in self.wall_results],
            "failures": list(self.failures),
        }
        return json.dumps(payload, indent=2)


def _chamber_contains_point(dec: Decomposition, chamber: Chamber, p: Pt) -> bool:
    for fi in chamber.face_indices:
        verts = dec.arrangement.faces2[fi].vertices
        n = len(verts)
        if all(orient(verts[i], verts[(i + 1) % n], p) >= 0 for i in range(n)):
            return True
    return False


def _wall_descriptor(item: ExpectedChamber, wall: Wall) -> str:
    return f"c({wall.ray_a} {wall.ray_b}){{item {item.item_id}}}"


def verify_theorem(catalog_or_regime, override_path: Optional[str] = None) -> VerificationReport:
    """Verify a space's decomposition against its expected chamber table.

    Builds the arrangement, resolves every face, merges chambers, matches each
    merged chamber to an expected item by locus-set equality plus containment
    of the item's named rays, and evaluates the recorded half-open wall
    assignments at wall midpoints.
    """
    if isinstance(catalog_or_regime, Catalog):
        catalog = catalog_or_regime
    else:
        catalog = load(catalog_or_regime, override_path)
    dec = decompose(catalog)
    return verify_decomposition(dec)


def verify_decomposition(dec: Decomposition) -> VerificationReport:
    catalog = dec.catalog
    failures: list[str] = []

    for face, lab in zip(dec.arrangement.faces2, dec.labels):
        if not lab.resolved:
            failures.append(
                f"face {face.index} not resolved: lower {catalog.format_locus_set(lab.lower)}"
                f" vs upper {catalog.format_locus_set(lab.upper)}"
            )

    by_locus: dict[frozenset[str], list[ExpectedChamber]] = {}
    for item in catalog.expected:
        by_locus.setdefault(item.locus, []).append(item)

    matches: list[ChamberMatch] = []
    used_items: set[int] = set()
    for ch in dec.chambers:
        candidates = by_locus.get(ch.label, [])
        matched: Optional[ExpectedChamber] = None
        note = ""
        for item in candidates:
            if item.item_id in used_items:
                continue
            rays_ok = all(
                _chamber_contains_point(dec, ch, dec.arrangement.rays[r])
                for r in item.rays
                if r in dec.arrangement.rays
            )
            if rays_ok:
                matched = item
                break
        if matched is None:
            note = "no expected item with this locus set and rays in closure"
        else:
            used_items.add(matched.item_id)
        rays = matched.rays if matched else ()
        matches.append(
            ChamberMatch(
                chamber_index=ch.index,
                item_id=matched.item_id if matched else None,
                locus=ch.label,
                rays=rays,
                match=matched is not None,
                note=note,
            )
        )
    for item in catalog.expected:
        if item.item_id not in used_items:
            failures.append(f"expected item {item.item_id} matched no chamber")

    matches.sort(key=lambda m: (m.item_id is None, m.item_id or 0, m.chamber_index))

    wall_results: list[tuple[str, bool]] = []
    for item in catalog.expected:
        for wall in item.walls:
            a = dec.arrangement.rays[wall.ray_a]
            b = dec.arrangement.rays[wall.ray_b]
            mid = _mid(a, b)
            lab = label_point(mid, catalog, dec.arrangement, dec.engine)
            ok = lab.resolved and lab.lower == item.locus
            wall_results.append((_wall_descriptor(item, wall), ok))

    return VerificationReport(
        space=catalog.space.regime,
        chamber_count=len(dec.chambers),
        expected_count=len(catalog.expected),
        per_chamber=matches,
        wall_results=wall_results,
        failures=failures,
    )


def _mid(a: Pt, b: Pt) -> Pt:
    from .arrangement import _midpoint

    return _midpoint(a, b)


@lru_cache(maxsize=None)
def default_decomposition(regime: str) -> Decomposition:
    """Cached decomposition of a built-in catalog (catalogs are immutable)."""
    return decompose(load(regime))


def classify_class(D: NSVector, dec: Decomposition) -> dict:
    """Locate a divisor class in the decomposition.

    Returns a dict with kind in {'not_effective', 'vertex', 'edge', 'chamber'}
    plus location details and the resolved stable base locus.
    """
    from .linalg import nonneg_combination

    catalog = dec.catalog
    if D.is_zero():
        raise ValueError("zero ray")
    if nonneg_combination(D, catalog.effective_generators()) is None:
        return {"kind": "not_effective"}
    p = homogenize(slice_point(D))
    cell = dec.arrangement.locate(p)
    if cell is None:  # numerically effective ray must slice into the triangle
        return {"kind": "not_effective"}
    lab = (
        dec.labels[cell.index]
        if cell.dimension == 2
        else label_point(p, catalog, dec.arrangement, dec.engine)
    )
    result = {"label": lab, "cell": cell}
    if cell.dimension == 2:
        chamber = dec.chamber_of_face(cell.index)
        result["kind"] = "chamber"
        result["chamber"] = chamber
    elif cell.dimension == 1:
        incident = dec.arrangement.edge_faces.get(tuple(sorted(cell.vertices)), ())
        result["kind"] = "edge"
        result["chambers"] = tuple(
            sorted({dec.face_chamber[fi] for fi in incident})
        )
    else:
        result["kind"] = "vertex"
        result["ray"] = dec.arrangement.named_ray_at(p)
    return result
