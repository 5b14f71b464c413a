"""Catalogs of divisor classes, test curves, loci and expected chamber tables.

A catalog bundles everything the inference engine needs for one family of
moduli spaces: exact divisor classes with their base-locus facts, moving-curve
intersection rows with the loci they cover, a containment poset on the named
loci, the recorded intersection-number table used for validation, and the
expected chamber table the verifier checks against.

Catalogs are immutable after load.  Built-in data lives in
:mod:`sblocus.spaces`; a human-editable text format supports overrides and
bit-exact round-trips.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .linalg import NSVector, pair, phi

__all__ = [
    "CatalogError",
    "CatalogParseError",
    "CatalogValidationError",
    "DualityUnavailableError",
    "SpaceId",
    "DivisorEntry",
    "CurveEntry",
    "LocusEntry",
    "ContainmentFact",
    "PairingFact",
    "Wall",
    "ExpectedChamber",
    "Catalog",
    "REGIMES",
    "load",
    "space_for_regime",
    "dual_partition",
    "transpose_partition",
    "dual_locus_name",
    "dual_divisor_name",
    "dual_curve_name",
    "dual_involution",
    "canonical_class",
    "catalog_to_text",
    "catalog_from_text",
]


class CatalogError(Exception):
    """Base class for catalog failures."""


class CatalogParseError(CatalogError):
    """Malformed catalog file; message carries the line number."""


class CatalogValidationError(CatalogError):
    """Catalog data contradicts its own recorded facts."""

    def __init__(self, problems: Sequence[str]):
        self.problems = list(problems)
        super().__init__("catalog validation failed:\n" + "\n".join(self.problems))


class DualityUnavailableError(CatalogError):
    """The asymmetric degree-3 lines regime has no coordinate-swap duality."""


REGIMES = ("deg2", "deg3_general", "deg3_lines")

_DEFAULT_KN = {"deg2": (2, 4), "deg3_general": (3, 6), "deg3_lines": (2, 5)}


@dataclass(frozen=True)
class SpaceId:
    """Which moduli space family: G(k,n) target, map degree d, and regime."""

    k: int
    n: int
    d: int
    regime: str

    def __post_init__(self):
        if self.regime not in REGIMES:
            raise CatalogError(f"unknown regime {self.regime!r}")
        ok = {
            "deg2": self.d == 2 and 2 <= self.k and self.k + 2 <= self.n,
            "deg3_general": self.d == 3 and 3 <= self.k and self.k + 3 <= self.n,
            "deg3_lines": self.d == 3 and self.k == 2 and self.n >= 5,
        }[self.regime]
        if not ok:
            raise CatalogError(
                f"(k, n, d) = ({self.k}, {self.n}, {self.d}) is outside regime {self.regime}"
            )


def space_for_regime(regime: str, k: Optional[int] = None, n: Optional[int] = None) -> SpaceId:
    """SpaceId for a regime, defaulting to the smallest admissible (k, n)."""
    if regime not in REGIMES:
        raise CatalogError(f"unknown regime {regime!r}")
    dk, dn = _DEFAULT_KN[regime]
    d = 2 if regime == "deg2" else 3
    return SpaceId(k if k is not None else dk, n if n is not None else dn, d, regime)


FACT_KINDS = ("base_point_free", "exact_sbl", "sbl_upper_bound", "none")


@dataclass(frozen=True)
class DivisorEntry:
    """A named divisor ray with its recorded base-locus fact.

    fact_kind 'exact_sbl' records the full stable base locus, 'sbl_upper_bound'
    only a containing set (used by the upper-bound rule, never the lower), and
    'none' marks rays that merely bound chambers.
    """

    name: str
    cls: NSVector
    fact_kind: str
    fact_loci: frozenset[str] = frozenset()
    note: str = ""


@dataclass(frozen=True)
class CurveEntry:
    """A moving-curve class: intersection row, covered locus, exactness.

    sign_only rows are normalized to entries in {-1, 0, 1}; only the sign of
    their pairing is meaningful and they are excluded from class solving.
    """

    name: str
    row: tuple[Fraction, Fraction, Fraction]
    covers: Optional[str] = None
    exactness: str = "exact"


@dataclass(frozen=True)
class LocusEntry:
    name: str
    kind: str  # schubert_maps | reducible | boundary


@dataclass(frozen=True)
class ContainmentFact:
    sub: str
    sup: str


@dataclass(frozen=True)
class PairingFact:
    """A recorded intersection number curve . divisor = value."""

    curve: str
    divisor: str
    value: Fraction


@dataclass(frozen=True)
class Wall:
    """A half-open wall c(A B): the segment between rays A and B.

    include_a / include_b record which endpoint rays belong to the chamber
    owning this wall (the barred endpoints of the c(...) notation).
    """

    ray_a: str
    ray_b: str
    include_a: bool = False
    include_b: bool = False

    def token(self) -> str:
        flags = ("c" if self.include_a else "o") + ("c" if self.include_b else "o")
        return f"{self.ray_a}~{self.ray_b}:{flags}"


@dataclass(frozen=True)
class ExpectedChamber:
    """One enumerated item of a decomposition theorem."""

    item_id: int
    rays: tuple[str, ...]
    locus: frozenset[str]
    walls: tuple[Wall, ...] = ()


@dataclass(frozen=True)
class Catalog:
    space: SpaceId
    divisors: tuple[DivisorEntry, ...]
    curves: tuple[CurveEntry, ...]
    loci: tuple[LocusEntry, ...]
    containments: tuple[ContainmentFact, ...]
    pairings: tuple[PairingFact, ...]
    expected: tuple[ExpectedChamber, ...]
    _leq: dict = field(init=False, repr=False, compare=False)
    _div_index: dict = field(init=False, repr=False, compare=False)
    _curve_index: dict = field(init=False, repr=False, compare=False)
    _locus_order: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = [d.name for d in self.divisors]
        if len(set(names)) != len(names):
            raise CatalogError("duplicate divisor names")
        cnames = [c.name for c in self.curves]
        if len(set(cnames)) != len(cnames):
            raise CatalogError("duplicate curve names")
        object.__setattr__(self, "_div_index", {d.name: d for d in self.divisors})
        object.__setattr__(self, "_curve_index", {c.name: c for c in self.curves})
        object.__setattr__(
            self, "_locus_order", {l.name: i for i, l in enumerate(self.loci)}
        )
        object.__setattr__(self, "_leq", self._transitive_closure())

    # -- containment poset -------------------------------------------------

    def _transitive_closure(self) -> dict[str, set[str]]:
        up: dict[str, set[str]] = {l.name: {l.name} for l in self.loci}
        for fact in self.containments:
            if fact.sub not in up or fact.sup not in up:
                raise CatalogError(
                    f"containment {fact.sub} < {fact.sup} uses an undeclared locus"
                )
            up[fact.sub].add(fact.sup)
        changed = True
        while changed:
            changed = False
            for a in up:
                grown = set().union(*(up[b] for b in up[a]))
                if not grown <= up[a]:
                    up[a] |= grown
                    changed = True
        for a in up:
            for b in up[a]:
                if a != b and a in up[b]:
                    raise CatalogError(f"containment cycle through {a} and {b}")
        return up

    def leq(self, a: str, b: str) -> bool:
        """True if locus a is contained in locus b (reflexive closure)."""
        return b in self._leq[a]

    def antichain(self, names: Iterable[str]) -> frozenset[str]:
        """Normalize a set of loci to its maximal elements."""
        pool = set(names)
        for name in pool:
            if name not in self._leq:
                raise CatalogError(f"unknown locus {name!r}")
        return frozenset(
            a for a in pool if not any(a != b and self.leq(a, b) for b in pool)
        )

    def dominated(self, a: str, pool: Iterable[str]) -> bool:
        """True if locus a is contained in some member of pool."""
        return any(self.leq(a, b) for b in pool)

    def locus_sorted(self, names: Iterable[str]) -> list[str]:
        return sorted(names, key=lambda n: self._locus_order.get(n, len(self._locus_order)))

    def format_locus_set(self, names: Iterable[str]) -> str:
        items = self.locus_sorted(names)
        return "{" + ", ".join(items) + "}" if items else "{}"

    # -- lookups ------------------------------------------------------------

    def divisor(self, name: str) -> DivisorEntry:
        try:
            return self._div_index[name]
        except KeyError:
            raise CatalogError(f"unknown divisor {name!r}") from None

    def curve(self, name: str) -> CurveEntry:
        try:
            return self._curve_index[name]
        except KeyError:
            raise CatalogError(f"unknown curve {name!r}") from None

    def has_divisor(self, name: str) -> bool:
        return name in self._div_index

    def fact_divisors(self) -> list[DivisorEntry]:
        return [d for d in self.divisors if d.fact_kind != "none"]

    def effective_generators(self) -> list[NSVector]:
        return [self.divisor(n).cls for n in ("Ddeg", "Dunb", "Delta")]

    def nef_generators(self) -> list[NSVector]:
        return [self.divisor(n).cls for n in ("H11", "H2", "T")]

    def lower_bound_curves(self) -> list[CurveEntry]:
        return [c for c in self.curves if c.covers is not None]

    # -- validation ----------------------------------------------------------

    def validate(self) -> None:
        """Check the recorded data against itself; raise with every mismatch."""
        problems: list[str] = []
        from .linalg import nonneg_combination  # local import to avoid cycle noise

        for d in self.divisors:
            if d.cls.is_zero():
                problems.append(f"divisor {d.name} is the zero class")
            elif phi(d.cls) <= 0:
                problems.append(f"divisor {d.name} has nonpositive slice functional")
            if d.fact_kind not in FACT_KINDS:
                problems.append(f"divisor {d.name} has unknown fact kind {d.fact_kind!r}")
            if d.fact_kind in ("exact_sbl", "sbl_upper_bound"):
                for l in d.fact_loci:
                    if l not in self._leq:
                        problems.append(f"divisor {d.name}: unknown locus {l!r}")
                known = [l for l in d.fact_loci if l in self._leq]
                if frozenset(known) != self.antichain(known):
                    problems.append(f"divisor {d.name}: fact loci are not an antichain")
            elif d.fact_loci:
                problems.append(f"divisor {d.name}: fact kind {d.fact_kind} takes no loci")

        for c in self.curves:
            if all(r == 0 for r in c.row):
                problems.append(f"curve {c.name} has zero row")
            if c.covers is not None and c.covers not in self._leq:
                problems.append(f"curve {c.name} covers unknown locus {c.covers!r}")
            if c.exactness not in ("exact", "sign_only"):
                problems.append(f"curve {c.name} has unknown exactness {c.exactness!r}")
            if c.exactness == "sign_only" and any(r not in (-1, 0, 1) for r in c.row):
                problems.append(f"sign_only curve {c.name} row is not normalized")

        # Intersection-number fidelity: every recorded pairing must reproduce.
        for p in self.pairings:
            try:
                curve = self.curve(p.curve)
                div = self.divisor(p.divisor)
            except CatalogError as exc:
                problems.append(str(exc))
                continue
            if curve.exactness != "exact":
                problems.append(f"pairing recorded for sign_only curve {p.curve}")
                continue
            got = pair(curve.row, div.cls)
            if got != p.value:
                problems.append(
                    f"pairing mismatch: ({p.curve}, {p.divisor}, expected {p.value}, got {got})"
                )

        # Every catalog divisor must be effective.
        try:
            eff = self.effective_generators()
            for d in self.divisors:
                if nonneg_combination(d.cls, eff) is None:
                    problems.append(f"divisor {d.name} is not in the effective cone")
        except CatalogError as exc:
            problems.append(str(exc))

        for ch in self.expected:
            for r in ch.rays:
                if r not in self._div_index:
                    problems.append(f"expected chamber {ch.item_id}: unknown ray {r!r}")
            known = [l for l in ch.locus if l in self._leq]
            unknown = [l for l in ch.locus if l not in self._leq]
            for l in unknown:
                problems.append(f"expected chamber {ch.item_id}: unknown locus {l!r}")
            if frozenset(known) != self.antichain(known):
                problems.append(f"expected chamber {ch.item_id}: locus set is not an antichain")
            for w in ch.walls:
                for r in (w.ray_a, w.ray_b):
                    if r not in self._div_index:
                        problems.append(
                            f"expected chamber {ch.item_id}: wall uses unknown ray {r!r}"
                        )

        if problems:
            raise CatalogValidationError(problems)


# ---------------------------------------------------------------------------
# Partition utilities
# ---------------------------------------------------------------------------


def dual_partition(lam: Sequence[int], k: int, n: int) -> tuple[int, ...]:
    """The dual partition with parts lam*_i = n - k - lam_{k-i+1}.

    ``lam`` may have fewer than k parts; it is padded with zeros.  Parts must
    satisfy n - k >= lam_1 >= ... >= lam_k >= 0.
    """
    parts = list(lam) + [0] * (k - len(lam))
    if len(parts) != k:
        raise ValueError("partition has more than k parts")
    if any(parts[i] < parts[i + 1] for i in range(k - 1)):
        raise ValueError("partition parts must be weakly decreasing")
    if parts and (parts[0] > n - k or parts[-1] < 0):
        raise ValueError("partition parts must lie in [0, n-k]")
    return tuple(n - k - parts[k - i - 1] for i in range(k))


def transpose_partition(lam: Sequence[int]) -> tuple[int, ...]:
    """Conjugate partition: lam^T_j = #{i : lam_i >= j}."""
    parts = [p for p in lam if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


_LOCUS_RE = re.compile(r"^(C\[\(|Q\[\(|Q\(\()([0-9, ]+)(\)\^\*\]|\)\^\*\)L)$")


def dual_locus_name(name: str) -> str:
    """Locus name under the duality swapping the two hyperplane classes.

    The swap transposes the partition inside C[...^*] / Q[...^*] / Q((...)^*)L
    names and fixes 'boundary'.
    """
    if name == "boundary":
        return name
    m = _LOCUS_RE.match(name)
    if not m:
        raise CatalogError(f"cannot dualize locus name {name!r}")
    lam = tuple(int(p) for p in m.group(2).split(","))
    dual = transpose_partition(lam)
    return m.group(1) + ",".join(str(p) for p in dual) + m.group(3)


_DUAL_DIVISORS = {
    "H11": "H2",
    "H2": "H11",
    "Ddeg": "Dunb",
    "Dunb": "Ddeg",
    "S": "S'",
    "S'": "S",
    "U": "U'",
    "U'": "U",
    "V": "V'",
    "V'": "V",
}

_DUAL_CURVES_BASE = {
    "C1": "C2",
    "C4": "C5",
    "C6": "C7",
    "B1": "B2",
    "B3": "B12",
    "B4": "B5",
    "B8": "B8'",
    "B9": "B10",
    "B11": "B11'",
    "B13": "B13'",
    "B14": "B14'",
    "B16": "B17",
    "B18": "B19",
}
_DUAL_CURVES = dict(_DUAL_CURVES_BASE)
_DUAL_CURVES.update({v: k for k, v in _DUAL_CURVES_BASE.items()})


def dual_divisor_name(name: str) -> str:
    return _DUAL_DIVISORS.get(name, name)


def dual_curve_name(name: str) -> str:
    return _DUAL_CURVES.get(name, name)


def _swap(v: NSVector) -> NSVector:
    return NSVector(v.h2, v.h11, v.delta)


def dual_involution(catalog: Catalog) -> Catalog:
    """The catalog transported along the symmetry swapping H11 and H2.

    Swaps the first two coordinates of every class and row, exchanges the
    paired divisor, curve and locus names (S <-> S', Ddeg <-> Dunb, ...), and
    fixes T, P, F, R and Delta.  Unavailable for the asymmetric deg3_lines
    regime.
    """
    if catalog.space.regime == "deg3_lines":
        raise DualityUnavailableError("duality unavailable")
    divisors = tuple(
        DivisorEntry(
            name=dual_divisor_name(d.name),
            cls=_swap(d.cls),
            fact_kind=d.fact_kind,
            fact_loci=frozenset(dual_locus_name(l) for l in d.fact_loci),
            note=d.note,
        )
        for d in catalog.divisors
    )
    curves = tuple(
        CurveEntry(
            name=dual_curve_name(c.name),
            row=(c.row[1], c.row[0], c.row[2]),
            covers=None if c.covers is None else dual_locus_name(c.covers),
            exactness=c.exactness,
        )
        for c in catalog.curves
    )
    loci = tuple(LocusEntry(dual_locus_name(l.name), l.kind) for l in catalog.loci)
    containments = tuple(
        ContainmentFact(dual_locus_name(f.sub), dual_locus_name(f.sup))
        for f in catalog.containments
    )
    pairings = tuple(
        PairingFact(dual_curve_name(p.curve), dual_divisor_name(p.divisor), p.value)
        for p in catalog.pairings
    )
    expected = tuple(
        ExpectedChamber(
            item_id=ch.item_id,
            rays=tuple(dual_divisor_name(r) for r in ch.rays),
            locus=frozenset(dual_locus_name(l) for l in ch.locus),
            walls=tuple(
                Wall(dual_divisor_name(w.ray_a), dual_divisor_name(w.ray_b), w.include_a, w.include_b)
                for w in ch.walls
            ),
        )
        for ch in catalog.expected
    )
    return Catalog(
        space=catalog.space,
        divisors=divisors,
        curves=curves,
        loci=loci,
        containments=containments,
        pairings=pairings,
        expected=expected,
    )


# ---------------------------------------------------------------------------
# Canonical class
# ---------------------------------------------------------------------------


def canonical_class(k: int, n: int, d: int) -> NSVector:
    """The canonical class of the degree-d space of maps to G(k,n).

    K = (n/2 - k - 1 - n/2d) H11 + (k - n/2 - 1 - n/2d) H2
        + sum_i (n i (d-i)/2d - 2) Delta_i;
    for d in {2, 3} there is a single boundary class, so the result is a
    rank-3 vector.
    """
    if d not in (2, 3):
        raise ValueError("only degrees 2 and 3 carry a single boundary class")
    nf, kf, df = Fraction(n), Fraction(k), Fraction(d)
    a = nf / 2 - kf - 1 - nf / (2 * df)
    b = kf - nf / 2 - 1 - nf / (2 * df)
    c = nf * 1 * (df - 1) / (2 * df) - 2
    return NSVector(a, b, c)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

_SECTIONS = ("space", "divisors", "curves", "loci", "containments", "pairings", "expected")


def _fmt_vec(v: NSVector) -> str:
    return " ".join(str(c) for c in v.coords)


def _fmt_row(row: tuple[Fraction, Fraction, Fraction]) -> str:
    return " ".join(str(c) for c in row)


def catalog_to_text(catalog: Catalog) -> str:
    """Serialize a catalog to the canonical text format (bit-exact round trip)."""
    out: list[str] = []
    sp = catalog.space
    out.append("[space]")
    out.append(f"regime = {sp.regime}")
    out.append(f"k = {sp.k}")
    out.append(f"n = {sp.n}")
    out.append(f"d = {sp.d}")
    out.append("")
    out.append("[divisors]")
    for dv in catalog.divisors:
        if dv.fact_kind == "base_point_free":
            fact = "base_point_free"
        elif dv.fact_kind == "none":
            fact = "none"
        else:
            # Locus names contain commas, so lists are ';'-separated.
            loci = "; ".join(catalog.locus_sorted(dv.fact_loci))
            fact = f"{dv.fact_kind}: {loci}"
        line = f"{dv.name} | {_fmt_vec(dv.cls)} | {fact}"
        if dv.note:
            line += f" | {dv.note}"
        out.append(line)
    out.append("")
    out.append("[curves]")
    for c in catalog.curves:
        covers = c.covers if c.covers is not None else "-"
        out.append(f"{c.name} | {_fmt_row(c.row)} | {covers} | {c.exactness}")
    out.append("")
    out.append("[loci]")
    for l in catalog.loci:
        out.append(f"{l.name} | {l.kind}")
    out.append("")
    out.append("[containments]")
    for f in catalog.containments:
        out.append(f"{f.sub} < {f.sup}")
    out.append("")
    out.append("[pairings]")
    for p in catalog.pairings:
        out.append(f"{p.curve} . {p.divisor} = {p.value}")
    out.append("")
    out.append("[expected]")
    for ch in catalog.expected:
        rays = " ".join(ch.rays)
        locus = "; ".join(catalog.locus_sorted(ch.locus)) if ch.locus else "empty"
        walls = " ".join(w.token() for w in ch.walls) if ch.walls else "none"
        out.append(f"{ch.item_id} | {rays} | {locus} | {walls}")
    out.append("")
    return "\n".join(out)


def _parse_fraction(tok: str, lineno: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise CatalogParseError(f"line {lineno}: bad rational {tok!r}") from None


def _parse_wall(tok: str, lineno: int) -> Wall:
    m = re.match(r"^(.+)~(.+):([oc])([oc])$", tok)
    if not m:
        raise CatalogParseError(f"line {lineno}: bad wall token {tok!r}")
    return Wall(m.group(1), m.group(2), m.group(3) == "c", m.group(4) == "c")


def catalog_from_text(text: str) -> Catalog:
    """Parse the text format produced by :func:`catalog_to_text`."""
    sections = _split_sections(text)
    return _catalog_from_sections(sections, require_all=True)


def _split_sections(text: str) -> dict[str, list[tuple[int, str]]]:
    sections: dict[str, list[tuple[int, str]]] = {}
    current: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            if current not in _SECTIONS:
                raise CatalogParseError(f"line {lineno}: unknown section [{current}]")
            sections.setdefault(current, [])
            continue
        if current is None:
            raise CatalogParseError(f"line {lineno}: content before any [section]")
        sections[current].append((lineno, line))
    return sections


def _catalog_from_sections(sections, require_all: bool) -> Catalog:
    if "space" not in sections:
        raise CatalogParseError("line 1: missing [space] section")
    meta: dict[str, str] = {}
    for lineno, line in sections["space"]:
        if "=" not in line:
            raise CatalogParseError(f"line {lineno}: expected key = value")
        key, val = (part.strip() for part in line.split("=", 1))
        meta[key] = val
    try:
        space = SpaceId(
            k=int(meta["k"]), n=int(meta["n"]), d=int(meta["d"]), regime=meta["regime"]
        )
    except KeyError as exc:
        raise CatalogParseError(f"[space] is missing key {exc}") from None
    except ValueError as exc:
        raise CatalogParseError(f"[space]: {exc}") from None

    divisors = [_parse_divisor(lineno, line) for lineno, line in sections.get("divisors", [])]
    curves = [_parse_curve(lineno, line) for lineno, line in sections.get("curves", [])]
    loci = [_parse_locus(lineno, line) for lineno, line in sections.get("loci", [])]
    containments = [
        _parse_containment(lineno, line) for lineno, line in sections.get("containments", [])
    ]
    pairings = [_parse_pairing(lineno, line) for lineno, line in sections.get("pairings", [])]
    expected = [_parse_expected(lineno, line) for lineno, line in sections.get("expected", [])]
    if require_all and not divisors:
        raise CatalogParseError("catalog has no [divisors]")
    return Catalog(
        space=space,
        divisors=tuple(divisors),
        curves=tuple(curves),
        loci=tuple(loci),
        containments=tuple(containments),
        pairings=tuple(pairings),
        expected=tuple(expected),
    )


def _fields(line: str, lineno: int, minimum: int) -> list[str]:
    parts = [p.strip() for p in line.split("|")]
    if len(parts) < minimum:
        raise CatalogParseError(f"line {lineno}: expected at least {minimum} '|' fields")
    return parts


def _parse_divisor(lineno: int, line: str) -> DivisorEntry:
    parts = _fields(line, lineno, 3)
    name = parts[0]
    coords = parts[1].split()
    if len(coords) != 3:
        raise CatalogParseError(f"line {lineno}: divisor class needs 3 coordinates")
    cls = NSVector(*(_parse_fraction(t, lineno) for t in coords))
    fact = parts[2]
    note = parts[3] if len(parts) > 3 else ""
    if fact in ("base_point_free", "none"):
        return DivisorEntry(name, cls, fact, frozenset(), note)
    m = re.match(r"^(exact_sbl|sbl_upper_bound)\s*:\s*(.*)$", fact)
    if not m:
        raise CatalogParseError(f"line {lineno}: bad divisor fact {fact!r}")
    loci = frozenset(s.strip() for s in m.group(2).split(";") if s.strip())
    return DivisorEntry(name, cls, m.group(1), loci, note)


def _parse_curve(lineno: int, line: str) -> CurveEntry:
    parts = _fields(line, lineno, 4)
    coords = parts[1].split()
    if len(coords) != 3:
        raise CatalogParseError(f"line {lineno}: curve row needs 3 coordinates")
    row = tuple(_parse_fraction(t, lineno) for t in coords)
    covers = None if parts[2] == "-" else parts[2]
    exactness = parts[3]
    if exactness not in ("exact", "sign_only"):
        raise CatalogParseError(f"line {lineno}: bad exactness {exactness!r}")
    return CurveEntry(parts[0], row, covers, exactness)


def _parse_locus(lineno: int, line: str) -> LocusEntry:
    parts = _fields(line, lineno, 2)
    if parts[1] not in ("schubert_maps", "reducible", "boundary"):
        raise CatalogParseError(f"line {lineno}: bad locus kind {parts[1]!r}")
    return LocusEntry(parts[0], parts[1])


def _parse_containment(lineno: int, line: str) -> ContainmentFact:
    if "<" not in line:
        raise CatalogParseError(f"line {lineno}: expected 'sub < sup'")
    sub, sup = (part.strip() for part in line.split("<", 1))
    return ContainmentFact(sub, sup)


def _parse_pairing(lineno: int, line: str) -> PairingFact:
    m = re.match(r"^(.*?)\s*\.\s*(.*?)\s*=\s*(\S+)$", line)
    if not m:
        raise CatalogParseError(f"line {lineno}: expected 'curve . divisor = value'")
    return PairingFact(m.group(1), m.group(2), _parse_fraction(m.group(3), lineno))


def _parse_expected(lineno: int, line: str) -> ExpectedChamber:
    parts = _fields(line, lineno, 4)
    try:
        item_id = int(parts[0])
    except ValueError:
        raise CatalogParseError(f"line {lineno}: bad chamber id {parts[0]!r}") from None
    rays = tuple(parts[1].split())
    locus = (
        frozenset()
        if parts[2] == "empty"
        else frozenset(s.strip() for s in parts[2].split(";") if s.strip())
    )
    walls = (
        ()
        if parts[3] == "none"
        else tuple(_parse_wall(t, lineno) for t in parts[3].split())
    )
    return ExpectedChamber(item_id, rays, locus, walls)


# ---------------------------------------------------------------------------
# Loading with overrides
# ---------------------------------------------------------------------------


def _merge(base: Catalog, override: Catalog) -> Catalog:
    """Merge an override catalog into a base: replace-by-name or append."""

    def merge_named(base_items, new_items, key):
        items = list(base_items)
        index = {key(item): i for i, item in enumerate(items)}
        for item in new_items:
            k = key(item)
            if k in index:
                items[index[k]] = item
            else:
                items.append(item)
                index[k] = len(items) - 1
        return tuple(items)

    divisors = merge_named(base.divisors, override.divisors, lambda d: d.name)
    curves = merge_named(base.curves, override.curves, lambda c: c.name)
    loci = merge_named(base.loci, override.loci, lambda l: l.name)
    containments = tuple(dict.fromkeys(list(base.containments) + list(override.containments)))
    pairings = merge_named(
        base.pairings, override.pairings, lambda p: (p.curve, p.divisor)
    )
    expected = override.expected if override.expected else base.expected
    return Catalog(
        space=override.space,
        divisors=divisors,
        curves=curves,
        loci=loci,
        containments=containments,
        pairings=pairings,
        expected=expected,
    )


def load(space, override_path: Optional[str] = None) -> Catalog:
    """Load the built-in catalog for a space or regime, merging any override.

    ``space`` may be a SpaceId or a regime name.  The returned catalog has
    passed the full intersection-number table validation.
    """
    from . import spaces

    if isinstance(space, str):
        space = space_for_regime(space)
    base = spaces.builtin_catalog(space)
    if override_path is not None:
        with open(override_path, "r", encoding="utf-8") as handle:
            text = handle.read()
        sections = _split_sections(text)
        override = _catalog_from_sections(sections, require_all=False)
        if override.space.regime != space.regime:
            raise CatalogError(
                f"override regime {override.space.regime} does not match {space.regime}"
            )
        base = _merge(base, override)
    base.validate()
    return base
