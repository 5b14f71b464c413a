"""Built-in catalog data for the three chamber-decomposition regimes.

Divisor classes are written in the basis (H11, H2, Delta).  Curve rows are the
intersection numbers (B.H11, B.H2, B.Delta); a covers entry of "-" means the
curve is only used for class solving, never as lower-bound evidence.  The
expected tables list, per theorem item, the bounding rays, the stable base
locus, and the half-open walls the item owns (A~B:oc means the segment from A
to B with the B endpoint included).
"""

from __future__ import annotations

from fractions import Fraction

from .catalog import (
    Catalog,
    ContainmentFact,
    CurveEntry,
    DivisorEntry,
    ExpectedChamber,
    LocusEntry,
    PairingFact,
    SpaceId,
    CatalogError,
    _parse_wall,
)
from .linalg import NSVector

__all__ = ["builtin_catalog"]


def _vec(text: str) -> NSVector:
    a, b, c = (Fraction(t) for t in text.split())
    return NSVector(a, b, c)


def _row(text: str):
    return tuple(Fraction(t) for t in text.split())


def _build(space: SpaceId, data: dict) -> Catalog:
    divisors = []
    for name, cls, kind, loci in data["divisors"]:
        fact_loci = frozenset(s.strip() for s in loci.split(";") if s.strip())
        divisors.append(DivisorEntry(name, _vec(cls), kind, fact_loci))
    curves = [
        CurveEntry(name, _row(row), None if covers == "-" else covers, exactness)
        for name, row, covers, exactness in data["curves"]
    ]
    loci = [LocusEntry(name, kind) for name, kind in data["loci"]]
    containments = [ContainmentFact(sub, sup) for sub, sup in data["containments"]]
    pairings = [
        PairingFact(curve, div, Fraction(val)) for curve, div, val in data["pairings"]
    ]
    expected = [
        ExpectedChamber(
            item_id=item,
            rays=tuple(rays.split()),
            locus=frozenset(s.strip() for s in locus.split(";") if s.strip()),
            walls=tuple(_parse_wall(t, 0) for t in walls.split()) if walls else (),
        )
        for item, rays, locus, walls in data["expected"]
    ]
    return Catalog(
        space=space,
        divisors=tuple(divisors),
        curves=tuple(curves),
        loci=tuple(loci),
        containments=tuple(containments),
        pairings=tuple(pairings),
        expected=tuple(expected),
    )


# --------------------------------------------------------------------------
# Degree 2, any 2 <= k < k+2 <= n
# --------------------------------------------------------------------------

_DEG2 = {
    "divisors": [
        ("H11", "1 0 0", "base_point_free", ""),
        ("H2", "0 1 0", "base_point_free", ""),
        ("T", "1/2 1/2 1/2", "base_point_free", ""),
        ("Delta", "0 0 1", "exact_sbl", "boundary"),
        ("Ddeg", "-1/4 3/4 -1/4", "exact_sbl", "Q[(1,1)^*]"),
        ("Dunb", "3/4 -1/4 -1/4", "exact_sbl", "Q[(2)^*]"),
        ("P", "3/4 3/4 -1/4", "exact_sbl", "Q[(1)^*]"),
    ],
    "curves": [
        ("C1", "1 0 3", "Q[(1,1)^*]", "exact"),
        ("C2", "0 1 3", "Q[(2)^*]", "exact"),
        ("C3", "1 1 2", "-", "exact"),
        ("C4", "2 0 0", "Q[(1,1)^*]", "exact"),
        ("C5", "0 2 0", "Q[(2)^*]", "exact"),
        ("C6", "1 0 -1", "boundary", "exact"),
        ("C7", "0 1 -1", "boundary", "exact"),
        ("C8", "0 0 1", "Q[(1)^*]", "exact"),
    ],
    "loci": [
        ("Q[(1)^*]", "schubert_maps"),
        ("Q[(1,1)^*]", "schubert_maps"),
        ("Q[(2)^*]", "schubert_maps"),
        ("boundary", "boundary"),
    ],
    "containments": [
        ("Q[(1)^*]", "Q[(1,1)^*]"),
        ("Q[(1)^*]", "Q[(2)^*]"),
    ],
    "pairings": [
        ("C1", "H11", "1"), ("C1", "H2", "0"), ("C1", "Delta", "3"), ("C1", "P", "0"),
        ("C2", "H11", "0"), ("C2", "H2", "1"), ("C2", "Delta", "3"), ("C2", "P", "0"),
        ("C3", "H11", "1"), ("C3", "H2", "1"), ("C3", "Delta", "2"), ("C3", "P", "1"),
        ("C4", "H11", "2"), ("C4", "H2", "0"), ("C4", "Delta", "0"),
        ("C5", "H11", "0"), ("C5", "H2", "2"), ("C5", "Delta", "0"),
        ("C6", "H11", "1"), ("C6", "H2", "0"), ("C6", "Delta", "-1"),
        ("C7", "H11", "0"), ("C7", "H2", "1"), ("C7", "Delta", "-1"),
        ("C8", "H11", "0"), ("C8", "H2", "0"), ("C8", "Delta", "1"),
        ("C8", "T", "1/2"), ("C8", "P", "-1/4"),
    ],
    "expected": [
        (1, "H11 H2 T", "", "H11~T:cc T~H2:cc H11~H2:cc"),
        (2, "H11 H2 P", "Q[(1)^*]", "H11~P:oc H2~P:oc"),
        (3, "H2 Ddeg P", "Q[(1,1)^*]", "H2~Ddeg:oc P~Ddeg:oc"),
        (4, "H11 Dunb P", "Q[(2)^*]", "H11~Dunb:oc P~Dunb:oc"),
        (5, "P Ddeg Dunb", "Q[(1,1)^*]; Q[(2)^*]", "Ddeg~Dunb:oo"),
        (6, "H2 Ddeg Delta", "boundary; Q[(1,1)^*]", "Ddeg~Delta:oo"),
        (7, "H11 Dunb Delta", "boundary; Q[(2)^*]", "Dunb~Delta:oo"),
        (8, "H11 T H2 Delta", "boundary", "H2~Delta:oc H11~Delta:oc"),
    ],
}

# --------------------------------------------------------------------------
# Degree 3, 3 <= k < k+3 <= n
# --------------------------------------------------------------------------

_DEG3_GENERAL = {
    "divisors": [
        ("H11", "1 0 0", "base_point_free", ""),
        ("H2", "0 1 0", "base_point_free", ""),
        ("T", "2/3 2/3 2/3", "base_point_free", ""),
        ("Delta", "0 0 1", "exact_sbl", "boundary"),
        ("Ddeg", "-1/3 2/3 -1/3", "exact_sbl", "C[(2,2,1)^*]; Q((1,1)^*)L"),
        ("Dunb", "2/3 -1/3 -1/3", "exact_sbl", "C[(3,2)^*]; Q((2)^*)L"),
        ("P", "2/3 2/3 -1/3", "exact_sbl", "C[(1,1)^*]; C[(2)^*]; Q((1)^*)L"),
        ("F", "5/3 5/3 -1/3", "exact_sbl", "C[(1)^*]; Q((1)^*)L"),
        ("S", "-1/3 5/3 -1/3", "exact_sbl", "C[(1,1,1)^*]; Q((1,1)^*)L"),
        ("S'", "5/3 -1/3 -1/3", "exact_sbl", "C[(3)^*]; Q((2)^*)L"),
        ("U", "2 5 -1", "sbl_upper_bound", "C[(1,1)^*]; Q((1)^*)L"),
        ("U'", "5 2 -1", "sbl_upper_bound", "C[(2)^*]; Q((1)^*)L"),
        ("R", "1 1 -1", "none", ""),
        ("V", "1 4 -2", "none", ""),
        ("V'", "4 1 -2", "none", ""),
    ],
    "curves": [
        ("B1", "2 0 4", "C[(1,1,1)^*]", "exact"),
        ("B2", "0 2 4", "C[(3)^*]", "exact"),
        ("B3", "1 0 -1", "boundary", "exact"),
        ("B4", "1 0 5", "C[(1,1)^*]", "exact"),
        ("B5", "0 1 5", "C[(2)^*]", "exact"),
        ("B6", "0 0 1", "Q((1)^*)L", "sign_only"),
        ("B7", "0 0 1", "C[(1)^*]", "sign_only"),
        ("B8", "0 1 5", "-", "exact"),
        ("B8'", "1 0 5", "-", "exact"),
        ("B9", "1 0 -1", "-", "exact"),
        ("B10", "0 1 -1", "-", "exact"),
        ("B11", "1 0 2", "Q((1,1)^*)L", "exact"),
        ("B11'", "0 1 2", "Q((2)^*)L", "exact"),
        ("B12", "0 1 -1", "boundary", "exact"),
        ("B13", "1 2 3", "C[(3,2)^*]", "exact"),
        ("B13'", "2 1 3", "C[(2,2,1)^*]", "exact"),
        ("B14", "1 5 0", "C[(3,2)^*]", "exact"),
        ("B14'", "5 1 0", "C[(2,2,1)^*]", "exact"),
        ("B15", "1 1 4", "C[(2,2)^*]", "exact"),
        ("B16", "9 0 0", "C[(1,1,1)^*]", "exact"),
        ("B17", "0 9 0", "C[(3)^*]", "exact"),
        ("B18", "2 0 0", "C[(1)^*]", "exact"),
        ("B19", "0 2 0", "C[(1)^*]", "exact"),
    ],
    "loci": [
        ("C[(1)^*]", "schubert_maps"),
        ("C[(1,1)^*]", "schubert_maps"),
        ("C[(2)^*]", "schubert_maps"),
        ("C[(1,1,1)^*]", "schubert_maps"),
        ("C[(2,2)^*]", "schubert_maps"),
        ("C[(3)^*]", "schubert_maps"),
        ("C[(2,2,1)^*]", "schubert_maps"),
        ("C[(3,2)^*]", "schubert_maps"),
        ("Q((1)^*)L", "reducible"),
        ("Q((1,1)^*)L", "reducible"),
        ("Q((2)^*)L", "reducible"),
        ("boundary", "boundary"),
    ],
    "containments": [
        ("C[(1)^*]", "C[(1,1)^*]"),
        ("C[(1)^*]", "C[(2)^*]"),
        ("C[(1,1)^*]", "C[(1,1,1)^*]"),
        ("C[(1,1)^*]", "C[(2,2)^*]"),
        ("C[(2)^*]", "C[(2,2)^*]"),
        ("C[(2)^*]", "C[(3)^*]"),
        ("C[(1,1,1)^*]", "C[(2,2,1)^*]"),
        ("C[(2,2)^*]", "C[(2,2,1)^*]"),
        ("C[(2,2)^*]", "C[(3,2)^*]"),
        ("C[(3)^*]", "C[(3,2)^*]"),
        ("Q((1)^*)L", "Q((1,1)^*)L"),
        ("Q((1)^*)L", "Q((2)^*)L"),
        ("Q((1)^*)L", "boundary"),
        ("Q((1,1)^*)L", "boundary"),
        ("Q((2)^*)L", "boundary"),
    ],
    # The primed rows and the S'-column follow from the stated values by the
    # symmetry exchanging the two hyperplane classes.
    "pairings": [
        ("B1", "H11", "2"), ("B1", "H2", "0"), ("B1", "Delta", "4"),
        ("B1", "P", "0"), ("B1", "S", "-2"),
        ("B2", "H11", "0"), ("B2", "H2", "2"), ("B2", "Delta", "4"),
        ("B2", "P", "0"), ("B2", "S'", "-2"),
        ("B3", "H11", "1"), ("B3", "H2", "0"), ("B3", "Delta", "-1"),
        ("B3", "P", "1"), ("B3", "F", "2"),
        ("B4", "H11", "1"), ("B4", "H2", "0"), ("B4", "Delta", "5"),
        ("B4", "P", "-1"), ("B4", "F", "0"),
        ("B5", "H11", "0"), ("B5", "H2", "1"), ("B5", "Delta", "5"),
        ("B5", "P", "-1"), ("B5", "F", "0"),
        ("B8", "H11", "0"), ("B8", "H2", "1"), ("B8", "Delta", "5"), ("B8", "S", "0"),
        ("B8'", "H11", "1"), ("B8'", "H2", "0"), ("B8'", "Delta", "5"), ("B8'", "S'", "0"),
        ("B9", "H11", "1"), ("B9", "H2", "0"), ("B9", "Delta", "-1"),
        ("B9", "S", "0"), ("B9", "S'", "2"),
        ("B10", "H11", "0"), ("B10", "H2", "1"), ("B10", "Delta", "-1"),
        ("B10", "S", "2"), ("B10", "S'", "0"),
        ("B11", "H11", "1"), ("B11", "H2", "0"), ("B11", "Delta", "2"), ("B11", "S", "-1"),
        ("B11'", "H11", "0"), ("B11'", "H2", "1"), ("B11'", "Delta", "2"), ("B11'", "S'", "-1"),
        ("B12", "H11", "0"), ("B12", "H2", "1"), ("B12", "Delta", "-1"),
        ("B12", "P", "1"), ("B12", "F", "2"),
        ("B13", "H11", "1"), ("B13", "H2", "2"), ("B13", "Delta", "3"),
        ("B13'", "H11", "2"), ("B13'", "H2", "1"), ("B13'", "Delta", "3"),
        ("B14", "H11", "1"), ("B14", "H2", "5"), ("B14", "Delta", "0"),
        ("B14'", "H11", "5"), ("B14'", "H2", "1"), ("B14'", "Delta", "0"),
        ("B15", "H11", "1"), ("B15", "H2", "1"), ("B15", "Delta", "4"),
        ("B16", "H11", "9"), ("B16", "H2", "0"), ("B16", "Delta", "0"),
        ("B17", "H11", "0"), ("B17", "H2", "9"), ("B17", "Delta", "0"),
        ("B18", "H11", "2"), ("B18", "H2", "0"), ("B18", "Delta", "0"),
        ("B19", "H11", "0"), ("B19", "H2", "2"), ("B19", "Delta", "0"),
    ],
    "expected": [
        (1, "H11 H2 T", "", "H11~T:cc T~H2:cc H11~H2:cc"),
        (2, "Delta H11 T H2", "boundary", "H11~Delta:oc H2~Delta:oc"),
        (3, "H2 Delta S", "C[(1,1,1)^*]; boundary", "Delta~S:oo"),
        (4, "Ddeg S Delta", "C[(2,2,1)^*]; boundary", "Delta~Ddeg:oo"),
        (5, "H11 Delta S'", "C[(3)^*]; boundary", "Delta~S':oo"),
        (6, "Dunb S' Delta", "C[(3,2)^*]; boundary", "Delta~Dunb:oo"),
        (7, "Ddeg R V", "C[(2,2,1)^*]; C[(3)^*]; Q((2)^*)L; Q((1,1)^*)L", "Ddeg~R:oo"),
        (8, "Dunb R V'", "C[(3,2)^*]; C[(1,1,1)^*]; Q((1,1)^*)L; Q((2)^*)L", "Dunb~R:oo"),
        (9, "Ddeg Dunb R", "C[(3,2)^*]; C[(2,2,1)^*]; Q((2)^*)L; Q((1,1)^*)L", "Ddeg~Dunb:oo"),
        (10, "Ddeg S V", "C[(2,2,1)^*]; Q((1,1)^*)L", "V~Ddeg:oc S~Ddeg:oc"),
        (11, "Dunb S' V'", "C[(3,2)^*]; Q((2)^*)L", "V'~Dunb:oc S'~Dunb:oc"),
        (12, "F H11 H2", "C[(1)^*]; Q((1)^*)L", "H11~F:oc H2~F:oc"),
        (13, "P U F U'", "C[(1,1)^*]; C[(2)^*]; Q((1)^*)L", "U~P:oc U'~P:oc"),
        (14, "S H2 U", "C[(1,1,1)^*]; Q((1,1)^*)L", "U~S:oc H2~S:oc"),
        (15, "S' H11 U'", "C[(3)^*]; Q((2)^*)L", "U'~S':oc H11~S':oc"),
        (16, "F H2 U", "C[(1,1)^*]; Q((1)^*)L", "U~F:oo U~H2:oo"),
        (17, "F H11 U'", "C[(2)^*]; Q((1)^*)L", "U'~F:oo U'~H11:oo"),
        (18, "P S U", "C[(1,1,1)^*]; C[(2)^*]; Q((1,1)^*)L", "P~S:oo"),
        (19, "P S' U'", "C[(1,1)^*]; C[(3)^*]; Q((2)^*)L", "P~S':oo"),
        (20, "P V R V'", "C[(1,1,1)^*]; C[(2,2)^*]; C[(3)^*]; Q((1,1)^*)L; Q((2)^*)L", ""),
        (21, "P S V", "C[(1,1,1)^*]; C[(2,2)^*]; Q((1,1)^*)L", ""),
        (22, "P S' V'", "C[(3)^*]; C[(2,2)^*]; Q((2)^*)L", ""),
    ],
}

# --------------------------------------------------------------------------
# Degree 3 maps to Grassmannians of lines: k = 2, n >= 5
# --------------------------------------------------------------------------

_DEG3_LINES = {
    "divisors": [
        ("H11", "1 0 0", "base_point_free", ""),
        ("H2", "0 1 0", "base_point_free", ""),
        ("T", "2/3 2/3 2/3", "base_point_free", ""),
        ("Delta", "0 0 1", "exact_sbl", "boundary"),
        ("Ddeg", "-1/3 2/3 -1/3", "exact_sbl", "C[(2,1)^*]; Q((1,1)^*)L"),
        ("Dunb", "5/3 -1/3 -1/3", "exact_sbl", "C[(3)^*]; Q((2)^*)L"),
        ("P", "2/3 2/3 -1/3", "exact_sbl", "C[(1,1)^*]; C[(2)^*]; Q((1)^*)L"),
        ("F", "5/3 5/3 -1/3", "exact_sbl", "C[(1)^*]; Q((1)^*)L"),
        ("S", "-1/3 5/3 -1/3", "exact_sbl", "C[(1,1)^*]; Q((1,1)^*)L"),
        ("U", "2 5 -1", "sbl_upper_bound", "C[(1,1)^*]; Q((1)^*)L"),
        ("U'", "5 2 -1", "sbl_upper_bound", "C[(2)^*]; Q((1)^*)L"),
    ],
    "curves": [
        ("A1", "5 1 0", "C[(2,1)^*]", "exact"),
        ("A2", "0 2 4", "C[(3)^*]", "exact"),
        ("B3", "1 0 -1", "boundary", "exact"),
        ("B4", "1 0 5", "C[(1,1)^*]", "exact"),
        ("B5", "0 1 5", "C[(2)^*]", "exact"),
        ("B6", "0 0 1", "Q((1)^*)L", "sign_only"),
        ("B7", "0 0 1", "C[(1)^*]", "sign_only"),
        ("B11", "1 0 2", "Q((1,1)^*)L", "exact"),
        ("B11'", "0 1 2", "Q((2)^*)L", "exact"),
        ("B12", "0 1 -1", "boundary", "exact"),
        ("B15", "1 1 4", "C[(2,1)^*]", "exact"),
        ("B16", "1 0 0", "C[(1,1)^*]", "sign_only"),
        ("B17", "0 1 0", "C[(3)^*]", "sign_only"),
    ],
    "loci": [
        ("C[(1)^*]", "schubert_maps"),
        ("C[(1,1)^*]", "schubert_maps"),
        ("C[(2)^*]", "schubert_maps"),
        ("C[(3)^*]", "schubert_maps"),
        ("C[(2,1)^*]", "schubert_maps"),
        ("Q((1)^*)L", "reducible"),
        ("Q((1,1)^*)L", "reducible"),
        ("Q((2)^*)L", "reducible"),
        ("boundary", "boundary"),
    ],
    "containments": [
        ("C[(1)^*]", "C[(1,1)^*]"),
        ("C[(1)^*]", "C[(2)^*]"),
        ("C[(1,1)^*]", "C[(2,1)^*]"),
        ("C[(2)^*]", "C[(2,1)^*]"),
        ("C[(2)^*]", "C[(3)^*]"),
        ("Q((1)^*)L", "Q((1,1)^*)L"),
        ("Q((1)^*)L", "Q((2)^*)L"),
        ("Q((1)^*)L", "boundary"),
        ("Q((1,1)^*)L", "boundary"),
        ("Q((2)^*)L", "boundary"),
    ],
    "pairings": [
        ("A1", "H11", "5"), ("A1", "H2", "1"), ("A1", "Delta", "0"), ("A1", "S", "0"),
        ("A2", "H11", "0"), ("A2", "H2", "2"), ("A2", "Delta", "4"),
        ("B3", "H11", "1"), ("B3", "H2", "0"), ("B3", "Delta", "-1"),
        ("B4", "H11", "1"), ("B4", "H2", "0"), ("B4", "Delta", "5"),
        ("B5", "H11", "0"), ("B5", "H2", "1"), ("B5", "Delta", "5"),
        ("B11", "H11", "1"), ("B11", "H2", "0"), ("B11", "Delta", "2"),
        ("B11'", "H11", "0"), ("B11'", "H2", "1"), ("B11'", "Delta", "2"),
        ("B12", "H11", "0"), ("B12", "H2", "1"), ("B12", "Delta", "-1"),
        ("B15", "H11", "1"), ("B15", "H2", "1"), ("B15", "Delta", "4"),
    ],
    "expected": [
        (1, "H11 H2 T", "", "H11~T:cc T~H2:cc H11~H2:cc"),
        (2, "Delta H11 T H2", "boundary", "H11~Delta:oc H2~Delta:oc"),
        (3, "H2 Delta S", "C[(1,1)^*]; boundary", "Delta~S:oo"),
        (4, "Ddeg S Delta", "C[(2,1)^*]; boundary", "Delta~Ddeg:oo"),
        (5, "Ddeg P S", "C[(2,1)^*]; Q((1,1)^*)L", "P~Ddeg:oc S~Ddeg:oc"),
        (6, "Dunb Ddeg P", "C[(3)^*]; Q((2)^*)L; C[(2,1)^*]; Q((1,1)^*)L", "Ddeg~Dunb:oo"),
        (7, "Dunb H11 Delta", "C[(3)^*]; boundary", "Dunb~Delta:oo"),
        (8, "Dunb H11 U'", "C[(3)^*]; Q((2)^*)L", "H11~Dunb:oc U'~Dunb:oc"),
        (9, "Dunb P U'", "C[(3)^*]; Q((2)^*)L; C[(1,1)^*]", "P~Dunb:oo"),
        (10, "P U F U'", "C[(1,1)^*]; C[(2)^*]; Q((1)^*)L", "U~P:oc U'~P:oc"),
        (11, "S P U", "C[(1,1)^*]; C[(2)^*]; Q((1,1)^*)L", "P~S:oo"),
        (12, "S U H2", "C[(1,1)^*]; Q((1,1)^*)L", "H2~S:oc U~S:oc"),
        (13, "U F H2", "C[(1,1)^*]; Q((1)^*)L", "U~H2:oo U~F:oo"),
        (14, "H11 F U'", "C[(2)^*]; Q((1)^*)L", "U'~F:oo U'~H11:oo"),
        (15, "H11 H2 F", "C[(1)^*]; Q((1)^*)L", "H11~F:oc H2~F:oc"),
    ],
}

_BY_REGIME = {
    "deg2": _DEG2,
    "deg3_general": _DEG3_GENERAL,
    "deg3_lines": _DEG3_LINES,
}


def builtin_catalog(space: SpaceId) -> Catalog:
    """The built-in catalog for a space's regime (classes are regime-wide)."""
    try:
        data = _BY_REGIME[space.regime]
    except KeyError:
        raise CatalogError(f"no built-in catalog for regime {space.regime!r}") from None
    return _build(space, data)
