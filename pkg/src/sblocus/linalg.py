"""Exact rational linear algebra for rank-3 divisor-class spaces.

Everything here works over ``fractions.Fraction`` so that cone membership,
nonnegative-combination feasibility and the projective slice are decided
exactly.  Classes are written in the basis (H_sigma11, H_sigma2, Delta).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "NSVector",
    "Cone",
    "SlicePoint",
    "ZeroRayError",
    "SliceError",
    "SingularSystemError",
    "SLICE_FUNCTIONAL",
    "ns",
    "pair",
    "solve_class",
    "nonneg_combination",
    "membership",
    "slice_point",
    "unslice",
    "normalize_ray",
    "phi",
]


class ZeroRayError(ValueError):
    """Raised when an operation that needs a ray is handed the zero vector."""


class SliceError(ValueError):
    """Raised when a ray does not meet the affine slice plane."""


class SingularSystemError(ValueError):
    """Raised when intersection data does not determine a divisor class."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class NSVector:
    """A divisor class a*H_sigma11 + b*H_sigma2 + c*Delta with exact entries."""

    h11: Fraction
    h2: Fraction
    delta: Fraction

    def __iter__(self) -> Iterator[Fraction]:
        yield self.h11
        yield self.h2
        yield self.delta

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.h11, self.h2, self.delta)

    def is_zero(self) -> bool:
        return not (self.h11 or self.h2 or self.delta)

    def __add__(self, other: "NSVector") -> "NSVector":
        return NSVector(self.h11 + other.h11, self.h2 + other.h2, self.delta + other.delta)

    def __sub__(self, other: "NSVector") -> "NSVector":
        return NSVector(self.h11 - other.h11, self.h2 - other.h2, self.delta - other.delta)

    def __neg__(self) -> "NSVector":
        return NSVector(-self.h11, -self.h2, -self.delta)

    def scale(self, s) -> "NSVector":
        s = _frac(s)
        return NSVector(self.h11 * s, self.h2 * s, self.delta * s)

    def __rmul__(self, s) -> "NSVector":
        return self.scale(s)

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coords)


def ns(a, b, c) -> NSVector:
    """Build an NSVector, coercing ints or 'p/q' strings to Fraction."""
    return NSVector(_frac(a), _frac(b), _frac(c))


@dataclass(frozen=True)
class SlicePoint:
    """Affine coordinates of a ray's intersection with the slice plane."""

    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class Cone:
    """A rational polyhedral cone given by generators, deduplicated up to scaling."""

    generators: tuple[NSVector, ...]

    def __init__(self, generators: Iterable[NSVector]):
        gens: list[NSVector] = []
        seen: set[tuple[Fraction, Fraction, Fraction]] = set()
        for g in generators:
            if g.is_zero():
                raise ZeroRayError("zero ray")
            key = normalize_ray(g).coords
            if key not in seen:
                seen.add(key)
                gens.append(g)
        if not gens:
            raise ValueError("cone needs at least one generator")
        object.__setattr__(self, "generators", tuple(gens))


# The slice functional phi(aH11 + bH2 + cDelta) = 2a + 2b + c.  It is strictly
# positive on every effective-cone generator of all three catalogs; the naive
# sum a+b+c vanishes on Ddeg in the degree-3 regimes.
SLICE_FUNCTIONAL = (Fraction(2), Fraction(2), Fraction(1))


def phi(v: NSVector) -> Fraction:
    """Evaluate the slice functional on a class."""
    return 2 * v.h11 + 2 * v.h2 + v.delta


def pair(row: Sequence, v: NSVector) -> Fraction:
    """Exact intersection pairing of a curve covector with a divisor class."""
    r1, r2, r3 = (_frac(r) for r in row)
    return r1 * v.h11 + r2 * v.h2 + r3 * v.delta


def _solve_columns(cols: Sequence[Sequence[Fraction]], target: Sequence[Fraction]):
    """Solve sum_j x_j * cols[j] = target exactly (3 equations).

    Returns ('unique', xs), ('inconsistent', None) or ('underdetermined', None).
    """
    n = len(cols)
    aug = [[cols[j][i] for j in range(n)] + [target[i]] for i in range(3)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(n):
        sel = next((r for r in range(row, 3) if aug[r][col] != 0), None)
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        inv = Fraction(1) / aug[row][col]
        aug[row] = [a * inv for a in aug[row]]
        for r in range(3):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
        pivots.append((row, col))
        row += 1
        if row == 3:
            break
    for r in range(row, 3):
        if aug[r][n] != 0:
            return "inconsistent", None
    if len(pivots) < n:
        return "underdetermined", None
    xs = [Fraction(0)] * n
    for r, c in pivots:
        xs[c] = aug[r][n]
    return "unique", xs


def solve_class(rows: Sequence[Sequence], values: Sequence) -> NSVector:
    """Recover the divisor class D with row_i . D = value_i for three covectors.

    Raises SingularSystemError when the rows do not determine a unique class.
    """
    if len(rows) != 3 or len(values) != 3:
        raise ValueError("need exactly three rows and three values")
    rws = [tuple(_frac(x) for x in r) for r in rows]
    vals = [_frac(v) for v in values]
    # Columns of the coefficient matrix are the basis-coordinate slots.
    cols = [[rws[i][j] for i in range(3)] for j in range(3)]
    status, xs = _solve_columns(cols, vals)
    if status != "unique":
        raise SingularSystemError("curves do not determine class")
    return NSVector(xs[0], xs[1], xs[2])


def nonneg_combination(
    v: NSVector, gens: Sequence[NSVector]
) -> Optional[list[Fraction]]:
    """Find exact coefficients a_i >= 0 with sum a_i g_i = v, or None.

    By Caratheodory in ambient dimension 3 it suffices to scan linearly
    independent generator subsets of size <= 3; the returned list is aligned
    with ``gens`` (unused generators get coefficient 0).
    """
    if not gens:
        raise ValueError("empty generator list")
    for g in gens:
        if g.is_zero():
            raise ZeroRayError("zero ray")
    target = v.coords
    if v.is_zero():
        return [Fraction(0)] * len(gens)
    for size in (1, 2, 3):
        for idxs in combinations(range(len(gens)), size):
            cols = [gens[i].coords for i in idxs]
            status, xs = _solve_columns(cols, target)
            if status != "unique" or any(x < 0 for x in xs):
                continue
            out = [Fraction(0)] * len(gens)
            for i, x in zip(idxs, xs):
                out[i] = x
            return out
    return None


def membership(v: NSVector, cone: Cone) -> str:
    """Classify a ray against a cone: 'interior', 'boundary' or 'outside'.

    Interior means the relative interior, so half-open wall cones and
    lower-dimensional cones are handled uniformly.  The test is exact: v lies
    in the relative interior iff v = (nonnegative combination) + eps * s for
    some eps > 0, where s is the sum of all generators.
    """
    if v.is_zero():
        raise ZeroRayError("zero ray")
    gens = cone.generators
    if nonneg_combination(v, gens) is None:
        return "outside"
    s = gens[0]
    for g in gens[1:]:
        s = s + g
    # Look for v = sum_{t in T} a_t t + b*s with a_t >= 0, b > 0, |T| <= 2.
    for size in (0, 1, 2):
        for idxs in combinations(range(len(gens)), size):
            cols = [gens[i].coords for i in idxs] + [s.coords]
            status, xs = _solve_columns(cols, v.coords)
            if status != "unique":
                continue
            if all(x >= 0 for x in xs[:-1]) and xs[-1] > 0:
                return "interior"
    return "boundary"


def slice_point(v: NSVector) -> SlicePoint:
    """Intersect the ray through v with the plane phi = 1.

    The chart is (x, y) = (h11, h2) on that plane, so slicing is invariant
    under positive scaling.  Rays with phi(v) <= 0 are not cut by the plane.
    """
    f = phi(v)
    if f <= 0:
        raise SliceError("ray not cut by slice plane")
    return SlicePoint(v.h11 / f, v.h2 / f)


def unslice(p: SlicePoint) -> NSVector:
    """The representative of the ray through a slice point, with phi = 1."""
    return NSVector(p.x, p.y, 1 - 2 * p.x - 2 * p.y)


def _gcd_all(values: Iterable[int]) -> int:
    g = 0
    for x in values:
        g = _gcd(g, abs(x))
    return g


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def normalize_ray(v: NSVector) -> NSVector:
    """Canonical integer representative of the ray through v.

    Denominators are cleared, numerators divided by their gcd, and the sign is
    fixed so that phi > 0 (falling back to first-nonzero-positive when the ray
    lies in the plane phi = 0).
    """
    if v.is_zero():
        raise ZeroRayError("zero ray")
    lcm = 1
    for c in v.coords:
        lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in v.coords]
    g = _gcd_all(ints)
    ints = [x // g for x in ints]
    f = 2 * ints[0] + 2 * ints[1] + ints[2]
    if f < 0:
        ints = [-x for x in ints]
    elif f == 0:
        lead = next(x for x in ints if x != 0)
        if lead < 0:
            ints = [-x for x in ints]
    return NSVector(Fraction(ints[0]), Fraction(ints[1]), Fraction(ints[2]))
