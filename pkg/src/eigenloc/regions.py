"""Eigenvalue inclusion regions for complex matrices.

Implements the classical disk and Cassini-oval regions together with two
sharper variants available when the matrix has a constant row sum: the row
sum forces one eigenvalue, and a similarity transform deflates the matrix
to dimension n-1, one deflation per row index.  Applying the classical
regions to every deflated matrix and intersecting gives regions that are
often properly contained in the classical ones.

Regions are kept symbolic: a small composition tree of disks, ovals and
finite point sets under union/intersection.  Membership, signed slack and
the intersection with the real axis are all computed from the parameters,
never from a rasterisation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Union

import numpy as np

__all__ = [
    "Disk",
    "CassiniOval",
    "PointSet",
    "RegionUnion",
    "RegionIntersection",
    "Region",
    "RealSection",
    "row_sums",
    "constant_row_sum",
    "deleted_row_sums",
    "deflate",
    "gersgorin_region",
    "brauer_region",
    "rowsum_gersgorin_region",
    "rowsum_brauer_region",
    "region_slack",
    "region_contains",
    "region_slack_grid",
    "real_section",
    "section_contains",
    "region_to_json",
    "region_from_json",
    "matrix_to_json",
    "matrix_from_json",
]

_OVAL_SCAN_POINTS = 10_000


# ---------------------------------------------------------------------------
# region tree


@dataclass(frozen=True)
class Disk:
    """Closed disk { z : |z - center| <= radius }."""

    center: complex
    radius: float

    def __post_init__(self) -> None:
        if self.radius < 0:
            raise ValueError(f"disk radius must be nonnegative, got {self.radius}")

    def slack(self, z: complex) -> float:
        return self.radius - abs(z - self.center)


@dataclass(frozen=True)
class CassiniOval:
    """Closed oval { z : |z - focus_a| * |z - focus_b| <= radius_product }."""

    focus_a: complex
    focus_b: complex
    radius_product: float

    def __post_init__(self) -> None:
        if self.radius_product < 0:
            raise ValueError(
                f"oval radius product must be nonnegative, got {self.radius_product}"
            )

    def slack(self, z: complex) -> float:
        return self.radius_product - abs(z - self.focus_a) * abs(z - self.focus_b)


@dataclass(frozen=True)
class PointSet:
    """Finite set of complex points; membership means being within tolerance."""

    points: tuple[complex, ...]

    def slack(self, z: complex) -> float:
        if not self.points:
            return -math.inf
        return -min(abs(z - p) for p in self.points)


@dataclass(frozen=True)
class RegionUnion:
    children: tuple["Region", ...]

    def slack(self, z: complex) -> float:
        return max((c.slack(z) for c in self.children), default=-math.inf)


@dataclass(frozen=True)
class RegionIntersection:
    children: tuple["Region", ...]

    def slack(self, z: complex) -> float:
        return min((c.slack(z) for c in self.children), default=-math.inf)


Region = Union[Disk, CassiniOval, PointSet, RegionUnion, RegionIntersection]


def region_slack(region: Region, z: complex) -> float:
    """Signed margin of ``z``: >= 0 inside, < 0 outside, 0 on the boundary.

    Slack is measured against each leaf's defining inequality (distance for
    disks and point sets, distance product for ovals), combined as max over
    unions and min over intersections.
    """
    return region.slack(complex(z))


def region_contains(region: Region, z: complex, tol: float = 0.0) -> bool:
    """Membership with slack >= -tol; ``tol`` must be nonnegative."""
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    return region.slack(complex(z)) >= -tol


def region_slack_grid(region: Region, zs: np.ndarray) -> np.ndarray:
    """Vectorised :func:`region_slack` over an array of complex points."""
    zs = np.asarray(zs, dtype=complex)
    if isinstance(region, Disk):
        return region.radius - np.abs(zs - region.center)
    if isinstance(region, CassiniOval):
        return region.radius_product - np.abs(zs - region.focus_a) * np.abs(
            zs - region.focus_b
        )
    if isinstance(region, PointSet):
        out = np.full(zs.shape, -np.inf)
        for p in region.points:
            out = np.maximum(out, -np.abs(zs - p))
        return out
    if isinstance(region, RegionUnion):
        out = np.full(zs.shape, -np.inf)
        for child in region.children:
            out = np.maximum(out, region_slack_grid(child, zs))
        return out
    if isinstance(region, RegionIntersection):
        out = np.full(zs.shape, np.inf)
        for child in region.children:
            out = np.minimum(out, region_slack_grid(child, zs))
        return out
    raise TypeError(f"not a region: {region!r}")


# ---------------------------------------------------------------------------
# complex-matrix plumbing


def _as_matrix(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix of dimension >= 1, got shape {a.shape}")
    return a


def row_sums(matrix) -> np.ndarray:
    """Complex sum of each row."""
    return _as_matrix(matrix).sum(axis=1)


def constant_row_sum(matrix, tol: float | None = None) -> complex | None:
    """The common row sum when all rows agree within tolerance, else None.

    The default tolerance is ``1e-9 * (1 + max |row sum|)``: graph matrices
    are exact while user matrices may carry float noise.  Agreement is
    measured as the maximum pairwise deviation between row sums.
    """
    sums = row_sums(matrix)
    if tol is None:
        tol = 1e-9 * (1.0 + float(np.max(np.abs(sums))))
    deviation = float(np.max(np.abs(sums[:, None] - sums[None, :])))
    if deviation > tol:
        return None
    return complex(sums.mean())


def _require_gamma(matrix, tol: float | None) -> tuple[np.ndarray, complex]:
    a = _as_matrix(matrix)
    gamma = constant_row_sum(a, tol)
    if gamma is None:
        raise ValueError("matrix does not have a constant row sum within tolerance")
    return a, gamma


def deleted_row_sums(matrix) -> np.ndarray:
    """r_i = sum over j != i of |a_ij|, for each row i."""
    a = _as_matrix(matrix)
    return np.abs(a).sum(axis=1) - np.abs(np.diag(a))


def deflate(matrix, k: int, tol: float | None = None) -> np.ndarray:
    """Deflated matrix of dimension n-1 for a constant-row-sum matrix.

    Entry (u, v) of the result is ``a_uv - a_kv`` for u, v ranging over the
    indices other than ``k`` (1-based).  The spectrum of the input equals
    the row sum plus the spectrum of the result, as multisets.
    """
    a, _ = _require_gamma(matrix, tol)
    n = a.shape[0]
    if n < 2:
        raise ValueError("cannot deflate a 1x1 matrix")
    if not (1 <= k <= n):
        raise ValueError(f"deflation index {k} out of range 1..{n}")
    keep = [u for u in range(n) if u != k - 1]
    return a[np.ix_(keep, keep)] - a[k - 1, keep][None, :]


# ---------------------------------------------------------------------------
# the four inclusion regions


def gersgorin_region(matrix) -> RegionUnion:
    """Union of the n disks centred at a_ii with radius r_i."""
    a = _as_matrix(matrix)
    r = deleted_row_sums(a)
    return RegionUnion(
        tuple(Disk(complex(a[i, i]), float(r[i])) for i in range(a.shape[0]))
    )


def brauer_region(matrix) -> RegionUnion:
    """Union of the n(n-1)/2 ovals with foci (a_ii, a_jj) and product r_i r_j."""
    a = _as_matrix(matrix)
    n = a.shape[0]
    if n < 2:
        raise ValueError("the oval region needs dimension >= 2")
    r = deleted_row_sums(a)
    return RegionUnion(
        tuple(
            CassiniOval(complex(a[i, i]), complex(a[j, j]), float(r[i] * r[j]))
            for i, j in combinations(range(n), 2)
        )
    )


def rowsum_gersgorin_region(
    matrix, tol: float | None = None, with_gamma: bool = True
) -> RegionIntersection:
    """Intersection over deflation rows i of the deflated disk unions.

    Component i is the union over k != i of the disk centred at
    ``a_kk - a_ik`` with radius ``sum over j not in {i, k} of |a_kj - a_ij|``
    (the entries of the i-deflated matrix), together with the forced
    eigenvalue gamma as a point leaf.  ``with_gamma=False`` drops the point
    leaves; the result then only encloses the deflated spectra, which is
    what the closed-form bound derivations consume.
    """
    a, gamma = _require_gamma(matrix, tol)
    n = a.shape[0]
    if n < 2:
        raise ValueError("the deflated disk region needs dimension >= 2")
    components = []
    for i in range(n):
        leaves: list[Region] = []
        for k in range(n):
            if k == i:
                continue
            radius = sum(
                abs(a[k, j] - a[i, j]) for j in range(n) if j != i and j != k
            )
            leaves.append(Disk(complex(a[k, k] - a[i, k]), float(radius)))
        if with_gamma:
            leaves.append(PointSet((gamma,)))
        components.append(RegionUnion(tuple(leaves)))
    return RegionIntersection(tuple(components))


def rowsum_brauer_region(
    matrix, tol: float | None = None, with_gamma: bool = True
) -> RegionIntersection:
    """Intersection over deflation rows i of the deflated oval unions.

    Component i is the union over unordered pairs {j, k} of the remaining
    indices of the oval with foci ``a_jj - a_ij`` and ``a_kk - a_ik`` and
    radius product ``r_j * r_k`` where ``r_j = sum over l not in {i, j} of
    |a_jl - a_il|``, plus the forced eigenvalue gamma as a point leaf.
    """
    a, gamma = _require_gamma(matrix, tol)
    n = a.shape[0]
    if n < 3:
        raise ValueError("the deflated oval region needs dimension >= 3")
    components = []
    for i in range(n):
        rest = [k for k in range(n) if k != i]
        r = {
            j: sum(abs(a[j, l] - a[i, l]) for l in range(n) if l != i and l != j)
            for j in rest
        }
        leaves: list[Region] = [
            CassiniOval(
                complex(a[j, j] - a[i, j]),
                complex(a[k, k] - a[i, k]),
                float(r[j] * r[k]),
            )
            for j, k in combinations(rest, 2)
        ]
        if with_gamma:
            leaves.append(PointSet((gamma,)))
        components.append(RegionUnion(tuple(leaves)))
    return RegionIntersection(tuple(components))


# ---------------------------------------------------------------------------
# real-axis sections


@dataclass(frozen=True)
class RealSection:
    """Intersection of a region with the real axis.

    ``intervals`` are closed, pairwise disjoint and sorted; zero-width
    intervals are allowed.  ``isolated_points`` are sorted and never
    interior to any interval.
    """

    intervals: tuple[tuple[float, float], ...]
    isolated_points: tuple[float, ...]

    def is_empty(self) -> bool:
        return not self.intervals and not self.isolated_points


_EMPTY_SECTION = RealSection((), ())


def section_contains(section: RealSection, x: float, tol: float = 0.0) -> bool:
    """Membership of a real point, with endpoints widened by ``tol``."""
    for lo, hi in section.intervals:
        if lo - tol <= x <= hi + tol:
            return True
    return any(abs(x - p) <= tol for p in section.isolated_points)


def _normalized_section(
    intervals: list[tuple[float, float]], points: list[float], tol: float
) -> RealSection:
    merged: list[list[float]] = []
    for lo, hi in sorted(intervals):
        if merged and lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    kept: list[float] = []
    for p in sorted(points):
        if any(lo <= p <= hi for lo, hi in merged):
            continue
        if kept and abs(p - kept[-1]) <= tol:
            continue
        kept.append(p)
    return RealSection(tuple((lo, hi) for lo, hi in merged), tuple(kept))


def _section_union(a: RealSection, b: RealSection, tol: float) -> RealSection:
    return _normalized_section(
        list(a.intervals) + list(b.intervals),
        list(a.isolated_points) + list(b.isolated_points),
        tol,
    )


def _section_intersection(a: RealSection, b: RealSection, tol: float) -> RealSection:
    intervals = [
        (max(lo1, lo2), min(hi1, hi2))
        for lo1, hi1 in a.intervals
        for lo2, hi2 in b.intervals
        if max(lo1, lo2) <= min(hi1, hi2)
    ]
    points = [p for p in a.isolated_points if section_contains(b, p, tol)]
    points += [p for p in b.isolated_points if section_contains(a, p, tol)]
    return _normalized_section(intervals, points, tol)


def _disk_section(disk: Disk) -> RealSection:
    gap = disk.radius * disk.radius - disk.center.imag * disk.center.imag
    if gap < 0:
        return _EMPTY_SECTION
    half = math.sqrt(gap)
    x = disk.center.real
    return RealSection(((x - half, x + half),), ())


def _oval_quartic(oval: CassiniOval):
    a1, b1 = oval.focus_a.real, oval.focus_a.imag
    a2, b2 = oval.focus_b.real, oval.focus_b.imag
    p2 = oval.radius_product * oval.radius_product

    def q(x):
        return ((x - a1) ** 2 + b1 * b1) * ((x - a2) ** 2 + b2 * b2) - p2

    return q


def _oval_section(oval: CassiniOval, tol: float) -> RealSection:
    p = oval.radius_product
    if p == 0.0:
        pts = [
            f.real
            for f in (oval.focus_a, oval.focus_b)
            if abs(f.imag) <= tol
        ]
        return _normalized_section([], pts, tol)
    q = _oval_quartic(oval)
    lo = min(oval.focus_a.real, oval.focus_b.real) - p - 1.0
    hi = max(oval.focus_a.real, oval.focus_b.real) + p + 1.0
    xs = np.linspace(lo, hi, _OVAL_SCAN_POINTS + 1)
    vals = q(xs)

    roots: list[float] = []
    for i in range(len(xs) - 1):
        v0, v1 = vals[i], vals[i + 1]
        if v0 == 0.0:
            roots.append(float(xs[i]))
        elif (v0 < 0.0) != (v1 < 0.0):
            roots.append(_bisect_root(q, float(xs[i]), float(xs[i + 1]), float(v0)))
    if vals[-1] == 0.0:
        roots.append(float(xs[-1]))
    roots = sorted(roots)

    scale = max(1.0, abs(lo), abs(hi))
    deduped: list[float] = []
    for r in roots:
        if not deduped or r - deduped[-1] > 1e-12 * scale:
            deduped.append(r)
    intervals = []
    for left, right in zip(deduped, deduped[1:]):
        if q(0.5 * (left + right)) <= 0.0:
            intervals.append((left, right))
    return _normalized_section(intervals, [], tol)


def _bisect_root(q, lo: float, hi: float, q_lo: float) -> float:
    scale = max(1.0, abs(lo), abs(hi))
    for _ in range(100):
        if hi - lo <= 1e-12 * scale:
            break
        mid = 0.5 * (lo + hi)
        qm = q(mid)
        if qm == 0.0:
            return mid
        if (qm < 0.0) == (q_lo < 0.0):
            lo, q_lo = mid, qm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def real_section(region: Region, tol: float = 1e-9) -> RealSection:
    """The region's intersection with the real axis as intervals + points.

    Disks section analytically; ovals by locating the real roots of the
    degree-4 margin polynomial with a sign-change scan and bisection, then
    keeping the sign-negative gaps; unions and intersections by interval
    algebra.  ``tol`` controls how close to the axis a point leaf must be
    to count as real and how point matching behaves under intersection.
    Tangency points of ovals (double roots without a sign change) may be
    dropped; tangent disks keep their zero-width interval.
    """
    if isinstance(region, Disk):
        return _disk_section(region)
    if isinstance(region, CassiniOval):
        return _oval_section(region, tol)
    if isinstance(region, PointSet):
        pts = [p.real for p in region.points if abs(p.imag) <= tol]
        return _normalized_section([], pts, tol)
    if isinstance(region, RegionUnion):
        acc = _EMPTY_SECTION
        for child in region.children:
            acc = _section_union(acc, real_section(child, tol), tol)
        return acc
    if isinstance(region, RegionIntersection):
        if not region.children:
            return _EMPTY_SECTION
        acc = real_section(region.children[0], tol)
        for child in region.children[1:]:
            acc = _section_intersection(acc, real_section(child, tol), tol)
        return acc
    raise TypeError(f"not a region: {region!r}")


# ---------------------------------------------------------------------------
# JSON interchange


def _pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def region_to_json(region: Region) -> dict:
    """Nested dict form: union/intersection nodes plus disk/oval/points leaves."""
    if isinstance(region, Disk):
        return {"disk": {"center": _pair(region.center), "radius": region.radius}}
    if isinstance(region, CassiniOval):
        return {
            "oval": {
                "a": _pair(region.focus_a),
                "b": _pair(region.focus_b),
                "p": region.radius_product,
            }
        }
    if isinstance(region, PointSet):
        return {"points": [_pair(p) for p in region.points]}
    if isinstance(region, RegionUnion):
        return {"op": "union", "children": [region_to_json(c) for c in region.children]}
    if isinstance(region, RegionIntersection):
        return {
            "op": "intersection",
            "children": [region_to_json(c) for c in region.children],
        }
    raise TypeError(f"not a region: {region!r}")


def region_from_json(obj: dict) -> Region:
    if not isinstance(obj, dict):
        raise ValueError(f"bad region node {obj!r}")
    if "disk" in obj:
        d = obj["disk"]
        return Disk(complex(d["center"][0], d["center"][1]), float(d["radius"]))
    if "oval" in obj:
        o = obj["oval"]
        return CassiniOval(
            complex(o["a"][0], o["a"][1]),
            complex(o["b"][0], o["b"][1]),
            float(o["p"]),
        )
    if "points" in obj:
        return PointSet(tuple(complex(p[0], p[1]) for p in obj["points"]))
    if obj.get("op") == "union":
        return RegionUnion(tuple(region_from_json(c) for c in obj["children"]))
    if obj.get("op") == "intersection":
        return RegionIntersection(tuple(region_from_json(c) for c in obj["children"]))
    raise ValueError(f"bad region node {obj!r}")


def matrix_to_json(matrix) -> str:
    """Row-major ``{"n": n, "entries": [[{"re", "im"}, ...], ...]}``."""
    a = _as_matrix(matrix)
    entries = [
        [{"re": float(z.real), "im": float(z.imag)} for z in row] for row in a
    ]
    return json.dumps({"n": a.shape[0], "entries": entries})


def matrix_from_json(text: str) -> np.ndarray:
    obj = json.loads(text)
    try:
        n = int(obj["n"])
        entries = obj["entries"]
    except (TypeError, KeyError):
        raise ValueError("matrix JSON must have keys 'n' and 'entries'") from None
    if len(entries) != n or any(len(row) != n for row in entries):
        raise ValueError("matrix entries are not n rows of n values")
    a = np.empty((n, n), dtype=complex)
    for i, row in enumerate(entries):
        for j, cell in enumerate(row):
            a[i, j] = complex(float(cell["re"]), float(cell["im"]))
    return a
