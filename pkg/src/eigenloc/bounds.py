"""Closed-form eigenvalue bounds for the three graph matrices.

Every bound returns labelled intervals for indexed eigenvalues under the
ordering lambda_1 >= lambda_2 >= ... >= lambda_n.  Adjacency and
normalized-adjacency bounds target lambda_2 and lambda_n; Laplacian bounds
target lambda_1 and lambda_{n-1} (the algebraic connectivity).  Each
theorem is tagged with a stable identifier ("Thm3.1", "Cor3.6", ...) that
the report JSON, the CSV output and the verify scope filters all share.

Structural preconditions (connected, regular, bipartite, dominating
vertex) are enforced through :func:`eigenloc.graphs.classify`;
:func:`bounds_report` runs every applicable theorem for a (graph, matrix
kind) pair and records the rest as skipped with a reason.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    Graph,
    GraphMatrixKind,
    StructureReport,
    classify,
    common_neighbors,
    degrees,
    randic_index,
)

__all__ = [
    "TraceStats",
    "BoundInterval",
    "BoundReport",
    "trace_bounds",
    "regular_adjacency_bounds",
    "biregular_bipartite_lambda2_bounds",
    "regular_bipartite_lambda2_bounds",
    "regular_common_neighbor_bounds",
    "regular_brauer_common_neighbor_bounds",
    "normalized_trace_bounds",
    "normalized_bipartite_lambda2_bounds",
    "normalized_dominating_gersgorin_bounds",
    "normalized_dominating_brauer_bounds",
    "laplacian_trace_bounds",
    "laplacian_common_neighbor_bounds",
    "laplacian_dominating_brauer_bounds",
    "bounds_report",
    "report_to_json",
    "report_to_csv",
    "THEOREM_TAGS",
    "TARGET_ALIASES",
]

LAMBDA_1 = "lambda_1"
LAMBDA_2 = "lambda_2"
LAMBDA_N_MINUS_1 = "lambda_n_minus_1"
LAMBDA_N = "lambda_n"

TARGET_ALIASES = {LAMBDA_N_MINUS_1: "algebraic_connectivity"}

THEOREM_TAGS = (
    "Thm3.1",
    "Thm3.4",
    "Cor3.6",
    "Thm3.7",
    "Thm3.9",
    "Thm4.1",
    "Thm4.3",
    "Thm4.4",
    "Thm4.5",
    "Thm5.2",
    "Thm5.3",
    "Thm5.4",
)

_RADICAND_FLOOR = -1e-9


@dataclass(frozen=True)
class TraceStats:
    """Mean and spread of a real spectrum recovered from two traces."""

    m: float
    s: float
    n_eff: int


@dataclass(frozen=True)
class BoundInterval:
    """One labelled interval [lower, upper] for one eigenvalue index."""

    target: str
    lower: float
    upper: float
    theorem: str
    assumptions: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.lower > self.upper + 1e-12:
            raise ValueError(
                f"{self.theorem}/{self.target}: lower {self.lower} exceeds upper {self.upper}"
            )


@dataclass(frozen=True)
class BoundReport:
    """All applicable bounds for one (graph, matrix kind, mode) triple."""

    graph_summary: dict
    matrix_kind: str
    mode: str
    bounds: tuple[BoundInterval, ...]
    skipped: tuple[tuple[str, str], ...]
    combined: tuple[BoundInterval, ...]


def _clamped_sqrt(radicand: float, theorem: str) -> float:
    """sqrt with the shared radicand policy: tiny negatives are zero."""
    if radicand < 0.0:
        if radicand < _RADICAND_FLOOR:
            raise ValueError(f"{theorem}: radicand {radicand} is negative beyond tolerance")
        radicand = 0.0
    return math.sqrt(radicand)


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


# ---------------------------------------------------------------------------
# generic two-trace engine


def trace_bounds(
    trace: float, trace_sq: float, n: int
) -> tuple[TraceStats, BoundInterval, BoundInterval]:
    """Extreme-eigenvalue intervals from trace and trace of the square.

    For an n-dimensional matrix with real eigenvalues, with mean
    ``m = trace/n`` and spread ``s**2 = trace_sq/n - m**2``:

        lambda_n in [m - s*sqrt(n-1), m - s/sqrt(n-1)]
        lambda_1 in [m + s/sqrt(n-1), m + s*sqrt(n-1)]

    Returns the stats plus the lambda_1 and lambda_n intervals.
    """
    _need(n >= 2, f"trace bounds need dimension >= 2, got {n}")
    m = trace / n
    variance = trace_sq / n - m * m
    if variance < 0.0:
        _need(variance >= -1e-12, f"inconsistent traces: negative variance {variance}")
        variance = 0.0
    s = math.sqrt(variance)
    root = math.sqrt(n - 1.0)
    stats = TraceStats(m=m, s=s, n_eff=n)
    top = BoundInterval(LAMBDA_1, m + s / root, m + s * root, "Thm1.4")
    bottom = BoundInterval(LAMBDA_N, m - s * root, m - s / root, "Thm1.4")
    return stats, top, bottom


# ---------------------------------------------------------------------------
# adjacency matrix of regular / biregular graphs


def _structure(g: Graph, rep: StructureReport | None) -> StructureReport:
    return rep if rep is not None else classify(g)


def regular_adjacency_bounds(
    g: Graph, rep: StructureReport | None = None
) -> list[BoundInterval]:
    """Two-trace intervals for lambda_2 and lambda_n of a connected regular graph."""
    rep = _structure(g, rep)
    n = g.n
    _need(rep.connected, "Thm3.1 needs a connected graph")
    _need(rep.regular is not None, "Thm3.1 needs a regular graph")
    _need(n >= 3, "Thm3.1 needs n >= 3")
    d = rep.regular
    rad = n * d * (n - d - 1)
    base = -d / (n - 1.0)
    wide = _clamped_sqrt((n - 2.0) * rad, "Thm3.1") / (n - 1.0)
    narrow = _clamped_sqrt(rad / (n - 2.0), "Thm3.1") / (n - 1.0)
    assumptions = ("connected", f"{d}-regular")
    return [
        BoundInterval(LAMBDA_2, base + narrow, base + wide, "Thm3.1", assumptions),
        BoundInterval(LAMBDA_N, base - wide, base - narrow, "Thm3.1", assumptions),
    ]


def biregular_bipartite_lambda2_bounds(
    g: Graph, rep: StructureReport | None = None
) -> list[BoundInterval]:
    """lambda_2 interval for a connected (c,d)-biregular bipartite graph."""
    rep = _structure(g, rep)
    n = g.n
    _need(rep.connected, "Thm3.4 needs a connected graph")
    _need(rep.bipartite, "Thm3.4 needs a bipartite graph")
    _need(rep.biregular is not None, "Thm3.4 needs a biregular graph")
    _need(n >= 4, "Thm3.4 needs n >= 4")
    c, d = rep.biregular
    excess = g.m - c * d
    lo = _clamped_sqrt(2.0 * excess / ((n - 2.0) * (n - 3.0)), "Thm3.4")
    hi = _clamped_sqrt(2.0 * (n - 3.0) * excess / (n - 2.0), "Thm3.4")
    return [
        BoundInterval(LAMBDA_2, lo, hi, "Thm3.4", ("connected", "bipartite", f"({c},{d})-biregular")),
    ]


def regular_bipartite_lambda2_bounds(
    g: Graph, rep: StructureReport | None = None
) -> list[BoundInterval]:
    """lambda_2 interval for a connected d-regular bipartite graph."""
    rep = _structure(g, rep)
    n = g.n
    _need(rep.connected, "Cor3.6 needs a connected graph")
    _need(rep.regular is not None, "Cor3.6 needs a regular graph")
    _need(rep.bipartite, "Cor3.6 needs a bipartite graph")
    _need(n >= 4, "Cor3.6 needs n >= 4")
    d = rep.regular
    lo = _clamped_sqrt(d * (n - 2.0 * d) / ((n - 2.0) * (n - 3.0)), "Cor3.6")
    hi = _clamped_sqrt(d * (n - 3.0) * (n - 2.0 * d) / (n - 2.0), "Cor3.6")
    return [
        BoundInterval(LAMBDA_2, lo, hi, "Cor3.6", ("connected", "bipartite", f"{d}-regular")),
    ]


def regular_common_neighbor_bounds(
    g: Graph, rep: StructureReport | None = None
) -> list[BoundInterval]:
    """Common-neighbour disk bounds for a connected d-regular graph.

    Every deflated disk for deflation row i sits at -[k ~ i] with radius
    2d - 2N(i,k) - 2[k ~ i]; the best deflation row is taken and the
    spectral-radius guard d keeps the bound no worse than |lambda| <= d.
    The chain L <= lambda_n <= lambda_2 <= U makes [L, U] valid for both
    targets.
    """
    rep = _structure(g, rep)
    n = g.n
    _need(rep.connected, "Thm3.7 needs a connected graph")
    _need(rep.regular is not None, "Thm3.7 needs a regular graph")
    _need(n >= 2, "Thm3.7 needs n >= 2")
    d = rep.regular
    best_alpha = -math.inf
    best_beta = -math.inf
    for i in range(1, n + 1):
        mask = g.neighbors_mask(i)
        min_alpha = math.inf
        min_beta = math.inf
        for k in range(1, n + 1):
            if k == i:
                continue
            two_n = 2 * common_neighbors(g, i, k)
            if mask >> k & 1:
                alpha, beta = 1 + two_n, 3 + two_n
            else:
                alpha, beta = two_n, two_n
            min_alpha = min(min_alpha, alpha)
            min_beta = min(min_beta, beta)
        best_alpha = max(best_alpha, min_alpha)
        best_beta = max(best_beta, min_beta)
    lower = -2.0 * d + max(best_alpha, d)
    upper = 2.0 * d - max(best_beta, d)
    lower, upper = float(lower), float(upper)
    assumptions = ("connected", f"{d}-regular")
    return [
        BoundInterval(LAMBDA_2, lower, upper, "Thm3.7", assumptions),
        BoundInterval(LAMBDA_N, lower, upper, "Thm3.7", assumptions),
    ]


def regular_brauer_common_neighbor_bounds(
    g: Graph, rep: StructureReport | None = None
) -> list[BoundInterval]:
    """Common-neighbour oval bounds for a connected d-regular graph.

    For each deflation row i and pair {j, k} of the other vertices the
    deflated oval sections to a real interval whose endpoints depend on how
    many of j, k are adjacent to i (both / neither / exactly one).
    """
    rep = _structure(g, rep)
    n = g.n
    _need(rep.connected, "Thm3.9 needs a connected graph")
    _need(rep.regular is not None, "Thm3.9 needs a regular graph")
    _need(n >= 3, "Thm3.9 needs n >= 3")
    d = rep.regular
    lower = -math.inf
    upper = math.inf
    for i in range(1, n + 1):
        mask = g.neighbors_mask(i)
        min_alpha = math.inf
        max_beta = -math.inf
        others = [k for k in range(1, n + 1) if k != i]
        for j, k in combinations(others, 2):
            nj = common_neighbors(g, i, j)
            nk = common_neighbors(g, i, k)
            j_adj = bool(mask >> j & 1)
            k_adj = bool(mask >> k & 1)
            if j_adj and k_adj:
                root = 2.0 * math.sqrt((d - nj - 1) * (d - nk - 1))
                alpha, beta = -1.0 - root, -1.0 + root
            elif not j_adj and not k_adj:
                root = 2.0 * math.sqrt((d - nj) * (d - nk))
                alpha, beta = -root, root
            else:
                n_adj, n_non = (nj, nk) if j_adj else (nk, nj)
                root = math.sqrt(0.25 + 4.0 * (d - n_adj - 1) * (d - n_non))
                alpha, beta = -0.5 - root, -0.5 + root
            min_alpha = min(min_alpha, alpha)
            max_beta = max(max_beta, beta)
        lower = max(lower, min_alpha)
        upper = min(upper, max_beta)
    assumptions = ("connected", f"{d}-regular")
    return [
        BoundInterval(LAMBDA_2, lower, upper, "Thm3.9", assumptions),
        BoundInterval(LAMBDA_N, lower, upper, "Thm3.9", assumptions),
    ]


# ---------------------------------------------------------------------------
# normalized adjacency matrix


def normalized_trace_bounds(
    g: Graph, rep: StructureReport | None = None
) -> list[BoundInterval]:
    """Two-trace intervals for lambda_2 and lambda_n of the normalized matrix.

    Driven by the exponent -1 connectivity index R: the deflated matrix has
    trace -1 and squared trace 2R - 1, so the spread radicand is
    2(n-1)R - n.
    """
    rep = _structure(g, rep)
    n = g.n
    _need(rep.connected, "Thm4.1 needs a connected graph")
    _need(n >= 3, "Thm4.1 needs n >= 3")
    r_minus_1 = randic_index(g, -1.0)
    rad = 2.0 * (n - 1.0) * r_minus_1 - n
    base = -1.0 / (n - 1.0)
    wide = _clamped_sqrt((n - 2.0) * rad, "Thm4.1") / (n - 1.0)
    narrow = _clamped_sqrt(rad / (n - 2.0), "Thm4.1") / (n - 1.0)
    assumptions = ("connected",)
    return [
        BoundInterval(LAMBDA_2, base + narrow, base + wide, "Thm4.1", assumptions),
        BoundInterval(LAMBDA_N, base - wide, base - narrow, "Thm4.1", assumptions),
    ]


def normalized_bipartite_lambda2_bounds(
    g: Graph, rep: StructureReport | None = None
) -> list[BoundInterval]:
    """lambda_2 interval for a connected bipartite graph's normalized matrix."""
    rep = _structure(g, rep)
    n = g.n
    _need(rep.connected, "Thm4.3 needs a connected graph")
    _need(rep.bipartite, "Thm4.3 needs a bipartite graph")
    _need(n >= 4, "Thm4.3 needs n >= 4")
    rad = randic_index(g, -1.0) - 1.0
    lo = _clamped_sqrt(2.0 * rad / ((n - 2.0) * (n - 3.0)), "Thm4.3")
    hi = _clamped_sqrt(2.0 * (n - 3.0) * rad / (n - 2.0), "Thm4.3")
    return [
        BoundInterval(LAMBDA_2, lo, hi, "Thm4.3", ("connected", "bipartite")),
    ]


def _dominating_or_fail(rep: StructureReport, theorem: str) -> tuple[int, ...]:
    _need(rep.connected, f"{theorem} needs a connected graph")
    _need(bool(rep.dominating), f"{theorem} needs a dominating vertex")
    return rep.dominating


def normalized_dominating_gersgorin_bounds(
    g: Graph, rep: StructureReport | None = None
) -> list[BoundInterval]:
    """Deflated-disk bounds when a dominating vertex exists.

    Each dominating vertex i yields valid bounds; the tightest over all
    dominating vertices is reported.
    """
    rep = _structure(g, rep)
    n = g.n
    dominating = _dominating_or_fail(rep, "Thm4.4")
    _need(n >= 3, "Thm4.4 needs n >= 3")
    ds = [g.degree(v) for v in range(1, n + 1)]
    best = -math.inf
    for i in dominating:
        t = min(
            1.0 / ds[k - 1] + 2.0 * ds[k - 1] / (n - 1.0)
            for k in range(1, n + 1)
            if k != i
        )
        best = max(best, t)
    lower = -2.0 - 2.0 / (n - 1.0) + best
    upper = 2.0 - best
    assumptions = ("connected", "dominating vertex")
    return [
        BoundInterval(LAMBDA_2, lower, upper, "Thm4.4", assumptions),
        BoundInterval(LAMBDA_N, lower, upper, "Thm4.4", assumptions),
    ]


def normalized_dominating_brauer_bounds(
    g: Graph, rep: StructureReport | None = None
) -> list[BoundInterval]:
    """Deflated-oval bounds when a dominating vertex exists.

    All ovals share the centre -1/(n-1); the half-width is the largest
    sqrt(rho_j * rho_k) over pairs of remaining vertices, where rho is the
    deflated deleted row sum 2 - 1/d - (2d-1)/(n-1) >= 0.
    """
    rep = _structure(g, rep)
    n = g.n
    dominating = _dominating_or_fail(rep, "Thm4.5")
    _need(n >= 3, "Thm4.5 needs n >= 3")
    ds = [g.degree(v) for v in range(1, n + 1)]
    rho = [
        max(0.0, 2.0 - 1.0 / d - (2.0 * d - 1.0) / (n - 1.0)) if d > 0 else 0.0
        for d in ds
    ]
    centre = -1.0 / (n - 1.0)
    best_half = math.inf
    for i in dominating:
        rest = sorted((rho[k - 1] for k in range(1, n + 1) if k != i), reverse=True)
        best_half = min(best_half, math.sqrt(rest[0] * rest[1]))
    assumptions = ("connected", "dominating vertex")
    return [
        BoundInterval(LAMBDA_2, centre - best_half, centre + best_half, "Thm4.5", assumptions),
        BoundInterval(LAMBDA_N, centre - best_half, centre + best_half, "Thm4.5", assumptions),
    ]


# ---------------------------------------------------------------------------
# Laplacian matrix


def laplacian_trace_bounds(
    g: Graph, rep: StructureReport | None = None
) -> list[BoundInterval]:
    """Two-trace intervals for lambda_1 and lambda_{n-1} of the Laplacian.

    The deflated matrix keeps trace sum(d) and squared trace
    sum(d^2) + sum(d), giving mean n*avg/(n-1) and spread radicand
    S = sum(d^2) + n*avg - (n*avg)^2/(n-1).
    """
    rep = _structure(g, rep)
    n = g.n
    _need(rep.connected, "Thm5.2 needs a connected graph")
    _need(n >= 3, "Thm5.2 needs n >= 3")
    prof = degrees(g)
    sum_d = float(sum(prof.degrees))
    m = sum_d / (n - 1.0)
    spread = prof.sum_squares + sum_d - sum_d * sum_d / (n - 1.0)
    wide = _clamped_sqrt((n - 2.0) * spread / (n - 1.0), "Thm5.2")
    narrow = _clamped_sqrt(spread / ((n - 1.0) * (n - 2.0)), "Thm5.2")
    assumptions = ("connected",)
    return [
        BoundInterval(LAMBDA_1, m + narrow, m + wide, "Thm5.2", assumptions),
        BoundInterval(LAMBDA_N_MINUS_1, m - wide, m - narrow, "Thm5.2", assumptions),
    ]


def laplacian_common_neighbor_bounds(
    g: Graph, rep: StructureReport | None = None
) -> list[BoundInterval]:
    """Common-neighbour disk bounds for the Laplacian of a connected graph.

    For deflation row i, the disk of row k is centred at d_k + [k ~ i]
    with radius d_i + d_k - 2N(i,k) - 2[k ~ i].  The reported endpoints
    per (i, k) are

        alpha = -d_i + 2N(i,k) + [k ~ i]
        beta  =  d_i + 2d_k - 2N(i,k) - [k ~ i]

    (alpha relaxes the disk's left edge by 2[k ~ i], so it stays valid),
    combined as max over i of min over k for the lower bound and min over
    i of max over k for the upper.
    """
    rep = _structure(g, rep)
    n = g.n
    _need(rep.connected, "Thm5.3 needs a connected graph")
    _need(n >= 2, "Thm5.3 needs n >= 2")
    ds = [g.degree(v) for v in range(1, n + 1)]
    lower = -math.inf
    upper = math.inf
    for i in range(1, n + 1):
        mask = g.neighbors_mask(i)
        di = ds[i - 1]
        min_alpha = math.inf
        max_beta = -math.inf
        for k in range(1, n + 1):
            if k == i:
                continue
            two_n = 2 * common_neighbors(g, i, k)
            adj = 1 if mask >> k & 1 else 0
            alpha = -di + two_n + adj
            beta = di + 2 * ds[k - 1] - two_n - adj
            min_alpha = min(min_alpha, alpha)
            max_beta = max(max_beta, beta)
        lower = max(lower, min_alpha)
        upper = min(upper, max_beta)
    assumptions = ("connected",)
    return [
        BoundInterval(LAMBDA_1, float(lower), float(upper), "Thm5.3", assumptions),
        BoundInterval(LAMBDA_N_MINUS_1, float(lower), float(upper), "Thm5.3", assumptions),
    ]


def laplacian_dominating_brauer_bounds(
    g: Graph, rep: StructureReport | None = None, mode: str = "published"
) -> list[BoundInterval]:
    """Deflated-oval Laplacian bounds when a dominating vertex exists.

    The oval for the pair {j, k} sections to

        (d_j + d_k + 2 +/- sqrt((d_j - d_k)^2 + 4 r_j r_k)) / 2

    with r the deflated deleted row sum.  ``mode="published"`` uses
    r_k = n - d_k; ``mode="corrected"`` uses the re-derived r_k = n-1-d_k
    (the non-neighbours of k among the remaining vertices), which is never
    looser.  Union semantics give lambda_1 <= max over pairs of the upper
    endpoint and lambda_{n-1} >= min over pairs of the lower endpoint.
    """
    if mode not in ("published", "corrected"):
        raise ValueError(f"mode must be 'published' or 'corrected', got {mode!r}")
    rep = _structure(g, rep)
    n = g.n
    dominating = _dominating_or_fail(rep, "Thm5.4")
    _need(n >= 3, "Thm5.4 needs n >= 3")
    ds = [g.degree(v) for v in range(1, n + 1)]
    offset = 0 if mode == "published" else 1
    best_lower = -math.inf
    best_upper = math.inf
    for i in dominating:
        rest = [k for k in range(1, n + 1) if k != i]
        lo_i = math.inf
        hi_i = -math.inf
        for j, k in combinations(rest, 2):
            dj, dk = ds[j - 1], ds[k - 1]
            rj = n - offset - dj
            rk = n - offset - dk
            disc = math.sqrt((dj - dk) ** 2 + 4.0 * rj * rk)
            lo_i = min(lo_i, 0.5 * (dj + dk + 2.0 - disc))
            hi_i = max(hi_i, 0.5 * (dj + dk + 2.0 + disc))
        best_lower = max(best_lower, lo_i)
        best_upper = min(best_upper, hi_i)
    assumptions = ("connected", "dominating vertex", mode)
    return [
        BoundInterval(LAMBDA_1, best_lower, best_upper, "Thm5.4", assumptions),
        BoundInterval(LAMBDA_N_MINUS_1, best_lower, best_upper, "Thm5.4", assumptions),
    ]


# ---------------------------------------------------------------------------
# report assembly


def _applicability(rep: StructureReport, n: int) -> dict[str, str | None]:
    """Skip reason per theorem tag, or None when applicable."""

    def needs(*conds: tuple[bool, str]) -> str | None:
        for ok, reason in conds:
            if not ok:
                return reason
        return None

    connected = (rep.connected, "not connected")
    regular = (rep.regular is not None, "not regular")
    bipartite = (rep.bipartite, "not bipartite")
    biregular = (rep.biregular is not None, "not biregular")
    dominating = (bool(rep.dominating), "no dominating vertex")
    return {
        "Thm3.1": needs(connected, regular, (n >= 3, "needs n >= 3")),
        "Thm3.4": needs(connected, bipartite, biregular, (n >= 4, "needs n >= 4")),
        "Cor3.6": needs(connected, regular, bipartite, (n >= 4, "needs n >= 4")),
        "Thm3.7": needs(connected, regular, (n >= 2, "needs n >= 2")),
        "Thm3.9": needs(connected, regular, (n >= 3, "needs n >= 3")),
        "Thm4.1": needs(connected, (n >= 3, "needs n >= 3")),
        "Thm4.3": needs(connected, bipartite, (n >= 4, "needs n >= 4")),
        "Thm4.4": needs(connected, dominating, (n >= 3, "needs n >= 3")),
        "Thm4.5": needs(connected, dominating, (n >= 3, "needs n >= 3")),
        "Thm5.2": needs(connected, (n >= 3, "needs n >= 3")),
        "Thm5.3": needs(connected, (n >= 2, "needs n >= 2")),
        "Thm5.4": needs(connected, dominating, (n >= 3, "needs n >= 3")),
    }


_KIND_THEOREMS = {
    GraphMatrixKind.ADJACENCY: ("Thm3.1", "Thm3.4", "Cor3.6", "Thm3.7", "Thm3.9"),
    GraphMatrixKind.NORMALIZED_ADJACENCY: ("Thm4.1", "Thm4.3", "Thm4.4", "Thm4.5"),
    GraphMatrixKind.LAPLACIAN: ("Thm5.2", "Thm5.3", "Thm5.4"),
}


def _runner(tag: str, g: Graph, rep: StructureReport, mode: str) -> list[BoundInterval]:
    if tag == "Thm3.1":
        return regular_adjacency_bounds(g, rep)
    if tag == "Thm3.4":
        return biregular_bipartite_lambda2_bounds(g, rep)
    if tag == "Cor3.6":
        return regular_bipartite_lambda2_bounds(g, rep)
    if tag == "Thm3.7":
        return regular_common_neighbor_bounds(g, rep)
    if tag == "Thm3.9":
        return regular_brauer_common_neighbor_bounds(g, rep)
    if tag == "Thm4.1":
        return normalized_trace_bounds(g, rep)
    if tag == "Thm4.3":
        return normalized_bipartite_lambda2_bounds(g, rep)
    if tag == "Thm4.4":
        return normalized_dominating_gersgorin_bounds(g, rep)
    if tag == "Thm4.5":
        return normalized_dominating_brauer_bounds(g, rep)
    if tag == "Thm5.2":
        return laplacian_trace_bounds(g, rep)
    if tag == "Thm5.3":
        return laplacian_common_neighbor_bounds(g, rep)
    if tag == "Thm5.4":
        return laplacian_dominating_brauer_bounds(g, rep, mode=mode)
    raise ValueError(f"unknown theorem tag {tag!r}")


def graph_summary(g: Graph, rep: StructureReport | None = None) -> dict:
    rep = _structure(g, rep)
    return {
        "n": g.n,
        "m": g.m,
        "connected": rep.connected,
        "regular": rep.regular,
        "bipartite": rep.bipartite,
        "biregular": list(rep.biregular) if rep.biregular else None,
        "dominating": list(rep.dominating),
    }


def bounds_report(
    g: Graph, kind: GraphMatrixKind, mode: str = "published"
) -> BoundReport:
    """Run every theorem whose preconditions hold for this matrix kind.

    Inapplicable theorems are listed as skipped with the first failing
    precondition as the reason.  Intervals are intersected per target into
    a combined best interval; skips are data, not errors.
    """
    rep = classify(g)
    reasons = _applicability(rep, g.n)
    bounds: list[BoundInterval] = []
    skipped: list[tuple[str, str]] = []
    for tag in _KIND_THEOREMS[kind]:
        reason = reasons[tag]
        if reason is None:
            bounds.extend(_runner(tag, g, rep, mode))
        else:
            skipped.append((tag, reason))
    by_target: dict[str, list[BoundInterval]] = {}
    for b in bounds:
        by_target.setdefault(b.target, []).append(b)
    combined = tuple(
        BoundInterval(
            target,
            max(b.lower for b in items),
            min(b.upper for b in items),
            "combined",
            tuple(sorted({b.theorem for b in items})),
        )
        for target, items in sorted(by_target.items())
    )
    return BoundReport(
        graph_summary=graph_summary(g, rep),
        matrix_kind=kind.value,
        mode=mode,
        bounds=tuple(bounds),
        skipped=tuple(skipped),
        combined=combined,
    )


def _interval_obj(b: BoundInterval) -> dict:
    obj = {
        "target": b.target,
        "lower": b.lower,
        "upper": b.upper,
        "theorem": b.theorem,
        "assumptions": list(b.assumptions),
    }
    alias = TARGET_ALIASES.get(b.target)
    if alias:
        obj["alias"] = alias
    return obj


def report_to_json(report: BoundReport) -> str:
    return json.dumps(
        {
            "graph": report.graph_summary,
            "matrix": report.matrix_kind,
            "mode": report.mode,
            "bounds": [_interval_obj(b) for b in report.bounds],
            "skipped": [
                {"theorem": tag, "reason": reason} for tag, reason in report.skipped
            ],
            "combined": [_interval_obj(b) for b in report.combined],
        },
        indent=2,
    )


def report_to_csv(report: BoundReport) -> str:
    lines = ["theorem,target,lower,upper"]
    for b in list(report.bounds) + list(report.combined):
        lines.append(f"{b.theorem},{b.target},{b.lower!r},{b.upper!r}")
    return "\n".join(lines) + "\n"
