"""Command-line interface: bounds reports, region artifacts, verification, sweeps.

Four subcommands:

* ``bounds``  -- closed-form bound report for a graph, as JSON or CSV.
* ``regions`` -- inclusion region of a matrix, as region JSON or SVG.
* ``verify``  -- evaluate bounds/regions against the eigensolver oracle,
  printing one PASS/FAIL line per check.
* ``sweep``   -- CSV dataset of bounds vs oracle across family ranges.

Exit codes: 0 success (verify: no FAIL), 1 parse/usage failure, 2 bounds
report with zero applicable theorems, 3 row-sum region requested for a
matrix without a constant row sum.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import bounds as bd
from . import graphs as gr
from . import oracle as orc
from . import regions as rg

__all__ = [
    "main",
    "CheckResult",
    "check_interval",
    "check_region",
    "verify_graph",
    "verify_matrix",
    "region_to_svg",
]

_KINDS = {
    "adjacency": gr.GraphMatrixKind.ADJACENCY,
    "laplacian": gr.GraphMatrixKind.LAPLACIAN,
    "normalized": gr.GraphMatrixKind.NORMALIZED_ADJACENCY,
}

_REGION_METHODS = ("gersgorin", "brauer", "rowsum-gersgorin", "rowsum-brauer")

_TARGET_INDEX = {
    bd.LAMBDA_1: 0,
    bd.LAMBDA_2: 1,
    bd.LAMBDA_N: -1,
    bd.LAMBDA_N_MINUS_1: -2,
}


# ---------------------------------------------------------------------------
# graph/matrix sources


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", help="named family (see graphs.FAMILY_NAMES)")
    parser.add_argument("--n", type=int, help="size parameter for single-parameter families")
    parser.add_argument("--p", type=int, help="first part size for complete_bipartite")
    parser.add_argument("--q", type=int, help="second part size for complete_bipartite")
    parser.add_argument(
        "--connections", help="comma-separated circulant offsets, e.g. '1,2'"
    )
    parser.add_argument("--edges", help="edge-list or graph-JSON file")


def _graph_from_args(args: argparse.Namespace) -> gr.Graph:
    if args.family and args.edges:
        raise ValueError("supply either --family or --edges, not both")
    if args.family:
        params = {}
        if args.n is not None:
            params["n"] = args.n
        if args.p is not None:
            params["p"] = args.p
        if args.q is not None:
            params["q"] = args.q
        if args.connections:
            params["connections"] = [int(tok) for tok in args.connections.split(",")]
        return gr.generate(args.family, **params)
    if args.edges:
        text = Path(args.edges).read_text()
        if text.lstrip().startswith("{"):
            return gr.graph_from_json(text)
        return gr.parse_edge_list(text)
    raise ValueError("no graph source: supply --family or --edges")


# ---------------------------------------------------------------------------
# verification core


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one bound or region check against the oracle."""

    name: str
    target: str
    passed: bool
    slack: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} {self.target} slack={self.slack + 0.0:.6e}"


def check_interval(
    bound: bd.BoundInterval, oracle_value: float, tol: float
) -> CheckResult:
    """PASS iff the oracle eigenvalue is inside the interval within tol."""
    slack = min(oracle_value - bound.lower, bound.upper - oracle_value)
    return CheckResult(
        name=bound.theorem, target=bound.target, passed=slack >= -tol, slack=slack
    )


def check_region(name: str, region, eigenvalues, tol: float) -> CheckResult:
    """PASS iff every oracle eigenvalue lies in the region within tol."""
    slack = min(rg.region_slack(region, z) for z in eigenvalues)
    return CheckResult(name=name, target="spectrum", passed=slack >= -tol, slack=slack)


def _oracle_values(g: gr.Graph, kind: gr.GraphMatrixKind) -> tuple[float, ...]:
    if kind == gr.GraphMatrixKind.NORMALIZED_ADJACENCY:
        return orc.normalized_spectrum(g).values
    return orc.symmetric_eigenvalues(gr.build_matrix(g, kind)).values


def _scope_filter(scope: str) -> set[str] | None:
    if not scope or scope == "all":
        return None
    return {tok.strip() for tok in scope.split(",") if tok.strip()}


def verify_graph(
    g: gr.Graph, scope: str = "all", tol: float = 1e-8, mode: str = "published"
) -> list[CheckResult]:
    """Every requested bound and region check for all three graph matrices.

    The normalized-adjacency matrix (and its checks) is skipped when the
    graph has an isolated vertex.
    """
    wanted = _scope_filter(scope)
    has_isolated = any(g.degree(i) == 0 for i in range(1, g.n + 1))
    results: list[CheckResult] = []
    for kind_name, kind in _KINDS.items():
        if kind == gr.GraphMatrixKind.NORMALIZED_ADJACENCY and has_isolated:
            continue
        values = _oracle_values(g, kind)
        report = bd.bounds_report(g, kind, mode=mode)
        for bound in report.bounds:
            if wanted is not None and bound.theorem not in wanted:
                continue
            results.append(check_interval(bound, values[_TARGET_INDEX[bound.target]], tol))
        matrix = gr.build_matrix(g, kind)
        for method in _REGION_METHODS:
            if wanted is not None and method not in wanted:
                continue
            region = _build_region_or_none(matrix, method)
            if region is None:
                continue
            results.append(check_region(f"{method}[{kind_name}]", region, values, tol))
    return results


def verify_matrix(matrix, scope: str = "all", tol: float = 1e-8) -> list[CheckResult]:
    """Region checks (and the forced-eigenvalue check) for a complex matrix."""
    wanted = _scope_filter(scope)
    spectrum = orc.complex_eigenvalues(matrix)
    results: list[CheckResult] = []
    for method in _REGION_METHODS:
        if wanted is not None and method not in wanted:
            continue
        region = _build_region_or_none(matrix, method)
        if region is None:
            continue
        results.append(check_region(method, region, spectrum.values, tol))
    gamma = rg.constant_row_sum(matrix)
    if gamma is not None and (wanted is None or "gamma" in wanted):
        slack = -min(abs(z - gamma) for z in spectrum.values)
        results.append(
            CheckResult(name="gamma", target="row_sum", passed=slack >= -tol, slack=slack)
        )
    return results


def _build_region_or_none(matrix, method: str):
    a = np.asarray(matrix, dtype=complex)
    n = a.shape[0]
    if method == "gersgorin":
        return rg.gersgorin_region(a)
    if method == "brauer":
        return rg.brauer_region(a) if n >= 2 else None
    constant = rg.constant_row_sum(a) is not None
    if method == "rowsum-gersgorin":
        return rg.rowsum_gersgorin_region(a) if constant and n >= 2 else None
    if method == "rowsum-brauer":
        return rg.rowsum_brauer_region(a) if constant and n >= 3 else None
    raise ValueError(f"unknown region method {method!r}")


# ---------------------------------------------------------------------------
# SVG rendering


def _region_leaves(region) -> list:
    if isinstance(region, (rg.Disk, rg.CassiniOval, rg.PointSet)):
        return [region]
    return [leaf for child in region.children for leaf in _region_leaves(child)]


def _auto_window(leaves, eigenvalues) -> tuple[float, float, float, float]:
    xs: list[float] = []
    ys: list[float] = []
    for leaf in leaves:
        if isinstance(leaf, rg.Disk):
            xs += [leaf.center.real - leaf.radius, leaf.center.real + leaf.radius]
            ys += [leaf.center.imag - leaf.radius, leaf.center.imag + leaf.radius]
        elif isinstance(leaf, rg.CassiniOval):
            spread = math.sqrt(leaf.radius_product) + abs(leaf.focus_a - leaf.focus_b)
            for f in (leaf.focus_a, leaf.focus_b):
                xs += [f.real - spread, f.real + spread]
                ys += [f.imag - spread, f.imag + spread]
        else:
            xs += [p.real for p in leaf.points]
            ys += [p.imag for p in leaf.points]
    xs += [z.real for z in eigenvalues]
    ys += [z.imag for z in eigenvalues]
    if not xs:
        return (-1.0, 1.0, -1.0, 1.0)
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pad = 0.1 * max(x1 - x0, y1 - y0, 1.0)
    return (x0 - pad, x1 + pad, y0 - pad, y1 + pad)


def _oval_boundary(oval: rg.CassiniOval, points: int) -> list[list[complex]]:
    """Boundary polylines by radial scanning; one loop, or two when pinched."""
    p = oval.radius_product
    if p <= 0.0:
        return []

    def margin(z: complex) -> float:
        return abs(z - oval.focus_a) * abs(z - oval.focus_b) - p

    def trace(centre: complex, count: int) -> list[complex]:
        span = abs(oval.focus_a - oval.focus_b) + math.sqrt(p) + 1.0
        loop = []
        for idx in range(count):
            angle = 2.0 * math.pi * idx / count
            ray = complex(math.cos(angle), math.sin(angle))
            lo, hi = 0.0, span
            flo = margin(centre)
            # outermost crossing along the ray: coarse scan then bisection
            ts = [span * j / 64.0 for j in range(65)]
            vals = [margin(centre + t * ray) for t in ts]
            bracket = None
            for j in range(64, 0, -1):
                if (vals[j] > 0.0) != (vals[j - 1] > 0.0):
                    bracket = (ts[j - 1], ts[j], vals[j - 1])
                    break
            if bracket is None:
                loop.append(centre)
                continue
            lo, hi, flo = bracket
            for _ in range(40):
                mid = 0.5 * (lo + hi)
                fm = margin(centre + mid * ray)
                if (fm > 0.0) == (flo > 0.0):
                    lo, flo = mid, fm
                else:
                    hi = mid
            loop.append(centre + 0.5 * (lo + hi) * ray)
        loop.append(loop[0])
        return loop

    midpoint = 0.5 * (oval.focus_a + oval.focus_b)
    if margin(midpoint) <= 0.0:
        return [trace(midpoint, points)]
    return [trace(oval.focus_a, points // 2), trace(oval.focus_b, points // 2)]


def region_to_svg(
    region,
    eigenvalues=(),
    window: tuple[float, float, float, float] | None = None,
    size: int = 640,
) -> str:
    """Render leaf boundaries plus eigenvalue markers as a standalone SVG.

    Disks become circles, ovals 512-point polylines traced from the
    implicit curve, point leaves small diamonds, eigenvalues filled dots.
    Rendering convenience only; nothing downstream parses this.
    """
    leaves = _region_leaves(region)
    if window is None:
        window = _auto_window(leaves, eigenvalues)
    x0, x1, y0, y1 = window
    scale = size / max(x1 - x0, y1 - y0)

    def sx(x: float) -> float:
        return (x - x0) * scale

    def sy(y: float) -> float:
        return (y1 - y) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for leaf in leaves:
        if isinstance(leaf, rg.Disk):
            parts.append(
                f'<circle class="disk" cx="{sx(leaf.center.real):.2f}" '
                f'cy="{sy(leaf.center.imag):.2f}" r="{leaf.radius * scale:.2f}" '
                'fill="none" stroke="steelblue" stroke-width="1"/>'
            )
        elif isinstance(leaf, rg.CassiniOval):
            for loop in _oval_boundary(leaf, 512):
                coords = " ".join(f"{sx(z.real):.2f},{sy(z.imag):.2f}" for z in loop)
                parts.append(
                    f'<polyline class="oval" points="{coords}" fill="none" '
                    'stroke="darkorange" stroke-width="1"/>'
                )
        else:
            for point in leaf.points:
                cx, cy = sx(point.real), sy(point.imag)
                parts.append(
                    f'<path class="point" d="M {cx:.2f} {cy - 4:.2f} L {cx + 4:.2f} '
                    f'{cy:.2f} L {cx:.2f} {cy + 4:.2f} L {cx - 4:.2f} {cy:.2f} Z" '
                    'fill="seagreen"/>'
                )
    for z in eigenvalues:
        parts.append(
            f'<circle class="eigenvalue" cx="{sx(z.real):.2f}" cy="{sy(z.imag):.2f}" '
            'r="3" fill="crimson"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_bounds(args: argparse.Namespace) -> int:
    try:
        g = _graph_from_args(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = bd.bounds_report(g, _KINDS[args.matrix], mode=args.mode)
    if args.format == "csv":
        sys.stdout.write(bd.report_to_csv(report))
    else:
        print(bd.report_to_json(report))
    return 0 if report.bounds else 2


def _cmd_regions(args: argparse.Namespace) -> int:
    try:
        matrix = rg.matrix_from_json(Path(args.matrix_file).read_text())
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    method = args.method
    if method.startswith("rowsum") and rg.constant_row_sum(matrix) is None:
        print("error: matrix does not have a constant row sum", file=sys.stderr)
        return 3
    try:
        region = _build_region_or_none(matrix, method)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if region is None:
        print(f"error: {method} region unavailable for this matrix", file=sys.stderr)
        return 3 if method.startswith("rowsum") else 1
    if args.emit == "svg":
        eigenvalues = orc.complex_eigenvalues(matrix).values
        window = _parse_window(args.window) if args.window else None
        payload = region_to_svg(region, eigenvalues, window)
    else:
        payload = json.dumps(rg.region_to_json(region), indent=2)
    if args.out:
        Path(args.out).write_text(payload + "\n")
    else:
        print(payload)
    return 0


def _parse_window(text: str) -> tuple[float, float, float, float]:
    fields = text.split(":")
    if len(fields) != 4:
        raise ValueError("window must be 'x0:x1:y0:y1'")
    x0, x1, y0, y1 = (float(f) for f in fields)
    return (x0, x1, y0, y1)


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        if args.matrix_file:
            matrix = rg.matrix_from_json(Path(args.matrix_file).read_text())
            results = verify_matrix(matrix, scope=args.scope, tol=args.tol)
        else:
            g = _graph_from_args(args)
            results = verify_graph(g, scope=args.scope, tol=args.tol, mode=args.mode)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for result in results:
        print(result.line())
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def _parse_sweep_spec(token: str) -> tuple[str, list[int]]:
    """'family:lo..hi[:step]' (or 'family:lo:hi[:step]'), bare name for fixed families."""
    fields = token.replace("..", ":").split(":")
    family = fields[0]
    if family == "petersen":
        return family, [10]
    if len(fields) not in (3, 4):
        raise ValueError(f"bad sweep spec {token!r}: expected family:lo..hi[:step]")
    lo, hi = int(fields[1]), int(fields[2])
    step = int(fields[3]) if len(fields) == 4 else 1
    if step < 1 or hi < lo:
        raise ValueError(f"bad sweep range in {token!r}")
    return family, list(range(lo, hi + 1, step))


def _sweep_graph(family: str, n: int) -> gr.Graph:
    if family == "petersen":
        return gr.petersen()
    if family == "complete_bipartite":
        return gr.complete_bipartite(n - n // 2, n // 2)
    if family == "circulant":
        return gr.circulant(n, (1, 2))
    return gr.generate(family, n=n)


def _cmd_sweep(args: argparse.Namespace) -> int:
    kind = _KINDS[args.matrix]
    rows = ["family,n,theorem,target,lower,upper,oracle,slack_lower,slack_upper"]
    try:
        specs = [_parse_sweep_spec(token) for token in args.spec]
        for family, sizes in specs:
            for n in sizes:
                g = _sweep_graph(family, n)
                values = _oracle_values(g, kind)
                report = bd.bounds_report(g, kind, mode=args.mode)
                for bound in report.bounds:
                    oracle_value = values[_TARGET_INDEX[bound.target]]
                    rows.append(
                        f"{family},{g.n},{bound.theorem},{bound.target},"
                        f"{bound.lower!r},{bound.upper!r},{oracle_value!r},"
                        f"{oracle_value - bound.lower!r},{bound.upper - oracle_value!r}"
                    )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    payload = "\n".join(rows) + "\n"
    try:
        if args.out == "-":
            sys.stdout.write(payload)
        else:
            Path(args.out).write_text(payload)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigenloc",
        description="Eigenvalue inclusion regions and closed-form graph spectral bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser("bounds", help="closed-form bound report for a graph")
    _add_graph_source(p_bounds)
    p_bounds.add_argument("--matrix", choices=sorted(_KINDS), required=True)
    p_bounds.add_argument("--mode", choices=("published", "corrected"), default="published")
    p_bounds.add_argument("--format", choices=("json", "csv"), default="json")
    p_bounds.set_defaults(func=_cmd_bounds)

    p_regions = sub.add_parser("regions", help="inclusion region of a matrix")
    p_regions.add_argument("--matrix-file", required=True, help="matrix JSON file")
    p_regions.add_argument("--method", choices=_REGION_METHODS, required=True)
    p_regions.add_argument("--emit", choices=("json", "svg"), default="json")
    p_regions.add_argument("--window", help="SVG window as 'x0:x1:y0:y1'")
    p_regions.add_argument("--out", help="output file (default: stdout)")
    p_regions.set_defaults(func=_cmd_regions)

    p_verify = sub.add_parser("verify", help="check bounds/regions against the oracle")
    _add_graph_source(p_verify)
    p_verify.add_argument("--matrix-file", help="matrix JSON file instead of a graph")
    p_verify.add_argument("--scope", default="all", help="'all' or comma-separated check names")
    p_verify.add_argument("--tol", type=float, default=1e-8)
    p_verify.add_argument("--mode", choices=("published", "corrected"), default="published")
    p_verify.set_defaults(func=_cmd_verify)

    p_sweep = sub.add_parser("sweep", help="bounds-vs-oracle CSV across family ranges")
    p_sweep.add_argument("spec", nargs="+", help="family:lo..hi[:step] or 'petersen'")
    p_sweep.add_argument("--matrix", choices=sorted(_KINDS), required=True)
    p_sweep.add_argument("--mode", choices=("published", "corrected"), default="published")
    p_sweep.add_argument("--out", required=True, help="CSV path, or '-' for stdout")
    p_sweep.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
