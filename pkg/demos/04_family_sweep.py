"""Bounds-vs-oracle slack across whole graph families, as a CSV dataset.

Uses the same machinery as ``eigenloc sweep`` and then summarizes, per
theorem, how tight each bound runs over the family range.  Shows, for
instance, that the two-trace Laplacian bound pins the largest eigenvalue
of every star exactly, and that the common-neighbour bounds are sharp for
complete graphs only.

Run:  python demos/04_family_sweep.py
"""

from collections import defaultdict
from pathlib import Path

from eigenloc.cli import main

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

jobs = [
    ("adjacency", ["complete:3..12", "cycle:3..16", "petersen"]),
    ("normalized", ["star:4..12", "cycle:4..20:2", "complete_bipartite:4..10"]),
    ("laplacian", ["star:4..12", "complete:3..10", "path:4..12"]),
]

for kind, specs in jobs:
    out = OUT / f"sweep_{kind}.csv"
    code = main(["sweep", *specs, "--matrix", kind, "--out", str(out)])
    assert code == 0
    rows = out.read_text().strip().splitlines()[1:]
    stats = defaultdict(lambda: [0, 0.0, 0.0])
    for row in rows:
        fields = row.split(",")
        theorem, target = fields[2], fields[3]
        slack_lower, slack_upper = float(fields[7]), float(fields[8])
        entry = stats[(theorem, target)]
        entry[0] += 1
        entry[1] = max(entry[1], slack_lower)
        entry[2] = max(entry[2], slack_upper)
    print(f"\n=== {kind} ({', '.join(specs)}) -> {out.name}, {len(rows)} rows ===")
    print(f"  {'theorem':<8} {'target':<16} {'rows':>4}  worst lower/upper slack")
    for (theorem, target), (count, lo, hi) in sorted(stats.items()):
        print(f"  {theorem:<8} {target:<16} {count:>4}  {lo:10.4f} / {hi:10.4f}")
