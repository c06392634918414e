"""Render a small gallery of inclusion regions as SVG files.

Each picture shows the region's leaf boundaries (disks in blue, oval
polylines in orange, point leaves as green diamonds) with the true
eigenvalues as red dots.  Output lands in demos/out/.

Run:  python demos/03_region_gallery.py
"""

from pathlib import Path

import numpy as np

from eigenloc import (
    GraphMatrixKind,
    brauer_region,
    build_matrix,
    complex_eigenvalues,
    generate,
    gersgorin_region,
    rowsum_brauer_region,
    rowsum_gersgorin_region,
)
from eigenloc.cli import region_to_svg

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

ROWSUM = np.array(
    [
        [1.0, 1.0 + 1.0j, 1.0j],
        [1.0j, 2.0 + 1.0j, 0.0],
        [2.0, 1.0j, 1.0j],
    ]
)


def save(name, region, matrix):
    eigenvalues = complex_eigenvalues(matrix).values
    svg = region_to_svg(region, eigenvalues)
    path = OUT / f"{name}.svg"
    path.write_text(svg + "\n")
    print(f"wrote {path}")


save("rowsum3x3_gersgorin", gersgorin_region(ROWSUM), ROWSUM)
save("rowsum3x3_brauer", brauer_region(ROWSUM), ROWSUM)
save("rowsum3x3_deflated_disks", rowsum_gersgorin_region(ROWSUM), ROWSUM)
save("rowsum3x3_deflated_ovals", rowsum_brauer_region(ROWSUM), ROWSUM)

lap = build_matrix(generate("cycle", n=6), GraphMatrixKind.LAPLACIAN)
save("laplacian_c6_deflated_disks", rowsum_gersgorin_region(lap), lap)

rng = np.random.default_rng(7)
a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
gamma = a.sum(axis=1).mean()
a[:, -1] += gamma - a.sum(axis=1)
save("random4x4_deflated_ovals", rowsum_brauer_region(a), a)
