"""Shared fixtures for the test suite."""

import numpy as np
import pytest

# 3x3 complex matrix with constant row sum 2+2i; its first deflation is
# [[1, -i], [-1, 0]].  Used across the region and oracle tests.
ROWSUM_3X3 = np.array(
    [
        [1.0, 1.0 + 1.0j, 1.0j],
        [1.0j, 2.0 + 1.0j, 0.0],
        [2.0, 1.0j, 1.0j],
    ]
)

GAMMA_3X3 = 2.0 + 2.0j


@pytest.fixture
def rowsum_matrix():
    return ROWSUM_3X3.copy()


def random_constant_rowsum_matrix(rng, n):
    """Entries uniform in the unit square; last column fixes the row sum."""
    a = rng.random((n, n)) + 1j * rng.random((n, n))
    gamma = complex(a.sum(axis=1).mean())
    a[:, -1] += gamma - a.sum(axis=1)
    return a, gamma


def match_multisets(left, right, tol):
    """Greedy nearest matching of two complex multisets; max pair distance."""
    right = list(right)
    worst = 0.0
    for z in left:
        best = min(range(len(right)), key=lambda idx: abs(right[idx] - z))
        worst = max(worst, abs(right[best] - z))
        right.pop(best)
    assert worst <= tol, f"multisets differ by {worst:.3e} > {tol:.1e}"
    return worst


def random_region(rng):
    """Random region tree mixing disks, ovals and point sets (depth <= 3)."""
    from eigenloc.regions import (
        CassiniOval,
        Disk,
        PointSet,
        RegionIntersection,
        RegionUnion,
    )

    def leaf():
        kind = rng.integers(0, 3)
        if kind == 0:
            return Disk(
                complex(rng.uniform(-3, 3), rng.uniform(-2, 2)),
                float(rng.uniform(0, 2)),
            )
        if kind == 1:
            return CassiniOval(
                complex(rng.uniform(-3, 3), rng.uniform(-2, 2)),
                complex(rng.uniform(-3, 3), rng.uniform(-2, 2)),
                float(rng.uniform(0, 4)),
            )
        points = tuple(
            complex(rng.uniform(-3, 3), 0.0 if rng.random() < 0.5 else rng.uniform(-1, 1))
            for _ in range(rng.integers(1, 4))
        )
        return PointSet(points)

    def union():
        return RegionUnion(tuple(leaf() for _ in range(rng.integers(2, 5))))

    if rng.random() < 0.5:
        return union()
    return RegionIntersection(tuple(union() for _ in range(rng.integers(2, 4))))
