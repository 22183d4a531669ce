"""Slow, obviously-correct reference computations used to check the library.

Nothing here imports the solvers under test.
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np


def brute_chromatic(n: int, edges) -> int:
    """Smallest c such that some restricted-growth string with max < c is a proper coloring."""
    edges = [(u - 1, v - 1) for u, v in edges]
    if n == 0:
        return 0
    for c in range(1, n + 1):
        for colors in _rgs(n, c):
            if all(colors[u] != colors[v] for u, v in edges):
                return c
    return n


def _rgs(n: int, c: int):
    """Restricted growth strings: color[0] = 0, color[i] <= 1 + max(previous), all < c."""
    colors = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield tuple(colors)
            return
        for k in range(min(top + 2, c)):
            colors[i] = k
            yield from rec(i + 1, max(top, k))

    yield from rec(1, 0)


def brute_alpha(n: int, edges) -> int:
    edge_set = {frozenset(e) for e in edges}
    for size in range(n, 0, -1):
        for s in combinations(range(1, n + 1), size):
            if all(frozenset(p) not in edge_set for p in combinations(s, 2)):
                return size
    return 0


def popcount_hadamard_edges(N: int) -> set[tuple[int, int]]:
    """Pairs of 1-based vertices whose (i-1) bit patterns differ in exactly N/2 places."""
    out = set()
    for i, j in combinations(range(1 << N), 2):
        if bin(i ^ j).count("1") == N // 2:
            out.add((i + 1, j + 1))
    return out


def cycle_spectrum(n: int) -> np.ndarray:
    return np.sort(2 * np.cos(2 * np.pi * np.arange(n) / n))[::-1]


def reference_eigenvalues(a) -> np.ndarray:
    return np.sort(np.linalg.eigvalsh(np.asarray(a, dtype=float)))[::-1]


def hoffman_from_values(values) -> float:
    v = np.sort(np.asarray(values))[::-1]
    return 1 + v[0] / -v[-1]


def ratio_from_values(values, tol: float = 1e-9) -> float:
    v = np.asarray(values)
    sp = float(np.sum(v[v > tol] ** 2))
    sm = float(np.sum(v[v < -tol] ** 2))
    return sp / sm


def all_colorings(n: int, c: int):
    return product(range(1, c + 1), repeat=n)
