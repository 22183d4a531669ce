"""Exact chromatic and independence numbers for desk-scale graphs.

Both solvers are deterministic branch-and-bound searches with a node budget.
When the budget runs out they return the best bracket found so far instead of
raising.
"""

from __future__ import annotations

from dataclasses import dataclass

from chromatic_bounds.config import DEFAULT_CONFIG
from chromatic_bounds.errors import ImproperColoringError, InputError
from chromatic_bounds.graphs import Graph


@dataclass(frozen=True)
class Coloring:
    """``assignment[k - 1]`` is the color (``1..colors_used``) of vertex ``k``."""

    assignment: tuple[int, ...]

    @property
    def colors_used(self) -> int:
        return max(self.assignment, default=0)

    def color_of(self, vertex: int) -> int:
        return self.assignment[vertex - 1]

    def monochromatic_edge(self, g: Graph) -> tuple[int, int] | None:
        for u, v in g.edge_list():
            if self.assignment[u - 1] == self.assignment[v - 1]:
                return (u, v)
        return None

    def is_proper(self, g: Graph) -> bool:
        return len(self.assignment) == g.n and self.monochromatic_edge(g) is None

    def check_proper(self, g: Graph, colors: int | None = None) -> None:
        """Raise unless this is a proper coloring of ``g`` with colors in ``1..colors``."""
        if len(self.assignment) != g.n:
            raise InputError(f"coloring has {len(self.assignment)} entries, graph has {g.n} vertices")
        top = colors if colors is not None else self.colors_used
        bad = [c for c in self.assignment if not 1 <= c <= top]
        if bad:
            raise InputError(f"color {bad[0]} outside 1..{top}")
        edge = self.monochromatic_edge(g)
        if edge is not None:
            raise ImproperColoringError(edge, self.assignment[edge[0] - 1])


def parse_coloring(text: str) -> Coloring:
    """One integer color per line, line ``k`` for vertex ``k``; blank lines and ``#`` comments skipped."""
    colors = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        token = raw.split("#", 1)[0].strip()
        if not token:
            continue
        try:
            colors.append(int(token))
        except ValueError:
            raise InputError(f"line {lineno}: expected an integer color, got {token!r}") from None
    return Coloring(tuple(colors))


@dataclass(frozen=True)
class ExactResult:
    """Outcome of a budgeted exact search.

    ``value`` is set only when the search finished (``lower == upper``);
    ``witness`` realises ``upper`` (a coloring, or a vertex tuple for alpha/omega).
    """

    lower: int
    upper: int
    witness: object
    nodes: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.upper if self.exact else None


def greedy_coloring(g: Graph) -> Coloring:
    """Largest-degree-first greedy (ties by lowest vertex), smallest free color."""
    n = g.n
    adj = g.neighbor_masks()
    deg = g.degrees()
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    color = [0] * n
    for v in order:
        taken = {color[u] for u in _bits(adj[v]) if color[u]}
        c = 1
        while c in taken:
            c += 1
        color[v] = c
    return Coloring(tuple(color))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Budget(Exception):
    pass


def max_clique(adj: list[int], node_budget: int = DEFAULT_CONFIG.node_budget) -> ExactResult:
    """Maximum clique over bitset adjacency (0-based), greedy-coloring bound (Tomita-style).

    The witness is a tuple of 1-based vertices.
    """
    n = len(adj)
    if n == 0:
        return ExactResult(0, 0, (), 0)
    best: list[int] = []
    # greedy seed: repeatedly take the candidate with most neighbours inside the candidate set
    cand = (1 << n) - 1
    seed: list[int] = []
    while cand:
        v = max(_bits(cand), key=lambda x: ((adj[x] & cand).bit_count(), -x))
        seed.append(v)
        cand &= adj[v]
    best = seed
    nodes = 0

    def color_bound(p: int) -> list[tuple[int, int]]:
        """Sequential greedy coloring of candidate set; returns (vertex, color) in color order."""
        out = []
        color = 0
        rest = p
        while rest:
            color += 1
            q = rest
            while q:
                low = q & -q
                v = low.bit_length() - 1
                rest &= ~low
                q &= ~low
                q &= ~adj[v]
                out.append((v, color))
        return out

    def expand(clique: list[int], p: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise _Budget
        for v, c in reversed(color_bound(p)):
            if len(clique) + c <= len(best):
                return
            clique.append(v)
            newp = p & adj[v]
            if newp:
                expand(clique, newp)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            p &= ~(1 << v)

    try:
        expand([], (1 << n) - 1)
    except _Budget:
        upper = len(best) + max((c for _, c in color_bound((1 << n) - 1)), default=0)
        return ExactResult(len(best), min(n, upper), tuple(sorted(v + 1 for v in best)), nodes)
    return ExactResult(len(best), len(best), tuple(sorted(v + 1 for v in best)), nodes)


def clique_number(g: Graph, node_budget: int = DEFAULT_CONFIG.node_budget) -> ExactResult:
    return max_clique(g.neighbor_masks(), node_budget)


def independence_number(g: Graph, node_budget: int = DEFAULT_CONFIG.node_budget) -> ExactResult:
    """Exact alpha as the maximum clique of the complement graph."""
    full = (1 << g.n) - 1
    comp = [full & ~mask & ~(1 << v) for v, mask in enumerate(g.neighbor_masks())]
    return max_clique(comp, node_budget)


def chromatic_number(g: Graph, node_budget: int = DEFAULT_CONFIG.node_budget) -> ExactResult:
    """Exact chi by DSATUR branch and bound.

    The upper bound starts from :func:`greedy_coloring`, the lower bound from a
    maximum clique whose vertices are precolored ``1..omega``.  Branching picks
    the uncolored vertex of highest saturation, then highest degree, then
    lowest index, and tries existing colors before opening a new one.  The
    witness is a :class:`Coloring` achieving ``upper``.
    """
    n = g.n
    if n == 0:
        return ExactResult(0, 0, Coloring(()), 0)
    adj = g.neighbor_masks()
    deg = [m.bit_count() for m in adj]
    greedy = greedy_coloring(g)
    best_k = greedy.colors_used
    best = list(greedy.assignment)
    clique = max_clique(adj, node_budget)
    lower = clique.lower
    nodes = clique.nodes
    if lower >= best_k:
        return ExactResult(best_k, best_k, Coloring(tuple(best)), nodes)

    color = [0] * n
    # counts[v][c] = number of neighbours of v with color c; sat[v] = distinct colors seen
    counts = [[0] * (n + 2) for _ in range(n)]
    sat = [0] * n

    def assign(v: int, c: int) -> None:
        color[v] = c
        for u in _bits(adj[v]):
            row = counts[u]
            if row[c] == 0:
                sat[u] += 1
            row[c] += 1

    def unassign(v: int, c: int) -> None:
        color[v] = 0
        for u in _bits(adj[v]):
            row = counts[u]
            row[c] -= 1
            if row[c] == 0:
                sat[u] -= 1

    used = 0
    for i, v in enumerate(sorted(v - 1 for v in clique.witness)):
        assign(v, i + 1)
        used = i + 1
    uncolored = n - used

    def select() -> int:
        pick, key = -1, None
        for v in range(n):
            if color[v] == 0:
                k = (sat[v], deg[v], -v)
                if key is None or k > key:
                    pick, key = v, k
        return pick

    def search(k: int, remaining: int) -> None:
        nonlocal best_k, best, nodes
        nodes += 1
        if nodes > node_budget:
            raise _Budget
        if remaining == 0:
            if k < best_k:
                best_k, best = k, list(color)
            return
        v = select()
        row = counts[v]
        for c in range(1, min(k + 1, best_k - 1) + 1):
            if c >= best_k:
                break
            if row[c]:
                continue
            assign(v, c)
            search(max(k, c), remaining - 1)
            unassign(v, c)
            if best_k <= lower:
                return

    try:
        search(used, uncolored)
    except _Budget:
        return ExactResult(lower, best_k, Coloring(tuple(best)), nodes)
    return ExactResult(best_k, best_k, Coloring(tuple(best)), nodes)
