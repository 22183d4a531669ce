"""Graph values, deterministic generators and file readers.

Vertices are labelled ``1..n`` everywhere in the public API.  Edges are kept as
an ``(m, 2)`` integer array with ``u < v`` in lexicographic order, which keeps
large generated graphs (the Hadamard graph on ``{0,1}^12`` has about two
million edges) cheap to hold.
"""

from __future__ import annotations

import logging
import re
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from chromatic_bounds.errors import InputError, ParseError

log = logging.getLogger(__name__)


class Graph:
    """Immutable simple undirected graph on vertices ``1..n``."""

    __slots__ = ("_n", "_edges", "_name")

    def __init__(self, n: int, edges: np.ndarray | Iterable[tuple[int, int]] = (), name: str | None = None):
        if int(n) != n or n < 0:
            raise InputError(f"vertex count must be a non-negative integer, got {n!r}")
        n = int(n)
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        if arr.size == 0:
            arr = np.zeros((0, 2), dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise InputError("edges must be a sequence of (u, v) pairs")
        if arr.size and (arr.min() < 1 or arr.max() > n):
            bad = arr[(arr < 1).any(axis=1) | (arr > n).any(axis=1)][0]
            raise InputError(f"edge ({bad[0]}, {bad[1]}) has a vertex outside 1..{n}")
        if (arr[:, 0] == arr[:, 1]).any():
            v = int(arr[arr[:, 0] == arr[:, 1]][0, 0])
            raise InputError(f"self-loop at vertex {v}")
        arr = np.sort(arr, axis=1)
        arr = np.unique(arr, axis=0) if len(arr) else arr
        arr.setflags(write=False)
        self._n = n
        self._edges = arr
        self._name = name

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> np.ndarray:
        return self._edges

    @property
    def name(self) -> str | None:
        return self._name

    def edge_list(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self._edges]

    def degrees(self) -> np.ndarray:
        """Degree of vertex ``k`` at index ``k - 1``."""
        return np.bincount(self._edges.ravel() - 1, minlength=self._n) if self.m else np.zeros(self._n, int)

    def neighbor_masks(self) -> list[int]:
        """Bitset of neighbours per vertex, 0-based (bit ``j`` set means ``j + 1`` is adjacent)."""
        masks = [0] * self._n
        for u, v in self._edges:
            masks[u - 1] |= 1 << int(v - 1)
            masks[v - 1] |= 1 << int(u - 1)
        return masks

    def with_name(self, name: str) -> "Graph":
        return Graph(self._n, self._edges, name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._edges, other._edges)

    def __hash__(self) -> int:
        return hash((self._n, self._edges.tobytes()))

    def __repr__(self) -> str:
        label = f"{self._name!r}, " if self._name else ""
        return f"Graph({label}n={self._n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]], name: str | None = None) -> Graph:
    """Build a graph, collapsing duplicate and reversed pairs."""
    return Graph(n, [(int(u), int(v)) for u, v in pairs], name)


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    if g.m:
        u = g.edges[:, 0] - 1
        v = g.edges[:, 1] - 1
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


# --- weights ---------------------------------------------------------------

def as_weight_matrix(w: np.ndarray | Sequence[Sequence[float]], n: int | None = None) -> np.ndarray:
    """Validate a real symmetric weight matrix (exact symmetry required)."""
    w = np.asarray(w, dtype=float)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise InputError(f"weight matrix must be square, got shape {w.shape}")
    if n is not None and w.shape[0] != n:
        raise InputError(f"weight matrix is {w.shape[0]}x{w.shape[0]}, graph has {n} vertices")
    if not np.array_equal(w, w.T):
        raise InputError("weight matrix must be exactly symmetric")
    return w


def random_weights(n: int, seed, low: float = -1.0, high: float = 1.0) -> np.ndarray:
    """Seeded symmetric weights drawn uniformly, upper triangle in row-major order."""
    rng = np.random.default_rng(seed)
    w = np.zeros((n, n))
    iu = np.triu_indices(n)
    w[iu] = rng.uniform(low, high, size=len(iu[0]))
    return np.triu(w) + np.triu(w, 1).T


def schur_product(w: np.ndarray, a: np.ndarray) -> np.ndarray:
    w = np.asarray(w)
    a = np.asarray(a)
    if w.shape != a.shape:
        raise InputError(f"dimension mismatch: W is {w.shape}, A is {a.shape}")
    return w * a


# --- readers ---------------------------------------------------------------

def _lines(text: str | bytes) -> list[str]:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    return text.splitlines()


def parse_dimacs(text: str | bytes, name: str | None = None) -> Graph:
    """Parse DIMACS ``.col`` text (``c`` comments, one ``p edge n m`` line, ``e u v`` lines)."""
    n = declared_m = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(_lines(text), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise ParseError("duplicate 'p' line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError(f"expected 'p edge <n> <m>', got {raw.strip()!r}", lineno)
            try:
                n, declared_m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError(f"non-integer size in {raw.strip()!r}", lineno) from None
            if n < 0 or declared_m < 0:
                raise ParseError("negative size in 'p' line", lineno)
        elif kind == "e":
            if n is None:
                raise ParseError("edge line before 'p' line", lineno)
            if len(tokens) != 3:
                raise ParseError(f"expected 'e <u> <v>', got {raw.strip()!r}", lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(f"non-integer vertex in {raw.strip()!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex out of range 1..{n} in {raw.strip()!r}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            pairs.append((u, v))
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge <n> <m>' line")
    g = from_edge_list(n, pairs, name)
    if g.m != declared_m:
        log.warning("DIMACS header declares %d edges, parsed %d distinct edges", declared_m, g.m)
    return g


def parse_edge_list(text: str | bytes, name: str | None = None) -> Graph:
    """Plain edge list: ``n`` on the first non-blank line, then one ``u v`` pair per line.

    Lines starting with ``#`` are comments.
    """
    n = None
    pairs = []
    for lineno, raw in enumerate(_lines(text), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise ParseError(f"non-integer token in {raw.strip()!r}", lineno) from None
        if n is None:
            if len(values) != 1 or values[0] < 0:
                raise ParseError("first line must hold the vertex count", lineno)
            n = values[0]
            continue
        if len(values) != 2:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", lineno)
        u, v = values
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex out of range 1..{n} in {raw.strip()!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        pairs.append((u, v))
    if n is None:
        raise ParseError("empty edge list (missing vertex count)")
    return from_edge_list(n, pairs, name)


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"] + [f"e {u} {v}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


# --- generators ------------------------------------------------------------

def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(n, list(combinations(range(1, n + 1), 2)), f"complete:{n}")


def empty(n: int) -> Graph:
    _require(n >= 1, f"empty graph needs n >= 1, got {n}")
    return Graph(n, [], f"empty:{n}")


def complete_multipartite(parts: Sequence[int]) -> Graph:
    _require(len(parts) >= 1 and all(r >= 1 for r in parts), f"part sizes must be positive, got {list(parts)}")
    label = np.repeat(np.arange(len(parts)), parts)
    n = len(label)
    edges = [(u + 1, v + 1) for u, v in combinations(range(n), 2) if label[u] != label[v]]
    return Graph(n, edges, "complete_multipartite:" + ",".join(map(str, parts)))


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, [(k, k % n + 1) for k in range(1, n + 1)], f"cycle:{n}")


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, [(k, k + 1) for k in range(1, n)], f"path:{n}")


def star(n: int) -> Graph:
    """Star on ``n`` vertices (``K_{1,n-1}``), centre is vertex 1."""
    _require(n >= 1, f"star needs n >= 1, got {n}")
    return Graph(n, [(1, k) for k in range(2, n + 1)], f"star:{n}")


def wheel(n: int) -> Graph:
    """Hub vertex 1 joined to a cycle on vertices ``2..n``."""
    _require(n >= 4, f"wheel needs n >= 4, got {n}")
    rim = [(k, k + 1) for k in range(2, n)] + [(n, 2)]
    return Graph(n, rim + [(1, k) for k in range(2, n + 1)], f"wheel:{n}")


def kneser(p: int, k: int) -> Graph:
    """``KG_{p,k}``: k-subsets of ``{1..p}`` in lexicographic order, adjacent when disjoint."""
    _require(k >= 1 and p >= 2 * k, f"kneser needs p >= 2k and k >= 1, got p={p}, k={k}")
    subsets = [frozenset(s) for s in combinations(range(1, p + 1), k)]
    edges = [(i + 1, j + 1) for i, j in combinations(range(len(subsets)), 2) if not subsets[i] & subsets[j]]
    return Graph(len(subsets), edges, f"kneser:{p}:{k}")


def petersen() -> Graph:
    return kneser(5, 2).with_name("petersen")


def hamming_vertex_bits(index: int, N: int) -> tuple[int, ...]:
    """Bit vector ``(k_1..k_N)`` of 1-based vertex ``index`` in the Hadamard/hypercube labelling.

    Vertex ``i`` encodes the binary expansion of ``i - 1`` with ``k_1`` the most
    significant bit.
    """
    x = index - 1
    return tuple((x >> (N - 1 - s)) & 1 for s in range(N))


def _hamming_graph(N: int, distance: int, name: str) -> Graph:
    size = 1 << N
    masks = np.array([sum(1 << b for b in c) for c in combinations(range(N), distance)], dtype=np.int64)
    u = np.repeat(np.arange(size, dtype=np.int64), len(masks))
    v = u ^ np.tile(masks, size)
    keep = u < v
    edges = np.stack([u[keep], v[keep]], axis=1) + 1
    return Graph(size, edges, name)


def hadamard(N: int) -> Graph:
    """Vertices ``{0,1}^N``, edges at Hamming distance exactly ``N/2``."""
    _require(N >= 2 and N % 2 == 0, f"hadamard needs an even N >= 2, got {N}")
    return _hamming_graph(N, N // 2, f"hadamard:{N}")


def hypercube(d: int) -> Graph:
    _require(d >= 1, f"hypercube needs d >= 1, got {d}")
    return _hamming_graph(d, 1, f"hypercube:{d}")


def barbell(k: int, bridge: int = 0) -> Graph:
    """Two copies of ``K_k`` joined by a path through ``bridge`` extra vertices.

    ``bridge=0`` (the default) joins vertex 1 of the first clique to vertex
    ``k + 1`` of the second by a single edge, giving ``n = 2k`` and
    ``m = k(k-1) + 1``.
    """
    _require(k >= 2 and bridge >= 0, f"barbell needs k >= 2 and bridge >= 0, got k={k}, bridge={bridge}")
    n = 2 * k + bridge
    second = k + bridge
    edges = list(combinations(range(1, k + 1), 2))
    edges += [(second + i, second + j) for i, j in combinations(range(1, k + 1), 2)]
    chain = [1] + [k + t for t in range(1, bridge + 1)] + [second + 1]
    edges += list(zip(chain, chain[1:]))
    name = f"barbell:{k}" if bridge == 0 else f"barbell:{k}:{bridge}"
    return Graph(n, edges, name)


FANO_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))


def coxeter() -> Graph:
    """Coxeter graph: 3-subsets of ``{1..7}`` that are not Fano lines, adjacent when disjoint."""
    lines = {frozenset(t) for t in FANO_LINES}
    subsets = [frozenset(s) for s in combinations(range(1, 8), 3) if frozenset(s) not in lines]
    edges = [(i + 1, j + 1) for i, j in combinations(range(len(subsets)), 2) if not subsets[i] & subsets[j]]
    return Graph(len(subsets), edges, "coxeter")


def gnp(n: int, p: float, seed: int | Sequence[int]) -> Graph:
    """Erdos-Renyi ``G(n, p)``.

    Draws ``C(n,2)`` uniforms from ``numpy.random.default_rng(seed)`` (PCG64) in one
    call and visits pairs in lexicographic order ``(1,2), (1,3), ..., (n-1,n)``;
    pair ``i`` is an edge when draw ``i`` is ``< p``.
    """
    _require(n >= 1, f"gnp needs n >= 1, got {n}")
    _require(0.0 <= p <= 1.0, f"gnp needs 0 <= p <= 1, got {p}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, 1)
    draws = rng.random(len(iu))
    sel = draws < p
    seed_label = seed if isinstance(seed, int) else "-".join(map(str, seed))
    return Graph(n, np.stack([iu[sel], ju[sel]], axis=1) + 1, f"gnp:{n}:{p}:{seed_label}")


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph whose edges are the set bits of ``mask`` over lexicographic pairs."""
    pairs = list(combinations(range(1, n + 1), 2))
    _require(0 <= mask < (1 << len(pairs)), f"mask out of range for n={n}")
    return Graph(n, [pr for b, pr in enumerate(pairs) if mask >> b & 1], f"mask:{n}:{mask}")


def all_graphs(max_n: int) -> Iterable[Graph]:
    """Every labelled graph on ``1..max_n`` vertices (``2^C(n,2)`` per ``n``), no dedup."""
    for n in range(1, max_n + 1):
        for mask in range(1 << comb(n, 2)):
            yield graph_from_mask(n, mask)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InputError(message)


_FAMILY_RE = re.compile(r"^\s*([a-z_]+)\s*(?::(.*))?$")


def generate(family: str) -> Graph:
    """Build a graph from a family spec such as ``"kneser:5:2"`` or ``"gnp:10:0.85:3"``.

    Families: ``complete:n``, ``empty:n``, ``complete_multipartite:r1,r2,...``,
    ``cycle:n``, ``path:n``, ``star:n``, ``wheel:n``, ``kneser:p:k``, ``petersen``,
    ``hadamard:N``, ``hypercube:d``, ``barbell:k[:bridge]``, ``coxeter``,
    ``gnp:n:p:seed``.
    """
    match = _FAMILY_RE.match(family)
    if not match:
        raise InputError(f"cannot parse family spec {family!r}")
    kind, rest = match.group(1), match.group(2)
    args = [a.strip() for a in rest.split(":")] if rest else []
    try:
        if kind == "complete_multipartite":
            _require(len(args) == 1, "complete_multipartite takes one comma-separated list")
            return complete_multipartite([int(x) for x in args[0].split(",")])
        if kind == "gnp":
            _require(len(args) == 3, "gnp takes n:p:seed")
            return gnp(int(args[0]), float(args[1]), int(args[2]))
        simple = {
            "complete": (complete, 1),
            "empty": (empty, 1),
            "cycle": (cycle, 1),
            "path": (path, 1),
            "star": (star, 1),
            "wheel": (wheel, 1),
            "kneser": (kneser, 2),
            "hadamard": (hadamard, 1),
            "hypercube": (hypercube, 1),
            "petersen": (petersen, 0),
            "coxeter": (coxeter, 0),
        }
        if kind == "barbell":
            _require(len(args) in (1, 2), "barbell takes k or k:bridge")
            return barbell(*(int(a) for a in args))
        if kind not in simple:
            raise InputError(f"unknown graph family {kind!r}")
        fn, arity = simple[kind]
        _require(len(args) == arity, f"{kind} takes {arity} integer argument(s), got {len(args)}")
        return fn(*(int(a) for a in args))
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad parameters in family spec {family!r}: {exc}") from None
