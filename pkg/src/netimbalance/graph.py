"""Undirected simple graphs, topology generators and edge-list I/O.

Graphs are immutable values: every node id is in ``0..n-1`` and each
adjacency row is a sorted tuple. Random generators are pure functions of
their parameters and a 64-bit seed.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidParameter, ParseError

log = logging.getLogger(__name__)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise InvalidParameter(f"adjacency has {len(self.adjacency)} rows for n={self.n}")

    @property
    def m(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adjacency[u]
        # rows are sorted; linear scan is fine for the degrees we see
        return v in row

    def edges(self) -> list[Edge]:
        """Unordered edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u, row in enumerate(self.adjacency) for v in row if u < v]

    def label(self, node: int) -> str:
        return self.labels[node] if self.labels is not None else str(node)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the isomorphic graph where node ``i`` becomes ``perm[i]``."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidParameter("perm must be a permutation of 0..n-1")
        return from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])


def from_edges(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a graph from unordered edges; rejects loops, duplicates and bad ids."""
    if n < 0:
        raise InvalidParameter("n must be >= 0")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidParameter(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise InvalidParameter(f"self-loop at node {u}")
        if v in nbrs[u]:
            raise InvalidParameter(f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def _rng(seed: int) -> np.random.Generator:
    if not 0 <= int(seed) < 2**64:
        raise InvalidParameter("seed must be a 64-bit unsigned integer")
    return np.random.default_rng(int(seed))


def _check_count(name: str, value: int, minimum: int) -> None:
    if int(value) != value or value < minimum:
        raise InvalidParameter(f"{name} must be an integer >= {minimum}, got {value}")


def _check_prob(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise InvalidParameter(f"probability must lie in [0, 1], got {p}")


# -- deterministic topologies ------------------------------------------------

def complete(n: int) -> Graph:
    _check_count("n", n, 1)
    return Graph(n, tuple(tuple(v for v in range(n) if v != u) for u in range(n)))


def path(n: int) -> Graph:
    _check_count("n", n, 1)
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def ring(n: int) -> Graph:
    _check_count("n", n, 3)
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star with hub 0 and leaves ``1..n-1``."""
    _check_count("n", n, 2)
    return from_edges(n, [(0, i) for i in range(1, n)])


# -- random models -------------------------------------------------------------

def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): one uniform draw per unordered pair, in lexicographic pair order."""
    _check_count("n", n, 1)
    _check_prob(p)
    rng = _rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def barabasi_albert(n: int, m_attach: int, seed: int) -> Graph:
    """Preferential attachment grown from a complete seed graph.

    The seed is K_{m_attach} (K_2 when ``m_attach == 1``). Each new node picks
    ``m_attach`` distinct targets, one degree-proportional draw at a time,
    excluding targets already picked for that node.
    """
    _check_count("n", n, 1)
    if not 1 <= m_attach < n:
        raise InvalidParameter(f"need 1 <= m_attach < n, got m_attach={m_attach}, n={n}")
    rng = _rng(seed)
    n_seed = max(m_attach, 2)
    edges = [(u, v) for u in range(n_seed) for v in range(u + 1, n_seed)]
    degree = np.zeros(n, dtype=float)
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    for new in range(n_seed, n):
        weights = degree[:new].copy()
        targets = []
        for _ in range(m_attach):
            t = int(rng.choice(new, p=weights / weights.sum()))
            targets.append(t)
            weights[t] = 0.0
        for t in targets:
            edges.append((t, new))
            degree[t] += 1
        degree[new] = m_attach
    return from_edges(n, edges)


def watts_strogatz(n: int, k: int, p: float, seed: int) -> Graph:
    """Ring lattice with ``k/2`` neighbours per side, each lattice edge rewired w.p. ``p``.

    Lattice edges ``(i, i+j)`` are visited for ``j = 1..k/2`` (outer) and
    ``i = 0..n-1`` (inner). A rewired edge keeps endpoint ``i`` and moves its
    other end to a uniform node that is neither ``i`` nor a current neighbour.
    """
    _check_count("n", n, 1)
    _check_prob(p)
    if k % 2 or not 0 < k < n:
        raise InvalidParameter(f"k must be even with 0 < k < n, got k={k}, n={n}")
    rng = _rng(seed)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        for j in range(1, k // 2 + 1):
            nbrs[i].add((i + j) % n)
            nbrs[(i + j) % n].add(i)
    for j in range(1, k // 2 + 1):
        for i in range(n):
            v = (i + j) % n
            if rng.random() >= p or v not in nbrs[i]:
                continue
            if len(nbrs[i]) >= n - 1:
                continue
            allowed = [w for w in range(n) if w != i and w not in nbrs[i]]
            w = allowed[int(rng.integers(len(allowed)))]
            nbrs[i].discard(v)
            nbrs[v].discard(i)
            nbrs[i].add(w)
            nbrs[w].add(i)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n


def _cluster(size: int, topology: str, p: float, rng: np.random.Generator) -> list[Edge]:
    if topology == "complete":
        return complete(size).edges()
    if topology == "ring":
        return ring(size).edges()
    if topology == "er":
        _check_prob(p)
        if p == 0.0:
            raise InvalidParameter("er cluster with p=0 can never be connected")
        while True:
            g = erdos_renyi(size, p, int(rng.integers(2**63)))
            if is_connected(g):
                return g.edges()
    raise InvalidParameter(f"unknown cluster topology {topology!r}")


def dumbbell(
    cluster_size: int, topology: str = "er", p: float = 0.15, seed: int = 0
) -> tuple[Graph, Edge]:
    """Two clusters joined by the single bridge ``(0, cluster_size)``.

    Nodes ``0..cluster_size-1`` are cluster A and the rest cluster B. ER
    clusters are redrawn until internally connected.
    """
    _check_count("cluster_size", cluster_size, 2)
    if topology == "ring" and cluster_size < 3:
        raise InvalidParameter("ring clusters need cluster_size >= 3")
    rng = _rng(seed)
    a = _cluster(cluster_size, topology, p, rng)
    b = _cluster(cluster_size, topology, p, rng)
    s = cluster_size
    bridge = (0, s)
    edges = a + [(u + s, v + s) for u, v in b] + [bridge]
    return from_edges(2 * s, edges), bridge


# -- mutation (value semantics) ----------------------------------------------------

def add_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise InvalidParameter(f"node out of range: ({u}, {v})")
    if u == v:
        raise InvalidParameter(f"self-loop at node {u}")
    if g.has_edge(u, v):
        raise InvalidParameter(f"edge ({u}, {v}) already present")
    adj = list(g.adjacency)
    adj[u] = tuple(sorted(adj[u] + (v,)))
    adj[v] = tuple(sorted(adj[v] + (u,)))
    return Graph(g.n, tuple(adj), g.labels)


def non_edges(g: Graph) -> list[Edge]:
    out = []
    for u in range(g.n):
        present = set(g.adjacency[u])
        out.extend((u, v) for v in range(u + 1, g.n) if v not in present)
    return out


# -- edge-list files ------------------------------------------------------------

_NODES_DIRECTIVE = re.compile(r"#\s*nodes\s*[:=]\s*(\d+)\s*$")


@dataclass(frozen=True)
class EdgeListParse:
    graph: Graph
    duplicates: int
    self_loops: int


def parse_edge_list(text: str) -> EdgeListParse:
    """Parse whitespace-separated edge lines into a dense-id graph.

    Tokens are mapped to ids in order of first appearance; ``graph.labels``
    keeps the original tokens. A ``# nodes: N`` comment pre-registers the
    tokens ``"0".."N-1"`` so that isolated nodes survive a round trip.
    """
    ids: dict[str, int] = {}
    seen: set[Edge] = set()
    edges: list[Edge] = []
    duplicates = self_loops = 0

    def node(tok: str) -> int:
        if tok not in ids:
            ids[tok] = len(ids)
        return ids[tok]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            directive = _NODES_DIRECTIVE.match(line)
            if directive:
                for i in range(int(directive.group(1))):
                    node(str(i))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 2 node tokens, got {len(parts)}: {raw!r}", lineno)
        u, v = node(parts[0]), node(parts[1])
        if u == v:
            self_loops += 1
            continue
        key = (min(u, v), max(u, v))
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        edges.append(key)

    n = len(ids)
    g = from_edges(n, edges)
    labels = tuple(sorted(ids, key=ids.__getitem__))
    return EdgeListParse(Graph(g.n, g.adjacency, labels), duplicates, self_loops)


def from_edge_list(text: str) -> Graph:
    parsed = parse_edge_list(text)
    if parsed.duplicates or parsed.self_loops:
        log.warning(
            "edge list: dropped %d duplicate edge(s) and %d self-loop(s)",
            parsed.duplicates,
            parsed.self_loops,
        )
    return parsed.graph


def read_edge_list(filename) -> Graph:
    with open(filename, encoding="utf-8") as fh:
        return from_edge_list(fh.read())


def to_edge_list(g: Graph) -> str:
    """Serialize with integer ids and a ``# nodes: N`` header."""
    lines = [f"# nodes: {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
