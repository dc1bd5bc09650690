"""All-pairs shortest hop counts, compressed into a hop histogram.

Every downstream formula only needs ``N_h``, the number of ordered pairs at
hop distance ``h``, plus the number of unreachable ordered pairs, so the
n-by-n hop matrix is never kept around except by :func:`hop_matrix`.
"""

from __future__ import annotations

import math
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import InvalidParameter
from .graph import Graph

UNREACHABLE = -1
"""Hop value marking an unreachable node; never a valid hop count."""

_CHUNK = 256


@dataclass(frozen=True)
class HopHistogram:
    n: int
    counts: dict[int, int] = field(default_factory=dict)
    unreachable: int = 0

    def __post_init__(self):
        if any(h < 1 or c <= 0 for h, c in self.counts.items()):
            raise InvalidParameter("counts must map hops >= 1 to positive counts")
        if sum(self.counts.values()) + self.unreachable != self.pairs:
            raise InvalidParameter("counts + unreachable must equal n(n-1)")
        # normalise key order so equal histograms compare and serialize equally
        object.__setattr__(self, "counts", dict(sorted(self.counts.items())))

    @property
    def pairs(self) -> int:
        """Number of ordered node pairs, n(n-1)."""
        return self.n * (self.n - 1)

    @property
    def reachable(self) -> int:
        return self.pairs - self.unreachable

    def hops(self) -> np.ndarray:
        return np.fromiter(self.counts.keys(), dtype=float, count=len(self.counts))

    def multiplicities(self) -> np.ndarray:
        return np.fromiter(self.counts.values(), dtype=float, count=len(self.counts))

    def to_csv(self) -> str:
        rows = ["h,count"]
        rows.extend(f"{h},{c}" for h, c in self.counts.items())
        rows.append(f"unreachable,{self.unreachable}")
        return "\n".join(rows) + "\n"

    @classmethod
    def from_csv(cls, text: str, n: int) -> "HopHistogram":
        counts: dict[int, int] = {}
        unreachable = 0
        for line in text.strip().splitlines()[1:]:
            key, value = line.split(",")
            if key == "unreachable":
                unreachable = int(value)
            else:
                counts[int(key)] = int(value)
        return cls(n, counts, unreachable)


def bfs_hops(g: Graph, source: int) -> list[int]:
    """Hop count from ``source`` to every node; :data:`UNREACHABLE` where no path exists."""
    if not 0 <= source < g.n:
        raise InvalidParameter(f"source {source} out of range for n={g.n}")
    hops = [UNREACHABLE] * g.n
    hops[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        nxt = hops[u] + 1
        for v in g.adjacency[u]:
            if hops[v] == UNREACHABLE:
                hops[v] = nxt
                queue.append(v)
    return hops


def _csr(g: Graph) -> csr_matrix:
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    np.cumsum([len(row) for row in g.adjacency], out=indptr[1:])
    indices = np.fromiter(
        (v for row in g.adjacency for v in row), dtype=np.int32, count=int(indptr[-1])
    )
    data = np.ones(indices.size, dtype=float)
    return csr_matrix((data, indices, indptr), shape=(g.n, g.n))


def _chunk_counts(adj: csr_matrix, sources: np.ndarray) -> tuple[np.ndarray, int]:
    dist = shortest_path(adj, method="D", directed=False, unweighted=True, indices=sources)
    finite = np.isfinite(dist)
    unreachable = int(dist.size - finite.sum())
    counts = np.bincount(dist[finite].astype(np.int64))
    return counts, unreachable


def default_threads() -> int:
    """Worker count from ``NETIMB_THREADS``, else the number of CPUs."""
    env = os.environ.get("NETIMB_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def all_pairs_histogram(g: Graph, threads: int | None = 1) -> HopHistogram:
    """Run a BFS from every source and aggregate the hop counts.

    Sources are processed in fixed-size chunks, optionally on a thread pool;
    chunk results are merged in source order so the output does not depend
    on ``threads``. ``threads=None`` uses :func:`default_threads`.
    """
    if g.n <= 1:
        return HopHistogram(g.n)
    adj = _csr(g)
    chunks = [np.arange(s, min(s + _CHUNK, g.n)) for s in range(0, g.n, _CHUNK)]
    workers = default_threads() if threads is None else max(1, threads)
    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda c: _chunk_counts(adj, c), chunks))
    else:
        parts = [_chunk_counts(adj, c) for c in chunks]

    total = np.zeros(max(len(c) for c, _ in parts), dtype=np.int64)
    unreachable = 0
    for c, u in parts:
        total[: len(c)] += c
        unreachable += u
    # hop 0 is each node's distance to itself
    counts = {h: int(c) for h, c in enumerate(total) if h >= 1 and c > 0}
    return HopHistogram(g.n, counts, unreachable)


def hop_matrix(g: Graph) -> np.ndarray:
    """Full hop matrix with :data:`UNREACHABLE` entries; for debugging and small graphs."""
    out = np.full((g.n, g.n), UNREACHABLE, dtype=np.int64)
    for s in range(g.n):
        out[s] = bfs_hops(g, s)
    return out


def diameter(hist: HopHistogram) -> float:
    """Largest finite hop; ``math.inf`` if any pair is unreachable, 0 when ``n <= 1``."""
    if hist.n <= 1:
        return 0
    if hist.unreachable:
        return math.inf
    return max(hist.counts)


def hop_distribution(hist: HopHistogram) -> dict[int, float]:
    """``P(h) = N_h / (n(n-1))`` over finite hops."""
    if hist.n < 2:
        raise InvalidParameter("hop distribution needs n >= 2")
    return {h: c / hist.pairs for h, c in hist.counts.items()}
