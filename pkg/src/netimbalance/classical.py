"""Baseline metrics the imbalance is compared against.

Path statistics are taken over reachable ordered pairs only. Jain's index
uses the same per-ordered-pair QoS weights as the imbalance, unreachable
pairs included with weight 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, InvalidParameter, UndefinedMetricError
from .graph import Graph
from .metric import QoSProfile, log_weight
from .paths import HopHistogram, all_pairs_histogram

EIGEN_CAP = 2000
"""Largest graph handed to the dense Laplacian eigensolver."""


def _finite(hist: HopHistogram) -> tuple[np.ndarray, np.ndarray]:
    if not hist.counts:
        raise UndefinedMetricError("no reachable pair")
    return hist.hops(), hist.multiplicities()


def average_path_length(hist: HopHistogram) -> float:
    hops, mult = _finite(hist)
    return float(np.sum(hops * mult) / np.sum(mult))


def path_variance(hist: HopHistogram) -> float:
    """Population variance of the finite hop counts."""
    hops, mult = _finite(hist)
    mean = np.sum(hops * mult) / np.sum(mult)
    return float(np.sum(mult * (hops - mean) ** 2) / np.sum(mult))


def jain_unfairness(hist: HopHistogram, profile: QoSProfile) -> float:
    """``1 - (sum w)^2 / (K sum w^2)`` over all ``K = n(n-1)`` ordered pairs."""
    if hist.n < 2:
        raise InvalidParameter("jain unfairness needs n >= 2")
    if not hist.counts:
        return 1.0
    hops, mult = _finite(hist)
    logw = log_weight(hops, profile)
    # rescale by the largest weight so tiny weights do not underflow when squared
    w = np.exp(logw - logw.max())
    s1 = np.sum(mult * w)
    s2 = np.sum(mult * w * w)
    jfi = s1 * s1 / (hist.pairs * s2)
    return float(min(1.0, max(0.0, 1.0 - jfi)))


def degree_gini(g: Graph) -> float:
    """Gini coefficient of the degree sequence."""
    k = np.sort(np.asarray(g.degrees(), dtype=float))
    total = k.sum()
    if total == 0:
        raise UndefinedMetricError("degree Gini undefined for a graph with no edges")
    n = k.size
    # sum_{i,j} |k_i - k_j| = 2 sum_i (2i - n + 1) k_(i) over the ascending order
    coef = 2.0 * np.arange(n) - n + 1
    return float(2.0 * np.sum(coef * k) / (2.0 * n * total))


def laplacian(g: Graph) -> np.ndarray:
    L = np.zeros((g.n, g.n))
    for u, row in enumerate(g.adjacency):
        L[u, u] = len(row)
        L[u, list(row)] = -1.0
    return L


def algebraic_connectivity(g: Graph) -> float:
    """Second-smallest eigenvalue of ``L = D - A``, clipped at 0."""
    if g.n < 2:
        raise InvalidParameter("algebraic connectivity needs n >= 2")
    if g.n > EIGEN_CAP:
        raise CapacityError(f"n={g.n} exceeds the dense eigensolver cap of {EIGEN_CAP}")
    vals = np.linalg.eigvalsh(laplacian(g))
    lam2 = float(vals[1])
    return 0.0 if lam2 < 1e-9 else lam2


@dataclass(frozen=True)
class ComparisonReport:
    avg_path_length: float
    path_variance: float
    jain_unfairness: float
    degree_gini: float
    lambda2: float | None
    reachable_fraction: float

    CSV_HEADER = "avg_path_length,path_variance,jain_unfairness,degree_gini,lambda2,reachable_fraction"

    def csv_row(self) -> str:
        lam2 = "" if self.lambda2 is None else repr(self.lambda2)
        return ",".join(
            [
                repr(self.avg_path_length),
                repr(self.path_variance),
                repr(self.jain_unfairness),
                repr(self.degree_gini),
                lam2,
                repr(self.reachable_fraction),
            ]
        )


def compare(g: Graph, profile: QoSProfile, hist: HopHistogram | None = None) -> ComparisonReport:
    """All comparison metrics for one graph.

    Undefined values (no reachable pair, no edges) are reported as NaN and
    ``lambda2`` is ``None`` above :data:`EIGEN_CAP`.
    """
    if hist is None:
        hist = all_pairs_histogram(g)
    if hist.counts:
        apl, var = average_path_length(hist), path_variance(hist)
    else:
        apl = var = math.nan
    gini = degree_gini(g) if g.m else math.nan
    lam2 = algebraic_connectivity(g) if g.n <= EIGEN_CAP else None
    return ComparisonReport(
        avg_path_length=apl,
        path_variance=var,
        jain_unfairness=jain_unfairness(hist, profile),
        degree_gini=gini,
        lambda2=lam2,
        reachable_fraction=hist.reachable / hist.pairs,
    )
