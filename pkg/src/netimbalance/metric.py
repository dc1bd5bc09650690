"""The network imbalance metric and its analytic companions.

For a QoS profile ``(a, h0)`` each ordered pair at hop ``d`` receives the
sigmoid weight ``w(d) = 1 / (1 + exp(a (d - h0)))`` (zero when unreachable).
Normalising the weights gives a distribution over all ``n(n-1)`` ordered
pairs; the imbalance is one minus its Shannon entropy divided by
``log2(n(n-1))``.

Everything is evaluated per hop value from a :class:`HopHistogram`, and in
log space, so extreme steepness values neither overflow nor underflow the
entropy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import expit, logsumexp

from .errors import InvalidParameter, NotConnectedError, UndefinedGradientError
from .graph import Graph
from .paths import UNREACHABLE, HopHistogram, all_pairs_histogram

LN2 = math.log(2.0)


@dataclass(frozen=True)
class QoSProfile:
    """Sigmoid steepness ``a`` and ideal hop threshold ``h0``."""

    a: float
    h0: float

    def __post_init__(self):
        for name in ("a", "h0"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParameter(f"{name} must be finite and > 0, got {value}")


PROFILE_A = QoSProfile(a=2.0, h0=3.0)
"""Latency-sensitive profile used in the dumbbell case study."""
PROFILE_B = QoSProfile(a=0.5, h0=6.0)
"""Latency-tolerant profile used in the dumbbell case study."""


@dataclass(frozen=True)
class ImbalanceReport:
    n: int
    m: int
    profile: QoSProfile
    W: float
    H: float
    Hmax: float
    Q: float
    I: float
    per_hop_weight: dict[int, float] = field(default_factory=dict)

    CSV_HEADER = "n,m,a,h0,W,H,Q,I"

    def csv_row(self) -> str:
        return ",".join(
            repr(x) if isinstance(x, float) else str(x)
            for x in (self.n, self.m, self.profile.a, self.profile.h0, self.W, self.H, self.Q, self.I)
        )

    def to_text(self) -> str:
        keys = {
            "n": self.n,
            "m": self.m,
            "a": self.profile.a,
            "h0": self.profile.h0,
            "W": self.W,
            "H": self.H,
            "Hmax": self.Hmax,
            "Q": self.Q,
            "I": self.I,
        }
        return "\n".join(f"{k}: {v!r}" for k, v in keys.items()) + "\n"

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "a": self.profile.a,
            "h0": self.profile.h0,
            "W": self.W,
            "H": self.H,
            "Hmax": self.Hmax,
            "Q": self.Q,
            "I": self.I,
            "per_hop_weight": {str(h): w for h, w in self.per_hop_weight.items()},
        }


def _is_unreachable(d) -> bool:
    return d is None or d == UNREACHABLE or d == math.inf


def weight(d, profile: QoSProfile) -> float:
    """Sigmoid weight of a hop value; exactly 0 for an unreachable pair."""
    if _is_unreachable(d):
        return 0.0
    return float(expit(-profile.a * (d - profile.h0)))


def log_weight(hops: np.ndarray, profile: QoSProfile) -> np.ndarray:
    """Natural log of the sigmoid weight, ``-softplus(a (h - h0))``."""
    return -np.logaddexp(0.0, profile.a * (np.asarray(hops, dtype=float) - profile.h0))


def _log_probs(hist: HopHistogram, profile: QoSProfile):
    hops = hist.hops()
    mult = hist.multiplicities()
    logw = log_weight(hops, profile)
    logW = float(logsumexp(logw, b=mult))
    return hops, mult, logw, logW


def imbalance_from_histogram(hist: HopHistogram, profile: QoSProfile) -> ImbalanceReport:
    """Evaluate W, H, Q and I from hop counts.

    ``Hmax`` always counts every ordered pair, reachable or not, so a
    disconnected graph is penalised even if its reachable pairs look uniform.
    With no reachable pair (``W = 0``) the imbalance is defined as 1.
    """
    if hist.n < 2:
        raise InvalidParameter("imbalance needs n >= 2")
    Hmax = math.log2(hist.pairs)
    m = hist.counts.get(1, 0) // 2
    if not hist.counts:
        return ImbalanceReport(hist.n, m, profile, 0.0, 0.0, Hmax, 0.0, 1.0, {})

    hops, mult, logw, logW = _log_probs(hist, profile)
    per_hop = {int(h): float(math.exp(lw)) for h, lw in zip(hops, logw)}
    if len(hops) == 1 and hist.unreachable == 0:
        # a single hop value with every pair reachable is exactly uniform
        H = Hmax
    else:
        logp = logw - logW
        H = float(-np.sum(mult * np.exp(logp) * logp) / LN2)
    Q = H / Hmax
    I = min(1.0, max(0.0, 1.0 - Q))
    return ImbalanceReport(hist.n, m, profile, math.exp(logW), H, Hmax, Q, I, per_hop)


def imbalance(g: Graph, profile: QoSProfile, threads: int | None = 1) -> ImbalanceReport:
    if g.n < 2:
        raise InvalidParameter("imbalance needs n >= 2")
    report = imbalance_from_histogram(all_pairs_histogram(g, threads=threads), profile)
    return ImbalanceReport(
        report.n, g.m, profile, report.W, report.H, report.Hmax, report.Q, report.I,
        report.per_hop_weight,
    )


def weight_gradient(d: float, profile: QoSProfile) -> tuple[float, float]:
    """Partial derivatives ``(dw/da, dw/dh0)`` of the sigmoid weight at finite hop ``d``."""
    w = weight(d, profile)
    s = w * (1.0 - w)
    return -(d - profile.h0) * s, profile.a * s


def imbalance_gradient(hist: HopHistogram, profile: QoSProfile) -> tuple[float, float]:
    """Analytic ``(dI/da, dI/dh0)``.

    With ``p_h = w_h / W`` and ``g_h = d log w_h / d theta``,
    ``dH/d theta = -sum_h N_h p_h (g_h - <g>) log2 p_h`` where ``<g>`` is the
    p-weighted mean of ``g``; then ``dI/d theta = -(dH/d theta) / Hmax``.
    """
    if hist.n < 2:
        raise InvalidParameter("gradient needs n >= 2")
    if not hist.counts:
        raise UndefinedGradientError("total weight is zero; imbalance is not differentiable here")
    hops, mult, logw, logW = _log_probs(hist, profile)
    logp = logw - logW
    p = np.exp(logp)
    one_minus_w = expit(profile.a * (hops - profile.h0))
    Hmax = math.log2(hist.pairs)
    grads = []
    for g in (-(hops - profile.h0) * one_minus_w, profile.a * one_minus_w):
        centred = g - np.sum(mult * p * g)
        dH = -np.sum(mult * p * centred * logp) / LN2
        grads.append(float(-dH / Hmax))
    return grads[0], grads[1]


def concentrated_limit(k: int, n: int) -> float:
    """Limiting imbalance as ``a -> inf`` when the weight settles uniformly on ``k`` ordered pairs."""
    if n < 2:
        raise InvalidParameter("n must be >= 2")
    if not 2 <= k <= n * (n - 1):
        raise InvalidParameter(f"k must lie in [2, n(n-1)], got {k}")
    return 1.0 - math.log2(k) / math.log2(n * (n - 1))


def sup_imbalance(n: int) -> float:
    """Least upper bound of the imbalance over all graphs and profiles on ``n`` nodes."""
    if n < 2:
        raise InvalidParameter("n must be >= 2")
    return 1.0 - 1.0 / math.log2(n * (n - 1))


def simplified_diameter_bound(n: int, lambda2: float) -> float:
    """``2 ln(n-1) / lambda2``.

    Commonly quoted as a diameter bound but it does not hold for dense
    graphs (for K_n it is below 1); kept for comparison only.
    """
    return 2.0 * math.log(n - 1) / lambda2


def mohar_diameter_bound(n: int, max_degree: int, lambda2: float) -> int:
    """Mohar's bound ``diam <= 2 ceil((Delta + lambda2) / (4 lambda2) * ln(n-1))`` for n >= 3."""
    return 2 * math.ceil((max_degree + lambda2) / (4.0 * lambda2) * math.log(n - 1))


def mohar_sufficient_h0(g: Graph) -> int:
    """Smallest integer ``h0`` strictly above Mohar's spectral diameter bound.

    Any such ``h0`` exceeds the diameter, so the imbalance tends to 0 as
    ``a`` grows.
    """
    from .classical import algebraic_connectivity

    if g.n < 2:
        raise InvalidParameter("n must be >= 2")
    lam2 = algebraic_connectivity(g)
    if lam2 <= 0.0:
        raise NotConnectedError("graph is disconnected (lambda2 = 0)")
    if g.n == 2:
        return 2
    return mohar_diameter_bound(g.n, max(g.degrees()), lam2) + 1


def phase_diagram(
    g: Graph, a_grid, h0_grid, threads: int | None = 1
) -> np.ndarray:
    """Imbalance over a grid; rows follow ``h0_grid`` and columns ``a_grid``.

    The hop histogram is computed once and reused for every grid point.
    """
    a_grid = list(a_grid)
    h0_grid = list(h0_grid)
    if not a_grid or not h0_grid:
        raise InvalidParameter("phase diagram grids must be nonempty")
    hist = all_pairs_histogram(g, threads=threads)
    out = np.empty((len(h0_grid), len(a_grid)))
    for i, h0 in enumerate(h0_grid):
        for j, a in enumerate(a_grid):
            out[i, j] = imbalance_from_histogram(hist, QoSProfile(a, h0)).I
    return out


def phase_diagram_csv(matrix: np.ndarray, a_grid, h0_grid) -> str:
    rows = ["h0,a,I"]
    for i, h0 in enumerate(h0_grid):
        for j, a in enumerate(a_grid):
            rows.append(f"{h0!r},{a!r},{matrix[i, j]!r}")
    return "\n".join(rows) + "\n"
