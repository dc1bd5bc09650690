"""Seeded simulation campaigns over the ER, BA and WS models.

Run ``r`` of any sweep uses seed ``base_seed + r`` at every grid point, so
the same run index sees the same random stream across the grid and
profiles can be compared on identical graphs.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import graph as gen
from ._parallel import parallel_map
from .classical import average_path_length, degree_gini, jain_unfairness, path_variance
from .errors import InvalidParameter
from .metric import QoSProfile, imbalance, imbalance_from_histogram
from .paths import all_pairs_histogram

log = logging.getLogger(__name__)

MODELS = ("er", "ba", "ws")

DEFAULT_PROFILES = (QoSProfile(1.0, 4.0), QoSProfile(2.0, 3.0), QoSProfile(0.5, 6.0))
"""Lenient-to-strict lenses used for the model sweeps."""

ER_GRID = tuple(np.round(np.linspace(0.0, 0.4, 41), 10).tolist())
BA_GRID = tuple(range(1, 11))
WS_GRID = tuple(np.logspace(-3, 0, 20).tolist())


def model_graph(model: str, n: int, param: float, seed: int, k: int = 4) -> gen.Graph:
    if model == "er":
        return gen.erdos_renyi(n, param, seed)
    if model == "ba":
        if param != int(param):
            raise InvalidParameter(f"BA attachment count must be an integer, got {param}")
        return gen.barabasi_albert(n, int(param), seed)
    if model == "ws":
        return gen.watts_strogatz(n, k, param, seed)
    raise InvalidParameter(f"unknown model {model!r}; expected one of {MODELS}")


@dataclass(frozen=True)
class SweepSpec:
    model: str
    n: int = 50
    model_param_grid: Sequence[float] = ()
    profiles: Sequence[QoSProfile] = DEFAULT_PROFILES
    runs: int = 20
    base_seed: int = 0
    k: int = 4
    """WS lattice degree; ignored by the other models."""

    def __post_init__(self):
        if self.model not in MODELS:
            raise InvalidParameter(f"unknown model {self.model!r}")
        if self.runs < 1:
            raise InvalidParameter("runs must be >= 1")
        if not self.model_param_grid:
            raise InvalidParameter("model_param_grid must be nonempty")
        if not self.profiles:
            raise InvalidParameter("need at least one profile")


@dataclass(frozen=True)
class SweepPoint:
    model_param: float
    profile: QoSProfile
    mean_I: float
    std_I: float
    values: tuple[float, ...]


@dataclass
class SweepResult:
    spec: SweepSpec
    points: list[SweepPoint] = field(default_factory=list)

    def curve(self, profile: QoSProfile) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(params, means, stds)`` for one profile, in grid order."""
        pts = [p for p in self.points if p.profile == profile]
        return (
            np.array([p.model_param for p in pts]),
            np.array([p.mean_I for p in pts]),
            np.array([p.std_I for p in pts]),
        )

    def to_csv(self) -> str:
        rows = ["model,n,param,a,h0,runs,mean_I,std_I"]
        for p in self.points:
            rows.append(
                f"{self.spec.model},{self.spec.n},{p.model_param!r},{p.profile.a!r},"
                f"{p.profile.h0!r},{len(p.values)},{p.mean_I!r},{p.std_I!r}"
            )
        return "\n".join(rows) + "\n"


def _mean_std(values: Sequence[float]) -> tuple[float, float]:
    """Mean and sample standard deviation; a single run reports std 0 with a warning."""
    arr = np.asarray(values, dtype=float)
    if arr.size == 1:
        log.warning("single run: standard deviation reported as 0")
        return float(arr[0]), 0.0
    return float(arr.mean()), float(arr.std(ddof=1))


def _sweep_task(args) -> list[float]:
    model, n, param, seed, k, profiles = args
    hist = all_pairs_histogram(model_graph(model, n, param, seed, k))
    return [imbalance_from_histogram(hist, prof).I for prof in profiles]


def run_sweep(spec: SweepSpec, workers: int = 1) -> SweepResult:
    """Mean and std of the imbalance at every (grid point, profile)."""
    tasks = [
        (spec.model, spec.n, param, spec.base_seed + r, spec.k, tuple(spec.profiles))
        for param in spec.model_param_grid
        for r in range(spec.runs)
    ]
    values = parallel_map(_sweep_task, tasks, workers)
    result = SweepResult(spec)
    for gi, param in enumerate(spec.model_param_grid):
        block = values[gi * spec.runs : (gi + 1) * spec.runs]
        for pi, prof in enumerate(spec.profiles):
            vals = tuple(v[pi] for v in block)
            mean, std = _mean_std(vals)
            result.points.append(SweepPoint(param, prof, mean, std, vals))
    return result


ZOO_PROFILE = QoSProfile(3.0, 4.0)


def zoo_landscape(
    seed: int = 0, profile: QoSProfile = ZOO_PROFILE, n: int = 50
) -> list[tuple[str, float, float]]:
    """``(model, degree_gini, I)`` for a fixed menagerie of n-node graphs."""
    zoo = [
        ("complete", gen.complete(n)),
        ("ring", gen.ring(n)),
        ("path", gen.path(n)),
        ("star", gen.star(n)),
        ("er(p=0.1)", gen.erdos_renyi(n, 0.1, seed)),
        ("er(p=0.3)", gen.erdos_renyi(n, 0.3, seed)),
        ("ws(k=4,p=0.1)", gen.watts_strogatz(n, 4, 0.1, seed)),
        ("ws(k=4,p=1)", gen.watts_strogatz(n, 4, 1.0, seed)),
        ("ba(m=1)", gen.barabasi_albert(n, 1, seed)),
        ("ba(m=3)", gen.barabasi_albert(n, 3, seed)),
    ]
    return [(name, degree_gini(g), imbalance(g, profile).I) for name, g in zoo]


def zoo_csv(rows) -> str:
    out = ["model,degree_gini,I"]
    out.extend(f"{name},{gini!r},{i!r}" for name, gini, i in rows)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class ComparisonRow:
    p: float
    I: float
    jain_unfairness: float
    avg_path_length: float
    path_variance: float


def _comparison_task(args) -> tuple[float, float, float, float]:
    n, k, p, seed, profile = args
    hist = all_pairs_histogram(gen.watts_strogatz(n, k, p, seed))
    return (
        imbalance_from_histogram(hist, profile).I,
        jain_unfairness(hist, profile),
        average_path_length(hist),
        path_variance(hist),
    )


def ws_metric_comparison(
    n: int = 50,
    k: int = 4,
    p_grid: Sequence[float] = WS_GRID,
    profile: QoSProfile = QoSProfile(1.0, 4.0),
    runs: int = 20,
    seed: int = 0,
    workers: int = 1,
) -> list[ComparisonRow]:
    """Run means of I, Jain unfairness, average path length and path variance along a WS sweep.

    All four metrics come from the same graphs and the same weight multiset.
    WS graphs may be disconnected at small ``k``; path statistics then cover
    reachable pairs only.
    """
    tasks = [(n, k, p, seed + r, profile) for p in p_grid for r in range(runs)]
    values = np.array(parallel_map(_comparison_task, tasks, workers)).reshape(len(p_grid), runs, 4)
    means = values.mean(axis=1)
    return [ComparisonRow(p, *map(float, row)) for p, row in zip(p_grid, means)]


def comparison_csv(rows: Sequence[ComparisonRow]) -> str:
    out = ["p,I,jain_unfairness,avg_path_length,path_variance"]
    out.extend(
        f"{r.p!r},{r.I!r},{r.jain_unfairness!r},{r.avg_path_length!r},{r.path_variance!r}"
        for r in rows
    )
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class Reversal:
    strict: SweepPoint
    lenient: SweepPoint


def ba_qos_reversal(n: int = 50, m_attach: int = 3, runs: int = 20, seed: int = 0, a: float = 2.0) -> Reversal:
    """Paired imbalance under a strict (h0=1) and a lenient (h0=4) profile on identical BA graphs."""
    strict, lenient = QoSProfile(a, 1.0), QoSProfile(a, 4.0)
    spec = SweepSpec("ba", n, (m_attach,), (strict, lenient), runs, seed)
    res = run_sweep(spec)
    return Reversal(res.points[0], res.points[1])


def steepest_drop(params: Sequence[float], means: Sequence[float]) -> tuple[float, float]:
    """Grid interval ``(p_i, p_{i+1})`` with the largest decrease of the mean curve per unit parameter."""
    p = np.asarray(params, dtype=float)
    m = np.asarray(means, dtype=float)
    slope = -np.diff(m) / np.diff(p)
    i = int(np.argmax(slope))
    return float(p[i]), float(p[i + 1])


def pooled_se(std_a: float, std_b: float, runs: int) -> float:
    """Standard error of the difference of two run means."""
    return math.sqrt((std_a**2 + std_b**2) / runs)
