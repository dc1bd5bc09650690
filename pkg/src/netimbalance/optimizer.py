"""Greedy edge addition that minimises the imbalance under one QoS profile."""

from __future__ import annotations

from dataclasses import dataclass, field

from ._parallel import parallel_map
from .errors import InvalidParameter, NoCandidatesError
from .graph import Edge, Graph, add_edge, non_edges
from .metric import QoSProfile, imbalance


@dataclass(frozen=True)
class Round:
    candidates: int
    edge: Edge
    I: float


@dataclass
class OptimizationResult:
    profile: QoSProfile
    i_before: float
    i_after: float
    chosen_edges: list[Edge] = field(default_factory=list)
    trace: list[Round] = field(default_factory=list)
    exhausted: bool = False
    """True when candidates ran out before the budget was spent."""
    graph: Graph | None = None

    def trace_csv(self) -> str:
        rows = ["round,candidate_u,candidate_v,I"]
        rows.extend(
            f"{i},{r.edge[0]},{r.edge[1]},{r.I!r}" for i, r in enumerate(self.trace, start=1)
        )
        return "\n".join(rows) + "\n"


def _score(args) -> float:
    g, edge, profile = args
    return imbalance(add_edge(g, *edge), profile).I


def evaluate_candidates(
    g: Graph, profile: QoSProfile, workers: int = 1
) -> list[tuple[Edge, float]]:
    """Imbalance of ``g`` plus each absent edge, best first.

    Every candidate gets a full APSP recomputation. Ties are broken by
    lexicographic edge order after all scores are in.
    """
    candidates = non_edges(g)
    if not candidates:
        raise NoCandidatesError("graph is complete; no candidate edges")
    scores = parallel_map(_score, [(g, e, profile) for e in candidates], workers)
    return sorted(zip(candidates, scores), key=lambda item: (item[1], item[0]))


def greedy_edge_addition(
    g: Graph, profile: QoSProfile, budget: int = 1, workers: int = 1
) -> OptimizationResult:
    if budget < 1:
        raise InvalidParameter("budget must be >= 1")
    i_before = imbalance(g, profile).I
    result = OptimizationResult(profile, i_before, i_before, graph=g)
    current = g
    for _ in range(budget):
        try:
            ranked = evaluate_candidates(current, profile, workers)
        except NoCandidatesError:
            result.exhausted = True
            break
        edge, value = ranked[0]
        result.trace.append(Round(len(ranked), edge, value))
        result.chosen_edges.append(edge)
        result.i_after = value
        current = add_edge(current, *edge)
    result.graph = current
    return result
