"""Network imbalance: a QoS-aware, entropy-based fairness metric over shortest hop counts."""

from .errors import (
    CapacityError,
    ImbalanceError,
    InvalidParameter,
    NoCandidatesError,
    NotConnectedError,
    ParseError,
    UndefinedGradientError,
    UndefinedMetricError,
)
from .graph import (
    Graph,
    add_edge,
    barabasi_albert,
    complete,
    dumbbell,
    erdos_renyi,
    from_edge_list,
    from_edges,
    non_edges,
    path,
    ring,
    star,
    to_edge_list,
    watts_strogatz,
)
from .metric import (
    PROFILE_A,
    PROFILE_B,
    ImbalanceReport,
    QoSProfile,
    concentrated_limit,
    imbalance,
    imbalance_from_histogram,
    imbalance_gradient,
    mohar_sufficient_h0,
    phase_diagram,
    sup_imbalance,
    weight,
    weight_gradient,
)
from .paths import UNREACHABLE, HopHistogram, all_pairs_histogram, bfs_hops, diameter, hop_distribution

__version__ = "0.1.0"
