"""Imbalance over an (h0, a) grid for a star, a ring and a small-world graph."""

import numpy as np
from _common import parser, save

from netimbalance import graph as gen
from netimbalance.metric import phase_diagram, phase_diagram_csv

args = parser(__doc__, "phase").parse_args()
a_grid = np.logspace(-1, 1, 21).tolist()
h0_grid = np.linspace(0.5, 10, 20).tolist()
graphs = {
    "star": gen.star(50),
    "ring": gen.ring(50),
    "ws": gen.watts_strogatz(50, 4, 0.1, args.seed),
}
for name, g in graphs.items():
    save(phase_diagram_csv(phase_diagram(g, a_grid, h0_grid), a_grid, h0_grid), f"{args.out}_{name}.csv")
