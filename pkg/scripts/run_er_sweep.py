"""Erdos-Renyi percolation sweep: n=50, p in [0, 0.4], 20 runs, three QoS profiles."""

from _common import parser, save

from netimbalance.experiments import ER_GRID, SweepSpec, run_sweep

args = parser(__doc__, "er_sweep.csv").parse_args()
grid = sorted(set(ER_GRID) | {0.005})
save(run_sweep(SweepSpec("er", 50, grid, runs=20, base_seed=args.seed), args.workers).to_csv(), args.out)
