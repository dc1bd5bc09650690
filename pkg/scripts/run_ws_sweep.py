"""Watts-Strogatz sweep: n=50, k=4, 20 log-spaced rewiring probabilities in [1e-3, 1]."""

from _common import parser, save

from netimbalance.experiments import WS_GRID, SweepSpec, run_sweep

args = parser(__doc__, "ws_sweep.csv").parse_args()
save(run_sweep(SweepSpec("ws", 50, WS_GRID, runs=20, base_seed=args.seed, k=4), args.workers).to_csv(), args.out)
