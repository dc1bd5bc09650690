"""Barabasi-Albert sweep over the attachment count m = 1..10, plus the strict/lenient reversal at m=3."""

from _common import parser, save

from netimbalance.experiments import BA_GRID, SweepSpec, ba_qos_reversal, run_sweep

args = parser(__doc__, "ba_sweep.csv").parse_args()
save(run_sweep(SweepSpec("ba", 50, BA_GRID, runs=20, base_seed=args.seed), args.workers).to_csv(), args.out)
rev = ba_qos_reversal(seed=args.seed)
print(f"m=3, a=2: mean I(h0=1) = {rev.strict.mean_I:.4f}, mean I(h0=4) = {rev.lenient.mean_I:.5f}")
