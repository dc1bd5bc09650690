"""Imbalance against Jain unfairness, average path length and path variance along a WS sweep."""

from _common import parser, save
from scipy.stats import spearmanr

from netimbalance.experiments import comparison_csv, ws_metric_comparison

args = parser(__doc__, "ws_comparison.csv").parse_args()
rows = ws_metric_comparison(seed=args.seed, workers=args.workers)
save(comparison_csv(rows), args.out)
rho = spearmanr([r.I for r in rows], [r.jain_unfairness for r in rows]).statistic
print(f"Spearman(I, Jain) = {rho:.3f}")
