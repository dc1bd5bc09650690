"""Greedy single-edge addition on dumbbell networks under a strict and a lenient profile."""

from _common import parser, save

from netimbalance import graph as gen
from netimbalance.metric import PROFILE_A, PROFILE_B, imbalance
from netimbalance.optimizer import greedy_edge_addition

p = parser(__doc__, "dumbbell.csv")
p.add_argument("--size", type=int, default=25, help="nodes per cluster")
p.add_argument("--topology", default="er", choices=("er", "ring", "complete"))
p.add_argument("--seeds", type=int, default=5)
args = p.parse_args()

rows = ["seed,u,v,IA_before,IA_after,IB_before,IB_after"]
for seed in range(args.seed, args.seed + args.seeds):
    g, _ = gen.dumbbell(args.size, args.topology, seed=seed)
    res = greedy_edge_addition(g, PROFILE_A, workers=args.workers)
    u, v = res.chosen_edges[0]
    rows.append(
        f"{seed},{u},{v},{res.i_before!r},{res.i_after!r},"
        f"{imbalance(g, PROFILE_B).I!r},{imbalance(res.graph, PROFILE_B).I!r}"
    )
save("\n".join(rows) + "\n", args.out)
