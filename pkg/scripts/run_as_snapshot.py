"""Imbalance of an AS-level topology read from a whitespace-separated edge list."""

import sys

from _common import parser, save

from netimbalance import graph as gen
from netimbalance.classical import compare
from netimbalance.metric import QoSProfile, imbalance
from netimbalance.paths import all_pairs_histogram, default_threads

p = parser(__doc__, "as_snapshot.csv")
p.add_argument("edges", help="edge-list file (one 'u v' pair per line, '#' comments)")
args = p.parse_args()

g = gen.read_edge_list(args.edges)
if g.n < 2:
    sys.exit("need at least two nodes")
profile = QoSProfile(1.0, 4.0)
hist = all_pairs_histogram(g, threads=default_threads())
report = imbalance(g, profile, threads=default_threads())
cmp = compare(g, profile, hist)
save(f"{report.CSV_HEADER},{cmp.CSV_HEADER}\n{report.csv_row()},{cmp.csv_row()}\n", args.out)
print(report.to_text())
