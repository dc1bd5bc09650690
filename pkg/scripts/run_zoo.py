"""Degree Gini against imbalance for a fixed set of 50-node graphs."""

from _common import parser, save

from netimbalance.experiments import zoo_csv, zoo_landscape

args = parser(__doc__, "zoo.csv").parse_args()
save(zoo_csv(zoo_landscape(seed=args.seed)), args.out)
