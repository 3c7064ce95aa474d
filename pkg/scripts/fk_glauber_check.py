"""Empirical vs exact cluster-partition law for the random-cluster model.

Heat-bath Glauber dynamics on edge configurations converges to the
random-cluster measure; projecting each sweep to its connected-component
partition gives Monte-Carlo frequencies that can be compared with the
exactly enumerated partition law on a small graph.  The script runs the
sampler on the triangle and the 4-cycle, prints empirical frequency next
to exact weight for every partition, and reports the total variation gap.
"""

import argparse
from collections import Counter
from fractions import Fraction

from divcolor import FiniteGraph, fk_exact_rer, fk_glauber_sampler


def compare(name, graph, alpha, q, sweeps, burnin, seed):
    exact = fk_exact_rer(graph, alpha, q)
    counts = Counter()
    total = 0
    for sample in fk_glauber_sampler(graph, alpha, q, sweeps, seed, burnin=burnin):
        counts[sample.partition.rgs] += 1
        total += 1
    tv = 0.0
    print(f"{name}: alpha={alpha} q={q} sweeps={sweeps} burnin={burnin} seed={seed}")
    for partition, weight in sorted(exact.items(), key=lambda kv: kv[0].rgs):
        freq = counts.get(partition.rgs, 0) / total
        tv += abs(freq - float(weight))
        rgs = "".join(str(d) for d in partition.rgs)
        print(f"  RGS:{rgs}  exact {str(weight):>6} = {float(weight):.4f}   empirical {freq:.4f}")
    print(f"  total variation distance: {tv / 2:.4f} over {total} retained sweeps")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alpha", default="1/2", help="rational edge density")
    parser.add_argument("--q", type=int, default=2, help="cluster weight")
    parser.add_argument("--sweeps", type=int, default=20000)
    parser.add_argument("--burnin", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=13)
    args = parser.parse_args()
    alpha = Fraction(args.alpha)

    compare("triangle", FiniteGraph.complete(3), alpha, args.q, args.sweeps, args.burnin, args.seed)
    compare("4-cycle", FiniteGraph.cycle(4), alpha, args.q, args.sweeps, args.burnin, args.seed)


if __name__ == "__main__":
    main()
