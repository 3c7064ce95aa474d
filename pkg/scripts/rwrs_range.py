"""Range decay for random walks: the fraction of walk times occupying
distinct sites.

The partition identifying times at which a walk revisits the same site has
one class per visited site, so R_n / n — the range over the time horizon —
is the density of class representatives.  For recurrent walks this
fraction vanishes as n grows (sqrt decay in one dimension, 1/log n in
two), which drives the degeneracy of the dominated product density for the
colored law.  Transient walks keep a positive fraction.  The script
estimates E[R_n / n] with seeded replicates along a geometric n-grid.
"""

import argparse

from divcolor import range_estimator

WALKS = {
    "simple-1d": {1: 0.5, -1: 0.5},
    "simple-2d": {(1, 0): 0.25, (-1, 0): 0.25, (0, 1): 0.25, (0, -1): 0.25},
    "drift-1d": {1: 0.75, -1: 0.25},
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-exp", type=int, default=6, help="largest n is 10**max_exp")
    parser.add_argument("--reps", type=int, default=5, help="replicates per n")
    parser.add_argument("--seed", type=int, default=77, help="base seed")
    args = parser.parse_args()

    for name, law in WALKS.items():
        print(f"{name}:")
        for exp in range(2, args.max_exp + 1):
            n = 10**exp
            reps = args.reps if exp < args.max_exp else max(1, args.reps // 5)
            report = range_estimator(law, n, reps, args.seed)
            est = report.estimates["range_fraction"]
            se = report.stderr["range_fraction"]
            print(f"  n=10^{exp}  R_n/n = {est:.5f} (se {se:.5f}, reps={reps})")
        print()


if __name__ == "__main__":
    main()
