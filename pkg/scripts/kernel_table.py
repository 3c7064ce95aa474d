"""Tabulate the dimension of the coloring-map kernel over a grid of window
sizes and densities, for general and for exchangeable inputs.

The kernel at (n, p) collects the signed differences of partition measures
that color to the same n-site law at density p; its dimension is the number
of independent ways uniqueness of the representing partition measure can
fail.  The table is exact (rational arithmetic throughout), and for the
first window with a nontrivial kernel the basis direction is printed in
full.
"""

import argparse
from fractions import Fraction

from divcolor import kernel


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5, help="largest window size")
    parser.add_argument(
        "--densities",
        default="1/3,1/2,2/3",
        help="comma-separated rational densities",
    )
    args = parser.parse_args()
    densities = [Fraction(tok) for tok in args.densities.split(",")]

    header = f"{'n':>3} {'p':>6} {'general':>9} {'exchangeable':>14}"
    print(header)
    print("-" * len(header))
    first_direction = None
    for n in range(2, args.max_n + 1):
        for p in densities:
            general = kernel(n, p, space="general")
            exch = kernel(n, p, space="exchangeable")
            print(f"{n:>3} {str(p):>6} {len(general):>9} {len(exch):>14}")
            if general and first_direction is None:
                first_direction = (n, p, general[0])

    if first_direction is not None:
        n, p, vec = first_direction
        print(f"\nfirst nontrivial kernel direction (n={n}, p={p}):")
        for rgs, coeff in sorted(vec.coords.items()):
            print(f"  RGS:{''.join(str(d) for d in rgs)}  {coeff}")


if __name__ == "__main__":
    main()
