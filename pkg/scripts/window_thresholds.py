"""Convergence of the sharp finite-window domination threshold to its
closed-form limit.

For an exchangeable partition law with mixing variable xi, the largest iid
density alpha with Pi_alpha dominated by the n-site color window is
1 - (E[(1-s)^n])^{1/n} where s ~ xi.  As the window grows this decreases to
p times the deficit of the paint-box — the closed-form all-n threshold.
The script prints the finite thresholds along a doubling grid of window
sizes next to that limit, for each requested paint-box.
"""

import argparse
from fractions import Fraction

from divcolor import PaintBox, d_paintbox, finite_window_threshold, xi_distribution


def parse_paintbox(text):
    if not text:
        return PaintBox(())
    return PaintBox(tuple(Fraction(tok) for tok in text.split(",")))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--paintboxes",
        default="1/2;1/2,1/4;1/4,1/4,1/4",
        help="semicolon-separated paint-boxes, each a comma list of box sizes",
    )
    parser.add_argument("--p", default="1/2", help="rational coloring density")
    parser.add_argument("--max-exp", type=int, default=6, help="largest window is 2**max_exp")
    args = parser.parse_args()
    p = Fraction(args.p)
    windows = [2**k for k in range(args.max_exp + 1)]

    for text in args.paintboxes.split(";"):
        pb = parse_paintbox(text)
        xi = xi_distribution(pb, p)
        limit = d_paintbox(pb, p)
        print(f"paint-box {tuple(str(b) for b in pb.probs)}  p={p}  limit={limit} = {float(limit):.6f}")
        for n in windows:
            t = finite_window_threshold(xi, n)
            print(f"  n={n:>3}  threshold={float(t):.6f}  gap to limit={float(t - limit):.6f}")
        print()


if __name__ == "__main__":
    main()
