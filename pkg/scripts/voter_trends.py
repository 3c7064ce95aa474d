"""Desk-scale diagnostics for the coalescing-random-walk partition of a
torus (the dual description of voter-model consensus clusters).

Full infinite-volume statements — vanishing domination density for
recurrent walks, nonergodicity of the colored law in high dimension — are
out of reach of direct simulation, so this experiment tracks the finite
trends that reflect them: the normalized count of partition classes
meeting the centered box [-n, n]^d and the density of the origin's class
in that box, both averaged over seeded replicates, should decrease as the
box grows and as the coalescence time grows.
"""

import argparse

from divcolor import cluster_density_estimator, coalescing_rw_rer


def trend(d, L, T, reps, seed, ns):
    samples = [coalescing_rw_rer(d, L, T, seed=seed + r) for r in range(reps)]
    report = cluster_density_estimator(samples, ns)
    print(f"d={d}  L={L}  T={T}  replicates={reps}")
    for n in ns:
        count = report.estimates[f"count_density(n={n})"]
        origin = report.estimates[f"origin_density(n={n})"]
        count_se = report.stderr[f"count_density(n={n})"]
        print(
            f"  n={n}: classes/site = {count:.4f} (se {count_se:.4f}), "
            f"origin-class density = {origin:.4f}"
        )
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--L", type=int, default=9, help="torus side length")
    parser.add_argument("--T", type=float, default=2.0, help="coalescence time")
    parser.add_argument("--reps", type=int, default=20, help="replicates per setting")
    parser.add_argument("--seed", type=int, default=2026, help="base seed")
    args = parser.parse_args()

    ns = [n for n in (1, 2, 3) if 2 * n + 1 <= args.L]
    for d in (1, 2, 3):
        trend(d, args.L, args.T, args.reps, args.seed, ns)

    print("same torus, growing coalescence time (d=3, n=1):")
    for T in (0.5, 1.0, 2.0, 4.0):
        samples = [coalescing_rw_rer(3, args.L, T, seed=args.seed + r) for r in range(args.reps)]
        report = cluster_density_estimator(samples, [1])
        print(f"  T={T}: classes/site = {report.estimates['count_density(n=1)']:.4f}")


if __name__ == "__main__":
    main()
