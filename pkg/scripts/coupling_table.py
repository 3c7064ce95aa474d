"""Exact coupling identities between cluster partitions and spin models.

Coloring the clusters of the q=2 random-cluster model with density 1/2
reproduces the plus-phase Ising law when the edge weight alpha and the
coupling J satisfy the right convention; merging Potts states into two
groups does the same for the fuzzy-Potts law.  The script reports, per
graph and per J, the sup-norm deviation between the colored cluster law
and the spin law for each candidate alpha-convention, so the matching one
is visible at a glance.
"""

import argparse

from divcolor import FiniteGraph, coupling_check_fk_ising, coupling_check_fuzzy_potts


def show(report):
    print(f"  J={report.J}: matched convention {report.matched!r} (deviation {report.deviation:.2e})")
    for name, dev in sorted(report.deviations.items()):
        if name != report.matched:
            print(f"      alternative {name!r}: deviation {dev:.2e}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--couplings", default="0.2,0.5,1.0", help="comma list of J values")
    args = parser.parse_args()
    js = [float(tok) for tok in args.couplings.split(",")]

    graphs = {
        "triangle K3": FiniteGraph.complete(3),
        "path P4": FiniteGraph.path(4),
    }
    for name, graph in graphs.items():
        print(f"random-cluster vs Ising on the {name}:")
        for j in js:
            show(coupling_check_fk_ising(graph, j))
        print()

    print("random-cluster vs fuzzy-Potts (q=3) on the triangle:")
    for ell in (1, 2):
        for j in js:
            report = coupling_check_fuzzy_potts(FiniteGraph.complete(3), j, 3, ell)
            print(
                f"  l={ell} J={j}: matched convention {report.matched!r} "
                f"(deviation {report.deviation:.2e})"
            )


if __name__ == "__main__":
    main()
