"""Exact uniqueness audits for paint-box mixing laws away from density 1/2.

At density 1/2 every nontrivial paint-box law admits many representing
mixtures, but away from 1/2 the audit enumerates every pure paint-box whose
mixing support embeds in the target's and solves the exact reproducing
system.  This demo audits the three closed families — one box, two boxes,
and three equal (diagonal) boxes — at p = 2/3, then shows how a density
below 1/2 is audited through its complement.
"""

import argparse
from fractions import Fraction

from divcolor import PaintBox, uniqueness_audit

F = Fraction

TARGETS = [
    PaintBox((F(1, 2),)),
    PaintBox((F(1, 2), F(1, 4))),
    PaintBox((F(1, 3), F(1, 3), F(1, 3))),
]


def describe(audit):
    print(f"target {tuple(str(b) for b in audit.target.probs)}  p={audit.p}  family={audit.family}")
    print(f"  candidates embedding in the target's mixing support: {len(audit.candidates)}")
    for cand in audit.candidates:
        print(f"    {tuple(str(b) for b in cand.probs)}")
    verdict = "UNIQUE" if audit.unique else "NOT unique"
    print(f"  verdict: {verdict}")
    if audit.mixture is not None:
        print(f"  reproducing mixture: {audit.mixture}")
    if audit.note:
        print(f"  note: {audit.note}")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", default="2/3", help="rational audit density (not 1/2)")
    args = parser.parse_args()
    p = F(args.p)

    for target in TARGETS:
        describe(uniqueness_audit(target, p))

    complement = 1 - p
    print(f"same audits requested at the complementary density {complement}:")
    describe(uniqueness_audit(TARGETS[1], complement))


if __name__ == "__main__":
    main()
