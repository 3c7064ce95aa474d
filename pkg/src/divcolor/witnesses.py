"""Catalog of small fixture measures: non-injectivity witness pairs for the
class-coloring map, a color process that is not positively associated, and
color laws with non-negative correlations that are not color processes.

Key names follow the external-interface contract; the measures themselves are
described by what they certify:

* ``thmA_nu1``/``thmA_nu2``: distinct RERs on [3] with identical color laws at
  density 1/2 (and different laws at any other density).
* ``thmC_nu1``/``thmC_nu2``: exchangeable shape laws on 4; ``thmC_nu2`` is a
  function of p, with color laws matching ``thmC_nu1`` at every p.
* ``thmE_nu1``/``thmE_nu2``: distinct RERs on [4] whose color laws agree for
  every p simultaneously.
* ``thmF_nu1``/``thmF_nu2``: distinct exchangeable shape laws on 6 whose
  ones-laws agree for every p simultaneously.
* ``posass4``: an RER on [4] whose color process at density 1/2 is not
  positively associated.
* ``level_mu_<n>``: the law uniform on configurations with exactly one 1 or
  exactly one 0 — 0-1-symmetric with non-negative correlations, yet not a
  color process (it gives the all-ones configuration probability 0).
* ``fkg_mixture``: a two-component product mixture on [3] satisfying the FKG
  lattice condition but not 0-1-symmetric (so not a color process at 1/2).
* ``kerprop_R_nu1``/``kerprop_R_nu2``: a second pair of RERs on [3] with equal
  color laws at density 1/2, lying in a restricted simplex.
"""

from __future__ import annotations

from fractions import Fraction

from .measures import ColorMeasure, ExchRERMeasure, RERMeasure, mix, product_measure
from .partitions import SetPartition


def _rer3(q_singletons, q_12, q_23, q_13, q_full):
    """RER on [3] from weights on (singletons, {{1,2},{3}}, {{1},{2,3}},
    {{1,3},{2}}, full)."""
    return RERMeasure(
        3,
        {
            SetPartition(3, (0, 1, 2)): q_singletons,
            SetPartition(3, (0, 0, 1)): q_12,
            SetPartition(3, (0, 1, 1)): q_23,
            SetPartition(3, (0, 1, 0)): q_13,
            SetPartition(3, (0, 0, 0)): q_full,
        },
    )


def thmA_pair():
    nu1 = _rer3(Fraction(2, 3), 0, 0, 0, Fraction(1, 3))
    nu2 = _rer3(0, Fraction(1, 3), Fraction(1, 3), Fraction(1, 3), 0)
    return nu1, nu2


def thmC_nu1():
    return ExchRERMeasure(4, {(4,): Fraction(1, 5), (3, 1): Fraction(1, 5), (2, 2): Fraction(1, 5),
                              (2, 1, 1): Fraction(1, 5), (1, 1, 1, 1): Fraction(1, 5)})


def thmC_nu2(p):
    p = Fraction(p)
    g = p * (1 - p)
    return ExchRERMeasure(
        4,
        {
            (4,): Fraction(1, 5) + g / 10,
            (3, 1): Fraction(1, 5) - 2 * g / 5,
            (2, 2): Fraction(1, 10) + 3 * g / 10,
            (2, 1, 1): Fraction(2, 5),
            (1, 1, 1, 1): Fraction(1, 10),
        },
    )


def thmE_pair():
    nu1 = RERMeasure(
        4,
        {
            SetPartition.from_blocks(4, [{1, 3}, {2}, {4}]): Fraction(1, 3),
            SetPartition.from_blocks(4, [{1}, {3}, {2, 4}]): Fraction(1, 3),
            SetPartition.from_blocks(4, [{1, 2}, {3, 4}]): Fraction(1, 6),
            SetPartition.from_blocks(4, [{1, 4}, {2, 3}]): Fraction(1, 6),
        },
    )
    nu2 = RERMeasure(
        4,
        {
            SetPartition.from_blocks(4, [{1, 2}, {3}, {4}]): Fraction(1, 6),
            SetPartition.from_blocks(4, [{1}, {2, 3}, {4}]): Fraction(1, 6),
            SetPartition.from_blocks(4, [{1}, {2}, {3, 4}]): Fraction(1, 6),
            SetPartition.from_blocks(4, [{1, 4}, {2}, {3}]): Fraction(1, 6),
            SetPartition.from_blocks(4, [{1, 3}, {2, 4}]): Fraction(1, 3),
        },
    )
    return nu1, nu2


def thmF_pair():
    nu1 = ExchRERMeasure(6, {(4, 2): Fraction(1, 3), (3, 2, 1): Fraction(2, 3)})
    nu2 = ExchRERMeasure(6, {(4, 1, 1): Fraction(1, 3), (3, 3): Fraction(1, 3), (2, 2, 2): Fraction(1, 3)})
    return nu1, nu2


def posass4_rer():
    return RERMeasure(
        4,
        {
            SetPartition.from_blocks(4, [{1, 2}, {3}, {4}]): Fraction(1, 2),
            SetPartition.from_blocks(4, [{1}, {2}, {3, 4}]): Fraction(1, 2),
        },
    )


def levels_measure(n):
    """Uniform on the 2n configurations with exactly one 1 or exactly one 0."""
    w = {}
    for i in range(n):
        one = "".join("1" if j == i else "0" for j in range(n))
        zero = "".join("0" if j == i else "1" for j in range(n))
        w[one] = Fraction(1, 2 * n)
        w[zero] = Fraction(1, 2 * n)
    return ColorMeasure(n, w)


def fkg_mixture():
    return mix(Fraction(1, 9), product_measure(3, Fraction(9, 10)), product_measure(3, Fraction(9, 20)))


def kerprop_restricted_pair():
    nu1 = _rer3(Fraction(3, 7), Fraction(1, 7), Fraction(1, 7), Fraction(1, 7), Fraction(1, 7))
    nu2 = _rer3(Fraction(1, 7), Fraction(2, 7), Fraction(2, 7), Fraction(2, 7), 0)
    return nu1, nu2


def witness_catalog():
    """Named map of all fixture measures (callables for the p-dependent one)."""
    a1, a2 = thmA_pair()
    e1, e2 = thmE_pair()
    f1, f2 = thmF_pair()
    k1, k2 = kerprop_restricted_pair()
    return {
        "thmA_nu1": a1,
        "thmA_nu2": a2,
        "thmC_nu1": thmC_nu1(),
        "thmC_nu2": thmC_nu2,
        "thmE_nu1": e1,
        "thmE_nu2": e2,
        "thmF_nu1": f1,
        "thmF_nu2": f2,
        "posass4": posass4_rer(),
        "level_mu_4": levels_measure(4),
        "level_mu_5": levels_measure(5),
        "level_mu_6": levels_measure(6),
        "fkg_mixture": fkg_mixture(),
        "kerprop_R_nu1": k1,
        "kerprop_R_nu2": k2,
    }
