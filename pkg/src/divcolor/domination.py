"""Stochastic-domination quantities for color processes.

d(nu, p) is the largest alpha such that the i.i.d. Bernoulli(alpha) law is
stochastically below the color process of nu at density p; d(nu) is its
p -> 1 limit.  This module evaluates the closed forms for paint-boxes,
paint-box mixtures and the stationary two-state chain, the finite-window
thresholds that converge down to them, and the cluster-count / cluster-size
necessary conditions that refute domination when violated.  The checkers are
refuters only: a positive domination verdict on a finite window comes from
the exact lattice oracle, never from these bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .measures import RERMeasure
from .partitions import SizeLimitError

BLOCK_WINDOW_CAP = 12


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class DominationReport:
    """Outcome of a domination computation or bound check.

    Closed-form evaluations set value and leave the sides None; inequality
    checks set lhs, rhs and verdict = (lhs <= rhs), with a note flagging
    refutation when the necessary condition fails.
    """

    quantity: str
    inputs: dict
    value: object = None
    lhs: object = None
    rhs: object = None
    verdict: bool | None = None
    note: str = ""


@dataclass(frozen=True)
class TailLaw:
    """Law of a non-negative integer cluster statistic.

    weights lists explicit atoms; residual is the mass lying strictly above
    every listed value (an explicit stand-in for an unbounded tail).
    """

    weights: dict
    residual: Fraction = Fraction(0)

    def __post_init__(self):
        clean = {}
        total = Fraction(0)
        for v, w in self.weights.items():
            v, w = int(v), _frac(w)
            if v < 0:
                raise ValueError("cluster statistics are non-negative")
            if w < 0:
                raise ValueError(f"negative weight at {v}")
            total += w
            if w != 0:
                clean[v] = clean.get(v, Fraction(0)) + w
        residual = _frac(self.residual)
        if residual < 0:
            raise ValueError("negative residual")
        if total + residual != 1:
            raise ValueError(f"weights plus residual sum to {total + residual}, expected 1")
        object.__setattr__(self, "weights", clean)
        object.__setattr__(self, "residual", residual)

    def prob_at_most(self, k):
        return sum((w for v, w in self.weights.items() if v <= k), Fraction(0))

    def prob_at_least(self, k):
        return self.residual + sum((w for v, w in self.weights.items() if v >= k), Fraction(0))


def d_paintbox(pb, p):
    """Exact domination threshold p * deficit of a paint-box at density p."""
    p = _frac(p)
    if not 0 < p < 1:
        raise ValueError("p must lie in (0,1)")
    return p * pb.deficit


def d_paintbox_limit(pb):
    """The p -> 1 limit of d_paintbox: the paint-box deficit."""
    return pb.deficit


def d_mixture(rho, p):
    """Domination threshold of a paint-box mixture: the minimum of the
    atom-wise thresholds."""
    return min(d_paintbox(pb, p) for pb in rho.atoms)


def d_markov(s, p):
    """Exact domination threshold p - p*s of the stationary two-state chain
    RER with edge-keep parameter s, at density p."""
    s, p = _frac(s), _frac(p)
    if not 0 < s < 1 or not 0 < p < 1:
        raise ValueError("s and p must lie in (0,1)")
    return p - p * s


def d_markov_limit(s):
    """The p -> 1 limit of d_markov: 1 - s."""
    return 1 - _frac(s)


def finite_window_threshold(xi, n):
    """The n-site window domination threshold 1 - (E[(1-s)^n])^(1/n) of an
    atomic mixing law.  Non-increasing in n, converging to the minimum atom."""
    if n < 1:
        raise ValueError("n must be positive")
    mean = sum((w * (1 - s) ** n for s, w in xi.atoms.items()), Fraction(0))
    return 1.0 - float(mean) ** (1.0 / n)


def bounded_cluster_bound(M, p):
    """Lower bound 1 - (1-p)^(1/M) on d(nu, p) when every class of nu has at
    most M elements."""
    if M < 1:
        raise ValueError("M must be a positive integer")
    p = _frac(p)
    if not 0 < p < 1:
        raise ValueError("p must lie in (0,1)")
    return 1.0 - float(1 - p) ** (1.0 / M)


def cluster_count_inequality_check(law, p, alpha, n, k, d):
    """Necessary condition for Bernoulli(alpha) domination from the law of
    C_n, the number of classes meeting the box [-n,n]^d:

        P(C_n <= k)  <=  (1-alpha)^((2n+1)^d) / (1-p)^k.

    A violated verdict refutes the domination at (alpha, p)."""
    p, alpha = _frac(p), _frac(alpha)
    if not 0 < p < 1 or not 0 <= alpha < 1:
        raise ValueError("need p in (0,1) and alpha in [0,1)")
    lhs = law.prob_at_most(k)
    rhs = (1 - alpha) ** ((2 * n + 1) ** d) / (1 - p) ** k
    verdict = lhs <= rhs
    return DominationReport(
        quantity="cluster_count_inequality",
        inputs={"p": p, "alpha": alpha, "n": n, "k": k, "d": d},
        lhs=lhs,
        rhs=rhs,
        verdict=verdict,
        note="" if verdict else "domination refuted",
    )


def cluster_size_inequality_check(law, p, alpha, n, d, variant):
    """Necessary condition for Bernoulli(alpha) domination from the law of
    the size of the class of the origin:

        1d-connected:  P(|pi(0)| >= n) <= (n+2) * (1-alpha)^(2*floor(n/2)+1) / (1-p)
        zd-connected:  P(|pi(0)| >= n) <= (7^d * (1-alpha))^n / (1-p)

    The 1d variant assumes classes are intervals of Z; the zd variant assumes
    classes are connected subsets of Z^d (it only bites once alpha exceeds
    1 - 7^-d).  A violated verdict refutes the domination."""
    p, alpha = _frac(p), _frac(alpha)
    if not 0 < p < 1 or not 0 <= alpha < 1:
        raise ValueError("need p in (0,1) and alpha in [0,1)")
    lhs = law.prob_at_least(n)
    if variant == "1d-connected":
        rhs = (n + 2) * (1 - alpha) ** (2 * (n // 2) + 1) / (1 - p)
    elif variant == "zd-connected":
        rhs = (7**d * (1 - alpha)) ** n / (1 - p)
    else:
        raise ValueError("variant must be '1d-connected' or 'zd-connected'")
    verdict = lhs <= rhs
    return DominationReport(
        quantity="cluster_size_inequality",
        inputs={"p": p, "alpha": alpha, "n": n, "d": d, "variant": variant},
        lhs=lhs,
        rhs=rhs,
        verdict=verdict,
        note="" if verdict else "domination refuted",
    )


def nodomination_block_rer(block_n, window_m):
    """Exact window law of the uniformly-offset block partition of Z.

    Sites i and j share a class when floor((i-1+K)/block_n) agree, with K
    uniform on {0, ..., block_n - 1}.  As block_n grows the all-zero window
    probability at density p stays >= (1-p)/block_n, while any fixed
    Bernoulli law eventually beats it, so no single alpha > 0 is dominated
    by every member of the family.
    """
    if block_n < 1:
        raise ValueError("block_n must be positive")
    if window_m > BLOCK_WINDOW_CAP:
        raise SizeLimitError(f"nodomination_block_rer supports windows <= {BLOCK_WINDOW_CAP}")
    weight = Fraction(1, block_n)
    out = {}
    for offset in range(block_n):
        labels = [(i + offset) // block_n for i in range(window_m)]
        first = sorted(set(labels), key=labels.index)
        rgs = tuple(first.index(x) for x in labels)
        out[rgs] = out.get(rgs, Fraction(0)) + weight
    return RERMeasure(window_m, out)
