"""Connected RERs on Z from edge processes, and two-state chain models.

An edge process Y on the edges of Z induces a random partition whose classes
are the maximal runs of 1-edges; coloring the classes i.i.d. Bernoulli(p)
gives a stationary color process.  For i.i.d. edges this reproduces exactly
the stationary two-state Markov chains with non-negatively correlated
neighbors.  For Ising-distributed edges the color process is no longer
Markov: conditioning a window of sites to be all-1 tilts the edge law by an
explicit field shift, and the conditional one-more-site probabilities are
strictly increasing in the window length.  The period-3 block construction
at the end turns the three-site coloring-equality witnesses into stationary
laws that agree at density 1/2 and differ at 1/3.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .measures import (
    ColorMeasure,
    NotColorProcessError,
    RERMeasure,
    all_configs,
    mix,
    product_rer,
    restrict_rer,
)
from .partitions import SizeLimitError
from .witnesses import thmA_pair

IID_EDGE_WINDOW_CAP = 12
ISING_ENUM_EDGE_CAP = 20
FIELD_SHIFT_SITE_CAP = 10


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class MarkovSpec:
    """Transition matrix of a stationary two-state chain on {0,1}."""

    p01: Fraction
    p10: Fraction
    p11: Fraction
    p00: Fraction

    def __post_init__(self):
        vals = {f: _frac(getattr(self, f)) for f in ("p01", "p10", "p11", "p00")}
        for f, v in vals.items():
            if not 0 <= v <= 1:
                raise ValueError(f"{f} outside [0,1]")
            object.__setattr__(self, f, v)
        if vals["p00"] + vals["p01"] != 1 or vals["p10"] + vals["p11"] != 1:
            raise ValueError("transition rows must sum to 1")

    @classmethod
    def from_up_probs(cls, p01, p11):
        p01, p11 = _frac(p01), _frac(p11)
        return cls(p01, 1 - p11, p11, 1 - p01)

    def stationary_one_prob(self):
        if self.p01 + self.p10 == 0:
            raise ValueError("degenerate chain: both states absorbing")
        return self.p01 / (self.p01 + self.p10)


def markov_to_color(spec):
    """Edge-keep parameter s and density p with the same chain law.

    s = p11 - p01 and p = p01/(p01 + p10): the color process of the
    i.i.d.-edge RER at (s, p) is the chain started from stationarity.
    Chains with negatively correlated neighbors (p01 > p11) are not color
    processes of any RER.
    """
    if spec.p01 > spec.p11:
        raise NotColorProcessError(
            "p01 > p11: neighboring values are negatively correlated, "
            "so the chain is not the color process of any RER"
        )
    if spec.p01 + spec.p10 == 0:
        raise ValueError("degenerate chain: both states absorbing")
    return spec.p11 - spec.p01, spec.p01 / (spec.p01 + spec.p10)


def color_to_markov(s, p):
    """The stationary two-state chain matching the i.i.d.-edge color process:
    p01 = p - ps and p11 = s + p - ps."""
    s, p = _frac(s), _frac(p)
    if not 0 <= s <= 1 or not 0 <= p <= 1:
        raise ValueError("s and p must lie in [0,1]")
    return MarkovSpec.from_up_probs(p - p * s, s + p - p * s)


def iid_edge_window_rer(s, n):
    """Exact window law on [n] of the RER generated by i.i.d. Bernoulli(s)
    edges: maximal runs of 1-edges merge, so only interval partitions occur."""
    s = _frac(s)
    if not 0 <= s <= 1:
        raise ValueError("s must lie in [0,1]")
    if n > IID_EDGE_WINDOW_CAP:
        raise SizeLimitError(f"iid_edge_window_rer supports n <= {IID_EDGE_WINDOW_CAP}")
    out = {}
    for edges in itertools.product((1, 0), repeat=n - 1):
        weight = Fraction(1)
        for e in edges:
            weight *= s if e else 1 - s
        if weight == 0:
            continue
        rgs = [0]
        for e in edges:
            rgs.append(rgs[-1] + (1 - e))
        key = tuple(rgs)
        out[key] = out.get(key, Fraction(0)) + weight
    return RERMeasure(n, out)


def markov_window_law(spec, n):
    """Exact stationary window law of a two-state chain on n sites."""
    pi1 = spec.stationary_one_prob()
    start = {"0": 1 - pi1, "1": pi1}
    step = {("0", "0"): spec.p00, ("0", "1"): spec.p01, ("1", "0"): spec.p10, ("1", "1"): spec.p11}
    weights = {}
    for cfg in all_configs(n):
        w = start[cfg[0]]
        for a, b in zip(cfg, cfg[1:]):
            w *= step[(a, b)]
        weights[cfg] = w
    return ColorMeasure(n, weights)


@dataclass(frozen=True)
class IsingEdgeSpec:
    """Ising law on the 2N edge spins of the window [-N, N] of Z.

    Edge i (the edge between sites i and i+1, for -N <= i < N) carries spin
    y_i in {-1, 1}; the weight is exp(J sum y_i y_{i+1} + sum h_i y_i) with
    fields listed left to right.
    """

    J: float
    N: int
    fields: tuple

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be at least 1")
        if self.J < 0:
            raise ValueError("J must be non-negative")
        fields = tuple(float(h) for h in self.fields)
        if len(fields) != 2 * self.N:
            raise ValueError(f"need one field per edge: {2 * self.N} values")
        object.__setattr__(self, "fields", fields)
        object.__setattr__(self, "J", float(self.J))

    @classmethod
    def constant(cls, J, N, h=0.0):
        return cls(J, N, (float(h),) * (2 * N))


@dataclass(frozen=True)
class EdgeWindowLaw:
    """Probability law on {-1,1}^m edge configurations."""

    m: int
    weights: dict

    def __post_init__(self):
        total = 0.0
        clean = {}
        for cfg, w in self.weights.items():
            cfg = tuple(int(y) for y in cfg)
            if len(cfg) != self.m or any(y not in (-1, 1) for y in cfg):
                raise ValueError(f"bad configuration {cfg}")
            if w < -1e-15:
                raise ValueError("negative probability")
            clean[cfg] = float(w)
            total += w
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {total}, expected 1")
        object.__setattr__(self, "weights", clean)

    def prob(self, cfg):
        return self.weights.get(tuple(int(y) for y in cfg), 0.0)


def _edge_chain_law(J, fields):
    """Boltzmann law on {-1,1}^m for a chain of m spins with nearest-neighbor
    coupling J and per-spin fields, by vectorized enumeration."""
    m = len(fields)
    if m > ISING_ENUM_EDGE_CAP:
        raise SizeLimitError(f"edge-chain enumeration supports <= {ISING_ENUM_EDGE_CAP} edges")
    codes = np.arange(2**m, dtype=np.int64)
    spins = 1 - 2 * ((codes[:, None] >> np.arange(m - 1, -1, -1)) & 1)
    energy = spins @ np.asarray(fields, dtype=float)
    if m > 1:
        energy = energy + J * (spins[:, :-1] * spins[:, 1:]).sum(axis=1)
    energy -= energy.max()
    w = np.exp(energy)
    w /= w.sum()
    return {tuple(int(x) for x in row): float(p) for row, p in zip(spins, w)}


def ising_edge_window_law(spec):
    """Exact (floating) law of the Ising edge spins on the window [-N, N]."""
    return EdgeWindowLaw(2 * spec.N, _edge_chain_law(spec.J, spec.fields))


def _as_field_list(h, n):
    if isinstance(h, (int, float, Fraction)):
        return [float(h)] * n
    fields = [float(x) for x in h]
    if len(fields) != n:
        raise ValueError(f"need one field per edge: {n} values")
    return fields


def field_shift_check(J, h, p, k, l, n):
    """Sup-norm gap between two edge laws on the window [0, n] that the
    all-1 conditioning identity asserts are equal.

    Conditioning the color process on X(k) = ... = X(l) = 1 reweights each
    edge configuration by p^M, M = 1 + #(-1 edges strictly between k and l);
    the identity says this equals the Ising law with field h - (log p)/2 on
    exactly those edges.  Returns the maximum absolute probability gap;
    when k = l or p = 1 both the tilt and the shift are trivial and the gap
    is exactly zero.
    """
    if not 0 <= k <= l <= n:
        raise ValueError("need 0 <= k <= l <= n")
    if n > FIELD_SHIFT_SITE_CAP:
        raise SizeLimitError(f"field_shift_check supports n <= {FIELD_SHIFT_SITE_CAP}")
    if not 0 < float(p) <= 1:
        raise ValueError("p must lie in (0,1]")
    p = float(p)
    if k == l or p == 1.0:
        return 0.0
    fields = _as_field_list(h, n)
    base = _edge_chain_law(float(J), fields)
    conditioned = {}
    total = 0.0
    for cfg, w in base.items():
        minus = sum(1 for i in range(k, l) if cfg[i] == -1)
        tw = w * p**minus
        conditioned[cfg] = tw
        total += tw
    conditioned = {cfg: w / total for cfg, w in conditioned.items()}
    shift = math.log(p) / 2.0
    shifted_fields = [fields[i] - (shift if k <= i < l else 0.0) for i in range(n)]
    shifted = _edge_chain_law(float(J), shifted_fields)
    return max(abs(conditioned[cfg] - shifted[cfg]) for cfg in base)


def _log_partition(J, site_factors):
    """log of the partition sum over a +-1 spin chain with coupling J and
    per-site weight factors (array of shape (L, 2) for spins +1, -1)."""
    v = np.array(site_factors[0], dtype=float)
    logscale = 0.0
    T = np.array([[math.exp(J), math.exp(-J)], [math.exp(-J), math.exp(J)]])
    for factors in site_factors[1:]:
        v = (v @ T) * np.asarray(factors, dtype=float)
        top = v.max()
        v /= top
        logscale += math.log(top)
    return logscale + math.log(v.sum())


@dataclass(frozen=True)
class RunConditionalReport:
    """Conditional one-more-site probabilities a_k = P(X(0)=1 | X(1..k)=1)."""

    J: float
    p: float
    N: int
    a: tuple
    strictly_increasing: object
    min_margin: float


def run_conditional_sequence(J, h, p, kmax, N):
    """a_k = P(X(0)=1 | X(1)=...=X(k)=1) for the Ising-edge color process on
    the window [-N, N], k = 1..kmax, by transfer matrices.

    Conditioning multiplies the edge weight by p per -1 edge inside the run,
    so a_k is a ratio of two tilted partition sums.  For J > 0 the sequence
    is strictly increasing (the verdict requires every margin > 1e-8, else
    "inconclusive"); for J = 0 it is constant.
    """
    J, h, p = float(J), float(h), float(p)
    if not 0 < p < 1:
        raise ValueError("p must lie in (0,1)")
    if not 1 <= kmax <= N:
        raise ValueError("need 1 <= kmax <= N")
    L = 2 * N

    def tilted(first_edge):
        # per-site weights e^{h y} times p for each -1 edge in [first_edge, k)
        values = []
        for k in range(1, kmax + 1):
            factors = []
            for idx in range(L):
                i = idx - N
                tilt = p if first_edge <= i < k else 1.0
                factors.append((math.exp(h), math.exp(-h) * tilt))
            values.append(_log_partition(J, factors))
        return values

    num = tilted(0)
    den = tilted(1)
    a = tuple(math.exp(zn - zd) for zn, zd in zip(num, den))
    margins = [a[i + 1] - a[i] for i in range(len(a) - 1)]
    min_margin = min(margins) if margins else 0.0
    if margins and min_margin > 1e-8:
        verdict = True
    elif margins and min_margin < -1e-8:
        verdict = False
    else:
        verdict = "inconclusive"
    return RunConditionalReport(J, p, N, a, verdict, min_margin)


def differinf_window_measures():
    """Two stationary period-3 block laws on the window [6] that color alike
    at density 1/2 but differently at density 1/3.

    Tile Z with blocks of three consecutive sites, draw each block's
    partition i.i.d. from one of the three-site coloring-equality witnesses,
    then shift by an independent uniform offset in {0,1,2}.  The window of
    six sites sees one of three product laws depending on the offset.
    """
    nu1, nu2 = thmA_pair()
    out = []
    for nu in (nu1, nu2):
        pieces = [
            product_rer(nu, nu),
            product_rer(restrict_rer(nu, (3,)), nu, restrict_rer(nu, (1, 2))),
            product_rer(restrict_rer(nu, (2, 3)), nu, restrict_rer(nu, (1,))),
        ]
        third = Fraction(1, 3)
        window = mix(third, pieces[0], mix(Fraction(1, 2), pieces[1], pieces[2]))
        out.append(window)
    return out[0], out[1]
