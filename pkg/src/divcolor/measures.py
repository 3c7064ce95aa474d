"""Exact rational measures on partitions and colorings.

The central object is the class-coloring operator: an RER (random equivalence
relation, i.e. a probability measure on partitions of [n]) is mapped to a law
on {0,1}^n by coloring each class 1 with probability p and 0 otherwise,
independently across classes.  Everything in this module is exact rational
arithmetic: kernels of the operator, uniqueness certificates, membership tests
(is a given color law the image of some RER?), a stochastic-domination oracle,
and positive-association / FKG lattice checks.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .exactla import Infeasible, MaxFlow, nullspace, simplex_solve
from .partitions import (
    IntegerPartition,
    PartitionIndex,
    SetPartition,
    SizeLimitError,
    apply_permutation,
    check_permutation,
    enumerate_integer_partitions,
    enumerate_set_partitions,
    induced_partition,
    integer_shape,
    partitions_with_shape,
    shape_count_in_rer,
)

MEMBERSHIP_CAP = 6
DOMINATES_CAP = 12
ASSOCIATION_CAP = 4


class NotColorProcessError(ValueError):
    """Raised when a representation precondition fails (the input law cannot
    be the image of an RER under the requested construction)."""


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _clean_weights(weights, check_total=True):
    out = {}
    total = Fraction(0)
    for k, w in weights.items():
        w = _frac(w)
        if w < 0:
            raise ValueError(f"negative weight at {k}")
        total += w
        if w != 0:
            out[k] = w
    if check_total and total != 1:
        raise ValueError(f"weights sum to {total}, expected 1")
    return out


@dataclass(frozen=True)
class RERMeasure:
    """Probability measure on set partitions of [n], keyed by RGS tuple."""

    n: int
    weights: dict

    def __post_init__(self):
        clean = {}
        for key, w in self.weights.items():
            pi = key if isinstance(key, SetPartition) else SetPartition(self.n, tuple(key))
            if pi.n != self.n:
                raise ValueError("partition size mismatch")
            clean[pi.rgs] = w
        object.__setattr__(self, "weights", _clean_weights(clean))

    def prob(self, pi):
        rgs = pi.rgs if isinstance(pi, SetPartition) else tuple(pi)
        return self.weights.get(rgs, Fraction(0))

    def support(self):
        return set(self.weights)

    def items(self):
        return [(SetPartition(self.n, rgs), w) for rgs, w in sorted(self.weights.items())]


@dataclass(frozen=True)
class ExchRERMeasure:
    """Probability measure on integer partitions of n (exchangeable RER)."""

    n: int
    weights: dict

    def __post_init__(self):
        clean = {}
        for key, w in self.weights.items():
            shape = key if isinstance(key, IntegerPartition) else IntegerPartition(self.n, tuple(key))
            if shape.n != self.n:
                raise ValueError("shape size mismatch")
            clean[shape.parts] = w
        object.__setattr__(self, "weights", _clean_weights(clean))

    def prob(self, shape):
        parts = shape.parts if isinstance(shape, IntegerPartition) else tuple(shape)
        return self.weights.get(parts, Fraction(0))

    def support(self):
        return set(self.weights)

    def items(self):
        return [(IntegerPartition(self.n, parts), w) for parts, w in sorted(self.weights.items(), reverse=True)]


@dataclass(frozen=True)
class ColorMeasure:
    """Probability measure on {0,1}^n, keyed by bit-strings ('1' = color 1,
    element 1 is the leftmost bit)."""

    n: int
    weights: dict

    def __post_init__(self):
        clean = {}
        for key, w in self.weights.items():
            if len(key) != self.n or any(c not in "01" for c in key):
                raise ValueError(f"bad configuration key {key!r}")
            clean[key] = w
        object.__setattr__(self, "weights", _clean_weights(clean))

    def prob(self, config):
        return self.weights.get(config, Fraction(0))

    def items(self):
        return sorted(self.weights.items())


@dataclass(frozen=True)
class OnesLaw:
    """Law of the number of 1s in a coloring of [n]."""

    n: int
    probs: tuple

    def __post_init__(self):
        probs = tuple(_frac(x) for x in self.probs)
        if len(probs) != self.n + 1:
            raise ValueError("need n+1 probabilities")
        if any(x < 0 for x in probs) or sum(probs) != 1:
            raise ValueError("invalid ones-law")
        object.__setattr__(self, "probs", probs)


@dataclass(frozen=True)
class SignedVector:
    """A signed rational vector over partitions of [n] ('general' space) or
    integer partitions of n ('exchangeable' space); zero coordinates dropped."""

    n: int
    space: str
    coords: dict

    def __post_init__(self):
        if self.space not in ("general", "exchangeable"):
            raise ValueError("space must be 'general' or 'exchangeable'")
        clean = {k: _frac(v) for k, v in self.coords.items() if _frac(v) != 0}
        object.__setattr__(self, "coords", clean)

    def coordinate_sum(self):
        return sum(self.coords.values(), Fraction(0))


def all_configs(n):
    """All bit-strings of length n, lexicographic ('000...' first)."""
    return ["".join(bits) for bits in itertools.product("01", repeat=n)]


def product_measure(n, p):
    """The i.i.d. Bernoulli(p) law on {0,1}^n."""
    p = _frac(p)
    w = {}
    for cfg in all_configs(n):
        k = cfg.count("1")
        w[cfg] = p**k * (1 - p) ** (n - k)
    return ColorMeasure(n, w)


def delta_rer(pi):
    return RERMeasure(pi.n, {pi: Fraction(1)})


def singletons_partition(n):
    return SetPartition(n, tuple(range(n)))


def full_partition(n):
    return SetPartition(n, (0,) * n)


def _phi_entry(cfg, pi, p, q):
    """Probability that coloring the classes of pi i.i.d. produces cfg."""
    out = Fraction(1)
    for block in pi.blocks():
        vals = {cfg[v - 1] for v in block}
        if len(vals) > 1:
            return Fraction(0)
        out *= p if vals == {"1"} else q
    return out


def phi_matrix(n, p):
    """The coloring operator as a 2^n x Bell(n) rational matrix; rows indexed
    by all_configs(n), columns by lexicographic RGS order.  Columns sum to 1."""
    if n > 10:
        raise SizeLimitError("phi_matrix supports n <= 10")
    p = _frac(p)
    if not 0 < p < 1:
        raise ValueError("p must lie strictly between 0 and 1")
    q = 1 - p
    cols = enumerate_set_partitions(n)
    return [[_phi_entry(cfg, pi, p, q) for pi in cols] for cfg in all_configs(n)]


def apply_phi(nu, p):
    """Color law of the RER nu at class-color density p."""
    p = _frac(p)
    q = 1 - p
    out = {}
    for pi, w in nu.items():
        blocks = pi.blocks()
        for colors in itertools.product((0, 1), repeat=len(blocks)):
            cfg = ["0"] * nu.n
            for block, c in zip(blocks, colors):
                if c:
                    for v in block:
                        cfg[v - 1] = "1"
            k = sum(colors)
            key = "".join(cfg)
            out[key] = out.get(key, Fraction(0)) + w * p**k * q ** (len(blocks) - k)
    return ColorMeasure(nu.n, out)


def phi_exch(nu, p):
    """Ones-law of the color process of an exchangeable RER given by shapes."""
    p = _frac(p)
    q = 1 - p
    probs = [Fraction(0)] * (nu.n + 1)
    for shape, w in nu.items():
        parts = shape.parts
        for chosen in itertools.product((0, 1), repeat=len(parts)):
            k = sum(sz for sz, c in zip(parts, chosen) if c)
            s = sum(chosen)
            probs[k] += w * p**s * q ** (len(parts) - s)
    return OnesLaw(nu.n, tuple(probs))


def ones_law_of(mu):
    probs = [Fraction(0)] * (mu.n + 1)
    for cfg, w in mu.weights.items():
        probs[cfg.count("1")] += w
    return OnesLaw(mu.n, tuple(probs))


def symmetrize(nu):
    """Shape law of an RER on [n] (an ExchRERMeasure; exact)."""
    out = {}
    for pi, w in nu.items():
        parts = integer_shape(pi).parts
        out[parts] = out.get(parts, Fraction(0)) + w
    return ExchRERMeasure(nu.n, out)


def exch_to_rer(nu):
    """The exchangeable RER on [n] with the given shape law: uniform over the
    set partitions of each shape."""
    out = {}
    for shape, w in nu.items():
        pis = partitions_with_shape(nu.n, shape)
        share = w / shape_count_in_rer(shape)
        for pi in pis:
            out[pi.rgs] = share
    return RERMeasure(nu.n, out)


def mix(a, nu1, nu2):
    """Convex combination a*nu1 + (1-a)*nu2 of two measures of the same type."""
    a = _frac(a)
    cls = type(nu1)
    keys = set(nu1.weights) | set(nu2.weights)
    w = {k: a * nu1.weights.get(k, Fraction(0)) + (1 - a) * nu2.weights.get(k, Fraction(0)) for k in keys}
    return cls(nu1.n, w)


def permute_color_measure(sigma, mu):
    """Image of mu under relabeling sites by sigma (one-line form): the new
    color at site sigma(i) is the old color at site i."""
    check_permutation(sigma, mu.n)
    out = {}
    for cfg, w in mu.weights.items():
        new = ["0"] * mu.n
        for i in range(mu.n):
            new[sigma[i] - 1] = cfg[i]
        out["".join(new)] = w
    return ColorMeasure(mu.n, out)


def permute_rer(sigma, nu):
    """Image of nu under relabeling sites by sigma."""
    out = {}
    for pi, w in nu.items():
        key = apply_permutation(sigma, pi).rgs
        out[key] = out.get(key, Fraction(0)) + w
    return RERMeasure(nu.n, out)


def extend_T(nu):
    """Push an RER on [n] to [n+1] by making n+1 a singleton class."""
    out = {rgs + (max(rgs) + 1,): w for rgs, w in nu.weights.items()}
    return RERMeasure(nu.n + 1, out)


def extend_S(nu):
    """Push a shape law on n to n+1 by appending a part of size 1 to every shape."""
    out = {}
    for shape, w in nu.items():
        out[tuple(sorted(shape.parts + (1,), reverse=True))] = w
    return ExchRERMeasure(nu.n + 1, out)


def restrict_rer(nu, sites):
    """Law of the partition induced on an increasing tuple of sites of [n]."""
    sites = tuple(sites)
    out = {}
    for rgs, w in nu.weights.items():
        key = induced_partition(SetPartition(nu.n, rgs), sites).rgs
        out[key] = out.get(key, Fraction(0)) + w
    return RERMeasure(len(sites), out)


def product_rer(*nus):
    """Independent concatenation: partition [n1+...+nk] by drawing each block
    of sites from its own law independently, with no classes shared across
    blocks."""
    total = sum(nu.n for nu in nus)
    out = {(): Fraction(1)}
    for nu in nus:
        merged = {}
        for prefix, w in out.items():
            shift = (max(prefix) + 1) if prefix else 0
            for rgs, w2 in nu.weights.items():
                key = prefix + tuple(x + shift for x in rgs)
                merged[key] = merged.get(key, Fraction(0)) + w * w2
        out = merged
    return RERMeasure(total, out)


def same_class_prob(nu, u, v):
    """P(u and v lie in the same class) under nu."""
    return sum((w for pi, w in nu.items() if pi.same_class(u, v)), Fraction(0))


def pair_ones_prob(mu, u, v):
    """P(X_u = X_v = 1) under mu."""
    return sum((w for cfg, w in mu.weights.items() if cfg[u - 1] == "1" and cfg[v - 1] == "1"), Fraction(0))


def marginal_prob(mu, u):
    return sum((w for cfg, w in mu.weights.items() if cfg[u - 1] == "1"), Fraction(0))


def covariance(mu, u, v):
    return pair_ones_prob(mu, u, v) - marginal_prob(mu, u) * marginal_prob(mu, v)


# ---------------------------------------------------------------------------
# kernels and uniqueness


def _exch_columns(n):
    """Columns of the exchangeable coloring operator: ones-law of each shape."""
    shapes = enumerate_integer_partitions(n)
    return shapes


def kernel(n, p, space="general"):
    """Exact basis of the null space of the coloring operator at density p.

    space='general': signed measures over set partitions of [n] (coordinates
    in lexicographic RGS order).  space='exchangeable': signed measures over
    integer partitions of n, with the operator mapping to ones-laws.
    Every basis vector has coordinate sum 0.
    """
    p = _frac(p)
    if space == "general":
        rows = phi_matrix(n, p)
        index = PartitionIndex.build(n)
        basis = nullspace(rows, len(index))
        return [
            SignedVector(n, "general", {index.at(i).rgs: x for i, x in enumerate(vec)})
            for vec in basis
        ]
    if space == "exchangeable":
        shapes = _exch_columns(n)
        cols = [phi_exch(ExchRERMeasure(n, {s: 1}), p).probs for s in shapes]
        rows = [[cols[j][i] for j in range(len(shapes))] for i in range(n + 1)]
        basis = nullspace(rows, len(shapes))
        return [
            SignedVector(n, "exchangeable", {shapes[i].parts: x for i, x in enumerate(vec)})
            for vec in basis
        ]
    raise ValueError("space must be 'general' or 'exchangeable'")


def all_p_equal(nu1, nu2):
    """True iff the two RERs produce the same color law for every density p.

    The color law is polynomial of degree <= n in p, so agreement at the n+1
    points p = k/(n+2), k = 1..n+1 certifies agreement for all p.
    """
    if nu1.n != nu2.n or type(nu1) is not type(nu2):
        raise ValueError("measures must live on the same space")
    n = nu1.n
    op = phi_exch if isinstance(nu1, ExchRERMeasure) else apply_phi
    return all(op(nu1, Fraction(k, n + 2)) == op(nu2, Fraction(k, n + 2)) for k in range(1, n + 2))


def fingerprint_class_count_pgf(nu, S):
    """Coefficients (constant term first) of E[x^N] where N is the number of
    classes induced on the subset S."""
    if isinstance(nu, ExchRERMeasure):
        nu = exch_to_rer(nu)
    coeffs = [Fraction(0)] * (nu.n + 1)
    for pi, w in nu.items():
        coeffs[induced_partition(pi, S).num_classes()] += w
    return tuple(coeffs)


def fingerprint_size_mean(nu, T):
    """Expected number of classes of size exactly T."""
    if isinstance(nu, ExchRERMeasure):
        return sum(
            (w * sum(1 for k in shape.parts if k == T) for shape, w in nu.items()),
            Fraction(0),
        )
    return sum(
        (w * sum(1 for b in pi.blocks() if len(b) == T) for pi, w in nu.items()),
        Fraction(0),
    )


def fingerprint_class_prob(nu, C):
    """Probability that C is exactly one of the classes."""
    C = frozenset(C)
    return sum((w for pi, w in nu.items() if C in pi.blocks()), Fraction(0))


@dataclass(frozen=True)
class UniquenessCertificate:
    unique: bool
    vector: object  # SignedVector witnessing non-uniqueness, else None
    detail: str


def _coords_and_support(nu, space):
    if space == "general":
        if isinstance(nu, ExchRERMeasure):
            nu = exch_to_rer(nu)
        index = PartitionIndex.build(nu.n)
        coords = [index.at(i).rgs for i in range(len(index))]
        supp = nu.support()
    else:
        if isinstance(nu, RERMeasure):
            nu = symmetrize(nu)
        coords = [s.parts for s in enumerate_integer_partitions(nu.n)]
        supp = nu.support()
    return nu, coords, supp


def is_unique(nu, p, relative_to="general"):
    """Decide whether nu is the only RER (within the chosen space) with its
    color law at density p.  Returns a UniquenessCertificate.

    Procedure: (a) if some nonzero kernel vector vanishes off supp(nu), nu is
    not unique; (b) otherwise maximize the off-support coordinate sum over
    kernel vectors that are non-negative off the support, capped at 1, by
    exact LP: the optimum is 1 exactly when a witness exists.
    """
    nu, coords, supp = _coords_and_support(nu, relative_to)
    basis = kernel(nu.n, p, relative_to)
    if not basis:
        return UniquenessCertificate(True, None, "kernel is trivial")
    off = [c for c in coords if c not in supp]
    k = len(basis)
    B = [[vec.coords.get(c, Fraction(0)) for vec in basis] for c in off]  # |off| x k
    # (a) kernel vectors supported inside supp(nu)
    inside = nullspace(B, k) if off else [tuple([Fraction(1)] + [Fraction(0)] * (k - 1))]
    for t in inside:
        v = _combine(basis, t, nu.n, relative_to)
        if v.coords:
            return UniquenessCertificate(False, v, "kernel vector supported inside supp(nu)")
    if not off:
        return UniquenessCertificate(True, None, "kernel vanishes on the full support space")
    # (b) exact LP: maximize sum of off-support coordinates, capped at 1
    m = len(off)
    nvars = 2 * k + m + 1  # t+, t-, s (off-support values), cap slack
    A = []
    b = []
    for i in range(m):
        row = [Fraction(0)] * nvars
        for j in range(k):
            row[j] = B[i][j]
            row[k + j] = -B[i][j]
        row[2 * k + i] = Fraction(-1)
        A.append(row)
        b.append(Fraction(0))
    cap = [Fraction(0)] * nvars
    for i in range(m):
        cap[2 * k + i] = Fraction(1)
    cap[2 * k + m] = Fraction(1)
    A.append(cap)
    b.append(Fraction(1))
    cost = [Fraction(0)] * nvars
    for i in range(m):
        cost[2 * k + i] = Fraction(-1)
    x, obj = simplex_solve(A, b, cost)
    if -obj == 1:
        t = [x[j] - x[k + j] for j in range(k)]
        v = _combine(basis, t, nu.n, relative_to)
        return UniquenessCertificate(False, v, "kernel vector non-negative off supp(nu)")
    return UniquenessCertificate(True, None, f"LP optimum {-obj} < 1: no admissible kernel vector")


def _combine(basis, t, n, space):
    coords = {}
    for coef, vec in zip(t, basis):
        if coef == 0:
            continue
        for key, val in vec.coords.items():
            coords[key] = coords.get(key, Fraction(0)) + coef * val
    return SignedVector(n, space, coords)


# ---------------------------------------------------------------------------
# membership and explicit representations


def cp_membership(mu, p):
    """Find an RER whose color law at density p equals mu exactly, or return
    None when no such RER exists (exact phase-1 simplex)."""
    n = mu.n
    if n > MEMBERSHIP_CAP:
        raise SizeLimitError(f"cp_membership supports n <= {MEMBERSHIP_CAP}")
    A = phi_matrix(n, p)
    b = [mu.prob(cfg) for cfg in all_configs(n)]
    index = PartitionIndex.build(n)
    try:
        x, _ = simplex_solve(A, b, [Fraction(0)] * len(index))
    except Infeasible:
        return None
    return RERMeasure(n, {index.at(i).rgs: xi for i, xi in enumerate(x) if xi != 0})


def represent_n2(mu):
    """Exact (nu, p) with color law mu on [2]; requires equal off-diagonal
    weights and non-negative pairwise correlation."""
    if mu.n != 2:
        raise ValueError("represent_n2 needs n=2")
    m11, m10, m01, m00 = (mu.prob(c) for c in ("11", "10", "01", "00"))
    if m10 != m01:
        raise NotColorProcessError("representation requires mu(10) = mu(01)")
    if covariance(mu, 1, 2) < 0:
        raise NotColorProcessError("representation requires non-negative correlation")
    p = m11 + m01
    if p in (0, 1):
        nu = delta_rer(full_partition(2))
        return nu, p
    q_singletons = m01 / ((m11 + m01) * (m01 + m00))
    nu = RERMeasure(
        2,
        {
            singletons_partition(2): q_singletons,
            full_partition(2): 1 - q_singletons,
        },
    )
    return nu, p


@dataclass(frozen=True)
class N3Representation:
    nu: RERMeasure
    relabeling: tuple  # permutation applied internally so that the pair with
    # the smallest agreement weight plays the role of {1,2}


_N3_SWAPS = {
    "110": (1, 2, 3),  # pair {1,2} already in place
    "101": (1, 3, 2),  # swap 2,3 brings pair {1,3} to {1,2}
    "011": (3, 2, 1),  # swap 1,3 brings pair {2,3} to {1,2}
}


def represent_n3_half(mu):
    """Exact RER whose color law at density 1/2 is mu, for 0-1-symmetric mu on
    [3] with non-negative pairwise correlations."""
    if mu.n != 3:
        raise ValueError("represent_n3_half needs n=3")
    for cfg in all_configs(3):
        flipped = "".join("1" if c == "0" else "0" for c in cfg)
        if mu.prob(cfg) != mu.prob(flipped):
            raise NotColorProcessError("representation requires 0-1 symmetry")
    for u, v in ((1, 2), (1, 3), (2, 3)):
        if covariance(mu, u, v) < 0:
            raise NotColorProcessError("representation requires non-negative pairwise correlations")
    pair_weights = {cfg: mu.prob(cfg) for cfg in ("110", "101", "011")}
    smallest = min(pair_weights, key=lambda c: (pair_weights[c], c))
    sigma = _N3_SWAPS[smallest]
    mu_r = permute_color_measure(sigma, mu)
    p1 = mu_r.prob("111")
    p2 = mu_r.prob("110")
    p3 = mu_r.prob("101")
    p4 = mu_r.prob("011")
    q_full = 2 * (p1 + p2 - p3 - p4)
    q_13 = 4 * p3 - 4 * p2
    q_23 = 4 * p4 - 4 * p2
    q_singletons = 8 * p2
    nu_r = RERMeasure(
        3,
        {
            full_partition(3): q_full,
            SetPartition.from_blocks(3, [{1, 3}, {2}]): q_13,
            SetPartition.from_blocks(3, [{1}, {2, 3}]): q_23,
            singletons_partition(3): q_singletons,
        },
    )
    # undo the relabeling (the swaps are involutions)
    nu = permute_rer(sigma, nu_r)
    return N3Representation(nu, sigma)


# ---------------------------------------------------------------------------
# stochastic domination


def _mask(cfg):
    return sum(1 << i for i, c in enumerate(cfg) if c == "1")


def dominates(mu1, mu2):
    """True iff mu2 stochastically dominates mu1 (a monotone coupling exists).

    Decided exactly: weights are scaled to a common integer denominator and a
    max-flow is run on the bipartite graph joining each configuration x (with
    supply mu1(x)) to the configurations above it (with demand mu2(y))."""
    if mu1.n != mu2.n:
        raise ValueError("measures must share n")
    n = mu1.n
    if n > DOMINATES_CAP:
        raise SizeLimitError(f"dominates supports n <= {DOMINATES_CAP}")
    denom = lcm(*(w.denominator for w in itertools.chain(mu1.weights.values(), mu2.weights.values())))
    lows = [(cfg, int(w * denom)) for cfg, w in mu1.weights.items()]
    highs = [(cfg, int(w * denom)) for cfg, w in mu2.weights.items()]
    src = len(lows) + len(highs)
    sink = src + 1
    net = MaxFlow(sink + 1)
    for i, (_, supply) in enumerate(lows):
        net.add_edge(src, i, supply)
    for j, (_, demand) in enumerate(highs):
        net.add_edge(len(lows) + j, sink, demand)
    for i, (x, _) in enumerate(lows):
        mx = _mask(x)
        for j, (y, _) in enumerate(highs):
            my = _mask(y)
            if mx & ~my == 0:
                net.add_edge(i, len(lows) + j, denom)
    return net.max_flow(src, sink) == denom


@functools.lru_cache(maxsize=None)
def up_sets(n):
    """All up-closed subsets of {0,1}^n.  Each up-set is an int whose bit m is
    set iff the configuration with coordinate mask m belongs to the set."""
    size = 1 << n
    out = []
    for subset in range(1 << size):
        ok = True
        for m in range(size):
            if subset >> m & 1:
                for b in range(n):
                    if not subset >> (m | 1 << b) & 1:
                        ok = False
                        break
            if not ok:
                break
        if ok:
            out.append(subset)
    return tuple(out)


def _mask_probs(mu):
    w = [Fraction(0)] * (1 << mu.n)
    for cfg, weight in mu.weights.items():
        w[_mask(cfg)] = weight
    return w


def _upset_prob(w, U):
    return sum((w[m] for m in range(len(w)) if U >> m & 1), Fraction(0))


def dominates_by_upsets(mu1, mu2):
    """Brute-force domination check: mu1(U) <= mu2(U) for every up-set U.
    Exponential in 2^n; the independent cross-check for dominates()."""
    if mu1.n != mu2.n:
        raise ValueError("measures must share n")
    n = mu1.n
    if n > ASSOCIATION_CAP:
        raise SizeLimitError("up-set enumeration supports n <= 4")
    w1 = _mask_probs(mu1)
    w2 = _mask_probs(mu2)
    return all(_upset_prob(w1, U) <= _upset_prob(w2, U) for U in up_sets(n))


def _configs_of_upset(n, U):
    return [cfg for cfg in all_configs(n) if U >> _mask(cfg) & 1]


def positive_association_check(mu):
    """Exact verdict whether every pair of increasing events is non-negatively
    correlated; returns (bool, witness) with witness = (A, B, P(A&B), P(A), P(B))
    as config lists when violated."""
    n = mu.n
    if n > ASSOCIATION_CAP:
        raise SizeLimitError("positive_association_check supports n <= 4")
    w = _mask_probs(mu)
    sets = up_sets(n)
    probs = [_upset_prob(w, U) for U in sets]
    for a, U in enumerate(sets):
        for b in range(a, len(sets)):
            V = sets[b]
            p_inter = _upset_prob(w, U & V)
            if p_inter < probs[a] * probs[b]:
                return False, (_configs_of_upset(n, U), _configs_of_upset(n, V), p_inter, probs[a], probs[b])
    return True, None


def fkg_lattice_check(mu):
    """Exact check of the lattice condition
    mu(x v y) mu(x ^ y) >= mu(x) mu(y) for all configurations x, y
    (equivalently: conditional pairwise positive correlation).  Requires full
    support so that all conditionings are well-defined."""
    configs = all_configs(mu.n)
    if any(mu.prob(c) == 0 for c in configs):
        raise ValueError("fkg_lattice_check requires full support")
    masks = [_mask(c) for c in configs]
    by_mask = {m: mu.prob(c) for m, c in zip(masks, configs)}
    for mx in masks:
        for my in masks:
            join = mx | my
            meet = mx & my
            if by_mask[join] * by_mask[meet] < by_mask[mx] * by_mask[my]:
                return False
    return True
