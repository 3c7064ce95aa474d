"""Finite paint-boxes and their mixing laws.

A paint-box is a non-increasing sequence p_1 >= p_2 >= ... > 0 with sum <= 1:
each site independently joins box i with probability p_i and otherwise stays
a singleton (the leftover "dust" mass is the deficit 1 - sum p_i).  The
induced exchangeable color process at class-color density p is a mixture of
i.i.d. laws; the mixing variable has an explicit atomic distribution obtained
by summing p_i over an independent p-coin per box.  This module computes that
distribution exactly, the induced partition law on a finite window, finite
color marginals, the p = 1/2 splitting identity and its decomposition into
one-box paint-boxes (with the resulting non-uniqueness witnesses), and exact
uniqueness audits at p != 1/2 for one-box, two-box and diagonal three-box
targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exactla import feasible_point
from .measures import ColorMeasure, RERMeasure, all_configs
from .partitions import SizeLimitError, enumerate_integer_partitions, partitions_with_shape

PAINTBOX_WINDOW_CAP = 8
MARGINAL_CAP = 12

HALF = Fraction(1, 2)


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class PaintBox:
    """Finite paint-box: positive non-increasing box probabilities, sum <= 1."""

    probs: tuple

    def __post_init__(self):
        probs = tuple(_frac(x) for x in self.probs)
        if any(x <= 0 for x in probs):
            raise ValueError("box probabilities must be positive")
        if any(probs[i] < probs[i + 1] for i in range(len(probs) - 1)):
            raise ValueError("box probabilities must be non-increasing")
        if sum(probs, Fraction(0)) > 1:
            raise ValueError("box probabilities must sum to at most 1")
        object.__setattr__(self, "probs", probs)

    @property
    def total(self):
        return sum(self.probs, Fraction(0))

    @property
    def deficit(self):
        return 1 - self.total


def simple_box(s):
    """The one-box paint-box (s,), degenerating to the empty box at s = 0."""
    s = _frac(s)
    return PaintBox(() if s == 0 else (s,))


@dataclass(frozen=True)
class AtomicXi:
    """Atomic law of a mixing variable in [0,1]: atom value -> weight."""

    atoms: dict

    def __post_init__(self):
        clean = {}
        total = Fraction(0)
        for s, w in self.atoms.items():
            s, w = _frac(s), _frac(w)
            if not 0 <= s <= 1:
                raise ValueError(f"atom {s} outside [0,1]")
            if w < 0:
                raise ValueError(f"negative weight at atom {s}")
            total += w
            if w != 0:
                clean[s] = clean.get(s, Fraction(0)) + w
        if total != 1:
            raise ValueError(f"weights sum to {total}, expected 1")
        object.__setattr__(self, "atoms", clean)

    def support(self):
        return sorted(self.atoms)

    def mean(self):
        return sum((s * w for s, w in self.atoms.items()), Fraction(0))

    def min_atom(self):
        return min(self.atoms)

    def max_atom(self):
        return max(self.atoms)

    def is_symmetric(self):
        """True iff the law is invariant under s -> 1 - s."""
        return all(self.atoms.get(1 - s) == w for s, w in self.atoms.items())


@dataclass(frozen=True)
class SimpleMixture:
    """Mixture of one-box paint-boxes: box size s in [0,1] -> weight."""

    atoms: dict

    def __post_init__(self):
        clean = {}
        total = Fraction(0)
        for s, w in self.atoms.items():
            s, w = _frac(s), _frac(w)
            if not 0 <= s <= 1:
                raise ValueError(f"box size {s} outside [0,1]")
            if w < 0:
                raise ValueError(f"negative weight at box size {s}")
            total += w
            if w != 0:
                clean[s] = clean.get(s, Fraction(0)) + w
        if total != 1:
            raise ValueError(f"weights sum to {total}, expected 1")
        object.__setattr__(self, "atoms", clean)


@dataclass(frozen=True)
class PaintboxMixture:
    """Finite mixture of paint-boxes: PaintBox -> weight."""

    atoms: dict

    def __post_init__(self):
        clean = {}
        total = Fraction(0)
        for pb, w in self.atoms.items():
            if not isinstance(pb, PaintBox):
                raise TypeError("atoms must be keyed by PaintBox")
            w = _frac(w)
            if w < 0:
                raise ValueError("negative mixture weight")
            total += w
            if w != 0:
                clean[pb] = clean.get(pb, Fraction(0)) + w
        if total != 1:
            raise ValueError(f"weights sum to {total}, expected 1")
        object.__setattr__(self, "atoms", clean)


def xi_distribution(pb, p):
    """Exact mixing-variable law of the paint-box color process at density p.

    Each box i carries an independent p-coin; the mixing variable equals
    deficit*p plus the sum of p_i over boxes whose coin came up 1.  Its atoms
    therefore range over sign patterns of the boxes, with the all-minus atom
    deficit*p and the all-plus atom deficit*p + sum(p_i).  Boxes are folded
    in one at a time so coinciding atoms merge as they appear.
    """
    p = _frac(p)
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0,1]")
    out = {pb.deficit * p: Fraction(1)}
    for q in pb.probs:
        merged = {}
        for value, weight in out.items():
            if p != 1:
                merged[value] = merged.get(value, Fraction(0)) + weight * (1 - p)
            if p != 0:
                merged[value + q] = merged.get(value + q, Fraction(0)) + weight * p
        out = merged
    return AtomicXi(out)


def _assignment_sum(probs, sizes, counts, i, memo):
    """Sum over injective assignments of the remaining blocks to boxes i.. of
    the product of p_box^(block size); counts[j] blocks of size sizes[j]
    remain.  Blocks of equal size are interchangeable, so the recursion is
    memoized on the multiset of remaining sizes."""
    if not any(counts):
        return Fraction(1)
    if i == len(probs):
        return Fraction(0)
    key = (i, counts)
    if key in memo:
        return memo[key]
    total = _assignment_sum(probs, sizes, counts, i + 1, memo)
    for j, c in enumerate(counts):
        if c:
            reduced = counts[:j] + (c - 1,) + counts[j + 1 :]
            total += c * probs[i] ** sizes[j] * _assignment_sum(probs, sizes, reduced, i + 1, memo)
    memo[key] = total
    return total


def _shape_prob(pb, shape):
    """Probability that the paint-box partition of [n] equals one fixed set
    partition with the given class-size shape.  Non-singleton classes must
    occupy distinct boxes; singleton classes may occupy a box or fall to dust."""
    sizes = sorted(set(shape.parts))
    counts = tuple(shape.parts.count(s) for s in sizes)
    n_singletons = counts[0] if sizes and sizes[0] == 1 else 0
    memo = {}
    total = Fraction(0)
    for dust in range(n_singletons + 1):
        remaining = list(counts)
        if dust:
            remaining[0] -= dust
        total += (
            comb(n_singletons, dust)
            * pb.deficit**dust
            * _assignment_sum(pb.probs, sizes, tuple(remaining), 0, memo)
        )
    return total


def paintbox_rer_on_n(pb, n):
    """Exact law of the partition a paint-box induces on [n]."""
    if n > PAINTBOX_WINDOW_CAP:
        raise SizeLimitError(f"paintbox_rer_on_n supports n <= {PAINTBOX_WINDOW_CAP}")
    out = {}
    for shape in enumerate_integer_partitions(n):
        w = _shape_prob(pb, shape)
        if w == 0:
            continue
        for pi in partitions_with_shape(n, shape):
            out[pi.rgs] = w
    return RERMeasure(n, out)


def as_xi(source, p):
    """The mixing-variable law of a PaintBox, AtomicXi, SimpleMixture or
    PaintboxMixture at density p (AtomicXi inputs pass through unchanged)."""
    if isinstance(source, AtomicXi):
        return source
    if isinstance(source, PaintBox):
        return xi_distribution(source, p)
    if isinstance(source, SimpleMixture):
        pieces = [(simple_box(s), w) for s, w in source.atoms.items()]
    elif isinstance(source, PaintboxMixture):
        pieces = list(source.atoms.items())
    else:
        raise TypeError(f"cannot interpret {type(source).__name__} as a mixing law")
    out = {}
    for pb, w in pieces:
        for value, wt in xi_distribution(pb, p).atoms.items():
            out[value] = out.get(value, Fraction(0)) + w * wt
    return AtomicXi(out)


def _paintbox_moments(pb, p, jmax):
    """Exact moments E[s^j], j = 0..jmax, of the mixing variable of pb at
    density p, by folding boxes into the moment vector: adding an independent
    Bernoulli(p)-of-q increment maps E[S^j] to (1-p)E[S^j] + p E[(S+q)^j]."""
    base = pb.deficit * p
    m = [base**j for j in range(jmax + 1)]
    for q in pb.probs:
        powers = [q**t for t in range(jmax + 1)]
        m = [
            (1 - p) * m[j] + p * sum(comb(j, t) * powers[t] * m[j - t] for t in range(j + 1))
            for j in range(jmax + 1)
        ]
    return m


def _moments(source, p, jmax):
    """Exact moments E[s^j] of the mixing variable of any supported source."""
    if isinstance(source, PaintBox):
        return _paintbox_moments(source, p, jmax)
    if isinstance(source, PaintboxMixture):
        pieces = [(_paintbox_moments(pb, p, jmax), w) for pb, w in source.atoms.items()]
        return [sum((w * m[j] for m, w in pieces), Fraction(0)) for j in range(jmax + 1)]
    xi = as_xi(source, p)
    return [
        sum((w * s**j for s, w in xi.atoms.items()), Fraction(0)) for j in range(jmax + 1)
    ]


def marginal_color_measure(source, p, n):
    """Exact color law on [n] of the mixture of i.i.d. laws described by the
    source (a PaintBox, AtomicXi, SimpleMixture or PaintboxMixture).

    Only the mixing moments up to order n enter: a configuration with k ones
    has probability E[s^k (1-s)^(n-k)], expanded binomially.  This keeps the
    computation polynomial in the number of boxes.
    """
    if n > MARGINAL_CAP:
        raise SizeLimitError(f"marginal_color_measure supports n <= {MARGINAL_CAP}")
    p = _frac(p)
    m = _moments(source, p, n)
    by_ones = [
        sum((-1) ** j * comb(n - k, j) * m[k + j] for j in range(n - k + 1))
        for k in range(n + 1)
    ]
    return ColorMeasure(n, {cfg: by_ones[cfg.count("1")] for cfg in all_configs(n)})


def split_identity_check(p1, p2, n, p=HALF):
    """Whether the two-box (p1,p2) color marginal on [n] at density p equals
    the even mixture of the one-box marginals at sizes p1+p2 and p1-p2.
    The identity holds exactly at p = 1/2; passing another p probes where it
    fails."""
    p1, p2 = _frac(p1), _frac(p2)
    if not (p1 >= p2 > 0 and p1 + p2 <= 1):
        raise ValueError("need p1 >= p2 > 0 with p1 + p2 <= 1")
    pair = marginal_color_measure(PaintBox((p1, p2)), p, n)
    hi = marginal_color_measure(simple_box(p1 + p2), p, n)
    lo = marginal_color_measure(simple_box(p1 - p2), p, n)
    blend = ColorMeasure(n, {cfg: (hi.prob(cfg) + lo.prob(cfg)) / 2 for cfg in all_configs(n)})
    return pair == blend


def mainp12_decompose(xi):
    """The unique mixture of one-box paint-boxes with the given mixing law at
    density 1/2.  An atom pair at 1/2 +- a folds to box size 2a; an atom at
    1/2 stays as the empty box.  Requires the law to be symmetric about 1/2."""
    if not xi.is_symmetric():
        raise ValueError("mixing law must be symmetric about 1/2")
    out = {}
    for s, w in xi.atoms.items():
        if s > HALF:
            out[2 * s - 1] = 2 * w
        elif s == HALF:
            out[Fraction(0)] = w
    return SimpleMixture(out)


def unprop_witness(a, b):
    """Two distinct paint-box mixtures with the same color process at density
    1/2: the even mixture of one-box sizes a and b versus the point mass at
    the two-box ((a+b)/2, (b-a)/2)."""
    a, b = _frac(a), _frac(b)
    if not 0 <= a < b <= 1:
        raise ValueError("need 0 <= a < b <= 1")
    rho = PaintboxMixture({simple_box(a): HALF, simple_box(b): HALF})
    rho_prime = PaintboxMixture({PaintBox(((a + b) / 2, (b - a) / 2)): Fraction(1)})
    return rho, rho_prime


def support_subset(pb1, pb2, p):
    """Whether every mixing-variable atom of pb1 at density p is also an atom
    of pb2 at density p."""
    return set(xi_distribution(pb1, p).atoms) <= set(xi_distribution(pb2, p).atoms)


@dataclass(frozen=True)
class UniquenessAudit:
    """Outcome of an exact uniqueness audit of a paint-box at density p.

    candidates lists every pure paint-box (at most three boxes) whose mixing
    support embeds in the target's; system records, per target atom, the
    target weight and each non-target candidate's weight there.  When unique,
    the recorded linear system (mixture weights >= 0 summing to 1 matching
    every atom) is infeasible; otherwise mixture is a reproducing non-target
    mixture."""

    unique: bool
    target: PaintBox
    p: Fraction
    family: str
    candidates: tuple
    system: tuple
    mixture: dict | None
    note: str


def _embedding_candidates(target, p, supp):
    """All pure paint-boxes whose mixing support at density p embeds in the
    target's.  The target's support has at most four atoms, so candidates
    have at most three boxes, and three-box candidates must be diagonal
    (any other pattern yields at least five distinct atoms).  Box sizes are
    recovered by matching the candidate's extreme and second atoms to target
    atoms, then checked by full subset comparison."""
    found = []

    def consider(probs):
        try:
            pb = PaintBox(probs)
        except ValueError:
            return
        if pb not in found and support_subset(pb, target, p):
            found.append(pb)

    consider(())
    high = [a for a in supp if a > p]
    for a in high:
        s = (a - p) / (1 - p)
        if 0 < s <= 1:
            consider((s,))
    for a in high:
        sigma = (a - p) / (1 - p)
        for b in supp:
            s1 = b - p + sigma * p
            s2 = sigma - s1
            if s1 >= s2 > 0:
                consider((s1, s2))
    for a in high:
        t = (a - p) / (3 * (1 - p))
        if 0 < t <= Fraction(1, 3):
            consider((t, t, t))
    return tuple(found)


def uniqueness_audit(target, p):
    """Exact audit of whether the paint-box target is the only exchangeable
    RER with its color process at density p (p != 1/2).

    Supported targets: one box, two boxes, or three equal boxes.  Densities
    below 1/2 are audited at the complementary density (swapping the two
    colors exchanges the densities and preserves equality of color laws).
    The audit enumerates every pure paint-box whose mixing support embeds in
    the target's and decides, by exact linear feasibility, whether a mixture
    of the non-target candidates reproduces the target's mixing law.
    """
    p = _frac(p)
    if not 0 < p < 1 or p == HALF:
        raise ValueError("audit requires p in (0,1) with p != 1/2 (at 1/2 uniqueness fails)")
    k = len(target.probs)
    if k == 1:
        family = "one-box"
    elif k == 2:
        family = "two-box"
    elif k == 3 and len(set(target.probs)) == 1:
        family = "diagonal-three-box"
    else:
        raise ValueError("audit covers one-box, two-box and diagonal three-box targets only")
    audited_p = p if p > HALF else 1 - p
    note = "" if audited_p == p else f"audited at the complementary density {audited_p}"
    xi_target = xi_distribution(target, audited_p)
    supp = xi_target.support()
    candidates = _embedding_candidates(target, audited_p, supp)
    if target not in candidates:
        raise AssertionError("target must embed in its own support")
    others = [c for c in candidates if c != target]
    other_xis = [xi_distribution(c, audited_p).atoms for c in others]
    system = tuple(
        (atom, xi_target.atoms[atom], tuple(x.get(atom, Fraction(0)) for x in other_xis))
        for atom in supp
    )
    if not others:
        return UniquenessAudit(
            True, target, audited_p, family, candidates, system, None,
            note or "no other paint-box embeds in the mixing support",
        )
    A = [list(row) for _, _, row in system]
    b = [wt for _, wt, _ in system]
    A.append([Fraction(1)] * len(others))
    b.append(Fraction(1))
    point = feasible_point(A, b)
    if point is None:
        return UniquenessAudit(
            True, target, audited_p, family, candidates, system, None,
            note or "mixing system over the non-target candidates is infeasible",
        )
    mixture = {others[i]: point[i] for i in range(len(others)) if point[i] != 0}
    return UniquenessAudit(
        False, target, audited_p, family, candidates, system, mixture,
        "a non-target mixture reproduces the mixing law",
    )
