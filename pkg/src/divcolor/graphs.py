"""Random-cluster, spin-model, and random-walk RERs on finite graphs.

Exact side: the random-cluster (FK) law on a tiny graph as an exact rational
RER, the Ising and fuzzy-Potts spin laws by enumeration, and coupling checks
confirming that coloring the FK partition reproduces the spin marginals —
testing both candidate edge-probability conventions alpha = 1 - e^(-2J) and
alpha = 1 - e^(-J) and reporting which one matches.

Monte-Carlo side: a single-edge heat-bath sampler for the FK law, coalescing
random walks on a torus (classes = walkers that have met by time T, a lower
bound for the ever-coalescing partition), random-walk-range partitions
(classes = equal walk positions), the lexicographic-least factor map that
colors any partition sample, and estimators for pair correlations, the
box-averaged ergodicity statistic, and cluster densities.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .measures import ColorMeasure, RERMeasure
from .partitions import SetPartition, SizeLimitError, canonical_rgs
from .rng import stream

FK_EDGE_CAP = 20
FK_VERTEX_CAP = 8
SPIN_VERTEX_CAP = 8
TORUS_SITE_CAP = 10**6


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class FiniteGraph:
    """Simple undirected graph on vertices 1..n."""

    n: int
    edges: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        seen = set()
        clean = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u},{v}) outside vertex range")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            clean.append(key)
        object.__setattr__(self, "edges", tuple(sorted(clean)))

    @classmethod
    def from_text(cls, text, n=None):
        """Parse an edge list, one "u v" pair per line."""
        edges = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            u, v = line.split()
            edges.append((int(u), int(v)))
        if n is None:
            n = max((max(e) for e in edges), default=1)
        return cls(n, tuple(edges))

    def to_text(self):
        return "\n".join(f"{u} {v}" for u, v in self.edges)

    @classmethod
    def path(cls, n):
        return cls(n, tuple((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n):
        return cls(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))

    @classmethod
    def complete(cls, n):
        return cls(n, tuple(itertools.combinations(range(1, n + 1), 2)))

    def adjacency(self):
        adj = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


class _DSU:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def _partition_from_open_edges(n, open_edges):
    dsu = _DSU(n + 1)
    for u, v in open_edges:
        dsu.union(u, v)
    return canonical_rgs(tuple(dsu.find(v) for v in range(1, n + 1)))


def _fk_partition_weights(graph, alpha, q, one):
    """Unnormalized FK partition weights, generic over the number type: pass
    one = Fraction(1) for exact arithmetic or 1.0 for floating."""
    weights = {}
    m = len(graph.edges)
    for mask in range(2**m):
        open_edges = [graph.edges[i] for i in range(m) if mask >> i & 1]
        k = len(open_edges)
        rgs = _partition_from_open_edges(graph.n, open_edges)
        components = max(rgs) + 1
        w = one * alpha**k * (1 - alpha) ** (m - k) * q**components
        weights[rgs] = weights.get(rgs, 0 * one) + w
    return weights


def fk_exact_rer(graph, alpha, q):
    """Exact random-cluster RER on the vertices: each edge configuration has
    weight alpha^(#open) (1-alpha)^(#closed) q^(#components), and the induced
    partition is by open-edge connectivity."""
    alpha, q = _frac(alpha), _frac(q)
    if not 0 <= alpha <= 1:
        raise ValueError("alpha must lie in [0,1]")
    if q <= 0:
        raise ValueError("q must be positive")
    if len(graph.edges) > FK_EDGE_CAP or graph.n > FK_VERTEX_CAP:
        raise SizeLimitError(
            f"fk_exact_rer supports |E| <= {FK_EDGE_CAP}, |V| <= {FK_VERTEX_CAP}"
        )
    weights = _fk_partition_weights(graph, alpha, q, Fraction(1))
    total = sum(weights.values())
    return RERMeasure(graph.n, {rgs: w / total for rgs, w in weights.items()})


def _spin_law(graph, weight_fn, spin_values, recode):
    """Enumerate spins, aggregate colors, and renormalize the floating
    Boltzmann weights exactly (as rationals of the computed floats) so the
    result is a valid color measure within 1e-12 of the true law."""
    if graph.n > SPIN_VERTEX_CAP:
        raise SizeLimitError(f"spin enumeration supports |V| <= {SPIN_VERTEX_CAP}")
    raw = {}
    for spins in itertools.product(spin_values, repeat=graph.n):
        w = weight_fn(spins)
        cfg = "".join("1" if recode(s) else "0" for s in spins)
        raw[cfg] = raw.get(cfg, 0.0) + w
    exact = {cfg: Fraction(w) for cfg, w in raw.items()}
    total = sum(exact.values())
    return {cfg: w / total for cfg, w in exact.items()}


def ising_exact_law(graph, J):
    """Zero-field Ising law on {-1,1}^V, recoded to colors (+1 -> 1, -1 -> 0):
    weight exp(J sum over edges of the spin product)."""
    J = float(J)

    def weight(spins):
        return math.exp(J * sum(spins[u - 1] * spins[v - 1] for u, v in graph.edges))

    return ColorMeasure(graph.n, _spin_law(graph, weight, (1, -1), lambda s: s == 1))


def fuzzy_potts_exact_law(graph, J, q, ell):
    """Fuzzy Potts law: q-state Potts weight exp(J #agreeing edges), then
    states 1..ell recode to color 1 and the rest to 0."""
    J = float(J)
    q, ell = int(q), int(ell)
    if not 1 <= ell <= q:
        raise ValueError("need 1 <= ell <= q")

    def weight(spins):
        return math.exp(J * sum(spins[u - 1] == spins[v - 1] for u, v in graph.edges))

    return ColorMeasure(
        graph.n, _spin_law(graph, weight, tuple(range(1, q + 1)), lambda s: s <= ell)
    )


def _apply_phi_float(partition_weights, p, n):
    """Color law of a (possibly unnormalized) float-weighted partition law."""
    total = sum(partition_weights.values())
    out = {}
    for rgs, w in partition_weights.items():
        k = max(rgs) + 1
        for colors in itertools.product((1, 0), repeat=k):
            cfg = "".join(str(colors[c]) for c in rgs)
            pw = p ** sum(colors) * (1 - p) ** (k - sum(colors))
            out[cfg] = out.get(cfg, 0.0) + w / total * pw
    return out


@dataclass(frozen=True)
class CouplingReport:
    """Deviations between a spin law and the colored FK law under the two
    candidate conventions alpha(J); matched names the smaller one."""

    model: str
    J: float
    q: int
    ell: int
    deviations: dict
    matched: str
    deviation: float


def _coupling_report(model, graph, J, q, ell, spin_law, p):
    J = float(J)
    candidates = {
        "1-e^{-2J}": 1.0 - math.exp(-2.0 * J),
        "1-e^{-J}": 1.0 - math.exp(-J),
    }
    deviations = {}
    for label, alpha in candidates.items():
        weights = _fk_partition_weights(graph, alpha, float(q), 1.0)
        colored = _apply_phi_float(weights, p, graph.n)
        deviations[label] = max(
            abs(colored.get(cfg, 0.0) - spin_law.prob(cfg)) for cfg in colored
        )
    matched = min(deviations, key=deviations.get)
    return CouplingReport(model, J, q, ell, deviations, matched, deviations[matched])


def coupling_check_fk_ising(graph, J):
    """Compare the Ising law against coloring the q=2 FK partition at
    density 1/2 under both alpha conventions."""
    if len(graph.edges) > FK_EDGE_CAP or graph.n > SPIN_VERTEX_CAP:
        raise SizeLimitError("coupling check needs the enumeration caps")
    return _coupling_report("ising", graph, J, 2, 1, ising_exact_law(graph, J), 0.5)


def coupling_check_fuzzy_potts(graph, J, q, ell):
    """Compare the fuzzy Potts law against coloring the q-state FK partition
    at density ell/q under both alpha conventions."""
    if len(graph.edges) > FK_EDGE_CAP or graph.n > SPIN_VERTEX_CAP:
        raise SizeLimitError("coupling check needs the enumeration caps")
    law = fuzzy_potts_exact_law(graph, J, q, ell)
    return _coupling_report("fuzzy-potts", graph, J, int(q), int(ell), law, ell / q)


@dataclass(frozen=True)
class PartitionSample:
    """One partition draw, with provenance."""

    partition: SetPartition
    model: str
    params: dict = field(default_factory=dict)
    seed: int = 0
    time: int = 0
    note: str = ""


def fk_glauber_sampler(graph, alpha, q, sweeps, seed, burnin=0):
    """Single-edge heat-bath chain for the FK law; yields one PartitionSample
    per sweep after the burn-in.

    Updating edge (u,v): if u and v stay connected without the edge, the
    conditional open probability is alpha; if opening would merge two
    components it is alpha / (alpha + (1-alpha) q).  Reversible for the FK
    law for every q >= 1; deterministic given the seed.
    """
    alpha, q = float(alpha), float(q)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0,1]")
    if q < 1.0:
        raise ValueError("heat-bath sampler needs q >= 1")
    if burnin < 0 or sweeps <= burnin:
        raise ValueError("need 0 <= burnin < sweeps")
    rng = stream(seed)
    edges = graph.edges
    adj_index = {v: [] for v in range(1, graph.n + 1)}
    for i, (u, v) in enumerate(edges):
        adj_index[u].append((v, i))
        adj_index[v].append((u, i))
    state = [bool(x) for x in rng.random(len(edges)) < alpha]
    p_merge = alpha / (alpha + (1.0 - alpha) * q)

    def connected_without(u, v, skip):
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == v:
                return True
            for y, i in adj_index[x]:
                if i != skip and state[i] and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    params = {"alpha": alpha, "q": q, "edges": len(edges)}
    for sweep in range(1, sweeps + 1):
        draws = rng.random(len(edges))
        for i, (u, v) in enumerate(edges):
            p_open = alpha if connected_without(u, v, i) else p_merge
            state[i] = bool(draws[i] < p_open)
        if sweep > burnin:
            rgs = _partition_from_open_edges(
                graph.n, [e for i, e in enumerate(edges) if state[i]]
            )
            yield PartitionSample(
                SetPartition(graph.n, rgs), "fk-glauber", params, int(seed), sweep
            )


def torus_site_index(coords, L):
    """Lexicographic site index of a coordinate tuple on the side-L torus."""
    idx = 0
    for c in coords:
        idx = idx * L + c % L
    return idx


def torus_box(d, L, n):
    """Site indices of the centered box [-n, n]^d on the side-L torus, the
    origin first.  Requires 2n+1 <= L so the box does not wrap."""
    if 2 * n + 1 > L:
        raise ValueError("box diameter exceeds the torus side")
    offsets = sorted(itertools.product(range(-n, n + 1), repeat=d), key=lambda t: t != (0,) * d)
    return [torus_site_index(t, L) for t in offsets]


def coalescing_rw_rer(d, L, T, seed):
    """Partition of the side-L torus in dimension d by coalescing random
    walks run to time T: one rate-1 walker starts at every site, coalescing
    walkers stick together, and two sites share a class when their walkers
    have met by time T.  Classes only grow with T, so the result is a lower
    bound (in refinement order) for the ever-coalescing partition.
    """
    n_sites = L**d
    if n_sites > TORUS_SITE_CAP:
        raise SizeLimitError(f"coalescing_rw_rer supports L^d <= {TORUS_SITE_CAP}")
    if T < 0:
        raise ValueError("T must be non-negative")
    rng = stream(seed)
    dsu = _DSU(n_sites)
    occupant = {site: site for site in range(n_sites)}
    position = {site: site for site in range(n_sites)}
    powers = [L**k for k in range(d)]
    events = []
    if T > 0:
        for site, t in enumerate(rng.exponential(1.0, n_sites)):
            if t <= T:
                heapq.heappush(events, (t, site))
    while events:
        t, walker = heapq.heappop(events)
        if position.get(walker) is None:
            continue
        pos = position[walker]
        axis = int(rng.integers(d))
        step = 1 if rng.random() < 0.5 else -1
        scale = powers[axis]
        coord = pos // scale % L
        target = pos - coord * scale + ((coord + step) % L) * scale
        del occupant[pos]
        other = occupant.get(target)
        if other is not None:
            dsu.union(other, walker)
            position[walker] = None
        else:
            occupant[target] = walker
            position[walker] = target
            nxt = t + rng.exponential(1.0)
            if nxt <= T:
                heapq.heappush(events, (nxt, walker))
    rgs = canonical_rgs(tuple(dsu.find(site) for site in range(n_sites)))
    return PartitionSample(
        SetPartition(n_sites, rgs),
        "coalescing-rw",
        {"d": d, "L": L, "T": T},
        int(seed),
        int(T),
        note="classes are lower bounds: walkers meeting after time T are not merged",
    )


def _normalize_step_law(step_law):
    items = []
    total = 0.0
    dim = None
    for step, w in step_law.items():
        step = (int(step),) if isinstance(step, int) else tuple(int(x) for x in step)
        if dim is None:
            dim = len(step)
        elif len(step) != dim:
            raise ValueError("all steps must share a dimension")
        w = float(w)
        if w < 0:
            raise ValueError("negative step probability")
        items.append((step, w))
        total += w
    if not items or abs(total - 1.0) > 1e-9:
        raise ValueError("step probabilities must sum to 1")
    return dim, [s for s, _ in items], np.array([w / total for _, w in items])


def _walk_positions(step_law, n, rng):
    dim, steps, probs = _normalize_step_law(step_law)
    choices = rng.choice(len(steps), size=n - 1, p=probs)
    increments = np.asarray(steps, dtype=np.int64)[choices]
    positions = np.zeros((n, dim), dtype=np.int64)
    np.cumsum(increments, axis=0, out=positions[1:])
    return positions


def _first_occurrence_labels(positions):
    _, inverse = np.unique(positions, axis=0, return_inverse=True)
    n_labels = inverse.max() + 1
    first = np.full(n_labels, len(inverse), dtype=np.int64)
    np.minimum.at(first, inverse, np.arange(len(inverse)))
    rank = np.empty(n_labels, dtype=np.int64)
    rank[np.argsort(first)] = np.arange(n_labels)
    return rank[inverse]


def rwrs_rer(step_law, n, seed):
    """Partition of walk times {0, ..., n-1} by equal positions of a random
    walk with the given finite step law on Z^d: times i and j share a class
    when S_i = S_j.  The number of classes is the range R_n."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = stream(seed)
    labels = _first_occurrence_labels(_walk_positions(step_law, n, rng))
    return PartitionSample(
        SetPartition(n, tuple(int(x) for x in labels)),
        "rwrs",
        {"n": n, "steps": len(step_law)},
        int(seed),
        n,
    )


@dataclass(frozen=True)
class EstimatorReport:
    """Point estimates with standard errors from a seeded sample batch."""

    name: str
    n_samples: int
    seed: int
    estimates: dict
    stderr: dict
    note: str = ""

    def __post_init__(self):
        if self.n_samples <= 0:
            raise ValueError("n_samples must be positive")
        if any(v < 0 for v in self.stderr.values()):
            raise ValueError("standard errors must be non-negative")


def range_estimator(step_law, n, reps, seed):
    """Monte-Carlo estimate of E[R_n / n], the fraction of walk times with
    distinct positions, over independent replicate walks."""
    if reps < 1:
        raise ValueError("reps must be positive")
    values = []
    for r in range(reps):
        rng = stream(seed, r)
        positions = _walk_positions(step_law, n, rng)
        values.append(len(np.unique(positions, axis=0)) / n)
    values = np.array(values)
    mean = float(values.mean())
    if reps > 1:
        se = float(values.std(ddof=1) / math.sqrt(reps))
        note = ""
    else:
        se = 0.0
        note = "single replicate: standard error unavailable"
    return EstimatorReport(
        "range_fraction", reps, int(seed), {"range_fraction": mean}, {"range_fraction": se}, note
    )


def color_sample(sample, p, seed):
    """Color a partition sample: one uniform draw per site, thresholded at p,
    and every site copies the draw of the lexicographically least site of its
    class.  Returns a 0/1 array indexed by site."""
    partition = sample.partition if isinstance(sample, PartitionSample) else sample
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0,1]")
    rgs = np.asarray(partition.rgs, dtype=np.int64)
    n_labels = int(rgs.max()) + 1
    first = np.full(n_labels, len(rgs), dtype=np.int64)
    np.minimum.at(first, rgs, np.arange(len(rgs)))
    u = stream(seed).random(len(rgs))
    return (u[first[rgs]] < p).astype(np.uint8)


def _batch(samples):
    arr = np.asarray(samples, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] < 1:
        raise ValueError("need a non-empty batch of equal-length configurations")
    return arr


def pair_correlation_estimator(samples, pairs, seed=0):
    """Empirical both-1 probabilities P(X_u = X_v = 1) for the given 1-based
    site pairs, with binomial standard errors."""
    arr = _batch(samples)
    m = arr.shape[0]
    estimates, stderr = {}, {}
    for u, v in pairs:
        hits = float((arr[:, u - 1] * arr[:, v - 1]).mean())
        estimates[f"({u},{v})"] = hits
        stderr[f"({u},{v})"] = math.sqrt(max(hits * (1.0 - hits), 0.0) / m)
    return EstimatorReport("pair_correlation", m, int(seed), estimates, stderr)


def ergodicity_diagnostic(samples, box, p, seed=0):
    """Box-averaged two-point statistic: the mean over box sites x of the
    empirical P(X_ref = X_x = 1), where the first box entry is the reference
    site (1-based).  The average converges to p^2 for an ergodic process; at
    finite box size the i.i.d. value is p^2 + (p - p^2)/|box| because the
    reference site pairs with itself, so the flag compares against that
    baseline.  Exceeding it by 3 standard errors suggests a class of
    non-vanishing density and hence non-ergodicity."""
    arr = _batch(samples)
    m = arr.shape[0]
    p = float(p)
    cols = [b - 1 for b in box]
    ref = arr[:, cols[0]]
    per_sample = (arr[:, cols] * ref[:, None]).mean(axis=1)
    estimate = float(per_sample.mean())
    se = float(per_sample.std(ddof=1) / math.sqrt(m)) if m > 1 else 0.0
    baseline = p * p + (p - p * p) / len(cols)
    if m <= 1:
        note = "single sample: standard error unavailable"
    elif estimate - baseline > 3.0 * se:
        note = "box average exceeds the i.i.d. baseline by more than 3 SE: nonergodicity suspected"
    else:
        note = ""
    return EstimatorReport(
        "ergodicity_diagnostic",
        m,
        int(seed),
        {"box_average": estimate, "p_squared": p * p, "iid_baseline": baseline},
        {"box_average": se},
        note,
    )


def cluster_density_estimator(samples, ns, seed=0):
    """Density statistics of torus partition samples over centered boxes
    B_n: the fraction of B_n in the class of the origin, and the number of
    distinct classes meeting B_n per site.  Sample provenance must carry the
    torus shape (params d and L)."""
    samples = list(samples)
    if not samples:
        raise ValueError("need at least one partition sample")
    d, L = samples[0].params["d"], samples[0].params["L"]
    estimates, stderr = {}, {}
    for n in ns:
        box = torus_box(d, L, n)
        origin_vals, count_vals = [], []
        for sample in samples:
            rgs = sample.partition.rgs
            in_box = [rgs[site] for site in box]
            origin_vals.append(in_box.count(in_box[0]) / len(box))
            count_vals.append(len(set(in_box)) / len(box))
        for label, vals in (("origin_density", origin_vals), ("count_density", count_vals)):
            arr = np.array(vals)
            estimates[f"{label}(n={n})"] = float(arr.mean())
            stderr[f"{label}(n={n})"] = (
                float(arr.std(ddof=1) / math.sqrt(len(arr))) if len(arr) > 1 else 0.0
            )
    note = "" if len(samples) > 1 else "single sample: standard errors unavailable"
    return EstimatorReport(
        "cluster_density", len(samples), int(seed), estimates, stderr, note
    )
