"""Named verification suites: each suite runs a fixed set of exact or seeded
statistical claims and reports one pass/fail line per claim.

The suites double as the acceptance gate: the test suite and the command-line
``verify`` subcommand both call :func:`run_suite`.  Every claim label is
self-describing; seeds are fixed constants so repeated runs are byte-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .chains import (
    color_to_markov,
    differinf_window_measures,
    field_shift_check,
    iid_edge_window_rer,
    markov_window_law,
    run_conditional_sequence,
)
from .domination import d_markov, d_paintbox, finite_window_threshold
from .graphs import (
    FiniteGraph,
    cluster_density_estimator,
    coalescing_rw_rer,
    coupling_check_fk_ising,
    coupling_check_fuzzy_potts,
    fk_exact_rer,
    fk_glauber_sampler,
    range_estimator,
)
from .measures import (
    ColorMeasure,
    NotColorProcessError,
    all_configs,
    all_p_equal,
    apply_phi,
    covariance,
    cp_membership,
    delta_rer,
    dominates,
    dominates_by_upsets,
    kernel,
    pair_ones_prob,
    phi_exch,
    positive_association_check,
    product_measure,
    represent_n3_half,
    singletons_partition,
)
from .paintbox import (
    PaintBox,
    as_xi,
    mainp12_decompose,
    marginal_color_measure,
    paintbox_rer_on_n,
    split_identity_check,
    unprop_witness,
    uniqueness_audit,
    xi_distribution,
)
from .rng import stream
from .thresholds import dyadic_paintbox, gaussian_threshold_sampler, gaussian_xi_sampler
from .witnesses import (
    levels_measure,
    posass4_rer,
    thmA_pair,
    thmC_nu1,
    thmC_nu2,
    thmE_pair,
    thmF_pair,
)

F = Fraction


@dataclass(frozen=True)
class Check:
    """One verified claim: a self-describing label with a verdict."""

    label: str
    passed: bool
    detail: str = ""


def _check(label, passed, detail=""):
    return Check(label, bool(passed), detail)


# ---------------------------------------------------------------------------
# kernel-dimension table


KERNEL_TABLE = (
    ("general", 2, F(1, 3), 0),
    ("general", 2, F(1, 2), 0),
    ("general", 3, F(1, 2), 1),
    ("general", 3, F(1, 3), 0),
    ("general", 4, F(1, 2), 7),
    ("general", 4, F(1, 3), 3),
    ("exchangeable", 3, F(1, 2), 1),
    ("exchangeable", 4, F(1, 2), 2),
    ("exchangeable", 4, F(1, 3), 1),
    ("exchangeable", 5, F(1, 3), 2),
)

# the unique (up to scale) kernel direction at n=3, p=1/2, keyed by RGS
KERNEL3_DIRECTION = {
    (0, 1, 2): F(2),   # singletons
    (0, 0, 1): F(-1),  # {{1,2},{3}}
    (0, 1, 1): F(-1),  # {{1},{2,3}}
    (0, 1, 0): F(-1),  # {{1,3},{2}}
    (0, 0, 0): F(1),   # one class
}


def suite_kernel_table():
    checks = []
    for space, n, p, dim in KERNEL_TABLE:
        basis = kernel(n, p, space)
        checks.append(
            _check(
                f"kernel dim ({space}, n={n}, p={p}) == {dim}",
                len(basis) == dim,
                f"got {len(basis)}",
            )
        )
    basis = kernel(3, F(1, 2), "general")
    ok = False
    if len(basis) == 1:
        v = basis[0].coords
        scale = v.get((0, 1, 2), F(0)) / 2
        ok = scale != 0 and all(
            v.get(key, F(0)) == scale * val for key, val in KERNEL3_DIRECTION.items()
        )
    checks.append(
        _check(
            "kernel basis (n=3, p=1/2) proportional to "
            "(2 singletons, -1 each pair, +1 one-class)",
            ok,
        )
    )
    return checks


# ---------------------------------------------------------------------------
# witness equalities


def suite_witnesses():
    checks = []
    a1, a2 = thmA_pair()
    half = apply_phi(a1, F(1, 2))
    expected = {cfg: (F(1, 4) if cfg in ("111", "000") else F(1, 12)) for cfg in all_configs(3)}
    checks.append(
        _check(
            "three-element pair: equal color laws at p=1/2 with values "
            "(1/4 on constants, 1/12 elsewhere)",
            half == apply_phi(a2, F(1, 2)) == ColorMeasure(3, expected),
        )
    )
    checks.append(
        _check(
            "three-element pair: color laws differ at p=1/3",
            apply_phi(a1, F(1, 3)) != apply_phi(a2, F(1, 3)),
        )
    )
    points = [F(1, 6), F(1, 3), F(1, 2), F(2, 3), F(5, 6)]
    c1 = thmC_nu1()
    checks.append(
        _check(
            "shape-law pair on 4: ones-laws equal at 5 sample densities "
            "(density-dependent second member)",
            all(phi_exch(c1, p) == phi_exch(thmC_nu2(p), p) for p in points),
        )
    )
    e1, e2 = thmE_pair()
    checks.append(
        _check(
            "four-element pair: distinct measures, equal color laws at all "
            "densities (certified at n+1 points)",
            e1 != e2 and all_p_equal(e1, e2),
        )
    )
    f1, f2 = thmF_pair()
    checks.append(
        _check(
            "shape-law pair on 6: distinct measures, equal ones-laws at all "
            "densities (certified at n+1 points)",
            f1 != f2 and all_p_equal(f1, f2),
        )
    )
    return checks


# ---------------------------------------------------------------------------
# n=3 characterization round-trip


def _symmetric_measure(t, u, v, w):
    return ColorMeasure(
        3,
        {
            "111": t, "000": t,
            "110": u, "001": u,
            "101": v, "010": v,
            "011": w, "100": w,
        },
    )


def _random_symmetric_weights(rng):
    while True:
        nums = rng.integers(0, 30, size=4)
        total = int(nums.sum())
        if total == 0:
            continue
        return tuple(F(int(x), 2 * total) for x in nums)


def suite_represent(rounds=1000, seed=20260601):
    rng = stream(seed)
    good = 0
    for _ in range(rounds):
        while True:
            t, u, v, w = _random_symmetric_weights(rng)
            if min(t + u, t + v, t + w) >= F(1, 4):
                break
        mu = _symmetric_measure(t, u, v, w)
        rep = represent_n3_half(mu)
        if apply_phi(rep.nu, F(1, 2)) == mu:
            good += 1
    refused = 0
    for i in range(rounds):
        if i % 2 == 0:
            # 0-1-symmetric with a negative pairwise covariance
            while True:
                t, u, v, w = _random_symmetric_weights(rng)
                if min(t + u, t + v, t + w) < F(1, 4):
                    break
            mu = _symmetric_measure(t, u, v, w)
        else:
            # break 0-1 symmetry outright
            while True:
                nums = rng.integers(0, 30, size=8)
                total = int(nums.sum())
                if total == 0:
                    continue
                ws = dict(zip(all_configs(3), (F(int(x), total) for x in nums)))
                flip = lambda c: "".join("1" if b == "0" else "0" for b in c)
                if any(ws[c] != ws[flip(c)] for c in ws):
                    break
            mu = ColorMeasure(3, ws)
        try:
            represent_n3_half(mu)
        except NotColorProcessError:
            refused += 1
    return [
        _check(
            f"{rounds} random symmetric nonneg-covariance laws on [3]: "
            "exact representation round-trips at p=1/2",
            good == rounds,
            f"{good}/{rounds} round-tripped",
        ),
        _check(
            f"{rounds} random laws violating a hypothesis: representation refused",
            refused == rounds,
            f"{refused}/{rounds} refused",
        ),
    ]


# ---------------------------------------------------------------------------
# domination oracle vs up-set enumeration


def _random_color_measure(rng, n, scale=12):
    while True:
        nums = rng.integers(0, scale, size=2**n)
        total = int(nums.sum())
        if total > 0:
            break
    return ColorMeasure(n, dict(zip(all_configs(n), (F(int(x), total) for x in nums))))


def suite_dominates_oracle(pairs=100, seed=20260602):
    checks = []
    for n in (2, 3, 4):
        rng = stream(seed, n)
        agree = 0
        for _ in range(pairs):
            mu1 = _random_color_measure(rng, n)
            mu2 = _random_color_measure(rng, n)
            if dominates(mu1, mu2) == dominates_by_upsets(mu1, mu2):
                agree += 1
        checks.append(
            _check(
                f"coupling oracle vs exhaustive up-set enumeration, "
                f"{pairs} random pairs at n={n}",
                agree == pairs,
                f"{agree}/{pairs} agreed",
            )
        )
    return checks


# ---------------------------------------------------------------------------
# domination formulas


def suite_domination_formulas():
    checks = []
    grid = [F(1, 4), F(1, 2), F(3, 4)]
    ok = True
    for s in grid:
        for p in grid:
            alpha = d_markov(s, p)
            window = apply_phi(iid_edge_window_rer(s, 8), p)
            if not dominates(product_measure(8, alpha), window):
                ok = False
    checks.append(
        _check(
            "product law at the chain domination value is dominated by every "
            "window-8 chain color law, (s,p) in {1/4,1/2,3/4}^2",
            ok,
        )
    )
    ok = True
    for probs in ((F(1, 2),), (F(1, 2), F(1, 4))):
        pb = PaintBox(probs)
        for p in (F(1, 3), F(1, 2), F(2, 3)):
            alpha = d_paintbox(pb, p)
            window = apply_phi(paintbox_rer_on_n(pb, 8), p)
            if not dominates(product_measure(8, alpha), window):
                ok = False
    checks.append(
        _check(
            "product law at the paint-box domination value is dominated by the "
            "window-8 paint-box color law, pb in {(1/2),(1/2,1/4)}, "
            "p in {1/3,1/2,2/3}",
            ok,
        )
    )
    pb = PaintBox((F(1, 2), F(1, 4)))
    p = F(1, 2)
    xi = xi_distribution(pb, p)
    limit = float(d_paintbox(pb, p))
    values = [finite_window_threshold(xi, n) for n in (8, 16, 32, 64)]
    decreasing = all(a >= b for a, b in zip(values, values[1:]))
    checks.append(
        _check(
            "finite-window domination threshold decreases to the closed form "
            "within 0.02 at n=64",
            decreasing and 0 <= values[-1] - limit < 0.02,
            f"threshold(64)={values[-1]:.6f}, limit={limit:.6f}",
        )
    )
    return checks


# ---------------------------------------------------------------------------
# coupling identities


def suite_couplings():
    checks = []
    graphs = {"K3": FiniteGraph.complete(3), "P4": FiniteGraph.path(4)}
    for name, G in graphs.items():
        for J in (0.2, 0.5, 1.0):
            rep = coupling_check_fk_ising(G, J)
            checks.append(
                _check(
                    f"random-cluster (q=2) vs spin-pair coloring on {name}, "
                    f"J={J}: sup-norm <= 1e-10 at alpha={rep.matched}",
                    rep.deviation <= 1e-10 and rep.matched == "1-e^{-2J}",
                    f"deviation {rep.deviation:.2e}",
                )
            )
    tri = FiniteGraph.cycle(3)
    for ell in (1, 2):
        for J in (0.2, 0.5, 1.0):
            rep = coupling_check_fuzzy_potts(tri, J, 3, ell)
            checks.append(
                _check(
                    f"random-cluster (q=3) vs merged-state coloring on the "
                    f"triangle, J={J}, group size {ell}: sup-norm <= 1e-10 at "
                    f"alpha={rep.matched}",
                    rep.deviation <= 1e-10 and rep.matched == "1-e^{-J}",
                    f"deviation {rep.deviation:.2e}",
                )
            )
    return checks


# ---------------------------------------------------------------------------
# chain identities


def suite_chains():
    checks = []
    ok = True
    for s in (F(0), F(1, 4), F(1, 2), F(3, 4)):
        for p in (F(1, 4), F(1, 2), F(3, 4)):
            spec = color_to_markov(s, p)
            for n in range(2, 11):
                if markov_window_law(spec, n) != apply_phi(iid_edge_window_rer(s, n), p):
                    ok = False
    checks.append(
        _check(
            "stationary chain window law equals the agreement-class color law, "
            "exact, s in {0,1/4,1/2,3/4}, p in {1/4,1/2,3/4}, n <= 10",
            ok,
        )
    )
    worst = 0.0
    for J in (0.0, 0.5, 1.0):
        for p in (F(1, 4), F(1, 2), F(3, 4)):
            for n in (4, 6, 8):
                for (k, l) in ((1, n), (2, n - 1)):
                    worst = max(worst, field_shift_check(J, 0.0, p, k, l, n))
    checks.append(
        _check(
            "conditioning on a run of 1s equals a field shift of -log(p)/2: "
            "deviation <= 1e-10 over J in {0,1/2,1}, p in {1/4,1/2,3/4}, n <= 8",
            worst <= 1e-10,
            f"max deviation {worst:.2e}",
        )
    )
    rep = run_conditional_sequence(F(1, 2), 0.0, F(1, 2), kmax=6, N=40)
    checks.append(
        _check(
            "conditional next-edge probability strictly increases along the "
            "run (J=1/2, h=0, p=1/2) with margin > 1e-8",
            rep.strictly_increasing is True and rep.min_margin > 1e-8,
            f"min margin {rep.min_margin:.3e}",
        )
    )
    rep0 = run_conditional_sequence(F(0), 0.0, F(1, 2), kmax=6, N=40)
    spread = max(rep0.a) - min(rep0.a)
    checks.append(
        _check(
            "conditional next-edge probability constant within 1e-12 at J=0",
            spread <= 1e-12,
            f"spread {spread:.2e}",
        )
    )
    return checks


# ---------------------------------------------------------------------------
# exchangeable identities


def suite_exchangeable(rounds=50, seed=20260603):
    checks = []
    rng = stream(seed)
    good = 0
    for _ in range(rounds):
        while True:
            a = int(rng.integers(1, 40))
            b = int(rng.integers(1, 40))
            den = int(rng.integers(max(a, b) + 1, 2 * (a + b) + 2))
            p1, p2 = F(max(a, b), den), F(min(a, b), den)
            if p1 + p2 <= 1 and p2 > 0:
                break
        if split_identity_check(p1, p2, 6):
            good += 1
    checks.append(
        _check(
            f"{rounds} random box splits: half-density color law of the split "
            "paint-box equals the two-point remix, exact at n=6",
            good == rounds,
            f"{good}/{rounds} held",
        )
    )
    xi = xi_distribution(PaintBox((F(1, 2), F(1, 4))), F(1, 2))
    target = {F(1, 8): F(1, 4), F(3, 8): F(1, 4), F(5, 8): F(1, 4), F(7, 8): F(1, 4)}
    checks.append(
        _check(
            "mixing law of ((1/2,1/4), p=1/2) has atoms {1/8,3/8,5/8,7/8}, "
            "each weight 1/4",
            xi.atoms == target,
        )
    )
    ok = True
    for source in (
        xi,
        xi_distribution(PaintBox((F(1, 2),)), F(1, 2)),
        xi_distribution(PaintBox((F(1, 3), F(1, 3), F(1, 3))), F(1, 2)),
    ):
        W = mainp12_decompose(source)
        if as_xi(W, F(1, 2)) != source:
            ok = False
    checks.append(
        _check(
            "half-density decomposition into one-box mixtures reproduces the "
            "mixing law exactly",
            ok,
        )
    )
    rho1, rho2 = unprop_witness(F(1, 4), F(3, 4))
    checks.append(
        _check(
            "distinct mixtures (1/4,3/4 two-point vs merged two-box): equal "
            "window-6 laws at p=1/2, different at p=1/3",
            marginal_color_measure(rho1, F(1, 2), 6) == marginal_color_measure(rho2, F(1, 2), 6)
            and marginal_color_measure(rho1, F(1, 3), 6) != marginal_color_measure(rho2, F(1, 3), 6),
        )
    )
    for probs, family in (
        ((F(1, 2),), "one-box"),
        ((F(1, 2), F(1, 4)), "two-box"),
        ((F(1, 4), F(1, 4), F(1, 4)), "diagonal-three-box"),
    ):
        audit = uniqueness_audit(PaintBox(probs), F(2, 3))
        checks.append(
            _check(
                f"uniqueness audit of {family} target "
                f"({'/'.join(str(q) for q in probs)}) at p=2/3 returns unique",
                audit.unique and audit.family == family,
                audit.note,
            )
        )
    return checks


# ---------------------------------------------------------------------------
# counterexample fixtures


def suite_counterexamples():
    checks = []
    mu = apply_phi(posass4_rer(), F(1, 2))
    pa = pair_ones_prob(mu, 1, 2)
    pb = pair_ones_prob(mu, 3, 4)
    pab = mu.prob("1111")
    associated, _witness = positive_association_check(mu)
    checks.append(
        _check(
            "two-block mixture on [4]: P(first pair)=P(second pair)=3/8 but "
            "P(both)=1/8 < 9/64, and the associator finds a violating pair",
            pa == F(3, 8) and pb == F(3, 8) and pab == F(1, 8) and associated is False,
        )
    )
    ok = True
    for n in (4, 5, 6):
        mu = levels_measure(n)
        if covariance(mu, 1, 2) != F(1, 4) - F(1, n):
            ok = False
    checks.append(
        _check(
            "one-1-or-one-0 law: pairwise covariance exactly 1/4 - 1/n for "
            "n in {4,5,6}",
            ok,
        )
    )
    checks.append(
        _check(
            "one-1-or-one-0 law at n=4 admits no coloring representation at "
            "p=1/2 (exact infeasibility)",
            cp_membership(levels_measure(4), F(1, 2)) is None,
        )
    )
    m1, m2 = differinf_window_measures()
    checks.append(
        _check(
            "period-3 block constructions: window-6 color laws equal at "
            "p=1/2, different at p=1/3",
            apply_phi(m1, F(1, 2)) == apply_phi(m2, F(1, 2))
            and apply_phi(m1, F(1, 3)) != apply_phi(m2, F(1, 3)),
        )
    )
    return checks


# ---------------------------------------------------------------------------
# sampler statistics


def _ks_uniform(draws):
    draws = np.sort(np.asarray(draws))
    n = len(draws)
    grid = np.arange(1, n + 1) / n
    return float(np.max(np.maximum(grid - draws, draws - (grid - 1 / n))))


def suite_samplers():
    checks = []
    draws = gaussian_xi_sampler(0.5, 0.0, 100_000, seed=11)
    ks = _ks_uniform(draws)
    checks.append(
        _check(
            "Gaussian-threshold mixing variable (r=1/2, h=0): KS distance of "
            "1e5 draws from uniform < 0.01",
            ks < 0.01,
            f"KS {ks:.5f}",
        )
    )
    samples = gaussian_threshold_sampler(0.5, 0.0, 4, 100_000, seed=12)
    counts = np.bincount(samples @ np.array([8, 4, 2, 1]), minlength=16)
    exact = marginal_color_measure(dyadic_paintbox(20), F(1, 2), 4)
    tv = 0.5 * sum(
        abs(counts[int(cfg, 2)] / 100_000 - float(exact.prob(cfg))) for cfg in all_configs(4)
    )
    checks.append(
        _check(
            "Gaussian-threshold window n=4 within 0.01 total variation of the "
            "20-level dyadic paint-box law (1e5 samples)",
            tv < 0.01,
            f"TV {tv:.5f}",
        )
    )
    G = FiniteGraph.cycle(3)
    exact_rer = fk_exact_rer(G, F(1, 2), 2)
    sweeps, batch, burnin = 100_000, 1_000, 1_000
    counts = {}
    nbatches = sweeps // batch
    for i, sample in enumerate(
        fk_glauber_sampler(G, 0.5, 2.0, sweeps + burnin, seed=13, burnin=burnin)
    ):
        counts.setdefault(sample.partition.rgs, np.zeros(nbatches))[min(i // batch, nbatches - 1)] += 1
    worst = 0.0
    for pi, w in exact_rer.items():
        series = counts.get(pi.rgs, np.zeros(nbatches)) / batch
        se = float(series.std(ddof=1) / math.sqrt(nbatches))
        z = abs(float(series.mean()) - float(w)) / se if se > 0 else math.inf
        worst = max(worst, z)
    checks.append(
        _check(
            "random-cluster heat-bath frequencies on the triangle within 3 "
            "batch-means standard errors of the exact law at 1e5 sweeps",
            worst < 3.0,
            f"worst z {worst:.2f}",
        )
    )
    law = {1: 0.5, -1: 0.5}
    rep = range_estimator(law, 1_000_000, reps=3, seed=14)
    frac = rep.estimates["range_fraction"]
    checks.append(
        _check(
            "simple-walk scenery range fraction R_n/n < 0.01 at n=1e6",
            frac < 0.01,
            f"estimate {frac:.5f}",
        )
    )
    samples = [coalescing_rw_rer(3, 20, 1000, seed) for seed in (15, 16, 17)]
    rep = cluster_density_estimator(samples, (1, 2, 3), seed=15)
    origin = [rep.estimates[f"origin_density(n={n})"] for n in (1, 2, 3)]
    count = [rep.estimates[f"count_density(n={n})"] for n in (1, 2, 3)]
    checks.append(
        _check(
            "coalescing-walk classes on the 3d torus: origin-class density and "
            "classes-per-site both decrease with the window",
            all(a > b for a, b in zip(origin, origin[1:]))
            and all(a > b for a, b in zip(count, count[1:])),
            f"origin {['%.4f' % x for x in origin]}, count {['%.4f' % x for x in count]}",
        )
    )
    return checks


# ---------------------------------------------------------------------------
# worked example: independent coloring


def suite_trivial_iid():
    checks = []
    nu = delta_rer(singletons_partition(3))
    ok = all(apply_phi(nu, p) == product_measure(3, p) for p in (F(1, 3), F(1, 2), F(3, 4)))
    checks.append(
        _check(
            "all-singletons partition colors to the product law at every "
            "sampled density",
            ok,
        )
    )
    xi = xi_distribution(PaintBox(()), F(1, 3))
    checks.append(
        _check(
            "empty paint-box has a point-mass mixing law at the density",
            xi.atoms == {F(1, 3): F(1)},
        )
    )
    return checks


SUITES = {
    "kernel-table": suite_kernel_table,
    "witnesses": suite_witnesses,
    "represent": suite_represent,
    "dominates-oracle": suite_dominates_oracle,
    "domination-formulas": suite_domination_formulas,
    "couplings": suite_couplings,
    "chains": suite_chains,
    "exchangeable": suite_exchangeable,
    "counterexamples": suite_counterexamples,
    "samplers": suite_samplers,
    "trivial-iid": suite_trivial_iid,
}


def run_suite(name):
    """Run one named suite ('all' concatenates every suite in order)."""
    if name == "all":
        out = []
        for fn in SUITES.values():
            out.extend(fn())
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'")
    return SUITES[name]()


def format_report(checks):
    lines = []
    for c in checks:
        mark = "PASS" if c.passed else "FAIL"
        suffix = f"  [{c.detail}]" if c.detail else ""
        lines.append(f"{mark}  {c.label}{suffix}")
    failed = sum(1 for c in checks if not c.passed)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines)
