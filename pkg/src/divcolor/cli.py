"""Batch command-line surface.

Every library operation is exposed as a nested subcommand.  Results are
emitted as a single JSON document on standard output::

    {"command": [...], "status": "ok", "payload": {...}}

with ``--format=table`` switching to an aligned human-readable rendering.
The ``sample`` subcommands emit CSV instead (their documented format), with a
``#`` header row naming all parameters and the seed.

Exit codes: 0 = ok; 1 = a checked property or verification failed;
2 = usage error; 3 = a size cap was exceeded.

Stochastic subcommands (``sample ...`` and the estimator kinds that draw
randomness) refuse to run without an explicit global ``--seed``.  ``--jobs``
parallelizes independent replicates; replicate r always uses the derived
stream (seed, r), so results do not depend on the job count.

Size caps may be raised through environment variables (documented in the
README, all unset by default): DIVCOLOR_MEMBERSHIP_CAP, DIVCOLOR_DOMINATES_CAP,
DIVCOLOR_MARGINAL_CAP, DIVCOLOR_PAINTBOX_WINDOW_CAP, DIVCOLOR_BLOCK_WINDOW_CAP,
DIVCOLOR_IID_EDGE_WINDOW_CAP, DIVCOLOR_ISING_ENUM_EDGE_CAP,
DIVCOLOR_FIELD_SHIFT_SITE_CAP, DIVCOLOR_FK_EDGE_CAP, DIVCOLOR_FK_VERTEX_CAP.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
from fractions import Fraction

import numpy as np

from . import chains, domination, graphs, measures, paintbox as pbx, serialize, verify
from .chains import MarkovSpec
from .domination import DominationReport, TailLaw
from .graphs import FiniteGraph
from .measures import NotColorProcessError
from .partitions import SizeLimitError
from .witnesses import witness_catalog

EXIT_OK, EXIT_PROPERTY, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3

F = Fraction


class UsageError(Exception):
    pass


class PropertyViolated(Exception):
    """A checked property failed; carries the full payload for reporting."""

    def __init__(self, payload):
        super().__init__("property violated")
        self.payload = payload


_CAP_ENV = (
    ("DIVCOLOR_MEMBERSHIP_CAP", measures, "MEMBERSHIP_CAP"),
    ("DIVCOLOR_DOMINATES_CAP", measures, "DOMINATES_CAP"),
    ("DIVCOLOR_MARGINAL_CAP", pbx, "MARGINAL_CAP"),
    ("DIVCOLOR_PAINTBOX_WINDOW_CAP", pbx, "PAINTBOX_WINDOW_CAP"),
    ("DIVCOLOR_BLOCK_WINDOW_CAP", domination, "BLOCK_WINDOW_CAP"),
    ("DIVCOLOR_IID_EDGE_WINDOW_CAP", chains, "IID_EDGE_WINDOW_CAP"),
    ("DIVCOLOR_ISING_ENUM_EDGE_CAP", chains, "ISING_ENUM_EDGE_CAP"),
    ("DIVCOLOR_FIELD_SHIFT_SITE_CAP", chains, "FIELD_SHIFT_SITE_CAP"),
    ("DIVCOLOR_FK_EDGE_CAP", graphs, "FK_EDGE_CAP"),
    ("DIVCOLOR_FK_VERTEX_CAP", graphs, "FK_VERTEX_CAP"),
)


def _apply_cap_overrides(environ=os.environ):
    for env, module, name in _CAP_ENV:
        raw = environ.get(env)
        if raw is not None:
            setattr(module, name, int(raw))


# ---------------------------------------------------------------------------
# argument parsing helpers


def _read_arg(text):
    """Literal value, or the contents of a file when prefixed with '@'."""
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            return fh.read()
    return text


def _frac(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r} ({exc})") from exc


def _json_arg(text):
    try:
        return json.loads(_read_arg(text))
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON argument: {exc}") from exc


def _measure_arg(text):
    return serialize.measure_from_json(_json_arg(text))


def _paintbox_arg(text):
    text = text.strip()
    if text in ("", "()"):
        return pbx.PaintBox(())
    return pbx.PaintBox(tuple(_frac(tok) for tok in text.split(",") if tok.strip()))


def _xi_source_arg(args):
    """Mixing-law source from --paintbox (with --p) or --xi JSON."""
    if getattr(args, "xi", None):
        return serialize.xi_from_json(_json_arg(args.xi))
    if getattr(args, "paintbox", None) is not None:
        return pbx.xi_distribution(_paintbox_arg(args.paintbox), args.p)
    raise UsageError("provide --paintbox or --xi")


def _graph_arg(text, n=None):
    text = text.strip()
    if len(text) >= 2 and text[0] in "KPC" and text[1:].isdigit():
        size = int(text[1:])
        maker = {"K": FiniteGraph.complete, "P": FiniteGraph.path, "C": FiniteGraph.cycle}[text[0]]
        return maker(size)
    body = _read_arg(text)
    if ";" in body or ("\n" not in body and " " in body):
        body = "\n".join(part.strip() for part in body.split(";"))
    return FiniteGraph.from_text(body, n=n)


def _pairs_arg(text):
    out = []
    for token in text.split(","):
        u, _, v = token.partition(":")
        out.append((int(u), int(v)))
    return out


def _ints_arg(text):
    return [int(tok) for tok in text.split(",")]


def _step_law_arg(text):
    if text.strip() == "simple":
        return {1: 0.5, -1: 0.5}
    obj = _json_arg(text)
    law = {}
    for key, val in obj.items():
        step = tuple(int(t) for t in key.split(",")) if "," in key else int(key)
        law[step] = float(Fraction(val))
    return law


def _sample_rows_arg(text):
    """Partition sample rows plus header params from a CSV file/literal."""
    body = _read_arg(text)
    return serialize.partition_samples_from_csv(body), serialize.csv_params(body)


def _spawn_seeds(seed, count):
    """Deterministic per-replicate integer seeds derived from the global one."""
    return [int(x) for x in np.random.SeedSequence(int(seed)).generate_state(count)]


def _parallel_map(fn, argtuples, jobs):
    if jobs <= 1 or len(argtuples) <= 1:
        return [fn(*a) for a in argtuples]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, *a) for a in argtuples]
        return [f.result() for f in futures]


# ---------------------------------------------------------------------------
# finite-measure handlers


def _space_of(measure, override=None):
    if override:
        return override
    return "exchangeable" if isinstance(measure, measures.ExchRERMeasure) else "general"


def cmd_finite_kernel(args):
    basis = measures.kernel(args.n, args.p, args.space)
    return serialize.kernel_to_json(args.n, args.p, args.space, basis)


def cmd_finite_unique(args):
    nu = _measure_arg(args.measure)
    if isinstance(nu, measures.ColorMeasure):
        raise UsageError("uniqueness applies to partition measures, not color laws")
    space = _space_of(nu, args.space)
    cert = measures.is_unique(nu, args.p, space)
    payload = {
        "p": serialize.frac_to_str(args.p),
        "space": space,
        "unique": cert.unique,
        "detail": cert.detail,
        "vector": serialize.signed_vector_to_json(cert.vector) if cert.vector else None,
    }
    return payload


def cmd_finite_fingerprint(args):
    nu = _measure_arg(args.measure)
    if isinstance(nu, measures.ColorMeasure):
        raise UsageError("fingerprints apply to partition measures")
    subset = set(args.subset) if args.subset else set(range(1, nu.n + 1))
    pgf = measures.fingerprint_class_count_pgf(nu, subset)
    return {
        "n": nu.n,
        "subset": sorted(subset),
        "class_count_pgf": [serialize.frac_to_str(c) for c in pgf],
        "size_means": {
            str(t): serialize.frac_to_str(measures.fingerprint_size_mean(nu, t))
            for t in range(1, nu.n + 1)
        },
    }


def cmd_finite_membership(args):
    mu = _measure_arg(args.measure)
    if not isinstance(mu, measures.ColorMeasure):
        raise UsageError("membership takes a color law (bit-string keys)")
    nu = measures.cp_membership(mu, args.p)
    return {
        "p": serialize.frac_to_str(args.p),
        "member": nu is not None,
        "rer": serialize.rer_to_json(nu) if nu is not None else None,
    }


def cmd_finite_represent(args):
    mu = _measure_arg(args.measure)
    if not isinstance(mu, measures.ColorMeasure):
        raise UsageError("represent takes a color law (bit-string keys)")
    if mu.n == 2:
        nu, p = measures.represent_n2(mu)
        return {"rer": serialize.rer_to_json(nu), "p": serialize.frac_to_str(p)}
    if mu.n == 3:
        rep = measures.represent_n3_half(mu)
        return {
            "rer": serialize.rer_to_json(rep.nu),
            "p": "1/2",
            "relabeling": list(rep.relabeling),
        }
    raise UsageError("explicit representations cover n = 2 and n = 3 only")


def cmd_finite_dominates(args):
    mu1 = _measure_arg(args.mu1)
    mu2 = _measure_arg(args.mu2)
    return {"dominates": measures.dominates(mu1, mu2)}


def cmd_finite_witnesses(args):
    catalog = witness_catalog()
    out = {}
    for name, entry in sorted(catalog.items()):
        if args.name and name != args.name:
            continue
        if callable(entry):
            measure = entry(args.p)
            out[name] = {
                "depends_on_density": True,
                "p": serialize.frac_to_str(args.p),
                "measure": _measure_to_json(measure),
            }
        else:
            out[name] = _measure_to_json(entry)
    if args.name and not out:
        raise UsageError(f"unknown witness {args.name!r}")
    return {"measures": out}


def _measure_to_json(m):
    if isinstance(m, measures.ColorMeasure):
        return serialize.color_to_json(m)
    if isinstance(m, measures.ExchRERMeasure):
        return serialize.exch_to_json(m)
    return serialize.rer_to_json(m)


# ---------------------------------------------------------------------------
# exchangeable handlers


def cmd_exch_xi(args):
    pb = _paintbox_arg(args.paintbox)
    xi = pbx.xi_distribution(pb, args.p)
    return {
        "paintbox": serialize.paintbox_to_json(pb),
        "p": serialize.frac_to_str(args.p),
        "xi": serialize.xi_to_json(xi),
        "mean": serialize.frac_to_str(xi.mean()),
        "min_atom": serialize.frac_to_str(xi.min_atom()),
        "max_atom": serialize.frac_to_str(xi.max_atom()),
    }


def cmd_exch_marginal(args):
    source = _xi_source_arg(args)
    mu = pbx.marginal_color_measure(source, args.p, args.n)
    return {
        "p": serialize.frac_to_str(args.p),
        "n": args.n,
        "marginal": serialize.color_to_json(mu),
    }


def cmd_exch_split_check(args):
    holds = pbx.split_identity_check(args.p1, args.p2, args.n)
    payload = {
        "p1": serialize.frac_to_str(args.p1),
        "p2": serialize.frac_to_str(args.p2),
        "n": args.n,
        "p": "1/2",
        "holds": bool(holds),
    }
    if not holds:
        raise PropertyViolated(payload)
    return payload


def cmd_exch_decompose(args):
    if args.xi:
        xi = serialize.xi_from_json(_json_arg(args.xi))
    elif args.paintbox is not None:
        xi = pbx.xi_distribution(_paintbox_arg(args.paintbox), F(1, 2))
    else:
        raise UsageError("provide --paintbox or --xi")
    W = pbx.mainp12_decompose(xi)
    return {
        "xi": serialize.xi_to_json(xi),
        "weights": serialize.simple_mixture_to_json(W),
    }


def cmd_exch_audit(args):
    audit = pbx.uniqueness_audit(_paintbox_arg(args.paintbox), args.p)
    return serialize.audit_to_json(audit)


# ---------------------------------------------------------------------------
# domination handlers


def cmd_dom_value(args):
    model = args.model
    if model == "markov":
        if args.s is None or args.p is None:
            raise UsageError("markov model needs --s and --p")
        if args.limit:
            report = DominationReport(
                "d_markov_limit",
                {"s": args.s},
                value=domination.d_markov_limit(args.s),
            )
        else:
            report = DominationReport(
                "d_markov", {"s": args.s, "p": args.p}, value=domination.d_markov(args.s, args.p)
            )
    elif model == "paintbox":
        if args.paintbox is None:
            raise UsageError("paintbox model needs --paintbox")
        pb = _paintbox_arg(args.paintbox)
        inputs = {"paintbox": ",".join(serialize.paintbox_to_json(pb))}
        if args.limit:
            report = DominationReport(
                "d_paintbox_limit", inputs, value=domination.d_paintbox_limit(pb)
            )
        else:
            if args.p is None:
                raise UsageError("paintbox model needs --p (or --limit)")
            inputs["p"] = args.p
            report = DominationReport(
                "d_paintbox", inputs, value=domination.d_paintbox(pb, args.p)
            )
    elif model == "mixture":
        if args.mixture is None or args.p is None:
            raise UsageError("mixture model needs --mixture and --p")
        mix = serialize.paintbox_mixture_from_json(_json_arg(args.mixture))
        report = DominationReport(
            "d_mixture", {"p": args.p}, value=domination.d_mixture(mix, args.p)
        )
    elif model == "window-threshold":
        if args.n is None:
            raise UsageError("window-threshold model needs --n")
        xi = _xi_source_arg(args)
        value = domination.finite_window_threshold(xi, args.n)
        report = DominationReport(
            "finite_window_threshold", {"n": str(args.n)}, value=value
        )
    elif model == "bounded-cluster":
        if args.M is None or args.p is None:
            raise UsageError("bounded-cluster model needs --M and --p")
        report = DominationReport(
            "bounded_cluster_bound",
            {"M": args.M, "p": args.p},
            value=domination.bounded_cluster_bound(args.M, args.p),
        )
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown model {model!r}")
    payload = serialize.domination_report_to_json(report)
    if isinstance(report.value, float):
        payload["tol"] = 1e-12
    return payload


def cmd_dom_refute(args):
    law = TailLaw(
        {int(k): F(v) for k, v in _json_arg(args.law)["weights"].items()},
        F(_json_arg(args.law).get("residual", 0)),
    )
    if args.check == "count":
        if args.k is None:
            raise UsageError("count check needs --k")
        report = domination.cluster_count_inequality_check(
            law, args.p, args.alpha, args.n, args.k, args.d
        )
    else:
        report = domination.cluster_size_inequality_check(
            law, args.p, args.alpha, args.n, args.d, args.variant
        )
    return serialize.domination_report_to_json(report)


# ---------------------------------------------------------------------------
# chain handlers


def cmd_chain_correspond(args):
    if args.s is not None and args.p is not None:
        spec = chains.color_to_markov(args.s, args.p)
        return {
            "s": serialize.frac_to_str(args.s),
            "p": serialize.frac_to_str(args.p),
            "markov": serialize.markov_to_json(spec),
        }
    if args.p01 is not None and args.p11 is not None:
        spec = MarkovSpec.from_up_probs(args.p01, args.p11)
        s, p = chains.markov_to_color(spec)
        return {
            "markov": serialize.markov_to_json(spec),
            "s": serialize.frac_to_str(s),
            "p": serialize.frac_to_str(p),
        }
    raise UsageError("provide either --s and --p, or --p01 and --p11")


def cmd_chain_field_shift(args):
    deviation = chains.field_shift_check(args.J, args.h, args.p, args.k, args.l, args.n)
    payload = {
        "J": args.J,
        "h": args.h,
        "p": serialize.frac_to_str(args.p),
        "k": args.k,
        "l": args.l,
        "n": args.n,
        "deviation": deviation,
        "tol": args.tol,
    }
    if deviation > args.tol:
        raise PropertyViolated(payload)
    return payload


def cmd_chain_run_conditional(args):
    report = chains.run_conditional_sequence(args.J, args.h, args.p, args.kmax, args.N)
    payload = serialize.run_report_to_json(report)
    if report.strictly_increasing is False:
        raise PropertyViolated(payload)
    return payload


# ---------------------------------------------------------------------------
# graph handlers


def cmd_graph_fk_exact(args):
    graph = _graph_arg(args.graph, n=args.vertices)
    nu = graphs.fk_exact_rer(graph, args.alpha, args.q)
    return {
        "graph": graph.to_text(),
        "alpha": serialize.frac_to_str(args.alpha),
        "q": serialize.frac_to_str(args.q),
        "rer": serialize.rer_to_json(nu),
    }


def cmd_graph_couple_check(args):
    graph = _graph_arg(args.graph, n=args.vertices)
    if args.model == "ising":
        report = graphs.coupling_check_fk_ising(graph, args.J)
    else:
        report = graphs.coupling_check_fuzzy_potts(graph, args.J, args.q, args.ell)
    payload = serialize.coupling_report_to_json(report)
    if report.deviation > 1e-10:
        raise PropertyViolated(payload)
    return payload


# ---------------------------------------------------------------------------
# samplers (CSV output)


def cmd_sample_fk(args):
    graph = _graph_arg(args.graph, n=args.vertices)
    samples = graphs.fk_glauber_sampler(
        graph, args.alpha, args.q, args.sweeps, args.seed, burnin=args.burnin
    )
    params = {
        "model": "fk-glauber",
        "graph": args.graph.replace(" ", "-"),
        "alpha": args.alpha,
        "q": args.q,
        "sweeps": args.sweeps,
        "burnin": args.burnin,
        "seed": args.seed,
    }
    return ("csv", serialize.partition_samples_to_csv(samples, params))


def cmd_sample_voter(args):
    seeds = _spawn_seeds(args.seed, args.reps)
    samples = _parallel_map(
        graphs.coalescing_rw_rer,
        [(args.d, args.L, args.T, s) for s in seeds],
        args.jobs,
    )
    params = {
        "model": "coalescing-rw",
        "d": args.d,
        "L": args.L,
        "T": args.T,
        "reps": args.reps,
        "seed": args.seed,
    }
    return ("csv", serialize.partition_samples_to_csv(samples, params))


def cmd_sample_rwrs(args):
    law = _step_law_arg(args.step_law)
    seeds = _spawn_seeds(args.seed, args.reps)
    samples = _parallel_map(
        graphs.rwrs_rer, [(law, args.n, s) for s in seeds], args.jobs
    )
    params = {
        "model": "rwrs",
        "step_law": args.step_law.replace(" ", ""),
        "n": args.n,
        "reps": args.reps,
        "seed": args.seed,
    }
    return ("csv", serialize.partition_samples_to_csv(samples, params))


# ---------------------------------------------------------------------------
# estimators


def _colored_batch(partitions, p, seed):
    seeds = _spawn_seeds(seed, len(partitions))
    return np.stack([graphs.color_sample(pi, p, s) for pi, s in zip(partitions, seeds)])


def cmd_estimate(args):
    if args.kind == "range":
        if args.seed is None:
            raise UsageError("estimate --kind range is stochastic: provide --seed")
        report = graphs.range_estimator(
            _step_law_arg(args.step_law), args.n, args.reps, args.seed
        )
        return serialize.estimator_report_to_json(report)
    if not args.samples:
        raise UsageError(f"estimate --kind {args.kind} needs --samples")
    partitions, params = _sample_rows_arg(args.samples)
    if not partitions:
        raise UsageError("no sample rows found")
    if args.kind == "cluster-density":
        if args.ns is None:
            raise UsageError("cluster-density needs --ns")
        d = args.d if args.d is not None else int(params.get("d", 0))
        L = args.L if args.L is not None else int(params.get("L", 0))
        if not d or not L:
            raise UsageError("torus shape unknown: provide --d/--L or a CSV header with d= L=")
        wrapped = [
            graphs.PartitionSample(pi, params.get("model", "file"), {"d": d, "L": L})
            for pi in partitions
        ]
        report = graphs.cluster_density_estimator(wrapped, args.ns, seed=args.seed or 0)
        return serialize.estimator_report_to_json(report)
    if args.seed is None:
        raise UsageError("coloring partition samples is stochastic: provide --seed")
    if args.p is None:
        raise UsageError(f"estimate --kind {args.kind} needs --p")
    colored = _colored_batch(partitions, args.p, args.seed)
    if args.kind == "pair-correlation":
        if args.pairs is None:
            raise UsageError("pair-correlation needs --pairs")
        report = graphs.pair_correlation_estimator(colored, _pairs_arg(args.pairs), seed=args.seed)
    else:  # ergodicity
        if args.box is None:
            raise UsageError("ergodicity needs --box")
        report = graphs.ergodicity_diagnostic(colored, _ints_arg(args.box), args.p, seed=args.seed)
    return serialize.estimator_report_to_json(report)


# ---------------------------------------------------------------------------
# verification suites


def cmd_verify(args):
    try:
        checks = verify.run_suite(args.suite)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    payload = {
        "suite": args.suite,
        "checks": [
            {"label": c.label, "passed": c.passed, "detail": c.detail} for c in checks
        ],
        "failed": sum(1 for c in checks if not c.passed),
    }
    if payload["failed"]:
        raise PropertyViolated(payload)
    return payload


# ---------------------------------------------------------------------------
# parser assembly


def _add_measure_flags(sp):
    sp.add_argument("--measure", required=True, help="measure JSON (inline or @file)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="divcolor",
        description="Exact and Monte-Carlo laboratory for class-colored random partitions.",
    )
    ap.add_argument("--format", choices=("json", "table"), default="json")
    ap.add_argument("--seed", type=int, default=None, help="global seed for stochastic commands")
    ap.add_argument("--jobs", type=int, default=1, help="parallel workers for replicates")
    top = ap.add_subparsers(dest="group", required=True, metavar="GROUP")

    finite = top.add_parser("finite", help="exact finite partition measures").add_subparsers(
        dest="sub", required=True, metavar="CMD"
    )
    sp = finite.add_parser("kernel", help="null-space basis of the coloring operator")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=_frac, required=True)
    sp.add_argument("--space", choices=("general", "exchangeable"), default="general")
    sp.set_defaults(handler=cmd_finite_kernel)
    sp = finite.add_parser("unique", help="is the measure alone with its color law?")
    _add_measure_flags(sp)
    sp.add_argument("--p", type=_frac, required=True)
    sp.add_argument("--space", choices=("general", "exchangeable"), default=None)
    sp.set_defaults(handler=cmd_finite_unique)
    sp = finite.add_parser("fingerprint", help="class-count and class-size statistics")
    _add_measure_flags(sp)
    sp.add_argument("--subset", type=_ints_arg, default=None, help="sites, e.g. 1,2,3")
    sp.set_defaults(handler=cmd_finite_fingerprint)
    sp = finite.add_parser("membership", help="does any partition measure color to this law?")
    _add_measure_flags(sp)
    sp.add_argument("--p", type=_frac, required=True)
    sp.set_defaults(handler=cmd_finite_membership)
    sp = finite.add_parser("represent", help="explicit representation at n=2 or n=3")
    _add_measure_flags(sp)
    sp.set_defaults(handler=cmd_finite_represent)
    sp = finite.add_parser("dominates", help="monotone-coupling stochastic order")
    sp.add_argument("--mu1", required=True, help="lower color law JSON")
    sp.add_argument("--mu2", required=True, help="upper color law JSON")
    sp.set_defaults(handler=cmd_finite_dominates)
    sp = finite.add_parser("witnesses", help="catalog of fixture measures")
    sp.add_argument("--name", default=None)
    sp.add_argument("--p", type=_frac, default=F(1, 2), help="density for density-dependent entries")
    sp.set_defaults(handler=cmd_finite_witnesses)

    exch = top.add_parser("exch", help="exchangeable paint-box laws").add_subparsers(
        dest="sub", required=True, metavar="CMD"
    )
    sp = exch.add_parser("xi", help="mixing-variable law of a paint-box")
    sp.add_argument("--paintbox", required=True, help='box sizes, e.g. "1/2,1/4"')
    sp.add_argument("--p", type=_frac, required=True)
    sp.set_defaults(handler=cmd_exch_xi)
    sp = exch.add_parser("marginal", help="exact window color law")
    sp.add_argument("--paintbox", default=None)
    sp.add_argument("--xi", default=None, help="mixing-law JSON")
    sp.add_argument("--p", type=_frac, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(handler=cmd_exch_marginal)
    sp = exch.add_parser("split-check", help="half-density box-splitting identity")
    sp.add_argument("--p1", type=_frac, required=True)
    sp.add_argument("--p2", type=_frac, required=True)
    sp.add_argument("--n", type=int, default=6)
    sp.set_defaults(handler=cmd_exch_split_check)
    sp = exch.add_parser("decompose", help="half-density one-box mixture decomposition")
    sp.add_argument("--paintbox", default=None)
    sp.add_argument("--xi", default=None)
    sp.set_defaults(handler=cmd_exch_decompose)
    sp = exch.add_parser("audit", help="uniqueness audit of a paint-box target")
    sp.add_argument("--paintbox", required=True)
    sp.add_argument("--p", type=_frac, required=True)
    sp.set_defaults(handler=cmd_exch_audit)

    dom = top.add_parser("dom", help="stochastic-domination formulas").add_subparsers(
        dest="sub", required=True, metavar="CMD"
    )
    sp = dom.add_parser("value", help="closed-form domination values")
    sp.add_argument(
        "--model",
        choices=("paintbox", "mixture", "markov", "window-threshold", "bounded-cluster"),
        required=True,
    )
    sp.add_argument("--s", type=_frac, default=None)
    sp.add_argument("--p", type=_frac, default=None)
    sp.add_argument("--paintbox", default=None)
    sp.add_argument("--xi", default=None)
    sp.add_argument("--mixture", default=None, help="paint-box mixture JSON")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--M", type=int, default=None)
    sp.add_argument("--limit", action="store_true", help="report the density-1 limit")
    sp.set_defaults(handler=cmd_dom_value)
    sp = dom.add_parser("refute", help="necessary-condition checks for domination")
    sp.add_argument("--check", choices=("count", "size"), required=True)
    sp.add_argument("--law", required=True, help='tail law JSON {"weights":{"0":"1/2",...}}')
    sp.add_argument("--p", type=_frac, required=True)
    sp.add_argument("--alpha", type=_frac, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--d", type=int, default=1)
    sp.add_argument("--variant", choices=("1d-connected", "zd-connected"), default="1d-connected")
    sp.set_defaults(handler=cmd_dom_refute)

    chain = top.add_parser("chain", help="stationary two-state chains").add_subparsers(
        dest="sub", required=True, metavar="CMD"
    )
    sp = chain.add_parser("correspond", help="chain parameters <-> coloring parameters")
    sp.add_argument("--s", type=_frac, default=None)
    sp.add_argument("--p", type=_frac, default=None)
    sp.add_argument("--p01", type=_frac, default=None)
    sp.add_argument("--p11", type=_frac, default=None)
    sp.set_defaults(handler=cmd_chain_correspond)
    sp = chain.add_parser("field-shift", help="run conditioning vs field shift")
    sp.add_argument("--J", type=float, required=True)
    sp.add_argument("--h", type=float, default=0.0)
    sp.add_argument("--p", type=_frac, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.set_defaults(handler=cmd_chain_field_shift)
    sp = chain.add_parser("run-conditional", help="next-edge probabilities along a run")
    sp.add_argument("--J", type=_frac, required=True)
    sp.add_argument("--h", type=float, default=0.0)
    sp.add_argument("--p", type=_frac, required=True)
    sp.add_argument("--kmax", type=int, default=6)
    sp.add_argument("--N", type=int, default=40)
    sp.set_defaults(handler=cmd_chain_run_conditional)

    graph = top.add_parser("graph", help="random-cluster and spin couplings").add_subparsers(
        dest="sub", required=True, metavar="CMD"
    )
    sp = graph.add_parser("fk-exact", help="exact random-cluster partition law")
    sp.add_argument("--graph", required=True, help='K3/P4/C5, @file, or "1 2;2 3"')
    sp.add_argument("--vertices", type=int, default=None)
    sp.add_argument("--alpha", type=_frac, required=True)
    sp.add_argument("--q", type=_frac, required=True)
    sp.set_defaults(handler=cmd_graph_fk_exact)
    sp = graph.add_parser("couple-check", help="coloring identities for spin models")
    sp.add_argument("--model", choices=("ising", "fuzzy-potts"), required=True)
    sp.add_argument("--graph", required=True)
    sp.add_argument("--vertices", type=int, default=None)
    sp.add_argument("--J", type=float, required=True)
    sp.add_argument("--q", type=int, default=3)
    sp.add_argument("--ell", type=int, default=1)
    sp.set_defaults(handler=cmd_graph_couple_check)

    sample = top.add_parser("sample", help="seeded samplers (CSV output)").add_subparsers(
        dest="sub", required=True, metavar="CMD"
    )
    sp = sample.add_parser("fk", help="random-cluster heat-bath chain")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--vertices", type=int, default=None)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--q", type=float, required=True)
    sp.add_argument("--sweeps", type=int, required=True)
    sp.add_argument("--burnin", type=int, default=0)
    sp.set_defaults(handler=cmd_sample_fk, stochastic=True)
    sp = sample.add_parser("voter", help="coalescing-walk partition of a torus")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--L", type=int, required=True)
    sp.add_argument("--T", type=float, required=True)
    sp.add_argument("--reps", type=int, default=1)
    sp.set_defaults(handler=cmd_sample_voter, stochastic=True)
    sp = sample.add_parser("rwrs", help="equal-position partition of a walk")
    sp.add_argument("--step-law", default="simple", help='"simple" or JSON {"1":"1/2","-1":"1/2"}')
    sp.add_argument("--n", type=int, default=1000)
    sp.add_argument("--reps", type=int, default=1)
    sp.set_defaults(handler=cmd_sample_rwrs, stochastic=True)

    sp = top.add_parser("estimate", help="estimators over sample batches")
    sp.add_argument(
        "--kind",
        choices=("pair-correlation", "ergodicity", "cluster-density", "range"),
        required=True,
    )
    sp.add_argument("--samples", default=None, help="@file of partition CSV rows")
    sp.add_argument("--pairs", default=None, help='site pairs "1:2,3:4"')
    sp.add_argument("--box", default=None, help='box sites "1,2,3" (first = reference)')
    sp.add_argument("--p", type=_frac, default=None)
    sp.add_argument("--ns", type=_ints_arg, default=None, help='window radii "1,2,3"')
    sp.add_argument("--d", type=int, default=None)
    sp.add_argument("--L", type=int, default=None)
    sp.add_argument("--step-law", default="simple")
    sp.add_argument("--n", type=int, default=100000)
    sp.add_argument("--reps", type=int, default=3)
    sp.set_defaults(handler=cmd_estimate)

    sp = top.add_parser("verify", help="named verification suites")
    sp.add_argument("suite", help=f"one of: {', '.join(verify.SUITES)}, all")
    sp.set_defaults(handler=cmd_verify)

    return ap


# ---------------------------------------------------------------------------
# rendering


def _flat_rows(value, prefix=""):
    rows = []
    if isinstance(value, dict):
        for key in value:
            rows.extend(_flat_rows(value[key], f"{prefix}.{key}" if prefix else str(key)))
    elif isinstance(value, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in value):
            rows.append((prefix, "[" + ", ".join(str(v) for v in value) + "]"))
        else:
            for i, v in enumerate(value):
                rows.extend(_flat_rows(v, f"{prefix}[{i}]"))
    else:
        rows.append((prefix, str(value)))
    return rows


def render_table(result):
    payload = result["payload"]
    lines = [f"command: {' '.join(result['command'])}", f"status: {result['status']}"]
    if isinstance(payload, dict) and "checks" in payload:
        for check in payload["checks"]:
            mark = "PASS" if check["passed"] else "FAIL"
            suffix = f"  [{check['detail']}]" if check.get("detail") else ""
            lines.append(f"{mark}  {check['label']}{suffix}")
        total = len(payload["checks"])
        lines.append(f"{total - payload['failed']}/{total} checks passed")
        return "\n".join(lines)
    rows = _flat_rows(payload)
    width = max((len(k) for k, _ in rows), default=0)
    lines.extend(f"{k.ljust(width)}  {v}" for k, v in rows)
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# entry point


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    _apply_cap_overrides()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return code
    status, code = "ok", EXIT_OK
    try:
        if getattr(args, "stochastic", False) and args.seed is None:
            raise UsageError("this subcommand is stochastic: provide a global --seed")
        payload = args.handler(args)
    except UsageError as exc:
        payload, status, code = {"error": str(exc)}, "usage-error", EXIT_USAGE
    except SizeLimitError as exc:
        payload, status, code = {"error": str(exc)}, "size-limit", EXIT_SIZE
    except NotColorProcessError as exc:
        payload, status, code = {"error": str(exc)}, "property-violated", EXIT_PROPERTY
    except PropertyViolated as exc:
        payload, status, code = exc.payload, "property-violated", EXIT_PROPERTY
    except (ValueError, KeyError, OSError) as exc:
        payload, status, code = {"error": str(exc)}, "usage-error", EXIT_USAGE
    if isinstance(payload, tuple) and payload and payload[0] == "csv":
        sys.stdout.write(payload[1])
        return code
    result = {"command": argv, "status": status, "payload": payload}
    if args.format == "table":
        print(render_table(result))
    else:
        sys.stdout.write(serialize.json_dumps(result))
    return code


if __name__ == "__main__":
    sys.exit(main())
