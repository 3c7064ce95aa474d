"""JSON and CSV encoding for the package's exact and floating values.

Conventions, shared by the command-line surface and the test fixtures:

* rationals are ``"num/den"`` decimal strings, never floats;
* floats are plain JSON numbers, and any payload containing floats carries an
  explicit ``"tol"`` field (attached by the caller, who knows the guarantee);
* measures over set partitions are keyed by RGS strings (``"RGS:001"``),
  measures over configurations by bit-strings (``"110"``, element 1 leftmost),
  exchangeable shape laws by part strings (``"4-2"``);
* CSV sample files start with a ``#`` comment line naming every parameter and
  the seed, followed by a column-name row; partition rows are dash-joined RGS
  labels (``0-0-1``), configuration rows are bit-strings.
"""

from __future__ import annotations

import io
import json
from fractions import Fraction

import numpy as np

from .measures import ColorMeasure, ExchRERMeasure, RERMeasure, SignedVector
from .paintbox import AtomicXi, PaintBox, PaintboxMixture, SimpleMixture
from .partitions import IntegerPartition, SetPartition


def frac_to_str(x):
    """``Fraction(3, 8)`` -> ``"3/8"``; whole values render without ``/1``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def frac_from_str(s):
    return Fraction(s)


def _encode_value(v):
    """Fractions/ints to strings, floats left as numbers."""
    if isinstance(v, bool):
        return v
    if isinstance(v, (Fraction, int)):
        return frac_to_str(v)
    if isinstance(v, float):
        return v
    if isinstance(v, str):
        return v
    raise TypeError(f"cannot encode {type(v).__name__}")


def encode_inputs(inputs):
    """Encode a flat parameter dict (used for report ``inputs`` fields)."""
    return {k: _encode_value(v) for k, v in inputs.items()}


def json_dumps(payload):
    """Canonical rendering: sorted keys, two-space indent, trailing newline.

    Sorting makes repeated runs byte-identical regardless of construction
    order of intermediate dicts.
    """
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# measures


def rer_to_json(nu):
    return {
        "n": nu.n,
        "weights": {
            SetPartition(nu.n, rgs).to_string(): frac_to_str(w)
            for rgs, w in nu.weights.items()
        },
    }


def rer_from_json(obj):
    n = int(obj["n"])
    weights = {}
    for key, val in obj["weights"].items():
        pi = SetPartition.from_string(key)
        if pi.n != n:
            raise ValueError(f"partition {key!r} has {pi.n} elements, expected {n}")
        weights[pi] = frac_from_str(val)
    return RERMeasure(n, weights)


def exch_to_json(nu):
    return {
        "n": nu.n,
        "weights": {
            shape.to_string(): frac_to_str(w) for shape, w in nu.items()
        },
    }


def exch_from_json(obj):
    n = int(obj["n"])
    return ExchRERMeasure(
        n, {IntegerPartition.from_string(k): frac_from_str(v) for k, v in obj["weights"].items()}
    )


def color_to_json(mu):
    return {"n": mu.n, "weights": {cfg: frac_to_str(w) for cfg, w in mu.items()}}


def color_from_json(obj):
    return ColorMeasure(int(obj["n"]), {k: frac_from_str(v) for k, v in obj["weights"].items()})


def measure_from_json(obj):
    """Dispatch on key shape: RGS strings -> RER, bit-strings -> color law,
    part strings containing ``-`` or a single integer -> exchangeable law."""
    keys = list(obj["weights"])
    if not keys:
        raise ValueError("empty measure")
    if all(k.startswith("RGS:") for k in keys):
        return rer_from_json(obj)
    if all(set(k) <= {"0", "1"} for k in keys):
        return color_from_json(obj)
    return exch_from_json(obj)


def signed_vector_to_json(vec):
    if vec.space == "general":
        return {
            SetPartition(vec.n, rgs).to_string(): frac_to_str(v)
            for rgs, v in vec.coords.items()
        }
    return {
        IntegerPartition(vec.n, parts).to_string(): frac_to_str(v)
        for parts, v in vec.coords.items()
    }


def kernel_to_json(n, p, space, basis):
    return {
        "n": n,
        "p": frac_to_str(p),
        "space": space,
        "dim": len(basis),
        "basis": [signed_vector_to_json(vec) for vec in basis],
    }


# ---------------------------------------------------------------------------
# paint-boxes and mixing laws


def paintbox_to_json(pb):
    return [frac_to_str(q) for q in pb.probs]


def paintbox_from_json(arr):
    return PaintBox(tuple(frac_from_str(s) for s in arr))


def xi_to_json(xi):
    return {"atoms": {frac_to_str(a): frac_to_str(w) for a, w in sorted(xi.atoms.items())}}


def xi_from_json(obj):
    return AtomicXi({frac_from_str(a): frac_from_str(w) for a, w in obj["atoms"].items()})


def simple_mixture_to_json(mix):
    return {"atoms": {frac_to_str(s): frac_to_str(w) for s, w in sorted(mix.atoms.items())}}


def simple_mixture_from_json(obj):
    return SimpleMixture({frac_from_str(s): frac_from_str(w) for s, w in obj["atoms"].items()})


def paintbox_mixture_to_json(mix):
    return {
        "components": [
            {"box": paintbox_to_json(pb), "weight": frac_to_str(w)}
            for pb, w in sorted(mix.atoms.items(), key=lambda kv: kv[0].probs)
        ]
    }


def paintbox_mixture_from_json(obj):
    return PaintboxMixture(
        {paintbox_from_json(c["box"]): frac_from_str(c["weight"]) for c in obj["components"]}
    )


def audit_to_json(audit):
    payload = {
        "unique": audit.unique,
        "target": paintbox_to_json(audit.target),
        "p": frac_to_str(audit.p),
        "family": audit.family,
        "candidates": [paintbox_to_json(pb) for pb in audit.candidates],
        "system": [
            {
                "atom": frac_to_str(atom),
                "target_weight": frac_to_str(wt),
                "candidate_weights": [frac_to_str(x) for x in row],
            }
            for atom, wt, row in audit.system
        ],
        "mixture": None,
        "note": audit.note,
    }
    if audit.mixture is not None:
        payload["mixture"] = [
            {"box": paintbox_to_json(pb), "weight": frac_to_str(w)}
            for pb, w in sorted(audit.mixture.items(), key=lambda kv: kv[0].probs)
        ]
    return payload


# ---------------------------------------------------------------------------
# reports


def markov_to_json(spec):
    return {
        "p01": frac_to_str(spec.p01),
        "p10": frac_to_str(spec.p10),
        "p11": frac_to_str(spec.p11),
        "p00": frac_to_str(spec.p00),
    }


def domination_report_to_json(report):
    payload = {
        "quantity": report.quantity,
        "inputs": encode_inputs(report.inputs),
        "value": _encode_value(report.value) if report.value is not None else None,
        "verdict": report.verdict,
    }
    if report.lhs is not None:
        payload["lhs"] = _encode_value(report.lhs)
    if report.rhs is not None:
        payload["rhs"] = _encode_value(report.rhs)
    if report.note:
        payload["note"] = report.note
    return payload


def run_report_to_json(report):
    return {
        "J": report.J,
        "p": report.p,
        "N": report.N,
        "a": list(report.a),
        "strictly_increasing": report.strictly_increasing,
        "min_margin": report.min_margin,
        "tol": 1e-12,
    }


def coupling_report_to_json(report):
    return {
        "model": report.model,
        "J": report.J,
        "q": report.q,
        "ell": report.ell,
        "deviations": dict(report.deviations),
        "matched": report.matched,
        "deviation": report.deviation,
        "tol": 1e-10,
    }


def estimator_report_to_json(report):
    payload = {
        "name": report.name,
        "n_samples": report.n_samples,
        "seed": report.seed,
        "estimates": dict(report.estimates),
        "stderr": dict(report.stderr),
        "tol": "stderr",
    }
    if report.note:
        payload["note"] = report.note
    return payload


# ---------------------------------------------------------------------------
# CSV surfaces


def _header_line(params):
    fields = " ".join(f"{k}={v}" for k, v in params.items())
    return f"# {fields}"


def edge_window_law_to_csv(law, params=None):
    """Rows ``config,probability`` with configs as +/- strings."""
    out = io.StringIO()
    if params:
        out.write(_header_line(params) + "\n")
    out.write("config,probability\n")
    for signs in sorted(law.weights, reverse=True):
        cfg = "".join("+" if s == 1 else "-" for s in signs)
        out.write(f"{cfg},{law.weights[signs]!r}\n")
    return out.getvalue()


def configuration_samples_to_csv(samples, params):
    """``samples`` is a (count, n) 0/1 array; one bit-string row each."""
    samples = np.asarray(samples)
    out = io.StringIO()
    out.write(_header_line(params) + "\n")
    out.write("configuration\n")
    for row in samples:
        out.write("".join("1" if b else "0" for b in row) + "\n")
    return out.getvalue()


def partition_samples_to_csv(samples, params):
    """One dash-joined RGS row per partition sample (labels may exceed 9)."""
    out = io.StringIO()
    out.write(_header_line(params) + "\n")
    out.write("partition\n")
    for sample in samples:
        pi = sample.partition if hasattr(sample, "partition") else sample
        out.write("-".join(str(d) for d in pi.rgs) + "\n")
    return out.getvalue()


def csv_params(text):
    """Parse the leading ``# key=value ...`` header of a sample CSV."""
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#"):
            out = {}
            for token in line[1:].split():
                if "=" in token:
                    key, val = token.split("=", 1)
                    out[key] = val
            return out
        if line:
            return {}
    return {}


def partition_samples_from_csv(text):
    """Parse sample rows back into SetPartition values (header ignored)."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#") or line == "partition":
            continue
        labels = tuple(int(tok) for tok in line.split("-"))
        out.append(SetPartition(len(labels), labels))
    return out
