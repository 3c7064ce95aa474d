"""JSON and CSV encodings: exact-rational string conventions, measure
round-trips, dispatching decoder, report payload shapes, and the sample CSV
surfaces."""

import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from divcolor import (
    AtomicXi,
    EdgeWindowLaw,
    ExchRERMeasure,
    MarkovSpec,
    PaintBox,
    PaintboxMixture,
    PartitionSample,
    SimpleMixture,
    kernel,
    uniqueness_audit,
)
from divcolor.domination import DominationReport
from divcolor.graphs import EstimatorReport, rwrs_rer
from divcolor.measures import RERMeasure
from divcolor.partitions import SetPartition
from divcolor.serialize import (
    audit_to_json,
    color_from_json,
    color_to_json,
    configuration_samples_to_csv,
    csv_params,
    domination_report_to_json,
    edge_window_law_to_csv,
    encode_inputs,
    estimator_report_to_json,
    exch_from_json,
    exch_to_json,
    frac_from_str,
    frac_to_str,
    json_dumps,
    kernel_to_json,
    markov_to_json,
    measure_from_json,
    paintbox_from_json,
    paintbox_mixture_from_json,
    paintbox_mixture_to_json,
    paintbox_to_json,
    partition_samples_from_csv,
    partition_samples_to_csv,
    rer_from_json,
    rer_to_json,
    signed_vector_to_json,
    simple_mixture_from_json,
    simple_mixture_to_json,
    xi_from_json,
    xi_to_json,
)

from conftest import color_measures, exch_measures, paint_boxes, rer_measures

F = Fraction


# ---------------------------------------------------------------------------
# rational strings and canonical JSON


def test_frac_strings():
    assert frac_to_str(F(3, 8)) == "3/8"
    assert frac_to_str(F(2, 1)) == "2"
    assert frac_to_str(0) == "0"
    assert frac_from_str("3/8") == F(3, 8)
    assert frac_from_str("2") == F(2)


def test_encode_inputs_types():
    out = encode_inputs({"p": F(1, 2), "n": 3, "x": 0.25, "s": "abc", "flag": True})
    assert out == {"p": "1/2", "n": "3", "x": 0.25, "s": "abc", "flag": True}
    with pytest.raises(TypeError):
        encode_inputs({"bad": object()})


def test_json_dumps_is_canonical():
    a = json_dumps({"b": 1, "a": [2, 3]})
    b = json_dumps({"a": [2, 3], "b": 1})
    assert a == b
    assert a.endswith("\n")
    assert json.loads(a) == {"a": [2, 3], "b": 1}


# ---------------------------------------------------------------------------
# measures


@given(rer_measures(4))
@settings(max_examples=40)
def test_rer_round_trip(nu):
    obj = rer_to_json(nu)
    assert all(k.startswith("RGS:") for k in obj["weights"])
    assert rer_from_json(obj) == nu
    assert measure_from_json(obj) == nu


@given(exch_measures(5))
@settings(max_examples=40)
def test_exch_round_trip(nu):
    obj = exch_to_json(nu)
    assert exch_from_json(obj) == nu
    assert measure_from_json(obj) == nu


@given(color_measures(3))
@settings(max_examples=40)
def test_color_round_trip(mu):
    obj = color_to_json(mu)
    assert all(set(k) <= {"0", "1"} for k in obj["weights"])
    assert color_from_json(obj) == mu
    assert measure_from_json(obj) == mu


def test_measure_dispatch_errors():
    with pytest.raises(ValueError):
        measure_from_json({"n": 2, "weights": {}})
    with pytest.raises(ValueError):
        rer_from_json({"n": 3, "weights": {"RGS:00": "1"}})  # wrong size


def test_exchangeable_keys_use_dash_format():
    obj = exch_to_json(ExchRERMeasure(6, {(4, 2): F(1, 3), (3, 2, 1): F(2, 3)}))
    assert set(obj["weights"]) == {"4-2", "3-2-1"}


# ---------------------------------------------------------------------------
# paint-boxes and mixing laws


@given(paint_boxes())
@settings(max_examples=40)
def test_paintbox_round_trip(pb):
    assert paintbox_from_json(paintbox_to_json(pb)) == pb


def test_xi_and_mixture_round_trips():
    xi = AtomicXi({F(1, 8): F(1, 4), F(7, 8): F(3, 4)})
    assert xi_from_json(xi_to_json(xi)) == xi
    w = SimpleMixture({F(1): F(3, 4), F(0): F(1, 4)})
    assert simple_mixture_from_json(simple_mixture_to_json(w)) == w
    rho = PaintboxMixture(
        {PaintBox((F(1, 2), F(1, 4))): F(1, 3), PaintBox(()): F(2, 3)}
    )
    assert paintbox_mixture_from_json(paintbox_mixture_to_json(rho)) == rho


def test_audit_payload_shape():
    audit = uniqueness_audit(PaintBox((F(1, 2), F(1, 4))), F(2, 3))
    payload = audit_to_json(audit)
    assert payload["unique"] is True
    assert payload["target"] == ["1/2", "1/4"]
    assert payload["p"] == "2/3"
    assert payload["family"] == "two-box"
    assert payload["mixture"] is None
    assert len(payload["candidates"]) == 4
    for row in payload["system"]:
        assert set(row) == {"atom", "target_weight", "candidate_weights"}
    rendered = json_dumps(payload)
    assert json.loads(rendered)["family"] == "two-box"


# ---------------------------------------------------------------------------
# kernel vectors


def test_kernel_payload():
    basis = kernel(3, F(1, 2), "general")
    payload = kernel_to_json(3, F(1, 2), "general", basis)
    assert payload["n"] == 3 and payload["p"] == "1/2" and payload["dim"] == 1
    (vec,) = payload["basis"]
    assert set(vec) == {"RGS:012", "RGS:001", "RGS:011", "RGS:010", "RGS:000"}
    assert sum(F(s) for s in vec.values()) == 0


def test_exchangeable_vector_keys():
    (vec,) = kernel(3, F(1, 2), "exchangeable")
    encoded = signed_vector_to_json(vec)
    assert all("-" in k or k.isdigit() for k in encoded)


# ---------------------------------------------------------------------------
# reports


def test_markov_payload():
    spec = MarkovSpec.from_up_probs(F(3, 8), F(5, 8))
    assert markov_to_json(spec) == {
        "p01": "3/8",
        "p10": "3/8",
        "p11": "5/8",
        "p00": "5/8",
    }


def test_domination_report_payload_variants():
    closed = DominationReport("d_markov", {"s": F(1, 4), "p": F(1, 2)}, value=F(3, 8))
    payload = domination_report_to_json(closed)
    assert payload["value"] == "3/8"
    assert payload["verdict"] is None
    assert "lhs" not in payload and "note" not in payload
    check = DominationReport(
        "cluster_count_inequality",
        {"p": F(1, 2)},
        lhs=F(1),
        rhs=F(1, 4),
        verdict=False,
        note="domination refuted",
    )
    payload2 = domination_report_to_json(check)
    assert payload2["lhs"] == "1" and payload2["rhs"] == "1/4"
    assert payload2["verdict"] is False
    assert payload2["note"] == "domination refuted"


def test_estimator_report_payload():
    rep = EstimatorReport("range_fraction", 3, 14, {"range_fraction": 0.5}, {"range_fraction": 0.01})
    payload = estimator_report_to_json(rep)
    assert payload["tol"] == "stderr"
    assert "note" not in payload
    noted = EstimatorReport("x", 1, 0, {"v": 1.0}, {"v": 0.0}, note="single replicate")
    assert estimator_report_to_json(noted)["note"] == "single replicate"


# ---------------------------------------------------------------------------
# CSV surfaces


def test_edge_window_csv():
    law = EdgeWindowLaw(2, {(1, 1): 0.5, (1, -1): 0.25, (-1, 1): 0.25})
    text = edge_window_law_to_csv(law, params={"J": 0.5, "N": 1})
    lines = text.splitlines()
    assert lines[0] == "# J=0.5 N=1"
    assert lines[1] == "config,probability"
    assert lines[2].startswith("++,")
    assert csv_params(text) == {"J": "0.5", "N": "1"}


def test_configuration_csv():
    arr = np.array([[1, 0, 1], [0, 0, 0]])
    text = configuration_samples_to_csv(arr, {"seed": 7, "p": "1/2"})
    lines = text.splitlines()
    assert lines[0] == "# seed=7 p=1/2"
    assert lines[1] == "configuration"
    assert lines[2:] == ["101", "000"]


def test_partition_csv_round_trip():
    samples = [rwrs_rer({1: 0.5, -1: 0.5}, 12, seed=s) for s in (1, 2)]
    text = partition_samples_to_csv(samples, {"model": "rwrs", "seed": 1})
    back = partition_samples_from_csv(text)
    assert back == [s.partition for s in samples]
    assert csv_params(text)["model"] == "rwrs"


def test_partition_csv_supports_two_digit_labels():
    pi = SetPartition(11, tuple(range(11)))
    sample = PartitionSample(pi, "test", {})
    text = partition_samples_to_csv([sample], {"k": "v"})
    assert "0-1-2-3-4-5-6-7-8-9-10" in text
    assert partition_samples_from_csv(text) == [pi]


def test_csv_params_without_header():
    assert csv_params("configuration\n101\n") == {}
