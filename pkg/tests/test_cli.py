"""Command-line surface: JSON envelopes, exit codes, seed policy, CSV sample
output feeding back into estimators, and environment cap overrides."""

import json
from fractions import Fraction

import pytest

import divcolor.measures as measures_mod
from divcolor import cli
from divcolor.measures import product_measure
from divcolor.serialize import color_to_json

F = Fraction


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(argv, capsys):
    code, out = run(argv, capsys)
    return code, json.loads(out)


# ---------------------------------------------------------------------------
# envelopes and exit codes


def test_kernel_command_envelope(capsys):
    code, doc = run_json(["finite", "kernel", "--n", "3", "--p", "1/2"], capsys)
    assert code == 0
    assert doc["status"] == "ok"
    assert doc["command"][:2] == ["finite", "kernel"]
    payload = doc["payload"]
    assert payload["dim"] == 1
    assert payload["basis"] == [
        {
            "RGS:000": "1/2",
            "RGS:001": "-1/2",
            "RGS:010": "-1/2",
            "RGS:011": "-1/2",
            "RGS:012": "1",
        }
    ]


def test_domination_value_commands(capsys):
    code, doc = run_json(["dom", "value", "--model", "markov", "--s", "1/4", "--p", "1/2"], capsys)
    assert code == 0
    assert doc["payload"]["value"] == "3/8"
    assert doc["payload"]["quantity"] == "d_markov"
    code, doc = run_json(
        ["dom", "value", "--model", "paintbox", "--paintbox", "1/2,1/4", "--limit"], capsys
    )
    assert code == 0
    assert doc["payload"]["value"] == "1/4"


def test_verify_suite_passes(capsys):
    code, doc = run_json(["verify", "trivial-iid"], capsys)
    assert code == 0
    payload = doc["payload"]
    assert payload["suite"] == "trivial-iid"
    assert payload["failed"] == 0
    assert all(c["passed"] for c in payload["checks"])


def test_unknown_suite_is_usage_error(capsys):
    code, doc = run_json(["verify", "bogus"], capsys)
    assert code == 2
    assert doc["status"] == "usage-error"


def test_size_limit_exit_code(capsys):
    code, doc = run_json(["finite", "kernel", "--n", "14", "--p", "1/2"], capsys)
    assert code == 3
    assert doc["status"] == "size-limit"


def test_property_violation_exit_code(capsys):
    code, doc = run_json(["chain", "correspond", "--p01", "5/8", "--p11", "3/8"], capsys)
    assert code == 1
    assert doc["status"] == "property-violated"
    assert "not the color process" in doc["payload"]["error"]


def test_field_shift_with_impossible_tolerance(capsys):
    code, doc = run_json(
        ["chain", "field-shift", "--J", "0.5", "--p", "1/2",
         "--k", "1", "--l", "3", "--n", "4", "--tol", "1e-30"],
        capsys,
    )
    assert code == 1
    assert doc["status"] == "property-violated"


def test_membership_refusal_is_an_answer_not_an_error(capsys):
    law = json.dumps({"n": 2, "weights": {"10": "1/2", "01": "1/2"}})
    code, doc = run_json(["finite", "membership", "--measure", law, "--p", "1/2"], capsys)
    assert code == 0
    assert doc["payload"] == {"member": False, "p": "1/2", "rer": None}


def test_represent_round_trip(capsys):
    law = json.dumps({"n": 2, "weights": {"11": "3/8", "10": "1/8", "01": "1/8", "00": "3/8"}})
    code, doc = run_json(["finite", "represent", "--measure", law], capsys)
    assert code == 0
    assert doc["payload"]["p"] == "1/2"
    assert doc["payload"]["rer"]["weights"] == {"RGS:00": "1/2", "RGS:01": "1/2"}


def test_witness_catalog_entries(capsys):
    code, doc = run_json(["finite", "witnesses", "--name", "thmC_nu2", "--p", "1/3"], capsys)
    assert code == 0
    entry = doc["payload"]["measures"]["thmC_nu2"]
    assert entry["depends_on_density"] is True
    assert entry["p"] == "1/3"
    code, _ = run_json(["finite", "witnesses", "--name", "nope"], capsys)
    assert code == 2


def test_exchangeable_mixing_law_command(capsys):
    code, doc = run_json(["exch", "xi", "--paintbox", "1/2,1/4", "--p", "1/2"], capsys)
    assert code == 0
    assert doc["payload"]["mean"] == "1/2"
    assert doc["payload"]["xi"]["atoms"] == {
        "1/8": "1/4",
        "3/8": "1/4",
        "5/8": "1/4",
        "7/8": "1/4",
    }


def test_split_check_command(capsys):
    code, doc = run_json(["exch", "split-check", "--p1", "1/2", "--p2", "1/4", "--n", "4"], capsys)
    assert code == 0
    assert doc["payload"]["holds"] is True


def test_fk_exact_named_and_inline_graphs(capsys):
    code, doc = run_json(["graph", "fk-exact", "--graph", "K3", "--alpha", "1/2", "--q", "2"], capsys)
    assert code == 0
    assert doc["payload"]["rer"]["weights"]["RGS:000"] == "2/7"
    code, doc = run_json(
        ["graph", "fk-exact", "--graph", "1 2;2 3", "--vertices", "3",
         "--alpha", "1/3", "--q", "1"],
        capsys,
    )
    assert code == 0
    assert doc["payload"]["rer"]["weights"]["RGS:000"] == "1/9"


# ---------------------------------------------------------------------------
# seeds, determinism, parallelism


def test_stochastic_commands_require_seed(capsys):
    code, doc = run_json(["sample", "rwrs", "--n", "20"], capsys)
    assert code == 2
    assert "--seed" in doc["payload"]["error"]
    code, _ = run_json(["estimate", "--kind", "range"], capsys)
    assert code == 2


def test_sample_output_is_byte_deterministic(capsys):
    argv = ["--seed", "5", "sample", "rwrs", "--n", "20", "--reps", "2"]
    code1, out1 = run(argv, capsys)
    code2, out2 = run(argv, capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    lines = out1.splitlines()
    assert lines[0].startswith("# model=rwrs")
    assert "seed=5" in lines[0]
    assert lines[1] == "partition"
    assert len(lines) == 4


def test_jobs_do_not_change_output(capsys):
    base = ["sample", "rwrs", "--n", "50", "--reps", "4"]
    _, serial = run(["--seed", "9", "--jobs", "1"] + base, capsys)
    _, parallel = run(["--seed", "9", "--jobs", "2"] + base, capsys)
    assert serial == parallel


# ---------------------------------------------------------------------------
# samples feeding estimators


def test_sample_to_cluster_density_estimate(tmp_path, capsys):
    code, out = run(
        ["--seed", "15", "sample", "voter", "--d", "1", "--L", "6", "--T", "2.0", "--reps", "3"],
        capsys,
    )
    assert code == 0
    path = tmp_path / "voter.csv"
    path.write_text(out)
    code, doc = run_json(
        ["estimate", "--kind", "cluster-density", "--samples", f"@{path}", "--ns", "1"],
        capsys,
    )
    assert code == 0
    est = doc["payload"]["estimates"]
    assert "origin_density(n=1)" in est and "count_density(n=1)" in est
    assert 0.0 < est["origin_density(n=1)"] <= 1.0


def test_sample_to_pair_correlation_estimate(tmp_path, capsys):
    code, out = run(["--seed", "8", "sample", "rwrs", "--n", "12", "--reps", "40"], capsys)
    assert code == 0
    path = tmp_path / "rwrs.csv"
    path.write_text(out)
    code, doc = run_json(
        ["--seed", "21", "estimate", "--kind", "pair-correlation",
         "--samples", f"@{path}", "--p", "1/2", "--pairs", "1:2"],
        capsys,
    )
    assert code == 0
    assert doc["payload"]["n_samples"] == 40
    assert 0.25 <= doc["payload"]["estimates"]["(1,2)"] <= 1.0
    code, doc = run_json(
        ["estimate", "--kind", "pair-correlation", "--samples", f"@{path}",
         "--p", "1/2", "--pairs", "1:2"],
        capsys,
    )
    assert code == 2  # coloring requires a seed


# ---------------------------------------------------------------------------
# presentation and caps


def test_table_format(capsys):
    code, out = run(["--format", "table", "verify", "trivial-iid"], capsys)
    assert code == 0
    assert "PASS" in out
    assert "checks passed" in out
    assert not out.lstrip().startswith("{")


def test_env_cap_override(monkeypatch, capsys):
    # the override mutates the module global; register its current value with
    # monkeypatch first so the change is undone after the test
    monkeypatch.setattr(measures_mod, "MEMBERSHIP_CAP", measures_mod.MEMBERSHIP_CAP)
    monkeypatch.setenv("DIVCOLOR_MEMBERSHIP_CAP", "4")
    law = json.dumps(color_to_json(product_measure(5, F(1, 2))))
    code, doc = run_json(["finite", "membership", "--measure", law, "--p", "1/2"], capsys)
    assert code == 3
    assert doc["status"] == "size-limit"


def test_without_override_the_default_cap_applies(capsys):
    law = json.dumps(color_to_json(product_measure(5, F(1, 2))))
    code, doc = run_json(["finite", "membership", "--measure", law, "--p", "1/2"], capsys)
    assert code == 0
    assert doc["payload"]["member"] is True
