"""End-to-end tests for the command-line front end (via main(argv))."""

import json

import pytest

from cylq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# series / enumerate / product / system / solve
# ---------------------------------------------------------------------------


def test_series_euler_text(capsys):
    code, out, _ = run(capsys, "series", "--sum", "euler", "--N", "8")
    assert code == 0
    assert "q^5: 7" in out and "q^7: 15" in out


def test_series_json_envelope(capsys):
    code, out, _ = run(
        capsys, "series", "--sum", "rogers-ramanujan-1", "--N", "6",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "cylq-cli/1"
    assert "pochhammer" in payload["conventions"]
    assert payload["series"]["schema"] == "cylq-series/1"
    assert payload["series"]["q_truncation"] == 6


def test_series_mod12_needs_profile(capsys):
    code, _, err = run(capsys, "series", "--sum", "mod12", "--N", "6")
    assert code == 2
    assert "--profile" in err


def test_enumerate_matches_direct_call(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--kind", "cylindric", "--profile=-1,1",
        "--N", "6", "--D", "3",
    )
    assert code == 0
    assert "z^2 q^4: 2" in out


def test_enumerate_objects_lists_count(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--kind", "skew-shifted", "--profile=1,-1",
        "--N", "5", "--D", "3", "--objects",
    )
    assert code == 0
    assert out.startswith("15 objects")


def test_product_with_weights(capsys):
    code, out, _ = run(
        capsys, "product", "--kind", "cylindric", "--profile=-1,-1,1",
        "--weights", "1,3,1", "--N", "7",
    )
    assert code == 0
    assert "q^4: 2" in out and "q^6: 4" in out


def test_product_spec_only_json(capsys):
    code, out, _ = run(
        capsys, "product", "--kind", "symmetric", "--profile=1,-1",
        "--N", "4", "--spec-only", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["product"]["schema"].startswith("cylq-product")


def test_system_pretty_and_json(capsys):
    code, out, _ = run(capsys, "system", "--kind", "cylindric", "--profile=-1,1")
    assert code == 0
    assert "H[-1,+1](z)" in out
    code, out, _ = run(
        capsys, "system", "--kind", "cylindric", "--profile=-1,1",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["system"]["schema"].startswith("cylq-system")


def test_solve_select_profile(capsys):
    code, out, _ = run(
        capsys, "solve", "--kind", "cylindric", "--profile=-1,1",
        "--N", "6", "--select=-1,1",
    )
    assert code == 0
    assert "q^0: 1" in out


def test_solve_select_outside_closure_is_usage_error(capsys):
    code, _, err = run(
        capsys, "solve", "--kind", "cylindric", "--profile=-1,1",
        "--N", "5", "--select=1,1",
    )
    assert code == 2
    assert "closure" in err


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_single_case_pass(capsys):
    code, out, _ = run(capsys, "verify", "--case", "rogers-ramanujan")
    assert code == 0
    assert "[pass]" in out
    assert "2/2 comparisons equal" in out


def test_verify_window_override_in_summary(capsys):
    code, out, _ = run(capsys, "verify", "--case", "euler-sum", "--N", "50")
    assert code == 0
    assert "through q^49" in out


def test_verify_report_only_case_exits_one(capsys):
    code, out, _ = run(capsys, "verify", "--case", "mixed-weighted-pair")
    assert code == 1
    assert "[DIFF]" in out and "first difference at" in out


def test_verify_unknown_case_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--case", "no-such-case")
    assert code == 2
    assert "unknown identity case" in err


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0
    labels = out.split()
    assert "rogers-ramanujan" in labels and labels == sorted(labels)


def test_verify_parallel_output_deterministic(capsys):
    cases = ["hook-counts", "euler-sum", "rogers-ramanujan", "goellnitz-sums"]
    _, serial, _ = run(capsys, "verify", *sum([["--case", c] for c in cases], []))
    _, parallel, _ = run(
        capsys, "verify", "--jobs", "4",
        *sum([["--case", c] for c in reversed(cases)], []),
    )
    assert serial == parallel


def test_verify_json_reports_sorted_and_versioned(capsys):
    code, out, _ = run(
        capsys, "verify", "--case", "euler-sum", "--case", "rogers-ramanujan",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "cylq-cli/1"
    labels = [r["case"] for r in payload["reports"]]
    assert labels == sorted(labels)
    for report in payload["reports"]:
        assert report["schema"] == "cylq-report/1"
        assert "window" in report and "conventions" in report


# ---------------------------------------------------------------------------
# fit
# ---------------------------------------------------------------------------


def test_fit_inline_recovers_weights(capsys):
    code, out, _ = run(
        capsys, "fit", "--kind", "cylindric", "--profile=-1,-1,1",
        "--target", "1,4,5@5",
    )
    assert code == 0
    assert "weights 1,3,1 (forward check: ok)" in out


def test_fit_empty_result_is_not_an_error(capsys):
    code, out, _ = run(
        capsys, "fit", "--kind", "cylindric", "--profile=-1,-1,1",
        "--target", "6,6,5@5",
    )
    assert code == 0
    assert "no weight vectors" in out


def test_fit_shape_infeasible_exits_two(capsys):
    code, out, _ = run(
        capsys, "fit", "--kind", "cylindric", "--profile=-1,-1,1",
        "--target", "1,4,5@5", "--target", "1@2",
    )
    assert code == 2
    assert "infeasible by shape" in out


def test_fit_problem_file_and_json_report(tmp_path, capsys):
    from cylq.fitkit import FitProblem

    problem = FitProblem.make("skew-shifted", (1, -1), (((1, 1, 1), 1), ((1,), 2)))
    path = tmp_path / "problem.json"
    path.write_text(json.dumps(problem.to_json()), encoding="utf-8")
    code, out, _ = run(capsys, "fit", "--problem", str(path), "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == "cylq-fit-result/1"
    assert [s["weights"] for s in report["solutions"]] == [[0, 1, 0]]


def test_fit_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "fit", "--problem", "/no/such/file.json")
    assert code == 2
    assert "error:" in err


# ---------------------------------------------------------------------------
# balance and argparse-level behavior
# ---------------------------------------------------------------------------


def test_balance_small_width(capsys):
    code, out, _ = run(capsys, "balance", "--max-width", "5")
    assert code == 0
    assert "width 5: 32/32 balanced" in out
    assert "all 62 profiles balanced" in out


def test_balance_json(capsys):
    code, out, _ = run(capsys, "balance", "--max-width", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["census"]["3"] == [8, 8]
    assert payload["balanced"] == payload["total"] == 14


def test_bad_profile_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--kind", "cylindric", "--profile", "0,2", "--N", "4"])
    assert exc.value.code == 2


def test_bad_window_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["series", "--sum", "euler", "--N", "0"])
    assert exc.value.code == 2
