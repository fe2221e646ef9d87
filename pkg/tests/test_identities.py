"""Tests for the identity case registry, evaluators, and reports."""

import json

import pytest

from cylq.identities import (
    compare_series,
    diamond_partition_series,
    distinct_largest_part_table,
    get_case,
    hook_length_table,
    marked_partition_series,
    registry,
    report_text,
    signed_distinct_partition_series,
    sum_euler,
    sum_goellnitz,
    sum_mod12,
    sum_rogers_ramanujan,
    verify,
    Side,
)
from cylq.recur import closed_form_width6, width6_min_exponent
from cylq.series import TruncatedSeries, Window, poch_product, qf, zero

EXPECTED_LABELS = {
    "coefficient-recurrences",
    "cylinder-products",
    "distinct-pair-chains",
    "euler-sum",
    "goellnitz-sums",
    "hook-counts",
    "mixed-weighted-pair",
    "mod12-sums",
    "mod4-alternating-sum",
    "mod5-chain-1",
    "mod5-chain-2",
    "mod7-double-sum",
    "open-chain-products",
    "open-chain-weighted-example",
    "product-embedding",
    "rogers-ramanujan",
    "schmidt-marginals",
    "schmidt-refined",
    "signed-distinct-mod2",
    "solver-vs-enumeration",
    "symmetric-mirror-counts",
    "symmetric-width4-bivariate",
    "width4-coefficient-forms",
    "width6-coefficient-forms",
}


def test_registry_labels_and_metadata():
    assert set(registry()) == EXPECTED_LABELS
    for label in registry():
        case = get_case(label)
        assert case.label == label
        assert case.description
        assert case.expected in ("equal", "report-only")
        assert case.window.q_truncation is not None


def test_unknown_label_raises_with_known_labels_listed():
    with pytest.raises(KeyError) as err:
        get_case("no-such-case")
    assert "euler-sum" in str(err.value)


def test_every_case_at_default_window():
    """Equal cases pass; report-only cases report, never 'mismatch'."""
    for label in registry():
        rep = verify(label)
        case = get_case(label)
        if case.expected == "equal":
            assert rep["status"] == "pass", report_text(rep)
            assert rep["equal"] is True
        else:
            assert rep["status"] == "report"
        json.dumps(rep)  # every report is JSON-serializable


def test_report_shape_and_conventions():
    rep = verify("mixed-weighted-pair", Window(8))
    assert rep["schema"] == "cylq-report/1"
    assert rep["case"] == "mixed-weighted-pair"
    assert rep["window"] == {"q_truncation": 8, "z_truncation": None, "q_scale": 1}
    assert rep["conventions"]["pochhammer"].startswith("standard")
    assert "w3_inequality" in rep["conventions"]
    assert rep["status"] == "report" and rep["equal"] is False
    by_label = {c["label"]: c for c in rep["comparisons"]}
    bad = by_label["closed chain vs claimed product"]
    assert bad["equal"] is False
    assert bad["first_difference"] == {
        "z_degree": 0,
        "q_exponent": 1,
        "lhs": 3,
        "rhs": 4,
    }
    assert 0 < len(bad["coefficients"]) <= 12
    assert bad["coefficients"][0] == bad["first_difference"]
    for c in rep["comparisons"]:
        assert c["lhs"]["provenance"] and c["rhs"]["provenance"]
    text = report_text(rep)
    assert "first difference at z^0 q^1: 3 vs 4" in text
    assert "[DIFF]" in text and "[ok]" in text


def test_window_override_is_recorded():
    rep = verify("euler-sum", Window(10))
    assert rep["window"]["q_truncation"] == 10
    assert rep["status"] == "pass"


def test_compare_series_negative_control():
    w = Window(12)
    lhs = poch_product([], [qf(1, 1)], w)
    # build a series differing in exactly one coefficient
    bumped = dict(lhs.coeffs)
    bumped[(0, 5)] = bumped.get((0, 5), 0) + 1
    rhs = TruncatedSeries(bumped, 12, None, 1)
    cmp = compare_series(
        "control", lhs, Side("a", "product"), rhs, Side("b", "product")
    )
    assert cmp.equal is False
    assert cmp.first_difference == (0, 5, lhs.coefficient(0, 5), lhs.coefficient(0, 5) + 1)
    assert cmp.rows == (cmp.first_difference,)


def test_mod5_chain_expected_mismatch_pattern():
    """Entries always match their own product and the shared core; only
    the width-3 entry matches the printed chain target."""
    for label in ("mod5-chain-1", "mod5-chain-2"):
        rep = verify(label, Window(9))
        for c in rep["comparisons"]:
            if "direct product" in c["label"] or "shared core" in c["label"]:
                assert c["equal"], c["label"]
            elif c["label"].startswith("entry 1"):
                assert c["equal"], c["label"]
            else:
                assert not c["equal"], c["label"]
                assert c["first_difference"]["q_exponent"] == 5


def test_sum_evaluator_spot_values():
    w = Window(12)
    euler = sum_euler(w)
    assert euler.coefficient(0, 5) == 7  # partitions of 5
    rr = sum_rogers_ramanujan(0, w)
    assert rr.coefficient(0, 4) == 2  # 4 and 1+1+1+1
    gg2 = sum_goellnitz("GG2", w)
    assert gg2.coefficient(0, 7) == 3  # 7, 4+1+1+1, seven ones


def test_signed_distinct_enumeration_small_values():
    s = signed_distinct_partition_series(Window(6))
    # q^3: (3) and (2,1) each carry one odd part
    assert s.coefficient(0, 3) == -2
    assert s.coefficient(0, 2) == 1
    assert s.coefficient(0, 1) == -1


def test_marked_enumeration_hand_count():
    s = marked_partition_series(Window(6, 4), distinct=True, mark="odd")
    # largest part 3, odd-position sum 4: only (3, 2, 1)
    assert s.coefficient(3, 4) == 1
    d = diamond_partition_series(Window(4, 3))
    # anchor sum 1: diamonds (1) and (1; x, y) for (x, y) != (0, 0), x, y <= 1
    assert d.coefficient(1, 1) == 4


def test_hook_tables_hand_count():
    t = distinct_largest_part_table(6, mark="odd")
    assert t[(3, 4)] == 1  # (3,2,1)
    h = hook_length_table(6)
    assert h[(3, 4)] == 1  # (2,2) is the only partition of 4 with hook 3


def test_mod12_stopping_rule_matches_brute_force():
    w = Window(20)
    for profile in ((1, 1, 1), (1, 1, -1), (1, -1, 1), (-1, 1, 1)):
        seq = closed_form_width6(profile)
        brute = zero(w)
        for n in range(40):
            if width6_min_exponent(profile, n) < 20:
                brute = brute + seq.value(n, w)
        assert sum_mod12(profile, w).first_difference(brute) is None


def test_sum_mod12_rejects_infinite_window():
    with pytest.raises(ValueError):
        sum_mod12((1, 1, 1), Window(None))


def test_marked_enumeration_requires_z_cap():
    with pytest.raises(ValueError):
        marked_partition_series(Window(8))
