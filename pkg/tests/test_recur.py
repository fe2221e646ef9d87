"""Tests for coupled q-difference systems, elimination and recurrences."""

import json
from fractions import Fraction

import pytest

from cylq.lattice import genfun_by_enumeration
from cylq.recur import (
    CoefficientRecurrence,
    FunctionalTerm,
    build_system,
    check_closed_form,
    closed_form_euler,
    closed_form_goellnitz,
    closed_form_width4,
    closed_form_width6,
    corner_moves,
    corner_set,
    corner_subset_terms,
    eliminate,
    poch_z_prefactor,
    profile_closure,
    reverse_profile,
    sigma_prefactor_factored,
    sigma_prefactor_terms,
    solve_fixed_point,
    system_from_json,
    system_to_json,
    to_coefficient_recurrences,
    width4_recurrence,
    width6_recurrence,
)
from cylq.series import (
    TruncatedSeries,
    Window,
    one,
    poch_infinite,
    poch_product,
    zf,
)


def test_corner_sets_match_conventions():
    assert corner_set("cylindric", (1, -1)) == (1,)
    assert corner_set("cylindric", (1, 1)) == ()
    assert corner_set("cylindric", (-1, -1, 1)) == (0,)
    assert corner_set("cylindric", (1, -1, 1, -1)) == (1, 3)
    assert corner_set("skew-shifted", (1, -1)) == (1,)
    assert corner_set("skew-shifted", (1, 1)) == (2,)
    assert corner_set("skew-shifted", (-1, 1)) == (0, 2)
    assert corner_set("skew-shifted", (-1, -1)) == (0,)
    assert corner_set("skew-shifted", (1, -1, 1)) == (1, 3)


def test_corner_moves_swap_signs():
    moves = corner_moves("cylindric", (1, -1, 1), (2, 2, 1))
    assert moves == ((1, Fraction(2), (-1, 1, 1)),)
    moves = corner_moves("skew-shifted", (-1, 1), (1, 2, 1))
    assert moves == ((0, Fraction(1), (1, 1)), (2, Fraction(1), (-1, -1)))


def test_corner_subset_signs():
    # weak kinds: inclusion-exclusion signs sum to 1
    for kind, profile in [
        ("cylindric", (1, -1, 1, -1)),
        ("skew-shifted", (-1, 1, -1)),
    ]:
        terms = corner_subset_terms(kind, profile)
        assert sum(t[0] for t in terms) == 1
    # strict kind: the strata partition the objects, every sign is +1
    strict = corner_subset_terms("distinct", (1, -1, 1, -1))
    assert [t[0] for t in strict] == [1, 1, 1]
    # swapped profiles keep the number of descents (closed kinds)
    for kind in ("cylindric", "distinct"):
        rank = 2
        for _sgn, _s, q in corner_subset_terms(kind, (1, -1, 1, -1)):
            assert sum(1 for x in q if x == -1) == rank


def test_profile_closure_sizes():
    assert profile_closure("cylindric", (1,)) == ((1,),)
    assert len(profile_closure("skew-shifted", (1, -1, 1))) == 8
    assert len(profile_closure("skew-shifted", (1, -1), (1, 2, 1))) == 4


def test_reverse_profile():
    assert reverse_profile((1, -1, 1)) == (-1, 1, -1)
    assert reverse_profile((1, 1)) == (-1, -1)


def test_poch_z_prefactor():
    assert poch_z_prefactor(1) == ((0, Fraction(0), 1),)
    # (1 - zq)(1 - zq^2) = 1 - zq - zq^2 + z^2 q^3
    assert poch_z_prefactor(3) == (
        (0, Fraction(0), 1),
        (1, Fraction(1), -1),
        (1, Fraction(2), -1),
        (2, Fraction(3), 1),
    )


def test_geometric_profile_system_solves_to_eta_quotient():
    window = Window(14, 10)
    unnorm = build_system("cylindric", (1,), normalized=False)
    sol = solve_fixed_point(unnorm, window)
    direct = poch_product([], [zf(1, 1, 1)], window)
    assert sol[(1,)].agrees_with(direct)
    # the normalized unknown is constant: H(z) = H(zq) pins H = 1
    norm = build_system("cylindric", (1,))
    assert norm.normalized
    assert solve_fixed_point(norm, window)[(1,)].agrees_with(one(window))


def test_normalization_consistency():
    window = Window(16, 8)
    seed, weights = (1, -1), (1, 2, 1)
    f_sys = build_system("skew-shifted", seed, weights, normalized=False)
    h_sys = build_system("skew-shifted", seed, weights)
    f_sol = solve_fixed_point(f_sys, window)
    h_sol = solve_fixed_point(h_sys, window)
    zq_inf = poch_infinite(zf(1, 1, 1), window)
    for p in f_sys.equations:
        assert h_sol[p].agrees_with(zq_inf * f_sol[p])


def test_solver_matches_enumeration_small_profiles():
    window = Window(10, 8)
    for kind, profile, weights in [
        ("cylindric", (1, -1), None),
        ("cylindric", (-1, -1, 1), None),
        ("skew-shifted", (1, -1, 1), None),
        ("cylindric", (1, -1), (0, 1)),
        ("distinct", (1, -1), (0, 1)),
        ("distinct", (1, -1, 1, -1), None),
    ]:
        system = build_system(kind, profile, weights, normalized=False)
        sol = solve_fixed_point(system, window)
        seed = system.seed
        enum = genfun_by_enumeration(kind, seed, weights, window=window)
        assert sol[seed].agrees_with(enum), (kind, profile, weights)


def test_symmetric_kind_solver_and_half_chain_agree():
    window = Window(10, 8)
    system = build_system("symmetric", (-1, 1), normalized=False)
    assert system.weights == (Fraction(1), Fraction(2), Fraction(1))
    sol = solve_fixed_point(system, window)
    enum = genfun_by_enumeration("symmetric", (-1, 1), window=window)
    assert sol[(-1, 1)].agrees_with(enum)
    # the symmetric family coincides with the open chain carrying its
    # boundary-1 / interior-2 weights
    open_enum = genfun_by_enumeration("skew-shifted", (-1, 1), (1, 2, 1), window=window)
    assert enum.agrees_with(open_enum)


def test_width4_solver_matches_closed_forms_and_products():
    window = Window(26, 10)
    sol = solve_fixed_point(build_system("skew-shifted", (1, -1), (1, 2, 1)), window)
    qwin = Window(26)
    for p in ((1, 1), (1, -1), (-1, 1)):
        seq = closed_form_width4(p)
        for n in range(11):
            assert sol[p].z_slice(n).agrees_with(seq.value(n, qwin)), (p, n)
    # reversal symmetry of the open chain
    assert sol[(-1, -1)].agrees_with(sol[(1, 1)])
    products = {
        (1, 1): [zf(1, 4, 4, -1), zf(1, 2, 4)],
        (1, -1): [zf(1, 1, 4), zf(1, 3, 4, -1)],
        (-1, 1): [zf(1, 1, 4, -1), zf(1, 3, 4)],
    }
    for p, factors in products.items():
        assert sol[p].agrees_with(poch_product(factors, [], window)), p


def test_width6_solver_matches_closed_forms():
    window = Window(40, 10)
    sol = solve_fixed_point(build_system("skew-shifted", (1, -1, 1), (1, 2, 2, 1)), window)
    qwin = Window(40)
    for p in ((1, 1, 1), (1, 1, -1), (1, -1, 1), (-1, 1, 1)):
        seq = closed_form_width6(p)
        for n in range(11):
            assert sol[p].z_slice(n).agrees_with(seq.value(n, qwin)), (p, n)


def test_goellnitz_solver_matches_closed_form():
    window = Window(24, 10)
    sol = solve_fixed_point(build_system("skew-shifted", (1, -1, 1)), window)
    seq = closed_form_goellnitz()
    qwin = Window(24)
    for n in range(11):
        assert sol[(1, -1, 1)].z_slice(n).agrees_with(seq.value(n, qwin))


def test_schmidt_even_chain_has_distinct_product():
    window = Window(12, 10)
    sol = solve_fixed_point(build_system("cylindric", (-1, 1), (0, 1)), window)
    base = poch_product([], [zf(1, 1, 1), zf(1, 1, 1)], window)
    inv_one_minus_z = TruncatedSeries(
        {(0, 0): 1, (1, 0): -1}, window.q_truncation, window.z_truncation, 1
    ).invert()
    assert sol[(-1, 1)].agrees_with(base * inv_one_minus_z)


def test_distinct_constant_profile_rejected():
    with pytest.raises(ValueError):
        build_system("distinct", (1, 1))


def test_normalized_requires_positive_integer_weights():
    with pytest.raises(ValueError):
        build_system("cylindric", (1, -1), (0, 1), normalized=True)
    with pytest.raises(ValueError):
        build_system("distinct", (1, -1), normalized=True)


def test_zero_progress_cycle_reports_profiles():
    system = build_system("cylindric", (1, -1), (0, 0))
    with pytest.raises(RuntimeError) as err:
        solve_fixed_point(system, Window(6, 4))
    assert "zero-shift" in str(err.value)


def test_eliminate_width4():
    system = build_system("skew-shifted", (1, -1), (1, 2, 1))
    result = eliminate(system, (-1, 1))
    assert result.success
    # H(z) = (1 + zq)(1 - zq^3) H(zq^4)
    assert result.terms == (
        (
            (
                (0, Fraction(0), 1),
                (1, Fraction(1), 1),
                (1, Fraction(3), -1),
                (2, Fraction(4), -1),
            ),
            Fraction(4),
        ),
    )
    other = eliminate(system, (1, -1))
    assert other.success
    # H(z) = (1 - zq)(1 + zq^3) H(zq^4)
    assert other.terms == (
        (
            (
                (0, Fraction(0), 1),
                (1, Fraction(1), -1),
                (1, Fraction(3), 1),
                (2, Fraction(4), -1),
            ),
            Fraction(4),
        ),
    )
    # the (1,1) unknown needs its own equation backwards: a clean cycle
    blocked = eliminate(system, (1, 1))
    assert not blocked.success
    assert "cycle" in blocked.reason


def test_eliminate_standard_width3_needs_reversal_identification():
    system = build_system("skew-shifted", (1, -1, 1))
    result = eliminate(system, (1, -1, 1))
    assert result.success and result.identified
    # H(z) = (1 + zq) H(zq^2) + zq^2 H(zq^4)
    assert result.terms == (
        (((0, Fraction(0), 1), (1, Fraction(1), 1)), Fraction(2)),
        (((1, Fraction(2), 1),), Fraction(4)),
    )
    plain = eliminate(system, (1, -1, 1), identify_reversals=False)
    assert not plain.success
    assert "cycle" in plain.reason


def test_eliminate_rejects_unnormalized_and_bad_identification():
    system = build_system("skew-shifted", (1, -1, 1), normalized=False)
    result = eliminate(system, (1, -1, 1))
    assert not result.success and "normalized" in result.reason
    closed = build_system("cylindric", (1, -1))
    with pytest.raises(ValueError):
        eliminate(closed, (1, -1), identify_reversals=True)


def test_elimination_soundness():
    # the single eliminated equation has the same fixed-point solution as
    # the kept component of the full system
    window = Window(24, 10)
    for seed, weights, keep in [
        ((1, -1), (1, 2, 1), (-1, 1)),
        ((1, -1, 1), None, (1, -1, 1)),
    ]:
        system = build_system("skew-shifted", seed, weights)
        result = eliminate(system, keep)
        assert result.success
        single = solve_fixed_point(result.as_system(system), window)[keep]
        full = solve_fixed_point(system, window)[keep]
        assert single.agrees_with(full)


def test_geometric_profile_coefficient_recurrence():
    system = build_system("cylindric", (1,), normalized=False)
    rec = to_coefficient_recurrences(system)[(1,)]
    # (1 - q^n) h(n) = q h(n-1)
    assert rec.coefficient((1,), 0).entries == (
        (Fraction(0), Fraction(0), 1),
        (Fraction(1), Fraction(0), -1),
    )
    assert rec.coefficient((1,), 1).entries == ((Fraction(0), Fraction(1), -1),)
    report = check_closed_form(closed_form_euler(), rec, 12, Window(60))
    assert report.holds and report.initial_ok and not report.vacuous


def test_derived_recurrences_match_encoded_width4():
    system = build_system("skew-shifted", (1, -1), (1, 2, 1))
    for keep in ((1, -1), (-1, 1)):
        derived = to_coefficient_recurrences(eliminate(system, keep))
        encoded = width4_recurrence(keep)
        assert derived.terms == encoded.terms, keep


def test_closed_forms_satisfy_encoded_recurrences():
    for p in ((1, 1), (1, -1), (-1, 1)):
        report = check_closed_form(
            closed_form_width4(p), width4_recurrence(p), 12, Window(240)
        )
        assert report.holds and not report.vacuous, (p, report.failures[:2])
    for p in ((1, 1, 1), (1, 1, -1), (1, -1, 1), (-1, 1, 1)):
        report = check_closed_form(
            closed_form_width6(p), width6_recurrence(p), 8, Window(260)
        )
        assert report.holds and not report.vacuous, (p, report.failures[:2])


def test_recurrence_check_rejects_wrong_sign():
    # the middle-coefficient sign separates (1,-1) from (-1,1); crossing
    # them must fail, with the offending degree reported rather than raised
    report = check_closed_form(
        closed_form_width4((1, -1)), width4_recurrence((-1, 1)), 8, Window(150)
    )
    assert not report.holds
    assert report.failures and report.failures[0][0] == 2


def test_goellnitz_derived_recurrence_checks_closed_form():
    system = build_system("skew-shifted", (1, -1, 1))
    rec = to_coefficient_recurrences(eliminate(system, (1, -1, 1)))
    # (1 - q^(2n)) h(n) = (q^(2n-1) + q^(4n-2)) h(n-1)
    assert rec.coefficient((1, -1, 1), 0).entries == (
        (Fraction(0), Fraction(0), 1),
        (Fraction(2), Fraction(0), -1),
    )
    assert rec.coefficient((1, -1, 1), 1).entries == (
        (Fraction(2), Fraction(-1), -1),
        (Fraction(4), Fraction(-2), -1),
    )
    report = check_closed_form(closed_form_goellnitz(), rec, 15, Window(650))
    assert report.holds and not report.vacuous


def test_inhomogeneous_recurrence_for_distinct_pairs():
    system = build_system("distinct", (1, -1), (0, 1))
    recs = to_coefficient_recurrences(system)
    rec = recs[(1, -1)]
    assert rec.inhom  # the constant 1 survives denominator clearing
    window = Window(15, 12)
    sol = solve_fixed_point(system, window)

    def value_fn(target, m):
        if m < 0:
            return sol[target].z_slice(0) * 0
        return sol[target].z_slice(m)

    for n in range(10):
        assert rec.evaluate(n, value_fn, Window(15)).is_zero(), n


def test_sigma_prefactor_two_forms_agree():
    for n in range(12):
        for m in range(12):
            assert sigma_prefactor_terms(n, m) == sigma_prefactor_factored(n, m)


def test_system_json_roundtrip():
    for system in [
        build_system("skew-shifted", (1, -1), (1, 2, 1)),
        build_system("distinct", (1, -1), (0, 1)),
        build_system("cylindric", (1,), normalized=False),
    ]:
        payload = json.loads(json.dumps(system_to_json(system)))
        assert system_from_json(payload) == system


def test_pretty_output_mentions_prefactors():
    system = build_system("skew-shifted", (1, -1), (1, 2, 1))
    text = system.pretty()
    assert "(1 - z*q)" in text
    assert "H[+1,-1]" in text
    rec = width4_recurrence((1, -1))
    assert "h[+1,-1]" in rec.pretty()


def test_functional_term_validation():
    with pytest.raises(ValueError):
        FunctionalTerm(2, 1, (1, -1))
    with pytest.raises(ValueError):
        FunctionalTerm(1, -1, (1, -1))
    with pytest.raises(ValueError):
        FunctionalTerm(1, 0, None)  # constant term needs a value
    term = FunctionalTerm(1, 2, (1, -1), ((0, 0, 1), (0, 0, 1)))
    assert term.prefactor == ((0, Fraction(0), 2),)
