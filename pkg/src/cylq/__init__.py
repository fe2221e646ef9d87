"""cylq: exact q-series arithmetic for cylindric and shifted plane partitions.

The package verifies product formulas, coupled q-difference systems, and
closed-form sum sides for weighted generating functions of cylindric
partitions and their symmetric, skew, and distinct-part relatives - all in
exact integer arithmetic inside explicit truncation windows.

Layers (each ``from cylq import ...``-able):

- ``series``: truncated bivariate Laurent-free series over the integers,
  Pochhammer/theta/Gaussian-binomial builders, JSON round-trips.
- ``lattice``: the interlacing objects themselves - enumeration oracles
  and weighted generating functions computed straight from definitions.
- ``products``: exponent-multiset product formulas and the balance census.
- ``recur``: coupled functional-equation systems, graded fixed-point
  solving, elimination to uncoupled coefficient recurrences, closed forms.
- ``identities``: the registry of named verification cases and reports.
- ``fitkit``: inverse problems - fitting weights to target products,
  profile conversions, equivalence discovery.
- ``cli``: the ``cylq`` command-line front end over all of the above.
"""

from .series import (
    PochFactor,
    TruncatedSeries,
    Window,
    gauss_binomial,
    inv_poch_finite,
    make_series,
    monomial,
    one,
    poch_finite,
    poch_infinite,
    poch_product,
    qf,
    series_from_json,
    series_to_json,
    theta_sum,
    zero,
    zf,
)
from .lattice import (
    KINDS,
    Diamond,
    GridPartition,
    count_distinct_by_marked_sum,
    count_partitions_by_hook,
    down_neighbors,
    down_neighbors_strict,
    enumerate_objects,
    full_profile,
    genfun_by_enumeration,
    is_above,
    is_above_strict,
    partitions_iter,
    schmidt_genfun,
    scp_weights,
    signed_distinct_genfun,
    standard_weights,
    up_neighbors,
    up_neighbors_strict,
)
from .products import (
    ORIENTATIONS,
    ProductSpec,
    balance_census,
    cp_product,
    cp_product_spec,
    dspp_product,
    dspp_product_spec,
    is_balanced,
    nonsymmetric_mirror_series,
    prefix_sums,
    scp_product_spec,
    w1_entries,
    w1_w2_multisets,
    w2_entries,
    w3_entries,
    w3_multiset,
)
from .recur import (
    CheckReport,
    CoefficientRecurrence,
    CoefficientSequence,
    EliminationResult,
    FunctionalSystem,
    FunctionalTerm,
    LinQPoly,
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
from .identities import (
    CONVENTIONS,
    Comparison,
    IdentityCase,
    Side,
    compare_series,
    get_case,
    registry,
    report_text,
    verify,
)
from .fitkit import (
    FitProblem,
    convert_profile,
    discover_equivalences,
    fit_report,
    fit_weights,
)

__version__ = "0.1.0"

__all__ = [
    # series
    "PochFactor",
    "TruncatedSeries",
    "Window",
    "gauss_binomial",
    "inv_poch_finite",
    "make_series",
    "monomial",
    "one",
    "poch_finite",
    "poch_infinite",
    "poch_product",
    "qf",
    "series_from_json",
    "series_to_json",
    "theta_sum",
    "zero",
    "zf",
    # lattice
    "KINDS",
    "Diamond",
    "GridPartition",
    "count_distinct_by_marked_sum",
    "count_partitions_by_hook",
    "down_neighbors",
    "down_neighbors_strict",
    "enumerate_objects",
    "full_profile",
    "genfun_by_enumeration",
    "is_above",
    "is_above_strict",
    "partitions_iter",
    "schmidt_genfun",
    "scp_weights",
    "signed_distinct_genfun",
    "standard_weights",
    "up_neighbors",
    "up_neighbors_strict",
    # products
    "ORIENTATIONS",
    "ProductSpec",
    "balance_census",
    "cp_product",
    "cp_product_spec",
    "dspp_product",
    "dspp_product_spec",
    "is_balanced",
    "nonsymmetric_mirror_series",
    "prefix_sums",
    "scp_product_spec",
    "w1_entries",
    "w1_w2_multisets",
    "w2_entries",
    "w3_entries",
    "w3_multiset",
    # recur
    "CheckReport",
    "CoefficientRecurrence",
    "CoefficientSequence",
    "EliminationResult",
    "FunctionalSystem",
    "FunctionalTerm",
    "LinQPoly",
    "build_system",
    "check_closed_form",
    "closed_form_euler",
    "closed_form_goellnitz",
    "closed_form_width4",
    "closed_form_width6",
    "corner_moves",
    "corner_set",
    "corner_subset_terms",
    "eliminate",
    "poch_z_prefactor",
    "profile_closure",
    "reverse_profile",
    "sigma_prefactor_factored",
    "sigma_prefactor_terms",
    "solve_fixed_point",
    "system_from_json",
    "system_to_json",
    "to_coefficient_recurrences",
    "width4_recurrence",
    "width6_recurrence",
    # identities
    "CONVENTIONS",
    "Comparison",
    "IdentityCase",
    "Side",
    "compare_series",
    "get_case",
    "registry",
    "report_text",
    "verify",
    # fitkit
    "FitProblem",
    "convert_profile",
    "discover_equivalences",
    "fit_report",
    "fit_weights",
    "__version__",
]
