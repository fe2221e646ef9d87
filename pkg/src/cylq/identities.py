"""Sum-product identity checks: evaluators, a case registry, reports.

This module gathers every identity the kit can check into addressable
cases.  Each case compares two or more exactly-computed representations
of the same series -- enumeration, infinite product, coupled-system
solver, closed-form sum -- inside an explicit window, and produces a
report listing, per comparison, equality or the first difference with
per-coefficient detail.  Nothing here raises on a mismatch: exploratory
cases whose sides are expected to disagree are first-class citizens and
are marked ``expected="report-only"``.

Contents:

* closed-form sum evaluators (`sum_rogers_ramanujan`, `sum_double_mod7`,
  `sum_alternating_mod4`, `sum_signed_distinct_mod2`, `sum_goellnitz`,
  `sum_mod12`, `sum_schmidt_distinct_odd`, `sum_schmidt_distinct_even`),
  each summing exactly as many terms as can touch the window;
* direct enumerators for marked partitions, partition diamonds, signed
  distinct partitions, and the two largest-part/hook-length count
  tables;
* the registry (`registry`, `get_case`) of `IdentityCase` entries and
  the `verify` report builder with a versioned JSON shape and a
  human-readable rendering (`report_text`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .lattice import full_profile, genfun_by_enumeration, scp_weights
from .products import (
    ProductSpec,
    cp_product,
    dspp_product,
    nonsymmetric_mirror_series,
    scp_product_spec,
)
from .recur import (
    build_system,
    check_closed_form,
    closed_form_euler,
    closed_form_width4,
    closed_form_width6,
    sigma_prefactor_factored,
    sigma_prefactor_terms,
    solve_fixed_point,
    width4_recurrence,
    width6_min_exponent,
    width6_recurrence,
)
from .series import (
    TruncatedSeries,
    Window,
    gauss_binomial,
    inv_poch_finite,
    one,
    poch_finite,
    poch_infinite,
    poch_product,
    qf,
    theta_sum,
    zero,
    zf,
)

__all__ = [
    "CONVENTIONS",
    "Comparison",
    "IdentityCase",
    "Side",
    "compare_series",
    "diamond_partition_series",
    "distinct_largest_part_table",
    "get_case",
    "hook_length_table",
    "marked_partition_series",
    "registry",
    "report_text",
    "signed_distinct_partition_series",
    "sum_alternating_mod4",
    "sum_double_mod7",
    "sum_euler",
    "sum_goellnitz",
    "sum_mod12",
    "sum_rogers_ramanujan",
    "sum_schmidt_distinct_even",
    "sum_schmidt_distinct_odd",
    "sum_signed_distinct_mod2",
    "verify",
]

#: Conventions every report embeds, so a stored report stays
#: interpretable: the finite Pochhammer symbol starts at j = 0, and the
#: sign-discordant product entries are taken in direct chain order.
CONVENTIONS = {
    "pochhammer": "standard: (a;q)_n = prod_{j=0}^{n-1} (1 - a q^j)",
    "w3_inequality": "direct: discordant-pair entries use in-order gaps",
}

GOELLNITZ_VARIANTS = ("GG1", "LG1", "GG2", "LG2")


def _require_q(window: Window) -> int:
    if window.q_truncation is None:
        raise ValueError("identity evaluation needs a finite q-window")
    return window.q_truncation


def _z_cap(window: Window, fallback: int) -> int:
    return window.z_truncation if window.z_truncation is not None else fallback


# ---------------------------------------------------------------------------
# closed-form sum evaluators
# ---------------------------------------------------------------------------


def sum_euler(window: Window) -> TruncatedSeries:
    """``sum_n q^n / (q;q)_n``: partitions graded by number of parts."""
    n_trunc = _require_q(window)
    w = Window(n_trunc)
    total = zero(w)
    n = 0
    while n < n_trunc:
        total = total + closed_form_euler().value(n, w)
        n += 1
    return total


def sum_rogers_ramanujan(shift: int, window: Window) -> TruncatedSeries:
    """``sum_n q^(n^2 + shift*n) / (q;q)_n`` for shift in {0, 1}."""
    if shift not in (0, 1):
        raise ValueError("shift must be 0 or 1")
    n_trunc = _require_q(window)
    w = Window(n_trunc)
    total = zero(w)
    n = 0
    while n * n + shift * n < n_trunc:
        total = total + inv_poch_finite(qf(1, 1), n, w).times_monomial(
            0, n * n + shift * n
        )
        n += 1
    return total


def sum_double_mod7(window: Window) -> TruncatedSeries:
    """``sum_{n1,n2} q^(n1^2+n2^2-n1*n2+n1+n2)/(q;q)_n1 * [2n1 choose n2]_q``.

    The inner Gaussian binomial vanishes outside ``0 <= n2 <= 2*n1``; for
    admissible pairs the exponent is at least ``3*n1^2/4``, which bounds
    the outer loop.
    """
    n_trunc = _require_q(window)
    w = Window(n_trunc)
    total = zero(w)
    n1 = 0
    while 3 * n1 * n1 < 4 * n_trunc:
        base = inv_poch_finite(qf(1, 1), n1, w)
        for n2 in range(2 * n1 + 1):
            e = n1 * n1 + n2 * n2 - n1 * n2 + n1 + n2
            if e >= n_trunc:
                continue
            total = total + (base * gauss_binomial(2 * n1, n2, w)).times_monomial(0, e)
        n1 += 1
    return total


def sum_alternating_mod4(window: Window) -> TruncatedSeries:
    """The alternating bracket sum with period-4 factors.

    ``sum_n (-1)^n q^(4n^2) (q^2;q^4)_n (-q^4;q^4)_n / (q^4;q^4)_(2n)
    * (1 - q^(4n+1) z / (1 + q^(4n+2))) * z^(2n)``.
    """
    n_trunc = _require_q(window)
    d_cap = _z_cap(window, 10)
    w = Window(n_trunc, d_cap)
    total = zero(w)
    n = 0
    while 2 * n <= d_cap and 4 * n * n < n_trunc:
        c = (
            poch_finite(qf(2, 4), n, w)
            * poch_finite(qf(4, 4, -1), n, w)
            * inv_poch_finite(qf(4, 4), 2 * n, w)
        ).times_monomial(0, 4 * n * n, (-1) ** n)
        total = total + c.times_monomial(2 * n)
        if 2 * n + 1 <= d_cap:
            unit = TruncatedSeries(
                {(0, 0): 1, (0, 4 * n + 2): 1}, n_trunc, d_cap, 1
            ).invert()
            total = total - (c * unit).times_monomial(2 * n + 1, 4 * n + 1)
        n += 1
    return total


def sum_signed_distinct_mod2(window: Window) -> TruncatedSeries:
    """``sum_n (-1)^n q^(2n^2+n) (q;q^2)_(n+1) (-q^2;q^2)_n / (q^2;q^2)_(2n+1)``."""
    n_trunc = _require_q(window)
    w = Window(n_trunc)
    total = zero(w)
    n = 0
    while 2 * n * n + n < n_trunc:
        c = (
            poch_finite(qf(1, 2), n + 1, w)
            * poch_finite(qf(2, 2, -1), n, w)
            * inv_poch_finite(qf(2, 2), 2 * n + 1, w)
        )
        total = total + c.times_monomial(0, 2 * n * n + n, (-1) ** n)
        n += 1
    return total


def sum_goellnitz(variant: str, window: Window) -> TruncatedSeries:
    """The four Goellnitz-Gordon / little Goellnitz sum sides.

    ``GG1``: ``sum q^(n^2+2n) (-q;q^2)_n / (q^2;q^2)_n``;
    ``LG1``: the same with exponent ``n^2+n``;
    ``GG2``: the same with exponent ``n^2``;
    ``LG2``: ``sum q^(n^2+n) (-q^(-1);q^2)_n / (q^2;q^2)_n``, computed in
    the Laurent-free rewriting ``q^(n^2) prod_{j=0}^{n-1}(q + q^(2j))``.
    """
    if variant not in GOELLNITZ_VARIANTS:
        raise ValueError("variant must be one of %s" % (GOELLNITZ_VARIANTS,))
    n_trunc = _require_q(window)
    w = Window(n_trunc)
    total = zero(w)
    n = 0
    while n * n < n_trunc:
        if variant == "LG2":
            c = one(w)
            for j in range(n):
                c = c * TruncatedSeries({(0, 1): 1, (0, 2 * j): 1}, n_trunc, None, 1)
            c = c * inv_poch_finite(qf(2, 2), n, w)
            shift = n * n
        else:
            c = poch_finite(qf(1, 2, -1), n, w) * inv_poch_finite(qf(2, 2), n, w)
            shift = {"GG1": n * n + 2 * n, "LG1": n * n + n, "GG2": n * n}[variant]
        total = total + c.times_monomial(0, shift)
        n += 1
    return total


def sum_mod12(profile: Sequence[int], window: Window) -> TruncatedSeries:
    """The period-12 double sum for a width-3 open chain profile.

    Sums the closed-form coefficient values ``h(n)`` over all ``n`` that
    can touch the window.  The stopping rule is analytic: every summand
    of ``h(n)`` has q-valuation at least ``3*floor(n/2)^2 - 2n - 4``
    (the minimal quadratic exponent minus the largest possible dip of
    the prefactor polynomial), and that floor is increasing along each
    parity class from ``n >= 2``, so once both parities clear the window
    no later term contributes.
    """
    n_trunc = _require_q(window)
    w = Window(n_trunc)
    seq = closed_form_width6(profile)
    p = seq.profile

    def floor_bound(k: int) -> int:
        return 3 * (k // 2) ** 2 - 2 * k - 4

    total = zero(w)
    n = 0
    while not (
        n >= 4 and floor_bound(n) >= n_trunc and floor_bound(n + 1) >= n_trunc
    ):
        if width6_min_exponent(p, n) < n_trunc:
            total = total + seq.value(n, w)
        n += 1
    return total


def sum_schmidt_distinct_odd(window: Window) -> TruncatedSeries:
    """``sum_n z^(2n) q^(n(n+1)) / ((zq;q)_n (zq;q)_(n+1))``."""
    n_trunc = _require_q(window)
    d_cap = _z_cap(window, n_trunc)
    w = Window(n_trunc, d_cap)
    total = zero(w)
    n = 0
    while 2 * n <= d_cap and n * (n + 1) < n_trunc:
        t = inv_poch_finite(zf(1, 1, 1), n, w) * inv_poch_finite(zf(1, 1, 1), n + 1, w)
        total = total + t.times_monomial(2 * n, n * (n + 1))
        n += 1
    return total


def sum_schmidt_distinct_even(window: Window) -> TruncatedSeries:
    """``1 + sum_{n>=1} z^(2n-1) q^(n(n-1)) / ((z;q)_n (zq;q)_n)``."""
    n_trunc = _require_q(window)
    d_cap = _z_cap(window, n_trunc)
    w = Window(n_trunc, d_cap)
    total = one(w)
    n = 1
    while 2 * n - 1 <= d_cap and n * (n - 1) < n_trunc:
        t = inv_poch_finite(zf(1, 0, 1), n, w) * inv_poch_finite(zf(1, 1, 1), n, w)
        total = total + t.times_monomial(2 * n - 1, n * (n - 1))
        n += 1
    return total


# ---------------------------------------------------------------------------
# direct enumerators: marked partitions, diamonds, count tables
# ---------------------------------------------------------------------------


def marked_partition_series(
    window: Window, *, distinct: bool = False, mark: str = "odd"
) -> TruncatedSeries:
    """``sum_lambda z^(lambda_1) q^(marked sum)`` over (distinct) partitions.

    The marked sum adds the parts at odd 1-based positions
    (``lambda_1 + lambda_3 + ...``) or at even positions; the z-window
    caps the largest part and the q-window caps the marked sum, which
    together make the enumeration finite.
    """
    if mark not in ("odd", "even"):
        raise ValueError("mark must be 'odd' or 'even'")
    n_trunc = _require_q(window)
    if window.z_truncation is None:
        raise ValueError("marked enumeration needs a finite z-window")
    d_cap = window.z_truncation
    out = {(0, 0): 1}

    def marked(pos: int) -> bool:
        return (pos % 2 == 1) == (mark == "odd")

    def rec(pos: int, prev: int, w: int, z: int) -> None:
        hi = prev - 1 if distinct else prev
        for part in range(1, hi + 1):
            w2 = w + (part if marked(pos) else 0)
            if w2 < n_trunc:
                out[(z, w2)] = out.get((z, w2), 0) + 1
                rec(pos + 1, part, w2, z)

    for first in range(1, d_cap + 1):
        w0 = first if marked(1) else 0
        if w0 < n_trunc:
            out[(first, w0)] = out.get((first, w0), 0) + 1
            rec(2, first, w0, first)
    return TruncatedSeries(out, n_trunc, d_cap, 1)


def diamond_partition_series(window: Window) -> TruncatedSeries:
    """``sum z^(lambda_1) q^(lambda_1 + lambda_4 + lambda_7 + ...)`` over
    partition diamonds: sequences where each anchor dominates the next
    unordered pair, which in turn dominates the next anchor."""
    n_trunc = _require_q(window)
    if window.z_truncation is None:
        raise ValueError("diamond enumeration needs a finite z-window")
    d_cap = window.z_truncation
    out = {(0, 0): 1}

    def add(z: int, w: int) -> None:
        out[(z, w)] = out.get((z, w), 0) + 1

    def rec(anchor: int, z: int, w: int) -> None:
        add(z, w)  # the sequence ends right after this anchor
        for x in range(anchor + 1):
            for y in range(anchor + 1):
                if x == 0 and y == 0:
                    continue
                add(z, w)  # ends after (x) when y = 0, or after the pair (x, y)
                if y > 0:
                    for nxt in range(1, min(x, y) + 1):
                        if w + nxt < n_trunc:
                            rec(nxt, z, w + nxt)

    for first in range(1, d_cap + 1):
        if first < n_trunc:
            rec(first, first, first)
    return TruncatedSeries(out, n_trunc, d_cap, 1)


def signed_distinct_partition_series(window: Window) -> TruncatedSeries:
    """``sum_lambda (-1)^(number of odd parts) q^(|lambda|)`` over
    partitions into distinct parts."""
    n_trunc = _require_q(window)
    out = {(0, 0): 1}

    def rec(prev: int, size: int, sign: int) -> None:
        for part in range(1, prev):
            s2 = size + part
            if s2 < n_trunc:
                g2 = sign * (-1 if part % 2 else 1)
                out[(0, s2)] = out.get((0, s2), 0) + g2
                rec(part, s2, g2)

    rec(n_trunc + 1, 0, 1)
    return TruncatedSeries(out, n_trunc, None, 1)


def distinct_largest_part_table(
    max_weight: int, *, mark: str = "odd", include_largest: bool = False
) -> dict:
    """Counts ``T[(m, n)]`` of distinct-part partitions with largest part
    ``m`` and marked sum ``n`` (plus ``lambda_1`` when requested).

    Complete for every ``n <= max_weight``.
    """
    if mark not in ("odd", "even"):
        raise ValueError("mark must be 'odd' or 'even'")
    table: dict = {}

    def marked(pos: int) -> bool:
        return (pos % 2 == 1) == (mark == "odd")

    def rec(pos: int, prev: int, w: int, m: int) -> None:
        for part in range(1, prev):
            w2 = w + (part if marked(pos) else 0)
            if w2 <= max_weight:
                table[(m, w2)] = table.get((m, w2), 0) + 1
                rec(pos + 1, part, w2, m)

    for first in range(1, max_weight + 1):
        w0 = first if (include_largest or marked(1)) else 0
        if w0 <= max_weight:
            table[(first, w0)] = table.get((first, w0), 0) + 1
            rec(2, first, w0, first)
    return table


def hook_length_table(max_weight: int, *, min_part: int = 1) -> dict:
    """Counts ``T[(m, n)]`` of partitions of ``n <= max_weight`` with all
    parts at least ``min_part`` and largest hook length
    ``lambda_1 + length - 1 = m``."""
    table: dict = {}

    def rec(nparts: int, first: int, prev: int, size: int) -> None:
        key = (first + nparts - 1, size)
        table[key] = table.get(key, 0) + 1
        for part in range(min_part, prev + 1):
            if size + part <= max_weight:
                rec(nparts + 1, first, part, size + part)

    for first in range(min_part, max_weight + 1):
        rec(1, first, first, first)
    return table


def _table_series(
    table: dict, n_trunc: int, *, shift_m: int = 0, shift_n: int = 0
) -> TruncatedSeries:
    """Pack a ``{(m, n): count}`` table as ``sum count z^(m-shift_m)
    q^(n-shift_n)`` for comparison; entries outside the window drop."""
    coeffs = {}
    for (m, n), c in table.items():
        mm, nn = m - shift_m, n - shift_n
        if c and mm >= 0 and 0 <= nn < n_trunc:
            coeffs[(mm, nn)] = c
    return TruncatedSeries(coeffs, n_trunc, None, 1)


# ---------------------------------------------------------------------------
# comparisons and cases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Side:
    """One side of a comparison: what it is and how it was computed."""

    description: str
    provenance: str  # enumeration | product | sum | solver | closed-form | ...


@dataclass(frozen=True)
class Comparison:
    """The outcome of comparing two series representations."""

    label: str
    lhs: Side
    rhs: Side
    equal: bool
    first_difference: Optional[tuple] = None  # (z, Fraction q, lhs c, rhs c)
    rows: tuple = ()  # up to max_rows differing coefficients, same shape
    note: str = ""


def compare_series(
    label: str,
    lhs: TruncatedSeries,
    lhs_side: Side,
    rhs: TruncatedSeries,
    rhs_side: Side,
    *,
    max_rows: int = 12,
    note: str = "",
) -> Comparison:
    """Compare two series on the intersection of their windows."""
    diff = lhs.first_difference(rhs)
    rows = ()
    if diff is not None:
        delta = lhs - rhs
        keyed = sorted(delta.items(), key=lambda t: (t[1], t[0]))
        out = []
        for z_deg, q_exp, _c in keyed[:max_rows]:
            out.append(
                (z_deg, q_exp, lhs.coefficient(z_deg, q_exp), rhs.coefficient(z_deg, q_exp))
            )
        rows = tuple(out)
    return Comparison(label, lhs_side, rhs_side, diff is None, diff, rows, note)


def _flag_comparison(
    label: str, lhs_side: Side, rhs_side: Side, holds: bool, note: str = ""
) -> Comparison:
    """A comparison established by something other than series subtraction
    (polynomial identities checked index-by-index, recurrence reports)."""
    return Comparison(label, lhs_side, rhs_side, bool(holds), None, (), note)


@dataclass(frozen=True)
class IdentityCase:
    """A named, re-runnable identity check.

    ``expected`` is ``"equal"`` for cases whose comparisons are all
    asserted to hold, and ``"report-only"`` for exploratory cases whose
    value is the report itself (some of their comparisons genuinely
    differ; the report records by how much).
    """

    label: str
    description: str
    expected: str
    window: Window
    runner: Callable = field(repr=False, compare=False)

    def run(self, window: Optional[Window] = None) -> list:
        return self.runner(window if window is not None else self.window)


_REGISTRY: dict = {}


def _case(label: str, description: str, expected: str, window: Window):
    def wrap(fn):
        _REGISTRY[label] = IdentityCase(label, description, expected, window, fn)
        return fn

    return wrap


def registry() -> tuple:
    """All case labels, sorted."""
    return tuple(sorted(_REGISTRY))


def get_case(label: str) -> IdentityCase:
    try:
        return _REGISTRY[label]
    except KeyError:
        raise KeyError(
            "unknown identity case %r; known cases: %s"
            % (label, ", ".join(registry()))
        ) from None


# -- shared side constructors ------------------------------------------------

_ENUM = lambda text: Side(text, "enumeration")  # noqa: E731
_PROD = lambda text: Side(text, "product")  # noqa: E731
_SUM = lambda text: Side(text, "sum")  # noqa: E731
_SOLVER = lambda text: Side(text, "solver")  # noqa: E731
_CLOSED = lambda text: Side(text, "closed-form")  # noqa: E731
_TABLE = lambda text: Side(text, "table")  # noqa: E731


def _sign_profiles(width: int):
    return itertools.product((1, -1), repeat=width)


def _z_parity(series: TruncatedSeries, parity: int) -> TruncatedSeries:
    coeffs = {k: v for k, v in series.coeffs.items() if k[0] % 2 == parity}
    return TruncatedSeries(
        coeffs, series.q_truncation, series.z_truncation, series.q_scale
    )


def _stack_values(seq, n_max: int, window: Window) -> TruncatedSeries:
    """``sum_{n <= n_max} z^n h(n)`` for a coefficient sequence."""
    w = Window(window.q_truncation, n_max)
    total = zero(w)
    for n in range(n_max + 1):
        total = total + seq.value(n, Window(window.q_truncation)).times_monomial(n)
    return total


# -- case runners ------------------------------------------------------------


@_case(
    "euler-sum",
    "Partitions graded by part count: sum q^n/(q;q)_n = 1/(q;q)_inf.",
    "equal",
    Window(30),
)
def _run_euler_sum(window: Window) -> list:
    w = Window(_require_q(window))
    return [
        compare_series(
            "sum = product",
            sum_euler(w),
            _SUM("sum_n q^n/(q;q)_n"),
            poch_product([], [qf(1, 1)], w),
            _PROD("1/(q;q)_inf"),
        )
    ]


@_case(
    "rogers-ramanujan",
    "The two Rogers-Ramanujan sum-product identities.",
    "equal",
    Window(40),
)
def _run_rogers_ramanujan(window: Window) -> list:
    w = Window(_require_q(window))
    out = []
    for shift in (0, 1):
        out.append(
            compare_series(
                "shift %d" % shift,
                sum_rogers_ramanujan(shift, w),
                _SUM("sum q^(n^2+%dn)/(q;q)_n" % shift),
                ProductSpec.make((), [(1 + shift, 5), (4 - shift, 5)]).expand(w),
                _PROD("1/(q^%d,q^%d;q^5)_inf" % (1 + shift, 4 - shift)),
            )
        )
    return out


@_case(
    "mod7-double-sum",
    "Gaussian-binomial double sum = the modulus-7 product of the rank-3 "
    "width-7 closed chain.",
    "equal",
    Window(26),
)
def _run_mod7(window: Window) -> list:
    w = Window(_require_q(window))
    target = ProductSpec.make((), [(2, 7), (3, 7), (3, 7), (4, 7), (4, 7), (5, 7)])
    rhs = target.expand(w)
    chain = cp_product((-1, -1, -1, 1, 1, 1, 1), None, w)
    return [
        compare_series(
            "double sum = product",
            sum_double_mod7(w),
            _SUM("sum q^(n1^2+n2^2-n1n2+n1+n2)/(q;q)_n1 [2n1, n2]_q"),
            rhs,
            _PROD("1/(q^2,q^3,q^3,q^4,q^4,q^5;q^7)_inf"),
        ),
        compare_series(
            "(q;q)_inf x closed-chain product = product",
            poch_infinite(qf(1, 1), w) * chain,
            _PROD("(q;q)_inf x closed-chain product, profile (-1,-1,-1,1,1,1,1)"),
            rhs,
            _PROD("1/(q^2,q^3,q^3,q^4,q^4,q^5;q^7)_inf"),
        ),
    ]


@_case(
    "cylinder-products",
    "Closed chains, standard weights: enumeration = modulus-h product "
    "for every profile of width <= 4.",
    "equal",
    Window(12),
)
def _run_cylinder_products(window: Window) -> list:
    n_trunc = _require_q(window)
    w = Window(n_trunc)
    out = []
    for width in range(1, 5):
        for d in _sign_profiles(width):
            enum = genfun_by_enumeration("cylindric", d, window=w).collapse_z()
            out.append(
                compare_series(
                    "profile %s" % (d,),
                    enum,
                    _ENUM("closed-chain enumeration, standard weights"),
                    cp_product(d, None, w),
                    _PROD("exponent-multiset product mod %d" % len(d)),
                )
            )
    return out


@_case(
    "open-chain-products",
    "Open chains, standard weights: enumeration = two-multiset product "
    "for every profile of width <= 3.",
    "equal",
    Window(10),
)
def _run_open_chain_products(window: Window) -> list:
    n_trunc = _require_q(window)
    w = Window(n_trunc)
    out = []
    for width in range(1, 4):
        for d in _sign_profiles(width):
            enum = genfun_by_enumeration("skew-shifted", d, window=w).collapse_z()
            out.append(
                compare_series(
                    "profile %s" % (d,),
                    enum,
                    _ENUM("open-chain enumeration, standard weights"),
                    dspp_product(d, None, w),
                    _PROD("two-multiset product, moduli %d and %d" % (width + 1, 2 * (width + 1))),
                )
            )
    return out


@_case(
    "open-chain-weighted-example",
    "Open chain (1,-1) with weights (0,1,0): the enumeration equals "
    "1/((q;q)^3 (q;q^2)) and its own two-multiset product.",
    "equal",
    Window(12),
)
def _run_open_chain_weighted(window: Window) -> list:
    n_trunc = _require_q(window)
    w = Window(n_trunc, n_trunc)
    enum = genfun_by_enumeration(
        "skew-shifted", (1, -1), (0, 1, 0), window=w
    ).collapse_z()
    claimed = ProductSpec.make((), [(1, 1), (1, 1), (1, 1), (1, 2)]).expand(
        Window(n_trunc)
    )
    witness = enum.coefficient(0, 3) if n_trunc > 3 else None
    return [
        compare_series(
            "enumeration = claimed product",
            enum,
            _ENUM("open-chain enumeration, profile (1,-1), weights (0,1,0)"),
            claimed,
            _PROD("1/((q;q)_inf^3 (q;q^2)_inf)"),
            note="coefficient of q^3 is %s" % witness,
        ),
        compare_series(
            "enumeration = two-multiset product",
            enum,
            _ENUM("open-chain enumeration, profile (1,-1), weights (0,1,0)"),
            dspp_product((1, -1), (0, 1, 0), Window(n_trunc)),
            _PROD("two-multiset product for weights (0,1,0)"),
        ),
    ]


@_case(
    "symmetric-width4-bivariate",
    "Width-2 open chain with weights (1,2,1): the three coupled series "
    "have bivariate product forms, matching solver and enumeration.",
    "equal",
    Window(12, 12),
)
def _run_symmetric_width4(window: Window) -> list:
    n_trunc = _require_q(window)
    d_cap = _z_cap(window, 12)
    w = Window(n_trunc, d_cap)
    system = build_system("skew-shifted", (1, -1), (1, 2, 1), normalized=True)
    solved = solve_fixed_point(system, w)
    products = {
        (1, 1): poch_product([zf(1, 4, 4, -1), zf(1, 2, 4)], [], w),
        (1, -1): poch_product([zf(1, 1, 4), zf(1, 3, 4, -1)], [], w),
        (-1, 1): poch_product([zf(1, 1, 4, -1), zf(1, 3, 4)], [], w),
    }
    texts = {
        (1, 1): "(-zq^4;q^4)_inf (zq^2;q^4)_inf",
        (1, -1): "(zq;q^4)_inf (-zq^3;q^4)_inf",
        (-1, 1): "(-zq;q^4)_inf (zq^3;q^4)_inf",
    }
    zq = poch_infinite(zf(1, 1, 1), w)
    out = []
    for d, prod in products.items():
        out.append(
            compare_series(
                "profile %s: product = solver" % (d,),
                prod,
                _PROD(texts[d]),
                solved[d],
                _SOLVER("normalized fixed-point solution"),
            )
        )
        enum = genfun_by_enumeration("skew-shifted", d, (1, 2, 1), window=w)
        out.append(
            compare_series(
                "profile %s: product = (zq;q)_inf x enumeration" % (d,),
                prod,
                _PROD(texts[d]),
                zq * enum,
                _ENUM("(zq;q)_inf x open-chain enumeration, weights (1,2,1)"),
            )
        )
    return out


@_case(
    "mod4-alternating-sum",
    "Alternating bracket sum = (zq,-zq^3;q^4)_inf, with the z-parity "
    "split matching the (1,-1) coefficient closed form.",
    "equal",
    Window(40, 10),
)
def _run_mod4(window: Window) -> list:
    n_trunc = _require_q(window)
    d_cap = _z_cap(window, 10)
    w = Window(n_trunc, d_cap)
    lhs = sum_alternating_mod4(w)
    product = poch_product([zf(1, 1, 4), zf(1, 3, 4, -1)], [], w)
    stacked = _stack_values(closed_form_width4((1, -1)), d_cap, w)
    out = [
        compare_series(
            "bracket sum = product",
            lhs,
            _SUM("alternating period-4 bracket sum"),
            product,
            _PROD("(zq;q^4)_inf (-zq^3;q^4)_inf"),
        ),
        compare_series(
            "bracket sum = stacked coefficient closed forms",
            lhs,
            _SUM("alternating period-4 bracket sum"),
            stacked,
            _CLOSED("sum_n z^n h(n), width-4 closed form, profile (1,-1)"),
        ),
    ]
    for parity, name in ((0, "even"), (1, "odd")):
        out.append(
            compare_series(
                "%s z-degrees match the closed form" % name,
                _z_parity(lhs, parity),
                _SUM("alternating sum, %s z-part" % name),
                _z_parity(stacked, parity),
                _CLOSED("stacked closed form, %s z-part" % name),
            )
        )
    return out


@_case(
    "mod12-sums",
    "The four period-12 double-sum identities for the width-3 open chain "
    "with weights (1,2,2,1), plus the order-independent prefactor forms.",
    "equal",
    Window(36),
)
def _run_mod12(window: Window) -> list:
    n_trunc = _require_q(window)
    w = Window(n_trunc)
    targets = {
        (1, -1, 1): (
            ProductSpec.make([(4, 12), (8, 12)], [(6, 12)]),
            "(q^4,q^8;q^12)_inf / (q^6;q^12)_inf",
        ),
        (1, 1, -1): (
            ProductSpec.make([(1, 6), (10, 12)], [(5, 6)]),
            "(q;q^6)_inf (q^10;q^12)_inf / (q^5;q^6)_inf",
        ),
        (1, 1, 1): (
            ProductSpec.make([(2, 12), (10, 12)], [(6, 12)]),
            "(q^2,q^10;q^12)_inf / (q^6;q^12)_inf",
        ),
        (-1, 1, 1): (
            ProductSpec.make([(2, 12), (5, 12), (11, 12)], [(1, 6)]),
            "(q^2,q^5,q^11;q^12)_inf / (q;q^6)_inf",
        ),
    }
    weights = (1, 2, 2, 1)
    qq = poch_infinite(qf(1, 1), w)
    out = []
    for d, (spec, text) in targets.items():
        rhs = spec.expand(w)
        out.append(
            compare_series(
                "profile %s: double sum = product" % (d,),
                sum_mod12(d, w),
                _SUM("period-12 double sum (stacked width-6 closed form)"),
                rhs,
                _PROD(text),
            )
        )
        out.append(
            compare_series(
                "profile %s: (q;q)_inf x chain product = product" % (d,),
                qq * dspp_product(d, weights, w),
                _PROD("(q;q)_inf x two-multiset product, weights (1,2,2,1)"),
                rhs,
                _PROD(text),
            )
        )
    mismatch = None
    for n in range(21):
        for m in range(21):
            if sigma_prefactor_terms(n, m) != sigma_prefactor_factored(n, m):
                mismatch = (n, m)
                break
        if mismatch:
            break
    out.append(
        _flag_comparison(
            "prefactor forms agree for n, m <= 20",
            _CLOSED("seven-term aggregated prefactor"),
            _CLOSED("factored prefactor, expanded"),
            mismatch is None,
            "first mismatch at (n, m) = %s" % (mismatch,) if mismatch else "",
        )
    )
    return out


@_case(
    "goellnitz-sums",
    "The Goellnitz-Gordon and little Goellnitz sum-product identities, "
    "with the modulus-8 targets tied to the width-3 open chain products.",
    "equal",
    Window(40),
)
def _run_goellnitz(window: Window) -> list:
    n_trunc = _require_q(window)
    w = Window(n_trunc)
    data = {
        "GG1": ((1, 1, 1), ProductSpec.make((), [(3, 8), (4, 8), (5, 8)]),
                "1/(q^3,q^4,q^5;q^8)_inf"),
        "LG1": ((1, 1, -1), ProductSpec.make((), [(3, 4), (2, 8)]),
                "1/((q^3;q^4)_inf (q^2;q^8)_inf)"),
        "GG2": ((1, -1, 1), ProductSpec.make((), [(1, 8), (4, 8), (7, 8)]),
                "1/(q,q^4,q^7;q^8)_inf"),
        "LG2": ((-1, 1, 1), ProductSpec.make((), [(1, 4), (6, 8)]),
                "1/((q;q^4)_inf (q^6;q^8)_inf)"),
    }
    qq = poch_infinite(qf(1, 1), w)
    out = []
    for variant, (d, spec, text) in data.items():
        rhs = spec.expand(w)
        out.append(
            compare_series(
                "%s sum = product" % variant,
                sum_goellnitz(variant, w),
                _SUM("variant %s single sum" % variant),
                rhs,
                _PROD(text),
            )
        )
        out.append(
            compare_series(
                "%s: (q;q)_inf x chain product = product" % variant,
                qq * dspp_product(d, None, w),
                _PROD("(q;q)_inf x two-multiset product, profile %s" % (d,)),
                rhs,
                _PROD(text),
            )
        )
    return out


@_case(
    "schmidt-refined",
    "Refined part-position identities: marked enumerations equal their "
    "chain enumerations and closed forms (sums or products).",
    "equal",
    Window(12, 10),
)
def _run_schmidt_refined(window: Window) -> list:
    n_trunc = _require_q(window)
    d_cap = _z_cap(window, n_trunc - 1)
    w = Window(n_trunc, d_cap)
    wd = Window(min(n_trunc, 15), min(d_cap, 15))  # diamonds grow fastest
    out = []

    strict_odd = marked_partition_series(w, distinct=True, mark="odd")
    out.append(
        compare_series(
            "distinct, odd marks: enumeration = sum",
            strict_odd,
            _ENUM("distinct partitions, z^largest q^(odd-position sum)"),
            sum_schmidt_distinct_odd(w),
            _SUM("sum z^(2n) q^(n(n+1)) / ((zq;q)_n (zq;q)_(n+1))"),
        )
    )
    out.append(
        compare_series(
            "distinct, odd marks: enumeration = strict chain",
            strict_odd,
            _ENUM("distinct partitions, z^largest q^(odd-position sum)"),
            genfun_by_enumeration("distinct", (1, -1), (0, 1), window=w),
            _ENUM("strict closed chain (1,-1), weights (0,1)"),
        )
    )
    strict_even = marked_partition_series(w, distinct=True, mark="even")
    out.append(
        compare_series(
            "distinct, even marks: enumeration = sum",
            strict_even,
            _ENUM("distinct partitions, z^largest q^(even-position sum)"),
            sum_schmidt_distinct_even(w),
            _SUM("1 + sum z^(2n-1) q^(n(n-1)) / ((z;q)_n (zq;q)_n)"),
        )
    )
    out.append(
        compare_series(
            "distinct, even marks: enumeration = strict chain",
            strict_even,
            _ENUM("distinct partitions, z^largest q^(even-position sum)"),
            genfun_by_enumeration("distinct", (-1, 1), (0, 1), window=w),
            _ENUM("strict closed chain (-1,1), weights (0,1)"),
        )
    )

    plain_odd = marked_partition_series(w, mark="odd")
    out.append(
        compare_series(
            "unrestricted, odd marks: enumeration = product",
            plain_odd,
            _ENUM("partitions, z^largest q^(odd-position sum)"),
            poch_product([], [zf(1, 1, 1), zf(1, 1, 1)], w),
            _PROD("1/(zq;q)_inf^2"),
        )
    )
    out.append(
        compare_series(
            "unrestricted, odd marks: enumeration = closed chain",
            plain_odd,
            _ENUM("partitions, z^largest q^(odd-position sum)"),
            genfun_by_enumeration("cylindric", (1, -1), (0, 1), window=w),
            _ENUM("closed chain (1,-1), weights (0,1)"),
        )
    )
    plain_even = marked_partition_series(w, mark="even")
    inv_one_minus_z = TruncatedSeries(
        {(0, 0): 1, (1, 0): -1}, n_trunc, d_cap, 1
    ).invert()
    out.append(
        compare_series(
            "unrestricted, even marks: enumeration = product",
            plain_even,
            _ENUM("partitions, z^largest q^(even-position sum)"),
            poch_product([], [zf(1, 1, 1), zf(1, 1, 1)], w) * inv_one_minus_z,
            _PROD("1/((1-z) (zq;q)_inf^2)"),
        )
    )
    out.append(
        compare_series(
            "unrestricted, even marks: enumeration = closed chain",
            plain_even,
            _ENUM("partitions, z^largest q^(even-position sum)"),
            genfun_by_enumeration("cylindric", (-1, 1), (0, 1), window=w),
            _ENUM("closed chain (-1,1), weights (0,1)"),
        )
    )

    diamonds = diamond_partition_series(wd)
    out.append(
        compare_series(
            "diamonds: enumeration = product",
            diamonds,
            _ENUM("partition diamonds, z^largest q^(anchor sum)"),
            poch_product([zf(1, 1, 1, -1)], [zf(1, 1, 1)] * 3, wd),
            _PROD("(-zq;q)_inf / (zq;q)_inf^3"),
        )
    )
    out.append(
        compare_series(
            "diamonds: enumeration = open chain",
            diamonds,
            _ENUM("partition diamonds, z^largest q^(anchor sum)"),
            genfun_by_enumeration("skew-shifted", (1, -1), (0, 1, 0), window=wd),
            _ENUM("open chain (1,-1), weights (0,1,0)"),
        )
    )
    return out


@_case(
    "schmidt-marginals",
    "Setting z = 1 in the refined identities: odd-position sums over "
    "distinct/unrestricted partitions and the diamond anchor sum.",
    "equal",
    Window(16),
)
def _run_schmidt_marginals(window: Window) -> list:
    n_trunc = _require_q(window)
    w = Window(n_trunc, n_trunc)
    wq = Window(n_trunc)
    return [
        compare_series(
            "distinct, odd marks",
            marked_partition_series(w, distinct=True, mark="odd").collapse_z(),
            _ENUM("distinct partitions, q^(odd-position sum)"),
            poch_product([], [qf(1, 1)], wq),
            _PROD("1/(q;q)_inf"),
        ),
        compare_series(
            "unrestricted, odd marks",
            marked_partition_series(w, mark="odd").collapse_z(),
            _ENUM("partitions, q^(odd-position sum)"),
            poch_product([], [qf(1, 1), qf(1, 1)], wq),
            _PROD("1/(q;q)_inf^2"),
        ),
        compare_series(
            "diamond anchors",
            diamond_partition_series(w).collapse_z(),
            _ENUM("partition diamonds, q^(anchor sum)"),
            poch_product([qf(1, 1, -1)], [qf(1, 1)] * 3, wq),
            _PROD("(-q;q)_inf / (q;q)_inf^3"),
        ),
    ]


@_case(
    "hook-counts",
    "Largest-part / largest-hook equidistributions: odd-position sums "
    "against hooks, and shifted even-position sums against hooks of "
    "partitions with parts > 1.",
    "equal",
    Window(16),
)
def _run_hook_counts(window: Window) -> list:
    n_trunc = _require_q(window)
    max_weight = n_trunc - 1
    odd = distinct_largest_part_table(max_weight, mark="odd")
    hooks = hook_length_table(max_weight)
    shifted = distinct_largest_part_table(
        max_weight, mark="even", include_largest=True
    )
    big_hooks = hook_length_table(max_weight + 1, min_part=2)
    return [
        compare_series(
            "odd-position sums match hooks",
            _table_series(odd, n_trunc),
            _TABLE("distinct partitions by (largest part, odd-position sum)"),
            _table_series(hooks, n_trunc),
            _TABLE("partitions by (largest hook, size)"),
        ),
        compare_series(
            "shifted even-position sums match hooks over parts > 1",
            _table_series(shifted, n_trunc),
            _TABLE(
                "distinct partitions by (largest part, largest + even-position sum)"
            ),
            _table_series(big_hooks, n_trunc, shift_m=1, shift_n=1),
            _TABLE("partitions with parts > 1 by (largest hook - 1, size - 1)"),
        ),
    ]


@_case(
    "signed-distinct-mod2",
    "Alternating sum = (q;q^2)_inf (-q^2;q^2)_inf = signed distinct "
    "partition count, linked to the width-4 coefficient chain at z = q.",
    "equal",
    Window(40),
)
def _run_signed_distinct(window: Window) -> list:
    n_trunc = _require_q(window)
    w = Window(n_trunc)
    product = poch_product([qf(1, 2), qf(2, 2, -1)], [], w)
    out = [
        compare_series(
            "alternating sum = product",
            sum_signed_distinct_mod2(w),
            _SUM("alternating period-2 sum"),
            product,
            _PROD("(q;q^2)_inf (-q^2;q^2)_inf"),
        ),
        compare_series(
            "signed enumeration = product",
            signed_distinct_partition_series(w),
            _ENUM("sum over distinct partitions of (-1)^(odd parts) q^size"),
            product,
            _PROD("(q;q^2)_inf (-q^2;q^2)_inf"),
        ),
    ]
    seq = closed_form_width4((1, -1))
    chain = zero(w)
    n = 0
    while n * n + n < n_trunc:
        chain = chain + seq.value(n, w).times_monomial(0, n)
        n += 1
    doubled = poch_product([qf(2, 4), qf(4, 4, -1)], [], w)
    out.append(
        compare_series(
            "coefficient chain at z = q",
            chain,
            _CLOSED("sum_n q^n h(n), width-4 closed form, profile (1,-1)"),
            doubled,
            _PROD("(q^2;q^4)_inf (-q^4;q^4)_inf"),
        )
    )
    halved_coeffs = {}
    even_only = True
    for z_deg, q_exp, c in chain.items():
        num = q_exp.numerator
        if q_exp.denominator != 1 or num % 2:
            even_only = False
            break
        halved_coeffs[(z_deg, num // 2)] = c
    half_w = Window(n_trunc // 2)
    if even_only:
        out.append(
            compare_series(
                "halved chain = product",
                TruncatedSeries(halved_coeffs, n_trunc // 2, None, 1),
                _CLOSED("the chain with every exponent halved"),
                poch_product([qf(1, 2), qf(2, 2, -1)], [], half_w),
                _PROD("(q;q^2)_inf (-q^2;q^2)_inf"),
            )
        )
    else:
        out.append(
            _flag_comparison(
                "halved chain = product",
                _CLOSED("the chain with every exponent halved"),
                _PROD("(q;q^2)_inf (-q^2;q^2)_inf"),
                False,
                "chain has an odd or fractional exponent; halving undefined",
            )
        )
    return out


@_case(
    "distinct-pair-chains",
    "Strict closed chains of width 2 with weights (0,1): the "
    "inhomogeneous solver reproduces both refined sums.",
    "equal",
    Window(15, 15),
)
def _run_distinct_pairs(window: Window) -> list:
    n_trunc = _require_q(window)
    d_cap = _z_cap(window, n_trunc)
    w = Window(n_trunc, d_cap)
    system = build_system("distinct", (1, -1), (0, 1))
    solved = solve_fixed_point(system, w)
    return [
        compare_series(
            "odd-mark chain: solver = sum",
            solved[(1, -1)],
            _SOLVER("inhomogeneous fixed point, profile (1,-1)"),
            sum_schmidt_distinct_odd(w),
            _SUM("sum z^(2n) q^(n(n+1)) / ((zq;q)_n (zq;q)_(n+1))"),
        ),
        compare_series(
            "even-mark chain: solver = sum",
            solved[(-1, 1)],
            _SOLVER("inhomogeneous fixed point, profile (-1,1)"),
            sum_schmidt_distinct_even(w),
            _SUM("1 + sum z^(2n-1) q^(n(n-1)) / ((z;q)_n (zq;q)_n)"),
        ),
        compare_series(
            "odd-mark chain: enumeration = solver",
            genfun_by_enumeration("distinct", (1, -1), (0, 1), window=w),
            _ENUM("strict closed chain (1,-1), weights (0,1)"),
            solved[(1, -1)],
            _SOLVER("inhomogeneous fixed point, profile (1,-1)"),
        ),
    ]


@_case(
    "solver-vs-enumeration",
    "The fixed-point solver agrees with direct enumeration on every "
    "width-3 profile, closed and open chains, standard weights.",
    "equal",
    Window(12, 12),
)
def _run_solver_vs_enumeration(window: Window) -> list:
    n_trunc = _require_q(window)
    d_cap = _z_cap(window, 12)
    w = Window(n_trunc, d_cap)
    out = []
    for kind in ("cylindric", "skew-shifted"):
        solved: dict = {}
        for d in _sign_profiles(3):
            if d not in solved:
                system = build_system(kind, d, None, normalized=False)
                solved.update(solve_fixed_point(system, w))
            out.append(
                compare_series(
                    "%s %s" % (kind, d),
                    solved[d],
                    _SOLVER("unnormalized fixed point"),
                    genfun_by_enumeration(kind, d, window=w),
                    _ENUM("%s enumeration, standard weights" % kind),
                )
            )
    return out


@_case(
    "product-embedding",
    "Arbitrary-exponent products as weighted chains: the weights (1,1,2) "
    "realize 1/(q,q^2,q^4;q^4), and the (2,1,2) chain is the reciprocal "
    "of an alternating theta sum.",
    "equal",
    Window(18),
)
def _run_product_embedding(window: Window) -> list:
    n_trunc = _require_q(window)
    w = Window(n_trunc)
    theta = theta_sum(2, 3, w)
    chain = genfun_by_enumeration(
        "cylindric", (-1, -1, 1), (2, 1, 2), window=w
    ).collapse_z()
    return [
        compare_series(
            "weighted chain = target product",
            genfun_by_enumeration(
                "cylindric", (-1, -1, 1), (1, 1, 2), window=w
            ).collapse_z(),
            _ENUM("closed chain (-1,-1,1), weights (1,1,2)"),
            ProductSpec.make((), [(1, 4), (2, 4), (4, 4)]).expand(w),
            _PROD("1/(q,q^2,q^4;q^4)_inf"),
        ),
        compare_series(
            "theta sum = modulus-5 triple product",
            theta,
            _SUM("sum_(n in Z) (-1)^n q^(2 C(n+1,2) + 3 C(n,2))"),
            ProductSpec.make([(2, 5), (3, 5), (5, 5)], ()).expand(w),
            _PROD("(q^2,q^3,q^5;q^5)_inf"),
        ),
        compare_series(
            "chain x theta = 1",
            chain * theta,
            _ENUM("closed chain (-1,-1,1), weights (2,1,2), times the theta sum"),
            one(w),
            _PROD("1"),
        ),
    ]


@_case(
    "symmetric-mirror-counts",
    "Mirror-symmetric chains: the symmetric enumeration equals its "
    "boundary-1/interior-2 product, and the non-symmetric surplus of the "
    "doubled chain equals the even/odd ratio product.",
    "equal",
    Window(10),
)
def _run_symmetric_mirror(window: Window) -> list:
    n_trunc = _require_q(window)
    w = Window(n_trunc)
    out = []
    for half in ((1,), (1, 1), (1, -1), (-1, 1)):
        sym = genfun_by_enumeration("symmetric", half, window=w).collapse_z()
        out.append(
            compare_series(
                "half profile %s: symmetric = product" % (half,),
                sym,
                _ENUM("mirror-symmetric chain enumeration"),
                scp_product_spec(half).expand(w),
                _PROD("two-multiset product with weights %s" % (scp_weights(len(half)),)),
            )
        )
        full = genfun_by_enumeration(
            "cylindric", full_profile(half), window=w
        ).collapse_z()
        out.append(
            compare_series(
                "half profile %s: doubled minus symmetric = mirror product" % (half,),
                full - sym,
                _ENUM("doubled closed chain minus symmetric enumeration"),
                nonsymmetric_mirror_series(half, w),
                _PROD("symmetric product x (even/odd ratio - 1)"),
            )
        )
    return out


@_case(
    "width4-coefficient-forms",
    "Width-2 open chain, weights (1,2,1): solver coefficients equal the "
    "closed forms, and the reversed profile repeats them.",
    "equal",
    Window(20, 8),
)
def _run_width4_forms(window: Window) -> list:
    n_trunc = _require_q(window)
    d_cap = _z_cap(window, 8)
    w = Window(n_trunc, d_cap)
    system = build_system("skew-shifted", (1, -1), (1, 2, 1), normalized=True)
    solved = solve_fixed_point(system, w)
    out = []
    for d in ((1, 1), (1, -1), (-1, 1)):
        out.append(
            compare_series(
                "profile %s: solver = closed form" % (d,),
                solved[d],
                _SOLVER("normalized fixed point"),
                _stack_values(closed_form_width4(d), d_cap, w),
                _CLOSED("sum_n z^n h(n) from the width-4 closed form"),
            )
        )
    out.append(
        compare_series(
            "reversal symmetry: (-1,-1) = (1,1)",
            solved[(-1, -1)],
            _SOLVER("normalized fixed point, profile (-1,-1)"),
            solved[(1, 1)],
            _SOLVER("normalized fixed point, profile (1,1)"),
        )
    )
    return out


@_case(
    "width6-coefficient-forms",
    "Width-3 open chain, weights (1,2,2,1): solver coefficients equal "
    "the four closed forms.",
    "equal",
    Window(24, 6),
)
def _run_width6_forms(window: Window) -> list:
    n_trunc = _require_q(window)
    d_cap = _z_cap(window, 6)
    w = Window(n_trunc, d_cap)
    system = build_system("skew-shifted", (1, -1, 1), (1, 2, 2, 1), normalized=True)
    solved = solve_fixed_point(system, w)
    out = []
    for d in ((1, 1, 1), (1, 1, -1), (1, -1, 1), (-1, 1, 1)):
        out.append(
            compare_series(
                "profile %s: solver = closed form" % (d,),
                solved[d],
                _SOLVER("normalized fixed point"),
                _stack_values(closed_form_width6(d), d_cap, w),
                _CLOSED("sum_n z^n h(n) from the width-6 closed form"),
            )
        )
    return out


@_case(
    "coefficient-recurrences",
    "The uncoupled coefficient recurrences annihilate their closed "
    "forms (width-4 and width-6 families).",
    "equal",
    Window(1),  # windows are chosen per degree by the checker
)
def _run_coefficient_recurrences(window: Window) -> list:
    n_max4 = 10
    n_max6 = 6
    out = []
    for d in ((1, 1), (1, -1), (-1, 1)):
        rep = check_closed_form(closed_form_width4(d), width4_recurrence(d), n_max4)
        out.append(
            _flag_comparison(
                "width-4 recurrence, profile %s, n <= %d" % (d, n_max4),
                _CLOSED("width-4 closed form"),
                Side("three-term uncoupled recurrence", "recurrence"),
                rep.holds and rep.initial_ok and not rep.vacuous,
                "" if rep.holds else "failures at %s" % (rep.failures[:3],),
            )
        )
    for d in ((1, 1, 1), (1, 1, -1), (1, -1, 1), (-1, 1, 1)):
        rep = check_closed_form(closed_form_width6(d), width6_recurrence(d), n_max6)
        out.append(
            _flag_comparison(
                "width-6 recurrence, profile %s, n <= %d" % (d, n_max6),
                _CLOSED("width-6 closed form"),
                Side("four-term uncoupled recurrence", "recurrence"),
                rep.holds and rep.initial_ok and not rep.vacuous,
                "" if rep.holds else "failures at %s" % (rep.failures[:3],),
            )
        )
    return out


@_case(
    "mixed-weighted-pair",
    "A closed chain and an open chain claimed to share one product: the "
    "open side checks out; the closed side's series is reported against "
    "the claim and against its own direct product.",
    "report-only",
    Window(12),
)
def _run_mixed_weighted_pair(window: Window) -> list:
    n_trunc = _require_q(window)
    w = Window(n_trunc, n_trunc)
    wq = Window(n_trunc)
    claimed = ProductSpec.make((), [(1, 1), (1, 1), (1, 1), (1, 2)]).expand(wq)
    open_side = genfun_by_enumeration(
        "skew-shifted", (1, -1), (0, 1, 0), window=w
    ).collapse_z()
    closed_side = genfun_by_enumeration(
        "cylindric", (-1, 1, 1, 1), (1, 1, 0, 0), window=w
    ).collapse_z()
    return [
        compare_series(
            "open chain = claimed product",
            open_side,
            _ENUM("open chain (1,-1), weights (0,1,0)"),
            claimed,
            _PROD("1/((q;q)_inf^3 (q;q^2)_inf)"),
        ),
        compare_series(
            "closed chain vs claimed product",
            closed_side,
            _ENUM("closed chain (-1,1,1,1), weights (1,1,0,0)"),
            claimed,
            _PROD("1/((q;q)_inf^3 (q;q^2)_inf)"),
        ),
        compare_series(
            "closed chain = its own direct product",
            closed_side,
            _ENUM("closed chain (-1,1,1,1), weights (1,1,0,0)"),
            cp_product((-1, 1, 1, 1), (1, 1, 0, 0), wq),
            _PROD("exponent-multiset product for weights (1,1,0,0)"),
        ),
        compare_series(
            "closed chain = modulus-2 triple product",
            closed_side,
            _ENUM("closed chain (-1,1,1,1), weights (1,1,0,0)"),
            ProductSpec.make((), [(1, 2), (1, 2), (1, 2), (2, 2)]).expand(wq),
            _PROD("1/((q;q^2)_inf^3 (q^2;q^2)_inf)"),
        ),
    ]


_CHAIN_ONE = (
    "target (q^2,q^3;q^5)_inf / (q;q)_inf",
    ProductSpec.make([(2, 5), (3, 5)], [(1, 1)]),
    ProductSpec.make((), [(1, 5), (4, 5)]),
    (
        ((-1, -1, 1), (1, 3, 1)),
        ((-1, -1, 1, 1), (1, 3, 1, 5)),
        ((-1, 1, -1, 1, 1), (1, 4, 4, 1, 5)),
        ((-1, 1, -1, 1, -1), (5, 4, 1, 1, 4)),
    ),
)

_CHAIN_TWO = (
    "target (q,q^4;q^5)_inf / (q;q)_inf",
    ProductSpec.make([(1, 5), (4, 5)], [(1, 1)]),
    ProductSpec.make((), [(2, 5), (3, 5)]),
    (
        ((-1, 1, 1), (2, 2, 1)),
        ((-1, 1, -1, 1), (2, 2, 3, 3)),
        ((-1, 1, -1, 1, 1), (2, 3, 3, 2, 5)),
        ((-1, 1, -1, 1, -1), (5, 3, 2, 2, 3)),
    ),
)


def _run_mod5_chain(chain, window: Window) -> list:
    target_text, target_spec, core_spec, entries = chain
    n_trunc = _require_q(window)
    w = Window(n_trunc)
    target = target_spec.expand(w)
    core = core_spec.expand(w)
    out = []
    for idx, (d, weights) in enumerate(entries, start=1):
        enum = genfun_by_enumeration("cylindric", d, weights, window=w).collapse_z()
        label = "entry %d: profile %s, weights %s" % (idx, d, weights)
        out.append(
            compare_series(
                label + ": enumeration = direct product",
                enum,
                _ENUM("closed chain enumeration"),
                cp_product(d, weights, w),
                _PROD("exponent-multiset product"),
            )
        )
        total = sum(weights)
        out.append(
            compare_series(
                label + ": chain x (q^%d;q^%d)_inf = shared core" % (total, total),
                enum * poch_infinite(qf(total, total), w),
                _ENUM("enumeration with its full-period factor removed"),
                core,
                _PROD("core product, modulus 5"),
            )
        )
        out.append(
            compare_series(
                label + ": vs chain target",
                enum,
                _ENUM("closed chain enumeration"),
                target,
                _PROD(target_text),
            )
        )
    return out


@_case(
    "mod5-chain-1",
    "First ladder of weighted closed chains aimed at a modulus-5 target: "
    "every entry matches its own product and the shared core; the "
    "width-4/5 entries are reported against the chain target.",
    "report-only",
    Window(12),
)
def _run_mod5_chain_1(window: Window) -> list:
    return _run_mod5_chain(_CHAIN_ONE, window)


@_case(
    "mod5-chain-2",
    "Second ladder of weighted closed chains aimed at a modulus-5 "
    "target: entries match their own products and the shared core; the "
    "width-4/5 entries are reported against the chain target.",
    "report-only",
    Window(12),
)
def _run_mod5_chain_2(window: Window) -> list:
    return _run_mod5_chain(_CHAIN_TWO, window)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


def _exp_json(e):
    f = Fraction(e)
    return int(f) if f.denominator == 1 else str(f)


def _entry_json(entry) -> dict:
    z_deg, q_exp, ca, cb = entry
    return {
        "z_degree": z_deg,
        "q_exponent": _exp_json(q_exp),
        "lhs": ca,
        "rhs": cb,
    }


def _window_json(window: Window) -> dict:
    return {
        "q_truncation": window.q_truncation,
        "z_truncation": window.z_truncation,
        "q_scale": window.q_scale,
    }


def verify(case, window: Optional[Window] = None) -> dict:
    """Run an identity case and return its report.

    ``case`` is an `IdentityCase` or a registry label.  The report is a
    JSON-shaped dict (schema ``cylq-report/1``) recording the window,
    the conventions in force, one entry per comparison with provenance
    for both sides, and -- for unequal comparisons -- the first
    difference plus up to twelve differing coefficients.  Mismatches are
    reported, never raised.
    """
    if isinstance(case, str):
        case = get_case(case)
    used = window if window is not None else case.window
    comparisons = case.run(used)
    all_equal = all(c.equal for c in comparisons)
    if case.expected == "report-only":
        status = "report"
    else:
        status = "pass" if all_equal else "mismatch"
    return {
        "schema": "cylq-report/1",
        "case": case.label,
        "description": case.description,
        "expected": case.expected,
        "window": _window_json(used),
        "conventions": dict(CONVENTIONS),
        "equal": all_equal,
        "status": status,
        "comparisons": [
            {
                "label": c.label,
                "lhs": {"description": c.lhs.description, "provenance": c.lhs.provenance},
                "rhs": {"description": c.rhs.description, "provenance": c.rhs.provenance},
                "equal": c.equal,
                "first_difference": None
                if c.first_difference is None
                else _entry_json(c.first_difference),
                "coefficients": [_entry_json(r) for r in c.rows],
                "note": c.note,
            }
            for c in comparisons
        ],
    }


def report_text(report: dict) -> str:
    """Human-readable rendering of a `verify` report."""
    lines = [
        "case %s [%s] -- %s" % (report["case"], report["status"], report["description"]),
        "window: q<%s z<=%s scale=%s; %s"
        % (
            report["window"]["q_truncation"],
            report["window"]["z_truncation"],
            report["window"]["q_scale"],
            "; ".join("%s=%s" % kv for kv in sorted(report["conventions"].items())),
        ),
    ]
    for c in report["comparisons"]:
        mark = "=" if c["equal"] else "!="
        lines.append(
            "  [%s] %s (%s %s %s)"
            % (
                "ok" if c["equal"] else "DIFF",
                c["label"],
                c["lhs"]["provenance"],
                mark,
                c["rhs"]["provenance"],
            )
        )
        if c["note"]:
            lines.append("       note: %s" % c["note"])
        if c["first_difference"] is not None:
            d = c["first_difference"]
            lines.append(
                "       first difference at z^%s q^%s: %s vs %s"
                % (d["z_degree"], d["q_exponent"], d["lhs"], d["rhs"])
            )
            for r in c["coefficients"]:
                lines.append(
                    "         z^%s q^%s: %s vs %s"
                    % (r["z_degree"], r["q_exponent"], r["lhs"], r["rhs"])
                )
    return "\n".join(lines)
