"""Coupled q-difference systems for grid-partition generating functions.

Splitting every object counted by ``F_delta(z) = sum z^(largest part)
q^(weighted size)`` according to which removable corners of the profile
carry its largest parts relates ``F_delta`` to shifted evaluations of the
generating functions of neighbouring profiles.  Inclusion-exclusion over
nonempty corner subsets ``J`` gives the unnormalized system

    F_p(z) = sum_J (-1)^(|J|-1) F_(sigma_J p)(z q^(s_J)) / (1 - z q^(s_J)),

where ``s_J`` sums the weights at the chosen corners and ``sigma_J`` swaps
the sign pairs there.  Multiplying through by ``(zq;q)_inf`` turns the
denominators into polynomial prefactors (the normalized system)

    H_p(z) = sum_J (-1)^(|J|-1) (zq;q)_(s_J - 1) H_(sigma_J p)(z q^(s_J)).

For the distinct kind the recursion is inhomogeneous and carries no
alternating sign: rows are distinct, so the largest part appears exactly
once at each peak that carries it, and classifying a nonempty object by
the exact set ``J`` of such peaks partitions the objects.  Removing those
rows leaves an object whose parts are all smaller, giving

    F_p(z) = 1 + sum_J z q^(s_J) F_(sigma_J p)(z q^(s_J)) / (1 - z q^(s_J)).

This module builds those systems for all four object kinds, solves them by
graded fixed-point iteration, eliminates a normalized system down to a
single functional equation by substitution, converts functional equations
to coefficient recurrences in the z-degree, and checks closed-form
coefficient sequences against such recurrences exactly.  Coefficient
sequences use the conventions ``h(0) = 1`` and ``h(n) = 0`` for ``n < 0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .lattice import KINDS, _check_profile, _resolve
from .series import TruncatedSeries, Window, one, zero

__all__ = [
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
]


# ---------------------------------------------------------------------------
# profiles and corners
# ---------------------------------------------------------------------------


def reverse_profile(profile: Sequence[int]) -> tuple:
    """The profile of an open chain read backwards: negate and reverse.

    Reading a chain ``lambda^0, ..., lambda^h`` in the other direction
    turns every ascent into a descent, so ``delta_i`` becomes
    ``-delta_(h+1-i)``.  With a palindromic weight vector the reversed
    chain keeps the weighted size and the largest part, so both profiles
    have the same generating function.
    """
    return tuple(-x for x in reversed(_check_profile(profile)))


def _is_closed_kind(kind: str) -> bool:
    if kind not in KINDS:
        raise ValueError(
            "unknown kind %r; expected one of %s" % (kind, ", ".join(KINDS))
        )
    return kind in ("cylindric", "distinct")


def corner_set(kind: str, profile: Sequence[int]) -> tuple:
    """Indices at which a block of largest parts can be removed.

    Closed kinds (cylindric, distinct): ``j`` in ``0..h-1`` is a corner iff
    ``(delta[j-1], delta[j]) = (+1, -1)`` with the index wrapping around
    the cycle.  Open kinds (skew-shifted, symmetric): ``j`` runs over
    ``0..h``; the left end ``j = 0`` is a corner iff ``delta[0] = -1``, the
    right end ``j = h`` iff ``delta[h-1] = +1``, and an interior ``j`` iff
    ``(delta[j-1], delta[j]) = (+1, -1)``.
    """
    closed = _is_closed_kind(kind)
    d = _check_profile(profile)
    h = len(d)
    out = []
    if closed:
        for j in range(h):
            if d[j - 1] == 1 and d[j] == -1:
                out.append(j)
    else:
        for j in range(h + 1):
            if j == 0:
                if d[0] == -1:
                    out.append(0)
            elif j == h:
                if d[h - 1] == 1:
                    out.append(h)
            elif d[j - 1] == 1 and d[j] == -1:
                out.append(j)
    return tuple(out)


def corner_moves(
    kind: str, profile: Sequence[int], weights: Optional[Sequence] = None
) -> tuple:
    """Each removable corner as ``(index, shift, swapped profile)``.

    The shift is the weight at the corner index; the swapped profile is
    the profile after removing a maximal block there (signs swapped at the
    corner, or the single boundary sign flipped for open ends).
    """
    kind, d, w = _resolve(kind, profile, weights)
    h = len(d)
    moves = []
    for j in corner_set(kind, d):
        nd = list(d)
        if kind in ("cylindric", "distinct"):
            nd[j - 1] = -1
            nd[j] = 1
        elif j == 0:
            nd[0] = 1
        elif j == h:
            nd[h - 1] = -1
        else:
            nd[j - 1] = -1
            nd[j] = 1
        moves.append((j, w[j], tuple(nd)))
    return tuple(moves)


def corner_subset_terms(
    kind: str, profile: Sequence[int], weights: Optional[Sequence] = None
) -> tuple:
    """Corner-subset triples ``(sign, shift, profile)`` over nonempty
    corner subsets.

    A subset ``J`` swaps the signs at each of its corners (the swaps touch
    disjoint index pairs) and shifts the argument by ``q^(s_J)`` with
    ``s_J`` the sum of the chosen corner weights.  For the weak kinds the
    subsets overcount and carry the inclusion-exclusion sign
    ``(-1)^(|J|-1)`` (the signs then sum to 1, so the constant terms of
    the two sides agree).  For the distinct kind the subset ``J`` is the
    exact set of peaks holding the largest part, the strata partition the
    nonempty objects, and every sign is ``+1``.
    """
    kind, d, w = _resolve(kind, profile, weights)
    h = len(d)
    closed = kind in ("cylindric", "distinct")
    strict = kind == "distinct"
    moves = corner_moves(kind, d, None if kind == "symmetric" else w)
    terms = []
    for r in range(1, len(moves) + 1):
        for combo in itertools.combinations(moves, r):
            nd = list(d)
            s = Fraction(0)
            for j, wj, _single in combo:
                s += wj
                if closed:
                    nd[j - 1] = -1
                    nd[j] = 1
                elif j == 0:
                    nd[0] = 1
                elif j == h:
                    nd[h - 1] = -1
                else:
                    nd[j - 1] = -1
                    nd[j] = 1
            sign = 1 if strict else (-1) ** (r - 1)
            terms.append((sign, s, tuple(nd)))
    if terms and not strict:
        assert sum(t[0] for t in terms) == 1
    return tuple(terms)


def profile_closure(
    kind: str, profile: Sequence[int], weights: Optional[Sequence] = None
) -> tuple:
    """All profiles reachable from the seed by corner-subset swaps, sorted."""
    kind, seed, w = _resolve(kind, profile, weights)
    weights_arg = None if kind == "symmetric" else w
    seen = {seed}
    frontier = [seed]
    while frontier:
        p = frontier.pop()
        for _sgn, _s, q in corner_subset_terms(kind, p, weights_arg):
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return tuple(sorted(seen))


# ---------------------------------------------------------------------------
# functional terms and systems
# ---------------------------------------------------------------------------

# a prefactor monomial: (z-degree, q-exponent, integer coefficient)
Monomial = tuple


def _canon_monomials(entries: Iterable) -> tuple:
    agg: dict = {}
    for d, e, c in entries:
        d = int(d)
        e = Fraction(e)
        c = int(c)
        if d < 0:
            raise ValueError("prefactor z-degrees must be nonnegative")
        if e < 0:
            raise ValueError("prefactor q-exponents must be nonnegative")
        agg[(d, e)] = agg.get((d, e), 0) + c
    return tuple(
        (d, e, c) for (d, e), c in sorted(agg.items()) if c != 0
    )


ONE_PREFACTOR = ((0, Fraction(0), 1),)


@dataclass(frozen=True)
class FunctionalTerm:
    """One summand of a functional equation.

    The term denotes ``sign * prefactor(z, q) * F_target(z q^shift)``,
    divided by ``(1 - z q^den_shift)`` when ``den_shift`` is set.  A term
    with ``target=None`` is the constant ``inhomogeneous``.  ``prefactor``
    is a polynomial in z and q stored as monomials ``(z_degree,
    q_exponent, coefficient)``.
    """

    sign: int
    shift: Fraction
    target: Optional[tuple]
    prefactor: tuple = ONE_PREFACTOR
    den_shift: Optional[Fraction] = None
    inhomogeneous: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "shift", Fraction(self.shift))
        if self.shift < 0:
            raise ValueError("shift must be nonnegative")
        if self.den_shift is not None:
            object.__setattr__(self, "den_shift", Fraction(self.den_shift))
            if self.den_shift < 0:
                raise ValueError("den_shift must be nonnegative")
        object.__setattr__(self, "prefactor", _canon_monomials(self.prefactor))
        object.__setattr__(self, "inhomogeneous", int(self.inhomogeneous))
        if self.target is None:
            if self.inhomogeneous == 0:
                raise ValueError("a constant term needs a nonzero value")
        else:
            object.__setattr__(self, "target", _check_profile(self.target))

    def prefactor_series(self, window: Window) -> TruncatedSeries:
        """The prefactor polynomial as a truncated series."""
        scale = window.q_scale
        for _d, e, _c in self.prefactor:
            scale = lcm(scale, e.denominator)
        coeffs = {}
        for d, e, c in self.prefactor:
            key = (d, int(e * scale))
            coeffs[key] = coeffs.get(key, 0) + c
        return TruncatedSeries(
            coeffs, window.q_truncation, window.z_truncation, scale
        )

    def pretty(self, symbol: str = "F") -> str:
        if self.target is None:
            return str(self.inhomogeneous)
        bits = []
        if self.sign < 0:
            bits.append("-")
        pf = _pretty_poly(self.prefactor)
        if pf != "1":
            bits.append("(%s)" % pf)
        arg = "z" if self.shift == 0 else "z*q^%s" % _pretty_exp(self.shift)
        bits.append("%s[%s](%s)" % (symbol, _pretty_profile(self.target), arg))
        if self.den_shift is not None:
            den = (
                "(1 - z)"
                if self.den_shift == 0
                else "(1 - z*q^%s)" % _pretty_exp(self.den_shift)
            )
            bits.append("/ %s" % den)
        return " ".join(bits)


def _pretty_exp(e: Fraction) -> str:
    return str(e.numerator) if e.denominator == 1 else "(%s)" % e


def _pretty_profile(p: tuple) -> str:
    return ",".join("%+d" % x for x in p)


def _pretty_poly(monomials: tuple) -> str:
    if not monomials:
        return "0"
    parts = []
    for d, e, c in monomials:
        atoms = []
        if d:
            atoms.append("z" if d == 1 else "z^%d" % d)
        if e:
            atoms.append("q" if e == 1 else "q^%s" % _pretty_exp(e))
        if not atoms or abs(c) != 1:
            atoms.insert(0, str(abs(c)))
        txt = "*".join(atoms)
        if not parts:
            parts.append(txt if c > 0 else "-" + txt)
        else:
            parts.append(("+ " if c > 0 else "- ") + txt)
    return " ".join(parts)


@dataclass
class FunctionalSystem:
    """A closed coupled system of functional equations.

    ``equations`` maps each profile to the tuple of terms whose sum equals
    that profile's generating function; the system is closed (every target
    profile has its own equation).  ``normalized`` records whether the
    unknowns are the ``(zq;q)_inf``-multiples ``H`` (polynomial
    prefactors) or the plain generating functions ``F``.
    """

    kind: str
    weights: tuple
    normalized: bool
    seed: tuple
    equations: dict

    def profiles(self) -> tuple:
        return tuple(sorted(self.equations))

    def symbol(self) -> str:
        return "H" if self.normalized else "F"

    def pretty(self) -> str:
        sym = self.symbol()
        lines = []
        for p in self.profiles():
            rhs = []
            for t in self.equations[p]:
                txt = t.pretty(sym)
                if rhs and not txt.startswith("-"):
                    rhs.append("+ " + txt)
                elif rhs:
                    rhs.append("- " + txt[1:].strip())
                else:
                    rhs.append(txt)
            lines.append("%s[%s](z) = %s" % (sym, _pretty_profile(p), " ".join(rhs)))
        return "\n".join(lines)


def poch_z_prefactor(s: int) -> tuple:
    """``(zq;q)_(s-1) = prod_(j=1)^(s-1) (1 - z q^j)`` as monomials."""
    if s < 1 or s != int(s):
        raise ValueError("the polynomial prefactor needs an integer shift >= 1")
    poly = {(0, Fraction(0)): 1}
    for j in range(1, int(s)):
        nxt = dict(poly)
        for (d, e), c in poly.items():
            key = (d + 1, e + j)
            nxt[key] = nxt.get(key, 0) - c
        poly = nxt
    return _canon_monomials((d, e, c) for (d, e), c in poly.items())


def build_system(
    kind: str,
    profile: Sequence[int],
    weights: Optional[Sequence] = None,
    normalized: Union[str, bool] = "auto",
) -> FunctionalSystem:
    """The closed coupled system reached from the given profile.

    ``normalized="auto"`` produces the normalized system exactly when every
    weight is an integer >= 1 (so every subset shift is a positive integer
    and ``(zq;q)_(s-1)`` is a polynomial) and the kind is not distinct;
    otherwise the unnormalized system is produced.  Passing
    ``normalized=True`` with ineligible weights or the distinct kind is an
    error.  A constant cylindric profile has no corners; its equation is
    the single-term geometric one, ``F(z) = F(z q^A) / (1 - z q^A)`` with
    ``A`` the total weight.  A constant distinct profile is rejected: its
    series is the constant 1 and carries no recursion.
    """
    kind, seed, w = _resolve(kind, profile, weights)
    weights_arg = None if kind == "symmetric" else w
    eligible = kind != "distinct" and all(
        x.denominator == 1 and x >= 1 for x in w
    )
    if normalized == "auto":
        norm = eligible
    else:
        norm = bool(normalized)
        if norm and not eligible:
            raise ValueError(
                "the normalized system needs integer weights >= 1 and a "
                "non-distinct kind; build the unnormalized system instead"
            )

    equations = {}
    for p in profile_closure(kind, seed, weights_arg):
        raw = corner_subset_terms(kind, p, weights_arg)
        if not raw:
            if kind == "cylindric":
                total = sum(w, Fraction(0))
                raw = ((1, total, p),)
            else:
                raise ValueError(
                    "profile %r has no removable corner; the distinct "
                    "series it generates is the constant 1" % (p,)
                )
        terms = []
        if kind == "distinct":
            terms.append(
                FunctionalTerm(1, Fraction(0), None, ONE_PREFACTOR, None, 1)
            )
        for sgn, s, tgt in raw:
            if kind == "distinct":
                terms.append(
                    FunctionalTerm(sgn, s, tgt, ((1, s, 1),), s)
                )
            elif norm:
                terms.append(
                    FunctionalTerm(sgn, s, tgt, poch_z_prefactor(int(s)), None)
                )
            else:
                terms.append(FunctionalTerm(sgn, s, tgt, ONE_PREFACTOR, s))
        equations[p] = tuple(terms)
    return FunctionalSystem(kind, w, norm, seed, equations)


# ---------------------------------------------------------------------------
# JSON round-trip
# ---------------------------------------------------------------------------


def _frac_json(x: Optional[Fraction]):
    return None if x is None else [x.numerator, x.denominator]


def _frac_load(x) -> Optional[Fraction]:
    return None if x is None else Fraction(int(x[0]), int(x[1]))


def system_to_json(system: FunctionalSystem) -> dict:
    return {
        "schema": "cylq-system/1",
        "kind": system.kind,
        "weights": [_frac_json(x) for x in system.weights],
        "normalized": system.normalized,
        "seed": list(system.seed),
        "equations": [
            {
                "profile": list(p),
                "terms": [
                    {
                        "sign": t.sign,
                        "shift": _frac_json(t.shift),
                        "target": None if t.target is None else list(t.target),
                        "prefactor": [
                            [d, _frac_json(e), c] for d, e, c in t.prefactor
                        ],
                        "den_shift": _frac_json(t.den_shift),
                        "inhomogeneous": t.inhomogeneous,
                    }
                    for t in system.equations[p]
                ],
            }
            for p in system.profiles()
        ],
    }


def system_from_json(payload: dict) -> FunctionalSystem:
    if payload.get("schema") != "cylq-system/1":
        raise ValueError("unsupported system schema")
    equations = {}
    for eq in payload["equations"]:
        p = tuple(int(x) for x in eq["profile"])
        terms = []
        for t in eq["terms"]:
            terms.append(
                FunctionalTerm(
                    int(t["sign"]),
                    _frac_load(t["shift"]),
                    None if t["target"] is None else tuple(int(x) for x in t["target"]),
                    tuple((int(d), _frac_load(e), int(c)) for d, e, c in t["prefactor"])
                    or ONE_PREFACTOR,
                    _frac_load(t["den_shift"]),
                    int(t["inhomogeneous"]),
                )
            )
        equations[p] = tuple(terms)
    return FunctionalSystem(
        str(payload["kind"]),
        tuple(_frac_load(x) for x in payload["weights"]),
        bool(payload["normalized"]),
        tuple(int(x) for x in payload["seed"]),
        equations,
    )


# ---------------------------------------------------------------------------
# graded fixed-point solver
# ---------------------------------------------------------------------------


def _add_scaled(acc: dict, table: dict, shift_num: int, coef: int, ncap: int) -> None:
    if not coef:
        return
    for qn, v in table.items():
        k = qn + shift_num
        if k < ncap:
            acc[k] = acc.get(k, 0) + coef * v


def solve_fixed_point(system: FunctionalSystem, window: Window) -> dict:
    """Solve the system within the window; returns ``{profile: series}``.

    The unique solution with constant term 1 (the empty object) is found
    z-degree by z-degree.  The coefficient of ``z^n`` is a q-series: its
    equation references lower z-degrees (already final) plus same-degree
    coefficients whose contributions carry ``q^(shift*n)``, so repeated
    sweeps gain q-valuation and stabilize.  Zero-shift references resolve
    through the same sweeps as long as every dependency cycle gains some
    q-valuation; a cycle with no gain is reported as unsolvable.
    """
    if window.q_truncation is None or window.z_truncation is None:
        raise ValueError("solving needs finite q and z truncations")
    n_trunc, d_trunc = window.q_truncation, window.z_truncation
    profiles = sorted(system.equations)
    scale = window.q_scale
    for terms in system.equations.values():
        for t in terms:
            if t.target is None:
                continue
            scale = lcm(scale, t.shift.denominator)
            if t.den_shift is not None:
                scale = lcm(scale, t.den_shift.denominator)
            for _d, e, _c in t.prefactor:
                scale = lcm(scale, e.denominator)
    ncap = n_trunc * scale

    tables = {p: [] for p in profiles}
    for p in profiles:
        inhoms = [t.inhomogeneous for t in system.equations[p] if t.target is None]
        const = sum(inhoms) if inhoms else 1
        tables[p].append({0: const} if const else {})

    for n in range(1, d_trunc + 1):
        fixed = {}
        varmul = {}
        for p in profiles:
            fx: dict = {}
            vm: dict = {}
            for t in system.equations[p]:
                if t.target is None:
                    continue
                s_num = int(t.shift * scale)
                dn = None if t.den_shift is None else int(t.den_shift * scale)
                for d, e, c in t.prefactor:
                    m = n - d
                    if m < 0:
                        continue
                    e_num = int(e * scale)
                    base = t.sign * c
                    if dn is None:
                        if m <= n - 1:
                            _add_scaled(
                                fx, tables[t.target][m], e_num + s_num * m, base, ncap
                            )
                    else:
                        for k in range(min(m, n - 1) + 1):
                            _add_scaled(
                                fx,
                                tables[t.target][k],
                                e_num + s_num * k + dn * (m - k),
                                base,
                                ncap,
                            )
                    if m == n:
                        key = e_num + s_num * n
                        if key < ncap:
                            mul = vm.setdefault(t.target, {})
                            mul[key] = mul.get(key, 0) + base
            fixed[p] = {k: v for k, v in fx.items() if v}
            varmul[p] = {
                tgt: mm
                for tgt, mm in (
                    (tgt, {k: v for k, v in mm.items() if v}) for tgt, mm in vm.items()
                )
                if mm
            }

        cur = {p: dict(fixed[p]) for p in profiles}
        rounds = 0
        while True:
            changed = False
            for p in profiles:
                acc = dict(fixed[p])
                for tgt, mul in varmul[p].items():
                    gv = cur[tgt]
                    for me, mc in mul.items():
                        _add_scaled(acc, gv, me, mc, ncap)
                acc = {k: v for k, v in acc.items() if v}
                if acc != cur[p]:
                    cur[p] = acc
                    changed = True
            if not changed:
                break
            rounds += 1
            if rounds > ncap + 50:
                zero_shift = sorted(
                    p
                    for p in profiles
                    for t in system.equations[p]
                    if t.target is not None and t.shift == 0
                )
                raise RuntimeError(
                    "fixed-point iteration made no progress at z-degree %d; "
                    "zero-shift dependencies involve profiles %s"
                    % (n, sorted(set(zero_shift)))
                )
        for p in profiles:
            tables[p].append(cur[p])

    out = {}
    for p in profiles:
        coeffs = {}
        for nn in range(d_trunc + 1):
            for qn, v in tables[p][nn].items():
                coeffs[(nn, qn)] = v
        out[p] = TruncatedSeries(coeffs, n_trunc, d_trunc, scale)
    return out


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EliminationResult:
    """Outcome of substitution-based elimination.

    On success, ``terms`` is a tuple of ``(monomials, shift)`` pairs and
    the kept profile's function satisfies ``F(z) = sum_i P_i(z, q)
    F(z q^(shift_i))``.  Failure (a substitution cycle, or non-polynomial
    prefactors) is reported through ``success``/``reason``, never raised.
    """

    keep: tuple
    success: bool
    terms: tuple = ()
    substituted: tuple = ()
    identified: bool = False
    reason: Optional[str] = None

    def as_system(self, template: FunctionalSystem) -> FunctionalSystem:
        """The single-profile system carrying the eliminated equation."""
        if not self.success:
            raise ValueError("elimination failed: %s" % self.reason)
        terms = tuple(
            FunctionalTerm(1, shift, self.keep, monos, None)
            for monos, shift in self.terms
        )
        return FunctionalSystem(
            template.kind,
            template.weights,
            True,
            self.keep,
            {self.keep: terms},
        )

    def pretty(self) -> str:
        if not self.success:
            return "elimination failed: %s" % self.reason
        rhs = []
        for monos, shift in self.terms:
            arg = "z" if shift == 0 else "z*q^%s" % _pretty_exp(shift)
            txt = "(%s) H[%s](%s)" % (
                _pretty_poly(monos),
                _pretty_profile(self.keep),
                arg,
            )
            rhs.append(txt if not rhs else "+ " + txt)
        return "H[%s](z) = %s" % (_pretty_profile(self.keep), " ".join(rhs))


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (da, ea), ca in a.items():
        for (db, eb), cb in b.items():
            key = (da + db, ea + eb)
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def eliminate(
    system: FunctionalSystem,
    keep: Sequence[int],
    identify_reversals: Union[str, bool] = "auto",
) -> EliminationResult:
    """Reduce a normalized system to one equation for a single profile.

    Starting from the kept profile's equation, the first term whose target
    is another profile is rewritten everywhere using that profile's
    equation; each profile's equation is used at most once, so a profile
    that would need a second substitution is a cycle and elimination
    reports failure.  Like terms (same target and argument shift) are
    combined after every substitution, which is what makes the telescoping
    cancellations happen.

    ``identify_reversals`` treats a target profile and its reversal as the
    same unknown.  That is sound for open chains with palindromic weights
    (the reversed chain has the same generating function) and lets systems
    whose raw substitution graph is cyclic collapse to a finite equation;
    ``"auto"`` switches it on exactly in that case.
    """
    keep = _check_profile(keep)
    if keep not in system.equations:
        raise ValueError("profile %r is not part of the system" % (keep,))
    palindromic = tuple(system.weights) == tuple(reversed(system.weights))
    reversible = system.kind in ("skew-shifted", "symmetric") and palindromic
    if identify_reversals == "auto":
        ident = reversible
    else:
        ident = bool(identify_reversals)
        if ident and not reversible:
            raise ValueError(
                "reversal identification needs an open-chain kind with a "
                "palindromic weight vector"
            )
    if not system.normalized:
        return EliminationResult(
            keep,
            False,
            reason="the system is not normalized; its equations carry "
            "non-polynomial denominators",
        )

    def canon(p: tuple) -> tuple:
        if p == keep:
            return keep
        if not ident:
            return p
        r = reverse_profile(p)
        if r == keep:
            return keep
        options = [x for x in (p, r) if x in system.equations]
        return min(options) if options else p

    def load_terms(p: tuple):
        out = []
        for t in system.equations[p]:
            if t.target is None or t.den_shift is not None:
                return None
            poly = {(d, e): t.sign * c for d, e, c in t.prefactor}
            out.append((poly, t.shift, canon(t.target)))
        return out

    def combine(terms: list) -> list:
        merged: list = []
        index: dict = {}
        for poly, shift, tgt in terms:
            key = (shift, tgt)
            if key in index:
                slot = index[key]
                agg = dict(merged[slot][0])
                for k, v in poly.items():
                    agg[k] = agg.get(k, 0) + v
                merged[slot] = ({k: v for k, v in agg.items() if v}, shift, tgt)
            else:
                index[key] = len(merged)
                merged.append((dict(poly), shift, tgt))
        return [(p, s, t) for p, s, t in merged if p]

    working = load_terms(keep)
    if working is None:
        return EliminationResult(
            keep,
            False,
            identified=ident,
            reason="the kept profile's equation has a non-polynomial term",
        )
    working = combine(working)
    visited: list = []
    while True:
        pending = [t for _p, _s, t in working if t != keep]
        if not pending:
            break
        x = pending[0]
        if x in visited:
            return EliminationResult(
                keep,
                False,
                substituted=tuple(visited),
                identified=ident,
                reason="substitution cycle: profile %r would be needed twice"
                % (x,),
            )
        sub = load_terms(x)
        if sub is None:
            return EliminationResult(
                keep,
                False,
                substituted=tuple(visited),
                identified=ident,
                reason="equation for %r has a non-polynomial term" % (x,),
            )
        rewritten = []
        for poly, shift, tgt in working:
            if tgt != x:
                rewritten.append((poly, shift, tgt))
                continue
            for spoly, sshift, stgt in sub:
                shifted = {(d, e + d * shift): c for (d, e), c in spoly.items()}
                rewritten.append((_poly_mul(poly, shifted), shift + sshift, stgt))
        working = combine(rewritten)
        visited.append(x)

    terms = tuple(
        (_canon_monomials((d, e, c) for (d, e), c in poly.items()), shift)
        for poly, shift, _t in sorted(working, key=lambda w: (w[1], sorted(w[0])))
    )
    return EliminationResult(keep, True, terms, tuple(visited), ident, None)


# ---------------------------------------------------------------------------
# coefficient recurrences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinQPoly:
    """``sum_j c_j q^(alpha_j n + beta_j)`` stored as ``(alpha, beta, c)``."""

    entries: tuple

    @staticmethod
    def from_entries(entries: Iterable) -> "LinQPoly":
        agg: dict = {}
        for a, b, c in entries:
            key = (Fraction(a), Fraction(b))
            agg[key] = agg.get(key, 0) + int(c)
        return LinQPoly(
            tuple((a, b, c) for (a, b), c in sorted(agg.items()) if c)
        )

    def is_zero(self) -> bool:
        return not self.entries

    def instantiate(self, n: int) -> dict:
        """The polynomial at a concrete degree, as ``{q-exponent: coeff}``."""
        out: dict = {}
        for a, b, c in self.entries:
            e = a * n + b
            out[e] = out.get(e, 0) + c
        return {e: c for e, c in out.items() if c}

    def pretty(self) -> str:
        if not self.entries:
            return "0"
        parts = []
        for a, b, c in self.entries:
            if a == 0:
                expo = _pretty_exp(b)
            else:
                an = "%s*n" % _pretty_exp(a) if a != 1 else "n"
                if b == 0:
                    expo = an
                else:
                    expo = "%s%+s" % (an, b)
            atom = "q^(%s)" % expo if expo != "0" else "1"
            if abs(c) != 1:
                atom = "%d*%s" % (abs(c), atom)
            if not parts:
                parts.append(atom if c > 0 else "-" + atom)
            else:
                parts.append(("+ " if c > 0 else "- ") + atom)
        return " ".join(parts)


@dataclass(frozen=True)
class CoefficientRecurrence:
    """A linear relation among z-degree coefficients.

    For every degree ``n`` the relation reads ``sum over (target, lag) of
    C[target, lag](n) * h_target(n - lag) = I(n)``, where each coefficient
    ``C`` is a :class:`LinQPoly` (a polynomial in ``q^n`` and ``q``) and
    the inhomogeneous side ``I`` is nonzero only at finitely many degrees
    (``inhom`` lists ``(degree, q-polynomial)`` pairs).
    """

    profile: tuple
    terms: tuple  # ((target, lag, LinQPoly), ...)
    inhom: tuple = ()
    min_degree: int = 0  # the relation applies for degrees n >= min_degree

    def order(self) -> int:
        return max((lag for _t, lag, _c in self.terms), default=0)

    def evaluate(self, n: int, value_fn: Callable, window: Window) -> TruncatedSeries:
        """The relation's residual at degree ``n`` (zero iff it holds).

        ``value_fn(target, m)`` must return the coefficient series
        ``h_target(m)`` (the zero series for ``m < 0``).  Coefficients
        multiplying a nonzero value must instantiate to nonnegative
        exponents; a negative exponent against a nonzero value raises.
        """
        acc = zero(window)
        for tgt, lag, poly in self.terms:
            hv = value_fn(tgt, n - lag)
            if hv.is_zero():
                continue
            for e, c in poly.instantiate(n).items():
                if e < 0:
                    raise ValueError(
                        "coefficient exponent q^%s is negative at degree %d "
                        "while h_%s(%d) is nonzero" % (e, n, tgt, n - lag)
                    )
                acc = acc + hv.times_monomial(0, e, c)
        for deg, qpoly in self.inhom:
            if deg == n:
                base = one(window)
                for e, c in qpoly:
                    acc = acc - base.times_monomial(0, e, c)
        return acc

    def coefficient(self, target: tuple, lag: int) -> LinQPoly:
        for tgt, lg, poly in self.terms:
            if tgt == target and lg == lag:
                return poly
        return LinQPoly(())

    def pretty(self) -> str:
        parts = []
        for tgt, lag, poly in self.terms:
            parts.append(
                "(%s) * h[%s](n-%d)" % (poly.pretty(), _pretty_profile(tgt), lag)
                if lag
                else "(%s) * h[%s](n)" % (poly.pretty(), _pretty_profile(tgt))
            )
        rhs = "0"
        if self.inhom:
            rhs = "; ".join(
                "at n=%d: %s"
                % (deg, " + ".join("%d*q^%s" % (c, e) for e, c in qpoly))
                for deg, qpoly in self.inhom
            )
        return " + ".join(parts) + " = " + rhs


def _den_product(dens: Sequence[Fraction]) -> dict:
    poly = {(0, Fraction(0)): 1}
    for dshift in dens:
        nxt = dict(poly)
        for (d, e), c in poly.items():
            key = (d + 1, e + dshift)
            nxt[key] = nxt.get(key, 0) - c
        poly = nxt
    return poly


def _equation_recurrence(profile: tuple, terms: Sequence[FunctionalTerm]):
    dens = sorted({t.den_shift for t in terms if t.den_shift is not None})
    r_poly = _den_product(dens)
    coeff: dict = {}
    for (d, e), c in r_poly.items():
        key = (profile, d)
        coeff.setdefault(key, []).append((Fraction(0), e, c))
    inhom_parts: dict = {}
    for t in terms:
        if t.target is None:
            for (d, e), c in r_poly.items():
                inhom_parts.setdefault(d, {})
                inhom_parts[d][e] = inhom_parts[d].get(e, 0) + c * t.inhomogeneous
            continue
        minus = list(dens)
        if t.den_shift is not None:
            minus.remove(t.den_shift)
        cleared = _poly_mul(
            _den_product(minus), {(d, e): t.sign * c for d, e, c in t.prefactor}
        )
        for (d, e), c in cleared.items():
            key = (t.target, d)
            coeff.setdefault(key, []).append((t.shift, e - t.shift * d, -c))
    rec_terms = []
    for (tgt, lag), entries in sorted(coeff.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        poly = LinQPoly.from_entries(entries)
        if not poly.is_zero():
            rec_terms.append((tgt, lag, poly))
    inhom = tuple(
        (d, tuple(sorted((e, c) for e, c in table.items() if c)))
        for d, table in sorted(inhom_parts.items())
        if any(table.values())
    )
    return CoefficientRecurrence(profile, tuple(rec_terms), inhom)


def to_coefficient_recurrences(obj: Union[FunctionalSystem, EliminationResult]):
    """Convert functional equations to coefficient recurrences.

    Denominators ``1/(1 - z q^d)`` are cleared by multiplying the equation
    through by the product of its distinct denominator factors, so every
    relation has polynomial coefficients.  For a system the result maps
    each profile to its (generally coupled) relation; for a successful
    elimination result it is the single uncoupled relation.
    """
    if isinstance(obj, EliminationResult):
        if not obj.success:
            raise ValueError("elimination failed: %s" % obj.reason)
        terms = [
            FunctionalTerm(1, shift, obj.keep, monos, None)
            for monos, shift in obj.terms
        ]
        return _equation_recurrence(obj.keep, terms)
    return {
        p: _equation_recurrence(p, obj.equations[p]) for p in obj.profiles()
    }


# ---------------------------------------------------------------------------
# coefficient sequences (closed forms)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoefficientSequence:
    """A sequence ``n -> h(n)`` of q-series coefficients of ``z^n``.

    ``h(n) = 0`` for ``n < 0``; every sequence built here has ``h(0) = 1``.
    ``value(n, window)`` evaluates exactly within the window.
    """

    profile: tuple
    label: str
    _value_fn: Callable = field(repr=False, compare=False)

    def value(self, n: int, window: Window) -> TruncatedSeries:
        if window.q_truncation is None:
            raise ValueError("closed-form evaluation needs a finite q-window")
        if n < 0:
            return zero(Window(window.q_truncation, None, 1))
        return self._value_fn(n, window)


def _arr_mul(arr: list, exp: int, coeff: int) -> None:
    # in place: arr *= (1 + coeff * q^exp), exp >= 1
    if exp < len(arr):
        for i in range(len(arr) - 1, exp - 1, -1):
            arr[i] += coeff * arr[i - exp]


def _arr_div(arr: list, exp: int) -> None:
    # in place: arr /= (1 - q^exp), exp >= 1
    for i in range(exp, len(arr)):
        arr[i] += arr[i - exp]


def _series_from_shifted(arr: list, shift: int, n_trunc: int) -> TruncatedSeries:
    coeffs = {
        (0, i + shift): v for i, v in enumerate(arr) if v and i + shift < n_trunc
    }
    return TruncatedSeries(coeffs, n_trunc, None, 1)


def closed_form_euler() -> CoefficientSequence:
    """``h(n) = q^n / (q;q)_n``: the coefficients of ``1/(zq;q)_inf``."""

    def value(n: int, window: Window) -> TruncatedSeries:
        n_trunc = window.q_truncation
        width = n_trunc - n
        if width <= 0:
            return zero(Window(n_trunc, None, 1))
        arr = [0] * width
        arr[0] = 1
        for j in range(1, n + 1):
            _arr_div(arr, j)
        return _series_from_shifted(arr, n, n_trunc)

    return CoefficientSequence((1,), "geometric-row-lengths", value)


def closed_form_width4(profile: Sequence[int]) -> CoefficientSequence:
    """Coefficient sequences for the width-2 open chain with weights (1,2,1)
    (equivalently the width-4 symmetric cylinder).

    All three start from ``K(n) = (q^2;q^4)_ceil(n/2) (-q^4;q^4)_floor(n/2)
    / (q^4;q^4)_n``:

    * ``(+1,+1)``: ``(-1)^ceil(n/2) q^(n(n+1)) K(n)``
    * ``(+1,-1)``: ``(-1)^ceil(n/2) q^(n^2) K(n)``
    * ``(-1,+1)``: ``(-1)^floor(n/2) q^(n^2) K(n)``
    """
    p = _check_profile(profile)
    if p not in ((1, 1), (1, -1), (-1, 1)):
        raise ValueError(
            "closed forms cover the profiles (1,1), (1,-1) and (-1,1); "
            "the reversal (-1,-1) shares the (1,1) sequence"
        )

    def value(n: int, window: Window) -> TruncatedSeries:
        n_trunc = window.q_truncation
        shift = n * (n + 1) if p == (1, 1) else n * n
        width = n_trunc - shift
        if width <= 0:
            return zero(Window(n_trunc, None, 1))
        arr = [0] * width
        arr[0] = 1
        for j in range((n + 1) // 2):
            _arr_mul(arr, 2 + 4 * j, -1)
        for j in range(n // 2):
            _arr_mul(arr, 4 + 4 * j, 1)
        for j in range(1, n + 1):
            _arr_div(arr, 4 * j)
        sign = (-1) ** (n // 2 if p == (-1, 1) else (n + 1) // 2)
        if sign < 0:
            arr = [-v for v in arr]
        return _series_from_shifted(arr, shift, n_trunc)

    return CoefficientSequence(p, "width4-closed-form", value)


_WIDTH6_DATA = {
    # profile: (exponent E(n, m), bracket entries, sign exponent offset)
    (1, 1, 1): (
        lambda n, m: 3 * n * (n + 1) // 2 - 3 * m * (m + 1) - 1,
        lambda n, m: ((0, 1), (3 * n + 1, -1), (3 * n - 6 * m, -1)),
        1,
    ),
    (1, 1, -1): (
        lambda n, m: 3 * n * (n - 1) // 2 + 2 * n - 1 - 3 * m * (m + 1),
        lambda n, m: ((0, 1), (3 * n + 1, -1), (3 * n - 6 * m, -1)),
        1,
    ),
    (1, -1, 1): (
        lambda n, m: 3 * n * (n + 1) // 2 - 3 * m * (m + 1),
        lambda n, m: ((0, 1),),
        0,
    ),
    (-1, 1, 1): (
        lambda n, m: 3 * n * (n + 1) // 2 - 2 * n - 3 * m * (m + 1) - 1,
        lambda n, m: sigma_prefactor_terms(n, m),
        1,
    ),
}


def sigma_prefactor_terms(n: int, m: int) -> tuple:
    """The seven-term prefactor polynomial of the (-1,+1,+1) summand,
    as combined ``(exponent, coefficient)`` pairs (exponents may be
    negative; the full summand is still a power series)."""
    raw = (
        (0, 1),
        (3 * n + 1, -1),
        (3 * n - 2, -1),
        (3 * n - 6 * m, -1),
        (3 * n - 6 * m - 3, -1),
        (6 * n - 6 * m - 2, 1),
        (6 * n - 12 * m - 3, 1),
    )
    agg: dict = {}
    for e, c in raw:
        agg[e] = agg.get(e, 0) + c
    return tuple(sorted((e, c) for e, c in agg.items() if c))


def sigma_prefactor_factored(n: int, m: int) -> tuple:
    """``1 + q^(3n-12m-3) (1 + q^(1+6m)) (q^(3n) - q^(6m)(1 + q^3))``:
    the factored form of the same prefactor, expanded to pairs."""
    inner: dict = {}
    for e1, c1 in ((0, 1), (1 + 6 * m, 1)):
        for e2, c2 in ((3 * n, 1), (6 * m, -1), (6 * m + 3, -1)):
            key = e1 + e2
            inner[key] = inner.get(key, 0) + c1 * c2
    out = {0: 1}
    base = 3 * n - 12 * m - 3
    for e, c in inner.items():
        key = base + e
        out[key] = out.get(key, 0) + c
    return tuple(sorted((e, c) for e, c in out.items() if c))


def closed_form_width6(profile: Sequence[int]) -> CoefficientSequence:
    """Coefficient sequences for the width-3 open chain with weights
    (1,2,2,1) (equivalently the width-6 symmetric cylinder).

    Each value is an alternating sum over ``0 <= m <= n/2`` of
    ``q^(E(n,m)) * B(n,m) * (-q,-q^5;q^6)_m / ((q^6;q^6)_m (q^3;q^3)_(n-2m))``
    with a profile-specific exponent ``E`` and prefactor polynomial ``B``.
    Individual prefactor entries may dip below the shift; the assembled
    value is always a genuine power series (enforced).
    """
    p = _check_profile(profile)
    if p not in _WIDTH6_DATA:
        raise ValueError(
            "closed forms cover the profiles (1,1,1), (1,1,-1), (1,-1,1) "
            "and (-1,1,1)"
        )
    e_fn, br_fn, sign_off = _WIDTH6_DATA[p]

    def value(n: int, window: Window) -> TruncatedSeries:
        n_trunc = window.q_truncation
        half = n // 2
        min_e = min(e_fn(n, m) for m in range(half + 1))
        width = n_trunc - min_e + 4
        if width <= 0:
            return zero(Window(n_trunc, None, 1))
        base = [0] * width
        base[0] = 1
        for j in range(1, n + 1):
            _arr_div(base, 3 * j)
        acc: dict = {}
        for m in range(half + 1):
            if m > 0:
                _arr_mul(base, 3 * (n - 2 * m + 1), -1)
                _arr_mul(base, 3 * (n - 2 * m + 2), -1)
                _arr_mul(base, 6 * m - 5, 1)
                _arr_mul(base, 6 * m - 1, 1)
                _arr_div(base, 6 * m)
            sgn = (-1) ** (m + sign_off)
            e_base = e_fn(n, m)
            for be, bc in br_fn(n, m):
                off = e_base + be
                coef = sgn * bc
                for i, v in enumerate(base):
                    if v and i + off < n_trunc:
                        acc[i + off] = acc.get(i + off, 0) + coef * v
        acc = {e: c for e, c in acc.items() if c}
        if acc and min(acc) < 0:
            raise AssertionError(
                "assembled value has a negative exponent at n=%d: q^%d"
                % (n, min(acc))
            )
        return TruncatedSeries({(0, e): c for e, c in acc.items()}, n_trunc, None, 1)

    return CoefficientSequence(p, "width6-closed-form", value)


def width6_min_exponent(profile: Sequence[int], n: int) -> int:
    """A lower bound for the q-valuation of the width-6 value at ``n``
    (the minimal summand exponent, minus the largest possible dip of the
    prefactor polynomial)."""
    p = _check_profile(profile)
    e_fn, _br, _off = _WIDTH6_DATA[p]
    return min(e_fn(n, m) for m in range(n // 2 + 1)) - 3


def closed_form_goellnitz() -> CoefficientSequence:
    """``h(n) = q^(n^2) (-q;q^2)_n / (q^2;q^2)_n``: the coefficient
    sequence of the (1,-1,1) profile with unit weights on the open
    width-3 chain."""

    def value(n: int, window: Window) -> TruncatedSeries:
        n_trunc = window.q_truncation
        shift = n * n
        width = n_trunc - shift
        if width <= 0:
            return zero(Window(n_trunc, None, 1))
        arr = [0] * width
        arr[0] = 1
        for j in range(1, n + 1):
            _arr_mul(arr, 2 * j - 1, 1)
        for j in range(1, n + 1):
            _arr_div(arr, 2 * j)
        return _series_from_shifted(arr, shift, n_trunc)

    return CoefficientSequence((1, -1, 1), "odd-kernel-closed-form", value)


# ---------------------------------------------------------------------------
# explicit uncoupled recurrences
# ---------------------------------------------------------------------------


def _relation_from_top_shifted(profile: tuple, coeff_fns, top: int) -> CoefficientRecurrence:
    """Build a relation from coefficients written against ``h(n + top)``.

    ``coeff_fns`` lists, for lags ``0..top``, the coefficient of
    ``h(n + top - lag)`` as ``((slope, intercept, coeff), ...)`` entries
    meaning ``sum c q^(slope*n + intercept)``; the whole relation equals
    zero.  Internally the degree variable is re-centered at the top index
    (``m = n + top``), giving coefficients in ``q^m``.
    """
    terms = []
    for lag, entries in enumerate(coeff_fns):
        shifted = [(Fraction(a), Fraction(b) - Fraction(a) * top, c) for a, b, c in entries]
        poly = LinQPoly.from_entries(shifted)
        if not poly.is_zero():
            terms.append((profile, lag, poly))
    return CoefficientRecurrence(profile, tuple(terms), (), top)


def width4_recurrence(profile: Sequence[int]) -> CoefficientRecurrence:
    """The uncoupled three-term recurrences of the width-4 family.

    Written against the top index (``h(n)`` below is the relation's
    highest coefficient):

    * ``(+1,+1)``: ``(1 - q^(4n)) h(n) = -q^(4n-2)(1-q^2) h(n-1) - q^(4n-2) h(n-2)``
    * ``(+1,-1)``: ``(1 - q^(4n)) h(n) = -q^(4n-3)(1-q^2) h(n-1) - q^(4n-4) h(n-2)``
    * ``(-1,+1)``: ``(1 - q^(4n)) h(n) = +q^(4n-3)(1-q^2) h(n-1) - q^(4n-4) h(n-2)``

    The sign of the middle coefficient separates the ``(-1,+1)`` case from
    the ``(+1,-1)`` case; flipping it breaks the closed form (it would
    instead annihilate ``(-1)^n h(n)``).
    """
    p = _check_profile(profile)
    if p == (1, 1):
        coeffs = (
            ((0, 0, 1), (4, 8, -1)),
            ((4, 6, 1), (4, 8, -1)),
            ((4, 6, 1),),
        )
    elif p == (1, -1):
        coeffs = (
            ((0, 0, 1), (4, 8, -1)),
            ((4, 5, 1), (4, 7, -1)),
            ((4, 4, 1),),
        )
    elif p == (-1, 1):
        coeffs = (
            ((0, 0, 1), (4, 8, -1)),
            ((4, 5, -1), (4, 7, 1)),
            ((4, 4, 1),),
        )
    else:
        raise ValueError("recurrences cover (1,1), (1,-1) and (-1,1)")
    return _relation_from_top_shifted(p, coeffs, top=2)


def width6_recurrence(profile: Sequence[int]) -> CoefficientRecurrence:
    """The uncoupled four-term recurrences of the width-6 family.

    Each is written as ``c3(n) h(n+3) = c2(n) h(n+2) + c1(n) h(n+1) +
    c0(n) h(n)`` and stored against the top index.  The relation for
    ``(1,1,1)`` has top coefficient ``(1 - q^(3n+9))(1 + q^(3n+5) -
    q^(3n+6))``; the ``(1,-1,1)`` and ``(-1,1,1)`` relations share the top
    coefficient ``1 - q^(3n+9)``.
    """
    p = _check_profile(profile)
    if p == (1, -1, 1):
        c3 = ((0, 0, 1), (3, 9, -1))
        c2 = ((6, 15, 1),)
        c1 = ((3, 6, -1), (6, 10, -1), (6, 14, -1))
        c0 = ((6, 9, 1),)
    elif p == (-1, 1, 1):
        c3 = ((0, 0, 1), (3, 9, -1))
        c2 = ((6, 13, 1),)
        c1 = ((3, 8, -1), (6, 10, -1), (6, 12, -1))
        c0 = ((6, 9, 1),)
    elif p == (1, 1, -1):
        c3 = ((0, 0, 1), (3, 5, 1), (3, 6, -1), (3, 9, -1), (6, 14, -1), (6, 15, 1))
        c2 = ((3, 6, -1), (3, 9, 1), (6, 17, 1), (9, 22, 1), (9, 23, -1))
        c1 = ((3, 7, -1), (6, 12, -1), (6, 14, -1), (6, 15, -1), (6, 16, 1),
              (9, 19, -1), (9, 21, 1))
        c0 = ((6, 9, 1), (9, 17, 1), (9, 18, -1))
    elif p == (1, 1, 1):
        c3 = ((0, 0, 1), (3, 5, 1), (3, 6, -1), (3, 9, -1), (6, 14, -1), (6, 15, 1))
        c2 = ((3, 7, -1), (3, 10, 1), (6, 18, 1), (9, 23, 1), (9, 24, -1))
        c1 = ((3, 9, -1), (6, 14, -1), (6, 16, -1), (6, 17, -1), (6, 18, 1),
              (9, 21, -1), (9, 23, 1))
        c0 = ((6, 12, 1), (9, 20, 1), (9, 21, -1))
    else:
        raise ValueError(
            "recurrences cover (1,1,1), (1,1,-1), (1,-1,1) and (-1,1,1)"
        )
    negate = lambda entries: tuple((a, b, -c) for a, b, c in entries)
    return _relation_from_top_shifted(
        p, (c3, negate(c2), negate(c1), negate(c0)), top=3
    )


# ---------------------------------------------------------------------------
# closed-form checking
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckReport:
    """Outcome of checking a coefficient sequence against a recurrence."""

    holds: bool
    n_max: int
    window: Window
    failures: tuple  # (degree, q-exponent, residual coefficient)
    vacuous: tuple  # degrees where every referenced value vanished in-window
    initial_ok: bool
    start_degree: int = 0  # first degree covered by the relation


def check_closed_form(
    sequence,
    recurrence: CoefficientRecurrence,
    n_max: int,
    window: Optional[Window] = None,
) -> CheckReport:
    """Verify that the sequence satisfies the recurrence for all degrees
    ``recurrence.min_degree <= n <= n_max``, exactly within the window.

    ``sequence`` is a :class:`CoefficientSequence` or a mapping from
    profiles to sequences (for coupled relations).  All values are
    evaluated in one shared window (default: ``q^(2(n_max+2)^2 + 40)``,
    generous for every family shipped here).  Initial conditions are part
    of the check: the kept profile's value at 0 must be the constant 1.
    Mismatches are reported, never raised.
    """
    if window is None:
        window = Window(2 * (n_max + 2) ** 2 + 40)
    if isinstance(sequence, CoefficientSequence):
        seqmap = {recurrence.profile: sequence}
        for tgt, _lag, _poly in recurrence.terms:
            seqmap.setdefault(tgt, sequence)
    else:
        seqmap = dict(sequence)
    cache: dict = {}

    def value_fn(tgt, m):
        key = (tgt, m)
        if key not in cache:
            cache[key] = seqmap[tgt].value(m, window)
        return cache[key]

    failures = []
    vacuous = []
    for n in range(recurrence.min_degree, n_max + 1):
        used_nonzero = False
        for tgt, lag, _poly in recurrence.terms:
            if not value_fn(tgt, n - lag).is_zero():
                used_nonzero = True
                break
        if not used_nonzero and not any(deg == n for deg, _ in recurrence.inhom):
            vacuous.append(n)
            continue
        residual = recurrence.evaluate(n, value_fn, window)
        if not residual.is_zero():
            diff = residual.first_difference(zero(residual.window))
            failures.append((n, diff[1], diff[2]))
    init = value_fn(recurrence.profile, 0)
    initial_ok = init.agrees_with(one(init.window))
    return CheckReport(
        not failures and initial_ok,
        n_max,
        window,
        tuple(failures),
        tuple(vacuous),
        initial_ok,
        recurrence.min_degree,
    )
