"""Exact truncated power-series arithmetic in two variables.

Every series in this package is an element of Z[[z, q^(1/d)]] known exactly
inside a rectangular window: all coefficients of z^k q^(m/d) with
m/d < q_truncation and k <= z_truncation are stored exactly (zeros omitted),
and nothing is claimed outside the window.  The integer d (``q_scale``)
puts rational q-exponents on a common grid; pure integer-exponent series
use d = 1.

Conventions used throughout:

* ``q_truncation`` (written N) means "exact strictly below q^N".
  ``None`` means the series is an exact polynomial in q.
* ``z_truncation`` (written D) means "exact up to and including z^D".
  ``None`` means exact at every z-degree (e.g. a pure q-series).
* Pochhammer symbols are the standard ones:
  (a; q)_n = prod_{j=0}^{n-1} (1 - a q^j)  and
  (a; q)_inf = prod_{j>=0} (1 - a q^j).
  The reciprocal convention 1/(q;q)_n = 0 for n <= -1 is available through
  :func:`inv_poch_finite`.

Binary operations rescale both operands to the least common q-grid and
intersect the two windows; coefficients pushed beyond the window are
dropped, never reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Optional, Union

__all__ = [
    "Window",
    "TruncatedSeries",
    "PochFactor",
    "qf",
    "zf",
    "make_series",
    "zero",
    "one",
    "monomial",
    "poch_finite",
    "inv_poch_finite",
    "poch_infinite",
    "poch_product",
    "gauss_binomial",
    "theta_sum",
    "series_to_json",
    "series_from_json",
]

QExp = Union[int, Fraction]


def _as_fraction(x: QExp) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an integer or Fraction, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# windows
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Window:
    """A truncation window for series arithmetic.

    ``q_truncation``: exact strictly below q^N (``None`` = exact polynomial).
    ``z_truncation``: exact for z-degrees <= D (``None`` = all z-degrees).
    ``q_scale``: exponent grid q^(1/d); coefficients live on that grid.
    """

    q_truncation: Optional[int]
    z_truncation: Optional[int] = None
    q_scale: int = 1

    def __post_init__(self) -> None:
        if self.q_truncation is not None:
            if not isinstance(self.q_truncation, int):
                raise ValueError("q_truncation must be an integer or None")
            if self.q_truncation <= 0:
                raise ValueError("q_truncation must be positive (got %r)" % (self.q_truncation,))
        if self.z_truncation is not None:
            if not isinstance(self.z_truncation, int) or self.z_truncation < 0:
                raise ValueError("z_truncation must be a nonnegative integer or None")
        if not isinstance(self.q_scale, int) or self.q_scale < 1:
            raise ValueError("q_scale must be a positive integer")


def _min_bound(a: Optional[int], b: Optional[int]) -> Optional[int]:
    """Intersection of two exactness bounds where None means unbounded."""
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


# ---------------------------------------------------------------------------
# the series type
# ---------------------------------------------------------------------------


class TruncatedSeries:
    """Sparse exact series: dict {(z_degree, q_numerator): coefficient}.

    The q-exponent of a stored key (k, m) is m / q_scale.  All stored keys
    lie inside the window; the constructor drops anything outside it.
    Instances are immutable by convention: no method mutates ``self``.
    """

    __slots__ = ("coeffs", "q_truncation", "z_truncation", "q_scale")

    def __init__(
        self,
        coeffs: dict,
        q_truncation: Optional[int],
        z_truncation: Optional[int] = None,
        q_scale: int = 1,
    ) -> None:
        Window(q_truncation, z_truncation, q_scale)  # validate bounds
        qcap = None if q_truncation is None else q_truncation * q_scale
        kept: dict = {}
        for (zdeg, qnum), c in coeffs.items():
            if c == 0:
                continue
            if not isinstance(zdeg, int) or not isinstance(qnum, int):
                raise ValueError("series keys must be integer pairs (z_degree, q_numerator)")
            if zdeg < 0:
                raise ValueError("negative z-degree %d is outside the ring" % zdeg)
            if qnum < 0:
                raise ValueError("negative q-exponent %s is outside the ring" % Fraction(qnum, q_scale))
            if not isinstance(c, int):
                raise ValueError("coefficients must be integers")
            if qcap is not None and qnum >= qcap:
                continue
            if z_truncation is not None and zdeg > z_truncation:
                continue
            kept[(zdeg, qnum)] = c
        self.coeffs = kept
        self.q_truncation = q_truncation
        self.z_truncation = z_truncation
        self.q_scale = q_scale

    # -- basic inspection ---------------------------------------------------

    @property
    def window(self) -> Window:
        return Window(self.q_truncation, self.z_truncation, self.q_scale)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, z_degree: int, q_exponent: QExp) -> int:
        """Exact coefficient of z^z_degree q^q_exponent.

        Raises ValueError when the requested exponent lies outside the
        window, because there the coefficient is unknown rather than zero.
        """
        e = _as_fraction(q_exponent)
        if self.q_truncation is not None and e >= self.q_truncation:
            raise ValueError(
                "coefficient of q^%s requested, but the series is only exact below q^%d"
                % (e, self.q_truncation)
            )
        if self.z_truncation is not None and z_degree > self.z_truncation:
            raise ValueError(
                "coefficient of z^%d requested, but the series is only exact up to z^%d"
                % (z_degree, self.z_truncation)
            )
        num = e * self.q_scale
        if num.denominator != 1:
            return 0
        return self.coeffs.get((z_degree, int(num)), 0)

    def items(self) -> Iterator[tuple[int, Fraction, int]]:
        """Yield (z_degree, q_exponent, coefficient) sorted by (z, q)."""
        for (zdeg, qnum) in sorted(self.coeffs):
            yield zdeg, Fraction(qnum, self.q_scale), self.coeffs[(zdeg, qnum)]

    def support_size(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        ncap = "inf" if self.q_truncation is None else str(self.q_truncation)
        zcap = "inf" if self.z_truncation is None else str(self.z_truncation)
        return "TruncatedSeries(q<%s, z<=%s, scale=%d, %d terms)" % (
            ncap,
            zcap,
            self.q_scale,
            len(self.coeffs),
        )

    def pretty(self, max_terms: int = 24) -> str:
        """Human-readable expansion, lowest terms first."""
        parts = []
        for zdeg, qexp, c in self.items():
            if len(parts) >= max_terms:
                parts.append("+ ...")
                break
            mono = []
            if zdeg:
                mono.append("z" if zdeg == 1 else f"z^{zdeg}")
            if qexp:
                mono.append("q" if qexp == 1 else f"q^{qexp}")
            body = "*".join(mono)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            parts.append(("- " if c < 0 else "+ ") + text)
        if not parts:
            return "0"
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    # -- canonical form and comparison --------------------------------------

    def canonical(self) -> "TruncatedSeries":
        """Equivalent series with the smallest q_scale representing it."""
        g = self.q_scale
        for (_, qnum) in self.coeffs:
            g = gcd(g, qnum)
            if g == 1:
                break
        if g <= 1 or self.q_scale == 1:
            return self
        newco = {(z, qn // g): c for (z, qn), c in self.coeffs.items()}
        return TruncatedSeries(newco, self.q_truncation, self.z_truncation, self.q_scale // g)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return (
            a.q_scale == b.q_scale
            and a.q_truncation == b.q_truncation
            and a.z_truncation == b.z_truncation
            and a.coeffs == b.coeffs
        )

    __hash__ = None  # mutable-dict payload; identity hashing would mislead

    def first_difference(self, other: "TruncatedSeries"):
        """First disagreement inside the intersected window, or None.

        Returns (z_degree, q_exponent, self_coefficient, other_coefficient)
        for the smallest disagreeing exponent pair, ordering by q-exponent
        first and z-degree second.
        """
        a, b = _unified(self, other)
        ncap = _min_bound(a.q_truncation, b.q_truncation)
        dcap = _min_bound(a.z_truncation, b.z_truncation)
        scale = a.q_scale
        keys = set(a.coeffs) | set(b.coeffs)
        best = None
        for (zdeg, qnum) in keys:
            if ncap is not None and qnum >= ncap * scale:
                continue
            if dcap is not None and zdeg > dcap:
                continue
            ca = a.coeffs.get((zdeg, qnum), 0)
            cb = b.coeffs.get((zdeg, qnum), 0)
            if ca != cb:
                key = (qnum, zdeg)
                if best is None or key < best[0]:
                    best = (key, (zdeg, Fraction(qnum, scale), ca, cb))
        return None if best is None else best[1]

    def agrees_with(self, other: "TruncatedSeries") -> bool:
        """True when the two series agree on the whole intersected window."""
        return self.first_difference(other) is None

    # -- ring operations -----------------------------------------------------

    def _rescaled(self, new_scale: int) -> "TruncatedSeries":
        if new_scale == self.q_scale:
            return self
        if new_scale % self.q_scale:
            raise ValueError("cannot rescale grid 1/%d to 1/%d" % (self.q_scale, new_scale))
        f = new_scale // self.q_scale
        newco = {(z, qn * f): c for (z, qn), c in self.coeffs.items()}
        return TruncatedSeries(newco, self.q_truncation, self.z_truncation, new_scale)

    def __add__(self, other):
        if isinstance(other, int):
            other = _constant(other, self.window)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        a, b = _unified(self, other)
        out = dict(a.coeffs)
        for k, c in b.coeffs.items():
            out[k] = out.get(k, 0) + c
        return TruncatedSeries(
            out,
            _min_bound(a.q_truncation, b.q_truncation),
            _min_bound(a.z_truncation, b.z_truncation),
            a.q_scale,
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(
            {k: -c for k, c in self.coeffs.items()},
            self.q_truncation,
            self.z_truncation,
            self.q_scale,
        )

    def __sub__(self, other):
        if isinstance(other, int):
            other = _constant(other, self.window)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(
                {k: c * other for k, c in self.coeffs.items()},
                self.q_truncation,
                self.z_truncation,
                self.q_scale,
            )
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        a, b = _unified(self, other)
        ntr = _min_bound(a.q_truncation, b.q_truncation)
        dtr = _min_bound(a.z_truncation, b.z_truncation)
        qcap = None if ntr is None else ntr * a.q_scale
        out: dict = {}
        if len(b.coeffs) < len(a.coeffs):
            a, b = b, a
        for (za, qa), ca in a.coeffs.items():
            for (zb, qb), cb in b.coeffs.items():
                z = za + zb
                if dtr is not None and z > dtr:
                    continue
                qn = qa + qb
                if qcap is not None and qn >= qcap:
                    continue
                k = (z, qn)
                out[k] = out.get(k, 0) + ca * cb
        return TruncatedSeries(out, ntr, dtr, a.q_scale)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * other.invert(
            q_truncation=_min_bound(self.q_truncation, other.q_truncation),
            z_truncation=_min_bound(self.z_truncation, other.z_truncation),
        )

    def times_monomial(self, z_degree: int = 0, q_exponent: QExp = 0, coefficient: int = 1):
        """self * coefficient * z^z_degree q^q_exponent (exponents >= 0)."""
        e = _as_fraction(q_exponent)
        if z_degree < 0 or e < 0:
            raise ValueError("monomial exponents must be nonnegative")
        scale = lcm(self.q_scale, e.denominator)
        s = self._rescaled(scale)
        shift = int(e * scale)
        out = {
            (z + z_degree, qn + shift): c * coefficient
            for (z, qn), c in s.coeffs.items()
        }
        return TruncatedSeries(out, s.q_truncation, s.z_truncation, scale)

    def invert(
        self,
        q_truncation: Optional[int] = None,
        z_truncation: Optional[int] = None,
    ) -> "TruncatedSeries":
        """Multiplicative inverse, computed by graded recursion.

        Requires constant term +1 or -1.  The inverse of a series with any
        z-dependence has unbounded support, so a finite window must be
        available in each variable that actually appears (either carried by
        the series or supplied here).
        """
        ntr = _min_bound(self.q_truncation, q_truncation)
        dtr = _min_bound(self.z_truncation, z_truncation)
        a0 = self.coeffs.get((0, 0), 0)
        if a0 not in (1, -1):
            raise ValueError(
                "cannot invert: constant term is %d, need a unit (+1 or -1)" % a0
            )
        if ntr is None:
            if any(qn for (_, qn) in self.coeffs):
                raise ValueError(
                    "cannot invert a series with q-dependence without a finite q_truncation"
                )
            ntr_eff = 1
        else:
            ntr_eff = ntr
        has_z = any(z for (z, _) in self.coeffs)
        if dtr is None:
            if has_z:
                raise ValueError(
                    "cannot invert a series with z-dependence without a finite z_truncation"
                )
            dtr_eff = 0
        else:
            dtr_eff = dtr
        scale = self.q_scale
        qcap = ntr_eff * scale
        rest = {k: c for k, c in self.coeffs.items() if k != (0, 0)}
        inv: dict = {(0, 0): a0}
        # graded recursion: each key is determined by componentwise-smaller ones
        for z in range(0, dtr_eff + 1):
            for qn in range(0, qcap):
                if z == 0 and qn == 0:
                    continue
                acc = 0
                for (gz, gq), c in rest.items():
                    if gz <= z and gq <= qn:
                        prev = inv.get((z - gz, qn - gq), 0)
                        if prev:
                            acc += c * prev
                if acc:
                    inv[(z, qn)] = -a0 * acc
        return TruncatedSeries(inv, ntr, dtr, scale)

    def substitute_z(self, q_shift: QExp, sign: int = 1) -> "TruncatedSeries":
        """Map z -> sign * z * q^q_shift with q_shift >= 0.

        Each term z^k q^m becomes sign^k z^k q^(m + k*q_shift); the window
        is unchanged (terms pushed past it are dropped, which preserves
        exactness because q_shift is nonnegative).
        """
        e = _as_fraction(q_shift)
        if e < 0:
            raise ValueError("substitute_z requires a nonnegative q-shift")
        if sign not in (1, -1):
            raise ValueError("substitute_z sign must be +1 or -1")
        scale = lcm(self.q_scale, e.denominator)
        s = self._rescaled(scale)
        step = int(e * scale)
        out: dict = {}
        for (z, qn), c in s.coeffs.items():
            out[(z, qn + z * step)] = c * (sign ** (z & 1))
        return TruncatedSeries(out, s.q_truncation, s.z_truncation, scale)

    def z_slice(self, z_degree: int) -> "TruncatedSeries":
        """The coefficient of z^z_degree as a pure q-series."""
        if self.z_truncation is not None and z_degree > self.z_truncation:
            raise ValueError(
                "z^%d slice requested beyond the exact z-window (%d)"
                % (z_degree, self.z_truncation)
            )
        out = {(0, qn): c for (z, qn), c in self.coeffs.items() if z == z_degree}
        return TruncatedSeries(out, self.q_truncation, None, self.q_scale)

    def collapse_z(self) -> "TruncatedSeries":
        """Set z = 1, producing a pure q-series.

        Sound when the series is exact at every z-degree, or when every
        monomial of the underlying object satisfies z-degree <= q-exponent
        (then a z-window of at least q_truncation - 1 already sees every
        term below the q-window; the caller asserts that property by
        calling this method on such a series).
        """
        if self.z_truncation is not None:
            if self.q_truncation is None or self.z_truncation < self.q_truncation - 1:
                raise ValueError(
                    "collapse_z needs z_truncation >= q_truncation - 1 "
                    "(or an exact z-window) to be exact"
                )
        out: dict = {}
        for (z, qn), c in self.coeffs.items():
            k = (0, qn)
            out[k] = out.get(k, 0) + c
        return TruncatedSeries(out, self.q_truncation, None, self.q_scale)


def _unified(a: TruncatedSeries, b: TruncatedSeries):
    scale = lcm(a.q_scale, b.q_scale)
    return a._rescaled(scale), b._rescaled(scale)


def _constant(c: int, window: Window) -> TruncatedSeries:
    return TruncatedSeries(
        {(0, 0): c}, window.q_truncation, window.z_truncation, window.q_scale
    )


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def make_series(
    terms: Iterable[tuple[int, QExp, int]],
    window: Window,
) -> TruncatedSeries:
    """Build a series from (z_degree, q_exponent, coefficient) triples."""
    terms = list(terms)
    scale = window.q_scale
    for _, e, _ in terms:
        scale = lcm(scale, _as_fraction(e).denominator)
    coeffs: dict = {}
    for z, e, c in terms:
        qn = int(_as_fraction(e) * scale)
        key = (z, qn)
        coeffs[key] = coeffs.get(key, 0) + c
    return TruncatedSeries(coeffs, window.q_truncation, window.z_truncation, scale)


def zero(window: Window) -> TruncatedSeries:
    return TruncatedSeries({}, window.q_truncation, window.z_truncation, window.q_scale)


def one(window: Window) -> TruncatedSeries:
    return _constant(1, window)


def monomial(
    z_degree: int, q_exponent: QExp, window: Window, coefficient: int = 1
) -> TruncatedSeries:
    return make_series([(z_degree, q_exponent, coefficient)], window)


# ---------------------------------------------------------------------------
# Pochhammer machinery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PochFactor:
    """One Pochhammer base: (sign * z^z_degree * q^q_exponent ; q^modulus).

    sign = +1 encodes the base  z^i q^b  (factors 1 - z^i q^(b+j*m)),
    sign = -1 encodes the base -z^i q^b  (factors 1 + z^i q^(b+j*m)).
    """

    z_degree: int
    q_exponent: Fraction
    sign: int = 1
    modulus: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "q_exponent", _as_fraction(self.q_exponent))
        object.__setattr__(self, "modulus", _as_fraction(self.modulus))
        if self.z_degree < 0:
            raise ValueError("PochFactor z_degree must be nonnegative")
        if self.q_exponent < 0:
            raise ValueError("PochFactor q_exponent must be nonnegative")
        if self.sign not in (1, -1):
            raise ValueError("PochFactor sign must be +1 or -1")
        if self.modulus <= 0:
            raise ValueError("PochFactor modulus must be positive")


def qf(q_exponent: QExp, modulus: QExp, sign: int = 1) -> PochFactor:
    """Pure-q factor base: (sign * q^q_exponent ; q^modulus)."""
    return PochFactor(0, _as_fraction(q_exponent), sign, _as_fraction(modulus))


def zf(z_degree: int, q_exponent: QExp, modulus: QExp, sign: int = 1) -> PochFactor:
    """z-carrying factor base: (sign * z^z_degree q^q_exponent ; q^modulus)."""
    return PochFactor(z_degree, _as_fraction(q_exponent), sign, _as_fraction(modulus))


def _binomial_factor(
    factor: PochFactor, j: int, window: Window, scale: int
) -> TruncatedSeries:
    e = factor.q_exponent + j * factor.modulus
    return TruncatedSeries(
        {(0, 0): 1, (factor.z_degree, int(e * scale)): -factor.sign},
        window.q_truncation,
        window.z_truncation,
        scale,
    )


def _factor_scale(factor: PochFactor, window: Window) -> int:
    return lcm(window.q_scale, factor.q_exponent.denominator, factor.modulus.denominator)


def poch_finite(factor: PochFactor, n: int, window: Window) -> TruncatedSeries:
    """(base; q^modulus)_n = prod_{j=0}^{n-1} (1 - sign z^i q^(b+j*m)).

    Negative n is rejected here; divisions by negative-index symbols follow
    the convention handled by :func:`inv_poch_finite`.
    """
    if n < 0:
        raise ValueError(
            "poch_finite needs n >= 0; for 1/(base;q)_n with n < 0 use inv_poch_finite"
        )
    scale = _factor_scale(factor, window)
    out = TruncatedSeries({(0, 0): 1}, window.q_truncation, window.z_truncation, scale)
    for j in range(n):
        out = out * _binomial_factor(factor, j, window, scale)
    return out


def inv_poch_finite(factor: PochFactor, n: int, window: Window) -> TruncatedSeries:
    """1 / (base; q^modulus)_n, with the convention that it is 0 for n < 0.

    For n >= 0 the factor must start with a unit: a base whose constant
    term is 1 (z_degree = 0, q_exponent = 0, sign = +1) would make the
    product vanish and is rejected.
    """
    if n < 0:
        return zero(window)
    if n == 0:
        return one(window)
    if factor.z_degree == 0 and factor.q_exponent == 0 and factor.sign == 1:
        raise ValueError("cannot invert a Pochhammer factor with vanishing constant term")
    if window.q_truncation is None:
        raise ValueError("inverting a finite Pochhammer symbol needs a finite q_truncation")
    if factor.z_degree > 0 and window.z_truncation is None:
        raise ValueError("inverting a z-carrying Pochhammer symbol needs a finite z_truncation")
    return poch_finite(factor, n, window).invert()


def poch_infinite(factor: PochFactor, window: Window) -> TruncatedSeries:
    """(base; q^modulus)_inf, truncated to the window.

    Only finitely many binomials act inside the window because the modulus
    is positive; a pure-q factor with q_exponent = 0 would contribute the
    divergent-at-origin binomial (1 - sign) infinitely often in spirit and
    is rejected.
    """
    if factor.z_degree == 0 and factor.q_exponent <= 0:
        raise ValueError(
            "divergent-at-origin factor: infinite product needs q_exponent > 0 "
            "or a positive z_degree"
        )
    if window.q_truncation is None:
        raise ValueError("infinite products need a finite q_truncation")
    if factor.z_degree > 0 and window.z_truncation is None:
        raise ValueError("a z-carrying infinite product needs a finite z_truncation")
    scale = _factor_scale(factor, window)
    ncap = Fraction(window.q_truncation)
    out = TruncatedSeries({(0, 0): 1}, window.q_truncation, window.z_truncation, scale)
    j = 0
    while True:
        e = factor.q_exponent + j * factor.modulus
        if factor.z_degree == 0:
            if e >= ncap:
                break
        else:
            # the binomial's lowest new term is z^i q^e; invisible once both
            # caps are passed for every power of it
            if e >= ncap:
                break
        out = out * _binomial_factor(factor, j, window, scale)
        j += 1
    return out


def poch_product(
    numerator: Iterable[PochFactor],
    denominator: Iterable[PochFactor],
    window: Window,
) -> TruncatedSeries:
    """prod (num_i; ...)_inf / prod (den_j; ...)_inf inside the window."""
    out = one(window)
    for f in numerator:
        out = out * poch_infinite(f, window)
    for f in denominator:
        out = out * poch_infinite(f, window).invert()
    return out


def gauss_binomial(n: int, m: int, window: Window) -> TruncatedSeries:
    """The q-binomial coefficient [n choose m]_q inside the window.

    Zero when the pair is out of range (m < 0 or m > n); otherwise
    (q;q)_n / ((q;q)_m (q;q)_{n-m}).
    """
    if m < 0 or m > n:
        return zero(window)
    if window.q_truncation is None:
        # exact polynomial of degree m(n-m): compute in a window just past it
        wide = Window(m * (n - m) + 1, window.z_truncation, window.q_scale)
        res = gauss_binomial(n, m, wide)
        return TruncatedSeries(res.coeffs, None, window.z_truncation, res.q_scale)
    base = qf(1, 1)
    num = poch_finite(base, n, window)
    den = poch_finite(base, m, window) * poch_finite(base, n - m, window)
    return num / den


def theta_sum(b1: QExp, b2: QExp, window: Window) -> TruncatedSeries:
    """sum_{n in Z} (-1)^n q^(b1*n(n+1)/2 + b2*n(n-1)/2), truncated.

    Both triangular directions eventually leave the window because
    b1 + b2 > 0 is required.
    """
    a1, a2 = _as_fraction(b1), _as_fraction(b2)
    if a1 + a2 <= 0:
        raise ValueError("theta_sum needs b1 + b2 > 0 for a convergent exponent")
    if window.q_truncation is None:
        raise ValueError("theta_sum needs a finite q_truncation")
    scale = lcm(window.q_scale, a1.denominator, a2.denominator, 2)
    ncap = Fraction(window.q_truncation)
    # the exponent is a convex quadratic in the summation index with leading
    # coefficient (b1+b2)/2 > 0, so |s| <= S below covers every in-window term
    lead = (a1 + a2) / 2
    slope = max(abs(a1), abs(a2))
    span = 2
    while lead * span * span - slope * span < ncap:
        span += 1
    terms: dict = {}
    for s in range(-span, span + 1):
        e = a1 * Fraction(s * (s + 1), 2) + a2 * Fraction(s * (s - 1), 2)
        if e < 0:
            raise ValueError(
                "theta_sum hit a negative exponent q^%s (index %d); the series "
                "leaves the power-series ring" % (e, s)
            )
        if e >= ncap:
            continue
        key = (0, int(e * scale))
        terms[key] = terms.get(key, 0) + (-1 if s & 1 else 1)
    return TruncatedSeries(terms, window.q_truncation, window.z_truncation, scale)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

_SERIES_SCHEMA = "cylq-series/1"


def series_to_json(s: TruncatedSeries) -> dict:
    """JSON-ready dict; terms are (z_degree, q_numerator, q_scale, coefficient)."""
    return {
        "schema": _SERIES_SCHEMA,
        "q_truncation": s.q_truncation,
        "z_truncation": s.z_truncation,
        "q_scale": s.q_scale,
        "terms": [
            [z, qn, s.q_scale, s.coeffs[(z, qn)]] for (z, qn) in sorted(s.coeffs)
        ],
    }


def series_from_json(payload: dict) -> TruncatedSeries:
    if payload.get("schema") != _SERIES_SCHEMA:
        raise ValueError("not a %s payload" % _SERIES_SCHEMA)
    shared = payload["q_scale"]
    coeffs: dict = {}
    for z, qn, scale, c in payload["terms"]:
        if scale != shared:
            raise ValueError("terms must share the payload q_scale")
        coeffs[(z, qn)] = c
    return TruncatedSeries(
        coeffs, payload["q_truncation"], payload["z_truncation"], shared
    )
