"""Hilbert numerators, Hilbert functions, multiplicity and shift bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import BettiTable, rational_str
from .decompose import decompose
from .errors import NotDegreeZero
from .pure import pure_diagram


@dataclass(frozen=True)
class HilbertNumerator:
    """Laurent polynomial ``sum (-1)^i beta_{i,j} t^j`` as ``{exponent: coeff}``."""

    coefficients: dict
    vars: int

    def __call__(self, t) -> Fraction:
        return sum((c * Fraction(t) ** e for e, c in self.coefficients.items()), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coefficients

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for e, c in sorted(self.coefficients.items()):
            mag = abs(c)
            if e == 0:
                body = rational_str(mag)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if mag == 1 else f"{rational_str(mag)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def hilbert_numerator(beta: BettiTable) -> HilbertNumerator:
    coeffs = {}
    for (i, j), b in beta.items():
        coeffs[j] = coeffs.get(j, Fraction(0)) + (-1) ** i * b
    return HilbertNumerator({e: c for e, c in sorted(coeffs.items()) if c != 0}, beta.vars)


def _divide_by_one_minus_t(poly: dict) -> dict | None:
    """Exact quotient of a Laurent polynomial by ``1 - t``, or None if it does not divide."""
    if sum(poly.values()) != 0:
        return None
    lo, hi = min(poly), max(poly)
    # q_e = sum_{f <= e} p_f, for lo <= e < hi
    out = {}
    running = Fraction(0)
    for e in range(lo, hi):
        running += poly.get(e, 0)
        if running != 0:
            out[e] = running
    return out


def _split_at_one(beta: BettiTable) -> tuple[int, dict]:
    """``(s, Q)`` with ``N(t) = (1 - t)^s Q(t)`` and ``Q(1) != 0``."""
    poly = dict(hilbert_numerator(beta).coefficients)
    if not poly:
        raise ValueError("zero Hilbert numerator has no finite vanishing order")
    s = 0
    while True:
        q = _divide_by_one_minus_t(poly)
        if q is None:
            return s, poly
        poly = q
        s += 1


def codimension(beta: BettiTable) -> int:
    """Order of vanishing of the Hilbert numerator at ``t = 1``."""
    return _split_at_one(beta)[0]


def multiplicity(beta: BettiTable) -> Fraction:
    _, q = _split_at_one(beta)
    return sum(q.values(), Fraction(0))


def binomial(m: int, k: int) -> int:
    """Combinatorial binomial: zero unless ``0 <= k <= m``."""
    if k < 0 or m < k:
        return 0
    return math.comb(m, k)


def hilbert_function(beta: BettiTable, k: int) -> Fraction:
    n = beta.vars
    return sum(
        ((-1) ** i * b * binomial(k - j + n - 1, n - 1) for (i, j), b in beta.items()),
        Fraction(0),
    )


def hilbert_series(beta: BettiTable, K: int, start: int = 0) -> list[Fraction]:
    return [hilbert_function(beta, k) for k in range(start, K + 1)]


# ---------------------------------------------------------------------------
# bounds


@dataclass(frozen=True)
class ShiftBounds:
    minimal: tuple
    maximal: tuple
    projective_dimension: int
    codimension: int


def shift_bounds(beta: BettiTable) -> ShiftBounds:
    cols = beta.columns()
    r = cols[-1]
    s = codimension(beta)
    lo = tuple(min(beta.column(i)) for i in range(r + 1))
    hi = tuple(max(beta.column(i)) for i in range(s + 1))
    return ShiftBounds(lo, hi, r, s)


@dataclass(frozen=True)
class BoundsReport:
    multiplicity: Fraction
    bound: Fraction
    bound_holds: bool
    equality: bool
    pure: bool
    parts: int
    window: int
    series_lower_ok: bool
    series_upper_ok: bool
    shifts: ShiftBounds

    def lines(self) -> list[str]:
        sh = self.shifts
        return [
            f"minimal shifts: {sh.minimal}",
            f"maximal shifts: {sh.maximal}",
            f"projective dimension: {sh.projective_dimension}, codimension: {sh.codimension}",
            f"multiplicity {rational_str(self.multiplicity)} <= bound {rational_str(self.bound)}: "
            + ("holds" if self.bound_holds else "VIOLATED")
            + (" (equality)" if self.equality else " (strict)"),
            f"pure: {self.pure}, decomposition parts: {self.parts}",
            f"Hilbert series window k in [0, {self.window}]: lower bound "
            + ("ok" if self.series_lower_ok else "VIOLATED")
            + ", upper bound "
            + ("ok" if self.series_upper_ok else "VIOLATED"),
        ]


def _normalized_pure_table(d, vars: int) -> BettiTable:
    # pure table on the ray of d scaled so that beta_{0,0} = 1
    pi = pure_diagram(d, vars)
    return pi.normalized_table.scale(1 / pi.normalized_table.get(0, d[0]))


def multiplicity_bounds_check(beta: BettiTable, window: int | None = None) -> BoundsReport:
    """Compare ``beta`` against pure tables on its minimal and maximal shifts.

    The multiplicity is compared with ``beta_00 * b_1 ... b_s / s!`` and the
    normalized Hilbert series with those of the pure tables of the minimal
    shifts (all columns) and the maximal shifts (first ``s + 1`` columns),
    coefficientwise for ``0 <= k <= window``.  ``window`` defaults to the
    largest shift plus ``2 * vars``.
    """
    b00 = beta.get(0, 0)
    if b00 == 0 or beta.column(0).keys() != {0}:
        raise NotDegreeZero("table must be generated in degree 0 (column 0 = {beta_00})")
    D = decompose(beta)
    sh = shift_bounds(beta)
    s = sh.codimension
    mult = multiplicity(beta)
    bound = b00 * Fraction(math.prod(sh.maximal[1:]), math.factorial(s))
    if window is None:
        window = max(j for _, j in beta) + 2 * beta.vars
    lower = _normalized_pure_table(sh.minimal, beta.vars)
    upper = _normalized_pure_table(sh.maximal, beta.vars)
    lower_ok = upper_ok = True
    for k in range(window + 1):
        h = hilbert_function(beta, k) / b00
        lower_ok &= hilbert_function(lower, k) <= h
        upper_ok &= h <= hilbert_function(upper, k)
    return BoundsReport(
        multiplicity=mult,
        bound=bound,
        bound_holds=mult <= bound,
        equality=mult == bound,
        pure=beta.is_pure(),
        parts=len(D),
        window=window,
        series_lower_ok=lower_ok,
        series_upper_ok=upper_ok,
        shifts=sh,
    )
