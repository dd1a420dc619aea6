"""Supernatural cohomology tables and their pairing with Betti tables.

A supernatural table on ``P^m`` is stored symbolically as its root sequence
``z_1 > ... > z_m`` and a rank; ``gamma(j, k)`` is evaluated on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from .core import BettiTable, ChainTriple, DegreeSequence, as_rational
from .errors import BadChain
from .pure import pure_diagram

INF = math.inf


@dataclass(frozen=True)
class SupernaturalTable:
    roots: tuple
    rank: Fraction

    def __init__(self, roots, rank=None):
        roots = tuple(int(z) for z in roots)
        if any(x <= y for x, y in zip(roots, roots[1:])):
            raise ValueError(f"roots {roots} must be strictly decreasing")
        rank = default_rank(roots) if rank is None else as_rational(rank)
        if rank <= 0:
            raise ValueError("rank must be positive")
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "rank", rank)

    @property
    def dim(self) -> int:
        return len(self.roots)

    def euler(self, k: int) -> Fraction:
        """Hilbert polynomial ``rank/m! * prod (k - z_j)``."""
        p = 1
        for z in self.roots:
            p *= k - z
        return self.rank * p / math.factorial(self.dim)

    def gamma(self, j: int, k: int) -> Fraction:
        return supernatural_gamma(self, j, k)

    def row(self, k: int) -> int | None:
        """The unique ``j`` with ``gamma(j, k) != 0``, or ``None`` at a root."""
        bounds = (INF,) + self.roots + (-INF,)
        for j in range(self.dim + 1):
            if bounds[j] > k > bounds[j + 1]:
                return j
        return None

    def grid(self, kmin: int, kmax: int) -> dict[tuple[int, int], Fraction]:
        return {(j, k): self.gamma(j, k) for j in range(self.dim + 1) for k in range(kmin, kmax + 1)}


def default_rank(roots) -> Fraction:
    """Smallest rank making ``euler`` integer valued with coprime values.

    The gcd of an integer-valued polynomial of degree ``m`` over all integers
    equals the gcd of its values at any ``m + 1`` consecutive integers.
    """
    m = len(roots)
    values = []
    for k in range(m + 1):
        p = 1
        for z in roots:
            p *= k - z
        values.append(p)
    g = reduce(math.gcd, values)
    return Fraction(math.factorial(m), g)


@lru_cache(maxsize=1 << 16)
def _nonzero_entry(T: SupernaturalTable, k: int):
    row = T.row(k)
    return row, (abs(T.euler(k)) if row is not None else Fraction(0))


def supernatural_gamma(T: SupernaturalTable, j: int, k: int) -> Fraction:
    """``h^j(E(k))``: ``|euler(k)|`` when ``z_j > k > z_{j+1}``, else 0."""
    row, value = _nonzero_entry(T, k)
    return value if row == j else Fraction(0)


# ---------------------------------------------------------------------------
# pairings


@dataclass(frozen=True)
class TruncationSpec:
    tau: int
    kappa: float | int = INF  # INF means no cutoff


def pairing(beta: BettiTable, T: SupernaturalTable) -> Fraction:
    """``sum_{i >= j} (-1)^(i-j) sum_k beta_{i,k} gamma_{j,-k}``."""
    total = Fraction(0)
    for (i, k), b in beta.items():
        # natural cohomology: at most one row j is nonzero at twist -k
        j, g = _nonzero_entry(T, -k)
        if j is not None and j <= i:
            total += b * g if (i - j) % 2 == 0 else -b * g
    return total


def _kept(spec: TruncationSpec, i: int, j: int, k: int) -> bool:
    if i == j:
        return j < spec.tau or (j == spec.tau and k <= spec.kappa)
    if i == j + 1:
        return j < spec.tau or (j == spec.tau and k <= spec.kappa + 1)
    return True


def truncated_coefficient(T: SupernaturalTable, spec: TruncationSpec, i: int, k: int) -> Fraction:
    """Coefficient of ``beta_{i,k}`` in the truncated functional.

    Diagonal terms survive for ``j < tau`` and for ``j == tau, k <= kappa``;
    superdiagonal terms for ``j < tau`` and for ``j == tau, k <= kappa + 1``;
    terms with ``i - j >= 2`` are never truncated.
    """
    j, g = _nonzero_entry(T, -k)
    if j is None or j > i or not _kept(spec, i, j, k):
        return Fraction(0)
    return g if (i - j) % 2 == 0 else -g


def truncated_pairing(beta: BettiTable, T: SupernaturalTable, spec: TruncationSpec) -> Fraction:
    total = Fraction(0)
    for (i, k), b in beta.items():
        c = truncated_coefficient(T, spec, i, k)
        if c:
            total += b * c
    return total


# ---------------------------------------------------------------------------
# facet functionals


def _at(seq, i):
    return seq[i] if i < len(seq) else INF


def _differing_positions(a, c) -> list[int]:
    return [i for i in range(max(len(a), len(c))) if _at(a, i) != _at(c, i)]


def _two_position_data(chain: ChainTriple) -> int:
    """Validate the two-position outer-face pattern and return ``tau``."""
    a, b, c = chain.a.degrees, chain.b.degrees, chain.c.degrees
    diff = _differing_positions(a, c)
    if len(diff) != 2 or diff[1] != diff[0] + 1:
        raise BadChain(f"{a} and {c} must differ in two consecutive positions, differ at {diff}")
    tau = diff[0]
    if tau + 1 >= len(c):
        raise BadChain("c must be finite at position tau + 1")
    if not _at(a, tau) >= c[tau + 1]:
        raise BadChain(f"a_tau = {_at(a, tau)} < c_(tau+1) = {c[tau + 1]}: not an outer face")
    want_b = list(a[:tau]) + [c[tau]] + ([a[tau + 1]] if tau + 1 < len(a) else []) + list(a[tau + 2:])
    if tuple(want_b) != b:
        raise BadChain(f"b must agree with c at {tau} and with a at {tau + 1}: expected {tuple(want_b)}, got {b}")
    return tau


def normalize_chain(chain: ChainTriple) -> ChainTriple:
    """Move ``a``, ``b``, ``c`` next to each other around ``c_{tau+1}``.

    Positions ``tau, tau+1`` become ``(c', c'+1)``, ``(c'-1, c'+1)`` and
    ``(c'-1, c')`` with ``c' = c_{tau+1}``; the common prefix and tail are kept.
    """
    tau = _two_position_data(chain)
    c = chain.c.degrees
    prefix = c[:tau]
    tail = c[tau + 2:]
    x = c[tau + 1]
    return ChainTriple(
        prefix + (x, x + 1) + tail,
        prefix + (x - 1, x + 1) + tail,
        prefix + (x - 1, x) + tail,
    )


@dataclass(frozen=True)
class FacetFunctional:
    """Linear functional vanishing on ``a`` and ``c`` and positive on ``b``.

    Either a truncated pairing (``table``/``trunc`` set) or, in the
    one-position case, the coordinate functional ``beta -> beta[coordinate]``.
    """

    provenance: ChainTriple
    table: SupernaturalTable | None = None
    trunc: TruncationSpec | None = None
    coordinate: tuple | None = None

    def __call__(self, beta: BettiTable) -> Fraction:
        return self.evaluate(beta)

    def evaluate(self, beta: BettiTable) -> Fraction:
        if self.coordinate is not None:
            return beta.get(*self.coordinate)
        return truncated_pairing(beta, self.table, self.trunc)

    def coefficient(self, i: int, k: int) -> Fraction:
        if self.coordinate is not None:
            return Fraction(int((i, k) == self.coordinate))
        return truncated_coefficient(self.table, self.trunc, i, k)


def facet_functional(chain: ChainTriple, vars: int) -> FacetFunctional:
    """Functional cutting out the face of the cone opposite ``chain.b``."""
    a, b, c = chain.a.degrees, chain.b.degrees, chain.c.degrees
    if max(len(a), len(b), len(c)) - 1 > vars:
        raise BadChain(f"chain needs more than {vars} variables")
    diff = _differing_positions(a, c)
    if len(diff) == 1:
        tau = diff[0]
        if tau >= len(b):
            raise BadChain("b must be finite at the differing position")
        if _differing_positions(a, b) != [tau] or _differing_positions(b, c) != [tau]:
            raise BadChain("b must differ from a and from c only at the same position")
        F = FacetFunctional(chain, coordinate=(tau, b[tau]))
    else:
        normal = normalize_chain(chain)
        tau = _two_position_data(chain)
        nb = normal.b.degrees
        roots = tuple(-d for d in nb[:tau] + nb[tau + 2:])
        T = SupernaturalTable(roots)
        F = FacetFunctional(chain, T, TruncationSpec(tau, normal.c[tau + 1] - 1))
    for d, want in ((a, "zero"), (c, "zero"), (b, "positive")):
        v = F(pure_diagram(d, vars).canonical_integer_table)
        if (want == "zero" and v != 0) or (want == "positive" and v <= 0):
            raise AssertionError(f"facet functional is {v} on {d}, expected {want}")
    return F
