"""Greedy decomposition of a Betti table along a chain of pure diagrams."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import BettiTable, DegreeSequence, Ordering, compare_sequences, table_axpy
from .errors import ColumnGap, DomainError, NotInCone, NotIncreasing
from .pure import PureDiagram, pure_diagram


@dataclass(frozen=True)
class Part:
    coefficient: Fraction
    diagram: PureDiagram

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.diagram.degree_sequence.degrees

    @property
    def normalized_coefficient(self) -> Fraction:
        """Coefficient against the ``prod 1/|d_j - d_i|`` normalization."""
        return self.coefficient * self.diagram.scale

    def table(self) -> BettiTable:
        return self.diagram.canonical_integer_table.scale(self.coefficient)


@dataclass(frozen=True)
class Decomposition:
    parts: tuple
    source: BettiTable

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def reconstruct(self) -> BettiTable:
        total = BettiTable(self.source.vars)
        for p in self.parts:
            total = table_axpy(total, p.coefficient, p.diagram.canonical_integer_table)
        return total

    def summary(self) -> list[tuple[Fraction, tuple[int, ...]]]:
        return [(p.coefficient, p.degrees) for p in self.parts]


def top_degree_sequence(beta: BettiTable) -> DegreeSequence:
    """Lowest internal degree in each nonzero column ``0..p``."""
    if not beta:
        raise ColumnGap("empty table has no top degree sequence")
    cols = beta.columns()
    if cols != list(range(len(cols))):
        raise ColumnGap(f"nonzero columns {cols} are not contiguous from 0")
    tops = []
    for i in cols:
        tops.append(min(beta.column(i)))
    for lo, hi in zip(tops, tops[1:]):
        if lo >= hi:
            raise NotIncreasing(f"top degrees {tuple(tops)} are not strictly increasing")
    return DegreeSequence(tops)


def greedy_step(beta: BettiTable):
    """Subtract the largest multiple of the top pure diagram that keeps ``beta >= 0``.

    Returns ``(q, diagram, remainder)`` with ``q`` measured against the
    canonical integer diagram.
    """
    d = top_degree_sequence(beta)
    pi = pure_diagram(d, beta.vars)
    q = min(beta.get(i, di) / pi.canonical_integer_table.get(i, di) for i, di in enumerate(d))
    remainder = table_axpy(beta, -q, pi.canonical_integer_table)
    return q, pi, remainder


def decompose(beta: BettiTable) -> Decomposition:
    """Write ``beta`` as a positive combination of pure diagrams on a chain.

    Raises :class:`NotInCone` (carrying the partial decomposition and the
    stalled remainder) when some remainder has no valid top degree sequence.
    """
    parts = []
    remainder = beta
    cap = len(beta) + 1
    while remainder:
        if len(parts) >= cap:
            raise AssertionError("greedy decomposition exceeded its iteration bound")
        try:
            q, pi, remainder = greedy_step(remainder)
        except DomainError as exc:
            raise NotInCone(f"table is not in the cone: {exc}", parts, remainder) from exc
        parts.append(Part(q, pi))
    result = Decomposition(tuple(parts), beta)
    ok, problems = verify_decomposition(result)
    if not ok:
        raise AssertionError("greedy decomposition failed its own check: " + "; ".join(problems))
    return result


def verify_decomposition(D: Decomposition) -> tuple[bool, list[str]]:
    """Re-check chain order, positivity and exact re-summation."""
    problems = []
    for n, p in enumerate(D.parts):
        if p.coefficient <= 0:
            problems.append(f"part {n} has non-positive coefficient {p.coefficient}")
    for n, (p, p2) in enumerate(zip(D.parts, D.parts[1:])):
        order = compare_sequences(p.degrees, p2.degrees)
        if order is not Ordering.LESS:
            problems.append(f"parts {n}, {n + 1}: {p.degrees} {order.value} {p2.degrees}, expected <")
    if not problems:
        try:
            rebuilt = D.reconstruct()
        except DomainError as exc:
            problems.append(f"reconstruction failed: {exc}")
        else:
            if rebuilt != D.source:
                problems.append("parts do not sum to the source table")
    return not problems, problems
