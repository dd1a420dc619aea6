"""Pure diagrams on the Herzog-Kuehl ray of a degree sequence."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from .core import BettiTable, DegreeSequence
from .errors import BadChain, TooLong


@dataclass(frozen=True)
class PureDiagram:
    degree_sequence: DegreeSequence
    normalized_table: BettiTable
    canonical_integer_table: BettiTable
    # canonical = scale * normalized
    scale: Fraction

    @property
    def vars(self) -> int:
        return self.canonical_integer_table.vars

    def canonical_values(self) -> tuple[int, ...]:
        d = self.degree_sequence
        return tuple(int(self.canonical_integer_table.get(i, d[i])) for i in range(len(d)))

    def normalized_values(self) -> tuple[Fraction, ...]:
        d = self.degree_sequence
        return tuple(self.normalized_table.get(i, d[i]) for i in range(len(d)))


def normalized_values(d) -> tuple[Fraction, ...]:
    """``prod_{j != i} 1/|d_j - d_i|`` for each position ``i``."""
    d = tuple(d)
    out = []
    for i, di in enumerate(d):
        denom = 1
        for j, dj in enumerate(d):
            if j != i:
                denom *= abs(dj - di)
        out.append(Fraction(1, denom))
    return tuple(out)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


@lru_cache(maxsize=4096)
def _pure(degrees: tuple, vars: int) -> PureDiagram:
    d = DegreeSequence(degrees)
    if d.r > vars:
        raise TooLong(f"degree sequence {d} has length {len(d)} > vars + 1 = {vars + 1}")
    normalized = normalized_values(degrees)
    lcm = reduce(_lcm, (q.denominator for q in normalized), 1)
    ints = [q.numerator * (lcm // q.denominator) for q in normalized]
    g = reduce(math.gcd, ints)
    scale = Fraction(lcm, g)
    norm_table = BettiTable(vars, {(i, di): q for i, (di, q) in enumerate(zip(degrees, normalized))})
    canon_table = BettiTable(vars, {(i, di): v // g for i, (di, v) in enumerate(zip(degrees, ints))})
    return PureDiagram(d, norm_table, canon_table, scale)


def pure_diagram(d, vars: int | None = None) -> PureDiagram:
    """Pure diagram of type ``d`` over a ring with ``vars`` variables.

    ``vars`` defaults to the smallest admissible value, ``max(len(d) - 1, 1)``.
    Raises :class:`TooLong` if ``len(d) - 1 > vars``.
    """
    degrees = tuple(d)
    if vars is None:
        vars = max(len(degrees) - 1, 1)
    return _pure(degrees, int(vars))


def herzog_kuhl_residuals(pi: PureDiagram) -> list[Fraction]:
    """Signed moments ``sum_i (-1)^i beta_{i,d_i} d_i^s`` for ``s < r``.

    All of them are zero for a genuine pure diagram: they are the first ``r``
    derivatives (in the falling-factorial basis) of the Hilbert numerator at
    ``t = 1``.
    """
    d = pi.degree_sequence
    values = pi.canonical_values()
    return [
        sum((Fraction((-1) ** i * v) * d[i] ** s for i, v in enumerate(values)), Fraction(0))
        for s in range(d.r)
    ]


def _differences(a: tuple, c: tuple) -> list[int]:
    # positions where the infinity-padded sequences differ
    n = max(len(a), len(c))
    pad = lambda x, i: x[i] if i < len(x) else None  # noqa: E731
    return [i for i in range(n) if pad(a, i) != pad(c, i)]


def facet_identity_sequences(a, c, tau: int, k: int):
    """The two mixed sequences ``b`` (a with ``c_k``) and ``b'`` (c with ``a_k``).

    ``a_k`` may be infinite (``k == len(a)``), in which case ``b'`` is ``c``
    truncated before position ``k``.
    """
    a, c = tuple(a), tuple(c)
    if not 0 <= tau < k:
        raise BadChain(f"need 0 <= tau < k, got tau={tau}, k={k}")
    if _differences(a, c) != [tau, k]:
        raise BadChain(f"{a} and {c} must differ exactly in positions {tau} and {k}")
    if k >= len(c):
        raise BadChain("c_k must be finite")
    if k > len(a):
        raise BadChain("a may be infinite only from position k on")
    b = list(a[:k]) + [c[k]] + list(a[k + 1:])
    b_prime = list(c)
    if k < len(a):
        b_prime[k] = a[k]
    else:
        b_prime = b_prime[:k]
    b = tuple(b)
    b_prime = tuple(b_prime)
    for name, seq in (("b", b), ("b'", b_prime)):
        if any(x >= y for x, y in zip(seq, seq[1:])):
            raise BadChain(f"mixed sequence {name}={seq} is not strictly increasing")
    return b, b_prime


def facet_identity_check(a, b, b_prime, c, tau: int, k: int) -> bool:
    """Check the four-term relation among pure diagrams of a, b, b', c.

    With finite ``a_k`` it reads
    ``(a_k-a_tau) beta(a) + (c_k-c_tau) beta(c) = (c_k-a_tau) beta(b) + (a_k-c_tau) beta(b')``
    on normalized diagrams; when ``a`` is shorter than ``c`` (``a_k`` infinite)
    the coefficients involving ``a_k`` are replaced by 1.  ``b`` and ``b'``
    may be passed as ``None`` to have them constructed.
    """
    a, c = tuple(a), tuple(c)
    want_b, want_bp = facet_identity_sequences(a, c, tau, k)
    if b is not None and tuple(b) != want_b:
        raise BadChain(f"b must be {want_b}, got {tuple(b)}")
    if b_prime is not None and tuple(b_prime) != want_bp:
        raise BadChain(f"b' must be {want_bp}, got {tuple(b_prime)}")
    b, b_prime = want_b, want_bp
    vars = max(len(x) for x in (a, b, b_prime, c)) - 1 or 1

    def beta(d):
        return pure_diagram(d, vars).normalized_table

    if k < len(a):
        lhs = beta(a).scale(a[k] - a[tau]) + beta(c).scale(c[k] - c[tau])
        rhs = beta(b).scale(c[k] - a[tau]) + beta(b_prime).scale(a[k] - c[tau])
    else:
        lhs = beta(a) + beta(c).scale(c[k] - c[tau])
        rhs = beta(b).scale(c[k] - a[tau]) + beta(b_prime)
    return lhs == rhs
