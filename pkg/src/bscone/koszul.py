"""Betti tables of monomial quotients ``S/I`` from multigraded Koszul homology.

``beta_{i,b}(S/I) = dim H_i(K(x_1..x_n) (x) S/I)_b``.  In multidegree ``b`` the
Koszul strand has basis ``e_F (x) x^(b - F)`` for squarefree ``F <= b`` with
``x^(b - F)`` outside ``I``, and the differential sends
``e_F (x) m`` to ``sum_{j in F} (-1)^pos e_{F - j} (x) x_j m`` (terms landing
in ``I`` vanish).
"""

from __future__ import annotations

import itertools
import math
import random
import re
from dataclasses import dataclass

from .core import BettiTable
from .errors import TooLarge
from .linalg import ExactMatrix

MAX_VARS = 5
MAX_DEGREE = 8
MAX_ENUMERATION = 10**6


def _divides(g, m) -> bool:
    return all(x <= y for x, y in zip(g, m))


def minimalize(gens) -> tuple:
    """Drop generators divisible by another; result sorted and duplicate free."""
    gens = sorted(set(tuple(g) for g in gens), key=lambda g: (sum(g), g))
    out = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out))


@dataclass(frozen=True)
class MonomialIdeal:
    vars: int
    generators: tuple

    def __init__(self, vars: int, generators):
        gens = [tuple(int(x) for x in g) for g in generators]
        if vars < 1:
            raise ValueError("need at least one variable")
        for g in gens:
            if len(g) != vars:
                raise ValueError(f"exponent vector {g} does not have {vars} entries")
            if any(x < 0 for x in g):
                raise ValueError(f"negative exponent in {g}")
            if not any(g):
                raise ValueError("the unit ideal is not supported (S/I = 0)")
        object.__setattr__(self, "vars", int(vars))
        object.__setattr__(self, "generators", minimalize(gens))

    def contains(self, m) -> bool:
        return any(_divides(g, m) for g in self.generators)

    def lcm(self) -> tuple:
        if not self.generators:
            return (0,) * self.vars
        return tuple(max(col) for col in zip(*self.generators))

    def max_degree(self) -> int:
        return max((sum(g) for g in self.generators), default=0)


def parse_ideal(text: str, names) -> MonomialIdeal:
    """Parse ``"x^2,x*y,x*z^2"`` over the variables ``names``."""
    names = list(names)
    index = {v: i for i, v in enumerate(names)}
    gens = []
    for mono in (m.strip() for m in text.split(",")):
        if not mono:
            continue
        exps = [0] * len(names)
        for token in mono.split("*"):
            token = token.strip()
            m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?", token)
            if not m or m.group(1) not in index:
                raise ValueError(f"bad monomial token {token!r} in {mono!r}")
            exps[index[m.group(1)]] += int(m.group(2) or 1)
        gens.append(exps)
    return MonomialIdeal(len(names), gens)


def format_monomial(exps, names) -> str:
    parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(names, exps) if e]
    return "*".join(parts) or "1"


def _koszul_strand(I: MonomialIdeal, b) -> dict[int, list]:
    support = [j for j, e in enumerate(b) if e > 0]
    basis = {}
    for size in range(len(support) + 1):
        cells = []
        for F in itertools.combinations(support, size):
            m = list(b)
            for j in F:
                m[j] -= 1
            if not I.contains(m):
                cells.append(F)
        basis[size] = cells
    return basis


def _boundary(I: MonomialIdeal, b, source, target) -> ExactMatrix:
    index = {F: r for r, F in enumerate(target)}
    rows = [[0] * len(source) for _ in target]
    for c, F in enumerate(source):
        for pos, j in enumerate(F):
            face = F[:pos] + F[pos + 1:]
            r = index.get(face)
            if r is not None:
                rows[r][c] = (-1) ** pos
    return ExactMatrix(rows, target, source) if rows else ExactMatrix([], target, source)


def multidegree_betti(I: MonomialIdeal, b, method: str = "bareiss") -> dict[int, int]:
    """Nonzero Koszul homology ranks ``{i: dim H_i}`` in multidegree ``b``."""
    basis = _koszul_strand(I, b)
    top = max(basis)
    ranks = {}
    for i in range(1, top + 1):
        if basis[i] and basis[i - 1]:
            ranks[i] = _boundary(I, b, basis[i], basis[i - 1]).rank(method)
        else:
            ranks[i] = 0
    out = {}
    for i in range(top + 1):
        h = len(basis[i]) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        if h:
            out[i] = h
    return out


def betti_table(I: MonomialIdeal, max_vars: int = MAX_VARS, max_degree: int = MAX_DEGREE,
                method: str = "bareiss") -> BettiTable:
    """Minimal graded Betti table of ``S/I`` over the rationals."""
    if I.vars > max_vars:
        raise TooLarge(f"{I.vars} variables exceeds the bound {max_vars}")
    if I.max_degree() > max_degree:
        raise TooLarge(f"generator degree {I.max_degree()} exceeds the bound {max_degree}")
    entries = {(0, 0): 1}
    lcm = I.lcm()
    for b in itertools.product(*(range(e + 1) for e in lcm)):
        # x^b outside I makes the strand a full simplex: acyclic unless b = 0
        if not any(b) or not I.contains(b):
            continue
        j = sum(b)
        for i, h in multidegree_betti(I, b, method).items():
            entries[i, j] = entries.get((i, j), 0) + h
    return BettiTable(I.vars, entries)


def standard_monomial_count(I: MonomialIdeal, k: int, limit: int = MAX_ENUMERATION) -> int:
    """Number of degree-``k`` monomials not in ``I``, by enumeration."""
    if k < 0:
        return 0
    total = math.comb(k + I.vars - 1, I.vars - 1)
    if total > limit:
        raise TooLarge(f"{total} monomials of degree {k} exceeds the enumeration limit {limit}")
    count = 0
    for combo in itertools.combinations_with_replacement(range(I.vars), k):
        m = [0] * I.vars
        for v in combo:
            m[v] += 1
        if not I.contains(m):
            count += 1
    return count


def random_ideal(seed, n: int, max_gens: int, max_deg: int) -> MonomialIdeal:
    """Deterministic random monomial ideal with 1..max_gens generators of degree 1..max_deg."""
    if n < 1 or max_gens < 1 or max_deg < 1:
        raise ValueError("n, max_gens and max_deg must be positive")
    rng = random.Random(seed)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        deg = rng.randint(1, max_deg)
        exps = [0] * n
        for _ in range(deg):
            exps[rng.randrange(n)] += 1
        gens.append(exps)
    return MonomialIdeal(n, gens)
