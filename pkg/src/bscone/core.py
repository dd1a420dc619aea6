"""Exact scalars, sparse Betti tables and degree sequences."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import BadChain, NegativeEntry

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction.

    Floats are rejected: nothing in the pipeline is allowed to be inexact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {value!r} to an exact rational")


def format_rational(q: Fraction):
    """JSON form of a rational: a bare int when integral, else ``"num/den"``."""
    q = Fraction(q)
    if q.denominator == 1:
        return q.numerator
    return f"{q.numerator}/{q.denominator}"


def rational_str(q: Fraction) -> str:
    return str(format_rational(q))


# ---------------------------------------------------------------------------
# degree sequences


class Ordering(enum.Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"
    INCOMPARABLE = "||"


@dataclass(frozen=True)
class DegreeSequence:
    """Strictly increasing integer tuple ``(d_0, ..., d_r)``.

    Comparison operators implement the partial order in which a sequence is
    padded with infinities on the right: ``d <= e`` iff ``d`` is at least as
    long as ``e`` and ``d_i <= e_i`` wherever ``e`` is defined.  Use
    :func:`compare_sequences` to distinguish incomparable pairs.
    """

    degrees: tuple

    def __init__(self, degrees: Iterable[int]):
        degrees = tuple(int(d) for d in degrees)
        if not degrees:
            raise ValueError("a degree sequence needs at least one entry")
        for lo, hi in zip(degrees, degrees[1:]):
            if lo >= hi:
                raise ValueError(f"degree sequence {degrees} is not strictly increasing")
        object.__setattr__(self, "degrees", degrees)

    @property
    def r(self) -> int:
        return len(self.degrees) - 1

    def __len__(self):
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    def __repr__(self):
        return f"DegreeSequence({self.degrees})"

    def __str__(self):
        return "(" + ",".join(str(d) for d in self.degrees) + ")"

    def __le__(self, other):
        return compare_sequences(self, other) in (Ordering.LESS, Ordering.EQUAL)

    def __lt__(self, other):
        return compare_sequences(self, other) is Ordering.LESS

    def __ge__(self, other):
        return compare_sequences(self, other) in (Ordering.GREATER, Ordering.EQUAL)

    def __gt__(self, other):
        return compare_sequences(self, other) is Ordering.GREATER


def _leq(d, e) -> bool:
    if len(d) < len(e):
        return False
    return all(d[i] <= e[i] for i in range(len(e)))


def compare_sequences(d, e) -> Ordering:
    """Compare two degree sequences in the infinity-padded termwise order."""
    d = tuple(d)
    e = tuple(e)
    if d == e:
        return Ordering.EQUAL
    if _leq(d, e):
        return Ordering.LESS
    if _leq(e, d):
        return Ordering.GREATER
    return Ordering.INCOMPARABLE


@dataclass(frozen=True)
class ChainTriple:
    """Three degree sequences with ``a > b > c``."""

    a: DegreeSequence
    b: DegreeSequence
    c: DegreeSequence

    def __init__(self, a, b, c):
        a, b, c = (x if isinstance(x, DegreeSequence) else DegreeSequence(x) for x in (a, b, c))
        if not (compare_sequences(a, b) is Ordering.GREATER and compare_sequences(b, c) is Ordering.GREATER):
            raise BadChain(f"expected a > b > c, got {a} , {b} , {c}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)


# ---------------------------------------------------------------------------
# Betti tables


class BettiTable:
    """Finite sparse table of positive rationals ``beta[i, j]``.

    ``i`` is the homological degree (``0 <= i <= vars``), ``j`` the internal
    degree.  Zero entries are never stored; lookups of absent keys give 0.
    Instances are immutable and hashable.
    """

    __slots__ = ("_vars", "_entries", "_hash")

    def __init__(self, vars: int, entries: Mapping | Iterable = ()):
        # entries: {(i, j): value} or an iterable of (i, j, value) triples
        if int(vars) != vars or vars < 1:
            raise ValueError(f"ambient variable count must be a positive integer, got {vars!r}")
        if isinstance(entries, Mapping):
            items = entries.items()
        else:
            items = (((i, j), v) for i, j, v in entries)
        store = {}
        for key, value in items:
            i, j = (int(x) for x in key)
            q = as_rational(value)
            if q < 0:
                raise NegativeEntry(f"entry ({i},{j}) = {q} is negative")
            if not 0 <= i <= vars:
                raise ValueError(f"homological degree {i} outside 0..{vars}")
            if q == 0:
                continue
            if (i, j) in store:
                raise ValueError(f"duplicate entry ({i},{j})")
            store[i, j] = q
        self._vars = int(vars)
        self._entries = dict(sorted(store.items()))
        self._hash = None

    @property
    def vars(self) -> int:
        return self._vars

    def __getitem__(self, key) -> Fraction:
        return self._entries.get(tuple(key), Fraction(0))

    def get(self, i: int, j: int) -> Fraction:
        return self._entries.get((i, j), Fraction(0))

    def items(self):
        """``((i, j), value)`` pairs sorted by ``(i, j)``."""
        return self._entries.items()

    def support(self) -> frozenset:
        return frozenset(self._entries)

    def columns(self) -> list[int]:
        return sorted({i for i, _ in self._entries})

    def column(self, i: int) -> dict[int, Fraction]:
        return {j: q for (ii, j), q in self._entries.items() if ii == i}

    def __len__(self):
        return len(self._entries)

    def __iter__(self) -> Iterator:
        return iter(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self._vars == other._vars and self._entries == other._entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vars, tuple(self._entries.items())))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"({i},{j}): {rational_str(q)}" for (i, j), q in self.items())
        return f"BettiTable(vars={self._vars}, {{{body}}})"

    def __str__(self):
        return render_table(self)

    def scale(self, q) -> BettiTable:
        q = as_rational(q)
        if q < 0:
            raise NegativeEntry(f"negative scale {q}")
        return BettiTable(self._vars, {k: q * v for k, v in self.items()})

    def __add__(self, other: BettiTable) -> BettiTable:
        return table_axpy(self, 1, other)

    def with_vars(self, vars: int) -> BettiTable:
        return BettiTable(vars, self._entries)

    def is_pure(self) -> bool:
        cols = [i for i, _ in self._entries]
        return len(cols) == len(set(cols))


def table_get(beta: BettiTable, i: int, j: int) -> Fraction:
    return beta.get(i, j)


def table_axpy(beta: BettiTable, q, pi: BettiTable) -> BettiTable:
    """Return ``beta + q * pi`` exactly, dropping entries that become zero.

    Raises :class:`NegativeEntry` if any entry of the result is negative.
    """
    if beta.vars != pi.vars:
        raise ValueError(f"ambient variable mismatch: {beta.vars} vs {pi.vars}")
    q = as_rational(q)
    out = dict(beta.items())
    if q != 0:
        for key, v in pi.items():
            out[key] = out.get(key, Fraction(0)) + q * v
    bad = [(k, v) for k, v in out.items() if v < 0]
    if bad:
        (i, j), v = bad[0]
        raise NegativeEntry(f"entry ({i},{j}) would become {v}")
    return BettiTable(beta.vars, out)


# ---------------------------------------------------------------------------
# serialization


def table_to_json(beta: BettiTable) -> dict:
    return {
        "vars": beta.vars,
        "entries": [[i, j, format_rational(q)] for (i, j), q in beta.items()],
    }


def table_from_json(obj) -> BettiTable:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "vars" not in obj or "entries" not in obj:
        raise ValueError('Betti table JSON must be an object with "vars" and "entries"')
    entries = {}
    for row in obj["entries"]:
        if len(row) != 3:
            raise ValueError(f"entry {row!r} is not [i, j, value]")
        i, j, v = row
        if isinstance(i, bool) or isinstance(j, bool) or not isinstance(i, int) or not isinstance(j, int):
            raise ValueError(f"entry {row!r} has non-integer indices")
        if (i, j) in entries:
            raise ValueError(f"duplicate entry ({i},{j})")
        entries[i, j] = as_rational(v)
    return BettiTable(obj["vars"], entries)


def render_table(beta: BettiTable, empty: str = ".") -> str:
    """Text array with ``beta[i, j]`` in column ``i``, row ``j - i``."""
    if not beta:
        return "(zero table)"
    ncols = max(i for i, _ in beta) + 1
    rows = sorted({j - i for i, j in beta})
    grid = {}
    for (i, j), q in beta.items():
        grid[j - i, i] = rational_str(q)
    labels = [f"{row}:" for row in range(rows[0], rows[-1] + 1)]
    cells = [[grid.get((row, i), empty) for i in range(ncols)] for row in range(rows[0], rows[-1] + 1)]
    width = max(len(c) for line in cells for c in line)
    width = max(width, len(str(ncols - 1)))
    lw = max(len(s) for s in labels)
    header = " " * (lw + 1) + " ".join(str(i).rjust(width) for i in range(ncols))
    lines = [header]
    for label, line in zip(labels, cells):
        lines.append(label.rjust(lw) + " " + " ".join(c.rjust(width) for c in line))
    return "\n".join(lines)
