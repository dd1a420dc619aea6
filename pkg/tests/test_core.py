from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bscone.core import (
    BettiTable,
    ChainTriple,
    DegreeSequence,
    Ordering,
    compare_sequences,
    render_table,
    table_axpy,
    table_from_json,
    table_get,
    table_to_json,
)
from bscone.errors import BadChain, NegativeEntry
from bscone.pure import pure_diagram

# S/(x^2, xy, xz^2) over K[x, y, z]
EXAMPLE = BettiTable(3, {(0, 0): 1, (1, 2): 2, (1, 3): 1, (2, 3): 1, (2, 4): 2, (3, 5): 1})

increasing = st.lists(st.integers(-6, 6), min_size=1, max_size=5, unique=True).map(sorted).map(tuple)


def test_compare_examples():
    assert compare_sequences((0, 2, 3, 5), (0, 2, 3, 5)) is Ordering.EQUAL
    assert compare_sequences((0, 1, 3, 4), (0, 2, 3, 4)) is Ordering.LESS
    assert DegreeSequence((0, 1, 3, 4)) <= DegreeSequence((0, 2, 3, 4))
    # longer sequence is below a shorter one that dominates it termwise
    assert compare_sequences((0, 2, 3, 5), (0, 3, 4)) is Ordering.LESS
    assert compare_sequences((0, 3, 4), (0, 2, 3, 5)) is Ordering.GREATER
    assert compare_sequences((0, 3), (1, 2)) is Ordering.INCOMPARABLE
    assert compare_sequences((0, 1, 2), (0, 5)) is Ordering.LESS
    assert compare_sequences((0, 6, 7), (0, 5)) is Ordering.INCOMPARABLE


def test_decomposition_chain_from_worked_example_is_increasing():
    chain = [(0, 2, 3, 5), (0, 2, 4, 5), (0, 3, 4), (0, 3)]
    for d, e in zip(chain, chain[1:]):
        assert DegreeSequence(d) < DegreeSequence(e)


@given(increasing, increasing, increasing)
def test_partial_order_axioms(d, e, f):
    assert compare_sequences(d, d) is Ordering.EQUAL
    de, ed = compare_sequences(d, e), compare_sequences(e, d)
    flip = {Ordering.LESS: Ordering.GREATER, Ordering.GREATER: Ordering.LESS,
            Ordering.EQUAL: Ordering.EQUAL, Ordering.INCOMPARABLE: Ordering.INCOMPARABLE}
    assert ed is flip[de]
    D, E, F = (DegreeSequence(x) for x in (d, e, f))
    if D <= E and E <= D:
        assert d == e
    if D <= E and E <= F:
        assert D <= F


def test_degree_sequence_rejects_non_increasing():
    with pytest.raises(ValueError):
        DegreeSequence((0, 2, 2))
    with pytest.raises(ValueError):
        DegreeSequence(())


def test_chain_triple_validates_order():
    ChainTriple((0, 2, 3, 4), (0, 1, 3, 4), (0, 1, 2, 4))
    with pytest.raises(BadChain):
        ChainTriple((0, 1, 2, 4), (0, 1, 3, 4), (0, 2, 3, 4))


def test_table_get():
    assert table_get(BettiTable(3), 0, 0) == 0
    assert table_get(EXAMPLE, 1, 2) == 2
    assert table_get(EXAMPLE, 3, 5) == 1
    assert table_get(EXAMPLE, 3, 4) == 0


def test_axpy_examples():
    pi = pure_diagram((0, 2, 3, 5), 3).canonical_integer_table
    assert table_axpy(EXAMPLE, 0, pi) == EXAMPLE
    rem = table_axpy(EXAMPLE, Fraction(-1, 5), pi)
    assert (2, 3) not in rem.support()
    assert rem[0, 0] == Fraction(4, 5)
    assert rem[1, 2] == 1
    assert rem[3, 5] == Fraction(4, 5)
    one = BettiTable(3, {(0, 0): 1})
    with pytest.raises(NegativeEntry):
        table_axpy(one, -2, one)


def test_axpy_requires_same_ring():
    with pytest.raises(ValueError):
        table_axpy(BettiTable(2), 1, BettiTable(3))


tables = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(-3, 8)),
    st.fractions(min_value=0, max_value=20, max_denominator=12),
    max_size=8,
).map(lambda d: BettiTable(3, d))


@given(tables, tables, st.fractions(min_value=0, max_value=5, max_denominator=9))
def test_axpy_round_trip(beta, pi, q):
    there = table_axpy(beta, q, pi)
    assert table_axpy(there, -q, pi) == beta
    assert all(v > 0 for _, v in there.items())


def test_no_zero_or_negative_entries_stored():
    t = BettiTable(2, {(0, 0): 0, (1, 1): Fraction(1, 2)})
    assert t.support() == {(1, 1)}
    with pytest.raises(NegativeEntry):
        BettiTable(2, {(0, 0): -1})
    with pytest.raises(ValueError):
        BettiTable(2, {(3, 3): 1})  # beyond the syzygy bound


def test_json_is_sorted_and_exact():
    t = BettiTable(2, {(1, 3): Fraction(1, 3), (0, 0): 2, (1, 1): 1})
    obj = table_to_json(t)
    assert obj == {"vars": 2, "entries": [[0, 0, 2], [1, 1, 1], [1, 3, "1/3"]]}
    assert table_from_json(obj) == t


@given(tables)
def test_json_round_trip(beta):
    assert table_from_json(table_to_json(beta)) == beta


def test_json_rejects_floats_and_duplicates():
    with pytest.raises(TypeError):
        table_from_json({"vars": 1, "entries": [[0, 0, 0.5]]})
    with pytest.raises(ValueError):
        table_from_json({"vars": 1, "entries": [[0, 0, 1], [0, 0, 2]]})


def test_render_uses_shifted_rows():
    text = render_table(EXAMPLE)
    assert text.splitlines() == [
        "   0 1 2 3",
        "0: 1 . . .",
        "1: . 2 1 .",
        "2: . 1 2 1",
    ]
