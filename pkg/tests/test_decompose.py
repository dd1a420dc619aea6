from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bscone.core import BettiTable, DegreeSequence
from bscone.decompose import decompose, greedy_step, top_degree_sequence, verify_decomposition
from bscone.errors import ColumnGap, NotInCone, NotIncreasing
from bscone.pure import pure_diagram

from _sampling import ideal_corpus

EXAMPLE = BettiTable(3, {(0, 0): 1, (1, 2): 2, (1, 3): 1, (2, 3): 1, (2, 4): 2, (3, 5): 1})


def test_worked_example():
    D = decompose(EXAMPLE)
    assert D.summary() == [
        (Fraction(1, 5), (0, 2, 3, 5)),
        (Fraction(1, 10), (0, 2, 4, 5)),
        (Fraction(1, 6), (0, 3, 4)),
        (Fraction(1, 3), (0, 3)),
    ]
    assert D.reconstruct() == EXAMPLE
    # coefficients against the product normalization
    assert [p.normalized_coefficient for p in D] == [6, 12, 2, 1]


def test_first_greedy_step():
    q, pi, rem = greedy_step(EXAMPLE)
    assert q == Fraction(1, 5)
    assert pi.degree_sequence == DegreeSequence((0, 2, 3, 5))
    assert top_degree_sequence(rem) == DegreeSequence((0, 2, 4, 5))


def test_pure_table_decomposes_to_itself():
    pi = pure_diagram((0, 2, 3, 5), 3).canonical_integer_table
    assert decompose(pi.scale(7)).summary() == [(7, (0, 2, 3, 5))]


def test_not_in_cone_carries_partial_and_remainder():
    beta = BettiTable(2, {(0, 0): 1, (1, 1): 2, (2, 3): 1})
    with pytest.raises(NotInCone) as info:
        decompose(beta)
    exc = info.value
    assert [(p.coefficient, p.degrees) for p in exc.partial] == [(Fraction(1, 2), (0, 1, 3))]
    assert exc.remainder == BettiTable(2, {(1, 1): Fraction(1, 2), (2, 3): Fraction(1, 2)})


def test_not_in_cone_large_first_syzygy():
    with pytest.raises(NotInCone):
        decompose(BettiTable(1, {(0, 0): 1, (1, 1): 100}))


def test_top_sequence_errors():
    with pytest.raises(ColumnGap):
        top_degree_sequence(BettiTable(3, {(0, 0): 1, (2, 3): 1}))
    with pytest.raises(ColumnGap):
        top_degree_sequence(BettiTable(3))
    with pytest.raises(NotIncreasing):
        top_degree_sequence(BettiTable(3, {(0, 2): 1, (1, 2): 1}))


def test_verify_rejects_tampered_decomposition():
    D = decompose(EXAMPLE)
    bad = type(D)(D.parts[::-1], D.source)
    ok, problems = verify_decomposition(bad)
    assert not ok and problems


chain_strategy = st.lists(
    st.lists(st.integers(0, 3), min_size=1, max_size=4), min_size=1, max_size=4
)


def _chain(steps):
    """A strictly increasing chain built by raising one entry or dropping the last."""
    d = [0, 1, 2, 3]
    out = [tuple(d)]
    for s in steps:
        e = list(out[-1])
        for i in s:
            if i < len(e) and (i + 1 == len(e) or e[i] + 1 < e[i + 1]):
                e[i] += 1
        if tuple(e) == out[-1] and len(e) > 1:
            e.pop()
        if tuple(e) != out[-1]:
            out.append(tuple(e))
    return out


@settings(max_examples=60, deadline=None)
@given(chain_strategy, st.lists(st.integers(1, 9), min_size=4, max_size=4))
def test_chain_combinations_round_trip(steps, weights):
    chain = _chain(steps)
    beta = BettiTable(3)
    for d, w in zip(chain, weights):
        beta = beta + pure_diagram(d, 3).canonical_integer_table.scale(Fraction(w, 3))
    D = decompose(beta)
    assert D.summary() == [(Fraction(w, 3), d) for d, w in zip(chain, weights)]


def test_random_ideals_decompose():
    for I, beta in ideal_corpus()[:40]:
        D = decompose(beta)
        assert D.reconstruct() == beta
        assert decompose(D.reconstruct()).summary() == D.summary()
