"""Exact Boij-Soederberg decompositions, pure diagrams and cohomology-table functionals."""

__version__ = "0.1.0"

from .core import (
    BettiTable,
    ChainTriple,
    DegreeSequence,
    Ordering,
    Rational,
    compare_sequences,
    render_table,
    table_axpy,
    table_from_json,
    table_get,
    table_to_json,
)
from .pure import PureDiagram, facet_identity_check, herzog_kuhl_residuals, pure_diagram
from .decompose import Decomposition, decompose, greedy_step, top_degree_sequence, verify_decomposition
from .cohomology import (
    FacetFunctional,
    SupernaturalTable,
    TruncationSpec,
    facet_functional,
    normalize_chain,
    pairing,
    supernatural_gamma,
    truncated_pairing,
)
from .hilbert import (
    codimension,
    hilbert_function,
    hilbert_numerator,
    multiplicity,
    multiplicity_bounds_check,
    shift_bounds,
)
from .koszul import MonomialIdeal, betti_table, parse_ideal, random_ideal, standard_monomial_count
