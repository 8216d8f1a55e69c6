"""Exact invariants of thin polyominoes.

The package models polyominoes on the integer lattice, computes their rook
polynomials (by direct placement counting and by a leaf/collapse
recursion), derives the reduced Hilbert-Poincare series with its ring
invariants (Krull dimension, regularity, multiplicity, a-invariant,
Gorensteinness), and independently cross-checks the h-polynomial by
counting standard monomials against a Groebner basis of the ideal of
inner 2-minors.
"""

from .errors import (
    FalsificationError,
    InsufficientDepthError,
    ParseError,
    PolyalgError,
    PreconditionError,
    ResourceLimitError,
)
from .grid import (
    Cell,
    CellInterval,
    Polyomino,
    VertexInterval,
    inner_intervals,
    is_cell_interval,
    is_connected,
    is_simple,
    is_thin,
    maximal_cell_intervals,
    normalize,
    parse_polyomino,
    render_ascii,
    vertex_set,
)
from .structure import (
    CollapseStep,
    Leaf,
    collapse,
    collapse_leaf,
    find_collapse,
    has_s_property,
    leaves,
    remove_leaf,
    single_cells,
)
from .rook import (
    IntPolynomial,
    attacks,
    rook_number,
    rook_polynomial_bruteforce,
    rook_polynomial_recursive,
)
from .hilbert import (
    HilbertSeries,
    a_invariant,
    betti_numerator_identity,
    cell_interval_series,
    hilbert_series_recursive,
    hilbert_series_thin,
    is_gorenstein,
    is_palindromic,
    krull_dimension,
    multiplicity,
    regularity,
)
from .ideal import (
    Binomial,
    ConjectureCheck,
    Monomial,
    TermOrder,
    TheoremCheck,
    buchberger,
    dump_binomials,
    format_binomial,
    h_from_differences,
    hilbert_function_oracle,
    inner_2_minors,
    series_expansion,
    verify_conjecture,
    verify_theorem,
)
from .enumeration import (
    ScanRecord,
    ScanReport,
    canonical_form,
    conjecture_scan,
    enumerate_fixed,
    filter_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "Binomial",
    "Cell",
    "CellInterval",
    "CollapseStep",
    "ConjectureCheck",
    "FalsificationError",
    "HilbertSeries",
    "InsufficientDepthError",
    "IntPolynomial",
    "Leaf",
    "Monomial",
    "ParseError",
    "PolyalgError",
    "Polyomino",
    "PreconditionError",
    "ResourceLimitError",
    "ScanRecord",
    "ScanReport",
    "TermOrder",
    "TheoremCheck",
    "VertexInterval",
    "a_invariant",
    "attacks",
    "betti_numerator_identity",
    "buchberger",
    "canonical_form",
    "cell_interval_series",
    "collapse",
    "collapse_leaf",
    "conjecture_scan",
    "dump_binomials",
    "enumerate_fixed",
    "filter_corpus",
    "find_collapse",
    "format_binomial",
    "h_from_differences",
    "has_s_property",
    "hilbert_function_oracle",
    "hilbert_series_recursive",
    "hilbert_series_thin",
    "inner_2_minors",
    "inner_intervals",
    "is_cell_interval",
    "is_connected",
    "is_gorenstein",
    "is_palindromic",
    "is_simple",
    "is_thin",
    "krull_dimension",
    "leaves",
    "maximal_cell_intervals",
    "multiplicity",
    "normalize",
    "parse_polyomino",
    "regularity",
    "remove_leaf",
    "render_ascii",
    "rook_number",
    "rook_polynomial_bruteforce",
    "rook_polynomial_recursive",
    "series_expansion",
    "single_cells",
    "vertex_set",
    "verify_conjecture",
    "verify_theorem",
]
