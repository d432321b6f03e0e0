"""Exact diagram calculus for the Okada algebra and monoid.

The package implements the rank-``n`` Okada algebra (generators
``E_1..E_{n-1}`` with ``E_i^2 = x_i E_i``, distant commutation, and
``E_{i+1} E_i E_{i+1} = y_i E_{i+1}``) through two cross-checked models:
a confluent rewriting system on generator words and a monoid of
height-labeled non-crossing arc diagrams.  On top sit the
Young-Fibonacci combinatorics, the diagrammatic Robinson-Schensted
correspondence, the structure theory of the monoid (Green relations,
idempotents, aperiodicity), and the cellular basis with its cell modules
and Gram forms.
"""

from .errors import (
    InternalInvariantError,
    OkadaError,
    PropagatingMismatchError,
    RankMismatchError,
)
from .fibonacci import (
    Chain,
    FibonacciSet,
    chain_count,
    dominance_join,
    dominance_leq,
    dominance_lt,
    dominance_meet,
    dominance_rank,
    enumerate_yfs,
    free_set,
    free_set_inverse,
    is_fibonacci_set,
    saturated_chains,
    set_to_word,
    word_to_set,
    yf_covers,
)
from .polynomials import Polynomial, x_var, y_var
from .rewriting import (
    Heap,
    NormalizationResult,
    code,
    diagram_to_perm,
    heap_from_word,
    multiply_perms,
    multiply_words,
    normalize,
    perm_to_diagram,
    reading,
    rs,
    rs_inverse,
    word_from_code,
)
from .diagrams import (
    Arc,
    ArcDiagram,
    HalfArc,
    HalfArcDiagram,
    LoopRecord,
    bra,
    chain_inverse,
    chain_of,
    compose,
    enumerate_diagrams,
    enumerate_half,
    generator,
    glue,
    identity,
    iota,
    ket,
    mirror,
    peel,
    product_y1,
    prop_lab,
    restrict,
    validate,
    validate_half,
)
from .algebra import (
    AlgebraElement,
    cell_action,
    cell_datum,
    free_element,
    free_involution,
    gram_matrix,
    ideal_basis,
    triangular_factorization,
)
from .monoid import (
    GreenClasses,
    aperiodicity_index,
    green_classes,
    idempotent_count,
    is_idempotent,
    is_involutive,
    j_class_rep,
    mproduct,
    r_class_rep,
)

__version__ = "0.1.0"
