"""Generator words, permutation codes, heaps, and exact normalization.

The rank-``n`` Okada algebra is generated by ``E_1, ..., E_{n-1}`` with

* ``E_i E_i      = x_i E_i``
* ``E_i E_j      = E_j E_i``          for ``|i - j| >= 2``
* ``E_{i+1} E_i E_{i+1} = y_i E_{i+1}``

(there is no rule for ``E_i E_{i+1} E_i``; that asymmetry is what
separates this algebra from Temperley-Lieb).  Words in the generators
are rewritten modulo the commutations, so the real objects are traces
(commutation classes); a reduction fires whenever some representative
contains the square or the zigzag pattern as a factor.  Each reduction
shortens the word, every irreducible trace turns out to be the trace of
the code word of a unique permutation, and :func:`normalize` returns
that code word with the collected monomial in the ``x``/``y`` parameters.

Trace-adjacency is decided exactly:

* two occurrences of ``v`` are adjacent iff no letter between them has a
  value within 1 of ``v``;
* ``v, v-1, v`` can be brought together iff the letters between the two
  ``v``'s include exactly one letter from ``{v-1, v, v+1}``, namely a
  single ``v-1`` (anything further away commutes past the pattern).

The result is always cross-checked against the returned code word via
Cartier-Foata normal forms, so a silently wrong reduction cannot escape.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import InternalInvariantError
from .fibonacci import Chain
from .polynomials import Polynomial, x_var, y_var

__all__ = [
    "Perm",
    "identity_perm",
    "perm_inverse",
    "perm_compose",
    "perm_length",
    "all_perms",
    "code",
    "word_from_code",
    "perm_from_word",
    "check_word",
    "Heap",
    "heap_from_word",
    "reading",
    "is_packed",
    "cartier_foata",
    "trace_equal",
    "NormalizationResult",
    "normalize",
    "multiply_words",
    "multiply_perms",
    "perm_to_diagram",
    "diagram_to_perm",
    "rs",
    "rs_inverse",
]

Perm = tuple[int, ...]  # one-line notation on {1, ..., n}


# ---------------------------------------------------------------------------
# permutations and codes


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p, start=1):
        out[v - 1] = i
    return tuple(out)


def perm_compose(p: Perm, q: Perm) -> Perm:
    """One-line product ``(p*q)(i) = p(q(i))``.

    Matches word evaluation: the word ``w1 + w2`` evaluates to
    ``perm_compose(perm_from_word(w1), perm_from_word(w2))``.
    """
    return tuple(p[v - 1] for v in q)


def perm_length(p: Perm) -> int:
    """Number of inversions (Coxeter length)."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def all_perms(n: int) -> tuple[Perm, ...]:
    """All permutations of ``{1..n}`` in lexicographic one-line order."""
    return tuple(itertools.permutations(range(1, n + 1)))


def code(p: Perm) -> tuple[int, ...]:
    """Lehmer-style code: ``c_i = #{j < i : p^-1(j) > p^-1(i)}``."""
    pos = perm_inverse(p)
    return tuple(
        sum(1 for j in range(1, i) if pos[j - 1] > pos[i - 1])
        for i in range(1, len(p) + 1)
    )


def word_from_code(p: Perm) -> tuple[int, ...]:
    """The canonical reduced word ``prod_i (i-1, i-2, ..., i-c_i)``.

    Concatenating the descending runs for increasing ``i`` gives the
    lexicographically minimal reduced factorization of ``p`` into simple
    transpositions; its length is the Coxeter length.
    """
    word: list[int] = []
    for i, c in enumerate(code(p), start=1):
        word.extend(range(i - 1, i - c - 1, -1))
    return tuple(word)


def perm_from_word(word: Sequence[int], n: int) -> Perm:
    """Evaluate a generator word as a product of simple transpositions."""
    p = list(range(1, n + 1))
    for i in word:
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def check_word(word: Sequence[int], n: int) -> tuple[int, ...]:
    word = tuple(word)
    for v in word:
        if not 1 <= v <= n - 1:
            raise ValueError(f"letter {v} out of range for rank {n}")
    return word


# ---------------------------------------------------------------------------
# heaps (diamond-diagram packings)


@dataclass(frozen=True)
class Heap:
    """Black-box occupancy of a diamond diagram.

    ``rows[i-1]`` lists the occupied diagonals of row ``i`` (rows are
    indexed from the bottom starting at 1, diagonals from the left
    starting at 1).  Reading the diagonals left to right, each from top
    to bottom, recovers a word; trailing empty diagonals are never
    stored, which realizes the identification of diagrams differing by
    empty diagonals on the right.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != max(self.n - 1, 0):
            raise ValueError(f"expected {self.n - 1} rows, got {len(self.rows)}")
        for i, cols in enumerate(self.rows, start=1):
            for prev, cur in zip((0,) + tuple(cols), cols):
                if cur <= prev:
                    raise ValueError(f"row {i} columns must increase: {cols}")
            if cols and cols[0] < i:
                raise ValueError(f"row {i} starts left of the boundary: {cols}")


def heap_from_word(word: Sequence[int], n: int) -> Heap:
    """Drop the letters of ``word`` into a diamond diagram.

    Letters are packed diagonal by diagonal: a letter joins the current
    diagonal when it continues a strictly decreasing run, otherwise it
    starts the next one, and a letter ``i`` can never sit left of
    diagonal ``i``.  The packing reproduces the reading exactly.
    """
    word = check_word(word, n)
    rows: list[list[int]] = [[] for _ in range(max(n - 1, 0))]
    col = 0
    prev = None
    for v in word:
        if prev is None or v >= prev:
            col += 1
        col = max(col, v)
        rows[v - 1].append(col)
        prev = v
    return Heap(n, tuple(tuple(r) for r in rows))


def reading(heap: Heap) -> tuple[int, ...]:
    """Row indices of the black boxes, diagonals left to right, each top-down."""
    boxes = [
        (col, -row)
        for row, cols in enumerate(heap.rows, start=1)
        for col in cols
    ]
    return tuple(-r for _, r in sorted(boxes))


def is_packed(heap: Heap) -> bool:
    """True iff every box is supported, i.e. repacking the reading is a no-op."""
    return heap == heap_from_word(reading(heap), heap.n)


# ---------------------------------------------------------------------------
# traces


def cartier_foata(word: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Cartier-Foata layers of the trace of ``word``.

    Letters commute iff their values differ by at least 2.  Two words
    have equal layers iff they are equal modulo commutations.
    """
    rem = list(word)
    layers = []
    while rem:
        layer: list[int] = []
        rest: list[int] = []
        blocked: set[int] = set()
        for v in rem:
            if v in blocked:
                rest.append(v)
            else:
                layer.append(v)
            blocked.update((v - 1, v, v + 1))
        layers.append(tuple(sorted(layer)))
        rem = rest
    return tuple(layers)


def trace_equal(w1: Sequence[int], w2: Sequence[int]) -> bool:
    """Equality of words modulo commutation of distant letters."""
    return cartier_foata(w1) == cartier_foata(w2)


# ---------------------------------------------------------------------------
# normalization


@dataclass(frozen=True)
class NormalizationResult:
    """Outcome of rewriting a word to its canonical code-word form."""

    n: int
    coefficient: Polynomial  # a monomial in the x and y parameters
    word: tuple[int, ...]  # the code word of `perm`
    perm: Perm


def _reduction_candidates(word: tuple[int, ...]):
    """All one-step reductions of the trace of ``word``.

    Yields ``(v, p, 0, q, q)`` for a square ``E_v E_v`` at positions
    ``p < q`` and ``(v, p, 1, q, r)`` for a zigzag ``E_v E_{v-1} E_v`` at
    ``p < q < r``.  Only consecutive occurrences of a value can be
    adjacent in the trace, so the scan is quadratic.
    """
    cands = []
    last_seen: dict[int, int] = {}
    for q, v in enumerate(word):
        p = last_seen.get(v)
        if p is not None:
            between = word[p + 1 : q]
            near = [u for u in between if abs(u - v) <= 1]
            if not near:
                cands.append((v, p, 0, q, q))
            elif v >= 2 and near == [v - 1]:
                cands.append((v, p, 1, word.index(v - 1, p + 1, q), q))
        last_seen[v] = q
    return sorted(cands)


def normalize(
    word: Sequence[int],
    n: int | None = None,
    rng: random.Random | None = None,
) -> NormalizationResult:
    """Rewrite ``word`` to the code word of a permutation, exactly.

    Squares contribute ``x_v`` factors, zigzags ``y_{v-1}`` factors, and
    commutations are free.  Without ``rng`` the least candidate (lowest
    row, then leftmost) is reduced each step; passing a seeded
    ``random.Random`` randomizes the order.  Confluence makes the result
    independent of these choices, and the final trace is verified to
    equal the trace of the returned code word.

    >>> normalize((1, 1)).coefficient
    x1
    >>> normalize((2, 1, 2)).word
    (2,)
    """
    if n is None:
        n = max(word, default=0) + 1
    w = check_word(word, n)
    coeff = Polynomial.one()
    while True:
        cands = _reduction_candidates(w)
        if not cands:
            break
        v, p, kind, q, r = rng.choice(cands) if rng else cands[0]
        if kind == 0:
            coeff = coeff * x_var(v)
            w = w[:q] + w[q + 1 :]
        else:
            coeff = coeff * y_var(v - 1)
            w = w[:q] + w[q + 1 : r] + w[r + 1 :]
    perm = perm_from_word(w, n)
    canonical = word_from_code(perm)
    if cartier_foata(w) != cartier_foata(canonical):
        raise InternalInvariantError(
            f"irreducible word {w} is not the code word of {perm}"
        )
    return NormalizationResult(n, coeff, canonical, perm)


def multiply_words(
    w1: Sequence[int], w2: Sequence[int], n: int | None = None
) -> NormalizationResult:
    """Normal form of the concatenation; the structure-constant oracle."""
    if n is None:
        n = max((*w1, *w2), default=0) + 1
    return normalize(tuple(w1) + tuple(w2), n)


@lru_cache(maxsize=None)
def _mult_perm_by_generator(p: Perm, i: int) -> tuple[Polynomial, Perm]:
    r = normalize(word_from_code(p) + (i,), len(p))
    return r.coefficient, r.perm


def multiply_perms(p: Perm, q: Perm) -> tuple[Polynomial, Perm]:
    """Structure constants of the basis: ``E_p E_q = coeff * E_result``.

    Folds ``q``'s code word into ``p`` one generator at a time (cached),
    which agrees with :func:`multiply_words` by confluence.
    """
    if len(p) != len(q):
        raise ValueError(f"rank mismatch: {len(p)} vs {len(q)}")
    coeff = Polynomial.one()
    cur = p
    for i in word_from_code(q):
        c, cur = _mult_perm_by_generator(cur, i)
        coeff = coeff * c
    return coeff, cur


# ---------------------------------------------------------------------------
# dictionary with the arc-diagram model


def perm_to_diagram(p: Perm):
    """Evaluate the code word of ``p`` in the diagram monoid.

    Code words never close a loop, which is asserted, so no coefficient
    is lost at this specialization.
    """
    from . import diagrams

    d = diagrams.identity(len(p))
    for i in word_from_code(p):
        d, loops = diagrams.compose(d, diagrams.generator(i, len(p)))
        if loops:
            raise InternalInvariantError(f"code word of {p} produced loops {loops}")
    return d


def diagram_to_perm(d) -> Perm:
    """Invert :func:`perm_to_diagram` by repeatedly peeling the top rank."""
    from . import diagrams

    n = d.rank
    cvec = [0] * n
    cur = d
    for r in range(n, 0, -1):
        if (r, -r, r) in cur.arcs:
            cur = diagrams.iota_inverse(cur)
        else:
            cur, start = diagrams.peel(cur)
            cvec[r - 1] = r - start
    word: list[int] = []
    for i, c in enumerate(cvec, start=1):
        word.extend(range(i - 1, i - c - 1, -1))
    return perm_from_word(word, n)


def rs(p: Perm) -> tuple[Chain, Chain]:
    """Robinson-Schensted pair of saturated chains of ``p``.

    The left chain reads the bra of the arc diagram of ``p``, the right
    chain the ket; both end at the propagating label set.  Inverting the
    permutation swaps the pair, so involutions give twin chains.
    """
    from . import diagrams

    d = perm_to_diagram(p)
    return diagrams.chain_of(diagrams.bra(d)), diagrams.chain_of(diagrams.ket(d))


def rs_inverse(left: Chain, right: Chain) -> Perm:
    """Recover the permutation from a pair of chains with a common top."""
    from . import diagrams

    if left.rank != right.rank:
        raise ValueError(f"chain ranks differ: {left.rank} vs {right.rank}")
    if left.top != right.top:
        raise ValueError(f"chains end at {left.top} and {right.top}")
    d = diagrams.glue(diagrams.chain_inverse(left), diagrams.chain_inverse(right))
    return diagram_to_perm(d)
