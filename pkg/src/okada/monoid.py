"""The Okada monoid: all parameters specialized to 1.

Elements are arc diagrams in canonical form; the product composes and
discards loops.  The monoid has ``n!`` elements, is aperiodic, and its
Green relations are governed by the dominance order: each R-class holds
exactly one involutive element (fixed by the mirror) and each J-class
exactly one free element, the one sharing the propagating label set.

R/L/J-classes are computed as strongly connected components of the
right/left/two-sided Cayley graphs over the generators, which is the
same as comparing one- and two-sided ideals.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from . import diagrams as dg
from .algebra import free_diagram
from .errors import InternalInvariantError
from .fibonacci import FibonacciSet, enumerate_yfs

__all__ = [
    "mproduct",
    "is_idempotent",
    "is_involutive",
    "aperiodicity_index",
    "aperiodicity_max",
    "census_counts",
    "idempotent_count",
    "involutive_count",
    "KNOWN_IDEMPOTENT_COUNTS",
    "EXTENDED_IDEMPOTENT_COUNTS",
    "GreenClasses",
    "green_classes",
    "r_class_rep",
    "j_class_rep",
]

# Idempotent census for ranks 0..8; ranks 9 and 10 are the extended run.
KNOWN_IDEMPOTENT_COUNTS = (1, 1, 2, 6, 22, 108, 594, 4116, 30500)
EXTENDED_IDEMPOTENT_COUNTS = {9: 274006, 10: 2560400}


def mproduct(e: dg.ArcDiagram, f: dg.ArcDiagram) -> dg.ArcDiagram:
    """Monoid product: compose and forget the loops."""
    result, _ = dg.compose(e, f)
    return result


def is_idempotent(e: dg.ArcDiagram) -> bool:
    return mproduct(e, e) == e


def is_involutive(e: dg.ArcDiagram) -> bool:
    """True iff ``e`` equals its mirror; involutives are always idempotent."""
    return dg.mirror(e) == e


def aperiodicity_index(e: dg.ArcDiagram) -> int:
    """Least ``k`` with ``e^k = e^{k+1}`` (exists; the monoid is aperiodic)."""
    k = 1
    cur = e
    while True:
        nxt = mproduct(cur, e)
        if nxt == cur:
            return k
        cur = nxt
        k += 1
        if k > 4 * (e.rank + 1):
            raise InternalInvariantError(f"power tower of {e!r} did not stabilize")


def aperiodicity_max(n: int) -> int:
    """Largest aperiodicity index over the whole rank-``n`` monoid."""
    return max((aperiodicity_index(e) for e in dg.iter_diagrams(n)), default=1)


def _census_chunk(args: tuple[int, tuple[int, ...]]) -> tuple[int, int, int]:
    """Totals (elements, idempotents, involutives) for one label-set cell."""
    n, elements = args
    halves = dg.enumerate_half(n, FibonacciSet(n, elements))
    total = idem = invol = 0
    for left in halves:
        for right in halves:
            d = dg.glue(left, right)
            total += 1
            if is_idempotent(d):
                idem += 1
                if left == right:
                    invol += 1
    return total, idem, invol


def census_counts(n: int, threads: int = 1) -> tuple[int, int, int]:
    """Totals ``(elements, idempotents, involutives)`` for rank ``n``."""
    jobs = [(n, s.elements) for s in enumerate_yfs(n)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_census_chunk, jobs))
    else:
        parts = [_census_chunk(j) for j in jobs]
    total = sum(p[0] for p in parts)
    idem = sum(p[1] for p in parts)
    invol = sum(p[2] for p in parts)
    return total, idem, invol


def idempotent_count(n: int, threads: int = 1) -> int:
    """Number of idempotents in the rank-``n`` monoid (streamed census)."""
    return census_counts(n, threads)[1]


def involutive_count(n: int, threads: int = 1) -> int:
    """Number of mirror-fixed elements (equals the involutions of S_n)."""
    return census_counts(n, threads)[2]


# ---------------------------------------------------------------------------
# Green relations


@dataclass(frozen=True)
class GreenClasses:
    """R/L/J-partitions of the rank-``n`` monoid with canonical representatives.

    ``elements`` fixes the indexing; classes are tuples of sorted element
    indices, themselves sorted by smallest member.  ``r_reps[c]`` is the
    unique involutive element of R-class ``c``; ``j_reps[c]`` the unique
    free element of J-class ``c``.
    """

    rank: int
    elements: tuple[dg.ArcDiagram, ...]
    r_classes: tuple[tuple[int, ...], ...]
    l_classes: tuple[tuple[int, ...], ...]
    j_classes: tuple[tuple[int, ...], ...]
    r_reps: tuple[int, ...]
    j_reps: tuple[int, ...]

    def class_of(self, e: dg.ArcDiagram, kind: str) -> tuple[int, ...]:
        idx = self.elements.index(e)
        classes = {"R": self.r_classes, "L": self.l_classes, "J": self.j_classes}[kind]
        for cls in classes:
            if idx in cls:
                return cls
        raise KeyError(e)


def _sccs(adj: list[list[int]], radj: list[list[int]]) -> list[int]:
    """Kosaraju strongly-connected components; returns component index per node."""
    n = len(adj)
    seen = [False] * n
    order: list[int] = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        stack: list[tuple[int, int]] = [(s, 0)]
        while stack:
            v, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, i + 1)
                w = adj[v][i]
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, 0))
            else:
                order.append(v)
                stack.pop()
    comp = [-1] * n
    c = 0
    for s in reversed(order):
        if comp[s] != -1:
            continue
        comp[s] = c
        stack2 = [s]
        while stack2:
            v = stack2.pop()
            for w in radj[v]:
                if comp[w] == -1:
                    comp[w] = c
                    stack2.append(w)
        c += 1
    return comp


def _group(comp: list[int]) -> tuple[tuple[int, ...], ...]:
    buckets: dict[int, list[int]] = {}
    for i, c in enumerate(comp):
        buckets.setdefault(c, []).append(i)
    return tuple(sorted(tuple(sorted(b)) for b in buckets.values()))


@lru_cache(maxsize=None)
def green_classes(n: int) -> GreenClasses:
    """Compute the full Green-relation structure of the rank-``n`` monoid."""
    elements = dg.enumerate_diagrams(n)
    index = {e: i for i, e in enumerate(elements)}
    gens = [dg.generator(i, n) for i in range(1, n)]
    m = len(elements)
    right = [[] for _ in range(m)]
    left = [[] for _ in range(m)]
    rright = [[] for _ in range(m)]
    rleft = [[] for _ in range(m)]
    for i, e in enumerate(elements):
        for g in gens:
            j = index[mproduct(e, g)]
            right[i].append(j)
            rright[j].append(i)
            k = index[mproduct(g, e)]
            left[i].append(k)
            rleft[k].append(i)
    both = [right[i] + left[i] for i in range(m)]
    rboth = [rright[i] + rleft[i] for i in range(m)]
    r_classes = _group(_sccs(right, rright))
    l_classes = _group(_sccs(left, rleft))
    j_classes = _group(_sccs(both, rboth))

    r_reps = []
    for cls in r_classes:
        reps = [i for i in cls if is_involutive(elements[i])]
        if len(reps) != 1:
            raise InternalInvariantError(
                f"R-class {cls} at rank {n} has {len(reps)} involutive elements"
            )
        r_reps.append(reps[0])
    free_index = {index[free_diagram(s)] for s in enumerate_yfs(n)}
    j_reps = []
    for cls in j_classes:
        reps = [i for i in cls if i in free_index]
        if len(reps) != 1:
            raise InternalInvariantError(
                f"J-class {cls} at rank {n} has {len(reps)} free elements"
            )
        j_reps.append(reps[0])
    return GreenClasses(
        n, elements, r_classes, l_classes, j_classes, tuple(r_reps), tuple(j_reps)
    )


def r_class_rep(e: dg.ArcDiagram) -> dg.ArcDiagram:
    """The unique involutive element of the R-class of ``e``."""
    gc = green_classes(e.rank)
    idx = gc.elements.index(e)
    for cls, rep in zip(gc.r_classes, gc.r_reps):
        if idx in cls:
            return gc.elements[rep]
    raise KeyError(e)


def j_class_rep(e: dg.ArcDiagram) -> dg.ArcDiagram:
    """The unique free element of the J-class of ``e``.

    It is the free element whose propagating label set matches that of
    ``e``; this is asserted against the computed classes.
    """
    expected = free_diagram(dg.prop_lab(e))
    gc = green_classes(e.rank)
    idx = gc.elements.index(e)
    for cls, rep in zip(gc.j_classes, gc.j_reps):
        if idx in cls:
            found = gc.elements[rep]
            if found != expected:
                raise InternalInvariantError(
                    f"free representative of {e!r} is {found!r}, expected {expected!r}"
                )
            return found
    raise KeyError(e)
