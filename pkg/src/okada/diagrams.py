"""Height-labeled non-crossing arc diagrams and half diagrams.

A rank-``n`` diagram is a perfect matching of the ``2n`` boundary nodes
``1, ..., n, -n, ..., -1`` (positives up the left edge, negatives down
the right edge; the linear order is ``1 < ... < n < -n < ... < -1``) by
non-crossing arcs.  Every arc carries a height label ``h`` with

1. ``1 <= h <= min(|a|, |b|)``,
2. ``h = min(|a|, |b|) (mod 2)``,
3. strictly larger labels on nested arcs.

Composition merges the right boundary of the first diagram with the left
boundary of the second; closed loops are removed and reported with their
heights (a loop or merged arc inherits the minimum label of its
fragments).  Cutting a diagram down the middle gives two half diagrams
whose propagating (cut) arcs keep their labels; the labels form a
Fibonacci set, halves with equal label sets glue back uniquely, and rank
restrictions of a half diagram trace out a saturated chain in the
Young-Fibonacci lattice.

Values are immutable and hashable; arcs are kept in a canonical sorted
order so equal diagrams compare and hash equal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import (
    InternalInvariantError,
    PropagatingMismatchError,
    RankMismatchError,
)
from .fibonacci import Chain, FibonacciSet, enumerate_yfs, saturated_chains
from .polynomials import Polynomial, x_var

__all__ = [
    "Arc",
    "HalfArc",
    "LoopRecord",
    "ArcDiagram",
    "HalfArcDiagram",
    "order_key",
    "violations",
    "validate",
    "half_violations",
    "validate_half",
    "identity",
    "generator",
    "iota",
    "iota_inverse",
    "mirror",
    "bra",
    "ket",
    "prop_lab",
    "glue",
    "restrict",
    "chain_of",
    "chain_inverse",
    "compose",
    "product_y1",
    "peel",
    "iter_diagrams",
    "enumerate_diagrams",
    "enumerate_half",
]


class Arc(NamedTuple):
    lo: int  # endpoint earlier in the boundary order
    hi: int
    height: int


class HalfArc(NamedTuple):
    end: int
    height: int


class LoopRecord(NamedTuple):
    height: int
    count: int


def order_key(e: int, n: int) -> int:
    """Position of endpoint ``e`` in the boundary order ``1 < .. < n < -n < .. < -1``."""
    return e if e > 0 else 2 * n + 1 + e


@dataclass(frozen=True)
class ArcDiagram:
    """Immutable arc diagram in canonical form.

    Construction checks that the arcs form a perfect matching with
    positive integer labels; the height and crossing conditions are
    checked by :func:`validate` so that invalid labelings can still be
    represented and diagnosed.
    """

    rank: int
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        n = self.rank
        if n < 0:
            raise ValueError("rank must be non-negative")
        fixed = []
        seen = set()
        for a, b, h in self.arcs:
            for e in (a, b):
                if e == 0 or not -n <= e <= n:
                    raise ValueError(f"endpoint {e} out of range for rank {n}")
                if e in seen:
                    raise ValueError(f"endpoint {e} matched twice")
                seen.add(e)
            if not (isinstance(h, int) and h >= 1):
                raise ValueError(f"height must be a positive integer, got {h!r}")
            if order_key(a, n) > order_key(b, n):
                a, b = b, a
            fixed.append(Arc(a, b, h))
        if len(seen) != 2 * n:
            raise ValueError(f"not a perfect matching of {2 * n} endpoints")
        fixed.sort(key=lambda arc: order_key(arc.lo, n))
        object.__setattr__(self, "arcs", tuple(fixed))

    def partner_map(self) -> dict[int, tuple[int, int]]:
        """endpoint -> (other endpoint, height)."""
        out = {}
        for a, b, h in self.arcs:
            out[a] = (b, h)
            out[b] = (a, h)
        return out

    def __repr__(self) -> str:
        body = ", ".join(f"({a},{b})h{h}" for a, b, h in self.arcs)
        return f"ArcDiagram({self.rank}: {body})"


@dataclass(frozen=True)
class HalfArcDiagram:
    """Positive half of an arc diagram.

    Full arcs join two nodes of ``[n]``; half arcs keep one node and the
    label of the propagating arc they came from.  Together they must
    partition ``[n]``.
    """

    rank: int
    full_arcs: tuple[Arc, ...]
    half_arcs: tuple[HalfArc, ...]

    def __post_init__(self) -> None:
        n = self.rank
        if n < 0:
            raise ValueError("rank must be non-negative")
        seen = set()
        fulls = []
        for a, b, h in self.full_arcs:
            if a > b:
                a, b = b, a
            for e in (a, b):
                if not 1 <= e <= n:
                    raise ValueError(f"endpoint {e} out of range for rank {n}")
                if e in seen:
                    raise ValueError(f"endpoint {e} used twice")
                seen.add(e)
            if not (isinstance(h, int) and h >= 1):
                raise ValueError(f"height must be a positive integer, got {h!r}")
            fulls.append(Arc(a, b, h))
        halves = []
        for e, h in self.half_arcs:
            if not 1 <= e <= n:
                raise ValueError(f"endpoint {e} out of range for rank {n}")
            if e in seen:
                raise ValueError(f"endpoint {e} used twice")
            seen.add(e)
            if not (isinstance(h, int) and h >= 1):
                raise ValueError(f"height must be a positive integer, got {h!r}")
            halves.append(HalfArc(e, h))
        if len(seen) != n:
            raise ValueError(f"arcs must cover all of [1, {n}]")
        object.__setattr__(self, "full_arcs", tuple(sorted(fulls)))
        object.__setattr__(self, "half_arcs", tuple(sorted(halves)))

    def __repr__(self) -> str:
        body = ", ".join(f"({a},{b})h{h}" for a, b, h in self.full_arcs)
        tail = ", ".join(f"{e}|h{h}" for e, h in self.half_arcs)
        return f"HalfArcDiagram({self.rank}: {body}; {tail})"


# ---------------------------------------------------------------------------
# validation


def violations(d: ArcDiagram) -> tuple[str, ...]:
    """Crossing and label-condition failures of ``d`` (empty iff valid)."""
    n = d.rank
    out = []
    spans = [(order_key(a, n), order_key(b, n), a, b, h) for a, b, h in d.arcs]
    for i, (lo1, hi1, a1, b1, h1) in enumerate(spans):
        m = min(abs(a1), abs(b1))
        if h1 > m:
            out.append(f"label: h({a1},{b1})={h1} exceeds min(|a|,|b|)={m}")
        if (h1 - m) % 2 != 0:
            out.append(f"label: h({a1},{b1})={h1} has wrong parity (min={m})")
        for lo2, hi2, a2, b2, h2 in spans[i + 1 :]:
            if lo1 < lo2 < hi1 < hi2 or lo2 < lo1 < hi2 < hi1:
                out.append(f"crossing: ({a1},{b1}) and ({a2},{b2})")
            elif lo1 < lo2 and hi2 < hi1 and h2 <= h1:
                out.append(f"nesting: h({a2},{b2})={h2} not above h({a1},{b1})={h1}")
            elif lo2 < lo1 and hi1 < hi2 and h1 <= h2:
                out.append(f"nesting: h({a1},{b1})={h1} not above h({a2},{b2})={h2}")
    return tuple(out)


def validate(d: ArcDiagram) -> bool:
    """True iff all crossing and label invariants hold."""
    return not violations(d)


def half_violations(h: HalfArcDiagram) -> tuple[str, ...]:
    """Label/crossing failures of a half diagram (empty iff valid).

    A half arc blocks everything between its node and the right
    boundary, so a full arc may not straddle it; labels on the half arcs
    must be strictly increasing with the node (total nesting) and match
    the node parity, and they must assemble into a Fibonacci set.
    """
    n = h.rank
    out = []
    for a, b, ht in h.full_arcs:
        if ht > a:
            out.append(f"label: h({a},{b})={ht} exceeds {a}")
        if (ht - a) % 2 != 0:
            out.append(f"label: h({a},{b})={ht} has wrong parity at {a}")
    for e, ht in h.half_arcs:
        if ht > e:
            out.append(f"label: half arc at {e} labeled {ht} > {e}")
        if (ht - e) % 2 != 0:
            out.append(f"label: half arc at {e} labeled {ht}, wrong parity")
    for i, (a1, b1, h1) in enumerate(h.full_arcs):
        for a2, b2, h2 in h.full_arcs[i + 1 :]:
            if a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1:
                out.append(f"crossing: ({a1},{b1}) and ({a2},{b2})")
            elif a1 < a2 and b2 < b1 and h2 <= h1:
                out.append(f"nesting: h({a2},{b2})={h2} not above h({a1},{b1})={h1}")
            elif a2 < a1 and b1 < b2 and h1 <= h2:
                out.append(f"nesting: h({a1},{b1})={h1} not above h({a2},{b2})={h2}")
        for e, h2 in h.half_arcs:
            if a1 < e < b1:
                out.append(f"crossing: half arc at {e} under full arc ({a1},{b1})")
            elif e < a1 and h1 <= h2:
                out.append(
                    f"nesting: h({a1},{b1})={h1} not above half arc {e} labeled {h2}"
                )
    heights = [ht for _, ht in h.half_arcs]
    if any(h2 <= h1 for h1, h2 in zip(heights, heights[1:])):
        out.append(f"nesting: half-arc labels not increasing: {heights}")
    else:
        try:
            FibonacciSet(n, tuple(sorted(heights)))
        except ValueError:
            out.append(f"labels: half-arc labels {heights} are not a Fibonacci set")
    return tuple(out)


def validate_half(h: HalfArcDiagram) -> bool:
    return not half_violations(h)


# ---------------------------------------------------------------------------
# basic constructions


def identity(n: int) -> ArcDiagram:
    """Unit of the rank-``n`` monoid: propagating arcs ``h(a, -a) = a``."""
    return ArcDiagram(n, tuple(Arc(a, -a, a) for a in range(1, n + 1)))


def generator(i: int, n: int) -> ArcDiagram:
    """The elementary diagram with cups ``(i, i+1)`` and ``(-i, -(i+1))`` at height ``i``."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for rank {n}")
    arcs = [Arc(j, -j, j) for j in range(1, n + 1) if j not in (i, i + 1)]
    arcs.append(Arc(i, i + 1, i))
    arcs.append(Arc(-i, -(i + 1), i))
    return ArcDiagram(n, tuple(arcs))


def iota(d: ArcDiagram) -> ArcDiagram:
    """Embed rank ``n`` into rank ``n+1`` by adding ``h(n+1, -(n+1)) = n+1``."""
    n = d.rank
    return ArcDiagram(n + 1, d.arcs + (Arc(n + 1, -(n + 1), n + 1),))


def iota_inverse(d: ArcDiagram) -> ArcDiagram:
    """Remove the outer propagating arc ``h(n, -n) = n`` (must be present)."""
    n = d.rank
    if (n, -n, n) not in d.arcs:
        raise ValueError(f"diagram has no arc h({n},{-n})={n} to strip")
    return ArcDiagram(n - 1, tuple(a for a in d.arcs if a != (n, -n, n)))


def mirror(d: ArcDiagram) -> ArcDiagram:
    """Horizontal reflection: negate every endpoint, keep the labels."""
    return ArcDiagram(d.rank, tuple(Arc(-a, -b, h) for a, b, h in d.arcs))


# ---------------------------------------------------------------------------
# halves, gluing, restriction, chains


def bra(d: ArcDiagram) -> HalfArcDiagram:
    """Positive half: full arcs keep both ends, propagating arcs keep labels."""
    fulls = []
    halves = []
    for a, b, h in d.arcs:
        if a > 0 and b > 0:
            fulls.append(Arc(a, b, h))
        elif a > 0:
            halves.append(HalfArc(a, h))
        elif b > 0:
            halves.append(HalfArc(b, h))
    return HalfArcDiagram(d.rank, tuple(fulls), tuple(halves))


def ket(d: ArcDiagram) -> HalfArcDiagram:
    """Negative half, read as the bra of the mirror."""
    return bra(mirror(d))


def prop_lab(obj: ArcDiagram | HalfArcDiagram) -> FibonacciSet:
    """Propagating label set; a Fibonacci set of the object's rank."""
    if isinstance(obj, ArcDiagram):
        obj = bra(obj)
    return FibonacciSet(obj.rank, tuple(sorted(h for _, h in obj.half_arcs)))


def glue(left: HalfArcDiagram, right: HalfArcDiagram) -> ArcDiagram:
    """The unique diagram with the given bra and ket.

    Requires equal propagating label sets; the propagating arcs are
    matched by their labels (the nesting order is total on them, so the
    matching is forced).
    """
    if left.rank != right.rank:
        raise RankMismatchError(f"ranks {left.rank} and {right.rank} differ")
    lh = sorted(left.half_arcs)
    rh = sorted(right.half_arcs)
    if [h for _, h in lh] != [h for _, h in rh]:
        raise PropagatingMismatchError(
            f"propagating labels differ: {[h for _, h in lh]} vs {[h for _, h in rh]}"
        )
    arcs = list(left.full_arcs)
    arcs.extend(Arc(-a, -b, h) for a, b, h in right.full_arcs)
    arcs.extend(Arc(a, -b, h) for (a, h), (b, _) in zip(lh, rh))
    return ArcDiagram(left.rank, tuple(arcs))


def restrict(h: HalfArcDiagram, r: int) -> HalfArcDiagram:
    """Keep nodes ``<= r``; arcs cut by the restriction become half arcs."""
    if not 0 <= r <= h.rank:
        raise ValueError(f"restriction rank {r} out of range")
    fulls = [a for a in h.full_arcs if a.hi <= r]
    halves = [x for x in h.half_arcs if x.end <= r]
    halves.extend(HalfArc(a.lo, a.height) for a in h.full_arcs if a.lo <= r < a.hi)
    return HalfArcDiagram(r, tuple(fulls), tuple(halves))


def chain_of(h: HalfArcDiagram) -> Chain:
    """Saturated chain of the propagating labels of all restrictions."""
    return Chain(tuple(prop_lab(restrict(h, i)) for i in range(h.rank + 1)))


def chain_inverse(chain: Chain) -> HalfArcDiagram:
    """The unique half diagram whose restriction chain is ``chain``.

    Walking up the chain, adding a new largest label opens a half arc at
    the current node with that label; deleting the largest label closes
    the open half arc carrying it into a full arc.
    """
    open_by_height: dict[int, int] = {}
    fulls = []
    for i in range(1, chain.rank + 1):
        prev, cur = chain.sets[i - 1], chain.sets[i]
        if cur.elements == prev.elements[:-1]:
            h = prev.elements[-1]
            fulls.append(Arc(open_by_height.pop(h), i, h))
        else:  # covering step that appends a new largest element
            open_by_height[cur.elements[-1]] = i
    halves = tuple(HalfArc(pos, h) for h, pos in open_by_height.items())
    return HalfArcDiagram(chain.rank, tuple(fulls), halves)


# ---------------------------------------------------------------------------
# composition


def compose(c: ArcDiagram, d: ArcDiagram) -> tuple[ArcDiagram, tuple[LoopRecord, ...]]:
    """Stack ``c`` against ``d`` and remove loops.

    Returns the composite diagram together with the multiset of loop
    heights (aggregated per height, sorted).  Arc and loop heights are
    the minimum over their constituent fragments.
    """
    if c.rank != d.rank:
        raise RankMismatchError(f"ranks {c.rank} and {d.rank} differ")
    n = c.rank
    cp = c.partner_map()
    dp = d.partner_map()
    used_left: set[int] = set()
    used_right: set[int] = set()
    mid_seen: set[int] = set()
    arcs: list[Arc] = []

    def walk_from_mid(side: str, k: int, h: int) -> tuple[int, int, int]:
        """Follow the strand entering the middle column at node ``k``.

        ``side`` is the model about to be traversed ('D' when coming
        from c, 'C' when coming from d).  Returns (endpoint, sign-side,
        height): sign-side +1 for the left boundary, -1 for the right.
        """
        while True:
            mid_seen.add(k)
            if side == "D":
                v, hh = dp[k]
                h = min(h, hh)
                if v < 0:
                    return v, -1, h
                side, k = "C", v
            else:
                v, hh = cp[-k]
                h = min(h, hh)
                if v > 0:
                    return v, +1, h
                side, k = "D", -v

    for a in range(1, n + 1):
        if a in used_left:
            continue
        v, h = cp[a]
        if v > 0:
            used_left.update((a, v))
            arcs.append(Arc(a, v, h))
        else:
            end, sign, hh = walk_from_mid("D", -v, h)
            used_left.add(a)
            if sign > 0:
                used_left.add(end)
            else:
                used_right.add(end)
            arcs.append(Arc(a, end, hh))
    for b in range(-1, -n - 1, -1):
        if b in used_right:
            continue
        v, h = dp[b]
        if v < 0:
            used_right.update((b, v))
            arcs.append(Arc(b, v, h))
        else:
            end, sign, hh = walk_from_mid("C", v, h)
            if sign > 0:
                raise InternalInvariantError("strand from the right exited left")
            used_right.update((b, end))
            arcs.append(Arc(b, end, hh))

    loops: Counter[int] = Counter()
    for k in range(1, n + 1):
        if k in mid_seen:
            continue
        h = None
        side, cur = "D", k
        while True:
            mid_seen.add(cur)
            if side == "D":
                v, hh = dp[cur]
                h = hh if h is None else min(h, hh)
                side, cur = "C", v
            else:
                v, hh = cp[-cur]
                h = hh if h is None else min(h, hh)
                side, cur = "D", -v
            if cur == k and side == "D":
                break
        loops[h] += 1

    records = tuple(LoopRecord(h, loops[h]) for h in sorted(loops))
    return ArcDiagram(n, tuple(arcs)), records


def product_y1(c: ArcDiagram, d: ArcDiagram) -> tuple[Polynomial, ArcDiagram]:
    """Diagram product at ``y = 1``: loop heights become ``x`` factors."""
    result, loops = compose(c, d)
    coeff = Polynomial.one()
    for h, cnt in loops:
        coeff = coeff * x_var(h) ** cnt
    return coeff, result


# ---------------------------------------------------------------------------
# peeling


def peel(d: ArcDiagram) -> tuple[ArcDiagram, int]:
    """Strip the factor ``G_{n-1} ... G_I`` off the right of ``d``.

    Requires that ``d`` does not contain the arc ``h(n, -n) = n`` (strip
    that with :func:`iota_inverse` instead).  ``I`` is the largest index
    with ``h(-I, -(I+1)) = I`` present; the returned diagram ``flat``
    of rank ``n - 1`` is the unique one with
    ``d = iota(flat) * G_{n-1} * ... * G_I``.
    """
    n = d.rank
    pm = d.partner_map()
    if n >= 1 and pm.get(n) == (-n, n):
        raise ValueError(f"diagram contains h({n},{-n})={n}; apply iota_inverse")
    start = None
    for i in range(n - 1, 0, -1):
        if pm.get(-i) == (-(i + 1), i):
            start = i
            break
    if start is None:
        raise InternalInvariantError(f"no peelable arc in {d!r}")

    def relabel(e: int) -> int:
        if e == n:
            return -(n - 1)
        if e > 0:
            return e
        m = -e
        if m < start:
            return e
        if m >= start + 2:
            return -(m - 2)
        raise InternalInvariantError(f"endpoint {e} should have been consumed")

    arcs = [
        Arc(relabel(a), relabel(b), h)
        for a, b, h in d.arcs
        if (a, b) != (-(start + 1), -start)
    ]
    return ArcDiagram(n - 1, tuple(arcs)), start


# ---------------------------------------------------------------------------
# enumeration


def enumerate_half(
    n: int, s: FibonacciSet | None = None
) -> tuple[HalfArcDiagram, ...]:
    """All rank-``n`` half diagrams, optionally with propagating labels ``s``.

    Ordered by propagating label set, then by the restriction chain; the
    count per label set equals the number of saturated chains.
    """
    targets = (s,) if s is not None else enumerate_yfs(n)
    out = []
    for t in targets:
        if t.rank != n:
            raise RankMismatchError(f"label set {t} does not have rank {n}")
        out.extend(chain_inverse(c) for c in saturated_chains(t))
    return tuple(out)


def iter_diagrams(n: int) -> Iterator[ArcDiagram]:
    """Stream all rank-``n`` diagrams (``n!`` of them) in canonical order.

    Diagrams are produced by gluing pairs of half diagrams with equal
    propagating labels, so no deduplication is needed and memory stays
    proportional to the number of half diagrams.
    """
    for s in enumerate_yfs(n):
        halves = enumerate_half(n, s)
        for left in halves:
            for right in halves:
                yield glue(left, right)


def enumerate_diagrams(n: int) -> tuple[ArcDiagram, ...]:
    """All rank-``n`` diagrams as a tuple; see :func:`iter_diagrams`."""
    return tuple(iter_diagrams(n))
