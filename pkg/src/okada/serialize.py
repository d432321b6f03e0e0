"""Versioned JSON serialization for all public value types.

Every top-level object carries a ``schema`` tag (``okada.<kind>/1``) so
downstream fixtures can reject drift.  Shapes:

* Fibonacci set: ``{"rank": n, "elements": [s1, ...]}``
* arc diagram: ``{"rank": n, "arcs": [{"ends": [a, b], "height": h}, ...]}``
  with negative integers for right-boundary nodes, arcs in canonical order
* half diagram: full arcs as above plus ``{"end": a, "height": h}`` halves
* chain: ``{"sets": [fibset, ...]}``
* word: plain integer array; Fibonacci words: strings over "12"
* normalization result: dense exponent vectors
  ``{"coeff_x": [e1..e_{n-1}], "coeff_y": [e1..e_{n-2}], "perm": [...]}``
* algebra element: ``[{"perm": [...], "coeff": [{"x": [...], "y": [...],
  "c": m}, ...]}, ...]`` (one term object per monomial of the coefficient)

Parsing raises ``ValueError`` on malformed input.
"""

from __future__ import annotations

import json
from typing import Any

from .algebra import AlgebraElement
from .diagrams import Arc, ArcDiagram, HalfArc, HalfArcDiagram
from .fibonacci import Chain, FibonacciSet
from .polynomials import Polynomial
from .rewriting import NormalizationResult, Perm

SCHEMAS = {
    "fibset": "okada.fibset/1",
    "diagram": "okada.diagram/1",
    "half": "okada.half/1",
    "chain": "okada.chain/1",
    "normalization": "okada.normalization/1",
    "element": "okada.element/1",
    "rs": "okada.rs/1",
    "gram": "okada.gram/1",
    "factorization": "okada.factorization/1",
}


def dumps(obj: Any) -> str:
    """Compact, deterministic JSON encoding."""
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def _expect(obj: Any, key: str):
    if not isinstance(obj, dict) or key not in obj:
        raise ValueError(f"missing field {key!r} in {obj!r}")
    return obj[key]


def _check_schema(obj: dict, kind: str) -> None:
    tag = obj.get("schema")
    if tag is not None and tag != SCHEMAS[kind]:
        raise ValueError(f"schema mismatch: expected {SCHEMAS[kind]}, got {tag}")


# -- Fibonacci sets ---------------------------------------------------------


def fibset_to_obj(s: FibonacciSet) -> dict:
    return {"schema": SCHEMAS["fibset"], "rank": s.rank, "elements": list(s.elements)}


def obj_to_fibset(obj: dict) -> FibonacciSet:
    _check_schema(obj, "fibset")
    return FibonacciSet(int(_expect(obj, "rank")), tuple(int(x) for x in _expect(obj, "elements")))


# -- diagrams ----------------------------------------------------------------


def diagram_to_obj(d: ArcDiagram) -> dict:
    return {
        "schema": SCHEMAS["diagram"],
        "rank": d.rank,
        "arcs": [{"ends": [a, b], "height": h} for a, b, h in d.arcs],
    }


def obj_to_diagram(obj: dict) -> ArcDiagram:
    _check_schema(obj, "diagram")
    arcs = tuple(
        Arc(int(rec["ends"][0]), int(rec["ends"][1]), int(rec["height"]))
        for rec in _expect(obj, "arcs")
    )
    return ArcDiagram(int(_expect(obj, "rank")), arcs)


def half_to_obj(h: HalfArcDiagram) -> dict:
    return {
        "schema": SCHEMAS["half"],
        "rank": h.rank,
        "full_arcs": [{"ends": [a, b], "height": ht} for a, b, ht in h.full_arcs],
        "half_arcs": [{"end": e, "height": ht} for e, ht in h.half_arcs],
    }


def obj_to_half(obj: dict) -> HalfArcDiagram:
    _check_schema(obj, "half")
    fulls = tuple(
        Arc(int(rec["ends"][0]), int(rec["ends"][1]), int(rec["height"]))
        for rec in _expect(obj, "full_arcs")
    )
    halves = tuple(
        HalfArc(int(rec["end"]), int(rec["height"])) for rec in _expect(obj, "half_arcs")
    )
    return HalfArcDiagram(int(_expect(obj, "rank")), fulls, halves)


# -- chains ------------------------------------------------------------------


def chain_to_obj(c: Chain) -> dict:
    return {
        "schema": SCHEMAS["chain"],
        "sets": [{"rank": s.rank, "elements": list(s.elements)} for s in c.sets],
    }


def obj_to_chain(obj: dict) -> Chain:
    _check_schema(obj, "chain")
    sets = tuple(
        FibonacciSet(int(rec["rank"]), tuple(int(x) for x in rec["elements"]))
        for rec in _expect(obj, "sets")
    )
    return Chain(sets)


# -- polynomials and normalization results -----------------------------------


def poly_to_terms(p: Polynomial, n: int) -> list[dict]:
    """Dense exponent vectors per term: x over 1..n-1, y over 1..n-2."""
    out = []
    for term, c in p.terms():
        xs = [0] * max(n - 1, 0)
        ys = [0] * max(n - 2, 0)
        for (kind, i), e in term:
            if kind == "x":
                xs[i - 1] = e
            else:
                ys[i - 1] = e
        out.append({"x": xs, "y": ys, "c": c})
    return out


def terms_to_poly(terms: list[dict]) -> Polynomial:
    total = Polynomial.zero()
    for rec in terms:
        exps = {("x", i + 1): e for i, e in enumerate(rec.get("x", ())) if e}
        exps.update({("y", i + 1): e for i, e in enumerate(rec.get("y", ())) if e})
        total = total + Polynomial.monomial(exps, int(rec.get("c", 1)))
    return total


def normalization_to_obj(r: NormalizationResult) -> dict:
    coeff, term = r.coefficient.monomial_parts()
    if coeff != 1:
        raise ValueError(f"normalization coefficient has multiplier {coeff}")
    xs = [0] * max(r.n - 1, 0)
    ys = [0] * max(r.n - 2, 0)
    for (kind, i), e in term:
        if kind == "x":
            xs[i - 1] = e
        else:
            ys[i - 1] = e
    return {
        "schema": SCHEMAS["normalization"],
        "coeff_x": xs,
        "coeff_y": ys,
        "word": list(r.word),
        "perm": list(r.perm),
    }


# -- algebra elements ---------------------------------------------------------


def element_to_obj(a: AlgebraElement) -> dict:
    return {
        "schema": SCHEMAS["element"],
        "rank": a.rank,
        "terms": [
            {"perm": list(p), "coeff": poly_to_terms(c, a.rank)}
            for p, c in a.coefficients()
        ],
    }


def obj_to_element(obj: dict) -> AlgebraElement:
    _check_schema(obj, "element")
    rank = int(_expect(obj, "rank"))
    coeffs = {}
    for rec in _expect(obj, "terms"):
        p: Perm = tuple(int(v) for v in rec["perm"])
        coeffs[p] = terms_to_poly(rec["coeff"])
    return AlgebraElement(rank, coeffs)


# -- misc ----------------------------------------------------------------------


def parse_word(text: str) -> tuple[int, ...]:
    """Parse a whitespace/comma separated generator word like "2 1 2"."""
    items = text.replace(",", " ").split()
    return tuple(int(tok) for tok in items)


def parse_perm(text: str) -> Perm:
    p = tuple(int(tok) for tok in text.replace(",", " ").split())
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p
