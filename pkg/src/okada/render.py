"""Deterministic SVG and TikZ renderers.

Arc diagrams follow the usual drawing conventions: positive nodes run up
the left column, negated nodes sit on the right with ``-1`` at the
bottom, propagating arcs cross the strip, same-side arcs bow inward, and
every arc carries its height in a small circle at the midpoint.  Hasse
diagrams are emitted for the Young-Fibonacci lattice (up to a rank) and
for the dominance order of a fixed rank.

Output is plain text built from integers and fixed-precision floats, so
identical inputs produce byte-identical documents.
"""

from __future__ import annotations

from .diagrams import ArcDiagram, HalfArcDiagram
from .fibonacci import (
    FibonacciSet,
    dominance_covers,
    dominance_rank,
    enumerate_yfs,
    set_to_word,
    yf_covers,
)

__all__ = [
    "render_diagram_svg",
    "render_diagram_tikz",
    "render_half_svg",
    "render_half_tikz",
    "render_yfs_hasse_svg",
    "render_yfs_hasse_tikz",
    "render_dominance_svg",
    "render_dominance_tikz",
]

_SP = 36  # vertical spacing between boundary nodes
_XL, _XR = 60, 260
_MARGIN = 24


def _f(v: float) -> str:
    return f"{v:.1f}"


def _svg_header(width: int, height: int) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g fill="none" stroke="black" stroke-width="1.5">',
    ]


def _label(cx: float, cy: float, text: str) -> str:
    return (
        f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="9.0" fill="white" stroke="black"/>'
        f'<text x="{_f(cx)}" y="{_f(cy)}" font-size="11" fill="black" stroke="none" '
        f'text-anchor="middle" dominant-baseline="central">{text}</text>'
    )


def _arc_paths(d: ArcDiagram, height: int):
    """Path and label placement per arc, in canonical order."""

    def y(node: int) -> float:
        return height - _MARGIN - (abs(node) - 1) * _SP

    out = []
    for a, b, h in d.arcs:
        ya, yb = y(a), y(b)
        if a > 0 and b > 0:
            bulge = _XL + 0.55 * _SP * (abs(b) - abs(a))
            path = f"M {_f(_XL)} {_f(ya)} C {_f(bulge)} {_f(ya)} {_f(bulge)} {_f(yb)} {_f(_XL)} {_f(yb)}"
            lx, ly = _XL + 0.41 * _SP * (abs(b) - abs(a)), (ya + yb) / 2
        elif a < 0 and b < 0:
            bulge = _XR - 0.55 * _SP * abs(abs(b) - abs(a))
            path = f"M {_f(_XR)} {_f(ya)} C {_f(bulge)} {_f(ya)} {_f(bulge)} {_f(yb)} {_f(_XR)} {_f(yb)}"
            lx, ly = _XR - 0.41 * _SP * abs(abs(b) - abs(a)), (ya + yb) / 2
        else:
            path = f"M {_f(_XL)} {_f(ya)} L {_f(_XR)} {_f(yb)}"
            lx, ly = (_XL + _XR) / 2, (ya + yb) / 2
        out.append((path, lx, ly, h))
    return out


def render_diagram_svg(d: ArcDiagram) -> str:
    height = 2 * _MARGIN + max(d.rank - 1, 0) * _SP
    lines = _svg_header(_XR + _MARGIN + 36, height)
    for path, *_ in _arc_paths(d, height):
        lines.append(f'<path d="{path}"/>')
    lines.append("</g>")
    for _, lx, ly, h in _arc_paths(d, height):
        lines.append(_label(lx, ly, str(h)))

    def y(node: int) -> float:
        return height - _MARGIN - (abs(node) - 1) * _SP

    for k in range(1, d.rank + 1):
        lines.append(
            f'<text x="{_f(_XL - 18)}" y="{_f(y(k))}" font-size="11" '
            f'text-anchor="middle" dominant-baseline="central">{k}</text>'
        )
        lines.append(
            f'<text x="{_f(_XR + 18)}" y="{_f(y(k))}" font-size="11" '
            f'text-anchor="middle" dominant-baseline="central">-{k}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_diagram_tikz(d: ArcDiagram) -> str:
    lines = [
        "\\begin{tikzpicture}[xscale=0.7,yscale=0.45,thick]",
        "\\tikzstyle{vertex}=[shape=rectangle,minimum height=15pt,inner sep=0pt]",
        "\\tikzstyle{mid}=[draw,fill=white,shape=circle,minimum size=2pt,inner sep=1pt]",
    ]
    for k in range(1, d.rank + 1):
        yy = _f(k * 1.5 - 1.5)
        lines.append(f"\\node[vertex] (p{k}) at (-2.1,{yy}) {{{k}}};")
        lines.append(f"\\node[vertex] (m{k}) at (2.1,{yy}) {{$\\overline{{{k}}}$}};")

    def name(node: int) -> str:
        return f"p{node}" if node > 0 else f"m{-node}"

    for a, b, h in d.arcs:
        if a > 0 and b > 0:
            off = _f(0.7 * (b - a))
            up, dn = _f(0.35 * (b - a)), _f(-0.35 * (b - a))
            lines.append(
                f"\\draw ({name(a)}) .. controls +({off},{up}) and +({off},{dn}) "
                f".. ({name(b)}) node[pos=0.5,mid] {{{h}}};"
            )
        elif a < 0 and b < 0:
            span = abs(a) - abs(b)
            off = _f(-0.7 * span)
            up, dn = _f(0.35 * span), _f(-0.35 * span)
            lines.append(
                f"\\draw ({name(b)}) .. controls +({off},{up}) and +({off},{dn}) "
                f".. ({name(a)}) node[pos=0.5,mid] {{{h}}};"
            )
        else:
            lines.append(f"\\draw ({name(a)}) -- ({name(b)}) node[pos=0.5,mid] {{{h}}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def render_half_svg(h: HalfArcDiagram) -> str:
    height = 2 * _MARGIN + max(h.rank - 1, 0) * _SP

    def y(node: int) -> float:
        return height - _MARGIN - (node - 1) * _SP

    lines = _svg_header(_XR + _MARGIN, height)
    pieces = []
    for a, b, ht in h.full_arcs:
        bulge = _XL + 0.55 * _SP * (b - a)
        pieces.append(
            (
                f"M {_f(_XL)} {_f(y(a))} C {_f(bulge)} {_f(y(a))} {_f(bulge)} {_f(y(b))} {_f(_XL)} {_f(y(b))}",
                _XL + 0.41 * _SP * (b - a),
                (y(a) + y(b)) / 2,
                ht,
            )
        )
    for e, ht in h.half_arcs:
        pieces.append(
            (f"M {_f(_XL)} {_f(y(e))} L {_f(_XR)} {_f(y(e))}", (_XL + _XR) / 2, y(e), ht)
        )
    for path, *_ in pieces:
        lines.append(f'<path d="{path}"/>')
    lines.append("</g>")
    for _, lx, ly, ht in pieces:
        lines.append(_label(lx, ly, str(ht)))
    for k in range(1, h.rank + 1):
        lines.append(
            f'<text x="{_f(_XL - 18)}" y="{_f(y(k))}" font-size="11" '
            f'text-anchor="middle" dominant-baseline="central">{k}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_half_tikz(h: HalfArcDiagram) -> str:
    lines = [
        "\\begin{tikzpicture}[xscale=0.7,yscale=0.45,thick]",
        "\\tikzstyle{vertex}=[shape=rectangle,minimum height=15pt,inner sep=0pt]",
        "\\tikzstyle{mid}=[draw,fill=white,shape=circle,minimum size=2pt,inner sep=1pt]",
    ]
    for k in range(1, h.rank + 1):
        lines.append(f"\\node[vertex] (p{k}) at (-2.1,{_f(k * 1.5 - 1.5)}) {{{k}}};")
    for a, b, ht in h.full_arcs:
        off, up, dn = _f(0.7 * (b - a)), _f(0.35 * (b - a)), _f(-0.35 * (b - a))
        lines.append(
            f"\\draw (p{a}) .. controls +({off},{up}) and +({off},{dn}) "
            f".. (p{b}) node[pos=0.5,mid] {{{ht}}};"
        )
    for e, ht in h.half_arcs:
        yy = _f(e * 1.5 - 1.5)
        lines.append(f"\\draw (p{e}) -- (2.1,{yy}) node[pos=0.5,mid] {{{ht}}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Hasse diagrams


def _node_id(s: FibonacciSet) -> str:
    return f"n{s.rank}_" + "_".join(str(x) for x in s.elements)


def _node_label(s: FibonacciSet) -> str:
    word = set_to_word(s) or "e"
    inner = ",".join(str(x) for x in s.elements)
    return f"{word} | {{{inner}}}_{s.rank}"


def render_yfs_hasse_svg(max_rank: int) -> str:
    sp_x, sp_y = 120, 70
    rows = [enumerate_yfs(n) for n in range(max_rank + 1)]
    width = max(len(r) for r in rows) * sp_x + 2 * _MARGIN
    height = (max_rank + 1) * sp_y + _MARGIN

    def pos(s: FibonacciSet):
        row = rows[s.rank]
        i = row.index(s)
        x = width / 2 + (i - (len(row) - 1) / 2) * sp_x
        y = height - _MARGIN - s.rank * sp_y
        return x, y

    lines = _svg_header(int(width), int(height))
    for n in range(max_rank):
        for s in rows[n]:
            x1, y1 = pos(s)
            for t in yf_covers(s):
                x2, y2 = pos(t)
                lines.append(
                    f'<line x1="{_f(x1)}" y1="{_f(y1 - 10)}" x2="{_f(x2)}" y2="{_f(y2 + 10)}"/>'
                )
    lines.append("</g>")
    for n in range(max_rank + 1):
        for s in rows[n]:
            x, y = pos(s)
            lines.append(
                f'<text x="{_f(x)}" y="{_f(y)}" font-size="11" text-anchor="middle" '
                f'dominant-baseline="central">{_node_label(s)}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_yfs_hasse_tikz(max_rank: int) -> str:
    rows = [enumerate_yfs(n) for n in range(max_rank + 1)]
    lines = ["\\begin{tikzpicture}[>=latex,xscale=2.2,yscale=1.1]"]
    for n, row in enumerate(rows):
        for i, s in enumerate(row):
            x = _f(i - (len(row) - 1) / 2)
            lines.append(
                f"\\node ({_node_id(s)}) at ({x},{n}) {{${_node_label(s)}$}};"
            )
    for n in range(max_rank):
        for s in rows[n]:
            for t in yf_covers(s):
                lines.append(f"\\draw[->] ({_node_id(s)}) -- ({_node_id(t)});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def render_dominance_svg(n: int) -> str:
    sp_x, sp_y = 110, 64
    sets = enumerate_yfs(n)
    levels: dict[int, list[FibonacciSet]] = {}
    for s in sets:
        levels.setdefault(dominance_rank(s), []).append(s)
    for level in levels.values():
        level.sort()
    depth = max(levels) if levels else 0
    width = max(len(v) for v in levels.values()) * sp_x + 2 * _MARGIN
    height = (depth + 1) * sp_y + _MARGIN

    def pos(s: FibonacciSet):
        r = dominance_rank(s)
        row = levels[r]
        x = width / 2 + (row.index(s) - (len(row) - 1) / 2) * sp_x
        return x, height - _MARGIN - r * sp_y

    lines = _svg_header(int(width), int(height))
    for a, b in dominance_covers(n):
        x1, y1 = pos(a)
        x2, y2 = pos(b)
        lines.append(
            f'<line x1="{_f(x1)}" y1="{_f(y1 - 10)}" x2="{_f(x2)}" y2="{_f(y2 + 10)}"/>'
        )
    lines.append("</g>")
    for s in sets:
        x, y = pos(s)
        inner = ",".join(str(v) for v in s.elements)
        lines.append(
            f'<text x="{_f(x)}" y="{_f(y)}" font-size="11" text-anchor="middle" '
            f'dominant-baseline="central">{{{inner}}}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_dominance_tikz(n: int) -> str:
    sets = enumerate_yfs(n)
    levels: dict[int, list[FibonacciSet]] = {}
    for s in sets:
        levels.setdefault(dominance_rank(s), []).append(s)
    for level in levels.values():
        level.sort()
    lines = ["\\begin{tikzpicture}[>=latex,yscale=1.0]"]
    for r in sorted(levels):
        row = levels[r]
        for i, s in enumerate(row):
            x = _f(i - (len(row) - 1) / 2)
            inner = ",".join(str(v) for v in s.elements)
            lines.append(
                f"\\node ({_node_id(s)}) at ({x},{r}) {{$\\{{{inner}\\}}$}};"
            )
    for a, b in dominance_covers(n):
        lines.append(f"\\draw[->] ({_node_id(a)}) -- ({_node_id(b)});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
