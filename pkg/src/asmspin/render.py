"""ASCII and SVG diagnostic renderers for lattice diagrams.

The vertex view draws the n x n lattice with every edge labeled by its
value (domain-wall boundary: zeros on the upper/left stubs, r on the
lower/right ones).  The paths view draws only occupied edges, ASCII with
multiplicity labels or SVG with one polyline per path, offset within each
shared edge.  The cem view is the vertex view of a complementary pair.

SVG output is standalone, hand-rolled markup with a fixed 40-unit cell
pitch; rendering is a diagnostic aid, not a graphics product.
"""

from __future__ import annotations

from .bijections import asm_to_edge, edge_to_complementary
from .core import AsmMatrix, ComplementaryEdgePair, EdgeMatrixPair
from .errors import UnsupportedView
from .paths import edge_to_paths

PITCH = 40
MARGIN = 60

VIEWS = ("vertex", "paths", "cem")
FORMATS = ("ascii", "svg")


def _to_edge_pair(obj) -> EdgeMatrixPair:
    if isinstance(obj, AsmMatrix):
        return asm_to_edge(obj)
    if isinstance(obj, EdgeMatrixPair):
        return obj
    raise UnsupportedView(
        f"view needs a matrix or edge pair, got {type(obj).__name__}"
    )


def _grid_ascii(n: int, hval, vval, show_zero: bool) -> str:
    """Shared ASCII lattice layout; hval(i, j) and vval(i, j) give labels."""
    lw = max(
        [len(str(hval(i, j))) for i in range(1, n + 1) for j in range(n + 1)]
        + [len(str(vval(i, j))) for i in range(n + 1) for j in range(1, n + 1)]
    )
    stub = lw + 2  # left boundary label + space
    step = lw + 5  # "+" then "--label--"
    width = stub + 2 + n * step + 2 + lw

    def pos(j: int) -> int:
        return stub + 2 + (j - 1) * step

    lines = []

    def put(chars: list[str], at: int, text: str):
        for k, ch in enumerate(text):
            chars[at + k] = ch

    def vlabel_line(i: int) -> str:
        chars = [" "] * width
        for j in range(1, n + 1):
            label = str(vval(i, j))
            if show_zero or vval(i, j) != 0:
                put(chars, pos(j) - (len(label) - 1) // 2, label)
        return "".join(chars).rstrip()

    def vbar_line(i: int) -> str:
        chars = [" "] * width
        for j in range(1, n + 1):
            if show_zero or vval(i, j) != 0:
                chars[pos(j)] = "|"
        return "".join(chars).rstrip()

    def hline(i: int) -> str:
        chars = [" "] * width
        left = str(hval(i, 0))
        if show_zero or hval(i, 0) != 0:
            put(chars, stub - len(left) - 1, left + " ")
            put(chars, stub, "--")
        for j in range(1, n + 1):
            chars[pos(j)] = "+"
            if j < n:
                label = str(hval(i, j))
                if show_zero or hval(i, j) != 0:
                    seg = f"{label:-^{step - 1}}"
                    put(chars, pos(j) + 1, seg)
            else:
                if show_zero or hval(i, n) != 0:
                    put(chars, pos(n) + 1, "-- " + str(hval(i, n)))
        return "".join(chars).rstrip()

    for i in range(1, n + 1):
        lines.append(vlabel_line(i - 1))
        lines.append(vbar_line(i - 1))
        lines.append(hline(i))
        lines.append(vbar_line(i))
    lines.append(vlabel_line(n))
    return "\n".join(lines) + "\n"


def _svg_header(n: int) -> list[str]:
    size = 2 * MARGIN + (n - 1) * PITCH
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}" font-family="monospace" font-size="12">',
    ]


def _xy(i: int, j: int) -> tuple[int, int]:
    return MARGIN + (j - 1) * PITCH, MARGIN + (i - 1) * PITCH


def _grid_svg(n: int, hval, vval, show_zero: bool) -> str:
    half = PITCH // 2
    out = _svg_header(n)
    for i in range(1, n + 1):
        x0, y = _xy(i, 1)
        x1, _ = _xy(i, n)
        out.append(
            f'<line x1="{x0 - half}" y1="{y}" x2="{x1 + half}" y2="{y}" '
            'stroke="black" stroke-width="1"/>'
        )
    for j in range(1, n + 1):
        x, y0 = _xy(1, j)
        _, y1 = _xy(n, j)
        out.append(
            f'<line x1="{x}" y1="{y0 - half}" x2="{x}" y2="{y1 + half}" '
            'stroke="black" stroke-width="1"/>'
        )
    for i in range(1, n + 1):
        for j in range(n + 1):
            val = hval(i, j)
            if not show_zero and val == 0:
                continue
            if j == 0:
                x, y = _xy(i, 1)
                x -= half
            elif j == n:
                x, y = _xy(i, n)
                x += half
            else:
                xa, y = _xy(i, j)
                x = xa + PITCH // 2
            out.append(
                f'<text x="{x}" y="{y - 4}" text-anchor="middle">{val}</text>'
            )
    for i in range(n + 1):
        for j in range(1, n + 1):
            val = vval(i, j)
            if not show_zero and val == 0:
                continue
            if i == 0:
                x, y = _xy(1, j)
                y -= half
            elif i == n:
                x, y = _xy(n, j)
                y += half
            else:
                x, ya = _xy(i, j)
                y = ya + PITCH // 2
            out.append(
                f'<text x="{x + 4}" y="{y + 4}" text-anchor="start">{val}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _paths_svg(e: EdgeMatrixPair) -> str:
    family = edge_to_paths(e)
    hmult, vmult = {}, {}
    for i in range(1, e.n + 1):
        for j in range(e.n + 1):
            hmult[(i, j)] = e.h(i, j)
    for i in range(e.n + 1):
        for j in range(1, e.n + 1):
            vmult[(i, j)] = e.v(i, j)
    hseen: dict = {}
    vseen: dict = {}
    gap = 6
    out = _svg_header(e.n)
    out.append('<g fill="none" stroke="blue" stroke-width="1.2">')
    for path in family.paths:
        pts: list[tuple[float, float]] = []
        for a, b in zip(path, path[1:]):
            if b[1] == a[1] + 1:  # rightward along h(a)
                key = (a[0], a[1])
                lane = hseen[key] = hseen.get(key, -1) + 1
                off = (lane - (hmult.get(key, 1) - 1) / 2) * gap
                xa, ya = _xy(*a)
                xb, yb = _xy(*b)
                pts.append((xa, ya + off))
                pts.append((xb, yb + off))
            else:  # upward along v(b)
                key = (b[0], b[1])
                lane = vseen[key] = vseen.get(key, -1) + 1
                off = (lane - (vmult.get(key, 1) - 1) / 2) * gap
                xa, ya = _xy(*a)
                xb, yb = _xy(*b)
                pts.append((xa + off, ya))
                pts.append((xb + off, yb))
        coords = " ".join(f"{format(x, 'g')},{format(y, 'g')}" for x, y in pts)
        out.append(f'<polyline points="{coords}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(obj, fmt: str = "ascii", view: str = "vertex") -> str:
    """Render a diagram; raises UnsupportedView for kind/view mismatches."""
    if view not in VIEWS:
        raise UnsupportedView(f"view must be one of {VIEWS}, got {view!r}")
    if fmt not in FORMATS:
        raise UnsupportedView(f"format must be one of {FORMATS}, got {fmt!r}")
    if view == "cem":
        if isinstance(obj, ComplementaryEdgePair):
            cem = obj
        else:
            cem = edge_to_complementary(_to_edge_pair(obj))
        draw = _grid_ascii if fmt == "ascii" else _grid_svg
        return draw(cem.n, cem.hbar, cem.vbar, True)
    if isinstance(obj, ComplementaryEdgePair):
        raise UnsupportedView("a complementary pair only supports the cem view")
    e = _to_edge_pair(obj)
    if view == "vertex":
        draw = _grid_ascii if fmt == "ascii" else _grid_svg
        return draw(e.n, e.h, e.v, True)
    if fmt == "ascii":
        return _grid_ascii(e.n, e.h, e.v, False)
    return _paths_svg(e)
