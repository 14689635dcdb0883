"""ASCII and SVG pictures of shapes and nets."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .graph_core import format_edge
from .unfold import CanonicalShape, Net, Point

UNIT = 32
MARGIN = 8


def _cells(obj: Net | CanonicalShape | list[Point]) -> list[Point]:
    if isinstance(obj, (Net, CanonicalShape)):
        return list(obj.cells)
    return list(obj)


def ascii_art(obj: Net | CanonicalShape | list[Point]) -> str:
    """``#`` per occupied cell on the bounding grid, top row = largest y."""
    cells = set(_cells(obj))
    xs = [x for x, _ in cells]
    ys = [y for _, y in cells]
    rows = []
    for y in range(max(ys), min(ys) - 1, -1):
        rows.append("".join("#" if (x, y) in cells else "." for x in range(min(xs), max(xs) + 1)))
    return "\n".join(rows)


def svg(obj: Net | CanonicalShape | list[Point], title: str | None = None) -> str:
    cells = _cells(obj)
    min_x = min(x for x, _ in cells)
    max_x = max(x for x, _ in cells)
    min_y = min(y for _, y in cells)
    max_y = max(y for _, y in cells)
    width = (max_x - min_x + 1) * UNIT + 2 * MARGIN
    height = (max_y - min_y + 1) * UNIT + 2 * MARGIN

    def px(p: Point) -> tuple[int, int]:
        # lattice point -> pixel, y flipped
        return (MARGIN + (p[0] - min_x) * UNIT, MARGIN + (max_y + 1 - p[1]) * UNIT)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if title:
        out.append(f"  <title>{escape(title)}</title>")
    for x, y in sorted(cells):
        left, top = px((x, y + 1))
        out.append(
            f'  <rect x="{left}" y="{top}" width="{UNIT}" height="{UNIT}" '
            'fill="#f2d49b" stroke="#333" stroke-width="1"/>'
        )
    if isinstance(obj, Net):
        for face, cell in obj.placements.items():
            cx, cy = px((cell[0], cell[1] + 1))
            out.append(
                f'  <text x="{cx + UNIT // 2}" y="{cy + UNIT // 2 + 4}" font-size="9" '
                f'text-anchor="middle">{face.name}</text>'
            )
        for a, _, e in obj.hinges:
            (x1, y1), (x2, y2) = (px(obj.corner_map[a][w]) for w in e)
            out.append(
                f'  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#1a6" '
                f'stroke-width="3" stroke-dasharray="4 2"><title>hinge {format_edge(e)}</title></line>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
