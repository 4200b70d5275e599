"""SVG graph of an element of F on the unit square."""
from __future__ import annotations

from xml.sax.saxutils import escape

from .plmap import FElement


def render_svg(f: FElement, size: int = 400, margin: int = 30, title: str | None = None) -> str:
    """Plot the graph of ``f`` with its interior breakpoints marked.

    One ``<line class="segment">`` is emitted per linear piece and one
    ``<circle class="breakpoint">`` per interior breakpoint, so the document
    structure mirrors the breakpoint list.
    """
    bps = f.breakpoints
    total = size + 2 * margin

    def sx(v) -> str:
        return f"{margin + float(v) * size:.3f}"

    def sy(v) -> str:
        return f"{margin + (1 - float(v)) * size:.3f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{total}" height="{total}" viewBox="0 0 {total} {total}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(f'<rect class="frame" x="{margin}" y="{margin}" width="{size}" height="{size}" '
               'fill="none" stroke="#888" stroke-width="1"/>')
    for x, _ in bps[1:-1]:
        out.append(f'<line class="grid" x1="{sx(x)}" y1="{sy(0)}" x2="{sx(x)}" y2="{sy(1)}" '
                   'stroke="#ddd" stroke-width="0.5"/>')
    for (x0, y0), (x1, y1) in zip(bps, bps[1:]):
        out.append(f'<line class="segment" x1="{sx(x0)}" y1="{sy(y0)}" x2="{sx(x1)}" y2="{sy(y1)}" '
                   'stroke="#1f4e9c" stroke-width="2"/>')
    for x, y in bps[1:-1]:
        out.append(f'<circle class="breakpoint" cx="{sx(x)}" cy="{sy(y)}" r="3" fill="#c0392b">'
                   f"<title>({x}, {y})</title></circle>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
