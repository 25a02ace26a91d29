"""SVG drawing of one side's strip complex.

Rectangles are drawn side by side with their cut bands removed. Each cut is
joined to the outer band it is glued to by a colored arc, compact leaves are
drawn across the strips they visit, and cap gaps are shaded. The unstable side
is drawn in its own frame, with cuts vertical.
"""

from __future__ import annotations

import os
import xml.etree.ElementTree as ET
from fractions import Fraction

from .surface.complex import FIRST, SurfaceComplex
from .surface.lamination import trace_leaf
from .surface.regions import RegionAnalysis

SIZE = 200
MARGIN = 40
SPACING = 80
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")
LEAF_COLOR = "#000000"
CAP_FILL = "#c7c7c7"


def use_color() -> bool:
    return os.environ.get("ANOSOV_COLOR", "1") != "0"


def _num(x) -> str:
    return f"{float(x):.3f}".rstrip("0").rstrip(".")


class _Frame:
    def __init__(self, cx: SurfaceComplex):
        self.cx = cx
        self.table = cx.table

    def x(self, i: int, t) -> float:
        return MARGIN + i * (SIZE + SPACING) + float(t) * SIZE

    def y(self, t) -> float:
        return MARGIN + (1 - float(t)) * SIZE

    def strip_span(self, i: int, s: int) -> tuple[Fraction, Fraction]:
        c = self.table.cuts[i]
        lo = Fraction(0) if s == 0 else self.cx.layout.band(s - 1, c)[1]
        hi = Fraction(1) if s == c else self.cx.layout.band(s, c)[0]
        return lo, hi


def render_svg(cx: SurfaceComplex, analysis: RegionAnalysis | None = None, title: str = "") -> str:
    ra = analysis or RegionAnalysis(cx)
    fr = _Frame(cx)
    table = cx.table
    color = use_color()
    width = 2 * MARGIN + table.n * SIZE + (table.n - 1) * SPACING
    height = 2 * MARGIN + SIZE + 40
    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=str(width),
        height=str(height),
        viewBox=f"0 0 {width} {height}",
    )
    ET.SubElement(svg, "title").text = title or f"{cx.kind} strip complex"

    caps = ET.SubElement(svg, "g", id="caps", fill=CAP_FILL, stroke="none")
    for g in ra.gap_report():
        if not g.cap:
            continue
        count = table.bands[g.rect]
        lo = Fraction(0) if g.gap == 0 else cx.layout.band(g.gap - 1, count)[1]
        hi = Fraction(1) if g.gap == count else cx.layout.band(g.gap, count)[0]
        outer = table.side_code(g.side)
        s = table.outer_strip(g.rect, outer)
        a, b = fr.strip_span(g.rect, s)
        ET.SubElement(
            caps, "rect",
            x=_num(fr.x(g.rect, a)), y=_num(fr.y(hi)),
            width=_num(fr.x(g.rect, b) - fr.x(g.rect, a)), height=_num(fr.y(lo) - fr.y(hi)),
        )

    strips = ET.SubElement(svg, "g", id="strips", fill="none", stroke="#000000")
    for i in range(table.n):
        for s in range(table.cuts[i] + 1):
            a, b = fr.strip_span(i, s)
            ET.SubElement(
                strips, "rect",
                x=_num(fr.x(i, a)), y=_num(fr.y(1)),
                width=_num(fr.x(i, b) - fr.x(i, a)), height=_num(SIZE),
            )
        label = ET.SubElement(strips, "text", x=_num(fr.x(i, Fraction(1, 2))), y=_num(fr.y(0) + 20))
        label.set("text-anchor", "middle")
        label.set("stroke", "none")
        label.set("fill", "#000000")
        label.text = f"R{i + 1}"

    arcs = ET.SubElement(svg, "g", id="gluings", fill="none")
    n_color = 0
    for i in range(table.n):
        for l in range(table.cuts[i]):
            stroke = PALETTE[n_color % len(PALETTE)] if color else "#000000"
            n_color += 1
            lo, hi = cx.layout.band(l, table.cuts[i])
            for bank, x0 in (("g", lo), ("d", hi)):
                k, m, outer, _ = table.bank_target(i, l, bank)
                ylo, yhi = cx.layout.band(m, table.bands[k])
                x1 = fr.x(k, 0 if outer == FIRST else 1)
                y1 = fr.y((ylo + yhi) / 2)
                sx, sy = fr.x(i, x0), fr.y(Fraction(1, 2))
                lift = MARGIN * 0.8
                d = f"M {_num(sx)} {_num(sy)} C {_num(sx)} {_num(sy - SIZE / 2 - lift)} {_num(x1)} {_num(fr.y(1) - lift)} {_num(x1)} {_num(y1)}"
                ET.SubElement(arcs, "path", d=d, stroke=stroke)

    leaves = ET.SubElement(svg, "g", id="leaves", stroke=LEAF_COLOR, fill="none")
    leaves.set("stroke-width", "2")
    for leaf in ra.leaves:
        tr = trace_leaf(cx, leaf, ra.component_of)
        parts = []
        for i, s, y, _ in tr.steps:
            a, b = fr.strip_span(i, s)
            parts.append(f"M {_num(fr.x(i, a))} {_num(fr.y(y))} L {_num(fr.x(i, b))} {_num(fr.y(y))}")
        ET.SubElement(leaves, "path", d=" ".join(parts), id=f"leaf{leaf.index}")

    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode") + "\n"
