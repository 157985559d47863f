"""Deterministic pictures of morphisms: ascii, SVG 1.1, and TikZ.

Diagrams are drawn in the cut-rectangle picture: inputs along the bottom
edge, outputs along the top, seam crossings as marked points on the left
and right edges (which are identified in the annulus and therefore drawn
dashed).  Essential circles, when a diagram carries any, appear as dashed
horizontal lines through the middle of the box.

A morphism renders as one panel per term, laid out left to right in
canonical term order with the coefficient printed above each panel, so
the same morphism always produces byte-identical output.  All floating
point coordinates are emitted with a fixed number of decimals.
"""

from __future__ import annotations

from .diagram import AnnularDiagram, Morphism, point_key

PAD = 30.0
CAP = 18.0
SLOT = 40.0


def _panel_geometry(d: AnnularDiagram) -> tuple[float, float]:
    box_w = SLOT * max(d.dom, d.cod, 1)
    box_h = 80.0 + 24.0 * d.seam
    return box_w, box_h


def _point_xy(
    d: AnnularDiagram, p: tuple[str, int], box_w: float, box_h: float
) -> tuple[float, float, float, float]:
    """Pixel position and inward normal of a boundary point (y grows down)."""
    kind, j = p
    if kind == "I":
        return box_w * (j + 1) / (d.dom + 1), box_h, 0.0, -1.0
    if kind == "O":
        return box_w * (j + 1) / (d.cod + 1), 0.0, 0.0, 1.0
    y = box_h - box_h * (j + 1) / (d.seam + 1)
    if kind == "L":
        return 0.0, y, 1.0, 0.0
    return box_w, y, -1.0, 0.0


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def render_svg(m: Morphism) -> str:
    terms = m.sorted_terms() or [(None, None)]
    panels = []
    x_off = 0.0
    total_h = 0.0
    for diag, coeff in terms:
        if diag is None:
            diag = AnnularDiagram(m.dom, m.cod, 0, 0, ())
            caption = "0"
        else:
            caption = str(coeff)
        box_w, box_h = _panel_geometry(diag)
        panel_w = box_w + 2 * PAD
        panel_h = box_h + 2 * PAD + CAP
        total_h = max(total_h, panel_h)
        panels.append(_svg_panel(diag, caption, x_off, box_w, box_h, coeff is None))
        x_off += panel_w
    body = "\n".join(panels)
    header = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(x_off)}" height="{_fmt(total_h)}" '
        f'viewBox="0 0 {_fmt(x_off)} {_fmt(total_h)}">'
    )
    return header + "\n" + body + "\n</svg>\n"


def _svg_panel(
    d: AnnularDiagram,
    caption: str,
    x_off: float,
    box_w: float,
    box_h: float,
    empty: bool,
) -> str:
    x0, y0 = x_off + PAD, PAD + CAP
    out = [f'<g transform="translate({_fmt(x0)},{_fmt(y0)})">']
    out.append(
        f'<text x="{_fmt(box_w / 2)}" y="{_fmt(-6.0)}" text-anchor="middle" '
        f'font-family="monospace" font-size="12">{_esc(caption)}</text>'
    )
    out.append(
        f'<rect x="0" y="0" width="{_fmt(box_w)}" height="{_fmt(box_h)}" '
        'fill="none" stroke="#888" stroke-width="1"/>'
    )
    for x in (0.0, box_w):
        out.append(
            f'<line x1="{_fmt(x)}" y1="0" x2="{_fmt(x)}" y2="{_fmt(box_h)}" '
            'stroke="#888" stroke-width="1" stroke-dasharray="4 3"/>'
        )
    if not empty:
        pull = min(0.45 * min(box_w, box_h), 60.0)
        for a, b in sorted(d.arcs, key=lambda arc: (point_key(arc[0]), point_key(arc[1]))):
            xa, ya, nxa, nya = _point_xy(d, a, box_w, box_h)
            xb, yb, nxb, nyb = _point_xy(d, b, box_w, box_h)
            out.append(
                f'<path d="M {_fmt(xa)} {_fmt(ya)} C '
                f'{_fmt(xa + pull * nxa)} {_fmt(ya + pull * nya)}, '
                f'{_fmt(xb + pull * nxb)} {_fmt(yb + pull * nyb)}, '
                f'{_fmt(xb)} {_fmt(yb)}" fill="none" stroke="#000" stroke-width="1.5"/>'
            )
        for t in range(d.ess):
            y = box_h * (t + 1) / (d.ess + 1)
            out.append(
                f'<line x1="0" y1="{_fmt(y)}" x2="{_fmt(box_w)}" y2="{_fmt(y)}" '
                'stroke="#b00" stroke-width="1.5" stroke-dasharray="6 4"/>'
            )
        for p in sorted(d.boundary_cycle(), key=point_key):
            x, y, nx, ny = _point_xy(d, p, box_w, box_h)
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="2.2" fill="#000"/>')
            label = f"{p[0]}{p[1]}"
            lx, ly = x - 12 * nx, y - 12 * ny
            out.append(
                f'<text x="{_fmt(lx)}" y="{_fmt(ly + 3.5)}" text-anchor="middle" '
                f'font-family="monospace" font-size="10" fill="#444">{label}</text>'
            )
    out.append("</g>")
    return "\n".join(out)


def _esc(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_tikz(m: Morphism) -> str:
    """One tikzpicture; panels share the canvas, x-shifted in cm."""
    terms = m.sorted_terms() or [(None, None)]
    out = ["\\begin{tikzpicture}[line width=0.8pt]"]
    x_off = 0.0
    for diag, coeff in terms:
        if diag is None:
            diag = AnnularDiagram(m.dom, m.cod, 0, 0, ())
            caption = "0"
        else:
            caption = str(coeff)
        box_w, box_h = _panel_geometry(diag)
        sx = lambda v: (x_off + v) / SLOT  # noqa: E731
        sy = lambda v: (box_h - v) / SLOT  # noqa: E731
        f = lambda v: f"{v:.3f}"  # noqa: E731
        out.append(
            f"\\node[anchor=south] at ({f(sx(box_w / 2))},{f(sy(0.0) + 0.15)})"
            f" {{${_tex(caption)}$}};"
        )
        out.append(
            f"\\draw[gray] ({f(sx(0.0))},{f(sy(0.0))}) rectangle"
            f" ({f(sx(box_w))},{f(sy(box_h))});"
        )
        out.append(
            f"\\draw[gray,dashed] ({f(sx(0.0))},{f(sy(0.0))}) --"
            f" ({f(sx(0.0))},{f(sy(box_h))});"
        )
        out.append(
            f"\\draw[gray,dashed] ({f(sx(box_w))},{f(sy(0.0))}) --"
            f" ({f(sx(box_w))},{f(sy(box_h))});"
        )
        if coeff is not None:
            pull = min(0.45 * min(box_w, box_h), 60.0) / SLOT
            for a, b in sorted(
                diag.arcs, key=lambda arc: (point_key(arc[0]), point_key(arc[1]))
            ):
                xa, ya, nxa, nya = _point_xy(diag, a, box_w, box_h)
                xb, yb, nxb, nyb = _point_xy(diag, b, box_w, box_h)
                out.append(
                    f"\\draw ({f(sx(xa))},{f(sy(ya))}) .. controls"
                    f" ({f(sx(xa) + pull * nxa)},{f(sy(ya) + pull * nya)}) and"
                    f" ({f(sx(xb) + pull * nxb)},{f(sy(yb) + pull * nyb)}) .."
                    f" ({f(sx(xb))},{f(sy(yb))});"
                )
            for t in range(diag.ess):
                y = box_h * (t + 1) / (diag.ess + 1)
                out.append(
                    f"\\draw[red,dashed] ({f(sx(0.0))},{f(sy(y))}) --"
                    f" ({f(sx(box_w))},{f(sy(y))});"
                )
            for p in sorted(diag.boundary_cycle(), key=point_key):
                x, y, _, _ = _point_xy(diag, p, box_w, box_h)
                out.append(f"\\fill ({f(sx(x))},{f(sy(y))}) circle (1.5pt);")
        x_off += box_w + 2 * PAD
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"


def _tex(caption: str) -> str:
    return caption


def render_ascii(m: Morphism) -> str:
    """Boxes with labeled edge points, arcs listed beneath each panel."""
    if not m.terms:
        return f"0 : {m.dom} -> {m.cod}\n"
    blocks = []
    for diag, coeff in m.sorted_terms():
        blocks.append(_ascii_panel(coeff, diag))
    return "\n".join(blocks)


def _ascii_panel(coeff, d: AnnularDiagram) -> str:
    top = " ".join(f"O{j}" for j in range(d.cod)) or "--"
    bot = " ".join(f"I{j}" for j in range(d.dom)) or "--"
    width = max(len(top), len(bot)) + 4
    lines = [f"({coeff}) . {d.dom} -> {d.cod}, seam {d.seam}, essential {d.ess}"]
    lines.append("+-" + top.center(width) + "-+")
    for t in reversed(range(d.seam)):
        lines.append(f"L{t}".ljust(2) + " " * (width + 2) + f"R{t}")
    if d.seam == 0:
        lines.append("|" + " " * (width + 2) + "|")
    lines.append("+-" + bot.center(width) + "-+")
    arcs = sorted(d.arcs, key=lambda arc: (point_key(arc[0]), point_key(arc[1])))
    for a, b in arcs:
        lines.append(f"  {a[0]}{a[1]} - {b[0]}{b[1]}")
    return "\n".join(lines) + "\n"
