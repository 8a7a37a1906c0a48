"""SVG and TikZ emitters for nested body diagrams.

All machine-readable output elsewhere stays exact-rational; the floats
emitted here are presentation-only, scaled by a configurable unit length
(default 51/5 = 10.2) and rounded to 4 decimals.  Tick marks sit at the
horizontal reach of each body, dashed guides at the profile-knee heights.
"""

from __future__ import annotations

from fractions import Fraction

from .polygon import Polygon
from .scalars import as_scalar, format_rational

DEFAULT_SCALE = Fraction(51, 5)


def _fmt(value) -> str:
    return f"{float(value):.4f}"


def _label(value) -> str:
    return format_rational(value) if not hasattr(value, "to_json") else str(value)


def _tick_data(bodies):
    """X ticks (body reaches) and y guides (knee height, knee x-extent)."""
    x_ticks = set()
    y_guides = set()
    for _n, body in bodies:
        if body.is_empty:
            continue
        reach = max(x for x, _ in body.vertices)
        if reach > 0:
            x_ticks.add(reach)
        top = max(y for _, y in body.vertices)
        y_guides.add((top, 0))
        for x, y in body.vertices:
            if x > 0 and y > 0:
                y_guides.add((y, x))
    x_sorted = sorted(x_ticks)
    guides = {}
    for y, extent in sorted(y_guides):
        guides[y] = max(guides.get(y, 0), extent)
    return x_sorted, sorted(guides.items())


def emit_figure(bodies, fmt: str = "svg", scale=DEFAULT_SCALE) -> str:
    """Render nested bodies with axes, exact-fraction tick labels and dashed guides."""
    scale = as_scalar(scale)
    if fmt == "svg":
        return _emit_svg(bodies, scale)
    if fmt == "tikz":
        return _emit_tikz(bodies, scale)
    raise ValueError(f"unknown figure format {fmt!r}")


def _axis_extent(bodies, scale):
    reach = max(
        [1] + [x for _n, b in bodies for x, _ in b.vertices] + [y for _n, b in bodies for _, y in b.vertices]
    )
    return float(reach * scale)


def _emit_tikz(bodies, scale) -> str:
    x_ticks, y_guides = _tick_data(bodies)
    top = _axis_extent(bodies, scale)
    lines = ["\\begin{tikzpicture}"]
    lines.append(f"\\draw (0,0) -- ({_fmt(top)},0);")
    lines.append(f"\\draw (0,0) -- (0,{_fmt(top)});")
    for x in x_ticks:
        lines.append(
            f"\\node [below] at ({_fmt(x * scale)},0) {{${_tex_frac(x)}$}};"
        )
    for y, extent in y_guides:
        lines.append(
            f"\\node [left] at (0,{_fmt(y * scale)}) {{${_tex_frac(y)}$}};"
        )
        if extent > 0:
            lines.append(
                f"\\draw [dashed] (0,{_fmt(y * scale)}) -- ({_fmt(extent * scale)},{_fmt(y * scale)});"
            )
    for _n, body in bodies:
        if body.is_empty or len(body.vertices) < 2:
            continue
        path = " -- ".join(
            f"({_fmt(x * scale)},{_fmt(y * scale)})" for x, y in body.vertices
        )
        closing = " -- cycle" if len(body.vertices) >= 3 else ""
        style = "[densely dotted] " if body.conjectural else ""
        lines.append(f"\\draw {style}{path}{closing};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def _tex_frac(value) -> str:
    value = as_scalar(value) if not hasattr(value, "to_json") else value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"\\frac{{{value.numerator}}}{{{value.denominator}}}"
    return str(value)


def _emit_svg(bodies, scale) -> str:
    x_ticks, y_guides = _tick_data(bodies)
    top = _axis_extent(bodies, scale)
    pad = 0.18 * top + 0.6
    view = f"{-pad:.4f} {-(top + pad):.4f} {top + 2 * pad:.4f} {top + 2 * pad:.4f}"
    w = 640
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{w}" viewBox="{view}">',
        f'<g transform="scale(1,-1)" stroke="black" stroke-width="{top / 300:.4f}" fill="none">',
        f'<line x1="0" y1="0" x2="{_fmt(top)}" y2="0"/>',
        f'<line x1="0" y1="0" x2="0" y2="{_fmt(top)}"/>',
    ]
    for y, extent in y_guides:
        if extent > 0:
            out.append(
                f'<line class="guide" stroke-dasharray="{top / 60:.3f} {top / 60:.3f}" '
                f'x1="0" y1="{_fmt(y * scale)}" x2="{_fmt(extent * scale)}" y2="{_fmt(y * scale)}"/>'
            )
    for x in x_ticks:
        out.append(
            f'<line class="tick" x1="{_fmt(x * scale)}" y1="0" x2="{_fmt(x * scale)}" y2="{-top / 80:.4f}"/>'
        )
    for y, _extent in y_guides:
        out.append(
            f'<line class="tick" x1="0" y1="{_fmt(y * scale)}" x2="{-top / 80:.4f}" y2="{_fmt(y * scale)}"/>'
        )
    for _n, body in bodies:
        if body.is_empty or len(body.vertices) < 2:
            continue
        points = " ".join(f"{_fmt(x * scale)},{_fmt(y * scale)}" for x, y in body.vertices)
        dash = f' stroke-dasharray="{top / 40:.3f} {top / 80:.3f}"' if body.conjectural else ""
        tag = "polygon" if len(body.vertices) >= 3 else "polyline"
        out.append(f'<{tag} class="body" points="{points}"{dash}/>')
    font = top / 24
    for x in x_ticks:
        out.append(
            f'<text transform="translate({_fmt(x * scale)},{-top / 20:.4f}) scale(1,-1)" '
            f'font-size="{font:.3f}" text-anchor="middle" fill="black" stroke="none">{_label(x)}</text>'
        )
    for y, _extent in y_guides:
        out.append(
            f'<text transform="translate({-top / 40:.4f},{_fmt(y * scale)}) scale(1,-1)" '
            f'font-size="{font:.3f}" text-anchor="end" fill="black" stroke="none">{_label(y)}</text>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
