"""Hand-emitted SVG bar diagrams of the Cantor set and its translate.

Each requested level contributes two rows of horizontal bars: the level-k
components of the base set and of the translated set.  Components whose
neighborhood in the translated set has two members are drawn in an accent
color.  Geometry is computed exactly; only the final pixel coordinates are
floats.
"""

from __future__ import annotations

from fractions import Fraction

from .sequences import Params
from .uniqueness import neighborhood_sets

WIDTH = 1000
ROW_HEIGHT = 40
BAR_FILL = "#1f5fa8"
SHIFT_FILL = "#e08a1e"
DOUBLE_FILL = "#c43034"
LEVEL_CAP = 4096


def svg_figure(params: Params, t: Fraction, levels: int) -> str:
    """Render levels 1..levels of both component families as an SVG document."""
    t = Fraction(t)
    if not -1 <= t <= 1:
        raise ValueError("t must lie in [-1, 1]")
    if levels < 1:
        raise ValueError("need at least one level")
    if params.N**levels > LEVEL_CAP:
        raise ValueError(f"{params.N}^{levels} components exceed the drawing cap")
    x_lo = min(Fraction(0), t)
    x_hi = max(Fraction(1), 1 + t)
    span = x_hi - x_lo

    def px(x: Fraction) -> float:
        return float((x - x_lo) / span * WIDTH)

    rows = 2 * levels
    height = ROW_HEIGHT * rows
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" '
        f'viewBox="0 0 {WIDTH} {height}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{height}" fill="white"/>',
    ]
    bar_h = ROW_HEIGHT * 0.55
    pad = (ROW_HEIGHT - bar_h) / 2
    for level in range(1, levels + 1):
        sets = neighborhood_sets(t, params, level, cap=LEVEL_CAP)
        length = params.beta**level
        scale = params.scale
        weights = [scale * params.beta**i for i in range(level)]
        y_base = ROW_HEIGHT * (2 * level - 2) + pad
        y_shift = ROW_HEIGHT * (2 * level - 1) + pad
        for digits, meets in sorted(sets.items()):
            left = sum(w * d for w, d in zip(weights, digits))
            fill = DOUBLE_FILL if len(meets) >= 2 else BAR_FILL
            parts.append(_rect(px(left), y_base, px(left + length) - px(left), bar_h, fill))
            parts.append(_rect(px(left + t), y_shift, px(left + t + length) - px(left + t), bar_h, SHIFT_FILL))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _rect(x: float, y: float, w: float, h: float, fill: str) -> str:
    return f'<rect x="{x:.3f}" y="{y:.3f}" width="{w:.3f}" height="{h:.3f}" fill="{fill}"/>'
