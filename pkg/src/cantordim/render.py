"""SVG rendering of construction stages and operator grid sheets.

Outputs are pure functions of their inputs (fixed float formatting, no
timestamps), so identical calls produce identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import check_arity
from .errors import DomainError
from .geometry import DEFAULT_CAP, CantorParams, construct_prefractal

# ---------------------------------------------------------------------------
# stage rendering

_W, _MARGIN_L, _MARGIN_R = 900, 70, 30
_BAR_H, _ROW_GAP, _TOP = 26, 34, 24


def _x(t: float) -> str:
    return format(_MARGIN_L + t * (_W - _MARGIN_L - _MARGIN_R), ".4f")


def _wd(t: float) -> str:
    return format(t * (_W - _MARGIN_L - _MARGIN_R), ".4f")


def render_stages_svg(params: CantorParams, max_stage: int, cap: int = DEFAULT_CAP) -> str:
    """One bar row per stage 0..max_stage with the scale factor (and, when it
    plays a role, the outermost gap) annotated on the stage-1 row."""
    if max_stage < 0:
        raise DomainError(f"max_stage must be >= 0, got {max_stage}")
    rows = []
    for s in range(max_stage + 1):
        stage_params = CantorParams(params.n, params.gamma, params.epsilon, s)
        rows.append(construct_prefractal(stage_params, cap=cap))

    height = _TOP + (max_stage + 1) * (_BAR_H + _ROW_GAP)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_W}" height="{height}" viewBox="0 0 {_W} {height}">',
        f'<rect x="0" y="0" width="{_W}" height="{height}" fill="white"/>',
    ]
    for s, intervals in enumerate(rows):
        y = _TOP + s * (_BAR_H + _ROW_GAP)
        out.append(
            f'<text x="10" y="{y + _BAR_H - 8}" font-family="monospace" '
            f'font-size="14" fill="black">S = {s}</text>'
        )
        for a, b in zip(intervals.starts, intervals.ends):
            out.append(
                f'<rect x="{_x(a)}" y="{y}" width="{_wd(b - a)}" '
                f'height="{_BAR_H}" fill="black"/>'
            )
    if max_stage >= 1:
        y = _TOP + 1 * (_BAR_H + _ROW_GAP) + _BAR_H
        out += _measure(0.0, params.gamma, y + 6, "&#947;")  # gamma under the first copy
        if params.n >= 4 and params.epsilon > 0.0:
            out += _measure(
                params.gamma, params.gamma + params.epsilon, y + 6, "&#949;"
            )  # epsilon under the outermost gap
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _measure(t0: float, t1: float, y: float, label: str) -> list[str]:
    ys = format(y, ".4f")
    mid = _x((t0 + t1) / 2.0)
    return [
        f'<line x1="{_x(t0)}" y1="{ys}" x2="{_x(t1)}" y2="{ys}" '
        'stroke="black" stroke-width="1"/>',
        f'<line x1="{_x(t0)}" y1="{format(y - 4, ".4f")}" x2="{_x(t0)}" '
        f'y2="{format(y + 4, ".4f")}" stroke="black" stroke-width="1"/>',
        f'<line x1="{_x(t1)}" y1="{format(y - 4, ".4f")}" x2="{_x(t1)}" '
        f'y2="{format(y + 4, ".4f")}" stroke="black" stroke-width="1"/>',
        f'<text x="{mid}" y="{format(y + 16, ".4f")}" font-family="monospace" '
        f'font-size="13" fill="black" text-anchor="middle">{label}</text>',
    ]


# ---------------------------------------------------------------------------
# operator grid sheets

_GRID_FORMULAS = {
    "add": lambda da, db: da * db / (da + db),
    "sub": lambda da, db: da * db / (db - da),
    "mul": lambda da, db: da * db,
    "div": lambda da, db: da / db,
}

_GRID_MASKS = {
    "add": lambda da, db: np.ones(np.broadcast(da, db).shape, dtype=bool),
    "sub": lambda da, db: da < db / (1.0 + db),
    "mul": lambda da, db: np.ones(np.broadcast(da, db).shape, dtype=bool),
    "div": lambda da, db: da <= db,
}


@dataclass(frozen=True)
class GridSheet:
    """Operator surface sampled at cell centers of an R x R grid over (0,1)^2.

    values[i, j] holds op(centers[i], centers[j]); cells outside the
    operator's validity domain hold NaN.
    """

    op: str
    resolution: int
    centers: np.ndarray
    values: np.ndarray


def emit_operator_grid(op_tag: str, resolution: int, n: int) -> tuple[GridSheet, str]:
    """Sample an operator over (0,1)^2 and render the da,db,dc CSV stream.

    Cell centers (k+0.5)/R avoid the degenerate boundary dimensions 0 and 1.
    Undefined cells are emitted as nan; rows are produced in row-major order
    (da outer, db inner).
    """
    check_arity(n)
    if op_tag not in _GRID_FORMULAS:
        raise DomainError(f"unknown operator tag {op_tag!r}")
    if resolution < 2:
        raise DomainError(f"resolution must be >= 2, got {resolution}")
    centers = (np.arange(resolution) + 0.5) / resolution
    da = centers[:, None]
    db = centers[None, :]
    mask = _GRID_MASKS[op_tag](da, db)
    with np.errstate(divide="ignore", invalid="ignore"):
        values = np.where(mask, _GRID_FORMULAS[op_tag](da, db), np.nan)
    values.flags.writeable = False
    sheet = GridSheet(op_tag, resolution, centers, values)

    def f17(x):
        return format(float(x), ".17g")

    lines = ["da,db,dc"]
    for i in range(resolution):
        ai = f17(centers[i])
        row = values[i]
        for j in range(resolution):
            v = row[j]
            lines.append(f"{ai},{f17(centers[j])},{'nan' if np.isnan(v) else f17(v)}")
    return sheet, "\n".join(lines) + "\n"
