"""CSV and SVG serialization of ensemble statistics.

The CSV layout is the package's canonical, diff-able output format:
header ``k,W,F_e,F_g,F_max[,F_e_b1,F_g_b1],se_W,se_F_e,se_F_g,se_F_max``,
one row per iteration with k counting from 1, floats printed with 12
significant digits, LF line endings, UTF-8. The SVG emitter renders a
self-contained static line chart (SVG 1.1, no external assets).
"""

from __future__ import annotations

import csv
from html import escape
from pathlib import Path
from typing import Sequence, TextIO

import numpy as np

from .ensemble import EnsembleStats

_BASE_COLUMNS = ("W", "F_e", "F_g", "F_max")
_DUAL_COLUMNS = ("F_e_b1", "F_g_b1")
_SE_COLUMNS = ("se_W", "se_F_e", "se_F_g", "se_F_max")


def _fmt(value: float) -> str:
    return format(value, ".12g")


def emit_csv(stats: EnsembleStats, destination: str | Path | TextIO) -> None:
    """Write ensemble statistics as CSV to a path or text stream."""
    if hasattr(destination, "write"):
        _write_csv(stats, destination)
    else:
        with open(destination, "w", encoding="utf-8", newline="") as handle:
            _write_csv(stats, handle)


def _write_csv(stats: EnsembleStats, handle: TextIO) -> None:
    dual = stats.f_e_b1 is not None
    header = ["k", *_BASE_COLUMNS]
    if dual:
        header += list(_DUAL_COLUMNS)
    header += list(_SE_COLUMNS)

    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(header)
    for i in range(stats.iterations):
        row = [str(i + 1), _fmt(stats.w[i]), _fmt(stats.f_e[i]), _fmt(stats.f_g[i]), _fmt(stats.f_max[i])]
        if dual:
            row += [_fmt(stats.f_e_b1[i]), _fmt(stats.f_g_b1[i])]
        row += [_fmt(stats.se_w[i]), _fmt(stats.se_f_e[i]), _fmt(stats.se_f_g[i]), _fmt(stats.se_f_max[i])]
        writer.writerow(row)


def read_csv(path: str | Path) -> dict[str, np.ndarray]:
    """Read an emitted CSV back into column arrays keyed by header name."""
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty CSV") from None
        rows = list(reader)
    columns: dict[str, np.ndarray] = {}
    for j, name in enumerate(header):
        values = [row[j] for row in rows]
        if name == "k":
            columns[name] = np.array([int(v) for v in values], dtype=int)
        else:
            columns[name] = np.array([float(v) for v in values])
    return columns


_PALETTE = ("#c0392b", "#2b6cb0", "#2f855a", "#1a1a1a", "#b7791f", "#6b46c1", "#c05621", "#4a5568")

_WIDTH, _HEIGHT = 760, 480
_MARGIN_LEFT, _MARGIN_RIGHT, _MARGIN_TOP, _MARGIN_BOTTOM = 66, 24, 42, 52


def emit_svg(
    series: Sequence[tuple[str, np.ndarray, np.ndarray]],
    destination: str | Path | TextIO,
    *,
    title: str | None = None,
    x_label: str = "k",
    y_label: str = "mean",
) -> None:
    """Render labeled (x, y) series as a static SVG line chart.

    ``series`` is a sequence of (label, x values, y values) triples;
    at least one series with at least one point is required.
    """
    if not series:
        raise ValueError("emit_svg needs at least one series")
    for label, x, y in series:
        if len(x) != len(y):
            raise ValueError(f"series {label!r}: x and y lengths differ")
        if len(x) == 0:
            raise ValueError(f"series {label!r} is empty")

    text = render_svg(series, title=title, x_label=x_label, y_label=y_label)
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        with open(destination, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _axis_range(lo: float, hi: float) -> tuple[float, float]:
    if not np.isfinite(lo) or not np.isfinite(hi):
        raise ValueError("series contain non-finite values")
    if lo == hi:
        pad = 0.5 if lo == 0 else abs(lo) * 0.1
        return lo - pad, hi + pad
    pad = (hi - lo) * 0.05
    return lo - pad, hi + pad


def render_svg(
    series: Sequence[tuple[str, np.ndarray, np.ndarray]],
    *,
    title: str | None = None,
    x_label: str = "k",
    y_label: str = "mean",
) -> str:
    """Build the SVG document text for :func:`emit_svg`."""
    x_lo, x_hi = _axis_range(
        min(float(np.min(x)) for _, x, _ in series),
        max(float(np.max(x)) for _, x, _ in series),
    )
    y_lo, y_hi = _axis_range(
        min(float(np.min(y)) for _, _, y in series),
        max(float(np.max(y)) for _, _, y in series),
    )

    plot_w = _WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = _HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM

    def sx(v: float) -> float:
        return _MARGIN_LEFT + (v - x_lo) / (x_hi - x_lo) * plot_w

    def sy(v: float) -> float:
        return _MARGIN_TOP + plot_h - (v - y_lo) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_WIDTH}" height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
    ]
    if title:
        parts.append(
            f'<text x="{_WIDTH / 2:g}" y="24" text-anchor="middle" '
            f'font-family="sans-serif" font-size="15">{escape(title)}</text>'
        )

    # Frame and ticks.
    x0, y0 = _MARGIN_LEFT, _MARGIN_TOP + plot_h
    parts.append(
        f'<rect x="{x0}" y="{_MARGIN_TOP}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="#333" stroke-width="1"/>'
    )
    n_ticks = 5
    for i in range(n_ticks + 1):
        fx = x_lo + (x_hi - x_lo) * i / n_ticks
        px = sx(fx)
        parts.append(f'<line x1="{px:.2f}" y1="{y0}" x2="{px:.2f}" y2="{y0 + 5}" stroke="#333"/>')
        parts.append(
            f'<text x="{px:.2f}" y="{y0 + 18}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{fx:.6g}</text>'
        )
        fy = y_lo + (y_hi - y_lo) * i / n_ticks
        py = sy(fy)
        parts.append(f'<line x1="{x0 - 5}" y1="{py:.2f}" x2="{x0}" y2="{py:.2f}" stroke="#333"/>')
        parts.append(
            f'<text x="{x0 - 8}" y="{py + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{fy:.6g}</text>'
        )
    parts.append(
        f'<text x="{_MARGIN_LEFT + plot_w / 2:g}" y="{_HEIGHT - 12}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">{escape(x_label)}</text>'
    )
    parts.append(
        f'<text x="16" y="{_MARGIN_TOP + plot_h / 2:g}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 16 {_MARGIN_TOP + plot_h / 2:g})">{escape(y_label)}</text>'
    )

    for idx, (label, x, y) in enumerate(series):
        color = _PALETTE[idx % len(_PALETTE)]
        points = " ".join(f"{sx(float(a)):.2f},{sy(float(b)):.2f}" for a, b in zip(x, y))
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>'
        )

    # Legend, top-right inside the frame.
    legend_x = _MARGIN_LEFT + plot_w - 170
    legend_y = _MARGIN_TOP + 12
    for idx, (label, _, _) in enumerate(series):
        color = _PALETTE[idx % len(_PALETTE)]
        ly = legend_y + idx * 18
        parts.append(
            f'<line x1="{legend_x}" y1="{ly}" x2="{legend_x + 24}" y2="{ly}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{legend_x + 30}" y="{ly + 4}" font-family="sans-serif" '
            f'font-size="12">{escape(str(label))}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
