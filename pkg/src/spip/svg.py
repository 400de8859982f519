"""Minimal SVG rendering of projected planar polygons, for debugging."""
from __future__ import annotations

import html

import numpy as np

PANEL = 240
PAD = 16
COLORS = {"rotation": "#1f77b4", "shearing": "#d62728"}


def _panel(title: str, curves: dict, ox: float, oy: float) -> list[str]:
    pts = np.concatenate([c for c in curves.values()] + [np.zeros((1, 2))])
    half = float(np.max(np.abs(pts))) or 1.0
    s = (PANEL / 2 - PAD) / half
    cx, cy = ox + PANEL / 2, oy + PANEL / 2

    def xy(p):
        return f"{cx + s * p[0]:.3f},{cy - s * p[1]:.3f}"

    out = [
        f'<rect x="{ox}" y="{oy}" width="{PANEL}" height="{PANEL}" fill="none" stroke="#ccc"/>',
        f'<text x="{ox + 4}" y="{oy + 12}" font-size="10">{html.escape(title)}</text>',
    ]
    for method, c in curves.items():
        path = " ".join(xy(p) for p in c)
        out.append(f'<polygon points="{path}" fill="none" stroke="{COLORS.get(method, "#000")}" '
                   f'stroke-width="1.2"><title>{method}</title></polygon>')
        for k, p in enumerate(c, 1):
            x, y = xy(p).split(",")
            out.append(f'<text x="{x}" y="{y}" font-size="8" fill="#555">{k}</text>')
    out.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="2.5" fill="#000"><title>origin</title></circle>')
    return out


def render(panels: list[tuple[str, dict]], columns: int = 3) -> str:
    """``panels`` is a list of ``(title, {method: (n, 2) array})``."""
    rows = max(1, -(-len(panels) // columns))
    width = PANEL * min(columns, max(1, len(panels)))
    height = PANEL * rows
    body = []
    for k, (title, curves) in enumerate(panels):
        body.extend(_panel(title, curves, PANEL * (k % columns), PANEL * (k // columns)))
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">\n' + "\n".join(body) + "\n</svg>\n")
