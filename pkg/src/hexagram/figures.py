"""Figure rendering: the hexagram diagram over a real display chart and
the summary chart of the 77 intersection numbers.

The diagram is schematic: the six parameters are taken as exact
rationals on the real conic y = x^2 (the z0 = 1 chart), the requested
pascals are computed with exact Fraction arithmetic, and only the final
drawing converts to floats.  SVG output is self-contained.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import cycle

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .conic import pascal_coords_rational
from .errors import UsageError
from .labels import PascalLabel, label_to_symbol

_PALETTE = ("tab:red", "tab:blue", "tab:green", "tab:orange", "tab:purple")
_COLOUR = {"red": "tab:red", "blue": "tab:blue", "brown": "tab:brown",
           "plain": "0.55"}


def hexagram_figure(params, labels, out_path, span=None):
    """Draw the conic chart, the six labelled points, and the pascals
    named by the labels; write an SVG (or whatever the suffix says)."""
    params = [Fraction(x) for x in params]
    if len(params) != 6 or len(set(params)) != 6:
        raise UsageError("need six distinct conic parameters")
    labels = [lab if isinstance(lab, PascalLabel) else PascalLabel.parse(lab)
              for lab in labels]
    lo = float(min(params)) - 1.0
    hi = float(max(params)) + 1.0
    if span:
        lo, hi = min(lo, -span), max(hi, span)
    fig, ax = plt.subplots(figsize=(8, 8))
    xs = np.linspace(lo, hi, 400)
    ax.plot(xs, xs**2, color="0.3", lw=1.5, label="conic $y = x^2$")
    letters = "ABCDEF"
    for ch, r in zip(letters, params):
        x, y = float(r), float(r) ** 2
        ax.plot([x], [y], "ko", ms=5)
        ax.annotate(ch, (x, y), textcoords="offset points", xytext=(6, 6),
                    fontsize=11)
    ymax = max(hi * hi, lo * lo)
    for colour, lab in zip(cycle(_PALETTE), labels):
        u0, u1, u2 = pascal_coords_rational(lab, params)
        _draw_line(ax, u0, u1, u2, lo, hi, -1.0, ymax + 1.0, colour,
                   str(lab))
        sym = label_to_symbol(lab)
        for i in range(3):
            top = params[sym.rows[0][i]]
            for j in range(3):
                if i != j:
                    bot = params[sym.rows[1][j]]
                    ax.plot([float(top), float(bot)],
                            [float(top) ** 2, float(bot) ** 2],
                            color=colour, lw=0.4, alpha=0.35)
    ax.set_xlim(lo, hi)
    ax.set_ylim(-1.0, ymax + 1.0)
    ax.set_aspect("auto")
    ax.legend(loc="upper center", fontsize=9)
    ax.set_title("Pascal lines on the conic (real display chart)")
    fig.tight_layout()
    fig.savefig(out_path)
    plt.close(fig)
    return out_path


def _draw_line(ax, u0, u1, u2, xlo, xhi, ylo, yhi, colour, name):
    """Draw u0 + u1 x + u2 y = 0 clipped to the viewport."""
    u0, u1, u2 = float(u0), float(u1), float(u2)
    pts = []
    if u2 != 0:
        for x in (xlo, xhi):
            pts.append((x, -(u0 + u1 * x) / u2))
    if u1 != 0:
        for y in (ylo, yhi):
            pts.append((-(u0 + u2 * y) / u1, y))
    seg = [(x, y) for x, y in pts
           if xlo - 1e-9 <= x <= xhi + 1e-9 and ylo - 1e-9 <= y <= yhi + 1e-9]
    seg = sorted(set(seg))[:2] if len(set(seg)) >= 2 else pts[:2]
    if len(seg) == 2:
        (x1, y1), (x2, y2) = seg
        ax.plot([x1, x2], [y1, y2], color=colour, lw=1.8, label=name)


def table_figure(rows, out_path):
    """Bar chart of the 77 intersection numbers, coloured with the
    table's semantics (red = zero, blue = Z2, brown = Z2xZ2)."""
    fig, ax = plt.subplots(figsize=(13, 4.5))
    xs = [r.index for r in rows]
    ys = [(r.count if r.count is not None else 0) for r in rows]
    colours = [_COLOUR.get(r.colour, "0.55") for r in rows]
    ax.bar(xs, ys, color=colours, width=0.8)
    for r in rows:
        if not r.agrees:
            ax.plot([r.index], [max(r.expected, r.count or 0) + 1], "kx")
    ax.set_xlabel("orbit index (lexicographic)")
    ax.set_ylabel("intersection number")
    ax.set_title("Triple-intersection numbers by orbit")
    ax.set_xlim(0, 78)
    fig.tight_layout()
    fig.savefig(out_path)
    plt.close(fig)
    return out_path
