"""Convex polygon dissections and their parenthesizations.

Vertices ``0..n`` sit counterclockwise on the unit circle, vertex 0 at the
top.  Edge ``t`` (1 ≤ t ≤ n) joins vertices ``t-1`` and ``t``; edge 0 joins
``n`` and ``0``.  A parenthesis pair spanning positions ``[i, j]`` of
``1..n`` is the diagonal ``(i-1, j)``; the outer pair ``[1, n]`` is edge 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .bijections import gamma
from .core import (
    ParenthesizedList,
    ValidationError,
    register_decoder,
    to_json,
    validate,
)
from .counting import DissectionType


@dataclass(frozen=True)
class PolygonDissection:
    n: int
    diagonals: frozenset

    def __post_init__(self):
        object.__setattr__(
            self, "diagonals", frozenset(tuple(sorted((int(a), int(b)))) for a, b in self.diagonals)
        )

    @property
    def k(self) -> int:
        return len(self.diagonals) + 1


def crosses(d1: tuple, d2: tuple) -> bool:
    """Whether two chords of a convex polygon meet in their interiors."""
    (a, b), (c, d) = sorted(d1), sorted(d2)
    return a < c < b < d or c < a < d < b


@validate.register
def _(obj: PolygonDissection, k: Optional[int] = None) -> None:
    n = obj.n
    if n < 2:
        raise ValidationError("n must be ≥ 2", f"n={n}")
    for a, b in obj.diagonals:
        if not 0 <= a < b <= n:
            raise ValidationError("vertex out of range", f"({a},{b})")
        if b - a < 2 or (a, b) == (0, n):
            raise ValidationError("diagonal joins adjacent vertices", f"({a},{b})")
    diags = sorted(obj.diagonals)
    for i, d1 in enumerate(diags):
        for d2 in diags[i + 1 :]:
            if crosses(d1, d2):
                raise ValidationError("crossing diagonals", f"{d1} and {d2}")
    if k is not None and obj.k != k:
        raise ValidationError("wrong number of diagonals", f"expected {k - 1}, got {obj.k - 1}")


@to_json.register
def _(obj: PolygonDissection) -> dict:
    return {"n": obj.n, "diagonals": [list(d) for d in sorted(obj.diagonals)]}


register_decoder(
    frozenset({"n", "diagonals"}), lambda d: PolygonDissection(d["n"], d["diagonals"])
)


def dissection_from_parenthesization(p: ParenthesizedList) -> PolygonDissection:
    validate(p)
    if p.perm != tuple(range(1, p.n + 1)):
        raise ValidationError("perm is not the identity", f"{p.perm}")
    return PolygonDissection(p.n, [(i - 1, j) for i, j in p.intervals if (i, j) != (1, p.n)])


def parenthesization_from_dissection(d: PolygonDissection) -> ParenthesizedList:
    validate(d)
    intervals = {(a + 1, b) for a, b in d.diagonals} | {(1, d.n)}
    return ParenthesizedList(d.n, range(1, d.n + 1), intervals)


def dissection_type(p) -> DissectionType:
    """Cell census read off the blocks of the ordered partition: a block of
    size ``a`` is a cell with ``a+1`` edges."""
    if isinstance(p, PolygonDissection):
        p = parenthesization_from_dissection(p)
    q = gamma(p)
    return DissectionType.from_cells(len(b) + 1 for b in q.blocks)


def _vertex(n: int, v: int, radius: float, cx: float, cy: float) -> tuple[float, float]:
    theta = math.pi / 2 + 2 * math.pi * v / (n + 1)
    return cx + radius * math.cos(theta), cy - radius * math.sin(theta)


def render_svg(d: PolygonDissection, size: int = 400) -> str:
    validate(d)
    n = d.n
    cx = cy = size / 2
    r = size * 0.38
    pts = [_vertex(n, v, r, cx, cy) for v in range(n + 1)]

    def fmt(x: float) -> str:
        s = f"{x:.3f}"
        return "0.000" if s == "-0.000" else s

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<title>Dissection of a {n + 1}-gon by {len(d.diagonals)} diagonals</title>",
        '<polygon class="outline" fill="none" stroke="black" stroke-width="2" points="'
        + " ".join(f"{fmt(x)},{fmt(y)}" for x, y in pts)
        + '"/>',
    ]
    for a, b in sorted(d.diagonals):
        (x1, y1), (x2, y2) = pts[a], pts[b]
        out.append(
            f'<line class="diagonal" x1="{fmt(x1)}" y1="{fmt(y1)}" '
            f'x2="{fmt(x2)}" y2="{fmt(y2)}" stroke="steelblue" stroke-width="1.5"/>'
        )
    label_r = r + size * 0.06
    for t in range(n + 1):
        # edge t joins vertices t-1 and t; edge 0 closes the polygon
        theta = math.pi / 2 + 2 * math.pi * (t - 0.5) / (n + 1)
        x = cx + label_r * math.cos(theta)
        y = cy - label_r * math.sin(theta)
        out.append(
            f'<text class="edge-label" x="{fmt(x)}" y="{fmt(y)}" font-size="{size // 20}" '
            f'text-anchor="middle" dominant-baseline="middle">{t}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
