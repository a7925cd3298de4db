"""Static SVG figures of segment arrangements.

The ε-sized gaps of the construction vanish at any uniform scale, so each
axis is mapped through a monotone piecewise-linear stretch: consecutive
distinct coordinates are at least ``min_gap`` pixels apart.  Order and
coincidence of coordinates are preserved exactly, so every touch or crossing
in the figure is one in the exact geometry.  The map is recorded in the file.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction

from . import __version__
from .pure2dir import Arrangement

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def _axis_map(values, unit: float, min_gap: float, margin: float) -> dict[Fraction, float]:
    out = {}
    pos = margin
    prev = None
    for v in sorted(set(values)):
        if prev is not None:
            pos += max(float(v - prev) * unit, min_gap)
        out[v] = pos
        prev = v
    return out


def render_svg(
    arr: Arrangement,
    apex: str,
    originals,
    unit: float = 60.0,
    min_gap: float = 6.0,
    margin: float = 20.0,
) -> str:
    xs, ys = [], []
    for s in arr.segments:
        (x1, y1), (x2, y2) = s.endpoints
        xs += [x1, x2]
        ys += [y1, y2]
    xmap = _axis_map(xs, unit, min_gap, margin)
    ymap = _axis_map(ys, unit, min_gap, margin)
    width = max(xmap.values(), default=margin) + margin
    height = max(ymap.values(), default=margin) + margin

    originals = set(originals)
    edge_colour: dict[str, str] = {}
    root = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=f"{width:.1f}",
        height=f"{height:.1f}",
        viewBox=f"0 0 {width:.1f} {height:.1f}",
    )
    root.append(ET.Comment(
        f" apexrep {__version__}; n={arr.n} k={arr.k}; axes exaggerated: "
        f"monotone gap map, {unit:g} px per unit, consecutive coordinates >= {min_gap:g} px apart "
    ))
    for s in arr.segments:
        (x1, y1), (x2, y2) = s.endpoints
        if s.owner == apex:
            cls, colour, w = "apex", "#000000", "3"
        elif s.owner in originals:
            cls, colour, w = "original", "#555555", "2.5"
        else:
            cls, w = "subdivision", "1.5"
            # owners look like u3(x,y); colour by the edge part
            key = s.owner[s.owner.index("("):] if "(" in s.owner else s.owner
            colour = edge_colour.setdefault(key, PALETTE[len(edge_colour) % len(PALETTE)])
        line = ET.SubElement(
            root,
            "line",
            x1=f"{xmap[x1]:.2f}",
            y1=f"{height - ymap[y1]:.2f}",
            x2=f"{xmap[x2]:.2f}",
            y2=f"{height - ymap[y2]:.2f}",
            stroke=colour,
            **{"stroke-width": w, "class": cls},
        )
        line.set("data-owner", s.owner)
        line.set("data-orientation", s.orientation.value)
    ET.indent(root)
    return ET.tostring(root, encoding="unicode") + "\n"
