"""SVG drawings of bisectors and preference cells.

Candidates are circles, bisectors are polylines (unbounded pieces run past
the view box, which clips them) and cells are labeled at their witness
points with 1-based rankings. The view box is the data extent plus a 10%
margin. Output depends only on the input, so repeated runs are
byte-identical.
"""
import xml.etree.ElementTree as ET
from fractions import Fraction
from typing import Iterable, Sequence

from prefgeo.core.models.bisector import Bisector, Piece
from prefgeo.core.models.point import Point2
from prefgeo.core.models.report import Cell

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


def _num(v) -> str:
    return f"{float(v):.4f}".rstrip("0").rstrip(".")


class SVG:
    """Collects shapes in data coordinates and writes them with y pointing up."""

    def __init__(self, size: int = 640):
        self.size = size
        self.min_x = self.max_x = self.min_y = self.max_y = None
        self.shapes: list[tuple[str, dict, str | None]] = []

    def require(self, p: Point2):
        if self.min_x is None:
            self.min_x = self.max_x = p.x
            self.min_y = self.max_y = p.y
        else:
            self.min_x = min(self.min_x, p.x)
            self.max_x = max(self.max_x, p.x)
            self.min_y = min(self.min_y, p.y)
            self.max_y = max(self.max_y, p.y)

    def extent(self) -> Fraction:
        return max(self.max_x - self.min_x, self.max_y - self.min_y, Fraction(1))

    def circle(self, p: Point2, label: str, color: str):
        self.require(p)
        self.shapes.append(("circle", {"cx": _num(p.x), "cy": _num(-p.y), "fill": color}, None))
        self.shapes.append(("label", {"x": _num(p.x), "y": _num(-p.y), "fill": color}, label))

    def polyline(self, points: Sequence[Point2], color: str):
        self.shapes.append((
            "polyline",
            {
                "points": " ".join(f"{_num(p.x)},{_num(-p.y)}" for p in points),
                "fill": "none",
                "stroke": color,
            },
            None,
        ))

    def text(self, p: Point2, text: str, color: str = "#666666"):
        self.require(p)
        self.shapes.append(("text", {"x": _num(p.x), "y": _num(-p.y), "fill": color}, text))

    def to_string(self) -> str:
        pad = self.extent() / 10
        x0, y0 = self.min_x - pad, -self.max_y - pad
        w = self.max_x - self.min_x + 2 * pad
        h = self.max_y - self.min_y + 2 * pad
        unit = self.extent() / 100
        root = ET.Element(
            "svg",
            xmlns="http://www.w3.org/2000/svg",
            version="1.1",
            width=str(self.size),
            height=str(self.size),
            viewBox=f"{_num(x0)} {_num(y0)} {_num(w)} {_num(h)}",
        )
        ET.SubElement(
            root, "rect", x=_num(x0), y=_num(y0), width=_num(w), height=_num(h), fill="#ffffff"
        )
        group = ET.SubElement(root, "g", {"stroke-width": _num(unit / 3), "font-size": _num(unit * 3)})
        for tag, attrs, text in self.shapes:
            match tag:
                case "circle":
                    ET.SubElement(group, "circle", r=_num(unit), **attrs)
                case "label":
                    el = ET.SubElement(group, "text", dx=_num(unit * 1.5), **attrs)
                    el.text = text
                case "polyline":
                    ET.SubElement(group, "polyline", **attrs)
                case "text":
                    el = ET.SubElement(group, "text", {"text-anchor": "middle"}, **attrs)
                    el.text = text
        ET.indent(root)
        return ET.tostring(root, encoding="unicode") + "\n"

    def save(self, path):
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.to_string())


def _piece_points(piece: Piece, reach: Fraction) -> list[Point2]:
    lo = piece.lo if piece.lo is not None else -reach
    hi = piece.hi if piece.hi is not None else reach
    return [piece.at(lo), piece.at(hi)]


def _reach(svg: SVG, bisectors: Iterable[Bisector]) -> Fraction:
    """Parameter length that carries every unbounded piece out of the view box."""
    reach = Fraction(0)
    span = 4 * svg.extent()
    for b in bisectors:
        for piece in b.pieces():
            origin = piece.origin
            far = max(abs(origin.x - svg.min_x), abs(origin.y - svg.min_y)) + span
            reach = max(reach, far / piece.direction.norm_inf())
    return reach


def draw(
    candidates: Sequence[Point2],
    bisectors: dict[tuple[int, int], Bisector],
    cells: Iterable[Cell] = (),
    size: int = 640,
    anchors: Iterable[Point2] = (),
) -> SVG:
    """Build the drawing of an arrangement; candidate i is labeled c{i}."""
    svg = SVG(size)
    for p in anchors:
        svg.require(p)
    for i, c in enumerate(candidates):
        svg.circle(c, f"c{i}", PALETTE[i % len(PALETTE)])
    for cell in sorted(cells):
        svg.text(cell.witness, "".join(str(i + 1) for i in cell.ranking))

    reach = _reach(svg, bisectors.values())
    for n, pair in enumerate(sorted(bisectors)):
        color = PALETTE[n % len(PALETTE)]
        for piece in bisectors[pair].pieces():
            svg.polyline(_piece_points(piece, reach), color)
    return svg
