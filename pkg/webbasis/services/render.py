"""SVG drawing of flow diagrams on the triangular grid."""
import logging
from typing import Dict, List, Optional

import numpy as np
from jinja2 import Environment

from webbasis.config import settings
from webbasis.models.diagram import Cell, FlowDiagram

logger = logging.getLogger(__name__)

SVG_TEMPLATE = """<svg xmlns="http://www.w3.org/2000/svg" width="{{ width }}" height="{{ height }}" viewBox="0 0 {{ width }} {{ height }}">
  <title>flow diagram of {{ word }} for gl({{ n }})</title>
  <defs>
    <marker id="arrow" viewBox="0 0 10 10" refX="5" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse">
      <path d="M 0 0 L 10 5 L 0 10 z" fill="#333"/>
    </marker>
  </defs>
  <polygon points="{{ outline }}" fill="none" stroke="#ccc" stroke-dasharray="4 3"/>
{% for edge in edges %}
  <line x1="{{ edge.x1 }}" y1="{{ edge.y1 }}" x2="{{ edge.x2 }}" y2="{{ edge.y2 }}" stroke="#333" stroke-width="{{ edge.width }}" marker-end="url(#arrow)"/>
  <text x="{{ edge.tx }}" y="{{ edge.ty }}" font-size="{{ font }}" fill="#06c">{{ edge.label }}</text>
{% endfor %}
{% for arc in arcs %}
  <path class="arc" d="{{ arc.path }}" fill="none" stroke="#c30" stroke-width="1.5"/>
{% endfor %}
{% for vertex in vertices %}
  <circle cx="{{ vertex.x }}" cy="{{ vertex.y }}" r="3" fill="#333"/>
{% endfor %}
{% for letter in letters %}
  <text x="{{ letter.x }}" y="{{ letter.y }}" font-size="{{ font }}" text-anchor="middle">{{ letter.text }}</text>
{% endfor %}
  <text x="{{ corner_o.x }}" y="{{ corner_o.y }}" font-size="{{ font }}">O</text>
</svg>
"""

_environment = Environment(autoescape=True, trim_blocks=True, lstrip_blocks=True)


def _apex(i: int, j: int, size: float) -> np.ndarray:
    """Top corner of cell (i, j); row i is shifted half a step per row."""
    return np.array([(j + 0.5 * i + 0.5) * size, (i + 1.0) * size])


def _edge(start: np.ndarray, end: np.ndarray, label: int, size: float) -> Optional[Dict]:
    if label == 0:
        return None
    # p > 0 flows up the sw edge, -m flows down the se edge
    tail, head = (end, start) if label > 0 else (start, end)
    middle = (start + end) / 2
    direction = head - tail
    normal = np.array([-direction[1], direction[0]]) / np.linalg.norm(direction)
    text = middle + normal * 0.12 * size
    return {
        "x1": round(float(tail[0]), 2), "y1": round(float(tail[1]), 2),
        "x2": round(float(middle[0]), 2), "y2": round(float(middle[1]), 2),
        "tx": round(float(text[0]), 2), "ty": round(float(text[1]), 2),
        "label": abs(label), "width": 1 + 0.5 * abs(label),
    }


def _cell_geometry(cell: Cell, size: float, edges: List[Dict], arcs: List[Dict], vertices: List[Dict]) -> None:
    apex = _apex(cell.i, cell.j, size)
    left = apex + np.array([-0.5 * size, size])
    right = apex + np.array([0.5 * size, size])
    centre = apex + np.array([0.0, 0.5 * size])
    for start, end, label in ((centre, left, cell.sw), (centre, right, cell.se)):
        edge = _edge(start, end, label, size)
        if edge:
            edges.append(edge)
    kinds = [v.kind for v in cell.internal]
    if 'cup' in kinds:
        upper_left = apex + np.array([-0.25 * size, -0.5 * size])
        upper_right = apex + np.array([0.25 * size, -0.5 * size])
        arcs.append({"path": (f"M {upper_left[0]:.2f} {upper_left[1]:.2f} "
                              f"Q {apex[0]:.2f} {centre[1] - 0.25 * size:.2f} "
                              f"{upper_right[0]:.2f} {upper_right[1]:.2f}")})
    if 'cap' in kinds:
        arcs.append({"path": (f"M {left[0] + 0.25 * size:.2f} {left[1] - 0.5 * size:.2f} "
                              f"Q {apex[0]:.2f} {centre[1] + 0.1 * size:.2f} "
                              f"{right[0] - 0.25 * size:.2f} {right[1] - 0.5 * size:.2f}")})
    if 'merge' in kinds or 'split' in kinds:
        vertices.append({"x": round(float(centre[0]), 2), "y": round(float(centre[1]), 2)})


def render_svg(d: FlowDiagram, size: Optional[float] = None) -> str:
    """SVG text for d; letters are written above the top side AB."""
    size = settings.SVG_CELL_SIZE if size is None else size
    r = max(d.r, 1)
    width = (r + 1) * size
    height = (r + 1.5) * size
    edges: List[Dict] = []
    arcs: List[Dict] = []
    vertices: List[Dict] = []
    for cell in d.cells:
        _cell_geometry(cell, size, edges, arcs, vertices)
    letters = []
    for j, letter in enumerate(d.word.letters):
        apex = _apex(0, j, size)
        letters.append({"x": round(float(apex[0]), 2), "y": round(float(apex[1] - 0.3 * size), 2), "text": str(letter)})
    a, b = _apex(0, 0, size) - np.array([0.5 * size, 0.0]), _apex(0, r - 1, size) + np.array([0.5 * size, 0.0])
    o = np.array([(a[0] + b[0]) / 2, a[1] + r * size])
    outline = " ".join(f"{p[0]:.2f},{p[1]:.2f}" for p in (a, b, o))
    template = _environment.from_string(SVG_TEMPLATE)
    svg = template.render(
        width=round(width, 2), height=round(height, 2), word=str(d.word), n=d.n, outline=outline,
        edges=edges, arcs=arcs, vertices=vertices, letters=letters, font=round(0.22 * size, 1),
        corner_o={"x": round(float(o[0]) - 4, 2), "y": round(float(o[1]) + 0.3 * size, 2)},
    )
    logger.debug(f"Rendered {d.word} with {len(edges)} edges and {len(arcs)} arcs")
    return svg
