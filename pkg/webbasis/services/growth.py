"""The growth algorithm: letter triangles, diamond fills and the grown flow diagram.

Every edge is stored with upward flow. Edges leaving a cell towards the lower
left (sw) carry V(p) with p >= 0, edges leaving towards the lower right (se)
carry V-bar(m), stored as -m. A diamond receives x = -m from its upper-left
neighbour and y = p from its upper-right neighbour.
"""
import logging
import re
from itertools import product
from typing import Dict, List, Optional, Tuple

import networkx as nx

from webbasis.models.diagram import Cell, FlowDiagram, Vertex
from webbasis.models.word import GlWeight, Letter, Word
from webbasis.services.errors import DiagramFormatError, RankError
from webbasis.services.words import check_letters, weight_of_word
from webbasis.utils.helpers import format_int_list, parse_int_list

logger = logging.getLogger(__name__)

BYPASS = 'bypass'


def letter_triangle(letter: Letter, n: int, j: int = 0) -> Cell:
    """Top-row cell for one letter: a merge of sw and se into the strand."""
    a = letter.value
    if a > n:
        raise RankError(f"letter {letter} exceeds n={n}")
    if letter.barred:
        sw, se, top = a - 1, -a, -1
    else:
        sw, se, top = a, -(a - 1), 1
    internal: Tuple[Vertex, ...] = ()
    if sw != 0 and se != 0:
        internal = (Vertex(kind='merge', inputs=(sw, se), outputs=(top,)),)
    return Cell(i=0, j=j, kind='letter', sw=sw, se=se, top=top, internal=internal)


def fill_diamond(x: int, y: int, n: int, i: int = 1, j: int = 0, mode: Optional[str] = None) -> Cell:
    """Fill a diamond from its upper inputs.

    x = -m and y = p with m = p > 0 closes into a cup; any other pair passes
    through, with a merge/split pair around a rung p - m when both are
    present. ``mode='bypass'`` keeps the outputs of a cup site and routes
    them through a cup above a cap.
    """
    if abs(x) > n or abs(y) > n:
        raise RankError(f"diamond inputs ({x}, {y}) outside [-{n}, {n}]")
    if x > 0 or y < 0:
        logger.warning(f"Diamond ({i},{j}) received unexpected orientation x={x}, y={y}")
    if x == 0 and y == 0:
        return Cell(i=i, j=j, kind='empty')
    cup = x == -y and y > 0
    if mode == BYPASS:
        if not cup:
            raise ValueError(f"bypass fill needs a cup site, got x={x}, y={y}")
        internal = (Vertex(kind='cup', outputs=(x, y)), Vertex(kind='cap', inputs=(y, x)))
        return Cell(i=i, j=j, kind='diamond', x=x, y=y, sw=y, se=x, internal=internal)
    if cup:
        return Cell(i=i, j=j, kind='diamond', x=x, y=y, internal=(Vertex(kind='cup', outputs=(x, y)),))
    internal = ()
    if x != 0 and y != 0:
        rung = x + y
        if abs(rung) > n:
            logger.warning(f"Diamond ({i},{j}) rung {rung} exceeds n={n}; passing through")
        else:
            internal = (Vertex(kind='merge', inputs=(y, x), outputs=(rung,)),
                        Vertex(kind='split', inputs=(rung,), outputs=(x, y)))
    return Cell(i=i, j=j, kind='diamond', x=x, y=y, sw=y, se=x, internal=internal)


def grow(w: Word, n: int, overrides: Optional[Dict[Tuple[int, int], str]] = None) -> FlowDiagram:
    """Grow the flow diagram of w row by row; ``overrides`` maps cells to alternative fills."""
    check_letters(w, n)
    overrides = overrides or {}
    r = len(w)
    rows: List[List[Cell]] = [[letter_triangle(letter, n, j) for j, letter in enumerate(w.letters)]]
    for i in range(1, r):
        above = rows[-1]
        rows.append([
            fill_diamond(above[j].se, above[j + 1].sw, n, i, j, overrides.get((i, j)))
            for j in range(r - i)
        ])
    diagram = FlowDiagram(n=n, word=w, cells=tuple(cell for row in rows for cell in row))
    logger.debug(f"Grew {w} at n={n}: OA={diagram.oa_edges}, OB={diagram.ob_edges}")
    return diagram


def boundary_weights(d: FlowDiagram) -> Tuple[GlWeight, GlWeight]:
    """(H, D): H sums the highest weights on OA, D the subsets {1..m} on OB."""
    H = [0] * d.n
    D = [0] * d.n
    for p in d.oa_edges:
        for a in range(p):
            H[a] += 1
    for label in d.ob_edges:
        for a in range(-label):
            D[a] += 1
    return GlWeight(coords=tuple(H)), GlWeight(coords=tuple(D))


def check_weight_identity(d: FlowDiagram) -> bool:
    H, D = boundary_weights(d)
    return H - D == weight_of_word(d.word, d.n)


def cup_sites(d: FlowDiagram) -> List[Tuple[int, int]]:
    """Cells where the equal case fired, in row-major order."""
    return [(c.i, c.j) for c in d.cells if c.kind == 'diamond' and c.is_cup]


def cup_pairs(d: FlowDiagram) -> List[Tuple[int, int]]:
    """Strand positions joined by each cup: the cup at (i, j) pairs j and j + i."""
    return sorted((j, j + i) for i, j in cup_sites(d))


def _edge_type(label: int, n: int) -> int:
    """Label of an edge once the determinant is dropped: p and p - n agree, n itself vanishes."""
    p = label % n
    return p - n if 2 * p > n else p


def diamond_picture(cell: Cell, n: int) -> Tuple:
    """Picture of a diamond with labels reduced modulo n; vertices on a vanishing edge are dropped."""
    vertices = []
    for vertex in cell.internal:
        ends = tuple(_edge_type(a, n) for a in vertex.inputs + vertex.outputs)
        if 0 not in ends:
            vertices.append((vertex.kind, ends))
    return _edge_type(cell.x, n), _edge_type(cell.y, n), tuple(vertices)


def diamond_census(n: int, r_max: int = 3) -> List[Cell]:
    """Distinct diamond pictures that occur in grown diagrams of words up to length r_max.

    Blank cells count as the diamond with two absent inputs, so for n = 3
    the census is the full table of ordered pairs of edge types.
    """
    alphabet = [a for a in range(-n, n + 1) if a != 0]
    seen: Dict[Tuple, Cell] = {}
    for r in range(2, r_max + 1):
        for labels in product(alphabet, repeat=r):
            d = grow(Word.from_z(list(labels)), n)
            for cell in d.cells:
                if cell.kind != 'letter':
                    seen.setdefault(diamond_picture(cell, n), cell)
    logger.debug(f"Diamond census for n={n}, r<={r_max}: {len(seen)} pictures")
    return [seen[key] for key in sorted(seen)]


# ---------------------------------------------------------------------------
# text format

_CELL_RE = re.compile(r"^cell (\d+) (\d+) (.*?)(?: internal=\[(.*)\])?$")
_VERTEX_RE = re.compile(r"(merge|split|cup|cap)\(([-\d,]*)->([-\d,]*)\)")


def render_text(d: FlowDiagram) -> str:
    lines = [f"diagram n={d.n} word={d.word}"]
    for c in d.cells:
        fields = [f"kind={c.kind}"]
        if c.kind == 'letter':
            fields.append(f"top={c.top}")
        else:
            fields += [f"x={c.x}", f"y={c.y}"]
        fields += [f"se={c.se}", f"sw={c.sw}"]
        internal = ", ".join(str(v) for v in c.internal)
        lines.append(f"cell {c.i} {c.j} {' '.join(fields)} internal=[{internal}]")
    lines.append(f"OA: {format_int_list(d.oa_edges)}")
    lines.append(f"OB: {format_int_list(d.ob_edges)}")
    lines.append(f"TOP: {format_int_list(d.top)}")
    return "\n".join(lines)


def _parse_vertices(text: str) -> Tuple[Vertex, ...]:
    vertices = []
    for kind, ins, outs in _VERTEX_RE.findall(text or ""):
        vertices.append(Vertex(kind=kind, inputs=tuple(parse_int_list(ins)), outputs=tuple(parse_int_list(outs))))
    return tuple(vertices)


def parse_text(text: str) -> FlowDiagram:
    """Parse the output of render_text and check grid consistency."""
    from webbasis.services.words import parse_word

    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not lines or not lines[0].startswith("diagram "):
        raise DiagramFormatError("missing 'diagram n=.. word=..' header")
    try:
        header = dict(part.split("=", 1) for part in lines[0].split()[1:])
        n = int(header["n"])
        word = parse_word(header.get("word", ""))
        cells = []
        boundary = {}
        for line in lines[1:]:
            if line.startswith("cell "):
                match = _CELL_RE.match(line)
                if match is None:
                    raise DiagramFormatError(f"cannot parse cell line {line!r}")
                i, j, rest, internal = match.groups()
                fields = dict(part.split("=", 1) for part in rest.split())
                numbers = {k: int(v) for k, v in fields.items() if k != "kind"}
                cells.append(Cell(i=int(i), j=int(j), kind=fields["kind"], internal=_parse_vertices(internal), **numbers))
            else:
                name, _, values = line.partition(":")
                boundary[name.strip()] = parse_int_list(values)
        d = FlowDiagram(n=n, word=word, cells=tuple(cells))
    except DiagramFormatError:
        raise
    except (KeyError, ValueError) as e:
        logger.error(f"Error parsing diagram text: {str(e)}")
        raise DiagramFormatError(f"invalid diagram text: {str(e)}") from e
    for i in range(1, d.r):
        for j in range(d.r - i):
            c = d.cell(i, j)
            if c.x != d.cell(i - 1, j).se or c.y != d.cell(i - 1, j + 1).sw:
                raise DiagramFormatError(f"cell ({i},{j}) inputs do not match its upper neighbours")
    for name, actual in (("OA", d.oa_edges), ("OB", d.ob_edges), ("TOP", d.top)):
        if name in boundary and boundary[name] != actual:
            raise DiagramFormatError(f"{name} line {boundary[name]} disagrees with the cells {actual}")
    return d


# ---------------------------------------------------------------------------
# graphs and normal forms

def to_graph(d: FlowDiagram) -> nx.DiGraph:
    """Vertices and boundary terminals joined by upward-oriented labelled edges.

    Pass-through cells contribute no node; an edge runs from the node its
    flow leaves to the node it enters.
    """
    parent: Dict[tuple, tuple] = {}

    def find(a):
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        parent[find(a)] = find(b)

    tails: Dict[tuple, List[tuple]] = {}
    heads: Dict[tuple, List[tuple]] = {}
    labels: Dict[tuple, int] = {}
    graph = nx.DiGraph()

    def attach(port, node, role, label):
        (tails if role == 'tail' else heads).setdefault(port, []).append(node)
        labels[port] = label

    r = d.r
    for j in range(r):
        graph.add_node(("top", j), kind='terminal', terminal=f"top{j}")
        attach(("top", j), ("top", j), 'head', d.cell(0, j).top)
    for i in range(r):
        if d.cell(i, 0).sw:
            graph.add_node(("OA", i), kind='terminal', terminal=f"OA{i}")
            attach(("sw", i, 0), ("OA", i), 'tail', d.cell(i, 0).sw)
        if d.cell(i, r - 1 - i).se:
            graph.add_node(("OB", i), kind='terminal', terminal=f"OB{i}")
            attach(("se", i, r - 1 - i), ("OB", i), 'tail', d.cell(i, r - 1 - i).se)

    for c in d.cells:
        sw, se = ("sw", c.i, c.j), ("se", c.i, c.j)
        if c.kind == 'letter':
            top = ("top", c.j)
            if c.internal:
                node = ("v", c.i, c.j, 0)
                graph.add_node(node, kind='merge', terminal=None)
                attach(sw, node, 'head', c.sw)
                attach(se, node, 'head', c.se)
                attach(top, node, 'tail', c.top)
            else:
                union(sw if c.sw else se, top)
            continue
        x, y = ("se", c.i - 1, c.j), ("sw", c.i - 1, c.j + 1)
        kinds = [v.kind for v in c.internal]
        if not kinds:
            if c.y:
                union(sw, y)
            if c.x:
                union(se, x)
            continue
        if kinds[0] == 'cup':
            cup = ("v", c.i, c.j, 0)
            graph.add_node(cup, kind='cup', terminal=None)
            attach(x, cup, 'tail', c.x)
            attach(y, cup, 'tail', c.y)
            if len(kinds) > 1:
                cap = ("v", c.i, c.j, 1)
                graph.add_node(cap, kind='cap', terminal=None)
                attach(sw, cap, 'head', c.sw)
                attach(se, cap, 'head', c.se)
            continue
        merge, split = ("v", c.i, c.j, 0), ("v", c.i, c.j, 1)
        graph.add_node(merge, kind='merge', terminal=None)
        graph.add_node(split, kind='split', terminal=None)
        attach(sw, merge, 'head', c.sw)
        attach(se, merge, 'head', c.se)
        graph.add_edge(merge, split, label=c.x + c.y)
        attach(x, split, 'tail', c.x)
        attach(y, split, 'tail', c.y)

    wires: Dict[tuple, Dict[str, List[tuple]]] = {}
    for port, nodes in tails.items():
        wires.setdefault(find(port), {'tail': [], 'head': [], 'label': labels[port]})['tail'] += nodes
    for port, nodes in heads.items():
        wires.setdefault(find(port), {'tail': [], 'head': [], 'label': labels[port]})['head'] += nodes
    for root, wire in wires.items():
        if len(wire['tail']) != 1 or len(wire['head']) != 1:
            raise DiagramFormatError(f"wire {root} has {len(wire['tail'])} tails and {len(wire['head'])} heads")
        tail, head = wire['tail'][0], wire['head'][0]
        if graph.has_edge(tail, head):
            raise DiagramFormatError(f"parallel wires between {tail} and {head}")
        graph.add_edge(tail, head, label=wire['label'])
    return graph


def family(graph: nx.DiGraph, node) -> Optional[str]:
    kind = graph.nodes[node].get('kind')
    return kind if kind in ('merge', 'split') else None


def contract_edge(graph: nx.DiGraph, tail, head) -> nx.DiGraph:
    """Contract one edge between two vertices of the same family."""
    kind = family(graph, tail)
    if kind is None or kind != family(graph, head):
        raise ValueError(f"edge {tail} -> {head} does not join two vertices of one family")
    keep, drop = (head, tail) if kind == 'merge' else (tail, head)
    contracted = nx.contracted_nodes(graph, keep, drop, self_loops=False, copy=True)
    contracted.nodes[keep].pop('contraction', None)
    return contracted


def canonicalize(graph_or_diagram) -> nx.DiGraph:
    """Contract same-family edges until none remain; the result is the normal form."""
    graph = to_graph(graph_or_diagram) if isinstance(graph_or_diagram, FlowDiagram) else graph_or_diagram.copy()
    while True:
        edge = next(((u, v) for u, v in sorted(graph.edges(), key=str)
                     if family(graph, u) is not None and family(graph, u) == family(graph, v)), None)
        if edge is None:
            return graph
        graph = contract_edge(graph, *edge)


def same_normal_form(a: nx.DiGraph, b: nx.DiGraph) -> bool:
    """Isomorphism of normal forms that fixes every boundary terminal and label."""
    node_match = nx.algorithms.isomorphism.categorical_node_match(['kind', 'terminal'], [None, None])
    edge_match = nx.algorithms.isomorphism.categorical_edge_match('label', None)
    return nx.is_isomorphic(canonicalize(a), canonicalize(b), node_match=node_match, edge_match=edge_match)
