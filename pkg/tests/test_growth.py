import networkx as nx
import pytest
from hypothesis import given, settings as hsettings, strategies as st
from pydantic import ValidationError

from webbasis.models.diagram import Cell, FlowDiagram, Vertex
from webbasis.models.word import GlWeight, Letter, Word
from webbasis.services.errors import DiagramFormatError, RankError
from webbasis.services.growth import (BYPASS, boundary_weights, canonicalize, check_weight_identity, contract_edge,
                                      cup_pairs, cup_sites, diamond_census, diamond_picture, fill_diamond, grow,
                                      letter_triangle, parse_text, render_text, same_normal_form, to_graph)
from webbasis.services.words import enumerate_words, parse_word

from tests.conftest import words_up_to


def test_letter_triangles():
    plain = letter_triangle(Letter(value=2), 3)
    assert (plain.sw, plain.se, plain.top) == (2, -1, 1)
    assert plain.internal == (Vertex(kind='merge', inputs=(2, -1), outputs=(1,)),)
    barred = letter_triangle(Letter(value=1, barred=True), 3)
    assert (barred.sw, barred.se, barred.top) == (0, -1, -1)
    assert barred.internal == ()
    with pytest.raises(RankError):
        letter_triangle(Letter(value=4), 3)


def test_diamond_fills():
    cup = fill_diamond(-1, 1, 2)
    assert cup.is_cup and (cup.sw, cup.se) == (0, 0)
    rung = fill_diamond(-1, 2, 3)
    assert (rung.sw, rung.se) == (2, -1)
    assert [v.kind for v in rung.internal] == ['merge', 'split']
    assert rung.internal[0].outputs == (1,)
    plain = fill_diamond(0, 2, 2)
    assert plain.internal == () and (plain.sw, plain.se) == (2, 0)
    assert fill_diamond(0, 0, 2).kind == 'empty'


def test_bypass_fill():
    cell = fill_diamond(-2, 2, 3, mode=BYPASS)
    assert [v.kind for v in cell.internal] == ['cup', 'cap']
    assert (cell.sw, cell.se) == (2, -2)
    with pytest.raises(ValueError):
        fill_diamond(-1, 2, 3, mode=BYPASS)


def test_diamond_census_sl3():
    cells = diamond_census(3)
    pictures = [diamond_picture(c, 3) for c in cells]
    assert len(cells) == 9
    # one picture per ordered pair of inputs from {absent, 1, -1}
    assert {(x, y) for x, y, _ in pictures} == {(x, y) for x in (0, 1, -1) for y in (0, 1, -1)}
    assert sum(1 for c in cells if c.is_cup) == 2
    assert [p for p in pictures if p[2] and not any(v[0] == "cup" for v in p[2])] == [
        (-1, -1, (("merge", (-1, -1, 1)), ("split", (1, -1, -1)))),
        (1, 1, (("merge", (1, 1, -1)), ("split", (-1, 1, 1)))),
    ]
    assert sum(1 for c in cells if c.kind == "empty") == 1


def test_grow_21():
    d = grow(parse_word("21"), 2)
    assert d.oa_edges == [2, 0]
    assert d.ob_edges == [0, 0]
    assert cup_sites(d) == [(1, 0)]
    assert cup_pairs(d) == [(0, 1)]
    H, D = boundary_weights(d)
    assert H == GlWeight(coords=(1, 1)) and D == GlWeight(coords=(0, 0))


def test_grow_12_has_no_cup():
    d = grow(parse_word("12"), 2)
    assert d.oa_edges == [1, 2]
    assert d.ob_edges == [-1, 0]
    assert cup_sites(d) == []


def test_hand_checked_boundary():
    H, D = boundary_weights(grow(parse_word("2211"), 2))
    assert H == GlWeight(coords=(2, 2))
    assert D == GlWeight.zero(2)


def test_grow_rejects_large_letters():
    with pytest.raises(RankError):
        grow(parse_word("13"), 2)


@pytest.mark.slow
@pytest.mark.parametrize("n,r_max", [(2, 5), (3, 3)])
def test_weight_identity(n, r_max):
    for w in words_up_to(r_max, n):
        assert check_weight_identity(grow(w, n)), str(w)


@pytest.mark.parametrize("n", [2, 3])
def test_labels_stay_in_range(n):
    for w in words_up_to(3, n):
        for cell in grow(w, n).cells:
            assert all(abs(label) <= n for label in cell.labels())


def test_cups_follow_the_bracket_matching():
    # over {1, 2}, 2 opens and 1 closes
    for w in enumerate_words(6, 2, None, None):
        if any(letter.barred for letter in w.letters):
            continue
        stack, pairs = [], []
        for pos, a in enumerate(w.z):
            if a == 2:
                stack.append(pos)
            elif stack:
                pairs.append((stack.pop(), pos))
        assert cup_pairs(grow(w, 2)) == sorted(pairs), str(w)


def test_flow_diagram_shape_is_checked():
    w = parse_word("12")
    with pytest.raises(ValidationError):
        FlowDiagram(n=2, word=w, cells=(Cell(i=0, j=0, kind='letter'),))


def test_vertex_conservation():
    with pytest.raises(ValidationError):
        Vertex(kind='merge', inputs=(1, 1), outputs=(1,))


def test_text_format_round_trip():
    d = grow(parse_word("12'21"), 3)
    text = render_text(d)
    assert text.splitlines()[0] == "diagram n=3 word=12'21"
    parsed = parse_text(text)
    assert parsed == d
    assert render_text(parsed) == text


def test_text_format_errors():
    with pytest.raises(DiagramFormatError):
        parse_text("cell 0 0 kind=letter")
    text = render_text(grow(parse_word("21"), 2)).replace("OA: [2,0]", "OA: [1,0]")
    with pytest.raises(DiagramFormatError):
        parse_text(text)


@hsettings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from([1, 2, 3, -1, -2, -3]), min_size=1, max_size=5))
def test_grown_graphs_are_well_formed(labels):
    d = grow(Word.from_z(labels), 3)
    graph = to_graph(d)
    assert nx.is_directed_acyclic_graph(graph)
    terminals = [node for node, data in graph.nodes(data=True) if data['kind'] == 'terminal']
    assert sum(1 for t in terminals if t[0] == 'top') == len(labels)


def _chain(first_pair):
    g = nx.DiGraph()
    for name in ("a", "b", "c", "out"):
        g.add_node(name, kind='terminal', terminal=name)
    g.add_node("m1", kind='merge', terminal=None)
    g.add_node("m2", kind='merge', terminal=None)
    third = ({"a", "b", "c"} - set(first_pair)).pop()
    for t in first_pair:
        g.add_edge(t, "m1", label=1)
    g.add_edge("m1", "m2", label=2)
    g.add_edge(third, "m2", label=1)
    g.add_edge("m2", "out", label=3)
    return g


def test_associativity_contraction():
    left, right = _chain(("a", "b")), _chain(("b", "c"))
    assert not nx.is_isomorphic(left, right, node_match=lambda x, y: x == y)
    contracted = contract_edge(left, "m1", "m2")
    assert sorted(contracted.predecessors("m2")) == ["a", "b", "c"]
    assert same_normal_form(left, right)


def test_contract_edge_rejects_mixed_families():
    g = nx.DiGraph()
    g.add_node("m", kind='merge', terminal=None)
    g.add_node("s", kind='split', terminal=None)
    g.add_edge("m", "s", label=2)
    with pytest.raises(ValueError):
        contract_edge(g, "m", "s")


def test_canonical_form_of_a_grown_diagram():
    d = grow(parse_word("123"), 3)
    normal = canonicalize(d)
    assert same_normal_form(to_graph(d), normal)
    assert not same_normal_form(to_graph(d), to_graph(grow(parse_word("132"), 3)))
