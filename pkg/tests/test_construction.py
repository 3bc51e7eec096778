from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from bandcube.construction import (
    IndifferenceRepresentation,
    Layer,
    build_representation,
    layer_base,
    layer_block,
    parse_representation,
    to_cubes,
    write_cubes,
    write_representation,
)
from bandcube.errors import ParseError, ValidationError
from bandcube.generators import path
from bandcube.graph import Graph, LinearOrdering, ordering_width
from bandcube.verify import realize_cubes, realize_intersection
from strategies import graphs_with_orderings


def by_order(layer, ordering):
    return [layer.value(v) for v in ordering.order]


def layer_graph(layer):
    n = layer.n
    return Graph(n, frozenset(
        (u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if layer.adjacent(u, v)
    ))


# -- layer 0 ------------------------------------------------------------------


def test_base_takes_epsilon_branch():
    g = Graph.from_edges(3, [(1, 2)])
    layer = layer_base(g, LinearOrdering.identity(3))
    assert layer.values == (F(1), F(2), F(3) + F(1, 9))
    assert layer.interval_length == 1


def test_base_c4(c4, c4_ordering):
    layer = layer_base(c4, c4_ordering)
    assert by_order(layer, c4_ordering) == [1, 2, 3, 4]
    assert layer.interval_length == 2


def test_base_p3_is_exact():
    p3 = path(3)
    layer = layer_base(p3, LinearOrdering.identity(3))
    assert layer.values == (1, 2, 3)
    assert layer_graph(layer) == p3


def test_base_rejects_width_zero():
    with pytest.raises(ValidationError):
        layer_base(Graph(3), LinearOrdering.identity(3))


# -- block layers -------------------------------------------------------------


def test_block_c4_first(c4, c4_ordering):
    layer = layer_block(c4, c4_ordering, 1)
    assert by_order(layer, c4_ordering) == [0, 2, 1, 3]
    assert layer.interval_length == 2


def test_block_c4_second(c4, c4_ordering):
    layer = layer_block(c4, c4_ordering, 2)
    # u1 precedes position 2; blocks {u2, u4}, {u3}
    assert by_order(layer, c4_ordering) == [2, 0, 3, 1]


def test_block_p3_singletons():
    layer = layer_block(path(3), LinearOrdering.identity(3), 1)
    assert layer.values == (0, 1, 2)


@pytest.mark.parametrize("i", [0, 3, -1])
def test_block_index_range(c4, c4_ordering, i):
    with pytest.raises(ValidationError):
        layer_block(c4, c4_ordering, i)


# -- whole representation -----------------------------------------------------


def test_build_c4(c4, c4_ordering):
    rep = build_representation(c4, c4_ordering)
    assert rep.dims == 3 and rep.width == 2
    assert [by_order(layer, c4_ordering) for layer in rep.layers] == [
        [1, 2, 3, 4], [0, 2, 1, 3], [2, 0, 3, 1]
    ]
    assert realize_intersection(rep) == c4
    # non-edge (u1,u3) dies in layer 0, (u2,u4) in layer 2
    assert not rep.layers[0].adjacent(1, 3)
    assert rep.layers[1].adjacent(2, 4) and not rep.layers[2].adjacent(2, 4)


def test_build_p4():
    p4 = path(4)
    rep = build_representation(p4, LinearOrdering.identity(4))
    assert rep.dims == 2
    assert layer_graph(rep.layers[0]) == p4
    assert rep.layers[1].values == (0, 1, 2, 3)
    assert rep.layers[1].interval_length == 2


def test_build_edgeless():
    g = Graph(4)
    rep = build_representation(g, LinearOrdering.identity(4))
    assert rep.dims == 1
    assert rep.layers[0].values == (2, 4, 6, 8)
    assert rep.layers[0].interval_length == 1
    assert realize_intersection(rep) == g


def test_build_single_vertex():
    rep = build_representation(Graph(1), LinearOrdering.identity(1))
    assert rep.dims == 1 and realize_intersection(rep) == Graph(1)


def test_output_follows_vertex_ids(c4, c4_ordering):
    text = write_representation(build_representation(c4, c4_ordering))
    v_lines = [ln for ln in text.splitlines() if ln.startswith("v ")]
    assert [ln.split()[1] for ln in v_lines[:4]] == ["1", "2", "3", "4"]


# -- cubes --------------------------------------------------------------------


def test_cubes_c4(c4, c4_ordering):
    rep = build_representation(c4, c4_ordering)
    cubes = to_cubes(rep)
    assert cubes.k == 3
    assert [cubes.anchors[v - 1][0] for v in c4_ordering.order] == [F(1, 2), 1, F(3, 2), 2]
    for d, layer in enumerate(rep.layers):
        assert [a[d] for a in cubes.anchors] == [x / 2 for x in layer.values]
    assert realize_cubes(cubes) == c4


def test_cubes_edgeless():
    layer = Layer.from_values(0, [2, 4, 6, 8], 1)
    cubes = to_cubes(IndifferenceRepresentation.from_layers([layer]))
    assert cubes.k == 1
    assert [a[0] for a in cubes.anchors] == [2, 4, 6, 8]


def test_cubes_p3():
    cubes = to_cubes(build_representation(path(3), LinearOrdering.identity(3)))
    assert [a[0] for a in cubes.anchors] == [1, 2, 3]
    assert [a[1] for a in cubes.anchors] == [0, F(1, 2), 1]


def test_cubes_zero_length():
    rep = IndifferenceRepresentation.from_layers([Layer.from_values(0, [1, 2], 0)])
    with pytest.raises(ValidationError):
        to_cubes(rep)


def test_write_cubes(c4, c4_ordering):
    text = write_cubes(to_cubes(build_representation(c4, c4_ordering)))
    assert text.splitlines()[0] == "cubes n 4 k 3"
    assert text.splitlines()[1] == "v 1 1/2 0/1 1/1"


# -- properties ---------------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(graphs_with_orderings(max_n=14))
def test_reconstruction_is_exact(case):
    g, o = case
    rep = build_representation(g, o)
    b = ordering_width(g, o)
    assert rep.dims == (b + 1 if b else 1)
    assert realize_intersection(rep) == g
    assert realize_cubes(to_cubes(rep)) == g


@settings(max_examples=150, deadline=None)
@given(graphs_with_orderings(min_n=2, max_n=14))
def test_every_layer_is_a_supergraph(case):
    g, o = case
    for layer in build_representation(g, o).layers:
        assert all(layer.adjacent(u, v) for u, v in g.edges)


@settings(max_examples=150, deadline=None)
@given(graphs_with_orderings(min_n=2, max_n=14))
def test_base_layer_monotone_tight_and_exact(case):
    g, o = case
    if not g.edges:
        return
    n = g.n
    layer = layer_base(g, o)
    vals = by_order(layer, o)
    assert all(a < b for a, b in zip(vals, vals[1:]))
    for j, x in enumerate(vals, start=1):
        assert j <= x <= j + F(1, n)
        assert (x * n * n).denominator == 1
    for i in range(1, ordering_width(g, o) + 1):
        assert all(x.denominator == 1 for x in layer_block(g, o, i).values)


@settings(max_examples=150, deadline=None)
@given(graphs_with_orderings(min_n=2, max_n=14))
def test_separation_certificate(case):
    g, o = case
    b = ordering_width(g, o)
    if b == 0:
        return
    rep = build_representation(g, o)
    base = rep.layers[0]
    for j in range(1, g.n + 1):
        for k in range(j + 1, g.n + 1):
            u, v = o.vertex_at(j), o.vertex_at(k)
            if g.has_edge(u, v):
                continue
            if k - j >= b:
                assert abs(base.value(u) - base.value(v)) > b
            else:
                layer = rep.layers[(j - 1) % b + 1]
                assert layer.index == (j - 1) % b + 1 and layer.index % b == j % b
                assert abs(layer.value(u) - layer.value(v)) == 3


# -- text format --------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(graphs_with_orderings())
def test_representation_round_trip(case):
    g, o = case
    rep = build_representation(g, o)
    text = write_representation(rep)
    back = parse_representation(text)
    assert back == rep
    assert write_representation(back) == text


def test_representation_lowest_terms():
    g = Graph.from_edges(3, [(1, 2)])
    text = write_representation(build_representation(g, LinearOrdering.identity(3)))
    assert "v 3 28/9" in text
    assert "layer 0 length 1/1" in text


@pytest.mark.parametrize(
    "text",
    [
        "",
        "representation n 2 width 0 layers 2\nlayer 0 length 1/1\nv 1 2/1\nv 2 4/1\n",
        "representation n 2 width 0 layers 1\nlayer 0 length 1/1\nv 1 2/1\n",
        "representation n 2 width 0 layers 1\nv 1 2/1\n",
        "representation n 2 width 0 layers 1\nlayer 0 length 1/1\nv 1 2/0\nv 2 1/1\n",
        "representation n 2 width 0 layers 1\nlayer 0 length 1/1\nv 3 2/1\nv 2 1/1\n",
    ],
)
def test_representation_parse_errors(text):
    with pytest.raises(ParseError):
        parse_representation(text)
