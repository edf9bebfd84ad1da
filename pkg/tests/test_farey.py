import random
from collections import deque
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bowditch.farey import (
    INF,
    MINUS_ONE,
    ONE,
    ZERO,
    Edge,
    OrientedEdge,
    Region,
    Subtree,
    Vertex,
    base_edge,
    circular_set,
    edge_distance,
    is_neighbor,
    neighbors_of,
    parents,
    primitive_word,
    regions_to_depth,
    regions_to_length,
    span,
    tricolor,
    word_length_F,
)
from bowditch.words import Word, cyclic_length, slope


def R(text):
    return Region.parse(text)


@st.composite
def regions(draw, max_coord=60):
    q = draw(st.integers(1, max_coord))
    p = draw(st.integers(-max_coord, max_coord))
    g = gcd(abs(p), q)
    return Region.from_vector(p // g, q // g)


@st.composite
def edges(draw):
    # walk down from the base edge by random vertex choices
    e = Edge(INF, ZERO)
    for _ in range(draw(st.integers(0, 10))):
        v = e.endpoints()[draw(st.integers(0, 1))]
        e = v.edges()[draw(st.integers(0, 2))]
    return e


def neighbours(e):
    return {f for v in e.endpoints() for f in v.edges() if f != e}


def bfs_path(start, goal):
    prev = {start: None}
    todo = deque([start])
    while todo:
        e = todo.popleft()
        if e == goal:
            break
        for f in neighbours(e):
            if f not in prev:
                prev[f] = e
                todo.append(f)
    path = [goal]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path


def test_base_edge():
    e0 = base_edge()
    assert set(e0.edge.regions()) == {INF, ZERO}
    assert {e0.head, e0.tail} == {ONE, MINUS_ONE}
    assert e0.head == MINUS_ONE
    assert is_neighbor(INF, ZERO)


def test_primitive_word_examples():
    assert primitive_word(INF) == Word("a")
    assert primitive_word(ZERO) == Word("b")
    assert primitive_word(MINUS_ONE) == Word("aB")
    w = primitive_word(R("2/1"))
    assert w.exponent_sums() == (2, 1)
    assert cyclic_length(w) == 3


def test_parents_examples():
    assert set(parents(R("2/1"))) == {ONE, INF}
    assert set(parents(R("1/2"))) == {ZERO, ONE}
    assert set(parents(ONE)) == {INF, ZERO}
    with pytest.raises(ValueError):
        parents(INF)


def test_neighbors_examples():
    assert neighbors_of(INF, ZERO, 3) == R("3/1")
    assert neighbors_of(INF, ZERO, -1) == MINUS_ONE
    assert neighbors_of(R("2/3"), R("1/2"), 0) == R("1/2")


def test_word_length_examples():
    e0 = base_edge()
    assert word_length_F(e0, INF) == 1
    assert word_length_F(e0, ONE) == 2
    assert word_length_F(e0, R("2/1")) == 3


def test_tricolor_examples():
    assert len({tricolor(INF), tricolor(ZERO), tricolor(ONE)}) == 3
    assert tricolor(R("3/1")) == tricolor(ONE)
    assert tricolor(R("3/2")) == tricolor(INF)
    assert tricolor(R("2/3")) == tricolor(ZERO)


def test_depth_12_exactness():
    e0 = base_edge()
    rs = regions_to_depth(12)
    assert len(rs) == 8192
    for x in rs:
        w = primitive_word(x)
        assert slope(w) == x
        assert word_length_F(e0, x) == cyclic_length(w)


def test_regions_to_length_matches_filter():
    short = set(regions_to_length(9))
    assert short == {x for x in regions_to_depth(9) if abs(x.p) + x.q <= 9}


@given(regions())
def test_parents_are_neighbours(x):
    if x in (INF, ZERO):
        return
    a, b = parents(x)
    assert is_neighbor(a, b) and is_neighbor(a, x) and is_neighbor(b, x)
    assert Region.from_vector(a.p + b.p, a.q + b.q) == x or Region.from_vector(a.p - b.p, a.q - b.q) == x


@given(regions(), st.integers(-6, 6))
def test_neighbor_family_borders_x(x, n):
    if x == INF:
        y = ZERO
    else:
        y = parents(x)[0] if x != ZERO else INF
    yn = neighbors_of(x, y, n)
    assert is_neighbor(x, yn)


@given(edges())
def test_vertex_colours_distinct(e):
    for v in e.endpoints():
        assert len({tricolor(r) for r in v.regions}) == 3


@given(edges(), st.integers(0, 1))
def test_sides_partition(e, pick):
    oe = OrientedEdge(e, e.opposite()[pick])
    window = sorted(set(regions_to_depth(6)) | set(e.regions()))
    sides = [oe.side(r) for r in window]
    assert sum(s == 0 for s in sides) == 2
    for r, s in zip(window, sides):
        assert s in (-1, 0, 1)
        assert (s == 0) == (r in e.regions())
        assert oe.reverse().side(r) == -s
    assert oe.side(oe.head) == 1 and oe.side(oe.tail) == -1


def test_edge_rejects_non_neighbours():
    with pytest.raises(ValueError):
        Edge(R("1/2"), R("2/1"))
    with pytest.raises(ValueError):
        Vertex.of(INF, ZERO, R("2/1"))


def test_span_examples():
    e0 = Edge(INF, ZERO)
    assert span([e0]).edges == {e0}
    f = Edge(INF, ONE)
    assert span([e0, f]).edges == {e0, f}
    with pytest.raises(ValueError):
        span([])


def test_span_far_edge_matches_bfs():
    e0 = Edge(INF, ZERO)
    far = Edge(R("3/2"), R("2/1"))
    path = bfs_path(e0, far)
    assert edge_distance(e0, far) == len(path) - 1 == 3
    assert span([e0, far]).edges == set(path)
    assert len(span([e0, far])) == 4


@given(st.lists(edges(), min_size=1, max_size=4))
def test_span_is_union_of_bfs_paths(es):
    expected = set()
    for e in es:
        expected |= set(bfs_path(es[0], e))
    tree = span(es)
    assert tree.edges == expected
    assert tree.is_connected()


@given(edges(), edges())
def test_edge_distance_matches_bfs(e, f):
    assert edge_distance(e, f) == len(bfs_path(e, f)) - 1


def test_circular_set_counts():
    e0 = Edge(INF, ZERO)
    assert len(circular_set(Subtree(frozenset({e0})))) == 4
    two = span([e0, Edge(INF, ONE)])
    assert len(circular_set(two)) == 5
    three = span([e0, Edge(R("2/1"), ONE)])
    assert len(three) == 3
    assert len(circular_set(three)) == 6


@given(st.lists(edges(), min_size=1, max_size=3))
def test_circular_set_touches_tree_at_head_only(es):
    tree = span(es)
    circ = circular_set(tree)
    assert len(circ) == len(tree) + 3
    verts = tree.vertices()
    for oe in circ:
        assert oe.edge not in tree.edges
        assert oe.head_vertex in verts and oe.tail_vertex not in verts


def test_random_region_round_trip():
    rng = random.Random(7)
    for _ in range(300):
        q = rng.randint(1, 400)
        p = rng.randint(-400, 400)
        g = gcd(abs(p), q)
        x = Region.from_vector(p // g, q // g)
        assert slope(primitive_word(x)) == x
        assert Region.parse(str(x)) == x
