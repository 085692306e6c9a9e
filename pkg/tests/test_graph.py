import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import coloured_graphs, path_graph
from monocover.errors import (
    DuplicateEdge,
    EmptySet,
    EmptySourceSet,
    SelfLoop,
    UncolouredEdge,
    VertexOutOfRange,
)
from monocover.graph import (
    Colour,
    ColouredGraph,
    Mask,
    ball,
    eccentric_pair,
    induced,
    mono_bfs,
    mono_components,
    mono_diameter,
)
from naive import all_pairs, colour_edges

R, B = Colour.RED, Colour.BLUE


def cycle(n, mask=Mask.RED):
    return ColouredGraph(n, tuple((i, (i + 1) % n, mask) for i in range(n)))


class TestValidate:
    def test_red_triangle_ok(self, red_triangle):
        assert red_triangle.n == 3
        assert len(red_triangle.edges) == 3

    def test_self_loop(self):
        with pytest.raises(SelfLoop) as info:
            ColouredGraph(3, ((0, 0, Mask.RED),))
        assert info.value.edge[:2] == (0, 0)

    def test_out_of_range(self):
        with pytest.raises(VertexOutOfRange) as info:
            ColouredGraph(3, ((0, 5, Mask.RED),))
        assert info.value.edge[:2] == (0, 5)

    def test_duplicate_in_either_orientation(self):
        with pytest.raises(DuplicateEdge):
            ColouredGraph(3, ((0, 1, Mask.RED), (1, 0, Mask.BLUE)))

    @pytest.mark.parametrize("mask", [0, 4, "R"])
    def test_uncoloured(self, mask):
        with pytest.raises(UncolouredEdge):
            ColouredGraph(2, ((0, 1, mask),))

    def test_colour_other_is_involution(self):
        for c in Colour:
            assert c.other() is not c
            assert c.other().other() is c

    def test_edges_are_canonical(self):
        g = ColouredGraph(3, ((2, 1, Mask.BLUE), (1, 0, Colour.RED)))
        assert g.edges == ((0, 1, Mask.RED), (1, 2, Mask.BLUE))
        assert g == ColouredGraph(3, ((0, 1, 1), (1, 2, 2)))


class TestBfs:
    def test_two_colour_path(self):
        g = ColouredGraph(3, ((0, 1, Mask.RED), (1, 2, Mask.BLUE)))
        assert mono_bfs(g, R, {0}) == [0, 1, None]

    def test_five_cycle(self):
        assert mono_bfs(cycle(5), R, {0}) == [0, 1, 2, 2, 1]

    def test_empty_sources(self):
        with pytest.raises(EmptySourceSet):
            mono_bfs(cycle(5), R, set())

    def test_both_edges_count_for_each_colour(self):
        g = ColouredGraph(2, ((0, 1, Mask.BOTH),))
        assert mono_bfs(g, R, [0]) == mono_bfs(g, B, [0]) == [0, 1]

    @given(coloured_graphs(max_n=9), st.sampled_from(list(Colour)), st.data())
    def test_source_at_zero_and_matches_floyd(self, g, colour, data):
        if g.n == 0:
            return
        v = data.draw(st.integers(0, g.n - 1))
        dist = mono_bfs(g, colour, [v])
        ref = all_pairs(g.n, colour_edges(g, colour))[v]
        assert dist[v] == 0
        assert [math.inf if d is None else d for d in dist] == list(ref)


class TestBall:
    def test_radius_zero(self):
        assert ball(cycle(5), R, 3, 0) == {3}

    def test_star(self):
        g = ColouredGraph(4, tuple((0, i, Mask.RED) for i in (1, 2, 3)))
        assert ball(g, R, 0, 1) == {0, 1, 2, 3}

    def test_red_path(self):
        assert ball(path_graph(3), R, 0, 2) == {0, 1, 2}

    @given(coloured_graphs(max_n=9), st.sampled_from(list(Colour)), st.data())
    def test_monotone_and_diameter_through_centre(self, g, colour, data):
        if g.n == 0:
            return
        v = data.draw(st.integers(0, g.n - 1))
        d = data.draw(st.integers(0, 6))
        inner = ball(g, colour, v, d)
        assert v in inner
        assert inner <= ball(g, colour, v, d + 1)
        assert mono_diameter(g, colour, inner) <= 2 * d


class TestComponents:
    def test_edgeless(self):
        assert mono_components(ColouredGraph(3), R) == [{0}, {1}, {2}]

    def test_one_red_one_blue(self):
        g = ColouredGraph(3, ((0, 1, Mask.RED), (1, 2, Mask.BLUE)))
        assert mono_components(g, R) == [{0, 1}, {2}]

    def test_both_edge_in_blue(self):
        g = ColouredGraph(2, ((0, 1, Mask.BOTH),))
        assert mono_components(g, B) == [{0, 1}]

    @given(coloured_graphs(max_n=10), st.sampled_from(list(Colour)))
    def test_partition(self, g, colour):
        comps = mono_components(g, colour)
        assert sorted(v for c in comps for v in c) == list(range(g.n))
        d = all_pairs(g.n, colour_edges(g, colour))
        which = {v: i for i, c in enumerate(comps) for v in c}
        for u in range(g.n):
            for v in range(g.n):
                assert (which[u] == which[v]) == (d[u, v] < math.inf)


class TestDiameter:
    def test_singleton(self):
        assert mono_diameter(cycle(5), R, {2}) == 0

    def test_triangle(self, red_triangle):
        assert mono_diameter(red_triangle, R, {0, 1, 2}) == 1

    def test_empty(self):
        with pytest.raises(EmptySet):
            mono_diameter(cycle(5), R, set())

    def test_paths_stay_inside(self):
        # 0 and 2 are joined only through 1
        assert mono_diameter(path_graph(2), R, {0, 2}) == math.inf

    def test_wrong_colour_is_disconnected(self, red_triangle):
        assert mono_diameter(red_triangle, B, {0, 1}) == math.inf


class TestEccentricPair:
    def test_path(self):
        z, w, d = eccentric_pair(path_graph(2), R, {0, 1, 2})
        assert d == 2 and {z, w} == {0, 2}

    def test_k4(self):
        g = ColouredGraph.complete(4, lambda u, v: Mask.RED)
        assert eccentric_pair(g, R, range(4))[2] == 1

    def test_c6(self):
        assert eccentric_pair(cycle(6), R, range(6))[2] == 3

    @settings(max_examples=60)
    @given(coloured_graphs(max_n=12), st.sampled_from(list(Colour)))
    def test_matches_all_pairs(self, g, colour):
        d = all_pairs(g.n, colour_edges(g, colour))
        for comp in mono_components(g, colour):
            z, w, dist = eccentric_pair(g, colour, comp)
            vs = sorted(comp)
            assert dist == d[vs][:, vs].max()
            assert d[z, w] == dist


def test_induced_relabels():
    g = ColouredGraph(4, ((0, 1, Mask.RED), (1, 3, Mask.BLUE), (2, 3, Mask.BOTH)))
    sub, old = induced(g, [3, 1])
    assert old == (1, 3)
    assert sub.edges == ((0, 1, Mask.BLUE),)
