import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from srgci.complex import core, is_pure, new_complex, one_skeleton_graph as _skeleton
from srgci.enumerate import (
    MAX_N,
    canonical_code,
    canonical_graph,
    enumerate_complexes,
    labeled_graphs,
    nonisomorphic_graphs,
    random_graph,
)
from srgci.graph import Graph

from conftest import graphs


def atlas_counts():
    out = {}
    for g in nx.graph_atlas_g():
        out[g.number_of_nodes()] = out.get(g.number_of_nodes(), 0) + 1
    return out


def relabel(g, perm):
    return Graph(g.n, frozenset(tuple(sorted((perm[a - 1], perm[b - 1]))) for a, b in g.edges))


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges)
    return h


class TestCanonical:
    @given(graphs(max_n=7), st.randoms(use_true_random=False))
    def test_invariant_under_relabeling(self, g, rnd):
        perm = list(range(1, g.n + 1))
        rnd.shuffle(perm)
        assert canonical_code(relabel(g, perm)) == canonical_code(g)

    @given(graphs(max_n=6), graphs(max_n=6))
    def test_equal_codes_iff_isomorphic(self, g, h):
        if g.n != h.n:
            return
        same = canonical_code(g) == canonical_code(h)
        assert same == nx.is_isomorphic(to_nx(g), to_nx(h))

    @given(graphs(max_n=6))
    def test_canonical_graph_is_isomorphic(self, g):
        c = canonical_graph(g)
        assert nx.is_isomorphic(to_nx(c), to_nx(g))
        assert canonical_graph(c) == c


class TestEnumeration:
    def test_labeled_count(self):
        assert sum(1 for _ in labeled_graphs(6)) == 32768

    @pytest.mark.parametrize("n", range(1, 8))
    def test_counts_match_atlas(self, n):
        assert len(nonisomorphic_graphs(n)) == atlas_counts()[n]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_brute_force_classes(self, n):
        classes = []
        for g in labeled_graphs(n):
            h = to_nx(g)
            if not any(nx.is_isomorphic(h, c) for c in classes):
                classes.append(h)
        assert len(classes) == len(nonisomorphic_graphs(n))

    def test_limit(self):
        with pytest.raises(ValueError):
            nonisomorphic_graphs(MAX_N + 1)
        with pytest.raises(ValueError):
            list(enumerate_complexes(MAX_N + 1))

    def test_three_vertices(self):
        found = list(enumerate_complexes(3, min_n=3))
        assert len(found) == 4
        pure = list(enumerate_complexes(3, min_n=3, pure=True))
        # points, a two-edge path and the triangle
        assert sorted(len(cx.facets[0]) for cx in pure) == [1, 2, 3]

    def test_four_vertices_contain_delta_a_and_c4(self, delta_a):
        c4 = new_complex(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
        codes = {canonical_code(_skeleton(cx)) for cx in enumerate_complexes(4, min_n=4)}
        assert canonical_code(_skeleton(delta_a)) in codes
        assert canonical_code(_skeleton(c4)) in codes

    def test_filters(self):
        for cx in enumerate_complexes(5, pure=True, core_equals_delta=True, non_ci=True):
            assert is_pure(cx) and core(cx).equals_complex

    def test_non_flag_controls(self):
        flag = list(enumerate_complexes(5, min_n=4))
        both = list(enumerate_complexes(5, min_n=4, flag_only=False))
        assert len(both) > len(flag)
        assert any(cx.facets == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)) for cx in both)

    def test_random_graph_is_seeded(self):
        a = [random_graph(random.Random(7), 6) for _ in range(3)]
        b = [random_graph(random.Random(7), 6) for _ in range(3)]
        assert a == b
