from __future__ import annotations

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from helpers import digraphs, graphs
from lconn.families import family_digraph, family_edge
from lconn.graph import (
    Digraph,
    complete_digraph,
    complete_graph,
    directed_cycle,
    disjoint_union,
    encode,
    is_isomorphic,
    path_graph,
    star_graph,
)
from lconn.spectral import perron_vector
from lconn.verify.lemmas import (
    HypothesisError,
    check_lemma,
    in_k_class,
    k_class,
    minimum_cuts,
    valid_l23_tuples,
)


class TestRotation:
    def test_path_pendant_toward_interior(self):
        # P4 = 0-1-2-3: move the edge 1-0 over to 2, the equal-weight interior vertex
        r = check_lemma("L2.2", {"graph": encode(path_graph(4)), "u": 2, "v": 1})
        assert r.holds
        assert r.witness["rho_after"] > r.witness["rho_before"] + 1e-9

    def test_rejects_lighter_u(self):
        # in a star the centre outweighs the leaves
        with pytest.raises(HypothesisError, match="Perron weight"):
            check_lemma("L2.2", {"graph": star_graph(3), "u": 1, "v": 0, "moved": [2]})

    def test_rejects_empty_move(self):
        with pytest.raises(HypothesisError):
            check_lemma("L2.2", {"graph": complete_graph(4), "u": 0, "v": 1})

    def test_rejects_disconnected(self):
        g = disjoint_union(path_graph(3), complete_graph(1))
        with pytest.raises(HypothesisError, match="connected"):
            check_lemma("L2.2", {"graph": g, "u": 1, "v": 0})

    @given(graphs(min_n=3, max_n=8, connected=True), st.data())
    def test_property(self, g, data):
        x = perron_vector(g)
        pairs = [(u, v) for u in range(g.n) for v in range(g.n)
                 if u != v and x[u] >= x[v] and set(g.neighbors(v)) - set(g.neighbors(u)) - {u}]
        assume(pairs)
        u, v = data.draw(st.sampled_from(pairs))
        allowed = sorted(set(g.neighbors(v)) - set(g.neighbors(u)) - {u})
        moved = data.draw(st.lists(st.sampled_from(allowed), min_size=1, unique=True))
        assert check_lemma("L2.2", {"graph": g, "u": u, "v": v, "moved": moved}).holds


class TestRebalancing:
    def test_all_small_tuples(self):
        tuples = valid_l23_tuples(3, 3, 2, 9)
        assert tuples
        for s, parts, p in tuples:
            assert check_lemma("L2.3", {"s": s, "parts": list(parts), "p": p}).holds

    def test_hypotheses(self):
        with pytest.raises(HypothesisError, match="below"):
            check_lemma("L2.3", {"s": 1, "parts": [4, 1], "p": 1})
        with pytest.raises(HypothesisError, match="nonincreasing"):
            check_lemma("L2.3", {"s": 1, "parts": [1, 3], "p": 1})


class TestDigraphLemmas:
    def test_cut_ordering_example(self):
        d = family_digraph(1, [2, 1, 1]).graph
        r = check_lemma("L3.2", {"digraph": encode(d)})
        assert r.holds and r.witness["connectivity"] == 1

    @given(digraphs(min_n=3, max_n=5, strong=True))
    def test_cut_ordering_property(self, d):
        assume(d.m < d.n * (d.n - 1))
        for cut in minimum_cuts(d):
            verts = [v for v in range(d.n) if cut >> v & 1]
            assert check_lemma("L3.2", {"digraph": d, "cut": verts}).holds

    def test_complete_digraph_has_no_cut(self):
        with pytest.raises(HypothesisError):
            check_lemma("L3.2", {"digraph": complete_digraph(3)})

    def test_subgraph_example(self):
        d = family_digraph(1, [1, 1]).graph
        r = check_lemma("L3.3", {"digraph": d, "remove_arcs": [[1, 2]]})
        assert r.holds
        assert r.witness["rho"] == pytest.approx((1 + 5 ** 0.5) / 2, abs=1e-10)

    def test_vertex_deletion(self):
        r = check_lemma("L3.3", {"digraph": complete_digraph(4), "remove_vertices": [3]})
        assert r.holds and r.witness["rho_subgraph"] == pytest.approx(2.0)

    def test_subgraph_hypotheses(self):
        with pytest.raises(HypothesisError, match="strongly connected"):
            check_lemma("L3.3", {"digraph": Digraph.from_arcs(2, [(0, 1)]), "remove_arcs": [[0, 1]]})
        with pytest.raises(HypothesisError, match="proper subgraph"):
            check_lemma("L3.3", {"digraph": directed_cycle(3)})
        with pytest.raises(HypothesisError, match="arcs of"):
            check_lemma("L3.3", {"digraph": directed_cycle(3), "remove_arcs": [[1, 0]]})

    def test_shift(self):
        r = check_lemma("L3.4", {"k": 1, "parts": [2, 2], "p": 0, "q": 1})
        assert r.holds and r.witness["shifted"] == [1, 3]

    def test_shift_hypotheses(self):
        with pytest.raises(HypothesisError):
            check_lemma("L3.4", {"k": 1, "parts": [3, 2], "p": 0, "q": 1})
        with pytest.raises(HypothesisError):
            check_lemma("L3.4", {"k": 1, "parts": [1, 2], "p": 0, "q": 1})


class TestEdgeLemmas:
    def test_hong_needs_no_isolated_vertices(self):
        g = disjoint_union(complete_graph(3), disjoint_union(complete_graph(1), complete_graph(1)))
        with pytest.raises(HypothesisError):
            check_lemma("L4.1", {"graph": g})

    @given(graphs(min_n=2, max_n=8, connected=True))
    def test_hong_property(self, g):
        assert check_lemma("L4.1", {"graph": g}).holds

    def test_class_sizes(self):
        # frozen from the enumeration; (8,3,3) has two classes: the degree-2
        # vertex's neighbourhood contains the pendant's neighbour or not
        assert len(k_class(8, 3, 3)) == 2
        assert len(k_class(8, 1, 2)) == 1
        assert all(in_k_class(g, 2, 3) for g in k_class(8, 2, 3))

    def test_bracket_members(self):
        for k in (1, 2, 3):
            for p in range(2, k + 2):
                for g in k_class(8, k, p):
                    r = check_lemma("L4.2", {"graph": encode(g), "k": k, "p": p})
                    assert r.holds, r.witness

    def test_bracket_membership_checked(self):
        with pytest.raises(HypothesisError, match="not in the class"):
            check_lemma("L4.2", {"graph": path_graph(8), "k": 2, "p": 2})
        with pytest.raises(HypothesisError, match="2k"):
            check_lemma("L4.2", {"graph": path_graph(8), "k": 4, "p": 2})

    def test_argmax(self):
        r = check_lemma("L4.3", {"n": 8, "k": 3, "p": 3})
        assert r.holds and r.witness["class_size"] == 2
        g = family_edge(8, 3, 3).graph
        assert is_isomorphic(g, k_class(8, 3, 3)[0]) or is_isomorphic(g, k_class(8, 3, 3)[1])

    def test_single_member(self):
        for g in k_class(8, 3, 2):
            assert check_lemma("L4.3", {"graph": g, "k": 3, "p": 2}).holds

    def test_binomial(self):
        assert check_lemma("L4.4", {"a": 3, "b": 3}).witness == {"left": 6, "right": 7}
        with pytest.raises(HypothesisError):
            check_lemma("L4.4", {"a": 2, "b": 3})

    def test_unknown_and_missing(self):
        with pytest.raises(ValueError):
            check_lemma("L9.9", {})
        with pytest.raises(HypothesisError, match="needs"):
            check_lemma("L4.4", {"a": 2})
        with pytest.raises(HypothesisError):
            check_lemma("L2.2", {"u": 0, "v": 1})


def test_lemma_results_never_false_on_random_rotations():
    rng = np.random.default_rng(5)
    from helpers import random_connected_graph

    for _ in range(20):
        g = random_connected_graph(rng, int(rng.integers(4, 9)), 0.4)
        x = perron_vector(g)
        for u in range(g.n):
            for v in range(g.n):
                allowed = set(g.neighbors(v)) - set(g.neighbors(u)) - {u}
                if u != v and x[u] >= x[v] and allowed:
                    assert check_lemma("L2.2", {"graph": g, "u": u, "v": v}).holds
