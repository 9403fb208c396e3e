from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given

from helpers import digraphs, graphs, random_graph
from lconn.graph import (
    Digraph,
    complete_bipartite,
    complete_digraph,
    complete_graph,
    cycle_graph,
    directed_cycle,
    disjoint_union,
    path_graph,
    petersen_graph,
    star_graph,
)
from lconn.spectral import (
    adjacency_spectrum,
    digraph_spectral_radius,
    hong_bound,
    jacobi_eigh,
    laplacian_spectrum,
    nonnegative_spectral_radius,
    perron_root,
    perron_vector,
    second_largest_abs,
    spectral_radii,
    spectral_radius,
    symmetric_spectrum,
)


class TestJacobi:
    def test_matches_numpy_on_random_symmetric(self):
        rng = np.random.default_rng(7)
        stack = rng.normal(size=(50, 9, 9))
        stack = stack + stack.transpose(0, 2, 1)
        ours = jacobi_eigh(stack)
        ref = np.linalg.eigvalsh(stack)
        assert np.max(np.abs(ours - ref)) < 1e-10

    def test_vectors_diagonalize(self):
        rng = np.random.default_rng(3)
        a = rng.normal(size=(7, 7))
        a = a + a.T
        w, v = jacobi_eigh(a, vectors=True)
        assert np.allclose(a @ v, v * w, atol=1e-10)
        assert np.allclose(v.T @ v, np.eye(7), atol=1e-12)

    def test_one_by_one(self):
        assert jacobi_eigh(np.array([[2.5]]))[0] == 2.5


class TestClosedForms:
    @pytest.mark.parametrize("n", [2, 3, 6, 9])
    def test_complete(self, n):
        assert spectral_radius(complete_graph(n)) == pytest.approx(n - 1, abs=1e-12)

    @pytest.mark.parametrize("n", [3, 5, 8])
    def test_cycle(self, n):
        assert spectral_radius(cycle_graph(n)) == pytest.approx(2.0, abs=1e-12)

    @pytest.mark.parametrize("n", [2, 4, 7])
    def test_path(self, n):
        assert spectral_radius(path_graph(n)) == pytest.approx(2 * math.cos(math.pi / (n + 1)), abs=1e-12)

    def test_star_and_bipartite(self):
        assert spectral_radius(star_graph(4)) == pytest.approx(2.0, abs=1e-12)
        assert spectral_radius(complete_bipartite(2, 3)) == pytest.approx(math.sqrt(6), abs=1e-12)

    def test_petersen(self):
        eigs = adjacency_spectrum(petersen_graph())
        assert np.allclose(eigs, [3] + [1] * 5 + [-2] * 4, atol=1e-10)
        assert second_largest_abs(petersen_graph()) == pytest.approx(2.0, abs=1e-10)

    def test_laplacian_of_complete(self):
        assert np.allclose(laplacian_spectrum(complete_graph(4)), [0, 4, 4, 4], atol=1e-12)

    def test_disconnected_takes_largest_component(self):
        assert spectral_radius(disjoint_union(complete_graph(4), path_graph(2))) == pytest.approx(3.0)


class TestSummary:
    def test_k2(self):
        s = symmetric_spectrum(complete_graph(2))
        assert s.rho == pytest.approx(1.0)
        assert s.perron == pytest.approx((2 ** -0.5, 2 ** -0.5))

    def test_disconnected_has_no_perron(self):
        assert symmetric_spectrum(disjoint_union(complete_graph(2), complete_graph(2))).perron is None

    def test_single_vertex(self):
        assert symmetric_spectrum(complete_graph(1)).lambda_abs is None

    @given(graphs(min_n=2, max_n=8, connected=True))
    def test_perron_vector_positive_eigenvector(self, g):
        x = perron_vector(g)
        a = g.adjacency_matrix()
        rho = spectral_radius(g)
        assert np.all(x > 0)
        assert np.allclose(a @ x, rho * x, atol=1e-9)

    def test_perron_vector_needs_connected(self):
        with pytest.raises(ValueError):
            perron_vector(disjoint_union(complete_graph(2), complete_graph(1)))


def test_batched_radii_match_single():
    rng = np.random.default_rng(11)
    gs = [random_graph(rng, int(n)) for n in rng.integers(1, 9, size=40)]
    assert np.allclose(spectral_radii(gs), [spectral_radius(g) for g in gs], atol=1e-12)


class TestHong:
    @given(graphs(min_n=1, max_n=8, connected=True))
    def test_bound_on_connected(self, g):
        assert spectral_radius(g) <= hong_bound(g.n, g.m) + 1e-9

    def test_equality_for_complete(self):
        assert hong_bound(5, 10) == pytest.approx(4.0)

    def test_negative_radicand(self):
        with pytest.raises(ValueError):
            hong_bound(5, 1)


class TestDigraph:
    @given(digraphs(min_n=2, max_n=6, strong=True))
    def test_power_iteration_matches_numpy(self, d):
        ref = max(abs(np.linalg.eigvals(d.adjacency_matrix().astype(float))))
        assert digraph_spectral_radius(d) == pytest.approx(ref, abs=1e-9)

    def test_periodic_cycle(self):
        assert digraph_spectral_radius(directed_cycle(5)) == pytest.approx(1.0, abs=1e-12)

    def test_complete(self):
        assert digraph_spectral_radius(complete_digraph(4)) == pytest.approx(3.0, abs=1e-12)

    def test_perron_root_vector(self):
        a = complete_digraph(3).adjacency_matrix()
        rho, x = perron_root(a)
        assert np.allclose(a @ x, rho * x, atol=1e-9)

    def test_requires_strong(self):
        with pytest.raises(ValueError):
            digraph_spectral_radius(Digraph.from_arcs(2, [(0, 1)]))

    @given(digraphs(min_n=1, max_n=6))
    def test_general_radius_matches_numpy(self, d):
        a = d.adjacency_matrix()
        if not np.linalg.matrix_power(a, d.n).any():
            ref = 0.0  # acyclic; numpy is inaccurate on nilpotent matrices
        else:
            ref = max(abs(np.linalg.eigvals(a.astype(float))))
        assert nonnegative_spectral_radius(d) == pytest.approx(ref, abs=1e-7)
