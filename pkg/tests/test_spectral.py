"""Eigensolver correctness against the Sturm-sequence oracle and closed forms."""

import math
import random

import numpy as np
import pytest

from algconn import (
    Graph,
    algebraic_connectivity,
    diameter,
    diameter_bound,
    eigen_sym,
    enumerate_trees,
    laplacian,
    mu_closed_form,
    mu_value,
)
from algconn.errors import DisconnectedGraphError
from algconn.families import FamilySpec, build_family
from algconn.spectral import SymMatrix

from oracles import sturm_eigenvalues


def fam(fid, *params):
    return build_family(FamilySpec(fid, params))


def random_connected(rng, n, extra=2):
    base = list(range(n))
    rng.shuffle(base)
    edges = []
    for i in range(1, n):
        edges.append((base[i], base[rng.randrange(i)]))
    pool = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (min(u, v), max(u, v)) not in {tuple(sorted(e)) for e in edges}
    ]
    rng.shuffle(pool)
    return Graph(n, edges + pool[: rng.randint(0, min(extra, len(pool)))])


class TestLaplacian:
    def test_complete_is_nI_minus_J(self):
        n = 6
        lap = laplacian(fam("complete", n)).entries
        assert np.array_equal(lap, n * np.eye(n) - np.ones((n, n)))

    def test_edge(self):
        lap = laplacian(fam("path", 2)).entries
        assert np.array_equal(lap, np.array([[1.0, -1.0], [-1.0, 1.0]]))

    def test_row_sums_vanish(self):
        rng = random.Random(11)
        for _ in range(20):
            g = random_connected(rng, rng.randint(2, 9))
            assert np.allclose(laplacian(g).entries.sum(axis=1), 0.0)

    def test_symmetry_forced(self):
        m = SymMatrix.from_array(np.array([[1.0, 5.0], [2.0, 3.0]]))
        assert m.entries[1, 0] == m.entries[0, 1] == 5.0


class TestEigenSym:
    def test_complete_graph_spectrum(self):
        spec = eigen_sym(laplacian(fam("complete", 4)))
        assert np.allclose(spec.eigenvalues, [0.0, 4.0, 4.0, 4.0], atol=1e-12)
        assert spec.mu_multiplicity == 3

    def test_p3_spectrum(self):
        # characteristic polynomial roots worked out by hand: 0, 1, 3
        spec = eigen_sym(laplacian(fam("path", 3)))
        assert np.allclose(spec.eigenvalues, [0.0, 1.0, 3.0], atol=1e-12)

    def test_orthonormal_eigenvectors(self):
        rng = random.Random(5)
        for _ in range(10):
            g = random_connected(rng, rng.randint(3, 10))
            spec = eigen_sym(laplacian(g))
            v = spec.eigenvectors
            assert np.max(np.abs(v.T @ v - np.eye(g.n))) < 1e-10

    def test_residuals(self):
        rng = random.Random(6)
        for _ in range(10):
            g = random_connected(rng, rng.randint(3, 12))
            m = laplacian(g)
            spec = eigen_sym(m)
            resid = m.entries @ spec.eigenvectors - spec.eigenvectors * spec.eigenvalues
            norm = np.linalg.norm(m.entries)
            assert np.max(np.abs(resid)) <= 1e-10 * max(norm, 1.0)

    def test_matches_sturm_oracle(self):
        rng = random.Random(99)
        for _ in range(100):
            g = random_connected(rng, rng.randint(2, 12), extra=4)
            lap = laplacian(g)
            mine = eigen_sym(lap).eigenvalues
            oracle = sturm_eigenvalues(np.array(lap.entries))
            assert np.max(np.abs(mine - np.array(oracle))) < 1e-9

    def test_zero_matrix(self):
        spec = eigen_sym(SymMatrix.from_array(np.zeros((3, 3))))
        assert np.allclose(spec.eigenvalues, 0.0)


class TestAlgebraicConnectivity:
    @pytest.mark.parametrize("n", range(2, 20))
    def test_path_closed_form(self, n):
        mu, _, _ = algebraic_connectivity(fam("path", n))
        assert abs(mu - 2 * (1 - math.cos(math.pi / n))) < 1e-10

    @pytest.mark.parametrize("n", range(3, 20))
    def test_cycle_closed_form(self, n):
        mu, _, _ = algebraic_connectivity(fam("cycle", n))
        assert abs(mu - 2 * (1 - math.cos(2 * math.pi / n))) < 1e-10

    def test_cycle_small_values(self):
        assert abs(mu_value(fam("cycle", 3)) - 3.0) < 1e-10
        assert abs(mu_value(fam("cycle", 4)) - 2.0) < 1e-10

    @pytest.mark.parametrize("n", range(3, 15))
    def test_star_is_one(self, n):
        mu, _, _ = algebraic_connectivity(fam("star", n))
        assert abs(mu - 1.0) < 1e-10

    @pytest.mark.parametrize("n", range(2, 15))
    def test_complete_is_n(self, n):
        mu, mult, _ = algebraic_connectivity(fam("complete", n))
        assert abs(mu - n) < 1e-10
        assert mult == n - 1

    def test_fiedler_sign_convention(self):
        for g in (fam("path", 6), fam("t_kld", 2, 1, 3), fam("cycle", 5)):
            _, _, y = algebraic_connectivity(g)
            nonzero = y[np.abs(y) > 1e-9 * np.max(np.abs(y))]
            assert nonzero[0] > 0
            assert abs(np.linalg.norm(y) - 1.0) < 1e-12

    def test_rejects_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            algebraic_connectivity(Graph(4, [(0, 1), (2, 3)]))

    def test_multiplicity_of_cycle(self):
        _, mult, _ = algebraic_connectivity(fam("cycle", 8))
        assert mult == 2


class TestClosedFormsAndBounds:
    def test_path_formula_value(self):
        got = mu_closed_form(FamilySpec("path", (10,)))
        assert abs(got - 0.0978869674096927) < 1e-12
        assert abs(got - mu_value(fam("path", 10))) < 1e-10

    def test_complete_value(self):
        assert mu_closed_form(FamilySpec("complete", (7,))) == 7.0

    def test_no_closed_form(self):
        assert mu_closed_form(FamilySpec("t_kld", (1, 2, 3))) is None

    def test_diameter_bound_edge_cases(self):
        assert abs(diameter_bound(1) - 2.0) < 1e-15
        n = 9
        assert abs(diameter_bound(n - 1) - mu_value(fam("path", n))) < 1e-10

    def test_diameter_bound_on_all_trees(self):
        for n in range(2, 11):
            for t in enumerate_trees(n):
                assert mu_value(t) <= diameter_bound(diameter(t)) + 1e-12


class TestMonotonicityLemmas:
    def test_pendant_addition_never_raises_mu(self):
        rng = random.Random(42)
        for _ in range(200):
            n = rng.randint(2, 9)
            g = random_connected(rng, n)
            v = rng.randrange(n)
            bigger = Graph(n + 1, list(g.edges) + [(v, n)])
            assert mu_value(bigger) <= mu_value(g) + 1e-9

    def test_edge_addition_never_lowers_mu(self):
        rng = random.Random(43)
        count = 0
        while count < 200:
            n = rng.randint(3, 9)
            g = random_connected(rng, n, extra=4)
            free = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if not g.has_edge(u, v)
            ]
            if not free:
                continue
            u, v = rng.choice(free)
            assert mu_value(g.with_edge(u, v)) >= mu_value(g) - 1e-9
            count += 1
