import math

import numpy as np
import pytest
from hypothesis import given

from randic_incidence.graph import (
    Graph,
    GraphError,
    empty_graph,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_path,
    gen_petersen,
    gen_star,
    induced_subgraph,
    line_graph,
    non_isolated_partition,
)
from randic_incidence.spectra import (
    adjacency,
    degree_matrix,
    edge_gram,
    general_randic_incidence,
    incidence,
    line_graph_adjacency,
    normalized_signless_laplacian,
    randic_incidence,
    randic_matrix,
    signless_laplacian,
    sym_eigenvalues,
)

from conftest import graphs

R2 = 1 / math.sqrt(2)


def eig(m):
    return sym_eigenvalues(m).values


def test_small_matrices():
    assert np.array_equal(adjacency(gen_complete(2)), [[0, 1], [1, 0]])
    assert np.array_equal(degree_matrix(gen_complete(2)), np.eye(2))
    assert np.array_equal(adjacency(empty_graph(1)), [[0]])
    assert np.array_equal(degree_matrix(empty_graph(1)), [[0]])
    assert np.array_equal(np.diag(degree_matrix(gen_star(3))), [1, 1, 2])


def test_randic_matrix_examples():
    r = randic_matrix(gen_complete(3))
    assert np.allclose(r, 0.5 * (np.ones((3, 3)) - np.eye(3)))
    r = randic_matrix(gen_path(3))
    assert r[0, 1] == r[1, 2] == pytest.approx(R2) and r[0, 2] == 0


def test_signless_laplacian_examples():
    assert np.array_equal(signless_laplacian(gen_complete(2)), np.ones((2, 2)))
    assert np.allclose(eig(signless_laplacian(gen_complete(2))), [2, 0], atol=1e-12)
    assert np.allclose(eig(signless_laplacian(gen_star(4))), [4, 1, 1, 0], atol=1e-12)
    for n in range(3, 9):
        assert np.allclose(eig(signless_laplacian(gen_complete(n))), [2 * n - 2] + [n - 2] * (n - 1), atol=1e-12)


def test_normalized_signless_laplacian():
    for n in range(2, 10):
        want = [2.0] + [1.0] * (n - 2) + [0.0]
        assert np.allclose(eig(normalized_signless_laplacian(gen_star(n))), want, atol=1e-12)
    for x, y in [(1, 1), (2, 3), (3, 3), (2, 5)]:
        n = x + y
        want = [2.0] + [1.0] * (n - 2) + [0.0]
        assert np.allclose(eig(normalized_signless_laplacian(gen_complete_bipartite(x, y))), want, atol=1e-12)
    with pytest.raises(GraphError):
        normalized_signless_laplacian(Graph(3, ((0, 1),)))


def test_normalized_k4_char_poly():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    m = sympy.eye(4) + sympy.Rational(1, 3) * (sympy.ones(4, 4) - sympy.eye(4))
    roots = sympy.roots(m.charpoly(x).as_expr(), x)
    want = sorted((float(r) for r, k in roots.items() for _ in range(k)), reverse=True)
    assert want == pytest.approx([2, 2 / 3, 2 / 3, 2 / 3])
    assert np.allclose(eig(normalized_signless_laplacian(gen_complete(4))), want, atol=1e-12)


@given(graphs(min_n=1, max_n=10, min_m=1))
def test_normalized_largest_two_and_range(g):
    h = induced_subgraph(g, non_isolated_partition(g).non_isolated)
    mu = eig(normalized_signless_laplacian(h))
    assert mu[0] == pytest.approx(2.0, abs=1e-10)
    assert mu.min() >= -1e-10 and mu.max() <= 2 + 1e-10
    assert np.allclose(mu, 1 + eig(randic_matrix(h)), atol=1e-10)


def test_diag_and_zero():
    assert np.array_equal(eig(np.zeros((3, 3))), [0, 0, 0])
    assert np.allclose(eig(np.diag([5.0, -1.0, 2.0])), [5, 2, -1])


def test_incidence_examples():
    assert np.array_equal(incidence(gen_complete(2)), [[1], [1]])
    assert np.array_equal(incidence(gen_path(3)), [[1, 0], [1, 1], [0, 1]])
    assert np.array_equal(randic_incidence(gen_complete(2)), [[1], [1]])


def test_star_block_form():
    for n in range(2, 9):
        b = randic_incidence(gen_star(n))
        assert np.allclose(b[:-1], np.eye(n - 1))
        assert np.allclose(b[-1], 1 / math.sqrt(n - 1))


def test_general_alpha():
    g = gen_petersen()
    assert np.array_equal(general_randic_incidence(g, -0.5), randic_incidence(g))
    assert np.array_equal(general_randic_incidence(gen_complete(2), 1.0), incidence(gen_complete(2)))
    for alpha in (-2.0, 0.3, 1.0, 2.5):
        assert np.allclose(general_randic_incidence(g, alpha), 3.0 ** alpha * incidence(g))


def test_incidence_gram_is_q(corpus100):
    for g in corpus100:
        i = incidence(g)
        assert np.array_equal(i @ i.T, signless_laplacian(g))


def test_vertex_gram_block(corpus100):
    for g in corpus100:
        b = randic_incidence(g)
        part = non_isolated_partition(g)
        want = np.zeros((g.n, g.n))
        if part.r:
            w = np.asarray(part.non_isolated)
            want[np.ix_(w, w)] = normalized_signless_laplacian(induced_subgraph(g, part.non_isolated))
        assert np.allclose(b @ b.T, want, atol=1e-14)
        assert np.trace(b @ b.T) == pytest.approx(part.r)


def test_edge_gram(corpus100):
    for g in corpus100:
        if g.m == 0:
            assert edge_gram(g).shape == (0, 0)
            continue
        b = randic_incidence(g)
        eg = edge_gram(g)
        assert np.array_equal(eg, eg.T)
        assert np.allclose(eg, b.T @ b, atol=1e-14)
        assert np.allclose(eg.sum(axis=0), 2.0, atol=1e-12)
        if not non_isolated_partition(g).isolated:
            assert np.trace(eg) == pytest.approx(g.n)


@pytest.mark.parametrize("g", [gen_cycle(5), gen_cycle(8), gen_complete(5), gen_petersen()])
def test_regular_edge_gram_identity(g):
    d = g.degrees()[0]
    want = (2 / d) * np.eye(g.m) + line_graph_adjacency(g) / d
    assert np.allclose(edge_gram(g), want, atol=1e-14)
    assert line_graph(g).n == g.m
