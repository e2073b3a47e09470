import math

import numpy as np
import pytest

from lapbounds import (
    IsolatedVertexError,
    adjacency,
    generate_connected_gnp,
    laplacian,
    normalized_laplacian,
    parse_edge_list,
    signless_laplacian,
    trace_power,
    tr2_normalized_closed,
    tr2_signless_closed,
    tr4_normalized_closed,
    tr4_signless_closed,
)
from tests.conftest import complete_graph

K2 = parse_edge_list("1 2")
K3 = complete_graph(3)
P3 = parse_edge_list("1 2\n2 3")


def test_adjacency():
    assert np.array_equal(adjacency(K2), [[0, 1], [1, 0]])
    a3 = adjacency(K3)
    assert np.array_equal(a3, np.ones((3, 3)) - np.eye(3))


def test_adjacency_example1(example1):
    assert adjacency(example1).sum() == 18


def test_laplacian():
    assert np.array_equal(laplacian(K2), [[1, -1], [-1, 1]])
    assert np.array_equal(np.diag(laplacian(P3)), [1, 2, 1])
    assert np.allclose(laplacian(P3).sum(axis=1), 0.0)


def test_normalized_laplacian():
    assert np.allclose(normalized_laplacian(K2), [[1, -1], [-1, 1]])
    nl3 = normalized_laplacian(K3)
    assert np.allclose(np.diag(nl3), 1.0)
    assert nl3[0, 1] == pytest.approx(-0.5)


def test_normalized_laplacian_example1_entry(example1):
    nl = normalized_laplacian(example1)
    assert nl[0, 1] == pytest.approx(-1 / math.sqrt(8))


def test_normalized_laplacian_isolated_vertex():
    g = parse_edge_list("n=3\n1 2")
    with pytest.raises(IsolatedVertexError, match="vertex 3"):
        normalized_laplacian(g)


def test_signless_laplacian():
    assert np.array_equal(signless_laplacian(K3), [[2, 1, 1], [1, 2, 1], [1, 1, 2]])
    assert np.array_equal(signless_laplacian(K2), [[1, 1], [1, 1]])


def test_signless_diagonal_example2(example2):
    assert np.array_equal(np.diag(signless_laplacian(example2)), [6, 2, 3, 3, 3, 2, 1])


def test_trace_power_known_values():
    assert trace_power(normalized_laplacian(K2), 2) == pytest.approx(4.0)
    q3 = signless_laplacian(K3)
    assert trace_power(q3, 2) == pytest.approx(18.0)
    assert trace_power(q3, 4) == pytest.approx(258.0)
    with pytest.raises(ValueError):
        trace_power(q3, 3)


class TestClosedForms:
    def test_tr2_normalized(self, example1):
        assert tr2_normalized_closed(K2) == pytest.approx(4.0)
        assert tr2_normalized_closed(K3) == pytest.approx(4.5)
        assert tr2_normalized_closed(example1) == pytest.approx(71 / 9)

    def test_tr4_normalized(self, example1):
        assert tr4_normalized_closed(K2) == pytest.approx(16.0)
        assert tr4_normalized_closed(K3) == pytest.approx(
            trace_power(normalized_laplacian(K3), 4), abs=1e-12
        )
        assert tr4_normalized_closed(example1) == pytest.approx(
            trace_power(normalized_laplacian(example1), 4), rel=1e-9
        )

    def test_tr2_signless(self, example2):
        assert tr2_signless_closed(K3) == pytest.approx(18.0)
        assert tr2_signless_closed(K2) == pytest.approx(4.0)
        assert tr2_signless_closed(example2) == pytest.approx(92.0)

    def test_tr4_signless(self, example2):
        assert tr4_signless_closed(K3) == pytest.approx(258.0)
        assert tr4_signless_closed(K2) == pytest.approx(16.0)
        assert tr4_signless_closed(example2) == pytest.approx(
            trace_power(signless_laplacian(example2), 4), rel=1e-9
        )

    def test_isolated_vertex_rejected(self):
        g = parse_edge_list("n=3\n1 2")
        with pytest.raises(IsolatedVertexError):
            tr2_normalized_closed(g)
        with pytest.raises(IsolatedVertexError):
            tr4_normalized_closed(g)


def _random_graphs(count, seed0=1000):
    return [
        generate_connected_gnp(4 + seed % 9, 0.5, seed) for seed in range(seed0, seed0 + count)
    ]


@pytest.mark.parametrize("g", _random_graphs(100), ids=lambda g: f"n{g.n}e{g.edge_count}")
def test_closed_forms_match_matrix_powers(g):
    nl = normalized_laplacian(g)
    q = signless_laplacian(g)
    assert tr2_normalized_closed(g) == pytest.approx(trace_power(nl, 2), rel=1e-9)
    assert tr4_normalized_closed(g) == pytest.approx(trace_power(nl, 4), rel=1e-9)
    assert tr2_signless_closed(g) == pytest.approx(trace_power(q, 2), rel=1e-9)
    assert tr4_signless_closed(g) == pytest.approx(trace_power(q, 4), rel=1e-9)


@pytest.mark.parametrize("g", _random_graphs(20, seed0=2000), ids=lambda g: f"n{g.n}")
def test_structural_identities(g):
    lap = laplacian(g)
    nl = normalized_laplacian(g)
    d_half = np.diag(np.sqrt(g.degrees))
    assert np.max(np.abs(d_half @ nl @ d_half - lap)) <= 1e-12
    assert np.max(np.abs(lap.sum(axis=1))) <= 1e-12
    assert trace_power(adjacency(g), 1) == 0.0
    assert trace_power(signless_laplacian(g), 1) == pytest.approx(sum(g.degrees))
    assert trace_power(nl, 1) == pytest.approx(g.n)
