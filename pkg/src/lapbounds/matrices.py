"""The four graph matrices and traces of their powers.

Traces of the second and fourth powers come two ways: dense matrix products
(trace_power) and closed forms over degrees and common neighborhoods. The
signless closed forms are the degree-based expressions that the squared
matrix entries dictate; see tr2_signless_closed / tr4_signless_closed.
"""

from __future__ import annotations

import math

import numpy as np

from lapbounds.errors import IsolatedVertexError
from lapbounds.graph import Graph


def _require_positive_degrees(g: Graph) -> None:
    for v, d in enumerate(g.degrees, start=1):
        if d == 0:
            raise IsolatedVertexError(
                f"vertex {v} is isolated; normalized Laplacian needs d_i >= 1"
            )


def adjacency(g: Graph) -> np.ndarray:
    """0/1 adjacency matrix with zero diagonal."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u - 1, v - 1] = 1.0
        a[v - 1, u - 1] = 1.0
    return a


def laplacian(g: Graph) -> np.ndarray:
    """D - A; every row sums to zero."""
    m = -adjacency(g)
    for v in range(g.n):
        m[v, v] = float(g.degrees[v])
    return m


def normalized_laplacian(g: Graph) -> np.ndarray:
    """Unit diagonal, -1/sqrt(d_i d_j) on edges. Requires all degrees >= 1."""
    _require_positive_degrees(g)
    m = np.zeros((g.n, g.n))
    for u, v in g.edges:
        w = -1.0 / math.sqrt(g.degrees[u - 1] * g.degrees[v - 1])
        m[u - 1, v - 1] = w
        m[v - 1, u - 1] = w
    np.fill_diagonal(m, 1.0)
    return m


def signless_laplacian(g: Graph) -> np.ndarray:
    """D + A; positive semidefinite."""
    m = adjacency(g)
    for v in range(g.n):
        m[v, v] = float(g.degrees[v])
    return m


def trace_power(m: np.ndarray, p: int) -> float:
    """tr(M^p) for p in {1, 2, 4} via explicit matrix products."""
    if p == 1:
        return float(np.trace(m))
    m2 = m @ m
    if p == 2:
        return float(np.trace(m2))
    if p == 4:
        return float(np.trace(m2 @ m2))
    raise ValueError(f"p must be 1, 2, or 4, got {p}")


def tr2_normalized_closed(g: Graph) -> float:
    """tr(NL^2) = n + 2 * sum over edges of 1/(d_i d_j)."""
    _require_positive_degrees(g)
    acc = 0.0
    for u, v in g.edges:
        acc += 1.0 / (g.degrees[u - 1] * g.degrees[v - 1])
    return g.n + 2.0 * acc


def tr4_normalized_closed(g: Graph) -> float:
    """tr(NL^4) from the entries of NL^2.

    Diagonal of NL^2 is 1 + sum_{j~i} 1/(d_i d_j); the (i, j) off-diagonal is
    sum_{k in N_i∩N_j} 1/(d_k sqrt(d_i d_j)) minus 2/sqrt(d_i d_j) when i~j.
    """
    _require_positive_degrees(g)
    d = g.degrees
    nbr = g.neighbor_sets
    total = 0.0
    for i in range(g.n):
        diag = 1.0
        for j in sorted(nbr[i]):
            diag += 1.0 / (d[i] * d[j - 1])
        total += diag * diag
    off = 0.0
    for i in range(g.n):
        for j in range(i + 1, g.n):
            root = math.sqrt(d[i] * d[j])
            entry = 0.0
            for k in sorted(nbr[i] & nbr[j]):
                entry += 1.0 / (d[k - 1] * root)
            if (j + 1) in nbr[i]:
                entry -= 2.0 / root
            off += entry * entry
    return total + 2.0 * off


def tr2_signless_closed(g: Graph) -> float:
    """tr(Q^2) = sum_i (d_i^2 + d_i)."""
    acc = 0.0
    for d in g.degrees:
        acc += d * d + d
    return acc


def tr4_signless_closed(g: Graph) -> float:
    """tr(Q^4) from the entries of Q^2.

    Diagonal of Q^2 is d_i^2 + d_i; the (i, j) off-diagonal is
    (d_i + d_j)[i~j] + |N_i ∩ N_j|.
    """
    d = g.degrees
    nbr = g.neighbor_sets
    total = 0.0
    for i in range(g.n):
        diag = float(d[i] * d[i] + d[i])
        total += diag * diag
    off = 0.0
    for i in range(g.n):
        for j in range(i + 1, g.n):
            entry = float(len(nbr[i] & nbr[j]))
            if (j + 1) in nbr[i]:
                entry += d[i] + d[j]
            off += entry * entry
    return total + 2.0 * off
