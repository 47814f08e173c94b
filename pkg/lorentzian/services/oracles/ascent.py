"""Floating projected-gradient ascent of q_G on the unit sphere (spot checks only)."""

from __future__ import annotations

import logging

import networkx as nx
import numpy as np

from lorentzian.services.gadgets.graphs import Graph

logger = logging.getLogger(__name__)


def _q_and_grad(x: np.ndarray, edges: np.ndarray, n: int) -> tuple[float, np.ndarray]:
    xi, xj = x[edges[:, 0]], x[edges[:, 1]]
    y = x[n:]
    grad = np.zeros_like(x)
    np.add.at(grad, edges[:, 0], xj * y)
    np.add.at(grad, edges[:, 1], xi * y)
    grad[n:] = xi * xj
    return float(np.sum(xi * xj * y)), grad


def _ascend(start: np.ndarray, edges: np.ndarray, n: int, iterations: int, step: float) -> float:
    x = start / np.linalg.norm(start)
    best, _ = _q_and_grad(x, edges, n)
    for _ in range(iterations):
        _, grad = _q_and_grad(x, edges, n)
        x = x + step * grad
        x = x / np.linalg.norm(x)
        value, _ = _q_and_grad(x, edges, n)
        best = max(best, value)
    return best


def sphere_ascent(
    graph: Graph,
    *,
    restarts: int = 20,
    iterations: int = 2000,
    step: float = 0.2,
    seed: int = 0,
    clique_starts: bool = True,
) -> float:
    """
    Best value of q_G found on the unit sphere.

    Starts from random nonnegative points and, with clique_starts, from the
    support indicator of every maximal clique.
    """
    if not graph.edges:
        return 0.0
    n = graph.n
    edges = np.array(graph.edges, dtype=int)
    size = n + graph.num_edges
    rng = np.random.default_rng(seed)

    starts = [rng.random(size) + 1e-3 for _ in range(restarts)]
    if clique_starts:
        edge_index = {e: n + i for i, e in enumerate(graph.edges)}
        for clique in nx.find_cliques(graph.to_networkx()):
            start = np.zeros(size)
            start[list(clique)] = 1.0
            for a in clique:
                for b in clique:
                    if a < b:
                        start[edge_index[(a, b)]] = 1.0
            starts.append(start)

    best = max(_ascend(s, edges, n, iterations, step) for s in starts)
    logger.debug("sphere ascent n=%d: best %.6f over %d starts", n, best, len(starts))
    return best
