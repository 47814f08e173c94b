"""
Exact maximum clique by branch and bound with greedy-coloring bounds.

Vertex sets are int bitmasks; a candidate set whose color count cannot beat
the incumbent is pruned.
"""

from __future__ import annotations

import logging

from lorentzian import config
from lorentzian.services.gadgets.graphs import Graph

logger = logging.getLogger(__name__)


class OracleError(ValueError):
    """Raised when an oracle input exceeds its limits or violates preconditions."""


def _color_order(candidates: int, adj: list[int]) -> list[tuple[int, int]]:
    """(vertex, color bound) pairs, ascending by color."""
    order: list[tuple[int, int]] = []
    uncolored = candidates
    color = 0
    while uncolored:
        color += 1
        available = uncolored
        while available:
            v = (available & -available).bit_length() - 1
            available &= ~(1 << v)
            available &= ~adj[v]
            uncolored &= ~(1 << v)
            order.append((v, color))
    return order


def max_clique(graph: Graph, *, limit: int | None = None) -> list[int]:
    """A maximum clique as a sorted vertex list (empty for the empty graph)."""
    limit = config.CLIQUE_LIMIT if limit is None else limit
    if graph.n > limit:
        raise OracleError(f"clique oracle limited to n <= {limit}, got {graph.n}")
    if graph.n == 0:
        return []

    adj = [0] * graph.n
    for i, j in graph.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i

    best: list[int] = [0]
    nodes = 0

    def expand(clique: list[int], candidates: int) -> None:
        nonlocal best, nodes
        nodes += 1
        order = _color_order(candidates, adj)
        while order:
            v, bound = order.pop()
            if len(clique) + bound <= len(best):
                return
            grown = clique + [v]
            rest = candidates & adj[v]
            if rest:
                expand(grown, rest)
            elif len(grown) > len(best):
                best = grown
            candidates &= ~(1 << v)

    expand([], (1 << graph.n) - 1)
    logger.debug("max clique n=%d: size %d after %d nodes", graph.n, len(best), nodes)
    return sorted(best)


def clique_number(graph: Graph, *, limit: int | None = None) -> int:
    return len(max_clique(graph, limit=limit))
