from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import networkx as nx


class GadgetError(ValueError):
    """Raised when a graph or reduction parameter is invalid."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1; edges stored as sorted (i, j), i < j."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GadgetError(f"vertex count must be >= 0, got {n}")
        seen: set[tuple[int, int]] = set()
        for i, j in edges:
            if i == j:
                raise GadgetError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise GadgetError(f"edge ({i}, {j}) has an endpoint outside 0..{n - 1}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise GadgetError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n=n, edges=tuple(sorted(seen)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        mapping = {v: i for i, v in enumerate(sorted(graph.nodes))}
        return cls.from_edges(
            graph.number_of_nodes(), [(mapping[u], mapping[v]) for u, v in graph.edges]
        )

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in set(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = sorted(set(vertices))
        edges = set(self.edges)
        return all((a, b) in edges for x, a in enumerate(vs) for b in vs[x + 1:])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph
