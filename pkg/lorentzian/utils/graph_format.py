"""
Text format for graphs: an `n <count>` header, then one `e i j` line per
edge with 0-indexed endpoints. `#` starts a comment.
"""

from __future__ import annotations

import re

from lorentzian.services.gadgets.graphs import GadgetError, Graph
from lorentzian.utils.errors import FormatError

_re_header = re.compile(r"^\s*n\s+(\d+)\s*$")
_re_edge = re.compile(r"^\s*e\s+(\d+)\s+(\d+)\s*$")


def parse_graph(text: str, *, path: str | None = None) -> Graph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()

    def fail(message: str, line: int, column: int = 1) -> FormatError:
        return FormatError(message, line=line, column=column, path=path)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        col = len(body) - len(body.lstrip()) + 1

        if n is None:
            m = _re_header.match(body)
            if not m:
                raise fail("expected header 'n <count>'", lineno, col)
            n = int(m.group(1))
            continue

        m = _re_edge.match(body)
        if not m:
            raise fail("expected edge line 'e <i> <j>'", lineno, col)
        i, j = int(m.group(1)), int(m.group(2))
        if i == j:
            raise fail(f"self-loop at vertex {i}", lineno, m.start(2) + 1)
        for idx, v in ((1, i), (2, j)):
            if v >= n:
                raise fail(f"vertex {v} out of range for n {n}", lineno, m.start(idx) + 1)
        key = (min(i, j), max(i, j))
        if key in seen:
            raise fail(f"duplicate edge {key[0]}-{key[1]}", lineno, col)
        seen.add(key)
        edges.append(key)

    if n is None:
        raise fail("missing header 'n <count>'", 1)
    try:
        return Graph.from_edges(n, edges)
    except GadgetError as e:
        raise fail(str(e), 1) from None


def format_graph(graph: Graph) -> str:
    lines = [f"n {graph.n}"]
    lines.extend(f"e {i} {j}" for i, j in graph.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read(), path=path)
