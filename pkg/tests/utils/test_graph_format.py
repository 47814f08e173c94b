import pytest

from lorentzian.services.gadgets.graphs import Graph
from lorentzian.utils.errors import FormatError
from lorentzian.utils.graph_format import format_graph, parse_graph, read_graph


def test_parse_graph():
    g = parse_graph("# triangle\nn 3\ne 0 1\ne 2 1  # reversed\ne 0 2\n")

    assert g.n == 3
    assert g.num_edges == 3
    assert g.has_edge(1, 2)


def test_fixture_files(fixtures_dir, p3, k3):
    assert read_graph(str(fixtures_dir / "p3.graph")).edges == p3.edges
    assert read_graph(str(fixtures_dir / "k3.graph")).edges == k3.edges


def test_format_round_trip(petersen):
    assert parse_graph(format_graph(petersen)).edges == petersen.edges


def test_isolated_vertices():
    g = parse_graph("n 4\n")

    assert g.n == 4
    assert g.num_edges == 0


@pytest.mark.parametrize(
    "text, line, column, fragment",
    [
        ("e 0 1\n", 1, 1, "header"),
        ("n 3\ne 1 1\n", 2, 5, "self-loop"),
        ("n 3\ne 0 5\n", 2, 5, "out of range"),
        ("n 3\ne 7 0\n", 2, 3, "out of range"),
        ("n 3\ne 0 1\ne 1 0\n", 3, 1, "duplicate"),
        ("n 3\n  edge 0 1\n", 2, 3, "edge line"),
        ("", 1, 1, "missing header"),
    ],
)
def test_errors(text, line, column, fragment):
    with pytest.raises(FormatError) as exc:
        parse_graph(text, path="g.graph")

    assert exc.value.line == line
    assert exc.value.column == column
    assert fragment in exc.value.message
    assert str(exc.value).startswith(f"g.graph:{line}:{column}: ")


def test_graph_constructors_agree_with_text():
    assert Graph.complete(3).edges == parse_graph("n 3\ne 0 1\ne 0 2\ne 1 2\n").edges
