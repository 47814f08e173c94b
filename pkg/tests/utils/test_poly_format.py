from fractions import Fraction

import pytest

from lorentzian.services.gadgets.graphs import Graph
from lorentzian.services.gadgets.stability import build_stability_gadget
from lorentzian.utils.errors import FormatError
from lorentzian.utils.poly_format import (
    format_polynomial,
    parse_polynomial,
    parse_rational,
    read_polynomial,
    write_polynomial,
)


def test_parse_basic(poly):
    text = """
    # header comment
    vars 3
    1 ; x0^1 x1^1   # trailing comment
    -3/2 ; x2^2
    7 ;
    """
    f = parse_polynomial(text)

    assert f == poly(3, {(0, 1): 1, (2, 2): Fraction(-3, 2), (): 7})


def test_bare_variable_and_summing(poly):
    f = parse_polynomial("vars 2\n1 ; x1\n2 ; x1^1\n1/2 ; x0 x0\n")

    assert f == poly(2, {(1,): 3, (0, 0): Fraction(1, 2)})


def test_cancelling_terms_vanish():
    f = parse_polynomial("vars 1\n1 ; x0\n-1 ; x0\n")

    assert f.is_zero()
    assert f.num_vars == 1


def test_parse_rational():
    assert parse_rational("-2/5") == Fraction(-2, 5)
    assert parse_rational(" 12 ") == 12

    with pytest.raises(FormatError):
        parse_rational("1/0")
    with pytest.raises(FormatError):
        parse_rational("0.5")


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("", 1, 1),
        ("  vars x\n", 1, 3),
        ("vars 2\n1 x0\n", 2, 5),
        ("vars 2\n\n1 ; x2\n", 3, 5),
        ("vars 2\n1 ; y0\n", 2, 5),
        ("vars 2\nabc ; x0\n", 2, 1),
    ],
)
def test_errors_carry_location(text, line, column):
    with pytest.raises(FormatError) as exc:
        parse_polynomial(text)

    assert exc.value.line == line
    assert exc.value.column == column
    assert str(exc.value).startswith(f"{line}:{column}: ")


def test_error_names_the_file(fixtures_dir):
    path = str(fixtures_dir / "bad-term.poly")

    with pytest.raises(FormatError) as exc:
        read_polynomial(path)

    assert exc.value.path == path
    assert str(exc.value).startswith(f"{path}:3:1: ")


def test_fixture_files(fixtures_dir, elementary):
    assert read_polynomial(str(fixtures_dir / "elementary-e2-n3.poly")) == elementary(2, 3)


def test_gadget_survives_a_file_round_trip(tmp_path):
    p = build_stability_gadget(Graph.path(3), 2).p
    path = str(tmp_path / "p.poly")

    write_polynomial(p, path)

    assert read_polynomial(path) == p
    assert format_polynomial(p).startswith("vars 6\n")
