"""
Text format for polynomials.

    # comment
    vars 3
    1 ; x0^1 x1^1
    -3/2 ; x2^2
    7 ;

One term per line after the `vars <n>` header. A bare `x1` means `x1^1`.
Repeated monomials are summed.
"""

from __future__ import annotations

import re
from fractions import Fraction

from lorentzian.services.poly.monomial import Monomial
from lorentzian.services.poly.polynomial import Polynomial
from lorentzian.utils.errors import FormatError

_re_header = re.compile(r"^\s*vars\s+(\d+)\s*$")
_re_rational = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_re_factor = re.compile(r"x(\d+)(?:\^(\d+))?$")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_rational(text: str, *, line: int = 1, column: int = 1) -> Fraction:
    m = _re_rational.match(text)
    if not m:
        raise FormatError(f"expected a rational like 3 or -2/5, got {text.strip()!r}", line=line, column=column)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise FormatError("zero denominator", line=line, column=column)
    return Fraction(num, den)


def _parse_monomial(text: str, num_vars: int, *, line: int, offset: int) -> Monomial:
    exps: dict[int, int] = {}
    for tok in re.finditer(r"\S+", text):
        column = offset + tok.start() + 1
        m = _re_factor.match(tok.group(0))
        if not m:
            raise FormatError(f"bad factor {tok.group(0)!r}, expected x<i>^<e>", line=line, column=column)
        var = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if var >= num_vars:
            raise FormatError(f"variable x{var} out of range for vars {num_vars}", line=line, column=column)
        if exp == 0:
            continue
        exps[var] = exps.get(var, 0) + exp
    return Monomial.of(exps)


def parse_polynomial(text: str, *, path: str | None = None) -> Polynomial:
    try:
        return _parse(text)
    except FormatError as e:
        if path is not None:
            raise e.with_path(path) from None
        raise


def _parse(text: str) -> Polynomial:
    num_vars: int | None = None
    terms: dict[Monomial, Fraction] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue

        if num_vars is None:
            m = _re_header.match(body)
            if not m:
                col = len(body) - len(body.lstrip()) + 1
                raise FormatError("expected header 'vars <n>'", line=lineno, column=col)
            num_vars = int(m.group(1))
            continue

        if ";" not in body:
            raise FormatError("expected '<rational> ; <monomial>'", line=lineno, column=len(body.rstrip()) + 1)
        coeff_text, mono_text = body.split(";", 1)
        first = len(coeff_text) - len(coeff_text.lstrip()) + 1
        coeff = parse_rational(coeff_text, line=lineno, column=first)
        mono = _parse_monomial(mono_text, num_vars, line=lineno, offset=len(coeff_text) + 1)
        terms[mono] = terms.get(mono, Fraction(0)) + coeff

    if num_vars is None:
        raise FormatError("missing header 'vars <n>'", line=1)
    return Polynomial(num_vars, terms)


def format_polynomial(f: Polynomial) -> str:
    lines = [f"vars {f.num_vars}"]
    for mono, c in f.items():
        lines.append(f"{c} ; {mono}" if mono.powers else f"{c} ;")
    return "\n".join(lines) + "\n"


def read_polynomial(path: str) -> Polynomial:
    with open(path, encoding="utf-8") as fh:
        return parse_polynomial(fh.read(), path=path)


def write_polynomial(f: Polynomial, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_polynomial(f))
