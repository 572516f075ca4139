"""Text formats for polynomials.

Dense form lists coefficients ascending by degree: ``"10 8 -3 -5 0 2"`` is
``10 + 8x - 3x^2 - 5x^3 + 2x^5``. Expression form is a sum of ``c*x^k``
terms, e.g. ``"x^2 - 3x + 2"`` or ``"1/2 x^2 + 1/2 x^2"``. Coefficients are
integers or ``p/q``; decimals are rejected.
"""

import re
from fractions import Fraction

from signvar.errors import ParseError
from signvar.poly import Polynomial

__all__ = ["parse_rational", "parse_polynomial", "parse_sequence", "format_expr", "format_dense"]

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")
_DECIMAL = re.compile(r"\d*\.\d|\d[eE][+-]?\d")


def parse_rational(text):
    """``"3"``, ``"-7/2"`` -> Fraction; decimals and zero denominators are errors."""
    s = text.strip()
    if _DECIMAL.search(s):
        raise ParseError(f"decimal literal {s!r} is not allowed; write p/q", 0, text)
    if not _RATIONAL.fullmatch(s):
        raise ParseError(f"malformed rational {s!r}", 0, text)
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {s!r}", 0, text) from None


def parse_sequence(text):
    """Whitespace- or comma-separated rationals."""
    out = []
    for m in re.finditer(r"[^\s,]+", text):
        try:
            out.append(parse_rational(m.group()))
        except ParseError as exc:
            raise ParseError(str(exc).split(" at position")[0], m.start(), text) from None
    return out


def _parse_dense(text):
    cs = parse_sequence(text)
    if not cs:
        raise ParseError("empty polynomial", 0, text)
    return Polynomial(cs)


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<x>x)
  | (?P<pow>\^|\*\*)
  | (?P<star>\*)
  | (?P<sign>[+-])
    """,
    re.VERBOSE,
)


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        if _DECIMAL.match(text, pos):
            raise ParseError("decimal literal is not allowed; write p/q", pos, text)
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    return tokens


def _parse_expr(text):
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial", 0, text)
    terms = {}
    i = 0
    n = len(tokens)

    def peek(kind):
        return i < n and tokens[i][0] == kind

    first = True
    while i < n:
        sign = 1
        start = tokens[i][2]
        if peek("sign"):
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-' between terms", tokens[i][2], text)
        first = False
        if i >= n:
            raise ParseError("dangling sign", start, text)
        coeff = None
        if peek("num"):
            try:
                coeff = Fraction(tokens[i][1])
            except ZeroDivisionError:
                raise ParseError("zero denominator", tokens[i][2], text) from None
            i += 1
            if peek("star"):
                i += 1
                if not peek("x"):
                    pos = tokens[i][2] if i < n else len(text)
                    raise ParseError("expected 'x' after '*'", pos, text)
        power = 0
        if peek("x"):
            i += 1
            power = 1
            if peek("pow"):
                i += 1
                if not peek("num") or "/" in tokens[i][1]:
                    pos = tokens[i][2] if i < n else len(text)
                    raise ParseError("exponent must be a nonnegative integer", pos, text)
                power = int(tokens[i][1])
                i += 1
        elif coeff is None:
            pos = tokens[i][2] if i < n else len(text)
            raise ParseError("expected a coefficient or 'x'", pos, text)
        value = sign * (coeff if coeff is not None else 1)
        terms[power] = terms.get(power, 0) + value
    if not terms:
        raise ParseError("empty polynomial", 0, text)
    cs = [Fraction(0)] * (max(terms) + 1)
    for k, v in terms.items():
        cs[k] = Fraction(v)
    return Polynomial(cs)


def parse_polynomial(text, fmt="expr"):
    """Parse ``text`` in ``"dense"``, ``"expr"`` or ``"auto"`` format.

    ``auto`` picks expression form when the text mentions ``x``.
    """
    if fmt == "auto":
        fmt = "expr" if "x" in text else "dense"
    if fmt == "dense":
        return _parse_dense(text)
    if fmt == "expr":
        return _parse_expr(text)
    raise ValueError(f"unknown polynomial format {fmt!r}")


def _fmt_coeff(c):
    return str(c)


def format_expr(f):
    """Descending-degree expression that :func:`parse_polynomial` reads back."""
    if f.is_zero():
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = _fmt_coeff(a)
        else:
            mono = "x" if k == 1 else f"x^{k}"
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        parts.append((sign, body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_dense(f):
    if f.is_zero():
        return "0"
    return " ".join(str(c) for c in f.coeffs)
