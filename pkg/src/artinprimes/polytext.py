"""Polynomial text: ``326x^2+3``, ``x^3-2x+5``.

Grammar (whitespace ignored)::

    poly  := sign? term (sign term)*
    term  := INT | INT? '*'? 'x' ('^' INT)?
    sign  := '+' | '-'

Rendering is canonical: descending powers, explicit signs, unit
coefficients omitted, no spaces.
"""

from __future__ import annotations

import re

from .polynomial import Polynomial


class PolySyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


_TERM = re.compile(r"(\d+)?(\*?x(?:\^(\d+))?)?")


def parse_poly(text: str) -> Polynomial:
    src = "".join(text.split())
    if not src:
        raise PolySyntaxError("empty polynomial", text, 0)
    terms: dict = {}
    pos = 0
    first = True
    while pos < len(src):
        sign = 1
        if src[pos] in "+-":
            sign = -1 if src[pos] == "-" else 1
            pos += 1
        elif not first:
            raise PolySyntaxError("expected '+' or '-'", text, pos)
        m = _TERM.match(src, pos)
        if m is None or m.end() == pos:
            raise PolySyntaxError("expected a term", text, pos)
        digits, xpart, power = m.group(1), m.group(2), m.group(3)
        if xpart is not None and xpart.startswith("*") and digits is None:
            raise PolySyntaxError("'*' without a coefficient", text, pos)
        coeff = int(digits) if digits is not None else 1
        k = 0 if xpart is None else (int(power) if power is not None else 1)
        terms[k] = terms.get(k, 0) + sign * coeff
        pos = m.end()
        first = False
    deg = max(terms)
    cs = [terms.get(k, 0) for k in range(deg + 1)]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ValueError(f"zero polynomial: {text!r}")
    if len(cs) == 1:
        raise ValueError(f"constant polynomial (degree 0): {text!r}")
    return Polynomial(cs)


def render_poly(f: Polynomial) -> str:
    out = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
        if not out and sign == "+":
            out.append(body)
        else:
            out.append(sign + body)
    return "".join(out)
