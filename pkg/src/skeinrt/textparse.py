"""Parsing of linear combinations written as plain text, e.g. ``t^2*(1,0)_T - (0,1)_T``."""

from __future__ import annotations

import re

from .laurent import ONE, LaurentPoly

_BRACED_EXP = re.compile(r"\^\{([^{}]*)\}")
_MONO = re.compile(r"(\d+)?\s*\*?\s*(t(?:\s*\^\s*(?:\(\s*[+-]?\d+\s*\)|[+-]?\d+))?)?")


def unbrace(text: str) -> str:
    """``t^{-6}`` -> ``t^-6``; drops LaTeX line-break and spacing noise."""
    text = _BRACED_EXP.sub(lambda m: "^" + m.group(1).replace(" ", ""), text)
    for junk in ("\\\\", "&&", "\\quad", "\\,"):
        text = text.replace(junk, " ")
    return text


def _matching_paren(s: str, i: int) -> int:
    depth = 0
    for j in range(i, len(s)):
        if s[j] == "(":
            depth += 1
        elif s[j] == ")":
            depth -= 1
            if depth == 0:
                return j
    raise ValueError(f"unbalanced parentheses in {s!r}")


def parse_linear_combination(text: str, basis_pattern: str):
    """Yield ``(coeff, groups)`` for each term ``[sign] [coeff] [*] basis``.

    ``groups`` is the tuple of the basis regex groups, or ``None`` for a
    scalar term.  The coefficient is a parenthesized polynomial or a monomial
    such as ``2t^3``; it defaults to 1.
    """
    s = unbrace(text)
    basis = re.compile(r"\s*\*?\s*" + basis_pattern)
    pos, n = 0, len(s)
    first = True
    while True:
        while pos < n and s[pos].isspace():
            pos += 1
        if pos >= n:
            break
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ValueError(f"expected + or - at offset {pos} in {text!r}")
        while pos < n and s[pos].isspace():
            pos += 1
        coeff = None
        m = basis.match(s, pos)
        if m is None:
            if pos < n and s[pos] == "(":
                end = _matching_paren(s, pos)
                coeff = LaurentPoly.parse(s[pos + 1 : end])
                pos = end + 1
            else:
                mono = _MONO.match(s, pos)
                if mono is None or mono.end() == pos:
                    raise ValueError(f"cannot parse term at offset {pos} in {text!r}")
                coeff = LaurentPoly.parse(mono.group(0))
                pos = mono.end()
            m = basis.match(s, pos)
        if coeff is None:
            coeff = ONE
        if m is not None:
            pos = m.end()
            yield coeff.scale(sign), m.groups()
        else:
            yield coeff.scale(sign), None
        first = False
