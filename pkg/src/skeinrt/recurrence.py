"""From peripheral-ideal elements to recurrence operators for colored Jones sequences.

A recurrence ``sum_k c_k(n) y_{n+k} = 0`` with ``c_k(n)`` a combination of
``t^(alpha n + beta)`` is held in :class:`Recurrence`.  It evaluates directly
on a sequence, and converts to and from quantum torus operators, where
``y_{n+k}`` is ``L^k`` and ``t^(2bn)`` is ``M^b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .laurent import ZERO, LaurentPoly
from .quantum_torus import QTElement, Sequence, qt_multiply
from .textparse import _matching_paren
from .torus import TorusElement, embed_quantum_torus

__all__ = [
    "Recurrence",
    "parse_recurrence",
    "peripheral_to_recurrence",
    "clearing_monomial",
    "recurrence_equal",
    "Comparison",
]


@dataclass
class Recurrence:
    """``{shift k: {(alpha, beta): coeff}}`` meaning ``sum coeff t^(alpha n + beta) y_{n+k}``."""

    terms: dict[int, dict[tuple[int, int], int]] = field(default_factory=dict)

    def add(self, k: int, alpha: int, beta: int, coeff: int) -> None:
        row = self.terms.setdefault(k, {})
        v = row.get((alpha, beta), 0) + coeff
        if v:
            row[(alpha, beta)] = v
        else:
            row.pop((alpha, beta), None)
            if not row:
                del self.terms[k]

    def coefficient(self, k: int, n: int) -> LaurentPoly:
        """``c_k(n)`` at a concrete ``n``."""
        acc: dict[int, int] = {}
        for (alpha, beta), c in self.terms.get(k, {}).items():
            e = alpha * n + beta
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    def evaluate(self, f: Sequence, n: int) -> LaurentPoly:
        total = ZERO
        for k in self.terms:
            total = total + self.coefficient(k, n) * f(n + k)
        return total

    def shifts(self) -> list[int]:
        return sorted(self.terms)

    def to_qt(self, order: str | None = None, offset: int | None = None) -> QTElement:
        """Operator with the same action under the given evaluation conventions."""
        order, offset = _conventions(order, offset)
        acc: dict[tuple[int, int], LaurentPoly] = {}
        for k, row in self.terms.items():
            for (alpha, beta), c in row.items():
                if alpha % 2:
                    raise ValueError("n-exponents must be even to come from powers of M")
                b = alpha // 2
                # t^(2bn) = t^(-2b offset) M^b; as an operator M^b L^k = t^(-2bk) L^k M^b
                e = beta - 2 * b * offset - (2 * b * k if order == "operator" else 0)
                acc[(k, b)] = acc.get((k, b), ZERO) + LaurentPoly.monomial(e, c)
        return QTElement(acc)

    @classmethod
    def from_qt(cls, P: QTElement, order: str | None = None, offset: int | None = None) -> Recurrence:
        order, offset = _conventions(order, offset)
        rec = cls()
        for (a, b), c in P.items():
            for e, v in c.items():
                beta = e + 2 * b * offset + (2 * b * a if order == "operator" else 0)
                rec.add(a, 2 * b, beta, v)
        return rec

    def pretty(self, var: str = "y") -> str:
        """Group by shift, highest first, in the ``(...) y_{n+k}`` layout."""
        chunks = []
        for k in sorted(self.terms, reverse=True):
            row = self.terms[k]
            monos = []
            for (alpha, beta), c in sorted(row.items(), key=lambda kv: (-kv[0][0], -kv[0][1])):
                expo = _linear(alpha, beta)
                body = "1" if expo == "0" else f"t^{{{expo}}}"
                mag = abs(c)
                if mag != 1:
                    body = f"{mag}{body}" if body != "1" else str(mag)
                monos.append(("-" if c < 0 else "+") + body)
            text = "".join(monos).lstrip("+")
            idx = "n" if k == 0 else f"n{k:+d}"
            chunks.append(f"({text}) {var}_{{{idx}}}")
        return " + ".join(chunks) + " = 0" if chunks else "0 = 0"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Recurrence):
            return NotImplemented
        return self.terms == other.terms


def _conventions(order, offset):
    from .conventions import CONVENTIONS

    return (
        CONVENTIONS.evaluation_order if order is None else order,
        CONVENTIONS.weight_offset if offset is None else offset,
    )


def _linear(alpha: int, beta: int) -> str:
    if alpha == 0:
        return str(beta)
    a = "n" if alpha == 1 else ("-n" if alpha == -1 else f"{alpha}n")
    if beta == 0:
        return a
    return f"{a}{beta:+d}"


_EXPONENT = re.compile(r"^\s*([+-]?\s*\d*)\s*(n)?\s*(?:([+-])\s*(\d+))?\s*$")


def _parse_exponent(text: str) -> tuple[int, int]:
    """``6n+6`` -> (6, 6); ``-10-4`` -> (0, -14); ``2n`` -> (2, 0)."""
    s = text.replace(" ", "")
    if "n" not in s:
        # a constant, possibly written as a sum like -10-4
        return 0, sum(int(x) for x in re.findall(r"[+-]?\d+", s))
    m = _EXPONENT.match(s)
    if m is None:
        raise ValueError(f"cannot parse exponent {text!r}")
    num, _, sgn, const = m.groups()
    num = num.replace(" ", "")
    alpha = -1 if num == "-" else (1 if num in ("", "+") else int(num))
    beta = 0 if const is None else int(sgn + const)
    return alpha, beta


_Y_TERM = re.compile(r"\s*\*?\s*y_\{?\s*n\s*([+-]\s*\d+)?\s*\}?")
_MONO = re.compile(r"([+-])?\s*(\d+)?\s*(?:t\^\{([^{}]*)\}|t\^(-?\d+)|(t))?")


def parse_recurrence(text: str) -> Recurrence:
    """Parse ``(t^{6n+6}-t^{-2n+2}) y_{n+2} + t^{2n} y_{n+1} - y_n + ... = 0``.

    Each term is an optional sign, a parenthesized coefficient or a single
    monomial (possibly absent), and ``y_{n+k}``.  LaTeX line breaks and
    alignment marks are ignored.  Exponents are linear in ``n``; a constant
    sum such as ``-10-4`` is added up literally.
    """
    s = text
    for junk in ("\\\\", "&&", "&", "\\quad", "\n"):
        s = s.replace(junk, " ")
    lhs, _, rhs = s.partition("=")
    if rhs.strip() not in ("", "0"):
        raise ValueError("recurrence must have the form '... = 0'")
    s = lhs
    rec = Recurrence()
    pos, n = 0, len(s)
    first = True
    while True:
        while pos < n and s[pos].isspace():
            pos += 1
        if pos >= n:
            break
        outer = 1
        if s[pos] in "+-":
            outer = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ValueError(f"expected + or - at offset {pos} in recurrence text")
        while pos < n and s[pos].isspace():
            pos += 1
        if pos < n and s[pos] == "(":
            close_at = _matching_paren(s, pos)
            body = s[pos + 1 : close_at]
            pos = close_at + 1
        else:
            m = _MONO.match(s, pos)
            body = m.group(0).strip() if m else ""
            pos = m.end() if m else pos
        ym = _Y_TERM.match(s, pos)
        if ym is None:
            raise ValueError(f"expected y_{{n+k}} at offset {pos} in recurrence text")
        k = int(ym.group(1).replace(" ", "")) if ym.group(1) else 0
        coeffs = list(_parse_coefficient(body)) if body else [(1, 0, 0)]
        for c, alpha, beta in coeffs:
            rec.add(k, alpha, beta, outer * c)
        pos = ym.end()
        first = False
    return rec


def _parse_coefficient(body: str):
    i, n = 0, len(body)
    body = body.strip()
    n = len(body)
    while i < n:
        m = _MONO.match(body, i)
        if m is None or m.end() == i:
            raise ValueError(f"cannot parse coefficient {body!r} at {i}")
        sign, num, braced, plain, bare = m.groups()
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        if braced is not None:
            alpha, beta = _parse_exponent(braced)
        elif plain is not None:
            alpha, beta = 0, int(plain)
        elif bare is not None:
            alpha, beta = 0, 1
        else:
            alpha, beta = 0, 0
        yield c, alpha, beta
        i = m.end()
        while i < n and body[i].isspace():
            i += 1


def clearing_monomial(P: QTElement) -> tuple[int, int]:
    """Smallest ``(A, B)`` with ``L^A M^B P`` free of negative exponents."""
    a_min, _, b_min, _ = P.support_bounds()
    return max(0, -a_min), max(0, -b_min)


def peripheral_to_recurrence(e: TorusElement, sign: int | None = None) -> QTElement:
    """Embed into the quantum torus and left-multiply by the minimal clearing monomial."""
    P = embed_quantum_torus(e, sign)
    if not P:
        return P
    A, B = clearing_monomial(P)
    return qt_multiply(QTElement.monomial(A, B), P)


@dataclass(frozen=True)
class Comparison:
    status: str  # "equal", "equal-up-to-unit" or "different"
    unit: tuple[int, int, int, int] | None = None  # (sign, t-exponent, a, b): P = sign t^e L^a M^b Q
    diff: tuple | None = None  # (key, coefficient in P, coefficient in unit*Q)

    def __bool__(self) -> bool:
        return self.status != "different"


def recurrence_equal(P: QTElement, Q: QTElement) -> Comparison:
    """Decide ``P == u Q`` for a unit ``u = ±t^e L^a M^b`` (left multiplication)."""
    if P == Q:
        return Comparison("equal", (1, 0, 0, 0))
    if not P or not Q:
        key = min(P, default=None) or min(Q, default=None)
        return Comparison("different", None, (key, P.coeff(*key), Q.coeff(*key)))
    kp, kq = min(P), min(Q)
    a, b = kp[0] - kq[0], kp[1] - kq[1]
    shifted = qt_multiply(QTElement.monomial(a, b), Q)
    cp, cq = P.coeff(*kp), shifted.coeff(*kp)
    lp, lq = cp.min_degree(), cq.min_degree()
    ratio, rem = divmod(cp.coeff(lp), cq.coeff(lq))
    if rem == 0 and ratio in (1, -1):
        e = lp - lq
        candidate = shifted.scale(LaurentPoly.monomial(e, ratio))
        if candidate == P:
            return Comparison("equal-up-to-unit", (ratio, e, a, b))
        unit = (ratio, e, a, b)
    else:
        candidate, unit = shifted, None
    for key in sorted(set(P) | set(candidate)):
        if P.coeff(*key) != candidate.coeff(*key):
            return Comparison("different", unit, (key, P.coeff(*key), candidate.coeff(*key)))
    raise AssertionError("unreachable: elements differ but no differing key found")
