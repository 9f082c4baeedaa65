"""Exact Laurent polynomials in one variable ``t`` with integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable, Mapping

__all__ = ["LaurentPoly", "t", "unit_monomial", "ZERO", "ONE"]


class LaurentPoly:
    """Immutable sparse Laurent polynomial ``sum c_k t^k``.

    The terms live in a dict ``{exponent: coefficient}`` with no zero
    coefficients, so two polynomials are equal exactly when their dicts are.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(terms, int):
            terms = {0: terms} if terms else {}
        elif not isinstance(terms, Mapping):
            acc: dict[int, int] = {}
            for e, c in terms:
                acc[e] = acc.get(e, 0) + c
            terms = acc
        self._terms = {int(e): int(c) for e, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        # caller guarantees canonical form
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls._raw({exponent: coeff} if coeff else {})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def is_unit(self) -> bool:
        """True for ``±t^k``."""
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c in (1, -1)

    # arithmetic

    @staticmethod
    def _coerce(other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly._raw({0: other} if other else {})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((eb, cb),) = b.items()
            return LaurentPoly._raw({e + eb: c * cb for e, c in a.items()})
        out: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise ValueError("only units can be raised to negative powers")
            ((e, c),) = self._terms.items()
            return LaurentPoly._raw({e * n: c ** (-n)})
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t^k``."""
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, c: int) -> LaurentPoly:
        if c == 1:
            return self
        if c == 0:
            return ZERO
        return LaurentPoly._raw({e: v * c for e, v in self._terms.items()})

    def bar(self) -> LaurentPoly:
        """Substitute ``t -> t^-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def substitute_power(self, k: int) -> LaurentPoly:
        """Substitute ``t -> t^k`` (k nonzero)."""
        return LaurentPoly._raw({e * k: c for e, c in self._terms.items()})

    def divide_unit(self, unit: LaurentPoly) -> LaurentPoly:
        if not unit.is_unit():
            raise ValueError(f"{unit} is not a unit")
        ((e, c),) = unit._terms.items()
        return LaurentPoly._raw({k - e: v * c for k, v in self._terms.items()})

    def __call__(self, value):
        """Evaluate at a number (exact for Fractions/ints, anything with ``**``)."""
        return sum(c * value**e for e, c in self._terms.items())

    # comparison and hashing

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # text and JSON formats

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(sorted(self._terms.items())):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    _TERM = re.compile(
        r"""\s*([+-])?\s*
            (?:(\d+)\s*\*?\s*)?
            (?:t(?:\s*\^\s*(?:\(\s*([+-]?\d+)\s*\)|([+-]?\d+)))?)?
            \s*""",
        re.VERBOSE,
    )

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse the text format, e.g. ``"-t^2 - t^-2"`` or ``"3*t^-4 + 2"``."""
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial text")
        pos, acc = 0, {}
        first = True
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"cannot parse Laurent polynomial {text!r} at offset {pos}")
            sign, num, e_paren, e_plain = m.groups()
            has_t = "t" in m.group(0)
            if num is None and not has_t:
                raise ValueError(f"cannot parse Laurent polynomial {text!r} at offset {pos}")
            if sign is None and not first:
                raise ValueError(f"missing operator in {text!r} at offset {pos}")
            c = int(num) if num is not None else 1
            if sign == "-":
                c = -c
            if has_t:
                e_text = e_paren if e_paren is not None else e_plain
                e = int(e_text) if e_text is not None else 1
            else:
                e = 0
            acc[e] = acc.get(e, 0) + c
            pos = m.end()
            first = False
        return cls(acc)

    def to_json(self) -> list[list]:
        return [[e, str(c)] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data) -> LaurentPoly:
        if isinstance(data, str):
            return cls.parse(data)
        if isinstance(data, int):
            return cls(data)
        acc: dict[int, int] = {}
        for pair in data:
            if len(pair) != 2:
                raise ValueError(f"bad Laurent JSON term {pair!r}")
            e, c = pair
            if isinstance(e, bool) or not isinstance(e, int):
                raise ValueError(f"exponent must be an integer, got {e!r}")
            acc[e] = acc.get(e, 0) + int(c)
        return cls(acc)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
t = LaurentPoly._raw({1: 1})


def unit_monomial(sign: int, exponent: int) -> LaurentPoly:
    """``sign * t^exponent`` with ``sign`` in {+1, -1}."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return LaurentPoly._raw({exponent: sign})
