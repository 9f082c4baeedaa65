"""Skein algebra of the torus with basis ``(p,q)_T`` and product-to-sum multiplication.

The algebra is the same for the Kauffman bracket and the Reshetikhin-Turaev
theory.  ``(p,q)_T`` is ``T_n`` applied to the primitive curve ``(p/n, q/n)``
with ``n = gcd(p, q)``, so ``(p,q)_T = (-p,-q)_T`` and ``(0,0)_T = T_0 = 2``.

Storage keys are normalized pairs; the key ``(0, 0)`` stands for the empty
skein (the identity), never for ``(0,0)_T``.  Use :meth:`TorusElement.basis`
to build ``(p,q)_T`` itself.
"""

from __future__ import annotations

from typing import Iterator, Mapping, NamedTuple

from .laurent import ONE, ZERO, LaurentPoly
from .quantum_torus import QTElement

__all__ = ["CurveClass", "TorusElement", "normalize", "multiply", "embed_quantum_torus", "EMPTY"]


class CurveClass(NamedTuple):
    p: int
    q: int

    def __str__(self) -> str:
        return f"({self.p},{self.q})_T"


EMPTY = CurveClass(0, 0)


def normalize(p: int, q: int) -> CurveClass:
    """Representative with ``p > 0``, or ``p == 0`` and ``q >= 0``."""
    if p < 0 or (p == 0 and q < 0):
        return CurveClass(-p, -q)
    return CurveClass(p, q)


class TorusElement:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], LaurentPoly | int] = ()):
        """Build from ``{(p, q): coeff}``; keys are normalized, ``(0,0)`` is the empty skein."""
        clean: dict[CurveClass, LaurentPoly] = {}
        for (p, q), c in dict(terms).items():
            key = normalize(p, q)
            v = clean.get(key, ZERO) + LaurentPoly._coerce(c)
            if v:
                clean[key] = v
            else:
                clean.pop(key, None)
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> TorusElement:
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def basis(cls, p: int, q: int, coeff: LaurentPoly | int = 1) -> TorusElement:
        """``coeff * (p,q)_T``; ``(0,0)_T`` becomes twice the identity."""
        coeff = LaurentPoly._coerce(coeff)
        if p == 0 and q == 0:
            return cls({EMPTY: coeff.scale(2)})
        return cls({(p, q): coeff})

    @classmethod
    def identity(cls, coeff: LaurentPoly | int = 1) -> TorusElement:
        return cls({EMPTY: coeff})

    @property
    def terms(self) -> dict[CurveClass, LaurentPoly]:
        return dict(self._terms)

    def items(self) -> list[tuple[CurveClass, LaurentPoly]]:
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[CurveClass]:
        return iter(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, p: int, q: int) -> LaurentPoly:
        return self._terms.get(normalize(p, q), ZERO)

    def __add__(self, other: TorusElement) -> TorusElement:
        if not isinstance(other, TorusElement):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return TorusElement._raw(out)

    def __neg__(self) -> TorusElement:
        return TorusElement._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: TorusElement) -> TorusElement:
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> TorusElement:
        c = LaurentPoly._coerce(c)
        out = {}
        for k, v in self._terms.items():
            w = v * c
            if w:
                out[k] = w
        return TorusElement._raw(out)

    def __mul__(self, other):
        if isinstance(other, TorusElement):
            return multiply(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def bar(self) -> TorusElement:
        """Apply ``t -> t^-1`` to every coefficient."""
        return TorusElement._raw({k: c.bar() for k, c in self._terms.items()})

    def twist(self, p_weight: int, q_weight: int) -> TorusElement:
        """Multiply each ``(p,q)_T`` by ``(-1)^(p_weight*p + q_weight*q)``."""
        return TorusElement._raw(
            {k: (-c if (p_weight * k.p + q_weight * k.q) % 2 else c) for k, c in self._terms.items()}
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self._terms.items()):
            parts.append(f"({c})" if k == EMPTY else f"({c})*{k}")
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self) -> list[dict]:
        return [{"p": k.p, "q": k.q, "coeff": c.to_json()} for k, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data) -> TorusElement:
        if not isinstance(data, list):
            raise ValueError("torus element JSON must be a list of {p, q, coeff} objects")
        acc: dict[tuple[int, int], LaurentPoly] = {}
        for entry in data:
            if not isinstance(entry, dict) or set(entry) != {"p", "q", "coeff"}:
                raise ValueError(f"bad torus element entry {entry!r}")
            p, q = entry["p"], entry["q"]
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in (p, q)):
                raise ValueError(f"p and q must be integers in {entry!r}")
            key = normalize(p, q)
            acc[key] = acc.get(key, ZERO) + LaurentPoly.from_json(entry["coeff"])
        return cls(acc)

    @classmethod
    def parse(cls, text: str) -> TorusElement:
        """Parse text like ``t^-6*(2,3)_T - (t^6)*(2,-1)_T + (t^11 - t^3)(1,3)_T``.

        A coefficient is either parenthesized or a single signed monomial; a bare
        ``(p,q)_T`` is read literally (so ``(0,0)_T`` means 2).
        """
        from .textparse import parse_linear_combination

        acc = TorusElement()
        for coeff, key in parse_linear_combination(text, r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)_T"):
            if key is None:
                acc = acc + cls.identity(coeff)
            else:
                acc = acc + cls.basis(int(key[0]), int(key[1]), coeff)
        return acc


def _basis_product(a: CurveClass, b: CurveClass) -> list[tuple[CurveClass, int]]:
    """Product-to-sum for two basis curves: ``[(class, t-exponent)]``, with multiplicity."""
    p, q = a
    r, s = b
    d = p * s - q * r
    return [(normalize(p + r, q + s), d), (normalize(p - r, q - s), -d)]


def multiply(x: TorusElement, y: TorusElement) -> TorusElement:
    """``(p,q)_T (r,s)_T = t^(ps-qr) (p+r,q+s)_T + t^(-(ps-qr)) (p-r,q-s)_T``, extended bilinearly."""
    out: dict[CurveClass, LaurentPoly] = {}

    def add(key, c):
        v = out.get(key, ZERO) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    for ka, ca in x._terms.items():
        for kb, cb in y._terms.items():
            c = ca * cb
            if ka == EMPTY:
                add(kb, c)
            elif kb == EMPTY:
                add(ka, c)
            else:
                for key, e in _basis_product(ka, kb):
                    # (0,0)_T = 2 * empty skein
                    add(key, c.shift(e).scale(2) if key == EMPTY else c.shift(e))
    return TorusElement._raw(out)


def balanced_monomial(p: int, q: int, sign: int | None = None) -> QTElement:
    """``t^(sign*p*q) l^p m^q``."""
    if sign is None:
        from .conventions import CONVENTIONS

        sign = CONVENTIONS.embedding_sign
    return QTElement._raw({(p, q): LaurentPoly.monomial(sign * p * q)})


def embed_quantum_torus(x: TorusElement, sign: int | None = None) -> QTElement:
    """Algebra map ``(p,q)_T -> e(p,q) + e(-p,-q)`` into the quantum torus (``l = L, m = M``)."""
    if sign is None:
        from .conventions import CONVENTIONS

        sign = CONVENTIONS.embedding_sign
    acc: dict[tuple[int, int], LaurentPoly] = {}
    for (p, q), c in x._terms.items():
        if (p, q) == EMPTY:
            acc[(0, 0)] = acc.get((0, 0), ZERO) + c
            continue
        unit = c.shift(sign * p * q)
        for key in ((p, q), (-p, -q)):
            acc[key] = acc.get(key, ZERO) + unit
    return QTElement(acc)
