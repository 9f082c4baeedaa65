"""The quantum torus ``Z[t^±1]<L^±1, M^±1> / (LM = t^2 ML)``.

Elements are stored in normal order: a dict ``{(a, b): coeff}`` meaning
``sum coeff * L^a M^b``.  Reordering uses ``M^b L^a = t^(-2ab) L^a M^b``.
The same ring hosts the images of torus curves (written ``l, m`` in the
topology) and the shift/multiplication operators on colored Jones sequences.
"""

from __future__ import annotations

from typing import Callable, Iterator, Mapping

from .laurent import ONE, ZERO, LaurentPoly

__all__ = ["QTElement", "qt_multiply", "act_sequence", "Sequence"]

Sequence = Callable[[int], LaurentPoly]


class QTElement:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], LaurentPoly | int] = ()):
        clean: dict[tuple[int, int], LaurentPoly] = {}
        for (a, b), c in dict(terms).items():
            c = LaurentPoly._coerce(c)
            key = (int(a), int(b))
            c = clean.get(key, ZERO) + c
            if c:
                clean[key] = c
            else:
                clean.pop(key, None)
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> QTElement:
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, a: int, b: int, coeff: LaurentPoly | int = 1) -> QTElement:
        return cls({(a, b): coeff})

    @classmethod
    def identity(cls) -> QTElement:
        return cls._raw({(0, 0): ONE})

    @property
    def terms(self) -> dict[tuple[int, int], LaurentPoly]:
        return dict(self._terms)

    def items(self) -> list[tuple[tuple[int, int], LaurentPoly]]:
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, a: int, b: int) -> LaurentPoly:
        return self._terms.get((a, b), ZERO)

    def __add__(self, other: QTElement) -> QTElement:
        if not isinstance(other, QTElement):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return QTElement._raw(out)

    def __neg__(self) -> QTElement:
        return QTElement._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: QTElement) -> QTElement:
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> QTElement:
        c = LaurentPoly._coerce(c)
        if not c:
            return QTElement._raw({})
        return QTElement._raw({k: v * c for k, v in self._terms.items() if v * c})

    def __mul__(self, other):
        if isinstance(other, QTElement):
            return qt_multiply(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, QTElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def support_bounds(self) -> tuple[int, int, int, int]:
        """``(min a, max a, min b, max b)`` over the support."""
        if not self._terms:
            raise ValueError("zero element has empty support")
        a_vals = [a for a, _ in self._terms]
        b_vals = [b for _, b in self._terms]
        return min(a_vals), max(a_vals), min(b_vals), max(b_vals)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self._terms.items()):
            mono = "".join(
                name if e == 1 else f"{name}^{e}" for name, e in (("L", a), ("M", b)) if e
            )
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self) -> list[dict]:
        return [{"a": a, "b": b, "coeff": c.to_json()} for (a, b), c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data) -> QTElement:
        acc: dict[tuple[int, int], LaurentPoly] = {}
        for entry in data:
            key = (int(entry["a"]), int(entry["b"]))
            acc[key] = acc.get(key, ZERO) + LaurentPoly.from_json(entry["coeff"])
        return cls(acc)


def qt_multiply(x: QTElement, y: QTElement) -> QTElement:
    """Normal-ordered product: ``L^a M^b L^c M^d = t^(-2bc) L^(a+c) M^(b+d)``."""
    out: dict[tuple[int, int], LaurentPoly] = {}
    for (a, b), cx in x._terms.items():
        for (c, d), cy in y._terms.items():
            key = (a + c, b + d)
            v = out.get(key, ZERO) + (cx * cy).shift(-2 * b * c)
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return QTElement._raw(out)


def act_sequence(
    P: QTElement, f: Sequence, n: int, order: str | None = None, offset: int | None = None
) -> LaurentPoly:
    """Evaluate ``(P f)(n)`` with ``L f(n) = f(n+1)`` and ``M f(n) = t^(2(n+offset)) f(n)``.

    ``order="operator"`` composes the operators literally, so
    ``(L^a M^b f)(n) = t^(2b(n+offset+a)) f(n+a)``; ``order="weight-first"``
    takes the weight at ``n`` before shifting.  ``None`` uses the frozen
    conventions.
    """
    from .conventions import CONVENTIONS

    if order is None:
        order = CONVENTIONS.evaluation_order
    if offset is None:
        offset = CONVENTIONS.weight_offset
    if order == "operator":
        weight_at = lambda a, b: 2 * b * (n + offset + a)  # noqa: E731
    elif order == "weight-first":
        weight_at = lambda a, b: 2 * b * (n + offset)  # noqa: E731
    else:
        raise ValueError(f"unknown evaluation order {order!r}")
    total = ZERO
    for (a, b), c in P._terms.items():
        total = total + (c * f(n + a)).shift(weight_at(a, b))
    return total
