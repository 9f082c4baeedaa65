"""Skein modules of the solid torus and of the figure-eight knot complement.

Both carry a left action of the torus skein algebra, in either theory:
``Theory.KAUFFMAN`` (loop value ``-t^2 - t^-2``) or ``Theory.RT``
(Kirby-Melvin relations, loop value ``t^2 + t^-2``).

Solid torus elements are combinations of ``S_j(alpha)``, ``alpha`` the core.
Figure-eight elements are combinations of ``x^n``, ``x^n y``, ``x^n z`` where
the boundary meridian pushed inside is ``x``, so ``(0,q)_T`` acts as
multiplication by ``T_q(x)``.
"""

from __future__ import annotations

import enum
import threading
from functools import lru_cache
from typing import Iterator, Mapping

from . import chebyshev
from .laurent import ZERO, LaurentPoly
from .torus import EMPTY, TorusElement, normalize

__all__ = [
    "Theory",
    "SolidTorusElement",
    "Fig8Element",
    "act_solid_torus",
    "act_fig8_generator",
    "act_fig8",
    "yz_to_storage",
    "storage_to_yz",
    "ReductionError",
    "MAX_REDUCTION_DEPTH",
]

MAX_REDUCTION_DEPTH = 10_000


class ReductionError(RuntimeError):
    """The p-reduction recursion revisited a state or ran too deep."""


class Theory(enum.Enum):
    KAUFFMAN = "kauffman"
    RT = "rt"

    @property
    def loop_value(self) -> LaurentPoly:
        base = LaurentPoly({2: 1, -2: 1})
        return -base if self is Theory.KAUFFMAN else base

    @property
    def yz_shift(self) -> int:
        """``s`` in ``Y = t^2 y + s``, ``Z = t^-2 z + s``."""
        return 1 if self is Theory.KAUFFMAN else -1

    @classmethod
    def coerce(cls, value) -> Theory:
        if isinstance(value, cls):
            return value
        return cls(str(value).lower())


def _accumulate(out: dict, key, c: LaurentPoly) -> None:
    v = out.get(key, ZERO) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class _SparseElement:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping = ()):
        clean: dict = {}
        for key, c in dict(terms).items():
            _accumulate(clean, self._check_key(key), LaurentPoly._coerce(c))
        self._terms = clean

    @staticmethod
    def _check_key(key):
        return key

    @classmethod
    def _raw(cls, terms: dict):
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: self._sort_key(kv[0]))

    @staticmethod
    def _sort_key(key):
        return key

    def __iter__(self) -> Iterator:
        return iter(k for k, _ in self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, key) -> LaurentPoly:
        return self._terms.get(key, ZERO)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            _accumulate(out, k, c)
        return self._raw(out)

    def __neg__(self):
        return self._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: LaurentPoly | int):
        c = LaurentPoly._coerce(c)
        out = {}
        for k, v in self._terms.items():
            w = v * c
            if w:
                out[k] = w
        return self._raw(out)

    def __rmul__(self, c):
        if isinstance(c, (int, LaurentPoly)):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return str(self)


class SolidTorusElement(_SparseElement):
    """Combination of ``S_j(alpha)``, ``j >= 0``; negative indices are normalized on entry."""

    def __init__(self, terms: Mapping[int, LaurentPoly | int] = ()):
        clean: dict[int, LaurentPoly] = {}
        for j, c in dict(terms).items():
            sign, m = chebyshev.s_normalize(int(j))
            if sign:
                _accumulate(clean, m, LaurentPoly._coerce(c).scale(sign))
        self._terms = clean

    @classmethod
    def s(cls, j: int, coeff: LaurentPoly | int = 1) -> SolidTorusElement:
        return cls({j: coeff})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*S_{j}" for j, c in self.items())

    def to_json(self) -> list:
        return [[j, c.to_json()] for j, c in self.items()]

    @classmethod
    def from_json(cls, data) -> SolidTorusElement:
        acc: dict[int, LaurentPoly] = {}
        for entry in data:
            if not isinstance(entry, (list, tuple)) or len(entry) != 2:
                raise ValueError(f"bad solid torus entry {entry!r}")
            j, c = entry
            if isinstance(j, bool) or not isinstance(j, int):
                raise ValueError(f"S-index must be an integer, got {j!r}")
            acc[j] = acc.get(j, ZERO) + LaurentPoly.from_json(c)
        return cls(acc)

    @classmethod
    def parse(cls, text: str) -> SolidTorusElement:
        """Parse ``S_1 - (t^2 + t^-2)*S_0``; a scalar term means a multiple of ``S_0``."""
        from .textparse import parse_linear_combination

        acc: dict[int, LaurentPoly] = {}
        for coeff, key in parse_linear_combination(text, r"S_\{?(-?\d+)\}?"):
            j = 0 if key is None else int(key[0])
            acc[j] = acc.get(j, ZERO) + coeff
        return cls(acc)


STORAGE_LABELS = ("1", "y", "z")
TABLE_LABELS = ("1", "Y", "Z")
_LABEL_ORDER = {"1": 0, "y": 1, "z": 2, "Y": 1, "Z": 2}


class Fig8Element(_SparseElement):
    """Combination of ``x^n * g``.

    Keys are ``(n, g)`` with ``g`` in ``{"1", "y", "z"}`` (storage basis) or in
    ``{"1", "Y", "Z"}`` (the basis the action tables are written in).  One
    element never mixes the two label sets.
    """

    def __init__(self, terms: Mapping[tuple[int, str], LaurentPoly | int] = ()):
        super().__init__(terms)
        labels = {g for _, g in self._terms} - {"1"}
        if labels & {"y", "z"} and labels & {"Y", "Z"}:
            raise ValueError("Fig8Element mixes {y, z} and {Y, Z} labels")

    @staticmethod
    def _check_key(key):
        n, g = key
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise ValueError(f"x-power must be a nonnegative integer, got {n!r}")
        if g not in _LABEL_ORDER:
            raise ValueError(f"unknown generator label {g!r}")
        return (n, g)

    @staticmethod
    def _sort_key(key):
        n, g = key
        return (_LABEL_ORDER[g], n)

    @classmethod
    def empty(cls, coeff: LaurentPoly | int = 1) -> Fig8Element:
        return cls({(0, "1"): coeff})

    @property
    def is_table_basis(self) -> bool:
        return any(g in ("Y", "Z") for _, g in self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (n, g), c in self.items():
            x = "" if n == 0 else ("x" if n == 1 else f"x^{n}")
            mono = (x + ("" if g == "1" else g)) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [[n, g, c.to_json()] for (n, g), c in self.items()]

    @classmethod
    def from_json(cls, data) -> Fig8Element:
        acc: dict[tuple[int, str], LaurentPoly] = {}
        for entry in data:
            if not isinstance(entry, (list, tuple)) or len(entry) != 3:
                raise ValueError(f"bad figure-eight entry {entry!r}")
            n, g, c = entry
            key = cls._check_key((n, g))
            acc[key] = acc.get(key, ZERO) + LaurentPoly.from_json(c)
        return cls(acc)

    @classmethod
    def parse(cls, text: str) -> Fig8Element:
        """Parse ``x^2y - t^3*xZ + 1``; a scalar term is a multiple of the empty skein."""
        from .textparse import parse_linear_combination

        acc: dict[tuple[int, str], LaurentPoly] = {}
        pattern = r"(?=[xyzYZ])(x(?:\^(\d+))?)?([yzYZ])?"
        for coeff, key in parse_linear_combination(text, pattern):
            if key is None:
                n, g = 0, "1"
            else:
                xpart, power, g = key
                n = 0 if not xpart else int(power or 1)
                g = g or "1"
            acc[(n, g)] = acc.get((n, g), ZERO) + coeff
        return cls(acc)


# solid torus


def _solid_basis_action(theory: Theory, p: int, q: int, i: int) -> dict[int, LaurentPoly]:
    """``(p,q)_T S_i(alpha)`` with ``j = i + 1`` in the closed formula."""
    j = i + 1
    base = -p * q
    if theory is Theory.KAUFFMAN and q % 2:
        sign = -1
    else:
        sign = 1
    out: dict[int, LaurentPoly] = {}
    for idx, e in ((j - p - 1, base + 2 * j * q), (j + p - 1, base - 2 * j * q)):
        s, m = chebyshev.s_normalize(idx)
        if s:
            _accumulate(out, m, LaurentPoly.monomial(e, s * sign))
    return out


def act_solid_torus(theory, a: TorusElement, w: SolidTorusElement) -> SolidTorusElement:
    """``a . w`` on the solid torus.

    RT: ``(p,q)_T S_{j-1} = t^(-pq) [t^(2jq) S_{j-p-1} + t^(-2jq) S_{j+p-1}]``;
    Kauffman multiplies the right side by ``(-1)^q``.
    """
    theory = Theory.coerce(theory)
    out: dict[int, LaurentPoly] = {}
    for (p, q), ca in a._terms.items():
        for i, cw in w._terms.items():
            c = ca * cw
            if (p, q) == EMPTY:
                _accumulate(out, i, c)
                continue
            for m, u in _solid_basis_action(theory, p, q, i).items():
                _accumulate(out, m, c * u)
    return SolidTorusElement._raw(out)


# figure-eight knot complement


def _sx(k: int, coeff: LaurentPoly) -> dict[int, LaurentPoly]:
    """``coeff * S_k(x)`` as ``{x-power: coeff}``."""
    return {d: coeff.scale(c) for d, c in chebyshev.s_coefficients(k).items()}


def _pair(k_plus: int, k_minus: int) -> dict[int, LaurentPoly]:
    """``t^2 S_{k_plus}(x) + t^-2 S_{k_minus}(x)``."""
    out: dict[int, LaurentPoly] = {}
    for d, c in _sx(k_plus, LaurentPoly.monomial(2)).items():
        _accumulate(out, d, c)
    for d, c in _sx(k_minus, LaurentPoly.monomial(-2)).items():
        _accumulate(out, d, c)
    return out


def _table_rows(theory: Theory, q: int, reading: str) -> dict[str, list[tuple[int, dict[int, LaurentPoly], str]]]:
    """Right-hand sides of the ``(1,q)_T`` action on the empty skein, Y and Z.

    Each row is a list of ``(overall t-exponent, x-polynomial, label)``; the
    labels are table labels ``"1"``, ``"Y"``, ``"Z"``.
    """
    kauffman = theory is Theory.KAUFFMAN
    lead = -1 if kauffman else 1
    rows = {
        "1": [
            (q, _pair(2 + q, -q), "Y"),
            (q, _pair(q, 2 - q), "Z"),
            (q, _negate(_pair(-4 - q, -4 + q)) if kauffman else _pair(-4 - q, -4 + q), "1"),
        ],
        "Y": [
            (q + 4, _scale_x(_pair(4 + q, -4 - q), lead), "Y"),
            (q + 4, _scale_x(_pair(q + 2, -q), lead), "Z"),
            (q + 4, _pair(-6 - q, q), "1"),
        ],
        "Z": [
            (q - 4, _scale_x(_pair(q, 2 - q), lead), "Y"),
            (q - 4, _scale_x(_pair(-4 + q, 4 - q), lead), "Z"),
            # the printed row repeats t^(q-4) inside the bracket
            (q - 4 + (q - 4 if reading == "printed" else 0), _pair(-q, -6 + q), "1"),
        ],
    }
    return rows


def _negate(poly: dict[int, LaurentPoly]) -> dict[int, LaurentPoly]:
    return {d: -c for d, c in poly.items()}


def _scale_x(poly: dict[int, LaurentPoly], s: int) -> dict[int, LaurentPoly]:
    return poly if s == 1 else _negate(poly)


def _resolve_reading(reading: str | None) -> str:
    if reading is None:
        from .conventions import CONVENTIONS

        return CONVENTIONS.z_row_reading
    return reading


def act_fig8_generator(theory, q: int, g: str, reading: str | None = None) -> Fig8Element:
    """``(1,q)_T`` applied to the empty skein (``g="1"``), ``Y`` or ``Z``, in the table basis."""
    theory = Theory.coerce(theory)
    reading = _resolve_reading(reading)
    if g not in TABLE_LABELS:
        raise ValueError(f"generator must be one of {TABLE_LABELS}, got {g!r}")
    out: dict[tuple[int, str], LaurentPoly] = {}
    for shift, poly, label in _table_rows(theory, q, reading)[g]:
        for d, c in poly.items():
            _accumulate(out, (d, label), c.shift(shift))
    return Fig8Element._raw(out)


def yz_to_storage(theory, w: Fig8Element) -> Fig8Element:
    """Rewrite ``Y = t^2 y + s`` and ``Z = t^-2 z + s`` (``s = +1`` Kauffman, ``-1`` RT)."""
    theory = Theory.coerce(theory)
    s = theory.yz_shift
    out: dict[tuple[int, str], LaurentPoly] = {}
    for (n, g), c in w._terms.items():
        if g == "Y":
            _accumulate(out, (n, "y"), c.shift(2))
            _accumulate(out, (n, "1"), c.scale(s))
        elif g == "Z":
            _accumulate(out, (n, "z"), c.shift(-2))
            _accumulate(out, (n, "1"), c.scale(s))
        else:
            _accumulate(out, (n, g), c)
    return Fig8Element._raw(out)


def storage_to_yz(theory, w: Fig8Element) -> Fig8Element:
    """Inverse of :func:`yz_to_storage`: ``y = t^-2 (Y - s)``, ``z = t^2 (Z - s)``."""
    theory = Theory.coerce(theory)
    s = theory.yz_shift
    out: dict[tuple[int, str], LaurentPoly] = {}
    for (n, g), c in w._terms.items():
        if g == "y":
            _accumulate(out, (n, "Y"), c.shift(-2))
            _accumulate(out, (n, "1"), c.shift(-2).scale(-s))
        elif g == "z":
            _accumulate(out, (n, "Z"), c.shift(2))
            _accumulate(out, (n, "1"), c.shift(2).scale(-s))
        else:
            _accumulate(out, (n, g), c)
    return Fig8Element._raw(out)


def _add_into(out: dict, items, scale: LaurentPoly) -> None:
    for key, c in items:
        _accumulate(out, key, c * scale)


@lru_cache(maxsize=None)
def _generator_row_storage(theory: Theory, q: int, g: str, reading: str) -> tuple:
    """``(1,q)_T`` on ``1``, ``y`` or ``z`` (storage basis in and out)."""
    s = theory.yz_shift
    if g == "1":
        row = act_fig8_generator(theory, q, "1", reading)
        return tuple(yz_to_storage(theory, row)._terms.items())
    # y = t^-2 (Y - s), z = t^2 (Z - s)
    big = "Y" if g == "y" else "Z"
    shift = -2 if g == "y" else 2
    out: dict = {}
    _add_into(out, yz_to_storage(theory, act_fig8_generator(theory, q, big, reading))._terms.items(), LaurentPoly.monomial(shift))
    _add_into(out, _generator_row_storage(theory, q, "1", reading), LaurentPoly.monomial(shift, -s))
    return tuple(out.items())


_guard = threading.local()


def _act_basis(theory: Theory, p: int, q: int, n: int, g: str, reading: str) -> tuple:
    """``(p,q)_T . (x^n g)`` for normalized ``(p,q) != (0,0)``; storage basis."""
    key = (theory, p, q, n, g, reading)
    active = getattr(_guard, "active", None)
    if active is None:
        active = _guard.active = set()
    if key in active or len(active) > MAX_REDUCTION_DEPTH:
        raise ReductionError(f"reduction cycle or depth exceeded at ({p},{q}) on x^{n}{g}")
    active.add(key)
    try:
        return _act_basis_cached(*key)
    finally:
        active.discard(key)


@lru_cache(maxsize=None)
def _act_basis_cached(theory: Theory, p: int, q: int, n: int, g: str, reading: str) -> tuple:
    if p == 0:
        return tuple(((n + d, g), LaurentPoly(c)) for d, c in chebyshev.t_coefficients(q).items())
    out: dict = {}
    if p == 1:
        if n == 0:
            return _generator_row_storage(theory, q, g, reading)
        # (1,q)_T (0,1)_T = t (1,q+1)_T + t^-1 (1,q-1)_T peels one x
        _add_into(out, _act_basis(theory, 1, q + 1, n - 1, g, reading), LaurentPoly.monomial(1))
        _add_into(out, _act_basis(theory, 1, q - 1, n - 1, g, reading), LaurentPoly.monomial(-1))
        return tuple(out.items())
    # (1,0)_T (p-1,q)_T = t^q (p,q)_T + t^-q (p-2,q)_T
    for (m, h), c in _act_basis(theory, p - 1, q, n, g, reading):
        _add_into(out, _act_basis(theory, 1, 0, m, h, reading), c.shift(-q))
    if (p - 2, q) == (0, 0):
        _accumulate(out, (n, g), LaurentPoly.monomial(-2 * q, -2))
    else:
        _add_into(out, _act_basis(theory, p - 2, q, n, g, reading), LaurentPoly.monomial(-2 * q, -1))
    return tuple(out.items())


def act_fig8(theory, a: TorusElement, w: Fig8Element, reading: str | None = None) -> Fig8Element:
    """Action of a torus skein algebra element on the figure-eight complement module.

    ``w`` may be given in either label set; the result is in the storage basis.
    """
    theory = Theory.coerce(theory)
    reading = _resolve_reading(reading)
    if w.is_table_basis:
        w = yz_to_storage(theory, w)
    out: dict[tuple[int, str], LaurentPoly] = {}
    for (p, q), ca in a._terms.items():
        for (n, g), cw in w._terms.items():
            c = ca * cw
            if (p, q) == EMPTY:
                _accumulate(out, (n, g), c)
                continue
            p, q = normalize(p, q)
            _add_into(out, _act_basis(theory, p, q, n, g, reading), c)
    return Fig8Element._raw(out)
