"""Normalized Chebyshev polynomials ``T_n`` and ``S_n`` over the integers.

``T_n(2 cos x) = 2 cos(n x)`` and ``S_n(2 cos x) = sin((n+1) x) / sin x``.
Both satisfy ``P_{n+1} = xi P_n - P_{n-1}``; the seeds are ``T_0 = 2, T_1 = xi``
and ``S_0 = 1, S_1 = xi``.  Expansions are dicts ``{power of xi: coefficient}``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

__all__ = [
    "Kind",
    "ChebyshevExpansion",
    "s_normalize",
    "t_normalize",
    "expand",
    "s_coefficients",
    "t_coefficients",
    "power_to_s_basis",
    "poly_mul",
    "poly_add",
]


class Kind(enum.Enum):
    T = "T"
    S = "S"


@dataclass(frozen=True)
class ChebyshevExpansion:
    kind: Kind
    index: int
    coefficients: dict[int, int] = field(hash=False)

    def __call__(self, xi):
        return sum(c * xi**d for d, c in self.coefficients.items())


def s_normalize(index: int) -> tuple[int, int | None]:
    """Return ``(sign, m)`` with ``S_index = sign * S_m`` and ``m >= 0``.

    ``S_{-1} = 0`` gives ``(0, None)``; otherwise ``S_{-n-2} = -S_n``.
    """
    if index >= 0:
        return 1, index
    if index == -1:
        return 0, None
    return -1, -index - 2


def t_normalize(index: int) -> int:
    return abs(index)


@lru_cache(maxsize=None)
def _expansion(kind: Kind, index: int) -> tuple[tuple[int, int], ...]:
    if index == 0:
        return ((0, 2),) if kind is Kind.T else ((0, 1),)
    if index == 1:
        return ((1, 1),)
    prev = dict(_expansion(kind, index - 2))
    cur = _expansion(kind, index - 1)
    out: dict[int, int] = {}
    for d, c in cur:
        out[d + 1] = c
    for d, c in prev.items():
        v = out.get(d, 0) - c
        if v:
            out[d] = v
        else:
            out.pop(d, None)
    return tuple(sorted(out.items()))


def expand(kind: Kind | str, index: int) -> ChebyshevExpansion:
    """Power-basis expansion of ``T_index`` or ``S_index`` (``index >= 0``)."""
    kind = Kind(kind)
    if index < 0:
        raise ValueError("expand() needs a nonnegative index; normalize first")
    return ChebyshevExpansion(kind, index, dict(_expansion(kind, index)))


def s_coefficients(index: int) -> dict[int, int]:
    """Power-basis coefficients of ``S_index`` for any integer index."""
    sign, m = s_normalize(index)
    if sign == 0:
        return {}
    return {d: sign * c for d, c in _expansion(Kind.S, m)}


def t_coefficients(index: int) -> dict[int, int]:
    return dict(_expansion(Kind.T, t_normalize(index)))


@lru_cache(maxsize=None)
def _power_to_s(power: int) -> tuple[tuple[int, int], ...]:
    if power == 0:
        return ((0, 1),)
    # xi * S_j = S_{j+1} + S_{j-1}, with S_{-1} = 0
    out: dict[int, int] = {}
    for j, c in _power_to_s(power - 1):
        out[j + 1] = out.get(j + 1, 0) + c
        if j >= 1:
            out[j - 1] = out.get(j - 1, 0) + c
    return tuple(sorted(out.items()))


def power_to_s_basis(power: int) -> dict[int, int]:
    """Write ``xi^power`` as ``sum c_j S_j(xi)``; all ``c_j`` are nonnegative."""
    if power < 0:
        raise ValueError("power must be nonnegative")
    return dict(_power_to_s(power))


def poly_add(a: dict[int, int], b: dict[int, int], scale: int = 1) -> dict[int, int]:
    out = dict(a)
    for d, c in b.items():
        v = out.get(d, 0) + scale * c
        if v:
            out[d] = v
        else:
            out.pop(d, None)
    return out


def poly_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for da, ca in a.items():
        for db, cb in b.items():
            out[da + db] = out.get(da + db, 0) + ca * cb
    return {d: c for d, c in out.items() if c}
