"""Closed-form colored Jones values from cyclotomic expansions, for cross-checks only.

Both use ``q^(1/2) = t^2``, ``{a} = t^(2a) - t^(-2a)`` and the unnormalized
convention ``J(unknot, n) = [n+1] = (t^(2(n+1)) - t^(-2(n+1))) / (t^2 - t^-2)``.
They are independent of skein theory and of diagram evaluation.
"""

from __future__ import annotations

from ..laurent import ONE, LaurentPoly

__all__ = ["quantum_integer", "figure_eight_cyclotomic", "trefoil_cyclotomic"]


def quantum_integer(N: int) -> LaurentPoly:
    """``[N] = t^(2(N-1)) + t^(2(N-3)) + ... + t^(-2(N-1))`` for ``N >= 1``."""
    return LaurentPoly({2 * (N - 1) - 4 * i: 1 for i in range(N)})


def _brace(a: int) -> LaurentPoly:
    return LaurentPoly({2 * a: 1, -2 * a: -1})


def figure_eight_cyclotomic(n: int) -> LaurentPoly:
    """``[N] sum_k prod_{j<=k} {N+j}{N-j}`` with ``N = n + 1``."""
    N = n + 1
    total, prod = LaurentPoly(), ONE
    for k in range(N):
        if k:
            prod = prod * _brace(N + k) * _brace(N - k)
        total = total + prod
    return quantum_integer(N) * total


def trefoil_cyclotomic(n: int, handedness: int = 1) -> LaurentPoly:
    """``[N] sum_k (-1)^k q^(k(k+3)/2) prod_{j<=k} {N+j}{N-j}``, or its mirror for ``handedness = -1``.

    The overall sign of each summand alternates, so which handedness a given
    diagram has is fixed by the first nontrivial color; the higher colors are
    then genuine checks.
    """
    N = n + 1
    total, prod = LaurentPoly(), ONE
    for k in range(N):
        if k:
            prod = prod * _brace(N + k) * _brace(N - k)
        # q^(k(k+3)/2) with q = t^4
        total = total + prod.shift(2 * k * (k + 3)).scale((-1) ** k)
    value = quantum_integer(N) * total
    return value if handedness == 1 else value.bar()
