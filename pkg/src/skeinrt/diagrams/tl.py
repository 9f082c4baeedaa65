"""Temperley-Lieb contraction of braid closures.

The kernel consumes a *program*: a list of ``(opcode, position, sign)``
triples acting on a strip of strands that starts and ends empty.  A crossing
``sigma_i^(+1)`` (left strand over) resolves as ``t * 1 + t^-1 * e_i``; a
birth adds an identity strand at one edge; a death closes the edge strand
around that side, which is a partial trace.  Closing the leftmost strand on
the left instead of the right is legitimate because the diagram lives in the
sphere.

:func:`plan` turns a braid word into a program, choosing a cyclic rotation of
the word and birth/death times so the strip stays narrow.  That is what keeps
cables of 5-strand braids tractable.

The compiled kernel is used when it imports; ``SKEINRT_PURE_PYTHON=1``
forces the pure-Python one.
"""

from __future__ import annotations

import logging
import os
from math import comb

from . import _tl_py
from ._tl_py import BIRTH_LEFT, BIRTH_RIGHT, CROSS, DEATH_LEFT, DEATH_RIGHT

log = logging.getLogger(__name__)

__all__ = ["contract", "contract_python", "plan", "BACKEND", "braid_bracket_terms"]

contract_python = _tl_py.contract

try:
    if os.environ.get("SKEINRT_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from ._tl_core import contract as contract_compiled
except ImportError:  # pragma: no cover - depends on the build
    contract_compiled = None

BACKEND = "compiled" if contract_compiled is not None else "python"


def contract(program, backend: str | None = None) -> dict[int, int]:
    """Run ``program`` on the selected kernel; overflow falls back to exact Python ints."""
    backend = backend or BACKEND
    if backend == "compiled":
        if contract_compiled is None:
            raise RuntimeError("compiled kernel is not available")
        try:
            return contract_compiled(program)
        except OverflowError as exc:
            log.info("compiled kernel overflowed (%s); using the Python kernel", exc)
            return contract_python(program)
    if backend == "python":
        return contract_python(program)
    raise ValueError(f"unknown backend {backend!r}")


def _catalan(w: int) -> int:
    return comb(2 * w, w) // (w + 1)


def _schedule(strands: int, word: list[int]) -> tuple[list, int, int]:
    """Program for one fixed word, plus ``(peak width, cost)`` and the free-strand count."""
    first = [None] * strands
    last = [None] * strands
    for s, g in enumerate(word):
        i = abs(g) - 1
        for pos in (i, i + 1):
            if first[pos] is None:
                first[pos] = s
            last[pos] = s
    program = []
    lo, hi = None, None  # alive interval, inclusive
    peak, cost = 0, 0
    for s, g in enumerate(word):
        i = abs(g) - 1
        if lo is None:
            lo, hi = i, i
            program.append((BIRTH_RIGHT, 0, 0))
        while lo > i:
            program.append((BIRTH_LEFT, 0, 0))
            lo -= 1
        while hi < i + 1:
            program.append((BIRTH_RIGHT, 0, 0))
            hi += 1
        width = hi - lo + 1
        peak = max(peak, width)
        cost += _catalan(width)
        program.append((CROSS, i - lo, 1 if g > 0 else -1))
        while lo <= hi and (last[lo] is None or last[lo] <= s):
            program.append((DEATH_LEFT, 0, 0))
            lo += 1
        while lo <= hi and (last[hi] is None or last[hi] <= s):
            program.append((DEATH_RIGHT, 0, 0))
            hi -= 1
        if lo > hi:
            lo = hi = None
    touched = set()
    for g in word:
        touched.update((abs(g) - 1, abs(g)))
    free = strands - len(touched)
    return program, (peak, cost), free


def plan(strands: int, word: list[int]) -> tuple[list, int]:
    """Best program over all cyclic rotations of ``word``; returns ``(program, free strands)``.

    Strands never touched by a generator are split components, returned as a
    count of free unknots.
    """
    if not word:
        return [], strands
    best = None
    for r in range(len(word)):
        rotated = word[r:] + word[:r]
        program, score, free = _schedule(strands, rotated)
        if best is None or score < best[0]:
            best = (score, program, free)
    return best[1], best[2]


def braid_bracket_terms(strands: int, word: list[int], backend: str | None = None) -> dict[int, int]:
    """Kauffman bracket of the closure, as ``{exponent: coefficient}``."""
    program, free = plan(strands, list(word))
    result = contract(program, backend) if program else {0: 1}
    for _ in range(free):
        nxt: dict[int, int] = {}
        for e, c in result.items():
            for d in (2, -2):
                nxt[e + d] = nxt.get(e + d, 0) - c
        result = {e: c for e, c in nxt.items() if c}
    return dict(sorted(result.items()))
