"""Bracket, RT Jones and colored Jones values of framed links, computed from diagrams.

Nothing here uses the skein-module machinery, so these values serve as an
independent check on it.
"""

from __future__ import annotations

from ..chebyshev import Kind, expand
from ..laurent import LaurentPoly
from .braid import BraidDiagram, DiagramError
from .pd import PDDiagram
from .tl import braid_bracket_terms

__all__ = [
    "bracket",
    "bracket_state_sum",
    "self_writhe",
    "rt_jones",
    "kirby_melvin_eval",
    "cable_expand",
    "colored_jones",
    "PD_STATE_SUM_LIMIT",
    "KIRBY_MELVIN_LIMIT",
]

PD_STATE_SUM_LIMIT = 20
KIRBY_MELVIN_LIMIT = 12


def _as_diagram(d):
    if isinstance(d, (BraidDiagram, PDDiagram)):
        return d
    if isinstance(d, dict):
        return PDDiagram.from_json(d) if "crossings" in d else BraidDiagram.from_json(d)
    raise DiagramError(f"not a diagram: {d!r}")


def bracket(d, backend: str | None = None) -> LaurentPoly:
    """Kauffman bracket, ``<empty> = 1`` and loop value ``-t^2 - t^-2``.

    Braids go through Temperley-Lieb contraction; PD codes through the state sum.
    """
    d = _as_diagram(d)
    if isinstance(d, BraidDiagram):
        return LaurentPoly(braid_bracket_terms(d.strands, list(d.word), backend))
    return LaurentPoly(d.state_sum(PD_STATE_SUM_LIMIT))


def bracket_state_sum(d) -> LaurentPoly:
    """The bracket by brute-force smoothing, for cross-checking the contraction."""
    d = _as_diagram(d)
    if isinstance(d, BraidDiagram):
        d = d.to_pd()
    return LaurentPoly(d.state_sum(PD_STATE_SUM_LIMIT))


def self_writhe(d) -> list[int]:
    return _as_diagram(d).self_writhe()


def _components(d) -> int:
    return d.component_count()


def rt_jones(d, backend: str | None = None) -> LaurentPoly:
    """``(-1)^(components + total self-writhe) * <d>``."""
    d = _as_diagram(d)
    parity = _components(d) + sum(d.self_writhe())
    value = bracket(d, backend)
    return -value if parity % 2 else value


def kirby_melvin_eval(d) -> LaurentPoly:
    d = _as_diagram(d)
    if isinstance(d, BraidDiagram):
        d = d.to_pd()
    return LaurentPoly(d.kirby_melvin(KIRBY_MELVIN_LIMIT))


def cable_expand(d: BraidDiagram, n: int) -> list[tuple[LaurentPoly, BraidDiagram]]:
    """``S_n(K)`` as ``sum c_m * (m-cable of K)``, highest cable first."""
    d = _as_diagram(d)
    if not isinstance(d, BraidDiagram):
        raise DiagramError("cabling needs a braid presentation")
    if d.component_count() != 1:
        raise DiagramError("cabling needs a single-component closure")
    if n < 0:
        raise DiagramError("color must be nonnegative")
    coeffs = expand(Kind.S, n).coefficients
    return [(LaurentPoly({0: c}), d.cable(m)) for m, c in sorted(coeffs.items(), reverse=True)]


def colored_jones(d: BraidDiagram, n: int, backend: str | None = None) -> LaurentPoly:
    """``J(K, n) = (-1)^n <S_n(K)>`` for a zero-framed knot given as a braid closure."""
    d = _as_diagram(d)
    if not isinstance(d, BraidDiagram):
        raise DiagramError("colored_jones needs a braid presentation")
    if d.component_count() != 1:
        raise DiagramError("colored_jones needs a knot (one component)")
    w = sum(d.self_writhe())
    if w != 0:
        raise DiagramError(f"colored_jones needs writhe 0 (zero framing); got {w}")
    total = LaurentPoly()
    for c, cable in cable_expand(d, n):
        total = total + c * bracket(cable, backend)
    return -total if n % 2 else total
