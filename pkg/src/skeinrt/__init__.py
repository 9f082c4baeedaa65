"""Exact computations in Kauffman bracket and Reshetikhin-Turaev skein modules.

Laurent polynomials, Chebyshev bases, the torus skein algebra and its action
on solid-torus and figure-eight-complement skein modules, the sign transfer
between the two theories, recurrences for colored Jones sequences, and an
independent diagram evaluator used as an oracle.
"""

from __future__ import annotations

from .laurent import ONE, ZERO, LaurentPoly, t, unit_monomial
from .quantum_torus import QTElement
from .skein_modules import Fig8Element, SolidTorusElement, Theory, act_fig8, act_solid_torus
from .torus import TorusElement, embed_quantum_torus, multiply

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "t",
    "unit_monomial",
    "TorusElement",
    "multiply",
    "embed_quantum_torus",
    "QTElement",
    "Theory",
    "SolidTorusElement",
    "Fig8Element",
    "act_solid_torus",
    "act_fig8",
]
