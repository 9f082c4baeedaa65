"""Independent evaluator for framed links given as braid closures or PD codes."""

from __future__ import annotations

from .braid import BraidDiagram
from .pd import PDDiagram
from .oracle import (
    bracket,
    cable_expand,
    colored_jones,
    kirby_melvin_eval,
    rt_jones,
    self_writhe,
)
from .tl import BACKEND, contract

__all__ = [
    "BraidDiagram",
    "PDDiagram",
    "bracket",
    "cable_expand",
    "colored_jones",
    "kirby_melvin_eval",
    "rt_jones",
    "self_writhe",
    "contract",
    "BACKEND",
]
