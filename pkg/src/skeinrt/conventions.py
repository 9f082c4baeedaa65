"""Frozen sign and ordering conventions.

The values live in ``conventions.json`` next to this module.  They are not
guessed: :mod:`skeinrt.calibrate` re-derives each one from the defining
identities, and ``skeinrt calibrate --bless`` rewrites the file.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path

CONVENTIONS_PATH = Path(__file__).with_name("conventions.json")

EVALUATION_ORDERS = ("operator", "weight-first")
Z_ROW_READINGS = ("printed", "mirror")


@dataclass(frozen=True)
class Conventions:
    # exponent sign s in the balanced monomial e(p, q) = t^(s p q) l^p m^q
    embedding_sign: int
    # how (L^a M^b f)(n) is evaluated, see quantum_torus.act_sequence
    evaluation_order: str
    # M f(n) = t^(2(n + weight_offset)) f(n); 1 means weights use the dimension n+1
    weight_offset: int
    # reading of the extra t^(q-4) factor in the (1,q)_T Z row of the figure-eight tables
    z_row_reading: str
    clearing: str = "left L^A M^B, minimal"

    def __post_init__(self):
        if self.embedding_sign not in (1, -1):
            raise ValueError("embedding_sign must be +1 or -1")
        if self.evaluation_order not in EVALUATION_ORDERS:
            raise ValueError(f"evaluation_order must be one of {EVALUATION_ORDERS}")
        if self.weight_offset not in (0, 1):
            raise ValueError("weight_offset must be 0 or 1")
        if self.z_row_reading not in Z_ROW_READINGS:
            raise ValueError(f"z_row_reading must be one of {Z_ROW_READINGS}")

    def to_json(self) -> dict:
        return asdict(self)


def load(path: Path = CONVENTIONS_PATH) -> Conventions:
    return Conventions(**json.loads(path.read_text()))


def save(conv: Conventions, path: Path = CONVENTIONS_PATH) -> None:
    path.write_text(json.dumps(conv.to_json(), indent=2) + "\n")


CONVENTIONS = load()
