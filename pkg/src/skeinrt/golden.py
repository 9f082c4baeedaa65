"""Golden outputs kept in ``golden/*.json`` and compared on demand.

The files are written only by :func:`bless` (``skeinrt golden --bless``);
:func:`check` recomputes every case and reports the ones that moved.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Callable

from .data import ideal_element
from .recurrence import Recurrence, peripheral_to_recurrence
from .skein_modules import Fig8Element, SolidTorusElement, Theory, act_fig8, act_fig8_generator, act_solid_torus
from .torus import TorusElement

GOLDEN_DIR = Path(__file__).with_name("golden")


def _fig8_empty(theory: Theory) -> dict:
    a = TorusElement.basis(1, 0)
    return {
        "theory": theory.value,
        "algebra": a.to_json(),
        "module": Fig8Element.empty().to_json(),
        "table_basis": act_fig8_generator(theory, 0, "1").to_json(),
        "storage_basis": act_fig8(theory, a, Fig8Element.empty()).to_json(),
    }


def _fig8_longitude_rt() -> dict:
    a = TorusElement.basis(2, 1)
    return {
        "algebra": a.to_json(),
        "storage_basis": act_fig8(Theory.RT, a, Fig8Element.empty()).to_json(),
    }


def _solid_torus_examples() -> dict:
    out = {}
    for theory in Theory:
        for p, q, j in ((1, 0, 1), (0, 1, 0), (2, 3, 2)):
            image = act_solid_torus(theory, TorusElement.basis(p, q), SolidTorusElement.s(j))
            out[f"{theory.value}:({p},{q})_T.S_{j}"] = image.to_json()
    return out


def _product_examples() -> dict:
    pairs = (((1, 0), (0, 1)), ((1, 2), (1, 2)), ((2, 3), (1, -1)))
    return {
        f"({a[0]},{a[1]})_T*({b[0]},{b[1]})_T": (TorusElement.basis(*a) * TorusElement.basis(*b)).to_json()
        for a, b in pairs
    }


def _recurrence_rt() -> dict:
    P = peripheral_to_recurrence(ideal_element(Theory.RT))
    return {"operator": P.to_json(), "pretty": Recurrence.from_qt(P).pretty()}


CASES: dict[str, Callable[[], dict]] = {
    "rt_fig8_1_0_on_empty": lambda: _fig8_empty(Theory.RT),
    "kauffman_fig8_1_0_on_empty": lambda: _fig8_empty(Theory.KAUFFMAN),
    "rt_fig8_2_1_on_empty": _fig8_longitude_rt,
    "solid_torus_examples": _solid_torus_examples,
    "torus_products": _product_examples,
    "rt_recurrence": _recurrence_rt,
}


def _path(name: str) -> Path:
    return GOLDEN_DIR / f"{name}.json"


def _normalize(value):
    # round-trip through JSON so tuples and lists compare equal
    return json.loads(json.dumps(value))


def check() -> dict[str, str]:
    """``{case: "ok" | "missing" | "changed"}``."""
    status = {}
    for name, make in CASES.items():
        path = _path(name)
        if not path.exists():
            status[name] = "missing"
            continue
        stored = json.loads(path.read_text())
        status[name] = "ok" if stored == _normalize(make()) else "changed"
    return status


def bless() -> list[str]:
    GOLDEN_DIR.mkdir(exist_ok=True)
    for name, make in CASES.items():
        _path(name).write_text(json.dumps(_normalize(make()), indent=1, sort_keys=True) + "\n")
    return sorted(CASES)
