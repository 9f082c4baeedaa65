"""A fixed corpus of small diagrams for cross-validating the evaluators."""

from __future__ import annotations

import random

from .braid import BraidDiagram
from .pd import PDDiagram

__all__ = ["NAMED_BRAIDS", "NAMED_PD", "random_braids", "corpus"]

NAMED_BRAIDS: dict[str, BraidDiagram] = {
    "unknot": BraidDiagram(1, ()),
    "unlink-2": BraidDiagram(2, ()),
    "unlink-3": BraidDiagram(3, ()),
    "kink+": BraidDiagram(2, (1,)),
    "kink-": BraidDiagram(2, (-1,)),
    "hopf+": BraidDiagram(2, (1, 1)),
    "hopf-": BraidDiagram(2, (-1, -1)),
    "trefoil": BraidDiagram(2, (1, 1, 1)),
    "trefoil-mirror": BraidDiagram(2, (-1, -1, -1)),
    "figure-eight": BraidDiagram(3, (1, -2, 1, -2)),
    "trefoil-writhe-0": BraidDiagram(5, (1, 1, 1, -2, -3, -4)),
    "torus-2-4": BraidDiagram(2, (1, 1, 1, 1)),
    "cinquefoil": BraidDiagram(2, (1, 1, 1, 1, 1)),
    "three-twist": BraidDiagram(3, (1, 1, 1, 2, -1, 2)),
    "borromean": BraidDiagram(3, (1, -2, 1, -2, 1, -2)),
    "torus-3-3": BraidDiagram(3, (1, 2, 1, 2, 1, 2)),
    "torus-3-4": BraidDiagram(3, (1, 2, 1, 2, 1, 2, 1, 2)),
    "split-hopf-unknot": BraidDiagram(4, (1, 1)),
    "chain-4": BraidDiagram(4, (1, 1, 2, 2, 3, 3)),
}

# standard PD codes (incoming under-strand first, counterclockwise)
NAMED_PD: dict[str, PDDiagram] = {
    "pd-trefoil": PDDiagram(((1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2))),
    "pd-figure-eight": PDDiagram(((4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8))),
    "pd-hopf": PDDiagram(((4, 1, 3, 2), (2, 3, 1, 4))),
    "pd-unknot": PDDiagram((), 1),
    "pd-two-unknots": PDDiagram((), 2),
}


def random_braids(count: int = 24, seed: int = 7, max_strands: int = 5, max_len: int = 10) -> dict[str, BraidDiagram]:
    rng = random.Random(seed)
    out = {}
    for k in range(count):
        strands = rng.randint(2, max_strands)
        length = rng.randint(1, max_len)
        word = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length))
        out[f"random-{k}"] = BraidDiagram(strands, word)
    return out


def corpus(max_crossings: int = 10) -> dict[str, BraidDiagram | PDDiagram]:
    """Every named and random diagram with at most ``max_crossings`` crossings."""
    items: dict = {}
    items.update(NAMED_BRAIDS)
    items.update(random_braids())
    items.update(NAMED_PD)
    return {k: d for k, d in items.items() if d.crossing_count <= max_crossings}
