"""Planar-diagram codes: components, crossing signs, state sums and Kirby-Melvin resolution.

A crossing ``(a, b, c, d)`` lists its four edge labels counterclockwise,
starting from the incoming under-strand, so the under-strand runs ``a -> c``.
The crossing is positive when the over-strand runs ``d -> b``.  The
A-smoothing (coefficient ``t``) joins ``a-b`` and ``c-d``; the B-smoothing
joins ``a-d`` and ``b-c``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .braid import DiagramError

__all__ = ["PDDiagram", "Smoothing", "trace_components"]

# internal connections of a crossing's ports in each local picture
_THROUGH = {0: 2, 2: 0, 1: 3, 3: 1}
_SMOOTH_A = {0: 1, 1: 0, 2: 3, 3: 2}
_SMOOTH_B = {0: 3, 3: 0, 1: 2, 2: 1}


class Smoothing:
    CROSSING = None
    A = "A"
    B = "B"


_LINKS = {None: _THROUGH, "A": _SMOOTH_A, "B": _SMOOTH_B}


def _ports_by_label(crossings) -> dict:
    where: dict = {}
    for ci, cr in enumerate(crossings):
        for k, label in enumerate(cr):
            where.setdefault(label, []).append((ci, k))
    return where


def trace_components(crossings, states=None):
    """Walk the diagram with some crossings replaced by smoothings.

    ``states[c]`` is ``None`` (still a crossing), ``"A"`` or ``"B"``.  Returns
    ``(count, info)`` where ``count`` is the number of closed curves and
    ``info[c]`` for each remaining crossing is
    ``(under component, over component, under entered at a, over entered at d)``.
    Components are oriented by their first under-passage at ``a`` when
    possible, otherwise arbitrarily.
    """
    n = len(crossings)
    states = states or [None] * n
    where = _ports_by_label(crossings)
    seen = set()
    info: dict[int, list] = {c: [None, None, None, None] for c in range(n) if states[c] is None}
    count = 0

    def walk(ci: int, k: int, comp: int) -> None:
        # enter crossing ci at port k
        while (ci, k) not in seen:
            links = _LINKS[states[ci]]
            out = links[k]
            seen.add((ci, k))
            seen.add((ci, out))
            if states[ci] is None:
                slot = info[ci]
                if k in (0, 2):
                    slot[0], slot[2] = comp, k == 0
                else:
                    slot[1], slot[3] = comp, k == 3
            label = crossings[ci][out]
            a, b = where[label]
            ci, k = b if a == (ci, out) else a

    starts = [(c, 0) for c in range(n) if states[c] is None]
    starts += [(c, k) for c in range(n) for k in range(4)]
    for ci, k in starts:
        if (ci, k) in seen:
            continue
        walk(ci, k, count)
        count += 1
    return count, info


@dataclass(frozen=True)
class PDDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    free_loops: int = 0

    def __post_init__(self):
        crossings = tuple(tuple(int(x) for x in cr) for cr in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        for cr in crossings:
            if len(cr) != 4:
                raise DiagramError(f"crossing {cr} must have four labels")
        counts = Counter(x for cr in crossings for x in cr)
        bad = sorted(label for label, k in counts.items() if k != 2)
        if bad:
            raise DiagramError(f"edge labels must occur exactly twice; offending: {bad}")
        if self.free_loops < 0:
            raise DiagramError("free_loops must be nonnegative")

    @classmethod
    def from_json(cls, data: dict) -> PDDiagram:
        if not isinstance(data, dict) or "crossings" not in data:
            raise DiagramError('PD JSON must look like {"crossings": [[a,b,c,d], ...]}')
        return cls(tuple(tuple(c) for c in data["crossings"]), int(data.get("free_loops", 0)))

    def to_json(self) -> dict:
        out = {"crossings": [list(c) for c in self.crossings]}
        if self.free_loops:
            out["free_loops"] = self.free_loops
        return out

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def _walk(self):
        return trace_components(self.crossings)

    def component_count(self) -> int:
        return self._walk()[0] + self.free_loops

    def crossing_signs(self) -> list[int]:
        _, info = self._walk()
        return [(1 if info[c][2] else -1) * (1 if info[c][3] else -1) for c in range(len(self.crossings))]

    def self_writhe(self) -> list[int]:
        """Per component (free loops last), the signed count of self-crossings."""
        count, info = self._walk()
        out = [0] * (count + self.free_loops)
        for c, (under, over, u_in, o_in) in info.items():
            if under == over:
                out[under] += (1 if u_in else -1) * (1 if o_in else -1)
        return out

    def state_sum(self, limit: int = 20) -> dict[int, int]:
        """Kauffman bracket by summing all ``2^c`` smoothings; ``{exponent: coefficient}``."""
        c = len(self.crossings)
        if c > limit:
            raise DiagramError(f"state sum limited to {limit} crossings, got {c}")
        labels = sorted({x for cr in self.crossings for x in cr})
        index = {x: i for i, x in enumerate(labels)}
        pairs_a = [((index[a], index[b]), (index[cc], index[d])) for a, b, cc, d in self.crossings]
        pairs_b = [((index[a], index[d]), (index[b], index[cc])) for a, b, cc, d in self.crossings]
        loops_hist: Counter = Counter()
        for choice in itertools.product((0, 1), repeat=c):
            parent = list(range(len(labels)))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            n_a = 0
            for ci, pick in enumerate(choice):
                pairs = pairs_a[ci] if pick == 0 else pairs_b[ci]
                n_a += pick == 0
                for x, y in pairs:
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[rx] = ry
            loops = len({find(x) for x in range(len(labels))}) + self.free_loops
            loops_hist[(n_a - (c - n_a), loops)] += 1
        return _collect(loops_hist, loop_sign=-1)

    def kirby_melvin(self, limit: int = 12) -> dict[int, int]:
        """RT evaluation by resolving crossings one at a time (mixed and self rules)."""
        n = len(self.crossings)
        if n > limit:
            raise DiagramError(f"Kirby-Melvin resolution limited to {limit} crossings, got {n}")
        hist: Counter = Counter()

        def rec(states: list, shift: int, sign: int) -> None:
            try:
                c = states.index(None)
            except ValueError:
                loops = trace_components(self.crossings, states)[0] + self.free_loops
                hist[(shift, loops)] += sign
                return
            _, info = trace_components(self.crossings, states)
            under, over, u_in, o_in = info[c]
            if under != over:
                rec(states[:c] + ["A"] + states[c + 1 :], shift + 1, sign)
                rec(states[:c] + ["B"] + states[c + 1 :], shift - 1, sign)
            else:
                eps = (1 if u_in else -1) * (1 if o_in else -1)
                rec(states[:c] + ["A"] + states[c + 1 :], shift + 1, sign * eps)
                rec(states[:c] + ["B"] + states[c + 1 :], shift - 1, -sign * eps)

        rec([None] * n, 0, 1)
        return _collect(hist, loop_sign=1)


def _collect(hist: Counter, loop_sign: int) -> dict[int, int]:
    """Sum ``mult * t^shift * (loop_sign (t^2 + t^-2))^loops``."""
    out: dict[int, int] = {}
    power_cache: dict[int, dict[int, int]] = {0: {0: 1}}

    def loop_power(k: int) -> dict[int, int]:
        if k not in power_cache:
            prev = loop_power(k - 1)
            cur: dict[int, int] = {}
            for e, c in prev.items():
                for d in (2, -2):
                    cur[e + d] = cur.get(e + d, 0) + loop_sign * c
            power_cache[k] = {e: c for e, c in cur.items() if c}
        return power_cache[k]

    for (shift, loops), mult in hist.items():
        if not mult:
            continue
        for e, c in loop_power(loops).items():
            out[e + shift] = out.get(e + shift, 0) + mult * c
    return {e: c for e, c in sorted(out.items()) if c}
