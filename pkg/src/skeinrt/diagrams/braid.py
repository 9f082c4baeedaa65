"""Braid words with trace closure: components, writhe, cabling, PD conversion."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["BraidDiagram", "DiagramError"]


class DiagramError(ValueError):
    """Malformed or unsupported diagram."""


@dataclass(frozen=True)
class BraidDiagram:
    """Closure of a braid on ``strands`` strands; ``+i`` is ``sigma_i`` (left strand over)."""

    strands: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(g) for g in self.word))
        if self.strands < 0:
            raise DiagramError("strand count must be nonnegative")
        for g in self.word:
            if g == 0 or abs(g) > self.strands - 1:
                raise DiagramError(f"generator {g} out of range for {self.strands} strands")

    @classmethod
    def from_json(cls, data: dict) -> BraidDiagram:
        if not isinstance(data, dict) or set(data) - {"strands", "word"} or "strands" not in data:
            raise DiagramError('braid JSON must look like {"strands": k, "word": [...]}')
        return cls(int(data["strands"]), tuple(data.get("word", ())))

    def to_json(self) -> dict:
        return {"strands": self.strands, "word": list(self.word)}

    @property
    def crossing_count(self) -> int:
        return len(self.word)

    def permutation(self) -> list[int]:
        """``perm[p]``: top position reached by the strand starting at bottom position ``p``."""
        at = list(range(self.strands))  # at[pos] = starting position of the strand there
        for g in self.word:
            i = abs(g) - 1
            at[i], at[i + 1] = at[i + 1], at[i]
        perm = [0] * self.strands
        for pos, start in enumerate(at):
            perm[start] = pos
        return perm

    def component_of_strand(self) -> list[int]:
        """Component index for each starting position, numbered by smallest position."""
        perm = self.permutation()
        comp = [-1] * self.strands
        count = 0
        for p in range(self.strands):
            if comp[p] >= 0:
                continue
            q = p
            while comp[q] < 0:
                comp[q] = count
                q = perm[q]
            count += 1
        return comp

    def component_count(self) -> int:
        return len(set(self.component_of_strand()))

    def self_writhe(self) -> list[int]:
        """Per component, the signed count of crossings between two of its own arcs."""
        comp = self.component_of_strand()
        out = [0] * (max(comp) + 1 if comp else 0)
        at = list(range(self.strands))
        for g in self.word:
            i = abs(g) - 1
            a, b = comp[at[i]], comp[at[i + 1]]
            if a == b:
                out[a] += 1 if g > 0 else -1
            at[i], at[i + 1] = at[i + 1], at[i]
        return out

    def cable(self, m: int) -> BraidDiagram:
        """Blackboard ``m``-parallel: each crossing becomes an ``m x m`` block of the same sign."""
        if m < 0:
            raise DiagramError("cable multiplicity must be nonnegative")
        if m == 0:
            return BraidDiagram(0, ())
        word = []
        for g in self.word:
            sign = 1 if g > 0 else -1
            base = (abs(g) - 1) * m  # first position of the left group, 0-based
            # move the left group's strands across the right group, rightmost first
            for a in reversed(range(m)):
                for b in range(m):
                    word.append(sign * (base + a + b + 1))
        return BraidDiagram(self.strands * m, tuple(word))

    def to_pd(self):
        """PD code of the closure; untouched strands become free loops."""
        from .pd import PDDiagram

        bottom = list(range(1, self.strands + 1))
        cur = list(bottom)
        nxt = self.strands + 1
        crossings = []
        for g in self.word:
            i = abs(g) - 1
            in_l, in_r = cur[i], cur[i + 1]
            out_l, out_r = nxt, nxt + 1
            nxt += 2
            if g > 0:
                crossings.append([in_r, out_r, out_l, in_l])
            else:
                crossings.append([in_l, in_r, out_r, out_l])
            cur[i], cur[i + 1] = out_l, out_r
        relabel = {top: bot for top, bot in zip(cur, bottom) if top != bot}
        crossings = [tuple(relabel.get(x, x) for x in cr) for cr in crossings]
        touched = {abs(g) - 1 for g in self.word} | {abs(g) for g in self.word}
        free = self.strands - len(touched)
        return PDDiagram(tuple(crossings), free)

    def rotated(self, r: int) -> BraidDiagram:
        """Cyclic rotation of the word (a conjugation, so the closure is unchanged)."""
        if not self.word:
            return self
        r %= len(self.word)
        return BraidDiagram(self.strands, self.word[r:] + self.word[:r])
