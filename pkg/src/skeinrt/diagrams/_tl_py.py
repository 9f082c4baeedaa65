"""Pure-Python Temperley-Lieb contraction kernel.

Same contract as the compiled ``_tl_core.contract``: run a program of
crossing, birth and death operations on planar matchings and return the
bracket as ``{exponent: coefficient}``.  Python integers never overflow, so
this is also the fallback when the compiled kernel reports an overflow.

A state is a non-crossing matching of the ``2w`` boundary points of a strip
of width ``w``, read in circular order: bottoms left to right, then tops
right to left.  It is encoded as a Dyck word, bit ``k`` set when point ``k``
opens an arc.
"""

from __future__ import annotations

CROSS, BIRTH_LEFT, BIRTH_RIGHT, DEATH_LEFT, DEATH_RIGHT = range(5)


def decode(key: int, n: int) -> list[int]:
    partner = [0] * n
    stack = []
    for k in range(n):
        if (key >> k) & 1:
            stack.append(k)
        else:
            j = stack.pop()
            partner[j] = k
            partner[k] = j
    return partner


def encode(partner: list[int]) -> int:
    key = 0
    for k, j in enumerate(partner):
        if j > k:
            key |= 1 << k
    return key


def _join_and_drop(partner: list[int], p: int, q: int) -> tuple[list[int], bool]:
    """Connect points ``p`` and ``q`` to each other, then delete them."""
    loop = partner[p] == q
    if not loop:
        a, b = partner[p], partner[q]
        partner[a], partner[b] = b, a
    keep = [k for k in range(len(partner)) if k != p and k != q]
    where = {old: new for new, old in enumerate(keep)}
    return [where[partner[k]] for k in keep], loop


def _add(row: dict, src: dict, shift: int, scale: int = 1) -> None:
    for e, c in src.items():
        e2 = e + shift
        v = row.get(e2, 0) + scale * c
        if v:
            row[e2] = v
        else:
            row.pop(e2, None)


def _add_loop(row: dict, src: dict, shift: int) -> None:
    # multiply by the loop value -t^2 - t^-2
    _add(row, src, shift + 2, -1)
    _add(row, src, shift - 2, -1)


def contract(program) -> dict[int, int]:
    """Evaluate a contraction program starting from the empty strip."""
    width = 0
    states: dict[int, dict[int, int]] = {0: {0: 1}}
    for op in program:
        code, pos, sign = op[0], op[1], op[2]
        n = 2 * width
        new: dict[int, dict[int, int]] = {}
        if code == CROSS:
            p, q = n - 1 - pos, n - 2 - pos
            for key, row in states.items():
                _add(new.setdefault(key, {}), row, sign)
                partner = decode(key, n)
                if partner[p] == q:
                    _add_loop(new.setdefault(key, {}), row, -sign)
                    continue
                a, b = partner[p], partner[q]
                partner[a], partner[b] = b, a
                partner[p], partner[q] = q, p
                _add(new.setdefault(encode(partner), {}), row, -sign)
        elif code == BIRTH_LEFT:
            new = {1 | (key << 1): row for key, row in states.items()}
            width += 1
        elif code == BIRTH_RIGHT:
            low_mask = (1 << width) - 1
            new = {
                (key & low_mask) | (1 << width) | ((key >> width) << (width + 2)): row
                for key, row in states.items()
            }
            width += 1
        elif code in (DEATH_LEFT, DEATH_RIGHT):
            p, q = (0, n - 1) if code == DEATH_LEFT else (width - 1, width)
            for key, row in states.items():
                partner, loop = _join_and_drop(decode(key, n), p, q)
                target = new.setdefault(encode(partner), {})
                if loop:
                    _add_loop(target, row, 0)
                else:
                    _add(target, row, 0)
            width -= 1
        else:
            raise ValueError(f"unknown opcode {code}")
        states = {k: r for k, r in new.items() if r}
        if not states:
            return {}
    if width != 0:
        raise ValueError("program must end with an empty strip")
    return dict(sorted(states.get(0, {}).items()))
