"""Compare the compiled and pure-Python Temperley-Lieb kernels.

Run from the repository root after installing the package::

    python3 benchmarks/bench_tl.py            # default cases
    python3 benchmarks/bench_tl.py --max-cable 4 --repeat 3

Both kernels get the same contraction program; results are checked for
equality before any timing is reported.
"""

from __future__ import annotations

import argparse
import time

from skeinrt.data import FIGURE_EIGHT_BRAID, TREFOIL_ZERO_WRITHE_BRAID
from skeinrt.diagrams import BraidDiagram
from skeinrt.diagrams._tl_py import BIRTH_LEFT, BIRTH_RIGHT, DEATH_LEFT, DEATH_RIGHT
from skeinrt.diagrams.tl import contract, contract_compiled, plan


def _best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def peak_width(program) -> int:
    width = peak = 0
    for op, _pos, _sign in program:
        if op in (BIRTH_LEFT, BIRTH_RIGHT):
            width += 1
        elif op in (DEATH_LEFT, DEATH_RIGHT):
            width -= 1
        peak = max(peak, width)
    return peak


def cases(max_cable: int):
    for name, data in (("figure-eight", FIGURE_EIGHT_BRAID), ("trefoil-writhe-0", TREFOIL_ZERO_WRITHE_BRAID)):
        knot = BraidDiagram.from_json(data)
        for m in range(1, max_cable + 1):
            cable = knot.cable(m)
            yield f"{name} {m}-cable", cable


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-cable", type=int, default=3)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    if contract_compiled is None:
        print("compiled kernel not available; only the Python kernel can be timed")
    print(f"{'case':28} {'strands':>7} {'width':>5} {'python s':>10} {'compiled s':>10} {'speedup':>8}")
    for label, d in cases(args.max_cable):
        program, _free = plan(d.strands, list(d.word))
        width = peak_width(program)
        py = contract(program, "python")
        t_py = _best(lambda: contract(program, "python"), args.repeat)
        if contract_compiled is not None:
            assert contract(program, "compiled") == py, f"kernels disagree on {label}"
            t_c = _best(lambda: contract(program, "compiled"), args.repeat)
            print(f"{label:28} {d.strands:7d} {width:5d} {t_py:10.4f} {t_c:10.4f} {t_py / t_c:7.1f}x")
        else:
            print(f"{label:28} {d.strands:7d} {width:5d} {t_py:10.4f} {'-':>10} {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
