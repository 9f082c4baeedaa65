"""``skeinrt`` command line.

Exit codes: 0 pass, 1 fail, 2 report-only, 3 bad input or usage.
Element arguments are a JSON file, ``-`` for stdin, or inline text such as
``"t*(1,1)_T + (0,1)_T"``, ``"S_1"`` or ``"x^2Y + 1"``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import golden
from .scenarios import EXIT_CODES, FAIL, PASS, REPORT, SCENARIOS, run_scenario
from .skein_modules import Fig8Element, SolidTorusElement, Theory, act_fig8, act_solid_torus, storage_to_yz
from .torus import TorusElement

EXIT_USAGE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse would exit 2, which is reserved for report-only results
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    try:
        if Path(arg).is_file():
            return Path(arg).read_text()
    except OSError:  # inline text too long to be a file name
        pass
    return arg


def _load(arg: str, cls):
    text = _read(arg).strip()
    try:
        if text[:1] in "[{":
            return cls.from_json(json.loads(text))
        return cls.parse(text)
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"cannot read {cls.__name__} from {arg!r}: {exc}") from exc


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_mul(args) -> int:
    a = _load(args.a, TorusElement)
    b = _load(args.b, TorusElement)
    prod = a * b
    _emit(args, {"product": prod.to_json()}, str(prod))
    return 0


def cmd_act(args) -> int:
    theory = Theory.coerce(args.theory)
    a = _load(args.algebra, TorusElement)
    if args.module == "solid-torus":
        w = _load(args.element, SolidTorusElement)
        out = act_solid_torus(theory, a, w)
    else:
        w = _load(args.element, Fig8Element)
        out = act_fig8(theory, a, w)
        if args.basis == "table":
            out = storage_to_yz(theory, out)
    _emit(args, {"theory": theory.value, "module": args.module, "result": out.to_json()}, str(out))
    return 0


def cmd_verify(args) -> int:
    names = list(SCENARIOS) if args.scenario == "all" else [args.scenario]
    statuses = []
    for name in names:
        result = run_scenario(name, args.seed)
        statuses.append(result.status)
        if args.format == "json":
            print(json.dumps(result.to_json(), sort_keys=True), flush=True)
        else:
            print(f"{result.status.upper():6} {name:20} {result.duration:7.3f}s", flush=True)
            if result.status != PASS:
                print("       " + json.dumps(result.payload, sort_keys=True)[:2000])
    if FAIL in statuses:
        return EXIT_CODES[FAIL]
    if REPORT in statuses:
        return EXIT_CODES[REPORT]
    return EXIT_CODES[PASS]


def _reference(arg: str):
    from .data import printed_recurrence
    from .recurrence import parse_recurrence

    if arg == "printed":
        return printed_recurrence(fixed=True)
    if arg == "printed-literal":
        return printed_recurrence(fixed=False)
    try:
        return parse_recurrence(_read(arg))
    except ValueError as exc:
        raise UsageError(f"cannot read recurrence from {arg!r}: {exc}") from exc


def cmd_recur(args) -> int:
    from .recurrence import Recurrence, clearing_monomial, peripheral_to_recurrence, recurrence_equal
    from .torus import embed_quantum_torus

    e = _load(args.element, TorusElement)
    P = peripheral_to_recurrence(e)
    clearing = clearing_monomial(embed_quantum_torus(e)) if e else (0, 0)
    rec = Recurrence.from_qt(P)
    payload = {"operator": P.to_json(), "recurrence": rec.pretty(), "clearing": clearing}
    lines = [rec.pretty(), f"cleared by L^{clearing[0]} M^{clearing[1]}"]
    code = 0
    if args.reference:
        ref = _reference(args.reference).to_qt()
        cmp = recurrence_equal(P, ref)
        payload["comparison"] = cmp.status
        payload["unit"] = list(cmp.unit) if cmp.unit else None
        if cmp.status == "equal-up-to-unit":
            sign, e_t, la, mb = cmp.unit
            lines.append(f"matches reference up to {'-' if sign < 0 else ''}t^{e_t} L^{la} M^{mb}")
        elif cmp:
            lines.append("matches reference exactly")
        else:
            key, mine, theirs = cmp.diff
            payload["first_residual"] = {"monomial": list(key), "derived": str(mine), "reference": str(theirs)}
            lines.append(f"differs from reference at L^{key[0]} M^{key[1]}: {mine} vs {theirs}")
            code = 1
    _emit(args, payload, "\n".join(lines))
    return code


def cmd_calibrate(args) -> int:
    from .calibrate import calibrate

    cal = calibrate(bless=args.bless, seed=args.seed)
    payload = cal.to_json()
    payload["unique"] = cal.unique
    if cal.unique:
        payload["selected"] = cal.conventions().to_json()
    text = json.dumps(payload, indent=2, sort_keys=True)
    _emit(args, payload, text)
    return 0 if cal.unique else 1


def cmd_golden(args) -> int:
    if args.bless:
        written = golden.bless()
        _emit(args, {"blessed": written}, "\n".join(f"blessed {n}" for n in written))
        return 0
    status = golden.check()
    _emit(args, status, "\n".join(f"{v:8} {k}" for k, v in status.items()))
    return 0 if all(v == "ok" for v in status.values()) else 1


def cmd_oracle(args) -> int:
    from .diagrams import bracket, colored_jones, kirby_melvin_eval, rt_jones
    from .diagrams.braid import DiagramError

    try:
        data = json.loads(_read(args.diagram))
        fn = {"bracket": bracket, "rt-jones": rt_jones, "kirby-melvin": kirby_melvin_eval}.get(args.invariant)
        value = fn(data) if fn else colored_jones(data, args.color)
    except (ValueError, DiagramError) as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, {"invariant": args.invariant, "value": value.to_json()}, str(value))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--theory", choices=["kauffman", "rt"], default="rt")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = _Parser(prog="skeinrt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("mul", parents=[common], help="multiply two torus skein algebra elements")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("act", parents=[common], help="act on a solid torus or figure-eight module element")
    p.add_argument("--module", choices=["solid-torus", "fig8"], required=True)
    p.add_argument("--basis", choices=["storage", "table"], default="storage", help="fig8 output basis")
    p.add_argument("algebra")
    p.add_argument("element")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("verify", parents=[common], help="run verification scenarios (JSON lines with --format json)")
    p.add_argument("--scenario", choices=[*SCENARIOS, "all"], default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("recur", parents=[common], help="turn a peripheral ideal element into a recurrence")
    p.add_argument("element")
    p.add_argument(
        "--reference",
        help="'printed', 'printed-literal', or a file/text with a recurrence to compare against",
    )
    p.set_defaults(func=cmd_recur)

    p = sub.add_parser("calibrate", parents=[common], help="re-derive the frozen conventions")
    p.add_argument("--bless", action="store_true", help="rewrite conventions.json")
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("golden", parents=[common], help="compare (or --bless) the golden files")
    p.add_argument("--bless", action="store_true")
    p.set_defaults(func=cmd_golden)

    p = sub.add_parser("oracle", parents=[common], help="evaluate a braid or PD diagram (JSON)")
    p.add_argument("diagram")
    p.add_argument("--invariant", choices=["bracket", "rt-jones", "kirby-melvin", "colored-jones"], default="bracket")
    p.add_argument("--color", type=int, default=1)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"skeinrt: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
