"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (degenerate parameter, no
solution, ...), 2 on a usage error. Output is table text by default, JSON with
``--format json`` or ``BSTRIPLES_FORMAT=json``.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from . import group, involution, quadratic, triples
from .errors import DomainError
from .triples import PythTriple, RationalTriple, format_fraction, triple_to_json

ENV_FORMAT = "BSTRIPLES_FORMAT"

# tokens such as -2/1 or -4,3,5 are values, not options
_NEGATIVE_VALUE = re.compile(r"^-\d[\d/,\-]*$")


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_VALUE


def _fraction(text: str) -> Fraction:
    try:
        return triples.parse_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad fraction {text!r}: {exc}") from None


def _triple(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected a,b,c, got {text!r}")
    try:
        vals = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad triple {text!r}") from None
    try:
        if all(v.denominator == 1 for v in vals):
            return PythTriple(*(int(v) for v in vals))
        return RationalTriple(*vals)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _word(text: str):
    try:
        return involution.parse_word(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _cm2a(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        v = None
    if v not in quadratic.CMINUS2A_KINDS:
        raise argparse.ArgumentTypeError("c - 2a family must be one of 1, -1, 3, -3")
    return v


class Output:
    def __init__(self, mode: str, stream: TextIO):
        self.mode = mode
        self.stream = stream

    @property
    def json(self) -> bool:
        return self.mode == "json"

    def emit(self, text: str, obj) -> None:
        if self.json:
            self.stream.write(json.dumps(obj, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")

    def table(self, header: list[str], rows: list[list[str]]) -> None:
        widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
                  for i, h in enumerate(header)]
        for line in [header] + rows:
            self.stream.write("  ".join(c.rjust(w) for c, w in zip(line, widths)).rstrip() + "\n")


def _tj(t) -> dict:
    return triple_to_json(t)


# --- subcommand handlers ------------------------------------------------------


def cmd_param(args, out: Output) -> None:
    t = triples.from_param(args.r)
    out.emit(str(t), {"r": format_fraction(args.r), "triple": _tj(t)})


def cmd_unparam(args, out: Output) -> None:
    if len(args.entries) == 1:
        t = _triple(args.entries[0])
    elif len(args.entries) == 3:
        t = _triple(",".join(args.entries))
    else:
        raise argparse.ArgumentTypeError("unparam takes a b c or a,b,c")
    r = triples.to_param(t)
    out.emit(format_fraction(r), {"triple": _tj(t), "r": format_fraction(r)})


def cmd_mul(args, out: Output) -> None:
    t = group.bs_product(args.t1, args.t2)
    out.emit(str(t), {"triple": _tj(t)})


def cmd_inv(args, out: Output) -> None:
    t = group.inverse(args.t)
    out.emit(str(t), {"triple": _tj(t)})


def cmd_swap(args, out: Output) -> None:
    t = involution.swap(args.t)
    out.emit(str(t), {"triple": _tj(t)})


def cmd_cayley(args, out: Output) -> None:
    r = involution.cayley(args.r)
    out.emit(format_fraction(r), {"r": format_fraction(args.r), "image": format_fraction(r)})


def cmd_decompose(args, out: Output) -> None:
    w = involution.decompose(args.r)
    value = involution.evaluate(w)
    prim = triples.normalize_primitive(value)
    if out.json:
        out.emit("", {"r": format_fraction(args.r), "word": str(w),
                      "value": _tj(value), "primitive": _tj(prim)})
    else:
        out.stream.write(f"{w}\nvalue     {value}\nprimitive {prim}\n")


def cmd_eval(args, out: Output) -> None:
    value = involution.evaluate(args.word)
    prim = triples.normalize_primitive(value)
    if out.json:
        out.emit("", {"word": str(args.word), "value": _tj(value), "primitive": _tj(prim)})
    else:
        out.stream.write(f"{value}\nprimitive {prim}\n")


def cmd_factor(args, out: Output) -> None:
    word = group.generator_factorization(args.r)
    if out.json:
        out.emit("", {"r": format_fraction(args.r),
                      "factors": [{"generator": _tj(g), "exponent": e} for g, e in word]})
    else:
        out.table(["generator", "exponent"], [[str(g), str(e)] for g, e in word])


def cmd_nf(args, out: Output) -> None:
    nf = group.normal_form(args.t)
    code = nf.to_json()
    out.emit(f"scalar {code['scalar']}  r {code['r']}  klein {code['klein']}", code)


def cmd_stat(args, out: Output) -> None:
    fn = {"height": triples.height, "excess": triples.excess, "increment": triples.increment}
    v = fn[args.command](args.t)
    out.emit(str(v), {"triple": _tj(args.t), args.command: str(v)})


def cmd_unit(args, out: Output) -> None:
    u = quadratic.fundamental_unit(args.d)
    out.emit(str(u), {"d": u.d, "x": str(u.x), "y": str(u.y), "norm": str(u.norm())})


def cmd_family(args, out: Output) -> None:
    if args.diff_ab is not None:
        members = quadratic.family_diff_ab(args.diff_ab, args.count)
        if out.json:
            for m in members:
                out.emit("", {
                    "j": m.j, "r": format_fraction(m.r), "triple": _tj(m.triple),
                    "diff": str(m.diff), "image_r": format_fraction(m.image_r),
                    "image": _tj(m.image),
                    "base": {"d": m.base.d, "x": str(m.base.x), "y": str(m.base.y)},
                })
        else:
            out.table(
                ["j", "base", "r", "triple", "swap r", "swap triple", "|a-b|"],
                [[str(m.j), str(m.base), format_fraction(m.r), str(m.triple),
                  format_fraction(m.image_r), str(m.image), str(m.diff)] for m in members],
            )
        return
    rows = []
    for j in range(1, args.count + 1):
        r, t = quadratic.cminus2a_family(args.c_minus_2a, j)
        rows.append((j, r, t, t.c - 2 * t.a, t.b == 0))
    if out.json:
        for j, r, t, d, flag in rows:
            out.emit("", {"j": j, "r": format_fraction(r), "triple": _tj(t),
                          "diff": str(d), "b_zero": flag})
    else:
        out.table(["j", "r", "triple", "c-2a", "note"],
                  [[str(j), format_fraction(r), str(t), str(d), "b=0" if flag else ""]
                   for j, r, t, d, flag in rows])


def cmd_seq(args, out: Output) -> None:
    names = {"st": ("s", "t"), "xieta": ("xi", "eta"), "lambdamu": ("lambda", "mu")}[args.kind]
    d = quadratic.SEQUENCES[args.kind][0]
    rows = []
    for j in range(args.start, args.stop + 1):
        x, y = quadratic.unit_seq(args.kind, j)
        rows.append((j, x, y, x * x - d * y * y))
    if out.json:
        for j, x, y, nrm in rows:
            out.emit("", {"j": j, names[0]: str(x), names[1]: str(y), "norm": str(nrm)})
    else:
        out.table(["j", names[0], names[1], "norm"], [[str(v) for v in row] for row in rows])


def cmd_verify(args, out: Output) -> int:
    from .verify import VerifyConfig, run_all

    cfg = VerifyConfig(
        cmax=args.cmax,
        samples=args.samples,
        seed=args.seed,
        involution_bound=args.involution_bound,
        generation_bound=args.generation_bound,
        semigroup_exhaustive_bound=args.semigroup_exhaustive,
    )
    results = run_all(cfg)
    for res in results:
        if out.json:
            out.emit("", {"suite": res.name, "passed": res.passed, "checked": res.checked,
                          "failures": res.failure_count})
        else:
            out.stream.write(res.line() + "\n")
            for msg in res.failures:
                out.stream.write(f"      {msg}\n")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    env_mode = os.environ.get(ENV_FORMAT, "table")
    p = _Parser(prog="bstriples", description="Group structure on Pythagorean triples.")
    p.add_argument("--format", choices=["table", "json"],
                   default=env_mode if env_mode in ("table", "json") else "table")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("param", help="primitive triple of a fraction m/n")
    s.add_argument("r", type=_fraction)
    s.set_defaults(func=cmd_param)

    s = sub.add_parser("unparam", help="parameter r of a triple")
    s.add_argument("entries", nargs="+", metavar="a b c")
    s.set_defaults(func=cmd_unparam)

    s = sub.add_parser("mul", help="product of two triples")
    s.add_argument("t1", type=_triple)
    s.add_argument("t2", type=_triple)
    s.set_defaults(func=cmd_mul)

    s = sub.add_parser("inv", help="group inverse of a triple")
    s.add_argument("t", type=_triple)
    s.set_defaults(func=cmd_inv)

    s = sub.add_parser("swap", help="swap the legs")
    s.add_argument("t", type=_triple)
    s.set_defaults(func=cmd_swap)

    s = sub.add_parser("cayley", help="(r+1)/(r-1)")
    s.add_argument("r", type=_fraction)
    s.set_defaults(func=cmd_cayley)

    s = sub.add_parser("decompose", help="word over G=(4,3,5), S=(-1,0,1)")
    s.add_argument("r", type=_fraction)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("eval", help="evaluate a word")
    s.add_argument("word", type=_word)
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("factor", help="factor over the sign and prime generators")
    s.add_argument("r", type=_fraction)
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("nf", help="normal form (scalar, r, Klein signs)")
    s.add_argument("t", type=_triple)
    s.set_defaults(func=cmd_nf)

    for name in ("height", "excess", "increment"):
        s = sub.add_parser(name, help=f"{name} of a triple")
        s.add_argument("t", type=_triple)
        s.set_defaults(func=cmd_stat)

    s = sub.add_parser("unit", help="fundamental unit of Z[sqrt d]")
    s.add_argument("d", type=int)
    s.set_defaults(func=cmd_unit)

    s = sub.add_parser("family", help="triples with prescribed |a-b| or c-2a")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--diff-ab", type=int, metavar="D")
    g.add_argument("--c-minus-2a", type=_cm2a, metavar="{1,-1,3,-3}")
    s.add_argument("--count", type=int, default=5)
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("seq", help="unit power sequences")
    s.add_argument("kind", choices=["st", "xieta", "lambdamu"])
    s.add_argument("--from", dest="start", type=int, default=0)
    s.add_argument("--to", dest="stop", type=int, default=10)
    s.set_defaults(func=cmd_seq)

    s = sub.add_parser("verify", help="oracle bijection and invariant suites")
    s.add_argument("--cmax", type=int, default=1000)
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--involution-bound", type=int, default=100)
    s.add_argument("--generation-bound", type=int, default=60)
    s.add_argument("--semigroup-exhaustive", type=int, default=0, metavar="BOUND",
                   help="also check every fraction pair with entries <= BOUND (numba)")
    s.set_defaults(func=cmd_verify)

    # accept --format after the subcommand too; SUPPRESS keeps the global value otherwise
    for child in sub.choices.values():
        child.add_argument("--format", choices=["table", "json"], default=argparse.SUPPRESS)
    return p


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.format, stdout)
    try:
        code = args.func(args, out)
    except argparse.ArgumentTypeError as exc:
        stderr.write(f"bstriples: error: {exc}\n")
        return 2
    except DomainError as exc:
        stderr.write(f"bstriples: {type(exc).__name__}: {exc}\n")
        return 1
    return code or 0


def main() -> None:
    sys.exit(run())
