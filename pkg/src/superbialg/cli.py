"""Command line front end.

Exit codes: 0 = success / all checks pass, 1 = a verification failed,
2 = unusable input (malformed JSON, missing file, schema mismatch).
Set SUPERBIALG_COLOR=0 to disable ANSI color.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .graded import BasisMismatch, Tensor2
from .algebra import DependentVectors
from .bialgebra import (
    InhomogeneousInput, InvalidBialgebra, NotClosedUnderCobracket,
    check_manin_triple, cocommutator, dual_bracket, restrict,
)
from .double import DoubleConstructionError, build_double
from . import serialize as ser
from .verify import SECTIONS, run_fixtures

PASS, FAIL, ERROR = 0, 1, 2


def _color_enabled() -> bool:
    if os.environ.get("SUPERBIALG_COLOR", "") == "0":
        return False
    return sys.stdout.isatty()


def _mark(ok: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if _color_enabled():
        code = "32" if ok else "31"
        return f"\x1b[{code}m{word}\x1b[0m"
    return word


def _load(path: str) -> dict:
    try:
        return ser.load_file(path)
    except FileNotFoundError:
        raise CliInputError(f"no such file: {path}")
    except json.JSONDecodeError as e:
        raise CliInputError(
            f"{path}: malformed JSON at line {e.lineno}, column {e.colno}")


class CliInputError(Exception):
    pass


def _print_report(rep) -> None:
    for c in rep.checks:
        line = f"{_mark(c.passed)}  {c.name}"
        if c.detail:
            line += f"  [{c.detail}]"
        print(line)


def _emit(obj: dict, args) -> None:
    text = ser.dump(obj, getattr(args, "out", None))
    if not getattr(args, "out", None):
        print(text)


def _render_tensor(t: Tensor2) -> str:
    return str(t)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _report_json(rep) -> dict:
    return {"passed": rep.passed,
            "checks": [{"name": c.name, "passed": c.passed,
                        "detail": c.detail} for c in rep.checks]}


def cmd_validate(args) -> int:
    g = ser.superalgebra_from_json(_load(args.algebra))
    rep = g.validate()
    if args.format == "json":
        _emit(_report_json(rep), args)
    else:
        _print_report(rep)
    return PASS if rep.passed else FAIL


def cmd_cocommutator(args) -> int:
    g = ser.superalgebra_from_json(_load(args.algebra))
    r = ser.tensor2_from_json(_load(args.r), g.basis)
    delta = cocommutator(g, r)
    if args.format == "json":
        _emit(ser.cochain_to_json(delta), args)
        return PASS
    lines = []
    for i, lab in enumerate(g.basis.labels):
        v = delta.value(i)
        lines.append(f"d({lab}) = {_render_tensor(v) if v is not None else '0'}")
    out = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return PASS


def cmd_double(args) -> int:
    b = ser.bialgebra_from_json(_load(args.bialgebra))
    d = build_double(b)
    rep = d.underlying.validate()
    print(f"double dimension: {d.underlying.dim()}")
    _print_report(rep)
    payload = ser.double_to_json(d)
    if args.out:
        ser.dump(payload, args.out)
        print(f"wrote {args.out}")
    elif args.format == "json":
        print(ser.dump(payload))
    return PASS if rep.passed else FAIL


def cmd_dual(args) -> int:
    b = ser.bialgebra_from_json(_load(args.bialgebra))
    dual = dual_bracket(b)
    if args.format == "json":
        _emit(ser.superalgebra_to_json(dual), args)
        return PASS
    lines = []
    n = len(dual.basis)
    for i in range(n):
        for j in range(i, n):
            v = dual.bracket_basis(i, j)
            if not v.is_zero():
                lines.append(f"[{dual.basis.labels[i]}, {dual.basis.labels[j]}]"
                             f" = {v}")
    print("\n".join(lines) if lines else "abelian: all brackets vanish")
    return PASS


def cmd_restrict(args) -> int:
    b = ser.bialgebra_from_json(_load(args.bialgebra))
    span_doc = _load(args.span)
    if not isinstance(span_doc, list):
        raise CliInputError("--span file must hold a JSON list of elements")
    vectors = [ser.element_from_json(v, b.basis) for v in span_doc]
    labels = args.labels.split(",") if args.labels else None
    try:
        sub = restrict(b, vectors, labels=labels)
    except NotClosedUnderCobracket as e:
        print(f"{_mark(False)}  restriction is not closed: {e}")
        return FAIL
    except (DependentVectors, InhomogeneousInput, ValueError) as e:
        raise CliInputError(str(e))
    if args.format == "json":
        _emit(ser.bialgebra_to_json(sub), args)
    else:
        print(f"{_mark(True)}  restricted to a {sub.algebra.dim()}-dimensional "
              f"subbialgebra")
    return PASS


def cmd_manin(args) -> int:
    t = ser.manin_from_json(_load(args.triple))
    rep = check_manin_triple(t)
    if args.format == "json":
        _emit(_report_json(rep), args)
    else:
        _print_report(rep)
    return PASS if rep.passed else FAIL


def cmd_verify(args) -> int:
    if args.what != "paper":
        raise CliInputError("only 'verify paper' is available")
    results = run_fixtures(args.section)
    ok = all(r.passed for r in results)
    if args.format == "json":
        _emit({"passed": ok,
               "fixtures": [{"name": r.name, "section": r.section,
                             "citation": r.citation, "passed": r.passed,
                             "detail": r.detail} for r in results]}, args)
        return PASS if ok else FAIL
    for r in results:
        line = f"{_mark(r.passed)}  {r.name}  ({r.citation})"
        if r.detail:
            line += f"  [{r.detail}]"
        print(line)
    npass = sum(1 for r in results if r.passed)
    print(f"{npass}/{len(results)} fixtures pass")
    return PASS if ok else FAIL


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="superbialg",
        description="Exact computations with Lie superbialgebra structures")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", help="write JSON output to this path")

    sp = sub.add_parser("validate", help="check superalgebra axioms")
    sp.add_argument("algebra")
    common(sp)
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("cocommutator",
                        help="coboundary of an r-matrix, per basis vector")
    sp.add_argument("algebra")
    sp.add_argument("--r", required=True, help="rank-2 tensor JSON file")
    common(sp)
    sp.set_defaults(fn=cmd_cocommutator)

    sp = sub.add_parser("double", help="build the Drinfeld double")
    sp.add_argument("bialgebra")
    common(sp)
    sp.set_defaults(fn=cmd_double)

    sp = sub.add_parser("dual", help="bracket table of the dual algebra")
    sp.add_argument("bialgebra")
    common(sp)
    sp.set_defaults(fn=cmd_dual)

    sp = sub.add_parser("restrict", help="restrict a bialgebra to a span")
    sp.add_argument("bialgebra")
    sp.add_argument("--span", required=True,
                    help="JSON file with a list of elements")
    sp.add_argument("--labels", help="comma-separated labels for the span")
    common(sp)
    sp.set_defaults(fn=cmd_restrict)

    sp = sub.add_parser("manin", help="check a Manin triple document")
    sp.add_argument("triple")
    common(sp)
    sp.set_defaults(fn=cmd_manin)

    sp = sub.add_parser("verify", help="run the reproduction suite")
    sp.add_argument("what", choices=("paper",))
    sp.add_argument("--section", default="all",
                    choices=SECTIONS + ("all",))
    common(sp)
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (CliInputError, ser.SchemaError, BasisMismatch) as e:
        print(f"error: {e}", file=sys.stderr)
        return ERROR
    except (InvalidBialgebra, DoubleConstructionError, DependentVectors) as e:
        print(f"{_mark(False)}  {e}")
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
