"""Command-line driver: ``kbskein <command> [options]``.

Exit status: 0 success, 1 verification failure or domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import aideal, bracket_oracle, jones, knot_module, verify
from .errors import KBSkeinError, UnknownSuite
from .torus_skein import TorusSkein, ts_mul

FORMAT_ENV = "KBSKEIN_FORMAT"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_p(text: str) -> tuple[int, bool]:
    """``(|p|, mirrored)``.  ``p <= -2`` is the mirror image of ``|p|``; 0 and -1 give the unknot."""
    try:
        p = int(text)
    except ValueError:
        raise UsageError(f"--p expects an integer, got {text!r}") from None
    if p in (0, -1):
        raise UsageError(f"p={p} gives the unknot, which is excluded")
    return (-p, True) if p < 0 else (p, False)


def parse_pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected a pair 'a,b', got {text!r}") from None
    return a, b


def parse_skein(text: str) -> TorusSkein:
    """A basis pair ``"p,q"`` or a JSON-serialized TorusSkein."""
    text = text.strip()
    if text.startswith("{"):
        try:
            return TorusSkein.from_json(json.loads(text))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad TorusSkein JSON: {exc}") from None
    return TorusSkein.basis(*parse_pair(text))


def parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split(".."))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"expected a range 'a..b', got {text!r}") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"range {text!r} must satisfy 1 <= a <= b")
    return range(lo, hi + 1)


def _mirror(obj, mirrored: bool):
    if not mirrored:
        return obj
    if isinstance(obj, (list, tuple)):
        return type(obj)(_mirror(o, True) for o in obj)
    return obj.invert_t()


# -- commands ------------------------------------------------------------------

def cmd_ts_mul(args) -> tuple[Any, str]:
    a, b = parse_skein(args.a), parse_skein(args.b)
    prod = ts_mul(a, b)
    return prod.to_json(), repr(prod)


def cmd_pi(args) -> tuple[Any, str]:
    p, mirrored = parse_p(args.p)
    curve = parse_pair(args.curve)
    img = _mirror(knot_module.pi_element(TorusSkein.basis(*curve), p), mirrored)
    data = {"p": int(args.p), "curve": list(curve), "element": img.to_json()}
    return data, f"pi({curve[0]},{curve[1]})_T in K_t(M_{args.p}):\n{img}"


def cmd_aideal(args) -> tuple[Any, str]:
    p, mirrored = parse_p(args.p)
    first, second = _mirror(aideal.aideal_factors(p), mirrored)
    poly = _mirror(aideal.aideal_poly(p), mirrored)
    data = {"p": int(args.p), "factors": [first.to_json(), second.to_json()], "expanded": poly.to_json()}
    text = f"factored: ({first}) * ({second})\nexpanded: {poly}"
    return data, text


def cmd_kappa(args) -> tuple[Any, str]:
    p, mirrored = parse_p(args.p)
    if args.max_n < 0:
        raise UsageError("--max-n must be >= 0")
    table = jones.kappa_table(p, args.max_n, recursion=args.recursion)
    values = _mirror(list(table.values), mirrored)
    if args.jones:
        values = jones.to_colored_jones(values)
    lines = [f"# p={args.p} recursion={args.recursion} framing=0"
             + (" variable: t -> i t" if args.jones else "")]
    lines += [f"k_{n} = {v}" for n, v in enumerate(values)]
    return [v.to_json() for v in values], "\n".join(lines)


def cmd_oracle(args) -> tuple[Any, str]:
    if args.braid is not None:
        if args.p is not None or args.n is not None:
            raise UsageError("--braid excludes --p/--n")
        try:
            w = bracket_oracle.parse_braid(args.braid, args.strands)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        val = (bracket_oracle.naive_bracket(w) if args.naive else bracket_oracle.braid_bracket(w))
        return val.to_json(), f"<{args.braid}> = {val}"
    if args.p is None or args.n is None:
        raise UsageError("oracle needs --p and --n, or --braid")
    p, mirrored = parse_p(args.p)
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    val = _mirror(bracket_oracle.colored_bracket(p, args.n), mirrored)
    return val.to_json(), f"k_{args.n}(p={args.p}) = {val}"


def cmd_verify(args) -> tuple[Any, str, int]:
    report = verify.run_verify(args.suite, parse_range(args.p_range), args.seed)
    return report.to_json(), report.render(), EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS,
                        help=f"output format (default: ${FORMAT_ENV} or text)")
    parser = _Parser(prog="kbskein", parents=[common],
                     description="Exact skein computations for (2,2p+1)-torus knots.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("ts-mul", parents=[common], help="multiply two torus skeins")
    s.add_argument("a", help="'p,q' for (p,q)_T or a TorusSkein JSON object")
    s.add_argument("b")
    s.set_defaults(fn=cmd_ts_mul)

    s = sub.add_parser("pi", parents=[common], help="peripheral image of (a,b)_T, a in {0,1}")
    s.add_argument("--p", required=True)
    s.add_argument("--curve", required=True, help="'a,b'")
    s.set_defaults(fn=cmd_pi)

    s = sub.add_parser("aideal", parents=[common], help="A-ideal polynomial, factored and expanded")
    s.add_argument("--p", required=True)
    s.set_defaults(fn=cmd_aideal)

    s = sub.add_parser("kappa", parents=[common], help="colored Kauffman brackets k_0..k_N")
    s.add_argument("--p", required=True)
    s.add_argument("--max-n", type=int, default=5)
    s.add_argument("--jones", action="store_true", help="substitute t -> i t")
    s.add_argument("--recursion", choices=jones.RECURSIONS, default="peripheral",
                   help="'printed' is the five-term recursion as published (fails: k_1 is not a Laurent "
                        "polynomial); 'peripheral' uses the three-term relation from the peripheral element")
    s.set_defaults(fn=cmd_kappa)

    s = sub.add_parser(
        "oracle", parents=[common],
        help="Temperley-Lieb bracket evaluation",
        description=f"TL evaluation is limited to {bracket_oracle.MAX_TL_STRANDS} strands "
                    f"(colors n <= 3 on 2-strand braids); --naive is limited to "
                    f"{bracket_oracle.MAX_NAIVE_CROSSINGS} crossings.")
    s.add_argument("--p")
    s.add_argument("--n", type=int)
    s.add_argument("--braid", help="comma separated generators, e.g. '1,1,-2'")
    s.add_argument("--strands", type=int)
    s.add_argument("--naive", action="store_true", help="use the 2^c state sum")
    s.set_defaults(fn=cmd_oracle)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", help=", ".join(list(verify.SUITES) + ["all"]))
    s.add_argument("--p-range", default="1..3")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_verify)
    return parser


def _emit(data, text, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(data, out)
        out.write("\n")
    else:
        out.write(text + "\n")


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required")
        fmt = getattr(args, "format", None) or os.environ.get(FORMAT_ENV, "text")
        if fmt not in ("json", "text"):
            raise UsageError(f"${FORMAT_ENV} must be json or text")
        result = args.fn(args)
    except (UsageError, UnknownSuite) as exc:
        parser.print_usage(err)
        msg = exc.args[0] if exc.args else exc
        err.write(f"kbskein: error: {msg}\n")
        return EXIT_USAGE
    except (KBSkeinError, ValueError, ArithmeticError) as exc:
        err.write(f"kbskein: {type(exc).__name__}: {exc}\n")
        return EXIT_FAIL
    code = result[2] if len(result) == 3 else EXIT_OK
    _emit(result[0], result[1], fmt, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
