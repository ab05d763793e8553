"""`trikernel` command-line interface.

Exit codes: 0 success, 1 negative verdict (false / none / not a member),
2 usage or input error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from ..errors import (
    BudgetExceededError,
    DomainMismatchError,
    EnumerationUnsupportedError,
    FrontendError,
    SharpOnEvenPartError,
    UnclosedTriidealError,
)
from ..groebner import buchberger, minimal_power
from ..varieties import enumerate_varieties, ideal_of_varieties, nss_check
from .parser import parse_graded_gens, parse_point, parse_poly, parse_poly_list
from .session import Session, format_representation, parse_ring_descriptor

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trikernel",
        description="graded polynomial kernel: Groebner bases, radicals, "
        "and point enumeration for two-part polynomial rings",
    )
    parser.add_argument("--script", metavar="FILE", help="run a command script")
    parser.add_argument("--out", metavar="FILE", help="write output to a file")
    sub = parser.add_subparsers(dest="command")

    def add(name: str, **flags):
        cmd = sub.add_parser(name)
        cmd.add_argument("--ring", required=True, help="ring descriptor")
        # valid in either position; SUPPRESS keeps a value given before the
        # subcommand from being reset to the default
        cmd.add_argument(
            "--out", metavar="FILE", default=argparse.SUPPRESS, help="write output to a file"
        )
        for flag, meta in flags.items():
            required, help_text = meta
            cmd.add_argument(f"--{flag}", required=required, help=help_text, default=None)
        return cmd

    add("gb", gens=(True, "comma-separated generators, one graded part"))
    add("member", ideal=(True, "generators `evens ; odds`"), elem=(True, "element"))
    add(
        "radical-member",
        ideal=(True, "generators `evens ; odds`"),
        elem=(True, "element"),
    )
    power = add(
        "power", ideal=(True, "generators `evens ; odds`"), elem=(True, "element")
    )
    power.add_argument("--bound", type=int, default=6)
    add("close", even=(False, "even generators"), odd=(False, "odd generators"))
    add("eval", elem=(True, "element"), point=(True, "point `(c1, ..., cn)`"))
    for name in ("variety", "ideal-of", "nss-check"):
        cmd = add(name, even=(False, "even generators"), odd=(False, "odd generators"))
        cmd.add_argument("--budget", type=int, default=None)
        if name == "nss-check":
            cmd.add_argument("--json", action="store_true")
    add(
        "repr",
        gens=(True, "comma-separated generators, one graded part"),
        elem=(True, "element"),
    )
    return parser


def _resolve_budget(args) -> int | None:
    budget = getattr(args, "budget", None)
    if budget is not None:
        return budget
    env = os.environ.get("TRIKERNEL_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise FrontendError(f"bad TRIKERNEL_BUDGET value {env!r}") from None
    return None


def _close_from_args(args, ring):
    evens, odds = [], []
    if args.even:
        evens = [p.even for p in _pure_list(args.even, ring, "even")]
    if args.odd:
        odds = [p.odd for p in _pure_list(args.odd, ring, "odd")]
    return ring.close(evens, odds)


def _pure_list(text: str, ring, part: str):
    polys = parse_poly_list(text, ring)
    for p in polys:
        if part == "even" and not p.is_even:
            raise FrontendError(f"generator {p} is not purely even")
        if part == "odd" and not p.is_odd:
            raise FrontendError(f"generator {p} is not purely odd")
    return polys


def _one_part(polys, ring):
    """Split a same-part generator list into plain polynomials and the part name."""
    polys = [p for p in polys if not p.is_zero]
    if not polys:
        raise FrontendError("need at least one nonzero generator")
    if all(p.is_even for p in polys):
        return [p.even for p in polys], ring.even_ring, "even"
    if all(p.is_odd for p in polys):
        return [p.odd for p in polys], ring.odd_ring, "odd"
    raise FrontendError("generators must all lie in one graded part")


def _run_command(args) -> tuple[int, list[str]]:
    ring = parse_ring_descriptor(args.ring)

    if args.command == "gb":
        plain, plain_ring, _ = _one_part(parse_poly_list(args.gens, ring), ring)
        return EXIT_OK, [str(p) for p in buchberger(plain, plain_ring).basis]

    if args.command in ("member", "radical-member", "power"):
        evens, odds = parse_graded_gens(args.ideal, ring)
        ideal = ring.close(evens, odds)
        value = parse_poly(args.elem, ring)
        if args.command == "member":
            verdict = ideal.contains(value)
            return (EXIT_OK if verdict else EXIT_NEGATIVE), [
                "true" if verdict else "false"
            ]
        if args.command == "radical-member":
            verdict = ideal.radical_contains(value)
            return (EXIT_OK if verdict else EXIT_NEGATIVE), [
                "true" if verdict else "false"
            ]
        if value.is_even:
            found = minimal_power(value.even, ideal.even_gens, args.bound, ring.even_ring)
        elif value.is_odd:
            found = minimal_power(value.odd, ideal.odd_gens, args.bound, ring.odd_ring)
        else:
            raise FrontendError("power needs a purely even or purely odd element")
        if found is None:
            return EXIT_NEGATIVE, ["none"]
        return EXIT_OK, [str(found)]

    if args.command == "close":
        ideal = _close_from_args(args, ring)
        lines = [f"even: {p}" for p in ideal.even_gens]
        lines += [f"odd: {p}" for p in ideal.odd_gens]
        return EXIT_OK, lines

    if args.command == "eval":
        value = parse_poly(args.elem, ring)
        point = parse_point(args.point, ring)
        return EXIT_OK, [value.evaluate(point).text()]

    if args.command == "variety":
        pair = enumerate_varieties(_close_from_args(args, ring), budget=_resolve_budget(args))
        return EXIT_OK, [f"v0_count: {len(pair.v0)}", f"v1_count: {len(pair.v1)}"]

    if args.command == "ideal-of":
        pair = enumerate_varieties(_close_from_args(args, ring), budget=_resolve_budget(args))
        closed = ideal_of_varieties(pair)
        lines = [f"even: {p}" for p in closed.even_gens]
        lines += [f"odd: {p}" for p in closed.odd_gens]
        return EXIT_OK, lines

    if args.command == "nss-check":
        report = nss_check(_close_from_args(args, ring), budget=_resolve_budget(args))
        ok = report.inclusion and not report.equality_failures
        code = EXIT_OK if ok else EXIT_NEGATIVE
        if args.json:
            return code, json.dumps(report.to_kv(), indent=2).splitlines()
        return code, report.to_text().splitlines()

    if args.command == "repr":
        value = parse_poly(args.elem, ring)
        gens = parse_poly_list(args.gens, ring)
        lines = format_representation(value, gens, ring)
        code = EXIT_NEGATIVE if lines == ["not a member"] else EXIT_OK
        return code, lines

    raise FrontendError(f"unknown command {args.command!r}")


def _run_script(path: str, budget: int | None) -> tuple[int, list[str]]:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise FrontendError(f"cannot read script: {exc}") from None
    session = Session(budget=budget)
    return EXIT_OK, session.run_script(text)


def _emit(lines: list[str], out_path: str | None) -> None:
    text = "\n".join(lines) + ("\n" if lines else "")
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    elif text:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.script:
            code, lines = _run_script(args.script, _resolve_budget(args))
        elif args.command:
            code, lines = _run_command(args)
        else:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        _emit(lines, args.out)
        return code
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (
        FrontendError,
        EnumerationUnsupportedError,
        UnclosedTriidealError,
        DomainMismatchError,
        SharpOnEvenPartError,
        ValueError,
        ZeroDivisionError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
