"""Named-value sessions, ring descriptors, and script execution.

A ring descriptor looks like `Fp:3, n=2, order=grevlex`: a base field
(`QQ`, `Fp:<p>`, or `Fp2:<p>`), the number of even variables, and an
optional monomial order (default grevlex).  `Fp2` selects the twisted
scalar action; the other two are symmetric.

Script lines hold one command each; `//` starts a comment.  Commands:

    ring <descriptor>
    let <name> = <expr>
    ideal <name> = <evens> ; <odds>
    print <expr>
    gb even|odd <ideal>
    close <ideal>
    member <ideal> <expr>
    radical-member <ideal> <expr>
    power <ideal> <expr> [bound=<k>]
    eval <expr> at (<point>)
    variety <ideal>
    ideal-of <ideal>
    nss-check <ideal>
    repr <expr> in <exprs>
"""

from __future__ import annotations

import re

from ..arith import prime_field, quadratic_field, symmetric_model, twisted_model, QQ
from ..errors import ElaborationError, TriSyntaxError
from ..groebner import buchberger, minimal_power, representation
from ..poly import GREVLEX, GRLEX, LEX
from ..triring import TriPolyRing
from ..varieties import enumerate_varieties, ideal_of_varieties, nss_check
from .parser import parse_graded_gens, parse_point, parse_poly, parse_poly_list

_ORDER_NAMES = {"lex": LEX, "grlex": GRLEX, "grevlex": GREVLEX}
_RESERVED = {"g", "at", "in", "bound"}


def parse_ring_descriptor(text: str, line: int = 1) -> TriPolyRing:
    """Descriptor `QQ|Fp:<p>|Fp2:<p>, n=<k>[, order=<name>]` to a ring."""
    parts = [piece.strip() for piece in text.split(",")]
    if len(parts) < 2 or len(parts) > 3:
        raise TriSyntaxError(
            "ring descriptor needs a field, n=<k>, and optionally order=<name>",
            line,
            1,
        )
    fieldspec, nspec = parts[0], parts[1]
    orderspec = parts[2] if len(parts) == 3 else "order=grevlex"

    try:
        if fieldspec == "QQ":
            model = symmetric_model(QQ)
        elif fieldspec.startswith("Fp2:"):
            model = twisted_model(int(fieldspec[4:]))
        elif fieldspec.startswith("Fp:"):
            model = symmetric_model(prime_field(int(fieldspec[3:])))
        else:
            raise ValueError(f"unknown base field {fieldspec!r}")
    except ValueError as exc:
        raise TriSyntaxError(str(exc), line, 1) from None

    match = re.fullmatch(r"n\s*=\s*(\d+)", nspec)
    if not match:
        raise TriSyntaxError(f"expected n=<count>, found {nspec!r}", line, 1)
    n = int(match.group(1))
    if n < 1:
        raise TriSyntaxError("need at least one even variable", line, 1)

    match = re.fullmatch(r"order\s*=\s*(\w+)", orderspec)
    if not match or match.group(1) not in _ORDER_NAMES:
        raise TriSyntaxError(
            f"expected order=lex|grlex|grevlex, found {orderspec!r}", line, 1
        )
    return TriPolyRing.create(model, n, order=_ORDER_NAMES[match.group(1)])


class Session:
    """Holds the current ring plus named polynomials and triideals."""

    def __init__(self, ring: TriPolyRing | None = None, budget: int | None = None):
        self.ring = ring
        self.values = {}
        self.ideals = {}
        self.budget = budget

    def _need_ring(self, line: int) -> TriPolyRing:
        if self.ring is None:
            raise ElaborationError("no ring declared yet", line, 1)
        return self.ring

    def _get_ideal(self, name: str, line: int):
        if name not in self.ideals:
            raise ElaborationError(f"unknown ideal {name!r}", line, 1)
        return self.ideals[name]

    def _bind_name(self, name: str, line: int) -> str:
        if not re.fullmatch(r"[A-Za-z_]\w*", name):
            raise TriSyntaxError(f"bad name {name!r}", line, 1)
        ring = self._need_ring(line)
        if name in _RESERVED or name in ring.even_ring.variables.names or name in ring.odd_ring.variables.names:
            raise TriSyntaxError(f"{name!r} is reserved", line, 1)
        return name

    def execute(self, text: str, line: int = 1) -> list[str]:
        """Run one command line; returns printable output lines."""
        stripped = text.split("//", 1)[0].strip()
        if not stripped:
            return []
        head, _, rest = stripped.partition(" ")
        rest = rest.strip()
        col = len(text) - len(text.split("//", 1)[0].lstrip()) + 1
        handler = {
            "ring": self._cmd_ring,
            "let": self._cmd_let,
            "ideal": self._cmd_ideal,
            "print": self._cmd_print,
            "gb": self._cmd_gb,
            "close": self._cmd_close,
            "member": self._cmd_member,
            "radical-member": self._cmd_radical_member,
            "power": self._cmd_power,
            "eval": self._cmd_eval,
            "variety": self._cmd_variety,
            "ideal-of": self._cmd_ideal_of,
            "nss-check": self._cmd_nss_check,
            "repr": self._cmd_repr,
        }.get(head)
        if handler is None:
            raise TriSyntaxError(f"unknown command {head!r}", line, col)
        return handler(rest, line)

    def run_script(self, text: str) -> list[str]:
        out = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            out.extend(self.execute(raw, lineno))
        return out

    # command handlers

    def _cmd_ring(self, rest: str, line: int):
        self.ring = parse_ring_descriptor(rest, line)
        self.values = {}
        self.ideals = {}
        return []

    def _cmd_let(self, rest: str, line: int):
        name, eq, expr = rest.partition("=")
        if not eq:
            raise TriSyntaxError("expected let <name> = <expr>", line, 1)
        name = self._bind_name(name.strip(), line)
        ring = self._need_ring(line)
        self.values[name] = parse_poly(expr.strip(), ring, self.values, line)
        return []

    def _cmd_ideal(self, rest: str, line: int):
        name, eq, spec = rest.partition("=")
        if not eq:
            raise TriSyntaxError("expected ideal <name> = <evens> ; <odds>", line, 1)
        name = self._bind_name(name.strip(), line)
        ring = self._need_ring(line)
        evens, odds = parse_graded_gens(spec.strip(), ring, self.values, line)
        self.ideals[name] = ring.close(evens, odds)
        return []

    def _cmd_print(self, rest: str, line: int):
        ring = self._need_ring(line)
        return [str(parse_poly(rest, ring, self.values, line))]

    def _cmd_gb(self, rest: str, line: int):
        part, _, name = rest.partition(" ")
        if part not in ("even", "odd"):
            raise TriSyntaxError("expected gb even|odd <ideal>", line, 1)
        ring = self._need_ring(line)
        ideal = self._get_ideal(name.strip(), line)
        if part == "even":
            basis = buchberger(ideal.even_gens, ring.even_ring).basis
        else:
            basis = buchberger(ideal.odd_gens, ring.odd_ring).basis
        return [str(p) for p in basis]

    def _cmd_close(self, rest: str, line: int):
        ideal = self._get_ideal(rest.strip(), line)
        lines = [f"even: {p}" for p in ideal.even_gens]
        lines += [f"odd: {p}" for p in ideal.odd_gens]
        return lines

    def _split_ideal_expr(self, rest: str, line: int):
        name, _, expr = rest.partition(" ")
        ideal = self._get_ideal(name.strip(), line)
        ring = self._need_ring(line)
        value = parse_poly(expr.strip(), ring, self.values, line)
        return ideal, value

    def _cmd_member(self, rest: str, line: int):
        ideal, value = self._split_ideal_expr(rest, line)
        return ["true" if ideal.contains(value) else "false"]

    def _cmd_radical_member(self, rest: str, line: int):
        ideal, value = self._split_ideal_expr(rest, line)
        return ["true" if ideal.radical_contains(value) else "false"]

    def _cmd_power(self, rest: str, line: int):
        bound = 6
        match = re.search(r"\bbound\s*=\s*(\d+)\s*$", rest)
        if match:
            bound = int(match.group(1))
            rest = rest[: match.start()].strip()
        ideal, value = self._split_ideal_expr(rest, line)
        ring = self._need_ring(line)
        if value.is_even:
            found = minimal_power(value.even, ideal.even_gens, bound, ring.even_ring)
        elif value.is_odd:
            found = minimal_power(value.odd, ideal.odd_gens, bound, ring.odd_ring)
        else:
            raise ElaborationError("power needs a purely even or purely odd element", line, 1)
        return [str(found) if found is not None else "none"]

    def _cmd_eval(self, rest: str, line: int):
        ring = self._need_ring(line)
        idx = rest.rfind(" at ")
        if idx < 0:
            raise TriSyntaxError("expected eval <expr> at (<point>)", line, 1)
        value = parse_poly(rest[:idx].strip(), ring, self.values, line)
        point = parse_point(rest[idx + 4 :].strip(), ring, line)
        return [value.evaluate(point).text()]

    def _cmd_variety(self, rest: str, line: int):
        ideal = self._get_ideal(rest.strip(), line)
        pair = enumerate_varieties(ideal, budget=self.budget)
        return [f"v0_count: {len(pair.v0)}", f"v1_count: {len(pair.v1)}"]

    def _cmd_ideal_of(self, rest: str, line: int):
        ideal = self._get_ideal(rest.strip(), line)
        pair = enumerate_varieties(ideal, budget=self.budget)
        closed = ideal_of_varieties(pair)
        lines = [f"even: {p}" for p in closed.even_gens]
        lines += [f"odd: {p}" for p in closed.odd_gens]
        return lines

    def _cmd_nss_check(self, rest: str, line: int):
        ideal = self._get_ideal(rest.strip(), line)
        report = nss_check(ideal, budget=self.budget)
        return report.to_text().splitlines()

    def _cmd_repr(self, rest: str, line: int):
        ring = self._need_ring(line)
        idx = rest.rfind(" in ")
        if idx < 0:
            raise TriSyntaxError("expected repr <expr> in <gens>", line, 1)
        value = parse_poly(rest[:idx].strip(), ring, self.values, line)
        gens = parse_poly_list(rest[idx + 4 :].strip(), ring, self.values, line)
        return format_representation(value, gens, ring, line)


def format_representation(value, gens, ring, line: int = 1) -> list[str]:
    """Cofactor lines `h<i> = ...` for value in the span of gens, one part."""
    if not gens:
        raise ElaborationError("repr needs at least one generator", line, 1)
    if value.is_even and all(g.is_even for g in gens):
        plain, plain_gens = value.even, [g.even for g in gens]
    elif value.is_odd and all(g.is_odd for g in gens):
        plain, plain_gens = value.odd, [g.odd for g in gens]
    else:
        raise ElaborationError(
            "repr needs the element and generators in one graded part", line, 1
        )
    cofactors = representation(plain, plain_gens)
    if cofactors is None:
        return ["not a member"]
    return [f"h{i + 1} = {h}" for i, h in enumerate(cofactors)]
