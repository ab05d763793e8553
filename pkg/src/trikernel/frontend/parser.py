"""Expression text: tokenizer, recursive-descent parser, elaboration.

Grammar (binary `*` and `#` share one precedence level, left associative):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor (('*'|'#') factor)*
    factor := base ['^' posint]
    base   := number ['/' number] ['#'] | 'g' ['#'] | name | '(' expr ')'

`2#` and `g#` denote odd constants (the numeral times the odd unit); `1#` is
the odd unit itself.  A name is a ring variable or a session binding.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ElaborationError, GradingError, TriSyntaxError
from ..triring import TriPoint, TriPolynomial, TriPolyRing

_MAX_DEPTH = 64


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "op", "end"
    text: str
    line: int
    column: int


_OPS = set("+-*/^#(),;")


def _describe(tok: "Token") -> str:
    return repr(tok.text) if tok.text else "end of input"


def tokenize(text: str, line: int = 1, column: int = 1):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch.isspace():
            column += 1
            i += 1
            continue
        if ch.isdigit():
            start = i
            startcol = column
            while i < len(text) and text[i].isdigit():
                i += 1
                column += 1
            tokens.append(Token("num", text[start:i], line, startcol))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            startcol = column
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
                column += 1
            tokens.append(Token("ident", text[start:i], line, startcol))
            continue
        if ch in _OPS:
            tokens.append(Token("op", ch, line, column))
            i += 1
            column += 1
            continue
        raise TriSyntaxError(f"unexpected character {ch!r}", line, column)
    tokens.append(Token("end", "", line, column))
    return tokens


@dataclass(frozen=True)
class Num:
    num: int
    den: int | None
    odd: bool
    line: int
    column: int

@dataclass(frozen=True)
class Gen:
    odd: bool
    line: int
    column: int

@dataclass(frozen=True)
class Name:
    name: str
    line: int
    column: int

@dataclass(frozen=True)
class Neg:
    child: object
    line: int
    column: int

@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    line: int
    column: int

@dataclass(frozen=True)
class Pow:
    base: object
    exp: int
    line: int
    column: int


class Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0
        self.depth = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "end":
            self.i += 1
        return tok

    def expect_op(self, op: str) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != op:
            raise TriSyntaxError(
                f"expected {op!r}, found {_describe(tok)}", tok.line, tok.column
            )
        return self.advance()

    def at_op(self, *ops) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.text in ops

    def parse_expr(self):
        self.depth += 1
        if self.depth > _MAX_DEPTH:
            tok = self.peek()
            raise TriSyntaxError("expression nested too deeply", tok.line, tok.column)
        try:
            if self.at_op("-"):
                tok = self.advance()
                node = Neg(self.parse_term(), tok.line, tok.column)
            else:
                node = self.parse_term()
            while self.at_op("+", "-"):
                tok = self.advance()
                right = self.parse_term()
                node = BinOp(tok.text, node, right, tok.line, tok.column)
            return node
        finally:
            self.depth -= 1

    def parse_term(self):
        node = self.parse_factor()
        while self.at_op("*", "#"):
            tok = self.advance()
            right = self.parse_factor()
            node = BinOp(tok.text, node, right, tok.line, tok.column)
        return node

    def parse_factor(self):
        node = self.parse_base()
        if self.at_op("^"):
            tok = self.advance()
            etok = self.peek()
            if etok.kind != "num":
                raise TriSyntaxError(
                    "exponent must be a positive integer", etok.line, etok.column
                )
            self.advance()
            exp = int(etok.text)
            if exp < 1:
                raise TriSyntaxError(
                    "exponent must be a positive integer", etok.line, etok.column
                )
            node = Pow(node, exp, tok.line, tok.column)
        return node

    def parse_base(self):
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            num = int(tok.text)
            den = None
            if self.at_op("/"):
                self.advance()
                dtok = self.peek()
                if dtok.kind != "num":
                    raise TriSyntaxError(
                        "expected a denominator", dtok.line, dtok.column
                    )
                self.advance()
                den = int(dtok.text)
            odd = False
            if self.at_op("#"):
                self.advance()
                odd = True
            return Num(num, den, odd, tok.line, tok.column)
        if tok.kind == "ident":
            self.advance()
            if tok.text == "g":
                odd = False
                if self.at_op("#"):
                    self.advance()
                    odd = True
                return Gen(odd, tok.line, tok.column)
            return Name(tok.text, tok.line, tok.column)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            self.depth += 1
            if self.depth > _MAX_DEPTH:
                raise TriSyntaxError("expression nested too deeply", tok.line, tok.column)
            try:
                node = self.parse_expr()
            finally:
                self.depth -= 1
            self.expect_op(")")
            return node
        raise TriSyntaxError(
            f"expected a value, found {_describe(tok)}", tok.line, tok.column
        )

    def expect_end(self):
        tok = self.peek()
        if tok.kind != "end":
            raise TriSyntaxError(
                f"unexpected trailing {tok.text!r}", tok.line, tok.column
            )


def parse_expression(text: str, line: int = 1, column: int = 1):
    """Text to syntax tree; raises TriSyntaxError with a source position."""
    parser = Parser(tokenize(text, line, column))
    node = parser.parse_expr()
    parser.expect_end()
    return node


def elaborate(node, ring: TriPolyRing, names=None) -> TriPolynomial:
    """Syntax tree to a graded polynomial of the ring, grading-checked."""
    names = names or {}
    model = ring.model
    base = model.base

    def lit(n: Num):
        try:
            value = base.from_int(n.num)
            if n.den is not None:
                value = value / base.from_int(n.den)
        except ZeroDivisionError:
            raise ElaborationError(
                "literal divides by zero in this field", n.line, n.column
            ) from None
        return value

    def walk(nd) -> TriPolynomial:
        if isinstance(nd, Num):
            c = lit(nd)
            if nd.odd:
                return ring.tri(odd=ring.odd_ring.constant(c))
            return ring.tri(even=ring.even_ring.constant(c))
        if isinstance(nd, Gen):
            if not hasattr(base, "gen"):
                raise ElaborationError(
                    f"no generator literal over {base.name}", nd.line, nd.column
                )
            if nd.odd:
                return ring.tri(odd=ring.odd_ring.constant(base.gen))
            return ring.tri(even=ring.even_ring.constant(base.gen))
        if isinstance(nd, Name):
            try:
                return ring.variable(nd.name)
            except KeyError:
                pass
            if nd.name in names:
                value = names[nd.name]
                if value.ring != ring:
                    raise ElaborationError(
                        f"{nd.name} belongs to a different ring", nd.line, nd.column
                    )
                return value
            raise ElaborationError(f"unknown name {nd.name!r}", nd.line, nd.column)
        if isinstance(nd, Neg):
            return -walk(nd.child)
        if isinstance(nd, BinOp):
            left = walk(nd.left)
            right = walk(nd.right)
            if nd.op == "+":
                return left + right
            if nd.op == "-":
                return left - right
            if nd.op == "*":
                # between purely odd operands the surface `*` denotes the
                # second product, matching printed odd monomials like u1*v1;
                # the graded product there would collapse to zero
                if left.is_odd and right.is_odd:
                    return left.sharp(right)
                return left * right
            if not left.is_odd or not right.is_odd:
                raise GradingError(
                    "the # product needs purely odd operands", nd.line, nd.column
                )
            return left.sharp(right)
        if isinstance(nd, Pow):
            value = walk(nd.base)
            if value.is_odd:
                return value.sharp_power(nd.exp)
            return value**nd.exp
        raise TypeError(f"unknown node {nd!r}")

    return walk(node)


def parse_poly(text: str, ring: TriPolyRing, names=None, line: int = 1, column: int = 1) -> TriPolynomial:
    return elaborate(parse_expression(text, line, column), ring, names)


def parse_poly_list(text: str, ring: TriPolyRing, names=None, line: int = 1, column: int = 1):
    """Comma-separated expressions; an empty or blank string is an empty list."""
    tokens = tokenize(text, line, column)
    parser = Parser(tokens)
    out = []
    if parser.peek().kind == "end":
        return out
    while True:
        out.append(elaborate(parser.parse_expr(), ring, names))
        if parser.at_op(","):
            parser.advance()
            continue
        break
    parser.expect_end()
    return out


def parse_graded_gens(text: str, ring: TriPolyRing, names=None, line: int = 1, column: int = 1):
    """Generator spec `evens ; odds` (either side may be empty).

    Every entry left of the semicolon must be purely even, every entry right
    of it purely odd; the parts are returned as plain polynomials.
    """
    tokens = tokenize(text, line, column)
    parser = Parser(tokens)

    def side(which: str):
        out = []
        while True:
            tok = parser.peek()
            if tok.kind == "end" or (tok.kind == "op" and tok.text == ";"):
                break
            value = elaborate(parser.parse_expr(), ring, names)
            if which == "even" and not value.is_even:
                raise GradingError(
                    "even generator has an odd part", tok.line, tok.column
                )
            if which == "odd" and not value.is_odd:
                raise GradingError(
                    "odd generator has an even part", tok.line, tok.column
                )
            out.append(value.even if which == "even" else value.odd)
            if parser.at_op(","):
                parser.advance()
                continue
            break
        return out

    evens = side("even")
    if parser.at_op(";"):
        parser.advance()
        odds = side("odd")
    else:
        odds = []
    parser.expect_end()
    return evens, odds


def parse_point(text: str, ring: TriPolyRing, line: int = 1, column: int = 1) -> TriPoint:
    """Point literal `(scalar, ...)`; each coordinate is a constant expression."""
    tokens = tokenize(text, line, column)
    parser = Parser(tokens)
    parser.expect_op("(")
    coords = []
    while True:
        tok = parser.peek()
        value = elaborate(parser.parse_expr(), ring)
        if value.even.degree() > 0 or value.odd.degree() > 0:
            raise ElaborationError(
                "point coordinates must be constant", tok.line, tok.column
            )
        coords.append(
            ring.model.scalar(value.even.constant_coeff(), value.odd.constant_coeff())
        )
        if parser.at_op(","):
            parser.advance()
            continue
        break
    parser.expect_op(")")
    parser.expect_end()
    if len(coords) != ring.n:
        raise ElaborationError(
            f"expected {ring.n} coordinates, got {len(coords)}", line, column
        )
    return TriPoint(ring, tuple(coords))
