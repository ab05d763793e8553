"""Sparse multivariate polynomials over an exact coefficient field.

Polynomials are immutable: a ring descriptor (field, variable set, monomial
order) plus a tuple of (monomial, coefficient) terms kept strictly descending
in the ring's order.  Structural equality is mathematical equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainMismatchError


class Monomial:
    """Exponent vector of fixed width."""

    __slots__ = ("exps",)

    def __init__(self, exps):
        self.exps = tuple(exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def is_one(self) -> bool:
        return not any(self.exps)

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(a + b for a, b in zip(self.exps, other.exps))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __floordiv__(self, other: "Monomial") -> "Monomial":
        diff = [a - b for a, b in zip(self.exps, other.exps)]
        if any(d < 0 for d in diff):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(diff)

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self.exps, other.exps))

    def coprime(self, other: "Monomial") -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self.exps, other.exps))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return f"Monomial{self.exps}"


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on monomials of one width; `key` gives a max-sort key."""

    kind: str

    def __post_init__(self):
        if self.kind not in ("lex", "grlex", "grevlex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, m: Monomial):
        e = m.exps
        if self.kind == "lex":
            return e
        if self.kind == "grlex":
            return (sum(e), e)
        # grevlex: degree first, ties by the reversed negated exponent vector
        return (sum(e), tuple(-x for x in reversed(e)))

    def __str__(self):
        return self.kind


LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")
GREVLEX = MonomialOrder("grevlex")
ORDERS = {"lex": LEX, "grlex": GRLEX, "grevlex": GREVLEX}


@dataclass(frozen=True)
class VariableSet:
    """Named variables of one grading part ("even" or "odd")."""

    names: tuple
    part: str

    @classmethod
    def even(cls, n: int) -> "VariableSet":
        return cls(tuple(f"x{j}" for j in range(1, n + 1)), "even")

    @classmethod
    def odd(cls, n: int) -> "VariableSet":
        names = [f"u{j}" for j in range(1, n + 1)]
        names += [f"v{j}" for j in range(1, n + 1)]
        names += [f"w{j}" for j in range(1, n + 1)]
        return cls(tuple(names), "odd")

    def extended(self, fresh: str) -> "VariableSet":
        if fresh in self.names:
            raise ValueError(f"variable {fresh!r} already present")
        return VariableSet(self.names + (fresh,), self.part)

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


@dataclass(frozen=True)
class PolyRing:
    """Polynomial ring descriptor: coefficient field, variables, active order."""

    field: object
    variables: VariableSet
    order: MonomialOrder = GREVLEX

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(self.field.one)

    def constant(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, ((Monomial((0,) * self.nvars), c),))

    def variable(self, j: int) -> "Polynomial":
        if not 0 <= j < self.nvars:
            raise ValueError(f"variable index {j} out of range")
        exps = [0] * self.nvars
        exps[j] = 1
        return Polynomial(self, ((Monomial(exps), self.field.one),))

    def monomial(self, *exps) -> Monomial:
        if len(exps) != self.nvars:
            raise ValueError("wrong exponent count")
        return Monomial(exps)

    def from_pairs(self, pairs) -> "Polynomial":
        acc: dict = {}
        zero = self.field.zero
        for m, c in pairs:
            c = self.field.coerce(c)
            s = acc.get(m, zero) + c
            if s == zero:
                acc.pop(m, None)
            else:
                acc[m] = s
        key = self.order.key
        terms = tuple(sorted(acc.items(), key=lambda t: key(t[0]), reverse=True))
        return Polynomial(self, terms)

    def extend(self, fresh: str) -> "PolyRing":
        return PolyRing(self.field, self.variables.extended(fresh), self.order)

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.field, self.variables, order)

    def __str__(self):
        return f"{self.field.name}[{', '.join(self.variables.names)}; {self.order}]"


class Polynomial:
    """Immutable sparse polynomial; see module docstring for the invariants."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms):
        self.ring = ring
        self.terms = tuple(terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def leading_term(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        m, c = self.terms[0]
        return c, m

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[1]

    def leading_coeff(self):
        return self.leading_term()[0]

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(m.degree for m, _ in self.terms)

    def constant_coeff(self):
        for m, c in self.terms:
            if m.is_one:
                return c
        return self.ring.field.zero

    def _check(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise DomainMismatchError(f"expected a polynomial, got {other!r}")
        if other.ring != self.ring:
            raise DomainMismatchError(
                f"polynomials from different rings: {self.ring} vs {other.ring}"
            )

    def _lift(self, other):
        if isinstance(other, Polynomial):
            return other
        return self.ring.constant(self.ring.field.coerce(other))

    def __add__(self, other):
        other = self._lift(other)
        self._check(other)
        return self.ring.from_pairs(list(self.terms) + list(other.terms))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = self._lift(other)
        self._check(other)
        return self.ring.from_pairs(
            list(self.terms) + [(m, -c) for m, c in other.terms]
        )

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Polynomial(self.ring, tuple((m, -c) for m, c in self.terms))

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(self.ring.field.coerce(other))
        self._check(other)
        pairs = []
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                pairs.append((m1.mul(m2), c1 * c2))
        return self.ring.from_pairs(pairs)

    def __rmul__(self, other):
        return self.__mul__(other)

    def mul_term(self, c, m: Monomial) -> "Polynomial":
        """Product with a single term, preserving term order."""
        c = self.ring.field.coerce(c)
        if c == self.ring.field.zero:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((t.mul(m), k * c) for t, k in self.terms))

    def scale(self, c) -> "Polynomial":
        return self.mul_term(c, Monomial((0,) * self.ring.nvars))

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(self.ring.field.inv(self.leading_coeff()))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, point):
        """Value at a point given as one field element per variable."""
        coords = [self.ring.field.coerce(c) for c in point]
        if len(coords) != self.ring.nvars:
            raise ValueError(
                f"point has {len(coords)} coordinates, ring has {self.ring.nvars}"
            )
        acc = self.ring.field.zero
        for m, c in self.terms:
            val = c
            for coord, e in zip(coords, m.exps):
                if e:
                    val = val * coord**e
            acc = acc + val
        return acc

    def apply_map(self, target: PolyRing, images, coeff_map=None) -> "Polynomial":
        """Ring map: substitute `images[j]` for variable j, map coefficients."""
        if len(images) != self.ring.nvars:
            raise ValueError("one image per variable is required")
        for img in images:
            if img.ring != target:
                raise DomainMismatchError("image outside the target ring")
        out = target.zero()
        for m, c in self.terms:
            c2 = c if coeff_map is None else coeff_map(c)
            t = target.constant(c2)
            for img, e in zip(images, m.exps):
                if e:
                    t = t * img**e
            out = out + t
        return out

    def extend_to(self, bigger: PolyRing) -> "Polynomial":
        """Reinterpret in a ring that appends fresh variables at the end."""
        pad = bigger.nvars - self.ring.nvars
        if pad < 0 or bigger.variables.names[: self.ring.nvars] != self.ring.variables.names:
            raise DomainMismatchError("target ring does not extend this ring")
        return bigger.from_pairs(
            (Monomial(m.exps + (0,) * pad), c) for m, c in self.terms
        )

    def with_order(self, order: MonomialOrder) -> "Polynomial":
        return self.ring.with_order(order).from_pairs(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def _monomial_text(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.ring.variables.names, m.exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def _term_text(self, mag, m: Monomial) -> str:
        field = self.ring.field
        odd = self.ring.variables.part == "odd"
        one = field.one
        if m.is_one:
            if not odd:
                return field.literal(mag)
            if mag == one:
                return "1#"
            if field.atomic(mag):
                return f"{field.literal(mag)}#"
            return f"({field.literal(mag)})*1#"
        mono = self._monomial_text(m)
        if mag == one:
            return mono
        if field.atomic(mag):
            sep = "#*" if odd else "*"
            return f"{field.literal(mag)}{sep}{mono}"
        return f"({field.literal(mag)})*{mono}"

    def _pieces(self):
        """(negative?, text) for each term, for sign-aware joining."""
        field = self.ring.field
        out = []
        for m, c in self.terms:
            neg, mag = field.split_sign(c)
            out.append((neg, self._term_text(mag, m)))
        return out

    def __str__(self):
        return join_pieces(self._pieces())

    def __repr__(self):
        return f"<{self}>"


def join_pieces(pieces) -> str:
    if not pieces:
        return "0"
    out = []
    for i, (neg, body) in enumerate(pieces):
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


def divide(f: Polynomial, divisors) -> tuple:
    """Multivariate division: returns (quotients, remainder).

    Scans divisors in list order and reduces by the first whose leading
    monomial divides the current leading monomial; the remainder has no term
    divisible by any divisor's leading monomial.  Exactness:
    f == sum(q*d) + remainder.
    """
    divisors = list(divisors)
    ring = f.ring
    field = ring.field
    for d in divisors:
        f._check(d)
        if d.is_zero:
            raise ZeroDivisionError("division by a zero divisor")
    key = ring.order.key
    leads = [(d.leading_monomial(), field.inv(d.leading_coeff())) for d in divisors]

    work = dict(f.terms)
    quots: list = [dict() for _ in divisors]
    rem: dict = {}
    zero = field.zero
    while work:
        lm = max(work, key=key)
        lc = work[lm]
        for i, (dm, dcinv) in enumerate(leads):
            if dm.divides(lm):
                qc = lc * dcinv
                qm = lm // dm
                qd = quots[i]
                qd[qm] = qd.get(qm, zero) + qc
                for tm, tc in divisors[i].terms:
                    mm = tm.mul(qm)
                    s = work.get(mm, zero) - tc * qc
                    if s == zero:
                        work.pop(mm, None)
                    else:
                        work[mm] = s
                break
        else:
            rem[lm] = lc
            del work[lm]
    return (
        [ring.from_pairs(q.items()) for q in quots],
        ring.from_pairs(rem.items()),
    )
