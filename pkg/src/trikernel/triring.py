"""Graded polynomial arithmetic with a local product on the odd part.

A graded polynomial is an even polynomial in x1..xn plus an odd polynomial in
the 3n variables u1..un, v1..vn, w1..wn.  An odd coefficient c stands for the
odd scalar c*1#, and the local product of odd polynomials is the ordinary
product on that representation.  The two embeddings of the even part into the
odd part send xj to uj (left action by 1#, coefficients unchanged) and xj to
wj (right action, coefficients twisted in the twisted model); they make the
graded product compatible with the two-sided associativity law
x(a#b) = (xa)#b and (a#b)x = a#(bx).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import TrifieldModel, TrifieldScalar
from .errors import (
    DomainMismatchError,
    SharpOnEvenPartError,
    UnclosedTriidealError,
)
from .groebner import ideal_member, radical_member
from .poly import GREVLEX, Monomial, MonomialOrder, Polynomial, PolyRing, VariableSet, join_pieces


@dataclass(frozen=True)
class TriPolyRing:
    """Even ring k0[x1..xn] together with the odd ring k1[u.., v.., w..]."""

    model: TrifieldModel
    n: int
    even_ring: PolyRing
    odd_ring: PolyRing

    @classmethod
    def create(
        cls,
        model: TrifieldModel,
        n: int,
        order: MonomialOrder = GREVLEX,
        odd_order: MonomialOrder | None = None,
    ) -> "TriPolyRing":
        if n < 1:
            raise ValueError("need at least one variable pack")
        even = PolyRing(model.base, VariableSet.even(n), order)
        odd = PolyRing(model.base, VariableSet.odd(n), odd_order or order)
        return cls(model, n, even, odd)

    def zero(self) -> "TriPolynomial":
        return TriPolynomial(self, self.even_ring.zero(), self.odd_ring.zero())

    def one(self) -> "TriPolynomial":
        return TriPolynomial(self, self.even_ring.one(), self.odd_ring.zero())

    def one_sharp(self) -> "TriPolynomial":
        return TriPolynomial(self, self.even_ring.zero(), self.odd_ring.one())

    def tri(self, even: Polynomial | None = None, odd: Polynomial | None = None) -> "TriPolynomial":
        e = self.even_ring.zero() if even is None else even
        o = self.odd_ring.zero() if odd is None else odd
        if e.ring != self.even_ring or o.ring != self.odd_ring:
            raise DomainMismatchError("parts belong to different rings")
        return TriPolynomial(self, e, o)

    def constant(self, s: TrifieldScalar) -> "TriPolynomial":
        if s.model != self.model:
            raise DomainMismatchError("scalar from a different model")
        return TriPolynomial(
            self, self.even_ring.constant(s.even), self.odd_ring.constant(s.odd)
        )

    def variable(self, name: str) -> "TriPolynomial":
        """The variable with that display name, as a graded polynomial."""
        if name in self.even_ring.variables.names:
            j = self.even_ring.variables.index(name)
            return self.tri(even=self.even_ring.variable(j))
        if name in self.odd_ring.variables.names:
            j = self.odd_ring.variables.index(name)
            return self.tri(odd=self.odd_ring.variable(j))
        raise KeyError(name)

    def left_embed(self, p: Polynomial) -> Polynomial:
        """Even polynomial acting from the left: coefficients kept, xj -> uj."""
        if p.ring != self.even_ring:
            raise DomainMismatchError("left_embed takes an even polynomial")
        pad = (0,) * (2 * self.n)
        return self.odd_ring.from_pairs(
            (Monomial(m.exps + pad), c) for m, c in p.terms
        )

    def right_embed(self, p: Polynomial) -> Polynomial:
        """Even polynomial acting from the right: twisted coefficients, xj -> wj."""
        if p.ring != self.even_ring:
            raise DomainMismatchError("right_embed takes an even polynomial")
        pad = (0,) * (2 * self.n)
        sigma = self.model.sigma
        return self.odd_ring.from_pairs(
            (Monomial(pad + m.exps), sigma(c)) for m, c in p.terms
        )

    def point(self, coords) -> "TriPoint":
        return TriPoint(self, coords)

    def close(self, even_gens, odd_gens) -> "TriIdeal":
        """Graded closure: adjoin both embeddings of every even generator."""
        evens: list = []
        for g in even_gens:
            if g.ring != self.even_ring:
                raise DomainMismatchError("even generator outside the even ring")
            if not g.is_zero and g not in evens:
                evens.append(g)
        odds: list = []
        for g in odd_gens:
            if g.ring != self.odd_ring:
                raise DomainMismatchError("odd generator outside the odd ring")
            if not g.is_zero and g not in odds:
                odds.append(g)
        for g in evens:
            for img in (self.left_embed(g), self.right_embed(g)):
                if not img.is_zero and img not in odds:
                    odds.append(img)
        return TriIdeal(self, tuple(evens), tuple(odds), True)

    def triideal(self, even_gens, odd_gens, closed: bool = False) -> "TriIdeal":
        return TriIdeal(self, tuple(even_gens), tuple(odd_gens), closed)

    def __str__(self):
        return f"{self.model.descriptor()}, n={self.n}, order={self.even_ring.order}"


class TriPolynomial:
    """Immutable graded polynomial: even part plus odd part."""

    __slots__ = ("ring", "even", "odd")

    def __init__(self, ring: TriPolyRing, even: Polynomial, odd: Polynomial):
        self.ring = ring
        self.even = even
        self.odd = odd

    def _check(self, other: "TriPolynomial"):
        if not isinstance(other, TriPolynomial):
            raise DomainMismatchError(f"expected a graded polynomial, got {other!r}")
        if other.ring != self.ring:
            raise DomainMismatchError("graded polynomials from different rings")

    def _lift(self, other):
        if isinstance(other, TriPolynomial):
            return other
        if isinstance(other, TrifieldScalar):
            return self.ring.constant(other)
        return self.ring.constant(self.ring.model.scalar(even=other))

    @property
    def is_zero(self) -> bool:
        return self.even.is_zero and self.odd.is_zero

    @property
    def is_even(self) -> bool:
        return self.odd.is_zero

    @property
    def is_odd(self) -> bool:
        return self.even.is_zero

    def __add__(self, other):
        other = self._lift(other)
        self._check(other)
        return TriPolynomial(self.ring, self.even + other.even, self.odd + other.odd)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = self._lift(other)
        self._check(other)
        return TriPolynomial(self.ring, self.even - other.even, self.odd - other.odd)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return TriPolynomial(self.ring, -self.even, -self.odd)

    def __mul__(self, other):
        """Graded product; odd-by-odd vanishes, the actions go through the embeddings."""
        other = self._lift(other)
        self._check(other)
        ring = self.ring
        even = self.even * other.even
        odd = ring.left_embed(self.even) * other.odd + self.odd * ring.right_embed(
            other.even
        )
        return TriPolynomial(ring, even, odd)

    def __rmul__(self, other):
        # the graded product is noncommutative in the twisted model, so a
        # left scalar must really multiply from the left
        return self._lift(other).__mul__(self)

    def sharp(self, other: "TriPolynomial") -> "TriPolynomial":
        """Local product; defined on purely odd operands only."""
        self._check(other)
        if not self.is_odd or not other.is_odd:
            raise SharpOnEvenPartError(
                "the local product needs purely odd operands"
            )
        return TriPolynomial(self.ring, self.ring.even_ring.zero(), self.odd * other.odd)

    def sharp_power(self, s: int) -> "TriPolynomial":
        if s < 1:
            raise ValueError("local-product powers start at 1")
        if not self.is_odd:
            raise SharpOnEvenPartError("local-product power needs a purely odd operand")
        return TriPolynomial(self.ring, self.ring.even_ring.zero(), self.odd**s)

    def __pow__(self, e: int):
        """Ring power under the graded product (not the local product)."""
        if e < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, point: "TriPoint") -> TrifieldScalar:
        if point.ring != self.ring:
            raise DomainMismatchError("point from a different ring")
        evens, odds = point.components()
        return self.ring.model.scalar(
            self.even.evaluate(evens), self.odd.evaluate(odds)
        )

    def __eq__(self, other):
        if not isinstance(other, TriPolynomial):
            return NotImplemented
        return self.ring == other.ring and self.even == other.even and self.odd == other.odd

    def __hash__(self):
        return hash((self.even, self.odd))

    def __str__(self):
        return join_pieces(self.even._pieces() + self.odd._pieces())

    def __repr__(self):
        return f"<{self}>"


class TriPoint:
    """Point of the affine trispace: one graded scalar per variable pack."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: TriPolyRing, coords):
        coords = tuple(coords)
        if len(coords) != ring.n:
            raise ValueError(f"expected {ring.n} coordinates, got {len(coords)}")
        for c in coords:
            if not isinstance(c, TrifieldScalar) or c.model != ring.model:
                raise DomainMismatchError("coordinate outside the ring's scalar model")
        self.ring = ring
        self.coords = coords

    def components(self):
        """((even values), (left-action values | odd values | right-action values)).

        The first tuple feeds the even part, the second feeds the odd part in
        its u, v, w variable layout.
        """
        sigma = self.ring.model.sigma
        evens = tuple(c.even for c in self.coords)
        odds = (
            evens
            + tuple(c.odd for c in self.coords)
            + tuple(sigma(e) for e in evens)
        )
        return evens, odds

    def __eq__(self, other):
        if not isinstance(other, TriPoint):
            return NotImplemented
        return self.ring == other.ring and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        return "(" + ", ".join(c.text() for c in self.coords) + ")"

    def __repr__(self):
        return str(self)


@dataclass(frozen=True)
class TriIdeal:
    """Generator data for a graded ideal; `closed` marks the graded closure."""

    ring: TriPolyRing
    even_gens: tuple
    odd_gens: tuple
    closed: bool

    def _need_closed(self, what: str):
        if not self.closed:
            raise UnclosedTriidealError(f"{what} needs the graded closure first")

    def contains(self, f: TriPolynomial) -> bool:
        """Exact graded membership, part by part."""
        self._need_closed("membership")
        if f.ring != self.ring:
            raise DomainMismatchError("element from a different ring")
        return ideal_member(
            f.even, list(self.even_gens), ring=self.ring.even_ring
        ) and ideal_member(f.odd, list(self.odd_gens), ring=self.ring.odd_ring)

    def radical_contains(self, f: TriPolynomial) -> bool:
        """Graded-nilradical membership: each part in its part's radical."""
        self._need_closed("radical membership")
        if f.ring != self.ring:
            raise DomainMismatchError("element from a different ring")
        return radical_member(
            f.even, list(self.even_gens), fresh_name="y"
        ) and radical_member(f.odd, list(self.odd_gens), fresh_name="t")

    def __str__(self):
        evens = ", ".join(str(g) for g in self.even_gens)
        odds = ", ".join(str(g) for g in self.odd_gens)
        return f"close(even=[{evens}], odd=[{odds}])"


def odd_rabinowitsch_ideal(J: TriIdeal, f_odd: Polynomial):
    """Odd-part Rabinowitsch generators: odd gens plus t*f - 1# over an extra t.

    Returns the generator list in the extended odd ring; the ideal is trivial
    exactly when f lies in the radical of the odd part.
    """
    J._need_closed("the odd radical construction")
    if isinstance(f_odd, TriPolynomial):
        if not f_odd.is_odd:
            raise SharpOnEvenPartError("the odd construction needs a purely odd element")
        f_odd = f_odd.odd
    if f_odd.ring != J.ring.odd_ring:
        raise DomainMismatchError("element outside the odd ring")
    ext = J.ring.odd_ring.extend("t")
    gens = [g.extend_to(ext) for g in J.odd_gens]
    fresh = ext.variable(ext.nvars - 1)
    gens.append(fresh * f_odd.extend_to(ext) - ext.one())
    return gens
