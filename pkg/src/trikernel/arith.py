"""Exact coefficient fields and the two desk models of graded scalars.

A scalar is a pair (even, odd) over a base field.  Multiplication keeps the
even parts as ordinary field products, the odd-by-odd product is zero, and the
odd part carries a second commutative product (the "local" product, written #)
with its own identity 1#.  The symmetric model leaves both side actions of the
even part on the odd part untwisted; the twisted model works over a quadratic
extension F_{p^2} and twists the right action by the Frobenius map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainMismatchError, SharpOnEvenPartError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """Field descriptor for exact rationals backed by fractions.Fraction."""

    name = "QQ"
    finite = False
    char = 0

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def coerce(self, v) -> Fraction:
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise DomainMismatchError(f"cannot coerce {v!r} into QQ")

    def inv(self, x: Fraction) -> Fraction:
        return 1 / x

    def random_element(self, rng) -> Fraction:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    def literal(self, x: Fraction) -> str:
        return str(x)

    def atomic(self, x: Fraction) -> bool:
        # a plain numeral or numerator/denominator pair needs no parentheses
        return x >= 0

    def split_sign(self, x: Fraction):
        return (x < 0, -x if x < 0 else x)

    def elements(self):
        raise NotImplementedError("QQ is not enumerable")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeFieldElement:
    """Residue in F_p with canonical representative in [0, p)."""

    __slots__ = ("p", "value")

    def __init__(self, p: int, value: int):
        self.p = p
        self.value = value % p

    def _lift(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise DomainMismatchError(
                    f"mixed prime fields F_{self.p} and F_{other.p}"
                )
            return other
        if isinstance(other, int):
            return PrimeFieldElement(self.p, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.p, self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.p, self.value - o.value)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.p, o.value - self.value)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.p, self.value * o.value)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(self.p, -self.value)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return PrimeFieldElement(self.p, pow(self.value, e, self.p))

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return PrimeFieldElement(self.p, pow(self.value, -1, self.p))

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


class PrimeField:
    """Field descriptor for F_p, p an odd or even prime below 2**31."""

    finite = True

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p < 2**31:
            raise ValueError(f"modulus must be a prime below 2**31, got {p!r}")
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.char = p
        self.size = p
        self.name = f"Fp:{p}"
        self.zero = PrimeFieldElement(p, 0)
        self.one = PrimeFieldElement(p, 1)

    def from_int(self, k: int) -> PrimeFieldElement:
        return PrimeFieldElement(self.p, k)

    def coerce(self, v) -> PrimeFieldElement:
        if isinstance(v, PrimeFieldElement):
            if v.p != self.p:
                raise DomainMismatchError(f"element of F_{v.p} given to F_{self.p}")
            return v
        if isinstance(v, int):
            return PrimeFieldElement(self.p, v)
        raise DomainMismatchError(f"cannot coerce {v!r} into F_{self.p}")

    def inv(self, x: PrimeFieldElement) -> PrimeFieldElement:
        return self.coerce(x).inverse()

    def elements(self):
        for v in range(self.p):
            yield PrimeFieldElement(self.p, v)

    def random_element(self, rng) -> PrimeFieldElement:
        return PrimeFieldElement(self.p, rng.randrange(self.p))

    def literal(self, x: PrimeFieldElement) -> str:
        return str(x.value)

    def atomic(self, x: PrimeFieldElement) -> bool:
        return True

    def split_sign(self, x: PrimeFieldElement):
        return (False, x)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return self.name


class QuadraticExtElement:
    """Element c0 + c1*g of F_{p^2}, g a fixed root of the field's modulus."""

    __slots__ = ("field", "c0", "c1")

    def __init__(self, field: "QuadraticField", c0: int, c1: int):
        self.field = field
        self.c0 = c0 % field.p
        self.c1 = c1 % field.p

    def _lift(self, other):
        if isinstance(other, QuadraticExtElement):
            if other.field != self.field:
                raise DomainMismatchError("mixed quadratic extension fields")
            return other
        if isinstance(other, int):
            return QuadraticExtElement(self.field, other, 0)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadraticExtElement(self.field, self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadraticExtElement(self.field, self.c0 - o.c0, self.c1 - o.c1)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        f = self.field
        # g*g = E*g + F, so (a+bg)(c+dg) = ac + bd*F + (ad + bc + bd*E) g
        a, b, c, d = self.c0, self.c1, o.c0, o.c1
        bd = b * d
        return QuadraticExtElement(f, a * c + bd * f.sq_const, a * d + b * c + bd * f.sq_lin)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadraticExtElement(self.field, -self.c0, -self.c1)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "QuadraticExtElement":
        if self.c0 == 0 and self.c1 == 0:
            raise ZeroDivisionError(f"inverse of 0 in {self.field.name}")
        conj = self.field.frobenius(self)
        norm = self * conj  # lands in the prime subfield
        n0 = norm.c0
        ninv = pow(n0, -1, self.field.p)
        return QuadraticExtElement(self.field, conj.c0 * ninv, conj.c1 * ninv)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __eq__(self, other):
        if isinstance(other, QuadraticExtElement):
            return (
                self.field == other.field
                and self.c0 == other.c0
                and self.c1 == other.c1
            )
        if isinstance(other, int):
            return self.c1 == 0 and self.c0 == other % self.field.p
        return NotImplemented

    def __hash__(self):
        if self.c1 == 0:
            return hash(self.c0)
        return hash((self.c0, self.c1))

    def __bool__(self):
        return self.c0 != 0 or self.c1 != 0

    def __repr__(self):
        return self.field.literal(self)


class QuadraticField:
    """Field descriptor for F_{p^2} = F_p[g] with g^2 reduced canonically.

    For odd p the modulus is g^2 - d with d the least quadratic nonresidue;
    for p = 2 it is g^2 + g + 1.  The Frobenius map x -> x^p is exposed as
    `frobenius` and is precomputed on the generator.
    """

    finite = True

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p < 2**31:
            raise ValueError(f"modulus must be a prime below 2**31, got {p!r}")
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.char = p
        self.size = p * p
        self.name = f"Fp2:{p}"
        if p == 2:
            self.sq_lin, self.sq_const = 1, 1  # g^2 = g + 1
        else:
            d = next(x for x in range(2, p) if pow(x, (p - 1) // 2, p) != 1)
            self.sq_lin, self.sq_const = 0, d  # g^2 = d
        self.zero = QuadraticExtElement(self, 0, 0)
        self.one = QuadraticExtElement(self, 1, 0)
        self.gen = QuadraticExtElement(self, 0, 1)
        self._gen_frob = self.gen**p

    def from_int(self, k: int) -> QuadraticExtElement:
        return QuadraticExtElement(self, k, 0)

    def coerce(self, v) -> QuadraticExtElement:
        if isinstance(v, QuadraticExtElement):
            if v.field != self:
                raise DomainMismatchError("element of a different quadratic field")
            return v
        if isinstance(v, int):
            return QuadraticExtElement(self, v, 0)
        raise DomainMismatchError(f"cannot coerce {v!r} into {self.name}")

    def inv(self, x: QuadraticExtElement) -> QuadraticExtElement:
        return self.coerce(x).inverse()

    def frobenius(self, x: QuadraticExtElement) -> QuadraticExtElement:
        x = self.coerce(x)
        base = QuadraticExtElement(self, x.c0, 0)
        return base + x.c1 * self._gen_frob

    def elements(self):
        for c0 in range(self.p):
            for c1 in range(self.p):
                yield QuadraticExtElement(self, c0, c1)

    def random_element(self, rng) -> QuadraticExtElement:
        return QuadraticExtElement(self, rng.randrange(self.p), rng.randrange(self.p))

    def literal(self, x: QuadraticExtElement) -> str:
        if x.c1 == 0:
            return str(x.c0)
        gpart = "g" if x.c1 == 1 else f"{x.c1}*g"
        if x.c0 == 0:
            return gpart
        return f"{gpart} + {x.c0}"

    def atomic(self, x: QuadraticExtElement) -> bool:
        return x.c1 == 0 or (x.c1 == 1 and x.c0 == 0)

    def split_sign(self, x: QuadraticExtElement):
        return (False, x)

    def __eq__(self, other):
        return isinstance(other, QuadraticField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp2", self.p))

    def __repr__(self):
        return self.name


def prime_field(p: int) -> PrimeField:
    return PrimeField(p)

def quadratic_field(p: int) -> QuadraticField:
    return QuadraticField(p)


@dataclass(frozen=True)
class TrifieldModel:
    """A base field together with the side-action convention for odd scalars.

    kind "symmetric": both side actions of the even part on the odd part are
    plain field multiplication.  kind "twisted": the base is F_{p^2} and the
    right action multiplies through the Frobenius map, so c*1# and 1#*c
    differ whenever c is outside the prime subfield.
    """

    kind: str
    base: object

    def __post_init__(self):
        if self.kind not in ("symmetric", "twisted"):
            raise ValueError(f"unknown model kind {self.kind!r}")
        if self.kind == "twisted" and not isinstance(self.base, QuadraticField):
            raise ValueError("the twisted model needs a quadratic extension field")

    def sigma(self, c):
        """The twist applied by the right action (identity when symmetric)."""
        if self.kind == "twisted":
            return self.base.frobenius(c)
        return c

    def scalar(self, even=None, odd=None) -> "TrifieldScalar":
        e = self.base.zero if even is None else self.base.coerce(even)
        o = self.base.zero if odd is None else self.base.coerce(odd)
        return TrifieldScalar(self, e, o)

    @property
    def zero(self) -> "TrifieldScalar":
        return TrifieldScalar(self, self.base.zero, self.base.zero)

    @property
    def one(self) -> "TrifieldScalar":
        return TrifieldScalar(self, self.base.one, self.base.zero)

    @property
    def one_sharp(self) -> "TrifieldScalar":
        return TrifieldScalar(self, self.base.zero, self.base.one)

    def random_scalar(self, rng) -> "TrifieldScalar":
        return TrifieldScalar(
            self, self.base.random_element(rng), self.base.random_element(rng)
        )

    def descriptor(self) -> str:
        if self.kind == "twisted":
            return self.base.name
        return self.base.name

    def __str__(self):
        return self.descriptor()


def symmetric_model(field) -> TrifieldModel:
    return TrifieldModel("symmetric", field)

def twisted_model(p: int) -> TrifieldModel:
    return TrifieldModel("twisted", QuadraticField(p))


class TrifieldScalar:
    """Graded scalar even + odd*1# over a model's base field."""

    __slots__ = ("model", "even", "odd")

    def __init__(self, model: TrifieldModel, even, odd):
        self.model = model
        self.even = even
        self.odd = odd

    def _check(self, other: "TrifieldScalar"):
        if not isinstance(other, TrifieldScalar):
            raise DomainMismatchError(f"expected a scalar, got {other!r}")
        if other.model != self.model:
            raise DomainMismatchError("scalars from different models")

    def __add__(self, other):
        self._check(other)
        return TrifieldScalar(self.model, self.even + other.even, self.odd + other.odd)

    def __sub__(self, other):
        self._check(other)
        return TrifieldScalar(self.model, self.even - other.even, self.odd - other.odd)

    def __neg__(self):
        return TrifieldScalar(self.model, -self.even, -self.odd)

    def __mul__(self, other):
        self._check(other)
        # (a, s)(b, t) = (a b, a t + s sigma(b)); the odd-by-odd product is 0
        return TrifieldScalar(
            self.model,
            self.even * other.even,
            self.even * other.odd + self.odd * self.model.sigma(other.even),
        )

    def sharp(self, other: "TrifieldScalar") -> "TrifieldScalar":
        self._check(other)
        if self.even != self.model.base.zero or other.even != self.model.base.zero:
            raise SharpOnEvenPartError(
                "the local product is defined on purely odd scalars only"
            )
        return TrifieldScalar(self.model, self.model.base.zero, self.odd * other.odd)

    def inverse_even(self) -> "TrifieldScalar":
        if self.odd != self.model.base.zero:
            raise ValueError("inverse_even applies to purely even scalars")
        return TrifieldScalar(
            self.model, self.model.base.inv(self.even), self.model.base.zero
        )

    @property
    def is_zero(self) -> bool:
        z = self.model.base.zero
        return self.even == z and self.odd == z

    @property
    def is_even(self) -> bool:
        return self.odd == self.model.base.zero

    @property
    def is_odd(self) -> bool:
        return self.even == self.model.base.zero

    def __eq__(self, other):
        if not isinstance(other, TrifieldScalar):
            return NotImplemented
        return (
            self.model == other.model
            and self.even == other.even
            and self.odd == other.odd
        )

    def __hash__(self):
        return hash((self.even, self.odd))

    def text(self) -> str:
        """Canonical form `a + b#`, omitting zero components."""
        base = self.model.base
        pieces = []
        if self.even != base.zero:
            neg, mag = base.split_sign(self.even)
            pieces.append((neg, base.literal(mag)))
        if self.odd != base.zero:
            neg, mag = base.split_sign(self.odd)
            if mag == base.one:
                body = "1#"
            elif base.atomic(mag):
                body = f"{base.literal(mag)}#"
            else:
                body = f"({base.literal(mag)})*1#"
            pieces.append((neg, body))
        if not pieces:
            return "0"
        out = []
        for i, (neg, body) in enumerate(pieces):
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)

    def __repr__(self):
        return self.text()

    def __str__(self):
        return self.text()
