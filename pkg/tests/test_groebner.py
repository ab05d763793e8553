"""Buchberger engine: S-polynomials, reduced bases, membership, radicals."""

import random
from fractions import Fraction

import pytest

from trikernel import (
    GREVLEX,
    GRLEX,
    LEX,
    PolyRing,
    QQ,
    VariableSet,
    buchberger,
    ideal_member,
    ideal_trivial,
    minimal_power,
    normal_form,
    prime_field,
    radical_member,
    representation,
    s_polynomial,
)
from conftest import random_plain_poly
from oracles import linear_membership


def ring_qq(n=2, order=GREVLEX):
    return PolyRing(QQ, VariableSet.even(n), order)


def test_s_polynomial_textbook():
    R = ring_qq(order=GRLEX)
    x, y = R.variable(0), R.variable(1)
    f = x**3 - 2 * x * y
    g = x**2 * y - 2 * y**2 + x
    # lcm is x^3*y; y*f - x*g = -x^2
    assert s_polynomial(f, g) == -(x**2)
    with pytest.raises(ValueError):
        s_polynomial(R.zero(), f)


def test_buchberger_tiny():
    R = ring_qq()
    x, y = R.variable(0), R.variable(1)
    gb = buchberger([x**2 + y, y])
    assert gb.basis == (y, x**2)
    assert gb.contains(x**2 * y + y**2)
    assert not gb.contains(x)
    assert not gb.is_trivial()


def test_buchberger_textbook_reduced_basis():
    R = ring_qq(order=GRLEX)
    x, y = R.variable(0), R.variable(1)
    gb = buchberger([x**3 - 2 * x * y, x**2 * y - 2 * y**2 + x])
    assert gb.basis == (y**2 - Fraction(1, 2) * x, x * y, x**2)


def test_buchberger_trivial_and_degenerate():
    R = ring_qq()
    x = R.variable(0)
    assert buchberger([x, x - 1]).is_trivial()
    assert buchberger([], R).basis == ()
    assert buchberger([R.zero()], R).basis == ()
    with pytest.raises(ValueError):
        buchberger([])
    assert ideal_member(R.zero(), [], R)
    assert not ideal_member(R.one(), [], R)
    assert ideal_trivial([R.one()], R)
    assert not ideal_trivial([x], R)


def test_reduced_basis_properties_random():
    rng = random.Random(11)
    F5 = prime_field(5)
    R = PolyRing(F5, VariableSet.even(2))
    for _ in range(40):
        gens = [
            random_plain_poly(R, rng, max_degree=2, max_terms=3, allow_zero=False)
            for _ in range(rng.randint(1, 3))
        ]
        gb = buchberger(gens)
        basis = gb.basis
        # monic, sorted ascending, pairwise fully reduced
        for i, p in enumerate(basis):
            assert p.leading_coeff() == F5.one
            if i:
                assert R.order.key(basis[i - 1].leading_monomial()) < R.order.key(
                    p.leading_monomial()
                )
            others = [q for q in basis if q is not p]
            for m, _ in p.terms:
                assert not any(q.leading_monomial().divides(m) for q in others)
        # every S-polynomial of basis pairs reduces to zero
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                assert normal_form(s_polynomial(basis[i], basis[j]), gb).is_zero
        # generators are members of their own ideal
        for g in gens:
            assert gb.contains(g)


def test_reduced_basis_permutation_invariance():
    rng = random.Random(23)
    R = ring_qq()
    for _ in range(25):
        gens = [
            random_plain_poly(R, rng, max_degree=2, max_terms=3, allow_zero=False)
            for _ in range(3)
        ]
        reference = buchberger(gens).basis
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert buchberger(shuffled).basis == reference
        assert buchberger(list(reversed(gens))).basis == reference


def test_cofactor_tracking_identity():
    rng = random.Random(37)
    for field in (QQ, prime_field(5)):
        R = PolyRing(field, VariableSet.even(2))
        for _ in range(25):
            gens = [
                random_plain_poly(R, rng, max_degree=2, max_terms=3, allow_zero=False)
                for _ in range(rng.randint(1, 3))
            ]
            gb = buchberger(gens, track_cofactors=True)
            assert gb.cofactors is not None
            for basis_poly, row in zip(gb.basis, gb.cofactors):
                acc = R.zero()
                for h, g in zip(row, gens):
                    acc = acc + h * g
                assert acc == basis_poly


def test_membership_examples():
    R = ring_qq()
    x, y = R.variable(0), R.variable(1)
    gens = [x * y - 1, y**2 - 1]
    assert ideal_member(x * y**2 - x, gens)
    assert ideal_member((x - y) * (x * y - 1) + x * (y**2 - 1), gens)
    assert not ideal_member(x, gens)


def test_membership_matches_linear_oracle():
    rng = random.Random(41)
    F5 = prime_field(5)
    R = PolyRing(F5, VariableSet.even(2))
    for _ in range(30):
        gens = [
            random_plain_poly(R, rng, max_degree=2, max_terms=3, allow_zero=False)
            for _ in range(2)
        ]
        # half the candidates are planted members
        if rng.random() < 0.5:
            f = sum(
                (random_plain_poly(R, rng, max_degree=2, max_terms=2) * g for g in gens),
                R.zero(),
            )
        else:
            f = random_plain_poly(R, rng, max_degree=3, max_terms=3)
        verdict = ideal_member(f, gens, R)
        if verdict:
            cof = representation(f, gens)
            bound = max(
                (h.degree() for h in cof if not h.is_zero), default=0
            )
            assert linear_membership(f, gens, bound)
        else:
            assert not linear_membership(f, gens, f.degree() + 3)


def test_radical_membership():
    R = ring_qq()
    x, y = R.variable(0), R.variable(1)
    assert radical_member(x + y, [x**2, y**2])
    assert radical_member(x, [x**2])
    assert not radical_member(x + 1, [x**2])
    assert radical_member(R.zero(), [x])
    assert not radical_member(y, [x**2])


def test_radical_fresh_variable_collision_free():
    R = ring_qq()
    x = R.variable(0)
    # default fresh name and an explicit one both work
    assert radical_member(x, [x**3])
    assert radical_member(x, [x**3], fresh_name="t")


def test_minimal_power_named():
    R = ring_qq()
    x, y = R.variable(0), R.variable(1)
    assert minimal_power(x, [x**2], 6) == 2
    assert minimal_power(x + y, [x**2, y**2], 6) == 3
    assert minimal_power(x + 1, [x**2], 6) is None
    assert minimal_power(x**2, [x**2], 6) == 1
    assert minimal_power(R.zero(), [x], 6) == 1
    with pytest.raises(ValueError):
        minimal_power(x, [x**2], 0)


def test_minimal_power_agrees_with_radical():
    rng = random.Random(53)
    R = ring_qq()
    found_some = 0
    for _ in range(40):
        f = random_plain_poly(R, rng, max_degree=2, max_terms=2)
        gens = [
            random_plain_poly(R, rng, max_degree=2, max_terms=2, allow_zero=False)
            for _ in range(rng.randint(1, 2))
        ]
        m = minimal_power(f, gens, 4)
        if m is not None:
            found_some += 1
            assert radical_member(f, gens)
            assert ideal_member(f**m, gens, R)
            if m > 1:
                assert not ideal_member(f ** (m - 1), gens, R)
    assert found_some > 0


def test_representation_identity():
    rng = random.Random(67)
    R = ring_qq()
    x, y = R.variable(0), R.variable(1)
    gens = [x**2 + y, x * y - 1]
    for _ in range(20):
        h1 = random_plain_poly(R, rng, max_degree=2, max_terms=2)
        h2 = random_plain_poly(R, rng, max_degree=2, max_terms=2)
        f = h1 * gens[0] + h2 * gens[1]
        cof = representation(f, gens)
        assert cof is not None
        assert cof[0] * gens[0] + cof[1] * gens[1] == f
    assert representation(x, [x**2, y]) is None


def test_normal_form_accepts_iterables():
    R = ring_qq()
    x, y = R.variable(0), R.variable(1)
    f = x**2 * y + x
    assert normal_form(f, [x**2]) == x
    gb = buchberger([x**2])
    assert normal_form(f, gb) == x


def test_lex_elimination_shape():
    # lex basis of intersecting ideals exposes the eliminant in the last variable
    R = ring_qq(order=LEX)
    x, y = R.variable(0), R.variable(1)
    gb = buchberger([x**2 - y, x * y - 1])
    univariate = [p for p in gb.basis if all(m.exps[0] == 0 for m, _ in p.terms)]
    assert univariate and univariate[0] == y**3 - 1
