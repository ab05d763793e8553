"""Shared randomized-construction helpers.

Every test seeds its own random.Random so the suite is deterministic.
"""

from trikernel import Monomial


def random_monomial(nvars, rng, max_degree):
    deg = rng.randint(0, max_degree)
    exps = [0] * nvars
    for _ in range(deg):
        exps[rng.randrange(nvars)] += 1
    return Monomial(tuple(exps))


def random_plain_poly(ring, rng, max_degree=2, max_terms=3, allow_zero=True):
    field = ring.field
    terms = {}
    for _ in range(rng.randint(0 if allow_zero else 1, max_terms)):
        m = random_monomial(ring.nvars, rng, max_degree)
        c = field.random_element(rng)
        terms[m] = terms.get(m, field.zero) + c
    p = ring.from_pairs(terms.items())
    if not allow_zero and p.is_zero:
        return ring.one()
    return p


def random_tri_poly(tring, rng, max_degree=3, max_terms=3):
    even = random_plain_poly(tring.even_ring, rng, max_degree, max_terms)
    odd = random_plain_poly(tring.odd_ring, rng, max_degree, max_terms)
    return tring.tri(even=even, odd=odd)


def random_odd_poly(tring, rng, max_degree=3, max_terms=3):
    return tring.tri(odd=random_plain_poly(tring.odd_ring, rng, max_degree, max_terms))
