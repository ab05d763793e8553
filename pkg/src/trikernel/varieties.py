"""Finite trialgebraic sets, vanishing ideals, and inclusion/equality reports.

Enumeration walks every point of the affine trispace over a finite base field
(within a configurable point budget), splits it into the even locus V0 (even
generators vanish on the even components) and the odd locus V1 (odd
generators vanish on the odd components), and the report machinery checks the
forward inclusion of the graded radical inside the vanishing ideal of
(V0, V1) by explicit sampling, then hunts for equality failures such as the
Fermat-type witnesses finite fields produce.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import heapq

from .errors import (
    BudgetExceededError,
    EnumerationUnsupportedError,
)
from .groebner import minimal_power, radical_member
from .poly import Monomial, Polynomial, PolyRing
from .triring import TriIdeal, TriPoint, TriPolynomial, TriPolyRing

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class VarietyPair:
    """The two loci of a closed triideal; the odd locus sits inside the even one."""

    ring: TriPolyRing
    v0: tuple
    v1: tuple

    def __post_init__(self):
        v0set = set(self.v0)
        for p in self.v1:
            if p not in v0set:
                raise ValueError(
                    "odd locus escaped the even locus; this is a kernel bug"
                )


def enumerate_varieties(J: TriIdeal, budget: int | None = None) -> VarietyPair:
    """Walk the whole trispace and collect both loci in canonical point order."""
    J._need_closed("enumeration")
    ring = J.ring
    base = ring.model.base
    if not base.finite:
        raise EnumerationUnsupportedError(
            f"cannot enumerate points over {base.name}"
        )
    if budget is None:
        budget = DEFAULT_BUDGET
    n = ring.n
    total = (base.size**2) ** n
    if total > budget:
        raise BudgetExceededError(
            f"enumeration needs {total} points, budget is {budget}"
        )
    elems = list(base.elements())
    zero = base.zero
    sigma = ring.model.sigma
    v0: list = []
    v1: list = []
    for a0 in itertools.product(elems, repeat=n):
        even_ok = all(g.evaluate(a0) == zero for g in J.even_gens)
        wvals = tuple(sigma(a) for a in a0)
        for a1 in itertools.product(elems, repeat=n):
            pt = TriPoint(
                ring, tuple(ring.model.scalar(e, o) for e, o in zip(a0, a1))
            )
            if even_ok:
                v0.append(pt)
            odd_point = a0 + a1 + wvals
            if all(g.evaluate(odd_point) == zero for g in J.odd_gens):
                v1.append(pt)
    return VarietyPair(ring, tuple(v0), tuple(v1))


def check_containment(pair: VarietyPair) -> bool:
    """Re-verify that the odd locus sits inside the even locus."""
    return set(pair.v1) <= set(pair.v0)


def in_ideal_of(f: TriPolynomial, pair: VarietyPair) -> bool:
    """Does f vanish on the pair: even part on V0, odd part on V1?"""
    if f.ring != pair.ring:
        raise ValueError("element and variety pair from different rings")
    zero = pair.ring.model.base.zero
    for pt in pair.v0:
        evens, _ = pt.components()
        if f.even.evaluate(evens) != zero:
            return False
    for pt in pair.v1:
        _, odds = pt.components()
        if f.odd.evaluate(odds) != zero:
            return False
    return True


def _eval_monomial(m: Monomial, point, field):
    val = field.one
    for coord, e in zip(point, m.exps):
        if e:
            val = val * coord**e
    return val


def vanishing_ideal(points, ring: PolyRing):
    """Reduced basis of all polynomials vanishing on a finite point set.

    Evaluation-driven: candidate monomials are processed in increasing order;
    a candidate whose evaluation vector is linearly dependent on those of the
    standard monomials found so far closes off a basis element, otherwise it
    becomes a standard monomial and its variable multiples queue up.  The
    empty set yields {1}.
    """
    if ring.nvars < 1:
        raise ValueError("the variable set must not be empty")
    field = ring.field
    pts: list = []
    seen_pts = set()
    for p in points:
        tup = tuple(field.coerce(c) for c in p)
        if len(tup) != ring.nvars:
            raise ValueError("point arity does not match the ring")
        if tup not in seen_pts:
            seen_pts.add(tup)
            pts.append(tup)
    zero = field.zero
    key = ring.order.key
    basis: list = []
    rows: list = []  # (pivot index, normalized vector, tracking polynomial)
    start = (0,) * ring.nvars
    heap = [(key(Monomial(start)), start)]
    queued = {start}
    while heap:
        _, exps = heapq.heappop(heap)
        m = Monomial(exps)
        if any(g.leading_monomial().divides(m) for g in basis):
            continue
        vec = [_eval_monomial(m, p, field) for p in pts]
        poly = ring.from_pairs([(m, field.one)])
        for pivot, rvec, rpoly in rows:
            c = vec[pivot]
            if c != zero:
                vec = [a - c * b for a, b in zip(vec, rvec)]
                poly = poly - rpoly.scale(c)
        if all(a == zero for a in vec):
            basis.append(poly)
            continue
        pivot = next(i for i, a in enumerate(vec) if a != zero)
        cinv = field.inv(vec[pivot])
        rows.append((pivot, [a * cinv for a in vec], poly.scale(cinv)))
        for j in range(ring.nvars):
            bumped = exps[:j] + (exps[j] + 1,) + exps[j + 1 :]
            if bumped not in queued:
                queued.add(bumped)
                heapq.heappush(heap, (key(Monomial(bumped)), bumped))
    return tuple(basis)


def ideal_of_varieties(pair: VarietyPair) -> TriIdeal:
    """Closed triideal of everything vanishing on the pair."""
    ring = pair.ring
    if not ring.model.base.finite:
        raise EnumerationUnsupportedError("vanishing data needs a finite model")
    even_pts = []
    seen = set()
    for pt in pair.v0:
        evens, _ = pt.components()
        if evens not in seen:
            seen.add(evens)
            even_pts.append(evens)
    odd_pts = []
    seen = set()
    for pt in pair.v1:
        _, odds = pt.components()
        if odds not in seen:
            seen.add(odds)
            odd_pts.append(odds)
    even_gens = vanishing_ideal(even_pts, ring.even_ring)
    odd_gens = vanishing_ideal(odd_pts, ring.odd_ring)
    return ring.close(even_gens, odd_gens)


def _random_poly(ring: PolyRing, rng, max_degree: int = 2, max_terms: int = 3) -> Polynomial:
    pairs = []
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * ring.nvars
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(ring.nvars)] += 1
        pairs.append((Monomial(exps), ring.field.random_element(rng)))
    return ring.from_pairs(pairs)


def _sample_radical_members(J: TriIdeal, rng, samples: int):
    """Deterministically sample members of the graded radical, witnesses verified.

    Every sampled element is constructed so that some power of its even part
    lies in the even ideal and some local-product power of its odd part lies
    in the odd ideal: generators and their combinations have exponent one,
    and low-degree candidates are admitted only when an explicit power search
    finds their exponent.
    """
    ring = J.ring
    out: list = []
    for g in J.even_gens:
        out.append(ring.tri(even=g))
    for g in J.odd_gens:
        out.append(ring.tri(odd=g))

    def combo(gens, target):
        acc = target.zero()
        for g in gens:
            if rng.random() < 0.7:
                acc = acc + _random_poly(target, rng) * g
        return acc

    for _ in range(samples):
        even = combo(J.even_gens, ring.even_ring)
        odd = combo(J.odd_gens, ring.odd_ring)
        out.append(ring.tri(even=even, odd=odd))

    even_cands = [ring.even_ring.variable(j) for j in range(ring.even_ring.nvars)]
    odd_cands = [ring.odd_ring.variable(j) for j in range(ring.odd_ring.nvars)]
    for cand in even_cands:
        if J.even_gens and minimal_power(cand, list(J.even_gens), 4) is not None:
            out.append(ring.tri(even=cand))
    for cand in odd_cands:
        if J.odd_gens and minimal_power(cand, list(J.odd_gens), 4) is not None:
            out.append(ring.tri(odd=cand))
    return out[: max(samples, len(out))]


@dataclass(frozen=True)
class NullstellensatzReport:
    """Inclusion/equality findings for one closed triideal over a finite model."""

    ideal_summary: str
    v0_count: int
    v1_count: int
    inclusion: str
    equality_failures: tuple

    def to_text(self) -> str:
        lines = [
            f"triideal: {self.ideal_summary}",
            f"v0_count: {self.v0_count}",
            f"v1_count: {self.v1_count}",
            f"inclusion: {self.inclusion}",
        ]
        if self.equality_failures:
            lines.append(f"equality_failures: {len(self.equality_failures)}")
            for i, w in enumerate(self.equality_failures):
                lines.append(f"  [{i}] {w}")
        else:
            lines.append("equality_failures: none")
        return "\n".join(lines)

    def to_kv(self) -> dict:
        return {
            "triideal": self.ideal_summary,
            "v0_count": self.v0_count,
            "v1_count": self.v1_count,
            "inclusion": self.inclusion,
            "equality_failures": list(self.equality_failures),
        }


def nss_check(J: TriIdeal, budget: int | None = None, samples: int = 10) -> NullstellensatzReport:
    """Enumerate, verify the forward inclusion by sampling, report honestly.

    The equality scan takes every generator of the vanishing ideal of the
    enumerated pair and tests graded-radical membership back in J; the
    failures list is exactly the generators that escape, printed canonically.
    The sampling is seeded, so identical calls give identical reports.
    """
    pair = enumerate_varieties(J, budget)
    if not check_containment(pair):
        raise RuntimeError("odd locus escaped the even locus; this is a kernel bug")
    rng = random.Random(1729)
    inclusion = "PASS"
    for member in _sample_radical_members(J, rng, samples):
        if not in_ideal_of(member, pair):
            inclusion = "FAIL"
            break
    vanishing = ideal_of_varieties(pair)
    failures = []
    for g in vanishing.even_gens:
        if not radical_member(g, list(J.even_gens), fresh_name="y"):
            failures.append(str(g))
    for g in vanishing.odd_gens:
        if not radical_member(g, list(J.odd_gens), fresh_name="t"):
            failures.append(str(g))
    return NullstellensatzReport(
        ideal_summary=str(J),
        v0_count=len(pair.v0),
        v1_count=len(pair.v1),
        inclusion=inclusion,
        equality_failures=tuple(failures),
    )
