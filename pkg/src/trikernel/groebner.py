"""Buchberger engine: reduced bases, membership tests, radical membership.

The basis computation is deterministic: pairs are selected by smallest lcm
degree (ties by the active order's key, then by index), the coprime and chain
criteria prune useless pairs, and the result is the unique reduced monic
basis, sorted ascending by leading monomial.  Optional cofactor tracking
expresses every basis element as an explicit combination of the input
generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Polynomial, PolyRing, divide


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    generators: tuple
    basis: tuple
    cofactors: tuple | None = None  # basis[i] == sum_j cofactors[i][j] * generators[j]

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero

    def is_trivial(self) -> bool:
        return self.basis == (self.ring.one(),)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """Cancel the leading terms of f and g against their lcm."""
    if f.is_zero or g.is_zero:
        raise ValueError("s-polynomial of the zero polynomial")
    f._check(g)
    field = f.ring.field
    lcm = f.leading_monomial().lcm(g.leading_monomial())
    left = f.mul_term(field.inv(f.leading_coeff()), lcm // f.leading_monomial())
    right = g.mul_term(field.inv(g.leading_coeff()), lcm // g.leading_monomial())
    return left - right


def normal_form(f: Polynomial, basis) -> Polynomial:
    """Remainder of f under full reduction by a basis (list or GroebnerBasis)."""
    if isinstance(basis, GroebnerBasis):
        basis = basis.basis
    return divide(f, list(basis))[1]


def _row_zero(ring: PolyRing, width: int) -> tuple:
    z = ring.zero()
    return (z,) * width


def _row_unit(ring: PolyRing, width: int, at: int) -> tuple:
    row = [ring.zero()] * width
    row[at] = ring.one()
    return tuple(row)


def _row_sub(r1, r2):
    return tuple(a - b for a, b in zip(r1, r2))

def _row_mul_term(row, c, m):
    return tuple(e.mul_term(c, m) for e in row)

def _row_scale(row, c):
    return tuple(e.scale(c) for e in row)

def _row_combine(row, quots, rows):
    out = list(row)
    for q, other in zip(quots, rows):
        if q.is_zero:
            continue
        for j, e in enumerate(other):
            if not e.is_zero:
                out[j] = out[j] - q * e
    return tuple(out)


def buchberger(gens, ring: PolyRing | None = None, *, track_cofactors: bool = False) -> GroebnerBasis:
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring from an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            g._check(gens[0])
    field = ring.field
    width = len(gens)
    track = track_cofactors

    polys: list = []
    rows: list = []
    for idx, g in enumerate(gens):
        if g.is_zero:
            continue
        cinv = field.inv(g.leading_coeff())
        polys.append(g.scale(cinv))
        if track:
            rows.append(_row_scale(_row_unit(ring, width, idx), cinv))

    key = ring.order.key
    pairs = {(i, j) for i in range(len(polys)) for j in range(i + 1, len(polys))}
    done: set = set()

    def pair_rank(pr):
        i, j = pr
        lcm = polys[i].leading_monomial().lcm(polys[j].leading_monomial())
        return (lcm.degree, key(lcm), i, j)

    while pairs:
        i, j = min(pairs, key=pair_rank)
        pairs.discard((i, j))
        done.add((i, j))
        lm_i = polys[i].leading_monomial()
        lm_j = polys[j].leading_monomial()
        if lm_i.coprime(lm_j):
            continue
        lcm = lm_i.lcm(lm_j)
        skip = False
        for k in range(len(polys)):
            if k == i or k == j:
                continue
            if not polys[k].leading_monomial().divides(lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in done and b in done:
                skip = True
                break
        if skip:
            continue
        s = polys[i].mul_term(field.one, lcm // lm_i) - polys[j].mul_term(
            field.one, lcm // lm_j
        )
        quots, rem = divide(s, polys)
        if rem.is_zero:
            continue
        cinv = field.inv(rem.leading_coeff())
        new_poly = rem.scale(cinv)
        if track:
            srow = _row_sub(
                _row_mul_term(rows[i], field.one, lcm // lm_i),
                _row_mul_term(rows[j], field.one, lcm // lm_j),
            )
            rows.append(_row_scale(_row_combine(srow, quots, rows), cinv))
        polys.append(new_poly)
        new = len(polys) - 1
        for k in range(new):
            pairs.add((k, new))

    # minimalize: drop elements whose leading monomial another one divides
    order_idx = sorted(range(len(polys)), key=lambda i: key(polys[i].leading_monomial()))
    kept: list = []
    kept_rows: list = []
    for i in order_idx:
        lm = polys[i].leading_monomial()
        if any(p.leading_monomial().divides(lm) for p in kept):
            continue
        kept.append(polys[i])
        if track:
            kept_rows.append(rows[i])

    # inter-reduce tails to the unique reduced basis
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1 :]
            quots, rem = divide(kept[i], others)
            if rem != kept[i]:
                changed = True
                if track:
                    other_rows = kept_rows[:i] + kept_rows[i + 1 :]
                    kept_rows[i] = _row_combine(kept_rows[i], quots, other_rows)
                kept[i] = rem

    final = sorted(range(len(kept)), key=lambda i: key(kept[i].leading_monomial()))
    basis = tuple(kept[i] for i in final)
    cof = tuple(kept_rows[i] for i in final) if track else None
    return GroebnerBasis(ring, tuple(gens), basis, cof)


def ideal_member(f: Polynomial, gens, ring: PolyRing | None = None) -> bool:
    """Exact membership of f in the ideal the generators span."""
    gb = buchberger(gens, ring=ring if ring is not None else f.ring)
    return gb.contains(f)


def ideal_trivial(gens, ring: PolyRing | None = None) -> bool:
    """True when the generators span the whole ring (reduced basis {1})."""
    gb = buchberger(gens, ring=ring)
    return gb.is_trivial()


def radical_member(f: Polynomial, gens, *, fresh_name: str = "y") -> bool:
    """Radical membership via one fresh variable: 1 in <gens, fresh*f - 1>."""
    if f.is_zero:
        return True
    ring = f.ring
    ext = ring.extend(fresh_name)
    lifted = [g.extend_to(ext) for g in gens if not g.is_zero]
    fresh = ext.variable(ext.nvars - 1)
    lifted.append(fresh * f.extend_to(ext) - ext.one())
    return ideal_trivial(lifted, ring=ext)


def minimal_power(f: Polynomial, gens, bound: int, ring: PolyRing | None = None):
    """Least m <= bound with f**m in the ideal, or None."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    gb = buchberger(gens, ring=ring if ring is not None else f.ring)
    power = f.ring.one()
    for m in range(1, bound + 1):
        power = power * f
        if normal_form(power, gb).is_zero:
            return m
    return None


def representation(f: Polynomial, gens):
    """Cofactors h with f == sum(h[j]*gens[j]), or None when f is no member."""
    gens = list(gens)
    gb = buchberger(gens, ring=f.ring, track_cofactors=True)
    quots, rem = divide(f, list(gb.basis))
    if not rem.is_zero:
        return None
    ring = f.ring
    out = [ring.zero() for _ in gens]
    for q, row in zip(quots, gb.cofactors):
        if q.is_zero:
            continue
        for j, e in enumerate(row):
            if not e.is_zero:
                out[j] = out[j] + q * e
    return out
