"""Buchberger engine and the ideal calculus built on it.

Ideals over quotient rings are handled by adjoining the ring relations to
the generators; every Groebner basis here is computed over the relation-free
cover of the ring.  The engine is the plain Buchberger algorithm with the
coprime-lcm and chain criteria, which is plenty for desk-scale inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .orders import DEGREVLEX, Elimination, MonomialOrder
from .poly import CoordinateRing, Polynomial, _add_terms, _mul_terms, _scale_terms


# ---------------------------------------------------------------------------
# division and Buchberger over a free ring
# ---------------------------------------------------------------------------

def _divides(m, n):
    return all(a <= b for a, b in zip(m, n))


def _quot(m, n):
    return tuple(a - b for a, b in zip(m, n))


def _lcm(m, n):
    return tuple(max(a, b) for a, b in zip(m, n))


def normal_form(f, basis, order):
    """Full normal form of f modulo a list of polynomials (free ring)."""
    ring = f.ring
    work = dict(f.terms)
    out = {}
    lms = []
    for g in basis:
        if not g.is_zero():
            lm = g.leading_monomial(order)
            tail = {mm: cc for mm, cc in g.terms.items() if mm != lm}
            lms.append((lm, g.terms[lm], tail))
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        for lm, lc, tail in lms:
            if _divides(lm, m):
                # the leading term cancels; only the tail feeds back in
                factor = {_quot(m, lm): -c / lc}
                work = _add_terms(work, _mul_terms(factor, tail))
                break
        else:
            out[m] = c
    return Polynomial(ring, out, reduce=False)


def divide_single(f, g, order=None):
    """(q, r) with f = q*g + r and no term of r divisible by lm(g)."""
    order = order or f.ring.order
    lm = g.leading_monomial(order)
    lc = g.terms[lm]
    tail = {mm: cc for mm, cc in g.terms.items() if mm != lm}
    work = dict(f.terms)
    q = {}
    r = {}
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        if _divides(lm, m):
            qm = _quot(m, lm)
            qc = c / lc
            q[qm] = q.get(qm, 0) + qc
            work = _add_terms(work, _mul_terms({qm: -qc}, tail))
        else:
            r[m] = c
    return (
        Polynomial(f.ring, {m: c for m, c in q.items() if c}, reduce=False),
        Polynomial(f.ring, r, reduce=False),
    )


def s_polynomial(f, g, order):
    lf = f.leading_monomial(order)
    lg = g.leading_monomial(order)
    l = _lcm(lf, lg)
    tf = {_quot(l, lf): Fraction(1) / f.terms[lf]}
    tg = {_quot(l, lg): Fraction(1) / g.terms[lg]}
    terms = _add_terms(_mul_terms(tf, f.terms), {m: -c for m, c in _mul_terms(tg, g.terms).items()})
    return Polynomial(f.ring, terms, reduce=False)


def buchberger(polys, order):
    """Reduced Groebner basis of the ideal generated by ``polys`` (free ring)."""
    G = []
    for p in polys:
        p = normal_form(p, G, order)
        if not p.is_zero():
            G.append(p)
    if not G:
        return []

    lms = [g.leading_monomial(order) for g in G]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}

    def lcm_deg(pair):
        i, j = pair
        return sum(_lcm(lms[i], lms[j]))

    while pairs:
        i, j = min(pairs, key=lambda p: (lcm_deg(p), p))
        pairs.discard((i, j))
        l = _lcm(lms[i], lms[j])
        # coprime criterion
        if l == tuple(a + b for a, b in zip(lms[i], lms[j])):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if _divides(lms[k], l):
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 not in pairs and p2 not in pairs:
                    skip = True
                    break
        if skip:
            continue
        s = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if not s.is_zero():
            G.append(s)
            lms.append(s.leading_monomial(order))
            k = len(G) - 1
            pairs.update((i2, k) for i2 in range(k))
    return autoreduce(G, order)


def autoreduce(G, order):
    """Interreduce to the unique monic reduced basis."""
    G = [g for g in G if not g.is_zero()]
    changed = True
    while changed:
        changed = False
        for i in range(len(G)):
            rest = G[:i] + G[i + 1:]
            r = normal_form(G[i], rest, order)
            if r.terms != G[i].terms:
                changed = True
                if r.is_zero():
                    G = rest
                    break
                G[i] = r
    out = []
    for g in G:
        lc = g.leading_coeff(order)
        out.append(Polynomial(g.ring, _scale_terms(g.terms, Fraction(1) / lc), reduce=False))
    out.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return out


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

@dataclass
class DimensionInfo:
    dim: int
    codim: int


class Ideal:
    """An ideal in a coordinate ring, with a cached reduced Groebner basis."""

    def __init__(self, ring: CoordinateRing, generators):
        self.ring = ring
        self.generators = [ring.coerce(g) for g in generators]
        self._gb = {}

    def _free_gens(self):
        free = self.ring.free()
        gens = [free.coerce(self.ring.to_free(g)) for g in self.generators]
        gens += [free.coerce(r) for r in self.ring.relation_gb()] if self.ring.relations else []
        return [g for g in gens if not g.is_zero()]

    def groebner_basis(self, order: MonomialOrder | None = None):
        order = order or self.ring.order
        if order not in self._gb:
            self._gb[order] = buchberger(self._free_gens(), order)
        return self._gb[order]

    def contains(self, f, order=None):
        f = self.ring.coerce(f)
        order = order or self.ring.order
        free_f = self.ring.to_free(f)
        return normal_form(free_f, self.groebner_basis(order), order).is_zero()

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.generators)

    def equals(self, other):
        return self.contains_ideal(other) and other.contains_ideal(self)

    def is_unit(self):
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant() and not gb[0].is_zero()

    def is_zero(self):
        return all(self.ring.reduce(g).is_zero() for g in self.generators)

    def reduced_generators(self):
        """The reduced GB mapped back into the ring (relation elements drop out)."""
        gens = [self.ring.from_free(g) for g in self.groebner_basis()]
        return [g for g in gens if not g.is_zero()]

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"

    # -- calculus --------------------------------------------------------
    def sum(self, other):
        return Ideal(self.ring, self.generators + other.generators)

    def product(self, other):
        gens = [f * g for f in self.generators for g in other.generators]
        return Ideal(self.ring, gens)

    def intersect(self, other):
        """Intersection via the auxiliary variable t: eliminate t from t*I + (1-t)*J."""
        ring = self.ring
        ext, lift, proj = _extend(ring, ["@t"])
        t = ext.var("@t")
        one = ext.one()
        gens = [t * lift(g) for g in self._free_gens()]
        gens += [(one - t) * lift(g) for g in other._free_gens()]
        elim = buchberger(gens, Elimination((ext.index("@t"),)))
        kept = [proj(g) for g in elim if ext.index("@t") not in g.variables_used()]
        return Ideal(ring, [g for g in kept if not g.is_zero()])

    def quotient(self, other):
        """(I : J), computed via syzygies: q*g in I is a rank-1 module condition."""
        from .modgb import syzygy_generators

        result = None
        free = self.ring.free()
        for g in other.generators:
            g0 = free.coerce(self.ring.to_free(g))
            if g0.is_zero():
                continue
            vectors = [[g0]] + [[h] for h in self._free_gens()]
            syz = syzygy_generators(vectors, free)
            gens = [self.ring.from_free(s[0]) for s in syz]
            colon = Ideal(self.ring, [h for h in gens if not h.is_zero()])
            result = colon if result is None else result.intersect(colon)
        if result is None:
            # J = (0): (I : 0) is the unit ideal
            return Ideal(self.ring, [self.ring.one()])
        return result

    def saturation(self, f):
        """((I : f^inf), exponent).

        The saturation itself comes from the added-variable trick; the
        exponent is the least k with (I : f^k) stable, found by iterated
        quotients.
        """
        f = self.ring.coerce(f)
        if f.is_zero():
            raise ValueError("cannot saturate by zero")
        ring = self.ring
        ext, lift, proj = _extend(ring, ["@u"])
        u = ext.var("@u")
        gens = [lift(g) for g in self._free_gens()]
        gens.append(ext.one() - lift(ring.to_free(f)) * u)
        elim = buchberger(gens, Elimination((ext.index("@u"),)))
        kept = [proj(g) for g in elim if ext.index("@u") not in g.variables_used()]
        sat = Ideal(ring, [g for g in kept if not g.is_zero()])

        exponent = 0
        current = self
        fI = Ideal(ring, [f])
        while not current.equals(sat):
            current = current.quotient(fI)
            exponent += 1
            if exponent > 200:
                raise RuntimeError("saturation exponent failed to stabilize")
        return sat, exponent

    def saturation_by_ideal(self, other):
        """(I : J^inf) as the intersection of the single-generator saturations."""
        result = None
        for g in other.generators:
            if self.ring.reduce(g).is_zero():
                continue
            sat, _ = self.saturation(g)
            result = sat if result is None else result.intersect(sat)
        if result is None:
            raise ValueError("cannot saturate by the zero ideal")
        return result

    def eliminate(self, drop_names):
        """I intersected with Q[kept variables], as an ideal of the kept-variable ring."""
        drop_names = list(drop_names)
        if not drop_names:
            return self
        ring = self.ring
        drop = tuple(sorted(ring.index(v) for v in drop_names))
        order = Elimination(drop)
        gb = buchberger(self._free_gens(), order)
        kept_vars = [v for i, v in enumerate(ring.variables) if i not in drop]
        target = CoordinateRing(kept_vars, DEGREVLEX)
        positions = {}
        for i, v in enumerate(ring.variables):
            if i not in drop:
                positions[i] = target.index(v)
        out = []
        for g in gb:
            if g.variables_used() & set(drop):
                continue
            out.append(g.map_coefficients_to(target, positions))
        return Ideal(target, out)

    def dimension(self):
        """Krull dimension of ring/I via independent sets modulo leading terms."""
        from itertools import combinations

        n = len(self.ring.variables)
        ring_dim = self.ring.dimension() if self.ring.relations else n
        gb = self.groebner_basis()
        if any(g.is_constant() and not g.is_zero() for g in gb):
            return DimensionInfo(-1, ring_dim + 1)
        lms = [g.leading_monomial(self.ring.order) for g in gb]
        for size in range(n, -1, -1):
            for subset in combinations(range(n), size):
                s = set(subset)
                if not any(all(i in s for i, e in enumerate(m) if e) for m in lms):
                    return DimensionInfo(size, ring_dim - size)
        return DimensionInfo(0, ring_dim)

    def radical_contains(self, f):
        """f in rad(I), by the added-variable trick."""
        f = self.ring.coerce(f)
        ring = self.ring
        ext, lift, _ = _extend(ring, ["@u"])
        u = ext.var("@u")
        gens = [lift(g) for g in self._free_gens()]
        gens.append(ext.one() - lift(ring.to_free(f)) * u)
        gb = buchberger(gens, DEGREVLEX)
        return len(gb) == 1 and gb[0].is_constant()


def _extend(ring, new_vars):
    """Free ring with extra variables appended; returns (ext, lift, project)."""
    base = ring.free()
    ext = CoordinateRing(tuple(base.variables) + tuple(new_vars), DEGREVLEX)
    lift_positions = {i: i for i in range(len(base.variables))}

    def lift(f):
        return f.map_coefficients_to(ext, lift_positions)

    def project(f):
        n = len(base.variables)
        out = {}
        for m, c in f.terms.items():
            if any(m[n:]):
                raise ValueError("polynomial still involves an auxiliary variable")
            out[m[:n]] = c
        return Polynomial(base, out, reduce=False)

    return ext, lift, project


def poly_lcm(f, g):
    """lcm of two polynomials over a free ring, via (f) intersect (g)."""
    ring = f.ring
    inter = Ideal(ring, [f]).intersect(Ideal(ring, [g]))
    gb = inter.groebner_basis()
    if len(gb) != 1:
        raise ValueError("intersection of principal ideals is not principal")
    return gb[0]


def poly_gcd(f, g):
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    l = poly_lcm(f, g)
    q, r = divide_single(f * g, l)
    assert r.is_zero()
    lc = q.leading_coeff()
    return Polynomial(q.ring, _scale_terms(q.terms, Fraction(1) / lc), reduce=False)


def squarefree_part(f):
    """Product of the distinct irreducible factors of f (free ring, monic)."""
    g = f
    for v in f.ring.variables:
        g = poly_gcd(g, f.diff(v))
    q, r = divide_single(f, g)
    assert r.is_zero()
    lc = q.leading_coeff()
    return Polynomial(q.ring, _scale_terms(q.terms, Fraction(1) / lc), reduce=False)


# -- convenience wrappers matching the operation names -----------------------

def groebner_basis(ideal: Ideal, order=None):
    return ideal.groebner_basis(order)


def membership(f, ideal: Ideal):
    return ideal.contains(f)


def ideal_ops(I: Ideal, J: Ideal, op: str) -> Ideal:
    if op == "sum":
        return I.sum(J)
    if op == "product":
        return I.product(J)
    if op == "intersect":
        return I.intersect(J)
    if op == "quotient":
        return I.quotient(J)
    raise ValueError(f"unknown ideal operation {op!r}")


def saturate(I: Ideal, f):
    return I.saturation(f)


def eliminate(I: Ideal, drop):
    return I.eliminate(drop)


def dimension(I: Ideal) -> DimensionInfo:
    return I.dimension()
