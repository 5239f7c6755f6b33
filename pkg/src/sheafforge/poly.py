"""Multivariate polynomials with exact rational coefficients.

A polynomial is a map from exponent tuples to nonzero Fractions, attached to
a :class:`CoordinateRing`.  Rings may carry relations; in that case every
polynomial attached to the ring is kept in normal form with respect to the
reduced Groebner basis of the relations (computed lazily, over the relation
free cover of the ring).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .orders import DEGREVLEX, MonomialOrder


class RingMismatch(ValueError):
    pass


def _add_terms(a, b):
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def _neg_terms(a):
    return {m: -c for m, c in a.items()}


def _mul_terms(a, b):
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
            s = out.get(m, 0) + c1 * c2
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def _scale_terms(a, c):
    if not c:
        return {}
    return {m: co * c for m, co in a.items()}


class Polynomial:
    """Immutable polynomial over a :class:`CoordinateRing`."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms, *, reduce=True):
        if reduce and ring.relations:
            terms = ring._reduce_terms(terms)
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- queries ---------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        return next(iter(self.terms.values()))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def weighted_degrees(self, weights):
        return {sum(w * e for w, e in zip(weights, m)) for m in self.terms}

    def leading_monomial(self, order=None):
        order = order or self.ring.order
        return max(self.terms, key=order.key)

    def leading_coeff(self, order=None):
        return self.terms[self.leading_monomial(order)]

    def sorted_terms(self, order=None):
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def variables_used(self):
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return used

    # -- arithmetic ------------------------------------------------------
    def _check(self, other):
        if self.ring is not other.ring:
            if self.ring.variables != other.ring.variables:
                raise RingMismatch(
                    f"variable mismatch: {self.ring.variables} vs {other.ring.variables}"
                )

    def __add__(self, other):
        other = self.ring.coerce(other)
        self._check(other)
        return Polynomial(self.ring, _add_terms(self.terms, other.terms), reduce=False)

    def __sub__(self, other):
        other = self.ring.coerce(other)
        self._check(other)
        return Polynomial(self.ring, _add_terms(self.terms, _neg_terms(other.terms)), reduce=False)

    def __neg__(self):
        return Polynomial(self.ring, _neg_terms(self.terms), reduce=False)

    def __mul__(self, other):
        other = self.ring.coerce(other)
        self._check(other)
        return Polynomial(self.ring, _mul_terms(self.terms, other.terms))

    def __rmul__(self, other):
        return self.__mul__(other)

    __radd__ = __add__

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.coerce(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.variables == other.ring.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self.terms.items())))
        return self._hash

    # -- misc ------------------------------------------------------------
    def diff(self, var):
        i = self.ring.index(var)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                m2 = m[:i] + (m[i] - 1,) + m[i + 1:]
                out[m2] = out.get(m2, 0) + c * m[i]
        out = {m: c for m, c in out.items() if c}
        return Polynomial(self.ring, out)

    def evaluate(self, point):
        """Evaluate at a rational point given as a dict var -> Fraction."""
        vals = [Fraction(point[v]) for v in self.ring.variables]
        total = Fraction(0)
        for m, c in self.terms.items():
            prod = c
            for v, e in zip(vals, m):
                if e:
                    prod *= v ** e
            total += prod
        return total

    def map_coefficients_to(self, ring, var_positions):
        """Reinterpret in ``ring``; exponent i of self goes to var_positions[i]."""
        n = len(ring.variables)
        out = {}
        for m, c in self.terms.items():
            exps = [0] * n
            for i, e in enumerate(m):
                if e:
                    exps[var_positions[i]] = e
            out[tuple(exps)] = c
        return Polynomial(ring, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for v, e in zip(self.ring.variables, m):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            body = "*".join(factors)
            if not body:
                chunk = str(c)
            elif c == 1:
                chunk = body
            elif c == -1:
                chunk = f"-{body}"
            else:
                chunk = f"{c}*{body}"
            parts.append(chunk)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    __repr__ = __str__


class CoordinateRing:
    """A polynomial ring over Q, optionally modulo a relation ideal.

    All arithmetic in a quotient ring is performed modulo a fixed reduced
    Groebner basis of the relations under the ring's order.  Whether the
    relation ideal is prime is never decided here; operations needing a
    domain take a caller assertion (see modules.py).
    """

    def __init__(self, variables, order: MonomialOrder = DEGREVLEX, relations=()):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        self.order = order
        self.relations = tuple(relations)
        self._index = {v: i for i, v in enumerate(self.variables)}
        self._free = None
        self._relation_gb = None

    # -- construction ----------------------------------------------------
    def free(self):
        """The same variables and order without relations."""
        if not self.relations:
            return self
        if self._free is None:
            self._free = CoordinateRing(self.variables, self.order)
        return self._free

    def quotient(self, relations):
        rels = tuple(self.to_free(r) for r in relations)
        return CoordinateRing(self.variables, self.order, self.relations + rels)

    def with_order(self, order):
        return CoordinateRing(self.variables, order, self.relations)

    def index(self, var):
        return self._index[var]

    def gens(self):
        n = len(self.variables)
        out = []
        for i in range(n):
            m = tuple(int(j == i) for j in range(n))
            out.append(Polynomial(self, {m: Fraction(1)}))
        return out

    def var(self, name):
        return self.gens()[self.index(name)]

    def zero(self):
        return Polynomial(self, {}, reduce=False)

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = Fraction(c)
        if not c:
            return self.zero()
        return Polynomial(self, {(0,) * len(self.variables): c}, reduce=False)

    def coerce(self, value):
        if isinstance(value, Polynomial):
            if value.ring is self:
                return value
            if value.ring.variables == self.variables:
                return Polynomial(self, dict(value.terms))
            raise RingMismatch(f"cannot coerce {value} into {self}")
        return self.constant(value)

    def poly(self, terms):
        return Polynomial(self, dict(terms))

    def to_free(self, f):
        """View a polynomial of this ring in the relation-free cover."""
        return Polynomial(self.free(), dict(f.terms), reduce=False)

    def from_free(self, f):
        return Polynomial(self, dict(f.terms))

    # -- relation handling ----------------------------------------------
    def relation_gb(self):
        if self._relation_gb is None:
            from . import groebner

            free = self.free()
            rels = [Polynomial(free, dict(r.terms), reduce=False) for r in self.relations]
            self._relation_gb = groebner.buchberger(rels, self.order)
        return self._relation_gb

    def _reduce_terms(self, terms):
        from . import groebner

        free = self.free()
        f = Polynomial(free, terms, reduce=False)
        return groebner.normal_form(f, self.relation_gb(), self.order).terms

    def reduce(self, f):
        """Normal form modulo the relations (idempotent)."""
        if not self.relations:
            return self.coerce(f)
        return Polynomial(self, dict(self.coerce(f).terms))

    def __eq__(self, other):
        return (
            isinstance(other, CoordinateRing)
            and self.variables == other.variables
            and self.order == other.order
            and self.relations == other.relations
        )

    def __hash__(self):
        return hash((self.variables, self.order))

    def __str__(self):
        head = "ring " + ", ".join(self.variables)
        if self.relations:
            head += " | relations: " + ", ".join(str(r) for r in self.relations)
        head += f" | order: {self.order}"
        return head

    __repr__ = __str__

    def dimension(self):
        """Krull dimension of the ring itself."""
        from . import groebner

        if not self.relations:
            return len(self.variables)
        return groebner.Ideal(self.free(), list(self.relation_gb())).dimension().dim


class RingMap:
    """A map of coordinate rings given by images of the source variables.

    Construction validates that the source relations map to zero, so every
    RingMap is a genuine ring homomorphism.
    """

    def __init__(self, source: CoordinateRing, target: CoordinateRing, images):
        images = [target.coerce(g) for g in images]
        if len(images) != len(source.variables):
            raise ValueError("need one image per source variable")
        self.source = source
        self.target = target
        self.images = tuple(images)
        for rel in source.relations:
            if not self._apply_terms(rel.terms).is_zero():
                raise ValueError(f"relation {rel} does not map to zero")

    def _apply_terms(self, terms):
        total = self.target.zero()
        for m, c in terms.items():
            prod = self.target.constant(c)
            for g, e in zip(self.images, m):
                if e:
                    prod = prod * g ** e
            total = total + prod
        return total

    def __call__(self, f):
        f = self.source.coerce(f)
        return self._apply_terms(f.terms)

    @classmethod
    def identity(cls, ring):
        return cls(ring, ring, ring.gens())

    def __repr__(self):
        pairs = ", ".join(f"{v} -> {g}" for v, g in zip(self.source.variables, self.images))
        return f"RingMap({pairs})"


def apply_map(phi: RingMap, f: Polynomial) -> Polynomial:
    """Substitute along the map; the result is reduced in the target ring."""
    return phi(f)
