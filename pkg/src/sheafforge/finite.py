"""Direct images along finite ring maps by restriction of scalars.

A finite map A -> B comes with a module basis of B over A and the columns
of A-linear relations among the basis elements.  Elements of B are rewritten
in the basis by bounded-degree exact linear algebra, which turns any finite
presentation over B into one over A.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg
from .modules import Presentation
from .poly import CoordinateRing, Polynomial, RingMap


@dataclass
class FiniteMapData:
    phi: RingMap
    basis: list            # elements of the target generating it over the source
    basis_relations: list  # columns over the source: relations among the basis

    def __post_init__(self):
        B = self.phi.target
        A = self.phi.source
        self.basis = [B.coerce(e) for e in self.basis]
        self.basis_relations = [[A.coerce(c) for c in col] for col in self.basis_relations]
        for col in self.basis_relations:
            total = B.zero()
            for c, e in zip(col, self.basis):
                total = total + self.phi(c) * e
            if not total.is_zero():
                raise ValueError("basis relation does not hold in the target")


def _source_monomials(A: CoordinateRing, bound: int):
    n = len(A.variables)
    out = []
    for exps in product(range(bound + 1), repeat=n):
        if sum(exps) <= bound:
            out.append(tuple(exps))
    return out


def rewrite_in_basis(data: FiniteMapData, element, bound: int = 12):
    """Coefficients (a_1, ..., a_k) over the source with sum a_i b_i = element.

    Solved degree by degree as an exact linear system; raises if no
    representation exists within the degree bound.
    """
    A = data.phi.source
    B = data.phi.target
    element = B.coerce(element)
    k = len(data.basis)
    for d in range(bound + 1):
        monos = _source_monomials(A, d)
        cols = []
        keys = set()
        images = []
        for i in range(k):
            for mono in monos:
                a = Polynomial(A, {mono: Fraction(1)})
                img = data.phi(a) * data.basis[i]
                images.append((i, mono, img))
                keys |= set(img.terms)
        keys |= set(element.terms)
        keys = sorted(keys)
        key_index = {m: j for j, m in enumerate(keys)}
        matrix_rows = [[Fraction(0)] * len(images) for _ in keys]
        for col, (_, _, img) in enumerate(images):
            for mm, c in img.terms.items():
                matrix_rows[key_index[mm]][col] = c
        rhs = [element.terms.get(mm, Fraction(0)) for mm in keys]
        sol = linalg.solve(matrix_rows, rhs)
        if sol is not None:
            coeffs = [A.zero() for _ in range(k)]
            for val, (i, mono, _) in zip(sol, images):
                if val:
                    coeffs[i] = coeffs[i] + Polynomial(A, {mono: val})
            return coeffs
    raise ValueError("element not representable in the basis within the degree bound")


def pushforward_finite(pres: Presentation, data: FiniteMapData, bound: int = 12) -> Presentation:
    """Presentation over the source of a module presented over the target.

    Generators are g_i * b_j (row-major); relations are the rewritten columns
    of the input matrix multiplied through the basis, plus one copy of the
    basis relations per input generator.
    """
    A = data.phi.source
    k = len(data.basis)
    ngens = pres.ngens * k
    cols = []
    for col in pres.columns():
        for j in range(k):
            new = [A.zero()] * ngens
            for i, entry in enumerate(col):
                coeffs = rewrite_in_basis(data, entry * data.basis[j], bound)
                for jj, c in enumerate(coeffs):
                    new[i * k + jj] = new[i * k + jj] + c
            cols.append(new)
    for rel in data.basis_relations:
        for i in range(pres.ngens):
            new = [A.zero()] * ngens
            for jj, c in enumerate(rel):
                new[i * k + jj] = c
            cols.append(new)
    return Presentation.from_columns(A, ngens, cols)


def span_contains(data: FiniteMapData, elements, candidate, bound: int = 12) -> bool:
    """Whether candidate lies in the source-span of the given target elements."""
    B = data.phi.target
    A = data.phi.source
    elements = [B.coerce(e) for e in elements]
    candidate = B.coerce(candidate)
    for d in range(bound + 1):
        monos = _source_monomials(A, d)
        images = []
        keys = set(candidate.terms)
        for i, e in enumerate(elements):
            for mono in monos:
                a = Polynomial(A, {mono: Fraction(1)})
                img = data.phi(a) * e
                images.append(img)
                keys |= set(img.terms)
        keys = sorted(keys)
        key_index = {m: j for j, m in enumerate(keys)}
        matrix_rows = [[Fraction(0)] * len(images) for _ in keys]
        for col, img in enumerate(images):
            for mm, c in img.terms.items():
                matrix_rows[key_index[mm]][col] = c
        rhs = [candidate.terms.get(mm, Fraction(0)) for mm in keys]
        if linalg.solve(matrix_rows, rhs) is not None:
            return True
    return False


def spans_equal(data: FiniteMapData, elems1, elems2, bound: int = 12) -> bool:
    return all(span_contains(data, elems1, c, bound) for c in elems2) and all(
        span_contains(data, elems2, c, bound) for c in elems1
    )
