"""Finitely presented modules over coordinate rings.

A module is given by a presentation matrix: b rows (one per generator of the
ambient free module) and a columns (one per relation).  All heavy lifting is
delegated to the module Groebner engine; quotient rings are handled by
adjoining relation columns r*e_j before any kernel or membership computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import linalg
from .groebner import DimensionInfo, Ideal
from .modgb import (
    module_buchberger,
    module_normal_form,
    submodule_contains,
    syzygy_generators,
    colon_module,
    vec_is_zero,
    vec_zero,
)
from .poly import CoordinateRing, Polynomial


@dataclass
class FreeElement:
    """An element of R^b, stored as a coordinate list."""

    ring: CoordinateRing
    coords: list

    def __post_init__(self):
        self.coords = [self.ring.coerce(c) for c in self.coords]

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


class Presentation:
    """coker(M : R^a -> R^b), with M stored row-major."""

    def __init__(self, ring: CoordinateRing, ngens: int, matrix):
        self.ring = ring
        self.ngens = ngens
        self.matrix = [[ring.coerce(e) for e in row] for row in matrix]
        if len(self.matrix) != ngens:
            raise ValueError("matrix must have one row per generator")
        widths = {len(row) for row in self.matrix}
        if len(widths) > 1:
            raise ValueError("ragged presentation matrix")
        self.nrels = widths.pop() if widths else 0

    @classmethod
    def from_columns(cls, ring, ngens, columns):
        matrix = [[col[i] for col in columns] for i in range(ngens)]
        return cls(ring, ngens, matrix)

    def columns(self):
        return [
            [self.matrix[i][j] for i in range(self.ngens)] for j in range(self.nrels)
        ]

    def column_elements(self):
        return [FreeElement(self.ring, c) for c in self.columns()]

    def is_zero_module(self):
        """Whether every generator lies in the image of the matrix."""
        gens = _image_gens_free(self)
        free = self.ring.free()
        for i in range(self.ngens):
            e = vec_zero(free, self.ngens)
            e[i] = free.one()
            if not submodule_contains(e, gens, free):
                return False
        return True

    def contains(self, element):
        """Membership of an element of R^b in the image of the matrix."""
        free = self.ring.free()
        v = [free.coerce(self.ring.to_free(self.ring.coerce(c))) for c in element]
        return submodule_contains(v, _image_gens_free(self), free)

    def __repr__(self):
        return f"Presentation({self.ngens} gens, {self.nrels} relations)"


def _image_gens_free(pres, extra_columns=(), all_positions=True):
    """Columns of the matrix lifted to the free cover, plus relation columns.

    Relation columns r*e_j make submodule membership over the quotient ring
    equivalent to membership over the free cover.
    """
    ring = pres.ring
    free = ring.free()
    out = []
    for col in pres.columns():
        out.append([free.coerce(ring.to_free(c)) for c in col])
    for col in extra_columns:
        out.append([free.coerce(ring.to_free(ring.coerce(c))) for c in col])
    if ring.relations:
        for r in ring.relation_gb():
            rf = free.coerce(r)
            for j in range(pres.ngens):
                col = vec_zero(free, pres.ngens)
                col[j] = rf
                out.append(col)
    return [g for g in out if not vec_is_zero(g)]


def syzygies(elements, ring=None, ngens=None):
    """Presentation of the syzygy module of a list of free-module elements.

    Over a quotient ring the syzygies are those of the residue classes, which
    requires relation columns in the kernel computation; coefficients hitting
    a relation column are discarded.
    """
    if not elements:
        return Presentation(ring, 0, [])
    first = elements[0]
    if isinstance(first, FreeElement):
        ring = first.ring
        vectors = [list(e.coords) for e in elements]
    else:
        vectors = [[ring.coerce(c) for c in e] for e in elements]
    b = ngens if ngens is not None else len(vectors[0])
    free = ring.free()
    k = len(vectors)
    lifted = [[free.coerce(ring.to_free(c)) for c in v] for v in vectors]
    if ring.relations:
        for r in ring.relation_gb():
            rf = free.coerce(r)
            for j in range(b):
                col = vec_zero(free, b)
                col[j] = rf
                lifted.append(col)
    syz = syzygy_generators(lifted, free)
    cols = []
    for s in syz:
        head = [ring.from_free(c) for c in s[:k]]
        if not all(c.is_zero() for c in head):
            cols.append(head)
    return Presentation.from_columns(ring, k, cols)


def presentation_of_ideal(ideal: Ideal) -> Presentation:
    """The ideal as a module on its generators, with syzygies as relations."""
    ring = ideal.ring
    gens = [g for g in ideal.generators]
    return syzygies([[g] for g in gens], ring, ngens=1)


# ---------------------------------------------------------------------------
# numerical invariants
# ---------------------------------------------------------------------------

def _minor_ideal(pres, size):
    """Ideal of size x size minors of the presentation matrix."""
    ring = pres.ring
    if size <= 0:
        return Ideal(ring, [ring.one()])
    if size > min(pres.ngens, pres.nrels):
        return Ideal(ring, [])
    minors = []
    for rows in combinations(range(pres.ngens), size):
        for cols in combinations(range(pres.nrels), size):
            minors.append(_det([[pres.matrix[i][j] for j in cols] for i in rows]))
    return Ideal(ring, [m for m in minors if not m.is_zero()])


def _det(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    ring = mat[0][0].ring
    total = ring.zero()
    sign = 1
    for j in range(n):
        entry = mat[0][j]
        if not entry.is_zero():
            sub = [row[:j] + row[j + 1:] for row in mat[1:]]
            total = total + sign * entry * _det(sub)
        sign = -sign
    return total


def generic_rank(pres: Presentation) -> int:
    """Rank of coker(M) at the generic point: b minus the largest nonzero minor size."""
    best = 0
    for size in range(1, min(pres.ngens, pres.nrels) + 1):
        if not _minor_ideal(pres, size).is_zero():
            best = size
        else:
            break
    return pres.ngens - best


def fitting_ideal(pres: Presentation, k: int) -> Ideal:
    """Fitt_k = ideal of (b - k)-minors; unit for k >= b, zero when minors run out."""
    return _minor_ideal(pres, pres.ngens - k)


def min_generators_at(pres: Presentation, point) -> int:
    """Minimal number of generators of the fibre at a rational point."""
    for r in pres.ring.relations:
        if r.evaluate(point) != 0:
            raise ValueError("point does not satisfy the ring relations")
    rows = [
        [Fraction(e.evaluate(point)) for e in row] for row in pres.matrix
    ]
    if pres.nrels == 0:
        return pres.ngens
    return pres.ngens - linalg.rank(_transpose(rows))


def corank_at(pres: Presentation, point) -> int:
    return min_generators_at(pres, point) - generic_rank(pres)


def _transpose(rows):
    if not rows:
        return []
    return [[rows[i][j] for i in range(len(rows))] for j in range(len(rows[0]))]


def singular_locus(pres: Presentation):
    """(ideal, DimensionInfo) of the locus where the module is not locally free."""
    r = generic_rank(pres)
    F = fitting_ideal(pres, r)
    return F, F.dimension()


# ---------------------------------------------------------------------------
# torsion
# ---------------------------------------------------------------------------

@dataclass
class TorsionResult:
    generators: list          # FreeElement's generating the torsion submodule
    witnesses: list           # (generator, annihilating ring element) pairs
    quotient: Presentation    # presentation of M / torsion

    @property
    def is_trivial(self):
        return not self.generators


def _least_degree_nonzero(ideal):
    """A least-degree element of the ideal that is nonzero in the ring."""
    best = None
    for g in ideal.reduced_generators():
        if best is None or g.degree() < best.degree():
            best = g
    return best


def torsion_submodule(pres: Presentation) -> TorsionResult:
    """Torsion of coker(M) over a domain, computed as (im M : f^inf).

    f is a least-degree nonzero element of the Fitting ideal at the generic
    rank; over a domain the saturation by f already captures all torsion,
    because any torsion class is killed by some power of every element of
    that Fitting ideal.
    """
    ring = pres.ring
    free = ring.free()
    b = pres.ngens
    r = generic_rank(pres)
    if r == b and pres.nrels == 0:
        return TorsionResult([], [], pres)
    fitt = fitting_ideal(pres, r)
    f = _least_degree_nonzero(fitt)
    if f is None:
        raise ValueError("zero Fitting ideal at generic rank; not a domain?")
    f_free = free.coerce(ring.to_free(f))

    gens = _image_gens_free(pres)
    current = gens
    while True:
        col = colon_module(current, f_free, b, free)
        # stabilized when the colon adds nothing new
        new = [
            c for c in col if not submodule_contains(c, current, free)
        ]
        if not new:
            break
        current = current + new

    torsion = []
    for v in current:
        w = [ring.from_free(c) for c in v]
        el = FreeElement(ring, w)
        if not el.is_zero() and not pres.contains(w):
            torsion.append(el)

    witnesses = []
    for el in torsion:
        power = f
        j = 1
        while True:
            scaled = [power * c for c in el.coords]
            if pres.contains(scaled):
                witnesses.append((el, power))
                break
            j += 1
            if j > 50:
                raise RuntimeError("torsion witness exponent did not stabilize")
            power = power * f
    quotient_cols = pres.columns() + [list(el.coords) for el in torsion]
    quotient = Presentation.from_columns(ring, b, quotient_cols)
    return TorsionResult(torsion, witnesses, quotient)


def is_torsion_free(pres: Presentation) -> bool:
    return torsion_submodule(pres).is_trivial


# ---------------------------------------------------------------------------
# resolutions
# ---------------------------------------------------------------------------

def _unit_entry(matrix):
    for i, row in enumerate(matrix):
        for j, e in enumerate(row):
            if e.is_constant() and not e.is_zero():
                return i, j
    return None


def _minimalize_step(prev_cols, matrix, ring):
    """Remove one unit entry (i, j) of ``matrix`` by a row/column reduction.

    Rows of ``matrix`` index the columns of the previous map; removing row i
    therefore also removes column i upstream.  Returns updated (prev_cols,
    matrix) or None when the matrix is already minimal.
    """
    hit = _unit_entry(matrix)
    if hit is None:
        return None
    i, j = hit
    pivot = matrix[i][j]
    ncols = len(matrix[0])
    nrows = len(matrix)
    # clear row i in the other columns, then drop row i and column j
    new_matrix = []
    for r in range(nrows):
        if r == i:
            continue
        row = []
        for c in range(ncols):
            if c == j:
                continue
            e = matrix[r][c] - matrix[r][j] * matrix[i][c] * (
                Fraction(1) / pivot.constant_value()
            )
            row.append(e)
        new_matrix.append(row)
    new_prev = None
    if prev_cols is not None:
        new_prev = [col for k, col in enumerate(prev_cols) if k != i]
    return new_prev, new_matrix


def minimalize(pres: Presentation) -> Presentation:
    """Strip generators made redundant by unit entries in the matrix."""
    matrix = [list(row) for row in pres.matrix]
    while True:
        step = _minimalize_step(None, matrix, pres.ring)
        if step is None:
            break
        _, matrix = step
    return Presentation(pres.ring, len(matrix), matrix)


def free_resolution(pres: Presentation, length_bound=6):
    """Matrices (M0, M1, ...) of a minimal free resolution, up to the bound.

    M0 presents the module; each later matrix resolves the syzygies of the
    previous one, with unit entries split off so the resolution is minimal.
    """
    ring = pres.ring
    current = minimalize(pres)
    mats = [[list(row) for row in current.matrix]]
    prev_cols = current.columns()
    while len(mats) < length_bound + 1:
        if not prev_cols:
            break
        syz = syzygies(prev_cols, ring)
        matrix = [list(row) for row in syz.matrix]
        while True:
            step = _minimalize_step(prev_cols, matrix, ring)
            if step is None:
                break
            prev_cols, matrix = step
            mats[-1] = [[col[i] for col in prev_cols] for i in range(len(mats[-1]))]
        if not matrix or not matrix[0]:
            break
        mats.append(matrix)
        prev_cols = [
            [matrix[i][j] for i in range(len(matrix))] for j in range(len(matrix[0]))
        ]
    return mats


def hom_dim_le_1(pres: Presentation) -> bool:
    """Whether the module has a length <= 1 free resolution (0 -> R^a -> R^b)."""
    mats = free_resolution(pres, length_bound=2)
    return len(mats) <= 1


# ---------------------------------------------------------------------------
# tensor products and maps
# ---------------------------------------------------------------------------

def tensor_presentation(p: Presentation, q: Presentation) -> Presentation:
    """Standard presentation of coker(M_P) (x) coker(M_Q).

    Generators e_i (x) f_j in row-major order; relations are M_P (x) I and
    I (x) M_Q.
    """
    if p.ring is not q.ring and p.ring != q.ring:
        raise ValueError("tensor factors must live over the same ring")
    ring = p.ring
    b = p.ngens * q.ngens
    cols = []
    for col in p.columns():
        for j in range(q.ngens):
            new = [ring.zero()] * b
            for i in range(p.ngens):
                new[i * q.ngens + j] = col[i]
            cols.append(new)
    for col in q.columns():
        for i in range(p.ngens):
            new = [ring.zero()] * b
            for j in range(q.ngens):
                new[i * q.ngens + j] = col[j]
            cols.append(new)
    return Presentation.from_columns(ring, b, cols)


@dataclass
class PresentationMap:
    """A map of presented modules given on generators by a matrix Psi.

    Psi has target.ngens rows and source.ngens columns; well-definedness
    (Psi sends source relations into the target image) is validated.
    """

    source: Presentation
    target: Presentation
    psi: list

    def __post_init__(self):
        ring = self.source.ring
        self.psi = [[ring.coerce(e) for e in row] for row in self.psi]
        for col in self.source.columns():
            image = self._apply(col)
            if not self.target.contains(image):
                raise ValueError("matrix does not send relations into relations")

    def _apply(self, vec):
        ring = self.source.ring
        out = []
        for i in range(self.target.ngens):
            s = ring.zero()
            for j in range(self.source.ngens):
                s = s + self.psi[i][j] * vec[j]
            out.append(s)
        return out

    def is_epi(self):
        """Every target generator is hit modulo the target relations."""
        ring = self.source.ring
        free = ring.free()
        cols = [self._apply([ring.one() if j == k else ring.zero()
                             for j in range(self.source.ngens)])
                for k in range(self.source.ngens)]
        gens = _image_gens_free(self.target, extra_columns=cols)
        for i in range(self.target.ngens):
            e = vec_zero(free, self.target.ngens)
            e[i] = free.one()
            if not submodule_contains(e, gens, free):
                return False
        return True

    def is_mono(self):
        """ker(Psi-bar) = 0: preimages of the target image lie in the source image.

        The kernel of the induced map is K / im(M_source) where
        K = { v : Psi v in im(M_target) }, computed by a syzygy elimination.
        """
        ring = self.source.ring
        free = ring.free()
        bs, bt = self.source.ngens, self.target.ngens
        # K = { v : Psi v in im(M_target) } is the projection of the syzygy
        # module of [Psi columns | M_target columns] onto the Psi block
        vectors = []
        for j in range(bs):
            vectors.append([free.coerce(ring.to_free(self.psi[i][j])) for i in range(bt)])
        vectors += _image_gens_free(self.target)
        syz = syzygy_generators(vectors, free)
        for s in syz:
            head = [ring.from_free(c) for c in s[:bs]]
            if all(c.is_zero() for c in head):
                continue
            if not self.source.contains(head):
                return False
        return True


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass
class ClassifyReport:
    generic_rank: int
    min_generators: int
    corank: int
    singular_locus: Ideal
    singular_codim: int
    torsion_free: bool
    hom_dim_le_1: bool
    hypotheses_met: bool
    criteria_consistent: bool | None
    verdict: str
    details: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "generic_rank": self.generic_rank,
            "min_generators": self.min_generators,
            "corank": self.corank,
            "singular_locus": [str(g) for g in self.singular_locus.reduced_generators()],
            "singular_codim": self.singular_codim,
            "torsion_free": self.torsion_free,
            "hom_dim_le_1": self.hom_dim_le_1,
            "hypotheses_met": self.hypotheses_met,
            "criteria_consistent": self.criteria_consistent,
            "verdict": self.verdict,
            "details": self.details,
        }


def classify_sheaf(pres: Presentation, point=None) -> ClassifyReport:
    """Structural report on coker(M) seen as a coherent sheaf.

    When the corank m at the point is at most 2 and the singular locus has
    codimension at least m + 1 over a relation-free base, torsion-freeness
    is equivalent to having a length-one free resolution; the report checks
    the two sides against each other.  When the hypotheses fail the facts
    are still reported but no equivalence is claimed.
    """
    ring = pres.ring
    point = point or {v: Fraction(0) for v in ring.variables}
    r = generic_rank(pres)
    mu = min_generators_at(pres, point)
    corank = mu - r
    sing, dim_info = singular_locus(pres)
    tf = is_torsion_free(pres)
    hd = hom_dim_le_1(pres)
    base_free = not ring.relations
    hypotheses = base_free and corank <= 2 and dim_info.codim >= corank + 1
    if hypotheses:
        consistent = tf == hd
        verdict = "consistent" if consistent else "equivalence violated"
    else:
        consistent = None
        verdict = "hypotheses not met; no equivalence claimed"
    return ClassifyReport(
        generic_rank=r,
        min_generators=mu,
        corank=corank,
        singular_locus=sing,
        singular_codim=dim_info.codim,
        torsion_free=tf,
        hom_dim_le_1=hd,
        hypotheses_met=hypotheses,
        criteria_consistent=consistent,
        verdict=verdict,
        details={"singular_dim": dim_info.dim},
    )
