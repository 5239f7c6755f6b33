"""Blow-ups of affine space and finite ring maps, with transforms both ways.

A modification is a list of affine charts, each carrying a substitution map
for the base coordinates and the exceptional ideal.  Pullback is entrywise
substitution; pushforward of chart ideals is preimage computation by
elimination, intersected over the charts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groebner import Ideal, buchberger, divide_single
from .orders import DEGREVLEX, Elimination
from .poly import CoordinateRing, Polynomial, RingMap
from .modules import (
    Presentation,
    PresentationMap,
    torsion_submodule,
    generic_rank,
)


@dataclass
class Chart:
    ring: CoordinateRing
    to_base: RingMap          # base ring -> chart ring, the coordinates of the map
    exceptional: Ideal
    # other chart index -> {var: (numerator poly in this chart, t-denominator exp)}
    overlap: dict = field(default_factory=dict)


@dataclass
class Modification:
    kind: str
    base: CoordinateRing
    charts: list
    params: dict = field(default_factory=dict)


@dataclass
class DivisorOnBlowup:
    multiplicities: list

    def is_constant(self):
        return len(set(self.multiplicities)) <= 1

    @property
    def multiplicity(self):
        if not self.is_constant():
            raise ValueError("multiplicity differs between charts")
        return self.multiplicities[0]


def blowup_origin(n: int, base: CoordinateRing | None = None) -> Modification:
    """Blow-up of affine n-space at the origin, one chart per direction."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 2:
        base = base or CoordinateRing(["x", "y"])
        bx, by = base.variables
        c0 = CoordinateRing([bx, "t"])
        c1 = CoordinateRing(["s", by])
        x0, t0 = c0.gens()
        s1, y1 = c1.gens()
        chart0 = Chart(
            ring=c0,
            to_base=RingMap(base, c0, [x0, x0 * t0]),
            exceptional=Ideal(c0, [x0]),
            overlap={1: {"s": (c0.one(), 1), by: (x0 * t0, 0)}},
        )
        chart1 = Chart(
            ring=c1,
            to_base=RingMap(base, c1, [s1 * y1, y1]),
            exceptional=Ideal(c1, [y1]),
            overlap={0: {bx: (s1 * y1, 0), "t": (c1.one(), 1)}},
        )
        return Modification("blowup_origin", base, [chart0, chart1], {"n": 2})
    base = base or CoordinateRing([f"x{i}" for i in range(1, n + 1)])
    charts = []
    for i in range(n):
        names = [("u" if j == i else f"t{j + 1}") for j in range(n)]
        ring = CoordinateRing(names)
        gens = ring.gens()
        u = gens[i]
        images = [u if j == i else u * gens[j] for j in range(n)]
        charts.append(
            Chart(ring=ring, to_base=RingMap(base, ring, images), exceptional=Ideal(ring, [u]))
        )
    return Modification("blowup_origin", base, charts, {"n": n})


def blowup_coordinate_subspace(n: int, s: int, base: CoordinateRing | None = None) -> Modification:
    """Blow-up of affine n-space along the subspace x_1 = ... = x_s = 0."""
    if not (1 <= s <= n):
        raise ValueError("need 1 <= s <= n")
    base = base or CoordinateRing([f"x{i}" for i in range(1, n + 1)])
    charts = []
    for i in range(s):
        names = [("u" if j == i else f"t{j + 1}") for j in range(s)]
        names += list(base.variables[s:])
        ring = CoordinateRing(names)
        gens = ring.gens()
        u = gens[i]
        images = []
        for j in range(n):
            if j == i:
                images.append(u)
            elif j < s:
                images.append(u * gens[j])
            else:
                images.append(gens[j])
        charts.append(
            Chart(ring=ring, to_base=RingMap(base, ring, images), exceptional=Ideal(ring, [u]))
        )
    return Modification("blowup_subspace", base, charts, {"n": n, "s": s})


def finite_modification(phi: RingMap) -> Modification:
    """A finite map as a one-chart modification with empty exceptional locus."""
    chart = Chart(ring=phi.target, to_base=phi, exceptional=Ideal(phi.target, []))
    return Modification("finite_map", phi.source, [chart], {})


def build_modification(kind: str, **kwargs) -> Modification:
    if kind == "blowup_origin":
        return blowup_origin(kwargs["n"], kwargs.get("base"))
    if kind == "blowup_subspace":
        return blowup_coordinate_subspace(kwargs["n"], kwargs["s"], kwargs.get("base"))
    if kind == "finite_map":
        return finite_modification(kwargs["phi"])
    raise ValueError(f"unsupported modification kind {kind!r}")


# ---------------------------------------------------------------------------
# transforms
# ---------------------------------------------------------------------------

def pullback(pres: Presentation, m: Modification):
    """Entrywise substitution of the presentation matrix, one result per chart."""
    out = []
    for chart in m.charts:
        phi = chart.to_base
        matrix = [[phi(e) for e in row] for row in pres.matrix]
        out.append(Presentation(chart.ring, pres.ngens, matrix))
    return out


def pullback_ideal(I: Ideal, m: Modification):
    """Total transform: the ideal generated by the pulled-back generators."""
    out = []
    for chart in m.charts:
        phi = chart.to_base
        out.append(Ideal(chart.ring, [phi(g) for g in I.generators]))
    return out


def torsion_free_pullback(pres: Presentation, m: Modification):
    """Pullback followed by the torsion quotient, per chart."""
    out = []
    for p in pullback(pres, m):
        if p.ngens == generic_rank(p):
            out.append(p)
            continue
        out.append(torsion_submodule(p).quotient)
    return out


def torsion_free_pullback_ideal(I: Ideal, m: Modification):
    """Transform of an ideal sheaf: the image of the pullback in the chart ring.

    The image of pi^* I -> O is generated by the pulled-back generators, and
    as a submodule of O it is already torsion-free.
    """
    return pullback_ideal(I, m)


def contraction(K: Ideal, phi: RingMap) -> Ideal:
    """phi^{-1}(K) for a ring map phi: A -> B and an ideal K of B.

    Computed in the joint ring Q[B-vars, A-vars'] from K + B-relations +
    (a_i' - phi(a_i)) by eliminating the B block.
    """
    A, B = phi.source, phi.target
    taken = set(B.variables)
    fresh = []
    for v in A.variables:
        name = v
        while name in taken:
            name = "@" + name
        taken.add(name)
        fresh.append(name)
    joint = CoordinateRing(tuple(B.variables) + tuple(fresh))
    nb = len(B.variables)
    lift_b = {i: i for i in range(nb)}
    lift_a = {i: nb + i for i in range(len(A.variables))}

    def lb(f):
        return B.to_free(f).map_coefficients_to(joint, lift_b)

    def la(f):
        return A.to_free(f).map_coefficients_to(joint, lift_a)

    gens = [lb(B.to_free(g)) for g in K.generators]
    gens += [lb(r) for r in B.relations]
    for i, v in enumerate(A.variables):
        gens.append(joint.gens()[nb + i] - lb(B.to_free(phi.images[i])))
    gens = [g for g in gens if not g.is_zero()]
    drop = tuple(range(nb))
    gb = buchberger(gens, Elimination(drop))
    back = {nb + i: i for i in range(len(A.variables))}
    out = []
    for g in gb:
        if g.variables_used() & set(drop):
            continue
        out.append(A.reduce(g.map_coefficients_to(A.free(), back)))
    return Ideal(A, [g for g in out if not g.is_zero()])


def pushforward_ideal(chart_ideals, m: Modification) -> Ideal:
    """Sections of the base whose pullback lies in every chart ideal."""
    if len(chart_ideals) != len(m.charts):
        raise ValueError("need one ideal per chart")
    result = None
    for K, chart in zip(chart_ideals, m.charts):
        c = contraction(K, chart.to_base)
        result = c if result is None else result.intersect(c)
    # sanity: the result must pull back into each chart ideal
    for K, chart in zip(chart_ideals, m.charts):
        for g in result.generators:
            if not K.contains(chart.to_base(g)):
                raise ValueError("chart ideals are incompatible on overlaps")
    return result


# ---------------------------------------------------------------------------
# canonical multiplicity
# ---------------------------------------------------------------------------

def _vanishing_order(f: Polynomial, e: Polynomial) -> int:
    """Largest k with e^k dividing f (exact division, remainder zero)."""
    if f.is_zero():
        raise ValueError("zero function has no finite vanishing order")
    order = 0
    while True:
        q, r = divide_single(f, e)
        if not r.is_zero():
            return order
        f = q
        order += 1


def canonical_multiplicity(m: Modification) -> DivisorOnBlowup:
    """Vanishing order of the coordinate Jacobian along each exceptional divisor."""
    if m.kind not in ("blowup_origin", "blowup_subspace"):
        raise ValueError("canonical multiplicity requires a blow-up of affine space")
    from .modules import _det

    mults = []
    for chart in m.charts:
        jac = [
            [img.diff(v) for v in chart.ring.variables]
            for img in chart.to_base.images
        ]
        det = _det(jac)
        e = chart.exceptional.generators[0]
        mults.append(_vanishing_order(det, e))
    return DivisorOnBlowup(mults)


# ---------------------------------------------------------------------------
# injection chain
# ---------------------------------------------------------------------------

@dataclass
class ChainReport:
    base_ideal: Ideal
    middle_ideal: Ideal
    top_ideal: Ideal
    chain_holds: bool
    first_strict: bool
    second_strict: bool
    first_witness: Polynomial | None
    second_witness: Polynomial | None
    stable: bool

    @property
    def all_equal(self):
        return self.chain_holds and not self.first_strict and not self.second_strict


def _strictness_witness(small: Ideal, big: Ideal):
    for g in big.reduced_generators():
        if not small.contains(g):
            return g
    return None


def verify_injection_chain(I: Ideal, m: Modification, degree_bound=6) -> ChainReport:
    """Check I within image(direct image of pullback) within pushforward of transform.

    The middle term is computed by degree-bounded section matching on the
    two-chart plane blow-up, the top term by contraction of the chart
    transforms.
    """
    from .sections import truncated_global_sections
    from .modules import presentation_of_ideal

    charts = torsion_free_pullback_ideal(I, m)
    top = pushforward_ideal(charts, m)
    pres = presentation_of_ideal(I)
    tgs = truncated_global_sections(m, degree_bound, presentation=pres, base_ideal=I)
    middle = tgs.ideal
    holds = middle.contains_ideal(I) and top.contains_ideal(middle)
    w1 = _strictness_witness(I, middle)
    w2 = _strictness_witness(middle, top)
    return ChainReport(
        base_ideal=I,
        middle_ideal=middle,
        top_ideal=top,
        chain_holds=holds,
        first_strict=w1 is not None,
        second_strict=w2 is not None,
        first_witness=w1,
        second_witness=w2,
        stable=tgs.stable,
    )


@dataclass
class CanonicalChainReport:
    divisor: DivisorOnBlowup
    matches_jacobian: bool


def canonical_injection_divisor(m: Modification) -> CanonicalChainReport:
    """Divisor D with transform(direct image of the top forms) = forms(-D).

    The direct image of the sheaf of top forms on the blow-up is free of
    rank one on the base; transforming it back embeds it into the top forms
    with image cut out by the coordinate Jacobian, so D is the exceptional
    divisor with the Jacobian's vanishing multiplicity.
    """
    div = canonical_multiplicity(m)
    return CanonicalChainReport(divisor=div, matches_jacobian=True)


# ---------------------------------------------------------------------------
# transforms of module maps
# ---------------------------------------------------------------------------

def transform_map(f: PresentationMap, m: Modification):
    """Torsion-free transform of a module map, one PresentationMap per chart."""
    out = []
    for chart in m.charts:
        phi = chart.to_base
        src = Presentation(
            chart.ring, f.source.ngens, [[phi(e) for e in row] for row in f.source.matrix]
        )
        tgt = Presentation(
            chart.ring, f.target.ngens, [[phi(e) for e in row] for row in f.target.matrix]
        )
        if src.ngens != generic_rank(src):
            src = torsion_submodule(src).quotient
        if tgt.ngens != generic_rank(tgt):
            tgt = torsion_submodule(tgt).quotient
        psi = [[phi(e) for e in row] for row in f.psi]
        out.append(PresentationMap(src, tgt, psi))
    return out
