"""Degree-bounded global sections over the two-chart plane blow-up.

Sections are matched across the two charts by exact linear algebra: the
overlap substitution only inverts the slope coordinate t, so clearing a
fixed power t^N turns the gluing condition into polynomial identities that
are linear in the unknown coefficients.

Two input shapes are supported.  For an ideal of functions per chart, a
section is a base polynomial whose substitution lands in each chart ideal.
For a pulled-back module presentation, a section is a pair of fibrewise
linear forms that agree on the reduced pullback cone over the overlap; the
cone's reduced ideal is assembled from its primary component and the fibre
over the singular locus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .groebner import Ideal, normal_form, squarefree_part
from .linspace import linear_space_ideal
from .modules import Presentation, fitting_ideal, generic_rank
from .modification import Modification, pullback
from .poly import Polynomial


@dataclass
class SectionsResult:
    ideal: Ideal
    stable: bool
    degree: int


def _require_plane_blowup(m: Modification):
    if m.kind != "blowup_origin" or m.params.get("n") != 2:
        raise ValueError("truncated sections are implemented for the plane blow-up only")


def _monomials_upto(d):
    return [(a, b) for total in range(d + 1) for a in range(total + 1) for b in (total - a,)]


def _chart0_to_base(m: Modification, f: Polynomial) -> Polynomial:
    """Rewrite a chart-0 polynomial x^a t^b as the base function x^(a-b) y^b."""
    base = m.base
    out = {}
    for (a, b), c in f.terms.items():
        if a < b:
            raise ValueError(f"{f} is not the pullback of a base polynomial")
        out[(a - b, b)] = c
    return Polynomial(base, out)


def _chart1_to_chart0_laurent(terms):
    """Chart-1 monomials s^g y^d as chart-0 pairs (x-exp, t-exp) with t-exp in Z."""
    out = {}
    for (g, d), c in terms.items():
        key = (d, d - g)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def truncated_global_sections(
    m: Modification,
    degree_bound: int,
    chart_ideals=None,
    presentation: Presentation | None = None,
    base_ideal: Ideal | None = None,
) -> SectionsResult:
    _require_plane_blowup(m)
    if chart_ideals is not None:
        lo = _ideal_sections(m, chart_ideals, degree_bound - 1)
        hi = _ideal_sections(m, chart_ideals, degree_bound)
        return SectionsResult(hi, hi.equals(lo), degree_bound)
    if presentation is None or base_ideal is None:
        raise ValueError("need either chart ideals or a presentation with its ideal")
    lo = _module_sections(m, presentation, base_ideal, degree_bound - 1, degree_bound)
    hi = _module_sections(m, presentation, base_ideal, degree_bound, degree_bound)
    return SectionsResult(hi, hi.equals(lo), degree_bound)


# ---------------------------------------------------------------------------
# ideal-of-functions mode
# ---------------------------------------------------------------------------

def _ideal_sections(m: Modification, chart_ideals, d) -> Ideal:
    """Base polynomials of degree <= d pulling back into every chart ideal."""
    base = m.base
    monos = _monomials_upto(d)
    rows = {}
    ncols = len(monos)
    for chart, K in zip(m.charts, chart_ideals):
        gb = K.groebner_basis()
        for col, mono in enumerate(monos):
            g = Polynomial(base, {mono: Fraction(1)})
            nf = normal_form(chart.ring.to_free(chart.to_base(g)), gb, chart.ring.order)
            for mm, c in nf.terms.items():
                key = (id(chart), mm)
                rows.setdefault(key, [Fraction(0)] * ncols)[col] = c
    kernel = linalg.kernel_basis(list(rows.values()), ncols)
    gens = []
    for vec in kernel:
        terms = {mono: c for mono, c in zip(monos, vec) if c}
        if terms:
            gens.append(Polynomial(base, terms))
    return Ideal(base, gens)


# ---------------------------------------------------------------------------
# pulled-back module mode
# ---------------------------------------------------------------------------

def _radical_of_principal(I: Ideal) -> Ideal:
    gb = I.groebner_basis()
    if len(gb) == 0:
        return I
    if len(gb) != 1:
        raise ValueError("singular locus ideal is not principal; radical unavailable")
    return Ideal(I.ring, [squarefree_part(gb[0])])


def _gluing_ideal_gb(chart0_pres: Presentation):
    """GB of the t-saturated reduced-cone ideal in the chart-0 joint ring.

    The reduced cone is the union of the primary component and the full
    fibre over the singular locus; a linear form difference glues iff it
    lies in this ideal after clearing denominators.
    """
    if chart0_pres.nrels == 0:
        return None, None
    L = linear_space_ideal(chart0_pres)
    joint = L.ring
    r = generic_rank(chart0_pres)
    sing = _radical_of_principal(fitting_ideal(chart0_pres, r))
    nbase = len(chart0_pres.ring.variables)
    positions = {i: i for i in range(nbase)}
    sing_ext = Ideal(joint, [g.map_coefficients_to(joint, positions) for g in sing.reduced_generators()])
    if sing_ext.is_zero():
        raise ValueError("zero singular ideal for the pullback cone")
    if sing_ext.is_unit():
        reduced = L.ideal
    else:
        pc = L.ideal.saturation_by_ideal(sing_ext)
        reduced = pc.intersect(sing_ext)
    t_var = joint.var(chart0_pres.ring.variables[1])
    sat, _ = reduced.saturation(t_var)
    return L, sat.groebner_basis()


def _module_sections(m: Modification, pres: Presentation, base_ideal: Ideal, d, D) -> Ideal:
    """Image ideal of the degree <= d sections of the pulled-back module."""
    base = m.base
    p0, p1 = pullback(pres, m)
    chart0 = m.charts[0]
    b = pres.ngens
    images0 = [chart0.to_base(g) for g in base_ideal.generators]
    if len(images0) != b:
        raise ValueError("presentation generators must match the ideal generators")

    L, gb = _gluing_ideal_gb(p0)
    maxrel = max((e.degree() for row in p0.matrix for e in row), default=0)
    N = 2 * D + max(maxrel, 1)

    monos = _monomials_upto(d)
    nm = len(monos)
    ncols = 2 * b * nm  # chart-0 block then chart-1 block
    joint = L.ring if L is not None else None

    def z_mono(i, xe, te):
        nbase = 2
        exps = [0] * (nbase + b)
        exps[0] = xe
        exps[1] = te
        exps[nbase + i] = 1
        return tuple(exps)

    rows = {}

    def add(col, terms):
        for mm, c in terms.items():
            rows.setdefault(mm, [Fraction(0)] * ncols)[col] = rows.setdefault(
                mm, [Fraction(0)] * ncols
            )[col] + c

    for i in range(b):
        for k, (a, bb) in enumerate(monos):
            col = i * nm + k
            if joint is not None:
                f = Polynomial(joint, {z_mono(i, a, bb + N): Fraction(1)}, reduce=False)
                nf = normal_form(f, gb, joint.order) if gb else f
                add(col, nf.terms)
            else:
                add(col, {(i, a, bb + N): Fraction(1)})
    for i in range(b):
        for k, mono in enumerate(monos):
            col = b * nm + i * nm + k
            conv = _chart1_to_chart0_laurent({mono: Fraction(-1)})
            if joint is not None:
                terms = {z_mono(i, xe, te + N): c for (xe, te), c in conv.items()}
                f = Polynomial(joint, terms, reduce=False)
                nf = normal_form(f, gb, joint.order) if gb else f
                add(col, nf.terms)
            else:
                add(col, {(i, xe, te + N): c for (xe, te), c in conv.items()})

    kernel = linalg.kernel_basis(list(rows.values()), ncols)
    gens = []
    for vec in kernel:
        img = m.charts[0].ring.zero()
        for i in range(b):
            coeff_terms = {
                monos[k]: vec[i * nm + k] for k in range(nm) if vec[i * nm + k]
            }
            if coeff_terms:
                coeff = Polynomial(m.charts[0].ring, coeff_terms)
                img = img + coeff * images0[i]
        if not img.is_zero():
            gens.append(_chart0_to_base(m, img))
    return Ideal(base, gens)
