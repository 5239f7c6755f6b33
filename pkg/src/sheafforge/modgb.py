"""Groebner bases for submodules of free modules R^b over a free ring.

Vectors are lists of polynomials (all over the same relation-free ring).
The module order is position-over-term with earlier positions greater, which
has the elimination property needed for syzygy computation: in the augmented
module R^b (+) R^k, basis elements with zero head block generate the syzygy
module of the input vectors (Schreyer's observation).

Quotient rings are handled by the callers, which adjoin relation columns.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, _add_terms, _mul_terms, _scale_terms
from .groebner import _divides, _lcm, _quot


def vec_zero(ring, b):
    return [ring.zero() for _ in range(b)]


def vec_is_zero(v):
    return all(p.is_zero() for p in v)


def vec_add(u, v):
    return [Polynomial(a.ring, _add_terms(a.terms, b.terms), reduce=False) for a, b in zip(u, v)]


def vec_sub(u, v):
    return [
        Polynomial(a.ring, _add_terms(a.terms, {m: -c for m, c in b.terms.items()}), reduce=False)
        for a, b in zip(u, v)
    ]


def vec_scale_term(v, mono, coeff):
    t = {mono: coeff}
    return [Polynomial(p.ring, _mul_terms(t, p.terms), reduce=False) for p in v]


def vec_mul_poly(v, f):
    return [Polynomial(p.ring, _mul_terms(f.terms, p.terms), reduce=False) for p in v]


def leading_term(v, order):
    """(pos, monomial) of the greatest term; None for the zero vector."""
    best = None
    for pos, p in enumerate(v):
        if p.is_zero():
            continue
        m = p.leading_monomial(order)
        if best is None or pos < best[0]:
            best = (pos, m)
        # positions are scanned in increasing order; the first nonzero wins
        if best[0] == pos:
            break
    return best


def _lead_coeff(v, lt):
    return v[lt[0]].terms[lt[1]]


def module_normal_form(v, G, order):
    """Full normal form of v against a list of vectors (with cached lead terms)."""
    lead = [(leading_term(g, order), g) for g in G if not vec_is_zero(g)]
    ring = v[0].ring
    b = len(v)
    work = [dict(p.terms) for p in v]
    out = [dict() for _ in range(b)]
    while True:
        # greatest remaining term: smallest position, then largest monomial
        pos = None
        for i in range(b):
            if work[i]:
                pos = i
                break
        if pos is None:
            break
        m = max(work[pos], key=order.key)
        c = work[pos][m]
        for lt, g in lead:
            if lt[0] == pos and _divides(lt[1], m):
                # reducer's lead cancels the term (pos, m) exactly
                factor = {_quot(m, lt[1]): -c / _lead_coeff(g, lt)}
                for i in range(b):
                    work[i] = _add_terms(work[i], _mul_terms(factor, g[i].terms))
                break
        else:
            work[pos].pop(m)
            out[pos][m] = c
    return [Polynomial(ring, t, reduce=False) for t in out]


def module_buchberger(vectors, ring, order=None):
    """Reduced monic Groebner basis of the submodule generated by ``vectors``."""
    order = order or ring.order
    G = []
    for v in vectors:
        v = module_normal_form(v, G, order)
        if not vec_is_zero(v):
            G.append(v)
    if not G:
        return []
    leads = [leading_term(g, order) for g in G]
    pairs = {
        (i, j)
        for i in range(len(G))
        for j in range(i + 1, len(G))
        if leads[i][0] == leads[j][0]
    }
    while pairs:
        i, j = min(pairs, key=lambda p: (sum(_lcm(leads[p[0]][1], leads[p[1]][1])), p))
        pairs.discard((i, j))
        l = _lcm(leads[i][1], leads[j][1])
        s = vec_sub(
            vec_scale_term(G[i], _quot(l, leads[i][1]), Fraction(1) / _lead_coeff(G[i], leads[i])),
            vec_scale_term(G[j], _quot(l, leads[j][1]), Fraction(1) / _lead_coeff(G[j], leads[j])),
        )
        s = module_normal_form(s, G, order)
        if not vec_is_zero(s):
            G.append(s)
            leads.append(leading_term(s, order))
            k = len(G) - 1
            pairs.update((i2, k) for i2 in range(k) if leads[i2][0] == leads[k][0])
    return _module_autoreduce(G, order)


def _module_autoreduce(G, order):
    G = [g for g in G if not vec_is_zero(g)]
    changed = True
    while changed:
        changed = False
        for i in range(len(G)):
            rest = G[:i] + G[i + 1:]
            r = module_normal_form(G[i], rest, order)
            if any(a.terms != b.terms for a, b in zip(r, G[i])):
                changed = True
                if vec_is_zero(r):
                    G = rest
                else:
                    G[i] = r
                break
    out = []
    for g in G:
        lt = leading_term(g, order)
        lc = _lead_coeff(g, lt)
        out.append(vec_scale_term(g, (0,) * len(lt[1]), Fraction(1) / lc))
    out.sort(key=lambda g: (leading_term(g, order)[0], order.key(leading_term(g, order)[1])))
    return out


def submodule_contains(v, gens, ring, order=None):
    order = order or ring.order
    G = module_buchberger(gens, ring, order)
    return vec_is_zero(module_normal_form(v, G, order))


def syzygy_generators(vectors, ring, order=None):
    """Generators of {c in R^k : sum c_i * vectors_i = 0} over the free ring."""
    order = order or ring.order
    if not vectors:
        return []
    b = len(vectors[0])
    k = len(vectors)
    aug = []
    for i, v in enumerate(vectors):
        tail = [ring.one() if j == i else ring.zero() for j in range(k)]
        aug.append(list(v) + tail)
    G = module_buchberger(aug, ring, order)
    out = []
    for g in G:
        if all(p.is_zero() for p in g[:b]):
            out.append(g[b:])
    return out


def colon_module(gens, f, b, ring, order=None):
    """Generators of (N : f) = {v in R^b : f*v in N}, N spanned by ``gens``.

    Computed as the head coordinates of the syzygies of
    [f*e_1, ..., f*e_b, n_1, ..., n_k].
    """
    order = order or ring.order
    vectors = []
    for i in range(b):
        e = vec_zero(ring, b)
        e[i] = f
        vectors.append(e)
    vectors += [list(g) for g in gens]
    syz = syzygy_generators(vectors, ring, order)
    out = []
    for s in syz:
        head = s[:b]
        if not vec_is_zero(head):
            out.append(head)
    return out
