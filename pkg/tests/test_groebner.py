from fractions import Fraction

import pytest

from sheafforge import (
    CoordinateRing,
    Ideal,
    LEX,
    DEGREVLEX,
    buchberger,
    normal_form,
    poly_gcd,
    poly_lcm,
    squarefree_part,
)


def ring_xy():
    return CoordinateRing(["x", "y"])


def test_reduced_gb_is_monic_and_autoreduced():
    R = ring_xy()
    x, y = R.gens()
    G = buchberger([2 * x ** 2 + y, 3 * y ** 2], R.order)
    for g in G:
        assert g.leading_coeff() == 1
    # no leading monomial divides a monomial of another element
    for i, g in enumerate(G):
        others = [h for j, h in enumerate(G) if j != i]
        assert normal_form(g, others, R.order) == g


def test_membership_twisted_cubic():
    # the ideal of the twisted cubic contains the product relation
    R = CoordinateRing(["x", "y", "z"])
    x, y, z = R.gens()
    I = Ideal(R, [x ** 2 - y, x ** 3 - z])
    assert I.contains(y ** 3 - z ** 2)
    assert not I.contains(x * y - z + 1)


def test_intersection_and_quotient():
    R = ring_xy()
    x, y = R.gens()
    assert Ideal(R, [x]).intersect(Ideal(R, [y])).equals(Ideal(R, [x * y]))
    Q = Ideal(R, [x ** 2, x * y]).quotient(Ideal(R, [x]))
    assert Q.equals(Ideal(R, [x, y]))


def test_saturation():
    R = ring_xy()
    x, y = R.gens()
    sat, exponent = Ideal(R, [x * y]).saturation(x)
    assert sat.equals(Ideal(R, [y]))
    assert exponent == 1
    sat2, exp2 = Ideal(R, [x ** 3 * y]).saturation(x)
    assert sat2.equals(Ideal(R, [y]))
    assert exp2 == 3


def test_saturation_by_zero_raises():
    R = ring_xy()
    with pytest.raises(ValueError):
        Ideal(R, [R.var("x")]).saturation(R.zero())


def test_elimination():
    R = CoordinateRing(["x", "y", "t"])
    x, y, t = R.gens()
    # parametric curve x = t^2, y = t^3
    I = Ideal(R, [x - t ** 2, y - t ** 3])
    E = I.eliminate(["t"])
    assert E.equals(Ideal(E.ring, [E.ring.var("x") ** 3 - E.ring.var("y") ** 2]))


def test_dimension():
    R = ring_xy()
    x, y = R.gens()
    assert Ideal(R, [x, y]).dimension().dim == 0
    assert Ideal(R, [x]).dimension().dim == 1
    assert Ideal(R, [R.zero()]).dimension().dim == 2
    assert Ideal(R, [R.one()]).dimension().dim == -1


def test_radical_membership():
    R = ring_xy()
    x, y = R.gens()
    I = Ideal(R, [x ** 2, y ** 3])
    assert I.radical_contains(x)
    assert I.radical_contains(x + y)
    assert not I.radical_contains(x + 1)


def test_gcd_lcm_squarefree():
    R = ring_xy()
    x, y = R.gens()
    assert poly_gcd(x ** 2 * y, x * y ** 2) == x * y
    assert poly_lcm(x ** 2 * y, x * y ** 2) == x ** 2 * y ** 2
    f = (x + y) ** 2 * (x - y)
    assert squarefree_part(f) == (x + y) * (x - y)
    g = x ** 2 + 2 * x * y + y ** 2
    assert squarefree_part(g) == x + y


def test_order_change():
    R = ring_xy()
    x, y = R.gens()
    I = Ideal(R, [x ** 2 - y, y ** 2 - x])
    lex_gb = I.groebner_basis(LEX)
    # lex eliminates x in the last element
    tail = [g for g in lex_gb if R.index("x") not in g.variables_used()]
    assert tail and tail[0] == y ** 4 - y


def test_gb_in_quotient_ring():
    R = ring_xy()
    x, y = R.gens()
    Q = R.quotient([x ** 3 - y ** 2])
    xq, yq = Q.gens()
    I = Ideal(Q, [xq])
    assert I.contains(yq ** 2)       # y^2 = x^3 in the quotient
    assert not I.contains(yq)


def test_unit_and_zero_ideals():
    R = ring_xy()
    x, y = R.gens()
    assert Ideal(R, [x, x + 1]).is_unit()
    assert Ideal(R, [R.zero()]).is_zero()
    assert not Ideal(R, [x]).is_unit()
