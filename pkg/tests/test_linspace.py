from sheafforge import (
    CoordinateRing,
    Ideal,
    is_normal_hypersurface,
    linear_space_ideal,
    pc_is_linear,
    presentation_of_ideal,
    primary_component,
    reducedness_witness,
)


def fiber_gens(L):
    ring = L.ideal.ring
    return [ring.var(v) for v in L.fiber_vars]


def test_corank_one_cone_is_linear():
    R = CoordinateRing(["x", "y"])
    x, y = R.gens()
    P = presentation_of_ideal(Ideal(R, [x, y]))
    L = linear_space_ideal(P)
    ring = L.ideal.ring
    z1, z2 = fiber_gens(L)
    xv, yv = ring.var("x"), ring.var("y")
    # one Koszul relation gives one linear fibre equation, up to sign
    expected = Ideal(ring, [yv * z1 - xv * z2])
    assert L.ideal.equals(expected)
    pc = primary_component(L)
    assert pc.ideal.equals(expected)
    assert pc_is_linear(pc)


def test_corank_two_cone_has_nonlinear_component():
    R = CoordinateRing(["x", "y"])
    x, y = R.gens()
    P = presentation_of_ideal(Ideal(R, [x ** 2, x * y ** 2, y ** 4]))
    L = linear_space_ideal(P)
    ring = L.ideal.ring
    z1, z2, z3 = fiber_gens(L)
    xv, yv = ring.var("x"), ring.var("y")
    expected = Ideal(ring, [yv ** 2 * z1 - xv * z2, yv ** 2 * z2 - xv * z3])
    assert L.ideal.equals(expected)

    g = yv * (z2 ** 2 - z1 * z3)
    verdict = reducedness_witness(L.ideal, g, 2)
    assert verdict.confirmed  # g not in the ideal, g^2 is: non-reduced cone

    pc = primary_component(L)
    expected_pc = Ideal(
        ring, list(expected.generators) + [z2 ** 2 - z1 * z3]
    )
    assert pc.ideal.equals(expected_pc)
    assert not pc_is_linear(pc)


def test_free_module_cone_is_everything():
    R = CoordinateRing(["x", "y"])
    from sheafforge import Presentation

    P = Presentation(R, 2, [[], []])
    L = linear_space_ideal(P)
    assert L.ideal.is_zero()
    assert pc_is_linear(primary_component(L, sing=Ideal(R, [R.var("x")])))


def test_normal_hypersurface():
    R = CoordinateRing(["x", "y", "z1", "z2"])
    x, y, z1, z2 = R.gens()
    assert is_normal_hypersurface(y * z1 - x * z2)
    S = CoordinateRing(["x", "y"])
    xs, ys = S.gens()
    assert is_normal_hypersurface(xs)          # smooth
    assert not is_normal_hypersurface(xs * ys)  # node along a line: not normal
