import random

import pytest

from orbitflex.exactpoly import MultiPoly, ZeroPolynomialError, resultant, sylvester_matrix

T = ("t",)
t = MultiPoly.var(T, "t")


def rand_poly_in_t(rng: random.Random, deg: int) -> MultiPoly:
    terms = {(i,): rng.randint(-4, 4) for i in range(deg)}
    terms[(deg,)] = rng.choice([1, 2, 3, -2])
    return MultiPoly(T, terms)


def test_linear_pair_by_hand():
    # Sylvester matrix [[1, -1], [1, -2]] has determinant -1.
    assert resultant(t - 1, t - 2, "t").constant_term() == -1


def test_quadratic_pair_product_formula():
    # lc(f)^deg(g) * prod g(roots of f) with roots +-i: (i^2-1)((-i)^2-1) = 4
    assert resultant(t**2 + 1, t**2 - 1, "t").constant_term() == 4


def test_sylvester_layout_convention():
    # f = a t^2 + b t + c, g = d t + e gives det [[a,b,c],[d,e,0],[0,d,e]]
    #                                        = a e^2 - b d e + c d^2.
    a, b, c, d, e = 2, 3, 5, 7, 11
    f = a * t**2 + b * t + c
    g = d * t + e
    m = sylvester_matrix(f, g, "t")
    flat = [[entry.constant_term() for entry in row] for row in m]
    assert flat == [[a, b, c], [d, e, 0], [0, d, e]]
    expected = a * e**2 - b * d * e + c * d**2
    assert resultant(f, g, "t").constant_term() == expected


def test_multiplicative_in_second_argument():
    rng = random.Random(23)
    for _ in range(30):
        f = rand_poly_in_t(rng, rng.randint(1, 3))
        g = rand_poly_in_t(rng, rng.randint(1, 3))
        h = rand_poly_in_t(rng, rng.randint(1, 3))
        assert resultant(f, g * h, "t") == resultant(f, g, "t") * resultant(f, h, "t")


def test_swap_sign_rule():
    rng = random.Random(29)
    for _ in range(30):
        f = rand_poly_in_t(rng, rng.randint(1, 4))
        g = rand_poly_in_t(rng, rng.randint(1, 4))
        sign = (-1) ** (f.degree_in("t") * g.degree_in("t"))
        assert resultant(f, g, "t") == sign * resultant(g, f, "t")


def test_common_root_forces_zero():
    rng = random.Random(31)
    for _ in range(10):
        shared = t - rng.randint(-5, 5)
        f = shared * rand_poly_in_t(rng, 2)
        g = shared * rand_poly_in_t(rng, 1)
        assert resultant(f, g, "t").is_zero()


def test_zero_input_rejected():
    with pytest.raises(ZeroPolynomialError):
        resultant(MultiPoly.zero(T), t, "t")
    with pytest.raises(ZeroPolynomialError):
        resultant(t, MultiPoly.zero(T), "t")


def test_constant_argument_convention():
    c = MultiPoly.const(T, 3)
    g = t**2 + 1
    assert resultant(c, g, "t").constant_term() == 9
    assert resultant(g, c, "t").constant_term() == 9
    assert resultant(c, c, "t").constant_term() == 1


def test_bareiss_and_interpolation_agree():
    rng = random.Random(37)
    W = ("u", "v")
    u = MultiPoly.var(W, "u")
    v = MultiPoly.var(W, "v")
    for _ in range(10):
        f = sum(
            (rng.randint(-3, 3) * u**i * v**j for i in range(3) for j in range(2)),
            MultiPoly.zero(W),
        ) + v**3
        g = sum(
            (rng.randint(-3, 3) * u**i * v**j for i in range(2) for j in range(2)),
            MultiPoly.zero(W),
        ) + u * v**2
        a = resultant(f, g, "v", method="bareiss")
        b = resultant(f, g, "v", method="interpolate")
        assert a == b
        assert a.terms == b.terms  # identical term maps, not just equal values


def test_elimination_finds_projection():
    # Res_y of (y - x^2, y - x - 2) vanishes exactly at intersection x-values.
    W = ("x", "y")
    x = MultiPoly.var(W, "x")
    y = MultiPoly.var(W, "y")
    r = resultant(y - x**2, y - x - 2, "y")
    rt = r.coefficients_in("x")
    # roots of x^2 - x - 2 = (x-2)(x+1), up to sign
    vals = [r.evaluate((2,)), r.evaluate((-1,))]
    assert vals == [0, 0]
    assert r.evaluate((1,)) != 0


def test_three_variable_bareiss_path():
    W = ("u", "v", "w")
    u, v, w = (MultiPoly.var(W, n) for n in W)
    f = u * v + w**2 + 1
    g = v**2 - u * w
    r = resultant(f, g, "w")
    # Res_w of (w^2 + uv + 1, -uw + v^2): direct 3x3 determinant check
    expected = resultant(f, g, "w", method="bareiss")
    assert r == expected
    # eliminating w of f and f gives 0 (common factor)
    assert resultant(f, f * g, "w").is_zero()
