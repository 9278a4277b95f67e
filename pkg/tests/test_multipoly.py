import random
from fractions import Fraction

import pytest

from orbitflex.exactpoly import (
    MultiPoly,
    NonHomogeneousError,
    SingularMatrixError,
    VariableMismatchError,
    compose_linear,
    hessian_determinant,
    linear_substitute,
)
from helpers import CURVE_VARS, random_homogeneous, random_multipoly

V = CURVE_VARS
X = MultiPoly.var(V, "x")
Y = MultiPoly.var(V, "y")
Z = MultiPoly.var(V, "z")


def test_binomial_expansion():
    assert (X + Y) ** 2 == X**2 + 2 * X * Y + Y**2


def test_multiplication_by_zero_annihilates():
    p = X**3 + 2 * Y * Z
    assert (p * MultiPoly.zero(V)).is_zero()


def test_additive_inverse():
    p = X**3 + Y**3 + Z**3
    assert (p + (-p)).is_zero()


def test_ring_axioms_on_random_triples():
    rng = random.Random(7)
    for _ in range(40):
        a = random_multipoly(rng)
        b = random_multipoly(rng)
        c = random_multipoly(rng)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_variable_mismatch_rejected():
    p = MultiPoly.var(("x", "y"), "x")
    with pytest.raises(VariableMismatchError):
        p + X


def test_zero_degree_sentinel():
    assert MultiPoly.zero(V).total_degree() is None
    assert MultiPoly.const(V, 5).total_degree() == 0


def test_differentiate_examples():
    F = X**3 + Y**3 + Z**3
    assert F.diff("x") == 3 * X**2
    G = X**3 * Y + Y**3 * Z + Z**3 * X
    assert G.diff("y") == X**3 + 3 * Y**2 * Z


def test_euler_identity_random_homogeneous():
    rng = random.Random(11)
    for _ in range(20):
        d = rng.randint(1, 5)
        F = random_homogeneous(rng, d)
        lhs = X * F.diff("x") + Y * F.diff("y") + Z * F.diff("z")
        assert lhs == d * F


def test_hessian_fermat_cubic():
    # diag(6x, 6y, 6z) has determinant 216xyz
    assert hessian_determinant(X**3 + Y**3 + Z**3) == 216 * X * Y * Z


def test_hessian_triple_line_vanishes():
    assert hessian_determinant(X**3).is_zero()


def test_hessian_degree_of_smooth_quartic():
    h = hessian_determinant(X**4 + Y**4 + Z**4)
    assert h.homogeneous_degree() == 6


def test_hessian_rejects_non_homogeneous():
    with pytest.raises(NonHomogeneousError):
        hessian_determinant(X**2 + Y**3)


def test_linear_substitute_identity():
    p = X**3 * Y + Z**4
    assert linear_substitute(p, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == p


def test_linear_substitute_swap_symmetry():
    p = X**4 + Y**4 + Z**4
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    assert linear_substitute(p, swap) == p


def test_linear_substitute_composition_with_adjugate():
    # M * adj(M) = det(M) * I, so substituting both scales a homogeneous
    # form by det^degree.
    rng = random.Random(3)
    m = [[2, 1, 0], [1, 1, 1], [0, 3, 1]]
    det = 2 * (1 - 3) - 1 * (1 - 0) + 0
    assert det == -5
    adj = [
        [-2, -1, 1],
        [-1, 2, -2],
        [3, -6, 1],
    ]
    for _ in range(5):
        d = rng.randint(1, 3)
        p = random_homogeneous(rng, d)
        composed = linear_substitute(linear_substitute(p, m), adj)
        assert composed == det**d * p


def test_linear_substitute_rejects_singular():
    with pytest.raises(SingularMatrixError):
        linear_substitute(X, [[1, 0, 0], [1, 0, 0], [0, 0, 1]])


def test_compose_linear_restricts_to_line():
    F = X**3 + Y**3 + Z**3
    restricted = compose_linear(F, [(1, -1, 0), (0, 0, 1)], ("s", "t"))
    # F(s, -s, t) = t^3
    assert restricted == MultiPoly.var(("s", "t"), "t") ** 3


def test_exact_div_roundtrip():
    rng = random.Random(5)
    for _ in range(25):
        p = random_multipoly(rng, max_degree=2, max_terms=4)
        q = random_multipoly(rng, max_degree=2, max_terms=3)
        if q.is_zero():
            continue
        assert (p * q).exact_div(q) == p


def test_exact_div_rejects_inexact():
    with pytest.raises(ValueError):
        (X**2 + Y).exact_div(X + 1)


def test_rational_coefficients_stay_exact():
    p = MultiPoly.const(V, Fraction(1, 3)) * X + MultiPoly.const(V, Fraction(1, 6)) * X
    assert p == MultiPoly.monomial(V, (1, 0, 0), Fraction(1, 2))


def test_canonical_string_ordering():
    p = Z**3 + X * Y * Z - 2 * X**2 * Y + 1
    assert str(p) == "-2*x^2*y + x*y*z + z^3 + 1"


def test_hessian_transforms_covariantly():
    # Hess(F o M) = det(M)^2 * Hess(F) o M
    from orbitflex.exactpoly import int_matrix_det3

    rng = random.Random(101)
    m = [[1, 2, 0], [0, 1, 1], [1, 0, 1]]
    det = int_matrix_det3(m)
    assert det == 3
    for _ in range(5):
        F = random_homogeneous(rng, rng.randint(2, 4))
        lhs = hessian_determinant(linear_substitute(F, m))
        rhs = det**2 * linear_substitute(hessian_determinant(F), m)
        assert lhs == rhs
