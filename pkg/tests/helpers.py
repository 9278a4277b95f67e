"""Shared generators for randomized tests (all deterministic via seeds)."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement

from orbitflex.exactpoly import MultiPoly
from orbitflex.flexlab import PlaneCurve, SingularCurveError, check_smooth

CURVE_VARS = ("x", "y", "z")


def random_multipoly(
    rng: random.Random,
    variables: tuple[str, ...] = CURVE_VARS,
    max_degree: int = 3,
    max_terms: int = 5,
    coeff_range: int = 5,
) -> MultiPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_degree) for _ in variables)
        terms[exps] = rng.randint(-coeff_range, coeff_range)
    return MultiPoly(variables, terms)


def random_homogeneous(
    rng: random.Random, degree: int, coeff_range: int = 4
) -> MultiPoly:
    """Random homogeneous ternary form with all monomials present."""
    terms = {}
    for combo in combinations_with_replacement(range(3), degree):
        exps = [0, 0, 0]
        for i in combo:
            exps[i] += 1
        terms[tuple(exps)] = rng.randint(-coeff_range, coeff_range)
    return MultiPoly(CURVE_VARS, terms)


def random_smooth_curve(rng: random.Random, degree: int) -> PlaneCurve:
    """Draw random small-coefficient forms until one certifies smooth."""
    while True:
        form = random_homogeneous(rng, degree)
        if form.is_zero() or not form.is_homogeneous():
            continue
        if form.total_degree() != degree:
            continue
        try:
            return check_smooth(form)
        except SingularCurveError:
            continue


def random_valid_profile(rng: random.Random, d: int) -> dict[int, int]:
    """Random flex profile with weighted total 3d(d-2) and orders <= d-2."""
    remaining = 3 * d * (d - 2)
    counts: dict[int, int] = {}
    while remaining:
        r = rng.randint(1, min(d - 2, remaining))
        counts[r] = counts.get(r, 0) + 1
        remaining -= r
    return counts


def frac(n: int, d: int = 1) -> Fraction:
    return Fraction(n, d)
