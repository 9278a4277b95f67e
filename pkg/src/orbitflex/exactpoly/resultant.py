"""Sylvester resultants by fraction-free elimination.

The resultant of two polynomials in an eliminated variable is the
determinant of their Sylvester matrix, with the rows carrying the first
argument's coefficients placed first.  Entries are polynomials in the
remaining variables, and the determinant is computed without ever leaving
the polynomial ring:

* one remaining variable: evaluate the matrix at enough integer points,
  take integer Bareiss determinants, and interpolate (the fast path used
  by the curve pipeline);
* otherwise: Bareiss elimination directly on polynomial entries, with
  exact division at each step.

Both paths compute the determinant of the same matrix, so they agree
exactly, signs included.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Sequence

from .multipoly import MultiPoly
from .unipoly import UniPoly, ZeroPolynomialError


def sylvester_matrix(f: MultiPoly, g: MultiPoly, var: str) -> list[list[MultiPoly]]:
    """Sylvester matrix of f and g in ``var`` (f's coefficient rows first)."""
    if f.variables != g.variables:
        raise ValueError(f"operands over {f.variables} and {g.variables}")
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("resultant of the zero polynomial is undefined")
    fc = f.coefficients_in(var)
    gc = g.coefficients_in(var)
    m, n = len(fc) - 1, len(gc) - 1
    rest = fc[0].variables
    zero = MultiPoly.zero(rest)
    size = m + n
    rows: list[list[MultiPoly]] = []
    fd = list(reversed(fc))  # descending powers
    gd = list(reversed(gc))
    for i in range(n):
        rows.append([zero] * i + fd + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gd + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: MultiPoly, g: MultiPoly, var: str, method: str = "auto") -> MultiPoly:
    """Resultant of f and g with respect to ``var``.

    Returns a polynomial over the remaining variables.  When one argument
    is constant in ``var`` the usual convention applies:
    Res(f, g) = f**deg(g) if deg(f) = 0, and 1 if both degrees are 0.
    """
    if f.variables != g.variables:
        raise ValueError(f"operands over {f.variables} and {g.variables}")
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("resultant of the zero polynomial is undefined")
    fc = f.coefficients_in(var)
    gc = g.coefficients_in(var)
    m, n = len(fc) - 1, len(gc) - 1
    if m == 0:
        return fc[0] ** n
    if n == 0:
        return gc[0] ** m
    matrix = sylvester_matrix(f, g, var)
    rest = matrix[0][0].variables
    if method not in ("auto", "bareiss", "interpolate"):
        raise ValueError(f"unknown method {method!r}")
    if len(rest) == 1 and method in ("auto", "interpolate"):
        hint = _bezout_degree_hint(fc, gc, rest[0])
        return _det_interpolated(matrix, rest[0], hint)
    if method == "interpolate":
        raise ValueError("interpolation path needs exactly one remaining variable")
    return bareiss_det_poly(matrix)


def _bezout_degree_hint(
    fc: Sequence[MultiPoly], gc: Sequence[MultiPoly], var: str
) -> int | None:
    """Degree bound m*n, valid when coefficient degrees are triangular.

    If coefficient i of each input has degree <= (top degree - i) in the
    remaining variable -- true for dehomogenized forms -- the resultant is
    the dehomogenization of a binary form of degree m*n.
    """
    m, n = len(fc) - 1, len(gc) - 1
    for top, cs in ((m, fc), (n, gc)):
        for i, c in enumerate(cs):
            d = c.degree_in(var)
            if d is not None and d > top - i:
                return None
    return m * n


# ----------------------------------------------------------------------
# Determinants
# ----------------------------------------------------------------------


def bareiss_det_int(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot is None:
            return 0
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (pk * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


def bareiss_det_poly(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Fraction-free determinant of a polynomial matrix (exact divisions)."""
    n = len(matrix)
    if n == 0:
        return MultiPoly.const((), 1)
    variables = matrix[0][0].variables
    m = [list(row) for row in matrix]
    sign = 1
    prev = MultiPoly.const(variables, 1)
    for k in range(n - 1):
        pivot = next((r for r in range(k, n) if not m[r][k].is_zero()), None)
        if pivot is None:
            return MultiPoly.zero(variables)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = (pk * m[i][j] - mik * m[k][j]).exact_div(prev)
            m[i][k] = MultiPoly.zero(variables)
        prev = pk
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def _det_interpolated(
    matrix: Sequence[Sequence[MultiPoly]], var: str, degree_hint: int | None
) -> MultiPoly:
    """Determinant of a matrix of univariate polynomials by interpolation.

    Rows are rescaled to integer coefficients (the determinant picks up the
    product of the scales, divided back out at the end), evaluated at small
    integers, and reassembled by Newton interpolation.  Deterministic point
    order keeps results identical from run to run.
    """
    n = len(matrix)
    if n == 0:
        return MultiPoly.const((var,), 1)
    int_rows: list[list[list[int]]] = []
    scale = 1
    row_bound_total = 0
    for row in matrix:
        dense = [UniPoly.from_multipoly(p).coeffs for p in row]
        lcm = 1
        for cs in dense:
            for c in cs:
                lcm = lcm * c.denominator // int_gcd(lcm, c.denominator)
        scale *= lcm
        int_rows.append([[int(c * lcm) for c in cs] for cs in dense])
        row_bound_total += max((len(cs) - 1 for cs in dense if cs), default=0)
    bound = row_bound_total
    if degree_hint is not None:
        bound = min(bound, degree_hint)
    points = _eval_points(bound + 1)
    values: list[Fraction] = []
    for t in points:
        m = [[_eval_int_list(cs, t) for cs in row] for row in int_rows]
        values.append(Fraction(bareiss_det_int(m), scale))
    coeffs = _newton_interpolate(points, values)
    return MultiPoly((var,), {(i,): c for i, c in enumerate(coeffs) if c != 0})


def _eval_points(count: int) -> list[int]:
    pts = [0]
    t = 1
    while len(pts) < count:
        pts.append(t)
        if len(pts) < count:
            pts.append(-t)
        t += 1
    return pts[:count]


def _eval_int_list(coeffs: Sequence[int], t: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _newton_interpolate(xs: Sequence[int], ys: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients (lowest first) of the interpolating polynomial."""
    k = len(xs)
    diffs = list(ys)
    # diffs[i] becomes the divided difference f[x_0 .. x_i].
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            diffs[i] = (diffs[i] - diffs[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * k
    # Horner accumulation of sum_i diffs[i] * prod_{j<i} (x - x_j).
    for i in range(k - 1, -1, -1):
        carry = [Fraction(0)] + coeffs[:-1]
        for j in range(k):
            coeffs[j] = carry[j] - xs[i] * coeffs[j]
        coeffs[0] += diffs[i]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs
