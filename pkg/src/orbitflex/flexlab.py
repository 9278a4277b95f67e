"""Smoothness checking and flex profiles of plane curves.

A point q of a smooth curve C is a flex of order r when the tangent line
at q meets C with intersection multiplicity r + 2; r = 1 is a simple
flex, r = 2 a hyperflex.  The weighted flex count of a smooth degree-d
curve is always 3d(d-2).

``flex_profile`` counts flexes of each order over the algebraic closure
without ever leaving exact rational arithmetic: flex orders equal the
local intersection multiplicities of the curve with its Hessian, and
after a generic integer coordinate change those multiplicities are read
off the squarefree decomposition of the curve-Hessian resultant.  A
candidate profile is accepted only when (a) the resultant has the exact
expected degree and (b) an independent second coordinate change
reproduces it; distinct intersection points can only ever merge under a
bad projection, so agreement of two independent projections certifies
the profile.  The whole computation is deterministic given the seed.

``check_smooth`` certifies that the three partial derivatives share no
projective zero, by eliminating one variable from two pairs of partials
and taking a gcd of the resulting binary forms; generic coordinates make
the elimination free of extraneous factors, so a trivial gcd is a proof
of smoothness.  A nontrivial gcd triggers an attempt to exhibit a
rational singular point, then a retry in new coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Mapping, Sequence

from .exactpoly import (
    MultiPoly,
    UniPoly,
    compose_linear,
    factor_integer,
    gradient,
    hessian_determinant,
    linear_substitute,
    resultant,
    squarefree_decompose,
)
from .exactpoly.unipoly import gcd as poly_gcd

RETRY_BUDGET = 8
INITIAL_BOUND = 3

Point = tuple[Fraction, Fraction, Fraction]


class SingularCurveError(Exception):
    """The form defines a singular curve.

    ``witness`` is a projective point killing all three partials when one
    with rational coordinates was found, else None.
    """

    def __init__(self, message: str, witness: Point | None = None):
        super().__init__(message if witness is None else f"{message}; witness {witness}")
        self.witness = witness


class GenericityFailureError(RuntimeError):
    """No generic coordinate change was found within the retry budget."""


class PointNotOnCurveError(ValueError):
    """A point claimed to lie on the curve does not."""


@dataclass(frozen=True)
class PlaneCurve:
    """A homogeneous ternary form certified smooth by ``check_smooth``."""

    form: MultiPoly
    degree: int
    smooth: bool = True


class FlexProfile:
    """Multiset {flex order r >= 1 -> count over the algebraic closure}."""

    __slots__ = ("degree", "_counts")

    def __init__(self, degree: int, counts: Mapping[int, int]):
        clean = {r: n for r, n in counts.items() if n != 0}
        weighted = sum(r * n for r, n in clean.items())
        if weighted != 3 * degree * (degree - 2):
            raise ValueError(
                f"weighted flex count {weighted} != 3d(d-2) = {3*degree*(degree-2)}"
            )
        for r, n in clean.items():
            if r < 1 or n < 0:
                raise ValueError(f"invalid profile entry {r}: {n}")
            if r > degree - 2:
                raise ValueError(
                    f"flex order {r} exceeds d-2 = {degree - 2} (a line meets the"
                    " curve with multiplicity at most d)"
                )
        self.degree = degree
        self._counts = dict(sorted(clean.items()))

    @classmethod
    def all_simple(cls, degree: int) -> "FlexProfile":
        return cls(degree, {1: 3 * degree * (degree - 2)})

    @property
    def counts(self) -> dict[int, int]:
        return dict(self._counts)

    def count(self, order: int) -> int:
        return self._counts.get(order, 0)

    def items(self) -> list[tuple[int, int]]:
        return list(self._counts.items())

    def weighted_total(self) -> int:
        return sum(r * n for r, n in self._counts.items())

    def flexes_of_order_above(self, threshold: int) -> int:
        """Number of flexes with order strictly greater than ``threshold``."""
        return sum(n for r, n in self._counts.items() if r > threshold)

    def power_sum(self, power: int) -> int:
        """Sum of (flex order)**power over all flexes."""
        return sum(n * r**power for r, n in self._counts.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FlexProfile):
            return NotImplemented
        return self.degree == other.degree and self._counts == other._counts

    def __hash__(self) -> int:
        return hash((self.degree, tuple(self._counts.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{r}: {n}" for r, n in self._counts.items())
        return f"FlexProfile(d={self.degree}, {{{body}}})"


@dataclass(frozen=True)
class FlexSums:
    """The power sums f^(r) = sum_q (flex order of q)**r for r = 2..5."""

    f2: int
    f3: int
    f4: int
    f5: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.f2, self.f3, self.f4, self.f5)


def f_sums(profile: FlexProfile) -> FlexSums:
    return FlexSums(*(profile.power_sum(r) for r in range(2, 6)))


# ----------------------------------------------------------------------
# Shared helpers
# ----------------------------------------------------------------------


def _integer_form(p: MultiPoly) -> MultiPoly:
    """Rescale to coprime integer coefficients (profile-invariant)."""
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // int_gcd(den, c.denominator)
    ints = {e: int(c * den) for e, c in p.terms.items()}
    content = 0
    for v in ints.values():
        content = int_gcd(content, abs(v))
    if content > 1:
        ints = {e: v // content for e, v in ints.items()}
    return MultiPoly(p.variables, ints)


def random_unimodular(rng: random.Random, bound: int) -> list[list[int]]:
    """Random integer matrix of determinant +-1 with well-spread entries.

    Built as (signed permutation) * L * U with unit-triangular L, U whose
    off-diagonal entries are nonzero draws from [-bound, bound]; sparse
    rows are avoided because they tend to align the projection with the
    distinguished points of symmetric curves.
    """

    def nz() -> int:
        c = 0
        while c == 0:
            c = rng.randint(-bound, bound)
        return c

    lower = [[1, 0, 0], [nz(), 1, 0], [nz(), nz(), 1]]
    upper = [[1, nz(), nz()], [0, 1, nz()], [0, 0, 1]]
    m = [
        [sum(lower[i][k] * upper[k][j] for k in range(3)) for j in range(3)]
        for i in range(3)
    ]
    order = [0, 1, 2]
    rng.shuffle(order)
    m = [m[i] for i in order]
    for i in range(3):
        if rng.random() < 0.5:
            m[i] = [-c for c in m[i]]
    return m


def _apply_matrix(m: Sequence[Sequence[int]], v: Sequence[Fraction]) -> Point:
    return tuple(sum(Fraction(m[i][j]) * v[j] for j in range(3)) for i in range(3))


def _normalize_point(v: Sequence[Fraction]) -> Point:
    den = 1
    for c in v:
        den = den * c.denominator // int_gcd(den, c.denominator)
    ints = [int(c * den) for c in v]
    g = 0
    for c in ints:
        g = int_gcd(g, abs(c))
    if g > 1:
        ints = [c // g for c in ints]
    lead = next((c for c in ints if c != 0), 1)
    if lead < 0:
        ints = [-c for c in ints]
    return tuple(Fraction(c) for c in ints)


# ----------------------------------------------------------------------
# Smoothness
# ----------------------------------------------------------------------

_COORDINATE_POINTS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def check_smooth(form: MultiPoly) -> PlaneCurve:
    """Certify that a ternary form of degree >= 3 defines a smooth curve.

    Returns a PlaneCurve on success.  Raises SingularCurveError when the
    gradient has a common projective zero (with the point as witness when
    a rational one is found), or GenericityFailureError when the retry
    budget runs out without either a certificate or a witness.
    """
    if len(form.variables) != 3:
        raise ValueError(f"expected a ternary form, got variables {form.variables}")
    d = form.homogeneous_degree()
    if d < 3:
        raise ValueError(f"curve degree must be at least 3, got {d}")
    f = _integer_form(form)
    partials = gradient(f)
    for i, p in enumerate(partials):
        if p.is_zero():
            # The form misses variable i entirely; the corresponding
            # coordinate point kills all three partials.
            witness = tuple(Fraction(1 if j == i else 0) for j in range(3))
            raise SingularCurveError("gradient vanishes identically in one direction", witness)

    rng = random.Random(0x5EED)
    bound = INITIAL_BOUND
    identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    obstructed = 0
    for attempt in range(RETRY_BUDGET):
        m = identity if attempt == 0 else random_unimodular(rng, bound)
        if attempt > 0:
            bound *= 2
        g = linear_substitute(f, m) if attempt > 0 else f
        grads = gradient(g)
        for pt in _COORDINATE_POINTS:
            if all(p.evaluate(pt) == 0 for p in grads):
                raise SingularCurveError(
                    "all partial derivatives vanish at a coordinate point",
                    _normalize_point(_apply_matrix(m, tuple(map(Fraction, pt)))),
                )
        # Clean elimination needs the top z-coefficient of each partial to
        # be a nonzero constant, i.e. no partial vanishing at (0:0:1).
        if any(p.evaluate((0, 0, 1)) == 0 for p in grads):
            continue
        a, b, c = (p.dehomogenize("y") for p in grads)
        r1 = resultant(a, b, "z")
        r2 = resultant(a, c, "z")
        if r1.is_zero() or r2.is_zero():
            raise SingularCurveError(
                "two partial derivatives share a positive-dimensional component"
            )
        deg_form = (d - 1) ** 2
        common = _binary_common_roots(r1, r2, deg_form, deg_form)
        if common is None:
            return PlaneCurve(form=form, degree=d, smooth=True)
        obstructed += 1
        witness = _find_rational_witness(grads, common)
        if witness is not None:
            raise SingularCurveError(
                "all partial derivatives vanish at a rational point",
                _normalize_point(_apply_matrix(m, witness)),
            )
    detail = (
        "; the gradient system kept common roots under every projection but"
        " none with rational coordinates, so the curve is most likely"
        " singular at irrational points"
        if obstructed
        else ""
    )
    raise GenericityFailureError(
        f"could not certify smoothness within {RETRY_BUDGET} coordinate changes{detail}"
    )


def _binary_common_roots(
    r1: MultiPoly, r2: MultiPoly, deg1: int, deg2: int
) -> list[tuple[Fraction, Fraction]] | None:
    """Common projective roots of two binary forms given dehomogenized.

    ``r1``/``r2`` are the y=1 specializations of forms of degree ``deg1``
    and ``deg2`` in (x, y).  Returns None when there is no common root
    (the smoothness certificate), otherwise a list of the rational common
    roots found, as (x0, y0) pairs -- possibly empty when every common
    root is irrational.
    """
    u1 = UniPoly.from_multipoly(r1)
    u2 = UniPoly.from_multipoly(r2)
    val1 = next(i for i, cc in enumerate(u1.coeffs) if cc != 0)
    val2 = next(i for i, cc in enumerate(u2.coeffs) if cc != 0)
    core1 = UniPoly(u1.coeffs[val1:])
    core2 = UniPoly(u2.coeffs[val2:])
    g = poly_gcd(core1, core2)
    root_at_zero = val1 > 0 and val2 > 0
    root_at_infinity = (u1.degree or 0) < deg1 and (u2.degree or 0) < deg2
    if g.degree == 0 and not root_at_zero and not root_at_infinity:
        return None
    found: list[tuple[Fraction, Fraction]] = []
    if root_at_zero:
        found.append((Fraction(0), Fraction(1)))
    if root_at_infinity:
        found.append((Fraction(1), Fraction(0)))
    if g.degree and g.degree > 0:
        found.extend((t, Fraction(1)) for t in _rational_roots(g))
    return found


def _rational_roots(p: UniPoly) -> list[Fraction]:
    """All rational roots of p, by the rational root test."""
    ints = p.primitive_int()
    roots: list[Fraction] = []
    val = next(i for i, c in enumerate(ints) if c != 0)
    if val > 0:
        roots.append(Fraction(0))
        ints = ints[val:]
    if len(ints) < 2:
        return roots
    lead, trail = abs(ints[-1]), abs(ints[0])
    num_divs = _divisors(trail)
    den_divs = _divisors(lead)
    if num_divs is None or den_divs is None:
        return roots
    seen = set()
    for a in num_divs:
        for q in den_divs:
            for cand in (Fraction(a, q), Fraction(-a, q)):
                if cand in seen:
                    continue
                seen.add(cand)
                if UniPoly(ints).evaluate(cand) == 0:
                    roots.append(cand)
    return roots


def _divisors(n: int, cap: int = 4096) -> list[int] | None:
    divs = [1]
    for prime, exp in factor_integer(n):
        divs = [d * prime**k for d in divs for k in range(exp + 1)]
        if len(divs) > cap:
            return None
    return divs


def _find_rational_witness(
    grads: Sequence[MultiPoly], candidates: list[tuple[Fraction, Fraction]]
) -> Point | None:
    zvar = MultiPoly.var(("z",), "z")
    for x0, y0 in candidates:
        fibers = []
        for p in grads:
            images = {
                "x": MultiPoly.const(("z",), x0),
                "y": MultiPoly.const(("z",), y0),
                "z": zvar,
            }
            fibers.append(UniPoly.from_multipoly(p.substitute(images)))
        if all(fib.is_zero() for fib in fibers):
            # Partials vanish along the whole line; pick any point on it.
            return (x0, y0, Fraction(0))
        h = UniPoly([])
        for fib in fibers:
            h = poly_gcd(h, fib)
        if h.degree == 0:
            continue
        for z0 in _rational_roots(h):
            point = (x0, y0, z0)
            if all(p.evaluate(point) == 0 for p in grads):
                return point
    return None


# ----------------------------------------------------------------------
# Flex orders and profiles
# ----------------------------------------------------------------------


def flex_order_at(curve: PlaneCurve, point: Sequence[int | Fraction]) -> int:
    """Flex order r at a rational point of the curve (0 = not a flex).

    The tangent line is parametrized with the point as one basis vector;
    r + 2 is the order of vanishing of the form along that line at the
    point.
    """
    q = tuple(Fraction(c) for c in point)
    if len(q) != 3 or all(c == 0 for c in q):
        raise ValueError(f"not a projective point: {point}")
    form = curve.form
    if form.evaluate(q) != 0:
        raise PointNotOnCurveError(f"{point} does not lie on the curve")
    a, b, c = (p.evaluate(q) for p in gradient(form))
    if a == b == c == 0:
        raise ValueError(f"curve is singular at {point}")
    # Vectors spanning the tangent line a*x + b*y + c*z = 0; the point
    # itself lies on it by the Euler identity.
    spanning = ((b, -a, Fraction(0)), (c, Fraction(0), -a), (Fraction(0), c, -b))
    v = None
    for w in spanning:
        if all(x == 0 for x in w):
            continue
        cross = (
            q[1] * w[2] - q[2] * w[1],
            q[2] * w[0] - q[0] * w[2],
            q[0] * w[1] - q[1] * w[0],
        )
        if any(x != 0 for x in cross):
            v = w
            break
    assert v is not None  # gradient is nonzero, so the line has a basis
    restricted = compose_linear(form, [q, v], ("s", "t"))
    if restricted.is_zero():
        raise ValueError("tangent line is contained in the curve")
    multiplicity = min(e[1] for e in restricted.terms)
    return multiplicity - 2


def flex_profile(curve: PlaneCurve, seed: int = 0) -> FlexProfile:
    """Flex-order multiset of a smooth curve, deterministic given seed."""
    if not curve.smooth:
        raise SingularCurveError("flex profiles require a smoothness certificate")
    d = curve.degree
    form = _integer_form(curve.form)
    rng = random.Random(seed)
    bound = INITIAL_BOUND
    seen: dict[tuple[tuple[int, int], ...], int] = {}
    for _ in range(RETRY_BUDGET):
        m = random_unimodular(rng, bound)
        bound *= 2
        candidate = _profile_once(form, d, m)
        if candidate is None:
            continue
        key = tuple(sorted(candidate.items()))
        seen[key] = seen.get(key, 0) + 1
        if seen[key] == 2:
            return FlexProfile(d, candidate)
    raise GenericityFailureError(
        f"no stable flex profile within {RETRY_BUDGET} coordinate changes"
    )


def _profile_once(
    form: MultiPoly, d: int, m: Sequence[Sequence[int]]
) -> dict[int, int] | None:
    """Multiplicity profile under one coordinate change, or None if the
    change fails a genericity check."""
    g = linear_substitute(form, m)
    if g.evaluate((0, 1, 0)) == 0:
        return None
    hess = hessian_determinant(g)
    if hess.is_zero() or hess.evaluate((0, 1, 0)) == 0:
        return None
    g_aff = g.dehomogenize("z")
    h_aff = hess.dehomogenize("z")
    res = resultant(g_aff, h_aff, "y")
    target = 3 * d * (d - 2)
    if res.degree_in("x") != target:
        return None
    counts: dict[int, int] = {}
    for mult, factor in squarefree_decompose(UniPoly.from_multipoly(res)):
        deg = factor.degree or 0
        if mult > d - 2:
            return None  # merged fibers; not a generic projection
        counts[mult] = counts.get(mult, 0) + deg
    return counts
