"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a map from exponent vectors to nonzero coefficients:

    x^2*y - 3/2*z  over ("x", "y", "z")  ->  {(2, 1, 0): 1, (0, 0, 1): -3/2}

Coefficients are ``fractions.Fraction``, so every operation is exact; there
is no floating-point mode.  Instances are immutable: all arithmetic returns
new objects, and values can be shared freely across threads.

Terms are kept in no particular order internally; printing and iteration
use graded-lexicographic order (total degree first, then lexicographic on
the exponent vector), which is also the canonical text form understood by
the expression parser.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Sequence

# Exact rational scalar used for every coefficient.  Fraction already
# guarantees the invariants we need: reduced form and positive denominator.
BigRat = Fraction

Exponent = tuple[int, ...]


class VariableMismatchError(ValueError):
    """Operands live over different variable lists."""


class UnknownVariableError(ValueError):
    """A named variable is not part of the polynomial's variable list."""


class NonHomogeneousError(ValueError):
    """An operation required a homogeneous form and the input is not one."""


class SingularMatrixError(ValueError):
    """A linear substitution matrix is not invertible over the rationals."""


def _as_rat(value: int | Fraction) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an integer or Fraction, got {type(value).__name__}")


def grlex_key(exps: Exponent) -> tuple[int, Exponent]:
    """Sort key for graded-lexicographic order (ascending)."""
    return (sum(exps), exps)


class MultiPoly:
    """Immutable sparse multivariate polynomial over the rationals."""

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, int | Fraction]):
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate variable names in {vs}")
        nvars = len(vs)
        clean: dict[Exponent, Fraction] = {}
        for exps, coeff in terms.items():
            e = tuple(exps)
            if len(e) != nvars:
                raise ValueError(f"exponent vector {e} does not match variables {vs}")
            if any(k < 0 for k in e):
                raise ValueError(f"negative exponent in {e}")
            c = _as_rat(coeff)
            if c != 0:
                clean[e] = clean.get(e, Fraction(0)) + c
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "_terms", {e: c for e, c in clean.items() if c != 0})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MultiPoly is immutable")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def const(cls, variables: Sequence[str], value: int | Fraction) -> "MultiPoly":
        z = (0,) * len(tuple(variables))
        return cls(variables, {z: _as_rat(value)})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        vs = tuple(variables)
        if name not in vs:
            raise UnknownVariableError(f"variable {name!r} not among {vs}")
        exps = tuple(1 if v == name else 0 for v in vs)
        return cls(vs, {exps: 1})

    @classmethod
    def monomial(
        cls, variables: Sequence[str], exps: Exponent, coeff: int | Fraction = 1
    ) -> "MultiPoly":
        return cls(variables, {tuple(exps): _as_rat(coeff)})

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        """Copy of the term map (exponent vector -> nonzero coefficient)."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exps: Exponent) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * len(self.variables), Fraction(0))

    def total_degree(self) -> int | None:
        """Total degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def degree_in(self, var: str) -> int | None:
        """Degree in one variable, or None for the zero polynomial."""
        i = self._var_index(var)
        if not self._terms:
            return None
        return max(e[i] for e in self._terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self._terms}
        return len(degs) <= 1

    def homogeneous_degree(self) -> int:
        """Common total degree of all terms; raises on 0 or mixed degrees."""
        degs = {sum(e) for e in self._terms}
        if len(degs) != 1:
            raise NonHomogeneousError(
                "zero polynomial has no homogeneous degree"
                if not degs
                else f"mixed term degrees {sorted(degs)}"
            )
        return degs.pop()

    def _var_index(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise UnknownVariableError(
                f"variable {var!r} not among {self.variables}"
            ) from None

    def _check_same_vars(self, other: "MultiPoly") -> None:
        if self.variables != other.variables:
            raise VariableMismatchError(
                f"operands over {self.variables} and {other.variables}"
            )

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def _coerce(self, other: object) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            self._check_same_vars(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.variables, other)
        return None

    def __add__(self, other: object) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: object) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "MultiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return MultiPoly.zero(self.variables)
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in o._terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, Fraction(0)) + ca * cb
        return MultiPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {n!r}")
        result = MultiPoly.const(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.variables, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # ------------------------------------------------------------------
    # Calculus and substitution
    # ------------------------------------------------------------------

    def diff(self, var: str) -> "MultiPoly":
        """Formal partial derivative with respect to one variable."""
        i = self._var_index(var)
        out: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            if e[i] == 0:
                continue
            d = list(e)
            d[i] -= 1
            out[tuple(d)] = c * e[i]
        return MultiPoly(self.variables, out)

    def evaluate(self, values: Sequence[int | Fraction]) -> Fraction:
        """Evaluate at a point, one value per variable."""
        vals = [_as_rat(v) for v in values]
        if len(vals) != len(self.variables):
            raise ValueError(
                f"expected {len(self.variables)} values, got {len(vals)}"
            )
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term *= v**k
            total += term
        return total

    def substitute(self, images: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute a polynomial for every variable.

        All images must share one variable list, which becomes the variable
        list of the result.  Powers of each image are cached, so repeated
        exponents cost one multiplication each.
        """
        if set(images) != set(self.variables):
            raise ValueError(
                f"need an image for each of {self.variables}, got {sorted(images)}"
            )
        imgs = [images[v] for v in self.variables]
        target = imgs[0].variables
        for im in imgs:
            if im.variables != target:
                raise VariableMismatchError("images over differing variable lists")
        powers: list[dict[int, MultiPoly]] = [
            {0: MultiPoly.const(target, 1)} for _ in imgs
        ]

        def power(i: int, k: int) -> MultiPoly:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * imgs[i]
            return cache[k]

        out = MultiPoly.zero(target)
        for e, c in self._terms.items():
            term = MultiPoly.const(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def dehomogenize(self, var: str) -> "MultiPoly":
        """Set one variable to 1, dropping it from the variable list."""
        i = self._var_index(var)
        rest = self.variables[:i] + self.variables[i + 1 :]
        out: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            r = e[:i] + e[i + 1 :]
            out[r] = out.get(r, Fraction(0)) + c
        return MultiPoly(rest, out)

    def coefficients_in(self, var: str) -> "list[MultiPoly]":
        """Dense coefficient list in one variable, lowest power first.

        Entry ``i`` is the coefficient of ``var**i`` as a polynomial over
        the remaining variables.  Empty list for the zero polynomial.
        """
        i = self._var_index(var)
        rest = self.variables[:i] + self.variables[i + 1 :]
        if not self._terms:
            return []
        top = max(e[i] for e in self._terms)
        buckets: list[dict[Exponent, Fraction]] = [{} for _ in range(top + 1)]
        for e, c in self._terms.items():
            r = e[:i] + e[i + 1 :]
            buckets[e[i]][r] = buckets[e[i]].get(r, Fraction(0)) + c
        return [MultiPoly(rest, b) for b in buckets]

    # ------------------------------------------------------------------
    # Exact division
    # ------------------------------------------------------------------

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact polynomial division; raises if the quotient is not exact.

        Works recursively one variable at a time, which is all that the
        fraction-free elimination in the resultant code requires.
        """
        self._check_same_vars(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return MultiPoly.zero(self.variables)
        if not self.variables:
            return MultiPoly.const((), self.constant_term() / divisor.constant_term())
        var = self.variables[-1]
        num = self.coefficients_in(var)
        den = divisor.coefficients_in(var)
        b = len(den) - 1
        rest_vars = num[0].variables
        quot: dict[int, MultiPoly] = {}
        # Synthetic division on the top coefficient; exactness of the whole
        # quotient forces exactness of every leading-coefficient division.
        while num:
            a = len(num) - 1
            if a < b:
                raise ValueError("division is not exact")
            c = num[a].exact_div(den[b])
            quot[a - b] = c
            for i, dcoef in enumerate(den):
                num[a - b + i] = num[a - b + i] - c * dcoef
            while num and num[-1].is_zero():
                num.pop()
        out: dict[Exponent, Fraction] = {}
        for k, coef in quot.items():
            for e, cval in coef._terms.items():
                out[e + (k,)] = cval
        reordered = MultiPoly(rest_vars + (var,), out)
        if reordered.variables == self.variables:
            return reordered
        # Variable removed from the middle: map exponents back into place.
        back: dict[Exponent, Fraction] = {}
        idx = [reordered.variables.index(v) for v in self.variables]
        for e, cval in reordered._terms.items():
            back[tuple(e[i] for i in idx)] = cval
        return MultiPoly(self.variables, back)

    # ------------------------------------------------------------------
    # Printing
    # ------------------------------------------------------------------

    def sorted_terms(self) -> Iterator[tuple[Exponent, Fraction]]:
        """Terms in descending graded-lexicographic order."""
        for e in sorted(self._terms, key=grlex_key, reverse=True):
            yield e, self._terms[e]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.variables, e)
                if k > 0
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables!r}, {self!s})"


# ----------------------------------------------------------------------
# Free functions on polynomials
# ----------------------------------------------------------------------


def differentiate(p: MultiPoly, var: str) -> MultiPoly:
    return p.diff(var)


def gradient(p: MultiPoly) -> list[MultiPoly]:
    return [p.diff(v) for v in p.variables]


def det3(m: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Determinant of a 3x3 polynomial matrix by cofactor expansion."""
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def hessian_determinant(form: MultiPoly) -> MultiPoly:
    """Determinant of the matrix of second partials of a ternary form.

    The input must be homogeneous of degree >= 2 in exactly three
    variables; the result is homogeneous of degree 3*(d - 2), or zero when
    the second-derivative matrix is everywhere rank-deficient.
    """
    if len(form.variables) != 3:
        raise ValueError(f"expected a ternary form, got variables {form.variables}")
    d = form.homogeneous_degree()
    if d < 2:
        raise ValueError(f"form degree must be at least 2, got {d}")
    firsts = [form.diff(v) for v in form.variables]
    rows = [[fi.diff(v) for v in form.variables] for fi in firsts]
    return det3(rows)


def int_matrix_det3(m: Sequence[Sequence[int]]) -> int:
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def linear_substitute(p: MultiPoly, matrix: Sequence[Sequence[int]]) -> MultiPoly:
    """Compose a ternary polynomial with an invertible linear change.

    ``matrix`` is a 3x3 integer matrix M; the result is p(M @ (x, y, z)),
    i.e. each variable is replaced by the corresponding row combination.
    """
    if len(p.variables) != 3:
        raise ValueError(f"expected three variables, got {p.variables}")
    rows = [list(r) for r in matrix]
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("matrix must be 3x3")
    if int_matrix_det3(rows) == 0:
        raise SingularMatrixError("substitution matrix has determinant 0")
    vs = p.variables
    images = {
        v: MultiPoly(
            vs,
            {
                tuple(1 if j == jj else 0 for jj in range(3)): rows[i][j]
                for j in range(3)
                if rows[i][j] != 0
            },
        )
        for i, v in enumerate(vs)
    }
    return p.substitute(images)


def compose_linear(
    p: MultiPoly, columns: Sequence[Sequence[int | Fraction]], new_vars: Sequence[str]
) -> MultiPoly:
    """Restrict a polynomial to the span of the given coordinate columns.

    ``columns[j]`` is the image point of the j-th new variable: variable i
    of ``p`` is replaced by sum_j columns[j][i] * new_vars[j].  Used to
    restrict a ternary form to a parametrized line (two columns).
    """
    nv = tuple(new_vars)
    cols = [list(c) for c in columns]
    if any(len(c) != len(p.variables) for c in cols):
        raise ValueError("each column must give one value per old variable")
    if len(cols) != len(nv):
        raise ValueError("need one column per new variable")
    images = {}
    for i, v in enumerate(p.variables):
        images[v] = MultiPoly(
            nv,
            {
                tuple(1 if j == jj else 0 for jj in range(len(nv))): cols[j][i]
                for j in range(len(nv))
                if cols[j][i] != 0
            },
        )
    return p.substitute(images)
