"""Dense univariate polynomials over the rationals.

Coefficients are stored lowest degree first with no trailing zeros, so the
leading coefficient of a nonzero polynomial is always nonzero.  The heavy
lifting (gcd chains, squarefree decomposition) happens on integer
coefficient lists after clearing denominators; rational results are
reassembled at the boundary.

The gcd of integer polynomials is computed by a small-prime modular
algorithm with CRT reconstruction and a final divisibility check, falling
back to a primitive pseudo-remainder sequence if the prime pool is ever
exhausted.  Squarefree decomposition is the derivative-gcd recursion of
Yun, valid in characteristic zero.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterator, Sequence

from .intfactor import is_prime
from .multipoly import MultiPoly

IntPoly = list[int]  # dense, lowest degree first, no trailing zeros


class ZeroPolynomialError(ValueError):
    """An operation required a nonzero polynomial."""


# ----------------------------------------------------------------------
# Integer-coefficient helpers
# ----------------------------------------------------------------------


def _trim(p: IntPoly) -> IntPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _deg(p: IntPoly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def _content(p: IntPoly) -> int:
    g = 0
    for c in p:
        g = int_gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def _primitive(p: IntPoly) -> IntPoly:
    """Divide out the content and normalize the leading sign to +."""
    if not p:
        return []
    g = _content(p)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def _derivative(p: IntPoly) -> IntPoly:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def _divexact(num: IntPoly, den: IntPoly) -> IntPoly:
    """Exact division of integer polynomials; raises if not exact."""
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return []
    num = list(num)
    dd = _deg(den)
    lead = den[-1]
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - dd - 1, -1, -1):
        top = num[k + dd]
        if top % lead:
            raise ValueError("integer polynomial division is not exact")
        q = top // lead
        quot[k] = q
        if q:
            for i, dc in enumerate(den):
                num[k + i] -= q * dc
    if any(num[:dd]):
        raise ValueError("integer polynomial division left a remainder")
    return _trim(quot)


# -- modular arithmetic ------------------------------------------------


def _mod_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _mod_reduce(p: IntPoly, m: int) -> list[int]:
    return _mod_trim([c % m for c in p])


def _mod_monic_gcd(a: list[int], b: list[int], m: int) -> list[int]:
    """Monic gcd over GF(m) by the Euclidean algorithm."""
    while b:
        inv = pow(b[-1], m - 2, m)
        bm = [(c * inv) % m for c in b]
        r = list(a)
        while len(r) >= len(bm) and r:
            q = r[-1] % m
            if q:
                off = len(r) - len(bm)
                for i, c in enumerate(bm):
                    r[off + i] = (r[off + i] - q * c) % m
            _mod_trim(r)
            if not r:
                break
        a, b = bm, _mod_trim(r)
    if not a:
        return []
    inv = pow(a[-1], m - 2, m)
    return [(c * inv) % m for c in a]


_PRIME_CACHE: list[int] = []
_PRIME_NEXT = [(1 << 31) - 1]


def _prime_pool() -> Iterator[int]:
    i = 0
    while True:
        while i >= len(_PRIME_CACHE):
            n = _PRIME_NEXT[0]
            while not is_prime(n):
                n -= 2
            _PRIME_CACHE.append(n)
            _PRIME_NEXT[0] = n - 2
        yield _PRIME_CACHE[i]
        i += 1


def _sym(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _gcd_modular(f: IntPoly, g: IntPoly) -> IntPoly | None:
    """Primitive gcd of primitive integer polynomials, or None on failure."""
    lead_gcd = int_gcd(f[-1], g[-1])
    best_deg: int | None = None
    combined: list[int] = []
    modulus = 1
    stable = 0
    for p in _prime_pool():
        if f[-1] % p == 0 or g[-1] % p == 0:
            continue
        hp = _mod_monic_gcd(_mod_reduce(f, p), _mod_reduce(g, p), p)
        d = len(hp) - 1
        if d == 0:
            return [1]
        if best_deg is None or d < best_deg:
            best_deg = d
            scaled = [(c * lead_gcd) % p for c in hp]
            combined = list(scaled)
            modulus = p
            stable = 0
        elif d > best_deg:
            continue  # unlucky prime
        else:
            prev = list(combined)
            inv = pow(modulus % p, p - 2, p)
            new: list[int] = []
            scaled = [(c * lead_gcd) % p for c in hp]
            for i in range(best_deg + 1):
                a = combined[i] if i < len(combined) else 0
                b = scaled[i] if i < len(scaled) else 0
                t = ((b - a) * inv) % p
                new.append(a + modulus * t)
            modulus *= p
            combined = new
            if [_sym(c, modulus) for c in combined] == [
                _sym(c, modulus // p) for c in prev
            ]:
                stable += 1
            else:
                stable = 0
        if stable >= 1:
            candidate = _primitive(_trim([_sym(c, modulus) for c in combined]))
            if candidate and _divides(candidate, f) and _divides(candidate, g):
                return candidate
            stable = 0
    return None


def _divides(d: IntPoly, p: IntPoly) -> bool:
    try:
        _divexact(p, d)
    except ValueError:
        return False
    return True


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of a by b (b nonzero), fraction-free."""
    a = list(a)
    dd = _deg(b)
    lead = b[-1]
    while _deg(a) >= dd and a:
        shift = _deg(a) - dd
        top = a[-1]
        a = [c * lead for c in a]
        for i, bc in enumerate(b):
            a[shift + i] -= top * bc
        _trim(a)
    return a


def _gcd_prs(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive pseudo-remainder sequence gcd (always terminates)."""
    a, b = (f, g) if _deg(f) >= _deg(g) else (g, f)
    a, b = _primitive(list(a)), _primitive(list(b))
    while b:
        r = _primitive(_pseudo_rem(a, b))
        a, b = b, r
    return _primitive(a)


def gcd_int_poly(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd of integer polynomials (positive leading coefficient)."""
    f = _primitive(_trim(list(f)))
    g = _primitive(_trim(list(g)))
    if not f:
        return g
    if not g:
        return f
    if _deg(f) == 0 or _deg(g) == 0:
        return [1]
    result = _gcd_modular(f, g)
    if result is None:
        result = _gcd_prs(f, g)
    return result


def squarefree_int(f: IntPoly) -> list[tuple[int, IntPoly]]:
    """Yun decomposition of a primitive integer polynomial.

    Returns [(multiplicity, factor)] with squarefree, pairwise coprime,
    primitive factors; multiplicities are distinct and ascending.
    """
    if _deg(f) < 1:
        return []
    fp = _derivative(f)
    g = gcd_int_poly(f, fp)
    out: list[tuple[int, IntPoly]] = []
    if _deg(g) == 0:
        return [(1, _primitive(f))]
    c = _divexact(f, g)
    d = [x - y for x, y in _pad(_divexact(fp, g), _derivative(c))]
    _trim(d)
    i = 1
    while _deg(c) > 0:
        a = gcd_int_poly(c, d)
        if _deg(a) > 0:
            out.append((i, a))
        c = _divexact(c, a) if _deg(a) > 0 else c
        d = _divexact(d, a) if _deg(a) > 0 else d
        d = [x - y for x, y in _pad(d, _derivative(c))]
        _trim(d)
        i += 1
    return out


def _pad(a: IntPoly, b: IntPoly) -> Iterator[tuple[int, int]]:
    n = max(len(a), len(b))
    for i in range(n):
        yield (a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)


# ----------------------------------------------------------------------
# Rational dense polynomials
# ----------------------------------------------------------------------


class UniPoly:
    """Immutable dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int | Fraction]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls([])

    @classmethod
    def from_multipoly(cls, p: MultiPoly) -> "UniPoly":
        if len(p.variables) != 1:
            raise ValueError(f"expected one variable, got {p.variables}")
        if p.is_zero():
            return cls([])
        top = max(e[0] for e in p.terms)
        cs = [Fraction(0)] * (top + 1)
        for e, c in p.terms.items():
            cs[e[0]] = c
        return cls(cs)

    def to_multipoly(self, var: str = "x") -> MultiPoly:
        return MultiPoly((var,), {(i,): c for i, c in enumerate(self.coeffs)})

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        return UniPoly([a + b for a, b in _pad(list(self.coeffs), list(other.coeffs))])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return UniPoly([a - b for a, b in _pad(list(self.coeffs), list(other.coeffs))])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other: "UniPoly | int | Fraction") -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ca in enumerate(self.coeffs):
            if ca:
                for j, cb in enumerate(other.coeffs):
                    out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dd = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(0, len(rem) - dd)
        while len(rem) - 1 >= dd and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dd:
                break
            q = rem[-1] / lead
            k = len(rem) - 1 - dd
            quot[k] = q
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= q * c
            rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, t: int | Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return UniPoly([c / lead for c in self.coeffs])

    def primitive_int(self) -> IntPoly:
        """Integer coefficient list after clearing denominators and content."""
        if not self.coeffs:
            return []
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // int_gcd(den, c.denominator)
        return _primitive([int(c * den) for c in self.coeffs])

    def __str__(self) -> str:
        return str(self.to_multipoly("t"))

    def __repr__(self) -> str:
        return f"UniPoly({self!s})"


def gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd over the rationals (zero if both inputs are zero)."""
    if f.is_zero() and g.is_zero():
        return UniPoly([])
    h = gcd_int_poly(f.primitive_int(), g.primitive_int())
    return UniPoly(h).monic()


def squarefree_decompose(f: UniPoly) -> list[tuple[int, UniPoly]]:
    """Write f = unit * prod g_i^i with squarefree, pairwise coprime g_i.

    The factors are primitive with positive leading integer coefficients;
    the rational unit is whatever ratio remains.  Raises on zero input.
    """
    if f.is_zero():
        raise ZeroPolynomialError("cannot decompose the zero polynomial")
    return [(i, UniPoly(p)) for i, p in squarefree_int(f.primitive_int())]
