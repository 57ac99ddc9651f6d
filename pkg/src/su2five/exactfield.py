"""Exact arithmetic in Q(sqrt2, sqrt5).

An element is ``c0 + c1*sqrt2 + c2*sqrt5 + c3*sqrt10`` with rational ``c_i``.
Internally the four coordinates share one positive denominator and the
numerators are kept coprime to it, so equality and hashing are exact and
cheap. Coordinates are exposed as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

__all__ = ["FieldElement", "parse_field_element", "ZERO", "ONE", "SQRT2", "SQRT5", "SQRT10", "PHI"]

_RADICALS = ("", "r2", "r5", "r10")

# product of basis vectors e_i * e_j = coeff * e_k, basis (1, r2, r5, r10)
_MUL_TABLE = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 1): (2, 0), (1, 2): (1, 3), (1, 3): (2, 2),
    (2, 2): (5, 0), (2, 3): (5, 1),
    (3, 3): (10, 0),
}
for (_i, _j), _v in list(_MUL_TABLE.items()):
    _MUL_TABLE[(_j, _i)] = _v


def _normalize(nums, den):
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        nums = tuple(-x for x in nums)
        den = -den
    g = gcd(den, *nums)
    if g > 1:
        nums = tuple(x // g for x in nums)
        den //= g
    return tuple(nums), den


class FieldElement:
    """Immutable element of the degree-4 field Q(sqrt2, sqrt5)."""

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        cs = [Fraction(c) for c in (c0, c1, c2, c3)]
        den = 1
        for c in cs:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = tuple(c.numerator * (den // c.denominator) for c in cs)
        self._set(*_normalize(nums, den))

    def _set(self, nums, den):
        self._n = nums
        self._d = den
        self._hash = None

    @classmethod
    def _raw(cls, nums, den):
        obj = object.__new__(cls)
        obj._set(*_normalize(nums, den))
        return obj

    @classmethod
    def coerce(cls, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to FieldElement")

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(x, self._d) for x in self._n)

    def sort_key(self):
        return self.coords

    def is_zero(self) -> bool:
        return not any(self._n)

    def is_rational(self) -> bool:
        return not any(self._n[1:])

    # arithmetic

    def __add__(self, other):
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return FieldElement._raw(tuple(a + b for a, b in zip(self._n, other._n)), d1)
        return FieldElement._raw(tuple(a * d2 + b * d1 for a, b in zip(self._n, other._n)), d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(FieldElement)
        obj._set(tuple(-x for x in self._n), self._d)
        return obj

    def __sub__(self, other):
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return FieldElement.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldElement(other)
        elif not isinstance(other, FieldElement):
            return NotImplemented
        a, b = self._n, other._n
        out = [0, 0, 0, 0]
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    c, k = _MUL_TABLE[(i, j)]
                    out[k] += c * x * y
        return FieldElement._raw(tuple(out), self._d * other._d)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse, from the 4x4 system ``self * x = 1``."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(sqrt2, sqrt5)")
        c = self.coords
        # column j holds self * e_j in coordinates
        mat = [[Fraction(0)] * 4 for _ in range(4)]
        for i in range(4):
            for j in range(4):
                coeff, k = _MUL_TABLE[(i, j)]
                mat[k][j] += coeff * c[i]
        rhs = [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
        return FieldElement(*_solve(mat, rhs))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldElement(other)
        elif not isinstance(other, FieldElement):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FieldElement.coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(exponent)):
            result = result * base
        return result

    # comparison and hashing

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldElement(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self._d == other._d and self._n == other._n

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._d))
        return self._hash

    def __float__(self):
        # debugging aid only
        r2, r5 = 2 ** 0.5, 5 ** 0.5
        c = self.coords
        return float(c[0]) + float(c[1]) * r2 + float(c[2]) * r5 + float(c[3]) * r2 * r5

    def __str__(self):
        parts = []
        for coeff, rad in zip(self.coords, _RADICALS):
            parts.append(str(coeff) if not rad else f"{coeff}*{rad}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FieldElement({str(self)!r})"


def _solve(mat, rhs):
    n = len(rhs)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


_TERM = re.compile(r"^([+-]*)(\d+(?:/\d+)?)?(?:\*?(r2|r5|r10))?$")


def parse_field_element(text: str) -> FieldElement:
    """Parse ``"c0 + c1*r2 + c2*r5 + c3*r10"``; terms may be omitted or reordered."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty field element")
    coeffs = [Fraction(0)] * 4
    terms = re.split(r"(?<![+\-])(?=[+\-])", s)
    if terms[0] == "":
        terms = terms[1:]  # leading sign
    for term in terms:
        m = _TERM.match(term)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"bad term {term!r} in {text!r}")
        sign = -1 if m.group(1).count("-") % 2 else 1
        value = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        coeffs[_RADICALS.index(m.group(3) or "")] += sign * value
    return FieldElement(*coeffs)


ZERO = FieldElement(0)
ONE = FieldElement(1)
SQRT2 = FieldElement(0, 1)
SQRT5 = FieldElement(0, 0, 1)
SQRT10 = FieldElement(0, 0, 0, 1)
PHI = FieldElement(Fraction(1, 2), 0, Fraction(1, 2))
