"""Unit quaternions as elements of SU(2), and the 2-fold cover to SO(3).

Two exact element types share one small interface (``*``, ``inverse``,
unary minus, ``one``, ``projective``, ``sort_key``) so the finite-group code
can treat them alike:

* :class:`UnitQuat` has coordinates in Q(sqrt2, sqrt5). This holds every
  element of the binary tetrahedral, octahedral and icosahedral groups.
* :class:`PinQuat` is ``exp(2*pi*i*t) * j**s`` with ``t`` a rational number
  of turns. It holds every cyclic and dicyclic subgroup exactly, including
  the ones whose coordinates need sqrt3, cos(pi/7), ...
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactfield import ONE, SQRT2, ZERO, FieldElement, parse_field_element

__all__ = [
    "UnitQuat",
    "PinQuat",
    "RotationMatrix",
    "q_order",
    "q_to_so3",
    "parse_quat",
]


def _fe(x) -> FieldElement:
    return x if isinstance(x, FieldElement) else FieldElement(x)


class UnitQuat:
    """``a + b*i + c*j + d*k`` with ``a^2 + b^2 + c^2 + d^2 = 1`` exactly."""

    __slots__ = ("a", "b", "c", "d", "_hash")

    def __init__(self, a, b=0, c=0, d=0, *, check: bool = True):
        self.a, self.b, self.c, self.d = _fe(a), _fe(b), _fe(c), _fe(d)
        self._hash = None
        if check and self.norm2() != ONE:
            raise ValueError(f"not a unit quaternion: {self}")

    @classmethod
    def one(cls) -> "UnitQuat":
        return cls(ONE, ZERO, ZERO, ZERO, check=False)

    @property
    def coords(self):
        return (self.a, self.b, self.c, self.d)

    def norm2(self) -> FieldElement:
        a, b, c, d = self.coords
        return a * a + b * b + c * c + d * d

    def __mul__(self, other):
        if not isinstance(other, UnitQuat):
            return NotImplemented
        a1, b1, c1, d1 = self.coords
        a2, b2, c2, d2 = other.coords
        return UnitQuat(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            check=False,
        )

    def inverse(self) -> "UnitQuat":
        return UnitQuat(self.a, -self.b, -self.c, -self.d, check=False)

    def __neg__(self):
        return UnitQuat(-self.a, -self.b, -self.c, -self.d, check=False)

    def __pow__(self, exponent: int):
        base = self if exponent >= 0 else self.inverse()
        result = UnitQuat.one()
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def is_one(self) -> bool:
        return self.a == ONE

    def sort_key(self):
        return tuple(x for comp in self.coords for x in comp.coords)

    def projective(self) -> "UnitQuat":
        """Canonical representative of ``{q, -q}``: first nonzero coordinate positive."""
        for x in self.sort_key():
            if x:
                return self if x > 0 else -self
        raise AssertionError("zero quaternion")

    def __eq__(self, other):
        if not isinstance(other, UnitQuat):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coords)
        return self._hash

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.coords) + ")"

    def __repr__(self):
        return f"UnitQuat{self}"


class PinQuat:
    """Element ``exp(2*pi*i*turns) * j**flip`` of Pin(2), the normalizer of the circle."""

    __slots__ = ("turns", "flip")

    def __init__(self, turns, flip: int = 0):
        self.turns = Fraction(turns) % 1
        self.flip = 1 if flip else 0

    @classmethod
    def one(cls) -> "PinQuat":
        return cls(0)

    def __mul__(self, other):
        if not isinstance(other, PinQuat):
            return NotImplemented
        # j z = conj(z) j and j^2 = -1
        if not self.flip:
            return PinQuat(self.turns + other.turns, other.flip)
        if not other.flip:
            return PinQuat(self.turns - other.turns, 1)
        return PinQuat(self.turns - other.turns + Fraction(1, 2), 0)

    def inverse(self) -> "PinQuat":
        if self.flip:
            return PinQuat(self.turns + Fraction(1, 2), 1)
        return PinQuat(-self.turns)

    def __neg__(self):
        return PinQuat(self.turns + Fraction(1, 2), self.flip)

    def __pow__(self, exponent: int):
        base = self if exponent >= 0 else self.inverse()
        result = PinQuat.one()
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def is_one(self) -> bool:
        return not self.flip and self.turns == 0

    def sort_key(self):
        return (self.flip, self.turns)

    def projective(self) -> "PinQuat":
        return self if self.turns < Fraction(1, 2) else -self

    def to_unit_quat(self) -> UnitQuat:
        """Field coordinates; only defined when ``turns`` has denominator dividing 8."""
        cs = _COS_SIN.get(self.turns)
        if cs is None:
            raise ValueError(f"exp(2 pi i {self.turns}) is not expressible over Q(sqrt2, sqrt5)")
        cos, sin = cs
        if self.flip:
            return UnitQuat(ZERO, ZERO, cos, sin, check=False)
        return UnitQuat(cos, sin, ZERO, ZERO, check=False)

    def __eq__(self, other):
        if not isinstance(other, PinQuat):
            return NotImplemented
        return self.turns == other.turns and self.flip == other.flip

    def __hash__(self):
        return hash((self.turns, self.flip))

    def __str__(self):
        base = f"exp(2pi i {self.turns})"
        return base + " j" if self.flip else base

    def __repr__(self):
        return f"PinQuat({self.turns!s}, flip={self.flip})"


_H = SQRT2 * Fraction(1, 2)
_COS_SIN = {
    Fraction(0): (ONE, ZERO),
    Fraction(1, 8): (_H, _H),
    Fraction(1, 4): (ZERO, ONE),
    Fraction(3, 8): (-_H, _H),
    Fraction(1, 2): (-ONE, ZERO),
    Fraction(5, 8): (-_H, -_H),
    Fraction(3, 4): (ZERO, -ONE),
    Fraction(7, 8): (_H, -_H),
}


def q_order(q, cap: int) -> int | None:
    """Least ``n <= cap`` with ``q**n == 1``; ``None`` stands for unbounded past the cap."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    power = q
    for n in range(1, cap + 1):
        if power.is_one():
            return n
        power = power * q
    return None


@dataclass(frozen=True)
class RotationMatrix:
    rows: tuple[tuple[FieldElement, ...], ...]

    @classmethod
    def identity(cls) -> "RotationMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(3)) for i in range(3)))

    def __matmul__(self, other: "RotationMatrix") -> "RotationMatrix":
        return RotationMatrix(tuple(
            tuple(sum((self.rows[i][k] * other.rows[k][j] for k in range(3)), ZERO) for j in range(3))
            for i in range(3)
        ))

    def transpose(self) -> "RotationMatrix":
        return RotationMatrix(tuple(tuple(self.rows[j][i] for j in range(3)) for i in range(3)))

    def det(self) -> FieldElement:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def is_rotation(self) -> bool:
        return self @ self.transpose() == RotationMatrix.identity() and self.det() == ONE


def q_to_so3(q) -> RotationMatrix:
    """Matrix of ``v -> q v q^-1`` on the imaginary quaternions, basis (i, j, k)."""
    if isinstance(q, PinQuat):
        q = q.to_unit_quat()
    a, b, c, d = q.coords
    two = FieldElement(2)
    return RotationMatrix((
        (a * a + b * b - c * c - d * d, two * (b * c - a * d), two * (b * d + a * c)),
        (two * (b * c + a * d), a * a - b * b + c * c - d * d, two * (c * d - a * b)),
        (two * (b * d - a * c), two * (c * d + a * b), a * a - b * b - c * c + d * d),
    ))


def parse_quat(text: str) -> UnitQuat:
    """Inverse of ``str(UnitQuat)``: ``"(a, b, c, d)"``."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"expected '(a, b, c, d)', got {text!r}")
    parts = s[1:-1].split(",")
    if len(parts) != 4:
        raise ValueError(f"expected four components, got {len(parts)}")
    return UnitQuat(*(parse_field_element(p) for p in parts))
