"""
Quaternion Module

Exact quaternions w + x*i + y*j + z*k over the rationals, with the
Hamilton product and the 2x2 complex model used for float checks.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from .complex_rational import _as_fraction


@dataclass(frozen=True)
class Quaternion:
    w: Fraction
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)
    z: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("w", "x", "y", "z"):
            object.__setattr__(self, name, _as_fraction(getattr(self, name)))

    @classmethod
    def unit(cls, name: str) -> "Quaternion":
        """Return one of the units '1', 'i', 'j', 'k'."""
        units = {
            "1": cls(1),
            "i": cls(0, 1),
            "j": cls(0, 0, 1),
            "k": cls(0, 0, 0, 1),
        }
        return units[name]

    @staticmethod
    def _coerce(other):
        if isinstance(other, Quaternion):
            return other
        if isinstance(other, (int, Rational)):
            return Quaternion(other)
        return None

    def components(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quaternion(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quaternion(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return hamilton_product(self, o)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return hamilton_product(o, self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> Fraction:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self) -> "Quaternion":
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("Quaternion division by zero")
        c = self.conjugate()
        return Quaternion(c.w / n, c.x / n, c.y / n, c.z / n)

    def is_real(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    def __bool__(self):
        return any(self.components())

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.components() == o.components()

    def __hash__(self):
        if self.is_real():
            return hash(self.w)
        return hash(self.components())

    def __abs__(self):
        return float(self.norm2()) ** 0.5

    def complex_pair(self) -> tuple:
        """q = alpha + beta*j with alpha, beta complex."""
        return complex(float(self.w), float(self.x)), complex(float(self.y), float(self.z))

    def complex_matrix(self) -> np.ndarray:
        """The 2x2 complex matrix [[alpha, beta], [-conj(beta), conj(alpha)]]."""
        a, b = self.complex_pair()
        return np.array([[a, b], [-b.conjugate(), a.conjugate()]], dtype=np.complex128)

    def __str__(self):
        parts = []
        for value, unit in zip(self.components(), ("", "i", "j", "k")):
            if value == 0:
                continue
            text = str(abs(value)) if (abs(value) != 1 or not unit) else ""
            parts.append(("-" if value < 0 else "+", text + unit))
        if not parts:
            return "0"
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, term in parts[1:]:
            out += sign + term
        return out


def hamilton_product(a: Quaternion, b: Quaternion) -> Quaternion:
    return Quaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )
