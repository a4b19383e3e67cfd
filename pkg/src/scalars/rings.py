"""
Rings Module

Coefficient rings and the scalar helpers every other package relies on:
coercion into a ring, conjugation, zero tests, magnitude and JSON codecs.
"""

from enum import Enum
from fractions import Fraction
from numbers import Rational

import numpy as np

from .complex_rational import ComplexRational
from .quaternion import Quaternion
from ..errors import RingMismatchError, ScalarError


class Ring(str, Enum):
    RATIONAL = "rational"
    COMPLEX_RATIONAL = "complex_rational"
    QUATERNION = "quaternion"
    FLOAT = "float"
    COMPLEX_FLOAT = "complex_float"

    @property
    def is_exact(self) -> bool:
        return self in (Ring.RATIONAL, Ring.COMPLEX_RATIONAL, Ring.QUATERNION)

    @property
    def is_complex(self) -> bool:
        return self in (Ring.COMPLEX_RATIONAL, Ring.COMPLEX_FLOAT)

    @property
    def numpy_dtype(self):
        if self == Ring.FLOAT:
            return np.float64
        if self == Ring.COMPLEX_FLOAT:
            return np.complex128
        return object

    def to_float(self) -> "Ring":
        """The float ring matching this ring (quaternions go to their complex model)."""
        if self in (Ring.RATIONAL, Ring.FLOAT):
            return Ring.FLOAT
        return Ring.COMPLEX_FLOAT

    def complexified(self) -> "Ring":
        if self == Ring.RATIONAL:
            return Ring.COMPLEX_RATIONAL
        if self == Ring.FLOAT:
            return Ring.COMPLEX_FLOAT
        if self == Ring.QUATERNION:
            raise RingMismatchError("quaternions have no complexification here")
        return self


# Which ring is the smallest one containing both
_JOIN = {
    frozenset([Ring.RATIONAL, Ring.COMPLEX_RATIONAL]): Ring.COMPLEX_RATIONAL,
    frozenset([Ring.RATIONAL, Ring.QUATERNION]): Ring.QUATERNION,
    frozenset([Ring.RATIONAL, Ring.FLOAT]): Ring.FLOAT,
    frozenset([Ring.RATIONAL, Ring.COMPLEX_FLOAT]): Ring.COMPLEX_FLOAT,
    frozenset([Ring.COMPLEX_RATIONAL, Ring.FLOAT]): Ring.COMPLEX_FLOAT,
    frozenset([Ring.COMPLEX_RATIONAL, Ring.COMPLEX_FLOAT]): Ring.COMPLEX_FLOAT,
    frozenset([Ring.FLOAT, Ring.COMPLEX_FLOAT]): Ring.COMPLEX_FLOAT,
}


def join_rings(a: Ring, b: Ring) -> Ring:
    if a == b:
        return a
    joined = _JOIN.get(frozenset([a, b]))
    if joined is None:
        raise RingMismatchError(f"no common ring for {a.value} and {b.value}")
    return joined


def ring_of(x) -> Ring:
    """The smallest ring a Python scalar belongs to."""
    if isinstance(x, Quaternion):
        return Ring.QUATERNION
    if isinstance(x, ComplexRational):
        return Ring.COMPLEX_RATIONAL
    if isinstance(x, bool):
        raise ScalarError("booleans are not scalars")
    if isinstance(x, (int, Rational)):
        return Ring.RATIONAL
    if isinstance(x, (float, np.floating)):
        return Ring.FLOAT
    if isinstance(x, (complex, np.complexfloating)):
        return Ring.COMPLEX_FLOAT
    raise ScalarError(f"unsupported scalar type {type(x).__name__}")


def zero(ring: Ring):
    return {
        Ring.RATIONAL: Fraction(0),
        Ring.COMPLEX_RATIONAL: ComplexRational(0),
        Ring.QUATERNION: Quaternion(0),
        Ring.FLOAT: 0.0,
        Ring.COMPLEX_FLOAT: 0j,
    }[ring]


def one(ring: Ring):
    return {
        Ring.RATIONAL: Fraction(1),
        Ring.COMPLEX_RATIONAL: ComplexRational(1),
        Ring.QUATERNION: Quaternion(1),
        Ring.FLOAT: 1.0,
        Ring.COMPLEX_FLOAT: 1 + 0j,
    }[ring]


def check_finite(x):
    if isinstance(x, (float, complex, np.floating, np.complexfloating)):
        if not np.isfinite(x):
            raise ScalarError(f"non-finite scalar {x!r}")
    return x


def coerce_scalar(x, ring: Ring):
    """Convert x into the given ring, refusing lossy conversions between exact rings."""
    source = ring_of(x)
    check_finite(x)
    if ring == Ring.RATIONAL:
        if source != Ring.RATIONAL:
            raise RingMismatchError(f"cannot place a {source.value} value in the rational ring")
        return Fraction(x)
    if ring == Ring.COMPLEX_RATIONAL:
        if source == Ring.RATIONAL:
            return ComplexRational(x)
        if source == Ring.COMPLEX_RATIONAL:
            return x
        raise RingMismatchError(f"cannot place a {source.value} value in the complex rational ring")
    if ring == Ring.QUATERNION:
        if source == Ring.RATIONAL:
            return Quaternion(x)
        if source == Ring.QUATERNION:
            return x
        raise RingMismatchError(f"cannot place a {source.value} value in the quaternion ring")
    if ring == Ring.FLOAT:
        if source in (Ring.RATIONAL, Ring.FLOAT):
            return float(x)
        raise RingMismatchError(f"cannot place a {source.value} value in the float ring")
    if source == Ring.QUATERNION:
        raise RingMismatchError("quaternions have no complex float image as scalars")
    return complex(x)


def conjugate(x):
    if isinstance(x, (ComplexRational, Quaternion)):
        return x.conjugate()
    if isinstance(x, (complex, np.complexfloating)):
        return complex(x).conjugate()
    return x


def real_part(x):
    if isinstance(x, ComplexRational):
        return x.re
    if isinstance(x, Quaternion):
        return x.w
    if isinstance(x, (complex, np.complexfloating)):
        return float(x.real)
    return x


def imag_part(x):
    if isinstance(x, ComplexRational):
        return x.im
    if isinstance(x, (complex, np.complexfloating)):
        return float(x.imag)
    if isinstance(x, Quaternion):
        raise RingMismatchError("quaternions have three imaginary parts")
    return zero(ring_of(x))


def inverse(x):
    """Multiplicative inverse within the scalar's own ring."""
    if isinstance(x, (ComplexRational, Quaternion)):
        return x.inverse()
    if isinstance(x, (int, Rational)):
        if x == 0:
            raise ZeroDivisionError("division by zero scalar")
        return 1 / Fraction(x)
    return 1 / x


def magnitude(x) -> float:
    return float(abs(x))


def is_zero(x, tol: float = 0.0) -> bool:
    if tol and not isinstance(x, (ComplexRational, Quaternion, Fraction, int)):
        return abs(x) <= tol
    return not x


def encode_scalar(x):
    """JSON form: 'num/den' for rationals, [re, im] for complex, [w, x, y, z] for quaternions."""
    if isinstance(x, Quaternion):
        return [str(c) for c in x.components()]
    if isinstance(x, ComplexRational):
        return [str(x.re), str(x.im)]
    if isinstance(x, (complex, np.complexfloating)):
        return [float(x.real), float(x.imag)]
    if isinstance(x, (float, np.floating)):
        return float(x)
    return str(Fraction(x))


def decode_scalar(obj, ring: Ring):
    try:
        if ring == Ring.RATIONAL:
            return Fraction(obj)
        if ring == Ring.COMPLEX_RATIONAL:
            if isinstance(obj, (list, tuple)):
                return ComplexRational(Fraction(obj[0]), Fraction(obj[1]))
            return ComplexRational(Fraction(obj))
        if ring == Ring.QUATERNION:
            if isinstance(obj, (list, tuple)):
                return Quaternion(*(Fraction(c) for c in obj))
            return Quaternion(Fraction(obj))
        if ring == Ring.FLOAT:
            return check_finite(float(obj))
        if isinstance(obj, (list, tuple)):
            return check_finite(complex(float(obj[0]), float(obj[1])))
        return check_finite(complex(float(obj)))
    except (ValueError, TypeError, IndexError, ZeroDivisionError) as e:
        raise ScalarError(f"cannot decode {obj!r} as {ring.value}: {e}") from e


def format_scalar(x) -> str:
    if isinstance(x, (float, np.floating)):
        return f"{float(x):.12g}"
    if isinstance(x, (complex, np.complexfloating)):
        return f"({x.real:.12g}{x.imag:+.12g}i)"
    return str(x)

