"""
Matrix Module

Square matrices over the representation rings. Exact rings keep Python
scalars in numpy object arrays and multiply with a zero-skipping loop
that respects the order of quaternion factors; float rings use numpy.
"""

from typing import Optional, Sequence

import numpy as np

from ..errors import DimensionMismatchError, RingMismatchError, ScalarError
from ..scalars import (
    Ring,
    coerce_scalar,
    conjugate,
    decode_scalar,
    encode_scalar,
    format_scalar,
    is_zero,
    join_rings,
    one,
    real_part,
    ring_of,
    zero,
)


def _object_matrix(size: int, fill) -> np.ndarray:
    out = np.empty((size, size), dtype=object)
    for i in range(size):
        for j in range(size):
            out[i, j] = fill
    return out


class RepMatrix:
    """A size x size matrix whose entries lie in `ring`."""

    __slots__ = ("ring", "entries", "_support")

    def __init__(self, ring: Ring, entries: np.ndarray):
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DimensionMismatchError(f"expected a square matrix, got shape {entries.shape}")
        self.ring = ring
        self.entries = entries
        self._support = None

    # ------------------------------------------------------------------
    # Construction

    @classmethod
    def zeros(cls, size: int, ring: Ring) -> "RepMatrix":
        if ring.is_exact:
            return cls(ring, _object_matrix(size, zero(ring)))
        return cls(ring, np.zeros((size, size), dtype=ring.numpy_dtype))

    @classmethod
    def identity(cls, size: int, ring: Ring) -> "RepMatrix":
        out = cls.zeros(size, ring)
        for i in range(size):
            out.entries[i, i] = one(ring)
        return out

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ring: Optional[Ring] = None) -> "RepMatrix":
        size = len(rows)
        if any(len(row) != size for row in rows):
            raise DimensionMismatchError("rows do not form a square matrix")
        if ring is None:
            ring = Ring.RATIONAL
            for row in rows:
                for value in row:
                    ring = join_rings(ring, ring_of(value))
        out = cls.zeros(size, ring)
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                out.entries[i, j] = coerce_scalar(value, ring)
        return out

    @classmethod
    def diagonal(cls, values: Sequence, ring: Optional[Ring] = None) -> "RepMatrix":
        size = len(values)
        rows = [[values[i] if i == j else 0 for j in range(size)] for i in range(size)]
        return cls.from_rows(rows, ring)

    @classmethod
    def from_blocks(cls, a: "RepMatrix", b: "RepMatrix", c: "RepMatrix", d: "RepMatrix") -> "RepMatrix":
        """[[a, b], [c, d]] from four equally sized blocks."""
        for block in (b, c, d):
            a._check_operand(block)
        half = a.size
        out = cls.zeros(2 * half, a.ring)
        out.entries[:half, :half] = a.entries
        out.entries[:half, half:] = b.entries
        out.entries[half:, :half] = c.entries
        out.entries[half:, half:] = d.entries
        return out

    @classmethod
    def block_diagonal(cls, a: "RepMatrix", d: "RepMatrix") -> "RepMatrix":
        z = cls.zeros(a.size, a.ring)
        return cls.from_blocks(a, z, z, d)

    # ------------------------------------------------------------------
    # Shape and ring

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def _check_operand(self, other: "RepMatrix"):
        if other.size != self.size:
            raise DimensionMismatchError(f"sizes {self.size} and {other.size} differ")
        if other.ring != self.ring:
            raise RingMismatchError(f"matrices over {self.ring.value} and {other.ring.value}")

    def to_ring(self, ring: Ring) -> "RepMatrix":
        if ring == self.ring:
            return self
        out = RepMatrix.zeros(self.size, ring)
        for i in range(self.size):
            for j in range(self.size):
                out.entries[i, j] = coerce_scalar(self.entries[i, j], ring)
        return out

    def block(self, row: int, col: int) -> "RepMatrix":
        """One of the four half-size blocks, indexed 0 or 1."""
        if self.size % 2:
            raise DimensionMismatchError("odd-sized matrices have no half blocks")
        h = self.size // 2
        return RepMatrix(self.ring, self.entries[row * h:(row + 1) * h, col * h:(col + 1) * h].copy())

    # ------------------------------------------------------------------
    # Arithmetic

    def __add__(self, other: "RepMatrix") -> "RepMatrix":
        self._check_operand(other)
        return RepMatrix(self.ring, self.entries + other.entries)

    def __sub__(self, other: "RepMatrix") -> "RepMatrix":
        self._check_operand(other)
        return RepMatrix(self.ring, self.entries - other.entries)

    def __neg__(self) -> "RepMatrix":
        return self.scale(-1)

    def scale(self, c) -> "RepMatrix":
        """c * M with the scalar on the left."""
        if self.ring.is_exact:
            out = RepMatrix.zeros(self.size, self.ring)
            for i in range(self.size):
                for j in range(self.size):
                    out.entries[i, j] = c * self.entries[i, j]
            return out
        return RepMatrix(self.ring, c * self.entries)

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        self._check_operand(other)
        if not self.ring.is_exact:
            return RepMatrix(self.ring, self.entries @ other.entries)
        size = self.size
        out = RepMatrix.zeros(size, self.ring)
        other_rows = other.row_support()
        for i, row in enumerate(self.row_support()):
            acc = {}
            for k, x in row:
                for j, y in other_rows[k]:
                    term = x * y
                    acc[j] = acc[j] + term if j in acc else term
            for j, value in acc.items():
                out.entries[i, j] = value
        return out

    def row_support(self) -> list:
        """For each row, the list of (column, value) with value nonzero."""
        if self._support is None:
            self._support = [
                [(j, x) for j, x in enumerate(row) if not is_zero(x)]
                for row in self.entries
            ]
        return self._support

    def monomial_pattern(self) -> Optional[tuple]:
        """Column of the single nonzero entry of each row, or None if not monomial."""
        cols = []
        for row in self.row_support():
            if len(row) != 1:
                return None
            cols.append(row[0][0])
        if len(set(cols)) != len(cols):
            return None
        return tuple(cols)

    # ------------------------------------------------------------------
    # Adjoints

    def transpose(self) -> "RepMatrix":
        return RepMatrix(self.ring, self.entries.T.copy())

    def conjugate(self) -> "RepMatrix":
        if self.ring in (Ring.RATIONAL, Ring.FLOAT):
            return self
        if self.ring.is_exact:
            out = RepMatrix.zeros(self.size, self.ring)
            for i in range(self.size):
                for j in range(self.size):
                    out.entries[i, j] = conjugate(self.entries[i, j])
            return out
        return RepMatrix(self.ring, np.conj(self.entries))

    def conj_transpose(self) -> "RepMatrix":
        """Transpose with entrywise (complex or quaternion) conjugation."""
        return self.conjugate().transpose()

    # ------------------------------------------------------------------
    # Scalars derived from the matrix

    def trace(self):
        total = zero(self.ring)
        for i in range(self.size):
            total = total + self.entries[i, i]
        return total

    def real_trace(self):
        """Real part of the trace (the w component for quaternions)."""
        return real_part(self.trace())

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(is_zero(x, tol) for x in self.entries.flat)

    def scalar_multiple_of_identity(self):
        """The c with M = c*I, or None."""
        c = self.entries[0, 0]
        for i in range(self.size):
            for j in range(self.size):
                expected = c if i == j else zero(self.ring)
                if self.entries[i, j] != expected:
                    return None
        return c

    def is_block_diagonal(self) -> bool:
        if self.size % 2:
            return False
        return self.block(0, 1).is_zero() and self.block(1, 0).is_zero()

    # ------------------------------------------------------------------
    # Comparison and conversion

    def __eq__(self, other):
        if not isinstance(other, RepMatrix):
            return NotImplemented
        if other.size != self.size:
            return False
        return all(a == b for a, b in zip(self.entries.flat, other.entries.flat))

    __hash__ = None

    def is_close(self, other: "RepMatrix", tol: float) -> bool:
        a, b = self.to_numpy(), other.to_numpy()
        if a.shape != b.shape:
            return False
        return float(np.max(np.abs(a - b), initial=0.0)) <= tol

    def to_numpy(self) -> np.ndarray:
        """Float array; quaternion matrices become their 2N x 2N complex model."""
        if not self.ring.is_exact:
            return self.entries
        if self.ring == Ring.RATIONAL:
            return np.array([[float(x) for x in row] for row in self.entries], dtype=np.float64)
        if self.ring == Ring.COMPLEX_RATIONAL:
            return np.array([[complex(x) for x in row] for row in self.entries], dtype=np.complex128)
        size = self.size
        out = np.zeros((2 * size, 2 * size), dtype=np.complex128)
        for i in range(size):
            for j in range(size):
                out[2 * i:2 * i + 2, 2 * j:2 * j + 2] = self.entries[i, j].complex_matrix()
        return out

    def to_float(self) -> "RepMatrix":
        array = self.to_numpy()
        ring = Ring.FLOAT if array.dtype == np.float64 else Ring.COMPLEX_FLOAT
        return RepMatrix(ring, array)

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "ring": self.ring.value,
            "entries": [[encode_scalar(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "RepMatrix":
        ring = Ring(obj["ring"])
        rows = obj["entries"]
        if len(rows) != obj.get("size", len(rows)):
            raise ScalarError("matrix size does not match its entries")
        return cls.from_rows([[decode_scalar(x, ring) for x in row] for row in rows], ring)

    def __str__(self):
        cells = [[format_scalar(x) for x in row] for row in self.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)

    def __repr__(self):
        return f"RepMatrix({self.size}x{self.size}, {self.ring.value})"
