"""Exact linear algebra over GF(3) = {0, 1, 2}, with 2 = -1.

Matrices are immutable values backed by numpy int8 arrays; every operation
returns a new matrix.  Gaussian elimination always takes the first nonzero
pivot in column order, so results are deterministic.

Column and pivot indices on the public surface are 1-based, matching the
usual coding-theory convention for coordinate sets.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError

_INV = (0, 1, 2)  # multiplicative inverses: 1*1 = 2*2 = 1


def _validated(data) -> np.ndarray:
    a = np.array(data, dtype=np.int8, copy=True)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got ndim={a.ndim}")
    if a.shape[1] < 1:
        raise DimensionError("matrix must have at least one column")
    if a.size and not ((a >= 0) & (a <= 2)).all():
        raise ValueError("matrix entries must be 0, 1 or 2")
    a.setflags(write=False)
    return a


class GF3Matrix:
    """Immutable dense matrix over GF(3).

    Zero-row matrices are allowed (they arise as empty nullspace bases);
    zero-column matrices are not.
    """

    __slots__ = ("_a",)

    def __init__(self, data):
        object.__setattr__(self, "_a", _validated(data))

    # -- construction helpers -------------------------------------------------

    @classmethod
    def identity(cls, k: int) -> "GF3Matrix":
        return cls(np.eye(k, dtype=np.int8))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "GF3Matrix":
        return cls(np.zeros((rows, cols), dtype=np.int8))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "GF3Matrix":
        return cls(list(rows))

    @classmethod
    def _wrap(cls, a: np.ndarray) -> "GF3Matrix":
        """Wrap a trusted int8 array without copying (internal use)."""
        m = object.__new__(cls)
        a = np.ascontiguousarray(a, dtype=np.int8)
        a.setflags(write=False)
        object.__setattr__(m, "_a", a)
        return m

    # -- views ----------------------------------------------------------------

    @property
    def array(self) -> np.ndarray:
        """Read-only numpy view of the entries."""
        return self._a

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    def row(self, i: int) -> tuple[int, ...]:
        """Row ``i`` (1-based) as a tuple of ints."""
        if not 1 <= i <= self.rows:
            raise IndexError(f"row {i} out of range 1..{self.rows}")
        return tuple(int(x) for x in self._a[i - 1])

    def tolist(self) -> list[list[int]]:
        return self._a.astype(int).tolist()

    def transpose(self) -> "GF3Matrix":
        return GF3Matrix._wrap(self._a.T.copy())

    @property
    def t(self) -> "GF3Matrix":
        return self.transpose()

    # -- arithmetic -----------------------------------------------------------

    def __matmul__(self, other: "GF3Matrix") -> "GF3Matrix":
        return mat_mul(self, other)

    def __add__(self, other: "GF3Matrix") -> "GF3Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} + {other.shape}")
        return GF3Matrix._wrap((self._a + other._a) % 3)

    def __neg__(self) -> "GF3Matrix":
        return GF3Matrix._wrap((-self._a.astype(np.int16)) % 3)

    def __sub__(self, other: "GF3Matrix") -> "GF3Matrix":
        return self + (-other)

    def scale(self, factor: int) -> "GF3Matrix":
        return GF3Matrix._wrap((self._a.astype(np.int16) * (factor % 3)) % 3)

    # -- value semantics --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, GF3Matrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._a, other._a)

    def __hash__(self) -> int:
        return hash((self.shape, self._a.tobytes()))

    def __repr__(self) -> str:
        return f"GF3Matrix({self.tolist()!r})"

    def __str__(self) -> str:
        return "\n".join("".join(str(int(x)) for x in row) for row in self._a)


def identity(k: int) -> GF3Matrix:
    return GF3Matrix.identity(k)


def hstack(blocks: Sequence[GF3Matrix]) -> GF3Matrix:
    """Horizontal concatenation; all blocks must share the row count."""
    if not blocks:
        raise DimensionError("need at least one block")
    r = blocks[0].rows
    if any(b.rows != r for b in blocks):
        raise DimensionError("row counts differ across blocks")
    return GF3Matrix._wrap(np.hstack([b.array for b in blocks]))


def mat_mul(a: GF3Matrix, b: GF3Matrix) -> GF3Matrix:
    """Matrix product over GF(3)."""
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    prod = (a.array.astype(np.int32) @ b.array.astype(np.int32)) % 3
    return GF3Matrix._wrap(prod.astype(np.int8))


def _rref_array(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of an int array over GF(3); 0-based pivots."""
    R = a.astype(np.int16).copy() % 3
    m, n = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        if R[r, c] == 2:
            R[r] = (R[r] * 2) % 3
        other = np.flatnonzero(R[:, c])
        other = other[other != r]
        if other.size:
            R[other] = (R[other] - np.outer(R[other, c], R[r])) % 3
        pivots.append(c)
        r += 1
    return R.astype(np.int8), pivots


def rref(m: GF3Matrix) -> tuple[GF3Matrix, list[int]]:
    """Reduced row echelon form and the 1-based pivot columns."""
    R, pivots = _rref_array(m.array)
    return GF3Matrix._wrap(R), [p + 1 for p in pivots]


def rank(m: GF3Matrix) -> int:
    """Row rank over GF(3)."""
    return _rank_array(m.array)


def _rank_array(a: np.ndarray) -> int:
    if a.shape[0] == 0:
        return 0
    return len(_rref_array(a)[1])


def _nullspace_array(a: np.ndarray) -> np.ndarray:
    """Rows form a basis of {x : a @ x^T = 0}; shape (cols - rank, cols)."""
    n = a.shape[1]
    R, pivots = _rref_array(a)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int8)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for r, p in enumerate(pivots):
            basis[row, p] = (-int(R[r, f])) % 3
    return basis


def nullspace_basis(m: GF3Matrix) -> GF3Matrix:
    """Basis of the right kernel of ``m``, one vector per row.

    The result has ``cols - rank`` rows and satisfies ``m @ result.t == 0``.
    """
    return GF3Matrix._wrap(_nullspace_array(m.array))
