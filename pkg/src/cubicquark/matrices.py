"""Small dense square matrices over an exact or a floating-point backend.

Exact matrices hold :class:`CycloScalar` entries in a numpy object array;
float matrices hold ``complex128``.  Both expose the same operations and
refuse to mix with each other.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import BackendMismatchError, DomainError, SingularMatrixError
from .scalars import ONE, ZERO, CycloScalar

EXACT = "exact"
FLOAT = "float"


def _to_exact_array(rows) -> np.ndarray:
    rows = [list(r) for r in rows]
    n = len(rows)
    arr = np.empty((n, len(rows[0]) if n else 0), dtype=object)
    for a, row in enumerate(rows):
        for b, v in enumerate(row):
            arr[a, b] = CycloScalar.coerce(v)
    return arr


class GroupMatrix:
    __slots__ = ("data", "backend")

    def __init__(self, data, backend: str = EXACT):
        if backend == EXACT:
            arr = data if isinstance(data, np.ndarray) and data.dtype == object else _to_exact_array(data)
        elif backend == FLOAT:
            arr = np.array(data, dtype=np.complex128)
            if not np.all(np.isfinite(arr)):
                raise DomainError("non-finite entry in float matrix")
        else:
            raise DomainError(f"unknown backend {backend!r}")
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DomainError(f"expected a square matrix, got shape {arr.shape}")
        self.data = arr
        self.backend = backend

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, n: int, backend: str = EXACT) -> "GroupMatrix":
        return cls.diag([1] * n, backend)

    @classmethod
    def zeros(cls, n: int, backend: str = EXACT) -> "GroupMatrix":
        if backend == FLOAT:
            return cls(np.zeros((n, n)), FLOAT)
        return cls([[ZERO] * n for _ in range(n)])

    @classmethod
    def diag(cls, values: Sequence, backend: str = EXACT) -> "GroupMatrix":
        n = len(values)
        if backend == FLOAT:
            return cls(np.diag(np.array([complex(v) for v in values])), FLOAT)
        return cls([[values[a] if a == b else ZERO for b in range(n)] for a in range(n)])

    # -- basic structure --------------------------------------------------

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    @property
    def exact(self) -> bool:
        return self.backend == EXACT

    def __getitem__(self, key):
        return self.data[key]

    def _same(self, other: "GroupMatrix") -> None:
        if not isinstance(other, GroupMatrix):
            raise TypeError("expected GroupMatrix")
        if other.backend != self.backend:
            raise BackendMismatchError(f"cannot combine {self.backend} and {other.backend} matrices")
        if other.dim != self.dim:
            raise DomainError("dimension mismatch")

    def _wrap(self, arr) -> "GroupMatrix":
        out = GroupMatrix.__new__(GroupMatrix)
        out.data = arr
        out.backend = self.backend
        return out

    def __matmul__(self, other):
        self._same(other)
        return self._wrap(self.data @ other.data)

    def __add__(self, other):
        self._same(other)
        return self._wrap(self.data + other.data)

    def __sub__(self, other):
        self._same(other)
        return self._wrap(self.data - other.data)

    def __neg__(self):
        return self._wrap(-self.data)

    def scale(self, c) -> "GroupMatrix":
        if self.exact:
            c = CycloScalar.coerce(c)
            return self._wrap(np.vectorize(lambda v: c * v, otypes=[object])(self.data))
        return self._wrap(self.data * complex(c))

    def __mul__(self, c):
        if isinstance(c, GroupMatrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    __rmul__ = __mul__

    @property
    def T(self) -> "GroupMatrix":
        return self._wrap(self.data.T.copy())

    def conj(self) -> "GroupMatrix":
        if self.exact:
            return self._wrap(np.vectorize(CycloScalar.conj, otypes=[object])(self.data))
        return self._wrap(self.data.conj())

    @property
    def H(self) -> "GroupMatrix":
        return self.conj().T

    def trace(self):
        return sum((self.data[a, a] for a in range(self.dim)), ZERO if self.exact else 0j)

    def kron(self, other: "GroupMatrix") -> "GroupMatrix":
        if other.backend != self.backend:
            raise BackendMismatchError("cannot combine exact and float matrices")
        return self._wrap(np.kron(self.data, other.data))

    def to_float(self) -> "GroupMatrix":
        if not self.exact:
            return self
        return GroupMatrix(np.vectorize(CycloScalar.to_float, otypes=[complex])(self.data), FLOAT)

    def __eq__(self, other):
        if not isinstance(other, GroupMatrix):
            return NotImplemented
        if other.backend != self.backend or other.dim != self.dim:
            return False
        if self.exact:
            return all(a == b for a, b in zip(self.data.flat, other.data.flat))
        return bool(np.array_equal(self.data, other.data))

    __hash__ = None

    def max_abs(self) -> float:
        """Max-norm of the entries."""
        if self.exact:
            return max((abs(v) for v in self.data.flat), default=0.0)
        return float(np.max(np.abs(self.data))) if self.data.size else 0.0

    def distance(self, other: "GroupMatrix") -> float:
        return (self - other).max_abs()

    def is_zero(self) -> bool:
        if self.exact:
            return all(v.is_zero() for v in self.data.flat)
        return not np.any(self.data)

    def is_real(self, tol: float = 0.0) -> bool:
        if self.exact:
            return all(v.is_real() for v in self.data.flat)
        return float(np.max(np.abs(self.data.imag), initial=0.0)) <= tol

    def tolist(self) -> list:
        return self.data.tolist()

    def __repr__(self):
        if self.exact:
            rows = ["[" + ", ".join(str(v) for v in row) + "]" for row in self.data]
        else:
            rows = [np.array2string(row, precision=6) for row in self.data]
        return f"GroupMatrix({self.backend}, [" + ", ".join(rows) + "])"

    # -- linear algebra ---------------------------------------------------

    def det(self):
        if not self.exact:
            return complex(np.linalg.det(self.data))
        m = self.data
        n = self.dim
        if n == 1:
            return m[0, 0]
        if n == 2:
            return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if n == 3:
            return (
                m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
                - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
                + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
            )
        a = [list(row) for row in m]
        det = ONE
        for col in range(n):
            piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
            if piv is None:
                return ZERO
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            det = det * a[col][col]
            inv = a[col][col].inverse()
            for r in range(col + 1, n):
                f = a[r][col] * inv
                if not f.is_zero():
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return det

    def solve(self, rhs):
        """Solve ``self @ X = rhs`` where rhs is a matrix (as nested rows) or vector."""
        return solve(self, rhs)

    def inverse(self) -> "GroupMatrix":
        n = self.dim
        ident = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)] if self.exact else np.eye(n)
        return self._wrap(np.asarray(solve(self, ident), dtype=object if self.exact else np.complex128))


def solve(m: GroupMatrix, rhs):
    """Gaussian elimination; exact pivoting on nonzero entries, float via LAPACK."""
    if not m.exact:
        try:
            cond = np.linalg.cond(m.data)
        except np.linalg.LinAlgError as exc:
            raise SingularMatrixError(str(exc)) from exc
        if not np.isfinite(cond) or cond > 1e14:
            raise SingularMatrixError("matrix is numerically singular")
        return np.linalg.solve(m.data, np.asarray(rhs, dtype=np.complex128))
    n = m.dim
    b = np.asarray(rhs, dtype=object)
    vector = b.ndim == 1
    if vector:
        b = b.reshape(n, 1)
    a = [list(m.data[r]) + [CycloScalar.coerce(v) for v in b[r]] for r in range(n)]
    width = len(a[0])
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            raise SingularMatrixError("singular exact matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = np.empty((n, width - n), dtype=object)
    for r in range(n):
        for c in range(width - n):
            out[r, c] = a[r][n + c]
    return out[:, 0] if vector else out


def as_backend(x, backend: str):
    """Convert a scalar to the representation used by ``backend``."""
    if backend == FLOAT:
        return complex(x)
    return CycloScalar.coerce(x)
