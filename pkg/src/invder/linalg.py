"""Exact linear algebra over the rationals.

Everything here is small and dense: the algebras this package handles live
in dimension six or less, so the solvers favour a canonical, reproducible
answer over asymptotic cleverness.  Reduced row echelon form always chooses
the leftmost available pivot, pivots are normalised to one, and kernel bases
enumerate free columns in ascending order with each free variable set to one
in turn.  Two runs on equal input produce bit-equal output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, SingularMatrixError
from .rational import ONE, ZERO, Q


@dataclass(frozen=True)
class Vector:
    """Immutable dense column of rationals."""

    entries: tuple[Fraction, ...]

    @staticmethod
    def of(values) -> "Vector":
        return Vector(tuple(Q(v) for v in values))

    @staticmethod
    def zero(n: int) -> "Vector":
        return Vector((ZERO,) * n)

    @staticmethod
    def unit(n: int, i: int) -> "Vector":
        if not 0 <= i < n:
            raise InputError(f"unit index {i} out of range for dimension {n}")
        return Vector(tuple(ONE if j == i else ZERO for j in range(n)))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __add__(self, other: "Vector") -> "Vector":
        self._check_len(other)
        return Vector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Vector") -> "Vector":
        self._check_len(other)
        return Vector(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Vector":
        return Vector(tuple(-a for a in self.entries))

    def scale(self, c) -> "Vector":
        c = Q(c)
        return Vector(tuple(c * a for a in self.entries))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def _check_len(self, other: "Vector") -> None:
        if len(self) != len(other):
            raise InputError(f"vector length mismatch: {len(self)} vs {len(other)}")


@dataclass(frozen=True)
class Matrix:
    """Immutable matrix, stored row major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InputError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise InputError("matrix entry count does not match shape")

    @staticmethod
    def from_rows(rows) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise InputError("matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise InputError("ragged matrix rows")
        return Matrix(len(rows), width, tuple(Q(v) for r in rows for v in r))

    @staticmethod
    def from_columns(cols) -> "Matrix":
        cols = [list(c) for c in cols]
        if not cols:
            raise InputError("matrix needs at least one column")
        height = len(cols[0])
        if any(len(c) != height for c in cols):
            raise InputError("ragged matrix columns")
        return Matrix(height, len(cols),
                      tuple(Q(cols[j][i]) for i in range(height) for j in range(len(cols))))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, tuple(ONE if i == j else ZERO
                                  for i in range(n) for j in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, (ZERO,) * (rows * cols))

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return Vector(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> Vector:
        return Vector(tuple(self.entry(i, j) for i in range(self.rows)))

    def row_lists(self) -> list[list[Fraction]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols])
                for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(self.rows, self.cols,
                      tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(self.rows, self.cols,
                      tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> "Matrix":
        c = Q(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.rows}x{self.cols} by "
                             f"{other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    a = self.entries[base + k]
                    if a:
                        acc += a * other.entries[k * other.cols + j]
                out.append(acc)
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Vector) -> Vector:
        if self.cols != len(v):
            raise InputError(f"cannot apply {self.rows}x{self.cols} to vector "
                             f"of length {len(v)}")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            acc = ZERO
            for k in range(self.cols):
                a = self.entries[base + k]
                if a:
                    acc += a * v[k]
            out.append(acc)
        return Vector(tuple(out))

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self.entry(i, j)
                            for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and the tuple of pivot columns."""
        m = self.row_lists()
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot_row = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = ONE / m[r][c]
            m[r] = [inv * v for v in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix.from_rows(m), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[Vector]:
        """Canonical null space basis: one vector per free column, ascending."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for f in free:
            v = [ZERO] * self.cols
            v[f] = ONE
            for r, p in enumerate(pivots):
                v[p] = -reduced.entry(r, f)
            basis.append(Vector(tuple(v)))
        return basis

    def det(self) -> Fraction:
        if not self.is_square:
            raise InputError("determinant of a non-square matrix")
        m = self.row_lists()
        n = self.rows
        sign = ONE
        result = ONE
        for c in range(n):
            pivot_row = next((i for i in range(c, n) if m[i][c] != 0), None)
            if pivot_row is None:
                return ZERO
            if pivot_row != c:
                m[c], m[pivot_row] = m[pivot_row], m[c]
                sign = -sign
            result *= m[c][c]
            inv = ONE / m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return sign * result

    def invert(self) -> "Matrix":
        """Inverse matrix; raises SingularMatrixError when det = 0."""
        if not self.is_square:
            raise InputError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.entries[i * n:(i + 1) * n]) +
               [ONE if j == i else ZERO for j in range(n)] for i in range(n)]
        reduced, pivots = Matrix.from_rows(aug).rref()
        if list(pivots[:n]) != list(range(n)) or len(pivots) < n:
            raise SingularMatrixError("matrix is singular")
        return Matrix(n, n, tuple(reduced.entry(i, n + j)
                                  for i in range(n) for j in range(n)))

    def _check_shape(self, other: "Matrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("matrix shape mismatch")


@dataclass(frozen=True)
class SolutionSet:
    """Solutions of A x = b: one particular solution plus the kernel basis."""

    particular: Vector
    kernel: tuple[Vector, ...]


def solve(a: Matrix, b: Vector) -> SolutionSet | None:
    """Solve A x = b exactly; None when the system is inconsistent.

    The particular solution sets every free variable to zero, so the answer
    is canonical and reproducible.
    """
    if a.rows != len(b):
        raise InputError(f"system shape mismatch: {a.rows} rows vs {len(b)} rhs")
    aug = Matrix(a.rows, a.cols + 1,
                 tuple(v for i in range(a.rows)
                       for v in (*a.row(i).entries, b[i])))
    reduced, pivots = aug.rref()
    if pivots and pivots[-1] == a.cols:
        return None
    x = [ZERO] * a.cols
    for r, p in enumerate(pivots):
        x[p] = reduced.entry(r, a.cols)
    return SolutionSet(Vector(tuple(x)), tuple(a.kernel_basis()))
