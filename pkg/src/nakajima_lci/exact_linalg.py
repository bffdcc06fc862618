"""Exact integer matrices, determinants and sign-pattern classifiers.

Everything here works on Python ints, so there is no overflow to worry
about. Matrices are small (at most a few dozen rows), which keeps the
plain-list implementation fast enough.
"""

from fractions import Fraction
from itertools import combinations


class DimensionError(ValueError):
    """Raised when matrix shapes do not fit the requested operation."""


class IntMatrix:
    """Immutable integer matrix stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(int(x) for x in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionError(
                f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns):
        return cls.from_rows(columns).transpose()

    @classmethod
    def identity(cls, n):
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, index):
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(index)
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def to_columns(self):
        return [list(self.column(j)) for j in range(self.cols)]

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         [x for j in range(self.cols) for x in self.column(j)])

    def submatrix(self, row_indices, col_indices):
        return IntMatrix(len(row_indices), len(col_indices),
                         [self[i, j] for i in row_indices for j in col_indices])

    def is_zero(self):
        return not any(self.entries)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"IntMatrix.from_rows({self.to_rows()!r})"


def det(M):
    """Determinant by fraction-free (Bareiss) elimination."""
    if M.rows != M.cols:
        raise DimensionError(f"determinant of non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return 1
    a = M.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def mat_mul(A, B):
    if A.cols != B.rows:
        raise DimensionError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    bcols = [B.column(j) for j in range(B.cols)]
    out = []
    for i in range(A.rows):
        r = A.row(i)
        out.extend(sum(x * y for x, y in zip(r, c)) for c in bcols)
    return IntMatrix(A.rows, B.cols, out)


def mat_vec(A, v):
    if A.cols != len(v):
        raise DimensionError(f"cannot apply {A.rows}x{A.cols} matrix to length-{len(v)} vector")
    return tuple(sum(x * y for x, y in zip(A.row(i), v)) for i in range(A.rows))


def is_mixed(M):
    """True iff every column has a strictly positive and a strictly negative entry."""
    if M.cols == 0:
        return False
    for j in range(M.cols):
        col = M.column(j)
        if not (any(x > 0 for x in col) and any(x < 0 for x in col)):
            return False
    return True


def is_dominating(M):
    """True iff no square submatrix of M is mixed.

    A rho x rho submatrix on columns C is mixed iff its row set hits both the
    positive and the negative support of every column in C. Since adding rows
    never destroys mixedness, it is enough to look for such a row set of size
    at most |C| among the rows that carry a nonzero entry of C.
    """
    pos = [frozenset(i for i, x in enumerate(M.column(j)) if x > 0) for j in range(M.cols)]
    neg = [frozenset(i for i, x in enumerate(M.column(j)) if x < 0) for j in range(M.cols)]
    # columns lacking one of the signs can never sit in a mixed submatrix
    usable = [j for j in range(M.cols) if pos[j] and neg[j]]
    limit = min(M.rows, M.cols)
    for rho in range(2, limit + 1):
        for cols in combinations(usable, rho):
            support = sorted(set().union(*(pos[j] | neg[j] for j in cols)))
            for size in range(2, rho + 1):
                for rows in combinations(support, size):
                    rs = set(rows)
                    if all(rs & pos[j] and rs & neg[j] for j in cols):
                        return False
    return True


def solve_rational(M, b):
    """Solve the square system M x = b exactly; None if M is singular."""
    n = M.rows
    if M.cols != n or len(b) != n:
        raise DimensionError("solve_rational needs a square system")
    a = [[Fraction(x) for x in M.row(i)] + [Fraction(b[i])] for i in range(n)]
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            return None
        a[k], a[piv] = a[piv], a[k]
        p = a[k][k]
        a[k] = [x / p for x in a[k]]
        for r in range(n):
            if r != k and a[r][k] != 0:
                f = a[r][k]
                a[r] = [x - f * y for x, y in zip(a[r], a[k])]
    return [a[i][n] for i in range(n)]


def adjugate(M):
    """Classical adjoint, so that M * adj(M) = det(M) * I (Cramer's rule)."""
    n = M.rows
    if M.cols != n:
        raise DimensionError("adjugate of non-square matrix")
    if n == 1:
        return IntMatrix(1, 1, [1])
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = M.submatrix([r for r in range(n) if r != i],
                                [c for c in range(n) if c != j])
            out[j][i] = (-1) ** (i + j) * det(minor)
    return IntMatrix.from_rows(out)


def convex_weights(p, points):
    """Exact nonnegative weights w with sum_i w_i points[i] == p, or None.

    Phase-one simplex over the rationals with Bland's rule, so it always
    terminates. Callers that need sum(w) == 1 include a row of ones (our
    points all live on x_1 = 1, which does this for free).
    """
    m = len(p)
    n = len(points)
    if n == 0:
        return None if any(p) else []
    # rows: equality constraints, made to have nonnegative right-hand side
    rows = []
    for i in range(m):
        coeffs = [Fraction(q[i]) for q in points]
        rhs = Fraction(p[i])
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
        rows.append(coeffs + [Fraction(int(r == i)) for r in range(m)] + [rhs])
    ncols = n + m
    basis = [n + i for i in range(m)]
    # objective: minimise the sum of artificials, i.e. reduced costs of -sum(rows)
    obj = [Fraction(0)] * (ncols + 1)
    for r in rows:
        for j in range(ncols + 1):
            obj[j] -= r[j]
    for j in range(n, ncols):
        obj[j] = Fraction(0)
    while True:
        entering = next((j for j in range(ncols) if obj[j] < 0), None)
        if entering is None:
            break
        best = None
        for i, r in enumerate(rows):
            if r[entering] > 0:
                ratio = r[-1] / r[entering]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # cannot happen in phase one (objective bounded below)
            raise ArithmeticError("unbounded phase-one problem")
        i = best[1]
        piv = rows[i][entering]
        rows[i] = [x / piv for x in rows[i]]
        for k, r in enumerate(rows):
            if k != i and r[entering] != 0:
                f = r[entering]
                rows[k] = [x - f * y for x, y in zip(r, rows[i])]
        f = obj[entering]
        obj = [x - f * y for x, y in zip(obj, rows[i])]
        basis[i] = entering
    if obj[-1] != 0:
        return None
    w = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            w[b] = rows[i][-1]
    return w
