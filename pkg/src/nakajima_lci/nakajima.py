"""Free-parameter matrices and the lattice polytopes they generate.

A free-parameter matrix for dimension ``d`` has ``d - 1`` rows, row ``i``
carrying ``i`` free entries; everything to the right of the diagonal is a
structural zero. Indices in the public API follow the mathematical
convention (rows and coordinates start at 1); points are plain tuples of
ints of length ``d``.
"""

from dataclasses import dataclass, field
from itertools import product

from .exact_linalg import IntMatrix, convex_weights, det


class StructureError(ValueError):
    """The matrix violates the shape rules of a free-parameter sequence."""


class BadShape(StructureError):
    def __init__(self, message, row=None):
        self.row = row
        super().__init__(message)


class ZeroRow(StructureError):
    def __init__(self, row):
        self.row = row
        super().__init__(f"row {row} is identically zero")


class NonPositiveLead(StructureError):
    def __init__(self, value):
        self.value = value
        super().__init__(f"leading entry m_1,1 = {value} must be >= 1")


@dataclass(frozen=True)
class FreeParamMatrix:
    """The free entries of m; row i (1-based) holds m_{i,1..i}."""

    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(rows))

    @classmethod
    def from_document(cls, doc):
        """Build from ``{"d": int, "rows": [[...], ...]}``; d must agree with the rows."""
        rows = doc["rows"]
        d = doc.get("d", len(rows) + 1)
        if not isinstance(d, int) or d != len(rows) + 1:
            raise BadShape(f"d = {d!r} needs d - 1 rows, got {len(rows)}")
        return cls.from_rows(rows)

    def to_document(self):
        return {"d": self.d, "rows": [list(r) for r in self.rows]}

    @property
    def d(self):
        return len(self.rows) + 1

    def entry(self, i, j):
        """m_{i,j} with structural zeros for j > i."""
        if not (1 <= i <= self.d - 1 and 1 <= j <= self.d):
            raise IndexError((i, j))
        return self.rows[i - 1][j - 1] if j <= i else 0

    def row(self, i):
        """The full covector m_i of length d."""
        r = self.rows[i - 1]
        return r + (0,) * (self.d - len(r))

    def full(self):
        return IntMatrix.from_rows([self.row(i) for i in range(1, self.d)])

    def truncate(self, length):
        """The matrix made of the first ``length`` rows (dimension length + 1)."""
        return FreeParamMatrix(self.rows[:length])

    def __str__(self):
        return str([list(r) for r in self.rows])


def validate_structure(m):
    if m.d < 2:
        raise BadShape("need at least one row (d >= 2)")
    for i, r in enumerate(m.rows, start=1):
        if len(r) != i:
            raise BadShape(f"row {i} has {len(r)} entries, expected {i}", row=i)
    for i, r in enumerate(m.rows, start=1):
        if not any(r):
            raise ZeroRow(i)
    if m.rows[0][0] < 1:
        raise NonPositiveLead(m.rows[0][0])


def _check_eps(m, eps):
    eps = tuple(int(e) for e in eps)
    if len(eps) != m.d - 1 or any(e not in (0, 1) for e in eps):
        raise ValueError(f"epsilon must be a 0/1 vector of length {m.d - 1}, got {eps}")
    return eps


def vertex_point(m, eps):
    """The point v(eps) = (1, v_2, ..., v_d) of the epsilon-indexed family."""
    eps = _check_eps(m, eps)
    v = [1] + [0] * (m.d - 1)
    for k in range(2, m.d + 1):
        if eps[k - 2]:
            row = m.rows[k - 2]
            # <m_{k-1}, v> only sees coordinates 1..k-1, all of which are final
            v[k - 1] = sum(row[l] * v[l] for l in range(k - 1))
    return tuple(v)


@dataclass
class VertexFamily:
    """Points v(prefix) of level ``level``; prefixes have length level - 1."""

    level: int
    points: dict
    halfspaces: tuple = ()
    _vertices: tuple = field(default=None, repr=False, compare=False)

    @property
    def distinct(self):
        return tuple(sorted(set(self.points.values())))

    @property
    def vertices(self):
        if self._vertices is None:
            self._vertices = extreme_points(self)
        return self._vertices


def vertex_family(m, level):
    if not 1 <= level <= m.d:
        raise ValueError(f"level must lie in 1..{m.d}")
    pad = (0,) * (m.d - level)
    points = {prefix: vertex_point(m, prefix + pad)
              for prefix in product((0, 1), repeat=level - 1)}
    halfspaces = tuple(h for pair in h_description(m) for h in pair)
    return VertexFamily(level, points, halfspaces)


class Admissibility:
    """Truthy iff admissible; ``witness`` names the first violation otherwise."""

    __slots__ = ("admissible", "witness")

    def __init__(self, admissible, witness=None):
        self.admissible = admissible
        self.witness = witness

    def __bool__(self):
        return self.admissible

    def __repr__(self):
        return f"Admissibility({self.admissible}, {self.witness})"


@dataclass(frozen=True)
class Violation:
    level: int      # i: the pairing <m_{i-1}, x> is checked on level i - 1
    eps: tuple      # full epsilon with eps_{i-1} = 1 and later bits 0
    value: int


def is_admissible(m):
    """Check <m_{i-1}, x> >= 0 on every point x of every level i - 1.

    The pairing is affine on each polytope and its vertices lie among the
    family points, so checking the finite family decides admissibility.
    """
    validate_structure(m)
    d = m.d
    for i in range(2, d + 1):
        row = m.row(i - 1)
        for prefix, x in vertex_family(m, i - 1).points.items():
            value = sum(a * b for a, b in zip(row, x))
            if value < 0:
                eps = prefix + (1,) + (0,) * (d - i)
                return Admissibility(False, Violation(i, eps, value))
    return Admissibility(True)


@dataclass(frozen=True)
class HalfSpace:
    """<coeffs, x> >= 0 on the hyperplane x_1 = 1 (so coeffs[0] is the offset)."""

    coeffs: tuple

    @property
    def offset(self):
        return self.coeffs[0]

    def holds(self, x):
        return sum(a * b for a, b in zip(self.coeffs, x)) >= 0

    def __str__(self):
        c = self.coeffs
        target = next(k for k in range(len(c) - 1, 0, -1) if c[k] != 0)
        name = f"x{target + 1}"
        if c[target] > 0 and not any(c[:target]):
            return f"{name} >= 0"
        terms = []
        for k in range(target):
            if c[k] == 0:
                continue
            mono = "" if k == 0 else f"x{k + 1}"
            coef = c[k]
            if mono and abs(coef) == 1:
                body = mono
            elif mono:
                body = f"{abs(coef)}*{mono}"
            else:
                body = str(abs(coef))
            sign = "-" if coef < 0 else "+"
            terms.append((sign, body))
        if not terms:
            rhs = "0"
        else:
            first_sign, first = terms[0]
            rhs = ("-" if first_sign == "-" else "") + first
            rhs += "".join(f" {s} {b}" for s, b in terms[1:])
        return f"{name} <= {rhs}"


def h_description(m):
    """The 2(d-1) inequalities 0 <= x_i <= <m_{i-1}, x'> for i = 2..d."""
    out = []
    d = m.d
    for i in range(2, d + 1):
        unit = tuple(int(k == i - 1) for k in range(d))
        upper = tuple(a - b for a, b in zip(m.row(i - 1), unit))
        out.append((HalfSpace(unit), HalfSpace(upper)))
    return out


def extreme_points(family):
    """Distinct family points that are not convex combinations of the others.

    The sum of the inequalities tight at p vanishes at p; when it is
    strictly positive on every other point it separates p and proves p
    extreme. Otherwise the question goes to the exact LP.
    """
    pts = family.distinct
    keep = []
    for p in pts:
        others = [q for q in pts if q != p]
        tight = [h.coeffs for h in family.halfspaces if _pair(h.coeffs, p) == 0]
        normal = [sum(col) for col in zip(*tight)] if tight else None
        if normal and all(_pair(normal, q) > 0 for q in others):
            keep.append(p)
        elif convex_weights(p, others) is None:
            keep.append(p)
    return tuple(keep)


def _pair(u, v):
    return sum(a * b for a, b in zip(u, v))


def is_basic_simplex(m):
    verts = vertex_family(m, m.d).vertices
    if len(verts) != m.d:
        return False
    return abs(det(IntMatrix.from_columns(verts))) == 1
