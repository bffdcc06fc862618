"""Dual-cone generators, their basic-cone subdivision and the Hilbert basis.

The generator list is positional: position k (1-based) names the ambient
variable z_k, so positions 1..d hold the unit covectors and positions
d+1..2d-1 hold m_i - e_{i+1}.
"""

from dataclasses import dataclass
from itertools import product

from .exact_linalg import IntMatrix, det, solve_rational


class DetNotUnit(ArithmeticError):
    def __init__(self, eps, value):
        self.eps = eps
        self.value = value
        super().__init__(f"basic cone for eps={eps} has determinant {value}")


def unit_covector(d, k):
    return tuple(int(j == k - 1) for j in range(d))


@dataclass(frozen=True)
class DualGenerators:
    d: int
    gens: tuple

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, position):
        """Covector at 1-based ``position``."""
        return self.gens[position - 1]

    def matrix(self):
        """The d x (2d-1) matrix whose columns are the generators."""
        return IntMatrix.from_columns(self.gens)


def dual_generators(m):
    d = m.d
    gens = [unit_covector(d, k) for k in range(1, d + 1)]
    for i in range(1, d):
        gens.append(tuple(a - b for a, b in zip(m.row(i), unit_covector(d, i + 1))))
    return DualGenerators(d, tuple(gens))


@dataclass(frozen=True)
class BasicCone:
    eps: tuple
    gens: tuple

    @property
    def positions(self):
        """1-based positions in the generator list, one per cone generator."""
        d = len(self.eps) + 1
        return (1,) + tuple(i + 1 if e else d + i for i, e in enumerate(self.eps, start=1))

    def det(self):
        return det(IntMatrix.from_rows(self.gens))

    def coordinates(self, point):
        """Exact coefficients of ``point`` in the cone's generators."""
        return solve_rational(IntMatrix.from_rows(self.gens).transpose(), point)

    def contains(self, point):
        return all(c >= 0 for c in self.coordinates(point))


def basic_cones(m):
    L = dual_generators(m)
    d = m.d
    cones = []
    for eps in product((0, 1), repeat=d - 1):
        gens = [L[1]] + [L[i + 1] if e else L[d + i] for i, e in enumerate(eps, start=1)]
        cone = BasicCone(eps, tuple(gens))
        value = cone.det()
        if abs(value) != 1:
            raise DetNotUnit(eps, value)
        cones.append(cone)
    return cones


@dataclass(frozen=True)
class EliminationPlan:
    """Redundant generators and the rows that make them redundant.

    ``q_set`` maps k to gamma_k with e_k = m_{gamma_k}; ``r_set`` maps l to
    delta_l with m_l - e_{l+1} = m_{delta_l}. ``hilbert`` lists the surviving
    (position, covector) pairs.
    """

    d: int
    q_set: dict
    r_set: dict
    hilbert: tuple

    @property
    def eliminated_positions(self):
        return tuple(sorted(list(self.q_set) + [self.d + l for l in self.r_set]))

    def hilbert_set(self):
        return frozenset(v for _, v in self.hilbert)


def elimination_plan(m):
    L = dual_generators(m)
    d = m.d
    rows = {i: m.row(i) for i in range(1, d)}
    q_set = {}
    for k in range(1, d):
        # smallest gamma wins when several rows coincide with e_k
        gamma = next((g for g in range(k, d) if rows[g] == L[k]), None)
        if gamma is not None:
            q_set[k] = gamma
    r_set = {}
    for l in range(1, d - 1):
        delta = next((g for g in range(l + 1, d) if rows[g] == L[d + l]), None)
        if delta is not None:
            r_set[l] = delta
    dropped = set(q_set) | {d + l for l in r_set}
    hilbert = tuple((pos, L[pos]) for pos in range(1, 2 * d) if pos not in dropped)
    return EliminationPlan(d, q_set, r_set, hilbert)
