"""Binomial equations of the toric l.c.i. attached to a free-parameter matrix.

Variables are z_1..z_{2d-1}, matching the positions of the dual-cone
generator list. Exponent vectors are 0-based tuples of length 2d - 1, so
variable z_k lives at index k - 1.
"""

import json
from dataclasses import dataclass, field

from .dual_cone import dual_generators, elimination_plan
from .exact_linalg import IntMatrix, is_dominating, mat_mul, mat_vec


class NegativeMuZero(ArithmeticError):
    def __init__(self, j, value):
        self.j = j
        self.value = value
        super().__init__(f"mu_0,{j} = {value} < 0 for an admissible matrix")


class InternalMismatch(ArithmeticError):
    pass


class NotDominating(ArithmeticError):
    pass


class MalformedEliminationTarget(ArithmeticError):
    pass


@dataclass(frozen=True)
class LambdaMuTable:
    """lam[i, j] <= 0 and mu[i, j] >= 0 for 1 <= j <= d-1, 0 <= i <= j-1."""

    d: int
    lam: dict
    mu: dict

    def column(self, j):
        return ([self.lam[i, j] for i in range(j)], [self.mu[i, j] for i in range(j)])


def lambda_mu(m):
    d = m.d
    lam = {}
    mu = {}
    for j in range(1, d):
        # descending i: lam[i, j] only needs lam[k, j] for k > i
        for i in range(j - 1, 0, -1):
            s = m.entry(j, i + 1) + sum(m.entry(k, i + 1) * lam[k, j] for k in range(i + 1, j))
            lam[i, j] = min(0, s)
            mu[i, j] = max(0, s)
        lam[0, j] = 0
        mu[0, j] = m.entry(j, 1) + sum(m.entry(k, 1) * lam[k, j] for k in range(1, j))
        if mu[0, j] < 0:
            raise NegativeMuZero(j, mu[0, j])
    return LambdaMuTable(d, lam, mu)


@dataclass(frozen=True)
class RelationMatrix:
    A: IntMatrix
    B: IntMatrix


def _M(m):
    """(d-1) x d matrix of rows m_i with -1 at column i + 1."""
    d = m.d
    rows = []
    for i in range(1, d):
        r = list(m.row(i))
        r[i] = -1
        rows.append(r)
    return IntMatrix.from_rows(rows)


def relation_matrices(m):
    d = m.d
    A = dual_generators(m).matrix()
    Mt = _M(m).transpose()
    minus_identity = [[-int(i == j) for j in range(d - 1)] for i in range(d - 1)]
    B = IntMatrix.from_rows(Mt.to_rows() + minus_identity)
    if not mat_mul(A, B).is_zero():
        raise InternalMismatch("A * B != 0")
    return RelationMatrix(A, B)


def unimodular_factors(m, table):
    """[U_2, ..., U_{d-1}]; U_j is the identity except column j above the diagonal."""
    n = m.d - 1
    out = []
    for j in range(2, m.d):
        rows = [[int(r == c) for c in range(n)] for r in range(n)]
        for i in range(1, j):
            rows[i - 1][j - 1] = table.lam[i, j]
        out.append(IntMatrix.from_rows(rows))
    return out


def assemble_dominating(table):
    """B-hat written down directly from the lambda/mu table."""
    d = table.d
    cols = []
    for j in range(1, d):
        col = [0] * (2 * d - 1)
        for i in range(j):
            col[i] = table.mu[i, j]
        col[j] = -1
        for i in range(1, j):
            col[d + i - 1] = -table.lam[i, j]
        col[d + j - 1] = -1
        cols.append(col)
    return IntMatrix.from_columns(cols)


def dominating_basis(m, table=None):
    """B-hat = B U_{d-1} ... U_2, cross-checked against direct assembly."""
    table = table or lambda_mu(m)
    product = relation_matrices(m).B
    for U in reversed(unimodular_factors(m, table)):
        product = mat_mul(product, U)
    direct = assemble_dominating(table)
    if product != direct:
        raise InternalMismatch(f"B*U product {product} != assembled {direct}")
    if not is_dominating(direct):
        raise NotDominating(f"{direct} has a mixed square submatrix")
    return direct


@dataclass(frozen=True)
class Binomial:
    """z^plus - z^minus with disjoint supports."""

    plus: tuple
    minus: tuple

    def __post_init__(self):
        if any(a and b for a, b in zip(self.plus, self.minus)):
            raise ValueError("plus and minus monomials share a variable")

    @classmethod
    def from_vector(cls, v):
        return cls(tuple(max(0, x) for x in v), tuple(max(0, -x) for x in v))

    @property
    def vector(self):
        return tuple(a - b for a, b in zip(self.plus, self.minus))

    def to_json(self):
        return {"plus": list(self.plus), "minus": list(self.minus)}


@dataclass(frozen=True)
class IdealPresentation:
    """Generators over z_1..z_{2d-1} and, once built, the minimal embedding.

    ``variable_map`` sends each eliminated variable index k to the pair
    (a, b) of the substitution z_k = z_a z_b; ``expansions`` holds the
    same substitutions pushed to the fixpoint, as exponent vectors over the
    surviving variables.
    """

    d: int
    generators: tuple
    minimal_generators: tuple = None
    variable_map: dict = field(default=None)
    expansions: dict = field(default=None, repr=False)
    surviving_variables: tuple = None

    @property
    def nvars(self):
        return 2 * self.d - 1

    @property
    def is_minimal(self):
        return self.minimal_generators is not None


def binomial_generators(m, table=None):
    Bhat = dominating_basis(m, table)
    gens = tuple(Binomial.from_vector(Bhat.column(j)) for j in range(Bhat.cols))
    d = m.d
    for j, g in enumerate(gens, start=1):
        expected = [0] * (2 * d - 1)
        expected[j] = expected[d + j - 1] = 1
        if list(g.minus) != expected:
            raise InternalMismatch(f"generator {j} has minus part {g.minus}")
    return IdealPresentation(d, gens)


def minimal_presentation(m, plan=None, presentation=None):
    d = m.d
    n = 2 * d - 1
    plan = plan or elimination_plan(m)
    presentation = presentation or binomial_generators(m)
    gens = presentation.generators

    subst = {}
    dropped = {}
    for k, gamma in sorted(plan.q_set.items()):
        subst[k] = (gamma + 1, d + gamma)
        dropped[gamma] = k
    for l, delta in sorted(plan.r_set.items()):
        subst[d + l] = (delta + 1, d + delta)
        dropped[delta] = d + l
    for j, var in dropped.items():
        a, b = subst[var]
        expected = Binomial(_unit(n, var), _add(_unit(n, a), _unit(n, b)))
        if gens[j - 1] != expected:
            raise MalformedEliminationTarget(
                f"generator {j} is {gens[j - 1]}, expected z{var} - z{a}*z{b}")

    expansions = {}

    def expand(var):
        # every substitution moves to variables of strictly larger rank, so
        # this recursion terminates
        if var not in subst:
            return _unit(n, var)
        if var not in expansions:
            a, b = subst[var]
            expansions[var] = _add(expand(a), expand(b))
        return expansions[var]

    for var in subst:
        expand(var)

    minimal = []
    for j, g in enumerate(gens, start=1):
        if j in dropped:
            continue
        plus = _substitute(g.plus, expand)
        minus = _substitute(g.minus, expand)
        common = tuple(min(a, b) for a, b in zip(plus, minus))
        plus = tuple(a - c for a, c in zip(plus, common))
        minus = tuple(a - c for a, c in zip(minus, common))
        minimal.append(Binomial(plus, minus))

    survivors = tuple(k for k in range(1, n + 1) if k not in subst)
    return IdealPresentation(d, gens, tuple(minimal), dict(sorted(subst.items())),
                             dict(sorted(expansions.items())), survivors)


def _unit(n, var):
    return tuple(int(i == var - 1) for i in range(n))


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _substitute(exponents, expand):
    out = [0] * len(exponents)
    for i, e in enumerate(exponents):
        if e:
            for k, x in enumerate(expand(i + 1)):
                out[k] += e * x
    return tuple(out)


def kernel_residual(A, binomial):
    """A * (plus - minus); zero iff the binomial is a valid toric relation."""
    return mat_vec(A, binomial.vector)


def variable_names(p, aliases=False):
    """Index -> name. With ``aliases`` the survivors become w, t1, t2, ...

    The first survivor is called w when it is z1; all the others are
    numbered t1, t2, ... in increasing index order.
    """
    names = {k: f"z{k}" for k in range(1, p.nvars + 1)}
    if aliases and p.is_minimal:
        t = 0
        for k in p.surviving_variables:
            if k == 1:
                names[k] = "w"
            else:
                t += 1
                names[k] = f"t{t}"
    return names


def monomial_str(exponents, names):
    parts = []
    for i, e in enumerate(exponents):
        if e == 1:
            parts.append(names[i + 1])
        elif e:
            parts.append(f"{names[i + 1]}^{e}")
    return "*".join(parts) if parts else "1"


def binomial_str(b, names):
    return f"{monomial_str(b.plus, names)} - {monomial_str(b.minus, names)}"


def render(p, format="text", minimal=False, aliases=False):
    """Text: one binomial per line. JSON: the ideal schema (always complete)."""
    if format == "json":
        return json.dumps(to_json(p), indent=2)
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    if minimal:
        if not p.is_minimal:
            raise ValueError("presentation has no minimal part")
        names = variable_names(p, aliases)
        return "\n".join(binomial_str(b, names) for b in p.minimal_generators)
    names = variable_names(p)
    return "\n".join(binomial_str(b, names) for b in p.generators)


def to_json(p):
    doc = {
        "d": p.d,
        "variables": [f"z{k}" for k in range(1, p.nvars + 1)],
        "generators": [b.to_json() for b in p.generators],
    }
    if p.is_minimal:
        doc["minimal"] = {
            "eliminated": {f"z{k}": [f"z{a}", f"z{b}"] for k, (a, b) in p.variable_map.items()},
            "generators": [b.to_json() for b in p.minimal_generators],
        }
    return doc
