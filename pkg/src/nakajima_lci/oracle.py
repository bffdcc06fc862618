"""Brute-force verification of every constructed object.

Nothing in here reuses the constructions it checks: sums are enumerated
chain by chain, Hilbert bases come from enumerating lattice points of the
dual cone (cut out by pairings with the polytope's points), and the
binomials are evaluated on the torus parametrisation in exact rational
arithmetic.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor

from . import dual_cone, ideal_builder, nakajima
from .exact_linalg import IntMatrix, adjugate, det, is_dominating, is_mixed, mat_mul

NODE_CAP = 10 ** 7


class UnboundedSearch(ArithmeticError):
    """No nonsingular vertex submatrix to bound the enumeration."""


class SearchTooLarge(RuntimeError):
    """The enumeration region holds more lattice points than the cap allows."""


@dataclass
class Check:
    name: str
    passed: bool
    witness: object = None
    skipped: bool = False

    def to_json(self):
        doc = {"name": self.name, "pass": self.passed, "witness": self.witness}
        if self.skipped:
            doc["skipped"] = True
        return doc


@dataclass
class VerificationReport:
    instance: object
    seed: int
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def check(self, name):
        return next(c for c in self.checks if c.name == name)

    def to_json(self):
        inst = self.instance
        if isinstance(inst, nakajima.FreeParamMatrix):
            inst = inst.to_document()
        return {"instance": inst, "seed": self.seed,
                "checks": [c.to_json() for c in self.checks]}


def _skip(name, reason):
    return Check(name, True, {"reason": reason}, skipped=True)


# -- combinatorial sums ------------------------------------------------------

def q_sum_brute(m, eps, k, n):
    """q_{k,n}(eps): sum over chains 0 = i_0 < i_1 < ... < i_k < i_{k+1} = n-1."""
    total = 0
    for middle in combinations(range(1, n - 1), k):
        chain = (0,) + middle + (n - 1,)
        term = 1
        for j in range(1, k + 2):
            term *= eps[chain[j] - 1] * m.entry(chain[j], chain[j - 1] + 1)
            if not term:
                break
        total += term
    return total


def q_sums_recursive(m, eps):
    """All q_{k,n}(eps), built level by level from q_{k+1,n+1} = eps_n sum_i m_{n,i} q_{k,i}."""
    q = {}
    for n in range(2, m.d + 1):
        q[0, n] = eps[n - 2] * m.entry(n - 1, 1)
    for n in range(2, m.d):
        for k in range(0, n - 1):
            q[k + 1, n + 1] = eps[n - 1] * sum(m.entry(n, i) * q[k, i] for i in range(k + 2, n + 1))
    return q


def p_sum_brute(m, eps, k, n):
    """p_{k,n}: chains n = i_0 < ... < i_{k+1} = d-1; ``eps`` is indexed 1..d-2 via eps[i-1]."""
    last = m.d - 1
    total = 0
    for middle in combinations(range(n + 1, last), k):
        chain = (n,) + middle + (last,)
        term = 1
        for j in range(1, k + 2):
            term *= eps[chain[j - 1] - 1] * m.entry(chain[j], chain[j - 1] + 1)
            if not term:
                break
        total += term
    return total


def p_sums_recursive(m, eps):
    """All p_{k,n} from p_{0,n} = eps_n m_{d-1,n+1} and the downward recursion in n."""
    d = m.d
    p = {}
    for n in range(1, d - 1):
        p[0, n] = eps[n - 1] * m.entry(d - 1, n + 1)
    for n in range(d - 2, 1, -1):
        for l in range(0, d - 1 - n):
            p[l + 1, n - 1] = sum(eps[n - 2] * m.entry(k, n) * p[l, k]
                                  for k in range(n, d - 1 - l))
    return p


def positivity_sum(m, eps):
    """sum_k sum_chains m_{d-1,i_k+1} prod_{j<=k} eps_{i_j} m_{i_j,i_{j-1}+1}."""
    last = m.d - 1
    total = 0
    for k in range(0, last):
        for middle in combinations(range(1, last), k):
            chain = (0,) + middle
            term = m.entry(last, chain[-1] + 1)
            for j in range(1, k + 1):
                term *= eps[chain[j] - 1] * m.entry(chain[j], chain[j - 1] + 1)
            total += term
    return total


@dataclass(frozen=True)
class CombinatorialWitness:
    q_values: dict    # (k, n, eps) -> q_{k,n}(eps)
    p_values: dict    # (k, n) -> p_{k,n}, eps taken from the last lambda column
    p_eps: tuple


def combinatorial_witness(m, table=None):
    d = m.d
    q_values = {}
    for eps in product((0, 1), repeat=d - 1):
        for n in range(2, d + 1):
            for k in range(0, n - 1):
                q_values[k, n, eps] = q_sum_brute(m, eps, k, n)
    p_values = {}
    p_eps = ()
    if d >= 3:
        table = table or ideal_builder.lambda_mu(m)
        p_eps = tuple(int(table.lam[i, d - 1] < 0) for i in range(1, d - 1))
        for n in range(1, d - 1):
            for k in range(0, d - 1 - n):
                p_values[k, n] = p_sum_brute(m, p_eps, k, n)
    return CombinatorialWitness(q_values, p_values, p_eps)


def check_vertex_sums(m):
    d = m.d
    for eps in product((0, 1), repeat=d - 1):
        v = nakajima.vertex_point(m, eps)
        rec = q_sums_recursive(m, eps)
        for n in range(2, d + 1):
            brute = [q_sum_brute(m, eps, k, n) for k in range(0, n - 1)]
            if brute != [rec[k, n] for k in range(0, n - 1)]:
                return Check("vertex_sums", False, {"eps": list(eps), "n": n, "reason": "enumeration orders disagree"})
            if v[n - 1] != sum(brute):
                return Check("vertex_sums", False, {"eps": list(eps), "n": n,
                                                 "recursion": v[n - 1], "closed_form": sum(brute)})
    return Check("vertex_sums", True)


def check_lambda_sums(m):
    """lambda_{n,j} = sum_k p_{k,n} for every column j (column j is the last column of m truncated)."""
    if m.d < 3:
        return _skip("lambda_sums", "needs d >= 3")
    table = ideal_builder.lambda_mu(m)
    for j in range(2, m.d):
        sub = m.truncate(j)          # dimension j + 1, last column is column j of m
        eps = tuple(int(table.lam[i, j] < 0) for i in range(1, j))
        rec = p_sums_recursive(sub, eps)
        for n in range(1, j):
            brute = [p_sum_brute(sub, eps, k, n) for k in range(0, j - n)]
            if brute != [rec[k, n] for k in range(0, j - n)]:
                return Check("lambda_sums", False, {"column": j, "n": n, "reason": "enumeration orders disagree"})
            if table.lam[n, j] != sum(brute):
                return Check("lambda_sums", False, {"column": j, "n": n,
                                                 "lambda": table.lam[n, j], "p_sum": sum(brute)})
    return Check("lambda_sums", True)


def check_mu_positivity(m):
    """mu_{0,j} >= 0 and equals the positivity sum with eps_i = [lambda_{i,j} < 0]."""
    try:
        table = ideal_builder.lambda_mu(m)
    except ideal_builder.NegativeMuZero as exc:
        return Check("mu_positivity", False, {"column": exc.j, "mu0": exc.value})
    for j in range(1, m.d):
        sub = m.truncate(j)
        eps = tuple(int(table.lam[i, j] < 0) for i in range(1, j))
        value = positivity_sum(sub, eps)
        if table.mu[0, j] < 0 or table.mu[0, j] != value:
            return Check("mu_positivity", False, {"column": j, "mu0": table.mu[0, j], "positivity_sum": value})
    return Check("mu_positivity", True)


# -- matrices ------------------------------------------------------------------

def dominating_brute(M):
    """Literal definition: no rho x rho submatrix (any rows, any columns) is mixed."""
    for rho in range(1, min(M.rows, M.cols) + 1):
        for rows in combinations(range(M.rows), rho):
            for cols in combinations(range(M.cols), rho):
                if is_mixed(M.submatrix(rows, cols)):
                    return False
    return True


def det_cofactor(rows):
    """Laplace expansion along the first row; independent of the Bareiss routine."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * a * det_cofactor(minor)
    return total


def check_kernel(m):
    d = m.d
    rel = ideal_builder.relation_matrices(m)
    table = ideal_builder.lambda_mu(m)
    factors = ideal_builder.unimodular_factors(m, table)
    for j, U in enumerate(factors, start=2):
        if det_cofactor(U.to_rows()) != 1:
            return Check("kernel", False, {"reason": "det U_j != 1", "j": j})
    product_ = rel.B
    for U in reversed(factors):
        product_ = mat_mul(product_, U)
    Bhat = ideal_builder.assemble_dominating(table)
    if product_ != Bhat:
        return Check("kernel", False, {"reason": "B U_{d-1}...U_2 != assembled B-hat",
                                       "product": product_.to_rows(), "assembled": Bhat.to_rows()})
    residual = mat_mul(rel.A, Bhat)
    if not residual.is_zero():
        return Check("kernel", False, {"reason": "A * B-hat != 0", "residual": residual.to_rows()})
    # B-hat is a lattice basis of ker A iff its bottom block is unimodular
    bottom = Bhat.submatrix(range(d, 2 * d - 1), range(d - 1)).to_rows()
    if abs(det_cofactor(bottom)) != 1:
        return Check("kernel", False, {"reason": "B-hat is not a Z-basis of the kernel"})
    for j in range(d - 1):
        col = Bhat.column(j)
        negatives = [i + 1 for i, x in enumerate(col) if x < 0]
        if negatives != [j + 2, d + j + 1] or any(x < -1 for x in col):
            return Check("kernel", False, {"reason": "negative pattern", "column": j + 1,
                                           "entries": list(col)})
        for i in range(1, j + 1):
            if table.lam[i, j + 1] * table.mu[i, j + 1] != 0:
                return Check("kernel", False, {"reason": "lambda and mu both nonzero",
                                               "i": i, "j": j + 1})
    return Check("kernel", True)


def check_dominating(m, exhaustive=True):
    Bhat = ideal_builder.assemble_dominating(ideal_builder.lambda_mu(m))
    verdict = dominating_brute(Bhat) if exhaustive else is_dominating(Bhat)
    if not verdict:
        return Check("dominating", False, {"matrix": Bhat.to_rows()})
    if not is_mixed(Bhat):
        return Check("dominating", False, {"reason": "B-hat is not mixed", "matrix": Bhat.to_rows()})
    return Check("dominating", True)


# -- dual cone -------------------------------------------------------------------

def _cones(m):
    L = dual_cone.dual_generators(m)
    d = m.d
    out = []
    for eps in product((0, 1), repeat=d - 1):
        gens = [L[1]] + [L[i + 1] if e else L[d + i] for i, e in enumerate(eps, start=1)]
        out.append((eps, gens))
    return out


def check_basic_cones(m):
    L = set(dual_cone.dual_generators(m).gens)
    seen = set()
    for eps, gens in _cones(m):
        value = det_cofactor([list(g) for g in gens])
        if abs(value) != 1:
            return Check("basic_cones", False, {"eps": list(eps), "det": value})
        seen.update(gens)
    if seen != L:
        return Check("basic_cones", False, {"reason": "cone generators do not exhaust L"})
    built = dual_cone.basic_cones(m)
    if [c.gens for c in built] != [tuple(g) for _, g in _cones(m)]:
        return Check("basic_cones", False, {"reason": "basic_cones disagrees with direct construction"})
    return Check("basic_cones", True)


def _random_combination(rng, gens, zero_prob=0.4):
    coeffs = [Fraction(0) if rng.random() < zero_prob else Fraction(rng.randint(1, 20), rng.randint(1, 7))
              for _ in gens]
    d = len(gens[0])
    return tuple(sum(c * g[i] for c, g in zip(coeffs, gens)) for i in range(d))


def check_subdivision(m, rng, samples=100):
    """Sampled coverage of the dual cone and the pairwise intersection law."""
    d = m.d
    L = dual_cone.dual_generators(m).gens
    cones = [dual_cone.BasicCone(tuple(eps), tuple(g)) for eps, g in _cones(m)]
    for _ in range(samples):
        point = _random_combination(rng, L)
        if not any(c.contains(point) for c in cones):
            return Check("subdivision", False, {"reason": "uncovered point", "point": [str(x) for x in point]})
    for _ in range(samples):
        a, b = rng.sample(range(len(cones)), 2) if len(cones) > 1 else (0, 0)
        ca, cb = cones[a], cones[b]
        shared = [0] + [i for i in range(1, d) if ca.eps[i - 1] == cb.eps[i - 1]]
        for source in (ca, cb):
            point = _random_combination(rng, list(source.gens), zero_prob=0.5)
            coords = ca.coordinates(point)
            in_shared = all(x >= 0 for x in coords) and all(
                coords[i] == 0 for i in range(d) if i not in shared)
            in_both = ca.contains(point) and cb.contains(point)
            if in_both != in_shared:
                return Check("subdivision", False, {"reason": "intersection law", "eps": list(ca.eps),
                                                    "eps_prime": list(cb.eps),
                                                    "point": [str(x) for x in point]})
    return Check("subdivision", True, None)


def _pairings(w, points):
    return tuple(sum(a * b for a, b in zip(w, p)) for p in points)


def triangular_basis(points):
    """One point per level, each introducing a new positive coordinate."""
    d = len(points[0])
    basis = []
    for level in range(d):
        idx = next((i for i, p in enumerate(points)
                    if p[level] > 0 and not any(p[level + 1:])), None)
        if idx is None:
            raise UnboundedSearch(f"no point opens coordinate {level + 1}")
        basis.append(idx)
    return basis


def lattice_points(points, upper, basis=None, cap=NODE_CAP):
    """Integer w with 0 <= <w, p> <= upper[i] for every points[i].

    Coordinates are bounded via Cramer's rule on the d x d submatrix picked
    by ``basis``; basis rows supported on a coordinate prefix also prune
    the depth-first search. Every candidate is finally tested against all
    points.
    """
    d = len(points[0])
    basis = list(basis) if basis is not None else triangular_basis(points)
    V = IntMatrix.from_rows([points[i] for i in basis])
    dv = det(V)
    if dv == 0:
        raise UnboundedSearch("chosen vertex submatrix is singular")
    adj = adjugate(V)
    c = [upper[i] for i in basis]
    lo, hi = [], []
    for j in range(d):
        terms = [Fraction(adj[j, i] * c[i], dv) for i in range(d)]
        lo.append(ceil(sum(min(0, t) for t in terms)))
        hi.append(floor(sum(max(0, t) for t in terms)))
    # rows usable at depth j: basis rows whose last nonzero coordinate is j
    by_depth = [[] for _ in range(d)]
    for i in basis:
        p = points[i]
        last = max(k for k in range(d) if p[k])
        by_depth[last].append((p, upper[i]))

    out = []
    nodes = 0
    w = [0] * d

    def visit(j):
        nonlocal nodes
        a, b = lo[j], hi[j]
        for p, u in by_depth[j]:
            s = sum(p[k] * w[k] for k in range(j))
            # 0 <= s + p_j w_j <= u
            if p[j] > 0:
                a = max(a, ceil(Fraction(-s, p[j])))
                b = min(b, floor(Fraction(u - s, p[j])))
            else:
                a = max(a, ceil(Fraction(u - s, p[j])))
                b = min(b, floor(Fraction(-s, p[j])))
        for x in range(a, b + 1):
            nodes += 1
            if nodes > cap:
                raise SearchTooLarge(f"more than {cap} nodes")
            w[j] = x
            if j + 1 < d:
                visit(j + 1)
            else:
                pv = _pairings(w, points)
                if all(0 <= v <= u for v, u in zip(pv, upper)):
                    out.append(tuple(w))
        w[j] = 0

    visit(0)
    return out


def hilbert_brute(m, L=None, basis=None, cap=NODE_CAP):
    """Irreducible lattice points of the dual cone lying below some element of L.

    Every lattice point dominated (in all pairings with the polytope's
    points) by an element of L is enumerated; a point is irreducible iff
    no other nonzero point of the cone sits below it, which is decided on
    the pairing vectors.
    """
    points = nakajima.vertex_family(m, m.d).distinct
    L = list(L) if L is not None else list(dual_cone.dual_generators(m).gens)
    region = set()
    budget = cap
    for g in L:
        upper = _pairings(g, points)
        if min(upper) < 0:
            raise ValueError(f"{g} is not in the dual cone")
        found = lattice_points(points, upper, basis, cap=budget)
        region.update(found)
    zero = tuple([0] * m.d)
    region.discard(zero)
    ordered = sorted(region, key=lambda w: (sum(_pairings(w, points)), w))
    minimal = []
    for w in ordered:
        pw = _pairings(w, points)
        if not any(all(a <= b for a, b in zip(pm, pw)) for _, pm in minimal):
            minimal.append((w, pw))
    return frozenset(w for w, _ in minimal)


def index_range_adjudication(m, brute):
    """Compare the brute-force Hilbert basis with both readings of the row criterion."""
    L = dual_cone.dual_generators(m).gens
    rows = {m.row(i) for i in range(1, m.d)}
    rows_from_2 = {m.row(i) for i in range(2, m.d)}
    consistent = frozenset(v for v in L if v not in rows)
    printed = frozenset(v for v in L if v not in rows_from_2)
    return {"range_1_to_d-1_agrees": consistent == brute,
            "range_2_to_d-1_agrees": printed == brute}


def check_hilbert(m, cap=NODE_CAP):
    try:
        brute = hilbert_brute(m, cap=cap)
    except SearchTooLarge:
        return _skip("hilbert", "too large")
    plan = dual_cone.elimination_plan(m)
    adjudication = index_range_adjudication(m, brute)
    ok = plan.hilbert_set() == brute and len(plan.hilbert) == len(brute)
    witness = dict(adjudication, size=len(brute))
    if not ok:
        witness.update(brute=[list(v) for v in sorted(brute)],
                       plan=[list(v) for _, v in plan.hilbert])
    return Check("hilbert", ok, witness)


def default_generation_bound(m, L=None):
    points = nakajima.vertex_family(m, m.d).distinct
    L = L if L is not None else dual_cone.dual_generators(m).gens
    return 2 * max(max(_pairings(g, points)) for g in L)


def semigroup_generation_check(m, L=None, bound=None, cap=NODE_CAP):
    """Every cone lattice point with all pairings <= bound is a sum of elements of L."""
    points = nakajima.vertex_family(m, m.d).distinct
    L = [tuple(g) for g in (L if L is not None else dual_cone.dual_generators(m).gens)]
    if bound is None:
        bound = default_generation_bound(m, L)
    try:
        region = lattice_points(points, [bound] * len(points), cap=cap)
    except SearchTooLarge:
        return _skip("semigroup_generation", "too large")
    pairing = {w: _pairings(w, points) for w in region}
    gen_pairings = [(g, _pairings(g, points)) for g in L]
    representable = set()
    for w in sorted(region, key=lambda w: (sum(pairing[w]), w)):
        if not any(w):
            representable.add(w)
            continue
        pw = pairing[w]
        for g, pg in gen_pairings:
            if all(a >= b for a, b in zip(pw, pg)):
                rest = tuple(a - b for a, b in zip(w, g))
                if rest in representable:
                    representable.add(w)
                    break
        else:
            return Check("semigroup_generation", False, {"point": list(w), "bound": bound})
    return Check("semigroup_generation", True, {"bound": bound, "points": len(region)})


# -- binomials -------------------------------------------------------------------

def torus_values(m, t):
    """z_k = t_k and z_{d+i} = prod_j t_j^{m_ij} / t_{i+1}."""
    d = m.d
    z = list(t)
    for i in range(1, d):
        value = Fraction(1)
        for j, e in enumerate(m.row(i)):
            value *= t[j] ** e
        z.append(value / t[i])
    return z


def _monomial(exponents, z):
    value = Fraction(1)
    for x, e in zip(z, exponents):
        if e:
            value *= x ** e
    return value


def parametric_vanishing(m, presentation, trials=10, seed=0):
    rng = random.Random(seed)
    d = m.d
    for trial in range(trials):
        t = []
        while len(t) < d:
            x = Fraction(rng.randint(1, 60), rng.randint(1, 60))
            if x != 1:
                t.append(x)
        z = torus_values(m, t)
        witness = {"trial": trial, "t": [str(x) for x in t]}
        for j, b in enumerate(presentation.generators, start=1):
            if _monomial(b.plus, z) != _monomial(b.minus, z):
                return Check("parametric_vanishing", False, dict(witness, generator=j, kind="original"))
        if presentation.is_minimal:
            for j, b in enumerate(presentation.minimal_generators, start=1):
                if _monomial(b.plus, z) != _monomial(b.minus, z):
                    return Check("parametric_vanishing", False, dict(witness, generator=j, kind="minimal"))
            for k, (a, b) in presentation.variable_map.items():
                if z[k - 1] != z[a - 1] * z[b - 1]:
                    return Check("parametric_vanishing", False, dict(witness, variable=k, kind="substitution"))
            for k, vec in presentation.expansions.items():
                if z[k - 1] != _monomial(vec, z):
                    return Check("parametric_vanishing", False, dict(witness, variable=k, kind="expansion"))
    return Check("parametric_vanishing", True, {"trials": trials})


def presentation_kernel_check(m, presentation):
    """Every binomial (and substitution) has exponent difference in ker A."""
    A = dual_cone.dual_generators(m).matrix()
    n = presentation.nvars
    binomials = list(presentation.generators)
    if presentation.is_minimal:
        binomials += list(presentation.minimal_generators)
        for k, vec in presentation.expansions.items():
            unit = tuple(int(i == k - 1) for i in range(n))
            binomials.append(ideal_builder.Binomial.from_vector(tuple(a - b for a, b in zip(unit, vec))))
    for b in binomials:
        if any(ideal_builder.kernel_residual(A, b)):
            return Check("presentation_kernel", False, {"binomial": b.to_json()})
    return Check("presentation_kernel", True)


def check_counts(m, presentation, plan):
    d = m.d
    ok = (len(presentation.generators) == d - 1
          and len(plan.hilbert) == 2 * d - 1 - len(plan.q_set) - len(plan.r_set)
          and len(presentation.minimal_generators) == len(plan.hilbert) - d
          and len(presentation.surviving_variables) == len(plan.hilbert))
    witness = {"generators": len(presentation.generators), "hilbert": len(plan.hilbert),
               "minimal_generators": len(presentation.minimal_generators),
               "q": len(plan.q_set), "r": len(plan.r_set)}
    return Check("counts", ok, witness)


def check_vertices(m):
    d = m.d
    fam = nakajima.vertex_family(m, d)
    halfspaces = [h for pair in nakajima.h_description(m) for h in pair]
    for eps, p in fam.points.items():
        if p[0] != 1 or min(p) < 0:
            return Check("vertices", False, {"eps": list(eps), "point": list(p)})
        bad = next((h for h in halfspaces if not h.holds(p)), None)
        if bad is not None:
            return Check("vertices", False, {"eps": list(eps), "violates": str(bad)})
    nv = len(fam.vertices)
    if not d <= nv <= 2 ** (d - 1):
        return Check("vertices", False, {"vertices": nv})
    smooth = nakajima.is_basic_simplex(m)
    return Check("vertices", True, {"vertices": nv, "basic_simplex": smooth})


# -- driver ----------------------------------------------------------------------

CHECK_NAMES = ("structure", "admissibility", "vertices", "vertex_sums", "lambda_sums", "mu_positivity",
               "kernel", "dominating", "basic_cones", "subdivision", "hilbert",
               "semigroup_generation", "counts", "presentation_kernel",
               "parametric_vanishing", "smoothness")


def _skip_rest(report, reason):
    done = {c.name for c in report.checks}
    for name in CHECK_NAMES:
        if name not in done:
            report.checks.append(_skip(name, reason))
    return report

def full_report(m, level="exhaustive", seed=0):
    if level not in ("quick", "exhaustive"):
        raise ValueError(f"unknown level {level!r}")
    report = VerificationReport(m, seed)
    add = report.checks.append
    try:
        nakajima.validate_structure(m)
    except nakajima.StructureError as exc:
        add(Check("structure", False, {"error": str(exc)}))
        return _skip_rest(report, "structure check failed")
    add(Check("structure", True))
    adm = nakajima.is_admissible(m)
    if not adm:
        w = adm.witness
        add(Check("admissibility", False, {"level": w.level, "eps": list(w.eps), "pairing": w.value}))
        return _skip_rest(report, "matrix is not admissible")
    add(Check("admissibility", True))

    exhaustive = level == "exhaustive"
    d = m.d
    rng = random.Random(seed)

    def guarded(name, fn, *args, **kwargs):
        try:
            add(fn(*args, **kwargs))
        except ArithmeticError as exc:
            add(Check(name, False, {"error": f"{type(exc).__name__}: {exc}"}))

    guarded("vertices", check_vertices, m)
    guarded("vertex_sums", check_vertex_sums, m)
    guarded("lambda_sums", check_lambda_sums, m)
    guarded("mu_positivity", check_mu_positivity, m)
    guarded("kernel", check_kernel, m)
    guarded("dominating", check_dominating, m, exhaustive=exhaustive and d <= 7)
    guarded("basic_cones", check_basic_cones, m)
    guarded("subdivision", check_subdivision, m, rng, 100 if exhaustive else 20)
    if d <= (5 if exhaustive else 4):
        guarded("hilbert", check_hilbert, m)
    else:
        add(_skip("hilbert", f"d = {d} exceeds the {level} limit"))
    if d <= (4 if exhaustive else 3):
        guarded("semigroup_generation", semigroup_generation_check, m, cap=10 ** 6)
    else:
        add(_skip("semigroup_generation", f"d = {d} exceeds the {level} limit"))
    try:
        plan = dual_cone.elimination_plan(m)
        presentation = ideal_builder.minimal_presentation(m, plan)
    except ArithmeticError as exc:
        add(Check("counts", False, {"error": f"{type(exc).__name__}: {exc}"}))
        return _skip_rest(report, "presentation could not be built")
    add(check_counts(m, presentation, plan))
    add(presentation_kernel_check(m, presentation))
    add(parametric_vanishing(m, presentation, trials=10, seed=seed))
    smooth = nakajima.is_basic_simplex(m)
    add(Check("smoothness", smooth == (len(presentation.minimal_generators) == 0),
              {"basic_simplex": smooth, "minimal_generators": len(presentation.minimal_generators)}))
    return report
