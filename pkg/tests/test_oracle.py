import json
import random
from dataclasses import replace
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from nakajima_lci import corpus, oracle
from nakajima_lci.dual_cone import dual_generators
from nakajima_lci.ideal_builder import Binomial, binomial_generators, lambda_mu, minimal_presentation
from nakajima_lci.nakajima import FreeParamMatrix, vertex_family, vertex_point

from conftest import admissible_matrices

FIG2 = FreeParamMatrix.from_rows([[2], [2, 1]])
FIG3 = FreeParamMatrix.from_rows([[1], [1, 0], [2, -1, -1]])
BAD = FreeParamMatrix.from_rows([[1], [0, -1]])


def test_q_sum_examples():
    eps = (1, 1)
    assert oracle.q_sum_brute(FIG2, eps, 0, 3) == 2
    assert oracle.q_sum_brute(FIG2, eps, 1, 3) == 2
    assert sum(oracle.q_sum_brute(FIG2, eps, k, 3) for k in range(2)) == vertex_point(FIG2, eps)[2] == 4
    for n in range(2, 5):
        for e in product((0, 1), repeat=3):
            assert oracle.q_sum_brute(FIG3, e, 0, n) == e[n - 2] * FIG3.entry(n - 1, 1)
        assert all(oracle.q_sum_brute(FIG3, (0, 0, 0), k, n) == 0 for k in range(n - 1))


def test_vertex_sum_examples():
    assert oracle.check_vertex_sums(FIG3).passed
    assert oracle.check_vertex_sums(FIG2).passed
    assert oracle.check_vertex_sums(corpus.kleinian(5)).passed


def test_lambda_sum_examples():
    eps = tuple(int(lambda_mu(FIG3).lam[i, 3] < 0) for i in (1, 2))
    assert sum(oracle.p_sum_brute(FIG3, eps, k, 1) for k in range(2)) == -1
    assert oracle.check_lambda_sums(FIG3).passed
    assert oracle.check_lambda_sums(corpus.triangle(4)).passed
    t = lambda_mu(FreeParamMatrix.from_rows([[1], [2, 1], [0, 1, 3]]))
    assert not any(t.lam.values())
    assert oracle.check_lambda_sums(FreeParamMatrix.from_rows([[1], [2, 1], [0, 1, 3]])).passed


def test_mu_positivity_examples():
    assert oracle.check_mu_positivity(FIG3).passed
    assert oracle.positivity_sum(FIG3, (1, 1)) == 0


@settings(max_examples=60, deadline=None)
@given(admissible_matrices(min_d=2, max_d=7), st.randoms(use_true_random=False))
def test_sum_recursions_match_enumeration(m, rng):
    eps = tuple(rng.randint(0, 1) for _ in range(m.d - 1))
    rec = oracle.q_sums_recursive(m, eps)
    for (k, n), value in rec.items():
        assert value == oracle.q_sum_brute(m, eps, k, n)
    peps = eps[:max(0, m.d - 2)]
    for (k, n), value in oracle.p_sums_recursive(m, peps).items():
        assert value == oracle.p_sum_brute(m, peps, k, n)


def test_hilbert_brute_examples():
    assert oracle.hilbert_brute(FIG2) == set(dual_generators(FIG2).gens)
    assert oracle.hilbert_brute(corpus.triangle(2)) == {(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, -1, -1)}
    assert oracle.hilbert_brute(FIG3) == set(dual_generators(FIG3).gens) - {(1, 0, 0, 0)}


def test_hilbert_adjudication_on_smooth_case():
    # rows m_1 = e_1, m_2 = e_2: only the full index range removes e_1
    m = corpus.smooth3()
    verdict = oracle.index_range_adjudication(m, oracle.hilbert_brute(m))
    assert verdict == {"range_1_to_d-1_agrees": True, "range_2_to_d-1_agrees": False}


def _random_basis(points, rng):
    order = list(range(len(points)))
    rng.shuffle(order)
    chosen = []
    for i in order:
        trial = chosen + [i]
        if oracle.det_cofactor(_gram([points[j] for j in trial])) != 0:
            chosen = trial
        if len(chosen) == len(points[0]):
            return chosen
    return None


def _gram(vectors):
    return [[sum(a * b for a, b in zip(u, v)) for v in vectors] for u in vectors]


@settings(max_examples=25, deadline=None)
@given(admissible_matrices(min_d=2, max_d=4), st.randoms(use_true_random=False))
def test_hilbert_basis_independent_of_bounding_vertices(m, rng):
    points = vertex_family(m, m.d).distinct
    basis = _random_basis(points, rng)
    assert basis is not None
    assert oracle.hilbert_brute(m, basis=basis) == oracle.hilbert_brute(m)


def test_lattice_points_rejects_singular_basis():
    points = vertex_family(FIG2, 3).distinct
    with pytest.raises(oracle.UnboundedSearch):
        oracle.lattice_points(points, [1] * len(points), basis=[0, 0, 1])


def test_search_cap():
    with pytest.raises(oracle.SearchTooLarge):
        oracle.hilbert_brute(FIG3, cap=10)


def test_semigroup_generation():
    assert oracle.semigroup_generation_check(FIG2, bound=6).passed
    for k in (2, 3, 5):
        assert oracle.semigroup_generation_check(corpus.kleinian(k), bound=3 * k).passed
    for m in (FIG2, FIG3, corpus.kleinian(3)):
        d = m.d
        unit = tuple(int(i == d - 1) for i in range(d))
        partial = [g for g in dual_generators(m).gens if g != unit]
        check = oracle.semigroup_generation_check(m, L=partial)
        assert not check.passed
        assert tuple(check.witness["point"]) == unit


def test_parametric_vanishing_identity():
    p = binomial_generators(FIG2)
    t = [Fraction(3), Fraction(5, 7), Fraction(2, 9)]
    z = oracle.torus_values(FIG2, t)
    assert z[0] ** 2 == z[1] * z[3]
    assert oracle.parametric_vanishing(FIG2, p).passed
    assert oracle.parametric_vanishing(FIG3, minimal_presentation(FIG3), trials=10).passed


def _mutate(p, which, j, var, delta):
    """Shift one exponent of one binomial; keeps supports disjoint by moving the other side."""
    gens = list(p.minimal_generators if which == "minimal" else p.generators)
    b = gens[j]
    vec = list(b.vector)
    vec[var] += delta
    gens[j] = Binomial.from_vector(vec)
    if which == "minimal":
        return replace(p, minimal_generators=tuple(gens))
    return replace(p, generators=tuple(gens))


def test_corrupted_exponent_detected():
    p = minimal_presentation(FIG3)
    bad = _mutate(p, "original", 2, 3, 1)
    check = oracle.parametric_vanishing(FIG3, bad)
    assert not check.passed and check.witness["trial"] == 0
    bad = _mutate(p, "minimal", 0, 1, -1)
    assert not oracle.parametric_vanishing(FIG3, bad).passed


@settings(max_examples=60, deadline=None)
@given(admissible_matrices(min_d=2, max_d=5), st.data())
def test_mutation_detection_agrees_with_kernel(m, data):
    p = minimal_presentation(m)
    which = "minimal" if p.minimal_generators and data.draw(st.booleans()) else "original"
    pool = p.minimal_generators if which == "minimal" else p.generators
    j = data.draw(st.integers(0, len(pool) - 1))
    var = data.draw(st.integers(0, p.nvars - 1))
    delta = data.draw(st.sampled_from([-2, -1, 1, 2]))
    bad = _mutate(p, which, j, var, delta)
    vanish = oracle.parametric_vanishing(m, bad).passed
    kernel = oracle.presentation_kernel_check(m, bad).passed
    assert vanish == kernel
    assert not vanish


def test_full_report_examples():
    for m in (FIG2, FIG3):
        report = oracle.full_report(m, level="exhaustive")
        assert report.passed, [c for c in report.checks if not c.passed]
        assert {c.name for c in report.checks} == set(oracle.CHECK_NAMES)
        assert not any(c.skipped for c in report.checks)


def test_full_report_inadmissible():
    report = oracle.full_report(BAD)
    adm = report.check("admissibility")
    assert not adm.passed and adm.witness == {"level": 3, "eps": [1, 1], "pairing": -1}
    rest = [c for c in report.checks if c.name not in ("structure", "admissibility")]
    assert rest and all(c.skipped for c in rest)
    assert not report.passed


def test_full_report_bad_structure():
    report = oracle.full_report(FreeParamMatrix.from_rows([[1], [0, 0]]))
    assert not report.check("structure").passed
    assert all(c.skipped for c in report.checks[1:])


def test_report_json_shape():
    doc = json.loads(json.dumps(oracle.full_report(FIG2, level="quick", seed=3).to_json()))
    assert doc["instance"] == {"d": 3, "rows": [[2], [2, 1]]}
    assert doc["seed"] == 3
    assert set(doc["checks"][0]) >= {"name", "pass", "witness"}


def test_large_instance_skips_exponential_checks():
    m = corpus.random_admissible(random.Random(5), 8)
    report = oracle.full_report(m, level="quick")
    assert report.check("hilbert").skipped
    assert report.check("semigroup_generation").skipped
    assert report.passed


def test_unknown_level():
    with pytest.raises(ValueError):
        oracle.full_report(FIG2, level="thorough")
