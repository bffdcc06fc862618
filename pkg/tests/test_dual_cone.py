from hypothesis import given, settings

from nakajima_lci import corpus
from nakajima_lci.dual_cone import basic_cones, dual_generators, elimination_plan, unit_covector
from nakajima_lci.exact_linalg import IntMatrix, det
from nakajima_lci.nakajima import FreeParamMatrix

from conftest import admissible_matrices

FIG2 = FreeParamMatrix.from_rows([[2], [2, 1]])
FIG3 = FreeParamMatrix.from_rows([[1], [1, 0], [2, -1, -1]])


def test_generators():
    assert dual_generators(FIG2).gens == ((1, 0, 0), (0, 1, 0), (0, 0, 1), (2, -1, 0), (2, 1, -1))
    assert dual_generators(FIG3).gens[4:] == ((1, -1, 0, 0), (1, 0, -1, 0), (2, -1, -1, -1))
    assert dual_generators(corpus.kleinian(4)).gens == ((1, 0), (0, 1), (4, -1))
    assert dual_generators(FIG2)[4] == (2, -1, 0)


def test_generator_determinant_example():
    rows = [unit_covector(3, 1), unit_covector(3, 2), (2, 1, -1)]
    assert det(IntMatrix.from_rows(rows)) == -1


def test_basic_cones():
    cones = {c.eps: c for c in basic_cones(FIG2)}
    assert cones[(1, 1)].gens == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert cones[(0, 0)].gens == ((1, 0, 0), (2, -1, 0), (2, 1, -1))
    assert abs(cones[(0, 0)].det()) == 1
    assert cones[(0, 1)].positions == (1, 4, 3)
    fig3 = basic_cones(FIG3)
    assert len(fig3) == 8 and all(abs(c.det()) == 1 for c in fig3)


def test_cone_membership():
    cone = {c.eps: c for c in basic_cones(FIG2)}[(0, 0)]
    assert cone.contains((5, 0, -1))      # (2,-1,0) + (2,1,-1) + e1
    assert not cone.contains((0, 0, 1))


def test_elimination_plans():
    plan = elimination_plan(FIG3)
    assert plan.q_set == {1: 1} and plan.r_set == {}
    assert plan.hilbert_set() == set(dual_generators(FIG3).gens) - {(1, 0, 0, 0)}
    for k in (2, 3, 5):
        plan = elimination_plan(corpus.triangle(k))
        assert plan.q_set == {} and plan.r_set == {1: 2}
        assert plan.hilbert_set() == {(1, 0, 0), (0, 1, 0), (0, 0, 1), (k, -1, -1)}
    for d in (4, 5, 6):
        plan = elimination_plan(corpus.simplex(d, 2))
        assert plan.q_set == {i: i for i in range(2, d)}
        assert len(plan.hilbert) == d + 1
    assert len(elimination_plan(FIG2).hilbert) == 5


def test_smallest_gamma_wins():
    # e_1 equals both m_1 and m_2; the smaller index is chosen
    m = FreeParamMatrix.from_rows([[1], [1, 0], [1, 0, 1]])
    assert elimination_plan(m).q_set[1] == 1


@settings(max_examples=60, deadline=None)
@given(admissible_matrices(min_d=2, max_d=6))
def test_cones_unimodular_and_cover_generators(m):
    cones = basic_cones(m)
    assert len(cones) == 2 ** (m.d - 1)
    assert all(abs(c.det()) == 1 for c in cones)
    assert {g for c in cones for g in c.gens} == set(dual_generators(m).gens)


@settings(max_examples=60, deadline=None)
@given(admissible_matrices(min_d=2, max_d=6))
def test_plan_counts(m):
    plan = elimination_plan(m)
    assert len(plan.hilbert) == 2 * m.d - 1 - len(plan.q_set) - len(plan.r_set)
    assert len(plan.hilbert) >= m.d
