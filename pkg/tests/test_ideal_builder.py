import json

import pytest
from hypothesis import given, settings

from nakajima_lci import corpus
from nakajima_lci.exact_linalg import det, is_dominating, mat_mul
from nakajima_lci.ideal_builder import (
    Binomial, assemble_dominating, binomial_generators, dominating_basis, kernel_residual,
    lambda_mu, minimal_presentation, relation_matrices, render, to_json, unimodular_factors,
)
from nakajima_lci.nakajima import FreeParamMatrix

from conftest import admissible_matrices

FIG2 = FreeParamMatrix.from_rows([[2], [2, 1]])
FIG3 = FreeParamMatrix.from_rows([[1], [1, 0], [2, -1, -1]])


def lines(p, **kw):
    text = render(p, **kw)
    return text.split("\n") if text else []


def test_lambda_mu_example_iii():
    t = lambda_mu(FIG3)
    assert (t.mu[0, 1], t.mu[0, 2], t.mu[0, 3]) == (1, 1, 0)
    assert (t.lam[1, 3], t.lam[2, 3]) == (-1, -1)
    nonzero_lam = {k for k, v in t.lam.items() if v}
    nonzero_mu = {k for k, v in t.mu.items() if v}
    assert nonzero_lam == {(1, 3), (2, 3)}
    assert nonzero_mu == {(0, 1), (0, 2)}


@pytest.mark.parametrize("k", [2, 3, 5])
def test_lambda_mu_triangle(k):
    t = lambda_mu(corpus.triangle(k))
    assert (t.lam[1, 2], t.mu[1, 2], t.mu[0, 2], t.mu[0, 1]) == (-1, 0, 0, k)


def test_nonnegative_entries_give_trivial_lambda():
    m = FreeParamMatrix.from_rows([[2], [1, 3], [0, 2, 1]])
    t = lambda_mu(m)
    assert not any(t.lam.values())
    for j in range(1, m.d):
        for i in range(j):
            assert t.mu[i, j] == m.entry(j, i + 1)
    rel = relation_matrices(m)
    assert dominating_basis(m) == rel.B


def test_relation_matrices():
    rel = relation_matrices(FIG2)
    assert rel.B.to_columns() == [[2, -1, 0, -1, 0], [2, 1, -1, 0, -1]]
    assert relation_matrices(corpus.kleinian(3)).B.to_columns() == [[3, -1, -1]]
    assert mat_mul(relation_matrices(FIG3).A, relation_matrices(FIG3).B).is_zero()


def test_unimodular_factors_example_iii():
    U2, U3 = unimodular_factors(FIG3, lambda_mu(FIG3))
    assert U2.to_rows() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert U3.column(2) == (-1, -1, 1)
    assert det(U3) == 1


def test_dominating_basis_examples():
    for k in (2, 3, 5):
        Bhat = dominating_basis(corpus.triangle(k))
        assert Bhat.column(1) == (0, 0, -1, 1, -1)
    Bhat = dominating_basis(FIG3)
    assert is_dominating(Bhat)
    gens = binomial_generators(FIG3).generators
    assert [b.vector for b in gens] == [tuple(Bhat.column(j)) for j in range(3)]


def test_generators_example_i():
    assert lines(binomial_generators(FIG2)) == ["z1^2 - z2*z4", "z1^2*z2 - z3*z5"]


def test_generators_example_iii():
    p = minimal_presentation(FIG3)
    assert lines(p) == ["z1 - z2*z5", "z1 - z3*z6", "z5*z6 - z4*z7"]
    assert lines(p, minimal=True) == ["z2*z5 - z3*z6", "z5*z6 - z4*z7"]
    assert lines(p, minimal=True, aliases=True) == ["t1*t4 - t2*t5", "t4*t5 - t3*t6"]
    assert p.variable_map == {1: (2, 5)}


@pytest.mark.parametrize("d", [4, 5, 6])
def test_simplex_family(d):
    k = 3
    p = minimal_presentation(corpus.simplex(d, k))
    expected = [f"z1^{k} - z2*z{d + 1}"] + [f"z{j} - z{j + 1}*z{d + j}" for j in range(2, d)]
    assert lines(p) == expected
    product = "*".join(f"z{i}" for i in range(d, 2 * d))
    assert lines(p, minimal=True) == [f"z1^{k} - {product}"]
    assert lines(p, minimal=True, aliases=True) == [f"w^{k} - " + "*".join(f"t{j}" for j in range(1, d + 1))]


def test_box_generators_use_first_variable():
    p = binomial_generators(corpus.box(2, 3, 4))
    assert lines(p) == ["z1^2 - z2*z5", "z1^3 - z3*z6", "z1^4 - z4*z7"]


@pytest.mark.parametrize("kappa", [2, 4])
def test_two_dimensional(kappa):
    assert lines(binomial_generators(corpus.kleinian(kappa))) == [f"z1^{kappa} - z2*z3"]


def test_smooth_minimal_is_empty():
    p = minimal_presentation(corpus.smooth3())
    assert p.minimal_generators == ()
    assert len(p.surviving_variables) == 3
    assert render(p, minimal=True) == ""


def test_json_schema():
    doc = json.loads(render(minimal_presentation(FIG3), format="json"))
    assert doc["d"] == 4
    assert doc["variables"] == [f"z{k}" for k in range(1, 8)]
    assert doc["generators"][0] == {"plus": [1, 0, 0, 0, 0, 0, 0], "minus": [0, 1, 0, 0, 1, 0, 0]}
    assert doc["minimal"]["eliminated"] == {"z1": ["z2", "z5"]}
    assert len(doc["minimal"]["generators"]) == 2
    assert "minimal" not in to_json(binomial_generators(FIG2))


def test_binomial_rejects_shared_support():
    with pytest.raises(ValueError):
        Binomial((1, 1), (0, 1))


def test_render_rejects_unknown_format():
    with pytest.raises(ValueError):
        render(binomial_generators(FIG2), format="yaml")


@settings(max_examples=80, deadline=None)
@given(admissible_matrices(min_d=2, max_d=6))
def test_generator_structure(m):
    d = m.d
    table = lambda_mu(m)
    assert all(table.mu[0, j] >= 0 for j in range(1, d))
    Bhat = dominating_basis(m, table)
    assert Bhat == assemble_dominating(table)
    A = relation_matrices(m).A
    p = minimal_presentation(m)
    assert len(p.generators) == d - 1
    for j, b in enumerate(p.generators, start=1):
        assert not any(kernel_residual(A, b))
        assert [i + 1 for i, e in enumerate(b.minus) if e] == [j + 1, d + j]
    for b in p.minimal_generators:
        assert not any(kernel_residual(A, b))
        assert not any(b.plus[k - 1] or b.minus[k - 1] for k in p.variable_map)


def test_printed_box_form_is_not_a_relation():
    # z_j^{k_j} - z_{j+1} z_{d+j} for j >= 2 has exponent vector outside ker A
    m = corpus.box(2, 3, 4)
    A = relation_matrices(m).A
    d = m.d
    for j, k in ((2, 3), (3, 4)):
        vec = [0] * (2 * d - 1)
        vec[j - 1] = k
        vec[j] = vec[d + j - 1] = -1
        assert any(kernel_residual(A, Binomial.from_vector(vec)))
