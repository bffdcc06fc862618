import random

from hypothesis import strategies as st

from nakajima_lci import corpus


@st.composite
def admissible_matrices(draw, min_d=2, max_d=5, lo=-3, hi=3):
    d = draw(st.integers(min_d, max_d))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return corpus.random_admissible(random.Random(seed), d, lo, hi)


def int_matrices(max_rows=5, max_cols=5, lo=-3, hi=3):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c),
                               min_size=r, max_size=r)))
