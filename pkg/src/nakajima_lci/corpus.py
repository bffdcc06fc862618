"""Named example matrices and a sampler for random admissible ones."""

import re

from .nakajima import FreeParamMatrix, vertex_family


def fig2():
    return FreeParamMatrix.from_rows([[2], [2, 1]])


def fig3():
    return FreeParamMatrix.from_rows([[1], [1, 0], [2, -1, -1]])


def triangle(k):
    return FreeParamMatrix.from_rows([[k], [k, -1]])


def simplex(d, k):
    """k-th dilation of a basic (d-1)-simplex: m_11 = k, m_ii = 1."""
    rows = [[k]] + [[0] * (i - 1) + [1] for i in range(2, d)]
    return FreeParamMatrix.from_rows(rows)


def box(*ks):
    """Rectangular box [0, k_1] x ... x [0, k_{d-1}]: m_{i,1} = k_i."""
    return FreeParamMatrix.from_rows([[k] + [0] * i for i, k in enumerate(ks)])


def smooth3():
    return FreeParamMatrix.from_rows([[1], [0, 1]])


def kleinian(k):
    return FreeParamMatrix.from_rows([[k]])


EXAMPLES = {
    "fig2": (fig2, 0),
    "fig3": (fig3, 0),
    "triangle": (triangle, 1),
    "simplex": (simplex, 2),
    "box": (box, None),
    "smooth3": (smooth3, 0),
    "kleinian": (kleinian, 1),
}


def example(name, *args):
    """Look up a named example; ``name`` may also carry its arguments, as in 'simplex(4,2)'."""
    match = re.fullmatch(r"\s*(\w+)\s*(?:\((.*)\))?\s*", name)
    if not match or match.group(1) not in EXAMPLES:
        raise KeyError(name)
    if match.group(2) is not None:
        inline = [int(a) for a in match.group(2).split(",") if a.strip()]
        args = tuple(inline) + tuple(args)
    builder, arity = EXAMPLES[match.group(1)]
    if arity is not None and len(args) != arity:
        raise TypeError(f"{match.group(1)} takes {arity} integer argument(s)")
    if arity is None and not args:
        raise TypeError("box takes at least one integer argument")
    return builder(*(int(a) for a in args))


def random_admissible(rng, d, lo=-3, hi=3):
    """Sample an admissible matrix row by row with entries in [lo, hi].

    Row i only has to be nonzero and nonnegative on the level-i points,
    which depend on earlier rows alone, so rejection per row is cheap.
    """
    if hi < 1:
        raise ValueError("hi must be >= 1 so that m_11 >= 1 is possible")
    rows = [[rng.randint(1, hi)]]
    for i in range(2, d):
        # the first i - 1 rows form a matrix of dimension i; its top level is what row i pairs with
        pts = vertex_family(FreeParamMatrix.from_rows(rows), i).distinct
        while True:
            row = [rng.randint(lo, hi) for _ in range(i)]
            if any(row) and all(sum(a * b for a, b in zip(row, p)) >= 0 for p in pts):
                break
        rows.append(row)
    return FreeParamMatrix.from_rows(rows)

