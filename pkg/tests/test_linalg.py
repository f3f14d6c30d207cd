from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from toroidal.linalg import (Echelon, Vec, enveloping_algebra, intersect, is_absolutely_irreducible,
                             is_semisimple_algebra, kernel, mat_apply, rank, same_span)

entries = st.integers(min_value=-3, max_value=3)


@st.composite
def columns(draw):
    rows = draw(st.integers(1, 5))
    cols = draw(st.integers(1, 6))
    return [Vec({i: draw(entries) for i in range(rows)}) for _ in range(cols)], rows


def as_sympy(cols, rows):
    return sympy.Matrix(rows, len(cols), lambda i, j: cols[j].get(i, 0))


@settings(max_examples=80, deadline=None)
@given(columns())
def test_rank_and_kernel_against_sympy(data):
    cols, rows = data
    m = as_sympy(cols, rows)
    assert rank(cols) == m.rank()
    ker = kernel(cols)
    assert len(ker) == len(cols) - m.rank()
    for rel in ker:
        total = Vec()
        for j, c in rel.items():
            total.iadd(cols[j], c)
        assert not total


@settings(max_examples=60, deadline=None)
@given(columns())
def test_coordinates_reconstruct(data):
    cols, _ = data
    ech = Echelon()
    for t, c in enumerate(cols):
        ech.add(c, tag=t)
    target = Vec()
    for t, c in enumerate(cols):
        target.iadd(c, t + 1)
    coords = ech.coordinates(target)
    rebuilt = Vec()
    for t, c in coords.items():
        rebuilt.iadd(cols[t], c)
    assert rebuilt == target


@settings(max_examples=40, deadline=None)
@given(columns(), columns())
def test_intersection_dimension(a, b):
    va, vb = a[0], b[0]
    inter = intersect(va, vb)
    assert rank(inter) == rank(va) + rank(vb) - rank(list(va) + list(vb))
    for v in inter:
        assert Echelon().add(v) is None
        ea, eb = Echelon(), Echelon()
        for x in va:
            ea.add(x)
        for x in vb:
            eb.add(x)
        assert ea.contains(v) and eb.contains(v)


def test_vec_drops_zeros():
    v = Vec({1: Fraction(1, 2)})
    v.iadd({1: Fraction(-1, 2), 2: 3})
    assert v == {2: 3}
    assert same_span([{0: 1}, {1: 1}], [{0: 1, 1: 1}, {0: 1, 1: -1}])


def test_burnside_and_semisimplicity():
    e = {1: Vec({0: 1})}
    f = {0: Vec({1: 1})}
    assert is_absolutely_irreducible([e, f], 2)
    assert not is_absolutely_irreducible([e], 2)
    assert is_semisimple_algebra(enveloping_algebra([e, f], 2))
    # upper triangular algebra has a radical
    assert not is_semisimple_algebra(enveloping_algebra([e], 2))
    assert mat_apply(e, {1: 2}) == {0: 2}
