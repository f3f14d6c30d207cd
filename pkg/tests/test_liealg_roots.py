from fractions import Fraction

import pytest
import sympy

from toroidal.liealg import (algebra_from_json, automorphism_from_json, build_chevalley, chevalley_involution,
                             identity_automorphism, twisted_transpose, validate_automorphisms)
from toroidal.linalg import Vec
from toroidal.roots import enlarge_roots, weyl_dimension


@pytest.mark.parametrize("label,dim,rank,hv", [("A1", 3, 1, 2), ("A2", 8, 2, 3), ("B2", 10, 2, 3)])
def test_chevalley_structure(label, dim, rank, hv):
    alg = build_chevalley(label)
    assert (alg.dim, alg.rank, alg.dual_coxeter) == (dim, rank, hv)
    assert alg.check_structure().ok


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_brackets_match_matrix_commutators(label):
    alg = build_chevalley(label)
    for i in range(alg.dim):
        for j in range(alg.dim):
            a = sympy.Matrix(_dense(alg.matrices[i], alg))
            b = sympy.Matrix(_dense(alg.matrices[j], alg))
            want = a * b - b * a
            got = sympy.zeros(*want.shape)
            for k, c in alg.bracket_basis(i, j).items():
                got += sympy.Rational(str(c)) * sympy.Matrix(_dense(alg.matrices[k], alg))
            assert got == want


def _dense(m, alg):
    n = max(max(m, default=0), max((max(col, default=0) for col in m.values()), default=0)) + 1
    size = {3: 2, 8: 3, 10: 5}[alg.dim]
    assert n <= size
    return [[m.get(c, {}).get(r, 0) for c in range(size)] for r in range(size)]


def test_killing_form_proportional_to_trace_form():
    alg = build_chevalley("A2")
    for i in range(alg.dim):
        for j in range(alg.dim):
            assert alg.killing({i: 1}, {j: 1}) == 2 * alg.dual_coxeter * alg.pair_basis(i, j)


def test_automorphism_validation():
    alg = build_chevalley("A2")
    assert validate_automorphisms(alg, [twisted_transpose(alg), identity_automorphism(alg)]).ok
    assert validate_automorphisms(alg, [chevalley_involution(alg)]).ok
    broken = automorphism_from_json(alg, {"builtin": "twisted_transpose", "order": 4})
    rep = validate_automorphisms(alg, [broken])
    assert rep.status_of("sigma0: order 4") == "fail"


def test_raw_import_roundtrip():
    alg = build_chevalley("A1")
    again = algebra_from_json(alg.to_json())
    assert again.dim == 3 and all(again.bracket_basis(i, j) == alg.bracket_basis(i, j)
                                  for i in range(3) for j in range(3))


def weyl_oracle(label, d, rs=None):
    if label == "A1":
        return d[0] + 1
    if label == "A2":
        a, b = d
        return (a + 1) * (b + 1) * (a + b + 2) // 2
    # B2: put the label of the short simple root in b
    a, b = d if rs.norm2(rs.simple[0]) > rs.norm2(rs.simple[1]) else d[::-1]
    return (a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3) // 6


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_weyl_dimension_formula(label):
    rs = build_chevalley(label).root_system
    labels = [(k,) for k in range(6)] if label == "A1" else [(a, b) for a in range(4) for b in range(4)]
    for d in labels:
        assert weyl_dimension(rs, d) == weyl_oracle(label, d, rs)


def test_enlarged_roots():
    a2 = build_chevalley("A2").root_system
    assert len(enlarge_roots(a2)) == 7
    b2 = build_chevalley("B2").root_system
    assert len(enlarge_roots(b2)) == 8 + 4 + 1
    a1 = build_chevalley("A1").root_system
    assert len(enlarge_roots(a1, False)) == 3
    assert len(enlarge_roots(a1, True)) == 5
    for r in enlarge_roots(b2):
        assert all(isinstance(x, Fraction) for x in r)


def test_cartan_types():
    for label in ("A1", "A2", "B2"):
        assert build_chevalley(label).root_system.cartan_type() == label
    assert Vec({0: 1}) == {0: 1}
