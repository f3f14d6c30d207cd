import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toroidal.finite import (FiniteModule, ModuleSpecError, WindowCapError, a_module, check_gl_relations,
                             check_highest_weight, check_module, enveloping_dim, finite_dim_irrep, gl1,
                             gl_module_from_json, is_graded_irreducible, symmetric_power_gl2, validate_a_module,
                             w2_sigma0)
from toroidal.liealg import build_chevalley, identity_automorphism
from toroidal.linalg import Vec
from toroidal.multiloop import Multiloop
from toroidal.roots import weyl_dimension


def untwisted(label):
    alg = build_chevalley(label)
    return Multiloop(alg, [identity_automorphism(alg), identity_automorphism(alg)])


ML = {label: untwisted(label) for label in ("A1", "A2", "B2")}


def check_irrep(ml, dynkin):
    mod = finite_dim_irrep(ml, dynkin)
    assert mod.dim == weyl_dimension(ml.delta0, dynkin)
    assert check_module(ml.algebra, mod).ok
    assert check_highest_weight(ml, mod, 1).ok
    assert enveloping_dim(mod) == mod.dim ** 2  # Burnside: irreducible
    return mod


@pytest.mark.parametrize("k", range(5))
def test_sl2_irreps(k):
    mod = check_irrep(ML["A1"], [k])
    assert sorted(a[0] for a in mod.alphas) == sorted(k - 2 * i for i in range(k + 1))


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2))
def test_sl3_irreps_match_weyl(a, b):
    check_irrep(ML["A2"], [a, b])


@pytest.mark.parametrize("dynkin", [[1, 0], [0, 1], [1, 1]])
def test_so5_irreps_match_weyl(dynkin):
    check_irrep(ML["B2"], dynkin)


def test_twisted_sl3_gives_so3_irreps(sl3t):
    _, _, ml = sl3t
    dims = [finite_dim_irrep(ml, [k]).dim for k in (0, 2, 4)]
    assert dims == [1, 3, 5]


def test_non_dominant_weight_hits_the_cap():
    with pytest.raises(WindowCapError):
        finite_dim_irrep(ML["A1"], [-1], cap=8)


def test_z2_graded_a_module(sl3z2):
    _, _, ml = sl3z2
    data = {"alpha": [1], "dim": 2, "grades": [[0], [1]], "matrices": [[[0, 1, 1], [1, 0, 1]]]}
    w2 = a_module(ml, data)
    assert validate_a_module(ml, w2).ok
    env = w2_sigma0(ml, w2)
    assert env.dim == 6
    assert is_graded_irreducible(env)
    # with z acting by 0 the graded module splits
    data["matrices"] = []
    assert not validate_a_module(ml, a_module(ml, data)).ok


def test_a_module_spec_errors(sl3z2):
    _, _, ml = sl3z2
    with pytest.raises(ModuleSpecError):
        a_module(ml, {"alpha": [1, 2]})
    with pytest.raises(ModuleSpecError):
        a_module(ml, {"alpha": [1], "matrices": [[], []]})


def test_broken_module_is_reported():
    ml = ML["A1"]
    mod = finite_dim_irrep(ml, [1])
    ops = {x: dict(m) for x, m in mod.ops.items()}
    x = next(iter(ops))
    ops[x] = {c: v.scaled(2) for c, v in ops[x].items()}
    bad = FiniteModule(mod.dim, ops, mod.alphas, mod.grades, mod.domain)
    assert not check_module(ml.algebra, bad).ok


def test_gl_modules():
    assert check_gl_relations(gl1(3)).ok
    for k in range(4):
        w = symmetric_power_gl2(k)
        assert w.dim == k + 1 and check_gl_relations(w).ok
    natural = gl_module_from_json({"dim": 2, "E": [[i, j, [[i - 1, j - 1, 1]]] for i in (1, 2) for j in (1, 2)]}, 2)
    assert check_gl_relations(natural).ok
    # E_12 alone: [E_11, E_12] = E_12 fails with E_11 = 0
    assert not check_gl_relations(gl_module_from_json({"dim": 2, "E": [[1, 2, [[0, 1, 1]]]]}, 2)).ok
    bad = gl_module_from_json({"dim": 1, "E": [[1, 1, [[0, 0, 1]]], [2, 2, [[0, 0, 1]]], [1, 2, [[0, 0, 1]]]]}, 2)
    assert not check_gl_relations(bad).ok
    assert Vec({0: 1}).scaled(0) == {}
