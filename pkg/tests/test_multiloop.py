import pytest

from toroidal.liealg import build_chevalley, chevalley_involution, identity_automorphism
from toroidal.multiloop import GSigma0, Multiloop, check_assumptions_213


def piece_dim(ml, k0bar, kbar):
    return sum(1 for lab in ml.labels if lab[0] == k0bar and tuple(lab[1]) == tuple(kbar))


def test_sl3_twisted_pieces(sl3t):
    alg, autos, ml = sl3t
    rep = check_assumptions_213(alg, autos, ml=ml)
    assert rep.ok, str(rep)
    assert piece_dim(ml, 0, (0,)) == 3
    assert piece_dim(ml, 1, (0,)) == 5
    assert len(ml.h0) == 1


def test_chevalley_involution_rejected_by_first_clause():
    alg = build_chevalley("A1")
    rep = check_assumptions_213(alg, [chevalley_involution(alg), identity_automorphism(alg)])
    assert rep.status_of("(1) g(0,0) is simple") == "fail"


@pytest.mark.parametrize("name", ["sl2", "sl3t", "sl3z2"])
def test_grading_is_multiplicative(name, request):
    _, _, ml = request.getfixturevalue(name)
    for i in range(ml.dim):
        for j in range(ml.dim):
            for k in ml.algebra.bracket_basis(i, j):
                a, b, c = ml.labels[i], ml.labels[j], ml.labels[k]
                assert c[0] == (a[0] + b[0]) % ml.m0
                assert tuple(c[1]) == tuple((x + y) % m for x, y, m in zip(a[1], b[1], ml.m))
                assert tuple(c[2]) == tuple(x + y for x, y in zip(a[2], b[2]))


def test_eigenvalues_of_adapted_basis(sl3z2):
    _, autos, ml = sl3z2
    for j, x in enumerate(ml.basis):
        k0bar, kbar, _ = ml.labels[j]
        assert autos[0].apply(x) == x.scaled(ml.eigenvalue(0, k0bar))
        assert autos[1].apply(x) == x.scaled(ml.eigenvalue(1, kbar[0]))


def test_subalgebra_a_for_z2_datum(sl3z2):
    _, _, ml = sl3z2
    gs = GSigma0(ml)
    assert gs.dim == 8 and len(gs.a) == 2 and len(gs.plus) == len(gs.minus) == 3
    assert sorted(gs.a_graded) == [(0,), (1,)]


def test_h0_is_cartan_of_fixed_points(sl2):
    alg, autos, ml = sl2
    assert len(ml.g00) == 3 and len(ml.h0) == 1
    assert Multiloop(alg, autos).labels == ml.labels
