import pytest

from toroidal.gradings import MINUS, PLUS, ZERO, Kind, check_gradings, classify, decompose_window, weight_of
from toroidal.tau import CocycleConfig, Tau


@pytest.fixture(scope="module")
def tau2(sl2):
    return Tau(sl2[2], CocycleConfig(1, 1))


def test_weights_of_examples(tau2):
    ml = tau2.ml
    e = next(j for j in range(ml.dim) if ml.sign(ml.alpha(j)) > 0)
    w = weight_of(tau2, ("L", e, 1, (1,)))
    assert (w.alpha, w.k0, w.k) == (ml.alpha(e), 1, (1,))
    assert all(x == 0 for x in w.w)
    d = weight_of(tau2, ("D", 0, 0, (0,)))
    assert d.k0 == 0 and not any(d.alpha)
    k = weight_of(tau2, ("K", 0, tau2.m0, (0,)))
    assert k.k0 == tau2.m0 and k.k == (0,)


def test_classify_examples(tau2):
    ml = tau2.ml
    e = next(j for j in range(ml.dim) if ml.sign(ml.alpha(j)) > 0)
    f = next(j for j in range(ml.dim) if ml.sign(ml.alpha(j)) < 0)
    for kind in (Kind.AFFINE, Kind.D0, Kind.TAU0):
        assert classify(tau2, ("D", 1, 0, (0,)), kind) == ZERO
    assert classify(tau2, ("L", e, 0, (1,)), Kind.D0) == ZERO
    assert classify(tau2, ("L", e, 0, (1,)), Kind.TAU0) == PLUS
    assert classify(tau2, ("L", f, 2, (0,)), Kind.D0) == PLUS
    assert classify(tau2, ("L", f, 2, (0,)), Kind.AFFINE) == PLUS
    assert classify(tau2, ("L", e, -1, (0,)), Kind.AFFINE) == MINUS
    with pytest.raises(ValueError):
        classify(tau2, ("L", f, 2, (0,)), Kind.TAU0)


@pytest.mark.parametrize("name", ["sl2", "sl3t", "sl3z2"])
def test_decomposition_invariants(name, request):
    tau = Tau(request.getfixturevalue(name)[2], CocycleConfig(1, 1))
    rep = check_gradings(tau, pairs=200)
    assert rep.ok, str(rep)


def test_decompose_window_rows(tau2):
    rows = decompose_window(tau2, Kind.D0, range(-1, 2), 1)
    assert {r["class"] for r in rows} == {"MINUS", "ZERO", "PLUS"}
    for r in rows:
        want = "ZERO" if r["weight"]["k0"] == 0 else ("PLUS" if r["weight"]["k0"] > 0 else "MINUS")
        assert r["class"] == want
    tau0 = decompose_window(tau2, Kind.TAU0, [0], 1)
    assert all(r["weight"]["k0"] == 0 for r in tau0)
