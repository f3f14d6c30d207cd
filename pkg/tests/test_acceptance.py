"""The eleven acceptance criteria, one test each.  Every test prints a
single ACCEPTANCE line with its verdict and wall time."""

import filecmp
import time
from contextlib import contextmanager

import pytest

from conftest import make_datum, make_modules
from toroidal.cli import main
from toroidal.finite import a_module, finite_dim_irrep, w2_sigma0
from toroidal.liealg import build_chevalley, chevalley_involution, identity_automorphism
from toroidal.loopmod import (ModuleParams, Window, build_Sprime, build_Tprime, check_module_axioms,
                              check_tau0_characters, check_top_space, validate_params)
from toroidal.multiloop import check_assumptions_213
from toroidal.roots import weyl_dimension
from toroidal.tau import CocycleConfig, Tau, check_cocycle_values, check_da_equivariance, check_jacobi, da_samples
from toroidal.thin import thin_cover_lift_restrict, z2_example

LEMMA = "ψ(K_i) = 0 for 1 ≤ i ≤ n (forced once the bounded category is nonzero)"


@contextmanager
def criterion(capsys, number, title, budget=None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        took = time.perf_counter() - start
        within = budget is None or took < budget
        verdict = "PASS" if ok and within else "FAIL"
        limit = f" (budget {budget}s)" if budget else ""
        with capsys.disabled():
            print(f"\nACCEPTANCE {number:>2} {verdict}: {title} [{took:.2f}s{limit}]")
    assert within, f"criterion {number} took {took:.1f}s, budget {budget}s"


def test_01_jacobi_with_central_corrections(capsys):
    with criterion(capsys, 1, "Jacobi on 1000 stratified triples, sl3 twisted, four cocycle configs", 60):
        ml = make_datum("sl3_twisted")[2]
        for cfg in [(0, 0), (1, 0), (0, 1), (1, 1)]:
            tau = Tau(ml, CocycleConfig(*cfg))
            rep = check_jacobi(tau, tau.stratified_triples(1000, seed=cfg[0] * 2 + cfg[1]))
            assert rep.ok, rep.dumps()


def test_02_cocycle_values(capsys):
    with criterion(capsys, 2, "φ1 = m0³K0 and φ2 = −m0³K0 on (t0^m0 d0, t0^−m0 d0)"):
        for name in ("sl3_twisted", "sl2"):
            tau = Tau(make_datum(name)[2])
            assert check_cocycle_values(tau).ok
            m0 = tau.m0
            k0 = ("K", 0, 0, (0,))
            assert tau.phi1(tau.deriv(0, m0), tau.deriv(0, -m0)) == {k0: m0 ** 3}
            assert tau.phi2(tau.deriv(0, m0), tau.deriv(0, -m0)) == {k0: -m0 ** 3}


def test_03_quotient_well_defined(capsys):
    with criterion(capsys, 3, "derivations map dA into dA on 200 samples", 10):
        tau = Tau(make_datum("sl3_twisted")[2])
        assert check_da_equivariance(tau, da_samples(tau, 200, seed=0)).ok


def test_04_assumption_gate(capsys):
    with criterion(capsys, 4, "Chevalley involution rejected by clause (1); sl3 twisted passes with dims 3 and 5"):
        alg = build_chevalley("A1")
        rep = check_assumptions_213(alg, [chevalley_involution(alg), identity_automorphism(alg)])
        assert rep.status_of("(1) g(0,0) is simple") == "fail"
        alg, autos, ml = make_datum("sl3_twisted")
        rep = check_assumptions_213(alg, autos, ml=ml)
        assert rep.ok and len(rep.checks) == 3
        dims = {}
        for lab in ml.labels:
            dims[(lab[0], tuple(lab[1]))] = dims.get((lab[0], tuple(lab[1])), 0) + 1
        assert dims[(0, (0,))] == 3 and dims[(1, (0,))] == 5


def test_05_module_axioms(capsys):
    with criterion(capsys, 5, "T' and S' axioms on 500 seeded pairs, sl2 untwisted and sl3 twisted", 120):
        for name in ("sl2", "sl3_twisted"):
            _, _, tp, sp = make_modules(name)
            assert check_module_axioms(tp, 500, 11).ok
            assert check_module_axioms(sp, 500, 12).ok


def test_06_top_space(capsys):
    with criterion(capsys, 6, "singular vectors of S' under τ_0(+) = embedded T'"):
        for name, w2 in (("sl2", None), ("sl3_twisted", None), ("sl2", {"dynkin": [2]}),
                         ("sl3_twisted", {"dynkin": [2]})):
            _, _, tp, sp = make_modules(name, w2)
            rep = check_top_space(tp, sp, 2)
            assert rep.ok, rep.dumps()


def test_07_tau0_characters(capsys):
    with criterion(capsys, 7, "character of L(T') over τ_0 = character of S' on |k| ≤ 2, depth ≤ 2", 300):
        for name, w2 in (("sl2", None), ("sl3_twisted", None), ("sl2", {"dynkin": [2]}),
                         ("sl3_twisted", {"dynkin": [2]})):
            _, _, tp, sp = make_modules(name, w2)
            rep = check_tau0_characters(tp, sp, Window(2, 2, 2))
            assert rep.ok, rep.dumps()


def test_08_w2_sigma0_finite(capsys):
    with criterion(capsys, 8, "W2(sigma_0) stabilizes for dominant input; sl2 weight 2 gives dimension 3"):
        ml = make_datum("sl2")[2]
        w = w2_sigma0(ml, a_module(ml, {"dynkin": [2]}))
        assert w.dim == 3 == weyl_dimension(ml.delta0, [2])
        for k in range(5):
            assert finite_dim_irrep(ml, [k]).dim == weyl_dimension(ml.delta0, [k])
        ml3 = make_datum("sl3_twisted")[2]
        assert [finite_dim_irrep(ml3, [k]).dim for k in (0, 2, 4)] == [1, 3, 5]


def test_09_lemma_gate(capsys, tmp_path):
    with criterion(capsys, 9, "ψ(K_1) ≠ 0 rejected citing the forcing lemma; ψ(K_0) = 0 rejected"):
        for name in ("sl2", "sl3_twisted"):
            tau = Tau(make_datum(name)[2])
            bad = ModuleParams.from_json({"C0": 1, "psi": [1]}, 1)
            rep = validate_params(bad, tau)
            assert rep.status_of(LEMMA) == "fail" and rep.failures()[0].witness == {"nonzero_indices": [1]}
            with pytest.raises(ValueError):
                build_Sprime(tau, bad)
            zero = validate_params(ModuleParams.from_json({"C0": 0}, 1), tau)
            assert zero.status_of("ψ(K_0) = C_0 is nonzero") == "fail"
            with pytest.raises(ValueError):
                build_Tprime(tau, ModuleParams.from_json({"C0": 0}, 1))
        cfg = tmp_path / "psi.json"
        cfg.write_text('{"algebra": {"type": "A2"}, "automorphisms": [{"builtin": "twisted_transpose"}, '
                       '{"builtin": "identity"}], "module": {"C0": 1, "psi": [1]}}')
        assert main(["verify-modules", "--config", str(cfg), "--out", str(tmp_path / "o")]) == 1
        assert LEMMA in (tmp_path / "o" / "module_parameters.json").read_text(encoding="utf-8")


def test_10_thin_covering_roundtrip(capsys):
    with criterion(capsys, 10, "Z/2 thin cover (total dim 3): lift, restrict, N a summand of N_gr"):
        ml = make_datum("sl3_z2")[2]
        data = z2_example(ml)
        assert data.ngr.dim + data.n.dim <= 4
        rep = thin_cover_lift_restrict(ml, data)
        assert rep.ok, str(rep)
        assert rep.status_of("restricting the lifted cover to the top returns {π(N_k)}") == "pass"
        assert rep.status_of("N_gr: N is a summand: some module map φ: N -> N_gr has π∘φ = id") == "pass"


def test_11_determinism(capsys, tmp_path):
    with criterion(capsys, 11, "two verify-modules runs with one seed give byte-identical reports"):
        a, b = tmp_path / "a", tmp_path / "b"
        args = ["verify-modules", "--config", "sl2_untwisted", "--seed", "7", "--window", "k=2,depth=2,height=2"]
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        names = sorted(p.name for p in a.iterdir())
        assert names == sorted(p.name for p in b.iterdir()) and "summary.json" in names
        match, mismatch, errors = filecmp.cmpfiles(a, b, names, shallow=False)
        assert not mismatch and not errors
