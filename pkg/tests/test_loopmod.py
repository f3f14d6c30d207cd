from fractions import Fraction

import pytest

from conftest import make_modules
from toroidal.finite import ModuleSpecError
from toroidal.gradings import Kind
from toroidal.induced import Induced, Quotient, character
from toroidal.linalg import Vec
from toroidal.liealg import build_chevalley, identity_automorphism, twisted_transpose
from toroidal.loopmod import (LoopModule, ModuleParams, TauInduction, Window, build_Tprime,
                              check_B_psi_membership, check_d0_vs_affine, check_irreducible_window,
                              check_module_axioms, check_tau0_characters, check_top_space, loop_symbols,
                              validate_params)
from toroidal.multiloop import Multiloop
from toroidal.tau import CocycleConfig, Tau

LEMMA = "ψ(K_i) = 0 for 1 ≤ i ≤ n (forced once the bounded category is nonzero)"


def test_params_gate(sl2_modules):
    tau = sl2_modules[0]
    bad = ModuleParams.from_json({"C0": 1, "psi": [1]}, 1)
    rep = validate_params(bad, tau)
    assert rep.status_of(LEMMA) == "fail"
    with pytest.raises(ModuleSpecError):
        build_Tprime(tau, bad)
    zero = validate_params(ModuleParams.from_json({"C0": 0}, 1), tau)
    assert zero.status_of("ψ(K_0) = C_0 is nonzero") == "fail"
    critical = validate_params(ModuleParams.from_json({"C0": -2}, 1), tau)
    assert critical.ok and any(c.status == "skip" for c in critical.checks)
    with pytest.raises(ModuleSpecError):
        ModuleParams.from_json({"psi": [0, 0]}, 1)


@pytest.mark.parametrize("which", ["sl2_modules", "sl3_modules"])
def test_axioms_top_space_membership(which, request):
    tau, params, tp, sp = request.getfixturevalue(which)
    assert check_module_axioms(tp, 300, 1).ok
    assert check_module_axioms(sp, 300, 2).ok
    assert check_top_space(tp, sp, 2).ok
    assert check_irreducible_window(tp, 2, 1).ok
    assert check_irreducible_window(sp, 2, 1).ok
    assert check_B_psi_membership(sp, 2).ok


def test_shape_of_tprime(sl2_modules):
    # one-dimensional W1 and W2: every Z^n-degree in the window has dimension 1
    _, _, tp, _ = sl2_modules
    ch = tp.character(2)
    assert sorted(w[1] for w in ch) == [-2, -1, 0, 1, 2]
    assert set(ch.values()) == {1}


def test_corrupted_derivation_action_fails(sl3_modules):
    tau, params, tp, _ = sl3_modules

    class Broken(LoopModule):
        def act(self, sym, v):
            out = super().act(sym, v)
            if sym[0] == "D" and sym[1] == 1 and any(sym[3]):
                out = out.scaled(2)
            return out

    rep = check_module_axioms(Broken(tau, params, tp.w, "broken"), 200, 0)
    assert not rep.ok
    assert rep.failures()[0].witness[0]["residual"]


def test_mixed_orders_need_undivided_coordinates():
    alg = build_chevalley("A2")
    autos = [identity_automorphism(alg), twisted_transpose(alg), identity_automorphism(alg)]
    tau = Tau(Multiloop(alg, autos), CocycleConfig(1, 1))
    params = ModuleParams.from_json({
        "C0": 1, "W1": {"builtin": "sym", "k": 2}, "alpha": ["1/3", "1/2"],
        "W2": {"alpha": [1], "dim": 2, "grades": [[0, 0], [1, 0]], "matrices": [[[0, 1, 1], [1, 0, 1]]]}}, 2)
    tp = build_Tprime(tau, params)
    assert check_module_axioms(tp, 200, 0).ok

    class Divided(LoopModule):
        # the E_ji coefficient read as s_j / m_j instead of s_j
        def act(self, sym, v):
            if sym[0] != "D" or sym[1] == 0:
                return super().act(sym, v)
            _, i, s0, s = sym
            i1, i2, k = v
            t = tuple(a + b for a, b in zip(k, s))
            a = i - 1
            out = Vec({(i1, i2, t): k[a] + self.params.alpha[a]})
            for j in range(self.n):
                for r, c in self.params.w1.act(j, a, {i1: 1}).items():
                    out.add_term((r, i2, t), Fraction(s[j], self.tau.m[j]) * c)
            return out

    assert not check_module_axioms(Divided(tau, params, tp.w, "divided"), 200, 0).ok


@pytest.mark.parametrize("which", ["sl2_modules", "sl3_modules"])
def test_tau0_character_equality(which, request):
    _, _, tp, sp = request.getfixturevalue(which)
    rep = check_tau0_characters(tp, sp, Window(2, 2, 2))
    assert rep.ok, rep.dumps()
    # trivial W2: S' = T', one vector per Z^n-degree of the interior
    assert sum(rep.characters["sprime"].values()) == 3


def test_quotient_sits_strictly_between(sl2_modules):
    # two steps below the top at Z-degree 0: f_a f_-a v for |a| ≤ 1 span a
    # 2-dimensional piece of the induced module, but S' has only the line
    # of W2(sigma_0) of weight -2 there
    tau, _, tp, sp = make_modules("sl2", {"dynkin": [2]})
    data = TauInduction(tau, Kind.TAU0)
    ind = Induced(data, tp)
    f = {x[3]: x for x in loop_symbols(tau, 0, 1) if data.kind(x) < 0}
    v = tp.basis_at((0,))[0]
    keys = [(tuple(sorted((f[(-a,)], f[(a,)]), key=data.sort_key)), v) for a in (0, 1)]
    plus = [x for x in loop_symbols(tau, 0, 2) if data.kind(x) > 0]
    cut = sum(character(Quotient(ind, lambda w: plus), keys).values())
    blind = sum(character(Quotient(ind, lambda w: []), keys).values())
    assert blind == 0 < cut == 1 < len(keys) == 2


def test_d0_vs_affine_sl2(sl2_modules):
    _, _, tp, sp = sl2_modules
    rep = check_d0_vs_affine(tp, sp, Window(2, 1, 2))
    assert rep.ok, rep.dumps()


def test_nontrivial_w2():
    tau, params, tp, sp = make_modules("sl2", {"dynkin": [2]})
    assert sp.w.dim == 3
    assert check_module_axioms(sp, 150, 4).ok
    assert check_top_space(tp, sp, 2).ok
    assert check_tau0_characters(tp, sp, Window(2, 2, 2)).ok
