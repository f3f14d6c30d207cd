"""A short tour: build τ for twisted sl3, the modules T' and S', compare
characters, then run a Z/2 thin covering.  Run with ``python3 demos/walkthrough.py``."""

from toroidal import CocycleConfig, Multiloop, Tau, Window, build_chevalley, check_jacobi, identity_automorphism
from toroidal import twisted_transpose
from toroidal.loopmod import ModuleParams, build_Sprime, build_Tprime, check_tau0_characters, character_json
from toroidal.thin import thin_cover_lift_restrict, z2_example

alg = build_chevalley("A2")
ml = Multiloop(alg, [twisted_transpose(alg), identity_automorphism(alg)])
tau = Tau(ml, CocycleConfig(1, 1))
print(check_jacobi(tau, tau.stratified_triples(270, seed=0)))

params = ModuleParams.from_json({"C0": 1, "W2": {"dynkin": [2]}}, tau.n)
tp, sp = build_Tprime(tau, params), build_Sprime(tau, params)
print("dim W2 =", tp.w.dim, " dim W2(sigma_0) =", sp.w.dim)
rep = check_tau0_characters(tp, sp, Window(2, 2, 2))
print(rep)
for row in character_json(rep.characters["sprime"], tau.n)[:6]:
    print("  ", row)

ml2 = Multiloop(alg, [identity_automorphism(alg), twisted_transpose(alg)])
thin = thin_cover_lift_restrict(ml2, z2_example(ml2))
print(thin)
print(thin.dims)
