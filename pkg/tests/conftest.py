import pytest

from toroidal.liealg import build_chevalley, identity_automorphism, twisted_transpose
from toroidal.loopmod import ModuleParams, build_Sprime, build_Tprime
from toroidal.multiloop import Multiloop
from toroidal.tau import CocycleConfig, Tau


def make_datum(name):
    if name == "sl2":
        alg = build_chevalley("A1")
        autos = [identity_automorphism(alg), identity_automorphism(alg)]
    elif name == "sl3_twisted":
        alg = build_chevalley("A2")
        autos = [twisted_transpose(alg), identity_automorphism(alg)]
    elif name == "sl3_z2":
        alg = build_chevalley("A2")
        autos = [identity_automorphism(alg), twisted_transpose(alg)]
    else:
        raise KeyError(name)
    return alg, autos, Multiloop(alg, autos)


@pytest.fixture(scope="session")
def sl2():
    return make_datum("sl2")


@pytest.fixture(scope="session")
def sl3t():
    return make_datum("sl3_twisted")


@pytest.fixture(scope="session")
def sl3z2():
    return make_datum("sl3_z2")


def make_modules(name, w2=None, **extra):
    _, _, ml = make_datum(name)
    tau = Tau(ml, CocycleConfig(1, 1))
    data = {"C0": 1, "W2": w2 or {"dynkin": [0]}}
    data.update(extra)
    params = ModuleParams.from_json(data, tau.n)
    return tau, params, build_Tprime(tau, params), build_Sprime(tau, params)


@pytest.fixture(scope="session")
def sl2_modules():
    return make_modules("sl2")


@pytest.fixture(scope="session")
def sl3_modules():
    return make_modules("sl3_twisted")
