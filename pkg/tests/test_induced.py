"""The generic induced-module engine on a toy algebra: sl2 with its Verma
modules, where everything is known in closed form."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from toroidal.induced import MINUS, PLUS, ZERO, Induced, Quotient, character, monomials
from toroidal.linalg import Vec


class SL2:
    # symbols: "e", "h", "f"
    table = {("e", "f"): {"h": 1}, ("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}}

    def bracket(self, a, b):
        if (a, b) in self.table:
            return Vec(self.table[(a, b)])
        if (b, a) in self.table:
            return Vec(self.table[(b, a)]).scaled(-1)
        return Vec()

    def kind(self, x):
        return {"e": PLUS, "h": ZERO, "f": MINUS}[x]

    def weight(self, x):
        return {"e": 2, "h": 0, "f": -2}[x]

    def add(self, u, v):
        return u + v

    def sort_key(self, x):
        return x


class Top:
    def __init__(self, lam):
        self.lam = lam

    def act(self, x, v):
        return Vec({v: self.lam}) if x == "h" else Vec()

    def weight(self, v):
        return self.lam


def verma(lam):
    return Induced(SL2(), Top(lam))


@settings(max_examples=30, deadline=None)
@given(st.integers(-6, 6), st.integers(0, 6))
def test_e_on_f_powers(lam, k):
    # e f^k v = k (lam - k + 1) f^(k-1) v
    ind = verma(Fraction(lam))
    got = ind.act("e", (("f",) * k, 0))
    want = Vec({(("f",) * (k - 1), 0): k * (lam - k + 1)}) if k else Vec()
    assert got == want


@settings(max_examples=30, deadline=None)
@given(st.integers(-3, 6))
def test_quotient_dimension(lam):
    ind = verma(Fraction(lam))
    quot = Quotient(ind, lambda w: ["e"])
    keys = [(("f",) * k, 0) for k in range(10)]
    ch = character(quot, keys)
    total = sum(ch.values())
    assert total == (lam + 1 if lam >= 0 else 10)


def test_h_acts_by_weight():
    ind = verma(Fraction(3))
    key = (("f", "f"), 0)
    assert ind.act("h", key) == Vec({key: -1})
    assert ind.weight(key) == -1


def test_monomials_budget():
    out = monomials(["a", "b"], sort_key=lambda x: x, cost=lambda x: 1 if x == "a" else 2, budget=3)
    assert set(out) == {(), ("a",), ("b",), ("a", "a"), ("a", "b"), ("a", "a", "a")}
