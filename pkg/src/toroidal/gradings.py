"""Root-space bookkeeping for τ: weights of basis symbols and the three
triangular decompositions (plus the one of g(sigma_0))."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product

from .reports import Report
from .roots import enlarge_roots  # noqa: F401  (re-exported)
from .tau import Tau

MINUS, ZERO, PLUS = -1, 0, 1


class Kind(Enum):
    AFFINE = "affine"
    D0 = "d0"
    TAU0 = "tau0"
    GSIGMA0 = "gsigma0"


@dataclass(frozen=True)
class WeightVector:
    """alpha (h(0)-coordinates), k0 (δ0 coefficient), k (δ_k coefficients) and
    the w-coordinates, which never enter any bracket and are kept at zero."""

    alpha: tuple
    k0: int
    k: tuple
    w: tuple

    def __add__(self, other):
        return WeightVector(tuple(a + b for a, b in zip(self.alpha, other.alpha)), self.k0 + other.k0,
                            tuple(a + b for a, b in zip(self.k, other.k)),
                            tuple(a + b for a, b in zip(self.w, other.w)))

    def key(self):
        return (self.k0, self.k, self.alpha)

    def to_json(self):
        return {"alpha": [str(a) for a in self.alpha], "k0": self.k0, "k": list(self.k), "w": [str(x) for x in self.w]}


def weight_of(tau: Tau, sym) -> WeightVector:
    alpha, k0, k = tau.weight(sym)
    return WeightVector(alpha, k0, k, tuple(Fraction(0) for _ in range(tau.n + 1)))


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def classify(tau: Tau, sym, kind: Kind) -> int:
    """MINUS / ZERO / PLUS of a basis symbol (for GSIGMA0: an adapted index)."""
    ml = tau.ml
    if kind is Kind.GSIGMA0:
        j = sym
        if ml.k0bar(j) != 0:
            raise ValueError("symbol is not in g(sigma_0)")
        return ml.sign(ml.alpha(j))
    alpha, k0, _ = tau.weight(sym)
    if kind is Kind.D0:
        return _sgn(k0)
    if kind is Kind.AFFINE:
        return _sgn(k0) if k0 else ml.sign(alpha)
    if kind is Kind.TAU0:
        if k0 != 0:
            raise ValueError("TAU0 classifies symbols of τ0 (d0-degree 0) only")
        return ml.sign(alpha)
    raise ValueError(kind)


def symbols_in_window(tau: Tau, k0_range, k_bound: int) -> list:
    """All basis symbols with d0-degree in ``k0_range`` and |k|_∞ ≤ k_bound,
    central symbols in normal form only."""
    out = []
    n = tau.n
    for k0 in k0_range:
        for k in product(range(-k_bound, k_bound + 1), repeat=n):
            for j in tau.ml.pieces.get(tau.ml.reduce_degree(k0, k), []):
                out.append(("L", j, k0, k))
            if tau.in_gamma(k0, k):
                for i in range(n + 1):
                    out.append(("D", i, k0, k))
                    for sym in tau.normalize_central(i, k0, k):
                        if sym[1] == i and sym not in out:
                            out.append(sym)
    return out


def decompose_window(tau: Tau, kind: Kind, k0_range, k_bound: int) -> list:
    rows = []
    names = {MINUS: "MINUS", ZERO: "ZERO", PLUS: "PLUS"}
    for sym in symbols_in_window(tau, k0_range, k_bound):
        if kind is Kind.TAU0 and sym[2] != 0:
            continue
        w = weight_of(tau, sym)
        rows.append({"symbol": Tau.to_json({sym: 1})[0], "weight": w.to_json(), "class": names[classify(tau, sym, kind)]})
    return rows


def check_gradings(tau: Tau, k0_range=range(-1, 2), k_bound: int = 1, pairs: int = 300, seed: int = 0) -> Report:
    """Weights add under the bracket, ZERO parts close, PLUS·PLUS stays
    PLUS, and AFFINE-ZERO = D0-ZERO ∩ TAU0-ZERO on a symbol window."""
    rep = Report("gradings")
    syms = symbols_in_window(tau, k0_range, k_bound)
    rng = random.Random(seed)
    bad_w, bad_c = None, None
    for _ in range(pairs):
        a, b = rng.choice(syms), rng.choice(syms)
        br = tau.bracket_symbols(a, b)
        wa, wb = weight_of(tau, a), weight_of(tau, b)
        for sym in br:
            if bad_w is None and weight_of(tau, sym).key() != (wa + wb).key():
                bad_w = {"pair": Tau.to_json({a: 1}) + Tau.to_json({b: 1}), "term": Tau.to_json({sym: 1})}
        for kind in (Kind.AFFINE, Kind.D0):
            ca, cb = classify(tau, a, kind), classify(tau, b, kind)
            if ca == cb and ca != MINUS:
                for sym in br:
                    if bad_c is None and classify(tau, sym, kind) != ca:
                        bad_c = {"kind": kind.value, "class": ca, "pair": Tau.to_json({a: 1}) + Tau.to_json({b: 1})}
    rep.add("weight_of([a, b]) = weight_of(a) + weight_of(b) on every term", bad_w is None, bad_w)
    rep.add("ZERO is closed and PLUS·PLUS ⊆ PLUS", bad_c is None, bad_c)
    level = [s for s in syms if s[2] == 0]
    aff = {s for s in syms if classify(tau, s, Kind.AFFINE) == ZERO}
    both = {s for s in level if classify(tau, s, Kind.D0) == ZERO and classify(tau, s, Kind.TAU0) == ZERO}
    rep.add("AFFINE-ZERO = D0-ZERO ∩ TAU0-ZERO", aff == both,
            None if aff == both else {"only_affine": len(aff - both), "only_pair": len(both - aff)})
    return rep
