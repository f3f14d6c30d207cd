"""The twisted full toroidal Lie algebra as a computable Lie algebra.

Basis symbols are plain tuples so they hash and sort cheaply:

* ``("L", j, k0, k)``  X_j ⊗ t0^k0 t^k, X_j the j-th adapted basis vector;
* ``("K", i, s0, s)``  t0^s0 t^s K_i  (stored in dA-normal form only);
* ``("D", i, s0, s)``  t0^s0 t^s d_i.

Elements are :class:`~toroidal.linalg.Vec` maps from symbols to scalars.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import scalar_from_json, scalar_to_json
from .linalg import Echelon, Vec
from .multiloop import Multiloop
from .reports import Report


@dataclass(frozen=True)
class CocycleConfig:
    c1: object = 0
    c2: object = 0

    @classmethod
    def parse(cls, text: str) -> "CocycleConfig":
        a, b = text.split(",")
        return cls(Fraction(a), Fraction(b))

    def to_json(self):
        return [scalar_to_json(self.c1), scalar_to_json(self.c2)]


class DegreeError(ValueError):
    pass


def exponents(s0: int, s) -> tuple:
    return (s0,) + tuple(s)


def _shift(k, r):
    return tuple(a + b for a, b in zip(k, r))


class Tau:
    """Bracket of τ = L(g, σ) ⊕ Z(m0, m) ⊕ D(m0, m) for a given multiloop
    datum and cocycle ``φ = c1 φ1 + c2 φ2``."""

    def __init__(self, ml: Multiloop, cfg: CocycleConfig | None = None):
        self.ml = ml
        self.n = ml.n
        self.m0, self.m = ml.m0, ml.m
        self.cfg = cfg or CocycleConfig()
        self._cache = {}

    # -- symbols -----------------------------------------------------------------
    def in_gamma(self, s0: int, s) -> bool:
        return s0 % self.m0 == 0 and all(x % m == 0 for x, m in zip(s, self.m))

    def loop(self, j: int, k0: int, k) -> tuple:
        k = tuple(k)
        if self.ml.reduce_degree(k0, k) != (self.ml.k0bar(j), self.ml.kbar(j)):
            raise DegreeError(f"basis vector {j} lies in g{self.ml.labels[j][:2]}, not at degree {(k0, k)}")
        return ("L", j, k0, k)

    def deriv(self, i: int, s0: int = 0, s=None) -> tuple:
        s = tuple(s) if s is not None else (0,) * self.n
        if not self.in_gamma(s0, s):
            raise DegreeError(f"degree {(s0, s)} is not in Γ0 × Γ")
        return ("D", i, s0, s)

    def central(self, i: int, s0: int = 0, s=None, c=1) -> Vec:
        s = tuple(s) if s is not None else (0,) * self.n
        return self.normalize_central(i, s0, s, c)

    def normalize_central(self, i: int, s0: int, s, c=1) -> Vec:
        """dA-normal form of ``c t0^s0 t^s K_i``: at nonzero degree the label
        equal to the first index with nonzero exponent is eliminated."""
        s = tuple(s)
        if not self.in_gamma(s0, s):
            raise DegreeError(f"degree {(s0, s)} is not in Γ0 × Γ")
        out = Vec()
        e = exponents(s0, s)
        piv = next((p for p, x in enumerate(e) if x), None)
        if piv is None or i != piv:
            out.add_term(("K", i, s0, s), c)
            return out
        for p, x in enumerate(e):
            if p != piv and x:
                out.add_term(("K", p, s0, s), -Fraction(x, e[piv]) * c)
        return out

    def central_sum(self, coeffs, s0: int, s, c=1) -> Vec:
        """``c Σ_p coeffs[p] t0^s0 t^s K_p`` in normal form."""
        out = Vec()
        for p, x in enumerate(coeffs):
            if x:
                out.iadd(self.normalize_central(p, s0, s), c * x)
        return out

    def element(self, sym) -> Vec:
        if sym[0] == "K":
            return self.normalize_central(sym[1], sym[2], sym[3])
        return Vec({sym: 1})

    # -- degrees and weights --------------------------------------------------------
    @staticmethod
    def degree(sym) -> tuple:
        return sym[2], sym[3]

    def weight(self, sym) -> tuple:
        """(alpha, k0, k): the h(0)-weight is nonzero for loop symbols only."""
        alpha = self.ml.alpha(sym[1]) if sym[0] == "L" else self.ml.zero_weight()
        return alpha, sym[2], sym[3]

    # -- bracket -----------------------------------------------------------------------
    def bracket_symbols(self, a, b) -> Vec:
        key = (a, b)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._bracket(a, b)
            self._cache[key] = hit
        return hit

    def _bracket(self, a, b) -> Vec:
        ka, kb = a[0], b[0]
        if ka == "L" and kb == "L":
            return self._loop_loop(a, b)
        if ka == "K" or kb == "K":
            if ka == "D":
                return self._deriv_central(a, b)
            if kb == "D":
                return -self._deriv_central(b, a)
            return Vec()
        if ka == "D" and kb == "L":
            return self._deriv_loop(a, b)
        if ka == "L" and kb == "D":
            return -self._deriv_loop(b, a)
        return self._deriv_deriv(a, b)

    def _loop_loop(self, a, b) -> Vec:
        _, i, k0, k = a
        _, j, l0, l = b
        d0, d = k0 + l0, _shift(k, l)
        out = Vec()
        for c, x in self.ml.algebra.bracket_basis(i, j).items():
            out.add_term(("L", c, d0, d), x)
        p = self.ml.algebra.pair_basis(i, j)
        if p:
            out.iadd(self.central_sum(exponents(k0, k), d0, d, p))
        return out

    def _deriv_loop(self, a, b) -> Vec:
        _, i, r0, r = a
        _, j, k0, k = b
        c = exponents(k0, k)[i]
        if not c:
            return Vec()
        return Vec({("L", j, k0 + r0, _shift(k, r)): c})

    def _deriv_central(self, a, b) -> Vec:
        _, i, r0, r = a
        _, j, s0, s = b
        d0, d = r0 + s0, _shift(r, s)
        out = Vec()
        sa = exponents(s0, s)[i]
        if sa:
            out.iadd(self.normalize_central(j, d0, d), sa)
        if i == j:
            out.iadd(self.central_sum(exponents(r0, r), d0, d))
        return out

    def phi1(self, a, b) -> Vec:
        _, i, r0, r = a
        _, j, s0, s = b
        coeff = -exponents(s0, s)[i] * exponents(r0, r)[j]
        if not coeff:
            return Vec()
        return self.central_sum(exponents(r0, r), r0 + s0, _shift(r, s), coeff)

    def phi2(self, a, b) -> Vec:
        _, i, r0, r = a
        _, j, s0, s = b
        coeff = exponents(r0, r)[i] * exponents(s0, s)[j]
        if not coeff:
            return Vec()
        return self.central_sum(exponents(r0, r), r0 + s0, _shift(r, s), coeff)

    def _deriv_deriv(self, a, b) -> Vec:
        _, i, r0, r = a
        _, j, s0, s = b
        d0, d = r0 + s0, _shift(r, s)
        out = Vec()
        sa = exponents(s0, s)[i]
        rb = exponents(r0, r)[j]
        out.add_term(("D", j, d0, d), sa)
        out.add_term(("D", i, d0, d), -rb)
        if self.cfg.c1:
            out.iadd(self.phi1(a, b), self.cfg.c1)
        if self.cfg.c2:
            out.iadd(self.phi2(a, b), self.cfg.c2)
        return out

    def bracket(self, x: dict, y: dict) -> Vec:
        out = Vec()
        for a, p in x.items():
            for b, q in y.items():
                v = self.bracket_symbols(a, b)
                if v:
                    out.iadd(v, p * q)
        return out

    def jacobiator(self, x, y, z) -> Vec:
        br = self.bracket
        return br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))

    # -- sampling ---------------------------------------------------------------------------
    def random_symbol(self, rng: random.Random, kind: str, bound: int = 2) -> Vec:
        """A random basis element of the given kind ('L', 'K' or 'D') with
        degrees in ``[-bound, bound]`` (in units of m for K and D)."""
        if kind == "L":
            while True:
                k0 = rng.randint(-bound, bound)
                k = tuple(rng.randint(-bound, bound) for _ in range(self.n))
                piece = self.ml.pieces.get(self.ml.reduce_degree(k0, k))
                if piece:
                    return Vec({("L", rng.choice(piece), k0, k): 1})
        s0 = self.m0 * rng.randint(-bound, bound)
        s = tuple(m * rng.randint(-bound, bound) for m in self.m)
        i = rng.randint(0, self.n)
        if kind == "D":
            return Vec({("D", i, s0, s): 1})
        while True:
            v = self.normalize_central(i, s0, s)
            if v:
                return v
            i = rng.randint(0, self.n)

    def stratified_triples(self, count: int, seed: int, bound: int = 2) -> list:
        """Seeded triples cycling through all 27 kind patterns (L/K/D)^3."""
        rng = random.Random(seed)
        kinds = [(a, b, c) for a in "LKD" for b in "LKD" for c in "LKD"]
        out = []
        for t in range(count):
            pattern = kinds[t % len(kinds)]
            out.append(tuple(self.random_symbol(rng, k, bound) for k in pattern))
        return out

    # -- serialization ------------------------------------------------------------------------
    @staticmethod
    def to_json(x: dict) -> list:
        kinds = {"L": "loop", "K": "central", "D": "deriv"}
        out = []
        for sym, c in sorted(x.items()):
            out.append({"kind": kinds[sym[0]], "indices": [sym[1]], "exponents": [sym[2], list(sym[3])],
                        "scalar": scalar_to_json(c)})
        return out

    @staticmethod
    def from_json(data: list) -> Vec:
        kinds = {"loop": "L", "central": "K", "deriv": "D"}
        out = Vec()
        for t in data:
            e0, e = t["exponents"]
            out.add_term((kinds[t["kind"]], int(t["indices"][0]), int(e0), tuple(e)), scalar_from_json(t["scalar"]))
        return out

    def show(self, x: dict) -> str:
        parts = []
        for sym, c in sorted(x.items()):
            kind, i, s0, s = sym
            name = {"L": f"X{i}", "K": f"K{i}", "D": f"d{i}"}[kind]
            parts.append(f"{c}*{name}({s0},{','.join(map(str, s))})")
        return " + ".join(parts) or "0"


def check_jacobi(tau: Tau, samples) -> Report:
    """Jacobiator of every sampled triple of elements must vanish."""
    rep = Report("jacobi")
    bad = []
    for x, y, z in samples:
        r = tau.jacobiator(x, y, z)
        if r:
            bad.append({"triple": [Tau.to_json(x), Tau.to_json(y), Tau.to_json(z)], "residual": Tau.to_json(r)})
    rep.add(f"jacobi on {len(samples)} triples (c1={tau.cfg.c1}, c2={tau.cfg.c2})", not bad,
            bad[:3] if bad else None)
    return rep


def relation_vector(s0: int, s) -> Vec:
    """Σ_p e_p t0^s0 t^s K_p in Ω (unreduced, keyed by p)."""
    return Vec((p, x) for p, x in enumerate(exponents(s0, s)))


def raw_derivation_action(a: int, r0: int, r, v: dict, s0: int, s) -> tuple:
    """Act with t0^r0 t^r d_a on a vector of Ω concentrated at degree (s0, s)
    (keys: labels p of K_p); returns (degree, vector)."""
    out = Vec()
    sexp = exponents(s0, s)
    rexp = exponents(r0, r)
    for b, c in v.items():
        if sexp[a]:
            out.add_term(b, c * sexp[a])
        if a == b:
            for p, x in enumerate(rexp):
                out.add_term(p, c * x)
    return (r0 + s0, _shift(r, s)), out


def check_da_equivariance(tau: Tau, samples) -> Report:
    """Each sampled derivation maps the dA relation at each sampled degree
    into dA (span of the relation vector at the target degree)."""
    rep = Report("dA-equivariance")
    bad = []
    for (a, r0, r), (s0, s) in samples:
        (d0, d), img = raw_derivation_action(a, r0, r, relation_vector(s0, s), s0, s)
        ech = Echelon()
        ech.add(relation_vector(d0, d))
        if not ech.contains(img):
            bad.append({"derivation": [a, r0, list(r)], "degree": [s0, list(s)],
                        "image": {str(k): scalar_to_json(c) for k, c in img.items()}})
    rep.add(f"dA maps into dA on {len(samples)} samples", not bad, bad[:3] if bad else None)
    return rep


def da_samples(tau: Tau, count: int, seed: int, bound: int = 3) -> list:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        a = rng.randint(0, tau.n)
        r0 = tau.m0 * rng.randint(-bound, bound)
        r = tuple(m * rng.randint(-bound, bound) for m in tau.m)
        s0 = tau.m0 * rng.randint(-bound, bound)
        s = tuple(m * rng.randint(-bound, bound) for m in tau.m)
        out.append(((a, r0, r), (s0, s)))
    return out



def check_cocycle_values(tau: Tau) -> Report:
    """φ1 and φ2 on (t0^m0 d0, t0^-m0 d0) against the values m0³K0 and
    −m0³K0 obtained by substituting into the defining formulas by hand."""
    rep = Report("cocycle values")
    m0, zero = tau.m0, (0,) * tau.n
    a, b = tau.deriv(0, m0, zero), tau.deriv(0, -m0, zero)
    k0 = ("K", 0, 0, zero)
    for name, fn, want in (("φ1", tau.phi1, m0 ** 3), ("φ2", tau.phi2, -m0 ** 3)):
        got = fn(a, b)
        rep.add(f"{name}(t0^m0 d0, t0^-m0 d0) = {want} K0", got == Vec({k0: want}), {"got": Tau.to_json(got)})
    return rep
