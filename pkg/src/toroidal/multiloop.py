"""Simultaneous eigenspaces g(k0, k, alpha) of commuting finite-order
automorphisms, the standing assumptions on g(0,0), and the subalgebras
a and g(sigma_0)."""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycScalar, lcm, root_of_unity, simplify
from .linalg import Echelon, Vec, intersect, is_absolutely_irreducible, kernel
from .liealg import FiniteAutomorphism, LieAlgebra, SimpleLieAlgebra
from .reports import Report
from .roots import RootSystem, enlarge_roots


class NotDiagonalizableError(ValueError):
    pass


def _eigenvectors(sigma: FiniteAutomorphism, space: list[Vec], value) -> list[Vec]:
    cols = [sigma.apply(b) - b.scaled(value) for b in space]
    out = []
    for rel in kernel(cols):
        v = Vec()
        for t, c in rel.items():
            v.iadd(space[t], c)
        out.append(_normalize(v))
    return out


def _normalize(v: Vec) -> Vec:
    """Scale so the leading coefficient is 1."""
    lead = v[min(v)]
    return v if lead == 1 else v.scaled(1 / lead)


class Multiloop:
    """Adapted basis of g: every basis vector lies in one g(k0bar, kbar, alpha).

    ``labels[j] = (k0bar, kbar, alpha)``; ``algebra`` holds the structure
    constants and form in the adapted basis.  Eigenvalues of sigma_i are
    ``xi_i ** k`` with ``xi_i = zeta_N ** (N / m_i)``.
    """

    def __init__(self, alg: SimpleLieAlgebra, autos: list[FiniteAutomorphism], a1_as_b1: bool | None = None):
        if not autos:
            raise ValueError("need sigma_0 at least")
        self.alg, self.autos = alg, list(autos)
        self.n = len(autos) - 1
        self.m0 = autos[0].order
        self.m = tuple(s.order for s in autos[1:])
        self.N = lcm(*[s.order for s in autos])
        self.a1_as_b1 = a1_as_b1
        self._build()

    # -- construction ---------------------------------------------------------
    def eigenvalue(self, i: int, k: int):
        m = self.autos[i].order
        return simplify(root_of_unity(self.N, (k % m) * (self.N // m)))

    def _build(self):
        alg = self.alg
        std = [Vec({j: 1}) for j in range(alg.dim)]
        self.g00 = std
        for s in self.autos:
            self.g00 = _eigenvectors(s, self.g00, 1)
        cart = [Vec({h: 1}) for h in alg.cartan]
        self.h0 = [_normalize(v) for v in intersect(self.g00, cart)] if self.g00 else []
        for v in self.h0:
            for c in v.values():
                if isinstance(simplify(c), CycScalar):
                    raise ValueError("h(0) basis has irrational coordinates; supply a rational Cartan")
        # restrict the h-weights of the standard basis to h(0)
        cpos = {h: t for t, h in enumerate(alg.cartan)}
        alpha_of = []
        for j in range(alg.dim):
            w = alg.weights[j]
            alpha_of.append(tuple(Fraction(simplify(sum((c * w[cpos[h]] for h, c in hv.items()), 0)))
                                  for hv in self.h0))
        groups: dict = {}
        for j in range(alg.dim):
            groups.setdefault(alpha_of[j], []).append(std[j])
        refined = {}
        for alpha, space in groups.items():
            parts = {(): space}
            for i, s in enumerate(self.autos):
                nxt = {}
                for key, sub in parts.items():
                    found = 0
                    for k in range(s.order):
                        vecs = _eigenvectors(s, sub, self.eigenvalue(i, k))
                        if vecs:
                            nxt[key + (k,)] = vecs
                            found += len(vecs)
                    if found != len(sub):
                        raise NotDiagonalizableError(f"sigma{i} is not diagonalizable on the alpha={alpha} space")
                parts = nxt
            for key, vecs in parts.items():
                refined[(key[0], key[1:], alpha)] = vecs
        zero_alpha = tuple(Fraction(0) for _ in self.h0)
        top = (0, (0,) * self.n, zero_alpha)
        if top in refined and self.h0:
            ech = Echelon()
            basis = []
            for v in self.h0 + refined[top]:
                if ech.add(v) is None:
                    basis.append(v)
            refined[top] = basis
        self.refined = dict(sorted(refined.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2])))
        self.basis, self.labels = [], []
        for key, vecs in self.refined.items():
            for v in vecs:
                self.basis.append(v)
                self.labels.append(key)
        self.index = {}
        for j, key in enumerate(self.labels):
            self.index.setdefault(key, []).append(j)
        ech = Echelon()
        for t, v in enumerate(self.basis):
            ech.add(v, tag=t)
        self._coords = ech
        self.algebra = alg.subalgebra(self.basis, [f"b{j}" for j in range(len(self.basis))])
        self.h0_index = self.index[top][:len(self.h0)] if top in self.refined and self.h0 else []
        self.pieces = {}
        for j, (k0, k, _) in enumerate(self.labels):
            self.pieces.setdefault((k0, k), []).append(j)
        self.dim = len(self.basis)
        self.delta0 = self._delta0()

    def _delta0(self):
        if not self.h0:
            return None
        gram = [[Fraction(simplify(self.alg.pair(a, b))) for b in self.h0] for a in self.h0]
        roots = {lab[2] for lab in self.labels if lab[0] == 0 and not any(lab[1]) and any(lab[2])}
        try:
            return RootSystem(roots, gram)
        except ValueError:
            return None

    # -- queries -------------------------------------------------------------------
    def coordinates(self, x: dict) -> Vec:
        """Coordinates of a vector of g (standard basis) in the adapted basis."""
        c = self._coords.coordinates(x)
        if c is None:
            raise ValueError("not in g")
        return c

    def alpha(self, j):
        return self.labels[j][2]

    def kbar(self, j):
        return self.labels[j][1]

    def k0bar(self, j):
        return self.labels[j][0]

    def sign(self, alpha) -> int:
        """Sign of an h(0)-weight in the fixed base of Delta_0."""
        if not any(alpha):
            return 0
        if self.delta0 is None:
            for x in alpha:
                if x:
                    return 1 if x > 0 else -1
        return self.delta0.sign(alpha)

    def height(self, alpha) -> Fraction:
        if not any(alpha):
            return Fraction(0)
        return self.delta0.height(alpha)

    def zero_weight(self):
        return tuple(Fraction(0) for _ in self.h0)

    def reduce_degree(self, k0: int, k) -> tuple:
        return (k0 % self.m0, tuple(x % m for x, m in zip(k, self.m)))

    def roots_of_g(self) -> set:
        return {lab[2] for lab in self.labels}

    def __repr__(self):
        return f"Multiloop(dim={self.dim}, m0={self.m0}, m={self.m}, h0={len(self.h0)})"


def eigen_decompose(alg: SimpleLieAlgebra, autos: list[FiniteAutomorphism]) -> Multiloop:
    return Multiloop(alg, autos)


def is_simple(alg: LieAlgebra, basis: list[Vec]) -> tuple[bool, str]:
    """Simplicity of the subalgebra spanned by ``basis``: nonabelian with an
    absolutely irreducible adjoint representation (Burnside)."""
    if not basis:
        return False, "zero algebra"
    sub = alg.subalgebra(basis)
    if all(not sub.bracket_basis(i, j) for i in range(sub.dim) for j in range(sub.dim)):
        return False, f"abelian of dimension {sub.dim}"
    gens = [sub.ad({i: 1}) for i in range(sub.dim)]
    if not is_absolutely_irreducible(gens, sub.dim):
        return False, "adjoint representation has a proper invariant subspace"
    return True, f"simple of dimension {sub.dim}"


def check_assumptions_213(alg: SimpleLieAlgebra, autos, a1_as_b1: bool | None = None, ml: Multiloop | None = None) -> Report:
    """Standing assumptions: (1) g(0,0) simple; (2) h(0) = g(0,0) ∩ h is a
    Cartan subalgebra of g(0,0); (3) Δ(g, h(0)) equals the enlarged Δ_{0,en}.

    ``a1_as_b1=None`` lets a rank-one Δ_0 use whichever of the A1/B1 readings
    matches; True/False forces one.
    """
    rep = Report("assumptions")
    ml = ml or Multiloop(alg, autos)
    ok1, why = is_simple(alg, ml.g00)
    rep.add("(1) g(0,0) is simple", ok1, {"dim": len(ml.g00), "detail": why})
    ok2 = bool(ml.h0)
    witness = {"dim_h0": len(ml.h0)}
    if ok2:
        # centralizer of h(0) in g(0,0) is its alpha = 0 part
        cent = len(ml.index.get((0, (0,) * ml.n, ml.zero_weight()), []))
        witness["dim_centralizer"] = cent
        ok2 = cent == len(ml.h0)
    rep.add("(2) h(0) ⊆ h is a Cartan subalgebra of g(0,0)", ok2, witness)
    if not (ok1 and ok2) or ml.delta0 is None:
        rep.add("(3) Δ(g, h(0)) = Δ_{0,en}", False, "needs clauses (1) and (2)")
        return rep
    d0 = ml.delta0
    if not (d0.is_root_system() and d0.is_irreducible() and d0.is_reduced()):
        rep.add("(3) Δ(g, h(0)) = Δ_{0,en}", False, "Δ_0 is not an irreducible reduced root system")
        return rep
    have = ml.roots_of_g()
    if a1_as_b1 is None and d0.cartan_type() == "A1":
        options = [False, True]
    else:
        options = [bool(a1_as_b1)]
    chosen = None
    for flag in options:
        if enlarge_roots(d0, flag) == have:
            chosen = flag
            break
    flag = options[0] if chosen is None else chosen
    en = enlarge_roots(d0, flag)
    rep.add("(3) Δ(g, h(0)) = Δ_{0,en}", chosen is not None, {
        "type": d0.cartan_type(),
        "doubled_short_roots": d0.is_type_B(flag),
        "missing": sorted(en - have),
        "extra": sorted(have - en),
    })
    ml.a1_as_b1 = flag
    return rep


class GSigma0:
    """g(sigma_0) = ⊕ g(0, kbar) with its triangular split by the sign of
    alpha; the middle part is ``a``."""

    def __init__(self, ml: Multiloop):
        self.ml = ml
        idx = [j for j, lab in enumerate(ml.labels) if lab[0] == 0]
        self.indices = idx
        self.a = [j for j in idx if not any(ml.alpha(j))]
        self.plus = [j for j in idx if ml.sign(ml.alpha(j)) > 0]
        self.minus = [j for j in idx if ml.sign(ml.alpha(j)) < 0]
        self.a_graded = {}
        for j in self.a:
            self.a_graded.setdefault(ml.kbar(j), []).append(j)
        self.graded = {}
        for j in idx:
            self.graded.setdefault(ml.kbar(j), []).append(j)

    @property
    def dim(self):
        return len(self.indices)

    def summary(self):
        return {"dim_g_sigma0": self.dim, "dim_a": len(self.a), "dim_plus": len(self.plus),
                "dim_minus": len(self.minus),
                "a_graded": {str(k): len(v) for k, v in sorted(self.a_graded.items())}}


def subalgebra_a(alg, autos, ml: Multiloop | None = None) -> GSigma0:
    """a = {X : sigma_0 X = X, [h(0), X] = 0} with its Λ-grading, together with
    g(sigma_0) and its triangular decomposition (see :class:`GSigma0`)."""
    return GSigma0(ml or Multiloop(alg, autos))
