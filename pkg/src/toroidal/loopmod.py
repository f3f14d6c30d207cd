"""The modules W1 ⊗ W ⊗ C[t^±] over τ^0 (W = W2) and τ_0 (W = W2(sigma_0)),
their parameters, and the window-scale checks run on them.

Vectors are keys ``(i1, i2, k)``: basis vector i1 of W1, basis vector i2
of W (whose Λ-degree must be k mod m), and the monomial t^k.  Weights are
flat tuples ``(k0, k_1..k_n, alpha_1..alpha_r)`` with k0 the d0-degree
relative to the top.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .cyclotomic import scalar_from_json, scalar_to_json
from .finite import (FiniteModule, GlModule, ModuleSpecError, a_module, check_gl_relations, gl_module_from_json,
                     validate_a_module, w2_sigma0)
from .gradings import Kind, classify
from .induced import Induced, Quotient, character, monomials
from .linalg import Echelon, Vec, is_absolutely_irreducible, kernel
from .reports import Report, jsonable
from .tau import Tau


def _box(n: int, bound: int):
    return product(range(-bound, bound + 1), repeat=n)


def _shift(k, r):
    return tuple(a + b for a, b in zip(k, r))


def _norm(k) -> int:
    return max((abs(x) for x in k), default=0)


@dataclass
class ModuleParams:
    """Central character, shifts and the finite-dimensional data W1, W2."""

    c0: object
    psi: tuple
    d0: object
    alpha: tuple
    w1: GlModule
    w2: dict

    @classmethod
    def from_json(cls, data: dict, n: int) -> "ModuleParams":
        try:
            c0 = scalar_from_json(data.get("C0", 1))
            psi = tuple(scalar_from_json(x) for x in data.get("psi", [0] * n))
            d0 = scalar_from_json(data.get("d0", 0))
            alpha = tuple(scalar_from_json(x) for x in data.get("alpha", [0] * n))
            w1 = gl_module_from_json(data.get("W1", {"builtin": "gl1"} if n == 1 else {"builtin": "sym", "k": 0}), n)
        except (KeyError, TypeError, ValueError) as exc:
            raise ModuleSpecError(f"malformed module parameters: {exc}") from exc
        if len(psi) != n or len(alpha) != n:
            raise ModuleSpecError(f"psi and alpha need {n} entries")
        return cls(c0, psi, d0, alpha, w1, dict(data.get("W2", {})))

    def to_json(self):
        return {"C0": scalar_to_json(self.c0), "psi": [scalar_to_json(x) for x in self.psi],
                "d0": scalar_to_json(self.d0), "alpha": [scalar_to_json(x) for x in self.alpha],
                "W1": self.w1.to_json(), "W2": jsonable(self.w2)}


def validate_params(params: ModuleParams, tau: Tau) -> Report:
    rep = Report("module parameters")
    rep.add("ψ(K_0) = C_0 is nonzero", bool(params.c0), {"C0": params.c0})
    bad = [i + 1 for i, x in enumerate(params.psi) if x]
    rep.add("ψ(K_i) = 0 for 1 ≤ i ≤ n (forced once the bounded category is nonzero)", not bad,
            {"nonzero_indices": bad} if bad else None)
    if params.w1.n != tau.n:
        rep.add(f"W1 is a gl_{tau.n}-module", False, {"n": params.w1.n})
    else:
        rep.extend(check_gl_relations(params.w1))
    hv = tau.ml.alg.dual_coxeter
    critical = params.c0 == -hv
    rep.add("C_0 ≠ −h^∨ (flag only: the level is accepted)", None if critical else True,
            {"C0": params.c0, "dual_coxeter": hv})
    return rep


class LoopModule:
    """W1 ⊗ W ⊗ C[t^±] with the five displayed actions.

    ``w`` is a Λ-graded module over ``domain`` (adapted indices of a for
    the τ^0-module, of g(sigma_0) for the τ_0-module)."""

    def __init__(self, tau: Tau, params: ModuleParams, w: FiniteModule, name: str = ""):
        self.tau, self.params, self.w, self.name = tau, params, w, name
        self.n = tau.n
        self.domain = set(w.domain)
        self.r = len(tau.ml.h0)

    # -- basis and weights ------------------------------------------------------------
    def grade_ok(self, i2: int, k) -> bool:
        return self.w.grades[i2] == tuple(x % m for x, m in zip(k, self.tau.m))

    def basis_at(self, k) -> list:
        k = tuple(k)
        return [(i1, i2, k) for i1 in range(self.params.w1.dim) for i2 in range(self.w.dim) if self.grade_ok(i2, k)]

    def basis(self, bound: int) -> list:
        out = []
        for k in _box(self.n, bound):
            out.extend(self.basis_at(k))
        return out

    def weight(self, v):
        return (0,) + tuple(v[2]) + tuple(self.w.alphas[v[1]])

    # -- action -------------------------------------------------------------------------------
    def act(self, sym, v) -> Vec:
        kind, i, s0, s = sym
        if s0 != 0:
            raise ValueError(f"{sym} has nonzero d0-degree")
        i1, i2, k = v
        t = _shift(k, s)
        if kind == "L":
            if i not in self.domain:
                raise ValueError(f"loop symbol {sym} is outside the acting algebra")
            return Vec(((i1, r, t), c) for r, c in self.w.act(i, i2).items())
        if kind == "K":
            return Vec({(i1, i2, t): self.params.c0}) if i == 0 else Vec()
        if i == 0:
            return Vec({(i1, i2, t): self.params.d0})
        a = i - 1
        out = Vec({(i1, i2, t): k[a] + self.params.alpha[a]})
        w1 = self.params.w1
        for j in range(self.n):
            if s[j]:
                for r, c in w1.act(j, a, {i1: 1}).items():
                    out.add_term((r, i2, t), s[j] * c)
        return out

    def act_vec(self, x: dict, v: dict) -> Vec:
        out = Vec()
        for sym, a in x.items():
            for key, b in v.items():
                out.iadd(self.act(sym, key), a * b)
        return out

    def character(self, bound: int, depth: int | None = None) -> dict:
        out: dict = {}
        top = self.w.alphas[0]
        ml = self.tau.ml
        for v in self.basis(bound):
            if depth is not None and ml.height(tuple(x - y for x, y in zip(top, self.w.alphas[v[1]]))) > depth:
                continue
            w = self.weight(v)
            out[w] = out.get(w, 0) + 1
        return dict(sorted(out.items()))


def build_w2(tau: Tau, params: ModuleParams) -> FiniteModule:
    w2 = a_module(tau.ml, params.w2)
    rep = validate_a_module(tau.ml, w2)
    if not rep.ok:
        raise ModuleSpecError(f"W2 rejected: {[c.clause for c in rep.failures()]}")
    return w2


def _check_params(params, tau):
    rep = validate_params(params, tau)
    if not rep.ok:
        raise ModuleSpecError(f"module parameters rejected: {[c.clause for c in rep.failures()]}")


def build_Tprime(tau: Tau, params: ModuleParams, w2: FiniteModule | None = None) -> LoopModule:
    _check_params(params, tau)
    return LoopModule(tau, params, w2 or build_w2(tau, params), "T'")


def build_Sprime(tau: Tau, params: ModuleParams, w2s: FiniteModule | None = None, cap: int = 40) -> LoopModule:
    _check_params(params, tau)
    if w2s is None:
        w2s = w2_sigma0(tau.ml, build_w2(tau, params), cap=cap)
    return LoopModule(tau, params, w2s, "S'")


# -- symbols of τ^0 and τ_0 ----------------------------------------------------------------------


def loop_symbols(tau: Tau, k0: int, bound: int, sign=None) -> list:
    """Loop symbols at d0-degree k0 with |l|∞ ≤ bound and, if given, alpha of
    that sign (0 selects a)."""
    ml = tau.ml
    out = []
    for l in _box(tau.n, bound):
        for j in ml.pieces.get(ml.reduce_degree(k0, l), []):
            if sign is None or ml.sign(ml.alpha(j)) == sign:
                out.append(("L", j, k0, l))
    return out


def gamma_points(tau: Tau, s0: int, bound: int) -> list:
    """Points of Γ with coordinates ±m_i·c, |c| ≤ bound."""
    return [tuple(m * c for m, c in zip(tau.m, cs)) for cs in _box(tau.n, bound)]


def central_derivation_symbols(tau: Tau, s0: int, bound: int) -> list:
    out = []
    for s in gamma_points(tau, s0, bound):
        for i in range(tau.n + 1):
            out.append(("D", i, s0, s))
            for sym in tau.normalize_central(i, s0, s):
                if sym[1] == i and sym not in out:
                    out.append(sym)
    return out


def random_degree0_symbol(tau: Tau, rng: random.Random, kind: str, loops: list, bound: int = 2):
    if kind == "L":
        return rng.choice(loops)
    s = tuple(m * rng.randint(-bound, bound) for m in tau.m)
    i = rng.randint(0, tau.n)
    if kind == "D":
        return ("D", i, 0, s)
    while True:
        v = tau.normalize_central(i, 0, s)
        if v:
            return rng.choice(sorted(v))
        i = rng.randint(0, tau.n)


def check_module_axioms(mod: LoopModule, count: int, seed: int, bound: int = 2, vec_bound: int = 1) -> Report:
    """action([x, y]) = [action(x), action(y)] on every basis vector with
    |k|∞ ≤ vec_bound, for ``count`` seeded pairs cycling through the nine
    L/K/D kind patterns."""
    tau = mod.tau
    rng = random.Random(seed)
    loops = [s for s in loop_symbols(tau, 0, bound) if s[1] in mod.domain]
    vecs = mod.basis(vec_bound)
    pats = [(a, b) for a in "LKD" for b in "LKD"]
    bad = []
    for t in range(count):
        ka, kb = pats[t % len(pats)]
        x = random_degree0_symbol(tau, rng, ka, loops, bound)
        y = random_degree0_symbol(tau, rng, kb, loops, bound)
        br = tau.bracket_symbols(x, y)
        for v in vecs:
            lhs = mod.act_vec(br, {v: 1})
            rhs = mod.act_vec({x: 1}, mod.act(y, v)) - mod.act_vec({y: 1}, mod.act(x, v))
            if lhs != rhs:
                bad.append({"pair": [Tau.to_json({x: 1}), Tau.to_json({y: 1})], "vector": v,
                            "residual": sorted((repr(k), str(c)) for k, c in (lhs - rhs).items())})
                break
    rep = Report(f"{mod.name} module axioms")
    rep.add(f"{mod.name}: action([x,y]) = [action(x), action(y)] on {count} pairs", not bad, bad[:3] or None)
    return rep


# -- singular vectors and the top space --------------------------------------------------------------


def singular_vectors(mod: LoopModule, plus: list, keys: list) -> dict:
    """weight -> basis of the common kernel of the ``plus`` symbols on the
    span of ``keys`` at that weight."""
    groups: dict = {}
    for v in keys:
        groups.setdefault(mod.weight(v), []).append(v)
    out = {}
    for w, vs in sorted(groups.items()):
        cols = []
        for v in vs:
            img = Vec()
            for i, x in enumerate(plus):
                for u, c in mod.act(x, v).items():
                    img.add_term((i, u), c)
            cols.append(img)
        out[w] = [Vec((vs[j], c) for j, c in rel.items()) for rel in kernel(cols)]
    return out


def check_top_space(tprime: LoopModule, sprime: LoopModule, bound: int) -> Report:
    """Singular vectors of S' for τ_0(+) = the embedded T', weight by weight."""
    tau = sprime.tau
    plus = [x for x in loop_symbols(tau, 0, max(tau.m)) if x[1] in sprime.domain and classify(tau, x, Kind.TAU0) > 0]
    sing = singular_vectors(sprime, plus, sprime.basis(bound))
    tkeys: dict = {}
    for v in tprime.basis(bound):
        tkeys.setdefault(tprime.weight(v), []).append(v)
    bad = []
    dims = {}
    for w, vecs in sing.items():
        expect = tkeys.get(w, [])
        dims[w] = (len(vecs), len(expect))
        ech = Echelon()
        for v in vecs:
            ech.add(v)
        same = len(vecs) == len(expect) and all(ech.contains({v: 1}) for v in expect)
        if not same:
            bad.append({"weight": w, "singular_dim": len(vecs), "top_dim": len(expect)})
    missing = [w for w in tkeys if w not in sing]
    rep = Report("top space")
    rep.add("singular vectors of S' under τ_0(+) = embedded T' (per weight)", not bad and not missing,
            bad[:3] or ({"missing": missing[:3]} if missing else {"weights": len(dims)}))
    return rep


# -- irreducibility at window scale -------------------------------------------------------------------


def _generators(mod: LoopModule) -> list:
    tau = mod.tau
    loops = [x for x in loop_symbols(tau, 0, max(tau.m)) if x[1] in mod.domain]
    return loops + central_derivation_symbols(tau, 0, 1)


def check_irreducible_window(mod: LoopModule, bound: int, interior: int) -> Report:
    """Every basis vector with |k|∞ ≤ interior generates, using moves that
    stay in |k|∞ ≤ bound, a space containing the cyclic vector; and every
    weight space is irreducible under the weight-zero words of length ≤ 2
    (together these cover every nonzero weight vector)."""
    gens = _generators(mod)
    start = mod.basis_at((0,) * mod.n)
    rep = Report(f"{mod.name} irreducibility")
    if not start:
        rep.add("cyclic vector exists at k = 0", False)
        return rep
    cyclic = start[0]
    bad = []
    for v in mod.basis(interior):
        ech = Echelon()
        ech.add({v: 1})
        frontier = [Vec({v: 1})]
        found = ech.contains({cyclic: 1})
        while frontier and not found:
            nxt = []
            for u in frontier:
                for g in gens:
                    img = mod.act_vec({g: 1}, u)
                    if not img or any(_norm(key[2]) > bound for key in img):
                        continue
                    if ech.add(img) is None:
                        nxt.append(img)
            frontier = nxt
            found = ech.contains({cyclic: 1})
        if not found:
            bad.append(v)
    rep.add(f"{mod.name}: each interior basis vector generates the cyclic vector", not bad, bad[:3] or None)
    wbad = []
    weights = {}
    for v in mod.basis(interior):
        weights.setdefault(mod.weight(v), []).append(v)
    for w, vs in weights.items():
        if len(vs) == 1:
            continue
        pos = {v: t for t, v in enumerate(vs)}
        ops = []
        for x in gens:
            for y in gens:
                mats = {}
                for v in vs:
                    img = mod.act_vec({x: 1}, mod.act(y, v))
                    if any(key not in pos for key in img):
                        mats = None
                        break
                    mats[pos[v]] = Vec((pos[key], c) for key, c in img.items())
                if mats:
                    ops.append(mats)
        if not is_absolutely_irreducible(ops, len(vs)):
            wbad.append(w)
    rep.add(f"{mod.name}: weight spaces irreducible under weight-zero words", not wbad, wbad[:3] or None)
    return rep


# -- membership in the bounded category --------------------------------------------------------------


def check_B_psi_membership(mod: LoopModule, bound: int) -> Report:
    tau, params = mod.tau, mod.params
    rep = validate_params(params, tau)
    rep.name = f"{mod.name} bounded-category membership"
    ml = tau.ml
    zero = (0,) * tau.n
    bad = []
    for v in mod.basis(bound):
        checks = [(("D", i, 0, zero), (v[2][i - 1] + params.alpha[i - 1]) if i else params.d0) for i in range(tau.n + 1)]
        checks += [(("L", j, 0, zero), mod.w.alphas[v[1]][t]) for t, j in enumerate(ml.h0_index)]
        for sym, val in checks:
            got = mod.act(sym, v)
            want = Vec({v: val})
            if got != want:
                bad.append({"vector": v, "symbol": sym})
    rep.add("weight decomposition: d_0, d_i and h(0) act diagonally", not bad, bad[:3] or None)
    dims: dict = {}
    for v in mod.basis(bound):
        dims[mod.weight(v)] = dims.get(mod.weight(v), 0) + 1
    rep.add("weight spaces finite dimensional (window)", True, {"max_dim": max(dims.values(), default=0)})
    cbad = []
    for v in mod.basis(bound):
        for i in range(tau.n + 1):
            val = params.c0 if i == 0 else params.psi[i - 1]
            if mod.act(("K", i, 0, zero), v) != Vec({v: val}):
                cbad.append({"vector": v, "K": i})
    rep.add("K_i acts by ψ(K_i)", not cbad, cbad[:3] or None)
    degrees = {mod.weight(v)[0] for v in mod.basis(bound)}
    rep.add("d_0-degrees bounded above with a top degree", max(degrees, default=None) == 0,
            {"degrees": sorted(degrees)})
    return rep


# -- induction over τ -----------------------------------------------------------------------------------


class TauInduction:
    """τ (or τ_0) with one of its triangular decompositions, as induction data."""

    def __init__(self, tau: Tau, kind: Kind):
        self.tau, self.kindname = tau, kind
        self._k = {}

    def bracket(self, a, b):
        return self.tau.bracket_symbols(a, b)

    def kind(self, sym):
        c = self._k.get(sym)
        if c is None:
            c = self._k[sym] = classify(self.tau, sym, self.kindname)
        return c

    def weight(self, sym):
        alpha = self.tau.ml.alpha(sym[1]) if sym[0] == "L" else self.tau.ml.zero_weight()
        return (sym[2],) + tuple(sym[3]) + tuple(alpha)

    @staticmethod
    def add(u, v):
        return tuple(a + b for a, b in zip(u, v))

    @staticmethod
    def sort_key(sym):
        return (sym[2], sym[3], sym[0], sym[1])


@dataclass
class Window:
    k: int = 2
    depth: int = 2
    height: int = 2

    @classmethod
    def parse(cls, text: str) -> "Window":
        vals = {}
        for part in text.split(","):
            name, _, val = part.partition("=")
            if name.strip() not in ("k", "depth", "height") or not val:
                raise ValueError(f"bad window field {part!r}")
            vals[name.strip()] = int(val)
        return cls(**vals)

    def to_json(self):
        return {"k": self.k, "depth": self.depth, "height": self.height}


def _alpha_depth(ml, top, alpha):
    return ml.height(tuple(a - b for a, b in zip(top, alpha)))


def _weight_json(w, n):
    return {"d0": w[0], "k": list(w[1:1 + n]), "alpha": [str(x) for x in w[1 + n:]]}


def character_json(ch: dict, n: int) -> list:
    return [dict(_weight_json(w, n), dim=d) for w, d in sorted(ch.items())]


def _compare(a: dict, b: dict, weights) -> list:
    return [{"weight": w, "left": a.get(w, 0), "right": b.get(w, 0)} for w in sorted(weights) if a.get(w, 0) != b.get(w, 0)]


def tau0_quotient_character(tprime: LoopModule, window: Window) -> tuple[dict, int]:
    """Character of the irreducible quotient of the τ_0-module induced from T'
    along τ_0(−) ⊕ τ^0 ⊕ τ_0(+), on the interior |k|∞ ≤ window.k − 1 and
    alpha-depth ≤ window.height; returns (character, interior bound)."""
    tau = tprime.tau
    ml = tau.ml
    K, H = window.k, window.height
    data = TauInduction(tau, Kind.TAU0)
    ind = Induced(data, tprime)
    plus = [x for x in loop_symbols(tau, 0, K) if data.kind(x) > 0]
    quot = Quotient(ind, lambda w: plus)
    minus = [x for x in loop_symbols(tau, 0, K) if data.kind(x) < 0]
    cost = lambda x: int(-ml.height(ml.alpha(x[1])))
    inner = K - 1
    keys = []
    tops = tprime.basis(K)
    for mono in monomials(minus, data.sort_key, cost, H):
        ks = (0,) * tau.n
        for x in mono:
            ks = _shift(ks, x[3])
        for v in tops:
            if _norm(_shift(v[2], ks)) <= inner:
                keys.append((mono, v))
    return character(quot, keys), inner


def check_tau0_characters(tprime: LoopModule, sprime: LoopModule, window: Window) -> Report:
    """Irreducible quotient of the induced T' and S' have equal characters on the interior."""
    ch, inner = tau0_quotient_character(tprime, window)
    ch = {w: d for w, d in ch.items() if d}
    sch = sprime.character(inner, window.height)
    diff = _compare(ch, sch, set(ch) | set(sch))
    rep = Report("tau0 characters")
    rep.add(f"character of L(T') over τ_0 = character of S' (|k|∞ ≤ {inner}, depth ≤ {window.height})", not diff,
            diff[:3] or {"weights": len(sch), "total_dim": sum(sch.values())})
    rep.characters = {"quotient": ch, "sprime": sch}
    return rep


def _symbols_at_d0(tau: Tau, k0: int, bound: int) -> list:
    out = list(loop_symbols(tau, k0, bound))
    if k0 % tau.m0 == 0:
        out += [x for x in central_derivation_symbols(tau, k0, max(1, bound // max(tau.m)))
                if _norm(x[3]) <= bound]
    return out


def d0_quotient_character(top: LoopModule, kind: Kind, window: Window, levels: int = 1) -> dict:
    """Character of the irreducible quotient of the τ-module induced from
    ``top`` (S' along the d0 decomposition, T' along the affine one), on
    d0-degrees 0 > k0 ≥ −levels, |k|∞ ≤ window.k − 1 and alpha-depth ≤
    window.height below the top weight of W."""
    tau = top.tau
    ml = tau.ml
    K, H = window.k, window.height
    data = TauInduction(tau, kind)
    ind = Induced(data, top)
    plus_all = []
    minus = []
    for k0 in range(1, levels + 1):
        plus_all += [x for x in _symbols_at_d0(tau, k0, K)]
        minus += [x for x in _symbols_at_d0(tau, -k0, K)]
    if kind is Kind.AFFINE:
        plus_all += [x for x in loop_symbols(tau, 0, K) if data.kind(x) > 0]
        minus += [x for x in loop_symbols(tau, 0, K) if data.kind(x) < 0]
    plus_all = [x for x in plus_all if data.kind(x) > 0]
    minus = [x for x in minus if data.kind(x) < 0]

    def plus_at(w):
        return [x for x in plus_all if x[2] + w[0] <= 0]

    quot = Quotient(ind, plus_at)
    top_alpha = top.w.alphas[0]
    hmax = max((int(ml.height(a)) for a in ml.roots_of_g() if any(a)), default=0)
    lo = -(H + hmax * levels)

    def height_of(mono):
        h = Fraction(0)
        for x in mono:
            if x[0] == "L":
                h += ml.height(ml.alpha(x[1]))
        return h

    def prune(mono):
        d = -sum(x[2] for x in mono)
        if d > levels:
            return True
        return height_of(mono) < lo

    cost = lambda x: -x[2]
    inner = K - 1
    keys = []
    tops = top.basis(K)
    for mono in monomials(minus, data.sort_key, cost, levels, prune):
        ks = (0,) * tau.n
        for x in mono:
            ks = _shift(ks, x[3])
        for v in tops:
            if _norm(_shift(v[2], ks)) > inner:
                continue
            key = (mono, v)
            w = ind.weight(key)
            if _alpha_depth(ml, top_alpha, w[1 + tau.n:]) > H:
                continue
            keys.append(key)
    return {w: d for w, d in character(quot, keys).items() if d}


def check_d0_vs_affine(tprime: LoopModule, sprime: LoopModule, window: Window, levels: int = 1) -> Report:
    """Irreducible quotients of the d0-induced S' and the affine-induced T'
    have the same character on d0-degrees 0, −1, …, −levels (interior)."""
    a = d0_quotient_character(sprime, Kind.D0, window, levels)
    b = d0_quotient_character(tprime, Kind.AFFINE, window, levels)
    diff = _compare(a, b, set(a) | set(b))
    rep = Report("d0 vs affine")
    rep.add(f"L'(S') and L(T') characters agree (d0-depth ≤ {levels}, |k|∞ ≤ {window.k - 1}, "
            f"depth ≤ {window.height})", not diff,
            diff[:3] or {"weights": len(a), "total_dim": sum(a.values())})
    rep.characters = {"d0": a, "affine": b}
    return rep
