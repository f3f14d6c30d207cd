"""Finite-dimensional modules: explicit matrix modules, gl_n modules W1,
the a-module W2 and its irreducible g(sigma_0)-envelope W2(sigma_0)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import scalar_from_json, scalar_to_json
from .induced import Induced, Quotient
from .linalg import Echelon, Vec, enveloping_algebra, is_absolutely_irreducible, kernel, mat_apply, mat_mul
from .multiloop import GSigma0, Multiloop
from .reports import Report
from .roots import _solve


class ModuleSpecError(ValueError):
    pass


class WindowCapError(RuntimeError):
    """Raised when a construction that should stabilize has not by the cap."""


def _mat_from_json(rows) -> dict:
    m: dict = {}
    for i, j, c in rows:
        m.setdefault(int(j), Vec()).add_term(int(i), scalar_from_json(c))
    return m


def _mat_to_json(m: dict) -> list:
    return [[i, j, scalar_to_json(c)] for j, col in sorted(m.items()) for i, c in sorted(col.items())]


def _sub(a: dict, b: dict) -> dict:
    out = {}
    for j in set(a) | set(b):
        v = Vec(a.get(j, {})).iadd(b.get(j, {}), -1)
        if v:
            out[j] = v
    return out


def commutator(a: dict, b: dict) -> dict:
    return _sub(mat_mul(a, b), mat_mul(b, a))


@dataclass
class FiniteModule:
    """Matrices ``ops[x] = {column: Vec}`` for x in ``domain`` together with
    an h(0)-weight and a Λ-degree for every basis vector."""

    dim: int
    ops: dict
    alphas: list
    grades: list
    domain: list
    labels: list = field(default_factory=list)

    def act(self, x, i: int) -> Vec:
        col = self.ops.get(x, {}).get(i)
        return Vec(col) if col else Vec()

    def act_vec(self, x, v: dict) -> Vec:
        return mat_apply(self.ops.get(x, {}), v)

    def character(self) -> dict:
        out: dict = {}
        for a, g in zip(self.alphas, self.grades):
            out[(a, g)] = out.get((a, g), 0) + 1
        return dict(sorted(out.items()))

    def indices_of_grade(self, grade) -> list:
        return [i for i, g in enumerate(self.grades) if g == grade]

    def to_json(self):
        return {"dim": self.dim,
                "weights": [{"alpha": [str(x) for x in a], "grade": list(g)} for a, g in zip(self.alphas, self.grades)],
                "ops": {str(x): _mat_to_json(self.ops.get(x, {})) for x in self.domain}}


def check_module(alg, mod: FiniteModule, domain=None) -> Report:
    """rho([x, y]) = [rho(x), rho(y)] for all pairs of domain basis vectors."""
    rep = Report("module relations")
    domain = mod.domain if domain is None else domain
    dom = set(domain)
    bad = None
    for a in domain:
        for b in domain:
            if b <= a:
                continue
            br = alg.bracket_basis(a, b)
            if any(k not in dom for k in br):
                rep.add("domain closed under bracket", False, {"pair": (a, b)})
                return rep
            lhs: dict = {}
            for k, c in br.items():
                for col, v in mod.ops.get(k, {}).items():
                    lhs.setdefault(col, Vec()).iadd(v, c)
            res = _sub({j: v for j, v in lhs.items() if v}, commutator(mod.ops.get(a, {}), mod.ops.get(b, {})))
            if res:
                bad = {"pair": (a, b), "residual": _mat_to_json(res)}
                break
        if bad:
            break
    rep.add("rho([x, y]) = [rho(x), rho(y)]", bad is None, bad)
    return rep


def grade_projections(mod: FiniteModule) -> list:
    out = []
    for g in sorted(set(mod.grades)):
        out.append({i: Vec({i: 1}) for i in mod.indices_of_grade(g)})
    return out


def is_graded_irreducible(mod: FiniteModule) -> bool:
    """No proper graded submodule: Burnside for the action together with the
    projections onto the Λ-pieces (graded subspaces are exactly the
    subspaces stable under those projections)."""
    gens = [mod.ops.get(x, {}) for x in mod.domain] + grade_projections(mod)
    return is_absolutely_irreducible(gens, mod.dim)


def check_grading(ml: Multiloop, mod: FiniteModule) -> Report:
    rep = Report("grading")
    bad = None
    for x in mod.domain:
        shift = ml.kbar(x)
        for i, col in mod.ops.get(x, {}).items():
            want = tuple((a + b) % m for a, b, m in zip(mod.grades[i], shift, ml.m))
            for r in col:
                if mod.grades[r] != want:
                    bad = {"element": x, "column": i, "row": r}
        if bad:
            break
    rep.add("g_l maps the k-piece into the (k+l)-piece", bad is None, bad)
    return rep


# -- gl_n modules -----------------------------------------------------------------------


@dataclass
class GlModule:
    """A gl_n-module by the matrices of the units E_ij (0-based keys)."""

    n: int
    dim: int
    E: dict

    def act(self, i: int, j: int, v: dict) -> Vec:
        return mat_apply(self.E.get((i, j), {}), v)

    def to_json(self):
        return {"n": self.n, "dim": self.dim,
                "E": [[i + 1, j + 1, _mat_to_json(m)] for (i, j), m in sorted(self.E.items())]}


def gl1(scalar=0) -> GlModule:
    """One-dimensional gl_1-module with E_11 acting by ``scalar``."""
    c = Fraction(scalar) if not hasattr(scalar, "order") else scalar
    return GlModule(1, 1, {(0, 0): {0: Vec({0: c})}} if c else {})


def symmetric_power_gl2(k: int) -> GlModule:
    """Sym^k of the natural gl_2-module on x^a y^(k-a), E_ij = x_i d/dx_j."""
    E = {}
    for i in range(2):
        for j in range(2):
            m = {}
            for a in range(k + 1):
                deg = (a, k - a)
                c = deg[j]
                if not c:
                    continue
                new = list(deg)
                new[j] -= 1
                new[i] += 1
                m[a] = Vec({new[0]: Fraction(c)})
            E[(i, j)] = m
    return GlModule(2, k + 1, E)


def gl_module_from_json(data: dict, n: int) -> GlModule:
    if data.get("builtin") == "gl1":
        if n != 1:
            raise ModuleSpecError("gl1 module needs n = 1")
        return gl1(scalar_from_json(data.get("scalar", 0)))
    if data.get("builtin") == "sym":
        if n != 2:
            raise ModuleSpecError("symmetric powers are built for gl_2 only")
        return symmetric_power_gl2(int(data["k"]))
    if "E" not in data:
        raise ModuleSpecError("W1 needs 'builtin' or explicit 'E' matrices")
    E = {(int(i) - 1, int(j) - 1): _mat_from_json(rows) for i, j, rows in data["E"]}
    return GlModule(n, int(data["dim"]), E)


def check_gl_relations(w: GlModule) -> Report:
    """[E_ij, E_kl] = δ_jk E_il − δ_li E_kj, exactly."""
    rep = Report("gl_n relations")
    bad = None
    idx = [(i, j) for i in range(w.n) for j in range(w.n)]
    for (i, j) in idx:
        for (k, l) in idx:
            lhs = commutator(w.E.get((i, j), {}), w.E.get((k, l), {}))
            rhs: dict = {}
            if j == k:
                rhs = _sub(rhs, _sub({}, w.E.get((i, l), {})))
            if l == i:
                rhs = _sub(rhs, w.E.get((k, j), {}))
            if _sub(lhs, rhs):
                bad = {"pair": [[i + 1, j + 1], [k + 1, l + 1]]}
                break
        if bad:
            break
    rep.add(f"W1 satisfies the gl_{w.n} relations", bad is None, bad)
    return rep


# -- W2 ------------------------------------------------------------------------------------


def dynkin_to_alpha(ml: Multiloop, dynkin) -> tuple:
    """The h(0)-weight with the given values on the simple coroots of Δ_0."""
    d0 = ml.delta0
    if d0 is None:
        raise ModuleSpecError("Δ_0 is not available for this datum")
    if len(dynkin) != len(d0.simple):
        raise ModuleSpecError(f"need {len(d0.simple)} Dynkin labels, got {len(dynkin)}")
    rows = [list(d0.coroot(a)) for a in d0.simple]
    x = _solve(rows, [Fraction(v) for v in dynkin])
    if x is None:
        raise ModuleSpecError("coroots do not determine the weight")
    return tuple(x)


def a_module(ml: Multiloop, data: dict) -> FiniteModule:
    """W2 from a description ``{"dynkin": [...], "dim": d, "grades": [[...], ...],
    "matrices": [rows, ...]}``.  h(0) acts by the weight fixed by the
    Dynkin labels (or given directly as ``"alpha"``: values on h(0)); ``matrices`` gives the remaining basis vectors of a in
    their adapted order (missing ones act by 0)."""
    gs = GSigma0(ml)
    if "alpha" in data:
        alpha = tuple(Fraction(x) for x in data["alpha"])
        if len(alpha) != len(ml.h0):
            raise ModuleSpecError(f"alpha needs {len(ml.h0)} entries")
    else:
        alpha = dynkin_to_alpha(ml, data.get("dynkin", [0] * len(ml.delta0.simple)))
    dim = int(data.get("dim", 1))
    grades = [tuple(int(x) % m for x, m in zip(g, ml.m)) for g in data.get("grades", [[0] * ml.n] * dim)]
    if len(grades) != dim:
        raise ModuleSpecError("one grade per basis vector of W2")
    ops = {}
    for t, j in enumerate(ml.h0_index):
        if alpha[t]:
            ops[j] = {i: Vec({i: alpha[t]}) for i in range(dim)}
    others = [j for j in gs.a if j not in ml.h0_index]
    mats = data.get("matrices", [])
    if len(mats) > len(others):
        raise ModuleSpecError(f"a has {len(others)} basis vectors outside h(0), got {len(mats)} matrices")
    for j, rows in zip(others, mats):
        m = _mat_from_json(rows)
        if any(i >= dim or any(r >= dim for r in col) for i, col in m.items()):
            raise ModuleSpecError("matrix entry outside W2")
        ops[j] = m
    return FiniteModule(dim, ops, [alpha] * dim, grades, list(gs.a))


def validate_a_module(ml: Multiloop, mod: FiniteModule) -> Report:
    rep = Report("W2")
    rep.extend(check_module(ml.algebra, mod))
    rep.extend(check_grading(ml, mod))
    rep.add("W2 is Λ-graded irreducible", is_graded_irreducible(mod), {"dim": mod.dim})
    return rep


# -- induction inside g(sigma_0) ---------------------------------------------------------


class GSigma0Induction:
    """g(sigma_0) = minus ⊕ a ⊕ plus as induction data; weights are
    (alpha, Λ-degree) flattened, or just alpha when ``graded`` is off."""

    def __init__(self, ml: Multiloop, graded: bool = True):
        self.ml, self.graded = ml, graded
        self.gs = GSigma0(ml)
        self._kind = {j: ml.sign(ml.alpha(j)) for j in self.gs.indices}
        self.r = len(ml.h0)

    def bracket(self, a, b):
        return self.ml.algebra.bracket_basis(a, b)

    def kind(self, j):
        return self._kind[j]

    def weight(self, j):
        w = self.ml.alpha(j)
        return w + self.ml.kbar(j) if self.graded else w

    def add(self, u, v):
        r = self.r
        head = tuple(a + b for a, b in zip(u[:r], v[:r]))
        tail = tuple((a + b) % m for a, b, m in zip(u[r:], v[r:], self.ml.m))
        return head + tail

    def sort_key(self, j):
        return (self.ml.height(self.ml.alpha(j)), j)

    def depth(self, j):
        return int(-self.ml.height(self.ml.alpha(j)))


class _FiniteTop:
    def __init__(self, mod: FiniteModule, graded: bool):
        self.mod, self.graded = mod, graded

    def act(self, x, v):
        return self.mod.act(x, v)

    def weight(self, v):
        a = self.mod.alphas[v]
        return a + self.mod.grades[v] if self.graded else a


class Envelope:
    """Λ-graded irreducible quotient of the g(sigma_0)-module induced from
    ``top`` along minus ⊕ a ⊕ plus (ungraded when ``graded`` is off).

    Layers are built by depth below the top: layer d is spanned by f·u with
    f a MINUS basis vector of depth c and u a basis vector of layer d − c.
    The construction stops once as many consecutive layers as the deepest
    MINUS vector vanish; ``cap`` bounds the depth.  The first ``top.dim``
    basis vectors are the top itself, in its own order.  ``vectors`` keeps
    a preimage in the induced module of every basis vector.
    """

    def __init__(self, ml: Multiloop, top: FiniteModule, cap: int = 40, graded: bool = True):
        self.ml, self.top, self.graded = ml, top, graded
        data = self.data = GSigma0Induction(ml, graded)
        ind = self.ind = Induced(data, _FiniteTop(top, graded))
        plus = list(data.gs.plus)
        self.quot = Quotient(ind, lambda w: plus)
        self.vectors, self.weights, self._echs = [], [], {}
        minus = list(data.gs.minus)
        hmax = max((data.depth(j) for j in minus), default=1)
        layers = {0: []}
        for v in range(top.dim):
            key = ((), v)
            self._push(Vec({key: 1}), ind.weight(key))
            layers[0].append(len(self.vectors) - 1)
        zero_run, d = 0, 0
        while zero_run < hmax:
            d += 1
            if d > cap:
                raise WindowCapError(f"not finite-dimensional at this cap (depth {cap})")
            layers[d] = []
            for f in minus:
                c = data.depth(f)
                for b in layers.get(d - c, []):
                    vec = ind.act_vec({f: 1}, self.vectors[b])
                    if self._push(vec, data.add(self.weights[b], data.weight(f))):
                        layers[d].append(len(self.vectors) - 1)
            zero_run = 0 if layers[d] else zero_run + 1
        self.depth = d - zero_run
        self.module = self._module()

    def _push(self, vec, w) -> bool:
        img = self.quot.q_vec(vec)
        if not img:
            return False
        ech = self._echs.setdefault(w, Echelon())
        if ech.add(img, tag=len(self.vectors)) is None:
            self.vectors.append(vec)
            self.weights.append(w)
            return True
        return False

    def coordinates(self, vec: dict) -> Vec:
        """Coordinates in the quotient basis of a vector of the induced module."""
        qi = self.quot.q_vec(vec)
        if not qi:
            return Vec()
        w = self.ind.weight(min(vec))
        ech = self._echs.get(w)
        coords = ech.coordinates(qi) if ech is not None else None
        if coords is None:
            raise WindowCapError("image left the computed span; raise the cap")
        return coords

    def _module(self) -> FiniteModule:
        ops = {}
        for x in self.data.gs.indices:
            m = {}
            for b, vec in enumerate(self.vectors):
                img = self.ind.act_vec({x: 1}, vec)
                if img:
                    c = self.coordinates(img)
                    if c:
                        m[b] = c
            if m:
                ops[x] = m
        r = len(self.ml.h0)
        alphas = [w[:r] for w in self.weights]
        grades = [w[r:] if self.graded else self.top.grades[0] for w in self.weights]
        labels = [_describe(vec) for vec in self.vectors]
        return FiniteModule(len(self.vectors), ops, alphas, grades, list(self.data.gs.indices), labels)


def w2_sigma0(ml: Multiloop, top: FiniteModule, cap: int = 40, graded: bool = True) -> FiniteModule:
    """W2(sigma_0): see :class:`Envelope`."""
    return Envelope(ml, top, cap, graded).module


def _describe(vec: dict) -> str:
    key = min(vec)
    mono, v = key
    return "".join(f"X{j}·" for j in mono) + f"v{v}"


def finite_dim_irrep(ml: Multiloop, dynkin, cap: int = 40) -> FiniteModule:
    """Irreducible module of highest weight ``dynkin`` for g(sigma_0) with
    trivial W2 on a (for untwisted data: the classical irreducible of g)."""
    gs = GSigma0(ml)
    if len(gs.a) != len(ml.h0):
        raise ModuleSpecError("a is larger than h(0); build W2 with a_module instead")
    return w2_sigma0(ml, a_module(ml, {"dynkin": list(dynkin)}), cap=cap)


def check_highest_weight(ml: Multiloop, mod: FiniteModule, top_dim: int) -> Report:
    """The space killed by every positive root vector of g(sigma_0) is the top."""
    rep = Report("singular vectors")
    gs = GSigma0(ml)
    cols = []
    for i in range(mod.dim):
        img = Vec()
        for x in gs.plus:
            for r, c in mod.act(x, i).items():
                img.add_term((x, r), c)
        cols.append(img)
    ker = kernel(cols)
    inside = all(all(i < top_dim for i in k) for k in ker)
    rep.add("singular space equals the top", len(ker) == top_dim and inside, {"dim": len(ker), "top": top_dim})
    return rep


def enveloping_dim(mod: FiniteModule) -> int:
    return len(enveloping_algebra([mod.ops.get(x, {}) for x in mod.domain], mod.dim))
