"""Finite-dimensional Lie algebras by structure constants, Chevalley
constructors for A1, A2, B2 and finite-order automorphisms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycScalar, lcm, simplify, scalar_from_json, scalar_to_json
from .linalg import Echelon, Vec, _flatten, mat_apply, mat_mul, rank
from .reports import Report
from .roots import RootSystem

EMPTY = Vec()


class LieAlgebra:
    """Lie algebra on basis ``0..dim-1``.

    ``brackets`` maps ordered pairs ``(i, j)`` to Vecs; a pair given in one
    order only is completed by antisymmetry.  ``form`` maps pairs to the
    values of an invariant bilinear form (symmetric completion likewise).
    """

    def __init__(self, dim: int, brackets: dict, form: dict | None = None, labels=None):
        self.dim = dim
        self.labels = list(labels) if labels else [f"x{i}" for i in range(dim)]
        table = {}
        for (i, j), v in brackets.items():
            v = Vec((k, simplify(c)) for k, c in v.items())
            if v:
                table[(i, j)] = v
        for (i, j), v in list(table.items()):
            if (j, i) not in table and i != j:
                table[(j, i)] = -v
        self._table = table
        self._form = {}
        for (i, j), c in (form or {}).items():
            c = simplify(c)
            if c:
                self._form[(i, j)] = c
                self._form.setdefault((j, i), c)

    # -- evaluation ---------------------------------------------------------
    def bracket_basis(self, i, j) -> Vec:
        return self._table.get((i, j), EMPTY)

    def bracket(self, x: dict, y: dict) -> Vec:
        out = Vec()
        for i, a in x.items():
            for j, b in y.items():
                v = self._table.get((i, j))
                if v:
                    out.iadd(v, a * b)
        return out

    def pair_basis(self, i, j):
        return self._form.get((i, j), 0)

    def pair(self, x: dict, y: dict):
        total = 0
        for i, a in x.items():
            for j, b in y.items():
                c = self._form.get((i, j))
                if c:
                    total = total + a * b * c
        return total

    def ad(self, x: dict) -> dict:
        """Matrix of ``ad x`` as ``{j: column}``."""
        out = {}
        for j in range(self.dim):
            col = self.bracket(x, {j: 1})
            if col:
                out[j] = col
        return out

    def basis_vector(self, i) -> Vec:
        return Vec({i: 1})

    # -- checks -------------------------------------------------------------
    def check_structure(self) -> Report:
        rep = Report("lie-algebra")
        bad = None
        for i in range(self.dim):
            if self.bracket_basis(i, i):
                bad = (i, i)
                break
            for j in range(i + 1, self.dim):
                if self.bracket_basis(i, j) + self.bracket_basis(j, i):
                    bad = (i, j)
                    break
            if bad:
                break
        rep.add("antisymmetry", bad is None, bad)
        bad = None
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    ei, ej, ek = ({i: 1}, {j: 1}, {k: 1})
                    r = (self.bracket(ei, self.bracket(ej, ek)) + self.bracket(ej, self.bracket(ek, ei))
                         + self.bracket(ek, self.bracket(ei, ej)))
                    if r:
                        bad = {"triple": (i, j, k), "residual": r}
                        break
                if bad:
                    break
            if bad:
                break
        rep.add("jacobi", bad is None, bad)
        if self._form:
            sym = next(((i, j) for (i, j), c in self._form.items() if self._form.get((j, i), 0) != c), None)
            rep.add("form symmetric", sym is None, sym)
            gram = [Vec((j, self.pair_basis(i, j)) for j in range(self.dim)) for i in range(self.dim)]
            rep.add("form nondegenerate", rank(gram) == self.dim, None)
            bad = None
            for x in range(self.dim):
                for y in range(self.dim):
                    for z in range(self.dim):
                        v = (self.pair(self.bracket_basis(x, y), {z: 1})
                             + self.pair({y: 1}, self.bracket_basis(x, z)))
                        if v:
                            bad = (x, y, z)
                            break
                    if bad:
                        break
                if bad:
                    break
            rep.add("form invariant", bad is None, bad)
        return rep

    def killing(self, x: dict, y: dict):
        ax, ay = self.ad(x), self.ad(y)
        prod = mat_mul(ax, ay)
        return sum((col.get(j, 0) for j, col in prod.items()), 0)

    def subalgebra(self, basis: list[dict], labels=None) -> "LieAlgebra":
        """Structure constants of the subalgebra spanned by ``basis`` (closure is checked)."""
        ech = Echelon()
        for t, v in enumerate(basis):
            if ech.add(v, tag=t) is not None:
                raise ValueError("subalgebra basis is linearly dependent")
        brackets, form = {}, {}
        for a in range(len(basis)):
            for b in range(len(basis)):
                if a < b:
                    w = self.bracket(basis[a], basis[b])
                    if w:
                        c = ech.coordinates(w)
                        if c is None:
                            raise ValueError("span is not closed under the bracket")
                        brackets[(a, b)] = c
                if self._form:
                    p = self.pair(basis[a], basis[b])
                    if p:
                        form[(a, b)] = p
        return LieAlgebra(len(basis), brackets, form, labels)

    def structure_json(self):
        return {
            "dimension": self.dim,
            "labels": self.labels,
            "brackets": [[i, j, {str(k): scalar_to_json(c) for k, c in sorted(v.items())}]
                         for (i, j), v in sorted(self._table.items()) if i < j],
            "form": [[i, j, scalar_to_json(c)] for (i, j), c in sorted(self._form.items()) if i <= j],
        }


class SimpleLieAlgebra(LieAlgebra):
    """A simple Lie algebra with a Cartan subalgebra spanned by basis vectors
    ``cartan`` and a basis of ``ad cartan`` weight vectors."""

    def __init__(self, dim, brackets, form, cartan, labels=None, cartan_label=None, matrices=None,
                 positive=None):
        super().__init__(dim, brackets, form, labels)
        self.cartan = list(cartan)
        self.weights = []
        for j in range(dim):
            w = []
            for h in self.cartan:
                col = self.bracket_basis(h, j)
                if any(k != j for k in col):
                    raise ValueError(f"basis vector {j} is not an ad-h weight vector")
                c = simplify(col.get(j, 0))
                if isinstance(c, CycScalar):
                    raise ValueError("Cartan weights must be rational")
                w.append(Fraction(c))
            self.weights.append(tuple(w))
        gram = [[Fraction(simplify(self.pair_basis(a, b))) for b in self.cartan] for a in self.cartan]
        self.root_system = RootSystem([w for w in self.weights if any(w)], gram, positive)
        self.cartan_label = cartan_label or self.root_system.cartan_type()
        self.matrices = matrices
        if matrices is not None:
            self._coord = Echelon()
            for j, m in enumerate(matrices):
                self._coord.add(_flatten(m), tag=j)
        h = Vec({self.cartan[0]: 1})
        self.dual_coxeter = int(Fraction(simplify(self.killing(h, h))) / (2 * Fraction(simplify(self.pair(h, h)))))

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def root_vector(self, root) -> int:
        return next(j for j, w in enumerate(self.weights) if w == tuple(root))

    def from_matrix(self, m: dict) -> Vec:
        c = self._coord.coordinates(_flatten(m))
        if c is None:
            raise ValueError("matrix is outside the realization")
        return c

    def to_matrix(self, x: dict) -> dict:
        out = Vec()
        for j, c in x.items():
            out.iadd(_flatten(self.matrices[j]), c)
        cols: dict = {}
        for (i, j), c in out.items():
            cols.setdefault(j, Vec()).add_term(i, c)
        return cols

    def to_json(self):
        data = self.structure_json()
        data["cartan"] = self.cartan
        data["type"] = self.cartan_label
        return data


# -- matrix realizations ---------------------------------------------------------


def _unit(i, j, c=1) -> dict:
    return {j: Vec({i: c})}


def _madd(*terms) -> dict:
    out: dict = {}
    for coeff, m in terms:
        for j, col in m.items():
            out.setdefault(j, Vec()).iadd(col, coeff)
    return {j: col for j, col in out.items() if col}


def _commutator(a, b):
    return _madd((1, mat_mul(a, b)), (-1, mat_mul(b, a)))


def _transpose(m):
    out: dict = {}
    for j, col in m.items():
        for i, c in col.items():
            out.setdefault(i, Vec()).add_term(j, c)
    return out


def _realization(label: str):
    """(size, positive root matrices, indices of simple ones)."""
    if label in ("A1", "A2"):
        n = int(label[1]) + 1
        pos = [_unit(i, j) for i in range(n) for j in range(i + 1, n)]
        simple = [k for k, (i, j) in enumerate((i, j) for i in range(n) for j in range(i + 1, n)) if j == i + 1]
        return n, pos, simple
    if label == "B2":
        # so(5) preserving the antidiagonal form: X_ij = E_ij - E_{4-j,4-i}
        reps = [(0, 1), (1, 2), (0, 2), (0, 3)]
        pos = [_madd((1, _unit(i, j)), (-1, _unit(4 - j, 4 - i))) for i, j in reps]
        return 5, pos, [0, 1]
    raise ValueError(f"unsupported Cartan type {label!r}; use A1, A2, B2 or a raw structure-constant import")


def build_chevalley(label: str) -> SimpleLieAlgebra:
    """Chevalley basis ``e_a (a > 0), h_1..h_r, f_a`` with integral structure
    constants and the invariant form normalized so that long roots have
    square length 2."""
    size, pos, simple = _realization(label)

    def root_value(h, e):
        comm = _commutator(h, e)
        j, col = next(iter(e.items()))
        i, c = next(iter(col.items()))
        return Fraction(comm.get(j, {}).get(i, 0)) / c

    es_simple = [pos[k] for k in simple]
    fs_simple, hs = [], []
    for e in es_simple:
        hp = _commutator(e, _transpose(e))
        c = root_value(hp, e)
        fs_simple.append(_madd((Fraction(2) / c, _transpose(e))))
        hs.append(_madd((Fraction(2) / c, hp)))

    def weight(m):
        return tuple(Fraction(root_value(h, m)) for h in hs)

    sw = [weight(e) for e in es_simple]
    coords = {weight(m): _simple_coords(weight(m), sw) for m in pos}
    roots = set(coords) | {tuple(-x for x in w) for w in coords}
    # grow e_b = [e_i, e_g] / (p + 1), f_b = -[f_i, f_g] / (p + 1) by height
    ef = {w: (es_simple[i], fs_simple[i]) for i, w in enumerate(sw)}
    for w in sorted(coords, key=lambda w: (sum(coords[w]), coords[w])):
        if w in ef:
            continue
        for i, a in enumerate(sw):
            g = tuple(x - y for x, y in zip(w, a))
            if g in ef:
                break
        p = 0
        while tuple(x - (p + 1) * y for x, y in zip(g, a)) in roots:
            p += 1
        ef[w] = (_madd((Fraction(1, p + 1), _commutator(ef[a][0], ef[g][0]))),
                 _madd((Fraction(-1, p + 1), _commutator(ef[a][1], ef[g][1]))))
    order = sorted(coords, key=lambda w: (sum(coords[w]), tuple(-x for x in coords[w])))
    es = [ef[w][0] for w in order]
    fs = [ef[w][1] for w in order]
    mats = es + hs + fs
    r, p = len(hs), len(es)
    labels = [f"e{k}" for k in range(p)] + [f"h{k}" for k in range(r)] + [f"f{k}" for k in range(p)]
    ech = Echelon()
    for j, m in enumerate(mats):
        ech.add(_flatten(m), tag=j)
    brackets = {}
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            comm = _commutator(mats[a], mats[b])
            if comm:
                brackets[(a, b)] = ech.coordinates(_flatten(comm))
    trace_form = {}
    for a in range(len(mats)):
        for b in range(a, len(mats)):
            prod = mat_mul(mats[a], mats[b])
            t = sum((col.get(j, 0) for j, col in prod.items()), Fraction(0))
            if t:
                trace_form[(a, b)] = t
    positive = [weight(e) for e in es]
    alg = SimpleLieAlgebra(len(mats), brackets, trace_form, range(p, p + r), labels, label, mats, positive)
    longest = max(alg.root_system.norm2(w) for w in alg.root_system.roots)
    scale = longest / 2  # scaling the form by s divides root lengths by s
    form = {k: v * scale for k, v in trace_form.items()}
    return SimpleLieAlgebra(len(mats), brackets, form, range(p, p + r), labels, label, mats, positive)


def _simple_coords(w, simple_weights):
    # positive roots of A1/A2/B2 in simple-root coordinates, by small search
    r = len(simple_weights)
    for total in range(1, 6):
        for combo in _compositions(total, r):
            if tuple(sum((c * s[i] for c, s in zip(combo, simple_weights)), Fraction(0)) for i in range(r)) == w:
                return combo
    raise ValueError("not a positive root")


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def algebra_from_json(data: dict) -> SimpleLieAlgebra:
    """Either ``{"type": "A2"}`` or a raw import with ``dimension``,
    ``brackets`` ``[[i, j, {k: c}]]``, ``form`` ``[[i, j, c]]`` and ``cartan``."""
    if "brackets" not in data:
        return build_chevalley(data["type"])
    brackets = {}
    for i, j, v in data["brackets"]:
        brackets[(int(i), int(j))] = Vec((int(k), scalar_from_json(c)) for k, c in v.items())
    form = {(int(i), int(j)): scalar_from_json(c) for i, j, c in data["form"]}
    return SimpleLieAlgebra(int(data["dimension"]), brackets, form, data["cartan"], data.get("labels"),
                            data.get("type"))


# -- automorphisms ---------------------------------------------------------------


@dataclass(frozen=True)
class FiniteAutomorphism:
    """Linear map of g given by its columns ``{j: image of basis vector j}``."""

    matrix: dict
    order: int
    name: str = ""

    def apply(self, x: dict) -> Vec:
        return mat_apply(self.matrix, x)

    def power(self, k: int) -> dict:
        out = {j: Vec({j: 1}) for j in self._support()}
        for _ in range(k):
            out = mat_mul(self.matrix, out)
        return out

    def _support(self):
        keys = set(self.matrix)
        for col in self.matrix.values():
            keys |= set(col)
        return keys

    def to_json(self):
        return {"name": self.name, "order": self.order,
                "matrix": [[i, j, scalar_to_json(c)] for j, col in sorted(self.matrix.items())
                           for i, c in sorted(col.items())]}


def identity_automorphism(alg: LieAlgebra, order: int = 1) -> FiniteAutomorphism:
    return FiniteAutomorphism({j: Vec({j: 1}) for j in range(alg.dim)}, order, "identity")


def chevalley_involution(alg: SimpleLieAlgebra) -> FiniteAutomorphism:
    """e_a -> -f_a, f_a -> -e_a, h -> -h."""
    p = (alg.dim - alg.rank) // 2
    m = {}
    for k in range(p):
        m[k] = Vec({p + alg.rank + k: -1})
        m[p + alg.rank + k] = Vec({k: -1})
    for h in alg.cartan:
        m[h] = Vec({h: -1})
    return FiniteAutomorphism(m, 2, "chevalley_involution")


def matrix_automorphism(alg: SimpleLieAlgebra, fn, order: int, name: str) -> FiniteAutomorphism:
    """Automorphism induced by a map on the matrix realization."""
    return FiniteAutomorphism({j: alg.from_matrix(fn(alg.matrices[j])) for j in range(alg.dim)}, order, name)


def twisted_transpose(alg: SimpleLieAlgebra) -> FiniteAutomorphism:
    """x -> -J x^T J with J the antidiagonal of ones; conjugate to x -> -x^T and
    chosen so that its fixed points meet the diagonal Cartan subalgebra."""
    if not alg.cartan_label.startswith("A"):
        raise ValueError("twisted_transpose is defined for type A")
    n = alg.rank + 1

    def fn(m):
        flipped = {n - 1 - j: Vec({n - 1 - i: c for i, c in col.items()}) for j, col in _transpose(m).items()}
        return _madd((-1, flipped))

    return matrix_automorphism(alg, fn, 2, "twisted_transpose")


def diagonal_automorphism(alg: SimpleLieAlgebra, entries, order: int) -> FiniteAutomorphism:
    """Conjugation by ``diag(entries)`` (entries: scalars of the realization)."""
    inv = [1 / e for e in entries]

    def fn(m):
        return {j: Vec({i: entries[i] * c * inv[j] for i, c in col.items()}) for j, col in m.items()}

    return matrix_automorphism(alg, fn, order, "diagonal")


def automorphism_from_json(alg: SimpleLieAlgebra, data: dict, order_hint: int | None = None) -> FiniteAutomorphism:
    builtin = data.get("builtin")
    if builtin == "identity":
        return identity_automorphism(alg, int(data.get("order", 1)))
    if builtin == "chevalley_involution":
        a = chevalley_involution(alg)
    elif builtin == "twisted_transpose":
        a = twisted_transpose(alg)
    elif builtin is not None:
        raise ValueError(f"unknown builtin automorphism {builtin!r}")
    else:
        m: dict = {}
        for i, j, c in data["matrix"]:
            m.setdefault(int(j), Vec()).add_term(int(i), scalar_from_json(c))
        return FiniteAutomorphism(m, int(data["order"]), data.get("name", "matrix"))
    if "order" in data:
        a = FiniteAutomorphism(a.matrix, int(data["order"]), a.name)
    return a


def validate_automorphisms(alg: LieAlgebra, autos: list[FiniteAutomorphism]) -> Report:
    """Orders (exact and minimal), bracket and form invariance, commutation."""
    rep = Report("automorphisms")
    ident = {j: Vec({j: 1}) for j in range(alg.dim)}
    for a, s in enumerate(autos):
        tag = f"sigma{a}"
        square = all(0 <= j < alg.dim and all(0 <= i < alg.dim for i in col) for j, col in s.matrix.items())
        rep.add(f"{tag}: square of size dim g", square, None if square else s.name)
        if not square:
            continue
        full = {j: s.matrix.get(j, Vec()) for j in range(alg.dim)}
        p = dict(ident)
        first = None
        for k in range(1, s.order + 1):
            p = {j: mat_apply(full, p[j]) for j in range(alg.dim)}
            if all(p[j] == ident[j] for j in range(alg.dim)):
                first = k
                break
        if first == s.order:
            rep.add(f"{tag}: order {s.order}", True)
        elif first is None:
            rep.add(f"{tag}: order {s.order}", False, "matrix^order is not the identity")
        else:
            rep.add(f"{tag}: order {s.order}", False, f"order not minimal: power {first} is the identity")
        bad = None
        for i in range(alg.dim):
            for j in range(i + 1, alg.dim):
                lhs = s.apply(alg.bracket_basis(i, j))
                rhs = alg.bracket(s.apply({i: 1}), s.apply({j: 1}))
                if lhs != rhs:
                    bad = {"pair": (i, j), "residual": lhs - rhs}
                    break
            if bad:
                break
        rep.add(f"{tag}: preserves bracket", bad is None, bad)
        bad = None
        for i in range(alg.dim):
            for j in range(i, alg.dim):
                if alg.pair(s.apply({i: 1}), s.apply({j: 1})) != alg.pair_basis(i, j):
                    bad = (i, j)
                    break
            if bad:
                break
        rep.add(f"{tag}: preserves form", bad is None, bad)
    for a in range(len(autos)):
        for b in range(a + 1, len(autos)):
            bad = None
            for j in range(alg.dim):
                x = {j: 1}
                if autos[a].apply(autos[b].apply(x)) != autos[b].apply(autos[a].apply(x)):
                    bad = {"pair": (a, b), "basis_vector": j}
                    break
            rep.add(f"sigma{a}, sigma{b}: commute", bad is None, bad)
    return rep


def field_order(autos) -> int:
    """N = lcm of the automorphism orders."""
    return lcm(*[s.order for s in autos]) if autos else 1
