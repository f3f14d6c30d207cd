"""Thin coverings: from a thin cover {N_k} of an irreducible a-module N to
the Λ-graded module N_gr = ⊕ N_k, its irreducible envelope L(N_gr), the
map onto L(N), and back.

Everything here is finite-dimensional: the ambient algebra is g(sigma_0)
with the triangular decomposition given by the sign of alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .finite import Envelope, FiniteModule, is_graded_irreducible
from .linalg import (Echelon, Vec, enveloping_algebra, is_absolutely_irreducible, is_semisimple_algebra, kernel,
                     mat_apply, same_span)
from .multiloop import GSigma0, Multiloop
from .reports import Report


@dataclass
class ThinCoverData:
    """N_gr (Λ-graded), N (ungraded) and the sum map ``pi`` (columns: N_gr
    basis -> Vec over N basis)."""

    ngr: FiniteModule
    n: FiniteModule
    pi: dict

    def piece(self, grade) -> list:
        """π(N_k) inside N, as vectors."""
        return [Vec(self.pi.get(i, {})) for i in self.ngr.indices_of_grade(grade)]


# -- linear helpers ---------------------------------------------------------------------------------


def restrict(mod: FiniteModule, basis: list) -> FiniteModule:
    """The submodule spanned by ``basis`` as a module in its own coordinates."""
    ech = Echelon()
    for t, b in enumerate(basis):
        if ech.add(b, tag=t) is not None:
            raise ValueError("basis is dependent")
    ops = {}
    for x in mod.domain:
        m = {}
        for t, b in enumerate(basis):
            img = mod.act_vec(x, b)
            c = ech.coordinates(img)
            if c is None:
                raise ValueError("span is not a submodule")
            if c:
                m[t] = c
        if m:
            ops[x] = m
    alphas = [mod.alphas[min(b)] for b in basis]
    grades = [mod.grades[min(b)] for b in basis]
    return FiniteModule(len(basis), ops, alphas, grades, list(mod.domain))


def closure(mod: FiniteModule, vectors: list) -> list:
    """Basis of the submodule generated by ``vectors``."""
    ech = Echelon()
    out = []
    todo = []
    for v in vectors:
        if v and ech.add(v) is None:
            out.append(Vec(v))
            todo.append(Vec(v))
    while todo:
        v = todo.pop()
        for x in mod.domain:
            w = mod.act_vec(x, v)
            if w and ech.add(w) is None:
                out.append(w)
                todo.append(w)
    return out


def module_maps(src: FiniteModule, dst: FiniteModule) -> list:
    """Basis of Hom(src, dst) over the common domain, as column dicts."""
    cols = []
    unknowns = [(r, c) for r in range(dst.dim) for c in range(src.dim)]
    for r, c in unknowns:
        col = Vec()
        for x in src.domain:
            a = dst.ops.get(x, {})
            b = src.ops.get(x, {})
            # (A Φ)[r', c] picks A[r', r]; (Φ B)[r, c'] picks B[c, c']
            for r2, v in a.get(r, {}).items():
                col.add_term((x, r2, c), v)
            for c2, bcol in b.items():
                v = bcol.get(c)
                if v:
                    col.add_term((x, r, c2), -v)
        cols.append(col)
    out = []
    for rel in kernel(cols):
        m: dict = {}
        for t, v in rel.items():
            r, c = unknowns[t]
            m.setdefault(c, Vec()).add_term(r, v)
        out.append(m)
    return out


def _flat(m: dict) -> Vec:
    return Vec(((r, c), v) for c, col in m.items() for r, v in col.items())


def _compose(a: dict, b: dict) -> dict:
    out = {}
    for c, col in b.items():
        v = mat_apply(a, col)
        if v:
            out[c] = v
    return out


def section(maps: list, pi: dict, dim: int) -> dict | None:
    """Some φ in span(maps) with π∘φ = id (None if there is none)."""
    ech = Echelon()
    for t, phi in enumerate(maps):
        ech.add(_flat(_compose(pi, phi)), tag=t)
    ident = Vec(((i, i), 1) for i in range(dim))
    coeffs = ech.coordinates(ident)
    if coeffs is None:
        return None
    out: dict = {}
    for t, c in coeffs.items():
        for col, v in maps[t].items():
            out.setdefault(col, Vec()).iadd(v, c)
    return {c: v for c, v in out.items() if v}


def is_completely_reducible(mod: FiniteModule) -> bool:
    """The image of U(a) in End(V) is semisimple."""
    return is_semisimple_algebra(enveloping_algebra([mod.ops.get(x, {}) for x in mod.domain], mod.dim))


def _irreducible_inside(mod: FiniteModule, basis: list) -> list | None:
    """An irreducible submodule inside span(basis) (a submodule of a
    completely reducible module)."""
    sub = restrict(mod, basis)
    gens = [sub.ops.get(x, {}) for x in sub.domain]
    if is_absolutely_irreducible(gens, sub.dim):
        return basis
    for t in range(sub.dim):
        inner = closure(sub, [Vec({t: 1})])
        if len(inner) < sub.dim:
            found = _irreducible_inside(sub, inner)
            if found is not None:
                return [_lift(basis, v) for v in found]
    # every basis vector is cyclic: split with a non-scalar element of the commutant
    for phi in module_maps(sub, sub):
        diag = {phi.get(i, {}).get(i, 0) for i in range(sub.dim)} | {0}
        for c in sorted(diag, key=repr):
            shifted = [Vec(phi.get(i, {})).iadd({i: 1}, -c) for i in range(sub.dim)]
            ker = [Vec(r) for r in kernel(shifted)]
            if 0 < len(ker) < sub.dim:
                found = _irreducible_inside(sub, ker)
                if found is not None:
                    return [_lift(basis, v) for v in found]
    return None


def _lift(basis: list, coords: dict) -> Vec:
    out = Vec()
    for t, c in coords.items():
        out.iadd(basis[t], c)
    return out


def _complement(mod: FiniteModule, whole: list, part: list) -> list:
    """A submodule C of span(whole) with span(part) ⊕ C = span(whole)."""
    big = restrict(mod, whole)
    ech = Echelon()
    for t, b in enumerate(whole):
        ech.add(b, tag=t)
    part_coords = [ech.coordinates(p) for p in part]
    small = restrict(big, part_coords)
    maps = module_maps(big, small)
    # ρ with ρ ∘ ι = id on the part
    incl = {t: Vec(v) for t, v in enumerate(part_coords)}
    e2 = Echelon()
    for t, rho in enumerate(maps):
        e2.add(_flat(_compose(rho, incl)), tag=t)
    coeffs = e2.coordinates(Vec(((i, i), 1) for i in range(len(part))))
    if coeffs is None:
        raise ValueError("no module complement: not completely reducible")
    rho: dict = {}
    for t, c in coeffs.items():
        for col, v in maps[t].items():
            rho.setdefault(col, Vec()).iadd(v, c)
    cols = [Vec(rho.get(i, {})) for i in range(len(whole))]
    return [_lift(whole, rel) for rel in kernel(cols)]


def decompose(mod: FiniteModule, first: list | None = None) -> list | None:
    """Irreducible summands of a completely reducible module, starting with
    ``first`` (a given irreducible submodule) when supplied."""
    whole = [Vec({i: 1}) for i in range(mod.dim)]
    out = []
    if first is not None:
        out.append(first)
        whole = _complement(mod, whole, first)
    while whole:
        irr = _irreducible_inside(mod, whole)
        if irr is None:
            return None
        out.append(irr)
        whole = _complement(mod, whole, irr) if len(irr) < len(whole) else []
    return out


# -- the checks -----------------------------------------------------------------------------------------


def check_thin_covering(mod: FiniteModule, pieces: dict, ml: Multiloop) -> Report:
    """Axioms of a thin covering for ``pieces`` (grade -> list of vectors)
    of ``mod``; minimality through graded irreducibility of ⊕ pieces."""
    rep = Report("thin covering")
    allv = [v for vs in pieces.values() for v in vs]
    ech = Echelon()
    for v in allv:
        ech.add(v)
    rep.add("(1) the pieces sum to the module", ech.rank == mod.dim, {"rank": ech.rank, "dim": mod.dim})
    bad = None
    echs = {}
    for g, vs in pieces.items():
        e = Echelon()
        for v in vs:
            e.add(v)
        echs[g] = e
    for g, vs in pieces.items():
        for x in mod.domain:
            tgt = tuple((a + b) % m for a, b, m in zip(g, ml.kbar(x), ml.m))
            for v in vs:
                img = mod.act_vec(x, v)
                if img and (tgt not in echs or not echs[tgt].contains(img)):
                    bad = {"grade": g, "element": x}
                    break
            if bad:
                break
        if bad:
            break
    rep.add("(2) g_l maps the k-piece into the (k+l)-piece", bad is None, bad)
    ext = external_sum(mod, pieces, ml)
    rep.add("(3) minimal: ⊕ of the pieces is Λ-graded irreducible", ext is not None and is_graded_irreducible(ext),
            {"dim_external_sum": ext.dim if ext else None})
    return rep


def external_sum(mod: FiniteModule, pieces: dict, ml: Multiloop) -> FiniteModule | None:
    """⊕_k M_k with x in g_l acting M_k -> M_(k+l) by restriction."""
    grades = sorted(pieces)
    bases, echs, offset = {}, {}, {}
    pos = 0
    for g in grades:
        e = Echelon()
        basis = []
        for v in pieces[g]:
            if e.add(v, tag=len(basis)) is None:
                basis.append(v)
        bases[g], echs[g], offset[g] = basis, e, pos
        pos += len(basis)
    ops = {}
    for x in mod.domain:
        m = {}
        for g in grades:
            tgt = tuple((a + b) % mm for a, b, mm in zip(g, ml.kbar(x), ml.m))
            for t, v in enumerate(bases[g]):
                img = mod.act_vec(x, v)
                if not img:
                    continue
                if tgt not in echs:
                    return None
                c = echs[tgt].coordinates(img)
                if c is None:
                    return None
                m[offset[g] + t] = Vec((offset[tgt] + s, val) for s, val in c.items())
        if m:
            ops[x] = m
    alphas = [mod.alphas[min(v)] for g in grades for v in bases[g]]
    gl = [g for g in grades for _ in bases[g]]
    return FiniteModule(pos, ops, alphas, gl, list(mod.domain))


def check_complete_reducibility(data: ThinCoverData) -> Report:
    """N_gr is completely reducible and N splits off through a section of π."""
    rep = Report("complete reducibility")
    ngr, n = data.ngr, data.n
    rep.add("N_gr is completely reducible", is_completely_reducible(ngr))
    maps = module_maps(n, ngr)
    phi = section(maps, data.pi, n.dim)
    rep.add("N is a summand: some module map φ: N -> N_gr has π∘φ = id", phi is not None,
            {"dim_hom": len(maps)})
    if phi is None:
        return rep
    first = [Vec(phi.get(i, {})) for i in range(n.dim)]
    parts = decompose(ngr, first)
    rep.add("N_gr = M_1 ⊕ … ⊕ M_q with M_1 = φ(N) and every M_i irreducible", parts is not None,
            {"summand_dims": [len(p) for p in parts] if parts else None})
    rep.summands = parts
    return rep


def _pi_matrix_check(data: ThinCoverData) -> bool:
    for x in data.ngr.domain:
        for i in range(data.ngr.dim):
            lhs = mat_apply(data.pi, data.ngr.act(x, i))
            rhs = data.n.act_vec(x, data.pi.get(i, {}))
            if lhs != rhs:
                return False
    return True


def thin_cover_lift_restrict(ml: Multiloop, data: ThinCoverData, cap: int = 40) -> Report:
    """Lift the thin cover {π(N_k)} of N to L(N) through π: L(N_gr) -> L(N),
    check it is a thin covering, and restrict back to the top."""
    rep = Report("thin cover lift/restrict")
    rep.add("π: N_gr -> N is a module map", _pi_matrix_check(data))
    grades = sorted(set(data.ngr.grades))
    base = {g: data.piece(g) for g in grades}
    rep.extend(check_thin_covering(data.n, base, ml), "N: ")
    cr = check_complete_reducibility(data)
    rep.extend(cr, "N_gr: ")
    if not rep.ok:
        return rep
    lgr = Envelope(ml, data.ngr, cap, graded=True)
    ln = Envelope(ml, data.n, cap, graded=False)
    # π̃ on basis vectors of L(N_gr), through their preimages in the induced module
    lift = {}
    for b, vec in enumerate(lgr.vectors):
        img = Vec()
        for (mono, v), c in vec.items():
            for u, p in data.pi.get(v, {}).items():
                img.add_term((mono, u), c * p)
        lift[b] = ln.coordinates(img) if img else Vec()
    bad = None
    for x in lgr.data.gs.indices:
        for b in range(lgr.module.dim):
            lhs = mat_apply(lift, lgr.module.act(x, b))
            rhs = ln.module.act_vec(x, lift[b])
            if lhs != rhs:
                bad = {"element": x, "basis_vector": b}
                break
        if bad:
            break
    rep.add("π extends to a module map L(N_gr) -> L(N)", bad is None, bad)
    pieces = {g: [lift[b] for b in lgr.module.indices_of_grade(g) if lift[b]] for g in grades}
    rep.extend(check_thin_covering(ln.module, pieces, ml), "L(N): ")
    top = set(range(data.n.dim))
    ok = True
    for g in grades:
        restricted = [lift[b] for b in lgr.module.indices_of_grade(g) if b < data.ngr.dim]
        restricted = [v for v in restricted if v]
        if not all(set(v) <= top for v in restricted) or not same_span(restricted, base[g]):
            ok = False
    rep.add("restricting the lifted cover to the top returns {π(N_k)}", ok)
    rep.dims = {"N_gr": data.ngr.dim, "N": data.n.dim, "L(N_gr)": lgr.module.dim, "L(N)": ln.module.dim}
    return rep


# -- a Λ = Z/2 example -----------------------------------------------------------------------------------------


def z2_example(ml: Multiloop, h0_value=1, z_value=1) -> ThinCoverData:
    """For a datum with dim a = 2 = dim h(0) + 1 and Λ = Z/2: N is the line
    where h(0) acts by ``h0_value`` and the odd element z of a by
    ``z_value``; its thin cover is {N, N} and N_gr is the plane with z
    swapping the two graded lines (scaled by ``z_value``)."""
    gs = GSigma0(ml)
    others = [j for j in gs.a if j not in ml.h0_index]
    if len(others) != 1 or ml.kbar(others[0]) == (0,) * ml.n or len(ml.h0) != 1:
        raise ValueError("z2_example needs a = h(0) ⊕ C z with z odd")
    h, z = ml.h0_index[0], others[0]
    odd = ml.kbar(z)
    zero = (0,) * ml.n
    ngr_ops = {z: {0: Vec({1: z_value}), 1: Vec({0: z_value})}}
    n_ops = {z: {0: Vec({0: z_value})}}
    if h0_value:
        ngr_ops[h] = {0: Vec({0: h0_value}), 1: Vec({1: h0_value})}
        n_ops[h] = {0: Vec({0: h0_value})}
    alpha = (Fraction(h0_value),)
    ngr = FiniteModule(2, ngr_ops, [alpha, alpha], [zero, odd], list(gs.a))
    n = FiniteModule(1, n_ops, [alpha], [zero], list(gs.a))
    return ThinCoverData(ngr, n, {0: Vec({0: 1}), 1: Vec({0: 1})})


def trivial_grading_example(ml: Multiloop, top: FiniteModule) -> ThinCoverData:
    """Λ acting trivially on N: the cover is {N} and N_gr = N."""
    pi = {i: Vec({i: 1}) for i in range(top.dim)}
    return ThinCoverData(top, top, pi)
