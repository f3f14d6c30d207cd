"""Induced modules U(g) ⊗ V by lazy PBW straightening, and their unique
irreducible quotients computed weight by weight from the top down.

The algebra side is any object with

* ``bracket(a, b) -> Vec`` over symbols,
* ``kind(sym) -> -1 | 0 | 1`` (MINUS / ZERO / PLUS),
* ``weight(sym)`` and ``add(w1, w2)`` for the additive grading,
* ``sort_key(sym)`` fixing the PBW order of MINUS symbols;

the top module is any object with ``act(sym, v) -> Vec`` for ZERO symbols
and ``weight(v)``.  Basis keys of the induced module are ``(mono, v)``
with ``mono`` a nondecreasing tuple of MINUS symbols.
"""

from __future__ import annotations

from .linalg import Echelon, Vec

MINUS, ZERO, PLUS = -1, 0, 1


class Induced:
    def __init__(self, data, top):
        self.data, self.top = data, top
        self._memo = {}
        self._wmemo = {}

    def weight(self, key):
        w = self._wmemo.get(key)
        if w is None:
            mono, v = key
            w = self.top.weight(v)
            for x in mono:
                w = self.data.add(w, self.data.weight(x))
            self._wmemo[key] = w
        return w

    def act(self, x, key) -> Vec:
        memo_key = (x, key)
        hit = self._memo.get(memo_key)
        if hit is not None:
            return hit
        res = self._act(x, key)
        self._memo[memo_key] = res
        return res

    def _act(self, x, key) -> Vec:
        data = self.data
        mono, v = key
        kind = data.kind(x)
        if not mono:
            if kind == MINUS:
                return Vec({((x,), v): 1})
            if kind == ZERO:
                return Vec((((), u), c) for u, c in self.top.act(x, v).items())
            return Vec()
        y = mono[0]
        if kind == MINUS and data.sort_key(x) <= data.sort_key(y):
            return Vec({((x,) + mono, v): 1})
        rest = (mono[1:], v)
        # x y rest = y (x rest) + [x, y] rest
        out = Vec()
        for k2, c in self.act(x, rest).items():
            out.iadd(self.act(y, k2), c)
        for z, c in data.bracket(x, y).items():
            out.iadd(self.act(z, rest), c)
        return out

    def act_vec(self, x: dict, v: dict) -> Vec:
        """Action of an algebra element (Vec over symbols) on a module vector."""
        out = Vec()
        for sym, a in x.items():
            for key, b in v.items():
                r = self.act(sym, key)
                if r:
                    out.iadd(r, a * b)
        return out


class Quotient:
    """Irreducible quotient L of an induced module, restricted to what a
    finite family of PLUS symbols can see.

    ``q(key)`` is the image of a basis key in L, in coordinates of the weight
    space it lies in.  On the top those coordinates are the top keys
    themselves; below the top, a vector is recorded through its images under
    ``plus_at(weight)`` (each pushed to its own weight by ``q``), and
    coordinates refer to a growing echelon basis of such image vectors.
    With every PLUS basis symbol available this is exactly the maximal
    submodule meeting the top trivially; with a truncated family it can only
    make weight spaces smaller.
    """

    def __init__(self, induced: Induced, plus_at):
        self.ind = induced
        self.plus_at = plus_at
        self._q = {}
        self._ech = {}
        self.reps = {}

    def q(self, key) -> Vec:
        hit = self._q.get(key)
        if hit is not None:
            return hit
        mono, v = key
        if not mono:
            res = Vec({("t", v): 1})
        else:
            w = self.ind.weight(key)
            img = self.image(key, w)
            if not img:
                res = Vec()
            else:
                ech = self._ech.setdefault(w, Echelon())
                res = ech.coordinates(img)
                if res is None:
                    tag = len(ech.tags)
                    ech.add(img, tag=tag)
                    self.reps.setdefault(w, []).append(key)
                    res = Vec({tag: 1})
        self._q[key] = res
        return res

    def image(self, key, w=None) -> Vec:
        w = self.ind.weight(key) if w is None else w
        out = Vec()
        for i, x in enumerate(self.plus_at(w)):
            for k2, c in self.ind.act(x, key).items():
                for ck, cc in self.q(k2).items():
                    out.add_term((i, ck), c * cc)
        return out

    def q_vec(self, v: dict) -> Vec:
        out = Vec()
        for key, c in v.items():
            out.iadd(self.q(key), c)
        return out

    def dim_spanned(self, keys) -> int:
        ech = Echelon()
        for key in keys:
            ech.add(self.q(key))
        return ech.rank


def by_weight(induced: Induced, keys) -> dict:
    out = {}
    for key in keys:
        out.setdefault(induced.weight(key), []).append(key)
    return out


def character(quotient: Quotient, keys) -> dict:
    """weight -> dimension of the image of ``keys`` in the quotient."""
    groups = by_weight(quotient.ind, keys)
    return {w: quotient.dim_spanned(ks) for w, ks in sorted(groups.items())}


def monomials(minus: list, sort_key, cost, budget, prune=None) -> list:
    """Nondecreasing tuples from ``minus`` (sorted by ``sort_key``) with total
    ``cost`` at most ``budget`` (costs must be positive).  ``prune(mono)``
    may cut a branch early."""
    syms = sorted(minus, key=sort_key)
    costs = [cost(x) for x in syms]
    out = [()]

    def grow(start, mono, spent):
        for i in range(start, len(syms)):
            c = spent + costs[i]
            if c > budget:
                continue
            m = mono + (syms[i],)
            if prune is not None and prune(m):
                continue
            out.append(m)
            grow(i, m, c)

    grow(0, (), 0)
    return out
