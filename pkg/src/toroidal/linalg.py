"""Sparse exact linear algebra over any field whose elements support
``+ - * /`` and truthiness (Fraction, CycScalar).

Vectors are dictionaries from hashable, mutually comparable keys to
scalars with zero entries removed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable


class Vec(dict):
    """Finitely supported vector ``key -> scalar``; zeros are never stored."""

    def __init__(self, data=()):
        super().__init__()
        items = data.items() if isinstance(data, dict) else data
        for k, c in items:
            self.add_term(k, c)

    def add_term(self, key, coeff):
        if not coeff:
            return self
        new = self.get(key, 0) + coeff
        if new:
            self[key] = new
        else:
            del self[key]
        return self

    def iadd(self, other: dict, coeff=1):
        """``self += coeff * other`` in place."""
        if not coeff:
            return self
        if coeff == 1:
            for k, c in other.items():
                self.add_term(k, c)
        else:
            for k, c in other.items():
                self.add_term(k, coeff * c)
        return self

    def scaled(self, coeff) -> "Vec":
        if not coeff:
            return Vec()
        out = Vec()
        for k, c in self.items():
            dict.__setitem__(out, k, c * coeff)
        return out

    def __add__(self, other):
        return Vec(self).iadd(other)

    def __sub__(self, other):
        return Vec(self).iadd(other, -1)

    def __neg__(self):
        return self.scaled(-1)

    def __mul__(self, coeff):
        return self.scaled(coeff)

    __rmul__ = __mul__

    def map_keys(self, fn) -> "Vec":
        out = Vec()
        for k, c in self.items():
            out.add_term(fn(k), c)
        return out

    def __repr__(self):
        body = ", ".join(f"{k!r}: {c!r}" for k, c in sorted(self.items(), key=lambda kv: repr(kv[0])))
        return f"Vec({{{body}}})"


class Echelon:
    """Incrementally built reduced echelon basis of a span.

    Each inserted vector may carry a ``tag``; the basis then remembers how
    every stored row is expressed through the tags, which gives coordinates
    (:meth:`coordinates`) and linear relations among inserted vectors
    (returned by :meth:`add` when the vector is dependent).
    """

    def __init__(self):
        # pivot -> (row with row[pivot] == 1 and zeros at other pivots, tag combo)
        self.rows: dict[Hashable, tuple[Vec, Vec | None]] = {}
        self.tags: list = []

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v: dict, combo: Vec | None):
        r = Vec(v)
        for key in [k for k in v if k in self.rows]:
            c = v[key]
            row, rcombo = self.rows[key]
            r.iadd(row, -c)
            if combo is not None:
                combo.iadd(rcombo, -c)
        return r, combo

    def reduce(self, v: dict) -> Vec:
        return self._reduce(v, None)[0]

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def add(self, v: dict, tag=None):
        """Insert ``v``; return ``None`` if it was independent.

        A dependent vector returns the relation it satisfies: a Vec over
        tags (coefficient 1 on ``tag``) summing to zero, or an empty Vec
        for untagged inserts.
        """
        combo = Vec({tag: 1}) if tag is not None else None
        r, combo = self._reduce(v, combo)
        if not r:
            return combo if combo is not None else Vec()
        pivot = min(r)
        p = r[pivot]
        inv = Fraction(1, p) if isinstance(p, int) else 1 / p
        r = r.scaled(inv)
        if combo is not None:
            combo = combo.scaled(inv)
        for key, (row, rcombo) in list(self.rows.items()):
            f = row.get(pivot)
            if f:
                row = Vec(row).iadd(r, -f)
                if rcombo is not None and combo is not None:
                    rcombo = Vec(rcombo).iadd(combo, -f)
                self.rows[key] = (row, rcombo)
        self.rows[pivot] = (r, combo)
        if tag is not None:
            self.tags.append(tag)
        return None

    def coordinates(self, v: dict) -> Vec | None:
        """Express ``v`` through the tags of the independent inserts, or None."""
        r = Vec(v)
        out = Vec()
        for key in [k for k in v if k in self.rows]:
            c = v[key]
            row, combo = self.rows[key]
            r.iadd(row, -c)
            out.iadd(combo, c)
        return None if r else out

    def basis(self) -> list[Vec]:
        return [self.rows[k][0] for k in sorted(self.rows)]


def kernel(columns: list[dict]) -> list[Vec]:
    """Basis of ``{c : sum_j c_j columns[j] = 0}`` as Vecs over column indices."""
    ech = Echelon()
    out = []
    for j, col in enumerate(columns):
        rel = ech.add(col, tag=j)
        if rel is not None:
            out.append(rel)
    return out


def rank(vectors: Iterable[dict]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def span_contains(vectors: Iterable[dict], v: dict) -> bool:
    ech = Echelon()
    for w in vectors:
        ech.add(w)
    return ech.contains(v)


def same_span(a: Iterable[dict], b: Iterable[dict]) -> bool:
    ea, eb = Echelon(), Echelon()
    a, b = list(a), list(b)
    for v in a:
        ea.add(v)
    for v in b:
        eb.add(v)
    return ea.rank == eb.rank and all(ea.contains(v) for v in b)


def intersect(a: list[dict], b: list[dict]) -> list[Vec]:
    """Basis of span(a) ∩ span(b)."""
    cols = list(a) + [Vec(v).scaled(-1) for v in b]
    out = []
    for rel in kernel(cols):
        w = Vec()
        for j, c in rel.items():
            if j < len(a):
                w.iadd(a[j], c)
        if w:
            out.append(w)
    ech = Echelon()
    basis = []
    for w in out:
        if ech.add(w) is None:
            basis.append(w)
    return basis


# -- dense square matrices stored as dict-of-columns ------------------------


def mat_apply(cols: dict, v: dict) -> Vec:
    """Apply a matrix given as ``{j: column Vec}`` to a vector."""
    out = Vec()
    for j, c in v.items():
        col = cols.get(j)
        if col:
            out.iadd(col, c)
    return out


def mat_mul(a: dict, b: dict) -> dict:
    out = {}
    for j, col in b.items():
        v = mat_apply(a, col)
        if v:
            out[j] = v
    return out


def _flatten(cols: dict) -> Vec:
    out = Vec()
    for j, col in cols.items():
        for i, c in col.items():
            out.add_term((i, j), c)
    return out


def _unflatten(v: dict) -> dict:
    cols: dict = {}
    for (i, j), c in v.items():
        cols.setdefault(j, Vec()).add_term(i, c)
    return cols


def enveloping_algebra(generators: list[dict], dim: int, *, identity: bool = True) -> list[dict]:
    """Basis (as column dicts) of the associative algebra generated by matrices."""
    ech = Echelon()
    basis = []

    def push(m):
        if ech.add(_flatten(m)) is None:
            basis.append(m)
            return True
        return False

    if identity:
        push({j: Vec({j: 1}) for j in range(dim)})
    for g in generators:
        push(g)
    frontier = list(basis)
    while frontier:
        new = []
        for m in frontier:
            for g in generators:
                p = mat_mul(g, m)
                if p and push(p):
                    new.append(p)
        frontier = new
    return basis


def is_absolutely_irreducible(generators: list[dict], dim: int) -> bool:
    """Burnside: the generated algebra is all of ``End(V)``."""
    if dim == 0:
        return False
    return len(enveloping_algebra(generators, dim)) == dim * dim


def trace(m: dict):
    total = 0
    for j, col in m.items():
        total = total + col.get(j, 0)
    return total


def is_semisimple_algebra(basis: list[dict]) -> bool:
    """Trace form of a matrix algebra is nondegenerate iff its radical is zero
    (characteristic zero)."""
    n = len(basis)
    gram = [Vec((j, trace(mat_mul(basis[i], basis[j]))) for j in range(n)) for i in range(n)]
    return rank(gram) == n
