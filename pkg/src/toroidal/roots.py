"""Finite root systems given by explicit weight coordinates.

A weight is a tuple of Fractions: its values on a fixed basis ``h_1..h_r``
of a Cartan subalgebra.  The inner product on weights comes from the Gram
matrix ``G_ij = (h_i, h_j)`` of the invariant form: ``(a, b) = a G^{-1} b``.
"""

from __future__ import annotations

from fractions import Fraction


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve ``rows @ x = rhs`` (square or overdetermined, consistent) exactly."""
    n = len(rows[0]) if rows else 0
    aug = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if any(row[-1] for row in aug[r:]):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = aug[i][-1]
    return x


def _inverse(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    cols = []
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        col = _solve(m, e)
        if col is None:
            raise ValueError("singular Gram matrix")
        cols.append(col)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def wadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def wsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def wscale(c, a):
    return tuple(c * x for x in a)


def is_zero(a) -> bool:
    return not any(a)


def lex_sign(a) -> int:
    for x in a:
        if x:
            return 1 if x > 0 else -1
    return 0


class RootSystem:
    """Nonzero roots (weight tuples) with the positive system fixed by the
    lexicographic order of the coordinates, unless ``positive`` is given."""

    def __init__(self, roots, gram, positive=None):
        roots = {tuple(Fraction(x) for x in r) for r in roots}
        self.rank = len(gram)
        self.roots = sorted(r for r in roots if not is_zero(r))
        self.gram = [[Fraction(x) for x in row] for row in gram]
        self._ginv = _inverse(self.gram) if self.rank else []
        if positive is None:
            self.positive = [r for r in self.roots if lex_sign(r) > 0]
        else:
            self.positive = [tuple(Fraction(x) for x in r) for r in positive]
        pos = set(self.positive)
        sums = {wadd(a, b) for a in self.positive for b in self.positive}
        self.simple = [r for r in self.positive if r not in sums]
        if positive is None:
            self.simple.sort(reverse=True)
        self._simple_rows = [list(col) for col in zip(*self.simple)] if self.simple else []
        self.positive.sort(key=lambda r: (self.height(r), r))
        self._pos = pos

    # -- inner products -----------------------------------------------------
    def inner(self, a, b) -> Fraction:
        g = self._ginv
        return sum((a[i] * g[i][j] * b[j] for i in range(self.rank) for j in range(self.rank)), Fraction(0))

    def norm2(self, a) -> Fraction:
        return self.inner(a, a)

    # -- coordinates in the simple roots -------------------------------------
    def simple_coords(self, weight) -> tuple | None:
        """Coordinates of ``weight`` in the simple roots (None if outside their span)."""
        if not self.simple:
            return () if is_zero(weight) else None
        x = _solve(self._simple_rows, list(weight))
        return None if x is None else tuple(x)

    def height(self, weight) -> Fraction:
        c = self.simple_coords(weight)
        if c is None:
            raise ValueError(f"{weight} is not in the root lattice span")
        return sum(c, Fraction(0))

    def sign(self, weight) -> int:
        """+1/-1/0 by the first nonzero simple-root coordinate."""
        c = self.simple_coords(weight)
        if c is None:
            return lex_sign(weight)
        return lex_sign(c)

    def is_positive(self, weight) -> bool:
        return self.sign(weight) > 0

    def coroot(self, root):
        """Coordinates of ``2 t_a / (a, a)`` on the basis ``h_i`` (with ``t_a`` dual to ``a``)."""
        n2 = self.norm2(root)
        g = self._ginv
        return tuple(2 * sum(g[i][j] * root[j] for j in range(self.rank)) / n2 for i in range(self.rank))

    # -- classification ---------------------------------------------------------
    def cartan_matrix(self) -> list[list[Fraction]]:
        s = self.simple
        return [[2 * self.inner(a, b) / self.inner(b, b) for b in s] for a in s]

    def lengths(self) -> list[Fraction]:
        return sorted({self.norm2(r) for r in self.roots})

    def short_roots(self) -> list:
        if not self.roots:
            return []
        m = min(self.norm2(r) for r in self.roots)
        return [r for r in self.roots if self.norm2(r) == m]

    def long_roots(self) -> list:
        if not self.roots:
            return []
        m = max(self.norm2(r) for r in self.roots)
        return [r for r in self.roots if self.norm2(r) == m]

    def is_reduced(self) -> bool:
        rs = set(self.roots)
        return not any(wscale(2, r) in rs for r in self.roots)

    def is_irreducible(self) -> bool:
        s = self.simple
        if not s:
            return False
        seen, todo = {0}, [0]
        while todo:
            i = todo.pop()
            for j in range(len(s)):
                if j not in seen and self.inner(s[i], s[j]):
                    seen.add(j)
                    todo.append(j)
        return len(seen) == len(s)

    def is_root_system(self) -> bool:
        """Closed under reflections, integral Cartan numbers, spans the rank."""
        rs = set(self.roots)
        for a in self.roots:
            n2 = self.norm2(a)
            if n2 <= 0:
                return False
            for b in self.roots:
                c = 2 * self.inner(a, b) / n2
                if c.denominator != 1:
                    return False
                if wsub(b, wscale(c, a)) not in rs:
                    return False
        return len(self.simple) == self.rank and all(self.simple_coords(r) is not None for r in self.roots)

    def cartan_type(self) -> str:
        """Cartan-Killing label such as ``A2`` or ``B2`` for an irreducible reduced system."""
        if not self.is_irreducible() or not self.is_reduced():
            raise ValueError("cartan_type needs an irreducible reduced root system")
        l, count = len(self.simple), len(self.roots)
        nlen = len(self.lengths())
        if nlen == 1:
            if count == l * (l + 1):
                return f"A{l}"
            if l >= 4 and count == 2 * l * (l - 1):
                return f"D{l}"
            return {(6, 72): "E6", (7, 126): "E7", (8, 240): "E8"}[(l, count)]
        if count == 2 * l * l:
            return f"B{l}" if len(self.short_roots()) == 2 * l else f"C{l}"
        return {(2, 12): "G2", (4, 48): "F4"}[(l, count)]

    def is_type_B(self, a1_as_b1: bool = False) -> bool:
        t = self.cartan_type()
        return t.startswith("B") or (a1_as_b1 and t == "A1")

    def __repr__(self):
        return f"RootSystem(rank={self.rank}, roots={len(self.roots)})"


def enlarge_roots(delta0: RootSystem, a1_as_b1: bool = False) -> set:
    """The enlarged set ``Δ_{0,en}`` including the zero weight.

    Short roots are doubled exactly when ``delta0`` is of type B (with the
    rank-one system counted as B1 only when ``a1_as_b1`` is set).
    """
    if not delta0.is_irreducible() or not delta0.is_reduced():
        raise ValueError("enlarge_roots needs an irreducible reduced root system")
    out = set(delta0.roots)
    if delta0.is_type_B(a1_as_b1):
        out |= {wscale(2, r) for r in delta0.short_roots()}
    out.add(tuple(Fraction(0) for _ in range(delta0.rank)))
    return out


def weyl_dimension(rs: RootSystem, dynkin) -> int:
    """Weyl dimension formula for the irreducible module with Dynkin labels ``dynkin``."""
    # fundamental weights: (w_i, coroot of simple j) = delta_ij
    s = rs.simple
    coroots = [tuple(2 * x / rs.norm2(a) for x in a) for a in s]
    # lambda = sum_i dynkin_i w_i; (lambda + rho, a^vee) = sum_i (dynkin_i + 1) * (w_i, a^vee)
    # write positive coroot a^vee = sum_j c_j simple_coroot_j, then (w_i, a^vee) = c_i.
    num = den = Fraction(1)
    for a in rs.positive:
        av = tuple(2 * x / rs.norm2(a) for x in a)
        c = _solve([list(col) for col in zip(*coroots)], list(av))
        num *= sum(((Fraction(dynkin[i]) + 1) * c[i] for i in range(len(s))), Fraction(0))
        den *= sum(c, Fraction(0))
    d = num / den
    assert d.denominator == 1
    return int(d)
