"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored as coordinate vectors in the power basis
``1, z, ..., z^(phi(N)-1)`` of ``Q[x]/(Phi_N(x))`` where ``z = zeta_N``.
Reduction modulo the cyclotomic polynomial keeps the representation
canonical, so equality is coordinate equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "CycScalar",
    "OrderMismatchError",
    "cyclotomic_polynomial",
    "totient",
    "root_of_unity",
    "field_ops",
    "as_scalar",
    "lcm",
]


class OrderMismatchError(ValueError):
    """Raised when two scalars from different cyclotomic fields are combined."""


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def _divide_monic(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dq = len(den) - 1
    quot = [0] * (len(num) - dq)
    for i in range(len(num) - 1, dq - 1, -1):
        c = num[i]
        if c:
            quot[i - dq] = c
            for j, d in enumerate(den):
                num[i - dq + j] -= c * d
    if any(num[:dq]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _divide_monic(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def totient(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    # row j = coordinates of x^j, for 0 <= j < max(n, 2*phi(n) - 1)
    phi = cyclotomic_polynomial(n)
    e = len(phi) - 1
    rows = []
    for j in range(e):
        rows.append(tuple(Fraction(int(i == j)) for i in range(e)))
    for j in range(e, max(n, 2 * e - 1)):
        prev = rows[-1]
        # x * prev, then replace x^e by -sum(phi_i x^i)
        top = prev[-1]
        shifted = (Fraction(0),) + prev[:-1]
        rows.append(tuple(shifted[i] - top * phi[i] for i in range(e)))
    return tuple(rows)


class CycScalar:
    """Immutable element of Q(zeta_N).

    ``CycScalar(4, [0, 1])`` is the imaginary unit.  Plain ``int`` and
    ``Fraction`` operands are accepted and embedded as rationals; scalars
    of a different order are rejected.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise ValueError("order must be a positive integer")
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != totient(order):
            raise ValueError(
                f"expected {totient(order)} coordinates for order {order}, got {len(coeffs)}"
            )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("CycScalar is immutable")

    @classmethod
    def _raw(cls, order, coeffs):
        obj = object.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def rational(cls, order: int, value) -> "CycScalar":
        e = totient(order)
        return cls._raw(order, (Fraction(value),) + (Fraction(0),) * (e - 1))

    @classmethod
    def zero(cls, order: int) -> "CycScalar":
        return cls.rational(order, 0)

    @classmethod
    def one(cls, order: int) -> "CycScalar":
        return cls.rational(order, 1)

    # -- predicates -------------------------------------------------------

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return any(self.coeffs)

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"cannot combine orders {self.order} and {other.order}; embed first"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.rational(self.order, other)
        return NotImplemented

    def embed(self, order: int) -> "CycScalar":
        """Image under Q(zeta_m) -> Q(zeta_N), zeta_m -> zeta_N^(N/m)."""
        if order % self.order:
            raise OrderMismatchError(f"{self.order} does not divide {order}")
        if order == self.order:
            return self
        step = order // self.order
        table = _power_table(order)
        e = totient(order)
        out = [Fraction(0)] * e
        for j, c in enumerate(self.coeffs):
            if c:
                row = table[(j * step) % order]
                for i in range(e):
                    out[i] += c * row[i]
        return CycScalar._raw(order, tuple(out))

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return CycScalar._raw(self.order, tuple(-c for c in self.coeffs))

    def __pos__(self):
        return self

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycScalar._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycScalar._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycScalar._raw(self.order, tuple(c * other for c in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        e = len(a)
        if e == 1:
            return CycScalar._raw(self.order, (a[0] * b[0],))
        prod = [Fraction(0)] * (2 * e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:e]
        table = _power_table(self.order)
        for j in range(e, 2 * e - 1):
            c = prod[j]
            if c:
                row = table[j]
                for i in range(e):
                    out[i] += c * row[i]
        return CycScalar._raw(self.order, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if not self:
            raise ZeroDivisionError("division by zero in Q(zeta_N)")
        e = len(self.coeffs)
        if e == 1:
            return CycScalar._raw(self.order, (1 / self.coeffs[0],))
        # columns of the multiplication-by-self matrix are self * x^j
        cols = [(self * root_of_unity(self.order, j)).coeffs for j in range(e)]
        aug = [[cols[j][i] for j in range(e)] + [Fraction(int(i == 0))] for i in range(e)]
        for c in range(e):
            p = next(r for r in range(c, e) if aug[r][c])
            aug[c], aug[p] = aug[p], aug[c]
            piv = aug[c][c]
            aug[c] = [x / piv for x in aug[c]]
            for r in range(e):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return CycScalar._raw(self.order, tuple(aug[i][e] for i in range(e)))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(zeta_N)")
            return CycScalar._raw(self.order, tuple(c / other for c in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = CycScalar.one(self.order)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            if other.order == self.order:
                return self.coeffs == other.coeffs
            n = lcm(self.order, other.order)
            return self.embed(n).coeffs == other.embed(n).coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def _minimal_form(self):
        # smallest M | N with self in the image of Q(zeta_M)
        from .linalg import Echelon, Vec

        for m in sorted(d for d in range(1, self.order + 1) if self.order % d == 0):
            if m == self.order:
                return m, self.coeffs
            ech = Echelon()
            for j in range(totient(m)):
                image = root_of_unity(m, j).embed(self.order)
                ech.add(Vec(enumerate(image.coeffs)), tag=j)
            coords = ech.coordinates(Vec(enumerate(self.coeffs)))
            if coords is not None:
                return m, tuple(Fraction(coords.get(j, 0)) for j in range(totient(m)))
        raise AssertionError("unreachable")

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.is_rational():
                h = hash(self.coeffs[0])
            else:
                h = hash(self._minimal_form())
            object.__setattr__(self, "_hash", h)
        return h

    # -- presentation -----------------------------------------------------

    def __repr__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if j == 0 else ("z" if j == 1 else f"z^{j}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return f"({' + '.join(terms)} in Q(z{self.order}))"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "CycScalar":
        return cls(int(data["order"]), [Fraction(int(p), int(q)) for p, q in data["coeffs"]])


def root_of_unity(N: int, k: int) -> CycScalar:
    """zeta_N ** k, reduced."""
    if N < 1:
        raise ValueError("order must be a positive integer")
    return CycScalar._raw(N, _power_table(N)[k % N])


def field_ops(a: CycScalar, b: CycScalar, op: str) -> CycScalar:
    if not (isinstance(a, CycScalar) and isinstance(b, CycScalar)):
        raise TypeError("field_ops expects two CycScalar operands")
    if a.order != b.order:
        raise OrderMismatchError(f"orders {a.order} and {b.order} differ")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def as_scalar(value, order: int) -> CycScalar:
    """Parse ints, fractions, ``"p/q"`` strings and JSON dicts into Q(zeta_order)."""
    if isinstance(value, CycScalar):
        return value.embed(order)
    if isinstance(value, dict):
        return CycScalar.from_json(value).embed(order)
    if isinstance(value, str):
        return CycScalar.rational(order, Fraction(value))
    if isinstance(value, (int, Fraction)):
        return CycScalar.rational(order, value)
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def simplify(c):
    """Demote rational CycScalars to Fraction; everything else is returned as is."""
    if isinstance(c, CycScalar):
        return c.coeffs[0] if c.is_rational() else c
    if isinstance(c, int):
        return Fraction(c)
    return c


def scalar_to_json(c):
    c = simplify(c)
    if isinstance(c, CycScalar):
        return c.to_json()
    return str(c)


def scalar_from_json(data):
    if isinstance(data, dict):
        return simplify(CycScalar.from_json(data))
    return Fraction(data)
