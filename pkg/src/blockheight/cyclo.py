"""Exact arithmetic in cyclotomic fields Q(zeta_e).

Elements are stored on the power basis 1, zeta, ..., zeta^(phi(e)-1) of
Q(zeta_e) with Fraction coefficients, so every computation here is exact.
Reduction of higher powers of zeta uses precomputed integer rows derived
from the cyclotomic polynomial Phi_e.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import gcd

from .numtheory import euler_phi


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("non-exact polynomial division")
        quot[i - dd] = q
        for j, dc in enumerate(den):
            num[i - dd + j] -= q * dc
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return quot


@cache
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e, ascending, monic."""
    if e < 1:
        raise ValueError("conductor must be positive")
    if e == 1:
        return (-1, 1)
    poly = [0] * (e + 1)
    poly[0], poly[e] = -1, 1
    for d in range(1, e):
        if e % d == 0:
            poly = _poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@cache
def _reduction_rows(e: int) -> tuple[tuple[int, ...], ...]:
    """Row k is zeta_e^k written on the power basis (k in [0, 2*phi(e))).

    Products of two reduced elements have exponents below 2*phi(e)-1, and
    exponent vectors of length e are folded with rows below e; the table
    covers max(e, 2*phi(e)) exponents.
    """
    deg = euler_phi(e)
    phi = cyclotomic_polynomial(e)
    assert len(phi) == deg + 1
    # zeta^deg = -(phi_0 + phi_1 zeta + ... + phi_{deg-1} zeta^{deg-1})
    top = [-c for c in phi[:deg]]
    rows: list[tuple[int, ...]] = []
    for k in range(deg):
        row = [0] * deg
        row[k] = 1
        rows.append(tuple(row))
    current = list(top)
    rows.append(tuple(current))
    for _ in range(deg + 1, max(e, 2 * deg)):
        nxt = [0] * deg
        carry = current[deg - 1]
        for j in range(deg - 1):
            nxt[j + 1] = current[j]
        if carry:
            for j in range(deg):
                nxt[j] += carry * top[j]
        rows.append(tuple(nxt))
        current = nxt
    return tuple(rows)


def reduce_exponent_vector(e: int, vec) -> list:
    """Fold a coefficient vector on zeta^0..zeta^(len-1) onto the power basis.

    Works for int or Fraction coefficients; zero entries are skipped, which
    matters because character-value vectors are sparse.
    """
    rows = _reduction_rows(e)
    deg = euler_phi(e)
    out = [0] * deg
    for k, c in enumerate(vec):
        if not c:
            continue
        if k < deg:
            out[k] += c
        else:
            row = rows[k]
            for j in range(deg):
                if row[j]:
                    out[j] += c * row[j]
    return out


class Cyclotomic:
    """An element of Q(zeta_e) with exact Fraction coordinates."""

    __slots__ = ("conductor", "coeffs")
    __hash__ = None  # equality crosses conductors; not suitable for hashing

    def __init__(self, conductor: int, coeffs) -> None:
        deg = euler_phi(conductor)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != deg:
            raise ValueError(f"need {deg} coefficients for conductor {conductor}")
        self.conductor = conductor
        self.coeffs = coeffs

    # ---- constructors -------------------------------------------------

    @classmethod
    def from_fraction(cls, value, conductor: int = 1) -> "Cyclotomic":
        deg = euler_phi(conductor)
        coeffs = [Fraction(value)] + [Fraction(0)] * (deg - 1)
        return cls(conductor, coeffs)

    @classmethod
    def zero(cls, conductor: int = 1) -> "Cyclotomic":
        return cls.from_fraction(0, conductor)

    @classmethod
    def one(cls, conductor: int = 1) -> "Cyclotomic":
        return cls.from_fraction(1, conductor)

    @classmethod
    def root_of_unity(cls, e: int, k: int = 1) -> "Cyclotomic":
        vec = [0] * e
        vec[k % e] = 1
        return cls.from_exponent_vector(e, vec)

    @classmethod
    def from_exponent_vector(cls, e: int, vec) -> "Cyclotomic":
        """Build sum_k vec[k] * zeta_e^k."""
        if len(vec) > max(e, 2 * euler_phi(e)):
            raise ValueError("exponent vector longer than reduction table")
        return cls(e, reduce_exponent_vector(e, vec))

    # ---- conductor handling -------------------------------------------

    def promote(self, e: int) -> "Cyclotomic":
        """Rewrite in Q(zeta_e); e must be a multiple of the conductor."""
        if e == self.conductor:
            return self
        if e % self.conductor != 0:
            raise ValueError(f"{e} is not a multiple of conductor {self.conductor}")
        step = e // self.conductor
        vec = [Fraction(0)] * e
        for k, c in enumerate(self.coeffs):
            vec[k * step] += c
        return Cyclotomic.from_exponent_vector(e, vec)

    @staticmethod
    def _common(a: "Cyclotomic", b: "Cyclotomic"):
        e = a.conductor * b.conductor // gcd(a.conductor, b.conductor)
        return a.promote(e), b.promote(e)

    @staticmethod
    def _coerce(value) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Fraction)):
            return Cyclotomic.from_fraction(value)
        return NotImplemented

    # ---- ring operations ----------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(self, other)
        return Cyclotomic(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.conductor, [c * other for c in self.coeffs])
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(self, other)
        n = len(a.coeffs)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] += x * y
        return Cyclotomic.from_exponent_vector(a.conductor, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic(self.conductor, [c / other for c in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers not supported")
        result = Cyclotomic.one(self.conductor)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "Cyclotomic":
        """Complex conjugation zeta |-> zeta^(-1)."""
        e = self.conductor
        vec = [Fraction(0)] * e
        for k, c in enumerate(self.coeffs):
            vec[(e - k) % e] += c
        return Cyclotomic.from_exponent_vector(e, vec)

    # ---- predicates and extraction ------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def as_int(self) -> int:
        f = self.as_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return f.numerator

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(self, other)
        return a.coeffs == b.coeffs

    def __bool__(self):
        return not self.is_zero()

    # ---- display -------------------------------------------------------

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            power = f"z{self.conductor}" if k == 1 else f"z{self.conductor}^{k}"
            if c == 1:
                term = power
            elif c == -1:
                term = f"-{power}"
            else:
                term = f"{c}*{power}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, {list(self.coeffs)!r})"
