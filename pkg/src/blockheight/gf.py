"""Small finite fields F_{p^m} with a deterministic choice of modulus.

Elements are coefficient tuples (c_0, ..., c_{m-1}) on the polynomial basis;
the modulus is the lex-smallest monic irreducible of degree m over F_p, where
polynomials are ordered by the integer value sum(c_i * p^i) of their
non-leading coefficients.  Everything downstream (block reductions, matrix
groups over non-prime fields) relies on this determinism.
"""

from __future__ import annotations

from functools import cache

from .numtheory import factorize, is_prime, prime_factors


def _pol_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pol_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = (out[i + j] + x * y) % p
    return _pol_divmod_rem(out, mod, p)


def _pol_divmod_rem(f, mod, p):
    f = list(f)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    for i in range(len(f) - 1, dm - 1, -1):
        c = f[i] % p
        if not c:
            continue
        q = c * inv_lead % p
        for j in range(dm + 1):
            f[i - dm + j] = (f[i - dm + j] - q * mod[j]) % p
    return _pol_trim([c % p for c in f[:dm]])


def _pol_powmod(base, n, mod, p):
    result = [1]
    base = _pol_divmod_rem(base, mod, p)
    while n:
        if n & 1:
            result = _pol_mulmod(result, base, mod, p)
        base = _pol_mulmod(base, base, mod, p)
        n >>= 1
    return result


def _pol_gcd(a, b, p):
    a, b = _pol_trim(list(a)), _pol_trim(list(b))
    while b:
        a, b = b, _pol_divmod_rem(a, b, p)
    return a


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    m = len(f) - 1
    if m < 1:
        return False
    x = [0, 1]
    xq = _pol_powmod(x, p**m, f, p)
    # x^(p^m) must equal x mod f
    diff = list(xq) + [0, 0]
    diff[1] = (diff[1] - 1) % p
    if _pol_trim([c % p for c in diff]):
        return False
    for r in prime_factors(m):
        xr = _pol_powmod(x, p ** (m // r), f, p)
        diff = list(xr) + [0, 0]
        diff[1] = (diff[1] - 1) % p
        g = _pol_gcd(diff, f, p)
        if len(g) != 1:
            return False
    return True


@cache
def _find_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    for k in range(p**m):
        coeffs = []
        kk = k
        for _ in range(m):
            coeffs.append(kk % p)
            kk //= p
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class GF:
    """Arithmetic in F_{p^m}; elements are tuples of length m."""

    def __init__(self, p: int, m: int) -> None:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError("degree must be positive")
        self.p = p
        self.m = m
        self.modulus = _find_modulus(p, m)
        self.size = p**m
        self.zero = (0,) * m
        self.one = (1,) + (0,) * (m - 1)
        self._mult_order = self.size - 1
        self._primitive: tuple[int, ...] | None = None

    # ---- element plumbing ---------------------------------------------

    def from_int(self, k: int) -> tuple[int, ...]:
        """Element with lex index k (base-p digits, constant term first)."""
        if not 0 <= k < self.size:
            raise ValueError("index out of range")
        out = []
        for _ in range(self.m):
            out.append(k % self.p)
            k //= self.p
        return tuple(out)

    def to_int(self, a: tuple[int, ...]) -> int:
        out = 0
        for c in reversed(a):
            out = out * self.p + c
        return out

    def elements(self):
        """All field elements in lex order."""
        for k in range(self.size):
            yield self.from_int(k)

    # ---- arithmetic ----------------------------------------------------

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        prod = _pol_mulmod(list(a), list(b), list(self.modulus), self.p)
        return tuple(prod) + (0,) * (self.m - len(prod))

    def scalar_mul(self, c: int, a):
        c %= self.p
        return tuple(c * x % self.p for x in a)

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverting zero field element")
        return self.pow(a, self.size - 2)

    # ---- multiplicative structure --------------------------------------

    def element_order(self, a) -> int:
        if a == self.zero:
            raise ValueError("zero has no multiplicative order")
        order = self._mult_order
        for r in prime_factors(order):
            while order % r == 0 and self.pow(a, order // r) == self.one:
                order //= r
        return order

    def primitive_element(self):
        """Lex-smallest generator of the multiplicative group."""
        if self._primitive is None:
            radicals = prime_factors(self._mult_order)
            for k in range(1, self.size):
                a = self.from_int(k)
                if all(
                    self.pow(a, self._mult_order // r) != self.one
                    for r in radicals
                ):
                    self._primitive = a
                    break
            assert self._primitive is not None
        return self._primitive

    def element_of_order(self, n: int):
        """Lex-smallest element of multiplicative order exactly n."""
        if n == 1:
            return self.one
        if self._mult_order % n:
            raise ValueError(f"no element of order {n} in F_{self.p}^{self.m}")
        delta = self.pow(self.primitive_element(), self._mult_order // n)
        best = None
        for j in range(1, n):
            if _coprime(j, n):
                cand = self.pow(delta, j)
                if best is None or self.to_int(cand) < self.to_int(best):
                    best = cand
        assert best is not None and self.element_order(best) == n
        return best


def _coprime(a: int, b: int) -> bool:
    while b:
        a, b = b, a % b
    return a == 1
