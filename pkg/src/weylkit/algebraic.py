"""Exact arithmetic in the ring Z[2cos(pi/L)].

Used by the geometric representation of non-crystallographic Coxeter
systems (e.g. m = 5), where the reflection coefficients 2cos(pi/m) are
irrational.  Zero tests are exact; signs of non-zero elements are decided
numerically at adaptively increased precision.
"""
from __future__ import annotations

from functools import lru_cache

import mpmath
import sympy


class RealCyclotomicRing:
    """The ring Z[theta] with theta = 2cos(pi/L)."""

    def __init__(self, L: int):
        if L < 1:
            raise ValueError("L must be positive")
        self.L = L
        x = sympy.Symbol("x")
        poly = sympy.Poly(sympy.minimal_polynomial(2 * sympy.cos(sympy.pi / L), x), x)
        coeffs = [int(c) for c in poly.all_coeffs()]
        if coeffs[0] != 1:
            raise ArithmeticError("minimal polynomial of 2cos(pi/L) should be monic")
        # theta^d = -sum(low[k] theta^k)
        self.degree = len(coeffs) - 1
        self._low = tuple(reversed(coeffs[1:]))
        self.zero = Cyc(self, (0,) * self.degree)
        self.one = self.from_int(1)

    def from_int(self, a: int) -> "Cyc":
        return Cyc(self, (a,) + (0,) * (self.degree - 1))

    def theta(self) -> "Cyc":
        if self.degree == 1:
            # theta is rational (L in {1, 2, 3}); its value sits in the constant term.
            return self.from_int(-self._low[0])
        return Cyc(self, (0, 1) + (0,) * (self.degree - 2))

    def two_cos_pi_over(self, m: int) -> "Cyc":
        """2cos(pi/m) for m dividing L, via the Dickson recurrence in theta."""
        if self.L % m:
            raise ValueError(f"{m} does not divide {self.L}")
        k = self.L // m
        t = self.theta()
        prev, cur = self.from_int(2), t
        if k == 0:
            return prev
        for _ in range(k - 1):
            prev, cur = cur, t * cur - prev
        return cur

    def _reduce(self, coeffs: list[int]) -> tuple[int, ...]:
        d = self.degree
        for top in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[top]
            if c:
                coeffs[top] = 0
                for k, a in enumerate(self._low):
                    coeffs[top - d + k] -= c * a
        coeffs = coeffs[:d] + [0] * (d - len(coeffs))
        return tuple(coeffs)

    def __repr__(self) -> str:
        return f"RealCyclotomicRing(L={self.L})"


class Cyc:
    __slots__ = ("ring", "c", "_hash")

    def __init__(self, ring: RealCyclotomicRing, c: tuple[int, ...]):
        self.ring = ring
        self.c = c
        self._hash = hash(c)

    def _coerce(self, other) -> "Cyc":
        if isinstance(other, Cyc):
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyc(self.ring, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.ring, tuple(-a for a in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyc(self.ring, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyc(self.ring, tuple(a * other for a in self.c))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        prod = [0] * (2 * self.ring.degree - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        return Cyc(self.ring, self.ring._reduce(prod))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return self._hash

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self) -> bool:
        return any(self.c)

    def sign(self) -> int:
        if self.is_zero():
            return 0
        return _sign(self.ring.L, self.c)

    def __float__(self):
        theta = 2 * mpmath.cos(mpmath.pi / self.ring.L)
        return float(sum(a * theta**k for k, a in enumerate(self.c)))

    def __repr__(self):
        return f"Cyc({self.c})"


@lru_cache(maxsize=1 << 16)
def _sign(L: int, c: tuple[int, ...]) -> int:
    digits = 30 + max(len(str(abs(a))) for a in c)
    for _ in range(12):
        with mpmath.workdps(digits):
            theta = 2 * mpmath.cos(mpmath.pi / L)
            v = mpmath.fsum(a * theta**k for k, a in enumerate(c))
            if abs(v) > mpmath.mpf(10) ** (-(digits // 2)):
                return 1 if v > 0 else -1
        digits *= 2
    raise ArithmeticError("could not resolve the sign of a non-zero algebraic number")


def sign(x) -> int:
    if isinstance(x, int):
        return (x > 0) - (x < 0)
    return x.sign()
