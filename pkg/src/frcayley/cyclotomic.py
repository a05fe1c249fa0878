"""Exact integer arithmetic on sums of roots of unity.

A :class:`RootOfUnitySum` of modulus e stores one integer coefficient per
power of w = exp(2*pi*i/e).  Whether such a sum is a rational integer is
decided by reduction modulo the e-th cyclotomic polynomial — never by
floating-point rounding.  Coefficients are plain Python integers, so no
magnitude can overflow.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; little-endian coefficients with no trailing zeros."""

    coeffs: tuple[int, ...]

    @staticmethod
    def of(coeffs: Sequence[int]) -> "IntPolynomial":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return IntPolynomial(tuple(cs))

    @staticmethod
    def x_pow_minus_one(e: int) -> "IntPolynomial":
        return IntPolynomial((-1,) + (0,) * (e - 1) + (1,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial.of(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPolynomial.of(out)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial.of(out)

    def divmod_by(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division by a monic divisor; quotient and remainder stay integral."""
        if not divisor.is_monic:
            raise ValueError("division is only supported by monic divisors")
        rem = list(self.coeffs)
        d = divisor.degree
        quot = [0] * max(0, len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                quot[i - d] = c
                for j, b in enumerate(divisor.coeffs):
                    rem[i - d + j] -= c * b
        return IntPolynomial.of(quot), IntPolynomial.of(rem)


def _divisors(e: int) -> list[int]:
    out = [d for d in range(1, e + 1) if e % d == 0]
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> IntPolynomial:
    """Minimal polynomial of a primitive e-th root of unity.

    Computed by exact division of x^e - 1 by the product of the cyclotomic
    polynomials of the proper divisors of e.
    """
    if e < 1:
        raise ValueError(f"order must be >= 1, got {e}")
    if e == 1:
        return IntPolynomial((-1, 1))
    den = IntPolynomial((1,))
    for d in _divisors(e)[:-1]:
        den = den * cyclotomic_polynomial(d)
    quot, rem = IntPolynomial.x_pow_minus_one(e).divmod_by(den)
    if not rem.is_zero:  # impossible for a correct divisor product
        raise ArithmeticError(f"inexact cyclotomic division at order {e}")
    return quot


@dataclass(frozen=True, eq=False)
class RootOfUnitySum:
    """Integer combination sum_k counts[k] * w^k with w = exp(2*pi*i/modulus).

    ``counts`` always has length exactly ``modulus``.  Two sums compare equal
    when they represent the same algebraic number (same modulus, equal
    reductions); representations are not canonical until :meth:`reduced`.
    """

    modulus: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if len(self.counts) != self.modulus:
            raise ValueError(
                f"counts has length {len(self.counts)}, expected modulus {self.modulus}"
            )

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, modulus: int) -> "RootOfUnitySum":
        return cls(modulus, (0,) * modulus)

    @classmethod
    def root(cls, modulus: int, k: int, mult: int = 1) -> "RootOfUnitySum":
        counts = [0] * modulus
        counts[k % modulus] = mult
        return cls(modulus, tuple(counts))

    @classmethod
    def integer(cls, modulus: int, value: int) -> "RootOfUnitySum":
        counts = [0] * modulus
        counts[0] = value
        return cls(modulus, tuple(counts))

    @classmethod
    def from_counts(cls, modulus: int, counts: Sequence[int]) -> "RootOfUnitySum":
        return cls(modulus, tuple(counts))

    # -- ring operations -------------------------------------------------

    def _match(self, other: "RootOfUnitySum") -> None:
        if self.modulus != other.modulus:
            raise ValueError(f"mixed moduli {self.modulus} and {other.modulus}")

    def __add__(self, other: "RootOfUnitySum") -> "RootOfUnitySum":
        self._match(other)
        return RootOfUnitySum(self.modulus, tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __sub__(self, other: "RootOfUnitySum") -> "RootOfUnitySum":
        self._match(other)
        return RootOfUnitySum(self.modulus, tuple(a - b for a, b in zip(self.counts, other.counts)))

    def __neg__(self) -> "RootOfUnitySum":
        return RootOfUnitySum(self.modulus, tuple(-a for a in self.counts))

    def scaled(self, c: int) -> "RootOfUnitySum":
        return RootOfUnitySum(self.modulus, tuple(c * a for a in self.counts))

    # -- canonicalization -------------------------------------------------

    def reduced(self) -> "RootOfUnitySum":
        """Canonical representative modulo the cyclotomic polynomial.

        After reduction only the first phi(modulus) entries may be nonzero,
        and the value is an integer iff all non-constant entries vanish.
        """
        phi = cyclotomic_polynomial(self.modulus).coeffs
        deg = len(phi) - 1
        rem = list(self.counts)
        for i in range(len(rem) - 1, deg - 1, -1):
            c = rem[i]
            if c:
                rem[i] = 0
                base = i - deg
                for j in range(deg):
                    rem[base + j] -= c * phi[j]
        return RootOfUnitySum(self.modulus, tuple(rem))

    def as_integer(self) -> Optional[int]:
        """The integer value of this sum, or None when it is irrational."""
        red = self.reduced()
        if any(red.counts[1:]):
            return None
        return red.counts[0]

    def approx(self) -> complex:
        """Floating-point value, for display and numeric cross-checks only."""
        e = self.modulus
        total = 0j
        for k, c in enumerate(self.counts):
            if c:
                total += c * cmath.exp(2j * cmath.pi * k / e)
        return total

    # -- comparison -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootOfUnitySum):
            return NotImplemented
        if self.modulus != other.modulus:
            return False
        return self.reduced().counts == other.reduced().counts

    def __repr__(self) -> str:
        return f"RootOfUnitySum(modulus={self.modulus}, counts={self.counts})"
