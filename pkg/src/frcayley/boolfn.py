"""Boolean functions on bit vectors and integer functions on abelian groups.

Covers the Walsh side (fast transform, bent / semi-bent classification,
eigenvalues of the associated Cayley graph) and the group-Fourier side
(exact transforms of integer-valued functions, unit-orbit class functions,
prime-power plateaued structure).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .cyclotomic import RootOfUnitySum
from .errors import NotClassFunctionError, SpecFormatError
from .groups import Element, FiniteAbelianGroup, make_group


def hadamard_transform(values: Sequence[int] | np.ndarray) -> np.ndarray:
    """Butterfly Walsh–Hadamard transform of an integer vector.

    Length must be a power of two; index j pairs with index x through the
    bit-wise dot product of their binary expansions.
    """
    out = np.array(values, dtype=np.int64, copy=True)
    m = out.size
    if m == 0 or m & (m - 1):
        raise ValueError(f"length must be a power of two, got {m}")
    h = 1
    while h < m:
        for start in range(0, m, 2 * h):
            a = out[start : start + h].copy()
            b = out[start + h : start + 2 * h].copy()
            out[start : start + h] = a + b
            out[start + h : start + 2 * h] = a - b
        h *= 2
    return out


@dataclass(frozen=True)
class BooleanFunction:
    """Truth table of f: F_2^n -> F_2, indexed in lexicographic bit order.

    Index i corresponds to the coordinate tuple whose first bit is the most
    significant bit of i (the same ranking the group modules use).
    """

    n: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"arity must be >= 1, got {self.n}")
        if len(self.table) != 1 << self.n:
            raise ValueError(f"table length {len(self.table)} != 2^{self.n}")
        if any(v not in (0, 1) for v in self.table):
            raise ValueError("table entries must be bits")

    @classmethod
    def from_hex(cls, hex_table: str) -> "BooleanFunction":
        """Parse a truth table from hex; bit j of the value is f at index j."""
        bits = 4 * len(hex_table)
        n = bits.bit_length() - 1
        if bits == 0 or (1 << n) != bits:
            raise SpecFormatError(
                f"hex table must encode a power-of-two bit count, got {bits} bits"
            )
        try:
            value = int(hex_table, 16)
        except ValueError:
            raise SpecFormatError(f"not a hex string: {hex_table!r}") from None
        return cls(n, tuple((value >> j) & 1 for j in range(bits)))

    def to_hex(self) -> str:
        value = sum(v << j for j, v in enumerate(self.table))
        width = max(1, (1 << self.n) // 4)
        return f"{value:0{width}x}"

    @classmethod
    def from_support(cls, n: int, support: Iterable[Sequence[int]]) -> "BooleanFunction":
        table = [0] * (1 << n)
        for coords in support:
            table[_bits_to_index(coords, n)] = 1
        return cls(n, tuple(table))

    @cached_property
    def group(self) -> FiniteAbelianGroup:
        return make_group([2] * self.n)

    @property
    def weight(self) -> int:
        return sum(self.table)

    def __call__(self, coords: Sequence[int]) -> int:
        return self.table[_bits_to_index(coords, self.n)]


def _bits_to_index(coords: Sequence[int], n: int) -> int:
    if len(coords) != n:
        raise ValueError(f"expected {n} bits, got {len(coords)}")
    idx = 0
    for c in coords:
        idx = 2 * idx + (c & 1)
    return idx


def _index_to_bits(idx: int, n: int) -> Element:
    return tuple((idx >> (n - 1 - s)) & 1 for s in range(n))


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    """Integer Walsh coefficients W[a] = sum_x (-1)^(f(x) + a.x), by index."""

    n: int
    values: np.ndarray

    def distinct(self) -> set[int]:
        return set(int(v) for v in self.values)


def walsh_transform(f: BooleanFunction) -> WalshSpectrum:
    """Walsh spectrum of f via the sign vector (-1)^f."""
    signs = np.array([1 - 2 * v for v in f.table], dtype=np.int64)
    return WalshSpectrum(f.n, hadamard_transform(signs))


def support(f: BooleanFunction) -> list[Element]:
    """Coordinates where f is 1, in lexicographic order."""
    return [_index_to_bits(i, f.n) for i, v in enumerate(f.table) if v]


class BooleanClass(str, Enum):
    BENT = "BENT"
    SEMI_BENT = "SEMI_BENT"
    NEITHER = "NEITHER"


def classify_boolean(f: BooleanFunction) -> BooleanClass:
    """Bent iff the Walsh spectrum is {±2^(n/2)}; semi-bent iff it is a
    subset of {0, ±2^(n/2+1)} with both zero and a nonzero value present.
    Odd arity is always NEITHER."""
    if f.n % 2 == 1:
        return BooleanClass.NEITHER
    half = f.n // 2
    vals = walsh_transform(f).distinct()
    flat = 1 << half
    if vals <= {flat, -flat}:
        return BooleanClass.BENT
    high = flat << 1
    if vals <= {0, high, -high} and 0 in vals and vals != {0}:
        return BooleanClass.SEMI_BENT
    return BooleanClass.NEITHER


def support_size_check(f: BooleanFunction) -> int:
    """Support size of a bent function; asserts |supp| = 2^(n-1) ± 2^(n/2-1)."""
    size = f.weight
    half = f.n // 2
    allowed = {(1 << (f.n - 1)) - (1 << (half - 1)), (1 << (f.n - 1)) + (1 << (half - 1))}
    assert size in allowed, f"bent support size {size} outside {sorted(allowed)}"
    return size


def eigenvalues_from_walsh(f: BooleanFunction) -> np.ndarray:
    """Eigenvalues of the Cayley graph on F_2^n connected by supp(f).

    Entry 0 is the degree |supp(f)|; entry x != 0 is -W[x]/2.
    """
    w = walsh_transform(f).values
    lam = -(w // 2)
    lam[0] = f.weight
    return lam


def mm_bent(n: int) -> BooleanFunction:
    """Inner-product bent function pairing adjacent coordinates:
    f(x) = x_1 x_2 + x_3 x_4 + ... + x_{n-1} x_n."""
    if n < 2 or n % 2 == 1:
        raise ValueError(f"arity must be even and >= 2, got {n}")
    table = []
    for i in range(1 << n):
        bits = _index_to_bits(i, n)
        acc = 0
        for j in range(0, n, 2):
            acc ^= bits[j] & bits[j + 1]
        table.append(acc)
    return BooleanFunction(n, tuple(table))


@dataclass(frozen=True)
class GroupFunction:
    """Integer-valued function on a finite abelian group, stored by rank."""

    group: FiniteAbelianGroup
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.group.n:
            raise ValueError(f"value table length {len(self.values)} != group order {self.group.n}")

    @classmethod
    def indicator(cls, group: FiniteAbelianGroup, subset: Iterable[Element]) -> "GroupFunction":
        values = [0] * group.n
        for g in subset:
            values[group.rank(group.require_element(g))] = 1
        return cls(group, tuple(values))

    def __call__(self, g: Element) -> int:
        return self.values[self.group.rank(g)]


def group_fourier(f: GroupFunction) -> list[RootOfUnitySum]:
    """Exact Fourier coefficients fhat(chi_z) = sum_x f(x) * conj(chi_z(x)),
    listed in element order of z."""
    G = f.group
    e = G.exponent
    out = []
    elements = list(G.elements())
    for z in elements:
        counts = [0] * e
        for x, v in zip(elements, f.values):
            if v:
                counts[(-G.character_exponent(z, x)) % e] += v
        out.append(RootOfUnitySum(e, tuple(counts)))
    return out


def fourier_integers(f: GroupFunction) -> Optional[list[int]]:
    """Integer Fourier spectrum, or None if any coefficient is irrational."""
    out = []
    for coeff in group_fourier(f):
        value = coeff.as_integer()
        if value is None:
            return None
        out.append(value)
    return out


def is_class_function(f: GroupFunction) -> bool:
    """True iff f(l*x) = f(x) for every unit l of Z_exponent."""
    G = f.group
    for unit in G.units():
        for x in G.elements():
            if f.values[G.rank(x)] != f.values[G.rank(G.scale(unit, x))]:
                return False
    return True


def plateaued_level(f: GroupFunction, p: int) -> Optional[tuple[int, int]]:
    """Largest r >= 1 with the integer Fourier spectrum constant mod p^r.

    Returns (k, r) with k the common residue in [0, p^r), or None when no
    such r exists — including the degenerate constant-spectrum case, where
    no maximal exponent is defined.  Requires a class function (those have
    an integer spectrum by Galois stability of unit orbits).
    """
    if p < 2:
        raise ValueError(f"p must be a prime, got {p}")
    if not is_class_function(f):
        raise NotClassFunctionError(
            "the function is not constant on unit-multiplication orbits"
        )
    ints = fourier_integers(f)
    assert ints is not None, "class functions always have integer Fourier spectra"
    base = ints[0]
    spread = 0
    for v in ints[1:]:
        spread = math.gcd(spread, v - base)
    if spread == 0:
        return None
    r = 0
    while spread % p == 0:
        spread //= p
        r += 1
    if r == 0:
        return None
    return (base % p**r, r)
