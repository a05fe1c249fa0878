"""Finite abelian groups presented as direct sums of cyclic groups.

Elements are tuples of reduced residues, one per cyclic factor, iterated in
lexicographic order.  Characters are never materialized as complex numbers
here: pairing two elements yields the integer exponent k such that
chi_g(h) = w^k for w the primitive root of unity of order ``exponent``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import InvalidGroupError

Element = tuple[int, ...]


def units_mod(e: int) -> list[int]:
    """Units of Z_e in increasing order; units_mod(1) is empty by convention."""
    if e < 1:
        raise ValueError(f"modulus must be >= 1, got {e}")
    return [k for k in range(1, e) if math.gcd(k, e) == 1]


def make_group(orders: Sequence[int]) -> "FiniteAbelianGroup":
    """Build the direct sum of cyclic groups of the given orders (each >= 2)."""
    if not orders:
        raise InvalidGroupError("a group needs at least one cyclic factor")
    clean = []
    for m in orders:
        if not isinstance(m, int) or isinstance(m, bool) or m < 2:
            raise InvalidGroupError(f"cyclic factor order must be an integer >= 2, got {m!r}")
        clean.append(m)
    return FiniteAbelianGroup(tuple(clean))


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct sum Z_{n_1} + ... + Z_{n_r} with tuple-of-residue elements."""

    orders: tuple[int, ...]

    @cached_property
    def n(self) -> int:
        """Group order (product of the factor orders)."""
        return math.prod(self.orders)

    @cached_property
    def exponent(self) -> int:
        """Largest element order: lcm of the factor orders."""
        return math.lcm(*self.orders)

    @cached_property
    def zero(self) -> Element:
        return (0,) * len(self.orders)

    @cached_property
    def _char_weights(self) -> tuple[int, ...]:
        # embed each factor's root of unity into the one of order `exponent`
        return tuple(self.exponent // m for m in self.orders)

    def elements(self) -> Iterator[Element]:
        """All elements in lexicographic coordinate order."""
        return itertools.product(*(range(m) for m in self.orders))

    def rank(self, g: Element) -> int:
        """Mixed-radix index of g, consistent with elements() order."""
        idx = 0
        for c, m in zip(g, self.orders):
            idx = idx * m + c
        return idx

    def unrank(self, idx: int) -> Element:
        coords = []
        for m in reversed(self.orders):
            idx, c = divmod(idx, m)
            coords.append(c)
        return tuple(reversed(coords))

    def require_element(self, g: Sequence[int]) -> Element:
        """Validate g and return it as a canonical tuple."""
        if len(g) != len(self.orders):
            raise ValueError(
                f"element {tuple(g)!r} has {len(g)} coordinates, group has {len(self.orders)} factors"
            )
        for c, m in zip(g, self.orders):
            if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < m:
                raise ValueError(f"coordinate {c!r} of {tuple(g)!r} is not a residue mod {m}")
        return tuple(g)

    def reduce_coords(self, g: Sequence[int]) -> Element:
        """Reduce arbitrary integer coordinates mod the factor orders."""
        if len(g) != len(self.orders):
            raise ValueError(
                f"element {tuple(g)!r} has {len(g)} coordinates, group has {len(self.orders)} factors"
            )
        return tuple(int(c) % m for c, m in zip(g, self.orders))

    def add(self, g: Element, h: Element) -> Element:
        return tuple((a + b) % m for a, b, m in zip(g, h, self.orders))

    def neg(self, g: Element) -> Element:
        return tuple((-a) % m for a, m in zip(g, self.orders))

    def scale(self, c: int, g: Element) -> Element:
        return tuple((c * a) % m for a, m in zip(g, self.orders))

    def character_exponent(self, g: Element, h: Element) -> int:
        """k in [0, exponent) with chi_g(h) = w^k; symmetric and biadditive."""
        e = self.exponent
        total = 0
        for w, m, a, b in zip(self._char_weights, self.orders, g, h):
            total += w * ((a * b) % m)
        return total % e

    def element_order(self, g: Element) -> int:
        return math.lcm(*(m // math.gcd(m, c) for c, m in zip(g, self.orders)))

    def involutions(self) -> list[Element]:
        """Nonzero g with g + g = 0, lexicographic; empty iff the order is odd."""
        cands = [(0, m // 2) if m % 2 == 0 else (0,) for m in self.orders]
        return [g for g in itertools.product(*cands) if any(g)]

    def units(self) -> list[int]:
        """Units of Z_exponent (the scalars acting on the group)."""
        return units_mod(self.exponent)

    def subgroup_generated(self, gens: Iterable[Element]) -> set[Element]:
        """Closure of gens together with 0 under addition."""
        gen_list = [tuple(g) for g in gens]
        found = {self.zero}
        frontier = [self.zero]
        while frontier:
            fresh = []
            for x in frontier:
                for s in gen_list:
                    y = self.add(x, s)
                    if y not in found:
                        found.add(y)
                        fresh.append(y)
            frontier = fresh
        return found
