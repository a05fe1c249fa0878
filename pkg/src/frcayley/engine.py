"""Decision engine for two-vertex state transfer on abelian Cayley graphs.

Classifies, for a chosen involution a, whether the continuous walk admits a
time t with H(t) e_0 = alpha e_0 + beta e_a, and certifies the finding with
exact rational-phase data: t = 2*pi*k/N and alpha, beta given by powers of a
primitive N-th root of unity.  Kinds: FR (alpha*beta != 0), PST (alpha = 0),
PERIODIC (beta = 0).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Optional

from .cayley import CayleyGraph, Spectrum, spectrum
from .errors import (
    NonIntegralSpectrumError,
    NotInvolutionError,
    SpecFormatError,
)
from .groups import Element, FiniteAbelianGroup


class WitnessKind(str, Enum):
    FR = "FR"
    PST = "PST"
    PERIODIC = "PERIODIC"


@dataclass(frozen=True)
class InvolutionSplit:
    """Partition of the group by the sign of the character pairing with a:
    plus = {g : chi_a(g) = +1}, minus = {g : chi_a(g) = -1}."""

    a: Element
    plus: tuple[Element, ...]
    minus: tuple[Element, ...]


def split_by_involution(group: FiniteAbelianGroup, a: Element) -> InvolutionSplit:
    """Split the group by chi_a; a must have order exactly 2."""
    a = group.require_element(a)
    if group.element_order(a) != 2:
        raise NotInvolutionError(f"element {a} does not have order 2")
    e = group.exponent
    plus: list[Element] = []
    minus: list[Element] = []
    for g in group.elements():
        c = group.character_exponent(a, g)
        if c == 0:
            plus.append(g)
        else:
            assert 2 * c == e, "involution pairing must be a sign"
            minus.append(g)
    assert len(plus) == len(minus), "a sign character splits the group in half"
    return InvolutionSplit(a, tuple(plus), tuple(minus))


@dataclass(frozen=True)
class Moduli:
    """Eigenvalue congruence data for one involution.

    m0 = gcd(d - lambda_g) over the plus half, m1 = gcd(lambda_ref - lambda_g)
    over the minus half, m = gcd(m0, m1); delta = d - lambda_ref with ref the
    lexicographically smallest element of the minus half (or the supplied
    override).  m > 0 implies phase constancy on both halves exactly at the
    times 2*pi*k/m; m = 0 means constancy at every time."""

    m0: int
    m1: int
    m: int
    reference: Element
    delta: int


def compute_moduli(
    spec: Spectrum, split: InvolutionSplit, reference: Optional[Element] = None
) -> Moduli:
    """Congruence moduli of an integral spectrum relative to a split."""
    if spec.integral_values is None:
        raise NonIntegralSpectrumError(
            "the spectrum is not integral; no rational-phase times exist"
        )
    lam = spec.integral_values
    d = spec.degree
    if reference is None:
        reference = split.minus[0]
    elif reference not in split.minus:
        raise ValueError(f"reference {reference} is not in the minus half")
    lam_ref = lam[reference]
    m0 = reduce(math.gcd, (d - lam[g] for g in split.plus), 0)
    m1 = reduce(math.gcd, (lam_ref - lam[g] for g in split.minus), 0)
    m = math.gcd(m0, m1)
    assert m == 0 or spec.group.n % m == 0, "the modulus divides the group order"
    return Moduli(m0, m1, m, reference, d - lam_ref)


@dataclass(frozen=True)
class FRWitness:
    """Certificate for the walk at t = 2*pi*k/modulus.

    rho0 and rho1 are the exponents (mod modulus) of the constant phases on
    the plus and minus halves; alpha and beta follow exactly.  valid_k lists
    every k in [1, modulus] whose time yields FR proper (alpha*beta != 0)."""

    a: Element
    k: int
    modulus: int
    rho0: int
    rho1: int
    valid_k: tuple[int, ...]

    @property
    def kind(self) -> WitnessKind:
        diff = (self.rho0 - self.rho1) % self.modulus
        if diff == 0:
            return WitnessKind.PERIODIC
        if self.modulus % 2 == 0 and diff == self.modulus // 2:
            return WitnessKind.PST
        return WitnessKind.FR

    @property
    def time(self) -> float:
        return 2.0 * math.pi * self.k / self.modulus

    @property
    def alpha(self) -> complex:
        w0 = cmath.exp(2j * cmath.pi * self.rho0 / self.modulus)
        w1 = cmath.exp(2j * cmath.pi * self.rho1 / self.modulus)
        return (w0 + w1) / 2

    @property
    def beta(self) -> complex:
        w0 = cmath.exp(2j * cmath.pi * self.rho0 / self.modulus)
        w1 = cmath.exp(2j * cmath.pi * self.rho1 / self.modulus)
        return (w0 - w1) / 2

    def to_json(self) -> dict:
        return {
            "a": list(self.a),
            "kind": self.kind.value,
            "k": self.k,
            "modulus": self.modulus,
            "rho0": self.rho0,
            "rho1": self.rho1,
            "time": self.time,
            "alpha": {"re": self.alpha.real, "im": self.alpha.imag},
            "beta": {"re": self.beta.real, "im": self.beta.imag},
            "valid_k": list(self.valid_k),
        }

    @classmethod
    def from_json(cls, data: dict) -> "FRWitness":
        try:
            a = tuple(int(c) for c in data["a"])
            k = int(data["k"])
            modulus = int(data["modulus"])
            rho0 = int(data["rho0"])
            rho1 = int(data["rho1"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecFormatError(f"malformed witness document: {exc}") from exc
        if modulus < 1 or not 1 <= k <= modulus:
            raise SpecFormatError("witness k must lie in [1, modulus]")
        raw_valid = data.get("valid_k")
        if raw_valid is not None:
            valid = tuple(int(v) for v in raw_valid)
        elif math.gcd(k, modulus) == 1:
            # k is invertible, so delta mod modulus can be recovered from the
            # phase-exponent gap and the valid set recomputed.
            delta = ((rho0 - rho1) * pow(k, -1, modulus)) % modulus
            half = modulus // 2 if modulus % 2 == 0 else None
            valid = tuple(
                j
                for j in range(1, modulus + 1)
                if (j * delta) % modulus not in {0, half}
            )
        else:
            raise SpecFormatError(
                "witness document omits valid_k and it cannot be recovered"
            )
        return cls(a, k, modulus, rho0 % modulus, rho1 % modulus, valid)


def decide_fr(
    graph: CayleyGraph, a: Element, spec: Optional[Spectrum] = None
) -> Optional[FRWitness]:
    """Classify the walk between 0 and the involution a.

    Returns None when the question is vacuous or no rational-phase alignment
    time exists at all: a not an involution (including every element of an
    odd-order group), non-integral spectrum, or the degenerate edgeless
    case.  Otherwise returns a witness whose kind is FR, PST, or PERIODIC.
    The canonical witness uses the smallest k achieving the best available
    kind (FR when the valid set is nonempty, else PST, else PERIODIC); that
    smallest k is always 1."""
    G = graph.group
    a = G.require_element(a)
    if G.n % 2 == 1 or G.element_order(a) != 2:
        return None
    split = split_by_involution(G, a)
    if spec is None:
        spec = spectrum(graph)
    if not spec.is_integral:
        return None
    mod = compute_moduli(spec, split)
    if mod.m > 0:
        big_n = mod.m
    elif mod.delta == 0:
        return None
    else:
        big_n = 4 * abs(mod.delta)
    delta = mod.delta % big_n
    half = big_n // 2 if big_n % 2 == 0 else None
    valid = tuple(
        k for k in range(1, big_n + 1) if (k * delta) % big_n not in {0, half}
    )
    # When delta lands outside {0, N/2} mod N, k = 1 itself is valid, so the
    # canonical witness always sits at k = 1 (FR exists iff 1 is in valid).
    assert not valid or valid[0] == 1, "k = 1 is valid whenever any k is"
    k = 1
    lam_ref = spec.integral_values[mod.reference]
    rho0 = (k * spec.degree) % big_n
    rho1 = (k * lam_ref) % big_n
    return FRWitness(a, k, big_n, rho0, rho1, valid)


def search_all(graph: CayleyGraph) -> list[tuple[Element, FRWitness]]:
    """Classify every involution of the group; one shared spectrum pass.

    Empty for odd group order (no involutions) and for non-integral spectra.
    """
    spec = spectrum(graph)
    out: list[tuple[Element, FRWitness]] = []
    for a in graph.group.involutions():
        w = decide_fr(graph, a, spec)
        if w is not None:
            out.append((a, w))
    return out
