"""Constructors for the certified FR graph families.

Each builder assembles a Cayley graph together with an exact witness
predicting fractional revival at t = 2*pi*k/N, raising
HypothesisViolationError when the construction's arithmetic preconditions
fail (most commonly when the predicted modulus N lands in {1, 2, 4}, where
the phase gap of 2 degenerates to periodicity or perfect transfer).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .boolfn import BooleanClass, BooleanFunction, GroupFunction, classify_boolean, plateaued_level, support
from .cayley import CayleyGraph, make_graph
from .engine import FRWitness, decide_fr
from .errors import HypothesisViolationError, SpecFormatError, ZeroInSetError
from .groups import Element, make_group, units_mod


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division (fine at family sizes)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def p_adic_valuation(n: int, p: int) -> int:
    """Largest r with p^r dividing n; rejects n = 0 (infinite valuation)."""
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    if n == 0:
        raise ValueError("the zero integer has infinite valuation")
    n = abs(n)
    r = 0
    while n % p == 0:
        n //= p
        r += 1
    return r


def ramanujan_sum(y: int, p: int, r: int) -> int:
    """Sum of the y-th powers of the primitive p^r-th roots of unity."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r < 1:
        raise ValueError(f"r must be at least 1, got {r}")
    q = p**r
    if y % q == 0:
        return p ** (r - 1) * (p - 1)
    if y % (q // p) == 0:
        return -(p ** (r - 1))
    return 0


class FamilyVariant(str, Enum):
    RAMANUJAN_A = "RAMANUJAN_A"
    MULTI_PRIME_B = "MULTI_PRIME_B"
    PLATEAUED_C = "PLATEAUED_C"
    CUBLIKE_D = "CUBLIKE_D"
    BENT_E = "BENT_E"


@dataclass(frozen=True)
class BuiltFamily:
    """A constructed graph with its predicted exact witness."""

    variant: FamilyVariant
    graph: CayleyGraph
    a: Element
    prediction: FRWitness
    label: str

    def prediction_document(self) -> dict:
        doc = {"variant": self.variant.value, "label": self.label}
        doc.update(self.prediction.to_json())
        return doc


def _fr_prediction(a: Element, modulus: int, rho0: int = 1) -> FRWitness:
    """Witness at k = 1 with plus-phase exponent rho0 and minus-phase -1."""
    rho0 %= modulus
    rho1 = (modulus - 1) % modulus
    delta = (rho0 - rho1) % modulus
    half = modulus // 2 if modulus % 2 == 0 else None
    valid = tuple(
        k for k in range(1, modulus + 1) if (k * delta) % modulus not in {0, half}
    )
    return FRWitness(a, 1, modulus, rho0, rho1, valid)


def _require_fr_modulus(n: int, what: str) -> None:
    if n in (1, 2, 4):
        raise HypothesisViolationError(
            f"{what} gives phase modulus N = {n}; a phase gap of 2 then forces "
            "beta = 0 or alpha = 0, so no fractional revival is possible"
        )


def build_ramanujan_family(
    p: int, r: int, h_orders: Sequence[int] = ()
) -> BuiltFamily:
    """Family A: Z_2 x Z_{p^r} x H with connection set
    {0} x U(p^r) x H  union  {a}, where a = (1, 0, ..., 0).

    Requires p an odd prime, r >= 1, and N = p^(r-1) * |H| outside {1, 2, 4}.
    Predicts FR at t = 2*pi/N with phases (e^{it}, e^{-it})."""
    if not is_prime(p) or p == 2:
        raise HypothesisViolationError(f"p must be an odd prime, got {p}")
    if r < 1:
        raise HypothesisViolationError(f"r must be at least 1, got {r}")
    h_group = make_group(h_orders) if h_orders else None
    m = h_group.n if h_group else 1
    big_n = p ** (r - 1) * m
    _require_fr_modulus(big_n, f"p^(r-1) * |H| = {p}^{r - 1} * {m}")
    orders = [2, p**r, *h_orders]
    zero_tail = (0,) * len(h_orders)
    conn: list[tuple[int, ...]] = []
    h_elements = list(h_group.elements()) if h_group else [()]
    for u in units_mod(p**r):
        for h in h_elements:
            conn.append((0, u, *h))
    a = (1, 0, *zero_tail)
    conn.append(a)
    graph = make_graph(orders, conn)
    label = f"ramanujan p={p} r={r} H={list(h_orders)}"
    return BuiltFamily(
        FamilyVariant.RAMANUJAN_A, graph, a, _fr_prediction(a, big_n), label
    )


def build_multi_prime_family(
    prime_powers: Sequence[Sequence[int]],
) -> BuiltFamily:
    """Family B: product of Z_{p_i^{r_i}} over distinct primes with p_1 = 2,
    connected by all tuples of units plus the unique involution
    a = (2^{r_1 - 1}, 0, ..., 0).

    Requires N = prod p_i^{r_i - 1} outside {1, 2, 4}.  Predicts FR at
    t = 2*pi/N with phases (e^{it}, e^{-it})."""
    pairs = [(int(p), int(r)) for p, r in prime_powers]
    if len(pairs) < 2:
        raise HypothesisViolationError(
            f"at least two prime-power factors are required, got {len(pairs)}"
        )
    primes = [p for p, _ in pairs]
    if primes[0] != 2:
        raise HypothesisViolationError(
            f"the first factor must be the even prime 2, got {primes[0]}"
        )
    if len(set(primes)) != len(primes):
        raise HypothesisViolationError(f"primes must be distinct, got {primes}")
    for p, r in pairs:
        if not is_prime(p):
            raise HypothesisViolationError(f"{p} is not prime")
        if r < 1:
            raise HypothesisViolationError(f"exponent must be >= 1, got {r}")
    big_n = math.prod(p ** (r - 1) for p, r in pairs)
    _require_fr_modulus(big_n, "prod p_i^(r_i - 1)")
    orders = [p**r for p, r in pairs]
    unit_lists = [sorted(units_mod(p**r)) for p, r in pairs]
    conn = [tuple(t) for t in itertools.product(*unit_lists)]
    a = (2 ** (pairs[0][1] - 1),) + (0,) * (len(pairs) - 1)
    conn.append(a)
    graph = make_graph(orders, conn)
    label = "multi-prime " + "*".join(f"{p}^{r}" for p, r in pairs)
    return BuiltFamily(
        FamilyVariant.MULTI_PRIME_B, graph, a, _fr_prediction(a, big_n), label
    )


def build_plateaued_family(
    h_orders: Sequence[int],
    s1: Sequence[Sequence[int]],
    p: Optional[int] = None,
) -> BuiltFamily:
    """Family C: Z_2 x H connected by {0} x S1  union  {1} x S1  union  {a},
    a = (1, 0, ..., 0), for a unit-closed S1 in H with p^r-plateaued
    indicator spectrum.

    With r0 = min(r, v_p(|S1|)) >= 1 the predicted modulus is N = 2 p^{r0};
    requires N outside {1, 2, 4}.  Predicts FR at t = pi/p^{r0}."""
    if not h_orders:
        raise HypothesisViolationError("the factor group H must be nontrivial")
    H = make_group(h_orders)
    cleaned: set[Element] = set()
    for coords in s1:
        g = H.require_element(tuple(coords))
        if g == H.zero:
            raise ZeroInSetError("S1 must not contain the zero element of H")
        cleaned.add(g)
    if not cleaned:
        raise HypothesisViolationError("S1 must be nonempty")
    for unit in H.units():
        for s in cleaned:
            if H.scale(unit, s) not in cleaned:
                raise HypothesisViolationError(
                    f"S1 is not closed under multiplication by the unit {unit}: "
                    f"{s} is inside but {H.scale(unit, s)} is not"
                )
    d1 = len(cleaned)
    indicator = GroupFunction.indicator(H, cleaned)
    candidates = (
        [p]
        if p is not None
        else [q for q in range(2, d1 + 1) if is_prime(q) and d1 % q == 0]
    )
    chosen: Optional[tuple[int, int]] = None
    for q in candidates:
        if p is not None and (not is_prime(q) or d1 % q != 0):
            raise HypothesisViolationError(
                f"p = {q} must be a prime divisor of |S1| = {d1}"
            )
        level = plateaued_level(indicator, q)
        if level is None:
            if p is not None:
                raise HypothesisViolationError(
                    f"the indicator spectrum of S1 is not {q}-power plateaued"
                )
            continue
        r0 = min(level[1], p_adic_valuation(d1, q))
        if r0 >= 1:
            chosen = (q, r0)
            break
        if p is not None:
            raise HypothesisViolationError(
                f"min(plateau level, v_{q}(|S1|)) = 0; the phase modulus collapses"
            )
    if chosen is None:
        raise HypothesisViolationError(
            "no prime divides |S1| with a plateaued indicator spectrum of "
            "positive level, so the phase modulus collapses to 2"
        )
    q, r0 = chosen
    big_n = 2 * q**r0
    _require_fr_modulus(big_n, f"2 * {q}^{r0}")
    orders = [2, *h_orders]
    conn: list[tuple[int, ...]] = []
    for eps in (0, 1):
        for s in sorted(cleaned):
            conn.append((eps, *s))
    a = (1,) + (0,) * len(h_orders)
    conn.append(a)
    graph = make_graph(orders, conn)
    label = f"plateaued H={list(h_orders)} |S1|={d1} p={q} r0={r0}"
    return BuiltFamily(
        FamilyVariant.PLATEAUED_C, graph, a, _fr_prediction(a, big_n), label
    )


def build_cublike_family(
    s0: Sequence[Sequence[int]],
    s1: Sequence[Sequence[int]],
    n_bits: Optional[int] = None,
) -> BuiltFamily:
    """Family D: F_2^{n+1} connected by {0} x S0  union  {1} x S1  union
    {a}, a = (1, 0, ..., 0), for S0, S1 subsets of F_2^n avoiding zero.

    Requires min(v_2(d0 + d1), v_2(d0 - d1)) >= 3 and, after computing the
    actual phase modulus M, kappa = min(v_2(M), v_2(d0 + d1), v_2(d0 - d1))
    >= 3.  Predicts FR at t = 2*pi/2^kappa with phases (e^{it}, e^{-it})."""
    rows = [tuple(int(c) for c in row) for row in s0] + [
        tuple(int(c) for c in row) for row in s1
    ]
    if n_bits is None:
        if not rows:
            raise SpecFormatError(
                "cannot infer the bit width from two empty slice sets"
            )
        n_bits = len(rows[0])
    if n_bits < 1:
        raise ValueError(f"bit width must be at least 1, got {n_bits}")
    base = make_group([2] * n_bits)
    set0 = {base.require_element(tuple(r)) for r in s0}
    set1 = {base.require_element(tuple(r)) for r in s1}
    if base.zero in set0 or base.zero in set1:
        raise ZeroInSetError("the slice sets must not contain the zero vector")
    d0, d1 = len(set0), len(set1)

    def v2(x: int) -> Optional[int]:
        return None if x == 0 else p_adic_valuation(x, 2)

    vs = [v for v in (v2(d0 + d1), v2(d0 - d1)) if v is not None]
    if any(v < 3 for v in vs):
        raise HypothesisViolationError(
            f"min dyadic valuation of d0 + d1 = {d0 + d1} and d0 - d1 = "
            f"{d0 - d1} is below 3, so the phase modulus cannot reach 8"
        )
    orders = [2] * (n_bits + 1)
    conn: list[tuple[int, ...]] = []
    for s in sorted(set0):
        conn.append((0, *s))
    for s in sorted(set1):
        conn.append((1, *s))
    a = (1,) + (0,) * n_bits
    conn.append(a)
    graph = make_graph(orders, conn)
    # This family has no closed-form modulus, so ask the engine; its
    # canonical modulus is the congruence gcd M (or the free two-eigenvalue
    # fallback, which carries the same role).
    witness = decide_fr(graph, a)
    assert witness is not None, "exponent-2 spectra are always integral"
    m = witness.modulus
    vs_m = [v for v in (v2(m), v2(d0 + d1), v2(d0 - d1)) if v is not None]
    kappa = min(vs_m) if vs_m else 3
    if kappa < 3:
        raise HypothesisViolationError(
            f"min(v_2(M), v_2(d0 + d1), v_2(d0 - d1)) = {kappa} < 3, "
            "so the phase modulus cannot reach 8"
        )
    big_n = 2**kappa
    label = f"cublike n={n_bits} d0={d0} d1={d1} N={big_n}"
    return BuiltFamily(
        FamilyVariant.CUBLIKE_D, graph, a, _fr_prediction(a, big_n), label
    )


def build_bent_family(f: BooleanFunction) -> BuiltFamily:
    """Family E: F_2^{n+1} connected by {0} x supp(f)  union  {1} x supp(f)
    union  {a}, a = (1, 0, ..., 0), for f bent or semi-bent on n variables.

    With k = n/2 the predicted modulus is N = 2^{k+1} (required outside
    {1, 2, 4}, i.e. n >= 4) and t = pi/2^k; the plus phase is e^{it} times
    i^{±1} shifted by 2^k for bent f (degree = 2^n ± 2^k + 1) and exactly
    e^{it} for semi-bent f (degree = 1 mod 2^{k+1})."""
    cls = classify_boolean(f)
    if cls is BooleanClass.NEITHER:
        raise HypothesisViolationError(
            "the Walsh spectrum is neither flat (bent) nor three-valued "
            "{0, +-2^(n/2+1)} (semi-bent)"
        )
    k = f.n // 2
    big_n = 2 ** (k + 1)
    _require_fr_modulus(big_n, f"2^(n/2 + 1) = {big_n}")
    supp = support(f)
    orders = [2] * (f.n + 1)
    conn: list[tuple[int, ...]] = []
    for eps in (0, 1):
        for s in supp:
            conn.append((eps, *s))
    a = (1,) + (0,) * f.n
    conn.append(a)
    graph = make_graph(orders, conn)
    rho0 = (1 + 2**k) % big_n if cls is BooleanClass.BENT else 1
    label = f"{cls.value.lower().replace('_', '-')} n={f.n} |supp|={len(supp)}"
    return BuiltFamily(
        FamilyVariant.BENT_E, graph, a, _fr_prediction(a, big_n, rho0=rho0), label
    )


def engine_agrees(built: BuiltFamily) -> bool:
    """Exact cross-check of a builder prediction against the engine.

    Requires the engine modulus M to be a multiple of the predicted N, the
    predicted k (rescaled to M) to be classified identically, and the
    predicted phase exponents to match the engine phases exactly."""
    w = decide_fr(built.graph, built.a)
    if w is None:
        return False
    pred = built.prediction
    if w.modulus % pred.modulus != 0:
        return False
    scale = w.modulus // pred.modulus
    k_scaled = pred.k * scale
    assert w.k == 1, "engine witnesses are canonical at k = 1"
    # Engine phases at the predicted time: rho0/rho1 scale linearly in k.
    rho0_engine = (k_scaled * w.rho0) % w.modulus
    rho1_engine = (k_scaled * w.rho1) % w.modulus
    if rho0_engine != (scale * pred.rho0) % w.modulus:
        return False
    if rho1_engine != (scale * pred.rho1) % w.modulus:
        return False
    if pred.kind.value == "FR":
        return k_scaled in w.valid_k
    diff = (rho0_engine - rho1_engine) % w.modulus
    if pred.kind.value == "PERIODIC":
        return diff == 0
    return w.modulus % 2 == 0 and diff == w.modulus // 2


def build_from_spec(data: dict) -> BuiltFamily:
    """Dispatch a JSON family description to its builder.

    Wire forms:
      {"variant": "RAMANUJAN_A", "p": 3, "r": 2, "H": [5]}
      {"variant": "MULTI_PRIME_B", "prime_powers": [[2, 2], [3, 2]]}
      {"variant": "PLATEAUED_C", "H": [9], "S1": [[1], ...], "p": 3}
      {"variant": "CUBLIKE_D", "S0": [[...]], "S1": [[...]], "n": 4}
      {"variant": "BENT_E", "f": "7888"}
    """
    if not isinstance(data, dict) or "variant" not in data:
        raise SpecFormatError('family document must be an object with "variant"')
    try:
        variant = FamilyVariant(data["variant"])
    except ValueError as exc:
        raise SpecFormatError(f"unknown family variant {data['variant']!r}") from exc
    try:
        if variant is FamilyVariant.RAMANUJAN_A:
            return build_ramanujan_family(
                int(data["p"]), int(data["r"]), list(data.get("H", []))
            )
        if variant is FamilyVariant.MULTI_PRIME_B:
            return build_multi_prime_family(list(data["prime_powers"]))
        if variant is FamilyVariant.PLATEAUED_C:
            p = data.get("p")
            return build_plateaued_family(
                list(data["H"]), list(data["S1"]), None if p is None else int(p)
            )
        if variant is FamilyVariant.CUBLIKE_D:
            n = data.get("n")
            return build_cublike_family(
                list(data["S0"]), list(data["S1"]), None if n is None else int(n)
            )
        f = BooleanFunction.from_hex(str(data["f"]))
        return build_bent_family(f)
    except KeyError as exc:
        raise SpecFormatError(f"family document is missing key {exc}") from exc
