"""Independent floating-point checks for the exact engine.

Everything here recomputes from first principles with numpy — character
tables, walk matrices, a Taylor-series matrix exponential, and a dense time
grid scan — deliberately avoiding the exact cyclotomic code paths so the two
sides can cross-validate each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .cayley import CayleyGraph, adjacency_matrix
from .engine import FRWitness
from .errors import OracleDimensionError
from .groups import Element, FiniteAbelianGroup

_MAX_DENSE_ORDER = 256


def _coordinate_array(group: FiniteAbelianGroup) -> np.ndarray:
    return np.array(list(group.elements()), dtype=np.int64)


def character_table(group: FiniteAbelianGroup) -> np.ndarray:
    """Dense table X[i, j] = chi_{g_i}(g_j) in element-rank order."""
    e = group.exponent
    coords = _coordinate_array(group)
    expo = np.zeros((group.n, group.n), dtype=np.int64)
    for f, m in enumerate(group.orders):
        w = e // m
        col = coords[:, f]
        expo = (expo + w * ((col[:, None] * col[None, :]) % m)) % e
    return np.exp(2j * np.pi * expo / e)


def eigenvalue_array(graph: CayleyGraph, table: Optional[np.ndarray] = None) -> np.ndarray:
    """Real eigenvalues lambda_z = sum_{s in S} chi_z(s), in rank order."""
    G = graph.group
    if table is None:
        table = character_table(G)
    rows = [table[G.rank(s), :] for s in graph.connection]
    lam = np.sum(rows, axis=0) if rows else np.zeros(G.n, dtype=complex)
    assert np.max(np.abs(lam.imag)) < 1e-9, "symmetric sets give real eigenvalues"
    return lam.real


def difference_rank_table(group: FiniteAbelianGroup) -> np.ndarray:
    """D[i, j] = rank(g_i - g_j), so any function of differences can be
    broadcast from its value on row zero."""
    coords = _coordinate_array(group)
    orders = np.array(group.orders, dtype=np.int64)
    weights = np.ones(len(group.orders), dtype=np.int64)
    for f in range(len(group.orders) - 2, -1, -1):
        weights[f] = weights[f + 1] * group.orders[f + 1]
    diff = (coords[:, None, :] - coords[None, :, :]) % orders
    return diff @ weights


@dataclass(frozen=True)
class TransferMatrix:
    """Dense walk matrix H(t) = exp(i t A)."""

    n: int
    t: float
    entries: np.ndarray

    def unitarity_defect(self) -> float:
        gram = self.entries.conj().T @ self.entries
        return float(np.max(np.abs(gram - np.eye(self.n))))


def transfer_matrix(graph: CayleyGraph, t: float) -> TransferMatrix:
    """H(t) via the character eigenbasis: the walk is a function of vertex
    differences, so one row determines the whole matrix."""
    G = graph.group
    if G.n > _MAX_DENSE_ORDER:
        raise OracleDimensionError(
            f"dense oracle limited to order {_MAX_DENSE_ORDER}, got {G.n}"
        )
    table = character_table(G)
    lam = eigenvalue_array(graph, table)
    phases = np.exp(1j * t * lam)
    row0 = phases @ table.conj() / G.n
    entries = row0[difference_rank_table(G)]
    return TransferMatrix(G.n, t, entries)


def series_walk_matrix(graph: CayleyGraph, t: float, terms: int = 25) -> np.ndarray:
    """Second, eigenbasis-free oracle: scaling-and-squaring Taylor series
    for exp(i t A) straight from the adjacency matrix."""
    G = graph.group
    if G.n > _MAX_DENSE_ORDER:
        raise OracleDimensionError(
            f"dense oracle limited to order {_MAX_DENSE_ORDER}, got {G.n}"
        )
    if terms < 20:
        raise ValueError("at least 20 series terms are required for full precision")
    A = adjacency_matrix(graph).astype(np.complex128)
    B = 1j * t * A
    norm = float(np.max(np.sum(np.abs(B), axis=0))) if G.n else 0.0
    squarings = 0
    while norm > 0.5:
        norm /= 2.0
        squarings += 1
    B /= 2.0**squarings
    H = np.eye(G.n, dtype=np.complex128)
    term = np.eye(G.n, dtype=np.complex128)
    for j in range(1, terms + 1):
        term = term @ B / j
        H = H + term
    for _ in range(squarings):
        H = H @ H
    return H


def dense_expm_check(graph: CayleyGraph, t: float, terms: int = 25) -> float:
    """Max entrywise difference between the eigenbasis walk matrix and the
    Taylor-series one.  Small values certify both computations at once."""
    spectral = transfer_matrix(graph, t).entries
    series = series_walk_matrix(graph, t, terms=terms)
    return float(np.max(np.abs(spectral - series)))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a witness against the dense walk matrix."""

    passed: bool
    max_deviation: float
    tolerance: float
    unitarity_defect: float
    permutation_ok: bool

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
            "unitarity_defect": self.unitarity_defect,
            "permutation_ok": self.permutation_ok,
        }


def verify_fr(
    graph: CayleyGraph, witness: FRWitness, tol: float = 1e-9
) -> VerificationReport:
    """Check H(t) = alpha*I + beta*Q entrywise at the witness time, where Q
    is the translation permutation by the witness element.

    Also checks structurally (in exact integers) that Q is a symmetric
    fixed-point-free involution, and numerically that H(t) is unitary."""
    G = graph.group
    a = G.require_element(witness.a)
    n = G.n
    Q = np.zeros((n, n), dtype=np.int64)
    for i, g in enumerate(G.elements()):
        Q[i, G.rank(G.add(g, a))] = 1
    permutation_ok = (
        bool(np.array_equal(Q, Q.T))
        and bool(np.array_equal(Q @ Q, np.eye(n, dtype=np.int64)))
        and int(np.trace(Q)) == 0
    )
    H = transfer_matrix(graph, witness.time)
    target = witness.alpha * np.eye(n) + witness.beta * Q
    max_dev = float(np.max(np.abs(H.entries - target)))
    defect = H.unitarity_defect()
    passed = permutation_ok and max_dev <= tol and defect <= tol
    return VerificationReport(passed, max_dev, tol, defect, permutation_ok)


def fr_grid_scan(
    graph: CayleyGraph,
    targets: Optional[Iterable[Element]] = None,
    concentration_tol: float = 1e-6,
    amplitude_tol: float = 1e-3,
) -> dict[Element, bool]:
    """Brute-force FR detector on the time grid t = 2*pi*j/(4*n^2) for
    j = 1..4*n^3.

    An involution a is flagged when some grid row of H(t) puts all its mass
    on columns 0 and rank(a) (residual below concentration_tol) with both
    amplitudes above amplitude_tol.  The grid contains every admissible
    rational time because the phase modulus divides the group order, and in
    the free two-eigenvalue case the very first grid point already works."""
    G = graph.group
    if G.n > _MAX_DENSE_ORDER:
        raise OracleDimensionError(
            f"dense oracle limited to order {_MAX_DENSE_ORDER}, got {G.n}"
        )
    if targets is None:
        targets = list(G.involutions())
    else:
        targets = [G.require_element(a) for a in targets]
    result: dict[Element, bool] = {a: False for a in targets}
    if not targets:
        return result
    n = G.n
    table = character_table(G)
    lam = eigenvalue_array(graph, table)
    conj_over_n = table.conj() / n
    target_ranks = {a: G.rank(a) for a in targets}
    total = 4 * n**3
    base = 2.0 * math.pi / (4 * n**2)
    chunk = 4096
    pending = set(targets)
    for start in range(1, total + 1, chunk):
        if not pending:
            break
        js = np.arange(start, min(start + chunk, total + 1), dtype=np.float64)
        phases = np.exp(1j * np.outer(js * base, lam))
        rows = phases @ conj_over_n
        mags = np.abs(rows)
        for a in list(pending):
            r = target_ranks[a]
            others = np.delete(mags, [0, r] if r != 0 else [0], axis=1)
            if others.shape[1] == 0:
                residual = np.zeros(mags.shape[0])
            else:
                residual = others.max(axis=1)
            hit = (
                (residual < concentration_tol)
                & (mags[:, 0] > amplitude_tol)
                & (mags[:, r] > amplitude_tol)
            )
            if bool(hit.any()):
                result[a] = True
                pending.discard(a)
    return result
