"""Cayley graphs over finite abelian groups: connection sets, exact spectra,
integrality, adjacency matrices, and JSON (de)serialization."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal, Optional, Sequence

import numpy as np

from .boolfn import hadamard_transform
from .cyclotomic import RootOfUnitySum
from .errors import (
    AsymmetricSetError,
    DisconnectedGraphWarning,
    SpecFormatError,
    ZeroInSetError,
)
from .groups import Element, FiniteAbelianGroup, make_group


@dataclass(frozen=True)
class ConnectionSet:
    """Sorted inverse-closed subset of nonzero group elements."""

    elements: tuple[Element, ...]

    @property
    def d(self) -> int:
        """Degree of the Cayley graph (size of the set)."""
        return len(self.elements)

    def __contains__(self, g: Element) -> bool:
        return g in set(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def validate_connection_set(
    raw: Iterable[Sequence[int]], group: FiniteAbelianGroup
) -> ConnectionSet:
    """Validate, reduce, deduplicate, and sort a connection set.

    Rejects the zero element and any element whose inverse is missing."""
    seen: set[Element] = set()
    for coords in raw:
        g = group.require_element(tuple(coords))
        if g == group.zero:
            raise ZeroInSetError("the connection set must not contain the identity")
        seen.add(g)
    for g in seen:
        if group.neg(g) not in seen:
            raise AsymmetricSetError(
                f"element {g} is in the set but its inverse {group.neg(g)} is not"
            )
    return ConnectionSet(tuple(sorted(seen)))


@dataclass(frozen=True)
class CayleyGraph:
    """Cayley graph of a finite abelian group with an inverse-closed set."""

    group: FiniteAbelianGroup
    connection: ConnectionSet

    @property
    def n(self) -> int:
        return self.group.n

    @property
    def degree(self) -> int:
        return self.connection.d

    @cached_property
    def connected(self) -> bool:
        closure = self.group.subgroup_generated(self.connection.elements)
        return len(closure) == self.group.n


def make_graph(
    orders: Sequence[int], connection: Iterable[Sequence[int]]
) -> CayleyGraph:
    """Build a Cayley graph, warning when the connection set does not
    generate the whole group."""
    group = make_group(orders)
    conn = validate_connection_set(connection, group)
    graph = CayleyGraph(group, conn)
    if not graph.connected:
        warnings.warn(
            "connection set does not generate the group; the graph is disconnected",
            DisconnectedGraphWarning,
            stacklevel=2,
        )
    return graph


@dataclass(frozen=True)
class Spectrum:
    """Exact eigenvalues of a Cayley graph, indexed by group element.

    `values[z]` is the exact cyclotomic sum over the connection set;
    `integral_values` is the same data as plain integers when every
    eigenvalue is rational (hence an integer), otherwise None."""

    group: FiniteAbelianGroup
    degree: int
    values: dict[Element, RootOfUnitySum]
    integral_values: Optional[dict[Element, int]]

    @property
    def is_integral(self) -> bool:
        return self.integral_values is not None


SpectrumMethod = Literal["auto", "generic", "walsh"]


def spectrum(graph: CayleyGraph, method: SpectrumMethod = "auto") -> Spectrum:
    """Exact spectrum; eigenvalue at z is sum over s in S of the root of
    unity with exponent the character pairing of z and s.

    The "walsh" method is the butterfly fast path, valid only when every
    group factor has order 2; "generic" always works; "auto" picks."""
    G = graph.group
    if method == "auto":
        method = "walsh" if G.exponent == 2 else "generic"
    if method == "walsh":
        if G.exponent != 2:
            raise ValueError("the butterfly method requires a group of exponent 2")
        indicator = np.zeros(G.n, dtype=np.int64)
        for s in graph.connection:
            indicator[G.rank(s)] = 1
        lam = hadamard_transform(indicator)
        values: dict[Element, RootOfUnitySum] = {}
        ints: dict[Element, int] = {}
        for z in G.elements():
            v = int(lam[G.rank(z)])
            values[z] = RootOfUnitySum.integer(2, v)
            ints[z] = v
        return Spectrum(G, graph.degree, values, ints)

    e = G.exponent
    values = {}
    ints = {}
    integral = True
    for z in G.elements():
        counts = [0] * e
        for s in graph.connection:
            counts[G.character_exponent(z, s)] += 1
        coeff = RootOfUnitySum(e, tuple(counts))
        values[z] = coeff
        if integral:
            as_int = coeff.as_integer()
            if as_int is None:
                integral = False
            else:
                ints[z] = as_int
    return Spectrum(G, graph.degree, values, ints if integral else None)


def is_integral(graph: CayleyGraph) -> bool:
    """True iff every eigenvalue of the graph is an integer."""
    return spectrum(graph).is_integral


def unit_closed(graph: CayleyGraph) -> bool:
    """True iff the connection set is closed under multiplication by every
    unit of Z_exponent (equivalent to an integral spectrum)."""
    G = graph.group
    members = set(graph.connection.elements)
    return all(
        G.scale(unit, s) in members for unit in G.units() for s in members
    )


def adjacency_matrix(graph: CayleyGraph) -> np.ndarray:
    """Dense 0/1 adjacency matrix in element-rank order."""
    G = graph.group
    n = G.n
    A = np.zeros((n, n), dtype=np.int64)
    for i, g in enumerate(G.elements()):
        for s in graph.connection:
            A[i, G.rank(G.add(g, s))] = 1
    return A


def graph_to_json(graph: CayleyGraph) -> dict:
    """Wire form: {"group": [orders...], "set": [[coords...]...]}."""
    return {
        "group": list(graph.group.orders),
        "set": [list(g) for g in graph.connection],
    }


def graph_from_json(data: dict | str) -> CayleyGraph:
    """Parse the wire form; coordinates are reduced into canonical range."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise SpecFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SpecFormatError("graph document must be a JSON object")
    if "group" not in data or "set" not in data:
        raise SpecFormatError('graph document must have "group" and "set" keys')
    orders = data["group"]
    raw_set = data["set"]
    if not isinstance(orders, list) or not all(isinstance(m, int) for m in orders):
        raise SpecFormatError('"group" must be a list of integers')
    if not isinstance(raw_set, list) or not all(
        isinstance(row, list) and all(isinstance(c, int) for c in row)
        for row in raw_set
    ):
        raise SpecFormatError('"set" must be a list of integer coordinate lists')
    group = make_group(orders)
    reduced = []
    for row in raw_set:
        if len(row) != len(group.orders):
            raise SpecFormatError(
                f"coordinate row {row} has {len(row)} entries, expected {len(group.orders)}"
            )
        reduced.append(group.reduce_coords(tuple(row)))
    conn = validate_connection_set(reduced, group)
    graph = CayleyGraph(group, conn)
    if not graph.connected:
        warnings.warn(
            "connection set does not generate the group; the graph is disconnected",
            DisconnectedGraphWarning,
            stacklevel=2,
        )
    return graph
