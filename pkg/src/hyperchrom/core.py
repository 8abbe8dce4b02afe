"""Hypergraph representation, validation and degree metrics.

Vertices carry text labels externally and dense indices ``0..n-1``
internally. Edges keep their input order; an edge's position is its
identifier everywhere else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    DuplicateLabel,
    EmptyInput,
    IsolatedVertex,
    NonLinearPair,
    SizeOneEdge,
    UnknownLabel,
)


@dataclass(frozen=True)
class Hypergraph:
    name: str
    vertices: tuple[str, ...]
    edges: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def label(self, v: int) -> str:
        return self.vertices[v]

    def index(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise UnknownLabel(label) from None

    def edge_labels(self, i: int) -> list[str]:
        return [self.vertices[v] for v in sorted(self.edges[i])]

    def is_edge(self, vertex_set: Iterable[int]) -> bool:
        """Membership predicate: does this vertex set form an edge?"""
        return frozenset(vertex_set) in self._edge_lookup

    @property
    def _edge_lookup(self) -> frozenset[frozenset[int]]:
        cached = self.__dict__.get("_edges_set")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edges_set", cached)
        return cached

    def is_uniform(self) -> bool:
        return len({len(e) for e in self.edges}) == 1


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    adjacency: tuple[frozenset[int], ...]
    labels: tuple[str, ...] = ()

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def edge_list(self) -> list[tuple[int, int]]:
        return [(u, w) for u in range(self.n) for w in sorted(self.adjacency[u]) if u < w]


@dataclass(frozen=True)
class Metrics:
    delta: int
    delta2: int
    rank: int
    antirank: int
    deg: tuple[int, ...]
    deg2: tuple[int, ...]


@dataclass(frozen=True)
class Sandwich:
    lhs: int
    mid: int
    rhs: int
    holds: bool


def validate(
    raw_vertices: Sequence[str],
    raw_edges: Sequence[Iterable[str]],
    name: str = "",
    *,
    linear: bool = True,
    loopless: bool = True,
) -> Hypergraph:
    """Build a :class:`Hypergraph` from labels, checking every invariant.

    ``linear`` and ``loopless`` may be switched off for derived structures
    (colour hypergraphs, Gamma hypergraphs) that are not linear in general.
    """
    vertices = tuple(str(v) for v in raw_vertices)
    if not vertices:
        raise EmptyInput("vertex list is empty")
    index: dict[str, int] = {}
    for i, label in enumerate(vertices):
        if label in index:
            raise DuplicateLabel(f"vertex label {label!r} appears twice")
        index[label] = i

    edges: list[frozenset[int]] = []
    seen: dict[frozenset[int], int] = {}
    for ei, raw in enumerate(raw_edges):
        members = set()
        for label in raw:
            label = str(label)
            if label not in index:
                raise UnknownLabel(label, ei)
            members.add(index[label])
        edge = frozenset(members)
        if loopless and len(edge) < 2:
            raise SizeOneEdge(ei)
        if not edge:
            raise SizeOneEdge(ei)
        if edge in seen:
            raise DuplicateEdge(seen[edge], ei)
        seen[edge] = ei
        edges.append(edge)

    if linear:
        for i, j in combinations(range(len(edges)), 2):
            shared = edges[i] & edges[j]
            if len(shared) > 1:
                raise NonLinearPair(i, j, {vertices[v] for v in shared})

    covered = set().union(*edges) if edges else set()
    for v, label in enumerate(vertices):
        if v not in covered:
            raise IsolatedVertex(label)

    return Hypergraph(name=name, vertices=vertices, edges=tuple(edges))


def from_index_edges(
    name: str, n: int, edges: Iterable[Iterable[int]], labels: Sequence[str] | None = None, **kw
) -> Hypergraph:
    labels = list(labels) if labels is not None else [str(i) for i in range(n)]
    return validate(labels, [[labels[v] for v in sorted(e)] for e in edges], name, **kw)


def is_linear(H: Hypergraph) -> bool:
    return all(len(a & b) <= 1 for a, b in combinations(H.edges, 2))


def two_section(H: Hypergraph) -> SimpleGraph:
    adj: list[set[int]] = [set() for _ in range(H.n)]
    for e in H.edges:
        for u, w in combinations(e, 2):
            adj[u].add(w)
            adj[w].add(u)
    return SimpleGraph(H.n, tuple(frozenset(a) for a in adj), H.vertices)


def star(H: Hypergraph, v: int) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(H.edges) if v in e)


def metrics(H: Hypergraph) -> Metrics:
    # deg2 uses the sum-of-(|e|-1) definition; it equals the two-section
    # degree only when H is linear.
    deg = [0] * H.n
    deg2 = [0] * H.n
    for e in H.edges:
        for v in e:
            deg[v] += 1
            deg2[v] += len(e) - 1
    sizes = [len(e) for e in H.edges]
    return Metrics(
        delta=max(deg),
        delta2=max(deg2),
        rank=max(sizes),
        antirank=min(sizes),
        deg=tuple(deg),
        deg2=tuple(deg2),
    )


def sym_diff_distance(a: Iterable, b: Iterable) -> int:
    return len(set(a) ^ set(b))


def check_sandwich(H: Hypergraph) -> Sandwich:
    """(ar-1)*Delta <= Delta_2 <= (r-1)*Delta for the given hypergraph."""
    mt = metrics(H)
    lhs = (mt.antirank - 1) * mt.delta
    rhs = (mt.rank - 1) * mt.delta
    return Sandwich(lhs, mt.delta2, rhs, lhs <= mt.delta2 <= rhs)
