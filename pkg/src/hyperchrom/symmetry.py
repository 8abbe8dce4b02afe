"""Hypergraph automorphisms, the colour-preserving subgroup and its orbits.

Groups are explicit element lists. They are found by a backtracking search
over vertex images that must preserve vertex signatures and two-section
adjacency, with each edge checked as soon as all of its vertices are mapped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .coloring import EdgeColoring
from .core import Hypergraph, metrics, two_section
from .errors import GroupOrderExceeded, NonIntegerAverage, VertexCapExceeded

MAX_VERTICES = 64
MAX_ORDER = 200_000


@dataclass(frozen=True)
class VertexPermutation:
    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"not a permutation: {self.image}")

    @classmethod
    def identity(cls, n: int) -> VertexPermutation:
        return cls(tuple(range(n)))

    def __call__(self, v: int) -> int:
        return self.image[v]

    def __mul__(self, other: VertexPermutation) -> VertexPermutation:
        # (self * other)(v) = self(other(v))
        return VertexPermutation(tuple(self.image[other.image[v]] for v in range(len(self.image))))

    def inverse(self) -> VertexPermutation:
        inv = [0] * len(self.image)
        for v, w in enumerate(self.image):
            inv[w] = v
        return VertexPermutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.image))


@dataclass(frozen=True)
class AutomorphismSet:
    elements: tuple[VertexPermutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class OrbitPartition:
    blocks: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BurnsideBound:
    bound: int
    fixed_counts: tuple[int, ...]
    order: int


def lift_permutation(pi: VertexPermutation, vertex_set: Iterable[int]) -> frozenset[int]:
    return frozenset(pi.image[v] for v in vertex_set)


def _signatures(H: Hypergraph) -> list[tuple]:
    mt = metrics(H)
    sizes: list[list[int]] = [[] for _ in range(H.n)]
    for e in H.edges:
        for v in e:
            sizes[v].append(len(e))
    return [(mt.deg[v], mt.deg2[v], tuple(sorted(sizes[v]))) for v in range(H.n)]


def _search_order(H: Hypergraph, adj) -> list[int]:
    order, seen = [], set()
    for root in range(H.n):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(adj[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def automorphisms(
    H: Hypergraph, max_vertices: int = MAX_VERTICES, max_order: int = MAX_ORDER
) -> AutomorphismSet:
    """All vertex permutations that map the edge set onto itself."""
    if H.n > max_vertices:
        raise VertexCapExceeded(f"{H.n} vertices exceeds cap {max_vertices}")
    adj = two_section(H).adjacency
    sig = _signatures(H)
    order = _search_order(H, adj)
    pos = {v: i for i, v in enumerate(order)}
    # edges become checkable once their last vertex (in search order) is placed
    closing: list[list[frozenset[int]]] = [[] for _ in order]
    for e in H.edges:
        closing[max(pos[v] for v in e)].append(e)
    candidates = [[w for w in range(H.n) if sig[w] == sig[v]] for v in order]
    edge_set = frozenset(H.edges)

    image = [-1] * H.n
    used = [False] * H.n
    found: list[VertexPermutation] = []

    def extend(i: int) -> None:
        if i == len(order):
            if len(found) >= max_order:
                raise GroupOrderExceeded(f"automorphism group exceeds {max_order} elements")
            found.append(VertexPermutation(tuple(image)))
            return
        v = order[i]
        for w in candidates[i]:
            if used[w]:
                continue
            if any((order[j] in adj[v]) != (image[order[j]] in adj[w]) for j in range(i)):
                continue
            image[v] = w
            if all(frozenset(image[x] for x in e) in edge_set for e in closing[i]):
                used[w] = True
                extend(i + 1)
                used[w] = False
            image[v] = -1

    extend(0)
    found.sort(key=lambda p: p.image)
    return AutomorphismSet(tuple(found))


def edge_image(H: Hypergraph, g: VertexPermutation) -> list[int]:
    """Index permutation of the edges induced by ``g``."""
    lookup = {e: i for i, e in enumerate(H.edges)}
    return [lookup[lift_permutation(g, e)] for e in H.edges]


def color_preserving_subgroup(
    G: AutomorphismSet, H: Hypergraph, coloring: EdgeColoring
) -> AutomorphismSet:
    kept = []
    for g in G:
        img = edge_image(H, g)
        if all(coloring[img[i]] == coloring[i] for i in range(H.m)):
            inv = edge_image(H, g.inverse())
            assert all(coloring[inv[i]] == coloring[i] for i in range(H.m))
            kept.append(g)
    return AutomorphismSet(tuple(kept))


def orbits(T: AutomorphismSet, H: Hypergraph) -> OrbitPartition:
    parent = list(range(H.m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in T:
        for i, j in enumerate(edge_image(H, g)):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    blocks: dict[int, list[int]] = {}
    for i in range(H.m):
        blocks.setdefault(find(i), []).append(i)
    return OrbitPartition(tuple(tuple(b) for b in sorted(blocks.values())))


def burnside_average(order: int, fixed_total: int) -> int:
    """Average number of fixed points, which must be a whole number of orbits."""
    value = Fraction(fixed_total, order)
    if value.denominator != 1:
        raise NonIntegerAverage(f"{fixed_total}/{order} is not an integer")
    return int(value)


def burnside_bound(T: AutomorphismSet, H: Hypergraph) -> BurnsideBound:
    if T.order == 0:
        raise ValueError("empty element list")
    counts = tuple(sum(1 for i, j in enumerate(edge_image(H, t)) if i == j) for t in T)
    return BurnsideBound(burnside_average(T.order, sum(counts)), counts, T.order)


def is_closed(G: AutomorphismSet) -> bool:
    members = set(G.elements)
    if not G.elements or not any(g.is_identity() for g in G):
        return False
    return all(a * b in members for a in G for b in G) and all(g.inverse() in members for g in G)


def group_to_json(G: AutomorphismSet, H: Hypergraph) -> list[list[str]]:
    return [[H.vertices[w] for w in g.image] for g in G]


def permutation_from_labels(H: Hypergraph, images: Sequence[str]) -> VertexPermutation:
    return VertexPermutation(tuple(H.index(lbl) for lbl in images))
