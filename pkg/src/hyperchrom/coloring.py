"""Exact proper hyperedge colouring.

A proper hyperedge colouring of ``H`` is a proper vertex colouring of its
intersection graph, so the chromatic index is computed there with a
DSATUR-ordered branch and bound.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .core import Hypergraph, SimpleGraph, star
from .errors import MissingEdgeAssignment


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[int, ...]

    def __post_init__(self):
        used = set(self.colors)
        if used and used != set(range(len(used))):
            raise ValueError(f"colour indices must be exactly 0..q-1, got {sorted(used)}")

    @property
    def q(self) -> int:
        return len(set(self.colors))

    def __getitem__(self, edge: int) -> int:
        return self.colors[edge]

    def edges_with(self, color: int) -> list[int]:
        return [i for i, c in enumerate(self.colors) if c == color]

    def to_json(self) -> dict:
        return {"q": self.q, "colors": list(self.colors)}


def normalize(colors: Sequence[int]) -> EdgeColoring:
    """Relabel colours by first appearance in edge order."""
    relabel: dict[int, int] = {}
    for c in colors:
        relabel.setdefault(c, len(relabel))
    return EdgeColoring(tuple(relabel[c] for c in colors))


def intersection_graph(H: Hypergraph) -> SimpleGraph:
    adj: list[set[int]] = [set() for _ in range(H.m)]
    for i, j in combinations(range(H.m), 2):
        if H.edges[i] & H.edges[j]:
            adj[i].add(j)
            adj[j].add(i)
    return SimpleGraph(H.m, tuple(frozenset(a) for a in adj))


def is_proper(H: Hypergraph, coloring: EdgeColoring | Sequence[int | None]) -> bool:
    colors = coloring.colors if isinstance(coloring, EdgeColoring) else tuple(coloring)
    if len(colors) != H.m or any(c is None for c in colors):
        raise MissingEdgeAssignment(f"colouring covers {len(colors)} of {H.m} edges")
    for i, j in combinations(range(H.m), 2):
        if colors[i] == colors[j] and H.edges[i] & H.edges[j]:
            return False
    return True


def induced_vertex_colors(H: Hypergraph, coloring: EdgeColoring) -> tuple[frozenset[int], ...]:
    """Per-vertex set of colours on the edges through that vertex."""
    return tuple(frozenset(coloring[e] for e in star(H, v)) for v in range(H.n))


class _Solver:
    def __init__(self, adjacency: Sequence[frozenset[int]], seed: int | None):
        self.adj = adjacency
        self.m = len(adjacency)
        # rank[i] is the tie-break priority of vertex i (lower wins)
        order = list(range(self.m))
        self.rng = None
        if seed is not None:
            self.rng = random.Random(seed)
            self.rng.shuffle(order)
        self.rank = [0] * self.m
        for pos, v in enumerate(order):
            self.rank[v] = pos

    def greedy_clique(self) -> list[int]:
        start = min(range(self.m), key=lambda v: (-len(self.adj[v]), self.rank[v]))
        clique = [start]
        cand = set(self.adj[start])
        while cand:
            nxt = min(cand, key=lambda v: (-len(self.adj[v] & cand), self.rank[v]))
            clique.append(nxt)
            cand &= self.adj[nxt]
        return clique

    def _pick(self, colors: list[int]) -> int:
        best_key = None
        best = -1
        for v in range(self.m):
            if colors[v] >= 0:
                continue
            sat = len({colors[w] for w in self.adj[v] if colors[w] >= 0})
            key = (-sat, self.rank[v])
            if best_key is None or key < best_key:
                best_key, best = key, v
        return best

    def greedy(self) -> list[int]:
        colors = [-1] * self.m
        for _ in range(self.m):
            v = self._pick(colors)
            taken = {colors[w] for w in self.adj[v]}
            c = 0
            while c in taken:
                c += 1
            colors[v] = c
        return colors

    def solve(self) -> list[int]:
        lower = len(self.greedy_clique())
        best = self.greedy()
        self.best = best
        self.best_q = max(best) + 1
        if self.best_q == lower:
            return best
        self.lower = lower
        colors = [-1] * self.m
        self._search(colors, 0, 0)
        return self.best

    def _search(self, colors: list[int], n_colored: int, used: int) -> bool:
        if n_colored == self.m:
            self.best = list(colors)
            self.best_q = used
            return used == self.lower
        v = self._pick(colors)
        taken = {colors[w] for w in self.adj[v]}
        options = [c for c in range(used) if c not in taken]
        if self.rng is not None:
            self.rng.shuffle(options)
        # opening a new colour is only allowed as index `used` (symmetry breaking)
        if used + 1 < self.best_q:
            options.append(used)
        for c in options:
            if max(used, c + 1) >= self.best_q:
                continue
            colors[v] = c
            if self._search(colors, n_colored + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False


def chromatic_index_exact(H: Hypergraph, seed: int | None = None) -> tuple[int, EdgeColoring]:
    """Return ``(q, coloring)`` with ``q`` the chromatic index of ``H``.

    ``seed`` perturbs tie-breaking and colour trial order so that alternative
    minimal colourings can be sampled; ``None`` gives the canonical result.
    """
    graph = intersection_graph(H)
    colors = _Solver(graph.adjacency, seed).solve()
    coloring = normalize(colors)
    return coloring.q, coloring


@dataclass(frozen=True)
class PairAdjacency:
    holds: bool
    violation: tuple[int, int] | None = None
    recoloring: EdgeColoring | None = None


def pair_adjacency_check(H: Hypergraph, coloring: EdgeColoring) -> PairAdjacency:
    """Check that every two colour classes contain a pair of meeting edges.

    When two classes never meet, the second can be merged into the first; the
    merged colouring (one colour fewer) is returned as the witness.
    """
    q = coloring.q
    classes = [coloring.edges_with(c) for c in range(q)]
    for a, b in combinations(range(q), 2):
        touching = any(H.edges[i] & H.edges[j] for i in classes[a] for j in classes[b])
        if not touching:
            merged = [a if c == b else c for c in coloring.colors]
            return PairAdjacency(False, (a, b), normalize(merged))
    return PairAdjacency(True)
