"""Named instances, a seeded random generator and brute-force oracles.

The oracles share no search code with the main implementations; they
enumerate the definitions directly and are only meant for small inputs.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations, permutations
from pathlib import Path

from .core import Hypergraph, validate
from .errors import InfeasibleConfig, TooLarge

FANO_LINES = ("123", "145", "167", "246", "257", "347", "356")


def fano() -> Hypergraph:
    return validate(list("1234567"), [list(line) for line in FANO_LINES], name="fano")


def flower(k: int, s: int) -> Hypergraph:
    """``k`` edges of size ``s`` sharing exactly the centre vertex ``c``."""
    if k < 1 or s < 2:
        raise ValueError("flower needs k >= 1 and s >= 2")
    petals = [[f"p{i}_{j}" for j in range(1, s)] for i in range(1, k + 1)]
    vertices = ["c"] + [t for p in petals for t in p]
    return validate(vertices, [["c"] + p for p in petals], name=f"flower-{k}-{s}")


def helly_positive(k_missing: int) -> tuple[Hypergraph, int]:
    """Instance whose colours missing at the pivot all meet at one vertex ``u``.

    Two long edges ``{v, a1..ak, x}`` and ``{v, b1..bk, y}`` meet at the
    pivot ``v``; the triples ``{u, aj, bj}`` pairwise meet at ``u`` and each
    meets both long edges, so the intersection graph is complete on k+2
    edges and the k triple colours are exactly the ones absent at ``v``.
    The pivot is returned with the hypergraph (always index 0).
    """
    if k_missing < 2:
        raise ValueError("k_missing must be at least 2")
    k = k_missing
    a = [f"a{j}" for j in range(1, k + 1)]
    b = [f"b{j}" for j in range(1, k + 1)]
    vertices = ["v", *a, "x", *b, "y", "u"]
    edges = [["v", *a, "x"], ["v", *b, "y"]] + [["u", a[j], b[j]] for j in range(k)]
    return validate(vertices, edges, name=f"helly-positive-{k}"), 0


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    m: int
    size_min: int
    size_max: int
    seed: int

    def __post_init__(self):
        if not (2 <= self.size_min <= self.size_max <= self.n) or self.m < 1:
            raise InfeasibleConfig(
                f"need 2 <= size_min <= size_max <= n and m >= 1, got {self}"
            )


def random_linear(cfg: GeneratorConfig) -> Hypergraph:
    """Rejection-sample up to ``cfg.m`` edges under the linearity constraint.

    Vertices left uncovered are dropped, keeping their original numbers as
    labels. Fewer than ``m`` edges may come back when the retry budget runs
    out.
    """
    rng = random.Random(cfg.seed)
    edges: list[frozenset[int]] = []
    budget = cfg.n * cfg.m * 10
    while len(edges) < cfg.m and budget > 0:
        budget -= 1
        size = rng.randint(cfg.size_min, cfg.size_max)
        cand = frozenset(rng.sample(range(cfg.n), size))
        if all(len(cand & e) <= 1 for e in edges):
            edges.append(cand)
    if not edges:
        raise InfeasibleConfig(f"could not place a single edge for {cfg}")
    used = sorted(set().union(*edges))
    name = f"random-{cfg.n}-{cfg.m}-{cfg.size_min}-{cfg.size_max}-{cfg.seed}"
    return validate([str(v) for v in used], [[str(v) for v in sorted(e)] for e in edges], name)


def config_for_seed(seed: int, n_max: int = 10, m_max: int = 8) -> GeneratorConfig:
    """Derive a varied small generator configuration from a single seed."""
    rng = random.Random(f"cfg-{seed}")
    n = rng.randint(4, n_max)
    size_min = rng.randint(2, 3)
    size_max = rng.randint(size_min, min(4, n))
    return GeneratorConfig(n, rng.randint(2, m_max), size_min, size_max, seed)


# ---------------------------------------------------------------------------
# oracles


def _set_partitions(m: int):
    """Restricted growth strings of length m (one per colour partition)."""
    rgs = [0] * m

    def rec(i, top):
        if i == m:
            yield rgs
            return
        for c in range(top + 2):
            rgs[i] = c
            yield from rec(i + 1, max(top, c))

    if m == 0:
        yield []
        return
    yield from rec(1, 0)


def oracle_chromatic_index(H: Hypergraph, limit: int = 10) -> int:
    if H.m > limit:
        raise TooLarge(f"{H.m} edges exceeds oracle limit {limit}")
    conflicts = [(i, j) for i in range(H.m) for j in range(i + 1, H.m)
                 if set(H.edges[i]).intersection(H.edges[j])]
    best = H.m
    for colors in _set_partitions(H.m):
        used = max(colors) + 1
        if used < best and all(colors[i] != colors[j] for i, j in conflicts):
            best = used
    return best


def oracle_automorphisms(H: Hypergraph, limit: int = 8) -> int:
    if H.n > limit:
        raise TooLarge(f"{H.n} vertices exceeds oracle limit {limit}")
    target = {tuple(sorted(e)) for e in H.edges}
    count = 0
    for perm in permutations(range(H.n)):
        if {tuple(sorted(perm[v] for v in e)) for e in H.edges} == target:
            count += 1
    return count


def oracle_helly(family, limit: int = 12) -> bool:
    sets = [set(e) for e in (family.edges if isinstance(family, Hypergraph) else family)]
    if len(sets) > limit:
        raise TooLarge(f"{len(sets)} sets exceeds oracle limit {limit}")
    for r in range(2, len(sets) + 1):
        for sub in combinations(sets, r):
            pairwise = all(a & b for a, b in combinations(sub, 2))
            if pairwise and not set.intersection(*sub):
                return False
    return True


def dump_counterexample(directory, H: Hypergraph, reason: str, extra: dict | None = None) -> Path:
    """Write an offending instance to ``directory`` and return the file path."""
    from .io import to_document

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{H.name or 'instance'}.counterexample.json"
    payload = {"reason": reason, "instance": to_document(H), **(extra or {})}
    path.write_text(json.dumps(payload, indent=2) + "\n")
    return path
