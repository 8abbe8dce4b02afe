import json

import pytest

from hyperchrom import errors
from hyperchrom.core import is_linear, metrics
from hyperchrom.coloring import chromatic_index_exact
from hyperchrom.lab import (
    GeneratorConfig,
    config_for_seed,
    dump_counterexample,
    fano,
    flower,
    helly_positive,
    oracle_automorphisms,
    oracle_chromatic_index,
    oracle_helly,
    random_linear,
)


class TestNamedInstances:
    def test_fano(self):
        H = fano()
        mt = metrics(H)
        assert (H.n, H.m, mt.delta, mt.delta2) == (7, 7, 3, 6)

    def test_flower(self):
        H = flower(4, 3)
        assert H.name == "flower-4-3" and H.m == 4 and metrics(H).deg[H.index("c")] == 4

    def test_flower_rejects_small(self):
        with pytest.raises(ValueError):
            flower(2, 1)

    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_helly_positive(self, k):
        H, v = helly_positive(k)
        assert is_linear(H) and H.vertices[v] == "v"
        assert chromatic_index_exact(H)[0] == k + 2
        assert metrics(H).deg[H.index("u")] == k


class TestGenerator:
    def test_deterministic(self):
        cfg = GeneratorConfig(9, 6, 2, 4, 11)
        assert random_linear(cfg) == random_linear(cfg)

    def test_single_edge(self):
        H = random_linear(GeneratorConfig(3, 1, 3, 3, 0))
        assert H.vertices == ("0", "1", "2") and H.edges == (frozenset({0, 1, 2}),)

    @pytest.mark.parametrize("args", [(3, 1, 1, 2, 0), (3, 1, 3, 4, 0), (5, 0, 2, 3, 0), (5, 2, 3, 2, 0)])
    def test_infeasible(self, args):
        with pytest.raises(errors.InfeasibleConfig):
            GeneratorConfig(*args)

    def test_many_seeds_valid(self):
        for seed in range(1000):
            cfg = config_for_seed(seed)
            H = random_linear(cfg)
            assert is_linear(H) and 1 <= H.m <= cfg.m
            assert all(cfg.size_min <= len(e) <= cfg.size_max for e in H.edges)


class TestOracles:
    def test_chromatic_index(self, fano, flower33, triangle2, two_disjoint):
        assert oracle_chromatic_index(fano) == 7
        assert oracle_chromatic_index(flower33) == 3
        assert oracle_chromatic_index(triangle2) == 3
        assert oracle_chromatic_index(two_disjoint) == 1

    def test_automorphisms(self, flower33, single3, two_disjoint):
        assert oracle_automorphisms(flower33) == 48
        assert oracle_automorphisms(single3) == 6
        assert oracle_automorphisms(two_disjoint) == 8

    def test_helly(self):
        assert oracle_helly([{0, 1}, {0, 2}])
        assert not oracle_helly([{0, 1}, {1, 2}, {0, 2}])

    def test_limits(self, fano):
        with pytest.raises(errors.TooLarge):
            oracle_automorphisms(fano, limit=6)
        with pytest.raises(errors.TooLarge):
            oracle_helly([{i} for i in range(13)])


def test_dump_counterexample(tmp_path, fano):
    path = dump_counterexample(tmp_path / "out", fano, "why", {"k": 1})
    assert path.name == "fano.counterexample.json"
    doc = json.loads(path.read_text())
    assert doc["reason"] == "why" and doc["instance"]["edges"][0] == ["1", "2", "3"] and doc["k"] == 1
