"""Full analysis of one instance: conjecture pipeline, symmetry bound, oracles."""

from __future__ import annotations

from dataclasses import dataclass

from . import lab
from .coloring import EdgeColoring, chromatic_index_exact
from .core import Hypergraph, check_sandwich
from .errors import GroupOrderExceeded, TooLarge, VertexCapExceeded
from .quotient import ConjectureReport, conjecture_report, pivot_candidates
from .symmetry import (
    MAX_ORDER,
    AutomorphismSet,
    BurnsideBound,
    OrbitPartition,
    automorphisms,
    burnside_bound,
    color_preserving_subgroup,
    group_to_json,
    orbits,
)

MAX_LISTED_ELEMENTS = 256


@dataclass(frozen=True)
class SymmetrySummary:
    aut: AutomorphismSet
    t: AutomorphismSet
    orbits: OrbitPartition
    burnside: BurnsideBound
    monochromatic: bool

    def to_json(self, H: Hypergraph, q: int) -> dict:
        out = {
            "status": "ok",
            "aut_order": self.aut.order,
            "t_order": self.t.order,
            "orbits": [list(b) for b in self.orbits.blocks],
            "orbit_count": len(self.orbits.blocks),
            "burnside_bound": self.burnside.bound,
            "burnside_equals_orbits": self.burnside.bound == len(self.orbits.blocks),
            "orbits_monochromatic": self.monochromatic,
            "q_le_bound": q <= self.burnside.bound,
        }
        if self.t.order <= MAX_LISTED_ELEMENTS:
            out["t_elements"] = group_to_json(self.t, H)
        return out


def symmetry_summary(H: Hypergraph, coloring: EdgeColoring, max_order: int = MAX_ORDER) -> SymmetrySummary:
    aut = automorphisms(H, max_order=max_order)
    t = color_preserving_subgroup(aut, H, coloring)
    part = orbits(t, H)
    mono = all(len({coloring[e] for e in block}) == 1 for block in part.blocks)
    return SymmetrySummary(aut, t, part, burnside_bound(t, H), mono)


@dataclass(frozen=True)
class Analysis:
    report: ConjectureReport
    symmetry: SymmetrySummary | None
    symmetry_skipped: str = ""
    oracle: dict | None = None
    pivot_reports: tuple[ConjectureReport, ...] = ()

    @property
    def hypergraph(self) -> Hypergraph:
        return self.report.hypergraph

    def to_json(self) -> dict:
        H = self.hypergraph
        out = self.report.to_json()
        sand = check_sandwich(H)
        out["sandwich"] = {"lhs": sand.lhs, "mid": sand.mid, "rhs": sand.rhs, "holds": sand.holds}
        if self.symmetry is not None:
            out["symmetry"] = self.symmetry.to_json(H, self.report.q)
        else:
            out["symmetry"] = {"status": "skipped", "reason": self.symmetry_skipped}
        if self.pivot_reports:
            out["all_pivots"] = [r.pivot_json() for r in self.pivot_reports]
        if self.oracle is not None:
            out["oracle_check"] = self.oracle
        return out


def oracle_check(H: Hypergraph, report: ConjectureReport, symmetry: SymmetrySummary | None) -> dict:
    """Compare against the brute-force oracles wherever they are allowed to run."""
    out: dict = {}
    try:
        q = lab.oracle_chromatic_index(H)
        out["chromatic_index"] = {"oracle": q, "solver": report.q, "agree": q == report.q}
    except TooLarge as exc:
        out["chromatic_index"] = {"skipped": str(exc)}
    if symmetry is not None:
        try:
            order = lab.oracle_automorphisms(H)
            out["automorphisms"] = {"oracle": order, "search": symmetry.aut.order,
                                    "agree": order == symmetry.aut.order}
        except TooLarge as exc:
            out["automorphisms"] = {"skipped": str(exc)}
    if report.gamma_hypergraph is not None:
        try:
            hg = report.gamma_hypergraph.hypergraph
            verdict = lab.oracle_helly(hg)
            out["helly"] = {"oracle": verdict, "check": report.helly.helly,
                            "agree": verdict == report.helly.helly}
        except TooLarge as exc:
            out["helly"] = {"skipped": str(exc)}
    return out


def analyze(
    H: Hypergraph,
    seed: int | None = None,
    pivot: int | None = None,
    all_pivots: bool = False,
    with_oracles: bool = False,
    max_order: int = MAX_ORDER,
) -> Analysis:
    _, coloring = chromatic_index_exact(H, seed=seed)
    report = conjecture_report(H, pivot=pivot, coloring=coloring)
    symmetry, skipped = None, ""
    try:
        symmetry = symmetry_summary(H, coloring, max_order)
    except (GroupOrderExceeded, VertexCapExceeded) as exc:
        skipped = str(exc)
    others = ()
    if all_pivots:
        others = tuple(conjecture_report(H, pivot=v, coloring=coloring) for v in pivot_candidates(H))
    oracle = oracle_check(H, report, symmetry) if with_oracles else None
    return Analysis(report, symmetry, skipped, oracle, others)


__all__ = ["Analysis", "SymmetrySummary", "analyze", "symmetry_summary"]
