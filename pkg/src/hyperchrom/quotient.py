"""Star quotients of a coloured hypergraph and the bounds built on them.

Given a minimal colouring and a pivot vertex ``v`` of maximum two-section
degree, vertices are grouped by identical star (``~``), the classes that
see a colour absent at ``v`` are grouped again by identical colour set
(theta), and for each absent colour ``c0`` the theta classes that carry
``c0`` together with another absent colour form ``Gamma(c0)``.

Every inequality is evaluated in exact rational arithmetic and reported with
its intermediate quantities. Sufficient conditions for ``q <= Delta_2 + 1``
return verdict objects; the direct comparison is always computed alongside.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from .coloring import EdgeColoring, chromatic_index_exact
from .core import Hypergraph, Metrics, metrics, star, two_section, validate
from .errors import AntirankDegenerate, NonMinimalColoring, NotApplicable

CASE1 = "Case1"
SINGLE_MISSING = "SingleMissing"
CASE2 = "Case2"


@dataclass(frozen=True)
class SimClass:
    members: frozenset[int]
    star: frozenset[int]
    colors: frozenset[int]

    def label(self, H: Hypergraph) -> str:
        return "/".join(H.vertices[v] for v in sorted(self.members))


@dataclass(frozen=True)
class ThetaClass:
    key: frozenset[int]
    members: tuple[SimClass, ...]

    @property
    def vertices(self) -> list[int]:
        return sorted(v for s in self.members for v in s.members)

    def label(self, H: Hypergraph) -> str:
        return "/".join(H.vertices[v] for v in self.vertices)


@dataclass(frozen=True)
class Case:
    kind: str
    missing: frozenset[int]

    @property
    def c0(self) -> int | None:
        return next(iter(self.missing)) if self.kind == SINGLE_MISSING else None


@dataclass(frozen=True)
class GammaSet:
    c0: int
    classes: tuple[ThetaClass, ...]

    def __len__(self):
        return len(self.classes)


@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    def to_json(self) -> dict:
        return {"lhs": str(self.lhs), "rhs": str(self.rhs), "holds": self.holds}


# ---------------------------------------------------------------------------
# quotients


def sim_partition(H: Hypergraph, coloring: EdgeColoring) -> list[SimClass]:
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(H.n):
        groups.setdefault(star(H, v), []).append(v)
    classes = [
        SimClass(frozenset(vs), key, frozenset(coloring[e] for e in key))
        for key, vs in groups.items()
    ]
    classes.sort(key=lambda s: min(s.members))
    return classes


def pivot_candidates(H: Hypergraph) -> list[int]:
    mt = metrics(H)
    return [v for v in range(H.n) if mt.deg2[v] == mt.delta2]


def pick_pivot(H: Hypergraph) -> int:
    """Lowest-index vertex of maximum two-section degree."""
    return pivot_candidates(H)[0]


def star_colors(H: Hypergraph, coloring: EdgeColoring, v: int) -> frozenset[int]:
    return frozenset(coloring[e] for e in star(H, v))


def classify_case(H: Hypergraph, coloring: EdgeColoring, v: int) -> Case:
    missing = frozenset(range(coloring.q)) - star_colors(H, coloring, v)
    if not missing:
        return Case(CASE1, missing)
    if len(missing) == 1:
        return Case(SINGLE_MISSING, missing)
    return Case(CASE2, missing)


def omega_theta(H: Hypergraph, coloring: EdgeColoring, v: int) -> list[ThetaClass]:
    case = classify_case(H, coloring, v)
    if case.kind == CASE1:
        raise NotApplicable("every colour already appears at the pivot")
    omega = [s for s in sim_partition(H, coloring) if s.colors & case.missing]
    grouped: dict[frozenset[int], list[SimClass]] = {}
    for s in omega:
        grouped.setdefault(s.colors, []).append(s)
    thetas = [ThetaClass(key, tuple(members)) for key, members in grouped.items()]
    thetas.sort(key=lambda t: t.vertices[0])
    return thetas


def _require_case2(H, coloring, v) -> Case:
    case = classify_case(H, coloring, v)
    if case.kind != CASE2:
        raise NotApplicable(f"needs at least two colours missing at the pivot ({case.kind})")
    return case


def gamma(H: Hypergraph, coloring: EdgeColoring, v: int, c0: int) -> GammaSet:
    case = _require_case2(H, coloring, v)
    if c0 not in case.missing:
        raise NotApplicable(f"colour {c0} is present at the pivot")
    others = case.missing - {c0}
    members = tuple(
        t for t in omega_theta(H, coloring, v) if c0 in t.key and t.key & others
    )
    if not members:
        raise NonMinimalColoring(
            f"no class carries colour {c0} together with another missing colour"
        )
    return GammaSet(c0, members)


def pair_witness(H: Hypergraph, coloring: EdgeColoring, v: int, c0: int, ci: int) -> ThetaClass:
    """A theta class whose colour set holds both ``c0`` and ``ci``.

    Minimality guarantees one exists for two distinct missing colours: if no
    edge of colour ``ci`` met an edge of colour ``c0`` the two colours could
    be merged.
    """
    if c0 == ci:
        raise ValueError("colours must differ")
    for t in omega_theta(H, coloring, v):
        if c0 in t.key and ci in t.key:
            return t
    raise NonMinimalColoring(f"colours {c0} and {ci} never meet; they can be merged")


# ---------------------------------------------------------------------------
# derived hypergraphs


def star_color_hypergraph(g: GammaSet) -> Hypergraph:
    """Hypergraph on colours whose edges are the colour sets of Gamma(c0)."""
    if not g.classes:
        raise ValueError("empty Gamma set")
    colors = sorted(set().union(*(t.key for t in g.classes)))
    return validate(
        [str(c) for c in colors],
        [[str(c) for c in sorted(t.key)] for t in g.classes],
        name=f"hstar.{g.c0}",
        linear=False,
    )


@dataclass(frozen=True)
class GammaHypergraph:
    hypergraph: Hypergraph
    classes: tuple[ThetaClass, ...]
    # missing colours whose Gamma set produced each (merged) edge
    edge_colors: tuple[tuple[int, ...], ...]

    @property
    def merged(self) -> bool:
        return any(len(cs) > 1 for cs in self.edge_colors)


def gamma_hypergraph(H: Hypergraph, coloring: EdgeColoring, v: int) -> GammaHypergraph:
    case = _require_case2(H, coloring, v)
    thetas = omega_theta(H, coloring, v)
    sets: dict[frozenset[int], list[int]] = {}
    for c in sorted(case.missing):
        members = gamma(H, coloring, v, c).classes
        key = frozenset(thetas.index(t) for t in members)
        sets.setdefault(key, []).append(c)
    used = sorted(set().union(*sets))
    classes = tuple(thetas[i] for i in used)
    labels = [t.label(H) for t in classes]
    hg = validate(
        labels,
        [[thetas[i].label(H) for i in sorted(key)] for key in sets],
        name=f"{H.name}.hgamma",
        linear=False,
        loopless=False,
    )
    return GammaHypergraph(hg, classes, tuple(tuple(cs) for cs in sets.values()))


# ---------------------------------------------------------------------------
# Helly property


@dataclass(frozen=True)
class HellyResult:
    helly: bool
    witness: tuple[int, ...] | None = None
    minimal_witness: tuple[int, ...] | None = None


def _edge_sets(G) -> list[frozenset]:
    if isinstance(G, Hypergraph):
        return list(G.edges)
    return [frozenset(e) for e in G]


def _common(sets: Iterable[frozenset]) -> frozenset:
    return reduce(lambda a, b: a & b, sets)


def helly_check(G: Hypergraph | Sequence[Iterable]) -> HellyResult:
    """Decide the Helly property through maximal cliques of the edge-intersection graph.

    Every pairwise-intersecting subfamily sits inside some maximal clique,
    and a vertex common to the clique is common to the subfamily. On failure
    the offending maximal clique is returned together with an
    inclusion-minimal subfamily of it whose intersection is empty.
    """
    edges = _edge_sets(G)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(edges)))
    graph.add_edges_from((i, j) for i, j in combinations(range(len(edges)), 2) if edges[i] & edges[j])
    for clique in sorted(tuple(sorted(c)) for c in nx.find_cliques(graph)):
        if _common(edges[i] for i in clique):
            continue
        minimal = list(clique)
        for i in clique:
            rest = [j for j in minimal if j != i]
            if len(rest) >= 2 and not _common(edges[j] for j in rest):
                minimal = rest
        return HellyResult(False, clique, tuple(minimal))
    return HellyResult(True)


# ---------------------------------------------------------------------------
# bounds


def theorem2_inequality(q: int, gamma_size: int, antirank: int, delta2: int) -> Inequality:
    """q + |Gamma| <= (|Gamma| + 1) / (ar - 1) * Delta_2 + 1."""
    if antirank <= 1:
        raise AntirankDegenerate(f"antirank {antirank} leaves the bound undefined")
    rhs = Fraction(gamma_size + 1, antirank - 1) * delta2 + 1
    return Inequality("theorem2", Fraction(q + gamma_size), rhs)


@dataclass(frozen=True)
class BoundsReport:
    c0: int
    gamma: GammaSet
    q: int
    star_size: int
    union_size: int
    hstar_delta2: int
    hstar_rank: int
    hstar_delta: int
    delta: int
    delta2: int
    antirank: int
    union: Inequality
    star: Inequality
    delta_bound: Inequality
    theorem2: Inequality
    corollary: Inequality

    @property
    def inequalities(self) -> list[Inequality]:
        return [self.union, self.star, self.delta_bound, self.theorem2, self.corollary]

    def to_json(self, H: Hypergraph) -> dict:
        return {
            "c0": self.c0,
            "gamma": [t.label(H) for t in self.gamma.classes],
            "gamma_size": len(self.gamma),
            "gamma_keys": [sorted(t.key) for t in self.gamma.classes],
            "star_colors": self.star_size,
            "union_size": self.union_size,
            "hstar": {
                "delta2": self.hstar_delta2,
                "rank": self.hstar_rank,
                "delta": self.hstar_delta,
            },
            "inequalities": {i.name: i.to_json() for i in self.inequalities},
        }


def bounds_report(H: Hypergraph, coloring: EdgeColoring, v: int, c0: int) -> BoundsReport:
    mt = metrics(H)
    if mt.antirank <= 1:
        raise AntirankDegenerate("antirank 1")
    g = gamma(H, coloring, v, c0)
    q = coloring.q
    s = len(star_colors(H, coloring, v))
    hstar = star_color_hypergraph(g)
    hsec = two_section(hstar)
    hmt = metrics(hstar)
    union_size = hstar.n
    k = len(g)
    assert hmt.deg[hstar.index(str(c0))] == k == hmt.delta
    return BoundsReport(
        c0=c0,
        gamma=g,
        q=q,
        star_size=s,
        union_size=union_size,
        hstar_delta2=hsec.max_degree(),
        hstar_rank=hmt.rank,
        hstar_delta=hmt.delta,
        delta=mt.delta,
        delta2=mt.delta2,
        antirank=mt.antirank,
        union=Inequality("union", Fraction(q), Fraction(s + union_size)),
        star=Inequality("star", Fraction(q), Fraction(s + hsec.max_degree() + 1)),
        delta_bound=Inequality("delta", Fraction(q), Fraction(s + (mt.delta - 1) * k + 1)),
        theorem2=theorem2_inequality(q, k, mt.antirank, mt.delta2),
        corollary=Inequality("corollary", Fraction(k + 1), Fraction(mt.antirank - 1)),
    )


# ---------------------------------------------------------------------------
# sufficient conditions


@dataclass(frozen=True)
class Theorem21Verdict:
    applicable: bool
    reason: str = ""
    helly: HellyResult | None = None
    fired: bool = False
    common_class: ThetaClass | None = None
    q: int = 0
    star_size: int = 0
    missing_size: int = 0
    two_delta: int = 0

    @property
    def chain_holds(self) -> bool:
        return self.q == self.star_size + self.missing_size and self.q <= self.two_delta

    def to_json(self, H: Hypergraph) -> dict:
        out = {"applicable": self.applicable, "fired": self.fired}
        if self.reason:
            out["reason"] = self.reason
        if self.fired:
            out.update(
                common_class=self.common_class.label(H),
                q=self.q,
                star_colors=self.star_size,
                missing=self.missing_size,
                two_delta=self.two_delta,
                chain_holds=self.chain_holds,
            )
        return out


def theorem21_check(H: Hypergraph, coloring: EdgeColoring, v: int | None = None) -> Theorem21Verdict:
    """Helly route: if the Gamma hypergraph is Helly then q <= 2*Delta."""
    v = pick_pivot(H) if v is None else v
    mt = metrics(H)
    if mt.antirank < 3:
        return Theorem21Verdict(False, f"antirank {mt.antirank} < 3")
    try:
        hg = gamma_hypergraph(H, coloring, v)
    except NotApplicable as exc:
        return Theorem21Verdict(False, str(exc))
    result = helly_check(hg.hypergraph)
    if not result.helly:
        return Theorem21Verdict(True, "Gamma hypergraph is not Helly", helly=result)
    # Gamma sets pairwise meet (pair witnesses), so Helly yields a common class
    common = _common(hg.hypergraph.edges)
    common_class = hg.classes[min(common)]
    missing = classify_case(H, coloring, v).missing
    assert missing <= common_class.key
    return Theorem21Verdict(
        True,
        helly=result,
        fired=True,
        common_class=common_class,
        q=coloring.q,
        star_size=len(star_colors(H, coloring, v)),
        missing_size=len(missing),
        two_delta=2 * mt.delta,
    )


@dataclass(frozen=True)
class CliqueVerdict:
    applicable: bool
    reason: str = ""
    k: int = 0
    threshold: int = 0
    family: tuple[int, ...] = ()
    fired: bool = False
    common_vertex: int | None = None
    lemma_violation: bool = False

    def to_json(self, H: Hypergraph) -> dict:
        out = {"applicable": self.applicable, "fired": self.fired}
        if self.reason:
            out["reason"] = self.reason
        if self.applicable:
            out.update(k=self.k, threshold=self.threshold, family=list(self.family),
                       family_size=len(self.family))
        if self.fired:
            out["common_vertex"] = H.vertices[self.common_vertex]
        if self.lemma_violation:
            out["lemma_violation"] = True
        return out


def clique_condition_check(H: Hypergraph, coloring: EdgeColoring, v: int | None = None) -> CliqueVerdict:
    """Uniform route: a large pairwise-meeting family carrying exactly the missing colours.

    The common vertex such a family must have is searched for directly
    rather than inferred.
    """
    v = pick_pivot(H) if v is None else v
    sizes = {len(e) for e in H.edges}
    if len(sizes) != 1:
        return CliqueVerdict(False, "hypergraph is not uniform")
    (k,) = sizes
    if k < 3:
        return CliqueVerdict(False, f"edge size {k} < 3")
    missing = classify_case(H, coloring, v).missing
    if not missing:
        return CliqueVerdict(False, "no colour is missing at the pivot")
    pool = [i for i in range(H.m) if coloring[i] in missing]
    graph = nx.Graph()
    graph.add_nodes_from(pool)
    graph.add_edges_from((i, j) for i, j in combinations(pool, 2) if H.edges[i] & H.edges[j])
    qualifying = [
        tuple(sorted(c)) for c in nx.find_cliques(graph)
        if {coloring[i] for i in c} == missing
    ]
    if not qualifying:
        return CliqueVerdict(False, "no pairwise-meeting family carries exactly the missing colours")
    family = max(sorted(qualifying), key=len)
    threshold = k * k - k + 1
    if len(family) <= threshold:
        return CliqueVerdict(True, f"family size {len(family)} <= {threshold}",
                             k=k, threshold=threshold, family=family)
    common = _common(H.edges[i] for i in family)
    if not common:
        return CliqueVerdict(True, "large family without a common vertex", k=k,
                             threshold=threshold, family=family, lemma_violation=True)
    return CliqueVerdict(True, k=k, threshold=threshold, family=family, fired=True,
                         common_vertex=min(common))


# ---------------------------------------------------------------------------
# orchestration


@dataclass(frozen=True)
class Certificate:
    condition: str
    detail: dict


@dataclass(frozen=True)
class DirectCheck:
    q: int
    bound: int
    holds: bool
    equality: bool

    def to_json(self) -> dict:
        return {"q": self.q, "delta2_plus_one": self.bound, "holds": self.holds,
                "equality": self.equality}


@dataclass(frozen=True)
class ConjectureReport:
    hypergraph: Hypergraph
    metrics: Metrics
    coloring: EdgeColoring
    pivot: int
    pivot_is_max: bool
    case: Case
    star_colors: frozenset[int]
    theta_classes: tuple[ThetaClass, ...]
    per_c0: tuple[BoundsReport, ...]
    gamma_hypergraph: GammaHypergraph | None
    helly: HellyResult | None
    theorem21: Theorem21Verdict
    clique: CliqueVerdict
    direct: DirectCheck
    certificates: tuple[Certificate, ...] = field(default=())

    @property
    def q(self) -> int:
        return self.coloring.q

    def pivot_json(self) -> dict:
        H = self.hypergraph
        return {
            "pivot": {
                "vertex": H.vertices[self.pivot],
                "index": self.pivot,
                "deg2": self.metrics.deg2[self.pivot],
                "is_max_deg2": self.pivot_is_max,
            },
            "case": self.case.kind,
            "star_colors": sorted(self.star_colors),
            "missing_colors": sorted(self.case.missing),
            "theta_classes": [
                {"class": t.label(H), "colors": sorted(t.key)} for t in self.theta_classes
            ],
            "per_c0": [b.to_json(H) for b in self.per_c0],
            "gamma_hypergraph": None if self.gamma_hypergraph is None else {
                "vertices": list(self.gamma_hypergraph.hypergraph.vertices),
                "edges": [self.gamma_hypergraph.hypergraph.edge_labels(i)
                          for i in range(self.gamma_hypergraph.hypergraph.m)],
                "edge_colors": [list(cs) for cs in self.gamma_hypergraph.edge_colors],
                "merged": self.gamma_hypergraph.merged,
            },
            "helly": None if self.helly is None else {
                "helly": self.helly.helly,
                "witness": None if self.helly.witness is None else list(self.helly.witness),
                "minimal_witness": None if self.helly.minimal_witness is None
                else list(self.helly.minimal_witness),
            },
            "theorem_2_1": self.theorem21.to_json(H),
            "clique_condition": self.clique.to_json(H),
            "certificates": [{"condition": c.condition, **c.detail} for c in self.certificates],
        }

    def to_json(self) -> dict:
        mt = self.metrics
        out = {
            "name": self.hypergraph.name,
            "metrics": {
                "n": self.hypergraph.n,
                "m": self.hypergraph.m,
                "delta": mt.delta,
                "delta2": mt.delta2,
                "rank": mt.rank,
                "antirank": mt.antirank,
            },
            "q": self.q,
            "coloring": self.coloring.to_json(),
        }
        out.update(self.pivot_json())
        out["direct_check"] = self.direct.to_json()
        return out


def conjecture_report(
    H: Hypergraph,
    seed: int | None = None,
    pivot: int | None = None,
    coloring: EdgeColoring | None = None,
) -> ConjectureReport:
    mt = metrics(H)
    if coloring is None:
        _, coloring = chromatic_index_exact(H, seed=seed)
    v = pick_pivot(H) if pivot is None else pivot
    case = classify_case(H, coloring, v)
    q = coloring.q
    direct = DirectCheck(q, mt.delta2 + 1, q <= mt.delta2 + 1, q == mt.delta2 + 1)

    thetas: tuple[ThetaClass, ...] = ()
    per_c0: list[BoundsReport] = []
    hg = None
    helly = None
    certificates: list[Certificate] = []
    if case.kind != CASE1:
        thetas = tuple(omega_theta(H, coloring, v))
    if case.kind == CASE2:
        for c0 in sorted(case.missing):
            b = bounds_report(H, coloring, v, c0)
            per_c0.append(b)
            if b.corollary.holds:
                certificates.append(Certificate("gamma_antirank", {
                    "c0": c0, "gamma_size": len(b.gamma), "antirank": mt.antirank,
                }))
        hg = gamma_hypergraph(H, coloring, v)
        helly = helly_check(hg.hypergraph)
    t21 = theorem21_check(H, coloring, v)
    if t21.fired and t21.chain_holds:
        certificates.append(Certificate("theorem_2_1", {
            "common_class": t21.common_class.label(H), "q": q, "two_delta": t21.two_delta,
        }))
    clique = clique_condition_check(H, coloring, v)
    if clique.fired:
        certificates.append(Certificate("clique_condition", {
            "family": list(clique.family), "common_vertex": H.vertices[clique.common_vertex],
            "threshold": clique.threshold,
        }))
    return ConjectureReport(
        hypergraph=H,
        metrics=mt,
        coloring=coloring,
        pivot=v,
        pivot_is_max=mt.deg2[v] == mt.delta2,
        case=case,
        star_colors=star_colors(H, coloring, v),
        theta_classes=thetas,
        per_c0=tuple(per_c0),
        gamma_hypergraph=hg,
        helly=helly,
        theorem21=t21,
        clique=clique,
        direct=direct,
        certificates=tuple(certificates),
    )
