"""Graphviz DOT text for two-sections and incidence views of hypergraphs."""

from __future__ import annotations

from .core import Hypergraph, SimpleGraph


def _q(text: str) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_dot(G: SimpleGraph, name: str) -> str:
    labels = G.labels or tuple(str(i) for i in range(G.n))
    lines = [f"graph {_q(name)} {{"]
    lines += [f"  {_q(lbl)};" for lbl in labels]
    lines += [f"  {_q(labels[u])} -- {_q(labels[w])};" for u, w in G.edge_list()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def incidence_dot(H: Hypergraph | None, name: str, edge_names: list[str] | None = None) -> str:
    """Bipartite rendering: one box node per hyperedge joined to its members."""
    lines = [f"graph {_q(name)} {{"]
    if H is not None and H.m:
        edge_names = edge_names or [f"E{i}" for i in range(H.m)]
        lines.append("  node [shape=ellipse];")
        lines += [f"  {_q('v:' + lbl)} [label={_q(lbl)}];" for lbl in H.vertices]
        lines.append("  node [shape=box];")
        lines += [f"  {_q('e:' + str(i))} [label={_q(en)}];" for i, en in enumerate(edge_names)]
        for i in range(H.m):
            for lbl in H.edge_labels(i):
                lines.append(f"  {_q('e:' + str(i))} -- {_q('v:' + lbl)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(obj, name: str) -> str:
    if isinstance(obj, SimpleGraph):
        return graph_dot(obj, name)
    return incidence_dot(obj, name)
