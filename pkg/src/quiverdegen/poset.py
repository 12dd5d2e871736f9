"""Degeneration posets: every iso-class with a fixed dimension vector, compared pairwise."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from .decompose import is_isomorphic
from .degeneration import NO, UNKNOWN, YES, Verdict, decide_deg, verify_rz_witness
from .enumeration import enumerate_indecomposables, enumerate_modules
from .linalg import FieldSpec
from .quiver import Quiver, Representation


@dataclass
class DegenerationPoset:
    nodes: List[Representation]
    verdicts: List[List[Verdict]]          # verdicts[i][j] decides nodes[i] ≤ nodes[j]
    hasse: List[Tuple[int, int]]
    unknown: List[Tuple[int, int]]

    @property
    def labels(self) -> List[str]:
        return [x.name or f"M{i}" for i, x in enumerate(self.nodes)]

    def status(self, i: int, j: int) -> str:
        return self.verdicts[i][j].status

    def yes_graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.nodes)))
        n = len(self.nodes)
        g.add_edges_from((i, j) for i in range(n) for j in range(n) if i != j and self.status(i, j) == YES)
        return g

    def hasse_labels(self) -> List[Tuple[str, str]]:
        lab = self.labels
        return [(lab[i], lab[j]) for i, j in self.hasse]

    def to_dot(self) -> str:
        lines = ["digraph degenerations {", "  rankdir=TB;"]
        for i, lab in enumerate(self.labels):
            lines.append(f'  n{i} [label="{lab}"];')
        for i, j in self.hasse:
            lines.append(f"  n{i} -> n{j};")
        for i, j in self.unknown:
            lines.append(f'  n{i} -> n{j} [style=dashed, label="?"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _hasse(nodes: Sequence[Representation], verdicts) -> List[Tuple[int, int]]:
    g = nx.DiGraph()
    g.add_nodes_from(range(len(nodes)))
    for i in range(len(nodes)):
        for j in range(len(nodes)):
            if i != j and verdicts[i][j].status == YES:
                g.add_edge(i, j)
    if not nx.is_directed_acyclic_graph(g):
        # antisymmetry is violated; verify_partial_order reports it
        return sorted(g.edges())
    return sorted(nx.transitive_reduction(g).edges())


def build_poset(nodes: Sequence[Representation], dim_bound: Optional[int] = None, seed: int = 0,
                test_set: Optional[Sequence[Representation]] = None) -> DegenerationPoset:
    nodes = list(nodes)
    verdicts = [[decide_deg(a, b, dim_bound, seed, test_set) for b in nodes] for a in nodes]
    unknown = [(i, j) for i in range(len(nodes)) for j in range(len(nodes)) if verdicts[i][j].status == UNKNOWN]
    return DegenerationPoset(nodes, verdicts, _hasse(nodes, verdicts), unknown)


def hasse_diagram(q: Quiver, dimvec, field: FieldSpec, dim_bound: Optional[int] = None,
                  seed: int = 0) -> DegenerationPoset:
    """Decide every ordered pair of iso-classes with dimension vector ``dimvec``."""
    nodes = enumerate_modules(q, dimvec, field)
    dims = tuple(dimvec[v] for v in q.vertices) if isinstance(dimvec, dict) else tuple(dimvec)
    tests = enumerate_indecomposables(q, dims, field) if any(dims) else []
    return build_poset(nodes, dim_bound, seed, tests)


@dataclass
class PartialOrderReport:
    reflexive: bool
    antisymmetric: bool
    transitive: bool
    witnesses_ok: bool
    failures: List[str] = field(default_factory=list)
    gaps: List[Tuple[int, int, int]] = field(default_factory=list)    # Yes∘Yes with Unknown composite

    @property
    def passed(self) -> bool:
        return self.reflexive and self.antisymmetric and self.transitive and self.witnesses_ok

    def __bool__(self):
        return self.passed


def verify_partial_order(p: DegenerationPoset) -> PartialOrderReport:
    n = len(p.nodes)
    lab = p.labels
    failures, gaps = [], []
    reflexive = all(p.status(i, i) == YES for i in range(n))
    if not reflexive:
        failures.append("some node is not related to itself")
    antisym = True
    for i in range(n):
        for j in range(i + 1, n):
            if p.status(i, j) == YES and p.status(j, i) == YES and is_isomorphic(p.nodes[i], p.nodes[j]) is None:
                antisym = False
                failures.append(f"antisymmetry fails for {lab[i]} and {lab[j]}")
    transitive = True
    for i in range(n):
        for j in range(n):
            if p.status(i, j) != YES:
                continue
            for k in range(n):
                if p.status(j, k) != YES:
                    continue
                s = p.status(i, k)
                if s == NO:
                    transitive = False
                    failures.append(f"{lab[i]} ≤ {lab[j]} ≤ {lab[k]} but {lab[i]} ≰ {lab[k]}")
                elif s == UNKNOWN:
                    gaps.append((i, j, k))
    witnesses_ok = True
    for i in range(n):
        for j in range(n):
            v = p.verdicts[i][j]
            if v.status == YES:
                try:
                    verify_rz_witness(v.witness)
                except ValueError as e:
                    witnesses_ok = False
                    failures.append(f"witness {lab[i]} -> {lab[j]} fails: {e}")
    return PartialOrderReport(reflexive, antisym, transitive, witnesses_ok, failures, gaps)
