"""
ParityKit Orders Module
=======================

Overview:
---------
Loop-freeness axioms ask for a partial order containing a finite generating
relation. Such an order exists exactly when the relation's digraph has no
directed cycle of length at least two, so each axiom is decided by building the
digraph and testing acyclicity. Success yields a topological linearization (the
lexicographically least one, for determinism); failure yields an explicit cycle.

Reflexive pairs are dropped: a partial order is reflexive anyway.
"""

from typing import Iterable, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel

from paritykit.core.multiset import GeneratorId


class LoopWitness(BaseModel):
    scope: str
    acyclic: bool
    order: Optional[List[str]] = None
    cycle: Optional[List[str]] = None

    def describe(self) -> str:
        if self.acyclic:
            return f"{self.scope}: order {' < '.join(self.order) if self.order else '(empty)'}"
        return f"{self.scope}: cycle {' → '.join(self.cycle)}"


class RelationGraph:
    """A generating relation on generators, stored as a networkx digraph."""

    def __init__(self, scope: str, nodes: Iterable[GeneratorId] = ()):
        self.scope = scope
        self.graph = nx.DiGraph()
        # Canonical insertion order keeps cycle search deterministic
        self.graph.add_nodes_from(sorted(nodes))

    def relate(self, smaller: GeneratorId, larger: GeneratorId) -> None:
        if smaller != larger:
            self.graph.add_edge(smaller, larger)

    def edges(self) -> List[Tuple[GeneratorId, GeneratorId]]:
        return sorted(self.graph.edges())

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.graph)

    def linear_order(self) -> List[GeneratorId]:
        return list(nx.lexicographical_topological_sort(self.graph, key=lambda node: node.sort_key))

    def find_cycle(self) -> List[GeneratorId]:
        edges = nx.find_cycle(self.graph)
        return [edges[0][0]] + [target for _, target in edges]

    def witness(self) -> LoopWitness:
        if self.is_acyclic():
            return LoopWitness(scope=self.scope, acyclic=True, order=[str(node) for node in self.linear_order()])
        return LoopWitness(scope=self.scope, acyclic=False, cycle=[str(node) for node in self.find_cycle()])


def topological_order(nodes: Iterable[GeneratorId], pairs: Iterable[Tuple[GeneratorId, GeneratorId]],
                      scope: str = "relation") -> List[GeneratorId]:
    """Linearize nodes compatibly with pairs (a before b); raises on a cycle."""
    relation = RelationGraph(scope, nodes)
    for smaller, larger in pairs:
        relation.relate(smaller, larger)
    if not relation.is_acyclic():
        raise nx.NetworkXUnfeasible(f"{scope} has a cycle: {' → '.join(map(str, relation.find_cycle()))}")
    return relation.linear_order()
