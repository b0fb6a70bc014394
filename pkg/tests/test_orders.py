import networkx as nx
import pytest

from conftest import gen
from paritykit.core.orders import RelationGraph, topological_order

A, B, C = gen("a", 1), gen("b", 1), gen("c", 1)


def test_self_pairs_are_ignored():
    relation = RelationGraph("test", [A])
    relation.relate(A, A)
    assert relation.is_acyclic()
    assert relation.edges() == []


def test_order_is_lexicographically_least():
    assert topological_order([C, B, A], [(C, A)]) == [B, C, A]


def test_cycle_witness_is_closed():
    relation = RelationGraph("dimension 1", [A, B, C])
    relation.relate(A, B)
    relation.relate(B, C)
    relation.relate(C, A)
    witness = relation.witness()
    assert not witness.acyclic
    assert witness.cycle == ["a", "b", "c", "a"]
    assert witness.describe() == "dimension 1: cycle a → b → c → a"


def test_topological_order_rejects_cycles():
    with pytest.raises(nx.NetworkXUnfeasible):
        topological_order([A, B], [(A, B), (B, A)])
