"""
ParityKit Families Module
=========================

Overview:
---------
Constructors for the standard parity complexes: globes, parity simplexes
(orientals) and parity cubes; plus seeded random structures used as test
corpora and a bounded search for a structure that is weakly but not strongly
loop-free.

Orientation conventions:
    oriental(n)  omitting the i-th vertex gives a positive face for even i and
                 a negative face for odd i, so <01> has source <0>.
    cube(n)      replacing the j-th star (1-indexed, left to right) by 1 gives a
                 positive face for odd j and a negative face for even j;
                 replacing it by 0 gives the opposite sign.
                 The single point of cube(0) is named "pt".
    globe(n)     e{k}- and e{k}+ for k < n, then "top".

Usage:
------
    from paritykit.core.families import FamilySpec, cube, oriental

    simplex = oriental(3)
    square = FamilySpec(family="cube", n=2).build()
"""

from itertools import combinations, product
from typing import List, Literal, Optional, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, Field

from paritykit.core.errors import BoundExceededError
from paritykit.core.multiset import GeneratorId, Multiset
from paritykit.core.parity import (AdditiveParityStructure, Classification, ParityStructure, ValidationReport,
                                   validate)
from paritykit.utils.paritykit_logging import ParityLogging
from paritykit.utils.settings import load_settings

logger = ParityLogging("Families")


def _check_bound(family: str, n: int):
    if n < 0:
        raise ValueError(f"{family}({n}): n must be a natural number")
    bound = getattr(load_settings().bounds, family)
    if n > bound:
        raise BoundExceededError(f"{family}({n}) exceeds the configured bound {bound}")


def globe(n: int) -> ParityStructure:
    _check_bound("globe", n)
    rows = []
    for k in range(n):
        for sign in "-+":
            faces = ([f"e{k - 1}-"], [f"e{k - 1}+"]) if k > 0 else ([], [])
            rows.append((f"e{k}{sign}", k, *faces))
    faces = ([f"e{n - 1}-"], [f"e{n - 1}+"]) if n > 0 else ([], [])
    rows.append(("top", n, *faces))
    return ParityStructure.from_elements(rows, name=f"globe-{n}")


def oriental(n: int) -> ParityStructure:
    _check_bound("oriental", n)
    rows = []
    for size in range(1, n + 2):
        for vertices in combinations(range(n + 1), size):
            name = "".join(map(str, vertices))
            neg, pos = [], []
            if size > 1:
                for i in range(size):
                    omitted = "".join(map(str, vertices[:i] + vertices[i + 1:]))
                    (pos if i % 2 == 0 else neg).append(omitted)
            rows.append((name, size - 1, neg, pos))
    return ParityStructure.from_elements(rows, name=f"oriental-{n}")


def cube(n: int) -> ParityStructure:
    _check_bound("cube", n)
    rows = []
    for word in product("01*", repeat=n):
        word = "".join(word) or "pt"
        neg, pos = [], []
        stars = [index for index, letter in enumerate(word) if letter == "*"]
        for j, index in enumerate(stars, start=1):
            one = word[:index] + "1" + word[index + 1:]
            zero = word[:index] + "0" + word[index + 1:]
            if j % 2 == 1:
                pos.append(one)
                neg.append(zero)
            else:
                neg.append(one)
                pos.append(zero)
        rows.append((word, len(stars), neg, pos))
    return ParityStructure.from_elements(rows, name=f"cube-{n}")


FAMILIES = {"globe": globe, "oriental": oriental, "cube": cube}


class FamilySpec(BaseModel):
    family: Literal["globe", "oriental", "cube"]
    n: int = Field(ge=0)

    def build(self) -> ParityStructure:
        return FAMILIES[self.family](self.n)


# Random corpora

def _layer_sizes(rng: np.random.Generator, max_generators: int, max_dim: int) -> List[int]:
    remaining = int(rng.integers(1, max_generators + 1))
    top = int(rng.integers(0, max_dim + 1))
    sizes = []
    for _ in range(top + 1):
        if remaining <= 0:
            break
        size = int(rng.integers(1, min(remaining, 4) + 1))
        sizes.append(size)
        remaining -= size
    return sizes


def _random_faces(rng: np.random.Generator, lower: List[GeneratorId], max_count: int,
                  normal: bool) -> Tuple[Multiset, Multiset]:
    dim = lower[0].dim
    if normal and dim == 0:
        picks = rng.choice(len(lower), size=2, replace=False)
        return Multiset.subset([lower[int(picks[0])]], dim), Multiset.subset([lower[int(picks[1])]], dim)
    order = [lower[int(i)] for i in rng.permutation(len(lower))]
    neg_size = int(rng.integers(0, min(2, len(order)) + 1))
    pos_size = int(rng.integers(0, min(2, len(order) - neg_size) + 1))

    def counts(keys):
        return Multiset({key: int(rng.integers(1, max_count + 1)) for key in keys}, dim)

    return counts(order[:neg_size]), counts(order[neg_size:neg_size + pos_size])


def _random_rows(rng: np.random.Generator, max_generators: int, max_dim: int, max_count: int, normal: bool):
    generators: List[List[GeneratorId]] = []
    faces = {}
    for dim, size in enumerate(_layer_sizes(rng, max_generators, max_dim)):
        if normal and dim == 0:
            # Distinct endpoints for every edge
            size = max(size, 2)
        layer = [GeneratorId(f"d{dim}n{i}", dim) for i in range(size)]
        if dim > 0:
            for generator in layer:
                faces[generator] = _random_faces(rng, generators[-1], max_count, normal)
        generators.append(layer)
    return [g for layer in generators for g in layer], faces


def random_additive_structure(rng: np.random.Generator, max_generators: int = 12, max_dim: int = 2,
                              max_count: int = 2, normal: bool = False) -> AdditiveParityStructure:
    """A random structure with disjoint faces of counts up to max_count; dimensions 0..max_dim."""
    generators, faces = _random_rows(rng, max_generators, max_dim, max_count, normal)
    return AdditiveParityStructure(generators, faces, name="random")


def random_parity_structure(rng: np.random.Generator, max_generators: int = 8, max_dim: int = 2,
                            normal: bool = False) -> ParityStructure:
    generators, faces = _random_rows(rng, max_generators, max_dim, 1, normal)
    return ParityStructure(generators, faces, name="random")


def random_globular_structure(rng: np.random.Generator, max_vertices: int = 3, max_edges: int = 4,
                              max_faces: int = 1) -> ParityStructure:
    """A random 2-dimensional parity structure whose 2-generators are bounded by parallel edge paths.

    Edges always run from a lower to a higher vertex, so the 1-skeleton has no
    directed cycle; each 2-generator takes two edge-disjoint paths with common
    endpoints as its negative and positive face.
    """
    vertices = [GeneratorId(f"d0n{i}", 0) for i in range(int(rng.integers(2, max_vertices + 1)))]
    skeleton = nx.MultiDiGraph()
    skeleton.add_nodes_from(vertices)
    faces = {}
    edges = []
    for i in range(int(rng.integers(len(vertices) - 1, max_edges + 1))):
        tail, head = sorted(int(k) for k in rng.choice(len(vertices), size=2, replace=False))
        edge = GeneratorId(f"d1n{i}", 1)
        skeleton.add_edge(vertices[tail], vertices[head], key=edge)
        faces[edge] = (Multiset.subset([vertices[tail]], 0), Multiset.subset([vertices[head]], 0))
        edges.append(edge)

    parallel = []
    for source, target in combinations(vertices, 2):
        paths = [[key for _, _, key in path] for path in nx.all_simple_edge_paths(skeleton, source, target)]
        parallel.extend((first, second) for first, second in combinations(paths, 2) if not set(first) & set(second))

    cells = []
    if parallel:
        for j in range(int(rng.integers(1, max_faces + 1))):
            first, second = parallel[int(rng.integers(len(parallel)))]
            if rng.integers(2):
                first, second = second, first
            cell = GeneratorId(f"d2n{j}", 2)
            faces[cell] = (Multiset.subset(first, 1), Multiset.subset(second, 1))
            cells.append(cell)
    return ParityStructure([*vertices, *edges, *cells], faces, name="random globular")


def find_loop_freeness_separator(seed: int = 0, max_vertices: int = 3, max_edges: int = 4, max_faces: int = 1,
                                 attempts: int = 2000,
                                 max_rounds: int = 8) -> Optional[Tuple[ParityStructure, ValidationReport]]:
    """Search for a weak parity complex that is not strongly loop-free, doubling the bound each round."""
    rng = np.random.default_rng(seed)
    bound = attempts
    for round_number in range(max_rounds):
        for _ in range(bound):
            candidate = random_globular_structure(rng, max_vertices, max_edges, max_faces)
            if candidate.top_dim < 2:
                continue
            report = validate(candidate)
            if report.classification is Classification.WEAK_PARITY_COMPLEX:
                logger.info("Found a weakly but not strongly loop-free structure", round=round_number, bound=bound)
                return candidate, report
        logger.warning("No separator within bound, raising it", round=round_number, bound=bound)
        bound *= 2
    return None
