"""
ParityKit Cells Module
======================

Overview:
---------
Cells of the strict omega-category presented by a complex. An n-cell is a
table with two rows of chains, (M0 ... Mn ; P0 ... Pn), with equal last columns
and with d(column k+1) = Pk - Mk in both rows. Over a normal basis the cells
of the free category additionally have singleton 0-columns.

Key Features:
-------------
1. CellTable with face, identity and compose (the k-composite table).
2. atom: the cell generated by a single generator.
3. enumerate_cells: all cells up to a dimension over a weakly loop-free structure.
4. excision_decompose: a cell as a composite of slices with singleton tops.
5. AtomExpression, evaluate and AtomClosure: witnesses that atoms and identities
   generate every enumerated cell under composition.

Usage:
------
    from paritykit.core.cells import atom, compose, face
    from paritykit.core.families import oriental

    simplex = oriental(2)
    edge_path = compose(atom(simplex, simplex.generator("01")), atom(simplex, simplex.generator("12")), 0)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Deque, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import networkx as nx

from paritykit.core.chain import FreeDirectedComplex, boundary, from_structure
from paritykit.core.errors import (CellShapeError, DimensionMismatchError, EnumerationLimitError,
                                   InternalConsistencyError, MissingAugmentationError, NotComposableError,
                                   NotWeaklyLoopFreeError, NotWellFormedError, UnknownGeneratorError)
from paritykit.core.multiset import GeneratorId, Multiset, difference, disjoint_union, meet, parts
from paritykit.core.orders import topological_order
from paritykit.core.parity import (AdditiveParityStructure, ParityStructure, face_images, mu_pi, validate,
                                   well_formed_subsets)
from paritykit.utils.paritykit_logging import ParityLogging
from paritykit.utils.settings import load_settings

logger = ParityLogging("Cells")

Basis = Union[AdditiveParityStructure, FreeDirectedComplex]


def _column_key(column: Multiset) -> Tuple:
    return tuple((key.sort_key, count) for key, count in column.items())


@dataclass(frozen=True)
class CellTable:
    """Two rows of chains; column k holds chains of dimension k."""
    neg: Tuple[Multiset, ...]
    pos: Tuple[Multiset, ...]

    def __post_init__(self):
        if len(self.neg) != len(self.pos) or not self.neg:
            raise CellShapeError(f"Rows of lengths {len(self.neg)} and {len(self.pos)} do not form a table")
        try:
            neg = tuple(Multiset(dict(column.items()), k) for k, column in enumerate(self.neg))
            pos = tuple(Multiset(dict(column.items()), k) for k, column in enumerate(self.pos))
        except DimensionMismatchError as e:
            raise CellShapeError(f"Column holds chains of the wrong dimension: {e}") from e
        if neg[-1] != pos[-1]:
            raise CellShapeError(f"Last columns differ: {neg[-1]} and {pos[-1]}")
        object.__setattr__(self, "neg", neg)
        object.__setattr__(self, "pos", pos)

    @property
    def dim(self) -> int:
        return len(self.neg) - 1

    @property
    def top(self) -> Multiset:
        return self.neg[-1]

    @property
    def is_identity(self) -> bool:
        return self.dim > 0 and not self.top

    def generators(self) -> List[GeneratorId]:
        return sorted({key for row in (self.neg, self.pos) for column in row for key in column})

    @property
    def sort_key(self) -> Tuple:
        return (self.dim,) + tuple(_column_key(column) for column in self.neg + self.pos)

    def __str__(self):
        def row(columns):
            return ", ".join("{" + ",".join(key.name if count == 1 else f"{key.name}:{count}"
                                            for key, count in column.items()) + "}" for column in columns)
        return f"({row(self.neg)}; {row(self.pos)})"


class CellMode(str, Enum):
    RHO = "rho"
    NU = "nu"


class CellCheck(NamedTuple):
    valid: bool
    reason: Optional[str] = None


@lru_cache(maxsize=64)
def _complex_of(structure: AdditiveParityStructure) -> FreeDirectedComplex:
    return from_structure(structure)


def as_complex(basis: Basis) -> FreeDirectedComplex:
    if isinstance(basis, FreeDirectedComplex):
        return basis
    return _complex_of(basis)


def validate_cell(basis: Basis, cell: CellTable, mode: CellMode = CellMode.NU) -> CellCheck:
    complex_ = as_complex(basis)
    mode = CellMode(mode)
    known = set(complex_.basis)
    for key in cell.generators():
        if key not in known:
            raise UnknownGeneratorError(f"Cell mentions unknown generator {key!r}")
    if mode is CellMode.NU and complex_.augmentation is None:
        raise MissingAugmentationError(f"{complex_.name or 'complex'} has no augmentation")

    for k in range(cell.dim):
        expected = cell.pos[k].to_vector() - cell.neg[k].to_vector()
        for label, row in (("negative", cell.neg), ("positive", cell.pos)):
            actual = boundary(complex_, row[k + 1])
            if actual != expected:
                return CellCheck(False, f"d of {label} column {k + 1} is {actual}, expected {expected}")
    if mode is CellMode.NU:
        for label, row in (("negative", cell.neg), ("positive", cell.pos)):
            if complex_.augment(row[0]) != 1:
                return CellCheck(False, f"{label} 0-column {row[0]} does not have augmentation 1")
    return CellCheck(True)


def _sign(sign: str) -> str:
    if sign in ("source", "-"):
        return "source"
    if sign in ("target", "+"):
        return "target"
    raise ValueError(f"Unknown face sign {sign!r}; expected 'source' or 'target'")


def face(cell: CellTable, k: int, sign: str) -> CellTable:
    """The k-source or k-target: first k columns copied, last column (Mk, Mk) or (Pk, Pk)."""
    if not 0 <= k < cell.dim:
        raise DimensionMismatchError(f"A {cell.dim}-cell has no {k}-dimensional faces")
    column = cell.neg[k] if _sign(sign) == "source" else cell.pos[k]
    return CellTable(cell.neg[:k] + (column,), cell.pos[:k] + (column,))


def identity(cell: CellTable) -> CellTable:
    empty = Multiset.empty(cell.dim + 1)
    return CellTable(cell.neg + (empty,), cell.pos + (empty,))


def lift_identity(cell: CellTable, dim: int) -> CellTable:
    """Iterated identity up to the given dimension."""
    while cell.dim < dim:
        cell = identity(cell)
    return cell


def compose(first: CellTable, second: CellTable, k: int, disjoint: bool = True) -> CellTable:
    """The k-composite: columns up to k from first's negative row and second's positive row, sums above.

    The summed columns of cells over a weakly loop-free basis never overlap, so an
    overlap raises InternalConsistencyError. disjoint=False forms the plain multiset sum.
    """
    if first.dim != second.dim:
        raise DimensionMismatchError(f"Cannot compose a {first.dim}-cell with a {second.dim}-cell")
    if not 0 <= k < first.dim:
        raise DimensionMismatchError(f"Cannot {k}-compose {first.dim}-cells")
    if face(first, k, "target") != face(second, k, "source"):
        raise NotComposableError(f"{k}-target of {first} differs from {k}-source of {second}")

    neg = list(first.neg[:k + 1])
    pos = list(second.pos[:k + 1])
    for i in range(k + 1, first.dim + 1):
        if disjoint and (meet(first.neg[i], second.neg[i]) or meet(first.pos[i], second.pos[i])):
            raise InternalConsistencyError(f"Column {i} of a {k}-composite is not a disjoint union")
        neg.append(disjoint_union(first.neg[i], second.neg[i]))
        pos.append(disjoint_union(first.pos[i], second.pos[i]))
    return CellTable(tuple(neg), tuple(pos))


def compose_all(cells: Sequence[CellTable], k: int, disjoint: bool = True) -> CellTable:
    if not cells:
        raise ValueError("Nothing to compose")
    result = cells[0]
    for cell in cells[1:]:
        result = compose(result, cell, k, disjoint)
    return result


def atom(structure: AdditiveParityStructure, generator: GeneratorId) -> CellTable:
    """The table (mu(x), pi(x)); iterated face images for additive structures."""
    structure.require(generator)
    if isinstance(structure, ParityStructure):
        mu, pi = mu_pi(structure, generator)
        return CellTable(mu, pi)
    neg, pos = structure.atom_columns(generator)
    return CellTable(neg, pos)


def _weak_parity_basis(structure: AdditiveParityStructure) -> Tuple[ParityStructure, bool]:
    report = validate(structure)
    if not report.weakly_loop_free:
        raise NotWeaklyLoopFreeError(f"{structure.name or 'structure'} is not weakly loop-free")
    if not report.normal:
        raise MissingAugmentationError(f"{structure.name or 'structure'} is not normal; cells need an augmentation")
    view = structure.as_parity()
    if view is None:
        raise NotWellFormedError(f"{structure.name or 'structure'} has a face count of at least 2")
    return view, report.additive_globular


def enumerate_cells(structure: AdditiveParityStructure, max_dim: int) -> List[CellTable]:
    """Every cell of dimension at most max_dim, canonically ordered.

    Cells are built top-down: a well-formed top S over each (n-1)-cell whose top
    M contains d-S and misses d+b for every b in S; the positive column is then
    (M - d-S) + d+S.
    """
    view, globular = _weak_parity_basis(structure)
    limit = load_settings().max_cells
    total = 0

    layers: List[List[CellTable]] = []
    if max_dim >= 0:
        layers.append([CellTable((Multiset.subset([v]),), (Multiset.subset([v]),)) for v in view.generators_of(0)])
        total = len(layers[0])

    for dim in range(1, max_dim + 1):
        by_top: Dict[Multiset, List[CellTable]] = {}
        for lower in layers[-1]:
            by_top.setdefault(lower.top, []).append(lower)
        layer = []
        for top in well_formed_subsets(view, dim):
            images = face_images(view, top) if top else None
            for lower_top, lowers in by_top.items():
                if images is not None:
                    if not images.minus <= lower_top:
                        continue
                    if any(meet(lower_top, view.pos(b)) for b in top):
                        continue
                    target = disjoint_union(difference(lower_top, images.minus), images.plus)
                else:
                    target = lower_top
                for lower in lowers:
                    cell = CellTable(lower.neg + (top,), lower.pos[:-1] + (target, top))
                    # without dd = 0 the target column need not satisfy the boundary condition
                    if not globular and not validate_cell(view, cell).valid:
                        continue
                    layer.append(cell)
                    total += 1
                    if total > limit:
                        raise EnumerationLimitError(f"More than {limit} cells; raise PARITYKIT_MAX_CELLS to continue")
        layers.append(layer)
        logger.debug(f"Enumerated {len(layer)} cells of dimension {dim}", structure=view.name)

    cells = sorted((cell for layer in layers for cell in layer), key=lambda cell: cell.sort_key)
    logger.info(f"Enumerated cells of {view.name or 'structure'}", max_dim=max_dim, counts=cell_counts(cells))
    return cells


def cell_counts(cells: Sequence[CellTable]) -> Tuple[int, ...]:
    if not cells:
        return ()
    counts = [0] * (max(cell.dim for cell in cells) + 1)
    for cell in cells:
        counts[cell.dim] += 1
    return tuple(counts)


def excision_decompose(structure: AdditiveParityStructure, cell: CellTable) -> List[CellTable]:
    """Slices with singleton tops whose (n-1)-composite, left to right, is the cell.

    Tops are ordered so that d+b_i meets d-b_j only when i < j; an identity cell
    has the empty decomposition.
    """
    n = cell.dim
    if n < 1:
        raise DimensionMismatchError("Only cells of dimension at least 1 can be decomposed")
    members = list(cell.top)
    if not members:
        return []

    pairs = [(first, second) for first in members for second in members
             if first != second and meet(structure.pos(first), structure.neg(second))]
    try:
        ordered = topological_order(members, pairs, scope=f"top of {cell}")
    except nx.NetworkXUnfeasible as e:
        raise InternalConsistencyError(str(e)) from e

    shared_neg, shared_pos = cell.neg[:n - 1], cell.pos[:n - 1]
    current = cell.neg[n - 1]
    slices = []
    for member in ordered:
        for _ in range(cell.top[member]):
            step = structure.boundary(Multiset.subset([member]))
            deficit, advanced = parts(current.to_vector() + step)
            if deficit:
                raise InternalConsistencyError(f"Slice at {member} would make column {n - 1} negative")
            single = Multiset.subset([member])
            slices.append(CellTable(shared_neg + (current, single), shared_pos + (advanced, single)))
            current = advanced
    if current != cell.pos[n - 1]:
        raise InternalConsistencyError(f"Slices end at {current}, not at {cell.pos[n - 1]}")
    logger.debug(f"Excised {cell}", slices=len(slices))
    return slices


# Atom expressions

@dataclass(frozen=True)
class AtomLeaf:
    generator: GeneratorId

    def to_list(self) -> list:
        return ["atom", self.generator.name]


@dataclass(frozen=True)
class IdentityNode:
    inner: "AtomExpression"

    def to_list(self) -> list:
        return ["id", self.inner.to_list()]


@dataclass(frozen=True)
class ComposeNode:
    k: int
    left: "AtomExpression"
    right: "AtomExpression"

    def to_list(self) -> list:
        return ["compose", self.k, self.left.to_list(), self.right.to_list()]


AtomExpression = Union[AtomLeaf, IdentityNode, ComposeNode]


def expression_from_list(structure: AdditiveParityStructure, data: list) -> AtomExpression:
    if not isinstance(data, list) or not data:
        raise ValueError(f"Malformed expression {data!r}")
    tag = data[0]
    if tag == "atom" and len(data) == 2:
        return AtomLeaf(structure.generator(data[1]))
    if tag == "id" and len(data) == 2:
        return IdentityNode(expression_from_list(structure, data[1]))
    if tag == "compose" and len(data) == 4 and isinstance(data[1], int):
        return ComposeNode(data[1], expression_from_list(structure, data[2]), expression_from_list(structure, data[3]))
    raise ValueError(f"Malformed expression {data!r}")


def evaluate(structure: AdditiveParityStructure, expression: AtomExpression) -> CellTable:
    if isinstance(expression, AtomLeaf):
        return atom(structure, expression.generator)
    if isinstance(expression, IdentityNode):
        return identity(evaluate(structure, expression.inner))
    return compose(evaluate(structure, expression.left), evaluate(structure, expression.right), expression.k)


class AtomClosure:
    """Breadth-first closure of atoms and identities under composition, with one witness per cell."""

    def __init__(self, structure: AdditiveParityStructure, max_dim: int):
        self.structure = structure
        self.max_dim = max_dim
        self.cells = enumerate_cells(structure, max_dim)
        self._witnesses: Dict[CellTable, AtomExpression] = {}
        self._by_face: Dict[Tuple[int, int, str, CellTable], List[CellTable]] = {}
        self._search()

    def _record(self, cell: CellTable, expression: AtomExpression, queue: Deque[CellTable]):
        if cell in self._witnesses:
            return
        self._witnesses[cell] = expression
        queue.append(cell)

    def _index(self, cell: CellTable):
        for k in range(cell.dim):
            for sign in ("source", "target"):
                self._by_face.setdefault((cell.dim, k, sign, face(cell, k, sign)), []).append(cell)

    def _search(self):
        queue: Deque[CellTable] = deque()
        for generator in self.structure.generators:
            if generator.dim <= self.max_dim:
                self._record(atom(self.structure, generator), AtomLeaf(generator), queue)

        while queue:
            cell = queue.popleft()
            self._index(cell)
            expression = self._witnesses[cell]
            if cell.dim < self.max_dim:
                self._record(identity(cell), IdentityNode(expression), queue)
            for k in range(cell.dim):
                for partner in list(self._by_face.get((cell.dim, k, "source", face(cell, k, "target")), [])):
                    self._record(compose(cell, partner, k),
                                 ComposeNode(k, expression, self._witnesses[partner]), queue)
                for partner in list(self._by_face.get((cell.dim, k, "target", face(cell, k, "source")), [])):
                    self._record(compose(partner, cell, k),
                                 ComposeNode(k, self._witnesses[partner], expression), queue)
        logger.info(f"Atom closure of {self.structure.name or 'structure'}", reached=len(self._witnesses),
                    cells=len(self.cells))

    def witness(self, cell: CellTable) -> Optional[AtomExpression]:
        if cell.is_identity:
            base = self.witness(face(cell, cell.dim - 1, "source"))
            return IdentityNode(base) if base is not None else None
        return self._witnesses.get(cell)

    def unreached(self) -> List[CellTable]:
        return [cell for cell in self.cells if self.witness(cell) is None]


def generated_by_atoms(structure: AdditiveParityStructure, cell: CellTable,
                       closure: Optional[AtomClosure] = None) -> Optional[AtomExpression]:
    """A witness expression for the cell, or None when the closure misses it."""
    if closure is None or closure.max_dim < cell.dim:
        closure = AtomClosure(structure, cell.dim)
    return closure.witness(cell)
