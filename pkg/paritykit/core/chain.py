"""
ParityKit Chain Module
======================

Overview:
---------
The free directed chain complex generated by an additive parity structure: a
chain group per dimension with the generators as basis, the boundary
d(x) = d+x - d-x, and (for normal structures) the augmentation sending each
dimension-0 generator to 1.

Key Features:
-------------
1. from_structure / extract_basis: the two directions of the round trip between
   structures and complexes.
2. check_complex: dd = 0 through integer boundary matrices, normality,
   unitality of the basis and e.d = 0.
3. boundary_matrix / boundary_report: inspection exports.

Usage:
------
    from paritykit.core.chain import check_complex, from_structure
    from paritykit.core.families import oriental

    complex_ = from_structure(oriental(3))
    print(check_complex(complex_).boundary_squared_zero)   # True
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel

from paritykit.core.errors import (DimensionMismatchError, MissingAugmentationError, StructureError,
                                   UnknownGeneratorError)
from paritykit.core.multiset import GeneratorId, Multiset, SignedVector, is_radical, meet, parts
from paritykit.core.parity import AdditiveParityStructure, AxiomFailure
from paritykit.utils.paritykit_logging import ParityLogging

logger = ParityLogging("Chain")


class FreeDirectedComplex:
    """Basis, generator boundaries and an optional canonical augmentation."""

    def __init__(self, basis: Iterable[GeneratorId], boundaries: Mapping[GeneratorId, SignedVector],
                 augmented: bool = False, name: str = ""):
        self.name = name
        self.basis: Tuple[GeneratorId, ...] = tuple(sorted(set(basis)))
        known = frozenset(self.basis)
        self._boundaries: Dict[GeneratorId, SignedVector] = {}
        for generator in self.basis:
            if generator.dim == 0:
                if boundaries.get(generator):
                    raise StructureError(f"Dimension-0 generator {generator} cannot have a boundary")
                continue
            vector = boundaries.get(generator, SignedVector(dim=generator.dim - 1))
            for key in vector:
                if key not in known or key.dim != generator.dim - 1:
                    raise StructureError(f"Boundary of {generator} mentions {key!r}")
            self._boundaries[generator] = SignedVector(dict(vector.items()), generator.dim - 1)
        self.augmentation: Optional[Dict[GeneratorId, int]] = \
            {g: 1 for g in self.basis if g.dim == 0} if augmented else None

    @property
    def top_dim(self) -> int:
        return max((g.dim for g in self.basis), default=-1)

    def basis_of(self, dim: int) -> Tuple[GeneratorId, ...]:
        return tuple(g for g in self.basis if g.dim == dim)

    def generator_boundary(self, generator: GeneratorId) -> SignedVector:
        if generator not in self.basis:
            raise UnknownGeneratorError(f"Unknown generator {generator!r}")
        if generator.dim == 0:
            return SignedVector()
        return self._boundaries[generator]

    def augment(self, chain: Union[Multiset, SignedVector]) -> int:
        if self.augmentation is None:
            raise MissingAugmentationError(f"{self.name or 'complex'} has no augmentation")
        if chain.dim not in (None, 0):
            raise DimensionMismatchError(f"Augmentation is defined on dimension 0, not {chain.dim}")
        return sum(self.augmentation[self._known(key)] * count for key, count in chain.items())

    def _known(self, key: GeneratorId) -> GeneratorId:
        if key not in self.basis:
            raise UnknownGeneratorError(f"Unknown generator {key!r}")
        return key

    def __repr__(self):
        return f"FreeDirectedComplex({self.name or 'unnamed'}, {len(self.basis)} generators)"


def from_structure(structure: AdditiveParityStructure) -> FreeDirectedComplex:
    """The complex freely generated by a structure, augmented when the structure is normal."""
    boundaries = {generator: SignedVector.from_parts(neg, pos) for generator, (neg, pos) in structure.face_items()}
    normal = all(structure.neg(g).total() == 1 and structure.pos(g).total() == 1 for g in structure.generators_of(1))
    logger.debug(f"Built chain complex for {structure.name or 'structure'}", augmented=normal)
    return FreeDirectedComplex(structure.generators, boundaries, augmented=normal, name=structure.name)


def boundary(complex_: FreeDirectedComplex, chain: Union[SignedVector, Multiset]) -> SignedVector:
    """Linear extension of the generator boundaries."""
    if isinstance(chain, Multiset):
        chain = chain.to_vector()
    if chain.dim == 0:
        raise DimensionMismatchError("The boundary is only defined above dimension 0")
    result = SignedVector(dim=None if chain.dim is None else chain.dim - 1)
    for key, coefficient in chain.items():
        result = result + complex_.generator_boundary(key).scale(coefficient)
    return result


def boundary_matrix(complex_: FreeDirectedComplex, dim: int) -> np.ndarray:
    """Integer matrix of d from dimension dim+1 to dim, rows and columns in canonical order."""
    rows = complex_.basis_of(dim)
    columns = complex_.basis_of(dim + 1)
    index = {generator: i for i, generator in enumerate(rows)}
    # object dtype keeps exact Python integers
    matrix = np.zeros((len(rows), len(columns)), dtype=object)
    for j, column in enumerate(columns):
        for key, coefficient in complex_.generator_boundary(column).items():
            matrix[index[key], j] = coefficient
    return matrix


def boundary_report(complex_: FreeDirectedComplex) -> str:
    lines = []
    for generator in complex_.basis:
        if generator.dim > 0:
            lines.append(f"{generator} (dim {generator.dim}): {complex_.generator_boundary(generator)}")
    if complex_.augmentation is not None:
        lines.append("augmentation: every dimension-0 generator -> 1")
    return "\n".join(lines) + ("\n" if lines else "")


class ChainReport(BaseModel):
    name: str
    boundary_squared_zero: bool
    normal: bool
    augmented: bool
    augmentation_kills_boundary: Optional[bool] = None
    unital: bool
    failures: List[AxiomFailure]

    def summary_lines(self) -> List[str]:
        lines = [f"complex: {self.name or '(unnamed)'}"]
        for flag in ("boundary_squared_zero", "normal", "augmented", "unital"):
            lines.append(f"  {flag}: {'yes' if getattr(self, flag) else 'no'}")
        if self.augmentation_kills_boundary is not None:
            lines.append(f"  augmentation_kills_boundary: {'yes' if self.augmentation_kills_boundary else 'no'}")
        for failure in self.failures:
            lines.append(f"  failure [{failure.axiom}] {', '.join(failure.generators)}: {failure.explanation}")
        return lines


def iterated_parts(complex_: FreeDirectedComplex, generator: GeneratorId) -> Tuple[List[Multiset], List[Multiset]]:
    """((d-)^m x, (d+)^m x) for m = 0..dim x, by alternating boundary and parts."""
    negatives = [Multiset.subset([generator])]
    positives = [Multiset.subset([generator])]
    for _ in range(generator.dim):
        negatives.append(parts(boundary(complex_, negatives[-1]))[0])
        positives.append(parts(boundary(complex_, positives[-1]))[1])
    return negatives, positives


def check_complex(complex_: FreeDirectedComplex) -> ChainReport:
    failures: List[AxiomFailure] = []

    squared_zero = True
    for dim in range(complex_.top_dim - 1):
        product = boundary_matrix(complex_, dim).dot(boundary_matrix(complex_, dim + 1))
        for j, generator in enumerate(complex_.basis_of(dim + 2)):
            if any(entry != 0 for entry in product[:, j]):
                squared_zero = False
                failures.append(AxiomFailure(
                    axiom="boundary_squared_zero", generators=[str(generator)],
                    explanation=f"dd({generator}) = {boundary(complex_, boundary(complex_, Multiset.subset([generator])))}"))

    normal = True
    for generator in complex_.basis_of(1):
        neg, pos = parts(complex_.generator_boundary(generator))
        if neg.total() != 1 or pos.total() != 1:
            normal = False
            failures.append(AxiomFailure(axiom="normal", generators=[str(generator)],
                                         explanation=f"boundary {complex_.generator_boundary(generator)} is not a "
                                                     f"difference of two basis elements"))

    kills = None
    unital = False
    if complex_.augmentation is not None:
        kills = all(complex_.augment(complex_.generator_boundary(g)) == 0 for g in complex_.basis_of(1))
        unital = True
        for generator in complex_.basis:
            negatives, positives = iterated_parts(complex_, generator)
            values = (complex_.augment(negatives[-1]), complex_.augment(positives[-1]))
            if values != (1, 1):
                unital = False
                failures.append(AxiomFailure(axiom="unital", generators=[str(generator)],
                                             explanation=f"augmentations of the iterated boundaries are {values}"))
    else:
        failures.append(AxiomFailure(axiom="unital", generators=[], explanation="no augmentation attached"))

    report = ChainReport(name=complex_.name, boundary_squared_zero=squared_zero, normal=normal,
                         augmented=complex_.augmentation is not None, augmentation_kills_boundary=kills,
                         unital=unital, failures=failures)
    logger.info(f"Checked chain complex {complex_.name or ''}".rstrip(), dd_zero=squared_zero, unital=unital)
    return report


def is_well_formed_element(complex_: FreeDirectedComplex, chain: Multiset) -> bool:
    for key in chain:
        complex_._known(key)
    if chain.dim == 0:
        return complex_.augment(chain) == 1
    if chain.dim is None:
        return True
    if not is_radical(chain):
        return False
    faces = {key: parts(complex_.generator_boundary(key)) for key in chain}
    members = list(chain)
    for i, first in enumerate(members):
        for second in members[i + 1:]:
            if meet(faces[first][0], faces[second][0]) or meet(faces[first][1], faces[second][1]):
                return False
    return True


def extract_basis(complex_: FreeDirectedComplex) -> AdditiveParityStructure:
    """The structure whose faces are the parts of the generator boundaries."""
    faces = {generator: parts(complex_.generator_boundary(generator))
             for generator in complex_.basis if generator.dim > 0}
    structure = AdditiveParityStructure(complex_.basis, faces, name=complex_.name)
    view = structure.as_parity()
    return view if view is not None else structure


def structures_isomorphic(first: AdditiveParityStructure, second: AdditiveParityStructure,
                          mapping: Optional[Mapping[GeneratorId, GeneratorId]] = None) -> bool:
    """Whether mapping (the identity by default) is a dimension- and face-preserving bijection."""
    if mapping is None:
        mapping = {generator: generator for generator in first.generators}
    if set(mapping) != set(first.generators) or sorted(mapping.values()) != list(second.generators):
        return False
    if len(set(mapping.values())) != len(mapping):
        return False

    def image(multiset: Multiset, dim: int) -> Multiset:
        return Multiset({mapping[key]: count for key, count in multiset.items()}, dim)

    for generator, target in mapping.items():
        if generator.dim != target.dim:
            return False
        if generator.dim == 0:
            continue
        neg, pos = first.faces(generator)
        if (image(neg, generator.dim - 1), image(pos, generator.dim - 1)) != second.faces(target):
            return False
    return True
