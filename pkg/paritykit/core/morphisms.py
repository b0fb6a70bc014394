"""
ParityKit Morphisms Module
==========================

Overview:
---------
Morphisms between structures are dimension-preserving assignments of generators
to finite multisets (additive mode) or finite subsets (weak-parity mode) of
target generators, subject to movement: the image of x must move the image of
its negative face to the image of its positive face.

Key Features:
-------------
1. GradedMorphism with homomorphic (count-weighted) and union extensions.
2. validate_morphism in additive and weak-parity mode; check_strict_movement as
   an independent oracle for the stronger movement that valid morphisms satisfy.
3. compose_morphisms, identity_morphism, restrict_to_skeleton, apply_to_cell.
4. ChainMap, induced_chain_map and morphism_from_chain_map for the round trip
   through chain complexes.

Usage:
------
    from paritykit.core.morphisms import GradedMorphism, MorphismMode, validate_morphism

    f = GradedMorphism.from_names(globe(1), oriental(2), {"e0-": ["0"], "e0+": ["2"], "top": ["01", "12"]})
    print(validate_morphism(f, MorphismMode.WEAK_PARITY).valid)
"""

from __future__ import annotations

from enum import Enum
from typing import Dict, Iterable, List, Mapping

from pydantic import BaseModel

from paritykit.core.cells import CellMode, CellTable, validate_cell
from paritykit.core.chain import FreeDirectedComplex, boundary, from_structure
from paritykit.core.errors import (InternalConsistencyError, InvalidCellError, InvalidMorphismError,
                                   MorphismModeError, NotComposableError, UnknownGeneratorError)
from paritykit.core.multiset import GeneratorId, Multiset, SignedVector, disjoint_union, is_radical, join, parts
from paritykit.core.parity import (AdditiveParityStructure, AxiomFailure, Classification, MoveMode,
                                   is_well_formed, moves, skeleton, validate)
from paritykit.utils.paritykit_logging import ParityLogging
from paritykit.utils.utilities import join_names

logger = ParityLogging("Morphisms")


class MorphismMode(str, Enum):
    ADDITIVE = "additive"
    WEAK_PARITY = "weak_parity"


class GradedMorphism:
    """A total, dimension-preserving assignment from source generators to target multisets."""

    def __init__(self, source: AdditiveParityStructure, target: AdditiveParityStructure,
                 assignment: Mapping[GeneratorId, Multiset]):
        self.source = source
        self.target = target
        missing = [g for g in source.generators if g not in assignment]
        if missing:
            raise InvalidMorphismError(f"No image given for {join_names(missing)}")
        self.assignment: Dict[GeneratorId, Multiset] = {}
        for generator, image in assignment.items():
            source.require(generator)
            for key in image:
                if key not in target:
                    raise UnknownGeneratorError(f"Image of {generator} mentions unknown generator {key!r}")
                if key.dim != generator.dim:
                    raise InvalidMorphismError(f"Image of {generator} is not in dimension {generator.dim}")
            self.assignment[generator] = Multiset(dict(image.items()), generator.dim)
        self.reports: Dict[MorphismMode, "MorphismReport"] = {}

    @classmethod
    def from_names(cls, source: AdditiveParityStructure, target: AdditiveParityStructure,
                   assignment: Mapping[str, Iterable]) -> "GradedMorphism":
        """Build from {name: [names or (name, count) pairs]}."""
        resolved = {}
        for name, entries in assignment.items():
            generator = source.generator(name)
            counts: Dict[GeneratorId, int] = {}
            for entry in entries:
                key_name, count = (entry, 1) if isinstance(entry, str) else entry
                key = target.generator(key_name, generator.dim)
                counts[key] = counts.get(key, 0) + count
            resolved[generator] = Multiset(counts, generator.dim)
        return cls(source, target, resolved)

    def __call__(self, generator: GeneratorId) -> Multiset:
        if generator not in self.assignment:
            raise UnknownGeneratorError(f"{generator!r} is not a source generator")
        return self.assignment[generator]

    def image(self, chain: Multiset) -> Multiset:
        """Homomorphic extension: count-weighted disjoint union of images."""
        result = Multiset.empty(chain.dim)
        for key, count in chain.items():
            for _ in range(count):
                result = disjoint_union(result, self(key))
        return result

    def union_image(self, subset: Multiset) -> Multiset:
        result = Multiset.empty(subset.dim)
        for key in subset:
            result = join(result, self(key))
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedMorphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.assignment == other.assignment

    def __repr__(self):
        return f"GradedMorphism({self.source.name or 'source'} -> {self.target.name or 'target'})"


class MorphismReport(BaseModel):
    valid: bool
    mode: MorphismMode
    normal: bool
    failures: List[AxiomFailure]

    def summary_lines(self) -> List[str]:
        lines = [f"morphism ({self.mode.value}): {'valid' if self.valid else 'invalid'}",
                 f"  normal: {'yes' if self.normal else 'no'}"]
        for failure in self.failures:
            lines.append(f"  failure [{failure.axiom}] {', '.join(failure.generators)}: {failure.explanation}")
        return lines


def _require_level(structure: AdditiveParityStructure, mode: MorphismMode):
    report = validate(structure)
    required = Classification.WEAK_PARITY_COMPLEX if mode is MorphismMode.WEAK_PARITY \
        else Classification.ADDITIVE_PARITY_COMPLEX
    if not report.classification.meets(required):
        raise MorphismModeError(f"{structure.name or 'structure'} is a {report.classification.value}; "
                                f"{mode.value} morphisms need a {required.value}")


def validate_morphism(morphism: GradedMorphism, mode: MorphismMode = MorphismMode.ADDITIVE) -> MorphismReport:
    mode = MorphismMode(mode)
    _require_level(morphism.source, mode)
    _require_level(morphism.target, mode)
    failures: List[AxiomFailure] = []
    target = morphism.target

    for generator in morphism.source.generators:
        image = morphism(generator)
        if mode is MorphismMode.WEAK_PARITY:
            if not is_radical(image):
                failures.append(AxiomFailure(axiom="subset", generators=[str(generator)],
                                             explanation=f"image {image} is not a subset"))
                continue
            if not is_well_formed(target.as_parity(), image, generator.dim):
                failures.append(AxiomFailure(axiom="well_formed", generators=[str(generator)],
                                             explanation=f"image {image} is not well-formed"))
                continue
        if generator.dim == 0:
            continue
        neg, pos = morphism.source.faces(generator)
        if mode is MorphismMode.WEAK_PARITY:
            image_neg, image_pos = morphism.union_image(neg), morphism.union_image(pos)
            moved = moves(target, image, image_neg, image_pos, MoveMode.SUBSET)
        else:
            image_neg, image_pos = morphism.image(neg), morphism.image(pos)
            moved = moves(target, image, image_neg, image_pos, MoveMode.ADDITIVE)
        if not moved:
            failures.append(AxiomFailure(axiom="movement", generators=[str(generator)],
                                         explanation=f"{image} does not move {image_neg} to {image_pos}"))

    normal = all(morphism(v).total() == 1 for v in morphism.source.generators_of(0))
    report = MorphismReport(valid=not failures, mode=mode, normal=normal, failures=failures)
    logger.info(f"Validated {morphism!r}", mode=mode.value, valid=report.valid)
    return report


def check_strict_movement(morphism: GradedMorphism) -> bool:
    """Movement with M disjoint from S+ and P disjoint from S-, for every generator."""
    if not validate_morphism(morphism, MorphismMode.WEAK_PARITY).valid:
        raise InvalidMorphismError(f"{morphism!r} is not a valid weak-parity morphism")
    for generator in morphism.source.generators:
        if generator.dim == 0:
            continue
        neg, pos = morphism.source.faces(generator)
        if not moves(morphism.target, morphism(generator), morphism.union_image(neg), morphism.union_image(pos),
                     MoveMode.STRICT):
            logger.warning(f"Strict movement fails at {generator}", morphism=repr(morphism))
            return False
    return True


def compose_morphisms(first: GradedMorphism, second: GradedMorphism,
                      mode: MorphismMode = MorphismMode.ADDITIVE) -> GradedMorphism:
    """second after first. In weak-parity mode images are unions, which must be disjoint."""
    mode = MorphismMode(mode)
    if first.target != second.source:
        raise NotComposableError(f"Target of {first!r} is not the source of {second!r}")
    assignment = {}
    for generator in first.source.generators:
        total = second.image(first(generator))
        if mode is MorphismMode.WEAK_PARITY:
            union = second.union_image(first(generator))
            if union != total:
                raise InternalConsistencyError(f"Images of {first(generator)} overlap under {second!r}")
            total = union
        assignment[generator] = total
    return GradedMorphism(first.source, second.target, assignment)


def identity_morphism(structure: AdditiveParityStructure) -> GradedMorphism:
    return GradedMorphism(structure, structure, {g: Multiset.subset([g]) for g in structure.generators})


def restrict_to_skeleton(morphism: GradedMorphism, dim: int) -> GradedMorphism:
    return GradedMorphism(skeleton(morphism.source, dim), skeleton(morphism.target, dim),
                          {g: image for g, image in morphism.assignment.items() if g.dim <= dim})


def _checked(morphism: GradedMorphism, mode: MorphismMode) -> MorphismReport:
    mode = MorphismMode(mode)
    if mode not in morphism.reports:
        morphism.reports[mode] = validate_morphism(morphism, mode)
    report = morphism.reports[mode]
    if not report.valid:
        raise InvalidMorphismError(f"{morphism!r} is not a valid {mode.value} morphism")
    return report


def apply_to_cell(morphism: GradedMorphism, cell: CellTable,
                  mode: MorphismMode = MorphismMode.WEAK_PARITY) -> CellTable:
    """Columnwise homomorphic image of a cell of the source; the result is a cell of the target."""
    report = _checked(morphism, mode)
    check = validate_cell(morphism.source, cell, CellMode.NU)
    if not check.valid:
        raise InvalidCellError(f"{cell} is not a cell of {morphism.source.name or 'the source'}: {check.reason}")
    image = CellTable(tuple(morphism.image(column) for column in cell.neg),
                      tuple(morphism.image(column) for column in cell.pos))
    check = validate_cell(morphism.target, image, CellMode.NU if report.normal else CellMode.RHO)
    if not check.valid:
        raise InternalConsistencyError(f"Image {image} of {cell} is not a cell: {check.reason}")
    return image


class ChainMap:
    """A degree-0 linear map between free directed complexes, given on generators."""

    def __init__(self, source: FreeDirectedComplex, target: FreeDirectedComplex,
                 images: Mapping[GeneratorId, SignedVector]):
        self.source = source
        self.target = target
        self.images = {g: images.get(g, SignedVector(dim=g.dim)) for g in source.basis}

    def apply(self, chain: SignedVector) -> SignedVector:
        result = SignedVector(dim=chain.dim)
        for key, coefficient in chain.items():
            if key not in self.images:
                raise UnknownGeneratorError(f"{key!r} is not a source generator")
            result = result + self.images[key].scale(coefficient)
        return result

    def non_commuting(self) -> List[GeneratorId]:
        """Generators x with d f(x) != f(d x)."""
        return [g for g in self.source.basis if g.dim > 0 and
                boundary(self.target, self.images[g]) != self.apply(self.source.generator_boundary(g))]

    def commutes(self) -> bool:
        return not self.non_commuting()

    def preserves_augmentation(self) -> bool:
        if self.source.augmentation is None or self.target.augmentation is None:
            return False
        return all(self.target.augment(self.images[v]) == 1 for v in self.source.basis_of(0))

    def compose(self, after: "ChainMap") -> "ChainMap":
        """after . self"""
        return ChainMap(self.source, after.target, {g: after.apply(image) for g, image in self.images.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainMap):
            return NotImplemented
        return self.images == other.images


def induced_chain_map(morphism: GradedMorphism) -> ChainMap:
    if not validate_morphism(morphism, MorphismMode.ADDITIVE).valid:
        raise InvalidMorphismError(f"{morphism!r} is not a valid additive morphism")
    return ChainMap(from_structure(morphism.source), from_structure(morphism.target),
                    {g: image.to_vector() for g, image in morphism.assignment.items()})


def morphism_from_chain_map(chain_map: ChainMap, source: AdditiveParityStructure,
                            target: AdditiveParityStructure) -> GradedMorphism:
    """Read a morphism off a chain map whose generator images are positive."""
    assignment = {}
    for generator, image in chain_map.images.items():
        negative, positive = parts(image)
        if negative:
            raise InvalidMorphismError(f"Image of {generator} has negative part {negative}")
        assignment[generator] = positive
    return GradedMorphism(source, target, assignment)
