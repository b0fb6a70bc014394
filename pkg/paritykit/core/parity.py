"""
ParityKit Parity Core Module
============================

Overview:
---------
Parity structures and additive parity structures, together with validators for
every axiom: disjointness of faces, globularity, well-formedness, unitality
through the mu/pi recursion, normality, movement, and three loop-freeness
conditions (weak, Steiner, strong) that come with order or cycle witnesses.

An additive parity structure gives every generator of dimension n+1 a disjoint
pair of finite multisets of dimension-n generators. A parity structure is the
special case where both faces are subsets; it is modelled as a subclass, so
everything defined for additive structures applies to it unchanged.

Key Features:
-------------
1. face_images / subset_faces: the homomorphic and union-based face operators.
2. is_well_formed, mu_pi, atom_column: the building blocks of atoms.
3. moves: movement in additive, subset and strict (Verity) form.
4. validate: a ValidationReport with flags, witnesses, failures and a classification.
5. skeleton: truncation to a given dimension.

Usage:
------
    from paritykit.core.families import oriental
    from paritykit.core.parity import validate

    report = validate(oriental(2))
    print(report.classification)   # Classification.PARITY_COMPLEX
"""

from __future__ import annotations

from enum import Enum
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from pydantic import BaseModel

from paritykit.core.errors import (DimensionMismatchError, NotWellFormedError, StructureError,
                                   UnknownGeneratorError)
from paritykit.core.multiset import (GeneratorId, Multiset, SignedVector, difference, disjoint_union,
                                     is_radical, join, meet)
from paritykit.core.orders import LoopWitness, RelationGraph
from paritykit.utils.paritykit_logging import ParityLogging

logger = ParityLogging("ParityCore")

Faces = Tuple[Multiset, Multiset]
FaceSpec = Iterable[Union[str, Tuple[str, int]]]


class AdditiveParityStructure:
    """A graded set with a disjoint pair of finite face multisets on each positive-dimensional generator."""

    kind = "additive_parity_structure"

    def __init__(self, generators: Iterable[GeneratorId], faces: Mapping[GeneratorId, Faces] = None, name: str = ""):
        self.name = name
        self._generators: Tuple[GeneratorId, ...] = tuple(sorted(set(generators)))
        known = frozenset(self._generators)
        self._known = known
        self._by_dim: Dict[int, Tuple[GeneratorId, ...]] = {}
        for generator in self._generators:
            self._by_dim.setdefault(generator.dim, ())
            self._by_dim[generator.dim] += (generator,)

        faces = dict(faces or {})
        for generator in faces:
            if generator not in known:
                raise StructureError(f"Face data given for unknown generator {generator!r}")

        self._faces: Dict[GeneratorId, Faces] = {}
        for generator in self._generators:
            if generator.dim == 0:
                neg, pos = faces.get(generator, (Multiset.empty(), Multiset.empty()))
                if neg or pos:
                    raise StructureError(f"Dimension-0 generator {generator} cannot have faces")
                continue
            neg, pos = faces.get(generator, (Multiset.empty(), Multiset.empty()))
            for face in (neg, pos):
                for key in face:
                    if key not in known:
                        raise StructureError(f"Face {key!r} of {generator} is not a generator")
                    if key.dim != generator.dim - 1:
                        raise StructureError(f"Face {key!r} of {generator} is not one dimension below")
            self._faces[generator] = (Multiset(dict(neg.items()), generator.dim - 1),
                                      Multiset(dict(pos.items()), generator.dim - 1))
        self._atom_cache: Dict[GeneratorId, Tuple[Tuple[Multiset, ...], Tuple[Multiset, ...]]] = {}

    @classmethod
    def from_elements(cls, elements: Iterable[Tuple[str, int, FaceSpec, FaceSpec]], name: str = ""):
        """Build from (id, dim, neg, pos) rows; faces list names or [name, count] pairs."""
        rows = list(elements)
        generators = [GeneratorId(ident, dim) for ident, dim, _, _ in rows]
        faces = {}
        for (ident, dim, neg, pos), generator in zip(rows, generators):
            if dim == 0:
                if neg or pos:
                    raise StructureError(f"Dimension-0 generator {ident!r} cannot have faces")
                continue
            faces[generator] = (_face_multiset(neg, dim - 1), _face_multiset(pos, dim - 1))
        return cls(generators, faces, name=name)

    # Graded set access

    @property
    def generators(self) -> Tuple[GeneratorId, ...]:
        return self._generators

    @property
    def top_dim(self) -> int:
        """Largest dimension present, -1 for the empty structure."""
        return max(self._by_dim) if self._by_dim else -1

    def generators_of(self, dim: int) -> Tuple[GeneratorId, ...]:
        return self._by_dim.get(dim, ())

    def __contains__(self, generator: object) -> bool:
        return generator in self._known

    def __len__(self) -> int:
        return len(self._generators)

    def generator(self, name: str, dim: Optional[int] = None) -> GeneratorId:
        """Look a generator up by name (and dimension when names repeat across dimensions)."""
        matches = [g for g in self._generators if g.name == name and (dim is None or g.dim == dim)]
        if not matches:
            raise UnknownGeneratorError(f"No generator named {name!r}" + (f" in dimension {dim}" if dim is not None else ""))
        if len(matches) > 1:
            raise UnknownGeneratorError(f"Generator name {name!r} is ambiguous; give its dimension")
        return matches[0]

    def require(self, generator: GeneratorId) -> GeneratorId:
        if generator not in self:
            raise UnknownGeneratorError(f"Unknown generator {generator!r}")
        return generator

    def faces(self, generator: GeneratorId) -> Faces:
        self.require(generator)
        if generator.dim == 0:
            return Multiset.empty(), Multiset.empty()
        return self._faces[generator]

    def neg(self, generator: GeneratorId) -> Multiset:
        return self.faces(generator)[0]

    def pos(self, generator: GeneratorId) -> Multiset:
        return self.faces(generator)[1]

    def face_items(self) -> Iterator[Tuple[GeneratorId, Faces]]:
        return iter(self._faces.items())

    # Views and chain-level helpers

    def as_parity(self) -> Optional["ParityStructure"]:
        """The parity-structure view, or None when some face count is at least 2."""
        if all(is_radical(neg) and is_radical(pos) for neg, pos in self._faces.values()):
            return ParityStructure(self._generators, self._faces, name=self.name)
        return None

    def boundary(self, chain: Multiset) -> SignedVector:
        images = face_images(self, chain)
        return SignedVector.from_parts(images.phi_minus, images.phi_plus)

    def atom_columns(self, generator: GeneratorId) -> Tuple[Tuple[Multiset, ...], Tuple[Multiset, ...]]:
        """Columns of the atom by iterated face images, indexed by dimension."""
        if generator not in self._atom_cache:
            self.require(generator)
            neg_cols = [Multiset.subset([generator])]
            pos_cols = [Multiset.subset([generator])]
            for _ in range(generator.dim):
                neg_cols.append(face_images(self, neg_cols[-1]).minus)
                pos_cols.append(face_images(self, pos_cols[-1]).plus)
            self._atom_cache[generator] = (tuple(reversed(neg_cols)), tuple(reversed(pos_cols)))
        return self._atom_cache[generator]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdditiveParityStructure):
            return NotImplemented
        return self._generators == other._generators and self._faces == other._faces

    def __hash__(self) -> int:
        return hash((self._generators, tuple(self._faces.items())))

    def __repr__(self):
        counts = ", ".join(str(len(self.generators_of(n))) for n in range(self.top_dim + 1))
        return f"{type(self).__name__}({self.name or 'unnamed'}: [{counts}])"


class ParityStructure(AdditiveParityStructure):
    """A graded set with a pair of finite face subsets on each positive-dimensional generator."""

    kind = "parity_structure"

    def __init__(self, generators: Iterable[GeneratorId], faces: Mapping[GeneratorId, Faces] = None, name: str = ""):
        super().__init__(generators, faces, name)
        for generator, (neg, pos) in self._faces.items():
            if not (is_radical(neg) and is_radical(pos)):
                raise StructureError(f"Faces of {generator} are not subsets")

    def as_parity(self) -> "ParityStructure":
        return self


def _face_multiset(entries: FaceSpec, dim: int) -> Multiset:
    counts: Dict[GeneratorId, int] = {}
    for entry in entries:
        if isinstance(entry, str):
            name, count = entry, 1
        else:
            name, count = entry
        key = GeneratorId(name, dim)
        counts[key] = counts.get(key, 0) + count
    return Multiset(counts, dim)


# Face operators

class FaceImages(NamedTuple):
    phi_minus: Multiset
    phi_plus: Multiset
    minus: Multiset
    plus: Multiset


class SubsetFaces(NamedTuple):
    minus: Multiset
    plus: Multiset
    minus_only: Multiset
    plus_only: Multiset


def _check_chain(structure: AdditiveParityStructure, chain: Multiset) -> Optional[int]:
    for key in chain:
        structure.require(key)
    if chain.dim == 0:
        raise DimensionMismatchError("Face images are only defined above dimension 0")
    return None if chain.dim is None else chain.dim - 1


def face_images(structure: AdditiveParityStructure, chain: Multiset) -> FaceImages:
    """Phi-/Phi+ as count-weighted face sums, and the reduced boundaries d-(S), d+(S)."""
    dim = _check_chain(structure, chain)
    phi_minus = Multiset.empty(dim)
    phi_plus = Multiset.empty(dim)
    for key, count in chain.items():
        neg, pos = structure.faces(key)
        for _ in range(count):
            phi_minus = disjoint_union(phi_minus, neg)
            phi_plus = disjoint_union(phi_plus, pos)
    return FaceImages(phi_minus, phi_plus, difference(phi_minus, phi_plus), difference(phi_plus, phi_minus))


def _as_subset(subset: Union[Multiset, Iterable[GeneratorId]]) -> Multiset:
    if isinstance(subset, Multiset):
        if not is_radical(subset):
            raise ValueError(f"{subset} is a multiset, not a subset")
        return subset
    return Multiset.subset(subset)


def subset_faces(structure: ParityStructure, subset: Union[Multiset, Iterable[GeneratorId]]) -> SubsetFaces:
    """S-, S+ as unions of faces, and S-+ = S- minus S+, S+- = S+ minus S-."""
    subset = _as_subset(subset)
    dim = _check_chain(structure, subset)
    minus = Multiset.empty(dim)
    plus = Multiset.empty(dim)
    for key in subset:
        neg, pos = structure.faces(key)
        minus = join(minus, neg)
        plus = join(plus, pos)
    return SubsetFaces(minus, plus, difference(minus, plus), difference(plus, minus))


def faces_pairwise_disjoint(structure: AdditiveParityStructure, chain: Multiset) -> bool:
    members = list(chain)
    for first, second in combinations(members, 2):
        first_neg, first_pos = structure.faces(first)
        second_neg, second_pos = structure.faces(second)
        if meet(first_neg, second_neg) or meet(first_pos, second_pos):
            return False
    return True


def is_well_formed(structure: AdditiveParityStructure, subset: Union[Multiset, Iterable[GeneratorId]],
                   dim: Optional[int] = None) -> bool:
    """Singleton in dimension 0; pairwise disjoint negative and positive faces above."""
    subset = _as_subset(subset)
    for key in subset:
        structure.require(key)
    dim = subset.dim if subset.dim is not None else dim
    if dim is None:
        raise DimensionMismatchError("The dimension of an empty subset must be given")
    if dim == 0:
        return len(subset) == 1
    return faces_pairwise_disjoint(structure, subset)


def well_formed_subsets(structure: AdditiveParityStructure, dim: int) -> Iterator[Multiset]:
    """All well-formed subsets of one dimension, by backtracking over disjoint faces."""
    members = structure.generators_of(dim)
    if dim == 0:
        for member in members:
            yield Multiset.subset([member])
        return

    def extend(start: int, chosen: List[GeneratorId], used_neg: set, used_pos: set):
        yield Multiset.subset(chosen, dim)
        for index in range(start, len(members)):
            member = members[index]
            neg, pos = structure.faces(member)
            if used_neg.intersection(neg) or used_pos.intersection(pos):
                continue
            chosen.append(member)
            yield from extend(index + 1, chosen, used_neg.union(neg), used_pos.union(pos))
            chosen.pop()

    yield from extend(0, [], set(), set())


def mu_pi(structure: ParityStructure, generator: GeneratorId) -> Tuple[Tuple[Multiset, ...], Tuple[Multiset, ...]]:
    """mu(x)_k and pi(x)_k for k = 0..dim(x), by the downward -+/+- recursion."""
    structure.require(generator)
    mu = [Multiset.subset([generator])]
    pi = [Multiset.subset([generator])]
    for _ in range(generator.dim):
        mu.append(subset_faces(structure, mu[-1]).minus_only)
        pi.append(subset_faces(structure, pi[-1]).plus_only)
    return tuple(reversed(mu)), tuple(reversed(pi))


def atom_column(structure: AdditiveParityStructure, generator: GeneratorId, dim: int, sign: str) -> Multiset:
    """The column <x>_dim of sign '-' or '+': iterated reduced boundaries, {x} at dim(x), empty above."""
    if dim > generator.dim:
        return Multiset.empty(dim)
    neg_cols, pos_cols = structure.atom_columns(generator)
    return neg_cols[dim] if sign == "-" else pos_cols[dim]


# Movement

class MoveMode(str, Enum):
    ADDITIVE = "additive"
    SUBSET = "subset"
    STRICT = "strict"


def _parity_view(structure: AdditiveParityStructure) -> ParityStructure:
    view = structure.as_parity()
    if view is None:
        raise NotWellFormedError("Subset movement needs a parity structure (some face count is at least 2)")
    return view


def moves(structure: AdditiveParityStructure, chain: Multiset, source: Multiset, target: Multiset,
          mode: MoveMode = MoveMode.ADDITIVE) -> bool:
    """Whether chain moves source to target."""
    mode = MoveMode(mode)
    lower = source._with_dim(target)
    if chain.dim is not None and lower is not None and chain.dim != lower + 1:
        raise DimensionMismatchError(f"A chain of dimension {chain.dim} cannot move chains of dimension {lower}")

    if mode is MoveMode.ADDITIVE:
        images = face_images(structure, chain)
        return images.minus == difference(source, target) and images.plus == difference(target, source)

    view = _parity_view(structure)
    chain_dim = chain.dim if chain.dim is not None else (None if lower is None else lower + 1)
    if chain_dim is not None and not is_well_formed(view, chain, chain_dim):
        raise NotWellFormedError(f"{chain} is not well-formed")
    faces = subset_faces(view, chain)
    if faces.minus_only != difference(source, target) or faces.plus_only != difference(target, source):
        return False
    if mode is MoveMode.STRICT:
        return not meet(source, faces.plus) and not meet(target, faces.minus)
    return True


# Validation

class Classification(str, Enum):
    STRUCTURE = "parity structure only"
    ADDITIVE_PARITY_COMPLEX = "additive parity complex"
    WEAK_PARITY_COMPLEX = "weak parity complex"
    PARITY_COMPLEX = "parity complex"

    @property
    def rank(self) -> int:
        return list(Classification).index(self)

    def meets(self, required: "Classification") -> bool:
        return self.rank >= required.rank


REQUIREMENTS = {
    "apc": Classification.ADDITIVE_PARITY_COMPLEX,
    "wpc": Classification.WEAK_PARITY_COMPLEX,
    "pc": Classification.PARITY_COMPLEX,
}


class AxiomFailure(BaseModel):
    axiom: str
    generators: List[str]
    explanation: str


class ValidationReport(BaseModel):
    name: str
    kind: str
    generator_count: int
    top_dim: int
    disjoint: bool
    globular: bool
    unital: bool
    normal: bool
    weakly_loop_free: bool
    steiner_loop_free: bool
    strongly_loop_free: bool
    additive_globular: bool
    globularity_agrees: Optional[bool] = None
    parity_view: bool
    witnesses: Dict[str, List[LoopWitness]]
    failures: List[AxiomFailure]
    classification: Classification

    def meets(self, requirement: str) -> bool:
        return self.classification.meets(REQUIREMENTS[requirement])

    def summary_lines(self) -> List[str]:
        lines = [f"structure: {self.name or '(unnamed)'} ({self.kind}, {self.generator_count} generators, "
                 f"top dimension {self.top_dim})"]
        for flag in ("disjoint", "globular", "unital", "normal", "weakly_loop_free", "steiner_loop_free",
                     "strongly_loop_free"):
            lines.append(f"  {flag}: {'yes' if getattr(self, flag) else 'no'}")
        if self.globularity_agrees is not None:
            lines.append(f"  globularity agrees with the multiset form: {'yes' if self.globularity_agrees else 'no'}")
        for flag, witnesses in self.witnesses.items():
            for witness in witnesses:
                if not witness.acyclic:
                    lines.append(f"  {flag} witness, {witness.describe()}")
        for failure in self.failures:
            lines.append(f"  failure [{failure.axiom}] {', '.join(failure.generators)}: {failure.explanation}")
        lines.append(f"classification: {self.classification.value}")
        return lines


def _names(generators: Iterable[GeneratorId]) -> List[str]:
    return [str(generator) for generator in generators]


def _check_disjoint(structure, failures) -> bool:
    ok = True
    for generator, (neg, pos) in structure.face_items():
        if meet(neg, pos):
            ok = False
            failures.append(AxiomFailure(axiom="disjoint", generators=[str(generator)],
                                         explanation=f"negative and positive faces share {meet(neg, pos)}"))
    return ok


def _check_additive_globular(structure, failures, record: bool) -> bool:
    ok = True
    for generator, (neg, pos) in structure.face_items():
        if generator.dim < 2:
            continue
        from_neg = face_images(structure, neg)
        from_pos = face_images(structure, pos)
        if from_neg.minus != from_pos.minus or from_neg.plus != from_pos.plus:
            ok = False
            if record:
                failures.append(AxiomFailure(
                    axiom="globular", generators=[str(generator)],
                    explanation=f"d-d- = {from_neg.minus}, d-d+ = {from_pos.minus}, "
                                f"d+d- = {from_neg.plus}, d+d+ = {from_pos.plus}"))
    return ok


def _faces_well_formed(structure: AdditiveParityStructure) -> bool:
    return all(is_well_formed(structure, neg, generator.dim - 1) and is_well_formed(structure, pos, generator.dim - 1)
               for generator, (neg, pos) in structure.face_items())


def _check_subset_globular(structure: ParityStructure, failures) -> bool:
    ok = True
    for generator, (neg, pos) in structure.face_items():
        if generator.dim < 2:
            continue
        from_neg = subset_faces(structure, neg)
        from_pos = subset_faces(structure, pos)
        if from_neg.minus_only != from_pos.minus_only or from_neg.plus_only != from_pos.plus_only:
            ok = False
            failures.append(AxiomFailure(
                axiom="globular", generators=[str(generator)],
                explanation=f"x-(-+) = {from_neg.minus_only}, x+(-+) = {from_pos.minus_only}, "
                            f"x-(+-) = {from_neg.plus_only}, x+(+-) = {from_pos.plus_only}"))
    return ok


def _check_normal(structure, failures) -> bool:
    ok = True
    for generator in structure.generators_of(1):
        neg, pos = structure.faces(generator)
        if neg.total() != 1 or pos.total() != 1:
            ok = False
            failures.append(AxiomFailure(axiom="normal", generators=[str(generator)],
                                         explanation=f"faces {neg} and {pos} are not both singletons"))
    return ok


def _check_unital_subsets(structure: ParityStructure, failures) -> bool:
    ok = True
    for generator in structure.generators:
        mu, pi = mu_pi(structure, generator)
        for k in range(generator.dim + 1):
            for label, column in (("mu", mu[k]), ("pi", pi[k])):
                if not is_well_formed(structure, column, k):
                    ok = False
                    failures.append(AxiomFailure(axiom="unital", generators=[str(generator)],
                                                 explanation=f"{label}({generator})_{k} = {column} is not well-formed"))
    return ok


def _check_unital_chains(structure, normal: bool, failures) -> bool:
    if not normal:
        failures.append(AxiomFailure(axiom="unital", generators=[],
                                     explanation="no canonical augmentation: the structure is not normal"))
        return False
    ok = True
    for generator in structure.generators:
        for sign in "-+":
            column = atom_column(structure, generator, 0, sign)
            if column.total() != 1:
                ok = False
                failures.append(AxiomFailure(axiom="unital", generators=[str(generator)],
                                             explanation=f"iterated d{sign} reaches {column}, augmentation {column.total()}"))
    return ok


def weak_relations(structure: AdditiveParityStructure) -> List[RelationGraph]:
    """One digraph per dimension n >= 1: x -> y whenever d+x meets d-y."""
    graphs = []
    for dim in range(1, structure.top_dim + 1):
        members = structure.generators_of(dim)
        relation = RelationGraph(f"dimension {dim}", members)
        consumers: Dict[GeneratorId, List[GeneratorId]] = {}
        for member in members:
            for face in structure.neg(member):
                consumers.setdefault(face, []).append(member)
        for member in members:
            for face in structure.pos(member):
                for consumer in consumers.get(face, []):
                    relation.relate(member, consumer)
        graphs.append(relation)
    return graphs


def steiner_relations(structure: AdditiveParityStructure) -> List[RelationGraph]:
    """One digraph on all generators per level n: x -> y whenever <x>_n+ meets <y>_n-.

    Generators of dimension n + 1 are also related through their raw faces, so a
    face shared by both sides of one generator still counts at level n.
    """
    weak = {graph.scope: graph for graph in weak_relations(structure)}
    graphs = []
    for level in range(structure.top_dim + 1):
        relation = RelationGraph(f"level {level}", structure.generators)
        above = [g for g in structure.generators if g.dim >= level]
        consumers: Dict[GeneratorId, List[GeneratorId]] = {}
        for member in above:
            for face in atom_column(structure, member, level, "-"):
                consumers.setdefault(face, []).append(member)
        for member in above:
            for face in atom_column(structure, member, level, "+"):
                for consumer in consumers.get(face, []):
                    relation.relate(member, consumer)
        if f"dimension {level + 1}" in weak:
            for smaller, larger in weak[f"dimension {level + 1}"].edges():
                relation.relate(smaller, larger)
        graphs.append(relation)
    return graphs


def strong_relation(structure: AdditiveParityStructure) -> RelationGraph:
    """A single digraph: z -> y for z in y-, and x -> z for z in x+."""
    relation = RelationGraph("all generators", structure.generators)
    for generator, (neg, pos) in structure.face_items():
        for face in neg:
            relation.relate(face, generator)
        for face in pos:
            relation.relate(generator, face)
    return relation


def _loop_flag(graphs: Sequence[RelationGraph], flag: str, failures) -> Tuple[bool, List[LoopWitness]]:
    witnesses = [graph.witness() for graph in graphs]
    for witness in witnesses:
        if not witness.acyclic:
            failures.append(AxiomFailure(axiom=flag, generators=witness.cycle,
                                         explanation=f"directed cycle at {witness.scope}"))
    return all(witness.acyclic for witness in witnesses), witnesses


def validate(structure: AdditiveParityStructure) -> ValidationReport:
    """Compute every axiom flag; problems become report entries, never exceptions."""
    failures: List[AxiomFailure] = []
    is_parity = isinstance(structure, ParityStructure)

    disjoint = _check_disjoint(structure, failures)
    normal = _check_normal(structure, failures)
    additive_globular = _check_additive_globular(structure, failures, record=not is_parity)

    agrees = None
    if is_parity:
        globular = _check_subset_globular(structure, failures)
        if _faces_well_formed(structure):
            agrees = globular == (additive_globular and normal)
        unital = _check_unital_subsets(structure, failures)
    else:
        globular = additive_globular
        unital = _check_unital_chains(structure, normal, failures)

    weakly, weak_witnesses = _loop_flag(weak_relations(structure), "weakly_loop_free", failures)
    steiner, steiner_witnesses = _loop_flag(steiner_relations(structure), "steiner_loop_free", failures)
    strongly, strong_witnesses = _loop_flag([strong_relation(structure)], "strongly_loop_free", failures)

    view = structure.as_parity()
    classification = Classification.STRUCTURE
    if disjoint and additive_globular:
        classification = Classification.ADDITIVE_PARITY_COMPLEX
        if is_parity and globular and unital and weakly:
            classification = Classification.PARITY_COMPLEX if strongly else Classification.WEAK_PARITY_COMPLEX
        elif not is_parity and view is not None:
            view_class = validate(view).classification
            if view_class.meets(Classification.WEAK_PARITY_COMPLEX):
                classification = view_class
    if view is None:
        failures.append(AxiomFailure(axiom="parity_view", generators=[],
                                     explanation="some face count is at least 2; no parity-structure view"))

    report = ValidationReport(
        name=structure.name, kind=structure.kind, generator_count=len(structure), top_dim=structure.top_dim,
        disjoint=disjoint, globular=globular, unital=unital, normal=normal,
        weakly_loop_free=weakly, steiner_loop_free=steiner, strongly_loop_free=strongly,
        additive_globular=additive_globular, globularity_agrees=agrees, parity_view=view is not None,
        witnesses={"weakly_loop_free": weak_witnesses, "steiner_loop_free": steiner_witnesses,
                   "strongly_loop_free": strong_witnesses},
        failures=failures, classification=classification)
    logger.info(f"Validated {structure.name or 'structure'}", classification=classification.value,
                failures=len(failures))
    return report


def skeleton(structure: AdditiveParityStructure, dim: int) -> AdditiveParityStructure:
    """Discard every generator above dim."""
    kept = [g for g in structure.generators if g.dim <= dim]
    faces = {g: structure.faces(g) for g in kept if g.dim > 0}
    return type(structure)(kept, faces, name=f"{structure.name}<={dim}" if structure.name else "")
