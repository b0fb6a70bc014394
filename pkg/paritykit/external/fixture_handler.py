"""
ParityKit Fixture Handler
=========================

Overview:
---------
Reads and writes the JSON fixture format shared by the CLI and the frozen test
corpus. Every file is an envelope

    {"schema_version": 1, "name": ..., "kind": ..., "payload": {...}}

with kind one of parity_structure, additive_parity_structure, cell, morphism.
Faces and cell columns list generator names (subsets) or [name, count] pairs
(multisets). Envelopes and payloads are validated with pydantic; any schema
problem surfaces as FixtureError.
"""

import json
from typing import Any, Dict, List, Literal, NamedTuple, Optional, Tuple, Union

from pydantic import BaseModel, Field, PositiveInt, ValidationError, field_validator

from paritykit.core.cells import CellTable
from paritykit.core.errors import FixtureError
from paritykit.core.morphisms import GradedMorphism, MorphismMode
from paritykit.core.multiset import GeneratorId, Multiset, is_radical
from paritykit.core.parity import AdditiveParityStructure, ParityStructure
from paritykit.utils.paritykit_logging import ParityLogging
from paritykit.utils.utilities import load_json_file, save_json_file

logger = ParityLogging("FixtureHandler")

SCHEMA_VERSION = 1

FaceEntry = Union[str, Tuple[str, PositiveInt]]
Kind = Literal["parity_structure", "additive_parity_structure", "cell", "morphism"]


class FixtureSchema(BaseModel):
    schema_version: int
    name: str = ""
    kind: Kind
    payload: Dict[str, Any]

    @field_validator("schema_version")
    @classmethod
    def known_version(cls, value: int) -> int:
        if value != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {value}; expected {SCHEMA_VERSION}")
        return value


class ElementSchema(BaseModel):
    id: str
    dim: int = Field(ge=0)
    neg: List[FaceEntry] = []
    pos: List[FaceEntry] = []


class StructurePayload(BaseModel):
    elements: List[ElementSchema]


class CellPayload(BaseModel):
    dim: int = Field(ge=0)
    neg: List[List[FaceEntry]]
    pos: List[List[FaceEntry]]


class MorphismPayload(BaseModel):
    source: FixtureSchema
    target: FixtureSchema
    assignment: Dict[int, Dict[str, List[FaceEntry]]]
    mode: Optional[MorphismMode] = None


class Fixture(NamedTuple):
    name: str
    kind: str
    value: Any
    mode: Optional[MorphismMode] = None


def _validated(model, data, what: str):
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise FixtureError(f"Malformed {what}: {e}") from e


def _entries(column: Multiset) -> List[FaceEntry]:
    if is_radical(column):
        return [key.name for key in column]
    return [[key.name, count] for key, count in column.items()]


def _column(entries: List[FaceEntry], dim: int) -> Multiset:
    counts: Dict[GeneratorId, int] = {}
    for entry in entries:
        name, count = (entry, 1) if isinstance(entry, str) else entry
        key = GeneratorId(name, dim)
        counts[key] = counts.get(key, 0) + count
    return Multiset(counts, dim)


# Structures

def structure_to_fixture(structure: AdditiveParityStructure, name: Optional[str] = None) -> Dict[str, Any]:
    elements = []
    for generator in structure.generators:
        neg, pos = structure.faces(generator)
        elements.append({"id": generator.name, "dim": generator.dim, "neg": _entries(neg), "pos": _entries(pos)})
    kind = "parity_structure" if structure.as_parity() is not None else "additive_parity_structure"
    return {"schema_version": SCHEMA_VERSION, "name": structure.name if name is None else name, "kind": kind,
            "payload": {"elements": elements}}


def structure_from_fixture(envelope: FixtureSchema) -> AdditiveParityStructure:
    payload = _validated(StructurePayload, envelope.payload, "structure payload")
    rows = [(element.id, element.dim, element.neg, element.pos) for element in payload.elements]
    names = [(row[0], row[1]) for row in rows]
    if len(set(names)) != len(names):
        raise FixtureError(f"Duplicate generator ids in {envelope.name or 'fixture'}")
    try:
        rows = [(ident, dim, list(neg), list(pos)) for ident, dim, neg, pos in rows]
        if envelope.kind == "parity_structure":
            return ParityStructure.from_elements(rows, name=envelope.name)
        return AdditiveParityStructure.from_elements(rows, name=envelope.name)
    except ValueError as e:
        raise FixtureError(f"Invalid structure {envelope.name or ''}: {e}") from e


# Cells

def cell_to_payload(cell: CellTable) -> Dict[str, Any]:
    return {"dim": cell.dim, "neg": [_entries(column) for column in cell.neg],
            "pos": [_entries(column) for column in cell.pos]}


def cell_to_fixture(cell: CellTable, name: str = "") -> Dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "name": name, "kind": "cell", "payload": cell_to_payload(cell)}


def cell_from_payload(data: Dict[str, Any]) -> CellTable:
    payload = _validated(CellPayload, data, "cell payload")
    if len(payload.neg) != payload.dim + 1 or len(payload.pos) != payload.dim + 1:
        raise FixtureError(f"A {payload.dim}-cell needs {payload.dim + 1} columns per row")
    try:
        return CellTable(tuple(_column(column, k) for k, column in enumerate(payload.neg)),
                         tuple(_column(column, k) for k, column in enumerate(payload.pos)))
    except ValueError as e:
        raise FixtureError(f"Invalid cell: {e}") from e


# Morphisms

def morphism_to_fixture(morphism: GradedMorphism, name: str = "",
                        mode: Optional[MorphismMode] = None) -> Dict[str, Any]:
    assignment: Dict[str, Dict[str, List[FaceEntry]]] = {}
    for generator, image in sorted(morphism.assignment.items()):
        assignment.setdefault(str(generator.dim), {})[generator.name] = _entries(image)
    payload = {"source": structure_to_fixture(morphism.source), "target": structure_to_fixture(morphism.target),
               "assignment": assignment}
    if mode is not None:
        payload["mode"] = MorphismMode(mode).value
    return {"schema_version": SCHEMA_VERSION, "name": name, "kind": "morphism", "payload": payload}


def morphism_from_fixture(envelope: FixtureSchema) -> Tuple[GradedMorphism, Optional[MorphismMode]]:
    payload = _validated(MorphismPayload, envelope.payload, "morphism payload")
    source = structure_from_fixture(payload.source)
    target = structure_from_fixture(payload.target)
    resolved = {}
    try:
        for dim, images in payload.assignment.items():
            for name, entries in images.items():
                generator = source.generator(name, dim)
                image = _column(list(entries), dim)
                resolved[generator] = image
        return GradedMorphism(source, target, resolved), payload.mode
    except (ValueError, LookupError) as e:
        raise FixtureError(f"Invalid morphism {envelope.name or ''}: {e}") from e


# Envelopes

def parse_fixture(data: Any) -> Fixture:
    envelope = _validated(FixtureSchema, data, "fixture envelope")
    if envelope.kind in ("parity_structure", "additive_parity_structure"):
        return Fixture(envelope.name, envelope.kind, structure_from_fixture(envelope))
    if envelope.kind == "cell":
        return Fixture(envelope.name, envelope.kind, cell_from_payload(envelope.payload))
    morphism, mode = morphism_from_fixture(envelope)
    return Fixture(envelope.name, envelope.kind, morphism, mode)


def load_fixture(path: str) -> Fixture:
    try:
        data = load_json_file(path)
    except json.JSONDecodeError as e:
        raise FixtureError(f"{path} is not valid JSON: {e}") from e
    fixture = parse_fixture(data)
    logger.debug(f"Loaded fixture {fixture.name or path}", kind=fixture.kind)
    return fixture


def load_cell_argument(argument: str) -> CellTable:
    """A cell given as a fixture path, or inline JSON (envelope or bare payload)."""
    if argument.lstrip().startswith("{"):
        try:
            data = json.loads(argument)
        except json.JSONDecodeError as e:
            raise FixtureError(f"Inline cell is not valid JSON: {e}") from e
    else:
        try:
            data = load_json_file(argument)
        except json.JSONDecodeError as e:
            raise FixtureError(f"{argument} is not valid JSON: {e}") from e
    if isinstance(data, dict) and "schema_version" in data:
        fixture = parse_fixture(data)
        if fixture.kind != "cell":
            raise FixtureError(f"Expected a cell fixture, got {fixture.kind}")
        return fixture.value
    return cell_from_payload(data)


def save_fixture(data: Dict[str, Any], path: str) -> None:
    save_json_file(data, path)
    logger.debug(f"Saved fixture {data.get('name') or ''}".rstrip(), kind=data.get("kind"), path=path)
