"""
ParityKit Command Line
======================

Overview:
---------
Batch front end over the library: validate and classify fixtures, generate the
standard families, inspect chain complexes, enumerate and manipulate cells,
check morphisms, and run the structure/complex round trip and the atom
generation check.

Exit codes: 0 success or check passed, 1 check failed on well-formed input
(report on standard output), 2 usage error or malformed input (message on
standard error).

Usage:
------
    $ python main.py generate --family oriental --n 2 | python main.py validate - --require pc
    $ python main.py cells data/fixtures/oriental2.json --max-dim 2 --count-only
    3 7 8
"""

import argparse
import sys
from typing import List, Optional, Sequence

from colorama import Fore, Style, init

from paritykit.core.cells import (AtomClosure, CellMode, atom, cell_counts, compose, enumerate_cells,
                                  excision_decompose, face, validate_cell)
from paritykit.core.chain import boundary_report, check_complex, extract_basis, from_structure, structures_isomorphic
from paritykit.core.errors import FixtureError, ParityKitError
from paritykit.core.families import FamilySpec
from paritykit.core.morphisms import MorphismMode, apply_to_cell, compose_morphisms, validate_morphism
from paritykit.core.parity import REQUIREMENTS, AdditiveParityStructure, validate
from paritykit.external.fixture_handler import (cell_to_fixture, cell_to_payload, load_cell_argument, load_fixture,
                                                morphism_to_fixture, save_fixture, structure_to_fixture)
from paritykit.utils.paritykit_logging import ParityLogging
from paritykit.utils.settings import load_settings
from paritykit.utils.utilities import dump_json

logger = ParityLogging("CLI")


class CheckFailed(Exception):
    """Raised by a command whose check fails; the report has already been printed."""


def _colour(text: str, colour: str) -> str:
    if sys.stdout.isatty():
        return f"{colour}{text}{Style.RESET_ALL}"
    return text


def _emit(args, lines: Sequence[str], data) -> None:
    if args.format == "structured":
        sys.stdout.write(dump_json(data))
    else:
        sys.stdout.write("".join(f"{line}\n" for line in lines))


def _structure(path: str) -> AdditiveParityStructure:
    fixture = load_fixture(path)
    if fixture.kind not in ("parity_structure", "additive_parity_structure"):
        raise FixtureError(f"{path} holds a {fixture.kind}, not a structure")
    return fixture.value


def _morphism(path: str):
    fixture = load_fixture(path)
    if fixture.kind != "morphism":
        raise FixtureError(f"{path} holds a {fixture.kind}, not a morphism")
    return fixture.value, fixture.mode or MorphismMode.WEAK_PARITY


def _valid_cell(structure, argument: str):
    cell = load_cell_argument(argument)
    check = validate_cell(structure, cell, CellMode.NU)
    if not check.valid:
        sys.stdout.write(f"invalid cell {cell}: {check.reason}\n")
        raise CheckFailed()
    return cell


# Commands

def cmd_validate(args) -> int:
    report = validate(_structure(args.file))
    lines = report.summary_lines()
    lines[-1] = _colour(lines[-1], Fore.GREEN if report.meets("wpc") else Fore.YELLOW)
    _emit(args, lines, report.model_dump(mode="json"))
    if args.require and not report.meets(args.require):
        return 1
    return 0


def cmd_classify(args) -> int:
    report = validate(_structure(args.file))
    _emit(args, [report.classification.value], {"classification": report.classification.value})
    return 0


def cmd_generate(args) -> int:
    structure = FamilySpec(family=args.family, n=args.n).build()
    save_fixture(structure_to_fixture(structure), args.output)
    return 0


def cmd_chain(args) -> int:
    complex_ = from_structure(_structure(args.file))
    if not args.check:
        sys.stdout.write(boundary_report(complex_))
        return 0
    report = check_complex(complex_)
    _emit(args, report.summary_lines(), report.model_dump(mode="json"))
    return 0 if report.boundary_squared_zero else 1


def cmd_atom(args) -> int:
    structure = _structure(args.file)
    cell = atom(structure, structure.generator(args.id, args.dim))
    _emit(args, [str(cell)], cell_to_fixture(cell, name=f"atom {args.id}"))
    return 0


def cmd_cells(args) -> int:
    cells = enumerate_cells(_structure(args.file), args.max_dim)
    counts = cell_counts(cells)
    if args.count_only:
        _emit(args, [" ".join(map(str, counts))], list(counts))
    else:
        _emit(args, [str(cell) for cell in cells], [cell_to_payload(cell) for cell in cells])
    return 0


def cmd_face(args) -> int:
    cell = _valid_cell(_structure(args.file), args.cell)
    result = face(cell, args.k, args.sign)
    _emit(args, [str(result)], cell_to_payload(result))
    return 0


def cmd_compose(args) -> int:
    structure = _structure(args.file)
    first, second = (_valid_cell(structure, argument) for argument in args.cells)
    result = compose(first, second, args.k)
    _emit(args, [str(result)], cell_to_payload(result))
    return 0


def cmd_decompose(args) -> int:
    structure = _structure(args.file)
    slices = excision_decompose(structure, _valid_cell(structure, args.cell))
    _emit(args, [str(piece) for piece in slices] or ["(identity: empty decomposition)"],
          [cell_to_payload(piece) for piece in slices])
    return 0


def cmd_roundtrip(args) -> int:
    structure = _structure(args.file)
    rebuilt = extract_basis(from_structure(structure))
    same = structures_isomorphic(structure, rebuilt)
    _emit(args, [_colour("isomorphic", Fore.GREEN) if same else _colour("not isomorphic", Fore.RED)],
          {"isomorphic": same})
    return 0 if same else 1


def cmd_freeness(args) -> int:
    closure = AtomClosure(_structure(args.file), args.max_dim)
    missing = closure.unreached()
    lines = [f"cells: {len(closure.cells)}", f"reached from atoms: {len(closure.cells) - len(missing)}"]
    lines += [f"  unreached {cell}" for cell in missing]
    _emit(args, lines, {"cells": len(closure.cells), "unreached": [cell_to_payload(cell) for cell in missing]})
    return 0 if not missing else 1


def cmd_morphism_validate(args) -> int:
    morphism, mode = _morphism(args.file)
    report = validate_morphism(morphism, MorphismMode(args.mode) if args.mode else mode)
    _emit(args, report.summary_lines(), report.model_dump(mode="json"))
    return 0 if report.valid else 1


def cmd_morphism_compose(args) -> int:
    first, mode = _morphism(args.first)
    second, _ = _morphism(args.second)
    mode = MorphismMode(args.mode) if args.mode else mode
    composite = compose_morphisms(first, second, mode)
    save_fixture(morphism_to_fixture(composite, name=f"{args.first} then {args.second}", mode=mode), args.output)
    return 0


def cmd_morphism_apply(args) -> int:
    morphism, mode = _morphism(args.file)
    cell = _valid_cell(morphism.source, args.cell)
    result = apply_to_cell(morphism, cell, mode)
    _emit(args, [str(result)], cell_to_payload(result))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "structured"], default="text",
                        help="human-readable text (default) or JSON")

    parser = argparse.ArgumentParser(prog="paritykit", description="Parity complexes, their cells and morphisms")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("validate", parents=[common], help="check every axiom of a structure")
    sub.add_argument("file")
    sub.add_argument("--require", choices=sorted(REQUIREMENTS))
    sub.set_defaults(handler=cmd_validate)

    sub = commands.add_parser("classify", parents=[common], help="print the classification only")
    sub.add_argument("file")
    sub.set_defaults(handler=cmd_classify)

    sub = commands.add_parser("generate", parents=[common], help="emit a standard family as a fixture")
    sub.add_argument("--family", choices=["globe", "oriental", "cube"], required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("-o", "--output", default="-")
    sub.set_defaults(handler=cmd_generate)

    sub = commands.add_parser("chain", parents=[common], help="boundary report, or chain-level checks")
    sub.add_argument("file")
    sub.add_argument("--check", action="store_true")
    sub.set_defaults(handler=cmd_chain)

    sub = commands.add_parser("atom", parents=[common], help="the atom of one generator")
    sub.add_argument("file")
    sub.add_argument("id")
    sub.add_argument("--dim", type=int)
    sub.set_defaults(handler=cmd_atom)

    sub = commands.add_parser("cells", parents=[common], help="enumerate cells up to a dimension")
    sub.add_argument("file")
    sub.add_argument("--max-dim", type=int, required=True)
    sub.add_argument("--count-only", action="store_true")
    sub.set_defaults(handler=cmd_cells)

    sub = commands.add_parser("face", parents=[common], help="k-source or k-target of a cell")
    sub.add_argument("file")
    sub.add_argument("--cell", required=True)
    sub.add_argument("-k", type=int, required=True)
    sub.add_argument("--sign", choices=["source", "target"], required=True)
    sub.set_defaults(handler=cmd_face)

    sub = commands.add_parser("compose", parents=[common], help="k-composite of two cells")
    sub.add_argument("file")
    sub.add_argument("--cells", nargs=2, required=True, metavar=("A", "B"))
    sub.add_argument("-k", type=int, required=True)
    sub.set_defaults(handler=cmd_compose)

    sub = commands.add_parser("decompose", parents=[common], help="excise a cell into singleton-top slices")
    sub.add_argument("file")
    sub.add_argument("--cell", required=True)
    sub.set_defaults(handler=cmd_decompose)

    sub = commands.add_parser("roundtrip", parents=[common], help="structure -> complex -> basis -> structure")
    sub.add_argument("file")
    sub.set_defaults(handler=cmd_roundtrip)

    sub = commands.add_parser("freeness", parents=[common], help="check every cell is generated by atoms")
    sub.add_argument("file")
    sub.add_argument("--max-dim", type=int, required=True)
    sub.set_defaults(handler=cmd_freeness)

    morphism = commands.add_parser("morphism", help="morphism commands")
    actions = morphism.add_subparsers(dest="action", required=True)
    modes = [mode.value for mode in MorphismMode]

    sub = actions.add_parser("validate", parents=[common])
    sub.add_argument("file")
    sub.add_argument("--mode", choices=modes)
    sub.set_defaults(handler=cmd_morphism_validate)

    sub = actions.add_parser("compose", parents=[common])
    sub.add_argument("first")
    sub.add_argument("second")
    sub.add_argument("--mode", choices=modes)
    sub.add_argument("-o", "--output", default="-")
    sub.set_defaults(handler=cmd_morphism_compose)

    sub = actions.add_parser("apply", parents=[common])
    sub.add_argument("file")
    sub.add_argument("--cell", required=True)
    sub.set_defaults(handler=cmd_morphism_apply)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    ParityLogging.set_package_level(load_settings().numeric_log_level)
    logger.info("Running command", argv=list(argv) if argv is not None else sys.argv[1:])
    try:
        return args.handler(args)
    except CheckFailed:
        return 1
    except (ParityKitError, FileNotFoundError, ValueError, LookupError) as e:
        logger.error(f"Command failed: {e}")
        sys.stderr.write(f"paritykit: error: {e}\n")
        return 2


def main():
    init()
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
