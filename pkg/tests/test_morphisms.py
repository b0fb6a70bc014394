import pytest

from conftest import fixture_path, ids
from paritykit.core.cells import CellTable, atom, validate_cell
from paritykit.core.chain import from_structure
from paritykit.core.errors import (InternalConsistencyError, InvalidCellError, InvalidMorphismError,
                                   MorphismModeError, NotComposableError, UnknownGeneratorError)
from paritykit.core.families import globe, oriental
from paritykit.core.morphisms import (ChainMap, GradedMorphism, MorphismMode, apply_to_cell, check_strict_movement,
                                      compose_morphisms, identity_morphism, induced_chain_map, morphism_from_chain_map,
                                      restrict_to_skeleton, validate_morphism)
from paritykit.core.multiset import Multiset, SignedVector, is_radical
from paritykit.core.parity import is_well_formed
from paritykit.external.fixture_handler import load_fixture

EDGE_PATH = {"e0-": ["0"], "e0+": ["2"], "top": ["01", "12"]}


@pytest.fixture
def edge_path(globe1, oriental2):
    return GradedMorphism.from_names(globe1, oriental2, EDGE_PATH)


def with_top(globe1, oriental2, top):
    return GradedMorphism.from_names(globe1, oriental2, dict(EDGE_PATH, top=top))


class TestConstruction:
    def test_missing_image(self, globe1, oriental2):
        with pytest.raises(InvalidMorphismError):
            GradedMorphism.from_names(globe1, oriental2, {"e0-": ["0"], "e0+": ["2"]})

    def test_image_in_wrong_dimension(self, globe1, oriental2):
        assignment = dict(GradedMorphism.from_names(globe1, oriental2, EDGE_PATH).assignment)
        assignment[globe1.generator("top")] = ids(oriental2, "012")
        with pytest.raises(InvalidMorphismError):
            GradedMorphism(globe1, oriental2, assignment)

    def test_unknown_target_name(self, globe1, oriental2):
        with pytest.raises(UnknownGeneratorError):
            with_top(globe1, oriental2, ["03"])

    def test_images(self, edge_path, globe1, oriental2):
        top = globe1.generator("top")
        assert edge_path(top) == ids(oriental2, "01", "12")
        assert edge_path.image(Multiset({top: 2})) == Multiset({oriental2.generator("01"): 2,
                                                                oriental2.generator("12"): 2})
        assert edge_path.union_image(ids(globe1, "e0-", "e0+")) == ids(oriental2, "0", "2")


class TestValidate:
    @pytest.mark.parametrize("mode", list(MorphismMode))
    def test_edge_path_is_valid(self, edge_path, mode):
        report = validate_morphism(edge_path, mode)
        assert report.valid and report.normal
        assert report.summary_lines()[0] == f"morphism ({mode.value}): valid"

    def test_edge_that_stops_short(self, globe1, oriental2):
        report = validate_morphism(with_top(globe1, oriental2, ["01"]), MorphismMode.WEAK_PARITY)
        assert not report.valid
        assert [(f.axiom, f.generators) for f in report.failures] == [("movement", ["top"])]

    def test_counted_image(self, globe1, oriental2):
        doubled = with_top(globe1, oriental2, [("02", 2)])
        assert validate_morphism(doubled, MorphismMode.WEAK_PARITY).failures[0].axiom == "subset"
        assert validate_morphism(doubled, MorphismMode.ADDITIVE).failures[0].axiom == "movement"

    def test_image_not_well_formed(self, globe1, oriental2):
        report = validate_morphism(with_top(globe1, oriental2, ["01", "02"]), MorphismMode.WEAK_PARITY)
        assert report.failures[0].axiom == "well_formed"

    def test_collapse_fixture(self):
        fixture = load_fixture(fixture_path("globe1_collapse.json"))
        report = validate_morphism(fixture.value, fixture.mode)
        assert report.valid and report.normal

    def test_circle_needs_additive_mode(self, circle):
        loop = identity_morphism(circle)
        assert validate_morphism(loop, MorphismMode.ADDITIVE).valid
        with pytest.raises(MorphismModeError):
            validate_morphism(loop, MorphismMode.WEAK_PARITY)

    def test_strict_movement(self, edge_path, globe1, oriental2):
        assert check_strict_movement(edge_path)
        with pytest.raises(InvalidMorphismError):
            check_strict_movement(with_top(globe1, oriental2, ["01"]))


class TestCompose:
    def test_identities(self, edge_path, globe1, oriental2):
        assert compose_morphisms(identity_morphism(globe1), edge_path) == edge_path
        assert compose_morphisms(edge_path, identity_morphism(oriental2), MorphismMode.WEAK_PARITY) == edge_path

    def test_collapse_then_point(self, oriental2):
        collapse = load_fixture(fixture_path("globe1_collapse.json")).value
        point = GradedMorphism.from_names(globe(0), oriental2, {"top": ["1"]})
        composite = compose_morphisms(collapse, point, MorphismMode.WEAK_PARITY)
        assert composite(collapse.source.generator("top")) == Multiset.empty(1)
        assert composite(collapse.source.generator("e0-")) == ids(oriental2, "1")
        assert validate_morphism(composite, MorphismMode.WEAK_PARITY).valid

    def test_not_composable(self, edge_path):
        with pytest.raises(NotComposableError):
            compose_morphisms(edge_path, edge_path)

    def test_overlapping_union(self, edge_path, oriental2, globe1):
        folding = GradedMorphism.from_names(oriental2, globe1, {
            "0": ["e0-"], "1": ["e0-"], "2": ["e0+"], "01": ["top"], "02": ["top"], "12": ["top"], "012": []})
        with pytest.raises(InternalConsistencyError):
            compose_morphisms(edge_path, folding, MorphismMode.WEAK_PARITY)
        assert compose_morphisms(edge_path, folding)(globe1.generator("top")) == \
            Multiset({globe1.generator("top"): 2})


class TestCellsAndSkeleta:
    def test_apply_to_atom(self, edge_path, globe1, oriental2):
        image = apply_to_cell(edge_path, atom(globe1, globe1.generator("top")))
        assert image == load_fixture(fixture_path("oriental2_edge_path.json")).value
        assert validate_cell(oriental2, image).valid

    def test_identity_fixes_cells(self, oriental2):
        cell = atom(oriental2, oriental2.generator("012"))
        assert apply_to_cell(identity_morphism(oriental2), cell) == cell

    def test_rejects_invalid_morphism(self, globe1, oriental2):
        with pytest.raises(InvalidMorphismError):
            apply_to_cell(with_top(globe1, oriental2, ["01"]), atom(globe1, globe1.generator("top")))

    def test_rejects_invalid_cell(self, edge_path, globe1):
        stray = CellTable((ids(globe1, "e0-"), ids(globe1, "top")), (ids(globe1, "e0-"), ids(globe1, "top")))
        with pytest.raises(InvalidCellError):
            apply_to_cell(edge_path, stray)

    def test_restrict(self, edge_path):
        restricted = restrict_to_skeleton(edge_path, 0)
        assert len(restricted.assignment) == 2
        assert restricted.target.top_dim == 0
        assert validate_morphism(restricted).valid


class TestChainMaps:
    def test_induced_map_commutes(self, edge_path, globe1, oriental2):
        chain_map = induced_chain_map(edge_path)
        assert chain_map.commutes()
        assert chain_map.preserves_augmentation()
        assert morphism_from_chain_map(chain_map, globe1, oriental2) == edge_path

    def test_non_commuting_generator(self, globe1, oriental2):
        short = with_top(globe1, oriental2, ["01"])
        chain_map = ChainMap(from_structure(globe1), from_structure(oriental2),
                             {g: image.to_vector() for g, image in short.assignment.items()})
        assert chain_map.non_commuting() == [globe1.generator("top")]
        with pytest.raises(InvalidMorphismError):
            induced_chain_map(short)

    def test_composition_with_identity(self, edge_path, globe1):
        chain_map = induced_chain_map(edge_path)
        assert induced_chain_map(identity_morphism(globe1)).compose(chain_map) == chain_map

    def test_negative_image(self, globe1, oriental2):
        images = {g: SignedVector(dim=g.dim) for g in globe1.generators}
        images[globe1.generator("top")] = SignedVector({oriental2.generator("01"): -1})
        chain_map = ChainMap(from_structure(globe1), from_structure(oriental2), images)
        with pytest.raises(InvalidMorphismError):
            morphism_from_chain_map(chain_map, globe1, oriental2)


def inclusion(smaller, larger):
    return GradedMorphism.from_names(smaller, larger, {g.name: [g.name] for g in smaller.generators})


def collapse_to_point(structure):
    return GradedMorphism.from_names(structure, globe(0),
                                     {g.name: ["top"] if g.dim == 0 else [] for g in structure.generators})


class TestCompositeMorphisms:
    def test_edge_path_into_larger_simplex(self, edge_path, globe1, oriental2):
        simplex = oriental(3)
        composite = compose_morphisms(edge_path, inclusion(oriental2, simplex), MorphismMode.WEAK_PARITY)
        assert composite(globe1.generator("top")) == ids(simplex, "01", "12")
        assert composite(globe1.generator("e0+")) == ids(simplex, "2")
        assert validate_morphism(composite, MorphismMode.WEAK_PARITY).valid
        assert check_strict_movement(composite)

    @pytest.mark.parametrize("mode", list(MorphismMode))
    def test_associativity(self, edge_path, oriental2, mode):
        simplex = oriental(3)
        middle, last = inclusion(oriental2, simplex), collapse_to_point(simplex)
        left = compose_morphisms(compose_morphisms(edge_path, middle, mode), last, mode)
        right = compose_morphisms(edge_path, compose_morphisms(middle, last, mode), mode)
        assert left == right
        assert validate_morphism(left, mode).valid

    def test_induced_chain_maps_compose(self, edge_path, oriental2):
        middle = inclusion(oriental2, oriental(3))
        composite = compose_morphisms(edge_path, middle)
        assert induced_chain_map(composite) == induced_chain_map(edge_path).compose(induced_chain_map(middle))
        assert induced_chain_map(composite).commutes()


def weak_parity_by_parts(morphism):
    """Valid additive, normal, and every image a well-formed subset."""
    report = validate_morphism(morphism, MorphismMode.ADDITIVE)
    target = morphism.target.as_parity()
    return report.valid and report.normal and all(
        is_radical(morphism(g)) and is_well_formed(target, morphism(g), g.dim) for g in morphism.source.generators)


class TestWeakParityCharacterization:
    @pytest.fixture
    def morphisms(self, edge_path, globe1, oriental2):
        doubling = GradedMorphism.from_names(globe1, globe1, {"e0-": [("e0-", 2)], "e0+": [("e0+", 2)],
                                                             "top": [("top", 2)]})
        return [edge_path, identity_morphism(oriental2), inclusion(oriental2, oriental(3)),
                collapse_to_point(oriental2), load_fixture(fixture_path("globe1_collapse.json")).value, doubling,
                with_top(globe1, oriental2, ["01"]), with_top(globe1, oriental2, [("02", 2)]),
                with_top(globe1, oriental2, ["01", "02"])]

    def test_both_directions(self, morphisms):
        verdicts = []
        for morphism in morphisms:
            valid = validate_morphism(morphism, MorphismMode.WEAK_PARITY).valid
            assert valid == weak_parity_by_parts(morphism), repr(morphism)
            verdicts.append(valid)
        assert any(verdicts) and not all(verdicts)

    def test_skeleta(self, edge_path):
        for dim in range(2):
            restricted = restrict_to_skeleton(edge_path, dim)
            assert validate_morphism(restricted, MorphismMode.WEAK_PARITY).valid == weak_parity_by_parts(restricted)
