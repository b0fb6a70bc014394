import pytest

from conftest import ids
from paritykit.core.cells import (AtomClosure, AtomLeaf, CellMode, CellTable, ComposeNode, IdentityNode, atom,
                                  cell_counts, compose, compose_all, enumerate_cells, evaluate, excision_decompose,
                                  expression_from_list, face, generated_by_atoms, identity, lift_identity,
                                  validate_cell)
from paritykit.core.errors import (CellShapeError, DimensionMismatchError, EnumerationLimitError,
                                   InternalConsistencyError, NotComposableError, NotWeaklyLoopFreeError)
from paritykit.core.families import globe, oriental
from paritykit.core.parity import ParityStructure


def table(structure, neg, pos):
    """Cell table from rows of generator-name lists."""
    return CellTable(tuple(ids(structure, *column) for column in neg),
                     tuple(ids(structure, *column) for column in pos))


class TestCellTable:
    def test_last_columns_must_agree(self, oriental2):
        with pytest.raises(CellShapeError):
            table(oriental2, [["0"]], [["1"]])

    def test_rows_must_have_equal_length(self, oriental2):
        with pytest.raises(CellShapeError):
            CellTable((ids(oriental2, "0"), ids(oriental2, "01")), (ids(oriental2, "01"),))

    def test_columns_are_graded(self, oriental2):
        with pytest.raises(CellShapeError):
            CellTable((ids(oriental2, "01"),), (ids(oriental2, "01"),))

    def test_str(self, oriental2):
        cell = atom(oriental2, oriental2.generator("012"))
        assert str(cell) == "({0}, {02}, {012}; {2}, {01,12}, {012})"


class TestValidateCell:
    def test_atoms_are_cells(self, oriental2):
        for generator in oriental2.generators:
            assert validate_cell(oriental2, atom(oriental2, generator)).valid

    def test_wrong_boundary(self, oriental2):
        check = validate_cell(oriental2, table(oriental2, [["0"], ["01"]], [["2"], ["01"]]))
        assert not check.valid
        assert "column 1" in check.reason

    def test_augmentation_distinguishes_modes(self, oriental2):
        cell = table(oriental2, [["0", "1"]], [["0", "1"]])
        assert validate_cell(oriental2, cell, CellMode.RHO).valid
        assert not validate_cell(oriental2, cell, CellMode.NU).valid


class TestFaceAndIdentity:
    def test_faces_of_simplex(self, oriental2):
        cell = atom(oriental2, oriental2.generator("012"))
        assert face(cell, 1, "source") == table(oriental2, [["0"], ["02"]], [["2"], ["02"]])
        assert face(cell, 1, "target") == table(oriental2, [["0"], ["01", "12"]], [["2"], ["01", "12"]])
        assert face(cell, 0, "+") == table(oriental2, [["2"]], [["2"]])

    def test_face_errors(self, oriental2):
        point = atom(oriental2, oriental2.generator("0"))
        with pytest.raises(DimensionMismatchError):
            face(point, 0, "source")
        with pytest.raises(ValueError):
            face(atom(oriental2, oriental2.generator("01")), 0, "sideways")

    def test_identity(self, oriental2):
        edge = atom(oriental2, oriental2.generator("01"))
        unit = identity(edge)
        assert unit.is_identity and unit.dim == 2
        assert validate_cell(oriental2, unit).valid
        assert face(unit, 1, "source") == edge == face(unit, 1, "target")
        assert lift_identity(edge, 4).dim == 4
        assert not edge.is_identity


class TestCompose:
    def test_edge_path(self, oriental2):
        path = compose(atom(oriental2, oriental2.generator("01")), atom(oriental2, oriental2.generator("12")), 0)
        assert path == table(oriental2, [["0"], ["01", "12"]], [["2"], ["01", "12"]])
        assert validate_cell(oriental2, path).valid

    def test_identities_are_units(self, oriental2):
        edge = atom(oriental2, oriental2.generator("01"))
        start = identity(face(edge, 0, "source"))
        end = identity(face(edge, 0, "target"))
        assert compose(start, edge, 0) == edge
        assert compose(edge, end, 0) == edge

    def test_not_composable(self, oriental2):
        with pytest.raises(NotComposableError):
            compose(atom(oriental2, oriental2.generator("01")), atom(oriental2, oriental2.generator("02")), 0)

    def test_dimension_errors(self, oriental2):
        edge = atom(oriental2, oriental2.generator("01"))
        with pytest.raises(DimensionMismatchError):
            compose(atom(oriental2, oriental2.generator("0")), edge, 0)
        with pytest.raises(DimensionMismatchError):
            compose(edge, atom(oriental2, oriental2.generator("12")), 1)

    def test_compose_all_is_associative_on_paths(self):
        simplex = oriental(3)
        edges = [atom(simplex, simplex.generator(name)) for name in ("01", "12", "23")]
        left = compose(compose(edges[0], edges[1], 0), edges[2], 0)
        right = compose(edges[0], compose(edges[1], edges[2], 0), 0)
        assert left == right == compose_all(edges, 0)

    def test_identity_is_unit_for_vertical_composition(self):
        g = globe(2)
        top = atom(g, g.generator("top"))
        lower = identity(face(top, 1, "source"))
        assert compose(lower, top, 1) == top == compose(top, identity(face(top, 1, "target")), 1)

    def test_overlapping_columns(self, oriental2):
        first = table(oriental2, [["0"], ["01"]], [["1"], ["01"]])
        second = table(oriental2, [["1"], ["01"]], [["1"], ["01"]])
        with pytest.raises(InternalConsistencyError):
            compose(first, second, 0)
        summed = compose(first, second, 0, disjoint=False)
        assert summed.neg[1].count(oriental2.generator("01")) == 2


class TestAtoms:
    def test_point(self, oriental2):
        assert atom(oriental2, oriental2.generator("1")) == table(oriental2, [["1"]], [["1"]])

    def test_simplex(self, oriental2):
        assert atom(oriental2, oriental2.generator("012")) == \
            table(oriental2, [["0"], ["02"], ["012"]], [["2"], ["01", "12"], ["012"]])

    def test_large_simplex_target(self):
        simplex = oriental(5)
        cell = atom(simplex, simplex.generator("012345"))
        spine = ["01", "12", "23", "34", "45"]
        assert face(cell, 1, "target") == table(simplex, [["0"], spine], [["5"], spine])
        assert face(cell, 1, "source") == table(simplex, [["0"], ["05"]], [["5"], ["05"]])


class TestEnumerate:
    def test_oriental_counts(self, oriental2):
        assert cell_counts(enumerate_cells(oriental2, 2)) == (3, 7, 8)

    def test_globe_counts(self, globe1):
        assert cell_counts(enumerate_cells(globe1, 1)) == (2, 3)

    def test_truncated(self, oriental2):
        assert cell_counts(enumerate_cells(oriental2, 1)) == (3, 7)
        assert cell_counts(enumerate_cells(oriental2, 0)) == (3,)

    def test_empty_structure(self):
        assert cell_counts(enumerate_cells(ParityStructure([]), 2)) == ()

    def test_cells_are_valid_and_ordered(self, oriental2):
        cells = enumerate_cells(oriental2, 2)
        assert all(validate_cell(oriental2, cell).valid for cell in cells)
        assert [cell.sort_key for cell in cells] == sorted(cell.sort_key for cell in cells)
        assert atom(oriental2, oriental2.generator("012")) in cells

    def test_circle_is_rejected(self, circle):
        with pytest.raises(NotWeaklyLoopFreeError):
            enumerate_cells(circle, 1)

    def test_limit(self, oriental2, monkeypatch):
        monkeypatch.setenv("PARITYKIT_MAX_CELLS", "5")
        with pytest.raises(EnumerationLimitError):
            enumerate_cells(oriental2, 2)


class TestExcision:
    def test_atom_is_its_own_slice(self, oriental2):
        cell = atom(oriental2, oriental2.generator("012"))
        assert excision_decompose(oriental2, cell) == [cell]

    def test_two_slices(self):
        simplex = oriental(3)
        cell = face(atom(simplex, simplex.generator("0123")), 2, "source")
        slices = excision_decompose(simplex, cell)
        assert [piece.top for piece in slices] == [ids(simplex, "023"), ids(simplex, "012")]
        assert slices[0].pos[1] == ids(simplex, "02", "23")
        assert compose_all(slices, 1) == cell

    def test_identity_has_no_slices(self, oriental2):
        assert excision_decompose(oriental2, identity(atom(oriental2, oriental2.generator("01")))) == []

    def test_points_cannot_be_decomposed(self, oriental2):
        with pytest.raises(DimensionMismatchError):
            excision_decompose(oriental2, atom(oriental2, oriental2.generator("0")))


class TestAtomExpressions:
    def test_list_form(self, oriental2):
        expression = ComposeNode(0, AtomLeaf(oriental2.generator("01")), AtomLeaf(oriental2.generator("12")))
        data = expression.to_list()
        assert data == ["compose", 0, ["atom", "01"], ["atom", "12"]]
        assert expression_from_list(oriental2, data) == expression
        assert evaluate(oriental2, expression) == \
            table(oriental2, [["0"], ["01", "12"]], [["2"], ["01", "12"]])

    def test_identity_node(self, oriental2):
        expression = IdentityNode(AtomLeaf(oriental2.generator("0")))
        assert evaluate(oriental2, expression) == identity(atom(oriental2, oriental2.generator("0")))

    @pytest.mark.parametrize("data", [[], ["atom"], ["compose", "0", ["atom", "0"], ["atom", "1"]], ["glue", 1]])
    def test_malformed(self, oriental2, data):
        with pytest.raises(ValueError):
            expression_from_list(oriental2, data)


class TestAtomClosure:
    @pytest.mark.parametrize("structure,max_dim", [(oriental(2), 2), (globe(2), 2), (oriental(3), 2)],
                             ids=["oriental-2", "globe-2", "oriental-3"])
    def test_every_cell_is_reached(self, structure, max_dim):
        closure = AtomClosure(structure, max_dim)
        assert closure.unreached() == []
        for cell in closure.cells:
            assert evaluate(structure, closure.witness(cell)) == cell

    def test_generated_by_atoms(self, oriental2):
        path = table(oriental2, [["0"], ["01", "12"]], [["2"], ["01", "12"]])
        witness = generated_by_atoms(oriental2, path)
        assert witness is not None
        assert evaluate(oriental2, witness) == path

    def test_missing_cell(self, oriental2):
        closure = AtomClosure(oriental2, 1)
        assert closure.witness(table(oriental2, [["0"], ["01"]], [["2"], ["01"]])) is None
