import copy

import pytest

from parafock.errors import SpecInvalid, TruncationTooSmall, UnknownElement
from parafock.fock import BasisVector, FockParams, Kind, Vector, enumerate_basis
from parafock.operators import compile_expr, format_expr
from parafock.realization import (
    Parity,
    SuperAlgebraSpec,
    SuperMatrix2,
    act,
    builtin_spec,
    check_bracket_preservation,
    gl11_spec,
    realize,
    validate_spec,
)

PARAMS = FockParams(2, 8)


def test_builtin_lookup():
    assert builtin_spec("gl11").name == "gl11"
    with pytest.raises(UnknownElement):
        builtin_spec("does-not-exist")


def test_gl11_validates():
    rep = validate_spec(gl11_spec())
    assert rep.elements == 4
    assert rep.bracket_pairs == 16
    assert rep.jacobi_triples == 64
    assert rep.rep_checks == 16


def test_realized_operators():
    spec = gl11_spec()
    assert format_expr(realize(spec, "E11", PARAMS).expr) == "(1/1)·1 + (1/1)·Nb"
    assert format_expr(realize(spec, "E22", PARAMS).expr) == "(-1/1)·1 + (1/1)·Nf"
    assert format_expr(realize(spec, "E12", PARAMS).expr) == "(1/1)·Q-"
    assert format_expr(realize(spec, "E21", PARAMS).expr) == "(1/1)·Q+"
    assert realize(spec, "E12", PARAMS).parity is Parity.ODD
    with pytest.raises(UnknownElement):
        realize(spec, "E13", PARAMS)


def test_even_elements_act_diagonally():
    spec = gl11_spec()
    v = Vector.basis(BasisVector(2, 1, Kind.ALPHA))
    assert act(spec, "E11", v, PARAMS) == v.scaled(3)  # m + p/2
    assert act(spec, "E22", v, PARAMS).is_zero()  # n - p/2
    w = Vector.basis(BasisVector(1, 0, Kind.ALPHA))
    assert act(spec, "E21", w, PARAMS) == Vector.basis(BasisVector(0, 1, Kind.ALPHA))


def test_act_matches_compiled_route():
    spec = gl11_spec()
    for name in spec.basis:
        mat = compile_expr(realize(spec, name, PARAMS).expr, PARAMS)
        for bv in enumerate_basis(FockParams(2, 6)):
            v = Vector.basis(bv)
            assert act(spec, name, v, PARAMS) == mat.apply(v), (name, bv)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_bracket_preservation(p):
    rep = check_bracket_preservation(gl11_spec(), FockParams(p, 10))
    assert rep.passed
    assert len(rep.pairs) == 10  # unordered pairs of four elements
    assert all(c.passed for c in rep.pairs)


def test_bracket_preservation_needs_room():
    with pytest.raises(TruncationTooSmall):
        check_bracket_preservation(gl11_spec(), FockParams(2, 3))


def test_json_round_trip():
    doc = gl11_spec().to_json()
    again = SuperAlgebraSpec.from_json(doc, name="gl11")
    assert again.to_json() == doc


def test_total_number_algebra_from_json():
    # a one element even algebra: H = identity matrix, [H, H] = 0
    doc = {
        "basis": [{"name": "H", "parity": "even"}],
        "brackets": [],
        "rep2": {"H": {"A": "1", "B": "0", "C": "0", "D": "1"}},
    }
    spec = SuperAlgebraSpec.from_json(doc, name="u1")
    assert validate_spec(spec).elements == 1
    v = Vector.basis(BasisVector(3, 1, Kind.ALPHA))
    assert act(spec, "H", v, PARAMS) == v.scaled(4)  # m + n


def _broken(mutate):
    doc = copy.deepcopy(gl11_spec().to_json())
    mutate(doc)
    return doc


def test_rejects_wrong_sign_reverse_bracket():
    def mutate(doc):
        doc["brackets"].append(
            {
                "x": "E12",
                "y": "E11",
                "terms": [{"elem": "E12", "coeff": {"re": "1/1", "im": "0/1"}}],
            }
        )

    with pytest.raises(SpecInvalid):
        SuperAlgebraSpec.from_json(_broken(mutate))


def test_rejects_jacobi_violation():
    def mutate(doc):
        # drop [E22, E12] = -E12; the triple (E22, E12, E21) then fails
        doc["brackets"] = [
            b for b in doc["brackets"] if not (b["x"] == "E22" and b["y"] == "E12")
        ]

    with pytest.raises(SpecInvalid):
        SuperAlgebraSpec.from_json(_broken(mutate))


def test_rejects_parity_leak():
    def mutate(doc):
        doc["brackets"][0]["terms"] = [
            {"elem": "E11", "coeff": {"re": "1/1", "im": "0/1"}}
        ]

    with pytest.raises(SpecInvalid):
        SuperAlgebraSpec.from_json(_broken(mutate))


def test_rejects_matrix_mismatch():
    def mutate(doc):
        doc["rep2"]["E12"]["B"] = {"re": "2/1", "im": "0/1"}

    with pytest.raises(SpecInvalid):
        SuperAlgebraSpec.from_json(_broken(mutate))


def test_rejects_odd_matrix_with_diagonal():
    def mutate(doc):
        doc["rep2"]["E12"]["A"] = {"re": "1/1", "im": "0/1"}

    with pytest.raises(SpecInvalid):
        SuperAlgebraSpec.from_json(_broken(mutate))


def test_rejects_missing_rep_entry():
    def mutate(doc):
        del doc["rep2"]["E21"]

    with pytest.raises(SpecInvalid):
        SuperAlgebraSpec.from_json(_broken(mutate))


def test_rejects_unknown_bracket_element():
    def mutate(doc):
        doc["brackets"][0]["x"] = "E99"

    with pytest.raises(SpecInvalid):
        SuperAlgebraSpec.from_json(_broken(mutate))


def test_supermatrix_shape_guard():
    SuperMatrix2.even(1, 2)
    SuperMatrix2.odd(1, 2)
    with pytest.raises(SpecInvalid):
        SuperMatrix2(Parity.EVEN, a=0, b=1, c=0, d=0)
