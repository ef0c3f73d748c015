from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parafock.errors import TruncationOverflow
from parafock.fock import BasisVector, FockParams, Kind, Vector, enumerate_basis
from parafock.operators import (
    ATOM_GRADE,
    B_MINUS,
    B_PLUS,
    DerivedOp,
    F_MINUS,
    F_PLUS,
    Generator,
    N_B,
    N_F,
    OperatorExpr,
    Q_MINUS,
    Q_PLUS,
    anticommutator,
    apply_derived_closed_form,
    apply_expr,
    apply_generator,
    commutator,
    compile_expr,
    expr_margin,
    format_expr,
    grade_of_expr,
    theta,
)

P2 = FockParams(2, 6)
P3 = FockParams(3, 6)


def alpha(m, n):
    return BasisVector(m, n, Kind.ALPHA)


def beta(m, n):
    return BasisVector(m, n, Kind.BETA)


def vec(*terms):
    out = Vector.zero()
    for coeff, bv in terms:
        out = out + Vector.basis(bv).scaled(Fraction(coeff))
    return out


# ---------------------------------------------------------------------------
# single letter actions, each value worked out by hand
# ---------------------------------------------------------------------------


def test_lowering_kills_vacuum():
    assert apply_generator(Generator.BMINUS, alpha(0, 0), P2).is_zero()
    assert apply_generator(Generator.FMINUS, alpha(0, 0), P2).is_zero()
    assert apply_generator(Generator.FMINUS, alpha(3, 0), P2).is_zero()


def test_b_minus_frozen_values():
    assert apply_generator(Generator.BMINUS, alpha(2, 1), P2) == vec(
        (-2, alpha(1, 1)), (4, beta(1, 1))
    )
    assert apply_generator(Generator.BMINUS, beta(2, 1), P2) == vec(
        (1, alpha(1, 1)), (2, beta(1, 1))
    )
    # odd level, p=2: the diagonal coefficient 2n - m - (p-1) vanishes here
    assert apply_generator(Generator.BMINUS, alpha(1, 1), P2).is_zero()
    assert apply_generator(Generator.BMINUS, alpha(1, 0), P2) == vec((2, alpha(0, 0)))


def test_b_plus_frozen_values():
    assert apply_generator(Generator.BPLUS, alpha(2, 1), P2) == vec(
        (-1, alpha(3, 1)), (2, beta(3, 1))
    )
    assert apply_generator(Generator.BPLUS, beta(1, 1), P2) == vec((1, beta(2, 1)))
    assert apply_generator(Generator.BPLUS, alpha(0, 0), P2) == vec((1, alpha(1, 0)))


def test_f_ladder_frozen_values():
    assert apply_generator(Generator.FMINUS, alpha(2, 2), P3) == vec((4, alpha(2, 1)))
    assert apply_generator(Generator.FMINUS, beta(2, 2), P3) == vec(
        (1, alpha(2, 1)), (1, beta(2, 1))
    )
    assert apply_generator(Generator.FPLUS, alpha(1, 1), P3) == vec((1, alpha(1, 2)))
    assert apply_generator(Generator.FPLUS, alpha(0, 2), P2).is_zero()
    # raising beta into the top level folds it back onto alpha with weight 1/p
    assert apply_generator(Generator.FPLUS, beta(1, 1), P2) == vec(
        (Fraction(1, 2), alpha(1, 2))
    )


def test_b_plus_overflow_at_truncation():
    with pytest.raises(TruncationOverflow):
        apply_generator(Generator.BPLUS, alpha(6, 0), P2)


# ---------------------------------------------------------------------------
# derived operators: closed forms against the anticommutator definitions
# ---------------------------------------------------------------------------


def test_number_operator_eigenvalues():
    assert apply_derived_closed_form(DerivedOp.NB, alpha(4, 1), P2) == vec(
        (4, alpha(4, 1))
    )
    assert apply_derived_closed_form(DerivedOp.NF, beta(3, 1), P2) == vec(
        (1, beta(3, 1))
    )


def test_q_minus_frozen():
    assert apply_derived_closed_form(DerivedOp.QMINUS, alpha(1, 1), P2) == vec(
        (1, alpha(2, 0))
    )
    with pytest.raises(TruncationOverflow):
        apply_derived_closed_form(DerivedOp.QMINUS, alpha(6, 1), P2)


def test_q_plus_bottom_levels():
    # the closed form stays valid at m = 0 and m = 1 where several terms drop
    for n in range(0, 3):
        assert apply_derived_closed_form(DerivedOp.QPLUS, alpha(0, n), P3).is_zero()
        expected = vec(((-1) ** n, alpha(0, n + 1)))
        assert apply_derived_closed_form(DerivedOp.QPLUS, alpha(1, n), P3) == expected


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_closed_forms_match_compiled_definitions(p):
    # oracle: expand {b,f} words and apply letter by letter
    params = FockParams(p, 8)
    pairs = (
        (DerivedOp.NB, N_B),
        (DerivedOp.NF, N_F),
        (DerivedOp.QPLUS, Q_PLUS),
        (DerivedOp.QMINUS, Q_MINUS),
    )
    for op, expr in pairs:
        mat = compile_expr(expr, params)
        for bv in enumerate_basis(params):
            if bv.m > params.m_max - 2:
                continue
            assert mat.apply(Vector.basis(bv)) == apply_derived_closed_form(
                op, bv, params
            ), f"{op} disagrees at {bv}"


# ---------------------------------------------------------------------------
# words, expressions, compiled matrices
# ---------------------------------------------------------------------------


def test_word_application_order():
    # products act right to left: b-b+ on the vacuum measures p
    vacuum = Vector.basis(alpha(0, 0))
    assert apply_expr(B_MINUS * B_PLUS, vacuum, P2) == vacuum.scaled(2)
    assert apply_expr(B_PLUS * B_MINUS, vacuum, P2).is_zero()


def test_pair_anticommutator_eigenvalue():
    mat = compile_expr(anticommutator(B_PLUS, B_MINUS), P2)
    for bv in enumerate_basis(FockParams(2, 5)):
        assert mat.apply(Vector.basis(bv)) == Vector.basis(bv).scaled(2 * bv.m + 2)


def test_expr_algebra():
    e = B_PLUS + B_PLUS
    assert e == B_PLUS.scaled(2)
    assert (e - e) == OperatorExpr.zero()
    assert format_expr(B_PLUS) == "(1/1)·b+"
    assert format_expr(OperatorExpr.zero()) == "0"
    assert (
        format_expr(commutator(B_MINUS, anticommutator(B_PLUS, B_PLUS)))
        == "(-2/1)·b+ b+ b- + (2/1)·b- b+ b+"
    )


def test_margins():
    assert expr_margin(N_B, P2) == 1
    assert expr_margin(commutator(B_MINUS, anticommutator(B_PLUS, B_PLUS)), P2) == 2
    assert expr_margin(F_PLUS, P2) == 0


def test_compiled_matrix_shape():
    mat = compile_expr(B_PLUS, P2)
    assert mat.raise_degree == 1
    assert mat.m_max_out == 7
    assert mat.domain() == enumerate_basis(P2)
    mat0 = compile_expr(N_B, P2)
    assert mat0.m_max_out == 6
    for bv in mat0.domain():
        assert mat0.entry(bv, bv) == bv.m


def test_matrix_equal_on():
    a = compile_expr(anticommutator(B_PLUS, B_MINUS), P2)
    b = compile_expr(N_B.scaled(2) + OperatorExpr.identity().scaled(2), P2)
    assert a.equal_on(b, P2.m_max - 1)


# ---------------------------------------------------------------------------
# gradings
# ---------------------------------------------------------------------------


def test_atom_grades_and_theta():
    assert ATOM_GRADE[Generator.BPLUS] == (1, 0)
    assert ATOM_GRADE[Generator.FMINUS] == (0, 1)
    assert ATOM_GRADE[DerivedOp.QPLUS] == (1, 1)
    assert theta((1, 0), (1, 0)) == -1
    assert theta((1, 0), (0, 1)) == 1
    assert theta((1, 1), (1, 1)) == 1
    assert theta((0, 0), (1, 1)) == 1


@given(
    st.tuples(st.integers(0, 1), st.integers(0, 1)),
    st.tuples(st.integers(0, 1), st.integers(0, 1)),
)
def test_theta_symmetric(a, b):
    assert theta(a, b) == theta(b, a)
    assert theta(a, b) in (1, -1)


def test_grade_of_expr():
    assert grade_of_expr(B_PLUS) == (1, 0)
    assert grade_of_expr(F_MINUS) == (0, 1)
    assert grade_of_expr(Q_PLUS) == (1, 1)
    assert grade_of_expr(N_B) == (0, 0)
    assert grade_of_expr(B_PLUS + F_PLUS) is None
    assert grade_of_expr(OperatorExpr.zero()) == (0, 0)


def test_matrix_grade_shift():
    assert compile_expr(Q_PLUS, P2).grade_shift() == (1, 1)
    assert compile_expr(N_B, P2).grade_shift() == (0, 0)
    assert compile_expr(B_PLUS + F_PLUS, P2).grade_shift() is None


@given(st.integers(min_value=1, max_value=4))
def test_number_operators_commute_with_each_other(p):
    params = FockParams(p, 5)
    mat = compile_expr(commutator(N_B, N_F), params)
    for bv in enumerate_basis(FockParams(p, params.m_max - 2)):
        assert mat.apply(Vector.basis(bv)).is_zero()
