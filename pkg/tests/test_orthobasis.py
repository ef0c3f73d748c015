from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parafock.errors import DimensionZero, TruncationTooSmall
from parafock.fock import BasisVector, FockParams, Kind, Vector, enumerate_basis
from parafock.operators import Generator, N_S, apply_generator, compile_expr
from parafock.orthobasis import (
    InnerProductContext,
    cell_basis,
    csco_check,
    gram,
    gram_is_positive_definite,
    inner_product,
    orthonormal_basis,
)
from parafock.scalars import I, GaussianRational


def ctx_for(p, m_max):
    return InnerProductContext(FockParams(p, m_max))


def alpha(m, n):
    return BasisVector(m, n, Kind.ALPHA)


def beta(m, n):
    return BasisVector(m, n, Kind.BETA)


def test_vacuum_is_normalized():
    ctx = ctx_for(2, 4)
    v = Vector.basis(alpha(0, 0))
    assert inner_product(v, v, ctx) == 1


def test_first_bose_level_norm_is_p():
    for p in (1, 2, 3):
        ctx = ctx_for(p, 4)
        v = Vector.basis(alpha(1, 0))
        assert inner_product(v, v, ctx) == p


def test_gram_frozen():
    # transporting with b-f- gives <a,a> = p^2, <a,b> = p, <b,b> = p
    assert gram(1, 1, ctx_for(2, 4)) == (
        (GaussianRational.parse("4"), GaussianRational.parse("2")),
        (GaussianRational.parse("2"), GaussianRational.parse("2")),
    )
    assert gram(1, 1, ctx_for(3, 4)) == (
        (GaussianRational.parse("9"), GaussianRational.parse("3")),
        (GaussianRational.parse("3"), GaussianRational.parse("3")),
    )


def test_gram_positive_definite_across_cells():
    ctx = ctx_for(3, 5)
    for m in range(0, 5):
        for n in range(0, 4):
            mat = gram(m, n, ctx)
            assert gram_is_positive_definite(mat), (m, n)


def test_orthogonal_directions():
    ctx = ctx_for(2, 4)
    plus, minus = orthonormal_basis(1, 1, ctx)
    assert plus.sign == 1 and minus.sign == -1
    assert plus.direction == Vector.basis(alpha(1, 1))
    assert minus.direction == Vector.basis(alpha(1, 1)) - Vector.basis(
        beta(1, 1)
    ).scaled(2)
    assert plus.norm_sq == 4  # p^2
    assert minus.norm_sq == 4  # p^2 (p - 1)
    assert inner_product(plus.direction, minus.direction, ctx).is_zero()


def test_one_dimensional_cells_have_single_direction():
    ctx = ctx_for(2, 4)
    for m, n in ((0, 0), (3, 0), (2, 2), (0, 1)):
        dirs = orthonormal_basis(m, n, ctx)
        assert len(dirs) == 1
        assert dirs[0].sign == 1


def test_directions_diagonalize_the_parity_counter():
    params = FockParams(3, 6)
    ctx = InnerProductContext(params)
    mat = compile_expr(N_S, params)
    plus, minus = orthonormal_basis(2, 1, ctx)
    assert mat.apply(plus.direction) == plus.direction.scaled(Fraction(1, 2))
    assert mat.apply(minus.direction) == minus.direction.scaled(Fraction(-1, 2))


def test_cell_basis_guards_empty_cells():
    params = FockParams(2, 4)
    assert cell_basis(params, 1, 1) == [alpha(1, 1), beta(1, 1)]
    with pytest.raises(DimensionZero):
        cell_basis(params, 1, 3)


def test_csco_report():
    rep = csco_check(ctx_for(2, 6))
    assert rep.passed
    assert [c.passed for c in rep.commutators] == [True, True, True]
    assert rep.eigenvalues_ok
    assert rep.labels_unique
    assert rep.cells_checked == 27


def test_csco_needs_room():
    with pytest.raises(TruncationTooSmall):
        csco_check(ctx_for(2, 2))


def test_conjugate_linearity_in_first_slot():
    ctx = ctx_for(2, 4)
    v = Vector.basis(alpha(1, 1))
    w = Vector.basis(beta(1, 1))
    base = inner_product(v, w, ctx)
    assert inner_product(v.scaled(I), w, ctx) == base * I.conjugate()
    assert inner_product(v, w.scaled(I), ctx) == base * I


PARAMS = FockParams(2, 5)
BASIS = enumerate_basis(FockParams(2, 4))
CTX = InnerProductContext(PARAMS)


@given(st.sampled_from(BASIS), st.sampled_from(BASIS))
def test_raising_and_lowering_are_adjoint(u, w):
    uu = Vector.basis(u)
    ww = Vector.basis(w)
    lowered = inner_product(apply_generator(Generator.BMINUS, u, PARAMS), ww, CTX)
    raised = inner_product(uu, apply_generator(Generator.BPLUS, w, PARAMS), CTX)
    assert lowered == raised
    lowered_f = inner_product(apply_generator(Generator.FMINUS, u, PARAMS), ww, CTX)
    raised_f = inner_product(uu, apply_generator(Generator.FPLUS, w, PARAMS), CTX)
    assert lowered_f == raised_f


@given(st.sampled_from(BASIS), st.sampled_from(BASIS))
def test_hermitian_symmetry(u, w):
    a = inner_product(Vector.basis(u), Vector.basis(w), CTX)
    b = inner_product(Vector.basis(w), Vector.basis(u), CTX)
    assert a == b.conjugate()
