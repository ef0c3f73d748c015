from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parafock.errors import ConfigError
from parafock.fock import (
    BasisVector,
    FockParams,
    Kind,
    Vector,
    Z2Scheme,
    canonicalize,
    enumerate_basis,
    grade_z2,
    grade_z2z2,
    subspace_dimension,
)
from parafock.scalars import GaussianRational


def test_params_validation():
    FockParams(1, 0)
    with pytest.raises(ConfigError):
        FockParams(0, 4)
    with pytest.raises(ConfigError):
        FockParams(2, -1)


def test_subspace_dimensions():
    params = FockParams(2, 5)
    assert subspace_dimension(params, 0, 0) == 1
    assert subspace_dimension(params, 0, 1) == 1
    assert subspace_dimension(params, 3, 0) == 1
    assert subspace_dimension(params, 3, 2) == 1  # n == p folds beta away
    assert subspace_dimension(params, 3, 1) == 2
    assert subspace_dimension(params, 3, 7) == 0
    assert subspace_dimension(params, -1, 0) == 0


def test_enumerate_basis_frozen_small():
    # p=2, m_max=1: every cell listed by hand
    got = enumerate_basis(FockParams(2, 1))
    assert got == [
        BasisVector(0, 0, Kind.ALPHA),
        BasisVector(0, 1, Kind.ALPHA),
        BasisVector(0, 2, Kind.ALPHA),
        BasisVector(1, 0, Kind.ALPHA),
        BasisVector(1, 1, Kind.ALPHA),
        BasisVector(1, 1, Kind.BETA),
        BasisVector(1, 2, Kind.ALPHA),
    ]


def test_enumerate_basis_count_p3():
    # m=0 row has 4 states, each m >= 1 row has 1+2+2+1 = 6
    basis = enumerate_basis(FockParams(3, 2))
    assert len(basis) == 16
    assert sum(1 for v in basis if v.kind is Kind.BETA) == 4


def test_enumeration_is_sorted_and_canonical():
    basis = enumerate_basis(FockParams(3, 4))
    assert basis == sorted(basis)
    for v in basis:
        if v.kind is Kind.BETA:
            assert v.m >= 1 and 1 <= v.n <= 2


@given(st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=8))
def test_count_matches_dimension_sum(p, m_max):
    params = FockParams(p, m_max)
    total = sum(
        subspace_dimension(params, m, n)
        for m in range(m_max + 1)
        for n in range(p + 1)
    )
    assert len(enumerate_basis(params)) == total


def test_canonicalize_out_of_range_is_zero():
    params = FockParams(2, 4)
    assert canonicalize(0, 3, Kind.ALPHA, params).is_zero()
    assert canonicalize(0, -1, Kind.ALPHA, params).is_zero()
    assert canonicalize(-1, 0, Kind.ALPHA, params).is_zero()


def test_canonicalize_degenerate_beta_vanishes():
    params = FockParams(2, 4)
    assert canonicalize(0, 1, Kind.BETA, params).is_zero()
    assert canonicalize(3, 0, Kind.BETA, params).is_zero()


def test_canonicalize_folds_top_beta():
    # at n == p the second state collapses onto the first with weight 1/p
    params = FockParams(3, 4)
    v = canonicalize(2, 3, Kind.BETA, params)
    assert v == Vector.basis(BasisVector(2, 3, Kind.ALPHA)).scaled(Fraction(1, 3))


def test_canonicalize_interior_beta_survives():
    params = FockParams(3, 4)
    v = canonicalize(2, 1, Kind.BETA, params)
    assert v == Vector.basis(BasisVector(2, 1, Kind.BETA))


def test_basis_vector_json_round_trip():
    v = BasisVector(3, 1, Kind.BETA)
    assert BasisVector.from_json(v.to_json()) == v
    assert str(v) == "beta(3,1)"
    assert str(BasisVector(0, 2, Kind.ALPHA)) == "alpha(0,2)"


def test_kind_labels():
    assert Kind.from_label("alpha") is Kind.ALPHA
    assert Kind.from_label("beta") is Kind.BETA
    with pytest.raises(ConfigError):
        Kind.from_label("gamma")


def test_vector_arithmetic():
    a = BasisVector(1, 0, Kind.ALPHA)
    b = BasisVector(2, 1, Kind.BETA)
    v = Vector.basis(a) + Vector.basis(b).scaled(3)
    w = v - Vector.basis(a)
    assert w == Vector.basis(b).scaled(3)
    assert (v - v).is_zero()
    assert v.coefficient(b) == GaussianRational.coerce(3)
    assert v.coefficient(BasisVector(5, 0, Kind.ALPHA)).is_zero()
    assert v.max_m() == 2
    assert Vector.zero().max_m() == -1


def test_vector_drops_cancelled_terms():
    a = BasisVector(1, 1, Kind.ALPHA)
    v = Vector.basis(a) + Vector.basis(a).scaled(-1)
    assert v.is_zero()
    assert v.support() == set()


def test_grades():
    assert grade_z2z2(BasisVector(2, 1, Kind.ALPHA)) == (0, 1)
    assert grade_z2z2(BasisVector(3, 3, Kind.BETA)) == (1, 1)
    v = BasisVector(3, 2, Kind.ALPHA)
    assert grade_z2(v, Z2Scheme.ROWS_EVEN_FIRST) == 1
    assert grade_z2(v, Z2Scheme.ROWS_ODD_FIRST) == 0
    assert grade_z2(v, Z2Scheme.COLS_EVEN_FIRST) == 0
    assert grade_z2(v, Z2Scheme.COLS_ODD_FIRST) == 1
