import pytest

from parafock.errors import ConfigError, TruncationTooSmall
from parafock.fock import BasisVector, FockParams, Kind, Vector
from parafock.operators import B_MINUS, B_PLUS, OperatorExpr, commutator
from parafock.relations import (
    Relation,
    catalog,
    defining_relation_names,
    relation_margin,
    support_strongly_connected,
    verify_relation,
    verify_suite,
)


def test_catalog_family_counts():
    names = sorted(catalog(2))
    by_family = {}
    for name in names:
        by_family.setdefault(name.split(".")[0], []).append(name)
    assert len(by_family["mixed"]) == 24
    assert len(by_family["pure"]) == 8
    assert len(by_family["rewritten"]) == 8
    assert len(by_family["lsbracket"]) == 96
    assert len(by_family["gl11"]) == 10
    assert len(by_family["nilpotency"]) == 3
    assert len(by_family["fock"]) == 6
    assert len(names) == 155


def test_defining_relation_names():
    names = defining_relation_names()
    assert len(names) == 32
    assert names == [f"mixed.{i:02d}" for i in range(1, 25)] + [
        f"pure.{i:02d}" for i in range(1, 9)
    ]


def test_verify_single_relation_frozen():
    rep = verify_relation(catalog(2)["mixed.05"], FockParams(2, 6))
    assert rep.margin == 1
    assert rep.checked == 23  # every basis vector with m <= 5
    assert rep.passed
    assert rep.failures == []


def test_vacuum_relations_check_one_vector():
    rep = verify_relation(catalog(2)["fock.b-minus-b-plus"], FockParams(2, 6))
    assert rep.checked == 1
    assert rep.passed


def test_report_json_shape():
    rep = verify_relation(catalog(2)["pure.01"], FockParams(2, 6))
    doc = rep.to_json()
    assert doc["relation"] == "pure.01"
    assert doc["pass"] is True
    assert doc["failures"] == []
    assert set(doc) == {
        "relation",
        "p",
        "m_max",
        "margin",
        "checked",
        "pass",
        "failures",
    }


def test_margin_accounts_for_raising_letters():
    params = FockParams(2, 6)
    assert relation_margin(catalog(2)["pure.04"], params) == 2  # stacked raising
    assert relation_margin(catalog(2)["mixed.05"], params) == 1


def test_truncation_too_small():
    with pytest.raises(TruncationTooSmall):
        verify_relation(catalog(2)["pure.04"], FockParams(2, 1))


def test_false_relation_reports_residuals():
    # claim [b-, b+] = 1, which is off by p - 1 already at the vacuum
    bogus = Relation("bogus", commutator(B_MINUS, B_PLUS), OperatorExpr.identity())
    rep = verify_relation(bogus, FockParams(2, 6))
    assert not rep.passed
    vacuum = BasisVector(0, 0, Kind.ALPHA)
    residuals = dict(rep.failures)
    assert residuals[vacuum] == Vector.basis(vacuum)


def test_verify_on_supplied_vectors():
    params = FockParams(2, 6)
    rel = catalog(2)["mixed.06"]
    picks = [BasisVector(1, 1, Kind.BETA), BasisVector(3, 2, Kind.ALPHA)]
    rep = verify_relation(rel, params, vectors=picks)
    assert rep.checked == 2
    assert rep.passed


@pytest.mark.parametrize("p", [1, 2, 3])
def test_whole_catalog_holds(p):
    reports = verify_suite(FockParams(p, 8))
    assert len(reports) == 155
    assert all(r.passed for r in reports)


def test_suite_subset_and_order():
    names = ["pure.02", "mixed.01", "gl11.06"]
    reports = verify_suite(FockParams(2, 6), names=names)
    assert [r.relation for r in reports] == names


def test_suite_unknown_name():
    with pytest.raises(ConfigError):
        verify_suite(FockParams(2, 6), names=["mixed.99"])


def test_parallel_suite_matches_serial():
    params = FockParams(2, 6)
    names = ["mixed.01", "mixed.05", "pure.04", "nilpotency.qplus"]
    serial = verify_suite(params, names=names, jobs=1)
    parallel = verify_suite(params, names=names, jobs=2)
    assert [r.to_json() for r in serial] == [r.to_json() for r in parallel]


@pytest.mark.parametrize("p", [1, 2, 3])
def test_ladder_support_is_strongly_connected(p):
    assert support_strongly_connected(FockParams(p, 8))


def test_connectivity_needs_interior():
    with pytest.raises(TruncationTooSmall):
        support_strongly_connected(FockParams(2, 1))
