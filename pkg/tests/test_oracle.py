import pytest

from minenum.model import build_graph
from minenum.oracle import (
    OracleTooLarge,
    audit_run,
    brute_minimal_sets,
    brute_restricted_family,
    size_bound,
)
from minenum.registry import make_property

from helpers import complete, cycle, es, path, vs

P3_VC = make_property("vc", path(3))


def test_brute_examples():
    assert brute_minimal_sets(P3_VC) == [vs(1), vs(0, 2)]
    assert brute_minimal_sets(make_property("vc", build_graph(3, []))) == [vs()]
    assert brute_minimal_sets(make_property("eds", path(4))) == [es(1), es(0, 2)]
    assert brute_minimal_sets(P3_VC, size_cap=1) == [vs(1)]


def test_guard():
    with pytest.raises(OracleTooLarge):
        brute_minimal_sets(make_property("vc", build_graph(21, [])))


def test_antichain_and_symmetry():
    for g in (complete(5), cycle(6)):
        family = brute_minimal_sets(make_property("vc", g))
        assert not any(a != b and a.issubset(b) for a in family for b in family)
    # rotating C6 maps the family onto itself
    family = set(brute_minimal_sets(make_property("ds", cycle(6))))
    assert {vs(*((v + 1) % 6 for v in s)) for s in family} == family


def test_restricted_family():
    assert brute_restricted_family(P3_VC, 2, vs(1), 1) == [vs(0, 2)]
    assert brute_restricted_family(P3_VC, 1, vs(1), 1) == []


def test_audit_green():
    r = audit_run(P3_VC, 2, 3, [vs(1), vs(0, 2)])
    assert r.ok and r.observed_factor == 1


def test_audit_missing():
    r = audit_run(P3_VC, 2, 3, [vs(1)])
    assert not r.complete and r.missing == [vs(0, 2)]


def test_audit_non_minimal():
    r = audit_run(P3_VC, 2, 3, [vs(0, 1)])
    assert not r.all_minimal and r.offenders == [vs(0, 1)]


def test_audit_duplicates_and_factor():
    r = audit_run(P3_VC, 1, 1, [vs(1), vs(1), vs(0, 2)])
    assert not r.no_duplicates and not r.factor_ok
    assert r.observed_factor == 2


def test_size_bound_is_ceiling():
    assert size_bound(3, 2) == 6
    assert size_bound(2.5, 1) == 3
