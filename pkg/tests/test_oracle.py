import json
from collections import Counter
from math import factorial

import pytest

from weakfubini import counting, oracle
from weakfubini import weak_order as W
from weakfubini.errors import CapExceeded
from weakfubini.perm import Permutation


def test_brute_tuples_examples():
    assert list(oracle.brute_tuples(2, "unit-fubini")) == [(1, 1), (1, 2), (2, 1)]
    assert sum(1 for _ in oracle.brute_tuples(3, "unit-fubini")) == 12
    assert list(oracle.brute_tuples(1, "parking")) == [(1,)]


def test_brute_tuples_errors():
    with pytest.raises(KeyError):
        list(oracle.brute_tuples(3, "nonsense"))
    with pytest.raises(CapExceeded):
        list(oracle.brute_tuples(8, "parking"))


def test_brute_tuples_parallel_matches_serial():
    serial = list(oracle.brute_tuples(6, "unit-fubini"))
    assert list(oracle.brute_tuples(6, "unit-fubini", workers=2)) == serial
    assert len(serial) == len(set(serial)) == 3690


@pytest.mark.parametrize("n", range(1, 6))
def test_brute_intervals_match_production(n):
    brute = list(oracle.brute_boolean_intervals(n))
    assert len(brute) == len(set(brute))
    production = {(b.min, b.max, b.rank) for b in W.enumerate_boolean_intervals(n)}
    assert set(brute) == production
    assert sum(1 for *_, k in brute if k == 0) == factorial(n)


def test_brute_interval_examples():
    assert len(list(oracle.brute_boolean_intervals(3))) == 12
    ranks = Counter(k for *_, k in oracle.brute_boolean_intervals(4))
    assert ranks[2] == 6
    with pytest.raises(CapExceeded):
        next(oracle.brute_boolean_intervals(6))


def test_boolean_rank_rejects_chain_and_hexagon():
    elements, up_cover, up = oracle.weak_order_closure(3)
    bottom, top = (1, 2, 3), (3, 2, 1)
    assert oracle.boolean_rank(up[bottom], bottom, up_cover) is None
    chain = {(1, 2, 3), (1, 3, 2), (3, 1, 2)}
    assert oracle.boolean_rank(chain, bottom, up_cover) is None
    assert oracle.boolean_rank({bottom, (2, 1, 3)}, bottom, up_cover) == 1


def test_naive_predicates():
    assert oracle.oracle_fubini((3, 1, 5, 1, 3))
    assert not oracle.oracle_fubini((3, 1, 5, 1, 2))
    assert oracle.oracle_unit_fubini((4, 2, 2, 1))
    assert not oracle.oracle_unit_fubini((4, 1, 1, 1))
    assert oracle.naive_spots((1, 5, 4, 6, 6, 3, 7)) is None


@pytest.mark.parametrize("n,ufr", [(3, 12), (4, 66), (5, 450)])
def test_verify_suite(n, ufr):
    report = oracle.verify_suite(n)
    assert report.all_passed, report.to_table()
    assert not report.skipped
    by_name = {c.name: c for c in report.checks}
    assert by_name["unit Fubini count = f(n)"].actual == ufr
    data = json.loads(report.to_json())
    assert data["all_pass"] and len(data["checks"]) == len(report.checks)
    assert "ALL PASS" in report.to_table()


def test_verify_suite_skips_intervals_above_cap():
    report = oracle.verify_suite(6)
    assert report.all_passed
    assert report.skipped == ["Boolean interval oracle"]


def test_report_failure_flag():
    report = oracle.VerificationReport(3, [oracle.Check("x", 1, 2)])
    assert not report.all_passed
    assert "FAIL" in report.to_table()


def test_verify_cap():
    with pytest.raises(CapExceeded):
        oracle.verify_suite(8)
