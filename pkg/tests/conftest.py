from itertools import product

import pytest

from weakfubini import fubini

_UFR_CACHE = {}


def unit_fubini_set(n):
    """{a in [n]^n : is_unit_fubini(a)} by exhaustive scan, cached per session."""
    if n not in _UFR_CACHE:
        _UFR_CACHE[n] = {
            a for a in product(range(1, n + 1), repeat=n) if fubini.is_unit_fubini(a)
        }
    return _UFR_CACHE[n]


@pytest.fixture(scope="session")
def ufr_sets():
    return unit_fubini_set


_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1].split("[")[0]
        ok = _acceptance.get(name, True) and report.outcome == "passed"
        _acceptance[name] = ok


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in _acceptance.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
