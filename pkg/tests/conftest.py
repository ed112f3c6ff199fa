import pytest
from hypothesis import settings

from groupalg import grp
from groupalg.algebra import GroupAlgebra
from groupalg.gf import make_field
from groupalg.unitgrp import enumerate_V

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def qd16():
    return grp.qd_group(4)


@pytest.fixture(scope="session")
def qd32():
    return grp.qd_group(5)


@pytest.fixture(scope="session")
def f2qd16(qd16):
    return GroupAlgebra(make_field(2), qd16)


@pytest.fixture(scope="session")
def f2qd32(qd32):
    return GroupAlgebra(make_field(2), qd32)


@pytest.fixture(scope="session")
def f3qd16(qd16):
    return GroupAlgebra(make_field(3), qd16)


@pytest.fixture(scope="session")
def V16(f2qd16):
    """1 + J(F_2[QD_16]), enumerated once per session."""
    return enumerate_V(f2qd16)


# -- acceptance summary: one line per criterion ---------------------------------

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    n, title = marker.args
    entry = _CRITERIA.setdefault(n, {"title": title, "failed": [], "count": 0})
    entry["count"] += 1
    if call.excinfo is not None:
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        e = _CRITERIA[n]
        status = "FAIL" if e["failed"] else "PASS"
        line = f"criterion {n:>2} [{status}] {e['title']} ({e['count'] - len(e['failed'])}/{e['count']} checks)"
        if e["failed"]:
            line += "  failing: " + ", ".join(e["failed"])
        tr.write_line(line)
