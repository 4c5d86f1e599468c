import pytest

from cp2trisect.catalog import build_cp2_9, build_rp2_6, build_t2_7
from cp2trisect.labels import original
from cp2trisect.subdivision import relative_subdivide
from cp2trisect.trisection import trisect


@pytest.fixture(scope="session")
def cp2():
    return build_cp2_9()


@pytest.fixture(scope="session")
def rp2():
    return build_rp2_6()


@pytest.fixture(scope="session")
def t27():
    return build_t2_7()


@pytest.fixture(scope="session")
def sub(cp2):
    return relative_subdivide(cp2, [original(i) for i in (1, 4, 7)])


@pytest.fixture(scope="session")
def tri(sub):
    return trisect(sub)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import CRITERIA

    outcome = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            name = getattr(rep, "nodeid", "").rsplit("::", 1)[-1]
            if not name.startswith("test_criterion_"):
                continue
            if rep.when == "call" or key == "error":
                outcome.setdefault(name, "PASS" if key == "passed" else "FAIL")
    if not outcome:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        status = outcome.get(f"test_criterion_{n:02d}", "NOT RUN")
        terminalreporter.write_line(f"criterion {n:2d} {title}: {status}")
