import pytest

from cp2trisect.verify import TARGETS, run_target


@pytest.mark.parametrize("target", [t for t in TARGETS if t != "plmap"])
def test_every_target_passes(target):
    rows = run_target(target, samples=500)
    assert rows
    assert all(r.passed for r in rows), [r for r in rows if not r.passed]


def test_plmap_target_small():
    rows = run_target("plmap", samples=100, sections=16)
    assert all(r.passed for r in rows)


def test_trisection_table_has_thirteen_rows():
    assert len(run_target("trisection")) == 13


def test_unknown_target():
    with pytest.raises(ValueError):
        run_target("moebius")
