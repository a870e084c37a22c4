import pytest

from rexlab.oracle import RexCache
from rexlab.suites import FAIL, INCONCLUSIVE, PASS, SUITES, SuiteContext, SuiteReport


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_has_no_failures(name):
    rep = SUITES[name](SuiteContext())
    assert rep.rows
    assert rep.ok, rep.table()
    assert all(row.anchor for row in rep.rows)


def test_report_totals_and_json():
    rep = SuiteReport("demo")
    rep.add("a", "x", 1, 1)
    rep.add("b", "x", 1, 2)
    rep.add("c", "x", 1, None, INCONCLUSIVE)
    assert rep.totals() == {PASS: 1, FAIL: 1, INCONCLUSIVE: 1}
    assert not rep.ok
    assert rep.to_json()["totals"][FAIL] == 1
    assert "1 fail" in rep.table()


def test_context_uses_cache(tmp_path):
    cache = RexCache(tmp_path / "c.jsonl")
    ctx = SuiteContext(cache=cache)
    SUITES["turan-regular"](ctx)
    rows = list(cache.rows())
    assert len(rows) == 2
    SUITES["turan-regular"](ctx)  # second run served from cache
    assert len(list(cache.rows())) == 2


def test_budget_gives_inconclusive():
    rep = SUITES["paths"](SuiteContext(budget=2), n_min=12, n_max=12)
    assert rep.ok
    assert rep.totals()[INCONCLUSIVE] == 1
