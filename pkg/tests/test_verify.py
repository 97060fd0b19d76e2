import numpy as np
import pytest

from edgerake.verify import SUITES, SuiteReport, random_graph, run_suite


@pytest.mark.parametrize("name", SUITES)
def test_suites_pass(name):
    rep = run_suite(name, n=12, trials=15, seed=1)
    assert rep.ok, rep.violations
    assert rep.trials == 15


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_report_records_violations():
    rep = SuiteReport("x")
    rep.record(0, "thing", 1e-3, 1e-6)
    rep.record(1, "thing", 1e-9, 1e-6)
    assert not rep.ok
    assert rep.max_error == 1e-3
    assert "1 violation" in rep.summary()
    # NaN never passes
    rep = SuiteReport("y")
    rep.record(0, "nan", float("nan"), 1.0)
    assert not rep.ok


def test_random_graph_no_dangling_targets(rng):
    for _ in range(20):
        g = random_graph(rng, 10, p=0.1, directed=True, ensure_out_edges=True)
        out = np.bincount(g.tail, minlength=g.n)
        assert np.all(out[g.head] > 0)


def test_random_graph_shapes(rng):
    g = random_graph(rng, 6, p=0.0, min_edges=3, weighted=True)
    assert g.m == 3 and g.n == 6
    assert np.all((g.weight >= 0.2) & (g.weight <= 5.0))
    assert not g.directed
