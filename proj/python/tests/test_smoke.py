import pytest

import ghsub
from ghsub import Interval, IVector, Ivf


def test_interval_ops():
    a, b = Interval(1, 2), Interval(3, 5)
    assert a + b == Interval(4, 7)
    assert b - a == Interval(1, 4)
    assert ghsub.gh_diff(a, a) == Interval(0, 0)
    assert -1.0 * a == Interval(-2, -1)
    assert ghsub.norm(Interval(-3, 1)) == 3
    assert ghsub.compare(Interval(2, 4), Interval(3, 15)) == "STRICTLY_DOMINATES"
    assert ghsub.compare(Interval(4, 45), Interval(17, 44)) == "INCOMPARABLE"
    assert tuple(ghsub.parse_interval("[-1,2]")) == (-1, 2)


def test_errors_carry_codes():
    with pytest.raises(ghsub.GhsubError) as e:
        Interval(2, 1)
    assert e.value.code == "InvalidInterval"
    with pytest.raises(ghsub.GhsubError) as e:
        Interval(1, 2) / Interval(-1, 1)
    assert e.value.code == "ZeroInDenominator"
    with pytest.raises(ghsub.GhsubError) as e:
        Ivf.parse("[1,2]*x1 + * 3", [(0, 1)])
    assert e.value.code == "ParseError"
    assert e.value.column == 12


def test_vectors():
    v = IVector([Interval(1, 2), Interval(-1, 0)])
    assert len(v) == 2
    assert ghsub.dot([1, -1], v) == Interval(1, 3)
    assert ghsub.w_map(v) == [1.5, -0.5]
    assert ghsub.vec_norm(IVector([Interval(3), Interval(-4)])) == 5


def test_quartic_subgradients():
    f = ghsub.catalog.quartic()
    assert f(1.0) == Interval(2, 41)
    g = ghsub.gh_gradient(f, [1.0])
    assert abs(g[0].lo - 2) < 1e-6 and abs(g[0].hi - 4) < 1e-6
    ok, witness = ghsub.is_subgradient(f, IVector([Interval(2, 4)]), [1.0])
    assert ok and witness is None
    ok, witness = ghsub.is_subgradient(f, IVector([Interval(2, 4)]), [1.0], strict=True)
    assert not ok and witness == [2.0]


def test_scan_and_directional_max():
    f = ghsub.catalog.abs13()
    r = ghsub.subdiff_scan_1d(f, 0.0, (-4, 2, 60), (-2, 4, 60))
    assert r.marked_count > 0
    for g in r.marked_candidates():
        lo, hi = g[0]
        assert -3 <= lo <= 1 and -1 <= hi <= 3
    m, d, ok = ghsub.directional_max(f, [0.0], [1.0], r)
    assert ok and abs(m.lo - 1) < 1e-6 and abs(m.hi - 3) < 1e-6
    assert r.to_csv().startswith("g_lo,g_hi,feasible\n")


def test_optimization():
    f = ghsub.catalog.parabolas()
    rows = ghsub.efficient_on_grid(f, 301)
    flagged = [x[0] for x, _, eff in rows if eff]
    assert min(flagged) == pytest.approx(0, abs=0.011) and max(flagged) == pytest.approx(1, abs=0.011)
    assert not ghsub.optimality_zero_condition(f, [0.5])
    assert ghsub.optimality_zero_condition(ghsub.catalog.kink(), [2.0], 321)
    r = ghsub.scalarized_descent(f, [2.0])
    assert -0.05 <= r["best_x"][0] <= 1.05
    assert ghsub.smoothed_nonincreasing(r["scalarized"])


def test_two_dimensional_ivf():
    f = Ivf.parse("[1,2]*pow2(x1) + pow2(x2)", [(-1, 1), (-1, 1)])
    assert f.arity == 2
    assert f([1.0, 1.0]) == Interval(2, 3)
    g = ghsub.gh_gradient(f, [0.5, 0.25])
    assert abs(g[0].lo - 1) < 1e-6 and abs(g[1].hi - 0.5) < 1e-6
    assert ghsub.chain_rule_transport([[1.0], [1.0]], IVector([Interval(1, 2), Interval(0, 1)])) == IVector([Interval(1, 3)])
    assert ghsub.operator_norm(IVector([Interval(1, 3)])) == 3
