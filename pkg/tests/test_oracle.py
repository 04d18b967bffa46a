import itertools
import json
from collections import Counter

import pytest

from minweight import _kernel
from minweight.counting import m_w, weight_distribution
from minweight.errors import CapacityError, InvalidParameterError
from minweight.ff import field_of_order
from minweight.oracle import (
    SweepConfig,
    bound_sweep,
    boundary_sweep,
    default_grid,
    empirical_fixed_support_count,
    empirical_weight_distribution,
    enumerate_multiples,
    support_counts,
    sweep_report,
    verify,
)
from minweight.poly import Polynomial


def _int_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def _int_distribution(p, n, k):
    """Independent pure-int tally over prime fields."""
    h = [1]
    for _ in range(k):
        h = _int_mul(h, [1, 1], p)
    c = Counter()
    for g in itertools.product(range(p), repeat=n - k):
        f = _int_mul(h, list(g) + [1], p)
        c[sum(1 for x in f if x)] += 1
    return dict(sorted(c.items()))


def test_enumerate_multiples_f5():
    cfg = SweepConfig(5, 3, 1)
    polys = list(enumerate_multiples(cfg))
    assert len(polys) == 25 == len(set(polys))
    x1 = Polynomial(cfg.field, [1, 1])
    assert all(not (f % x1) and f.is_monic() and f.degree == 3 for f in polys)
    assert sorted(str(f) for f in polys if f.weight == 2) == ["x^3 + 1", "x^3 + 4*x", "x^3 + x^2"]


def test_enumerate_multiples_sizes():
    assert list(enumerate_multiples(SweepConfig(2, 4, 4))) == [Polynomial(field_of_order(2), [1, 1]) ** 4]
    assert sum(1 for _ in enumerate_multiples(SweepConfig(7, 5, 2))) == 343


def test_budget_is_a_precondition():
    with pytest.raises(CapacityError):
        SweepConfig(13, 12, 1)
    with pytest.raises(CapacityError):
        SweepConfig(5, 4, 1, budget=100)
    with pytest.raises(InvalidParameterError):
        SweepConfig(5, 2, 3)


@pytest.mark.parametrize("q,n,k", [(5, 3, 1), (4, 4, 2), (9, 4, 2), (8, 4, 1), (3, 5, 2), (7, 4, 1)])
def test_kernel_matches_slow_stream(q, n, k):
    cfg = SweepConfig(q, n, k)
    stream = list(enumerate_multiples(cfg))
    slow = Counter(f.weight for f in stream)
    dist = empirical_weight_distribution(cfg)
    assert dist.counts == dict(sorted(slow.items()))
    # witnesses are the first polynomial of each weight in stream order
    for w, text in dist.witnesses.items():
        assert text == str(next(f for f in stream if f.weight == w))
    supports = Counter(frozenset(i for i in range(n) if f[i]) for f in stream)
    assert {J: c for J, c in support_counts(cfg).items() if c} == dict(supports)


@pytest.mark.parametrize("p,n,k", [(5, 3, 1), (7, 5, 2), (5, 5, 2), (3, 3, 1), (11, 5, 1)])
def test_distribution_matches_int_oracle(p, n, k):
    assert empirical_weight_distribution(SweepConfig(p, n, k)).counts == _int_distribution(p, n, k)


def test_distribution_examples():
    assert empirical_weight_distribution(SweepConfig(5, 3, 1)).counts == {2: 3, 3: 9, 4: 13}
    assert empirical_weight_distribution(SweepConfig(5, 3, 3)).counts == {4: 1}
    d = empirical_weight_distribution(SweepConfig(5, 5, 2))
    assert d.total == 125 and sum(c for w, c in d.counts.items() if w <= 3) == 7


def test_fixed_support_examples():
    assert empirical_fixed_support_count(SweepConfig(5, 3, 1), {0}) == 1
    assert empirical_fixed_support_count(SweepConfig(5, 3, 1), {1, 2}) == 3 == m_w(5, 1, 3)
    assert empirical_fixed_support_count(SweepConfig(5, 3, 2), set()) == 0
    with pytest.raises(InvalidParameterError):
        empirical_fixed_support_count(SweepConfig(5, 3, 1), {3})


@pytest.mark.parametrize("q", [5, 7, 25])
def test_support_independence(q):
    p = field_of_order(q).p
    for n in range(1, min(p, 6)):
        for k in range(1, n + 1):
            if q ** (n - k) > 10**5:
                continue
            counts = support_counts(SweepConfig(q, n, k))
            for J, c in counts.items():
                assert c == m_w(q, k, len(J) + 1), (n, k, sorted(J))


def test_formula_agreement_small_grid():
    for cfg in default_grid(qs=(5, 7, 25), budget=10**4):
        emp = empirical_weight_distribution(cfg)
        assert emp.counts == weight_distribution(cfg.q, cfg.n, cfg.k).counts
        assert verify(cfg).ok


def test_verify_message():
    v = verify(SweepConfig(7, 5, 2))
    assert v.ok and v.message() == "formula matches enumeration (343 polynomials)"
    assert verify(SweepConfig(13, 12, 10), per_support=False).ok


def test_verify_requires_regime():
    with pytest.raises(InvalidParameterError):
        verify(SweepConfig(5, 5, 2))


def test_bound_sweep_p2():
    r = bound_sweep(2, 10)
    assert r.violations == [] and r.ok
    assert r.rows[3]["min_weight"] == 4 and r.rows[3]["witness"] == "x^3 + x^2 + x + 1"
    assert r.rows[4]["min_weight"] == 2 and r.rows[4]["witness"] == "x^4 + 1"
    assert set(r.rows) == set(range(1, 11))


def test_bound_sweep_p3():
    r = bound_sweep(3, 6)
    assert r.violations == [] and r.ok


def test_bound_sweep_counts_every_polynomial():
    # each monic f of degree d >= 1 over F_2 with f(1) = 0 is counted once
    r = bound_sweep(2, 8)
    assert sum(row["count"] for row in r.rows.values()) == sum(2 ** (d - 1) for d in range(1, 9))


def test_bound_sweep_budget():
    with pytest.raises(CapacityError):
        bound_sweep(3, 14, budget=1000)


def test_boundary_sweep():
    for p in (3, 5):
        for k in range(1, p):
            b = boundary_sweep(p, k)
            assert b.low_weight == len(list(
                f for f in enumerate_multiples(SweepConfig(p, p, k)) if f.weight <= k + 1
            ))
            assert b.low_weight_constant_nonzero == 1


def test_partitioned_tally_equals_single():
    sweep = _kernel.CofactorSweep(5, 1, (1, 2, 1), 4)
    single = _kernel.tally_range(sweep, 0, sweep.size, supports=True)
    merged = _kernel.Tally()
    for lo, hi in reversed(sweep.partitions()):
        merged.merge(_kernel.tally_range(sweep, lo, hi, supports=True))
    assert merged == single


def test_reports_deterministic_across_workers():
    cfg1 = SweepConfig(7, 5, 1, partitions=1)
    cfg4 = SweepConfig(7, 5, 1, partitions=4)
    a = json.dumps(sweep_report(cfg1), sort_keys=True)
    assert a == json.dumps(sweep_report(cfg1), sort_keys=True)
    assert a == json.dumps(sweep_report(cfg4), sort_keys=True)
    b1 = json.dumps(bound_sweep(2, 9, workers=1).to_json(), sort_keys=True)
    b4 = json.dumps(bound_sweep(2, 9, workers=4).to_json(), sort_keys=True)
    assert b1 == b4


def test_report_timing_opt_in():
    assert "wall_time_ms" not in sweep_report(SweepConfig(5, 3, 1))
    assert "wall_time_ms" in sweep_report(SweepConfig(5, 3, 1), timing=True)
