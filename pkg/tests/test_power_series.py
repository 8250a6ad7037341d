import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import partition_count
from selfsim_lie.lie import theorem_rank
from selfsim_lie.power_series import (
    IntSeries,
    basis_product,
    closed_form_check,
    growth_bound,
    hardy_ramanujan,
    jennings_product,
    partition_sums,
    partitions,
    series_report,
)
from selfsim_lie.series import ranks


def test_partitions_match_enumeration():
    assert partitions(4) == [1, 1, 2, 3, 5]
    assert partitions(0) == [1]
    assert partitions(25) == [partition_count(n) for n in range(26)]
    assert sum(partitions(4)) == 12


def test_partitions_are_big_integers():
    p = partitions(1000)
    assert p[1000] == 24061467864032622473692149727991
    assert p[1000] > 2**64


def test_jennings_examples():
    assert jennings_product(lambda n: 0, 8) == IntSeries.one(8)
    assert jennings_product(None, 4)[4] == 12
    # (1+h)^2 (1+h^2)^3 (1+h^3) (1+h^4)^4, expanded directly
    s = IntSeries.one(4)
    for n, l in [(1, 2), (2, 3), (3, 1), (4, 4)]:
        for _ in range(l):
            s = s * IntSeries.from_list([1] + [0] * (n - 1) + [1], 4)
    assert s == jennings_product([2, 3, 1, 4], 4)


def test_three_way_agreement():
    assert closed_form_check(1)
    assert closed_form_check(64)
    assert list(jennings_product(None, 10).coefficients) == [1, 2, 4, 7, 12, 19, 30, 45, 67, 97, 139]
    assert jennings_product(None, 64) == basis_product(64) == partition_sums(64)


def test_perturbation_is_detected():
    bumped = lambda n: theorem_rank(n) + (n == 3)
    assert not closed_form_check(10, bumped)
    assert closed_form_check(2, bumped)  # the perturbation is invisible below degree 3


def test_growth_bound():
    g = growth_bound(10)
    assert g[0] == 1 and g[2] == 7
    assert all(a < b for a, b in zip(g, g[1:]))
    with pytest.raises(ValueError):
        growth_bound(-1)


def test_measured_ranks_within_trusted_prefix(series_cache):
    r = ranks(series_cache(7), series_cache(6))
    M = r.trusted_prefix
    assert M >= 3
    assert jennings_product(r, M) == partition_sums(M)


def test_report():
    rep = series_report(5)
    assert rep["dims"] == [1, 2, 4, 7, 12, 19]
    assert rep["cumulative"] == growth_bound(5)
    assert rep["hardyRamanujan"][0] == hardy_ramanujan(0) == 1.0


def test_missing_ranks():
    with pytest.raises(ValueError):
        jennings_product([2, 3], 4)


series = st.lists(st.integers(-50, 50), min_size=9, max_size=9).map(lambda c: IntSeries(tuple(c)))


@given(series, series, series)
def test_multiplication_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * IntSeries.one(8) == a
    assert a * (b + c) == a * b + a * c


def test_truncation_orders_must_match():
    with pytest.raises(ValueError):
        IntSeries.one(3) * IntSeries.one(4)
