"""Closed-form constructors and formulas for the two parametric families."""

from __future__ import annotations

from collections import Counter

import pytest

from aperycone import (
    ArslanParams,
    BresinskyParams,
    ParamTooSmallError,
    apery_set,
    apery_table,
    arslan,
    arslan_apery_closed_form,
    bresinsky,
    bresinsky_apery_closed_form,
    detect_family,
    family_apery_closed_form,
    family_block_layout,
    family_orders_closed_form,
    family_table_closed_form,
    new_semigroup,
    order,
    order_census_closed_form,
    reduction_number,
    verify_uniqueness,
)

BRESINSKY_RANGE = range(2, 6)
ARSLAN_RANGE = range(2, 7)


def _member(params):
    if isinstance(params, BresinskyParams):
        return bresinsky(params.h)
    return arslan(params.m)


def _pid(params):
    if isinstance(params, BresinskyParams):
        return f"h{params.h}"
    return f"m{params.m}"


def test_generators_known_values():
    assert bresinsky(2).generators == (12, 15, 20, 23)
    assert bresinsky(3).generators == (30, 35, 42, 47)
    assert arslan(2).generators == (6, 7, 9, 10)
    assert arslan(4).generators == (20, 21, 25, 26)


def test_parameter_lower_bounds():
    for bad in (1, 0, -3):
        with pytest.raises(ParamTooSmallError):
            BresinskyParams.from_h(bad)
        with pytest.raises(ParamTooSmallError):
            ArslanParams.from_m(bad)


def test_top_order_and_prefix():
    assert BresinskyParams.from_h(4).top_order == 7
    assert BresinskyParams.from_h(4).block_prefix == "T"
    assert ArslanParams.from_m(4).top_order == 4
    assert ArslanParams.from_m(4).block_prefix == "A"


def test_apery_closed_form_known_sets():
    assert bresinsky_apery_closed_form(2).elements == (
        0, 15, 20, 23, 30, 38, 40, 43, 45, 46, 53, 61,
    )
    assert arslan_apery_closed_form(2).elements == (0, 7, 9, 10, 14, 17)


def test_apery_closed_form_matches_generic():
    for h in BRESINSKY_RANGE:
        closed = bresinsky_apery_closed_form(h)
        generic = apery_set(bresinsky(h))
        assert closed == generic
        assert len(closed.elements) == 2 * h * (2 * h - 1)
    for m in ARSLAN_RANGE:
        closed = arslan_apery_closed_form(m)
        generic = apery_set(arslan(m))
        assert closed == generic
        assert len(closed.elements) == m * (m + 1)


def test_family_apery_closed_form_dispatches():
    assert family_apery_closed_form(BresinskyParams.from_h(3)) == apery_set(bresinsky(3))
    assert family_apery_closed_form(ArslanParams.from_m(3)) == apery_set(arslan(3))


@pytest.mark.parametrize(
    "params",
    [BresinskyParams.from_h(h) for h in (2, 3, 4)]
    + [ArslanParams.from_m(m) for m in (2, 3, 4, 5)],
    ids=_pid,
)
def test_orders_closed_form_matches_generic(params):
    S = _member(params)
    orders = family_orders_closed_form(params)
    assert set(orders) == set(apery_set(S).elements)
    for w, k in orders.items():
        assert order(S, w) == k


@pytest.mark.parametrize(
    "params",
    [BresinskyParams.from_h(h) for h in (2, 3)] + [ArslanParams.from_m(m) for m in (2, 3)],
    ids=_pid,
)
def test_order_extends_along_multiplicity_multiples(params):
    S = _member(params)
    a = S.multiplicity
    for w, k in family_orders_closed_form(params).items():
        for j in range(4):
            assert order(S, w + j * a) == k + j


@pytest.mark.parametrize(
    "params",
    [BresinskyParams.from_h(h) for h in (2, 3, 4)]
    + [ArslanParams.from_m(m) for m in (2, 3, 4, 5)],
    ids=_pid,
)
def test_table_closed_form_matches_generic(params):
    closed = family_table_closed_form(params)
    generic = apery_table(_member(params))
    assert closed.column_keys == generic.column_keys
    assert closed.rows == generic.rows
    assert closed.reduction_number == generic.reduction_number == params.top_order


def test_census_known_values():
    assert order_census_closed_form(BresinskyParams.from_h(3)).counts == {
        1: 3, 2: 5, 3: 7, 4: 9, 5: 5,
    }
    assert order_census_closed_form(ArslanParams.from_m(4)).counts == {
        1: 3, 2: 5, 3: 7, 4: 4,
    }
    assert order_census_closed_form(ArslanParams.from_m(2)).counts == {1: 3, 2: 2}


@pytest.mark.parametrize(
    "params",
    [BresinskyParams.from_h(h) for h in BRESINSKY_RANGE]
    + [ArslanParams.from_m(m) for m in ARSLAN_RANGE],
    ids=_pid,
)
def test_census_matches_generic_order_histogram(params):
    S = _member(params)
    census = order_census_closed_form(params).counts
    histogram = Counter(order(S, w) for w in apery_set(S).elements if w)
    assert census == dict(histogram)
    # all of the Apery set accounted for, 0 aside
    assert sum(census.values()) + 1 == S.multiplicity
    assert max(census) == params.top_order


@pytest.mark.parametrize(
    "params",
    [BresinskyParams.from_h(h) for h in BRESINSKY_RANGE]
    + [ArslanParams.from_m(m) for m in ARSLAN_RANGE],
    ids=_pid,
)
def test_apery_elements_factor_uniquely(params):
    assert verify_uniqueness(params)


def test_reduction_number_is_top_order():
    for h in BRESINSKY_RANGE:
        assert reduction_number(bresinsky(h)) == 2 * h - 1
    for m in ARSLAN_RANGE:
        assert reduction_number(arslan(m)) == m


def test_detect_family():
    assert detect_family(bresinsky(3)) == BresinskyParams.from_h(3)
    assert detect_family(bresinsky(2)) == BresinskyParams.from_h(2)
    assert detect_family(arslan(4)) == ArslanParams.from_m(4)
    assert detect_family(arslan(2)) == ArslanParams.from_m(2)
    assert detect_family(new_semigroup([5, 6, 13])) is None
    assert detect_family(new_semigroup([6, 7, 9, 11])) is None
    assert detect_family(new_semigroup([30, 35, 42, 48])) is None
    assert detect_family(new_semigroup([2, 3])) is None


def test_block_layout_names():
    names_h2 = [name for name, _ in family_block_layout(BresinskyParams.from_h(2))]
    assert names_h2 == ["T0", "T1", "T2", "T3", "T4(1)", "T4(2)", "T5(1)"]
    names_m2 = [name for name, _ in family_block_layout(ArslanParams.from_m(2))]
    assert names_m2 == ["A0", "A1", "A2", "A3", "A4(1)"]


def test_block_layout_keys():
    layout = dict(family_block_layout(BresinskyParams.from_h(3)))
    assert layout["T0"] == (0,)
    assert layout["T1"] == (35, 70, 105, 140, 175)
    assert layout["T4(1)"] == (82, 129, 176, 223)
    assert layout["T5(3)"] == (173,)
    layout = dict(family_block_layout(ArslanParams.from_m(4)))
    assert layout["A1"] == (21, 42, 63, 84)
    assert layout["A4(1)"] == (47, 73, 99)
    assert layout["A5(2)"] == (76,)


@pytest.mark.parametrize(
    "params",
    [BresinskyParams.from_h(h) for h in BRESINSKY_RANGE]
    + [ArslanParams.from_m(m) for m in ARSLAN_RANGE],
    ids=_pid,
)
def test_block_layout_covers_apery_exactly(params):
    layout = family_block_layout(params)
    keys = [k for _, cols in layout for k in cols]
    assert len(keys) == len(set(keys))
    assert sorted(keys) == sorted(family_apery_closed_form(params).elements)
