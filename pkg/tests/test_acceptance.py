"""Acceptance gate: nine criteria, exact integer equality throughout.

Each test prints one `criterion N PASS/FAIL` line (visible with -s, and on
any failure).  Every expected integer below is frozen from an independent
brute-force computation or from a published worked example; none of it was
generated by the code under test.
"""

from __future__ import annotations

import functools
import math
import random
from collections import Counter

from aperycone import (
    ArslanParams,
    BresinskyParams,
    apery_set,
    apery_table,
    arslan,
    bresinsky,
    cone_decomposition,
    factorizations,
    family_apery_closed_form,
    family_block_layout,
    hilbert_function,
    hilbert_function_from_series,
    hilbert_series,
    is_cohen_macaulay,
    is_free,
    new_semigroup,
    order,
    reduction_number,
)
from aperycone.cli import run
from aperycone.oracle import brute_apery, brute_hilbert_function

BRESINSKY_SWEEP = range(2, 7)  # h = 2 .. 6
ARSLAN_SWEEP = range(2, 9)  # m = 2 .. 8

# Worked Apery table for the h = 3 member <30,35,42,47>, six rows, columns
# grouped in the published block layout.  The last entry of the column
# keyed 140 appears as 175 in the published table; the step rule and both
# computation routes force 170 (the verify report carries the same note).
PUBLISHED_TABLE_H3 = {
    "T0": {0: (0, 30, 60, 90, 120, 150)},
    "T1": {
        35: (35, 35, 65, 95, 125, 155),
        70: (70, 70, 70, 100, 130, 160),
        105: (105, 105, 105, 105, 135, 165),
        140: (140, 140, 140, 140, 140, 170),
        175: (175, 175, 175, 175, 175, 175),
    },
    "T2": {
        42: (42, 42, 72, 102, 132, 162),
        84: (84, 84, 84, 114, 144, 174),
        126: (126, 126, 126, 126, 156, 186),
        168: (168, 168, 168, 168, 168, 198),
    },
    "T3": {
        47: (47, 47, 77, 107, 137, 167),
        94: (94, 94, 94, 124, 154, 184),
        141: (141, 141, 141, 141, 171, 201),
        188: (188, 188, 188, 188, 188, 218),
    },
    "T4(1)": {
        82: (82, 82, 82, 112, 142, 172),
        129: (129, 129, 129, 129, 159, 189),
        176: (176, 176, 176, 176, 176, 206),
        223: (223, 223, 223, 223, 223, 223),
    },
    "T4(2)": {
        117: (117, 117, 117, 117, 147, 177),
        164: (164, 164, 164, 164, 164, 194),
        211: (211, 211, 211, 211, 211, 211),
    },
    "T4(3)": {
        152: (152, 152, 152, 152, 152, 182),
        199: (199, 199, 199, 199, 199, 199),
    },
    "T4(4)": {187: (187, 187, 187, 187, 187, 187)},
    "T5(1)": {
        89: (89, 89, 89, 119, 149, 179),
        136: (136, 136, 136, 136, 166, 196),
        183: (183, 183, 183, 183, 183, 213),
    },
    "T5(2)": {
        131: (131, 131, 131, 131, 161, 191),
        178: (178, 178, 178, 178, 178, 208),
    },
    "T5(3)": {173: (173, 173, 173, 173, 173, 203)},
}

# Worked Apery table for the m = 4 member <20,21,25,26>, five rows.
PUBLISHED_TABLE_M4 = {
    "A0": {0: (0, 20, 40, 60, 80)},
    "A1": {
        21: (21, 21, 41, 61, 81),
        42: (42, 42, 42, 62, 82),
        63: (63, 63, 63, 63, 83),
        84: (84, 84, 84, 84, 84),
    },
    "A2": {
        25: (25, 25, 45, 65, 85),
        50: (50, 50, 50, 70, 90),
        75: (75, 75, 75, 75, 95),
    },
    "A3": {
        26: (26, 26, 46, 66, 86),
        52: (52, 52, 52, 72, 92),
        78: (78, 78, 78, 78, 98),
    },
    "A4(1)": {
        47: (47, 47, 47, 67, 87),
        73: (73, 73, 73, 73, 93),
        99: (99, 99, 99, 99, 99),
    },
    "A4(2)": {
        68: (68, 68, 68, 68, 88),
        94: (94, 94, 94, 94, 94),
    },
    "A4(3)": {89: (89, 89, 89, 89, 89)},
    "A5(1)": {
        51: (51, 51, 51, 71, 91),
        77: (77, 77, 77, 77, 97),
    },
    "A5(2)": {76: (76, 76, 76, 76, 96)},
}


def criterion(num, label):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"criterion {num} FAIL  {label}")
                raise
            print(f"criterion {num} PASS  {label}")

        return wrapper

    return deco


def _check_published_table(S, params, published, expected_rows):
    table = apery_table(S)
    assert len(table.rows) == expected_rows
    key_to_column = {k: table.column(i) for i, k in enumerate(table.column_keys)}
    # the published grouping is exactly the block layout
    layout = dict(family_block_layout(params))
    assert set(layout) == set(published)
    for name, columns in published.items():
        assert layout[name] == tuple(columns)
        for key, expected in columns.items():
            assert key_to_column[key] == expected
    # and it covers every column of the computed table, none left over
    published_keys = [k for columns in published.values() for k in columns]
    assert sorted(published_keys) == sorted(table.column_keys)


@criterion(1, "h=3 table matches the published blocks entry for entry")
def test_criterion_1_bresinsky_h3_table():
    _check_published_table(
        new_semigroup([30, 35, 42, 47]),
        BresinskyParams.from_h(3),
        PUBLISHED_TABLE_H3,
        expected_rows=6,
    )


@criterion(2, "m=4 table matches the published blocks entry for entry")
def test_criterion_2_arslan_m4_table():
    _check_published_table(
        new_semigroup([20, 21, 25, 26]),
        ArslanParams.from_m(4),
        PUBLISHED_TABLE_M4,
        expected_rows=5,
    )


@criterion(3, "order census pattern over m = 2 .. 8, computed generically")
def test_criterion_3_arslan_census_sweep():
    for m in ARSLAN_SWEEP:
        S = arslan(m)
        histogram = Counter(order(S, w) for w in apery_set(S).elements if w)
        expected = {k: 2 * k + 1 for k in range(1, m)}
        expected[m] = m
        assert dict(histogram) == expected


@criterion(4, "closed form Apery sets equal generic and brute, both sweeps")
def test_criterion_4_apery_three_routes():
    members = [(bresinsky(h), BresinskyParams.from_h(h)) for h in BRESINSKY_SWEEP]
    members += [(arslan(m), ArslanParams.from_m(m)) for m in ARSLAN_SWEEP]
    for S, params in members:
        closed = family_apery_closed_form(params)
        assert closed == apery_set(S)
        assert closed == brute_apery(S, S.multiplicity)
        assert len(closed.elements) == S.multiplicity


@criterion(5, "every family Apery element factors uniquely, both sweeps")
def test_criterion_5_unique_factorization():
    members = [bresinsky(h) for h in BRESINSKY_SWEEP]
    members += [arslan(m) for m in ARSLAN_SWEEP]
    for S in members:
        for w in apery_set(S).elements:
            assert len(factorizations(S, w)) == 1


@criterion(6, "family cones free with shift histogram = census; <5,6,13> is not")
def test_criterion_6_freeness():
    members = [(bresinsky(h), BresinskyParams.from_h(h)) for h in BRESINSKY_SWEEP]
    members += [(arslan(m), ArslanParams.from_m(m)) for m in ARSLAN_SWEEP]
    for S, params in members:
        assert is_free(S)
        assert is_cohen_macaulay(S)
        dec = cone_decomposition(S)
        assert dec.torsion_summands == ()
        t = params.top_order
        expected = {k: 2 * k + 1 for k in range(1, t)}
        expected[t] = t
        histogram = Counter(s for s in dec.free_shifts if s)
        assert dict(histogram) == expected
    S = new_semigroup([5, 6, 13])
    assert not is_free(S)
    assert not is_cohen_macaulay(S)
    assert cone_decomposition(S).torsion_summands == ((1, 1), (2, 1))


def _hilbert_corpus():
    members = [bresinsky(h) for h in BRESINSKY_SWEEP]
    members += [arslan(m) for m in ARSLAN_SWEEP]
    members += [new_semigroup(g) for g in ([2, 3], [5, 6, 13], [6, 7, 9, 10])]
    rng = random.Random(20260817)
    while len(members) < 15 + 25:
        a = rng.randint(2, 30)
        extras = sorted({rng.randint(a + 1, 3 * a) for _ in range(rng.randint(1, 3))})
        gens = [a] + extras
        if math.gcd(*gens) != 1:
            gens.append(a + 1)
        members.append(new_semigroup(gens))
    return members


@criterion(7, "table, series and brute Hilbert data agree on the whole corpus")
def test_criterion_7_hilbert_three_routes():
    for S in _hilbert_corpus():
        r = reduction_number(S)
        hs = hilbert_series(cone_decomposition(S))
        assert sum(hs.numerator) == S.multiplicity
        for n in range(r + 4):
            from_table = hilbert_function(S, n)
            assert from_table == hilbert_function_from_series(hs, n)
            assert from_table == brute_hilbert_function(S, n)
            if n >= r:
                assert from_table == S.multiplicity


@criterion(8, "reduction numbers across both sweeps")
def test_criterion_8_reduction_numbers():
    for h in BRESINSKY_SWEEP:
        assert reduction_number(bresinsky(h)) == 2 * h - 1
    for m in ARSLAN_SWEEP:
        assert reduction_number(arslan(m)) == m


@criterion(9, "CLI verify sweep passes and reports the published deviations")
def test_criterion_9_cli_verify(capsys):
    assert run(["verify", "--family", "arslan", "--range", "2..8"]) == 0
    out = capsys.readouterr().out
    assert "2k-1" in out and "2k+1" in out
    assert "constant term" in out
