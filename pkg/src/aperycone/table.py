"""Apery tables of maximal ideal powers, reduction number, Hilbert function.

Write M for the set of nonzero members of a semigroup S and nM for the set
of sums of n elements of M (0M is S itself).  Row n of the Apery table
lists, per residue class modulo the multiplicity, the smallest element of
nM in that class; row 0 is the ordinary Apery set.  Row n+1 follows from
row n by a single rule: keep an entry that already lies in (n+1)M,
otherwise add the multiplicity.  An entry x lies in nM exactly when x is a
member of order at least n, which is what makes the rule cheap to apply.

The reduction number r is the first row index at which every column steps
by the multiplicity at once; from then on every later row steps as well,
so the table carries no information past row r and only rows 0 .. r are
exposed.  The Hilbert function value H(n) counts the elements of nM that
are not in (n+1)M, which per residue class happens for at most one value,
so H(n) is just the number of columns stepping between rows n and n+1 (and
is the multiplicity for every n >= r).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import NumericalSemigroup, apery_set, contains, order

__all__ = [
    "AperyTable",
    "apery_table",
    "reduction_number",
    "n_fold_contains",
    "hilbert_function",
]


@dataclass(frozen=True)
class AperyTable:
    """Rows 0 .. r of the Apery table, columns sorted by their row-0 value.

    column_keys equals rows[0]; column 0 is the class of 0, whose row n
    entry is always n times the multiplicity.
    """

    semigroup: NumericalSemigroup
    reduction_number: int
    rows: tuple[tuple[int, ...], ...]
    column_keys: tuple[int, ...]

    def entry(self, n: int, i: int) -> int:
        return self.rows[n][i]

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(row[i] for row in self.rows)


def n_fold_contains(S: NumericalSemigroup, x: int, n: int) -> bool:
    """Whether x is a sum of n nonzero members (any member when n = 0).

    Holds exactly when x is a member of order at least n: a factorization
    of length L >= n regroups into n nonzero parts, and conversely.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not contains(S, x):
        return False
    return order(S, x) >= n


def apery_table(S: NumericalSemigroup) -> AperyTable:
    """Build the Apery table of S and detect its reduction number.

    Rows are produced by the keep-or-step rule until a full row steps,
    which certifies the reduction number; the stepped row itself is not
    exposed.
    """
    a1 = S.multiplicity
    row0 = apery_set(S).elements
    rows: list[tuple[int, ...]] = [row0]
    n = 0
    while True:
        prev = rows[-1]
        nxt = tuple(v if order(S, v) >= n + 1 else v + a1 for v in prev)
        rows.append(nxt)
        # The first all-columns step at row index n >= 1 is the reduction
        # number; the n = 0 transition can only be all-step for the full
        # set of naturals, where r is still 1 by convention.
        if n >= 1 and all(w == v + a1 for v, w in zip(prev, nxt)):
            r = n
            break
        n += 1
    return AperyTable(S, r, tuple(rows[: r + 1]), row0)


def reduction_number(S: NumericalSemigroup) -> int:
    """Smallest r >= 1 with (r+1)M equal to a_1 + rM."""
    return apery_table(S).reduction_number


def hilbert_function(S: NumericalSemigroup, n: int) -> int:
    """Number of members of order exactly n.

    Counted as the columns stepping between table rows n and n+1; equals
    the multiplicity for every n at or beyond the reduction number.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    t = apery_table(S)
    if n >= t.reduction_number:
        return S.multiplicity
    a1 = S.multiplicity
    return sum(1 for v, w in zip(t.rows[n], t.rows[n + 1]) if w == v + a1)
