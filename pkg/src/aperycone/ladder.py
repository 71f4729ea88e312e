"""Column ladders of an Apery table and the induced tangent cone data.

Each column of an Apery table is nondecreasing with consecutive differences
0 or the multiplicity.  A landing is a maximal run of at least two equal
consecutive values.  Every nonzero column starts with one (rows 0 and 1
always agree there), so a column with landings

    [s_0, e_0], [s_1, e_1], ..., [s_p, e_p]      (s_0 = 0)

has p pauses after climbs.  The associated graded ring of the semigroup
ring with respect to its maximal ideal, viewed as a module over the fiber
cone of the multiplicity element, decomposes by column:

  * one free summand shifted by d = e_p per column (plus the unshifted one
    for the zero column), and
  * one torsion summand per pause j = 1 .. p, annihilated by the c_j-th
    power of the initial form of the multiplicity and shifted by b_j,
    where b_j = e_{j-1} and c_j = s_j - e_{j-1}.

The decomposition is free exactly when every column has a single landing,
and freeness is the Cohen-Macaulay criterion for the tangent cone used
throughout this package.  Each free summand contributes x^shift to the
numerator of the Hilbert series over (1 - x), each torsion summand
contributes x^b - x^(b+c), and partial sums of the numerator coefficients
give the Hilbert function back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import NumericalSemigroup
from .errors import ColumnOutOfRangeError
from .table import AperyTable, apery_table

__all__ = [
    "Landing",
    "LadderProfile",
    "ConeDecomposition",
    "HilbertSeries",
    "ladder_profile",
    "cone_decomposition",
    "is_free",
    "is_cohen_macaulay",
    "hilbert_series",
    "hilbert_function_from_series",
]


@dataclass(frozen=True)
class Landing:
    """Maximal run of equal consecutive column values, rows start .. end."""

    start: int
    end: int


@dataclass(frozen=True)
class LadderProfile:
    """Landing structure of one nonzero Apery table column.

    p is the number of landings minus one (the torsion summand count for
    the column), d the end row of the last landing (the free shift), and
    b_list / c_list the torsion shifts and annihilator exponents, index j
    covering the pause between landings j-1 and j.
    """

    column_key: int
    values: tuple[int, ...]
    landings: tuple[Landing, ...]
    p: int
    d: int
    b_list: tuple[int, ...]
    c_list: tuple[int, ...]


def _find_landings(values: tuple[int, ...]) -> tuple[Landing, ...]:
    landings: list[Landing] = []
    i = 0
    n = len(values)
    while i < n:
        j = i
        while j + 1 < n and values[j + 1] == values[i]:
            j += 1
        if j > i:
            landings.append(Landing(i, j))
        i = j + 1
    return tuple(landings)


def ladder_profile(table: AperyTable, column_index: int) -> LadderProfile:
    """Landings and derived invariants of column `column_index` (1-based
    from the first nonzero column; the zero column has no ladder)."""
    if column_index < 1 or column_index >= len(table.column_keys):
        raise ColumnOutOfRangeError(
            f"column index must be in 1 .. {len(table.column_keys) - 1}, got {column_index}"
        )
    values = table.column(column_index)
    landings = _find_landings(values)
    assert landings, "rows 0 and 1 of a nonzero column always agree"
    p = len(landings) - 1
    d = landings[-1].end
    b_list = tuple(landings[j - 1].end for j in range(1, p + 1))
    c_list = tuple(landings[j].start - landings[j - 1].end for j in range(1, p + 1))
    return LadderProfile(
        column_key=table.column_keys[column_index],
        values=values,
        landings=landings,
        p=p,
        d=d,
        b_list=b_list,
        c_list=c_list,
    )


@dataclass(frozen=True)
class ConeDecomposition:
    """Multisets of summands of the tangent cone over the fiber cone.

    free_shifts always holds exactly multiplicity-many entries, one 0 for
    the zero column and one d per other column, ascending.  Torsion
    summands are (shift b, annihilator exponent c) pairs, sorted.
    """

    free_shifts: tuple[int, ...]
    torsion_summands: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class HilbertSeries:
    """Numerator coefficients (index = degree) over (1 - x)."""

    numerator: tuple[int, ...]
    denominator_exponent: int = 1


def cone_decomposition(S: NumericalSemigroup) -> ConeDecomposition:
    """Free and torsion summands of the tangent cone, column by column."""
    table = apery_table(S)
    free = [0]
    torsion: list[tuple[int, int]] = []
    for i in range(1, len(table.column_keys)):
        prof = ladder_profile(table, i)
        free.append(prof.d)
        torsion.extend(zip(prof.b_list, prof.c_list))
    return ConeDecomposition(tuple(sorted(free)), tuple(sorted(torsion)))


def is_free(S: NumericalSemigroup) -> bool:
    """Whether the tangent cone is free over the fiber cone (no torsion)."""
    return not cone_decomposition(S).torsion_summands


def is_cohen_macaulay(S: NumericalSemigroup) -> bool:
    """Cohen-Macaulay verdict for the tangent cone; freeness is the criterion."""
    return is_free(S)


def hilbert_series(dec: ConeDecomposition) -> HilbertSeries:
    """Hilbert series numerator of a decomposition, over (1 - x).

    x^shift per free summand, x^b - x^(b+c) per torsion summand.  The
    numerator evaluated at 1 is the free summand count, the multiplicity.
    """
    top = max(dec.free_shifts)
    for b, c in dec.torsion_summands:
        top = max(top, b + c)
    coeff = [0] * (top + 1)
    for s in dec.free_shifts:
        coeff[s] += 1
    for b, c in dec.torsion_summands:
        coeff[b] += 1
        coeff[b + c] -= 1
    while len(coeff) > 1 and coeff[-1] == 0:
        coeff.pop()
    return HilbertSeries(tuple(coeff))


def hilbert_function_from_series(hs: HilbertSeries, n: int) -> int:
    """Hilbert function value at n: partial sum of numerator coefficients."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(hs.numerator[: n + 1])
