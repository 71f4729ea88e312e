"""Closed form constructors for two four-generator families.

Bresinsky family, parameter h >= 2, generators

    m0 = 2h(2h-1),  m1 = (2h+1)(2h-1),  m2 = 2h(2h+1),  m3 = 2h(2h+1) + (2h-1).

Arslan family, parameter m >= 2, generators

    n1 = m(m+1),  n2 = m(m+1) + 1,  n3 = (m+1)^2,  n4 = (m+1)^2 + 1.

For both, the Apery set with respect to the smallest generator splits into
five explicit blocks (plus {0}); writing g for the generator tuple:

    block 1:  i * g[1]                 i = 1 .. t
    block 2:  i * g[2]                 i = 1 .. t - 1
    block 3:  i * g[3]                 i = 1 .. t - 1
    block 4:  i * g[1] + j * g[3]      i = 1 .. t - 1, j = 1 .. t - i
    block 5:  i * g[2] + j * g[3]      i = 1 .. t - 2, j = 1 .. t - 1 - i

with t = 2h - 1 for the Bresinsky case and t = m for the Arslan case.  The
counts telescope to exactly multiplicity-many elements.  Every element has
a unique factorization, its order is the visible index sum, and the Apery
table obeys one rule: a column holds its key through row ord(key), then
climbs by the multiplicity once per row.  The reduction number is t, and
the order census over the nonzero Apery elements is

    2k + 1 elements of order k for k = 1 .. t - 1, and t of order t,

so the tangent cone is free with Hilbert series numerator
1 + sum(2k+1) x^k + t x^t over (1 - x).

Nothing here calls the generic Apery, order or table algorithms; the test
suite and the verify command cross-check the two routes against each other
and against the brute force oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import AperySet, NumericalSemigroup, factorizations, new_semigroup
from .errors import ParamTooSmallError
from .table import AperyTable

__all__ = [
    "BresinskyParams",
    "ArslanParams",
    "FamilyParams",
    "OrderCensus",
    "bresinsky",
    "arslan",
    "bresinsky_apery_closed_form",
    "arslan_apery_closed_form",
    "family_apery_closed_form",
    "family_orders_closed_form",
    "family_table_closed_form",
    "family_block_layout",
    "order_census_closed_form",
    "verify_uniqueness",
    "detect_family",
]


@dataclass(frozen=True)
class BresinskyParams:
    h: int
    m0: int
    m1: int
    m2: int
    m3: int

    @classmethod
    def from_h(cls, h: int) -> "BresinskyParams":
        if h < 2:
            raise ParamTooSmallError(f"the Bresinsky family needs h >= 2, got {h}")
        return cls(
            h=h,
            m0=2 * h * (2 * h - 1),
            m1=(2 * h + 1) * (2 * h - 1),
            m2=2 * h * (2 * h + 1),
            m3=2 * h * (2 * h + 1) + (2 * h - 1),
        )

    @property
    def generators(self) -> tuple[int, int, int, int]:
        return (self.m0, self.m1, self.m2, self.m3)

    @property
    def top_order(self) -> int:
        """Largest Apery element order; also the reduction number."""
        return 2 * self.h - 1

    @property
    def block_prefix(self) -> str:
        return "T"


@dataclass(frozen=True)
class ArslanParams:
    m: int
    n1: int
    n2: int
    n3: int
    n4: int

    @classmethod
    def from_m(cls, m: int) -> "ArslanParams":
        if m < 2:
            raise ParamTooSmallError(f"the Arslan family needs m >= 2, got {m}")
        return cls(
            m=m,
            n1=m * (m + 1),
            n2=m * (m + 1) + 1,
            n3=(m + 1) * (m + 1),
            n4=(m + 1) * (m + 1) + 1,
        )

    @property
    def generators(self) -> tuple[int, int, int, int]:
        return (self.n1, self.n2, self.n3, self.n4)

    @property
    def top_order(self) -> int:
        return self.m

    @property
    def block_prefix(self) -> str:
        return "A"


FamilyParams = BresinskyParams | ArslanParams


def bresinsky(h: int) -> NumericalSemigroup:
    """Bresinsky member for parameter h.  The four generators are minimal."""
    p = BresinskyParams.from_h(h)
    S = new_semigroup(p.generators)
    assert S.generators == p.generators, "family generators must already be minimal"
    return S


def arslan(m: int) -> NumericalSemigroup:
    """Arslan member for parameter m.  The four generators are minimal."""
    p = ArslanParams.from_m(m)
    S = new_semigroup(p.generators)
    assert S.generators == p.generators, "family generators must already be minimal"
    return S


def _blocks(params: FamilyParams) -> list[tuple[str, list[tuple[int, int]]]]:
    """Blocks in display order as (name, [(element, order), ...]) pairs."""
    g = params.generators
    t = params.top_order
    pre = params.block_prefix
    blocks: list[tuple[str, list[tuple[int, int]]]] = [(f"{pre}0", [(0, 0)])]
    blocks.append((f"{pre}1", [(i * g[1], i) for i in range(1, t + 1)]))
    blocks.append((f"{pre}2", [(i * g[2], i) for i in range(1, t)]))
    blocks.append((f"{pre}3", [(i * g[3], i) for i in range(1, t)]))
    for i in range(1, t):
        blocks.append(
            (f"{pre}4({i})", [(i * g[1] + j * g[3], i + j) for j in range(1, t - i + 1)])
        )
    for i in range(1, t - 1):
        blocks.append(
            (f"{pre}5({i})", [(i * g[2] + j * g[3], i + j) for j in range(1, t - i)])
        )
    return blocks


def family_orders_closed_form(params: FamilyParams) -> dict[int, int]:
    """Map of every Apery element to its order, straight from the blocks."""
    orders: dict[int, int] = {}
    for _, pairs in _blocks(params):
        for element, ordv in pairs:
            assert element not in orders, "blocks must not collide"
            orders[element] = ordv
    assert len(orders) == params.generators[0], "block counts telescope to the multiplicity"
    return orders


def _apery_closed_form(params: FamilyParams) -> AperySet:
    elements = tuple(sorted(family_orders_closed_form(params)))
    return AperySet(modulus=params.generators[0], elements=elements)


def bresinsky_apery_closed_form(h: int) -> AperySet:
    """Apery set of the Bresinsky member mod its multiplicity, by formula."""
    return _apery_closed_form(BresinskyParams.from_h(h))


def arslan_apery_closed_form(m: int) -> AperySet:
    """Apery set of the Arslan member mod its multiplicity, by formula."""
    return _apery_closed_form(ArslanParams.from_m(m))


def family_apery_closed_form(params: FamilyParams) -> AperySet:
    return _apery_closed_form(params)


def family_table_closed_form(params: FamilyParams) -> AperyTable:
    """Apery table straight from the closed forms, columns ascending.

    Row n of the column keyed w is w while n <= ord(w) and
    w + (n - ord(w)) * multiplicity afterwards; the reduction number is the
    top order t, because the column keyed t * g[1] pauses through row t.
    """
    orders = family_orders_closed_form(params)
    mult = params.generators[0]
    r = params.top_order
    keys = tuple(sorted(orders))
    rows = tuple(
        tuple(w if n <= orders[w] else w + (n - orders[w]) * mult for w in keys)
        for n in range(r + 1)
    )
    S = bresinsky(params.h) if isinstance(params, BresinskyParams) else arslan(params.m)
    return AperyTable(S, r, rows, keys)


def family_block_layout(params: FamilyParams) -> tuple[tuple[str, tuple[int, ...]], ...]:
    """Display layout: block names with their column keys, block order."""
    return tuple((name, tuple(el for el, _ in pairs)) for name, pairs in _blocks(params))


@dataclass
class OrderCensus:
    """How many nonzero Apery elements have each order, keys ascending."""

    counts: dict[int, int]


def order_census_closed_form(params: FamilyParams) -> OrderCensus:
    """Census by formula: 2k+1 at each order k below the top, top at the top."""
    t = params.top_order
    counts = {k: 2 * k + 1 for k in range(1, t)}
    counts[t] = t
    return OrderCensus(counts)


def verify_uniqueness(params: FamilyParams) -> bool:
    """Every Apery element factors in exactly one way (0 included)."""
    S = bresinsky(params.h) if isinstance(params, BresinskyParams) else arslan(params.m)
    return all(
        len(factorizations(S, w)) == 1 for w in family_orders_closed_form(params)
    )


def detect_family(S: NumericalSemigroup) -> FamilyParams | None:
    """Recognize a semigroup as a family member from its generators."""
    gens = S.generators
    if len(gens) != 4:
        return None
    a = gens[0]
    # 2h(2h-1) grows like 4h^2, m(m+1) like m^2; probe the nearby integer
    # parameters and accept only exact generator matches.
    root = math.isqrt(a)
    for h in range(max(2, root // 2 - 1), root // 2 + 3):
        if BresinskyParams.from_h(h).generators == gens:
            return BresinskyParams.from_h(h)
    for m in range(max(2, root - 2), root + 3):
        if ArslanParams.from_m(m).generators == gens:
            return ArslanParams.from_m(m)
    return None
