"""Brute force reference implementations and the cross-check report.

The primitives in this module never call the optimized membership, Apery,
order or table code; they redo everything by exhaustive search over
explicit finite windows.  The duplication is the point: verify and the
test suite compare the two routes (three, for family members with closed
forms) value by value, all integers, no tolerances.

Window arguments used below:

  * Apery scan bound a * max(generator): the smallest member of a residue
    class mod a is reachable by adding fewer than a generators (a path in
    the class graph never needs to revisit a class), each at most the
    largest generator.
  * Hilbert window n * a_1 + frob + 1: any member above frob + n * a_1
    lands in the n-fold sumset of the nonzero members (peel off n copies
    of a_1 and what remains is past the largest gap), and any element of
    the n-fold sumset above that line is also in the (n+1)-fold sumset
    (peel n copies of a_1; the rest is a nonzero member, regroup).  So
    everything beyond the window contributes zero to the difference that
    the Hilbert function counts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import AperySet, NumericalSemigroup, apery_set, order
from .errors import NotInSemigroupError, TooLargeError
from .families import (
    FamilyParams,
    BresinskyParams,
    detect_family,
    family_apery_closed_form,
    family_orders_closed_form,
    family_table_closed_form,
    order_census_closed_form,
    verify_uniqueness,
)
from .ladder import cone_decomposition, hilbert_function_from_series, hilbert_series, is_free
from .table import apery_table, hilbert_function

__all__ = [
    "CheckResult",
    "VerificationReport",
    "brute_apery",
    "brute_order",
    "brute_hilbert_function",
    "full_verify",
    "ORACLE_GENERATOR_LIMIT",
]

# Everything in this module is exhaustive search; past this generator size
# the scans stop being a practical second opinion.
ORACLE_GENERATOR_LIMIT = 500


def _member_sieve(gens: tuple[int, ...], bound: int) -> bytearray:
    """Coin-change reachability table for 0 .. bound (own copy on purpose)."""
    reach = bytearray(bound + 1)
    reach[0] = 1
    for v in range(gens[0], bound + 1):
        for g in gens:
            if g > v:
                break
            if reach[v - g]:
                reach[v] = 1
                break
    return reach


def brute_apery(S: NumericalSemigroup, a: int) -> AperySet:
    """Apery set by scanning all members up to a * max(generator)."""
    gens = S.generators
    if a <= 0:
        raise NotInSemigroupError(a, "the Apery modulus must be a positive member")
    bound = a * max(gens)
    sieve = _member_sieve(gens, bound)
    if not sieve[a]:
        raise NotInSemigroupError(a, "the Apery modulus must be a positive member")
    per_class: dict[int, int] = {}
    for x in range(bound + 1):
        if sieve[x]:
            r = x % a
            if r not in per_class:
                per_class[r] = x
                if len(per_class) == a:
                    break
    assert len(per_class) == a, "the scan bound covers every residue class"
    return AperySet(modulus=a, elements=tuple(sorted(per_class.values())))


def brute_order(S: NumericalSemigroup, x: int) -> int:
    """Largest factorization length by plain nested bounded enumeration.

    Walks every coefficient vector with value x; no memo, no sharing with
    the optimized recurrence.
    """
    if x < 0:
        raise NotInSemigroupError(x)
    gens = S.generators
    last = len(gens) - 1
    best = -1

    def walk(i: int, rem: int, total: int) -> None:
        nonlocal best
        if i == last:
            q, rest = divmod(rem, gens[i])
            if rest == 0 and total + q > best:
                best = total + q
            return
        g = gens[i]
        for c in range(rem // g + 1):
            walk(i + 1, rem - c * g, total + c)

    walk(0, x, 0)
    if best < 0:
        raise NotInSemigroupError(x)
    return best


def _member_mask(gens: tuple[int, ...], bound: int) -> int:
    """Membership of 0 .. bound packed into one integer, bit x for x."""
    sieve = _member_sieve(gens, bound)
    mask = 0
    for v in range(bound, -1, -1):
        mask = (mask << 1) | sieve[v]
    return mask


def _sumset_step(mask: int, members: list[int], window_mask: int) -> int:
    """One explicit sumset with the nonzero members, truncated to the window."""
    out = 0
    for m in members:
        out |= mask << m
    return out & window_mask


def brute_hilbert_function(S: NumericalSemigroup, n: int) -> int:
    """Count the n-fold sumset minus the (n+1)-fold sumset, explicitly.

    Builds the sumsets by repeated Minkowski addition of the nonzero
    members inside the window described in the module docstring; elements
    beyond the window sit in both sets and cancel.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    gens = S.generators
    a1 = gens[0]
    ap = brute_apery(S, a1)
    frob = ap.elements[-1] - a1
    window = n * a1 + frob + 1
    gamma = _member_mask(gens, window)
    members = [v for v in range(1, window + 1) if (gamma >> v) & 1]
    window_mask = (1 << (window + 1)) - 1
    cur = 1  # the 0-fold sumset of the nonzero members is {0}
    for _ in range(n):
        cur = _sumset_step(cur, members, window_mask)
    nxt = _sumset_step(cur, members, window_mask)
    return (cur & ~nxt).bit_count()


@dataclass(frozen=True)
class CheckResult:
    """One comparison: a name, the reference value, the computed value."""

    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of full_verify: per-check results plus notes on any spots
    where the computation contradicts a published closed form."""

    subject: str
    checks: tuple[CheckResult, ...]
    paper_deltas: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _brute_table_rows(
    S: NumericalSemigroup, brute_ap: AperySet, r: int
) -> list[list[int]]:
    """Apery table rows 0 .. r from explicit sumsets, nothing else.

    Row n holds, per residue class, the smallest element of the n-fold
    sumset in that class; row 0 uses the full membership mask.  Entries of
    row n sit at most n * a_1 above their row 0 key, so the window of
    brute_hilbert_function at n = r covers the whole table.
    """
    gens = S.generators
    a1 = gens[0]
    frob = brute_ap.elements[-1] - a1
    window = r * a1 + frob + 1
    gamma = _member_mask(gens, window)
    members = [v for v in range(1, window + 1) if (gamma >> v) & 1]
    window_mask = (1 << (window + 1)) - 1
    masks = [gamma]  # the 0-fold sumset is the whole semigroup by convention
    cur = 1
    for _ in range(r):
        cur = _sumset_step(cur, members, window_mask)
        masks.append(cur)
    rows: list[list[int]] = []
    for mask in masks:
        row = []
        for w in brute_ap.elements:
            x = w
            while not (mask >> x) & 1:
                x += a1
            row.append(x)
        rows.append(row)
    return rows


def _family_deltas(params: FamilyParams) -> tuple[str, ...]:
    """Notes on published closed forms that the oracle contradicts."""
    if isinstance(params, BresinskyParams):
        deltas = [
            "published Hilbert series numerator for this family omits the degree-0 "
            "constant term; the computed numerator keeps the 1, forced by "
            "numerator(1) = multiplicity",
        ]
        if params.h == 3:
            deltas.append(
                "published worked table for parameter 3 prints 175 as the last entry "
                "of the column keyed 140; the step rule and both computations force 170"
            )
        return tuple(deltas)
    return (
        "published Hilbert series coefficient 2k-1 disagrees with the published "
        "order census total 2k+1; the computation confirms 2k+1",
        "published Hilbert series numerator for this family omits the degree-0 "
        "constant term; the computed numerator includes it",
    )


def full_verify(S: NumericalSemigroup) -> VerificationReport:
    """Run every generic-vs-brute comparison, plus closed-form comparisons
    when the semigroup is a family member.  Exhaustive and deterministic;
    raises TooLargeError past the generator size guard."""
    if max(S.generators) > ORACLE_GENERATOR_LIMIT:
        raise TooLargeError(
            f"the oracle only runs with generators at most {ORACLE_GENERATOR_LIMIT}, "
            f"got {max(S.generators)}"
        )
    a1 = S.multiplicity
    checks: list[CheckResult] = []

    brute_ap = brute_apery(S, a1)
    checks.append(
        CheckResult(
            "apery set, generic vs brute",
            list(brute_ap.elements),
            list(apery_set(S).elements),
        )
    )

    table = apery_table(S)
    r = table.reduction_number
    brute_rows = _brute_table_rows(S, brute_ap, r)
    checks.append(
        CheckResult(
            "apery table, generic vs brute sumsets",
            brute_rows,
            [list(row) for row in table.rows],
        )
    )

    values = sorted({v for row in table.rows for v in row})
    checks.append(
        CheckResult(
            "orders on all table values, generic vs brute",
            [brute_order(S, v) for v in values],
            [order(S, v) for v in values],
        )
    )

    dec = cone_decomposition(S)
    hs = hilbert_series(dec)
    ns = range(r + 4)
    h_brute = [brute_hilbert_function(S, n) for n in ns]
    checks.append(
        CheckResult(
            "hilbert function, generic vs brute",
            h_brute,
            [hilbert_function(S, n) for n in ns],
        )
    )
    checks.append(
        CheckResult(
            "hilbert function, series vs brute",
            h_brute,
            [hilbert_function_from_series(hs, n) for n in ns],
        )
    )
    checks.append(
        CheckResult("series numerator at 1 equals multiplicity", a1, sum(hs.numerator))
    )
    checks.append(
        CheckResult("free summand count equals multiplicity", a1, len(dec.free_shifts))
    )

    params = detect_family(S)
    deltas: tuple[str, ...] = ()
    if params is not None:
        closed_ap = family_apery_closed_form(params)
        checks.append(
            CheckResult(
                "apery set, closed form vs generic",
                list(closed_ap.elements),
                list(apery_set(S).elements),
            )
        )
        checks.append(
            CheckResult(
                "apery set, closed form vs brute",
                list(closed_ap.elements),
                list(brute_ap.elements),
            )
        )
        closed_table = family_table_closed_form(params)
        checks.append(
            CheckResult(
                "apery table, closed form vs generic",
                [list(row) for row in closed_table.rows],
                [list(row) for row in table.rows],
            )
        )
        closed_orders = family_orders_closed_form(params)
        keys = sorted(closed_orders)
        checks.append(
            CheckResult(
                "orders on apery elements, closed form vs generic",
                [closed_orders[w] for w in keys],
                [order(S, w) for w in keys],
            )
        )
        census = order_census_closed_form(params).counts
        generic_census: dict[int, int] = {}
        for w in apery_set(S).elements:
            if w:
                k = order(S, w)
                generic_census[k] = generic_census.get(k, 0) + 1
        checks.append(
            CheckResult("order census, closed form vs generic", census, generic_census)
        )
        shift_census: dict[int, int] = {}
        for s in dec.free_shifts:
            if s:
                shift_census[s] = shift_census.get(s, 0) + 1
        checks.append(
            CheckResult("order census vs free shift histogram", census, shift_census)
        )
        checks.append(
            CheckResult(
                "reduction number equals the family top order",
                params.top_order,
                r,
            )
        )
        checks.append(
            CheckResult("unique factorization of apery elements", True, verify_uniqueness(params))
        )
        checks.append(CheckResult("tangent cone is free", True, is_free(S)))
        deltas = _family_deltas(params)

    if isinstance(params, BresinskyParams):
        tag = f" [bresinsky h={params.h}]"
    elif params is not None:
        tag = f" [arslan m={params.m}]"
    else:
        tag = ""
    return VerificationReport(subject=f"{S}{tag}", checks=tuple(checks), paper_deltas=deltas)
