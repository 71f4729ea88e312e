"""Exact arithmetic for numerical semigroups.

A numerical semigroup is a subset of the nonnegative integers containing 0,
closed under addition, with finitely many gaps.  It is determined by its
unique minimal generating set a_1 < ... < a_e; a_1 is the multiplicity and
e the embedding dimension.  Everything in this module is exact integer
arithmetic, there is no floating point anywhere and no silent truncation.

Algorithm notes:

  membership      residue criterion: x belongs iff x >= w, where w is the
                  smallest member congruent to x modulo the multiplicity
                  (an entry of the Apery set with respect to a_1).
  Apery set       fixed point relaxation over residue classes modulo a, in
                  the style of Bellman-Ford on the cycle graph Z_a with one
                  arc per generator.  Stable after finitely many sweeps
                  because entries only decrease and stay nonnegative.
  order           ord(x) is the largest total coefficient sum over all ways
                  of writing x in the generators.  Computed by the memoized
                  recurrence ord(x) = 1 + max ord(x - a_i) over generators
                  with x - a_i still a member, ord(0) = 0.
  factorizations  bounded depth first search over coefficient vectors, the
                  coefficient of a_i never exceeding x // a_i.

Values are checked against a 63-bit nonnegative range at the points where
they are materialized (construction, Apery sets), so results are safe to
hand to fixed-width consumers.  Exceeding the range raises, never wraps.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

from .errors import (
    EmptyInputError,
    GcdNotOneError,
    InvalidGeneratorError,
    NotInSemigroupError,
    RangeOverflowError,
    TrivialSemigroupError,
)

__all__ = [
    "INT63_MAX",
    "NumericalSemigroup",
    "AperySet",
    "Factorization",
    "new_semigroup",
    "contains",
    "frobenius",
    "apery_set",
    "factorizations",
    "order",
    "length_set",
]

INT63_MAX = (1 << 63) - 1


class _Cache:
    """Per-semigroup memo store.

    Every cached value is a pure function of the generators, so concurrent
    readers can never observe two different answers; the lock only keeps
    growth of the order table atomic.
    """

    __slots__ = ("lock", "orders", "apery0")

    def __init__(self) -> None:
        self.lock = threading.Lock()
        # orders[x] is ord(x), or -1 when x is not a member.  Index 0 seeds
        # the recurrence with ord(0) = 0.
        self.orders: list[int] = [0]
        # Apery elements modulo the multiplicity, indexed by residue class.
        self.apery0: tuple[int, ...] | None = None


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup, stored by its minimal generating set.

    Instances are immutable value objects; equality and hashing look only
    at the generators.  Build them with :func:`new_semigroup`, which
    canonicalizes an arbitrary generating set to the minimal system.
    """

    generators: tuple[int, ...]
    _cache: _Cache = field(default_factory=_Cache, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(int(g) for g in self.generators))
        gens = self.generators
        if not gens:
            raise EmptyInputError("a numerical semigroup needs at least one generator")
        if any(g <= 0 for g in gens):
            raise InvalidGeneratorError(f"generators must be positive, got {gens}")
        if list(gens) != sorted(set(gens)):
            raise InvalidGeneratorError(f"generators must be strictly increasing, got {gens}")
        if math.gcd(*gens) != 1:
            raise GcdNotOneError(f"gcd of {gens} is {math.gcd(*gens)}, not 1")

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dim(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        return "<" + ",".join(str(g) for g in self.generators) + ">"


@dataclass(frozen=True)
class AperySet:
    """The a smallest members, one per residue class modulo a.

    `elements` is ascending and always starts with 0.  For the default
    modulus (the multiplicity) the largest element minus the modulus is the
    Frobenius number.
    """

    modulus: int
    elements: tuple[int, ...]


@dataclass(frozen=True)
class Factorization:
    """One way of writing a value as a nonnegative combination of the generators.

    coefficients[i] multiplies the i-th generator in ascending generator
    order.  total_order is the coefficient sum, the quantity maximized by
    :func:`order`.
    """

    coefficients: tuple[int, ...]

    @property
    def total_order(self) -> int:
        return sum(self.coefficients)

    def value(self, semigroup: NumericalSemigroup) -> int:
        return sum(c * g for c, g in zip(self.coefficients, semigroup.generators))


def new_semigroup(raw_generators) -> NumericalSemigroup:
    """Build a numerical semigroup from any generating set.

    Duplicates are dropped, the set is sorted, and every generator that is
    representable in the smaller ones is removed, so the stored system is
    minimal.  Raises EmptyInputError, InvalidGeneratorError,
    RangeOverflowError or GcdNotOneError on bad input.
    """
    gens = [int(g) for g in raw_generators]
    if not gens:
        raise EmptyInputError("a numerical semigroup needs at least one generator")
    for g in gens:
        if g <= 0:
            raise InvalidGeneratorError(f"generators must be positive, got {g}")
        if g > INT63_MAX:
            raise RangeOverflowError(f"generator {g} exceeds the 63-bit range")
    gens = sorted(set(gens))
    if math.gcd(*gens) != 1:
        raise GcdNotOneError(f"gcd of {tuple(gens)} is {math.gcd(*gens)}, not 1")
    if gens[0] == 1:
        return NumericalSemigroup((1,))
    kept: list[int] = []
    for g in gens:
        # Any representation of g uses generators at most g, so testing
        # against the already kept (smaller) ones is enough.
        if not _representable(g, kept):
            kept.append(g)
    return NumericalSemigroup(tuple(kept))


def _representable(target: int, gens: list[int]) -> bool:
    """Coin-change membership of target over an ascending generator list."""
    if not gens:
        return False
    reach = bytearray(target + 1)
    reach[0] = 1
    for v in range(gens[0], target + 1):
        for g in gens:
            if g > v:
                break
            if reach[v - g]:
                reach[v] = 1
                break
    return bool(reach[target])


def _relax_apery(gens: tuple[int, ...], a: int) -> tuple[int, ...]:
    """Smallest member of each residue class mod a, indexed by residue.

    Fixed point relaxation: start from 0, repeatedly add one generator and
    reduce modulo a, keeping the minimum seen per class.  Since gcd of the
    generators is 1 every class is reached, and each improvement strictly
    lowers one entry, so the sweep loop terminates.
    """
    best: list[int | None] = [0] + [None] * (a - 1)
    changed = True
    while changed:
        changed = False
        for v in list(best):
            if v is None:
                continue
            for g in gens:
                w = v + g
                rr = w % a
                cur = best[rr]
                if cur is None or w < cur:
                    best[rr] = w
                    changed = True
    assert all(v is not None for v in best), "gcd 1 must reach every class"
    return tuple(best)  # type: ignore[arg-type]


def _apery_mod_multiplicity(S: NumericalSemigroup) -> tuple[int, ...]:
    cache = S._cache
    if cache.apery0 is None:
        elems = _relax_apery(S.generators, S.multiplicity)
        with cache.lock:
            if cache.apery0 is None:
                cache.apery0 = elems
    return cache.apery0


def contains(S: NumericalSemigroup, x: int) -> bool:
    """Membership via the residue criterion against the Apery set mod a_1."""
    if x < 0:
        return False
    return x >= _apery_mod_multiplicity(S)[x % S.multiplicity]


def frobenius(S: NumericalSemigroup) -> int:
    """Largest integer not in S.  Undefined when S is all of the naturals."""
    if S.multiplicity == 1:
        raise TrivialSemigroupError(
            "the semigroup is all nonnegative integers; no largest gap exists"
        )
    return max(_apery_mod_multiplicity(S)) - S.multiplicity


def apery_set(S: NumericalSemigroup, a: int | None = None) -> AperySet:
    """Apery set of S with respect to a member a (default: the multiplicity).

    The result holds, per residue class modulo a, the smallest member of S
    in that class; equivalently the members x with x - a not in S.
    """
    if a is None:
        a = S.multiplicity
    if a <= 0 or not contains(S, a):
        raise NotInSemigroupError(a, "the Apery modulus must be a positive member")
    if a == S.multiplicity:
        per_class = _apery_mod_multiplicity(S)
    else:
        per_class = _relax_apery(S.generators, a)
    top = max(per_class)
    if top > INT63_MAX:
        raise RangeOverflowError(f"Apery element {top} exceeds the 63-bit range")
    return AperySet(modulus=a, elements=tuple(sorted(per_class)))


def factorizations(S: NumericalSemigroup, x: int) -> list[Factorization]:
    """All coefficient vectors writing x in the generators.

    Bounded depth first search; the coefficient of generator a_i never
    exceeds x // a_i.  The list is in lexicographic coefficient order, so
    it is deterministic.  An x outside S yields the empty list.
    """
    if x < 0:
        return []
    gens = S.generators
    last = len(gens) - 1
    out: list[Factorization] = []
    coeffs = [0] * len(gens)

    def descend(i: int, rem: int) -> None:
        if i == last:
            q, rest = divmod(rem, gens[i])
            if rest == 0:
                coeffs[i] = q
                out.append(Factorization(tuple(coeffs)))
            return
        g = gens[i]
        for c in range(rem // g + 1):
            coeffs[i] = c
            descend(i + 1, rem - c * g)
        coeffs[i] = 0

    descend(0, x)
    return out


def _grow_orders(S: NumericalSemigroup, upto: int) -> list[int]:
    """Extend the cached order table through index `upto` and return it."""
    cache = S._cache
    tab = cache.orders
    if len(tab) > upto:
        return tab
    gens = S.generators
    with cache.lock:
        for v in range(len(tab), upto + 1):
            best = -1
            for g in gens:
                if g > v:
                    break
                prev = tab[v - g]
                if prev > best:
                    best = prev
            tab.append(best + 1 if best >= 0 else -1)
    return tab


def order(S: NumericalSemigroup, x: int) -> int:
    """Largest factorization length of x, i.e. max total_order over F(x).

    ord(0) = 0.  Raises NotInSemigroupError when x is not a member.
    """
    if x < 0 or not contains(S, x):
        raise NotInSemigroupError(x)
    return _grow_orders(S, x)[x]


def length_set(S: NumericalSemigroup, x: int) -> set[int]:
    """Set of factorization lengths of a member x."""
    if x < 0 or not contains(S, x):
        raise NotInSemigroupError(x)
    return {f.total_order for f in factorizations(S, x)}
