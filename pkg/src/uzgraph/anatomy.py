"""Algebraic anatomy of a finite ring: units, zero divisors, ideals, radical, quotients.

Conventions:
- For |R| >= 2, zero counts as a zero divisor (0 * y = 0 for any y != 0).
- The zero ring has units {0}, no zero divisors, no maximal ideals and J = {0}.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Optional

import numpy as np

from .config import Limits
from .ring import FiniteRing, RingMismatchError, TooLargeError, ring_from_tables

log = logging.getLogger(__name__)

__all__ = [
    "Coset", "Ideal", "NotAnIdealError", "RingFacts", "TooLargeError",
    "cosets", "ideal_sum", "ideals", "ideals_bruteforce", "jacobson_by_units",
    "jacobson_radical", "make_ideal", "maximal_ideals", "principal_ideal",
    "quotient_ring", "ring_facts", "units", "zero_divisors",
]


class NotAnIdealError(ValueError):
    """A subset failed ideal closure. ``witness`` holds the elements that break it."""

    def __init__(self, prop: str, witness: tuple[int, ...]):
        self.property = prop
        self.witness = witness
        super().__init__(f"not an ideal: {prop} fails at {witness}")


@dataclass(frozen=True)
class Ideal:
    members: frozenset[int]
    order: int
    ring_name: str
    generators: tuple[int, ...] = field(default=(), compare=False)

    @property
    def proper(self) -> bool:
        return len(self.members) < self.order

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def sorted_members(self) -> list[int]:
        return sorted(self.members)

    def __repr__(self) -> str:
        gens = ",".join(map(str, self.generators))
        return f"Ideal(<{gens}>, size={len(self.members)})"


@dataclass(frozen=True)
class Coset:
    representative: int
    ideal: Ideal
    members: frozenset[int]


@dataclass(frozen=True)
class RingFacts:
    """Cached anatomy of one ring; immutable and safe to share across workers."""

    units: frozenset[int]
    zero_divisors: frozenset[int]
    ideals: tuple[Ideal, ...]
    maximal_ideals: tuple[Ideal, ...]
    jacobson: Ideal
    is_local: bool
    is_field: bool

    def to_dict(self, R: FiniteRing) -> dict[str, Any]:
        return {
            "ring": R.name,
            "kind": R.kind,
            "order": R.order,
            "zero": R.zero,
            "one": R.one,
            "units": sorted(self.units),
            "zero_divisors": sorted(self.zero_divisors),
            "num_ideals": len(self.ideals),
            "ideals": [i.sorted_members() for i in self.ideals],
            "num_maximal_ideals": len(self.maximal_ideals),
            "maximal_ideals": [i.sorted_members() for i in self.maximal_ideals],
            "jacobson": self.jacobson.sorted_members(),
            "is_local": self.is_local,
            "is_field": self.is_field,
        }


def _mask(R: FiniteRing, members: Iterable[int]) -> np.ndarray:
    m = np.zeros(R.order, dtype=bool)
    m[list(members)] = True
    return m


def _own(R: FiniteRing, I: Ideal) -> None:
    if I.order != R.order or I.ring_name != R.name:
        raise RingMismatchError(f"ideal of {I.ring_name} used with {R.name}")


def units(R: FiniteRing) -> frozenset[int]:
    """U(R) = {x : x*y = 1 for some y}; the zero ring gives {0}."""
    return frozenset(int(x) for x in np.flatnonzero((R.mul_table == R.one).any(axis=1)))


def zero_divisors(R: FiniteRing) -> frozenset[int]:
    """Z(R) = {x : x*y = 0 for some y != 0}; includes zero when |R| >= 2."""
    if R.is_trivial:
        return frozenset()
    hits = R.mul_table == R.zero
    hits[:, R.zero] = False
    return frozenset(int(x) for x in np.flatnonzero(hits.any(axis=1)))


def make_ideal(R: FiniteRing, members: Iterable[int], generators: Sequence[int] = ()) -> Ideal:
    """Validate ideal closure of ``members`` and wrap it; raise NotAnIdealError with a witness."""
    ms = sorted({R.check(int(x)) for x in members})
    if R.zero not in ms:
        raise NotAnIdealError("contains zero", (R.zero,))
    mask = _mask(R, ms)
    idx = np.array(ms, dtype=np.int64)

    sums = R.add_table[np.ix_(idx, idx)]
    bad = np.argwhere(~mask[sums])
    if len(bad):
        i, j = bad[0]
        raise NotAnIdealError("closed under addition", (ms[i], ms[j]))
    negs = R.neg_table[idx]
    bad = np.flatnonzero(~mask[negs])
    if len(bad):
        raise NotAnIdealError("closed under negation", (ms[bad[0]],))
    prods = R.mul_table[:, idx]
    bad = np.argwhere(~mask[prods])
    if len(bad):
        r, j = bad[0]
        raise NotAnIdealError("absorbs multiplication", (int(r), ms[j]))
    return Ideal(frozenset(ms), R.order, R.name, tuple(generators))


def principal_ideal(R: FiniteRing, a: int) -> Ideal:
    """<a> = R*a, which is already closed in a ring with identity."""
    R.check(a)
    members = frozenset(int(x) for x in np.unique(R.mul_table[a]))
    return Ideal(members, R.order, R.name, (a,))


def ideal_sum(R: FiniteRing, I: Ideal, J: Ideal) -> Ideal:
    _own(R, I)
    _own(R, J)
    a = np.array(sorted(I.members), dtype=np.int64)
    b = np.array(sorted(J.members), dtype=np.int64)
    members = frozenset(int(x) for x in np.unique(R.add_table[np.ix_(a, b)]))
    gens = tuple(dict.fromkeys(I.generators + J.generators))
    return Ideal(members, R.order, R.name, gens)


def _check_limit(R: FiniteRing, limit: int, what: str) -> None:
    if R.order > limit:
        raise TooLargeError(what, limit, R.order)


def _sort_ideals(found: Iterable[Ideal]) -> tuple[Ideal, ...]:
    return tuple(sorted(found, key=lambda i: (len(i.members), i.sorted_members())))


def ideals(R: FiniteRing, limits: Optional[Limits] = None) -> tuple[Ideal, ...]:
    """Every ideal exactly once: principal ideals closed under pairwise sums to a fixpoint.

    In a finite commutative ring with identity every ideal is a finite sum of
    principal ideals, so the fixpoint is complete.
    """
    limits = limits or Limits()
    _check_limit(R, limits.ideal_enumeration, "ideal enumeration")

    found: dict[frozenset[int], Ideal] = {}
    for a in R.elements():
        p = principal_ideal(R, a)
        found.setdefault(p.members, p)

    frontier = list(found.values())
    while frontier:
        fresh = []
        current = list(found.values())
        for I in frontier:
            for J in current:
                s = ideal_sum(R, I, J)
                if s.members not in found:
                    found[s.members] = s
                    fresh.append(s)
        frontier = fresh
    log.debug("%s: %d ideals", R.name, len(found))
    return _sort_ideals(found.values())


def ideals_bruteforce(R: FiniteRing, limit: int = Limits.subset_oracle) -> tuple[Ideal, ...]:
    """Subset brute force over all subsets containing zero. Test oracle for tiny rings."""
    _check_limit(R, limit, "subset ideal oracle")
    others = [x for x in R.elements() if x != R.zero]
    out = []
    for size in range(len(others) + 1):
        for combo in combinations(others, size):
            try:
                out.append(make_ideal(R, (R.zero, *combo)))
            except NotAnIdealError:
                continue
    return _sort_ideals(out)


def maximal_ideals(R: FiniteRing, all_ideals: Optional[Sequence[Ideal]] = None,
                   limits: Optional[Limits] = None) -> tuple[Ideal, ...]:
    """Proper ideals that are maximal under inclusion among proper ideals.

    Ordered by least nonzero member, so Z_15 gives <3> before <5>.
    """
    all_ideals = ideals(R, limits) if all_ideals is None else all_ideals
    proper = [I for I in all_ideals if I.proper]
    maximal = [I for I in proper if not any(I.members < J.members for J in proper)]
    return tuple(sorted(maximal, key=lambda I: (min(I.members - {R.zero}, default=R.zero), I.sorted_members())))


def jacobson_radical(R: FiniteRing, maximal: Optional[Sequence[Ideal]] = None,
                     limits: Optional[Limits] = None) -> Ideal:
    """Intersection of the maximal ideals; {0} for the zero ring."""
    maximal = maximal_ideals(R, limits=limits) if maximal is None else maximal
    if not maximal:
        return Ideal(frozenset({R.zero}), R.order, R.name, (R.zero,))
    members = frozenset.intersection(*(I.members for I in maximal))
    return Ideal(members, R.order, R.name, ())


def jacobson_by_units(R: FiniteRing) -> frozenset[int]:
    """{x : 1 - x*y is a unit for all y}. Cross-oracle for the radical."""
    unit_mask = _mask(R, units(R))
    one_minus = R.add_table[R.one][R.neg_table[R.mul_table]]
    return frozenset(int(x) for x in np.flatnonzero(unit_mask[one_minus].all(axis=1)))


def cosets(R: FiniteRing, I: Ideal) -> list[Coset]:
    """Cosets r + I, each represented by its smallest element, in representative order."""
    _own(R, I)
    idx = np.array(sorted(I.members), dtype=np.int64)
    seen = np.zeros(R.order, dtype=bool)
    out = []
    for r in R.elements():
        if seen[r]:
            continue
        members = R.add_table[r, idx]
        seen[members] = True
        out.append(Coset(r, I, frozenset(int(x) for x in members)))
    return out


def quotient_ring(R: FiniteRing, I: Ideal, *, name: Optional[str] = None) -> tuple[FiniteRing, np.ndarray]:
    """R/I as a verified table ring plus the projection array x -> index of x + I."""
    _own(R, I)
    I = make_ideal(R, I.members, I.generators)
    blocks = cosets(R, I)
    proj = np.empty(R.order, dtype=np.int64)
    for k, c in enumerate(blocks):
        proj[list(c.members)] = k
    reps = np.array([c.representative for c in blocks], dtype=np.int64)
    add = proj[R.add_table[np.ix_(reps, reps)]]
    mul = proj[R.mul_table[np.ix_(reps, reps)]]
    labels = [f"{R.label(int(r))}+I" for r in reps]
    Q = ring_from_tables(add, mul, name=name or f"quot:{R.name}/ideal", labels=labels)
    return Q, proj


def ring_facts(R: FiniteRing, limits: Optional[Limits] = None) -> RingFacts:
    """Compute and cache the whole anatomy of ``R`` in one pass."""
    all_ideals = ideals(R, limits)
    maximal = maximal_ideals(R, all_ideals)
    us = units(R)
    facts = RingFacts(
        units=us,
        zero_divisors=zero_divisors(R),
        ideals=all_ideals,
        maximal_ideals=maximal,
        jacobson=jacobson_radical(R, maximal),
        is_local=len(maximal) == 1,
        is_field=R.order >= 2 and us == frozenset(R.elements()) - {R.zero},
    )
    log.debug("%s: |U|=%d |Z|=%d maximal=%d local=%s",
              R.name, len(us), len(facts.zero_divisors), len(maximal), facts.is_local)
    return facts
