"""Relative ideals of a numerical semigroup: value sets of fractional monomial ideals.

A relative ideal of a semigroup is a set of integers, closed under adding
semigroup members, bounded below and containing every integer from some
point on.  It is stored as its least member ``floor``, the least ``stable``
with ``[stable, oo)`` inside the set, and a bitmask of the members in
``[floor, stable)``.  Every graded piece of the ring
is at most one-dimensional, so lengths of quotients are plain set counts.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import BaseMismatchError, NotAnIdealError, NotContainedError
from .semigroup import NumericalSemigroup, iter_bits


def _ones(width: int) -> int:
    return (1 << width) - 1 if width > 0 else 0


class RelativeIdeal:
    __slots__ = ("base", "floor", "stable", "bits")

    def __init__(self, base: NumericalSemigroup, floor: int, stable: int, bits: int):
        # use the normalizing constructors; this one trusts its input
        self.base = base
        self.floor = floor
        self.stable = stable
        self.bits = bits

    @classmethod
    def _normalized(cls, base: NumericalSemigroup, lo: int, hi: int, bits: int) -> "RelativeIdeal":
        """Ideal whose members are ``lo + i`` for set bits ``i`` plus all of ``[hi, oo)``."""
        width = hi - lo
        bits &= _ones(width)
        if bits == 0:
            return cls(base, hi, hi, 0)
        low = (bits & -bits).bit_length() - 1
        lo += low
        bits >>= low
        width -= low
        holes = ~bits & _ones(width)
        if holes == 0:
            return cls(base, lo, lo, 0)
        top = holes.bit_length()  # one past the highest non-member
        return cls(base, lo, lo + top, bits & _ones(top))

    # constructors

    @classmethod
    def from_shifts(cls, sg: NumericalSemigroup, shifts: Iterable[int]) -> "RelativeIdeal":
        """The ideal generated by one monomial per entry of ``shifts``: a union of shifted copies of the base."""
        shifts = sorted(set(shifts))
        if not shifts:
            raise NotAnIdealError("an ideal needs at least one generator shift")
        lo = shifts[0]
        hi = lo + sg.conductor
        bits = 0
        for step in shifts:
            bits |= sg.mask << (step - lo)
        return cls._normalized(sg, lo, hi, bits)

    @classmethod
    def unit(cls, sg: NumericalSemigroup) -> "RelativeIdeal":
        return cls.from_shifts(sg, [0])

    @classmethod
    def maximal(cls, sg: NumericalSemigroup) -> "RelativeIdeal":
        return cls.from_shifts(sg, sg.generators)

    @classmethod
    def interval(cls, sg: NumericalSemigroup, start: int) -> "RelativeIdeal":
        """``start + N``; the normalization k[[t]] is ``interval(H, 0)``."""
        return cls(sg, start, start, 0)

    @classmethod
    def from_semigroup(cls, sg: NumericalSemigroup, over: NumericalSemigroup) -> "RelativeIdeal":
        """An over-semigroup viewed as a relative ideal of the base."""
        if not all(over.contains(gen) for gen in sg.generators):
            raise NotContainedError(f"{sg} is not contained in {over}")
        return cls._normalized(sg, 0, over.conductor, over.mask)

    @classmethod
    def from_elements(cls, sg: NumericalSemigroup, elements: Iterable[int], stable: int) -> "RelativeIdeal":
        """Members ``elements`` below ``stable`` plus all of ``[stable, oo)``; checked to be an ideal."""
        elements = [x for x in elements if x < stable]
        lo = min(elements + [stable])
        bits = 0
        for x in elements:
            bits |= 1 << (x - lo)
        lhs = cls._normalized(sg, lo, stable, bits)
        for x in lhs.members:
            for gen in sg.generators:
                if not lhs.contains(x + gen):
                    raise NotAnIdealError(f"{x} + {gen} is missing, so the set is not closed under +H")
        return lhs

    # queries

    def contains(self, x: int) -> bool:
        if x >= self.stable:
            return True
        if x < self.floor:
            return False
        return bool((self.bits >> (x - self.floor)) & 1)

    __contains__ = contains

    @property
    def members(self) -> Tuple[int, ...]:
        """Members in ``[floor, stable)``."""
        return tuple(self.floor + i for i in iter_bits(self.bits))

    def elements_below(self, bound: int) -> List[int]:
        return [x for x in range(self.floor, bound) if self.contains(x)]

    def indicator(self, lo: int, hi: int) -> int:
        """Bitmask of the members in ``[lo, hi)``, bit ``i`` standing for ``lo + i``."""
        width = hi - lo
        if width <= 0:
            return 0
        shift = self.floor - lo
        part = self.bits << shift if shift >= 0 else self.bits >> -shift
        part &= _ones(width)
        if self.stable < hi:
            start = max(self.stable, lo) - lo
            part |= _ones(width - start) << start
        return part

    def _check_base(self, other: "RelativeIdeal") -> None:
        if self.base != other.base:
            raise BaseMismatchError(f"ideals over {self.base} and {other.base}")

    def issubset(self, other: "RelativeIdeal") -> bool:
        self._check_base(other)
        lo = min(self.floor, other.floor)
        hi = max(self.stable, other.stable)
        return self.indicator(lo, hi) & ~other.indicator(lo, hi) == 0

    __le__ = issubset

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        return (
            self.base == other.base
            and self.floor == other.floor
            and self.stable == other.stable
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.base, self.floor, self.stable, self.bits))

    # arithmetic

    def product(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """Value set of the product ideal: the sumset {e + f}."""
        self._check_base(other)
        lo = self.floor + other.floor
        hi = min(self.stable + other.floor, self.floor + other.stable)
        # members of self below hi - other.floor, each contributing a shifted copy of other
        span = hi - other.floor
        f_ind = other.indicator(other.floor, hi - self.floor)
        acc = 0
        for i in iter_bits(self.indicator(self.floor, span)):
            acc |= f_ind << i
        return RelativeIdeal._normalized(self.base, lo, hi, acc)

    __mul__ = product

    def power(self, k: int) -> "RelativeIdeal":
        if k < 0:
            raise ValueError("negative power")
        out = RelativeIdeal.unit(self.base)
        for _ in range(k):
            out = out.product(self)
        return out

    def union(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """Ideal sum, whose value set is the union."""
        self._check_base(other)
        lo = min(self.floor, other.floor)
        hi = min(self.stable, other.stable)
        return RelativeIdeal._normalized(self.base, lo, hi, self.indicator(lo, hi) | other.indicator(lo, hi))

    __or__ = union

    def intersection(self, other: "RelativeIdeal") -> "RelativeIdeal":
        self._check_base(other)
        lo = max(self.floor, other.floor)
        hi = max(self.stable, other.stable)
        return RelativeIdeal._normalized(self.base, lo, hi, self.indicator(lo, hi) & other.indicator(lo, hi))

    __and__ = intersection

    def shift(self, k: int) -> "RelativeIdeal":
        """Multiply by the monomial t^k."""
        return RelativeIdeal(self.base, self.floor + k, self.stable + k, self.bits)

    def colon(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """``self : other`` = {x : x + other inside self}."""
        self._check_base(other)
        lo = self.floor - other.floor
        hi = self.stable - other.floor  # every x >= hi qualifies
        acc = 0
        for x in range(lo, hi):
            top = self.stable - x
            need = other.indicator(other.floor, top)
            have = self.indicator(other.floor + x, self.stable)
            if need & ~have == 0:
                acc |= 1 << (x - lo)
        return RelativeIdeal._normalized(self.base, lo, hi, acc)

    def minimal_generators(self) -> List[int]:
        """Exponents of a minimal monomial generating set: self minus (maximal ideal + self)."""
        scaled = RelativeIdeal.maximal(self.base).product(self)
        return self.minus(scaled)

    def minus(self, other: "RelativeIdeal") -> List[int]:
        """Elements of self that are not in other (a finite list whenever it is finite)."""
        lo = min(self.floor, other.floor)
        hi = max(self.stable, other.stable)
        diff = self.indicator(lo, hi) & ~other.indicator(lo, hi)
        return [lo + i for i in iter_bits(diff)]

    # serialization

    def to_dict(self) -> dict:
        return {"floor": self.floor, "stable": self.stable, "members": list(self.members)}

    @classmethod
    def from_dict(cls, sg: NumericalSemigroup, data: dict) -> "RelativeIdeal":
        return cls.from_elements(sg, data["members"], data["stable"])

    def __repr__(self) -> str:
        return f"RelativeIdeal(floor={self.floor}, stable={self.stable}, members={list(self.members)})"


def from_shifts(sg: NumericalSemigroup, shifts: Iterable[int]) -> RelativeIdeal:
    return RelativeIdeal.from_shifts(sg, shifts)


def product(lhs: RelativeIdeal, rhs: RelativeIdeal) -> RelativeIdeal:
    return lhs.product(rhs)


def colon(lhs: RelativeIdeal, rhs: RelativeIdeal) -> RelativeIdeal:
    return lhs.colon(rhs)


def length_between(inner: RelativeIdeal, outer: RelativeIdeal) -> int:
    """Length of outer/inner as a module over the ring, i.e. the size of the set difference."""
    inner._check_base(outer)
    if not inner.issubset(outer):
        raise NotContainedError(f"{inner} is not contained in {outer}")
    return len(outer.minus(inner))


def mu_quotient(lhs: RelativeIdeal, rhs: RelativeIdeal) -> int:
    """Minimal number of generators of lhs/rhs: members of lhs outside (maximal ideal * lhs) and rhs."""
    scaled = RelativeIdeal.maximal(lhs.base).product(lhs)
    return len(lhs.minus(scaled.union(rhs)))


def canonical_shifts(sg: NumericalSemigroup) -> List[int]:
    if sg.is_whole:
        return [0]
    frob = sg.frobenius
    return sorted(frob - pf_elem for pf_elem in sg.pf)


def canonical_ideal(sg: NumericalSemigroup) -> RelativeIdeal:
    """The fractional canonical ideal, generated by t^(frobenius - p) for p in PF."""
    return RelativeIdeal.from_shifts(sg, canonical_shifts(sg))


def canonical_ideal_by_duality(sg: NumericalSemigroup) -> RelativeIdeal:
    """{x : frobenius - x is not a member}, computed without the PF set."""
    frob = sg.frobenius
    cond = sg.conductor
    bits = 0
    for x in range(cond):
        if not sg.contains(frob - x):
            bits |= 1 << x
    return RelativeIdeal._normalized(sg, 0, cond, bits)
