"""Numerical semigroups and their classical invariants.

A semigroup is stored as a membership bitmask over ``[0, conductor)``;
everything at or above the conductor is a member.
"""

from __future__ import annotations

import heapq
from functools import reduce
from math import gcd
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import EmptyError, GcdError, NotMemberError, WholeSemigroupError


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of the set bits of a non-negative int, ascending."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def _apery_dijkstra(gens: Sequence[int], modulus: int) -> List[int]:
    # shortest path over residues, edges labelled by generators
    dist: List[Optional[int]] = [None] * modulus
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        dist_here, residue = heapq.heappop(heap)
        if dist_here != dist[residue]:
            continue
        for gen in gens:
            nd = dist_here + gen
            nr = nd % modulus
            old = dist[nr]
            if old is None or nd < old:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist  # type: ignore[return-value]


class NumericalSemigroup:
    """A numerical semigroup with cached Apery set, PF set, type and genus.

    Build instances with :func:`from_generators` (or the classmethods); the
    generating system is always minimal and sorted.
    """

    __slots__ = (
        "generators",
        "multiplicity",
        "embedding_dim",
        "frobenius",
        "conductor",
        "pf",
        "cm_type",
        "genus",
        "mask",
        "_apery",
    )

    generators: Tuple[int, ...]
    multiplicity: int
    embedding_dim: int
    frobenius: int
    conductor: int
    pf: Tuple[int, ...]
    cm_type: int
    genus: int
    mask: int

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> "NumericalSemigroup":
        gens = list(gens)
        if not gens or any(gen <= 0 for gen in gens):
            raise EmptyError(f"generators must be a nonempty list of positive integers, got {gens}")
        if reduce(gcd, gens) != 1:
            raise GcdError(f"gcd of {sorted(set(gens))} is {reduce(gcd, gens)}, not 1")
        least = min(gens)
        ap = _apery_dijkstra(sorted(set(gens)), least)
        conductor = max(ap) - least + 1
        mask = 0
        for x in range(conductor):
            if x >= ap[x % least]:
                mask |= 1 << x
        return cls.from_mask(mask, conductor)

    @classmethod
    def from_mask(cls, mask: int, conductor: int) -> "NumericalSemigroup":
        """Semigroup whose members below ``conductor`` are the set bits of ``mask``.

        The caller guarantees the set is additively closed and that
        ``conductor - 1`` is a gap (or ``conductor == 0``).
        """
        self = object.__new__(cls)
        mask &= (1 << conductor) - 1
        self.mask = mask | (1 if conductor else 0)
        self.conductor = conductor
        self.frobenius = conductor - 1
        self.genus = conductor - bin(self.mask).count("1") if conductor else 0
        if conductor == 0:
            self.multiplicity = 1
            self._apery = (0,)
            self.generators = (1,)
            self.embedding_dim = 1
            self.pf = ()
            self.cm_type = 1
            return self
        least = 1
        while not (self.mask >> least) & 1 and least < conductor:
            least += 1
        self.multiplicity = least
        ap = self._scan_apery(least)
        self._apery = tuple(ap)
        nonzero = [elem for elem in ap if elem]
        mingens = [least]
        for elem in nonzero:
            if not any(other < elem and self.contains(elem - other) for other in nonzero):
                mingens.append(elem)
        self.generators = tuple(sorted(mingens))
        self.embedding_dim = len(self.generators)
        maximal = [elem for elem in nonzero if not any(other > elem and self.contains(other - elem) for other in nonzero)]
        self.pf = tuple(sorted(elem - least for elem in maximal))
        self.cm_type = len(self.pf)
        return self

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> "NumericalSemigroup":
        gaps = set(gaps)
        if not gaps:
            return cls.from_mask(0, 0)
        cond = max(gaps) + 1
        mask = ((1 << cond) - 1) & ~sum(1 << gap for gap in gaps)
        return cls.from_mask(mask, cond)

    @classmethod
    def from_members(cls, members: Iterable[int]) -> "NumericalSemigroup":
        """Semigroup generated by an arbitrary (possibly redundant) set of members."""
        members = [x for x in members if x > 0]
        if not members:
            raise EmptyError("no positive members given")
        return cls.from_generators(members)

    def _scan_apery(self, modulus: int) -> List[int]:
        ap: List[Optional[int]] = [None] * modulus
        missing = modulus
        x = 0
        while missing:
            if self.contains(x) and ap[x % modulus] is None:
                ap[x % modulus] = x
                missing -= 1
            x += 1
        return ap  # type: ignore[return-value]

    # membership

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        if x >= self.conductor:
            return True
        return bool((self.mask >> x) & 1)

    __contains__ = contains

    @property
    def is_whole(self) -> bool:
        return self.conductor == 0

    @property
    def is_symmetric(self) -> bool:
        return self.cm_type == 1

    def gaps(self) -> List[int]:
        return [x for x in range(self.conductor) if not (self.mask >> x) & 1]

    def small_elements(self) -> List[int]:
        """Members below the conductor (0 included)."""
        return [x for x in range(self.conductor) if (self.mask >> x) & 1]

    def apery_set(self, modulus: Optional[int] = None) -> List[int]:
        """Least member in each residue class mod ``modulus``, indexed by residue."""
        if modulus is None or modulus == self.multiplicity:
            return list(self._apery)
        if modulus <= 0 or not self.contains(modulus):
            raise NotMemberError(f"{modulus} is not a positive member of {self}")
        return self._scan_apery(modulus)

    def pseudo_frobenius(self) -> List[int]:
        if self.is_whole:
            raise WholeSemigroupError("PF is not defined for the whole semigroup N")
        return list(self.pf)

    def has_minimal_multiplicity(self) -> bool:
        return self.multiplicity == self.embedding_dim

    def children(self) -> List["NumericalSemigroup"]:
        """Children in the semigroup tree: drop one minimal generator above the Frobenius number."""
        out = []
        for gen in self.generators:
            if gen > self.frobenius:
                cond = gen + 1
                mask = (self.mask | (((1 << cond) - 1) & ~((1 << self.conductor) - 1))) & ~(1 << gen)
                out.append(NumericalSemigroup.from_mask(mask, cond))
        return out

    # value semantics

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"NumericalSemigroup({list(self.generators)})"

    def __str__(self) -> str:
        if self.is_whole:
            return "N"
        return "<" + ",".join(map(str, self.generators)) + ">"


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(gens)


def whole() -> NumericalSemigroup:
    return NumericalSemigroup.from_mask(0, 0)


def parse_generators(text: str) -> List[int]:
    """Parse ``"a1,a2,...,ak"``; whitespace is ignored."""
    parts = [part.strip() for part in text.replace(" ", "").split(",") if part.strip()]
    if not parts:
        raise EmptyError(f"no generators in {text!r}")
    try:
        gens = [int(part) for part in parts]
    except ValueError as exc:
        raise EmptyError(f"cannot parse generator list {text!r}") from exc
    if any(gen <= 0 for gen in gens):
        raise EmptyError(f"generators must be positive integers, got {text!r}")
    return gens


def pseudo_frobenius_by_definition(sg: NumericalSemigroup) -> List[int]:
    """Filter the gaps directly: keep a gap when adding any generator lands inside."""
    return [gap for gap in sg.gaps() if all(sg.contains(gap + step) for step in sg.generators)]


def membership_sieve(gens: Sequence[int], bound: int) -> List[bool]:
    """Dynamic-programming membership table for ``<gens>`` over ``[0, bound)``."""
    table = [False] * bound
    if bound:
        table[0] = True
    for x in range(1, bound):
        table[x] = any(x >= gen and table[x - gen] for gen in gens)
    return table
