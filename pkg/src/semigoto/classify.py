"""Goto-rank classification of numerical semigroup rings.

Everything is derived from the chain of canonical powers R, K, K^2, ... which
stabilizes at the hull S = R[K]; the conductor ideal is R : S.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .errors import DecompositionUnavailable, NotGotoError
from .ideal import RelativeIdeal, canonical_ideal, length_between, mu_quotient
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class CanonicalData:
    semigroup: NumericalSemigroup
    powers: Tuple[RelativeIdeal, ...]  # R, K, K^2, ... ending with two equal entries
    reduction: int  # least exponent after which the powers of K stop growing

    @property
    def unit(self) -> RelativeIdeal:
        return self.powers[0]

    @property
    def canon(self) -> RelativeIdeal:
        return self.powers[1]

    def power(self, k: int) -> RelativeIdeal:
        return self.powers[min(k, len(self.powers) - 1)]

    @property
    def hull(self) -> RelativeIdeal:
        return self.powers[-1]

    @property
    def conductor_ideal(self) -> RelativeIdeal:
        return self.unit.colon(self.hull)


@lru_cache(maxsize=4096)
def canonical_data(sg: NumericalSemigroup) -> CanonicalData:
    ring = RelativeIdeal.unit(sg)
    canon = canonical_ideal(sg)
    powers = [ring, canon]
    # each strict step removes at least one gap of K, so this bound is safe
    budget = len(canon.minus(RelativeIdeal.interval(sg, 0))) + len(RelativeIdeal.interval(sg, 0).minus(canon)) + 2
    while powers[-1] != powers[-2]:
        if len(powers) > budget + 2:
            raise RuntimeError(f"canonical powers of {sg} failed to stabilize")
        powers.append(powers[-1].product(canon))
    return CanonicalData(sg, tuple(powers), len(powers) - 2)


def ring_hull(sg: NumericalSemigroup) -> Tuple[RelativeIdeal, RelativeIdeal]:
    """The hull S = R[K] and the conductor ideal R : S."""
    data = canonical_data(sg)
    return data.hull, data.conductor_ideal


def is_goto(sg: NumericalSemigroup) -> bool:
    data = canonical_data(sg)
    return data.reduction <= 2


def goto_rank(sg: NumericalSemigroup) -> Optional[int]:
    """|K^2 minus K| when K^2 = K^3, otherwise None."""
    data = canonical_data(sg)
    if data.reduction > 2:
        return None
    return length_between(data.canon, data.power(2))


def len_R_mod_c(sg: NumericalSemigroup) -> int:
    data = canonical_data(sg)
    return length_between(data.conductor_ideal, data.unit)


def v_of_R_mod_c(sg: NumericalSemigroup) -> int:
    """Embedding dimension of R/c: minimal generators lying outside the conductor ideal."""
    cond = canonical_data(sg).conductor_ideal
    return sum(1 for gen in sg.generators if gen not in cond)


def mu_K2_mod_K(sg: NumericalSemigroup) -> int:
    data = canonical_data(sg)
    return mu_quotient(data.power(2), data.canon)


def rc_gorenstein(sg: NumericalSemigroup) -> bool:
    """Whether the artinian ring R/c has a one-dimensional socle (True when c = R)."""
    cond = canonical_data(sg).conductor_ideal
    outside = [x for x in range(cond.stable) if sg.contains(x) and x not in cond]
    if not outside:
        return True
    socle = [x for x in outside if all((x + gen) in cond for gen in sg.generators)]
    return len(socle) == 1


def decomposition_available(sg: NumericalSemigroup) -> bool:
    if sg.is_symmetric:
        return True
    return is_goto(sg) and mu_K2_mod_K(sg) == 1


def decompose_K_mod_R(sg: NumericalSemigroup) -> List[int]:
    """Lengths of the cyclic summands of K/R, one per pseudo-Frobenius number below the Frobenius number."""
    if not decomposition_available(sg):
        raise DecompositionUnavailable(f"R/c is not Gorenstein for {sg}")
    if sg.is_symmetric:
        return []
    frob = sg.frobenius
    parts = []
    for pf_elem in sg.pf:
        if pf_elem == frob:
            continue
        shift = frob - pf_elem
        parts.append(sum(1 for elem in sg.small_elements() if not sg.contains(elem + shift)))
    return sorted(parts, reverse=True)


def e1_of_canonical(sg: NumericalSemigroup) -> int:
    rank = goto_rank(sg)
    if rank is None:
        raise NotGotoError(f"{sg} is not Goto: K^2 != K^3")
    data = canonical_data(sg)
    return rank + length_between(data.unit, data.canon)


def decide_ggl(
    gorenstein: bool,
    goto: bool,
    rank: Optional[int],
    cm_type: int,
    rc_gor: bool,
    v_rc: int,
    len_k_r: int,
) -> Optional[bool]:
    """Generalized-Gorenstein verdict when one of the known criteria applies, else None."""
    if gorenstein:
        return True
    if not goto or not rc_gor:
        # GGL rings are Goto and have R/c Gorenstein
        return False
    if rank == 1:
        return True  # almost Gorenstein
    if cm_type == 2:
        return True
    if v_rc == 1:
        return len_k_r == rank * (cm_type - 1)
    return None


@dataclass
class GotoReport:
    semigroup: NumericalSemigroup
    is_goto: bool
    goto_rank: Optional[int]
    gorenstein: bool
    almost_gorenstein: bool
    two_agl: bool
    len_K_over_R: int
    len_R_over_c: int
    mu_K2_over_K: int
    v_R_over_c: int
    rc_gorenstein: bool
    ggl: Optional[bool]
    decomposition: Optional[List[int]]
    e1: Optional[int]
    min_mult: bool
    reduction_number: int = field(default=0)

    def to_dict(self) -> Dict[str, object]:
        sg = self.semigroup
        return {
            "semigroup": list(sg.generators),
            "frobenius": sg.frobenius,
            "pf": list(sg.pf),
            "cm_type": sg.cm_type,
            "is_goto": self.is_goto,
            "goto_rank": self.goto_rank,
            "gorenstein": self.gorenstein,
            "almost_gorenstein": self.almost_gorenstein,
            "two_agl": self.two_agl,
            "len_K_over_R": self.len_K_over_R,
            "len_R_over_c": self.len_R_over_c,
            "mu_K2_over_K": self.mu_K2_over_K,
            "v_R_over_c": self.v_R_over_c,
            "rc_gorenstein": self.rc_gorenstein,
            "ggl": self.ggl,
            "decomposition": self.decomposition,
            "e1": self.e1,
            "min_mult": self.min_mult,
            "reduction_number": self.reduction_number,
        }


@lru_cache(maxsize=4096)
def classify(sg: NumericalSemigroup) -> GotoReport:
    data = canonical_data(sg)
    gorenstein = sg.is_symmetric
    rank = goto_rank(sg)
    goto = rank is not None
    len_kr = length_between(data.unit, data.canon)
    rc_gor = rc_gorenstein(sg)
    v_rc = v_of_R_mod_c(sg)
    mu = mu_quotient(data.power(2), data.canon)
    decomposition = decompose_K_mod_R(sg) if decomposition_available(sg) else None
    return GotoReport(
        semigroup=sg,
        is_goto=goto,
        goto_rank=rank,
        gorenstein=gorenstein,
        almost_gorenstein=goto and rank <= 1,
        two_agl=rank == 2,
        len_K_over_R=len_kr,
        len_R_over_c=len_R_mod_c(sg),
        mu_K2_over_K=mu,
        v_R_over_c=v_rc,
        rc_gorenstein=rc_gor,
        ggl=decide_ggl(gorenstein, goto, rank, sg.cm_type, rc_gor, v_rc, len_kr),
        decomposition=decomposition,
        e1=rank + len_kr if goto else None,
        min_mult=sg.has_minimal_multiplicity(),
        reduction_number=data.reduction,
    )
