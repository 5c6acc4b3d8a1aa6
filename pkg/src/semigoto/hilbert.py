"""Hilbert functions of the canonical ideal moved inside the ring, and Sally-module counts.

The ideal is the canonical ideal shifted by its lift, which makes it a proper
ideal of the ring. Its powers are shifted powers of the canonical ideal, so
every length below is a count of integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .classify import canonical_data, goto_rank
from .errors import NotGotoError, ZeroRankError
from .ideal import RelativeIdeal
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class SallyFiltration:
    rank: int
    socle_degree: int
    sally_counts: Tuple[int, ...]

    def to_dict(self) -> Dict[str, object]:
        return {"rank": self.rank, "t": self.socle_degree, "s": list(self.sally_counts)}


def canonical_ideal_in_R(sg: NumericalSemigroup) -> Tuple[RelativeIdeal, int]:
    """The shifted canonical ideal and its lift: the least positive shift landing inside the semigroup."""
    canon = canonical_data(sg).canon
    lift = 1
    while not canon.shift(lift).issubset(RelativeIdeal.unit(sg)):
        lift += 1
    return canon.shift(lift), lift


def reduction_number(sg: NumericalSemigroup) -> int:
    return canonical_data(sg).reduction


def hilbert_lengths(sg: NumericalSemigroup, m_max: int) -> List[int]:
    """Colengths of the first m_max powers of the shifted canonical ideal."""
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    data = canonical_data(sg)
    _, lift = canonical_ideal_in_R(sg)
    ring = data.unit
    return [len(ring.minus(data.power(exp).shift(exp * lift))) for exp in range(1, m_max + 1)]


@dataclass(frozen=True)
class HilbertData:
    e0: int
    e1: int
    red: int
    len_R_mod_I: int
    lengths: Tuple[int, ...]

    def to_dict(self) -> Dict[str, object]:
        return {"e0": self.e0, "e1": self.e1, "red": self.red}


def hilbert_data(sg: NumericalSemigroup) -> HilbertData:
    """e0 and e1 read off the linear tail of the Hilbert function."""
    red = reduction_number(sg)
    _, lift = canonical_ideal_in_R(sg)
    m_max = red + 3
    lengths = hilbert_lengths(sg, m_max)
    tail = [lift * k - lengths[k - 1] for k in range(m_max - 2, m_max + 1)]
    if len(set(tail)) != 1:
        raise ArithmeticError(f"Hilbert function of {sg} is not linear past the reduction number: {tail}")
    return HilbertData(lift, tail[0], red, lengths[0], tuple(lengths))


def fitted_e1(sg: NumericalSemigroup) -> int:
    return hilbert_data(sg).e1


def check_hilbert_formula(sg: NumericalSemigroup) -> bool:
    """Check every computed length past the first against the linear formula in e0, len(R/I) and the rank."""
    rank = goto_rank(sg)
    if rank is None:
        raise NotGotoError(f"{sg} is not Goto")
    hd = hilbert_data(sg)
    e0 = hd.e0
    first = hd.len_R_mod_I
    lengths = hilbert_lengths(sg, hd.red + 4)
    if lengths[0] != first:
        return False
    return all(lengths[k] == e0 * (k + 1) - (e0 - first + rank) for k in range(1, len(lengths)))


def sally_filtration(sg: NumericalSemigroup) -> SallyFiltration:
    """Socle degree and per-layer generator counts of the maximal-ideal filtration of K^2/K."""
    rank = goto_rank(sg)
    if rank is None:
        raise NotGotoError(f"{sg} is not Goto")
    if rank == 0:
        raise ZeroRankError(f"{sg} is Gorenstein; its Sally module vanishes")
    data = canonical_data(sg)
    canon = data.canon
    maximal_ideal = RelativeIdeal.maximal(sg)
    layers = [data.power(2)]
    while not layers[-1].issubset(canon):
        layers.append(maximal_ideal.product(layers[-1]))
    socle_degree = len(layers) - 2
    # layers[j] is the j-th maximal-ideal multiple of K^2; count what each adds beyond the next
    per_layer = [len(layers[j].minus(layers[j + 1].union(canon))) for j in range(socle_degree + 1)]
    counts = tuple(reversed(per_layer))
    if sum(counts) != rank:
        raise ArithmeticError(f"Sally filtration of {sg} sums to {sum(counts)}, rank is {rank}")
    return SallyFiltration(rank, socle_degree, counts)


def northcott_gap(sg: NumericalSemigroup) -> int:
    """How far e1 exceeds e0 - len(R/I); zero for symmetric semigroups."""
    hd = hilbert_data(sg)
    return hd.e1 - (hd.e0 - hd.len_R_mod_I)


def summary(sg: NumericalSemigroup) -> Dict[str, object]:
    hd = hilbert_data(sg)
    out: Dict[str, object] = {"rank": goto_rank(sg), "t": None, "s": None}
    rank = out["rank"]
    if rank:
        sf = sally_filtration(sg)
        out["t"], out["s"] = sf.socle_degree, list(sf.sally_counts)
    out.update(hd.to_dict())
    _, lift = canonical_ideal_in_R(sg)
    out["a"] = lift
    return out
