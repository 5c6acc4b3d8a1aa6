"""Herzog's determinantal data for nonsymmetric 3-generated semigroups.

For generators ordered (a1, a2, a3) with variables X, Y, Z the defining ideal
is generated by the 2x2 minors of

    X^alpha    Y^beta     Z^gamma
    Y^beta_p   Z^gamma_p  X^alpha_p
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import permutations
from typing import Optional, Sequence, Tuple

from .errors import GorensteinError, NotThreeGeneratedError, ParamError
from .semigroup import NumericalSemigroup, from_generators

_SHORT_KEYS = {"m": "degree", "m_p": "degree_p", "b": "pf_gap"}
_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


@dataclass(frozen=True)
class HerzogData:
    ordered_gens: Tuple[int, int, int]
    alpha: int
    beta: int
    gamma: int
    alpha_p: int
    beta_p: int
    gamma_p: int
    degree: int
    degree_p: int
    pf_gap: int
    d1: int
    d2: int
    d3: int

    @property
    def exponents(self) -> Tuple[int, int, int, int, int, int]:
        return (self.alpha, self.beta, self.gamma, self.alpha_p, self.beta_p, self.gamma_p)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["ordered_gens"] = list(self.ordered_gens)
        # report keys keep the conventional short names
        for key, field in _SHORT_KEYS.items():
            out[key] = out.pop(field)
        return out


def _representation(target: int, x: int, y: int) -> Optional[Tuple[int, int]]:
    """The representation target = i*x + j*y with i, j >= 1, when exactly one exists."""
    found = None
    for i in range(1, target // x + 1):
        rest = target - i * x
        if rest > 0 and rest % y == 0:
            if found is not None:
                return None
            found = (i, rest // y)
    return found


def _sub_semigroup_contains(x: int, gens: Sequence[int]) -> bool:
    reach = [False] * (x + 1)
    reach[0] = True
    for val in range(1, x + 1):
        reach[val] = any(val >= gen and reach[val - gen] for gen in gens)
    return reach[x]


def _data_for_order(order: Tuple[int, int, int]) -> Optional[HerzogData]:
    a1, a2, a3 = order
    rel = {}
    for i, ai in enumerate(order):
        others = [order[j] for j in range(3) if j != i]
        k = 1
        while not _sub_semigroup_contains(k * ai, others):
            k += 1
        rep = _representation(k * ai, others[0], others[1])
        if rep is None:
            return None
        rel[i] = (k, rep)
    # rel[i] = (c_i, (r_ij, r_ik)) with j < k among the remaining indices
    c1, (r12, r13) = rel[0]
    c2, (r21, r23) = rel[1]
    c3, (r31, r32) = rel[2]
    alpha, alpha_p = r21, r31
    beta, beta_p = r32, r12
    gamma, gamma_p = r13, r23
    if not (
        (alpha + alpha_p) * a1 == beta_p * a2 + gamma * a3
        and (beta + beta_p) * a2 == alpha * a1 + gamma_p * a3
        and (gamma + gamma_p) * a3 == alpha_p * a1 + beta * a2
    ):
        return None
    d1 = a3 * (gamma + gamma_p)
    d2 = a1 * (alpha + alpha_p)
    d3 = a2 * (beta + beta_p)
    degree = a1 * alpha + d1
    degree_p = a1 * alpha_p + d3
    return HerzogData(
        order, alpha, beta, gamma, alpha_p, beta_p, gamma_p, degree, degree_p, abs(degree - degree_p), d1, d2, d3
    )


def _check_shape(sg: NumericalSemigroup) -> None:
    if sg.embedding_dim != 3:
        raise NotThreeGeneratedError(f"{sg} has embedding dimension {sg.embedding_dim}, not 3")
    if sg.cm_type == 1:
        raise GorensteinError(f"{sg} is symmetric; its ideal is a complete intersection")


def herzog_data(sg: NumericalSemigroup, order: Optional[Sequence[int]] = None) -> HerzogData:
    """Herzog exponents, normalized so the largest generator plays the Z role and m' > m.

    An explicit ``order`` (a permutation of the generators) bypasses the normalization.
    """
    _check_shape(sg)
    if order is not None:
        order = tuple(order)
        if sorted(order) != list(sg.generators):
            raise ParamError(f"{order} is not an ordering of the generators of {sg}")
        data = _data_for_order(order)
        if data is None:
            raise GorensteinError(f"no positive Herzog representation for {sg}")
        return data
    small, mid, large = sg.generators
    candidates = [(small, mid, large), (mid, small, large)] + [perm for perm in permutations(sg.generators) if perm[2] != large]
    fallback = None
    for perm in candidates:
        data = _data_for_order(perm)
        if data is None:
            continue
        if data.degree_p > data.degree:
            return data
        fallback = fallback or data
    if fallback is None:
        raise GorensteinError(f"no positive Herzog representation for {sg}")
    return fallback


def goto_rank_via_theorem(sg: NumericalSemigroup) -> Optional[int]:
    """Closed-form rank: None unless three times the degree gap lies in the semigroup, else the exponent product on the larger-degree side."""
    data = herzog_data(sg)
    if not sg.contains(3 * data.pf_gap):
        return None
    if data.degree_p > data.degree:
        return data.alpha * data.beta * data.gamma
    return data.alpha_p * data.beta_p * data.gamma_p


def e3_family(rank: int, alpha: int) -> NumericalSemigroup:
    """<3, 2*rank + alpha, rank + 2*alpha> for alpha > rank and alpha not congruent to rank mod 3."""
    if rank < 1:
        raise ParamError(f"rank must be at least 1, got {rank}")
    if alpha < rank + 1:
        raise ParamError(f"alpha = {alpha} must be at least rank + 1 = {rank + 1}")
    if (alpha - rank) % 3 == 0:
        raise ParamError(f"alpha = {alpha} is congruent to rank = {rank} mod 3")
    return from_generators([3, 2 * rank + alpha, rank + 2 * alpha])


def _monomial(var: str, exp: int) -> str:
    return var if exp == 1 else var + str(exp).translate(_SUP)


def emit_matrix(sg: NumericalSemigroup, order: Optional[Sequence[int]] = None) -> str:
    data = herzog_data(sg, order)
    top = " ".join([_monomial("X", data.alpha), _monomial("Y", data.beta), _monomial("Z", data.gamma)])
    bottom = " ".join([_monomial("Y", data.beta_p), _monomial("Z", data.gamma_p), _monomial("X", data.alpha_p)])
    a1, a2, a3 = data.ordered_gens
    lines = [
        f"(X, Y, Z) = (t^{a1}, t^{a2}, t^{a3})",
        top,
        bottom,
        f"Δ1 = {_monomial('Z', data.gamma + data.gamma_p)} - {_monomial('X', data.alpha_p)}{_monomial('Y', data.beta)}   (degree {data.d1})",
        f"Δ2 = {_monomial('X', data.alpha + data.alpha_p)} - {_monomial('Y', data.beta_p)}{_monomial('Z', data.gamma)}   (degree {data.d2})",
        f"Δ3 = {_monomial('Y', data.beta + data.beta_p)} - {_monomial('X', data.alpha)}{_monomial('Z', data.gamma_p)}   (degree {data.d3})",
        f"m = {data.degree}, m' = {data.degree_p}, b = {data.pf_gap}",
    ]
    return "\n".join(lines)
