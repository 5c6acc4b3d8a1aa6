"""Blow-ups, Arf detection, quasi-trivial extensions and fiber products.

Fiber products and quasi-trivial extensions are not semigroup rings, so their
ranks come from closed-form rules over data of the factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .classify import GotoReport, canonical_data, classify, goto_rank
from .errors import ExtensionError, PreconditionError
from .ideal import RelativeIdeal, canonical_ideal
from .semigroup import NumericalSemigroup, from_generators


def blowup(sg: NumericalSemigroup) -> NumericalSemigroup:
    """Blow-up of the maximal ideal: subtract the multiplicity from every other generator."""
    if sg.is_whole:
        return sg
    mult = sg.multiplicity
    return from_generators([mult] + [gen - mult for gen in sg.generators if gen != mult])


def as_semigroup(ideal: RelativeIdeal) -> NumericalSemigroup:
    """Read a relative ideal that is closed under addition and has floor 0 as a semigroup."""
    if ideal.floor != 0:
        raise ValueError(f"{ideal} does not contain 0 as its least element")
    return NumericalSemigroup.from_mask(ideal.bits, ideal.stable)


def blowup_by_colons(sg: NumericalSemigroup) -> NumericalSemigroup:
    """Union of the endomorphism rings M^k : M^k, stabilized once M^(k+1) = e + M^k."""
    if sg.is_whole:
        return sg
    maximal_ideal = RelativeIdeal.maximal(sg)
    power = maximal_ideal
    while True:
        nxt = power.product(maximal_ideal)
        if nxt == power.shift(sg.multiplicity):
            return as_semigroup(power.colon(power))
        power = nxt


def blowup_chain(sg: NumericalSemigroup) -> List[NumericalSemigroup]:
    chain = [sg]
    while not chain[-1].is_whole:
        chain.append(blowup(chain[-1]))
    return chain


def is_arf(sg: NumericalSemigroup) -> bool:
    return all(step.has_minimal_multiplicity() for step in blowup_chain(sg))


def is_arf_by_pattern(sg: NumericalSemigroup) -> bool:
    """Arf pattern check on elements below the conductor: x + y - z stays inside for x >= y >= z."""
    small = sg.small_elements()
    for i, z in enumerate(small):
        for j in range(i, len(small)):
            y = small[j]
            for x in small[j:]:
                if not sg.contains(x + y - z):
                    return False
    return True


def check_blowup_theorem(sg: NumericalSemigroup) -> bool:
    """Under minimal multiplicity and rank at least 2, the blow-up should drop the rank by one."""
    rank = goto_rank(sg)
    if not sg.has_minimal_multiplicity() or rank is None or rank < 2:
        raise PreconditionError(f"{sg} needs minimal multiplicity and Goto rank at least 2 (rank {rank})")
    return goto_rank(blowup(sg)) == rank - 1


def hull_semigroup(sg: NumericalSemigroup) -> NumericalSemigroup:
    """Value semigroup of R[K]."""
    return as_semigroup(canonical_data(sg).hull)


def quasi_trivial_rank(sg: NumericalSemigroup, over: NumericalSemigroup) -> int:
    """Colength of the conductor of the extension; this is the rank of every quasi-trivial extension by it."""
    if over == sg:
        raise ExtensionError("the extension must differ from the base ring")
    if not all(over.contains(gen) for gen in sg.generators):
        raise ExtensionError(f"{over} does not contain {sg}")
    canon = canonical_ideal(sg)
    if not all(over.contains(x) for x in canon.members):
        raise ExtensionError(f"{over} does not contain the canonical ideal of {sg}")
    ring = RelativeIdeal.unit(sg)
    conductor_ideal = ring.colon(RelativeIdeal.from_semigroup(sg, over))
    return len(ring.minus(conductor_ideal))


def fiber_product_rank(first: GotoReport, second: GotoReport) -> Tuple[Optional[int], str]:
    """Goto rank of the fiber product over the residue field, with the rule applied."""
    dvr_p, dvr_q = first.semigroup.is_whole, second.semigroup.is_whole
    if dvr_p and dvr_q:
        return 0, "both factors are DVRs, so the product is Gorenstein"
    if not (first.is_goto and second.is_goto):
        return None, "a factor has K^2 != K^3, and the product is Goto only if both factors are"
    if first.goto_rank <= 1 and second.goto_rank <= 1:
        return 1, "both factors almost Gorenstein, so the product is almost Gorenstein but not Gorenstein"
    if first.gorenstein:
        return second.goto_rank, "first factor Gorenstein: rank of the second factor"
    if second.gorenstein:
        return first.goto_rank, "second factor Gorenstein: rank of the first factor"
    return first.goto_rank + second.goto_rank - 1, "both non-Gorenstein: sum of the ranks minus one"


@dataclass
class ConstructionReport:
    kind: str  # blowup_chain, quasi_trivial or fiber_product
    inputs: List[NumericalSemigroup]
    derived_rank: Optional[int] = None
    chain: Optional[List[Tuple[NumericalSemigroup, Optional[int]]]] = None
    rule: str = ""

    def to_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {
            "kind": self.kind,
            "inputs": [list(sg.generators) for sg in self.inputs],
            "derived_rank": self.derived_rank,
            "rule": self.rule,
        }
        if self.chain is not None:
            out["chain"] = [
                {"semigroup": list(step.generators), "goto_rank": step_rank, "min_mult": step.has_minimal_multiplicity()}
                for step, step_rank in self.chain
            ]
        return out


def chain_report(sg: NumericalSemigroup) -> ConstructionReport:
    chain = [(step, goto_rank(step)) for step in blowup_chain(sg)]
    return ConstructionReport("blowup_chain", [sg], chain[0][1], chain, "arf" if is_arf(sg) else "not arf")


def idealization_report(sg: NumericalSemigroup, over: NumericalSemigroup) -> ConstructionReport:
    rank = quasi_trivial_rank(sg, over)
    return ConstructionReport("quasi_trivial", [sg, over], rank, None, "colength of the conductor into the extension")


def fiber_report(H1: NumericalSemigroup, H2: NumericalSemigroup) -> ConstructionReport:
    rank, rule = fiber_product_rank(classify(H1), classify(H2))
    return ConstructionReport("fiber_product", [H1, H2], rank, None, rule)


def e_family(mult: int, rank: int, shift: int = 0) -> NumericalSemigroup:
    """Minimal-multiplicity family of rank ``rank - shift``; ``shift`` walks down its blow-up chain."""
    if mult < 4 or rank < 2:
        raise ValueError(f"the family needs multiplicity >= 4 and rank >= 2, got {mult} and {rank}")
    k = rank - shift
    return from_generators([mult] + [mult * k - mult + i for i in range(3, mult)] + [mult * k + 1, mult * k + 2])
