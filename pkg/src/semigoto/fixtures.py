"""Published reference values, each packaged as a named self-check.

Every fixture returns ``(passed, observed)`` where ``observed`` is a short
rendering of the computed value, so a failing run shows what came out.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Tuple

from .classify import (
    classify,
    decompose_K_mod_R,
    e1_of_canonical,
    goto_rank,
    ring_hull,
    v_of_R_mod_c,
)
from .constructions import (
    blowup_chain,
    check_blowup_theorem,
    e_family,
    fiber_product_rank,
    hull_semigroup,
    quasi_trivial_rank,
)
from .herzog import e3_family, emit_matrix, goto_rank_via_theorem, herzog_data
from .hilbert import reduction_number, sally_filtration
from .ideal import RelativeIdeal, canonical_ideal, from_shifts, length_between
from .semigroup import from_generators as sg
from .semigroup import whole


@dataclass(frozen=True)
class Fixture:
    name: str
    check: Callable[[], Tuple[bool, str]]

    def run(self) -> Tuple[bool, str]:
        try:
            return self.check()
        except Exception as exc:  # a crash is a failed fixture, reported with its message
            return False, f"{type(exc).__name__}: {exc}"


def _eq(observed, expected) -> Tuple[bool, str]:
    return observed == expected, repr(observed)


def _family(rank: int):
    return sg([3, 3 * rank + 1, 3 * rank + 2])


def _K2(gens):
    semi = sg(gens)
    canon = canonical_ideal(semi)
    return semi, canon, canon.product(canon)


def _pf_fixtures() -> List[Fixture]:
    return [
        Fixture("<7,10,22> has PF {25,33} and conductor 34",
                lambda: _eq((sg([7, 10, 22]).pf, sg([7, 10, 22]).conductor), ((25, 33), 34))),
        Fixture("33 is a gap of <7,10,22>", lambda: _eq(33 in sg([7, 10, 22]), False)),
        Fixture("<4,11,13,14> has PF {7,9,10}", lambda: _eq(sg([4, 11, 13, 14]).pf, (7, 9, 10))),
        Fixture("<5,11,13,19> has PF {8,14,17}", lambda: _eq(sg([5, 11, 13, 19]).pf, (8, 14, 17))),
        Fixture("<8,13,15,17,19,22> has PF {9,11,14,18,20}",
                lambda: _eq(sg([8, 13, 15, 17, 19, 22]).pf, (9, 11, 14, 18, 20))),
        Fixture("<4,11,13,14> has minimal multiplicity",
                lambda: _eq(sg([4, 11, 13, 14]).has_minimal_multiplicity(), True)),
    ]


def _ideal_fixtures() -> List[Fixture]:
    def k_5_11():
        semi = sg([5, 11, 13, 19])
        return _eq(canonical_ideal(semi) == from_shifts(semi, [0, 3, 9]), True)

    def k2_5_11():
        semi, canon, K2 = _K2([5, 11, 13, 19])
        return _eq(K2 == canon.union(from_shifts(semi, [6, 12])) and K2 == K2.product(canon), True)

    def k2_8_13():
        semi, canon, K2 = _K2([8, 13, 15, 17, 19, 22])
        return _eq(K2 == canon.union(from_shifts(semi, [4])), True)

    def k_4_11():
        semi = sg([4, 11, 13, 14])
        return _eq(canonical_ideal(semi) == from_shifts(semi, [0, 1, 3]), True)

    def conductor_family():
        got = []
        for rank in range(1, 7):
            semi = _family(rank)
            cond = RelativeIdeal.unit(semi).colon(RelativeIdeal.interval(semi, 0))
            got.append(cond == RelativeIdeal.interval(semi, 3 * rank))
        return _eq(all(got), True)

    def kk_is_r():
        got = []
        for gens in ([4, 11, 13, 14], [5, 11, 13, 19], [7, 10, 22], [8, 13, 15, 17, 19, 22]):
            semi = sg(gens)
            canon = canonical_ideal(semi)
            got.append(canon.colon(canon) == RelativeIdeal.unit(semi))
        return _eq(all(got), True)

    def len_k_r_family():
        return _eq(
            [length_between(RelativeIdeal.unit(_family(rank)), canonical_ideal(_family(rank))) for rank in range(1, 7)],
            [1, 2, 3, 4, 5, 6],
        )

    def len_k2_k():
        semi, canon, K2 = _K2([5, 11, 13, 19])
        return _eq(length_between(canon, K2), 3)

    return [
        Fixture("<5,11,13,19>: K = R + Rt^3 + Rt^9", k_5_11),
        Fixture("<5,11,13,19>: K^2 = K + Rt^6 + Rt^12 = K^3", k2_5_11),
        Fixture("<8,13,15,17,19,22>: K^2 = K + Rt^4", k2_8_13),
        Fixture("<4,11,13,14>: K = R + Rt + Rt^3", k_4_11),
        Fixture("<3,3n+1,3n+2>: conductor starts at 3n for n = 1..6", conductor_family),
        Fixture("K : K = R on four examples", kk_is_r),
        Fixture("<3,3n+1,3n+2>: len(K/R) = n for n = 1..6", len_k_r_family),
        Fixture("<5,11,13,19>: len(K^2/K) = 3", len_k2_k),
    ]


def _classifier_fixtures() -> List[Fixture]:
    def hull_4_11():
        semi = sg([4, 11, 13, 14])
        hull, cond = ring_hull(semi)
        return _eq((hull == RelativeIdeal.interval(semi, 0), cond == RelativeIdeal.interval(semi, 11)), (True, True))

    def c_4_5_11():
        semi = sg([4, 5, 11])
        _, cond = ring_hull(semi)
        return _eq((cond == RelativeIdeal.interval(semi, 8), classify(semi).len_R_over_c), (True, 3))

    def rank_5_11():
        rep = classify(sg([5, 11, 13, 19]))
        return _eq((rep.goto_rank, rep.mu_K2_over_K, rep.ggl), (3, 2, False))

    def e_family_52():
        rep = classify(e_family(5, 2))
        return _eq((rep.goto_rank, rep.ggl), (2, False))

    def decomposition_family():
        bad = []
        for mult in range(4, 8):
            for rank in range(2, 6):
                got = decompose_K_mod_R(e_family(mult, rank))
                if got != [rank] + [rank - 1] * (mult - 3):
                    bad.append((mult, rank, got))
        return not bad, repr(bad) if bad else "all e=4..7, n=2..5 match"

    def decomposition_r2():
        return _eq([decompose_K_mod_R(_family(rank)) for rank in range(1, 7)], [[rank] for rank in range(1, 7)])

    return [
        Fixture("<4,11,13,14>: R[K] = k[[t]] and c = t^11 k[[t]]", hull_4_11),
        Fixture("<4,5,11>: len(R/c) = 3 with c = t^8 k[[t]]", c_4_5_11),
        Fixture("<3,3n+1,3n+2> has Goto rank n for n = 1..6",
                lambda: _eq([goto_rank(_family(rank)) for rank in range(1, 7)], [1, 2, 3, 4, 5, 6])),
        Fixture("<4,5,11> is not Goto (K^2 != K^3)", lambda: _eq(goto_rank(sg([4, 5, 11])), None)),
        Fixture("<7,10,22> is 4-Goto", lambda: _eq(goto_rank(sg([7, 10, 22])), 4)),
        Fixture("<8,13,15,17,19,22> is 3-Goto without minimal multiplicity",
                lambda: _eq((goto_rank(sg([8, 13, 15, 17, 19, 22])),
                             sg([8, 13, 15, 17, 19, 22]).has_minimal_multiplicity()), (3, False))),
        Fixture("<5,11,13,19> is 3-Goto with mu(K^2/K) = 2, not GGL", rank_5_11),
        Fixture("multiplicity-5 family at rank 2 is 2-Goto, not GGL", e_family_52),
        Fixture("<7,10,22>: v(R/c) = 2", lambda: _eq(v_of_R_mod_c(sg([7, 10, 22])), 2)),
        Fixture("<4,11,13,14> is 3-Goto, min mult, v(R/c) = 1", lambda: _eq(
            (goto_rank(sg([4, 11, 13, 14])), sg([4, 11, 13, 14]).has_minimal_multiplicity(),
             v_of_R_mod_c(sg([4, 11, 13, 14]))), (3, True, 1))),
        Fixture("minimal-multiplicity family: K/R summand lengths rank, then rank - 1 repeated", decomposition_family),
        Fixture("type 2 family: K/R is a single cyclic summand", decomposition_r2),
        Fixture("<3,4,5>: e1 = 2", lambda: _eq(e1_of_canonical(sg([3, 4, 5])), 2)),
    ]


def _herzog_fixtures() -> List[Fixture]:
    def exps_7_10():
        data = herzog_data(sg([7, 10, 22]))
        return _eq((data.ordered_gens, data.exponents, data.pf_gap, data.degree, data.degree_p), ((10, 7, 22), (2, 2, 1, 3, 4, 1), 8, 64, 72))

    def matrix_7_10():
        rows = emit_matrix(sg([7, 10, 22])).splitlines()[1:3]
        return _eq(rows, ["X² Y² Z", "Y⁴ Z X³"])

    def matrix_3_7_8():
        rows = emit_matrix(sg([3, 7, 8])).splitlines()[1:3]
        return _eq(rows, ["X² Y Z", "Y Z X³"])

    def e3_2_3():
        semi = e3_family(2, 3)
        return _eq((semi.generators, goto_rank(semi)), ((3, 7, 8), 2))

    return [
        Fixture("<7,10,22> ordered (10,7,22): exponents (2,2,1,3,4,1), degree gap 8", exps_7_10),
        Fixture("<7,10,22>: matrix X^2 Y^2 Z / Y^4 Z X^3", matrix_7_10),
        Fixture("<7,10,22>: closed form rank 4",
                lambda: _eq(goto_rank_via_theorem(sg([7, 10, 22])), 4)),
        Fixture("<4,5,11>: closed form says not Goto", lambda: _eq(goto_rank_via_theorem(sg([4, 5, 11])), None)),
        Fixture("<3,7,8>: closed form rank 2", lambda: _eq(goto_rank_via_theorem(sg([3, 7, 8])), 2)),
        Fixture("multiplicity-3 family at rank 2, alpha 3 is <3,7,8>, 2-Goto", e3_2_3),
        Fixture("<3,7,8>: matrix X^2 Y Z / Y Z X^3", matrix_3_7_8),
    ]


def _construction_fixtures() -> List[Fixture]:
    def arf_chain():
        bad = []
        for mult in range(4, 8):
            for rank in range(2, 6):
                chain = blowup_chain(e_family(mult, rank))
                ranks = [goto_rank(step) for step in chain]
                expected = [e_family(mult, rank, j) for j in range(rank - 1)] + [sg([3, 4, 5]), whole()]
                if chain != expected or ranks != list(range(rank, -1, -1)):
                    bad.append((mult, rank))
        return not bad, repr(bad) if bad else "ranks n, n-1, ..., 0 along every chain"

    def idealization_4_13():
        semi = sg([4, 13, 22, 27])
        return _eq((goto_rank(semi), quasi_trivial_rank(semi, hull_semigroup(semi))), (None, 4))

    def fiber():
        got = []
        for rank in range(2, 7):
            first = classify(_family(rank))
            got.append((fiber_product_rank(first, classify(sg([3, 7, 8])))[0], fiber_product_rank(first, classify(whole()))[0]))
        return _eq(got, [(rank + 1, rank) for rank in range(2, 7)])

    return [
        Fixture("blow-up of <3,7,8> has rank 1", lambda: _eq(check_blowup_theorem(sg([3, 7, 8])), True)),
        Fixture("blow-up of <3,10,11> has rank 2", lambda: _eq(check_blowup_theorem(sg([3, 10, 11])), True)),
        Fixture("Arf family chain drops the rank by one down to <3,4,5> and N", arf_chain),
        Fixture("<3,3n+1,3n+2> extended by N: rank n",
                lambda: _eq([quasi_trivial_rank(_family(rank), whole()) for rank in range(1, 7)], [1, 2, 3, 4, 5, 6])),
        Fixture("<4,13,22,27>: not Goto, idealization by c is 4-Goto", idealization_4_13),
        Fixture("fiber products with <3,7,8> and with k[[t]]: n+1 and n", fiber),
    ]


def _hilbert_fixtures() -> List[Fixture]:
    def red_two():
        return _eq({reduction_number(semi) for semi in [_family(2), sg([7, 10, 22]), sg([5, 11, 13, 19])]}, {2})

    def sally_one():
        return _eq([(sf.socle_degree, sf.sally_counts) for sf in (sally_filtration(sg(gens)) for gens in ([3, 4, 5], [3, 5, 7], [4, 5, 6, 7]))],
                   [(0, (1,))] * 3)

    return [
        Fixture("reduction number 2 for Goto non-Gorenstein examples", red_two),
        Fixture("rank 1 examples: one Sally layer with a single generator", sally_one),
    ]


def all_fixtures() -> List[Fixture]:
    return (
        _pf_fixtures()
        + _ideal_fixtures()
        + _classifier_fixtures()
        + _herzog_fixtures()
        + _construction_fixtures()
        + _hilbert_fixtures()
    )


def run_all() -> List[Tuple[str, bool, str]]:
    return [(fx.name, *fx.run()) for fx in all_fixtures()]
