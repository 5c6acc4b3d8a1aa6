from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from semigoto.classify import classify, goto_rank
from semigoto.constructions import (
    blowup,
    blowup_by_colons,
    blowup_chain,
    chain_report,
    check_blowup_theorem,
    e_family,
    fiber_product_rank,
    fiber_report,
    hull_semigroup,
    idealization_report,
    is_arf,
    is_arf_by_pattern,
    quasi_trivial_rank,
)
from semigoto.errors import ExtensionError, PreconditionError
from semigoto.semigroup import from_generators, whole

gens_strategy = st.lists(st.integers(2, 19), min_size=2, max_size=5).filter(lambda gens: gcd(*gens) == 1)


def three(rank):
    return from_generators([3, 3 * rank + 1, 3 * rank + 2])


def test_blowup_examples():
    assert blowup(from_generators([3, 4, 5])) == whole()
    assert blowup(from_generators([7, 10, 22])) == from_generators([3, 7])
    assert blowup(whole()) == whole()


def test_blowup_check_on_min_mult_example():
    sg = from_generators([4, 11, 13, 14])
    assert check_blowup_theorem(sg)
    assert goto_rank(blowup(sg)) == 2
    with pytest.raises(PreconditionError):
        check_blowup_theorem(from_generators([7, 10, 22]))
    with pytest.raises(PreconditionError):
        check_blowup_theorem(from_generators([3, 4, 5]))


@pytest.mark.parametrize("mult,rank", [(4, 2), (4, 4), (5, 3), (6, 2)])
def test_arf_family_rank_descends(mult, rank):
    sg = e_family(mult, rank)
    chain = blowup_chain(sg)
    assert len(chain) == rank + 1
    assert chain[rank - 1] == from_generators([3, 4, 5]) and chain[rank] == whole()
    assert [goto_rank(step) for step in chain] == list(range(rank, -1, -1))
    for j in range(rank - 1):
        assert chain[j] == e_family(mult, rank, shift=j)
    assert is_arf(sg) and chain_report(sg).rule == "arf"


def test_e_family_rejects_small_parameters():
    with pytest.raises(ValueError):
        e_family(3, 2)


def test_quasi_trivial_ranks():
    sg = from_generators([4, 13, 22, 27])
    assert quasi_trivial_rank(sg, hull_semigroup(sg)) == 4
    rep = idealization_report(sg, hull_semigroup(sg))
    assert rep.kind == "quasi_trivial" and rep.derived_rank == 4
    with pytest.raises(ExtensionError):
        quasi_trivial_rank(sg, sg)
    with pytest.raises(ExtensionError):
        quasi_trivial_rank(from_generators([3, 4, 5]), from_generators([2, 5]))


@pytest.mark.parametrize("rank", range(1, 6))
def test_fiber_with_two_goto(rank):
    product_rank, _ = fiber_product_rank(classify(three(rank)), classify(from_generators([3, 7, 8])))
    assert product_rank == rank + 1


@pytest.mark.parametrize("rank", range(1, 6))
def test_fiber_with_dvr(rank):
    product_rank, _ = fiber_product_rank(classify(three(rank)), classify(whole()))
    assert product_rank == rank


def test_fiber_edge_cases():
    assert fiber_report(whole(), whole()).derived_rank == 0
    assert fiber_report(from_generators([3, 10, 11]), from_generators([3, 7, 8])).derived_rank == 4
    assert fiber_report(from_generators([4, 5, 11]), from_generators([3, 4, 5])).derived_rank is None
    assert fiber_report(from_generators([3, 4, 5]), from_generators([3, 4, 5])).derived_rank == 1


@settings(max_examples=200, deadline=None)
@given(gens_strategy)
def test_chain_and_arf_laws(gens):
    sg = from_generators(gens)
    chain = blowup_chain(sg)
    assert chain[-1] == whole() and len(chain) <= sg.genus + 1
    assert is_arf(sg) == is_arf_by_pattern(sg)
    if sg.has_minimal_multiplicity():
        assert blowup(sg) == blowup_by_colons(sg)
        rank = goto_rank(sg)
        if rank is not None and rank >= 2:
            assert check_blowup_theorem(sg)
        if rank == 1:
            assert blowup(sg).cm_type == 1


@settings(max_examples=150, deadline=None)
@given(gens_strategy)
def test_quasi_trivial_to_hull_is_conductor_colength(gens):
    sg = from_generators(gens)
    rep = classify(sg)
    if rep.goto_rank:
        assert quasi_trivial_rank(sg, hull_semigroup(sg)) == rep.len_R_over_c
