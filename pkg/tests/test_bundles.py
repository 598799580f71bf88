from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from flagmorph.bundles import (LOW_RANK, REPEATED_BOTTOM, REPEATED_TOP, Outcome, SplittingType,
                               classify, dual_type, top_multiplicity)
from flagmorph.errors import DomainError


def test_tangent_bundle_is_inconclusive():
    c = classify(SplittingType(5, (2, 1, 1, 1, 1)))
    assert c.outcome is Outcome.INCONCLUSIVE and c.rule is None


def test_low_rank():
    c = classify(SplittingType(4, (5, 3, 2)))
    assert (c.outcome, c.rule) == (Outcome.SPLITS, LOW_RANK)


def test_repeated_top():
    t = SplittingType(4, (7, 7, 5, 3, 1))
    c = classify(t)
    assert (c.outcome, c.rule) == (Outcome.SPLITS, REPEATED_TOP)
    assert top_multiplicity(t) == 2


def test_repeated_bottom_only():
    c = classify(SplittingType(4, (9, 6, 1, 1, 0)))  # repeats in the middle
    assert c.outcome is Outcome.INCONCLUSIVE
    c = classify(SplittingType(5, (9, 6, 3, 0, 0)))
    assert c.matched == (REPEATED_BOTTOM,)


def test_entries_are_sorted():
    assert SplittingType(3, (1, 5, 2)).entries == (5, 2, 1)
    with pytest.raises(DomainError):
        SplittingType(0, (1,))
    with pytest.raises(DomainError):
        SplittingType(3, ())


@pytest.mark.parametrize("r", range(2, 7))
def test_m2_distinct_entries_inconclusive_unless_low_rank(r):
    # on P^2 the repeated-end rules need 1 <= k <= 0, so only R1 can fire
    for t in combinations_with_replacement(range(-3, 4), r):
        if len(set(t)) < 2:
            continue
        c = classify(SplittingType(2, t))
        if len(set(t)) == r:
            assert c.outcome is Outcome.INCONCLUSIVE
        assert REPEATED_TOP not in c.matched and REPEATED_BOTTOM not in c.matched


def test_json_shape():
    c = classify(SplittingType(4, (7, 7, 5, 3, 1)))
    assert c.to_json() == {"outcome": "Splits", "rule": "R2", "matched": ["R2"]}


@given(st.integers(1, 6), st.lists(st.integers(-5, 5), min_size=1, max_size=8))
def test_dual_symmetry(m, entries):
    t = SplittingType(m, tuple(entries))
    assert dual_type(dual_type(t)) == t
    assert classify(dual_type(t)).outcome is classify(t).outcome


def test_dual_swaps_top_and_bottom_rules():
    t = SplittingType(5, (9, 6, 3, 0, 0))
    assert classify(dual_type(t)).matched == (REPEATED_TOP,)
