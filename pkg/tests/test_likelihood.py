from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wregret import (
    AmbiguityInterval,
    DomainError,
    ProbMeasure,
    WeightedCredalSet,
    ambiguity_interval,
    lower_probability,
    naive_lower,
    regret_likelihood,
    regret_likelihood_lower,
    upper_probability,
)

from conftest import coin_grid
from strategies import credal_sets, events, spaces


def reweighted(coin, weight_of_beta):
    return WeightedCredalSet(
        tuple(
            (measure, weight_of_beta(beta))
            for measure, beta in zip(coin.credal.measures, coin.betas)
        )
    )


def test_three_weighted_likelihood_values(three_weighted):
    space, credal = three_weighted.space, three_weighted.credal
    assert regret_likelihood(space.event(["a", "b"]), credal) == Fraction(4, 9)
    assert regret_likelihood(space.event(["b", "c"]), credal) == Fraction(4, 9)
    assert regret_likelihood(space.event("b"), credal) == Fraction(2, 3)
    assert regret_likelihood(space.full_event, credal) == 0
    assert regret_likelihood(space.empty_event, credal) == 1


def test_interval_endpoints_on_grid(coin):
    heads = coin.heads
    assert ambiguity_interval(heads, coin.credal) == AmbiguityInterval(
        Fraction(1, 3), Fraction(2, 3)
    )
    after_heads = reweighted(coin, lambda b: 3 * b / 2)
    assert ambiguity_interval(heads, after_heads) == AmbiguityInterval(
        Fraction(1, 3), Fraction(3, 8)
    )
    after_both = reweighted(coin, lambda b: 4 * b * (1 - b))
    assert ambiguity_interval(heads, after_both) == AmbiguityInterval(
        Fraction(11, 27), Fraction(16, 27)
    )


def test_naive_lower_values(coin):
    after_both = reweighted(coin, lambda b: 4 * b * (1 - b))
    assert naive_lower(coin.heads, after_both) == Fraction(8, 27)
    with_zero = WeightedCredalSet(
        (
            (after_both.measures[0], Fraction(0)),
            (after_both.measures[4], Fraction(1)),
        )
    )
    assert naive_lower(coin.heads, with_zero) == 0
    solo = WeightedCredalSet(((coin.credal.measures[0], Fraction(1)),))
    assert naive_lower(coin.heads, solo) == coin.credal.measures[0].prob(~coin.heads)


def test_lemma_chain_is_strict_on_the_grid(coin):
    after_both = reweighted(coin, lambda b: 4 * b * (1 - b))
    low = naive_lower(coin.heads, after_both)
    mid = regret_likelihood_lower(coin.heads, after_both)
    high = regret_likelihood(coin.heads, after_both)
    assert low < mid < high
    assert (low, mid, high) == (Fraction(8, 27), Fraction(11, 27), Fraction(16, 27))


def test_lower_at_extreme_events(coin):
    assert regret_likelihood_lower(coin.space.full_event, coin.credal) == 0
    assert regret_likelihood(coin.space.full_event, coin.credal) == 0
    interval = ambiguity_interval(coin.space.empty_event, coin.credal)
    assert (interval.lower, interval.upper) == (1, 1)


def test_interval_validation():
    with pytest.raises(DomainError):
        AmbiguityInterval(Fraction(2, 3), Fraction(1, 3))
    with pytest.raises(DomainError):
        AmbiguityInterval(Fraction(-1, 3), Fraction(1, 3))
    assert AmbiguityInterval("1/3", "2/3").width == Fraction(1, 3)


def test_lower_upper_probability_values(example_menus):
    x = example_menus
    e = x.space.event("s3")
    assert lower_probability(e, x.credal) == Fraction(1, 3)
    assert upper_probability(e, x.credal) == Fraction(3, 4)
    assert lower_probability(x.space.full_event, x.credal) == 1
    assert upper_probability(x.space.full_event, x.credal) == 1
    assert lower_probability(e, [x.pr1, x.pr2]) == Fraction(1, 3)


@settings(max_examples=80)
@given(st.data())
def test_lemma_chain_holds_everywhere(data):
    space = data.draw(spaces())
    credal = data.draw(credal_sets(space))
    event = data.draw(events(space))
    low = naive_lower(event, credal)
    mid = regret_likelihood_lower(event, credal)
    high = regret_likelihood(event, credal)
    assert low <= mid <= high
    interval = ambiguity_interval(event, credal)
    assert (interval.lower, interval.upper) == (mid, high)


@settings(max_examples=80)
@given(st.data())
def test_duality_of_lower_and_upper_probability(data):
    space = data.draw(spaces())
    credal = data.draw(credal_sets(space, unweighted=True))
    event = data.draw(events(space))
    assert upper_probability(event, credal) == 1 - lower_probability(~event, credal)


@settings(max_examples=80)
@given(st.data())
def test_unweighted_collapse_to_lower_probability(data):
    space = data.draw(spaces())
    credal = data.draw(credal_sets(space, unweighted=True))
    event = data.draw(events(space))
    assert regret_likelihood(event, credal) == 1 - lower_probability(event, credal)
    interval = ambiguity_interval(event, credal)
    assert interval.width == upper_probability(event, credal) - lower_probability(
        event, credal
    )


@settings(max_examples=80)
@given(st.data())
def test_likelihood_is_antimonotone(data):
    space = data.draw(spaces())
    credal = data.draw(credal_sets(space))
    small = data.draw(events(space))
    big = small | data.draw(events(space))
    assert regret_likelihood(small, credal) >= regret_likelihood(big, credal)


@settings(max_examples=80)
@given(st.data())
def test_subadditivity_on_complements(data):
    space = data.draw(spaces())
    credal = data.draw(credal_sets(space))
    e = data.draw(events(space))
    f = data.draw(events(space))
    assert regret_likelihood(~e, credal) + regret_likelihood(
        ~f, credal
    ) >= regret_likelihood(~(e | f), credal)


def test_grid_construction_matches_closed_forms():
    coin = coin_grid()
    assert coin.betas[0] == Fraction(1, 3)
    assert coin.betas[-1] == Fraction(2, 3)
    assert Fraction(1, 2) in coin.betas
    assert Fraction(5, 8) in coin.betas
    assert len(coin.betas) == 9
