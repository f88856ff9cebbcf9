"""Regret-based likelihood, ambiguity intervals, and lower/upper probability.

The regret likelihood of an event is the worst case over a weighted credal
set of weight times the probability of the event's complement; smaller means
more likely (1 at the empty event, 0 at the full space).  Pairing it with
the dual bound 1 minus the complement's value yields an interval whose width
measures how ambiguous the event feels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import (
    DomainError,
    Event,
    ProbMeasure,
    Rat,
    WeightedCredalSet,
    as_measures,
    rat,
    rat_str,
)

__all__ = [
    "AmbiguityInterval",
    "regret_likelihood",
    "regret_likelihood_lower",
    "ambiguity_interval",
    "naive_lower",
    "lower_probability",
    "upper_probability",
]

_ONE = Fraction(1)


@dataclass(frozen=True)
class AmbiguityInterval:
    """Lower and upper regret-likelihood bounds for one event."""

    lower: Rat
    upper: Rat

    def __post_init__(self) -> None:
        lower, upper = rat(self.lower), rat(self.upper)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if not 0 <= lower <= upper <= 1:
            raise DomainError(
                f"need 0 <= lower <= upper <= 1, got "
                f"[{rat_str(lower)}, {rat_str(upper)}]"
            )

    @property
    def width(self) -> Rat:
        return self.upper - self.lower


def regret_likelihood(event: Event, credal: WeightedCredalSet) -> Rat:
    """Worst case of weight times the probability of the complement."""
    complement = event.complement
    return max(weight * measure.prob(complement) for measure, weight in credal)


def regret_likelihood_lower(event: Event, credal: WeightedCredalSet) -> Rat:
    """Dual lower bound: 1 minus the complement's regret likelihood.

    Equals the best case of 1 minus weight times the event's probability.
    """
    return _ONE - regret_likelihood(event.complement, credal)


def ambiguity_interval(event: Event, credal: WeightedCredalSet) -> AmbiguityInterval:
    """Pair the dual lower bound with the regret likelihood."""
    return AmbiguityInterval(
        regret_likelihood_lower(event, credal), regret_likelihood(event, credal)
    )


def naive_lower(event: Event, credal: WeightedCredalSet) -> Rat:
    """Best case of weight times the probability of the complement.

    Any near-zero weight drags this to zero regardless of the probabilities.
    It is kept as the weak end of the chain
    ``naive_lower(E) <= regret_likelihood_lower(E) <= regret_likelihood(E)``,
    which can be strict at both steps.
    """
    complement = event.complement
    return min(weight * measure.prob(complement) for measure, weight in credal)


def lower_probability(
    event: Event, measures: WeightedCredalSet | Iterable[ProbMeasure]
) -> Rat:
    """Smallest probability of the event over an unweighted set of measures."""
    return min(measure.prob(event) for measure in as_measures(measures))


def upper_probability(
    event: Event, measures: WeightedCredalSet | Iterable[ProbMeasure]
) -> Rat:
    """Largest probability of the event; dual to the lower probability."""
    return max(measure.prob(event) for measure in as_measures(measures))
