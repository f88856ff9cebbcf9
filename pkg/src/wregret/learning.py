"""Observation-driven reweighting of credal sets and ambiguity trajectories.

Each observation multiplies every entry's weight by the probability that
entry assigns to the observation, then rescales so the maximum weight is 1.
Entries whose weight hits 0 are retained by default; adding or keeping
zero-weight measures never changes any regret or likelihood value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

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
from .likelihood import AmbiguityInterval, ambiguity_interval

__all__ = [
    "ObservationModel",
    "update_weights",
    "update_weights_sequence",
    "epstein_schneider_update",
    "ambiguity_trajectory",
]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class ObservationModel:
    """Per-measure distribution over a finite observation alphabet.

    Row i gives the observation probabilities under the i-th entry of the
    credal set (or i-th measure of a plain sequence) the model is used with.
    """

    alphabet: tuple[str, ...]
    rows: tuple[tuple[Rat, ...], ...]

    def __post_init__(self) -> None:
        alphabet = tuple(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        if not alphabet:
            raise DomainError("the observation alphabet must be nonempty")
        if len(set(alphabet)) != len(alphabet):
            raise DomainError("observation symbols must be distinct")
        rows = tuple(tuple(rat(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise DomainError("an observation model needs at least one row")
        for row in rows:
            if len(row) != len(alphabet):
                raise DomainError("each row needs one likelihood per symbol")
            for value in row:
                if not 0 <= value <= 1:
                    raise DomainError(
                        f"likelihood {rat_str(value)} outside [0, 1]"
                    )
            total = sum(row, _ZERO)
            if total != 1:
                raise DomainError(
                    f"likelihoods per row must sum to exactly 1, got {rat_str(total)}"
                )

    @classmethod
    def iid(cls, credal: WeightedCredalSet) -> ObservationModel:
        """Model whose observations are draws of the state itself.

        Covers i.i.d. coins and dice: the alphabet is the state labels and
        each row is the corresponding measure's mass vector.
        """
        return cls(credal.space.labels, tuple(m.mass for m in credal.measures))

    def symbol_index(self, symbol: str) -> int:
        try:
            return self.alphabet.index(symbol)
        except ValueError:
            raise DomainError(f"unknown observation symbol {symbol!r}") from None

    def likelihood(self, entry: int, symbol: str) -> Rat:
        return self.rows[entry][self.symbol_index(symbol)]


def _require_aligned(count: int, model: ObservationModel) -> None:
    if len(model.rows) != count:
        raise DomainError(
            f"observation model has {len(model.rows)} rows but the set has "
            f"{count} entries; rows align with entry order"
        )


def update_weights(
    credal: WeightedCredalSet,
    model: ObservationModel,
    observation: str,
    drop_zero: bool = False,
) -> WeightedCredalSet:
    """Reweight after one observation.

    Each weight becomes old weight times the entry's probability of the
    observation, divided by the maximum of those products, so the maximum
    new weight is exactly 1.
    """
    _require_aligned(len(credal), model)
    symbol = model.symbol_index(observation)
    scores = [
        weight * model.rows[i][symbol] for i, (_, weight) in enumerate(credal.entries)
    ]
    top = max(scores)
    if top == 0:
        raise DomainError(
            f"observation {observation!r} is impossible: every measure with "
            "positive weight assigns it probability 0"
        )
    entries = tuple(
        (measure, score / top)
        for (measure, _), score in zip(credal.entries, scores)
        if not (drop_zero and score == 0)
    )
    return WeightedCredalSet(entries)


def update_weights_sequence(
    credal: WeightedCredalSet,
    model: ObservationModel,
    observations: Sequence[str],
    drop_zero: bool = False,
) -> WeightedCredalSet:
    """Fold of single-step updates over an observation sequence.

    For i.i.d. models this equals normalizing each entry's joint likelihood
    of the whole sequence, so the result is order independent.  Zero-weight
    entries are kept during the fold (the model rows stay aligned) and
    dropped at the end when requested.
    """
    current = credal
    for observation in observations:
        current = update_weights(current, model, observation)
    if drop_zero:
        kept = tuple(entry for entry in current.entries if entry[1] != 0)
        current = WeightedCredalSet(kept)
    return current


def epstein_schneider_update(
    measures: WeightedCredalSet | Iterable[ProbMeasure],
    model: ObservationModel,
    observation: str,
    threshold: Rat | int | str,
) -> tuple[ProbMeasure, ...]:
    """Keep only the measures giving the observation at least the threshold.

    The threshold must lie strictly between 0 and 1.  Model rows align with
    the order of the measures.
    """
    cut = rat(threshold)
    if not 0 < cut < 1:
        raise DomainError(
            f"threshold must lie strictly between 0 and 1, got {rat_str(cut)}"
        )
    pool = as_measures(measures)
    _require_aligned(len(pool), model)
    symbol = model.symbol_index(observation)
    kept = tuple(
        measure for i, measure in enumerate(pool) if model.rows[i][symbol] >= cut
    )
    if not kept:
        raise DomainError(
            f"every measure assigns {observation!r} probability below "
            f"{rat_str(cut)}; nothing would remain"
        )
    return kept


def ambiguity_trajectory(
    credal: WeightedCredalSet,
    model: ObservationModel,
    observations: Sequence[str],
    event: Event,
) -> list[AmbiguityInterval]:
    """Ambiguity interval of the event after each prefix of the observations.

    The first entry is the prior interval (empty prefix), so the result has
    one more interval than there are observations.
    """
    intervals = [ambiguity_interval(event, credal)]
    current = credal
    for observation in observations:
        current = update_weights(current, model, observation)
        intervals.append(ambiguity_interval(event, current))
    return intervals
