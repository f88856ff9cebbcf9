"""Acts, menus, and regret-based preference over weighted credal sets.

The regret of an act at a state is the shortfall of its utility against the
best act of a menu at that state.  Preferences compare worst-case weighted
expected regret: smaller is better.  The act being ranked does not have to
belong to the menu; the menu only supplies the per-state standard.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator

from .core import (
    DomainError,
    Event,
    ProbMeasure,
    Rat,
    RatLike,
    StateSpace,
    WeightedCredalSet,
    _require_same_space,
    as_measures,
    rat,
    rat_str,
)

__all__ = [
    "Act",
    "Menu",
    "Preference",
    "regret_state",
    "expected_regret",
    "weighted_regret",
    "absolute_weighted_regret",
    "prefer",
    "prefer_absolute",
    "maxmin_value",
    "menu_union",
    "menu_reduction",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Preference(Enum):
    """How the first act compares to the second: smaller regret wins."""

    BETTER = "better"
    WORSE = "worse"
    EQUIVALENT = "equivalent"


@dataclass(frozen=True)
class Act:
    """Per-state utilities of an act (outcome utilities already applied).

    The name is display metadata and takes no part in equality.
    """

    space: StateSpace
    utility: tuple[Rat, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        utility = tuple(rat(v) for v in self.utility)
        object.__setattr__(self, "utility", utility)
        if len(utility) != self.space.size:
            raise DomainError(
                f"act has {len(utility)} utilities for a "
                f"{self.space.size}-state space"
            )

    @classmethod
    def indicator(cls, event: Event, name: str = "") -> Act:
        """The act worth 1 on the event and 0 off it."""
        utility = tuple(
            _ONE if (event.mask >> i) & 1 else _ZERO for i in range(event.space.size)
        )
        return cls(event.space, utility, name or "1_" + event.label_text())

    def is_indicator(self) -> bool:
        return all(v == 0 or v == 1 for v in self.utility)

    def indicator_event(self) -> Event:
        if not self.is_indicator():
            raise DomainError(f"act {self.name or self.utility} is not an indicator")
        mask = 0
        for i, value in enumerate(self.utility):
            if value == 1:
                mask |= 1 << i
        return Event(self.space, mask)

    def expected_utility(self, measure: ProbMeasure) -> Rat:
        _require_same_space(self.space, measure.space)
        return measure.expectation(self.utility)


@dataclass(frozen=True)
class Menu:
    """Nonempty finite list of acts serving as the comparison standard."""

    acts: tuple[Act, ...]

    def __post_init__(self) -> None:
        acts = tuple(self.acts)
        object.__setattr__(self, "acts", acts)
        if not acts:
            raise DomainError("a menu needs at least one act")
        space = acts[0].space
        for act in acts:
            _require_same_space(space, act.space)

    @property
    def space(self) -> StateSpace:
        return self.acts[0].space

    def best_utility(self, state: int) -> Rat:
        """Largest utility any menu act attains at the state."""
        return max(act.utility[state] for act in self.acts)

    def __iter__(self) -> Iterator[Act]:
        return iter(self.acts)

    def __len__(self) -> int:
        return len(self.acts)

    def __contains__(self, act: Act) -> bool:
        return any(candidate == act for candidate in self.acts)


def regret_state(act: Act, state: int, menu: Menu) -> Rat:
    """Shortfall of the act against the menu's best act at one state."""
    _require_same_space(act.space, menu.space)
    if not 0 <= state < act.space.size:
        raise DomainError(f"state index {state} out of range")
    return menu.best_utility(state) - act.utility[state]


def expected_regret(act: Act, measure: ProbMeasure, menu: Menu) -> Rat:
    """Expectation of the per-state menu regret under the measure."""
    _require_same_space(act.space, menu.space)
    _require_same_space(act.space, measure.space)
    total = _ZERO
    for state in range(act.space.size):
        mass = measure.mass[state]
        if mass:
            total += (menu.best_utility(state) - act.utility[state]) * mass
    return total


def weighted_regret(act: Act, credal: WeightedCredalSet, menu: Menu) -> Rat:
    """Worst case over the set of weight times expected menu regret.

    With all weights 1 this is the plain worst-case expected regret.
    """
    return max(
        weight * expected_regret(act, measure, menu) for measure, weight in credal
    )


def absolute_weighted_regret(
    act: Act, credal: WeightedCredalSet, u_star: RatLike
) -> Rat:
    """Worst case of weight times (u_star minus expected utility).

    ``u_star`` must be a best outcome: at least every utility of the act.
    Equivalent to menu regret for any menu containing the constant act
    worth ``u_star`` everywhere.
    """
    top = rat(u_star)
    worst = max(act.utility)
    if top < worst:
        raise DomainError(
            f"u_star = {rat_str(top)} is below the act's utility "
            f"{rat_str(worst)}; it must be a best outcome"
        )
    return max(
        weight * (top - act.expected_utility(measure)) for measure, weight in credal
    )


def _compare(left: Rat, right: Rat) -> Preference:
    if left < right:
        return Preference.BETTER
    if left > right:
        return Preference.WORSE
    return Preference.EQUIVALENT


def prefer(act: Act, other: Act, credal: WeightedCredalSet, menu: Menu) -> Preference:
    """Menu-relative ordering: the act with smaller weighted regret is better."""
    return _compare(
        weighted_regret(act, credal, menu), weighted_regret(other, credal, menu)
    )


def prefer_absolute(
    act: Act, other: Act, credal: WeightedCredalSet, u_star: RatLike = 1
) -> Preference:
    """Menu-free ordering against a best outcome worth ``u_star``."""
    return _compare(
        absolute_weighted_regret(act, credal, u_star),
        absolute_weighted_regret(other, credal, u_star),
    )


def maxmin_value(
    act: Act, measures: WeightedCredalSet | Iterable[ProbMeasure]
) -> Rat:
    """Worst-case expected utility over the measures (weights ignored)."""
    return min(act.expected_utility(measure) for measure in as_measures(measures))


def menu_union(menu: Menu) -> Event:
    """Union of the events whose indicators make up an indicator menu."""
    mask = 0
    for act in menu:
        mask |= act.indicator_event().mask
    return Event(menu.space, mask)


def menu_reduction(event: Event, menu: Menu) -> Act:
    """Menu-free stand-in for ranking an indicator act inside a menu.

    For an indicator menu containing the event's indicator, returns the
    indicator of the event joined with the complement of the menu's union.
    Ranking two menu members by menu-relative regret agrees with ranking
    their reductions by absolute regret with u_star = 1.
    """
    _require_same_space(event.space, menu.space)
    union = menu_union(menu)
    if Act.indicator(event) not in menu:
        raise DomainError(
            f"the indicator of {event.label_text()} must belong to the menu"
        )
    return Act.indicator(event | union.complement)
