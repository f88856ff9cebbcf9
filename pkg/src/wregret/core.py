"""Exact building blocks: rationals, state spaces, events, probability
measures, weighted credal sets, and event multisets with cover counting.

Every numeric quantity is an exact rational (`fractions.Fraction`).  Floats
are rejected at the boundary, so comparisons, suprema, and certificates
computed downstream are bit-exact.
"""

from __future__ import annotations

import os
from dataclasses import InitVar, dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "Rat",
    "rat",
    "rat_str",
    "DomainError",
    "SpaceMismatchError",
    "DocumentError",
    "ResourceLimitError",
    "StateSpace",
    "Event",
    "ProbMeasure",
    "WeightedCredalSet",
    "MultisetOfEvents",
    "as_measures",
    "DEFAULT_MAX_STATES",
    "MAX_STATES_ENV",
    "max_states_cap",
]

Rat = Fraction

RatLike = Union[int, str, Fraction]

DEFAULT_MAX_STATES = 20
MAX_STATES_ENV = "WREGRET_MAX_STATES"

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DomainError(ValueError):
    """A precondition on the mathematical domain was violated."""


class SpaceMismatchError(DomainError):
    """Operands are defined over different state spaces."""


class ResourceLimitError(DomainError):
    """A bounded enumeration would exceed the configured work limit."""


class DocumentError(ValueError):
    """A document or textual value could not be parsed or validated."""


def max_states_cap() -> int:
    """Largest permitted state-space size.

    Defaults to 20 and can be overridden through the ``WREGRET_MAX_STATES``
    environment variable.  Event tables and axiom checks enumerate all 2^N
    subsets, so memory and time grow exponentially with N.
    """
    raw = os.environ.get(MAX_STATES_ENV)
    if raw is None:
        return DEFAULT_MAX_STATES
    try:
        cap = int(raw)
    except ValueError:
        raise DocumentError(
            f"{MAX_STATES_ENV} must be an integer, got {raw!r}"
        ) from None
    if cap < 1:
        raise DocumentError(f"{MAX_STATES_ENV} must be at least 1, got {cap}")
    return cap


def rat(value: RatLike) -> Rat:
    """Coerce a value to an exact rational.

    Accepts integers, `Fraction`, and strings of the form ``"p"`` or
    ``"p/q"``.  Non-canonical strings such as ``"2/4"`` or ``"4/-6"`` are
    accepted and canonicalized (positive denominator, lowest terms).
    Floats are rejected: they have no place in exact semantics.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num_text, sep, den_text = text.partition("/")
        try:
            if sep:
                numerator, denominator = int(num_text), int(den_text)
            else:
                numerator, denominator = int(num_text), 1
        except ValueError:
            raise DocumentError(f"cannot parse {value!r} as a rational") from None
        if denominator == 0:
            raise DocumentError(f"zero denominator in rational {value!r}")
        return Fraction(numerator, denominator)
    raise DocumentError(
        f"cannot interpret {value!r} of type {type(value).__name__} as a rational"
    )


def rat_str(value: Rat) -> str:
    """Canonical text form: ``"p/q"`` with q > 0 and gcd(|p|, q) = 1, or ``"p"``."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class StateSpace:
    """Ordered, finite collection of distinct state labels.

    The position of a label is stable for the lifetime of the space and is
    used as the bit index in event masks.
    """

    labels: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise DomainError("a state space needs at least one state")
        cap = max_states_cap()
        if len(labels) > cap:
            raise DomainError(
                f"state space has {len(labels)} states but the cap is {cap}; "
                f"set {MAX_STATES_ENV} to raise it (subset enumeration costs 2^N)"
            )
        index: dict[str, int] = {}
        for position, label in enumerate(labels):
            if not isinstance(label, str) or not label:
                raise DomainError("state labels must be nonempty strings")
            if label in index:
                raise DomainError(f"duplicate state label {label!r}")
            index[label] = position
        object.__setattr__(self, "_index", index)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise DomainError(f"unknown state label {label!r}") from None

    def event(self, members: Iterable[str] | str = ()) -> Event:
        """Event containing the given labels (a bare string means one label)."""
        if isinstance(members, str):
            members = (members,)
        mask = 0
        for label in members:
            mask |= 1 << self.index(label)
        return Event(self, mask)

    def event_from_mask(self, mask: int) -> Event:
        return Event(self, mask)

    @property
    def empty_event(self) -> Event:
        return Event(self, 0)

    @property
    def full_event(self) -> Event:
        return Event(self, self.full_mask)

    def events(self) -> Iterator[Event]:
        """All 2^N events, in mask order."""
        for mask in range(1 << len(self.labels)):
            yield Event(self, mask)


def _require_same_space(left: StateSpace, right: StateSpace) -> None:
    if left != right:
        raise SpaceMismatchError(
            f"operands live on different state spaces: "
            f"{list(left.labels)} vs {list(right.labels)}"
        )


@dataclass(frozen=True)
class Event:
    """Subset of a state space, stored as a bitmask over label positions."""

    space: StateSpace
    mask: int

    def __post_init__(self) -> None:
        if not isinstance(self.mask, int) or isinstance(self.mask, bool):
            raise DomainError("event mask must be an integer")
        if not 0 <= self.mask <= self.space.full_mask:
            raise DomainError(
                f"event mask {self.mask} out of range for a "
                f"{self.space.size}-state space"
            )

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.space.size) if (self.mask >> i) & 1)

    def members(self) -> tuple[str, ...]:
        return tuple(self.space.labels[i] for i in self.indices())

    @property
    def complement(self) -> Event:
        return Event(self.space, self.mask ^ self.space.full_mask)

    def __invert__(self) -> Event:
        return self.complement

    def __or__(self, other: Event) -> Event:
        _require_same_space(self.space, other.space)
        return Event(self.space, self.mask | other.mask)

    def __and__(self, other: Event) -> Event:
        _require_same_space(self.space, other.space)
        return Event(self.space, self.mask & other.mask)

    def __le__(self, other: Event) -> bool:
        """Subset test."""
        _require_same_space(self.space, other.space)
        return self.mask & ~other.mask == 0

    def __contains__(self, label: str) -> bool:
        return bool((self.mask >> self.space.index(label)) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    def label_text(self) -> str:
        """Human form like ``{a,c}``; the empty event prints as ``{}``."""
        return "{" + ",".join(self.members()) + "}"

    def __repr__(self) -> str:
        return f"Event({self.label_text()})"


@dataclass(frozen=True)
class ProbMeasure:
    """Probability measure given by exact rational masses summing to 1."""

    space: StateSpace
    mass: tuple[Rat, ...]

    def __post_init__(self) -> None:
        mass = tuple(rat(v) for v in self.mass)
        object.__setattr__(self, "mass", mass)
        if len(mass) != self.space.size:
            raise DomainError(
                f"measure has {len(mass)} masses for a {self.space.size}-state space"
            )
        for value in mass:
            if value < 0:
                raise DomainError(f"negative mass {rat_str(value)}")
        total = sum(mass, _ZERO)
        if total != 1:
            raise DomainError(f"masses must sum to exactly 1, got {rat_str(total)}")

    @classmethod
    def point_mass(cls, space: StateSpace, label: str) -> ProbMeasure:
        position = space.index(label)
        return cls(space, tuple(_ONE if i == position else _ZERO for i in range(space.size)))

    @classmethod
    def uniform(cls, space: StateSpace) -> ProbMeasure:
        share = Fraction(1, space.size)
        return cls(space, (share,) * space.size)

    def prob(self, event: Event) -> Rat:
        _require_same_space(self.space, event.space)
        return sum((self.mass[i] for i in event.indices()), _ZERO)

    def expectation(self, values: Sequence[RatLike]) -> Rat:
        if len(values) != self.space.size:
            raise DomainError("expectation needs one value per state")
        return sum((m * rat(v) for m, v in zip(self.mass, values)), _ZERO)


@dataclass(frozen=True)
class WeightedCredalSet:
    """Finite set of probability measures, each carrying a weight in [0, 1].

    The maximum weight must be exactly 1.  Intermediate reweighting states
    that break this can be built with ``unnormalized=True`` and repaired
    with :meth:`normalize_weights`.
    """

    entries: tuple[tuple[ProbMeasure, Rat], ...]
    unnormalized: InitVar[bool] = False

    def __post_init__(self, unnormalized: bool) -> None:
        entries = tuple((measure, rat(weight)) for measure, weight in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise DomainError("a weighted credal set needs at least one entry")
        space = entries[0][0].space
        seen: set[tuple[Rat, ...]] = set()
        for measure, weight in entries:
            _require_same_space(space, measure.space)
            if not 0 <= weight <= 1:
                raise DomainError(f"weight {rat_str(weight)} outside [0, 1]")
            if measure.mass in seen:
                raise DomainError("each measure may appear at most once")
            seen.add(measure.mass)
        if not unnormalized and self.max_weight != 1:
            raise DomainError(
                "the maximum weight must be exactly 1; pass unnormalized=True "
                "and call normalize_weights() for intermediate states"
            )

    @classmethod
    def unweighted(cls, measures: Iterable[ProbMeasure]) -> WeightedCredalSet:
        """All-weights-1 set over the given measures."""
        return cls(tuple((measure, _ONE) for measure in measures))

    @property
    def space(self) -> StateSpace:
        return self.entries[0][0].space

    @property
    def measures(self) -> tuple[ProbMeasure, ...]:
        return tuple(measure for measure, _ in self.entries)

    @property
    def weights(self) -> tuple[Rat, ...]:
        return tuple(weight for _, weight in self.entries)

    @property
    def max_weight(self) -> Rat:
        return max(weight for _, weight in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[ProbMeasure, Rat]]:
        return iter(self.entries)

    def normalize_weights(self) -> WeightedCredalSet:
        """Divide every weight by the maximum so that the maximum becomes 1."""
        top = self.max_weight
        if top == 0:
            raise DomainError("cannot normalize: every weight is 0")
        if top == 1:
            return WeightedCredalSet(self.entries)
        return WeightedCredalSet(
            tuple((measure, weight / top) for measure, weight in self.entries)
        )


def as_measures(
    source: WeightedCredalSet | Iterable[ProbMeasure],
) -> tuple[ProbMeasure, ...]:
    """Measures of a weighted set (weights dropped) or of a plain iterable."""
    if isinstance(source, WeightedCredalSet):
        return source.measures
    measures = tuple(source)
    if not measures:
        raise DomainError("need at least one probability measure")
    space = measures[0].space
    for measure in measures:
        _require_same_space(space, measure.space)
    return measures


@dataclass(frozen=True)
class MultisetOfEvents:
    """Multiset of events over one space; multiplicities count repetitions.

    Items are stored collated and sorted by event mask, so two multisets
    compare equal exactly when they contain the same events with the same
    multiplicities.
    """

    space: StateSpace
    items: tuple[tuple[Event, int], ...] = ()

    def __post_init__(self) -> None:
        collated: dict[int, int] = {}
        for event, multiplicity in self.items:
            _require_same_space(self.space, event.space)
            if not isinstance(multiplicity, int) or isinstance(multiplicity, bool):
                raise DomainError("multiplicities must be integers")
            if multiplicity < 1:
                raise DomainError(f"multiplicity must be positive, got {multiplicity}")
            collated[event.mask] = collated.get(event.mask, 0) + multiplicity
        items = tuple(
            (Event(self.space, mask), collated[mask]) for mask in sorted(collated)
        )
        object.__setattr__(self, "items", items)

    @classmethod
    def from_events(
        cls, events: Iterable[Event], space: StateSpace | None = None
    ) -> MultisetOfEvents:
        events = tuple(events)
        if space is None:
            if not events:
                raise DomainError("an empty multiset needs an explicit space")
            space = events[0].space
        return cls(space, tuple((event, 1) for event in events))

    def __or__(self, other: MultisetOfEvents) -> MultisetOfEvents:
        """Multiset union: multiplicities add."""
        _require_same_space(self.space, other.space)
        return MultisetOfEvents(self.space, self.items + other.items)

    def __len__(self) -> int:
        """Total number of events counted with multiplicity."""
        return sum(multiplicity for _, multiplicity in self.items)

    def cover_counts(self) -> tuple[int, ...]:
        """Per-state count of covering events, with multiplicity."""
        counts = [0] * self.space.size
        for event, multiplicity in self.items:
            for i in event.indices():
                counts[i] += multiplicity
        return tuple(counts)

    def is_n_cover(self, event: Event, n: int) -> bool:
        """Whether every state of the event is covered at least n times."""
        if n < 0:
            raise DomainError(f"cover order must be nonnegative, got {n}")
        _require_same_space(self.space, event.space)
        counts = self.cover_counts()
        return all(counts[i] >= n for i in event.indices())

    def is_nk_cover(self, event: Event, n: int, k: int) -> bool:
        """Whether the space is covered k times and the event n + k times."""
        if n < 0 or k < 0:
            raise DomainError(f"cover orders must be nonnegative, got ({n}, {k})")
        _require_same_space(self.space, event.space)
        counts = self.cover_counts()
        return min(counts) >= k and all(counts[i] >= n + k for i in event.indices())
