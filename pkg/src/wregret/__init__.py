"""Weighted credal sets: regret-based preferences, likelihood intervals,
observation-driven reweighting, and exact axiomatic representability.

Uncertainty is a finite set of probability measures over a finite state
space, each measure carrying a rational weight in [0, 1] with maximum 1.
Acts are ranked by worst-case weighted expected regret; events are rated by
regret-based likelihood and its dual bound.  Observations reweight the set
multiplicatively.  Candidate likelihood tables can be checked against the
governing axioms and decided for exact representability via rational linear
feasibility with Farkas certificates.
"""

from .core import (
    DEFAULT_MAX_STATES,
    DocumentError,
    DomainError,
    Event,
    MultisetOfEvents,
    ProbMeasure,
    Rat,
    ResourceLimitError,
    SpaceMismatchError,
    StateSpace,
    WeightedCredalSet,
    as_measures,
    max_states_cap,
    rat,
    rat_str,
)
from .regret import (
    Act,
    Menu,
    Preference,
    absolute_weighted_regret,
    expected_regret,
    maxmin_value,
    menu_reduction,
    menu_union,
    prefer,
    prefer_absolute,
    regret_state,
    weighted_regret,
)
from .likelihood import (
    AmbiguityInterval,
    ambiguity_interval,
    lower_probability,
    naive_lower,
    regret_likelihood,
    regret_likelihood_lower,
    upper_probability,
)
from .learning import (
    ObservationModel,
    ambiguity_trajectory,
    epstein_schneider_update,
    update_weights,
    update_weights_sequence,
)
from .lp import FeasibilityResult, exact_feasibility, verify_certificate, verify_witness
from .axioms import (
    CoverViolation,
    LPAxiomReport,
    RepresentabilityResult,
    SetFunction,
    canonical_weight,
    check_LP_axioms,
    check_REG12,
    check_REG3_bounded,
    check_REG3prime,
    event_system,
    representability,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # core
    "Rat",
    "rat",
    "rat_str",
    "StateSpace",
    "Event",
    "ProbMeasure",
    "WeightedCredalSet",
    "MultisetOfEvents",
    "as_measures",
    "DomainError",
    "SpaceMismatchError",
    "DocumentError",
    "ResourceLimitError",
    "DEFAULT_MAX_STATES",
    "max_states_cap",
    # regret
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
    # likelihood
    "AmbiguityInterval",
    "regret_likelihood",
    "regret_likelihood_lower",
    "ambiguity_interval",
    "naive_lower",
    "lower_probability",
    "upper_probability",
    # learning
    "ObservationModel",
    "update_weights",
    "update_weights_sequence",
    "epstein_schneider_update",
    "ambiguity_trajectory",
    # lp
    "FeasibilityResult",
    "exact_feasibility",
    "verify_witness",
    "verify_certificate",
    # axioms
    "SetFunction",
    "CoverViolation",
    "LPAxiomReport",
    "RepresentabilityResult",
    "check_REG12",
    "check_REG3_bounded",
    "check_REG3prime",
    "check_LP_axioms",
    "representability",
    "canonical_weight",
    "event_system",
]
