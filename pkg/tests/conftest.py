from fractions import Fraction
from types import SimpleNamespace

import pytest
from hypothesis import settings

settings.register_profile("exactrational", deadline=None)
settings.load_profile("exactrational")

from wregret import (
    Act,
    Menu,
    ObservationModel,
    ProbMeasure,
    SetFunction,
    StateSpace,
    WeightedCredalSet,
)


@pytest.fixture
def example_menus():
    """Four-state setup whose preference between two indicators flips with
    the menu."""
    space = StateSpace(("s1", "s2", "s3", "s4"))
    pr1 = ProbMeasure(space, (Fraction(1, 3), 0, Fraction(1, 3), Fraction(1, 3)))
    pr2 = ProbMeasure(space, (0, Fraction(1, 4), Fraction(3, 4), 0))
    credal = WeightedCredalSet.unweighted((pr1, pr2))
    e1 = space.event("s1")
    e2 = space.event("s2")
    e3 = space.event(["s2", "s3"])
    a1, a2, a3 = Act.indicator(e1), Act.indicator(e2), Act.indicator(e3)
    return SimpleNamespace(
        space=space,
        pr1=pr1,
        pr2=pr2,
        credal=credal,
        e1=e1,
        e2=e2,
        e3=e3,
        a1=a1,
        a2=a2,
        a3=a3,
        menu_small=Menu((a1, a2)),
        menu_large=Menu((a1, a2, a3)),
    )


def coin_grid(step: int = 24, lo: Fraction = Fraction(1, 3), hi: Fraction = Fraction(2, 3)):
    """All-weights-1 coin set on the rational grid of the given step."""
    space = StateSpace(("h", "t"))
    betas = []
    numerator = lo.numerator * step // lo.denominator
    top = hi.numerator * step // hi.denominator
    while numerator <= top:
        betas.append(Fraction(numerator, step))
        numerator += 1
    credal = WeightedCredalSet.unweighted(
        tuple(ProbMeasure(space, (b, 1 - b)) for b in betas)
    )
    return SimpleNamespace(
        space=space,
        betas=tuple(betas),
        credal=credal,
        model=ObservationModel.iid(credal),
        heads=space.event("h"),
    )


@pytest.fixture
def coin():
    return coin_grid()


@pytest.fixture
def three_weighted():
    """Three-measure weighted set whose induced table breaks the (n, k)
    inequality while satisfying the plain n-cover one."""
    space = StateSpace(("a", "b", "c"))
    third = Fraction(1, 3)
    credal = WeightedCredalSet(
        (
            (ProbMeasure(space, (2 * third, 0, third)), Fraction(2, 3)),
            (ProbMeasure(space, (third, 0, 2 * third)), Fraction(2, 3)),
            (ProbMeasure(space, (third, third, third)), Fraction(1)),
        )
    )
    return SimpleNamespace(
        space=space,
        credal=credal,
        table=SetFunction.from_likelihood(credal),
    )
