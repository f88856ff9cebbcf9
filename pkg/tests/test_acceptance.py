"""End-to-end acceptance checks, one test per criterion.

Each test prints a single pass line on success (run with ``-s`` to see
them); stated runtime ceilings are asserted alongside the values.
"""

import time
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from random import Random

import pytest

from wregret import (
    Act,
    AmbiguityInterval,
    Menu,
    Preference,
    SetFunction,
    ambiguity_interval,
    check_REG12,
    check_REG3_bounded,
    check_REG3prime,
    event_system,
    expected_regret,
    menu_reduction,
    naive_lower,
    prefer,
    prefer_absolute,
    regret_likelihood,
    regret_likelihood_lower,
    representability,
    update_weights_sequence,
    verify_certificate,
    weighted_regret,
)

from conftest import coin_grid
from randgen import (
    break_antimonotonicity,
    break_by_perturbation,
    random_credal_set,
    random_space,
    verify_cover_violation,
)
from test_cli import GOLDEN_COMMANDS
from wregret.cli import main

HERE = Path(__file__).parent


@contextmanager
def criterion(number, label, limit=None):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    if limit is not None:
        assert elapsed < limit, (
            f"criterion {number} exceeded its {limit}s ceiling: {elapsed:.2f}s"
        )
    print(f"criterion {number} ({label}): PASS in {elapsed:.2f}s")


def test_criterion_1_menu_regret_table(example_menus):
    with criterion(1, "menu regret table and preference flip", limit=1.0):
        x = example_menus
        expected = [
            (x.pr1, x.menu_small, x.a1, Fraction(0)),
            (x.pr1, x.menu_small, x.a2, Fraction(1, 3)),
            (x.pr2, x.menu_small, x.a1, Fraction(1, 4)),
            (x.pr2, x.menu_small, x.a2, Fraction(0)),
            (x.pr1, x.menu_large, x.a1, Fraction(1, 3)),
            (x.pr1, x.menu_large, x.a2, Fraction(2, 3)),
            (x.pr2, x.menu_large, x.a1, Fraction(1)),
            (x.pr2, x.menu_large, x.a2, Fraction(3, 4)),
        ]
        for measure, menu, act, value in expected:
            assert expected_regret(act, measure, menu) == value
        assert weighted_regret(x.a1, x.credal, x.menu_small) == Fraction(1, 4)
        assert weighted_regret(x.a2, x.credal, x.menu_small) == Fraction(1, 3)
        assert weighted_regret(x.a1, x.credal, x.menu_large) == Fraction(1)
        assert weighted_regret(x.a2, x.credal, x.menu_large) == Fraction(3, 4)
        assert prefer(x.a1, x.a2, x.credal, x.menu_small) is Preference.BETTER
        assert prefer(x.a1, x.a2, x.credal, x.menu_large) is Preference.WORSE


def test_criterion_2_interval_shrinkage_on_grid():
    with criterion(2, "coin-grid intervals and bound chain", limit=1.0):
        coin = coin_grid(step=24)
        assert Fraction(1, 3) in coin.betas
        assert Fraction(1, 2) in coin.betas
        assert Fraction(2, 3) in coin.betas
        prior = ambiguity_interval(coin.heads, coin.credal)
        assert prior == AmbiguityInterval(Fraction(1, 3), Fraction(2, 3))
        after_h = update_weights_sequence(coin.credal, coin.model, ["h"])
        assert ambiguity_interval(coin.heads, after_h) == AmbiguityInterval(
            Fraction(1, 3), Fraction(3, 8)
        )
        after_ht = update_weights_sequence(coin.credal, coin.model, ["h", "t"])
        assert ambiguity_interval(coin.heads, after_ht) == AmbiguityInterval(
            Fraction(11, 27), Fraction(16, 27)
        )
        low = naive_lower(coin.heads, after_ht)
        assert low == Fraction(8, 27)
        mid = regret_likelihood_lower(coin.heads, after_ht)
        high = regret_likelihood(coin.heads, after_ht)
        assert low < mid < high


def test_criterion_3_weighted_counterexample(three_weighted):
    with criterion(3, "weighted set breaks the (n,k) form only", limit=5.0):
        space, table = three_weighted.space, three_weighted.table
        assert table.value(space.event(["a", "b"])) == Fraction(4, 9)
        assert table.value(space.event(["b", "c"])) == Fraction(4, 9)
        assert table.value(space.event("b")) == Fraction(2, 3)
        violation = check_REG3prime(table, 2, 2, 3)
        assert violation is not None
        assert (violation.n, violation.k) == (1, 1)
        assert verify_cover_violation(table, violation)
        assert check_REG3_bounded(table, 3, 4) is None


def test_criterion_4_induced_tables_satisfy_axioms():
    with criterion(4, "200 induced tables pass REG1/REG2/REG3", limit=60.0):
        rng = Random(41)
        for _ in range(200):
            credal = random_credal_set(
                rng, random_space(rng, sizes=(2, 3, 4)), max_denominator=12
            )
            table = SetFunction.from_likelihood(credal)
            assert check_REG12(table)
            assert check_REG3_bounded(table, 3, 4) is None


def test_criterion_5_representability_roundtrip_and_certificates():
    with criterion(5, "representability decision both ways", limit=120.0):
        rng = Random(43)
        for _ in range(100):
            credal = random_credal_set(rng, random_space(rng, sizes=(2, 3, 4)))
            table = SetFunction.from_likelihood(credal)
            result = representability(table)
            assert result.representable
            space = table.space
            for mask in range(1 << space.size):
                event = space.event_from_mask(mask)
                assert regret_likelihood(event, result.witness) == table.value(event)

        produced = 0
        use_antimono = True
        while produced < 50:
            base = SetFunction.from_likelihood(
                random_credal_set(rng, random_space(rng, sizes=(2, 3, 4)))
            )
            if use_antimono:
                broken = break_antimonotonicity(rng, base)
            else:
                broken = break_by_perturbation(rng, base)
            if broken is None:
                continue
            use_antimono = not use_antimono
            produced += 1
            oracle_violation = check_REG3_bounded(broken, 3, 4)
            assert oracle_violation is not None
            assert verify_cover_violation(broken, oracle_violation)
            result = representability(broken)
            assert not result.representable
            assert result.certificate is not None
            rows, rhs = event_system(broken, result.failing_event)
            assert verify_certificate(rows, rhs, result.certificate)


def test_criterion_6_bound_chain_everywhere():
    with criterion(6, "500 exact bound chains"):
        rng = Random(47)
        for _ in range(500):
            space = random_space(rng, sizes=(2, 3, 4))
            credal = random_credal_set(rng, space)
            event = space.event_from_mask(rng.randrange(1 << space.size))
            low = naive_lower(event, credal)
            mid = regret_likelihood_lower(event, credal)
            high = regret_likelihood(event, credal)
            assert low <= mid <= high


def test_criterion_7_menu_reduction_sign_agreement():
    with criterion(7, "200 menu reductions keep the preference sign"):
        rng = Random(53)
        for _ in range(200):
            space = random_space(rng, sizes=(2, 3, 4))
            credal = random_credal_set(rng, space)
            total = 1 << space.size
            e1 = space.event_from_mask(rng.randrange(total))
            e2 = space.event_from_mask(rng.randrange(total))
            extras = [
                space.event_from_mask(rng.randrange(total))
                for _ in range(rng.randint(0, 2))
            ]
            menu = Menu(tuple(Act.indicator(e) for e in (e1, e2, *extras)))
            relative = prefer(Act.indicator(e1), Act.indicator(e2), credal, menu)
            absolute = prefer_absolute(
                menu_reduction(e1, menu), menu_reduction(e2, menu), credal, 1
            )
            assert relative is absolute


def test_criterion_8_learning_shrinks_ambiguity():
    with criterion(8, "fixed-seed stream shrinks the interval"):
        coin = coin_grid(step=24)
        assert Fraction(5, 8) in coin.betas
        rng = Random(1)
        observations = ["h" if rng.randrange(8) < 5 else "t" for _ in range(200)]
        prior = ambiguity_interval(coin.heads, coin.credal)
        final_set = update_weights_sequence(coin.credal, coin.model, observations)
        final = ambiguity_interval(coin.heads, final_set)
        assert final.width < prior.width / 10
        assert final.lower <= Fraction(3, 8) <= final.upper


def test_criterion_9_golden_transcripts(capsys):
    elapsed_start = time.perf_counter()
    for name, args in sorted(GOLDEN_COMMANDS.items()):
        assert main(args) == 0
        out = capsys.readouterr().out
        assert out == (HERE / "golden" / name).read_text(), f"transcript {name} drifted"
    elapsed = time.perf_counter() - elapsed_start
    print(f"criterion 9 (golden transcripts for every subcommand): PASS in {elapsed:.2f}s")
