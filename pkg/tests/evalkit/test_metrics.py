import itertools
import random
from decimal import Decimal
from fractions import Fraction

import pytest

from astkit.evalkit import (
    AttemptOutcome,
    Predicate,
    compare_models,
    pass_at_k,
    pass_at_k_unbiased,
    percent,
)
from astkit.exceptions import InsufficientAttempts


def _outcome(pid: str, idx: int, *, synth: bool, passed: bool | None = None, model: str = 'default') -> AttemptOutcome:
    passed = synth if passed is None else passed
    return AttemptOutcome.from_counts(
        pid,
        idx,
        synth_ok=synth,
        constraints_total=2,
        constraints_passed=2 if passed else 1,
        model=model,
    )


def _matrix(rows: dict[str, list[bool]], model: str = 'default') -> list[AttemptOutcome]:
    return [
        _outcome(pid, idx, synth=True, passed=ok, model=model)
        for pid, row in rows.items()
        for idx, ok in enumerate(row, start=1)
    ]


def test_two_problem_example():
    outcomes = _matrix({'P1': [True, False, False], 'P2': [False, False, True]})
    assert pass_at_k(outcomes, 1, Predicate.FUNCTIONAL) == Fraction(1, 2)
    assert pass_at_k(outcomes, 2, Predicate.FUNCTIONAL) == Fraction(1, 2)
    assert pass_at_k(outcomes, 3, Predicate.FUNCTIONAL) == 1
    assert percent(pass_at_k(outcomes, 1, Predicate.FUNCTIONAL)) == Decimal('50.00')


def test_first_attempt_synthesis_rate():
    outcomes = [_outcome(f'p{i:03d}', 1, synth=i < 145) for i in range(156)]
    rate = pass_at_k(outcomes, 1, Predicate.SYNTH)
    assert rate == Fraction(145, 156)
    assert percent(rate) == Decimal('92.95')


def test_order_of_input_does_not_matter():
    outcomes = _matrix({'P1': [False, True], 'P2': [True, False]})
    shuffled = list(reversed(outcomes))
    assert pass_at_k(shuffled, 1, Predicate.FUNCTIONAL) == pass_at_k(outcomes, 1, Predicate.FUNCTIONAL)


def test_no_problems_is_zero():
    assert pass_at_k([], 1, Predicate.SYNTH) == 0
    assert pass_at_k_unbiased([], 1, Predicate.SYNTH) == 0


def test_k_must_be_positive():
    with pytest.raises(ValueError, match='k must be'):
        pass_at_k(_matrix({'P1': [True]}), 0, Predicate.SYNTH)


def test_missing_attempt_is_reported():
    outcomes = [_outcome('P1', 1, synth=True), _outcome('P1', 3, synth=True)]
    with pytest.raises(InsufficientAttempts) as info:
        pass_at_k(outcomes, 3, Predicate.SYNTH)
    assert info.value.problem_id == 'P1'
    assert info.value.k == 3


def test_functional_requires_synthesis():
    outcome = AttemptOutcome.from_counts('P1', 1, synth_ok=False, constraints_total=2, constraints_passed=2)
    assert not outcome.functional_ok
    assert not outcome.satisfies(Predicate.FUNCTIONAL)


@pytest.mark.parametrize(
    'fields',
    [
        {'constraints_total': 1, 'constraints_passed': 2, 'synth_ok': True, 'functional_ok': False},
        {'constraints_total': 1, 'constraints_passed': 1, 'synth_ok': True, 'functional_ok': False},
        {'constraints_total': 0, 'constraints_passed': 0, 'synth_ok': True, 'functional_ok': True},
    ],
    ids=['passed_above_total', 'missing_functional', 'functional_without_constraints'],
)
def test_inconsistent_outcomes(fields: dict):
    with pytest.raises(ValueError, match='P1#1'):
        AttemptOutcome(problem_id='P1', attempt_idx=1, **fields)


def _brute_force(rows: list[list[bool]], k: int) -> Fraction:
    solved = sum(any(itertools.islice(row, k)) for row in rows)
    return Fraction(solved, len(rows))


@pytest.mark.parametrize('seed', range(1000))
def test_random_matrices_match_brute_force(seed: int):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    rows = [[rng.random() < 0.3 for _ in range(n)] for _ in range(rng.randint(1, 8))]
    outcomes = _matrix({f'p{i}': row for i, row in enumerate(rows)})
    values = [pass_at_k(outcomes, k, Predicate.FUNCTIONAL) for k in range(1, n + 1)]
    assert values == [_brute_force(rows, k) for k in range(1, n + 1)]
    assert values == sorted(values)
    assert all(0 <= v <= 1 for v in values)
    assert pass_at_k(outcomes, n, Predicate.FUNCTIONAL) == pass_at_k_unbiased(outcomes, n, Predicate.FUNCTIONAL)


def test_unbiased_estimator():
    # one problem, 4 attempts, 1 success: 1 - C(3,2)/C(4,2) = 1/2
    outcomes = _matrix({'P1': [False, False, True, False]})
    assert pass_at_k_unbiased(outcomes, 2, Predicate.FUNCTIONAL) == Fraction(1, 2)
    assert pass_at_k_unbiased(outcomes, 1, Predicate.FUNCTIONAL) == Fraction(1, 4)


def test_compare_models():
    outcomes = [
        *_matrix({'P1': [True], 'P2': [False], 'P3': [True]}, model='a'),
        *_matrix({'P1': [True], 'P2': [True], 'P4': [True]}, model='b'),
    ]
    [diff] = compare_models(outcomes, 'a', 'b', 1, Predicate.FUNCTIONAL)
    assert (diff.problem_id, diff.first, diff.second) == ('P2', False, True)
