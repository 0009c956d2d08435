"""synth@k / pass@k over ordered attempts.

``pass_at_k`` counts a problem as solved when any of its first k attempts
(by ``attempt_idx``) satisfies the predicate. ``pass_at_k_unbiased`` is
the combinatorial estimator over all n attempts, kept for comparison.
"""

from __future__ import annotations

import math
from collections import defaultdict
from collections.abc import Iterable, Sequence
from fractions import Fraction

from pydantic import BaseModel

from astkit.evalkit.models import AttemptOutcome, Predicate
from astkit.exceptions import InsufficientAttempts


def group_attempts(outcomes: Iterable[AttemptOutcome]) -> dict[str, dict[int, AttemptOutcome]]:
    """problem_id -> attempt_idx -> outcome; a repeated index keeps the last one."""
    grouped: dict[str, dict[int, AttemptOutcome]] = defaultdict(dict)
    for outcome in outcomes:
        grouped[outcome.problem_id][outcome.attempt_idx] = outcome
    return dict(grouped)


def solved_within(attempts: dict[int, AttemptOutcome], problem_id: str, k: int, predicate: Predicate) -> bool:
    """Whether any of attempts 1..k satisfies *predicate*.

    Raises:
        InsufficientAttempts: one of attempts 1..k is missing.
    """
    present = sum(1 for idx in range(1, k + 1) if idx in attempts)
    if present < k:
        raise InsufficientAttempts(problem_id, k, present)
    return any(attempts[idx].satisfies(predicate) for idx in range(1, k + 1))


def pass_at_k(outcomes: Sequence[AttemptOutcome], k: int, predicate: Predicate) -> Fraction:
    """Share of problems solved within their first *k* attempts; 0 when there are no problems."""
    if k < 1:
        msg = f'k must be >= 1, got {k}'
        raise ValueError(msg)
    grouped = group_attempts(outcomes)
    if not grouped:
        return Fraction(0)
    solved = sum(solved_within(attempts, pid, k, predicate) for pid, attempts in sorted(grouped.items()))
    return Fraction(solved, len(grouped))


def pass_at_k_unbiased(outcomes: Sequence[AttemptOutcome], k: int, predicate: Predicate) -> Fraction:
    """Mean over problems of ``1 - C(n-c, k) / C(n, k)`` with n attempts and c successes."""
    grouped = group_attempts(outcomes)
    if not grouped:
        return Fraction(0)
    total = Fraction(0)
    for problem_id, attempts in sorted(grouped.items()):
        n = len(attempts)
        if n < k:
            raise InsufficientAttempts(problem_id, k, n)
        c = sum(a.satisfies(predicate) for a in attempts.values())
        total += 1 - Fraction(math.comb(n - c, k), math.comb(n, k))
    return total / len(grouped)


class ModelDisagreement(BaseModel):
    problem_id: str
    first: bool
    second: bool


def compare_models(
    outcomes: Sequence[AttemptOutcome],
    first: str,
    second: str,
    k: int,
    predicate: Predicate,
) -> list[ModelDisagreement]:
    """Problems, present for both models, whose success within k attempts differs."""
    by_model = {
        name: group_attempts(o for o in outcomes if o.model == name)
        for name in (first, second)
    }
    shared = sorted(set(by_model[first]) & set(by_model[second]))
    diffs: list[ModelDisagreement] = []
    for problem_id in shared:
        a = solved_within(by_model[first][problem_id], problem_id, k, predicate)
        b = solved_within(by_model[second][problem_id], problem_id, k, predicate)
        if a != b:
            diffs.append(ModelDisagreement(problem_id=problem_id, first=a, second=b))
    return diffs
