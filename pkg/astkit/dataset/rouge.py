"""Word-level ROUGE-L (LCS F-measure) for instruction leakage checks."""

from __future__ import annotations

import re
from collections.abc import Sequence
from fractions import Fraction

from astkit.exceptions import EmptySequence

_WORD = re.compile(r'[a-z0-9]+')


def tokenize_words(text: str) -> list[str]:
    """Lowercase and split on runs of non-alphanumeric characters."""
    return _WORD.findall(text.lower())


def lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    """Longest common subsequence length with a rolling O(min(n, m)) row."""
    if len(a) < len(b):
        a, b = b, a
    previous = [0] * (len(b) + 1)
    for token in a:
        current = [0]
        for j, other in enumerate(b, start=1):
            current.append(previous[j - 1] + 1 if token == other else max(previous[j], current[j - 1]))
        previous = current
    return previous[-1]


def _as_fraction(value: float | Fraction) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(str(value))


def rouge_l_exact(
    candidate: Sequence[str],
    reference: Sequence[str],
    beta: float | Fraction = 1,
) -> Fraction:
    """Exact ROUGE-L F-score.

    Raises:
        EmptySequence: either side has no tokens.
    """
    if not candidate or not reference:
        side = 'candidate' if not candidate else 'reference'
        msg = f'{side} has no tokens'
        raise EmptySequence(msg)
    lcs = lcs_length(candidate, reference)
    if lcs == 0:
        return Fraction(0)
    beta2 = _as_fraction(beta) ** 2
    precision = Fraction(lcs, len(candidate))
    recall = Fraction(lcs, len(reference))
    return (1 + beta2) * precision * recall / (recall + beta2 * precision)


def rouge_l(candidate: Sequence[str], reference: Sequence[str], beta: float = 1.0) -> float:
    return float(rouge_l_exact(candidate, reference, beta))


def rouge_l_text(candidate: str, reference: str, beta: float = 1.0) -> float:
    return rouge_l(tokenize_words(candidate), tokenize_words(reference), beta)
