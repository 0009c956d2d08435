from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from hotlog import get_logger

from astkit.dataset.models import DatasetRecord
from astkit.dataset.rouge import rouge_l_exact, tokenize_words
from astkit.exceptions import EmptyInput

logger = get_logger(__name__)

DEFAULT_THRESHOLD = 0.4


def max_similarity(instruction: str, eval_tokens: Sequence[list[str]]) -> Fraction:
    """Highest ROUGE-L of *instruction* against any tokenized eval instruction.

    Pairs where either side has no tokens score 0.
    """
    tokens = tokenize_words(instruction)
    if not tokens:
        return Fraction(0)
    return max((rouge_l_exact(tokens, other) for other in eval_tokens if other), default=Fraction(0))


def filter_leakage(
    records: Sequence[DatasetRecord],
    eval_instructions: Sequence[str],
    threshold: float = DEFAULT_THRESHOLD,
) -> list[DatasetRecord]:
    """Score each record against the eval instructions and set ``kept``.

    A record is kept only when it synthesizes and its best score is strictly
    below *threshold*; the comparison is exact, so a score of exactly 0.4
    is dropped at the default threshold.

    Raises:
        EmptyInput: no eval instructions were given.
    """
    if not eval_instructions:
        msg = 'no eval instructions to compare against'
        raise EmptyInput(msg)
    limit = Fraction(str(threshold))
    eval_tokens = [tokenize_words(text) for text in eval_instructions]
    result: list[DatasetRecord] = []
    for record in records:
        score = max_similarity(record.record.instruction, eval_tokens)
        kept = record.synthesizable and score < limit
        result.append(record.model_copy(update={'rouge_max': float(score), 'kept': kept}))
        if record.synthesizable and not kept:
            logger.info('record_leaks_eval', record=record.record.id, rouge_max=round(float(score), 4))
    return result
