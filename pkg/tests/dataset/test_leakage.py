import pytest

from astkit.dataset import DatasetRecord, filter_leakage
from astkit.dataset.leakage import max_similarity
from astkit.dataset.rouge import tokenize_words
from astkit.exceptions import EmptyInput
from astkit.serialize import TrainingRecord

EVAL = ['alpha beta x y z', 'count ones in a byte']


def _record(instruction: str, *, synthesizable: bool = True, rid: str = 'a.v#0') -> DatasetRecord:
    record = TrainingRecord(
        id=rid,
        instruction=instruction,
        ast='FuncName: f, Params:',
        code='void f() {}\n',
        source_id='a.v',
    )
    return DatasetRecord(record=record, synthesizable=synthesizable, kept=synthesizable)


def test_boundary_score_is_dropped():
    [result] = filter_leakage([_record('alpha beta c d e')], EVAL, threshold=0.4)
    assert result.rouge_max == pytest.approx(0.4)
    assert not result.kept


def test_dissimilar_record_is_kept():
    [result] = filter_leakage([_record('multiplex four inputs by a selector')], EVAL)
    assert result.kept
    assert result.rouge_max < 0.4


def test_unsynthesizable_record_is_never_kept():
    [result] = filter_leakage([_record('unrelated words here', synthesizable=False)], EVAL)
    assert not result.kept


def test_lower_threshold_keeps_a_subset():
    records = [
        _record('alpha beta c d e', rid='a.v#0'),
        _record('count ones in a word', rid='b.v#0'),
        _record('multiplex four inputs', rid='c.v#0'),
    ]
    kept = {
        threshold: {r.record.id for r in filter_leakage(records, EVAL, threshold) if r.kept}
        for threshold in (0.2, 0.5, 0.9)
    }
    assert kept[0.2] <= kept[0.5] <= kept[0.9]


def test_empty_instruction_scores_zero():
    assert max_similarity('!!!', [tokenize_words(e) for e in EVAL]) == 0


def test_no_eval_instructions():
    with pytest.raises(EmptyInput):
        filter_leakage([_record('x')], [])
