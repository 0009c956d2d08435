import json
from decimal import Decimal

import pytest

from astkit.evalkit import AttemptOutcome, ProblemMeta, Tier, aggregate_report
from astkit.exceptions import IncompleteOutcomes

METAS = [
    ProblemMeta(problem_id='adder', reference_verilog_chars=120),
    ProblemMeta(problem_id='fsm', reference_verilog_chars=900),
    ProblemMeta(problem_id='rom', reference_verilog_chars=400),
]


def _outcomes(model: str, results: dict[str, list[tuple[bool, int]]]) -> list[AttemptOutcome]:
    """results: problem -> [(synth_ok, constraints_passed of 2), ...]."""
    return [
        AttemptOutcome.from_counts(
            pid,
            idx,
            synth_ok=synth,
            constraints_total=2,
            constraints_passed=passed,
            model=model,
        )
        for pid, attempts in results.items()
        for idx, (synth, passed) in enumerate(attempts, start=1)
    ]


def test_matrix_row_and_overall():
    outcomes = _outcomes(
        'm',
        {
            'adder': [(True, 2), (True, 2)],
            'fsm': [(False, 0), (True, 1)],
            'rom': [(True, 0), (True, 2)],
        },
    )
    report = aggregate_report(outcomes, METAS, k_set=[1, 2])
    [model] = report.models
    assert report.metric_keys() == ['synth@1', 'synth@2', 'pass@1', 'pass@2']
    assert model.matrix['rom'] == {'synth@1': True, 'synth@2': True, 'pass@1': False, 'pass@2': True}
    assert model.matrix['fsm'] == {'synth@1': False, 'synth@2': True, 'pass@1': False, 'pass@2': False}
    assert model.overall['synth@1'].percent == Decimal('66.67')
    assert model.overall['pass@2'].percent == Decimal('66.67')
    assert model.overall['pass@1'].percent == Decimal('33.33')
    assert report.tier_counts == {Tier.T1: 1, Tier.T2: 1, Tier.T3: 1}
    assert model.tiers[Tier.T3]['synth@1'].problems == 1
    assert model.tiers[Tier.T3]['synth@1'].successes == 0


def test_json_rendering_is_stable():
    outcomes = _outcomes('m', {pid: [(True, 2)] for pid in ('adder', 'fsm', 'rom')})
    report = aggregate_report(outcomes, METAS, k_set=[1])
    text = report.to_json()
    assert text == aggregate_report(outcomes, METAS, k_set=[1]).to_json()
    data = json.loads(text)
    assert data['k_set'] == [1]
    assert data['models'][0]['overall']['pass@1'] == {'successes': 3, 'problems': 3, 'percent': '100.00'}


def test_radar_rows():
    outcomes = _outcomes('m', {'adder': [(True, 2)], 'fsm': [(False, 0)], 'rom': [(True, 1)]})
    [model] = aggregate_report(outcomes, METAS, k_set=[1]).models
    assert model.radar_rows() == [
        (Tier.T1, Decimal('100.00'), Decimal('100.00')),
        (Tier.T2, Decimal('100.00'), Decimal('0.00')),
        (Tier.T3, Decimal('0.00'), Decimal('0.00')),
    ]


def test_models_are_reported_separately():
    outcomes = [
        *_outcomes('a', {pid: [(True, 2)] for pid in ('adder', 'fsm', 'rom')}),
        *_outcomes('b', {pid: [(False, 0)] for pid in ('adder', 'fsm', 'rom')}),
    ]
    report = aggregate_report(outcomes, METAS, k_set=[1])
    assert [m.model for m in report.models] == ['a', 'b']
    assert [m.overall['synth@1'].successes for m in report.models] == [3, 0]
    assert len(report.tables(with_matrix=True)) == 3


def test_explicit_boundaries_override_given_tiers():
    metas = [m.model_copy(update={'tier': Tier.T3}) for m in METAS]
    outcomes = _outcomes('m', {pid: [(True, 2)] for pid in ('adder', 'fsm', 'rom')})
    report = aggregate_report(outcomes, metas, k_set=[1], boundaries=(500, 1000))
    assert report.tier_counts == {Tier.T1: 2, Tier.T2: 1, Tier.T3: 0}
    assert report.models[0].tiers[Tier.T3]['synth@1'].percent == Decimal('0.00')


def test_missing_problem_for_model():
    outcomes = _outcomes('m', {'adder': [(True, 2)], 'rom': [(True, 2)]})
    with pytest.raises(IncompleteOutcomes, match='fsm'):
        aggregate_report(outcomes, METAS, k_set=[1])
