"""Per-model metric reports: overall and per-tier ratios, the per-problem matrix, and renderings."""

from __future__ import annotations

import json
from collections.abc import Sequence
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

from hotlog import get_logger
from pydantic import BaseModel, Field, computed_field
from rich.table import Table

from astkit.evalkit.metrics import group_attempts, solved_within
from astkit.evalkit.models import AttemptOutcome, Predicate, ProblemMeta, Tier
from astkit.evalkit.tiers import classify_tiers
from astkit.exceptions import IncompleteOutcomes

logger = get_logger(__name__)

DEFAULT_K_SET = (1, 5, 10)
PREDICATES = (Predicate.SYNTH, Predicate.FUNCTIONAL)
CHECK = '✓'
CROSS = '✗'


def metric_key(predicate: Predicate, k: int) -> str:
    return f'{predicate.label}@{k}'


def percent(ratio: Fraction) -> Decimal:
    """Ratio as a percentage rounded half-up to two places."""
    scaled = Decimal(ratio.numerator * 100) / Decimal(ratio.denominator)
    return scaled.quantize(Decimal('0.01'), rounding=ROUND_HALF_UP)


class RatioCell(BaseModel):
    successes: int
    problems: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.successes, self.problems) if self.problems else Fraction(0)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def percent(self) -> Decimal:
        return percent(self.ratio)


class ModelReport(BaseModel):
    model: str
    problems: int
    overall: dict[str, RatioCell]
    tiers: dict[Tier, dict[str, RatioCell]]
    matrix: dict[str, dict[str, bool]] = Field(description='problem_id -> metric key -> solved')

    def radar_rows(self) -> list[tuple[Tier, Decimal, Decimal]]:
        """(tier, synth@1 %, pass@1 %) per tier."""
        return [
            (
                tier,
                cells[metric_key(Predicate.SYNTH, 1)].percent,
                cells[metric_key(Predicate.FUNCTIONAL, 1)].percent,
            )
            for tier, cells in self.tiers.items()
            if metric_key(Predicate.SYNTH, 1) in cells
        ]


class MetricReport(BaseModel):
    k_set: list[int]
    tier_counts: dict[Tier, int]
    models: list[ModelReport]

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode='json'), indent=2, sort_keys=True, ensure_ascii=False) + '\n'

    def metric_keys(self) -> list[str]:
        return [metric_key(p, k) for p in PREDICATES for k in self.k_set]

    def tables(self, *, with_matrix: bool = False) -> list[Table]:
        """Rich tables: one summary table, plus one matrix per model when asked."""
        keys = self.metric_keys()
        summary = Table(title='Evaluation summary')
        summary.add_column('model')
        summary.add_column('scope')
        summary.add_column('problems', justify='right')
        for key in keys:
            summary.add_column(key, justify='right')
        for model in self.models:
            summary.add_row(
                model.model,
                'overall',
                str(model.problems),
                *(f'{model.overall[key].percent}' for key in keys),
            )
            for tier, cells in model.tiers.items():
                summary.add_row(
                    '',
                    tier.value,
                    str(self.tier_counts[tier]),
                    *(f'{cells[key].percent}' for key in keys),
                )
        tables = [summary]
        if with_matrix:
            for model in self.models:
                matrix = Table(title=f'{model.model}: per-problem results')
                matrix.add_column('problem')
                for key in keys:
                    matrix.add_column(key, justify='center')
                for problem_id, row in model.matrix.items():
                    matrix.add_row(problem_id, *(CHECK if row[key] else CROSS for key in keys))
                tables.append(matrix)
        return tables


def _cells(
    solved: dict[str, dict[str, bool]],
    problem_ids: Sequence[str],
    keys: Sequence[str],
) -> dict[str, RatioCell]:
    return {
        key: RatioCell(successes=sum(solved[pid][key] for pid in problem_ids), problems=len(problem_ids))
        for key in keys
    }


def aggregate_report(
    outcomes: Sequence[AttemptOutcome],
    metas: Sequence[ProblemMeta],
    models: Sequence[str] | None = None,
    k_set: Sequence[int] = DEFAULT_K_SET,
    boundaries: tuple[float, float] | None = None,
) -> MetricReport:
    """synth@k / pass@k per model, overall and per tier.

    Problems without a tier are classified (tercile boundaries unless
    *boundaries* is given).

    Raises:
        IncompleteOutcomes: a (model, problem) pair has no attempts.
        InsufficientAttempts: a problem has fewer than max(k_set) attempts.
    """
    k_values = sorted(set(k_set))
    if any(m.tier is None for m in metas) or boundaries is not None:
        metas = classify_tiers(metas, boundaries)
    problem_ids = sorted(m.problem_id for m in metas)
    tier_of = {m.problem_id: m.tier for m in metas}
    model_names = list(models) if models else sorted({o.model for o in outcomes})
    keys = [metric_key(p, k) for p in PREDICATES for k in k_values]

    reports: list[ModelReport] = []
    for name in model_names:
        grouped = group_attempts(o for o in outcomes if o.model == name)
        missing = [pid for pid in problem_ids if pid not in grouped]
        if missing:
            msg = f'model {name!r} has no attempts for {", ".join(missing[:5])}'
            raise IncompleteOutcomes(msg)
        solved = {
            pid: {
                metric_key(p, k): solved_within(grouped[pid], pid, k, p)
                for p in PREDICATES
                for k in k_values
            }
            for pid in problem_ids
        }
        tiers = {
            tier: _cells(solved, [pid for pid in problem_ids if tier_of[pid] is tier], keys)
            for tier in Tier
        }
        reports.append(
            ModelReport(
                model=name,
                problems=len(problem_ids),
                overall=_cells(solved, problem_ids, keys),
                tiers=tiers,
                matrix=solved,
            ),
        )
        logger.info('model_scored', model=name, problems=len(problem_ids))

    tier_counts = {tier: sum(1 for pid in problem_ids if tier_of[pid] is tier) for tier in Tier}
    return MetricReport(k_set=k_values, tier_counts=tier_counts, models=reports)
