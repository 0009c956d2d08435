from astkit.evalkit.metrics import (
    ModelDisagreement,
    compare_models,
    group_attempts,
    pass_at_k,
    pass_at_k_unbiased,
    solved_within,
)
from astkit.evalkit.models import DEFAULT_MODEL, AttemptOutcome, Predicate, ProblemMeta, Tier
from astkit.evalkit.report import DEFAULT_K_SET, MetricReport, ModelReport, RatioCell, aggregate_report, percent
from astkit.evalkit.simlog import ConstraintCounts, parse_sim_log
from astkit.evalkit.tiers import classify_tiers, tercile_boundaries

__all__ = [
    'DEFAULT_K_SET',
    'DEFAULT_MODEL',
    'AttemptOutcome',
    'ConstraintCounts',
    'MetricReport',
    'ModelDisagreement',
    'ModelReport',
    'Predicate',
    'ProblemMeta',
    'RatioCell',
    'Tier',
    'aggregate_report',
    'classify_tiers',
    'compare_models',
    'group_attempts',
    'parse_sim_log',
    'pass_at_k',
    'pass_at_k_unbiased',
    'percent',
    'solved_within',
    'tercile_boundaries',
]
