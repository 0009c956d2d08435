from astkit.dataset.leakage import DEFAULT_THRESHOLD, filter_leakage, max_similarity
from astkit.dataset.ledger import JobLedger, LedgerEntry, ledger_path_for
from astkit.dataset.models import DatasetRecord, JobStatus, PortingJob, PortingResponse
from astkit.dataset.pipeline import (
    BuildSummary,
    DatasetBuilder,
    collect_sources,
    load_eval_instructions,
    run_dataset_build,
    run_dataset_filter,
    summary_path_for,
)
from astkit.dataset.prompts import build_porting_prompt
from astkit.dataset.response import parse_porting_response
from astkit.dataset.rouge import lcs_length, rouge_l, rouge_l_exact, rouge_l_text, tokenize_words

__all__ = [
    'DEFAULT_THRESHOLD',
    'BuildSummary',
    'DatasetBuilder',
    'DatasetRecord',
    'JobLedger',
    'JobStatus',
    'LedgerEntry',
    'PortingJob',
    'PortingResponse',
    'build_porting_prompt',
    'collect_sources',
    'filter_leakage',
    'lcs_length',
    'ledger_path_for',
    'load_eval_instructions',
    'max_similarity',
    'parse_porting_response',
    'rouge_l',
    'rouge_l_exact',
    'rouge_l_text',
    'run_dataset_build',
    'run_dataset_filter',
    'summary_path_for',
    'tokenize_words',
]
