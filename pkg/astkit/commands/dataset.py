from __future__ import annotations

from pathlib import Path

from rich.table import Table

from astkit.commands.common import bridge_for, load, templates_for
from astkit.console import console
from astkit.dataset import BuildSummary, load_eval_instructions, run_dataset_build, run_dataset_filter


def _summary_table(summary: BuildSummary) -> Table:
    table = Table(title='Dataset build')
    table.add_column('item')
    table.add_column('count', justify='right')
    table.add_row('sources', str(summary.sources))
    for status, count in summary.statuses.items():
        table.add_row(status, str(count))
    table.add_row('records', str(summary.records))
    table.add_row('kept', str(summary.kept))
    table.add_row('dropped (leakage)', str(summary.dropped_leakage))
    for name, count in summary.pragmas.items():
        table.add_row(f'pragma {name}', str(count))
    return table


def build_command(
    corpus: Path,
    out: Path,
    *,
    eval_instructions: Path | None,
    config_path: Path | None,
) -> int:
    config = load(config_path)
    templates = templates_for(config)
    summary = run_dataset_build(
        corpus,
        out,
        config,
        bridge=bridge_for(config, templates),
        templates=templates,
        eval_instructions=load_eval_instructions(eval_instructions) if eval_instructions else None,
    )
    console.print(_summary_table(summary))
    return 0


def filter_command(
    dataset: Path,
    eval_instructions: Path,
    *,
    threshold: float | None,
    config_path: Path | None,
) -> int:
    config = load(config_path)
    records = run_dataset_filter(
        dataset,
        load_eval_instructions(eval_instructions),
        config.leakage_threshold if threshold is None else threshold,
        templates=templates_for(config),
    )
    kept = sum(r.kept for r in records)
    console.print(f'[green]✓[/green] {dataset}: kept {kept} of {len(records)} records')
    return 0
