import re
from pathlib import Path

from astkit.cli.main import app
from astkit.cli.testing import CliRunner
from astkit.utils import read_jsonl
from tests.support.paths import PIPELINE

runner = CliRunner()
CONFIG = PIPELINE / 'astkit.yaml'


def _build(out: Path) -> None:
    result = runner.invoke(
        app,
        [
            'dataset',
            'build',
            str(PIPELINE / 'corpus'),
            str(out),
            '--eval-instructions',
            str(PIPELINE / 'eval_instructions.jsonl'),
            '-c',
            str(CONFIG),
        ],
    )
    assert result.exit_code == 0, result.output
    assert 'accepted' in result.output


def test_build_writes_one_row_per_source(tmp_path: Path) -> None:
    out = tmp_path / 'train.jsonl'
    _build(out)
    rows = list(read_jsonl(out))
    assert [row['source_id'] for row in rows] == ['adder.v', 'counter.v', 'dyn_buffer.v', 'mux.v', 'rom.v']
    assert sum(row['kept'] for row in rows) == 4


def test_filter_rescores_against_new_instructions(tmp_path: Path) -> None:
    out = tmp_path / 'train.jsonl'
    _build(out)
    adder = next(row for row in read_jsonl(out) if row['source_id'] == 'adder.v')
    eval_file = tmp_path / 'eval.txt'
    eval_file.write_text(f'{adder["instruction"]}\n---\n', encoding='utf-8')

    result = runner.invoke(app, ['dataset', 'filter', str(out), str(eval_file), '-c', str(CONFIG)])

    assert result.exit_code == 0, result.output
    assert re.search(r'kept\s+\d\s+of\s+5\s+records', result.output)
    rows = {row['source_id']: row for row in read_jsonl(out)}
    assert rows['adder.v']['kept'] is False


def test_empty_corpus_gives_an_empty_dataset(tmp_path: Path) -> None:
    corpus = tmp_path / 'corpus'
    corpus.mkdir()
    out = tmp_path / 'out.jsonl'
    result = runner.invoke(app, ['dataset', 'build', str(corpus), str(out), '-c', str(CONFIG)])
    assert result.exit_code == 0, result.output
    assert out.read_text(encoding='utf-8') == ''
