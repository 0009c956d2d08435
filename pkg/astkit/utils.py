import json
from collections.abc import Iterable, Iterator
from pathlib import Path
from typing import IO, Any

from astkit.exceptions import InputFileError


def read_text_utf8(path: Path) -> str:
    """Read text from a file using UTF-8 encoding.

    Raises:
        InputFileError: The file is missing, unreadable or not UTF-8.
    """
    try:
        return path.read_text(encoding='utf-8')
    except FileNotFoundError as exc:
        msg = f'file not found: {path}'
        raise InputFileError(msg) from exc
    except (OSError, UnicodeDecodeError) as exc:
        msg = f'cannot read {path}: {exc}'
        raise InputFileError(msg) from exc


def write_text_utf8(path: Path, content: str) -> None:
    """Write text to a file using UTF-8 encoding and LF newlines."""
    with path.open('w', encoding='utf-8', newline='\n') as fh:
        fh.write(content)


def open_utf8(path: Path, mode: str = 'r') -> IO[str]:
    """Open a file with UTF-8 encoding (LF newlines when writing)."""
    return path.open(mode, encoding='utf-8', newline='\n' if mode != 'r' else None)


def dump_json_line(obj: object) -> str:
    """Serialize one JSON-lines row with stable key order."""
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, separators=(',', ':'))


def read_jsonl(path: Path) -> Iterator[dict[str, Any]]:
    """Yield one decoded object per non-blank line of a JSON-lines file."""
    for lineno, line in enumerate(read_text_utf8(path).splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            row = json.loads(stripped)
        except json.JSONDecodeError as exc:
            msg = f'{path}:{lineno}: invalid JSON: {exc.msg}'
            raise InputFileError(msg) from exc
        if not isinstance(row, dict):
            msg = f'{path}:{lineno}: expected a JSON object'
            raise InputFileError(msg)
        yield row


def write_jsonl(path: Path, rows: Iterable[object]) -> int:
    """Write rows as JSON lines, returning how many were written."""
    count = 0
    with open_utf8(path, 'w') as fh:
        for row in rows:
            fh.write(dump_json_line(row) + '\n')
            count += 1
    return count
