"""Append-only JSON-lines job ledger for resumable dataset builds.

Each line records one event for one source file. The latest line per
source wins; statuses only ever move forward (see ``TRANSITIONS``).
"""

from __future__ import annotations

import json
import threading
from pathlib import Path
from typing import Any

from hotlog import get_logger
from pydantic import BaseModel, ValidationError

from astkit.dataset.models import TRANSITIONS, JobStatus
from astkit.exceptions import LedgerError
from astkit.utils import dump_json_line, open_utf8

logger = get_logger(__name__)


class LedgerEntry(BaseModel):
    source_id: str
    status: JobStatus
    error: str | None = None
    category: str | None = None
    payload: dict[str, Any] | None = None


def ledger_path_for(out: Path) -> Path:
    return out.with_name(f'{out.stem}.ledger.jsonl')


class JobLedger:
    def __init__(self, path: Path) -> None:
        self.path = path
        self._lock = threading.Lock()
        self.entries: dict[str, LedgerEntry] = {}
        if path.exists():
            self._load()

    def _load(self) -> None:
        with open_utf8(self.path) as fh:
            for line_no, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    entry = LedgerEntry.model_validate(json.loads(line))
                except (json.JSONDecodeError, ValidationError) as exc:
                    msg = f'{self.path}:{line_no}: unreadable ledger line'
                    raise LedgerError(msg) from exc
                self.entries[entry.source_id] = entry
        logger.debug('ledger_loaded', path=str(self.path), jobs=len(self.entries))

    def status(self, source_id: str) -> JobStatus:
        entry = self.entries.get(source_id)
        return entry.status if entry else JobStatus.PENDING

    def payload(self, source_id: str) -> dict[str, Any] | None:
        entry = self.entries.get(source_id)
        return entry.payload if entry else None

    def record(self, entry: LedgerEntry) -> None:
        """Append *entry*; a status change must follow ``TRANSITIONS``.

        Raises:
            LedgerError: the entry would move the job backwards or sideways.
        """
        with self._lock:
            current = self.entries.get(entry.source_id)
            current_status = current.status if current else JobStatus.PENDING
            if entry.status is not current_status and entry.status not in TRANSITIONS[current_status]:
                msg = f'{entry.source_id}: cannot move from {current_status.value} to {entry.status.value}'
                raise LedgerError(msg)
            if entry.payload is None and current is not None and entry.status is current_status:
                entry = entry.model_copy(update={'payload': current.payload})
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open_utf8(self.path, 'a') as fh:
                fh.write(dump_json_line(entry.model_dump(mode='json', exclude_none=True)) + '\n')
            self.entries[entry.source_id] = entry

    def counts(self) -> dict[str, int]:
        counts = {status.value: 0 for status in JobStatus}
        for entry in self.entries.values():
            counts[entry.status.value] += 1
        return counts
