"""Constrained-simulation log protocol: ``CONSTRAINT <id> PASS|FAIL`` lines."""

from __future__ import annotations

import re
from typing import NamedTuple

from astkit.exceptions import MalformedLogLine

CONSTRAINT_LINE = re.compile(r'^\s*CONSTRAINT\s+(\d+)\s+(PASS|FAIL)\s*$')
CONSTRAINT_PREFIX = re.compile(r'^\s*CONSTRAINT\b')


class ConstraintCounts(NamedTuple):
    total: int
    passed: int


def parse_sim_log(log_text: str, *, strict: bool = False) -> ConstraintCounts:
    """Count constraint verdicts; a repeated id keeps its last verdict.

    Lines that start with ``CONSTRAINT`` but do not match the protocol are
    always rejected. Other non-blank lines are ignored unless *strict*.

    Raises:
        MalformedLogLine: a line violates the protocol.
    """
    verdicts: dict[int, bool] = {}
    for line_no, line in enumerate(log_text.splitlines(), start=1):
        match = CONSTRAINT_LINE.match(line)
        if match:
            verdicts[int(match.group(1))] = match.group(2) == 'PASS'
        elif CONSTRAINT_PREFIX.match(line) or (strict and line.strip()):
            raise MalformedLogLine(line_no, line)
    return ConstraintCounts(len(verdicts), sum(verdicts.values()))
