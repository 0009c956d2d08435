from dataclasses import dataclass

import pytest

from astkit.evalkit import ConstraintCounts, parse_sim_log
from astkit.exceptions import MalformedLogLine


@dataclass
class LogCase:
    name: str
    log: str
    expected: ConstraintCounts


@pytest.mark.parametrize(
    'case',
    [
        LogCase(
            name='mixed',
            log='CONSTRAINT 1 PASS\nCONSTRAINT 2 FAIL\nCONSTRAINT 3 PASS\n',
            expected=ConstraintCounts(3, 2),
        ),
        LogCase(name='empty', log='', expected=ConstraintCounts(0, 0)),
        LogCase(
            name='noise_is_ignored',
            log='VCD info: dumpfile\n  CONSTRAINT 1 PASS  \n$finish called\n',
            expected=ConstraintCounts(1, 1),
        ),
        LogCase(
            name='last_verdict_wins',
            log='CONSTRAINT 1 FAIL\nCONSTRAINT 1 PASS\nCONSTRAINT 2 PASS\n',
            expected=ConstraintCounts(2, 2),
        ),
    ],
    ids=lambda c: c.name,
)
def test_parse_sim_log(case: LogCase):
    assert parse_sim_log(case.log) == case.expected


@pytest.mark.parametrize(
    'log',
    ['CONSTRAINT 1 MAYBE\n', 'CONSTRAINT x PASS\n', 'CONSTRAINT 1 PASS extra\n'],
    ids=['bad_verdict', 'bad_id', 'trailing_text'],
)
def test_malformed_constraint_lines(log: str):
    with pytest.raises(MalformedLogLine) as info:
        parse_sim_log('CONSTRAINT 7 PASS\n' + log)
    assert info.value.line_no == 2


def test_strict_rejects_noise():
    assert parse_sim_log('hello\nCONSTRAINT 1 PASS\n') == ConstraintCounts(1, 1)
    with pytest.raises(MalformedLogLine):
        parse_sim_log('hello\nCONSTRAINT 1 PASS\n', strict=True)
