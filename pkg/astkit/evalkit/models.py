from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field, model_validator

DEFAULT_MODEL = 'default'


class Predicate(str, Enum):
    SYNTH = 'synth'
    FUNCTIONAL = 'functional'

    @property
    def label(self) -> str:
        return 'synth' if self is Predicate.SYNTH else 'pass'


class Tier(str, Enum):
    T1 = 'T1'
    T2 = 'T2'
    T3 = 'T3'


class AttemptOutcome(BaseModel):
    """Result of one generated attempt at one evaluation problem."""

    problem_id: str
    attempt_idx: int = Field(ge=1)
    synth_ok: bool
    constraints_total: int = Field(default=0, ge=0)
    constraints_passed: int = Field(default=0, ge=0)
    functional_ok: bool = False
    model: str = DEFAULT_MODEL

    @model_validator(mode='after')
    def _consistent(self) -> AttemptOutcome:
        if self.constraints_passed > self.constraints_total:
            msg = f'{self.problem_id}#{self.attempt_idx}: more constraints passed than exist'
            raise ValueError(msg)
        expected = self.synth_ok and self.constraints_total > 0 and self.constraints_passed == self.constraints_total
        if self.functional_ok != expected:
            msg = f'{self.problem_id}#{self.attempt_idx}: functional_ok must be {expected}'
            raise ValueError(msg)
        return self

    @classmethod
    def from_counts(
        cls,
        problem_id: str,
        attempt_idx: int,
        *,
        synth_ok: bool,
        constraints_total: int = 0,
        constraints_passed: int = 0,
        model: str = DEFAULT_MODEL,
    ) -> AttemptOutcome:
        """Build an outcome, deriving ``functional_ok`` from the counts."""
        return cls(
            problem_id=problem_id,
            attempt_idx=attempt_idx,
            synth_ok=synth_ok,
            constraints_total=constraints_total,
            constraints_passed=constraints_passed,
            functional_ok=synth_ok and constraints_total > 0 and constraints_passed == constraints_total,
            model=model,
        )

    def satisfies(self, predicate: Predicate) -> bool:
        return self.synth_ok if predicate is Predicate.SYNTH else self.functional_ok


class ProblemMeta(BaseModel):
    problem_id: str
    reference_verilog_chars: int = Field(gt=0)
    tier: Tier | None = None
