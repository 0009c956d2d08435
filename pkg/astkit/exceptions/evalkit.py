from astkit.exceptions.core import AstkitError


class EvalError(AstkitError):
    """Base class for evaluation harness errors."""

    log_category = 'eval_error'


class InsufficientAttempts(EvalError):
    log_category = 'insufficient_attempts'

    def __init__(self, problem_id: str, k: int, available: int) -> None:
        self.problem_id = problem_id
        self.k = k
        super().__init__(f'problem {problem_id!r} has {available} ordered attempts, needs {k}')


class InvalidBoundaries(EvalError):
    log_category = 'invalid_boundaries'


class MalformedLogLine(EvalError):
    log_category = 'malformed_log_line'

    def __init__(self, line_no: int, line: str) -> None:
        self.line_no = line_no
        super().__init__(f'line {line_no}: {line!r}')


class IncompleteOutcomes(EvalError):
    """Some (model, problem) pair has no recorded attempts."""

    log_category = 'incomplete_outcomes'
