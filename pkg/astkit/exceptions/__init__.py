from astkit.exceptions.analysis import AnalysisError, InvalidOptimizeConfig
from astkit.exceptions.config import ConfigError, ConfigValidationError
from astkit.exceptions.core import AstkitError, InputFileError
from astkit.exceptions.evalkit import (
    EvalError,
    IncompleteOutcomes,
    InsufficientAttempts,
    InvalidBoundaries,
    MalformedLogLine,
)
from astkit.exceptions.parser import (
    AmbiguousFunction,
    FunctionNotFound,
    HlscSyntaxError,
    IllegalCharacter,
    LexError,
    ParseError,
    UnsupportedConstruct,
    UnterminatedComment,
    UnterminatedString,
)
from astkit.exceptions.pipeline import (
    EmptyInput,
    EmptySequence,
    LedgerError,
    MissingCodeSection,
    MissingInstructionSection,
    PipelineError,
    TemplateNotFound,
)
from astkit.exceptions.serialize import (
    DuplicateRecordId,
    EmptySection,
    NotAFunction,
    SerializeError,
)
from astkit.exceptions.toolbridge import (
    FixtureNotFound,
    HttpError,
    MalformedResponse,
    RateLimited,
    SpawnFailure,
    ToolError,
    ToolTimeout,
    WorkdirError,
)

__all__ = [
    'AmbiguousFunction',
    'AnalysisError',
    'AstkitError',
    'ConfigError',
    'ConfigValidationError',
    'DuplicateRecordId',
    'EmptyInput',
    'EmptySection',
    'EmptySequence',
    'EvalError',
    'FixtureNotFound',
    'FunctionNotFound',
    'HlscSyntaxError',
    'HttpError',
    'InputFileError',
    'IllegalCharacter',
    'IncompleteOutcomes',
    'InsufficientAttempts',
    'InvalidBoundaries',
    'InvalidOptimizeConfig',
    'LedgerError',
    'LexError',
    'MalformedLogLine',
    'MalformedResponse',
    'MissingCodeSection',
    'MissingInstructionSection',
    'NotAFunction',
    'ParseError',
    'PipelineError',
    'RateLimited',
    'SerializeError',
    'SpawnFailure',
    'TemplateNotFound',
    'ToolError',
    'ToolTimeout',
    'UnsupportedConstruct',
    'UnterminatedComment',
    'UnterminatedString',
    'WorkdirError',
]
