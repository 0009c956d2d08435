from astkit.exceptions.core import AstkitError


class PipelineError(AstkitError):
    """Base class for dataset construction errors."""

    log_category = 'pipeline_error'


class EmptyInput(PipelineError):
    log_category = 'empty_input'


class TemplateNotFound(PipelineError):
    log_category = 'template_not_found'


class MissingCodeSection(PipelineError):
    log_category = 'missing_code_section'


class MissingInstructionSection(PipelineError):
    log_category = 'missing_instruction_section'


class EmptySequence(PipelineError):
    """A ROUGE-L operand tokenized to zero tokens."""

    log_category = 'empty_sequence'


class LedgerError(PipelineError):
    """The job ledger is unreadable or a status change is not allowed."""

    log_category = 'ledger_error'
