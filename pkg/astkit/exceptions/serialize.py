from astkit.exceptions.core import AstkitError


class SerializeError(AstkitError):
    """Base class for AST serialization and record assembly errors."""

    log_category = 'serialize_error'


class NotAFunction(SerializeError):
    log_category = 'not_a_function'


class EmptySection(SerializeError):
    log_category = 'empty_section'


class DuplicateRecordId(SerializeError):
    log_category = 'duplicate_record_id'
