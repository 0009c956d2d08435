from astkit.serialize.pragmas import PragmaSummary, directive_name, pragma_summary
from astkit.serialize.records import (
    RecordBook,
    TrainingRecord,
    TrainingVariant,
    assemble_training_record,
    make_record_id,
)
from astkit.serialize.serializer import SerializedAst, param_type, serialize, variable_type

__all__ = [
    'PragmaSummary',
    'RecordBook',
    'SerializedAst',
    'TrainingRecord',
    'TrainingVariant',
    'assemble_training_record',
    'directive_name',
    'make_record_id',
    'param_type',
    'pragma_summary',
    'serialize',
    'variable_type',
]
