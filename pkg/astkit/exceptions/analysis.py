from astkit.exceptions.core import AstkitError


class AnalysisError(AstkitError):
    """Base class for tree optimization and control-flow errors."""

    log_category = 'analysis_error'


class InvalidOptimizeConfig(AnalysisError):
    """Optimize settings would delete or collapse control/data nodes."""

    log_category = 'invalid_optimize_config'
