from astkit.exceptions.core import AstkitError


class ToolError(AstkitError):
    """Base class for external tool and service failures."""

    log_category = 'tool_error'


class ToolTimeout(ToolError):
    log_category = 'tool_timeout'


class SpawnFailure(ToolError):
    log_category = 'spawn_failure'


class WorkdirError(ToolError):
    log_category = 'workdir_error'


class HttpError(ToolError):
    log_category = 'http_error'

    def __init__(self, status: int, detail: str = '') -> None:
        self.status = status
        super().__init__(f'HTTP {status} {detail}'.rstrip())


class RateLimited(HttpError):
    log_category = 'rate_limited'


class MalformedResponse(ToolError):
    log_category = 'malformed_response'


class FixtureNotFound(ToolError):
    """A mock adapter has no canned answer for the request."""

    log_category = 'fixture_not_found'
