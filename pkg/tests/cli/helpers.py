import json
from typing import Any


def json_payload(output: str) -> Any:
    """Decode the JSON document in *output*, skipping any log lines before it."""
    lines = output.splitlines()
    start = next(i for i, line in enumerate(lines) if line in ('{', '['))
    return json.loads('\n'.join(lines[start:]))
