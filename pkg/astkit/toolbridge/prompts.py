from __future__ import annotations

import re
from typing import Any

from astkit.exceptions import EmptyInput, MalformedResponse
from astkit.templates import TemplateStore
from astkit.toolbridge.models import ChatMessage


def render_message(store: TemplateStore, template: str, role: str, **context: Any) -> ChatMessage:
    """Render a template into a chat message, trimming surrounding blank lines."""
    return ChatMessage(role=role, content=store.render(template, **context).strip('\n'))  # type: ignore[arg-type]


def build_testbench_augmentation_prompt(
    reference_code: str,
    testbench: str,
    instruction: str,
    *,
    templates: TemplateStore | None = None,
) -> list[ChatMessage]:
    """Messages asking the LLM to add ``CONSTRAINT <id> PASS|FAIL`` checks to a testbench.

    Raises:
        EmptyInput: any of the three inputs is blank.
        TemplateNotFound: a template (or its override) is missing.
    """
    for label, value in (('reference code', reference_code), ('testbench', testbench), ('instruction', instruction)):
        if not value.strip():
            msg = f'{label} is empty'
            raise EmptyInput(msg)
    store = templates or TemplateStore()
    return [
        render_message(store, 'testbench_system', 'system'),
        render_message(
            store,
            'testbench_user',
            'user',
            reference_code=reference_code.strip('\n'),
            testbench=testbench.strip('\n'),
            instruction=instruction.strip(),
        ),
    ]


_VERILOG_FENCE = re.compile(r'```(?:verilog|systemverilog|v|sv)?[ \t]*\n(.*?)```', re.DOTALL | re.IGNORECASE)


def extract_testbench(reply: str) -> str:
    """The first fenced Verilog block of an augmentation reply.

    Raises:
        MalformedResponse: the reply has no non-empty fenced block.
    """
    match = _VERILOG_FENCE.search(reply)
    if match is None or not match.group(1).strip():
        msg = 'augmentation reply has no fenced Verilog testbench'
        raise MalformedResponse(msg)
    return match.group(1).strip('\n') + '\n'
