from __future__ import annotations

from astkit.exceptions import EmptyInput
from astkit.templates import TemplateStore
from astkit.toolbridge.models import ChatMessage
from astkit.toolbridge.prompts import render_message


def build_porting_prompt(verilog_text: str, *, templates: TemplateStore | None = None) -> list[ChatMessage]:
    """System message asking for HLS-C plus an instruction, then the Verilog as the user turn.

    Raises:
        EmptyInput: *verilog_text* is blank.
        TemplateNotFound: the porting template (or its override) is missing.
    """
    if not verilog_text.strip():
        msg = 'verilog source is empty'
        raise EmptyInput(msg)
    store = templates or TemplateStore()
    return [
        render_message(store, 'porting_system', 'system'),
        ChatMessage(role='user', content=verilog_text),
    ]
