"""Split a porting reply into its HLS-C code and its instruction."""

from __future__ import annotations

import re

from astkit.dataset.models import PortingResponse
from astkit.exceptions import MissingCodeSection, MissingInstructionSection

# "(1)" / "(2)" at line start, possibly behind markdown heading or bold markers
_SECTION = re.compile(r'^[ \t>#*_]*\(([12])\)', re.MULTILINE)
_FENCE = re.compile(r'```[^\n`]*\n(.*?)```', re.DOTALL)
_PROMPT_LABEL = re.compile(r'^[\s*_#]*Corresponding Prompt[\s*_]*:?[\s*_]*', re.IGNORECASE)


def _sections(text: str) -> dict[str, tuple[int, int]]:
    """Start/end offsets of each numbered section; the first marker of a number wins."""
    markers: list[tuple[str, int, int]] = []
    seen: set[str] = set()
    for match in _SECTION.finditer(text):
        number = match.group(1)
        if number in seen or _inside_fence(text, match.start()):
            continue
        seen.add(number)
        markers.append((number, match.start(), match.end()))
    bounds: dict[str, tuple[int, int]] = {}
    for index, (number, _start, body) in enumerate(markers):
        end = markers[index + 1][1] if index + 1 < len(markers) else len(text)
        bounds[number] = (body, end)
    return bounds


def _inside_fence(text: str, offset: int) -> bool:
    return text.count('```', 0, offset) % 2 == 1


def _unfence(text: str) -> str:
    match = _FENCE.search(text)
    if match and not text[: match.start()].strip() and not text[match.end() :].strip():
        return match.group(1)
    return text


def parse_porting_response(response_text: str) -> PortingResponse:
    """Extract ``(1)`` code and ``(2)`` instruction from a porting reply.

    The code is the first fenced block of section (1), or of the whole
    reply when the numbered headings are missing. Whether the code defines
    ``top_module`` is checked later, when it is parsed.

    Raises:
        MissingCodeSection: no fenced code block was found.
        MissingInstructionSection: section (2) is absent or empty.
    """
    sections = _sections(response_text)
    code_region = response_text
    if '1' in sections:
        start, end = sections['1']
        code_region = response_text[start:end]
    elif '2' in sections:
        code_region = response_text[: sections['2'][0]]
    fence = _FENCE.search(code_region)
    if fence is None or not fence.group(1).strip():
        msg = 'reply has no fenced HLS-C code block'
        raise MissingCodeSection(msg)

    if '2' not in sections:
        msg = 'reply has no "(2)" instruction section'
        raise MissingInstructionSection(msg)
    start, end = sections['2']
    instruction = _unfence(_PROMPT_LABEL.sub('', response_text[start:end].strip(), count=1)).strip()
    if not instruction:
        msg = 'instruction section is empty'
        raise MissingInstructionSection(msg)
    return PortingResponse(hls_code=fence.group(1).strip('\n') + '\n', instruction=instruction)
