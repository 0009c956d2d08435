"""OpenAI-compatible chat-completion client."""

from __future__ import annotations

import os
import time
from collections.abc import Callable, Sequence
from typing import Any

import httpx
from hotlog import get_logger

from astkit.exceptions import HttpError, MalformedResponse, RateLimited, ToolTimeout
from astkit.toolbridge.mock import MockLlm
from astkit.toolbridge.models import AdapterKind, ChatMessage, ToolAdapter
from astkit.toolbridge.sandbox import require_kind

logger = get_logger(__name__)

HTTP_TOO_MANY_REQUESTS = 429
HTTP_ERROR_FLOOR = 400
HTTP_SERVER_ERROR_FLOOR = 500


def request_body(messages: Sequence[ChatMessage], adapter: ToolAdapter, seed: int | None = None) -> dict[str, Any]:
    body: dict[str, Any] = {
        'model': adapter.model,
        'messages': [{'role': m.role, 'content': m.content} for m in messages],
        'temperature': adapter.temperature,
    }
    if seed is not None:
        body['seed'] = seed
    return body


def _headers(adapter: ToolAdapter) -> dict[str, str]:
    headers = {'Content-Type': 'application/json'}
    key = os.environ.get(adapter.credential_env) if adapter.credential_env else None
    if key:
        headers['Authorization'] = f'Bearer {key}'
    return headers


def _retryable(status: int) -> bool:
    return status == HTTP_TOO_MANY_REQUESTS or status >= HTTP_SERVER_ERROR_FLOOR


def _first_choice(payload: object) -> str:
    try:
        content = payload['choices'][0]['message']['content']  # type: ignore[index]
    except (KeyError, IndexError, TypeError) as exc:
        msg = 'chat completion has no choices[0].message.content'
        raise MalformedResponse(msg) from exc
    if not isinstance(content, str):
        msg = 'chat completion content is not a string'
        raise MalformedResponse(msg)
    return content


def llm_chat(
    messages: Sequence[ChatMessage],
    adapter: ToolAdapter,
    *,
    client: httpx.Client | None = None,
    mock: MockLlm | None = None,
    seed: int | None = None,
    sleep: Callable[[float], None] = time.sleep,
) -> str:
    """Send *messages* and return the first choice's content.

    429 and 5xx answers are retried with exponential backoff
    (``backoff_base * 2**attempt``) up to ``adapter.max_retries`` times.

    Raises:
        RateLimited: still rate limited after the last retry.
        HttpError: a non-2xx status other than 429 (5xx once retries run out); status 0 on transport failure.
        MalformedResponse: the body lacks ``choices[0].message.content``.
        FixtureNotFound: mock mode without a fixture for this request.
    """
    require_kind(adapter, AdapterKind.LLM)
    if adapter.mock_mode:
        if mock is None:
            mock = MockLlm.load(adapter.fixtures) if adapter.fixtures else MockLlm({})
        return mock.reply(messages)

    url = f'{(adapter.endpoint or "").rstrip("/")}/chat/completions'
    body = request_body(messages, adapter, seed)
    owned = client is None
    http = client or httpx.Client(timeout=adapter.timeout)
    try:
        for attempt in range(adapter.max_retries + 1):
            try:
                response = http.post(url, json=body, headers=_headers(adapter))
            except httpx.TimeoutException as exc:
                msg = f'{adapter.name} did not answer within {adapter.timeout}s'
                raise ToolTimeout(msg) from exc
            except httpx.HTTPError as exc:
                raise HttpError(0, str(exc)) from exc
            status = response.status_code
            if _retryable(status) and attempt < adapter.max_retries:
                delay = adapter.backoff_base * 2**attempt
                logger.warning('llm_retrying', adapter=adapter.name, status=status, attempt=attempt + 1, delay=delay)
                sleep(delay)
                continue
            if status == HTTP_TOO_MANY_REQUESTS:
                raise RateLimited(status, 'retries exhausted')
            if status >= HTTP_ERROR_FLOOR:
                raise HttpError(status, response.text[:200])
            try:
                payload = response.json()
            except ValueError as exc:
                msg = 'chat completion body is not JSON'
                raise MalformedResponse(msg) from exc
            return _first_choice(payload)
    finally:
        if owned:
            http.close()
    raise RateLimited(HTTP_TOO_MANY_REQUESTS, 'retries exhausted')  # pragma: no cover
