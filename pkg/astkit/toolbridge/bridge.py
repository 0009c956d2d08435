"""One place that owns adapters, their concurrency limits and rate limits."""

from __future__ import annotations

import threading
import time
from collections import Counter
from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager
from pathlib import Path

import httpx
from hotlog import get_logger

from astkit.exceptions import ConfigValidationError
from astkit.templates import TemplateStore
from astkit.toolbridge.llm import llm_chat
from astkit.toolbridge.mock import MockLlm
from astkit.toolbridge.models import AdapterKind, ChatMessage, SimResult, SynthResult, ToolAdapter
from astkit.toolbridge.ratelimit import TokenBucket
from astkit.toolbridge.sandbox import make_workdir
from astkit.toolbridge.simulation import run_constrained_sim
from astkit.toolbridge.synthesis import run_synthesis

logger = get_logger(__name__)


class ToolBridge:
    """Dispatches LLM, synthesis and simulation calls to the configured adapters.

    Each adapter gets a semaphore sized by its ``parallelism`` and, when
    ``rate_per_second`` is set, a token bucket. ``calls`` counts external
    invocations per adapter kind.
    """

    def __init__(
        self,
        adapters: Sequence[ToolAdapter],
        *,
        templates: TemplateStore | None = None,
        work_root: Path | None = None,
        seed: int | None = None,
        client: httpx.Client | None = None,
        sleep: Callable[[float], None] = time.sleep,
    ) -> None:
        self.adapters = list(adapters)
        self.templates = templates or TemplateStore()
        self.work_root = work_root
        self.seed = seed
        self.client = client
        self.sleep = sleep
        self.calls: Counter[str] = Counter()
        self._calls_lock = threading.Lock()
        self._slots = {a.name: threading.BoundedSemaphore(a.parallelism) for a in self.adapters}
        self._buckets = {
            a.name: TokenBucket(a.rate_per_second, a.burst, sleep=sleep)
            for a in self.adapters
            if a.rate_per_second
        }
        self._mocks: dict[str, MockLlm] = {}
        self._mock_lock = threading.Lock()

    def adapter(self, kind: AdapterKind) -> ToolAdapter:
        for adapter in self.adapters:
            if adapter.kind is kind:
                return adapter
        msg = f'no {kind.value} adapter configured'
        raise ConfigValidationError(msg)

    @contextmanager
    def _slot(self, adapter: ToolAdapter) -> Iterator[None]:
        bucket = self._buckets.get(adapter.name)
        with self._slots[adapter.name]:
            if bucket is not None:
                bucket.acquire()
            with self._calls_lock:
                self.calls[adapter.kind.value] += 1
            yield

    def _mock_llm(self, adapter: ToolAdapter) -> MockLlm:
        with self._mock_lock:
            if adapter.name not in self._mocks:
                self._mocks[adapter.name] = (
                    MockLlm.load(adapter.fixtures, self.templates) if adapter.fixtures else MockLlm({})
                )
            return self._mocks[adapter.name]

    def chat(self, messages: Sequence[ChatMessage]) -> str:
        adapter = self.adapter(AdapterKind.LLM)
        mock = self._mock_llm(adapter) if adapter.mock_mode else None
        with self._slot(adapter):
            return llm_chat(messages, adapter, client=self.client, mock=mock, seed=self.seed, sleep=self.sleep)

    @contextmanager
    def synthesize(self, hls_code: str, top: str) -> Iterator[SynthResult]:
        """Synthesis result whose ``rtl_path`` stays valid until the block exits."""
        adapter = self.adapter(AdapterKind.SYNTHESIS)
        with make_workdir(adapter, self.work_root) as workdir:
            with self._slot(adapter):
                result = run_synthesis(hls_code, top, adapter, workdir=workdir)
            yield result

    def simulate(self, rtl_path: Path | None, testbench: str, top: str) -> SimResult:
        adapter = self.adapter(AdapterKind.SIMULATION)
        with make_workdir(adapter, self.work_root) as workdir, self._slot(adapter):
            return run_constrained_sim(rtl_path, testbench, adapter, workdir=workdir, top=top)

    @property
    def total_calls(self) -> int:
        return sum(self.calls.values())
