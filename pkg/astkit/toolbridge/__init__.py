from astkit.toolbridge.bridge import ToolBridge
from astkit.toolbridge.llm import llm_chat, request_body
from astkit.toolbridge.mock import MockLlm, messages_digest
from astkit.toolbridge.models import AdapterKind, ChatMessage, MockRule, SimResult, SynthResult, ToolAdapter
from astkit.toolbridge.prompts import build_testbench_augmentation_prompt, extract_testbench, render_message
from astkit.toolbridge.ratelimit import TokenBucket
from astkit.toolbridge.sandbox import build_argv, make_workdir
from astkit.toolbridge.simulation import run_constrained_sim
from astkit.toolbridge.synthesis import run_synthesis

__all__ = [
    'AdapterKind',
    'ChatMessage',
    'MockLlm',
    'MockRule',
    'SimResult',
    'SynthResult',
    'TokenBucket',
    'ToolAdapter',
    'ToolBridge',
    'build_argv',
    'build_testbench_augmentation_prompt',
    'extract_testbench',
    'llm_chat',
    'make_workdir',
    'messages_digest',
    'render_message',
    'request_body',
    'run_constrained_sim',
    'run_synthesis',
]
