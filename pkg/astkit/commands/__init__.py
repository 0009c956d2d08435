from astkit.commands.dataset import build_command as dataset_build_cmd
from astkit.commands.dataset import filter_command as dataset_filter_cmd
from astkit.commands.evaluate import report_command as eval_report_cmd
from astkit.commands.evaluate import run_command as eval_run_cmd
from astkit.commands.port import port_command as port_cmd
from astkit.commands.port import testbench_command as port_testbench_cmd
from astkit.commands.tree import cfg_command as cfg_cmd
from astkit.commands.tree import optimize_command as optimize_cmd
from astkit.commands.tree import parse_command as parse_cmd
from astkit.commands.tree import serialize_command as serialize_cmd

__all__ = [
    'cfg_cmd',
    'dataset_build_cmd',
    'dataset_filter_cmd',
    'eval_report_cmd',
    'eval_run_cmd',
    'optimize_cmd',
    'parse_cmd',
    'port_cmd',
    'port_testbench_cmd',
    'serialize_cmd',
]
