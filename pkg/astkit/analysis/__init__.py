from astkit.analysis.cfg import Cfg, CfgEdge, EdgeKind, analyze_control_flow, cfg_to_dot, cfg_to_json, handlers
from astkit.analysis.optimize import OptimizeConfig, optimize

__all__ = [
    'Cfg',
    'CfgEdge',
    'EdgeKind',
    'OptimizeConfig',
    'analyze_control_flow',
    'cfg_to_dot',
    'cfg_to_json',
    'handlers',
    'optimize',
]
