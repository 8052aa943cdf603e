"""Deterministic discrete-event simulation of the protected-link platform."""

from .config import (
    CipherConfig,
    ClockConfig,
    ExpectConfig,
    KeysyncConfig,
    ScenarioConfig,
    StimulusConfig,
    load_scenario,
)
from .engine import Simulation, run_scenario
from .report import SimReport
from .stimulus import FlipEvent, LaneGenerator, grid_periods, stimulus_step
from .tamper import TamperScenario
from .topology import Topology
from .trace import export_csv, export_trace, export_vcd, parse_csv, parse_vcd

__all__ = [
    "CipherConfig",
    "ClockConfig",
    "ExpectConfig",
    "KeysyncConfig",
    "ScenarioConfig",
    "StimulusConfig",
    "load_scenario",
    "Simulation",
    "run_scenario",
    "SimReport",
    "FlipEvent",
    "LaneGenerator",
    "grid_periods",
    "stimulus_step",
    "TamperScenario",
    "Topology",
    "export_csv",
    "export_trace",
    "export_vcd",
    "parse_csv",
    "parse_vcd",
]
