"""Plaintext lane generators.

The sender's internal logic drives each plaintext lane from its own LFSR.
In uniform mode every lane shares one update period; in random mode each
lane gets an independent period drawn from the supported frequency grid.  A
lane only flips when its LFSR produces a bit that differs from the current
line value, so updates and flipping events are not the same thing.

Time is integer ticks, 1 tick = 1 ns at the default scale; the grid covers
5..200 MHz in 10 MHz steps, each frequency rounded to the nearest whole-tick
period.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..cipher import LFSR_TAPS, LfsrState, lfsr_new, lfsr_next
from ..errors import ConfigError

BASE_PERIOD = 5  # ticks; the 200 MHz corner
DEFAULT_TAPS = LFSR_TAPS[16]


def grid_periods() -> list[int]:
    """Whole-tick update periods for the 5..200 MHz grid."""
    freqs = list(range(5, 200, 10)) + [200]
    return sorted({round(1000 / f) for f in freqs}, reverse=True)


@dataclass(frozen=True)
class FlipEvent:
    """A value change on one named line at one tick."""

    t: int
    line: str
    value: int


@dataclass
class LaneGenerator:
    """One plaintext lane: an LFSR sampled every `period` ticks."""

    line: str
    period: int
    lfsr: LfsrState
    value: int = 0

    def due(self, t: int) -> bool:
        return t > 0 and t % self.period == 0


def stimulus_step(generators: list[LaneGenerator], t: int) -> list[FlipEvent]:
    """Advance every lane due at tick t; returns the flips actually emitted."""
    flips = []
    for gen in generators:
        if not gen.due(t):
            continue
        bit, gen.lfsr = lfsr_next(gen.lfsr, 1)
        if bit != gen.value:
            gen.value = bit
            flips.append(FlipEvent(t, gen.line, bit))
    return flips


@dataclass
class StimulusConfig:
    mode: str = "uniform"  # "uniform" | "random" | "none"
    period: int = BASE_PERIOD
    periods: tuple[int, ...] | None = None  # random mode, one per lane
    lane_seeds: tuple[int, ...] | None = None
    taps: tuple[int, ...] = DEFAULT_TAPS

    def __post_init__(self):
        if self.mode not in ("uniform", "random", "none"):
            raise ConfigError(f"unknown stimulus mode {self.mode!r}")
        if self.period < 1:
            raise ConfigError("update period must be >= 1 tick")
        if self.periods is not None and any(p < 1 for p in self.periods):
            raise ConfigError("all lane periods must be >= 1 tick")


def build_generators(cfg: StimulusConfig, lanes: int, rng: random.Random,
                     line_fmt: str = "plain[{}]") -> list[LaneGenerator]:
    """Materialise the lane generators for a run; draws anything unspecified
    from the run's seeded generator so replays are identical."""
    if cfg.mode == "none":
        return []
    degree = max(cfg.taps)
    if cfg.lane_seeds is not None:
        if len(cfg.lane_seeds) != lanes:
            raise ConfigError(f"need {lanes} lane seeds, got {len(cfg.lane_seeds)}")
        seeds = list(cfg.lane_seeds)
    else:
        seeds = [rng.randrange(1, 1 << degree) for _ in range(lanes)]
    if cfg.mode == "uniform":
        periods = [cfg.period] * lanes
    else:
        if cfg.periods is not None:
            if len(cfg.periods) != lanes:
                raise ConfigError(f"need {lanes} lane periods, got {len(cfg.periods)}")
            periods = list(cfg.periods)
        else:
            grid = grid_periods()
            periods = [rng.choice(grid) for _ in range(lanes)]
    return [
        LaneGenerator(line=line_fmt.format(i), period=periods[i],
                      lfsr=lfsr_new(cfg.taps, seeds[i]))
        for i in range(lanes)
    ]


def word_update_schedule(cfg: StimulusConfig, lanes: int, rng: random.Random,
                         horizon_periods: int) -> list[bool]:
    """Whether each uniform-mode period produces a word flip.

    Used to place tamper windows on stretches where the generator emits a
    flip every period, so a window of k base periods spans exactly k pulses.
    Replays the same seeded draws as `build_generators`.
    """
    if cfg.mode != "uniform":
        raise ConfigError("pulse-aligned tamper placement needs uniform stimulus")
    gens = build_generators(cfg, lanes, rng)
    flips = []
    for _ in range(horizon_periods):
        changed = False
        for gen in gens:
            bit, gen.lfsr = lfsr_next(gen.lfsr, 1)
            if bit != gen.value:
                gen.value = bit
                changed = True
        flips.append(changed)
    return flips


def find_aligned_start(cfg: StimulusConfig, lanes: int, seed_rng_factory,
                       duration_periods: int, min_period: int) -> int:
    """First period index >= min_period opening a skip-free stretch of
    `duration_periods` flips; returns the index (start tick = index * period)."""
    horizon = min_period + duration_periods + 64
    while True:
        flips = word_update_schedule(cfg, lanes, seed_rng_factory(), horizon)
        # flips[i] covers the update at tick (i+1) * period
        for j in range(min_period, horizon - duration_periods + 1):
            window = flips[j - 1 : j - 1 + duration_periods]
            if all(window):
                return j
        horizon *= 2
        if horizon > 1 << 20:
            raise ConfigError("no skip-free stimulus stretch found")
