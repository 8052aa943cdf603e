"""Control-clock generation and verification state machines.

The generator watches plaintext flipping events and emits a minimal-width
pulse whenever two consecutive flips are further apart than a glitch
threshold.  The verifier watches the channel side: every received clock flip
opens a short hold window that a following encrypted-data event must close,
and every data event must have a clock flip between itself and its
predecessor.  Either check failing is a tampering violation.

Both machines are single-owner and must be fed events in timestamp order
with clock flips delivered before data events that share a tick.  A data
event satisfies a pending hold only when it arrives strictly after the
latest clock flip, mirroring the encryption delay that separates a genuine
pulse from the data it causes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import ParameterError, StateError

DEFAULT_HOLD_WINDOW = 2
DEFAULT_THRESHOLD = 0


class VerStatus(enum.Enum):
    SAFE = "safe"
    TAMPERED = "tampered"


@dataclass(frozen=True)
class StatusEvent:
    """One verification verdict: `cause` is 'hold' or 'window'."""

    t: int
    status: VerStatus
    cause: str


@dataclass
class PulseGenerator:
    """Pulse on any plaintext flipping event whose spacing exceeds `thr`."""

    thr: int = DEFAULT_THRESHOLD
    t0: int = 0  # previous flipping instance
    t1: int = 0  # latest flipping instance

    def __post_init__(self):
        if self.thr < 0:
            raise ParameterError("threshold must be >= 0")

    def on_flip(self, t: int) -> bool:
        """Record a flipping event; True when a pulse is produced."""
        if t < self.t1:
            raise StateError(f"flip at {t} precedes latest flip {self.t1}")
        self.t0, self.t1 = self.t1, t
        return (self.t1 - self.t0) > self.thr


@dataclass
class ClockVerifier:
    """Receiver-side tamper check over clock and encrypted-data events."""

    hold_window: int = DEFAULT_HOLD_WINDOW
    t_clk: int = 0
    t0_data: int = 0
    t1_data: int = 0
    pending_hold: bool = False
    violations: int = 0
    log: list[StatusEvent] = field(default_factory=list)

    def __post_init__(self):
        if self.hold_window < 1:
            raise ParameterError("hold window must be >= 1")

    def _emit(self, t: int, status: VerStatus, cause: str) -> StatusEvent:
        ev = StatusEvent(t, status, cause)
        self.log.append(ev)
        if status is VerStatus.TAMPERED:
            self.violations += 1
        return ev

    def _expire(self, now: int) -> list[StatusEvent]:
        """Resolve a pending hold whose window has elapsed before `now`.

        The violation is attributed to the clock flip that went unanswered.
        """
        if self.pending_hold and now > self.t_clk + self.hold_window:
            self.pending_hold = False
            return [self._emit(self.t_clk, VerStatus.TAMPERED, "hold")]
        return []

    def on_clock_flip(self, t: int) -> list[StatusEvent]:
        """A control-clock flipping event arrived from the channel.

        A hold already pending just slides forward with the new flip; it is
        still a single unanswered-clock episode until the window runs out.
        """
        events = self._expire(t)
        if t < self.t_clk:
            raise StateError(f"clock flip at {t} precedes latest at {self.t_clk}")
        self.t_clk = t
        self.pending_hold = True
        return events

    def on_data_flip(self, t: int) -> list[StatusEvent]:
        """An encrypted-data flipping event arrived from the channel."""
        events = self._expire(t)
        if t < self.t1_data:
            raise StateError(f"data flip at {t} precedes latest at {self.t1_data}")
        if self.pending_hold and t > self.t_clk:
            self.pending_hold = False
            events.append(self._emit(t, VerStatus.SAFE, "hold"))
        self.t0_data, self.t1_data = self.t1_data, t
        if self.t0_data <= self.t_clk <= self.t1_data:
            events.append(self._emit(t, VerStatus.SAFE, "window"))
        else:
            events.append(self._emit(t, VerStatus.TAMPERED, "window"))
        return events

    def finish(self, horizon: int) -> list[StatusEvent]:
        """Flush a hold still pending when observation stops."""
        return self._expire(horizon)


def run_events(events, thr: int = DEFAULT_THRESHOLD,
               hold_window: int = DEFAULT_HOLD_WINDOW,
               horizon: int | None = None):
    """Drive a verifier (and generator) from a scripted event list.

    `events` is an iterable of (t, kind) with kind in {"clock", "data"};
    they are processed in time order, clock first on ties.  Returns the
    verifier, whose log carries every verdict.  Mainly a test and
    golden-scenario surface.
    """
    ver = ClockVerifier(hold_window=hold_window)
    order = {"clock": 0, "data": 1}
    script = sorted(events, key=lambda ev: (ev[0], order[ev[1]]))
    for t, kind in script:
        if kind == "clock":
            ver.on_clock_flip(t)
        elif kind == "data":
            ver.on_data_flip(t)
        else:
            raise ParameterError(f"unknown event kind {kind!r}")
    if horizon is None:
        horizon = (script[-1][0] if script else 0) + hold_window + 1
    ver.finish(horizon)
    return ver
