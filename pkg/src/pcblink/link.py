"""Lane-wise XOR encryption endpoints.

A link endpoint owns a keystream source (Trivium, or a bank of per-lane
LFSRs for the deliberately weak variant) and the keypad currently in force.
Encryption and decryption are pure XORs against that keypad; the keypad only
moves when `advance_keypad` is called, which the simulator ties to
control-clock pulses so both ends of a link stay in lockstep.

Word bit i carries lane i.  Endpoints are single-owner state machines:
`advance_keypad` mutates, `encrypt`/`decrypt` do not.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cipher import LfsrState, TriviumState, lfsr_new, lfsr_next, trivium_init, trivium_next
from .errors import ParameterError

DEFAULT_LANES = 8


class _TriviumKeypad:
    """Keypad source drawing N fresh keystream bits per advance."""

    def __init__(self, state: TriviumState):
        self.state = state

    def next_word(self, lanes: int) -> int:
        kp, self.state = trivium_next(self.state, lanes)
        return kp.bits

    @property
    def position(self) -> int:
        return self.state.position


class _LfsrKeypad:
    """Keypad source stepping one LFSR per lane on each advance."""

    def __init__(self, lfsrs: list[LfsrState]):
        self.lfsrs = lfsrs
        self._steps = 0

    def next_word(self, lanes: int) -> int:
        word = 0
        for i in range(lanes):
            bit, self.lfsrs[i] = lfsr_next(self.lfsrs[i], 1)
            word |= bit << i
        self._steps += 1
        return word

    @property
    def position(self) -> int:
        return self._steps * len(self.lfsrs)


@dataclass
class LinkEndpoint:
    """One side of an encrypted link: cipher state plus the active keypad."""

    lanes: int
    source: object
    keypad: int = 0
    keypad_index: int = 0
    advances: int = 0
    _mask: int = field(init=False, repr=False)

    def __post_init__(self):
        if not 1 <= self.lanes <= 64:
            raise ParameterError(f"lane count must be in 1..64, got {self.lanes}")
        self._mask = (1 << self.lanes) - 1

    @classmethod
    def from_key_iv(cls, key: bytes, iv: bytes, lanes: int = DEFAULT_LANES) -> "LinkEndpoint":
        return cls(lanes=lanes, source=_TriviumKeypad(trivium_init(key, iv)))

    @classmethod
    def with_lfsr_bank(cls, taps, seeds, lanes: int = DEFAULT_LANES) -> "LinkEndpoint":
        if len(seeds) != lanes:
            raise ParameterError(f"need {lanes} lane seeds, got {len(seeds)}")
        return cls(lanes=lanes, source=_LfsrKeypad([lfsr_new(taps, s) for s in seeds]))

    def _check_word(self, word: int):
        if not 0 <= word <= self._mask:
            raise ParameterError(f"word {word:#x} does not fit {self.lanes} lanes")

    def advance_keypad(self) -> int:
        """Replace the keypad with the next N keystream bits."""
        self.keypad = self.source.next_word(self.lanes)
        self.keypad_index += self.lanes
        self.advances += 1
        return self.keypad

    def encrypt(self, word: int) -> int:
        self._check_word(word)
        return word ^ self.keypad

    def decrypt(self, word: int) -> int:
        self._check_word(word)
        return word ^ self.keypad
