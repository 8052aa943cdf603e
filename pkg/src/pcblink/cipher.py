"""Bit-exact Trivium keystream generator, an LFSR reference cipher, and a
hardware cost model.

Trivium here is the canonical 288-bit cipher: an 80-bit key and an 80-bit IV
are loaded into three shift registers, the state is warmed up for 4 x 288
rounds with output discarded, and each subsequent round emits one keystream
bit.  The implementation is bit-parallel: the three registers are plain
Python integers and up to 64 keystream bits are produced per update, which is
sound because every tap sits at least 66 positions away from the bit a
feedback value is shifted into.

Byte conventions match the published test-vector corpus: key and IV bytes are
consumed last byte first, most significant bit first within each byte, and
keystream bytes are packed least significant bit first (`keystream_bytes`).
Inside a :class:`KeypadVector` the earliest generated bit occupies the most
significant position.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import log2

from .errors import ParameterError, StateError

STATE_BITS = 288
KEY_BITS = 80
IV_BITS = 80
WARMUP_ROUNDS = 4 * STATE_BITS
MAX_WIDTH = 64

_A_BITS, _B_BITS, _C_BITS = 93, 84, 111
_A_MASK = (1 << _A_BITS) - 1
_B_MASK = (1 << _B_BITS) - 1
_C_MASK = (1 << _C_BITS) - 1

# Byte with its bit order reversed, for the test-vector byte conventions.
_REV8 = bytes(int(f"{b:08b}"[::-1], 2) for b in range(256))


def _load_bits(data: bytes) -> int:
    """Map a key/IV byte string to an integer whose bit i is stream bit i+1."""
    v = 0
    for i, byte in enumerate(reversed(data)):
        v |= _REV8[byte] << (8 * i)
    return v


@dataclass(frozen=True)
class TriviumState:
    """Immutable 288-bit cipher state split into its three registers.

    Bit k of `a` is state bit k+1 (of 1..93), bit k of `b` is state bit
    94+k, bit k of `c` is state bit 178+k.  `position` counts keystream bits
    drawn since warm-up.
    """

    a: int
    b: int
    c: int
    warmed_up: bool = False
    position: int = 0

    def state_vector(self) -> tuple[int, ...]:
        """The state as bits s_1..s_288, mainly for tests and debugging."""
        bits = []
        for reg, width in ((self.a, _A_BITS), (self.b, _B_BITS), (self.c, _C_BITS)):
            bits.extend((reg >> k) & 1 for k in range(width))
        return tuple(bits)


@dataclass(frozen=True)
class KeypadVector:
    """An n-bit slice of keystream; the earliest bit sits at the MSB."""

    bits: int
    width: int
    index: int  # cumulative keystream bits consumed after this draw

    def bit(self, j: int) -> int:
        """The j-th generated bit of this vector, j = 0 .. width-1."""
        return (self.bits >> (self.width - 1 - j)) & 1


def trivium_init(key: bytes, iv: bytes) -> TriviumState:
    """Load key and IV and run the 1152 warm-up rounds.

    Raises ParameterError unless both inputs are exactly 10 bytes.
    """
    if len(key) != KEY_BITS // 8:
        raise ParameterError(f"key must be {KEY_BITS} bits, got {len(key) * 8}")
    if len(iv) != IV_BITS // 8:
        raise ParameterError(f"iv must be {IV_BITS} bits, got {len(iv) * 8}")
    state = TriviumState(a=_load_bits(key), b=_load_bits(iv), c=0b111 << (_C_BITS - 3))
    for _ in range(WARMUP_ROUNDS // MAX_WIDTH):
        _, state = _step(state, MAX_WIDTH)
    return replace(state, warmed_up=True, position=0)


def trivium_next(state: TriviumState, n: int) -> tuple[KeypadVector, TriviumState]:
    """Draw the next n keystream bits (1 <= n <= 64) and advance the state."""
    if not 1 <= n <= MAX_WIDTH:
        raise ParameterError(f"keystream width must be in 1..{MAX_WIDTH}, got {n}")
    if not state.warmed_up:
        raise StateError("keystream drawn before warm-up")
    z, new_state = _step(state, n)
    new_state = replace(new_state, position=state.position + n)
    return KeypadVector(bits=z, width=n, index=new_state.position), new_state


def _step(state: TriviumState, n: int) -> tuple[int, TriviumState]:
    """Advance n rounds at once; returns the n output bits, earliest at MSB.

    For a tap at state position p the window (reg >> (p_local - n)) & mask
    holds the values that tap takes over the next n rounds, because no tap is
    closer than 66 positions to a register head.
    """
    a, b, c = state.a, state.b, state.c
    mask = (1 << n) - 1

    a66 = (a >> (66 - n)) & mask
    a69 = (a >> (69 - n)) & mask
    a91 = (a >> (91 - n)) & mask
    a92 = (a >> (92 - n)) & mask
    a93 = (a >> (93 - n)) & mask
    b69 = (b >> (69 - n)) & mask   # s162
    b78 = (b >> (78 - n)) & mask   # s171
    b82 = (b >> (82 - n)) & mask   # s175
    b83 = (b >> (83 - n)) & mask   # s176
    b84 = (b >> (84 - n)) & mask   # s177
    c66 = (c >> (66 - n)) & mask   # s243
    c87 = (c >> (87 - n)) & mask   # s264
    c109 = (c >> (109 - n)) & mask  # s286
    c110 = (c >> (110 - n)) & mask  # s287
    c111 = (c >> (111 - n)) & mask  # s288

    z = a66 ^ a93 ^ b69 ^ b84 ^ c66 ^ c111
    new_a = c66 ^ c111 ^ (c109 & c110) ^ a69      # t3 feedback into register a
    new_b = a66 ^ a93 ^ (a91 & a92) ^ b78         # t1 feedback into register b
    new_c = b69 ^ b84 ^ (b82 & b83) ^ c87         # t2 feedback into register c

    return z, replace(
        state,
        a=((a << n) | new_a) & _A_MASK,
        b=((b << n) | new_b) & _B_MASK,
        c=((c << n) | new_c) & _C_MASK,
    )


def keystream_bytes(key: bytes, iv: bytes, nbytes: int) -> bytes:
    """Keystream in the byte convention of the test-vector corpus."""
    state = trivium_init(key, iv)
    out = bytearray()
    for _ in range(nbytes):
        kp, state = trivium_next(state, 8)
        out.append(_REV8[kp.bits])
    return bytes(out)


def state_space_log2() -> float:
    """log2 of the number of internal state labels (288 one-bit cells)."""
    return float(log2(2 ** STATE_BITS))


# ---------------------------------------------------------------------------
# LFSR reference cipher (the deliberately weak keystream source)
# ---------------------------------------------------------------------------

# Primitive feedback polynomials (taps as exponents) for common degrees.
# Maximality of the small degrees is verified exhaustively in the test suite.
LFSR_TAPS: dict[int, tuple[int, ...]] = {
    2: (2, 1),
    3: (3, 2),
    4: (4, 3),
    5: (5, 3),
    6: (6, 5),
    7: (7, 6),
    8: (8, 6, 5, 4),
    9: (9, 5),
    10: (10, 7),
    11: (11, 9),
    12: (12, 11, 10, 4),
    16: (16, 15, 13, 4),
    20: (20, 17),
    24: (24, 23, 22, 17),
}


@dataclass(frozen=True)
class LfsrState:
    """Fibonacci LFSR: bit 0 of `register` is the output end.

    `taps` are polynomial exponents; the degree is the highest tap.  Each
    step outputs the last register bit, feeds the XOR of the tap bits back in
    at the other end, and shifts.
    """

    register: int
    taps: frozenset[int]

    @property
    def degree(self) -> int:
        return max(self.taps)


def lfsr_new(taps, seed: int) -> LfsrState:
    taps = frozenset(taps)
    if not taps:
        raise ParameterError("tap set must not be empty")
    degree = max(taps)
    if degree < 2 or degree > 64:
        raise ParameterError(f"LFSR degree must be in 2..64, got {degree}")
    if min(taps) < 1:
        raise ParameterError("tap exponents must be >= 1")
    return LfsrState(register=seed & ((1 << degree) - 1), taps=taps)


def lfsr_next(state: LfsrState, n: int = 1) -> tuple[int, LfsrState]:
    """Step n times; returns the n output bits, earliest at MSB."""
    if n < 1:
        raise ParameterError("must draw at least one bit")
    d = state.degree
    tap_mask = 0
    for t in state.taps:
        tap_mask |= 1 << (d - t)
    r = state.register
    out = 0
    for _ in range(n):
        out = (out << 1) | (r & 1)
        fb = (r & tap_mask).bit_count() & 1
        r = (r >> 1) | (fb << (d - 1))
    return out, LfsrState(register=r, taps=state.taps)


# ---------------------------------------------------------------------------
# Hardware cost model
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GateCount:
    flip_flops: int
    and_gates: int
    xor_gates: int


def gate_count_estimate(n: int) -> GateCount:
    """Estimated gate counts of an n-bit-wide keystream implementation.

    Flip-flop count is the 288 state cells regardless of width; each extra
    output bit costs the 3 AND and 11 XOR gates of one unrolled round.
    """
    if not 1 <= n <= MAX_WIDTH:
        raise ParameterError(f"width must be in 1..{MAX_WIDTH}, got {n}")
    return GateCount(flip_flops=STATE_BITS, and_gates=3 * n, xor_gates=11 * n)
