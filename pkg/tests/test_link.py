"""Link endpoint tests: XOR involution, keypad lockstep, desynchronisation
behaviour and the no-plaintext-on-the-wire monobit check."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcblink.cipher import LFSR_TAPS
from pcblink.errors import ParameterError
from pcblink.link import LinkEndpoint

KEY = bytes.fromhex("0053A6F94C9FF24598EB")
IV = bytes.fromhex("0D74DB42A91077DE45AC")


def endpoint(lanes=8):
    return LinkEndpoint.from_key_iv(KEY, IV, lanes=lanes)


class TestXorArray:
    def test_zero_plaintext_yields_keypad(self):
        ep = endpoint()
        ep.keypad = 0xA5
        assert ep.encrypt(0x00) == 0xA5

    def test_plaintext_equal_keypad_cancels(self):
        ep = endpoint()
        ep.keypad = 0xA5
        assert ep.encrypt(0xA5) == 0x00

    def test_involution_exhaustive_8_lanes(self):
        ep = endpoint()
        ep.advance_keypad()
        for word in range(256):
            assert ep.decrypt(ep.encrypt(word)) == word

    @settings(max_examples=50, deadline=None)
    @given(word=st.integers(0, 2**32 - 1), pad=st.integers(0, 2**32 - 1))
    def test_involution_randomized_32_lanes(self, word, pad):
        ep = endpoint(lanes=32)
        ep.keypad = pad
        assert ep.decrypt(ep.encrypt(word)) == word

    def test_lane_mismatch_rejected(self):
        ep = endpoint(lanes=8)
        with pytest.raises(ParameterError):
            ep.encrypt(0x100)
        with pytest.raises(ParameterError):
            ep.decrypt(-1)


class TestKeypadLockstep:
    def test_equal_seeds_advance_equally(self):
        tx, rx = endpoint(), endpoint()
        for _ in range(200):
            assert tx.advance_keypad() == rx.advance_keypad()

    def test_offset_advances_differ(self):
        # At 64 lanes an offset keypad never collides in practice; at 8 lanes
        # collisions happen at the expected 2^-8 rate.
        tx, rx = endpoint(lanes=64), endpoint(lanes=64)
        rx.advance_keypad()  # receiver one step ahead
        diffs = sum(tx.advance_keypad() != rx.advance_keypad() for _ in range(1000))
        assert diffs == 1000
        tx8, rx8 = endpoint(), endpoint()
        rx8.advance_keypad()
        diffs8 = sum(tx8.advance_keypad() != rx8.advance_keypad() for _ in range(2000))
        assert abs(diffs8 / 2000 - (1 - 2**-8)) < 0.01

    def test_keypad_index_arithmetic(self):
        ep = endpoint()
        for k in range(1, 50):
            ep.advance_keypad()
            assert ep.keypad_index == k * ep.lanes

    def test_round_trip_over_synchronized_endpoints(self):
        tx, rx = endpoint(), endpoint()
        rng = random.Random(7)
        mismatches = 0
        for _ in range(10_000):
            tx.advance_keypad(), rx.advance_keypad()
            word = rng.getrandbits(8)
            if rx.decrypt(tx.encrypt(word)) != word:
                mismatches += 1
        assert mismatches == 0

    def test_skipped_receiver_advance_mismatch_rate(self):
        """After the receiver misses one advance, words mismatch with
        probability about 1 - 2^-N."""
        tx, rx = endpoint(), endpoint()
        rng = random.Random(11)
        skip_done = False
        mismatches = trials = 0
        for i in range(4000):
            tx.advance_keypad()
            if i == 100 and not skip_done:
                skip_done = True  # receiver misses exactly this advance
            else:
                rx.advance_keypad()
            if i > 100:
                word = rng.getrandbits(8)
                trials += 1
                mismatches += rx.decrypt(tx.encrypt(word)) != word
        rate = mismatches / trials
        assert abs(rate - (1 - 2**-8)) < 0.02


class TestLfsrKeypadVariant:
    def test_bank_lockstep(self):
        seeds = list(range(1, 9))
        tx = LinkEndpoint.with_lfsr_bank(LFSR_TAPS[16], seeds, lanes=8)
        rx = LinkEndpoint.with_lfsr_bank(LFSR_TAPS[16], seeds, lanes=8)
        for _ in range(500):
            assert tx.advance_keypad() == rx.advance_keypad()

    def test_lane_bit_comes_from_lane_lfsr(self):
        from pcblink.cipher import lfsr_new, lfsr_next

        seeds = [3, 5, 7, 9]
        ep = LinkEndpoint.with_lfsr_bank(LFSR_TAPS[8], seeds, lanes=4)
        singles = [lfsr_new(LFSR_TAPS[8], s) for s in seeds]
        for _ in range(50):
            pad = ep.advance_keypad()
            for lane in range(4):
                bit, singles[lane] = lfsr_next(singles[lane], 1)
                assert (pad >> lane) & 1 == bit

    def test_seed_count_must_match_lanes(self):
        with pytest.raises(ParameterError):
            LinkEndpoint.with_lfsr_bank(LFSR_TAPS[8], [1, 2, 3], lanes=8)


def ones_fraction_per_lane(words, lanes):
    counts = [0] * lanes
    for w in words:
        for i in range(lanes):
            counts[i] += (w >> i) & 1
    return [c / len(words) for c in counts]


class TestNoPlaintextOnWire:
    def test_constant_plaintext_ciphertext_monobit(self):
        """Ciphertext of a constant stream looks like fair coin flips."""
        ep = endpoint()
        words = []
        for _ in range(100_000 // 8 * 8):
            ep.advance_keypad()
            words.append(ep.encrypt(0xFF))
        for frac in ones_fraction_per_lane(words, 8):
            assert abs(frac - 0.5) < 0.02

    def test_disabled_advance_degenerates(self):
        ep = endpoint()
        ep.advance_keypad()
        words = [ep.encrypt(0xFF) for _ in range(1000)]
        for frac in ones_fraction_per_lane(words, 8):
            assert frac in (0.0, 1.0)
