"""Power-up seed establishment between the two ends of a link.

Each power-up needs a fresh 160-bit seed that both endpoints split into the
cipher's 80-bit key and 80-bit IV.  Two schemes are provided:

* random-wrap: the sender draws a seed from an entropy source and ships it
  wrapped under textbook RSA (modular exponentiation, no padding - this is a
  protocol simulator, not a KMS).  Seeds wider than the modulus are split
  into chunks strictly smaller than it.
* self-update: both ends hold the same embedded first seed and step a shared
  deterministic update (the next seed is the first 160 keystream bits of the
  cipher keyed by the previous seed), comparing digests to confirm they
  agree.

Entropy is behind a small interface so simulations stay replayable.
"""

from __future__ import annotations

import hashlib
import random
import secrets
from dataclasses import dataclass

from .cipher import trivium_init, trivium_next
from .errors import ConfigError, IntegrityError, ParameterError, ProtocolError

SEED_BITS = 160
_SEED_MASK = (1 << SEED_BITS) - 1


@dataclass(frozen=True)
class Seed:
    """A 160-bit power-up seed and its power-up index."""

    value: int
    generation: int = 0

    def __post_init__(self):
        if not 0 <= self.value <= _SEED_MASK:
            raise ParameterError("seed must be a 160-bit value")

    def to_bytes(self) -> bytes:
        return self.value.to_bytes(SEED_BITS // 8, "big")

    @classmethod
    def from_bytes(cls, data: bytes, generation: int = 0) -> "Seed":
        if len(data) != SEED_BITS // 8:
            raise ParameterError(f"seed must be {SEED_BITS // 8} bytes")
        return cls(int.from_bytes(data, "big"), generation)


def split_seed(seed: Seed) -> tuple[bytes, bytes]:
    """Split into (key, iv): key is the low 80 bits, iv the high 80."""
    key = (seed.value & ((1 << 80) - 1)).to_bytes(10, "big")
    iv = (seed.value >> 80).to_bytes(10, "big")
    return key, iv


def join_seed(key: bytes, iv: bytes, generation: int = 0) -> Seed:
    if len(key) != 10 or len(iv) != 10:
        raise ParameterError("key and iv must be 10 bytes each")
    return Seed((int.from_bytes(iv, "big") << 80) | int.from_bytes(key, "big"), generation)


def seed_update(prev: Seed) -> Seed:
    """Derive the next power-up seed from the previous one.

    The updater is the link cipher keyed by the previous seed; the next seed
    is its first 160 keystream bits (earliest bit at the MSB).
    """
    key, iv = split_seed(prev)
    state = trivium_init(key, iv)
    value = 0
    for _ in range(SEED_BITS // 40):
        kp, state = trivium_next(state, 40)
        value = (value << 40) | kp.bits
    return Seed(value, prev.generation + 1)


def seed_chain(first: Seed, generations: int):
    """Yield the first seed and its successors up to `generations` updates."""
    seed = first
    yield seed
    for _ in range(generations):
        seed = seed_update(seed)
        yield seed


# ---------------------------------------------------------------------------
# Digest comparison
# ---------------------------------------------------------------------------

def seed_digest(seed: Seed, digest=hashlib.sha256) -> bytes:
    return digest(seed.to_bytes()).digest()


def seed_digest_check(local: Seed, remote_digest: bytes, digest=hashlib.sha256) -> bool:
    """True iff the local seed hashes to the received digest.

    A digest of the wrong length is a protocol error, not a mismatch.
    """
    mine = seed_digest(local, digest)
    if len(remote_digest) != len(mine):
        raise ProtocolError(
            f"digest length {len(remote_digest)} != expected {len(mine)}"
        )
    return mine == remote_digest


# ---------------------------------------------------------------------------
# Textbook RSA seed wrapping
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AsymKeyPair:
    modulus: int
    public_exponent: int
    private_exponent: int


def _miller_rabin(n: int, rng: random.Random, rounds: int = 40) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = pow(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def generate_keypair(bits: int = 512, rng_seed: int | None = None) -> AsymKeyPair:
    """Toy RSA key generation; deterministic when rng_seed is given."""
    if bits < 8:
        raise ConfigError("modulus must be at least 8 bits")
    rng = random.Random(rng_seed) if rng_seed is not None else random.SystemRandom()
    e = 65537 if bits >= 24 else 17

    def prime(nbits):
        while True:
            cand = rng.getrandbits(nbits) | (1 << (nbits - 1)) | 1
            if cand % e != 1 and _miller_rabin(cand, random.Random(cand)):
                return cand

    while True:
        p = prime(bits // 2)
        q = prime(bits - bits // 2)
        if p == q:
            continue
        phi = (p - 1) * (q - 1)
        try:
            d = pow(e, -1, phi)
        except ValueError:
            continue
        return AsymKeyPair(modulus=p * q, public_exponent=e, private_exponent=d)


def _chunk_bits(modulus: int) -> int:
    b = modulus.bit_length() - 1
    if b < 1:
        raise ConfigError(f"modulus {modulus} too small to carry any data")
    return min(b, SEED_BITS)


def seed_wrap(seed: Seed, modulus: int, public_exponent: int) -> list[int]:
    """Encrypt the seed under the public key, chunking below the modulus."""
    b = _chunk_bits(modulus)
    nchunks = -(-SEED_BITS // b)
    mask = (1 << b) - 1
    return [
        pow((seed.value >> (i * b)) & mask, public_exponent, modulus)
        for i in range(nchunks)
    ]


def seed_unwrap(chunks: list[int], modulus: int, private_exponent: int,
                generation: int = 0) -> Seed:
    """Decrypt wrapped chunks and reassemble the 160-bit seed."""
    b = _chunk_bits(modulus)
    value = 0
    for i, c in enumerate(chunks):
        m = pow(c, private_exponent, modulus)
        if m >> b:
            raise IntegrityError(f"chunk {i} decrypts outside its {b}-bit range")
        value |= m << (i * b)
    if value >> SEED_BITS:
        raise IntegrityError("reassembled seed exceeds 160 bits")
    return Seed(value, generation)


# ---------------------------------------------------------------------------
# Entropy sources
# ---------------------------------------------------------------------------

class DeterministicEntropy:
    """Seedable entropy source; default for reproducible simulations."""

    def __init__(self, seed: int):
        self._rng = random.Random(seed)

    def next_seed(self, generation: int = 0) -> Seed:
        return Seed(self._rng.getrandbits(SEED_BITS), generation)


class SystemEntropy:
    """OS-backed entropy source for non-replayed use."""

    def next_seed(self, generation: int = 0) -> Seed:
        return Seed(secrets.randbits(SEED_BITS), generation)


# ---------------------------------------------------------------------------
# Session establishment and chain export
# ---------------------------------------------------------------------------

def establish_random_wrap(entropy, keypair: AsymKeyPair, generation: int = 0):
    """Scheme (a): sender draws a seed, ships it RSA-wrapped.

    Returns (sender_view, receiver_view) of (key, iv); the receiver unwraps
    with the private key and both sides split identically.
    """
    seed = entropy.next_seed(generation)
    wrapped = seed_wrap(seed, keypair.modulus, keypair.public_exponent)
    received = seed_unwrap(wrapped, keypair.modulus, keypair.private_exponent, generation)
    return split_seed(seed), split_seed(received)


def establish_self_update(first: Seed, generation: int):
    """Scheme (b): both ends step the shared chain to `generation`.

    Returns ((key, iv), digest_ok).  A failed digest check halts the session
    by raising IntegrityError; recovery policy is the caller's.
    """
    sender = first
    receiver = first
    for _ in range(generation):
        sender = seed_update(sender)
        receiver = seed_update(receiver)
    if not seed_digest_check(receiver, seed_digest(sender)):
        raise IntegrityError("seed digests disagree after self-update")
    return split_seed(sender), True


def export_seed_chain(path, first: Seed, generations: int) -> None:
    """Write `generation seed-hex` lines for audit and replay."""
    with open(path, "w", encoding="ascii") as fh:
        for seed in seed_chain(first, generations):
            fh.write(f"{seed.generation} {seed.to_bytes().hex()}\n")


def load_seed_chain(path) -> list[Seed]:
    seeds = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            gen_str, hex_str = line.split()
            seeds.append(Seed.from_bytes(bytes.fromhex(hex_str), int(gen_str)))
    return seeds
