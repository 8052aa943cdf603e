"""Key-controlled permutation routing.

A raw integer key below n! decodes through the factorial number system into
one of the n! lane permutations; exactly one key value reproduces the
designed wiring (functional mode) and every other key routes at least one
lane wrongly (obfuscated mode).  Lane counts are capped at 16 so every key
fits in 64 bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError

MAX_LANES = 16


@dataclass(frozen=True)
class Permutation:
    """mapping[i] is the output lane fed by input lane i."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ParameterError(f"not a bijection: {self.mapping}")

    @property
    def lanes(self) -> int:
        return len(self.mapping)

    def inverse(self) -> "Permutation":
        inv = [0] * self.lanes
        for i, o in enumerate(self.mapping):
            inv[o] = i
        return Permutation(tuple(inv))


def permutation_from_key(raw: int, n: int) -> Permutation:
    """Decode a raw key into a permutation via its Lehmer code."""
    if not 1 <= n <= MAX_LANES:
        raise ParameterError(f"lane count must be in 1..{MAX_LANES}, got {n}")
    if not 0 <= raw < math.factorial(n):
        raise ParameterError(f"key {raw} out of range for {n} lanes (max {math.factorial(n) - 1})")
    mapping = []
    pool = list(range(n))
    for k in range(n - 1, -1, -1):
        f = math.factorial(k)
        mapping.append(pool.pop(raw // f))
        raw %= f
    return Permutation(tuple(mapping))


def key_from_permutation(perm: Permutation) -> int:
    """Inverse of `permutation_from_key`, used by tests and reports."""
    pool = list(range(perm.lanes))
    raw = 0
    for k, out in zip(range(perm.lanes - 1, -1, -1), perm.mapping):
        raw += pool.index(out) * math.factorial(k)
        pool.remove(out)
    return raw


def permute_word(perm: Permutation, word: int, lanes: int | None = None) -> int:
    """Route word bit i to output bit mapping[i]."""
    n = perm.lanes
    if lanes is not None and lanes != n:
        raise ParameterError(f"word has {lanes} lanes, permutation has {n}")
    if not 0 <= word < (1 << n):
        raise ParameterError(f"word {word:#x} does not fit {n} lanes")
    out = 0
    for i, o in enumerate(perm.mapping):
        out |= ((word >> i) & 1) << o
    return out
