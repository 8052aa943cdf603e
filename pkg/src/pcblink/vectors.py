"""Reader and checker for plain-text keystream vector files.

File format (see data/trivium_vectors.txt): blank-line separated blocks of
``name = hexvalue`` lines with fields ``key``, ``iv`` and ``stream``; ``#``
starts a comment.  The stream field may be any whole number of bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .cipher import keystream_bytes
from .errors import ParameterError

PACKAGED_VECTOR_FILE = "trivium_vectors.txt"


@dataclass(frozen=True)
class TestVector:
    key: bytes
    iv: bytes
    stream: bytes


@dataclass(frozen=True)
class VectorMismatch:
    vector_index: int
    bit_index: int  # first diverging keystream bit (0-based)


def packaged_vector_path() -> Path:
    return Path(resources.files("pcblink").joinpath("data", PACKAGED_VECTOR_FILE))


def parse_vector_file(path) -> list[TestVector]:
    vectors = []
    block: dict[str, bytes] = {}

    def flush():
        if not block:
            return
        missing = {"key", "iv", "stream"} - set(block)
        if missing:
            raise ParameterError(f"vector block missing fields: {sorted(missing)}")
        if len(block["key"]) != 10 or len(block["iv"]) != 10:
            raise ParameterError("key and iv must be 10 bytes each")
        vectors.append(TestVector(block["key"], block["iv"], block["stream"]))
        block.clear()

    with open(path, "r", encoding="ascii") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                flush()
                continue
            if "=" not in line:
                raise ParameterError(f"malformed vector line: {raw.strip()!r}")
            name, value = (part.strip() for part in line.split("=", 1))
            try:
                block[name.lower()] = bytes.fromhex(value)
            except ValueError as exc:
                raise ParameterError(f"bad hex in field {name!r}: {exc}") from exc
    flush()
    return vectors


def first_divergence(expected: bytes, actual: bytes) -> int | None:
    """Index of the first differing keystream bit, or None if equal.

    Bit numbering follows the byte packing: bit 8*i+j is bit j (LSB first)
    of byte i.
    """
    for i, (e, a) in enumerate(zip(expected, actual)):
        if e != a:
            return 8 * i + ((e ^ a) & -(e ^ a)).bit_length() - 1
    if len(expected) != len(actual):
        return 8 * min(len(expected), len(actual))
    return None


def check_vectors(vectors: list[TestVector]) -> list[VectorMismatch]:
    """Regenerate each vector's keystream and report any divergences."""
    failures = []
    for idx, vec in enumerate(vectors):
        actual = keystream_bytes(vec.key, vec.iv, len(vec.stream))
        bit = first_divergence(vec.stream, actual)
        if bit is not None:
            failures.append(VectorMismatch(vector_index=idx, bit_index=bit))
    return failures
