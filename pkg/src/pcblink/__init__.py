"""Library and simulator for tamper-protected inter-chip PCB links.

Plaintext lanes between two chips are XOR-encrypted with keystream drawn
from a Trivium instance (or a deliberately weak LFSR bank), keypads advance
in lockstep on a control clock derived from plaintext activity, and a
verification state machine on the receiving side counts tampering-induced
violations.  The simcore subpackage runs deterministic discrete-event
experiments over this protocol; the attacks module reproduces the standard
adversary flows against it.
"""

from .cipher import (
    GateCount,
    KeypadVector,
    LfsrState,
    TriviumState,
    gate_count_estimate,
    keystream_bytes,
    lfsr_new,
    lfsr_next,
    trivium_init,
    trivium_next,
)
from .clockctl import ClockVerifier, PulseGenerator, VerStatus
from .link import LinkEndpoint
from .obfusc import Permutation, permutation_from_key, permute_word

__all__ = [
    "GateCount",
    "KeypadVector",
    "LfsrState",
    "TriviumState",
    "gate_count_estimate",
    "keystream_bytes",
    "lfsr_new",
    "lfsr_next",
    "trivium_init",
    "trivium_next",
    "ClockVerifier",
    "PulseGenerator",
    "VerStatus",
    "LinkEndpoint",
    "Permutation",
    "permutation_from_key",
    "permute_word",
]

__version__ = "0.1.0"
