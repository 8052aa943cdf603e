"""Scenario wiring: which chips, hops and named lines a simulation has."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConfigError
from ..obfusc import MAX_LANES

SCENARIOS = ("direct", "obfus_partial", "obfus_full")


@dataclass(frozen=True)
class Topology:
    """Sender-to-receiver wiring.

    direct:        chip1 --enc--> chip2 (verifier in chip2)
    obfus_partial: chip1 --enc--> chip3 (verifier, permute) --plain--> chip2
    obfus_full:    chip1 --enc--> chip3 (verifier, permute, re-encrypt)
                   --enc--> chip2 (second verifier)
    """

    scenario: str = "direct"
    lanes: int = 8
    permutation_key: int = 0

    def __post_init__(self):
        if self.scenario not in SCENARIOS:
            raise ConfigError(f"unknown scenario {self.scenario!r}")
        if not 1 <= self.lanes <= MAX_LANES:
            raise ConfigError(f"lanes must be in 1..{MAX_LANES}, got {self.lanes}")
        if self.permutation_key < 0:
            raise ConfigError("permutation key must be >= 0")
        if self.scenario == "direct" and self.permutation_key:
            raise ConfigError("direct topology has no permutation block")

    @property
    def hop_count(self) -> int:
        return 2 if self.scenario == "obfus_full" else 1

    @property
    def has_permutation(self) -> bool:
        return self.scenario in ("obfus_partial", "obfus_full")

    def enc_lines(self, hop: int = 0) -> list[str]:
        fmt = "enc[{}]" if hop == 0 else "enc2[{}]"
        return [fmt.format(i) for i in range(self.lanes)]

    def clk_line(self, hop: int = 0) -> str:
        return "clk_ctrl" if hop == 0 else "clk_ctrl2"

    def channel_lines(self) -> list[str]:
        """Lines a tamper injector may touch: encrypted buses and clocks."""
        lines = self.enc_lines(0) + [self.clk_line(0)]
        if self.scenario == "obfus_full":
            lines += self.enc_lines(1) + [self.clk_line(1)]
        return lines
