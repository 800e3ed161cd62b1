"""Polar code configuration and index conventions."""

from __future__ import annotations

from dataclasses import dataclass, field


def bit_reverse(value: int, width: int) -> int:
    """Reverse the lowest ``width`` bits of ``value``."""
    out = 0
    for _ in range(width):
        out = (out << 1) | (value & 1)
        value >>= 1
    return out


@dataclass(frozen=True)
class CodeConfig:
    """A polar code instance: block length N plus the information set.

    ``info_set`` holds 1-based source-bit indices; every other index is a
    frozen bit pinned to 0.  N must be a power of two (N = 1 is allowed for
    the degenerate single-decision code).

    On the decoding factor graph, source-bit index ``u`` attaches to graph
    row ``bit_reverse(u - 1, n_stages) + 1``; channel inputs attach in
    natural row order.
    """

    block_length: int
    info_set: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        n = self.block_length
        if n < 1 or (n & (n - 1)) != 0:
            raise ValueError(f"block length must be a power of two, got {n}")
        object.__setattr__(self, "info_set", frozenset(self.info_set))
        bad = [j for j in self.info_set if not 1 <= j <= n]
        if bad:
            raise ValueError(f"info_set indices out of range 1..{n}: {sorted(bad)}")

    @classmethod
    def all_info(cls, block_length: int) -> "CodeConfig":
        """Code with every position informational (no frozen bits)."""
        return cls(block_length, frozenset(range(1, block_length + 1)))

    @property
    def n_stages(self) -> int:
        return self.block_length.bit_length() - 1

    @property
    def frozen_set(self) -> frozenset[int]:
        return frozenset(range(1, self.block_length + 1)) - self.info_set

    @property
    def k_info(self) -> int:
        return len(self.info_set)

    def is_frozen(self, u_index: int) -> bool:
        return u_index not in self.info_set

    def graph_row(self, u_index: int) -> int:
        """1-based factor-graph row where source bit ``u_index`` attaches."""
        return bit_reverse(u_index - 1, self.n_stages) + 1
