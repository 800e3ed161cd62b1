"""Reference belief-propagation decoder over the polar factor graph.

Graph layout (the convention every synthesized CRN must match):

* Columns 0..n of N rows each; column n holds the channel probabilities,
  column 0 the source-side messages.  Source-bit index u attaches at graph
  row ``bit_reverse(u - 1, n)`` (0-based).
* Stage i (1-based, connecting columns i-1 and i) partitions the rows into
  blocks of ``N >> (i - 1)``.  Inside a block, butterfly j couples the
  adjacent left pair (2j, 2j+1) with the split right pair (j, j + half).
* One iteration = full left pass (stage n down to 1) then full right pass
  (stages 1..n-1; column n right messages are never computed).

Internal messages start at probability 0; the channel column and the
source-side priors (0.5 informational / 0 frozen) are never overwritten.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from polarcrn.codes import CodeConfig
from polarcrn.kernels import f_prob, g_prob, hard_decision


def stage_butterflies(block_length: int, stage: int):
    """Yield (left_top, left_bottom, right_top, right_bottom) 0-based rows for a stage."""
    block = block_length >> (stage - 1)
    half = block // 2
    for start in range(0, block_length, block):
        for j in range(half):
            yield start + 2 * j, start + 2 * j + 1, start + j, start + j + half


@dataclass
class MessageGrid:
    """Left/right message planes, shape (n_stages + 1, N), probability domain."""

    left: np.ndarray
    right: np.ndarray

    def left_at(self, stage: int, row: int) -> float:
        """1-based accessor: stage 1..n+1, row 1..N."""
        return float(self.left[stage - 1, row - 1])

    def right_at(self, stage: int, row: int) -> float:
        return float(self.right[stage - 1, row - 1])

    def copy(self) -> "MessageGrid":
        return MessageGrid(self.left.copy(), self.right.copy())


def bp_init(config: CodeConfig, channel_probs) -> MessageGrid:
    """Build the initial grid: channel column, source priors, zeroed internals."""
    n = config.n_stages
    N = config.block_length
    probs = np.asarray(channel_probs, dtype=float)
    if probs.shape != (N,):
        raise ValueError(f"expected {N} channel probabilities, got shape {probs.shape}")
    if np.any(probs < 0.0) or np.any(probs > 1.0):
        raise ValueError("channel probabilities must lie in [0, 1]")
    left = np.zeros((n + 1, N))
    right = np.zeros((n + 1, N))
    left[n] = probs
    for u in range(1, N + 1):
        if u in config.info_set:
            right[0, config.graph_row(u) - 1] = 0.5
    return MessageGrid(left, right)


@dataclass
class BpResult:
    """Per-iteration snapshots plus the final hard decisions.

    ``output_rows[t]`` is the source-side left column after iteration t+1's
    left pass, permuted into source-bit order (index u-1 holds bit u).
    """

    snapshots: list[MessageGrid]
    output_rows: np.ndarray
    decisions: np.ndarray


def _left_pass(grid: MessageGrid, block_length: int, n_stages: int) -> None:
    L, R = grid.left, grid.right
    for i in range(n_stages, 0, -1):
        for lt, lb, rt, rb in stage_butterflies(block_length, i):
            a = L[i, rt]
            b = L[i, rb]
            L[i - 1, lt] = f_prob(a, g_prob(b, R[i - 1, lb]))
            L[i - 1, lb] = g_prob(f_prob(R[i - 1, lt], a), b)


def _right_pass(grid: MessageGrid, block_length: int, n_stages: int) -> None:
    L, R = grid.left, grid.right
    for i in range(1, n_stages):
        for lt, lb, rt, rb in stage_butterflies(block_length, i):
            a = L[i, rt]
            b = L[i, rb]
            R[i, rt] = f_prob(R[i - 1, lt], g_prob(b, R[i - 1, lb]))
            R[i, rb] = g_prob(f_prob(R[i - 1, lt], a), R[i - 1, lb])


def bp_run(config: CodeConfig, channel_probs, iterations: int) -> BpResult:
    """Run iterative BP decoding; deterministic for identical inputs.

    Each iteration performs the left pass then the right pass; the source-side
    column is recorded right after the left pass (it is untouched by the right
    pass).  Decisions threshold the final recorded column, frozen bits forced
    to 0.
    """
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")
    N = config.block_length
    n = config.n_stages
    grid = bp_init(config, channel_probs)
    snapshots: list[MessageGrid] = []
    rows = np.zeros((iterations, N))
    for t in range(iterations):
        _left_pass(grid, N, n)
        rows[t] = [grid.left[0, config.graph_row(u) - 1] for u in range(1, N + 1)]
        _right_pass(grid, N, n)
        snapshots.append(grid.copy())
    decisions = np.array(
        [hard_decision(rows[-1][u - 1], frozen=config.is_frozen(u)) for u in range(1, N + 1)],
        dtype=int,
    )
    return BpResult(snapshots, rows, decisions)
