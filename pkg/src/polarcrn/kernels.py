"""Probability-domain decoding kernels and their likelihood-ratio twins.

The probability domain treats every message as P(bit = 1).  The two core
kernels are the soft-XOR ``f_prob`` and the normalized product ``g_prob``
(with a flipped variant for partial sum 1).  The likelihood-ratio forms
``f_lr``/``g_lr`` are retained as cross-domain oracles: under the bijection
P = 1/(1 + LR) they compute the same update.
"""

from __future__ import annotations

import math


class DegenerateInputError(ValueError):
    """Normalized product of a (0,1)-style pair: numerator and complement both vanish."""


def _check_prob(value: float, name: str) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value}")


def prob_from_lr(lr: float) -> float:
    """Map a likelihood ratio to a probability via e^lr / (1 + e^lr).

    ``math.inf`` maps to 1.0 (the frozen-bit prior); negative ratios are a
    domain error.
    """
    if math.isnan(lr) or lr < 0.0:
        raise ValueError(f"likelihood ratio must be >= 0, got {lr}")
    if math.isinf(lr):
        return 1.0
    # exp(-lr) keeps the evaluation finite for large ratios
    return 1.0 / (1.0 + math.exp(-lr))


def f_prob(px: float, py: float) -> float:
    """Soft XOR: probability that exactly one of two independent bits is 1."""
    _check_prob(px, "px")
    _check_prob(py, "py")
    return px * (1.0 - py) + (1.0 - px) * py


def g_prob(px: float, py: float) -> float:
    """Normalized product: P(both 1) / (P(both 1) + P(both 0))."""
    _check_prob(px, "px")
    _check_prob(py, "py")
    num = px * py
    den = num + (1.0 - px) * (1.0 - py)
    if den == 0.0:
        raise DegenerateInputError(f"g undefined for (px, py) = ({px}, {py})")
    return num / den


def g_prob_usum(px: float, py: float, usum: int) -> float:
    """Normalized product with the first argument flipped when the partial sum is 1."""
    if usum not in (0, 1):
        raise ValueError(f"partial sum must be 0 or 1, got {usum}")
    if usum:
        px = 1.0 - px
    return g_prob(px, py)


def f_lr(x: float, y: float) -> float:
    """Likelihood-ratio check update (1 + xy) / (x + y)."""
    if x < 0.0 or y < 0.0:
        raise ValueError(f"likelihood ratios must be >= 0, got ({x}, {y})")
    if math.isinf(x):
        return y
    if math.isinf(y):
        return x
    if x + y == 0.0:
        raise ZeroDivisionError("f_lr singular: x + y = 0")
    return (1.0 + x * y) / (x + y)


def g_lr(x: float, y: float, usum: int = 0) -> float:
    """Likelihood-ratio feedback update x^(1 - 2*usum) * y."""
    if usum not in (0, 1):
        raise ValueError(f"partial sum must be 0 or 1, got {usum}")
    if x < 0.0 or y < 0.0:
        raise ValueError(f"likelihood ratios must be >= 0, got ({x}, {y})")
    if usum:
        if x == 0.0:
            raise ZeroDivisionError("g_lr singular: x = 0 with partial sum 1")
        return y / x
    return x * y


def hard_decision(p: float, frozen: bool = False) -> int:
    """Threshold a P(bit = 1) readout; frozen positions are always 0, ties decide 0."""
    if frozen:
        return 0
    return 1 if p > 0.5 else 0
