"""Continuous multiplicative automorphisms of the real line.

They form the one-parameter family ``eps_alpha`` with ``alpha`` a nonzero real:
``x -> x**alpha`` on the positive reals, extended oddly to the negatives and
by ``0 -> 0``.  Composition multiplies parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameter, ZeroExponent


@dataclass(frozen=True)
class RealAuto:
    alpha: float

    def __post_init__(self):
        alpha = float(self.alpha)
        if not math.isfinite(alpha):
            raise InvalidParameter(f"alpha must be finite, got {alpha}")
        if alpha == 0.0:
            raise ZeroExponent("alpha = 0 does not give an automorphism")
        object.__setattr__(self, "alpha", alpha)

    def __call__(self, x: float) -> float:
        return eval_real(self, x)

    def to_json(self) -> dict:
        return {"kind": "real", "alpha": self.alpha}

    @classmethod
    def from_json(cls, doc: dict) -> RealAuto:
        return cls(float(doc["alpha"]))


def _pos_power(x: float, alpha: float) -> float:
    # libm pow is exact on exact cases (3**2, 4**0.5) where exp(alpha*ln x) is not;
    # IEEE overflow gives inf rather than an exception
    try:
        return x**alpha
    except OverflowError:
        return math.inf


def eval_real(f: RealAuto, x: float) -> float:
    if x > 0:
        if x == 1.0:
            return 1.0
        return _pos_power(x, f.alpha)
    if x < 0:
        if x == -1.0:
            return -1.0
        return -_pos_power(-x, f.alpha)
    return 0.0


def compose_real(f: RealAuto, g: RealAuto) -> RealAuto:
    """f after g."""
    return RealAuto(f.alpha * g.alpha)


def invert_real(f: RealAuto) -> RealAuto:
    return RealAuto(1.0 / f.alpha)


def extend_from_positive(alpha: float) -> RealAuto:
    """The unique automorphism of (R, *) restricting to x -> x**alpha on R_{>0}."""
    if alpha == 0:
        raise ZeroExponent("alpha = 0 does not give an automorphism")
    return RealAuto(alpha)


def preserves_rationals(f: RealAuto) -> bool:
    return f.alpha in (1.0, -1.0)
