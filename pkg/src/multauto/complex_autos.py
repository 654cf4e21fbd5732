"""Continuous multiplicative automorphisms of the complex numbers.

An automorphism is stored as the triple ``(a, b, u)``: ``alpha = a + ib`` with
``a != 0`` and a sign ``u``.  For ``z = r s`` in polar form it sends ``z`` to
``r**alpha * s`` when ``u = +1`` and to ``r**alpha * conj(s)`` when ``u = -1``.

Composition corresponds to the law

    (a, b, u) * (c, d, v) = (a c, c b + u d, u v)

on ``R* x R x {+1, -1}``, which is what ``star_compose`` computes.  The
triples with ``a == 1`` form a normal subgroup (the maps ``z -> z s(z)`` with
``|s(z)| = 1``) and every triple factors uniquely as such a map composed with a
pure modulus scaling ``(a, 0, +1)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParameter


class ComponentTag(enum.Enum):
    PosDirect = "PosDirect"
    NegDirect = "NegDirect"
    PosConjugate = "PosConjugate"
    NegConjugate = "NegConjugate"


def _coerce(x) -> Fraction | float:
    """Keep ints and Fractions exact; anything else becomes a float.

    Exact parameters make the group law exact (1/3 stays 1/3), which doubles
    cannot give for the inverse law.  Adding 0.0 folds -0.0 into 0.0 so JSON
    output stays canonical.
    """
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Fraction(x)
    return float(x) + 0.0


@dataclass(frozen=True)
class ComplexAuto:
    """Parameters (a, b, u) of z = r s -> r**(a+ib) s, or r**(a+ib) conj(s) when u = -1."""

    a: float
    b: float
    u: int = 1

    def __post_init__(self):
        a, b = _coerce(self.a), _coerce(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise InvalidParameter(f"alpha = {a} + {b}i must be finite")
        if a == 0.0:
            raise InvalidParameter("Re(alpha) must be nonzero")
        if self.u not in (1, -1):
            raise InvalidParameter(f"u must be +1 or -1, got {self.u!r}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "u", int(self.u))

    @classmethod
    def from_alpha(cls, alpha: complex, u: int = 1) -> ComplexAuto:
        alpha = complex(alpha)
        return cls(alpha.real, alpha.imag, u)

    @property
    def alpha(self) -> complex:
        return complex(float(self.a), float(self.b))

    @property
    def triple(self) -> tuple[Fraction | float, Fraction | float, int]:
        return (self.a, self.b, self.u)

    def __call__(self, z: complex) -> complex:
        return eval_complex(self, z)

    def __matmul__(self, other: ComplexAuto) -> ComplexAuto:
        return star_compose(self, other)

    def to_json(self) -> dict:
        return {"kind": "complex", "re_alpha": float(self.a), "im_alpha": float(self.b), "conj": self.u}

    @classmethod
    def from_json(cls, doc: dict) -> ComplexAuto:
        return cls(float(doc["re_alpha"]), float(doc["im_alpha"]), int(doc["conj"]))


def identity_auto() -> ComplexAuto:
    return ComplexAuto(1, 0, 1)


def conjugation_auto() -> ComplexAuto:
    """Complex conjugation, the automorphism (1, 0, -1)."""
    return ComplexAuto(1, 0, -1)


def star_compose(f: ComplexAuto, g: ComplexAuto) -> ComplexAuto:
    """Parameters of f after g."""
    a, b, u = f.a, f.b, f.u
    c, d, v = g.a, g.b, g.u
    return ComplexAuto(a * c, c * b + u * d, u * v)


def invert_auto(f: ComplexAuto) -> ComplexAuto:
    return ComplexAuto(1 / f.a, -f.u * f.b / f.a, f.u)


def eval_complex(f: ComplexAuto, z: complex) -> complex:
    z = complex(z)
    if z == 0:
        return 0j
    if f.a == 1 and f.b == 0:
        # r * (z / r) is not exactly z in floating point
        return z if f.u == 1 else z.conjugate()
    r = abs(z)
    s = z / r
    if f.u == -1:
        s = s.conjugate()
    log_r = math.log(r)
    if log_r == 0.0:
        return s
    # r**alpha = r**a * exp(i b ln r)
    try:
        modulus = r ** float(f.a)
    except OverflowError:
        modulus = math.inf
    if f.b == 0:
        return modulus * s
    phase = float(f.b) * log_r
    r_alpha = complex(modulus * math.cos(phase), modulus * math.sin(phase))
    return r_alpha * s


def component_of(f: ComplexAuto) -> ComponentTag:
    if f.u == 1:
        return ComponentTag.PosDirect if f.a > 0 else ComponentTag.NegDirect
    return ComponentTag.PosConjugate if f.a > 0 else ComponentTag.NegConjugate


def center() -> list[ComplexAuto]:
    return [ComplexAuto(1, 0, 1), ComplexAuto(-1, 0, -1)]


def semidirect_factor(f: ComplexAuto) -> tuple[ComplexAuto, ComplexAuto]:
    """Split f as (1, b/a, u) after (a, 0, +1); the split is unique."""
    return ComplexAuto(1, f.b / f.a, f.u), ComplexAuto(f.a, 0, 1)


def is_rotation_like(f: ComplexAuto) -> bool:
    return f.a == 1


def commutes_with_conjugation(f: ComplexAuto) -> bool:
    return f.b == 0


def is_increasing_on_reals(f: ComplexAuto) -> bool:
    # conjugation fixes R, so u plays no role
    return f.b == 0 and f.a > 0


def quotient_compose(alpha_f: tuple[float, float], alpha_g: tuple[float, float]) -> tuple[float, float]:
    """Group law on C minus iR, i.e. automorphisms modulo conjugation."""
    a, b = alpha_f
    c, d = alpha_g
    if a == 0 or c == 0:
        raise InvalidParameter("Re(alpha) must be nonzero")
    return (a * c, c * b + d)


def quotient_inverse(alpha: tuple[float, float]) -> tuple[float, float]:
    a, b = alpha
    if a == 0:
        raise InvalidParameter("Re(alpha) must be nonzero")
    return (1 / a, -b / a)


def composition_table(autos: list[ComplexAuto]) -> list[list[ComplexAuto]]:
    """Row i, column j holds autos[i] after autos[j]."""
    return [[star_compose(f, g) for g in autos] for f in autos]
