"""Continuous additive automorphisms and the bridge to the multiplicative side.

Continuous automorphisms of (R, +) are ``x -> alpha x``; those of (C, +) are
the invertible R-linear maps ``x + iy -> alpha x + beta y``.  The ones that
map the lattice ``2 pi i Z`` onto itself are ``b + ai -> alpha b + eta a i``,
and conjugating them by the principal logarithm and ``exp`` yields exactly
the continuous multiplicative automorphisms of C.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .complex_autos import ComplexAuto, eval_complex
from .errors import InvalidBasis, InvalidParameter, LogOfZero

TWO_PI = 2.0 * math.pi
LATTICE_TOL = 1e-9


@dataclass(frozen=True)
class RealAdditiveAuto:
    alpha: float

    def __post_init__(self):
        alpha = float(self.alpha)
        if not math.isfinite(alpha) or alpha == 0.0:
            raise InvalidParameter(f"alpha must be finite and nonzero, got {alpha}")
        object.__setattr__(self, "alpha", alpha)

    def __call__(self, x: float) -> float:
        return eval_real_additive(self, x)


@dataclass(frozen=True)
class ComplexAdditiveAuto:
    """x + iy -> alpha x + beta y, an invertible R-linear map of the plane."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        alpha, beta = complex(self.alpha), complex(self.beta)
        if not all(map(math.isfinite, (alpha.real, alpha.imag, beta.real, beta.imag))):
            raise InvalidParameter("alpha and beta must be finite")
        if self.det(alpha, beta) == 0.0:
            raise InvalidBasis(f"beta = {beta} is a real multiple of alpha = {alpha}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @staticmethod
    def det(alpha: complex, beta: complex) -> float:
        return alpha.real * beta.imag - alpha.imag * beta.real

    def __call__(self, z: complex) -> complex:
        return eval_complex_additive(self, z)


@dataclass(frozen=True)
class LatticeFixingAdditiveAuto:
    """b + ai -> alpha b + eta a i, with Re(alpha) != 0 and eta = +1 or -1."""

    eta: int
    alpha: complex

    def __post_init__(self):
        alpha = complex(self.alpha)
        if self.eta not in (1, -1):
            raise InvalidParameter(f"eta must be +1 or -1, got {self.eta!r}")
        if not (math.isfinite(alpha.real) and math.isfinite(alpha.imag)):
            raise InvalidParameter("alpha must be finite")
        if alpha.real == 0.0:
            raise InvalidParameter(f"Re(alpha) must be nonzero, got {alpha}")
        object.__setattr__(self, "eta", int(self.eta))
        object.__setattr__(self, "alpha", alpha)

    def __call__(self, z: complex) -> complex:
        return eval_lattice_fixing(self, z)

    def as_linear(self) -> ComplexAdditiveAuto:
        return ComplexAdditiveAuto(self.alpha, complex(0.0, self.eta))

    def to_json(self) -> dict:
        return {
            "kind": "additive-lattice",
            "eta": self.eta,
            "alpha_re": self.alpha.real,
            "alpha_im": self.alpha.imag,
        }

    @classmethod
    def from_json(cls, doc: dict) -> LatticeFixingAdditiveAuto:
        return cls(int(doc["eta"]), complex(float(doc["alpha_re"]), float(doc["alpha_im"])))


def eval_real_additive(f: RealAdditiveAuto, x: float) -> float:
    return f.alpha * x


def eval_complex_additive(f: ComplexAdditiveAuto, z: complex) -> complex:
    z = complex(z)
    return f.alpha * z.real + f.beta * z.imag


def eval_lattice_fixing(f: LatticeFixingAdditiveAuto, z: complex) -> complex:
    z = complex(z)
    return complex(0.0, f.eta * z.imag) + f.alpha * z.real


def compose_additive(f: ComplexAdditiveAuto, g: ComplexAdditiveAuto) -> ComplexAdditiveAuto:
    """f after g, read off from the images of 1 and i."""
    return ComplexAdditiveAuto(eval_complex_additive(f, eval_complex_additive(g, 1)),
                               eval_complex_additive(f, eval_complex_additive(g, 1j)))


def compose_lattice_fixing(f: LatticeFixingAdditiveAuto,
                           g: LatticeFixingAdditiveAuto) -> LatticeFixingAdditiveAuto:
    """f after g; eta comes from the image of i, alpha from the image of 1."""
    image_one = f(g(1.0))
    image_i = f(g(1j))
    if image_i.real != 0.0 or abs(image_i.imag) != 1.0:
        raise AssertionError(f"composite sends i to {image_i}, not to +-i")
    return LatticeFixingAdditiveAuto(int(image_i.imag), image_one)


def principal_log(z: complex) -> complex:
    """ln|z| + i arg(z) with arg taken in (-pi, pi]."""
    z = complex(z)
    if z == 0:
        raise LogOfZero("log(0) is undefined")
    w = cmath.log(z)
    if w.imag == -math.pi:
        # -pi only appears for negative reals carrying a signed -0.0 imaginary part
        w = complex(w.real, math.pi)
    return w


def to_multiplicative(f: LatticeFixingAdditiveAuto) -> ComplexAuto:
    """The multiplicative automorphism exp o f o L."""
    return ComplexAuto(f.alpha.real, f.alpha.imag, f.eta)


def from_multiplicative(g: ComplexAuto) -> LatticeFixingAdditiveAuto:
    return LatticeFixingAdditiveAuto(g.u, g.alpha)


def bridge_eval(f: LatticeFixingAdditiveAuto, z: complex) -> complex:
    """exp(f(L(z))), with 0 sent to 0; the oracle path for eval_complex."""
    z = complex(z)
    if z == 0:
        return 0j
    return cmath.exp(eval_lattice_fixing(f, principal_log(z)))


def bridge_discrepancy(f: LatticeFixingAdditiveAuto, z: complex) -> float:
    """Relative distance between the exp-path and the polar-form evaluation."""
    lhs = bridge_eval(f, z)
    rhs = eval_complex(to_multiplicative(f), z)
    return abs(lhs - rhs) / max(abs(rhs), 1e-300)


def fixes_lattice(f: ComplexAdditiveAuto | LatticeFixingAdditiveAuto, k_max: int = 16) -> bool:
    """Windowed check that f maps 2 pi i Z onto itself.

    Each image of ``2 pi i k``, ``|k| <= k_max``, must lie within 1e-9 of a
    lattice point ``2 pi i m``, and ``k -> m`` must be a bijection of the
    window ``[-k_max, k_max]`` onto itself.
    """
    if k_max < 1:
        raise InvalidParameter(f"k_max must be >= 1, got {k_max}")
    if isinstance(f, LatticeFixingAdditiveAuto):
        f = f.as_linear()
    indices = []
    for k in range(-k_max, k_max + 1):
        image = eval_complex_additive(f, complex(0.0, TWO_PI * k))
        m = round(image.imag / TWO_PI)
        if abs(image - complex(0.0, TWO_PI * m)) > LATTICE_TOL:
            return False
        indices.append(m)
    return sorted(indices) == list(range(-k_max, k_max + 1))
