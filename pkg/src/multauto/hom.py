"""Parsing of automorphism JSON documents and the sampled homomorphism report."""

from __future__ import annotations

import json
import math
from typing import Any

from .additive import ComplexAdditiveAuto, LatticeFixingAdditiveAuto
from .complex_autos import ComplexAuto, eval_complex
from .errors import AutomorphismError, MalformedSpec
from .ff_autos import PowerAutomorphism, apply
from .real import RealAuto, eval_real
from .sampling import LCG64

Auto = RealAuto | ComplexAuto | PowerAutomorphism | LatticeFixingAdditiveAuto | ComplexAdditiveAuto


def parse_spec(doc: str | dict, default_kind: str | None = None) -> Auto:
    """Build an automorphism from its JSON document (text or already decoded).

    The ``kind`` key selects the family; when absent it is inferred from the
    keys present, or taken from ``default_kind``.
    """
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MalformedSpec(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MalformedSpec(f"expected a JSON object, got {type(doc).__name__}")
    kind = doc.get("kind", default_kind)
    if kind is None:
        if "field" in doc:
            kind = "ff"
        elif "re_alpha" in doc:
            kind = "complex"
        elif "eta" in doc:
            kind = "additive-lattice"
        elif "beta_re" in doc:
            kind = "additive"
        elif "alpha" in doc:
            kind = "real"
    try:
        if kind == "real":
            return RealAuto(_number(doc["alpha"]))
        if kind == "complex":
            return ComplexAuto(_number(doc["re_alpha"]), _number(doc["im_alpha"]), _sign(doc["conj"]))
        if kind == "ff":
            return PowerAutomorphism.from_json(doc)
        if kind == "additive-lattice":
            return LatticeFixingAdditiveAuto(_sign(doc["eta"]),
                                             complex(_number(doc["alpha_re"]), _number(doc["alpha_im"])))
        if kind == "additive":
            return ComplexAdditiveAuto(complex(_number(doc["alpha_re"]), _number(doc["alpha_im"])),
                                       complex(_number(doc["beta_re"]), _number(doc["beta_im"])))
    except KeyError as exc:
        raise MalformedSpec(f"missing key {exc.args[0]!r} for kind {kind!r}") from None
    except (AutomorphismError, TypeError, ValueError) as exc:
        raise MalformedSpec(f"{type(exc).__name__}: {exc}") from None
    raise MalformedSpec(f"unknown automorphism kind {kind!r}")


def _number(value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MalformedSpec(f"expected a number, got {value!r}")
    return float(value)


def _sign(value: Any) -> int:
    if isinstance(value, bool) or value not in (1, -1):
        raise MalformedSpec(f"expected +1 or -1, got {value!r}")
    return int(value)


def _rel(lhs: complex, rhs: complex) -> float:
    diff = abs(lhs - rhs)
    if diff == 0:
        return 0.0
    return diff / max(abs(lhs), abs(rhs), math.ulp(0.0))


def check_hom(spec: str | dict | Auto, samples: int = 1000, seed: int = 0) -> dict:
    """Sampled multiplicativity report for a real, complex or finite-field automorphism.

    Sampling distribution, drawn from ``LCG64(seed)``:

    * real: x, y uniform in [-1000, 1000];
    * complex: z, w with log10|.| uniform in [-3, 3] and argument uniform;
    * finite field: element indices uniform in [0, q).

    The report holds the largest relative deviation of f(zw) from f(z) f(w)
    (exact 0/1 mismatch for finite fields) and the fixed-point checks.
    """
    f = spec if isinstance(spec, (RealAuto, ComplexAuto, PowerAutomorphism)) else parse_spec(spec)
    if not isinstance(f, (RealAuto, ComplexAuto, PowerAutomorphism)):
        raise MalformedSpec(f"check-hom needs a multiplicative automorphism, got {type(f).__name__}")
    if samples < 0:
        raise MalformedSpec(f"samples must be >= 0, got {samples}")
    rng = LCG64(seed)
    worst = 0.0
    fixed: dict[str, bool] = {}

    if isinstance(f, RealAuto):
        for _ in range(samples):
            x, y = rng.uniform(-1e3, 1e3), rng.uniform(-1e3, 1e3)
            worst = max(worst, _rel(eval_real(f, x * y), eval_real(f, x) * eval_real(f, y)))
        fixed = {
            "f(0)=0": eval_real(f, 0.0) == 0.0,
            "f(1)=1": eval_real(f, 1.0) == 1.0,
            "f(-1)=-1": eval_real(f, -1.0) == -1.0,
        }
        kind = "real"
    elif isinstance(f, ComplexAuto):
        for _ in range(samples):
            z, w = rng.complex_log_uniform(), rng.complex_log_uniform()
            worst = max(worst, _rel(eval_complex(f, z * w), eval_complex(f, z) * eval_complex(f, w)))
        fi, fmi = eval_complex(f, 1j), eval_complex(f, -1j)
        fixed = {
            "f(0)=0": eval_complex(f, 0) == 0,
            "f(1)=1": eval_complex(f, 1) == 1,
            "f(-1)=-1": eval_complex(f, -1) == -1,
            "f(i) in {i,-i}": fi in (1j, -1j),
            "f(-i)=-f(i)": fmi == -fi,
        }
        kind = "complex"
    else:
        field = f.field
        for _ in range(samples):
            x = field.element(rng.randint(0, field.q - 1))
            y = field.element(rng.randint(0, field.q - 1))
            if apply(f, x * y) != apply(f, x) * apply(f, y):
                worst = 1.0
        zero, one = field.zero(), field.one()
        fixed = {
            "f(0)=0": apply(f, zero) == zero,
            "f(1)=1": apply(f, one) == one,
            "f(-1)=-1": apply(f, -one) == -one,
        }
        kind = "ff"
    return {
        "kind": kind,
        "samples": samples,
        "seed": seed,
        "max_rel_deviation": worst,
        "fixed_points": fixed,
        "ok": all(fixed.values()),
    }
