"""Multiplicative automorphisms of a finite field.

Every automorphism of the multiplicative group of GF(q) is a power map
``x -> x**k`` with ``k`` a unit modulo ``q - 1``; extending by ``0 -> 0`` gives
all multiplicative automorphisms of the field.  The field automorphisms are
the powers of the Frobenius map ``x -> x**p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import FieldMismatch, MalformedTable, NotAUnit
from .ff import FieldElement, FiniteField, euler_phi, ff_pow, mod_inverse, multiplicative_order


@dataclass(frozen=True)
class PowerAutomorphism:
    """The map x -> x**exponent, exponent a unit mod q-1 kept in [1, q-1]."""

    exponent: int
    field: FiniteField

    def __post_init__(self):
        m = self.field.q - 1
        if gcd(self.exponent, m) != 1:
            raise NotAUnit(f"{self.exponent} is not a unit modulo {m}")
        if not 1 <= self.exponent <= m:
            raise NotAUnit(f"exponent {self.exponent} not normalized into [1, {m}]")

    def __call__(self, x: FieldElement) -> FieldElement:
        return apply(self, x)

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "exponent": self.exponent}

    @classmethod
    def from_json(cls, doc: dict) -> PowerAutomorphism:
        return power_automorphism(FiniteField.from_json(doc["field"]), int(doc["exponent"]))


def _normalize(k: int, m: int) -> int:
    k %= m
    return m if k == 0 else k


def power_automorphism(field: FiniteField, alpha: int) -> PowerAutomorphism:
    m = field.q - 1
    if gcd(alpha, m) != 1:
        raise NotAUnit(f"{alpha} is not a unit modulo {m}")
    return PowerAutomorphism(_normalize(alpha, m), field)


def apply(auto: PowerAutomorphism, x: FieldElement) -> FieldElement:
    if x.field != auto.field:
        raise FieldMismatch(f"{x.field!r} vs {auto.field!r}")
    if x.is_zero():
        return x
    return ff_pow(x, auto.exponent)


def compose(f: PowerAutomorphism, g: PowerAutomorphism) -> PowerAutomorphism:
    """f after g."""
    if f.field != g.field:
        raise FieldMismatch(f"{f.field!r} vs {g.field!r}")
    m = f.field.q - 1
    return PowerAutomorphism(_normalize(f.exponent * g.exponent, m), f.field)


def invert(f: PowerAutomorphism) -> PowerAutomorphism:
    m = f.field.q - 1
    return PowerAutomorphism(_normalize(mod_inverse(f.exponent, m), m), f.field)


def enumerate_mult_autos(field: FiniteField) -> list[PowerAutomorphism]:
    m = field.q - 1
    autos = [PowerAutomorphism(k, field) for k in range(1, m + 1) if gcd(k, m) == 1]
    assert len(autos) == euler_phi(m)
    return autos


def frobenius_subgroup(field: FiniteField) -> list[PowerAutomorphism]:
    """Powers p**0, ..., p**(n-1) of the Frobenius exponent, by power index."""
    m = field.q - 1
    exps = [_normalize(pow(field.p, i, m) if m > 1 else 1, m) for i in range(field.n)]
    if field.n >= 2:
        assert multiplicative_order(field.p, m) == field.n
    return [PowerAutomorphism(k, field) for k in exps]


def _table_indices(field: FiniteField, table: Sequence[FieldElement]) -> list[int]:
    if len(table) != field.q:
        raise MalformedTable(f"table has {len(table)} entries, field has {field.q}")
    out = []
    for entry in table:
        if not isinstance(entry, FieldElement) or entry.field != field:
            raise MalformedTable(f"entry {entry!r} is not an element of {field!r}")
        out.append(entry.index)
    return out


def is_multiplicative_automorphism(field: FiniteField, table: Sequence[FieldElement]) -> bool:
    """Brute-force check of a map given as its images in canonical order.

    The map must fix 0, be a bijection and satisfy f(xy) = f(x) f(y) for
    every pair; the pair check is O(q^2).
    """
    img = _table_indices(field, table)
    if img[0] != 0 or len(set(img)) != field.q:
        return False
    mul = field.mul_index
    q = field.q
    for x in range(1, q):
        fx = img[x]
        for y in range(x, q):
            if img[mul(x, y)] != mul(fx, img[y]):
                return False
    return True


def is_additive(field: FiniteField, table: Sequence[FieldElement]) -> bool:
    """Exhaustive check of f(x + y) = f(x) + f(y)."""
    img = _table_indices(field, table)
    add = field.add_index
    q = field.q
    for x in range(q):
        for y in range(x, q):
            if img[add(x, y)] != add(img[x], img[y]):
                return False
    return True


def power_table(field: FiniteField, k: int) -> list[FieldElement]:
    """Images of x -> x**k (with 0 -> 0) for every element in canonical order."""
    return [x if x.is_zero() else ff_pow(x, k) for x in field.elements()]


def auto_table(auto: PowerAutomorphism) -> list[FieldElement]:
    return [apply(auto, x) for x in auto.field.elements()]
