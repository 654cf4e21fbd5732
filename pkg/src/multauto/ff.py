"""Finite fields GF(p^n) in a polynomial basis, plus the small amount of
elementary number theory needed to enumerate their automorphisms.

Elements are residues of polynomials over Z/pZ modulo a fixed monic
irreducible polynomial.  Coefficient tuples are stored constant term first.
The canonical enumeration order of a field reads an integer ``k`` in
``[0, q)`` in base ``p`` with the constant term as the least significant digit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterator, Sequence

from .errors import (
    DegreeTooLarge,
    DivisionByZero,
    FieldMismatch,
    InvalidParameter,
    NotCoprime,
    NotPrime,
)

MAX_ORDER = 1 << 16


# ---------------------------------------------------------------------------
# integer helpers


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def factorize(m: int) -> dict[int, int]:
    """Prime factorization of ``m >= 1`` by trial division, as {prime: exponent}."""
    if m < 1:
        raise InvalidParameter(f"cannot factor {m}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def euler_phi(m: int) -> int:
    """Euler's totient via the product formula over the prime factors of m."""
    if m < 1:
        raise InvalidParameter(f"euler_phi needs m >= 1, got {m}")
    result = m
    for prime in factorize(m):
        result = result // prime * (prime - 1)
    return result


def multiplicative_order(a: int, m: int) -> int:
    """Least k >= 1 with a**k == 1 (mod m), by iterated multiplication."""
    if m < 2:
        raise InvalidParameter(f"modulus must be >= 2, got {m}")
    if gcd(a, m) != 1:
        raise NotCoprime(f"gcd({a}, {m}) != 1")
    a %= m
    k, acc = 1, a
    while acc != 1:
        acc = acc * a % m
        k += 1
    return k


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` by the extended Euclidean algorithm."""
    if m == 1:
        return 0
    old_r, r = a % m, m
    old_s, s = 1, 0
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
    if old_r != 1:
        raise NotCoprime(f"gcd({a}, {m}) != 1")
    return old_s % m


# ---------------------------------------------------------------------------
# polynomials over Z/pZ (tuples, constant term first, no trailing zeros)


def _trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by b over Z/pZ; b must have nonzero leading coefficient."""
    rem = _trim([c % p for c in a])
    db = len(b) - 1
    lead_inv = pow(b[-1], -1, p)
    while len(rem) - 1 >= db and rem:
        coef = rem[-1] * lead_inv % p
        shift = len(rem) - 1 - db
        for i, bc in enumerate(b):
            rem[shift + i] = (rem[shift + i] - coef * bc) % p
        _trim(rem)
    return rem


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    rem = _trim([c % p for c in a])
    db = len(b) - 1
    quot = [0] * max(len(rem) - db, 1)
    lead_inv = pow(b[-1], -1, p)
    while rem and len(rem) - 1 >= db:
        coef = rem[-1] * lead_inv % p
        shift = len(rem) - 1 - db
        quot[shift] = coef
        for i, bc in enumerate(b):
            rem[shift + i] = (rem[shift + i] - coef * bc) % p
        _trim(rem)
    return _trim(quot), rem


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ac in enumerate(a):
        if ac:
            for j, bc in enumerate(b):
                out[i + j] = (out[i + j] + ac * bc) % p
    return out


def _digits(k: int, p: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        k, r = divmod(k, p)
        out.append(r)
    return tuple(out)


def _monic_polys(p: int, degree: int) -> Iterator[tuple[int, ...]]:
    for k in range(p**degree):
        yield _digits(k, p, degree) + (1,)


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """True iff the monic polynomial has no monic factor of degree 1..deg//2."""
    n = len(modulus) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    for d in range(1, n // 2 + 1):
        for factor in _monic_polys(p, d):
            if not _poly_mod(modulus, factor, p):
                return False
    return True


# ---------------------------------------------------------------------------
# fields and elements


@dataclass(frozen=True)
class FiniteField:
    """The field of order ``p**n`` with a fixed monic irreducible modulus."""

    p: int
    n: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        if self.n < 1:
            raise InvalidParameter(f"extension degree must be >= 1, got {self.n}")
        if self.p**self.n > MAX_ORDER:
            raise DegreeTooLarge(f"{self.p}^{self.n} exceeds {MAX_ORDER}")
        mod = tuple(int(c) for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        if len(mod) != self.n + 1 or mod[-1] != 1 or any(not 0 <= c < self.p for c in mod):
            raise InvalidParameter(f"modulus {list(mod)} is not monic of degree {self.n} over Z/{self.p}")
        if not is_irreducible(mod, self.p):
            raise InvalidParameter(f"modulus {list(mod)} is reducible over Z/{self.p}")

    @property
    def q(self) -> int:
        return self.p**self.n

    def __repr__(self):
        return f"FiniteField(p={self.p}, n={self.n}, modulus={list(self.modulus)})"

    # element construction -------------------------------------------------

    def element(self, value: int | Sequence[int]) -> FieldElement:
        """Element from its canonical index or from a coefficient sequence."""
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise InvalidParameter(f"index {value} outside [0, {self.q})")
            return FieldElement(_digits(value, self.p, self.n), self)
        coeffs = tuple(int(c) for c in value)
        if len(coeffs) != self.n or any(not 0 <= c < self.p for c in coeffs):
            raise InvalidParameter(f"coefficients {list(coeffs)} invalid for {self!r}")
        return FieldElement(coeffs, self)

    def zero(self) -> FieldElement:
        return self.element(0)

    def one(self) -> FieldElement:
        return self.element(1)

    def elements(self) -> list[FieldElement]:
        """All q elements in canonical enumeration order."""
        return [self.element(k) for k in range(self.q)]

    # integer-index arithmetic for exhaustive checks -----------------------

    @cached_property
    def _log_tables(self) -> tuple[list[int], list[int]]:
        gen = primitive_element(self)
        order = self.q - 1
        exp = [0] * order
        log = [0] * self.q
        acc = self.one()
        for i in range(order):
            exp[i] = acc.index
            log[acc.index] = i
            acc = ff_mul(acc, gen)
        return exp, log

    def mul_index(self, i: int, j: int) -> int:
        """Product of the elements with canonical indices i and j, as an index."""
        if i == 0 or j == 0:
            return 0
        exp, log = self._log_tables
        return exp[(log[i] + log[j]) % (self.q - 1)]

    def add_index(self, i: int, j: int) -> int:
        p = self.p
        out, scale = 0, 1
        for _ in range(self.n):
            out += ((i % p + j % p) % p) * scale
            i //= p
            j //= p
            scale *= p
        return out

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, doc: dict) -> FiniteField:
        return cls(int(doc["p"]), int(doc["n"]), tuple(doc["modulus"]))


@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple[int, ...]
    field: FiniteField

    @property
    def index(self) -> int:
        """Position in the canonical enumeration order."""
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.field.p + c
        return k

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        return ff_add(self, other)

    def __sub__(self, other):
        return ff_add(self, ff_neg(other))

    def __neg__(self):
        return ff_neg(self)

    def __mul__(self, other):
        return ff_mul(self, other)

    def __truediv__(self, other):
        return ff_mul(self, ff_inv(other))

    def __pow__(self, k: int):
        return ff_pow(self, k)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 and i else f"{c}" if i == 0 else f"{c}*{mono}")
        return " + ".join(reversed(terms)) or "0"

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}


def _check_same(a: FieldElement, b: FieldElement) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")


def ff_add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    p = a.field.p
    return FieldElement(tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)), a.field)


def ff_neg(a: FieldElement) -> FieldElement:
    p = a.field.p
    return FieldElement(tuple(-x % p for x in a.coeffs), a.field)


def ff_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    field = a.field
    rem = _poly_mod(_poly_mul(a.coeffs, b.coeffs, field.p), field.modulus, field.p)
    return FieldElement(tuple(rem) + (0,) * (field.n - len(rem)), field)


def ff_inv(a: FieldElement) -> FieldElement:
    """Inverse via the extended Euclidean algorithm on polynomials."""
    if a.is_zero():
        raise DivisionByZero("0 has no multiplicative inverse")
    field = a.field
    p = field.p
    old_r, r = _trim(list(a.coeffs)), list(field.modulus)
    old_s, s = [1], []
    while r:
        quot, rem = _poly_divmod(old_r, r, p)
        old_r, r = r, rem
        qs = _poly_mul(quot, s, p)
        width = max(len(old_s), len(qs))
        new_s = _trim([((old_s[i] if i < len(old_s) else 0) - (qs[i] if i < len(qs) else 0)) % p
                       for i in range(width)])
        old_s, s = s, new_s
    # old_r is a nonzero constant since the modulus is irreducible
    scale = pow(old_r[0], -1, p)
    inv = _poly_mod([c * scale for c in old_s], field.modulus, p)
    return FieldElement(tuple(inv) + (0,) * (field.n - len(inv)), field)


def ff_pow(a: FieldElement, k: int) -> FieldElement:
    """a**k by square-and-multiply; negative k goes through the inverse."""
    if k < 0:
        return ff_pow(ff_inv(a), -k)
    result = a.field.one()
    base = a
    while k:
        if k & 1:
            result = ff_mul(result, base)
        base = ff_mul(base, base)
        k >>= 1
    return result


def make_field(p: int, n: int) -> FiniteField:
    """GF(p^n) whose modulus is the first monic irreducible of degree n.

    Candidates are scanned in the canonical enumeration order of their
    non-leading coefficients, so the choice is reproducible.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise InvalidParameter(f"extension degree must be >= 1, got {n}")
    if p**n > MAX_ORDER:
        raise DegreeTooLarge(f"{p}^{n} exceeds {MAX_ORDER}")
    for modulus in _monic_polys(p, n):
        if is_irreducible(modulus, p):
            return FiniteField(p, n, modulus)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def element_order(a: FieldElement) -> int:
    """Multiplicative order of a nonzero field element."""
    if a.is_zero():
        raise DivisionByZero("0 has no multiplicative order")
    order = a.field.q - 1
    one = a.field.one()
    for prime in factorize(order) if order > 1 else {}:
        while order % prime == 0 and ff_pow(a, order // prime) == one:
            order //= prime
    return order


def primitive_element(field: FiniteField) -> FieldElement:
    """First element in canonical order generating the multiplicative group."""
    target = field.q - 1
    for k in range(1, field.q):
        candidate = field.element(k)
        if element_order(candidate) == target:
            return candidate
    raise AssertionError("unreachable: the multiplicative group is cyclic")


def prime_powers(limit: int) -> list[tuple[int, int]]:
    """All (p, n) with p prime and p**n <= limit, sorted by p**n."""
    out = []
    for p in range(2, limit + 1):
        if is_prime(p):
            q, n = p, 1
            while q <= limit:
                out.append((p, n))
                q *= p
                n += 1
    return sorted(out, key=lambda pn: pn[0] ** pn[1])
