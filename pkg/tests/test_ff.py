import itertools
from math import gcd

import numpy as np
import pytest

from multauto.errors import DegreeTooLarge, DivisionByZero, FieldMismatch, InvalidParameter, NotCoprime, NotPrime
from multauto.ff import (
    FiniteField,
    euler_phi,
    factorize,
    ff_add,
    ff_inv,
    ff_mul,
    ff_neg,
    ff_pow,
    is_irreducible,
    make_field,
    multiplicative_order,
    primitive_element,
    prime_powers,
)

SMALL_FIELDS = [(p, n) for p, n in prime_powers(64)]


def brute_phi(m):
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def has_root(coeffs, p):
    return any(sum(c * x**i for i, c in enumerate(coeffs)) % p == 0 for x in range(p))


@pytest.fixture(scope="module")
def f8():
    return make_field(2, 3)


def test_prime_field_modulus():
    field = make_field(7, 1)
    assert field.q == 7
    assert field.modulus == (0, 1)


def test_gf8_modulus_matches_exhaustive_root_scan():
    # degree 3: irreducible iff no root; scan cubics in canonical index order
    cubics = [(c0, c1, c2, 1) for c2 in (0, 1) for c1 in (0, 1) for c0 in (0, 1)]
    cubics.sort(key=lambda c: c[0] + 2 * c[1] + 4 * c[2])
    first = next(c for c in cubics if not has_root(c, 2))
    assert first == (1, 1, 0, 1)
    assert make_field(2, 3).modulus == first


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (2, 4), (5, 2), (3, 3)])
def test_low_degree_irreducibility_agrees_with_root_scan(p, n):
    for tail in itertools.product(range(p), repeat=n):
        poly = tail + (1,)
        if n <= 3:
            assert is_irreducible(poly, p) == (not has_root(poly, p))


def test_not_prime():
    with pytest.raises(NotPrime):
        make_field(4, 1)
    with pytest.raises(NotPrime):
        make_field(1, 1)


def test_degree_too_large():
    with pytest.raises(DegreeTooLarge):
        make_field(2, 17)
    assert make_field(2, 16).q == 1 << 16


def test_bad_degree():
    with pytest.raises(InvalidParameter):
        make_field(3, 0)


def test_reducible_modulus_rejected():
    with pytest.raises(InvalidParameter):
        FiniteField(2, 2, (1, 0, 1))


def test_deterministic():
    assert make_field(3, 4).modulus == make_field(3, 4).modulus


def test_x_times_x_squared(f8):
    x = f8.element([0, 1, 0])
    x2 = f8.element([0, 0, 1])
    assert ff_mul(x, x2) == f8.element([1, 1, 0])


def test_inverse_of_zero(f8):
    with pytest.raises(DivisionByZero):
        ff_inv(f8.zero())


def test_field_mismatch(f8):
    other = make_field(3, 1)
    with pytest.raises(FieldMismatch):
        ff_add(f8.one(), other.one())


@pytest.mark.parametrize("p,n", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, n):
    field = make_field(p, n)
    elems = field.elements()
    one, zero = field.one(), field.zero()
    # product table through polynomial arithmetic; the index tables are checked against it
    table = {(a.index, b.index): ff_mul(a, b) for a in elems for b in elems}
    for a in elems:
        assert ff_mul(a, one) == a
        assert ff_add(a, zero) == a
        assert ff_add(a, ff_neg(a)) == zero
        if not a.is_zero():
            assert ff_mul(ff_inv(a), a) == one
        for b in elems:
            ab = table[a.index, b.index]
            assert ab == table[b.index, a.index]
            assert field.mul_index(a.index, b.index) == ab.index
            assert field.add_index(a.index, b.index) == ff_add(a, b).index
    step = max(1, len(elems) // 16)
    for a in elems[::step]:
        for b in elems:
            for c in elems[::step]:
                assert ff_mul(table[a.index, b.index], c) == ff_mul(a, table[b.index, c.index])
                assert ff_mul(a, ff_add(b, c)) == ff_add(table[a.index, b.index], table[a.index, c.index])
                assert ff_add(ff_add(a, b), c) == ff_add(a, ff_add(b, c))


def test_full_associativity_gf8(f8):
    elems = f8.elements()
    for a, b, c in itertools.product(elems, repeat=3):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_pow_negative(f8):
    x = f8.element(2)
    assert ff_pow(x, -1) == ff_inv(x)
    assert ff_pow(x, 7) == f8.one()


def test_element_json_roundtrip(f8):
    x = f8.element(5)
    assert f8.element(x.to_json()["coeffs"]) == x
    assert FiniteField.from_json(f8.to_json()) == f8


@pytest.mark.parametrize("m,expected", [(1, 1), (7, 6), (6, 2)])
def test_euler_phi_examples(m, expected):
    assert euler_phi(m) == expected == brute_phi(m)


def test_euler_phi_against_gcd_count():
    for m in range(1, 10_001):
        brute = int(np.count_nonzero(np.gcd(np.arange(1, m + 1), m) == 1))
        assert euler_phi(m) == brute, m


def test_factorize():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(1) == {}
    assert factorize(65521) == {65521: 1}


@pytest.mark.parametrize("a,m,expected", [(1, 5, 1), (1, 2, 1), (2, 7, 3), (2, 15, 4)])
def test_multiplicative_order_examples(a, m, expected):
    assert multiplicative_order(a, m) == expected


def test_multiplicative_order_divides_phi():
    for m in range(2, 300):
        phi = euler_phi(m)
        for a in range(1, m):
            if gcd(a, m) == 1:
                assert phi % multiplicative_order(a, m) == 0


def test_multiplicative_order_not_coprime():
    with pytest.raises(NotCoprime):
        multiplicative_order(2, 6)


def test_primitive_element_examples(f8):
    assert primitive_element(make_field(2, 1)) == make_field(2, 1).one()
    assert primitive_element(make_field(7, 1)).index == 3
    assert primitive_element(f8) == f8.element([0, 1, 0])


def test_primitive_element_is_first_generator():
    for p, n in SMALL_FIELDS:
        field = make_field(p, n)
        gen = primitive_element(field)
        powers = {ff_pow(gen, k).index for k in range(field.q - 1)}
        assert powers == set(range(1, field.q))
        for k in range(1, gen.index):
            cand = field.element(k)
            assert len({ff_pow(cand, j).index for j in range(field.q - 1)}) < field.q - 1
