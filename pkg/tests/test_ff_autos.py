from math import gcd

import pytest

from multauto.errors import FieldMismatch, MalformedTable, NotAUnit
from multauto.ff import euler_phi, ff_pow, make_field, prime_powers
from multauto.ff_autos import (
    PowerAutomorphism,
    apply,
    auto_table,
    compose,
    enumerate_mult_autos,
    frobenius_subgroup,
    invert,
    is_additive,
    is_multiplicative_automorphism,
    power_automorphism,
    power_table,
)


@pytest.fixture(scope="module")
def f7():
    return make_field(7, 1)


@pytest.fixture(scope="module")
def f8():
    return make_field(2, 3)


def test_power_automorphism_examples(f7):
    assert power_automorphism(f7, 5).exponent == 5
    assert power_automorphism(f7, 1).exponent == 1
    assert power_automorphism(f7, 11).exponent == 5
    assert power_automorphism(f7, -1).exponent == 5
    with pytest.raises(NotAUnit):
        power_automorphism(f7, 2)


def test_gf2_degenerate():
    f2 = make_field(2, 1)
    autos = enumerate_mult_autos(f2)
    assert [a.exponent for a in autos] == [1]
    assert power_automorphism(f2, 1).exponent == 1
    assert power_automorphism(f2, 0).exponent == 1
    assert [a.exponent for a in frobenius_subgroup(f2)] == [1]


def test_apply_examples(f7):
    five = power_automorphism(f7, 5)
    assert apply(five, f7.element(3)) == f7.element(5)
    assert apply(five, f7.zero()) == f7.zero()
    ident = power_automorphism(f7, 1)
    assert all(apply(ident, x) == x for x in f7.elements())


def test_apply_field_mismatch(f7, f8):
    with pytest.raises(FieldMismatch):
        apply(power_automorphism(f7, 5), f8.one())
    with pytest.raises(FieldMismatch):
        compose(power_automorphism(f7, 5), power_automorphism(f8, 3))


def test_compose_examples(f7, f8):
    assert compose(power_automorphism(f8, 2), power_automorphism(f8, 3)).exponent == 6
    f = power_automorphism(f8, 5)
    assert compose(f, power_automorphism(f8, 1)) == f
    assert compose(power_automorphism(f7, 5), power_automorphism(f7, 5)).exponent == 1


def test_invert_examples(f7, f8):
    assert invert(power_automorphism(f8, 1)).exponent == 1
    assert invert(power_automorphism(f8, 2)).exponent == 4
    assert invert(power_automorphism(f7, 5)).exponent == 5


def test_enumerate_examples(f7, f8):
    assert [a.exponent for a in enumerate_mult_autos(f7)] == [1, 5]
    assert [a.exponent for a in enumerate_mult_autos(f8)] == [1, 2, 3, 4, 5, 6]


def test_frobenius_examples(f7, f8):
    assert [a.exponent for a in frobenius_subgroup(f7)] == [1]
    assert [a.exponent for a in frobenius_subgroup(f8)] == [1, 2, 4]
    assert [a.exponent for a in frobenius_subgroup(make_field(2, 4))] == [1, 2, 4, 8]
    assert [a.exponent for a in frobenius_subgroup(make_field(3, 2))] == [1, 3]


def test_is_multiplicative_automorphism_examples(f7, f8):
    assert is_multiplicative_automorphism(f7, f7.elements())
    assert not is_multiplicative_automorphism(f7, power_table(f7, 2))
    assert is_multiplicative_automorphism(f8, power_table(f8, 3))


def test_rejects_maps_not_fixing_zero(f7):
    table = f7.elements()
    table[0], table[1] = table[1], table[0]
    assert not is_multiplicative_automorphism(f7, table)


def test_malformed_table(f7, f8):
    with pytest.raises(MalformedTable):
        is_multiplicative_automorphism(f7, f7.elements()[:-1])
    with pytest.raises(MalformedTable):
        is_multiplicative_automorphism(f8, f7.elements() + [f7.one()])


def test_constructor_normalization(f7):
    with pytest.raises(NotAUnit):
        PowerAutomorphism(3, f7)
    with pytest.raises(NotAUnit):
        PowerAutomorphism(11, f7)


def test_json_roundtrip(f8):
    a = power_automorphism(f8, 3)
    assert PowerAutomorphism.from_json(a.to_json()) == a


@pytest.mark.parametrize("p,n", prime_powers(256))
def test_group_axioms(p, n):
    field = make_field(p, n)
    autos = enumerate_mult_autos(field)
    ident = power_automorphism(field, 1)
    members = {a.exponent for a in autos}
    for f in autos:
        assert compose(f, invert(f)) == ident
        assert compose(invert(f), f) == ident
        assert compose(f, ident) == f == compose(ident, f)
    for f in autos[:8]:
        for g in autos:
            assert compose(f, g).exponent in members
            for h in autos[:8]:
                assert compose(compose(f, g), h) == compose(f, compose(g, h))


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2), (5, 1), (7, 1), (2, 4), (3, 3)])
def test_pointwise_composition(p, n):
    field = make_field(p, n)
    autos = enumerate_mult_autos(field)
    for f in autos:
        for g in autos:
            fg = compose(f, g)
            for x in field.elements():
                assert apply(fg, x) == apply(f, apply(g, x))


def test_apply_matches_repeated_multiplication(f8):
    # independent of square-and-multiply
    for f in enumerate_mult_autos(f8):
        for x in f8.elements()[1:]:
            acc = f8.one()
            for _ in range(f.exponent):
                acc = acc * x
            assert apply(f, x) == acc


@pytest.mark.parametrize("p,n", prime_powers(1024))
def test_counts(p, n):
    field = make_field(p, n)
    assert len(enumerate_mult_autos(field)) == euler_phi(field.q - 1)
    assert len(frobenius_subgroup(field)) == n


def test_frobenius_members_additive_others_not(f8):
    frob = {a.exponent for a in frobenius_subgroup(f8)}
    for a in enumerate_mult_autos(f8):
        assert is_additive(f8, auto_table(a)) == (a.exponent in frob)


def test_power_table_non_units_fail(f8):
    field = make_field(3, 2)
    for k in range(1, field.q):
        assert is_multiplicative_automorphism(field, power_table(field, k)) == (gcd(k, field.q - 1) == 1)
    assert power_table(f8, 3)[2] == ff_pow(f8.element(2), 3)
