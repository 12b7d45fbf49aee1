import itertools

import pytest

from ternions.galois import (
    NonPrimeModulus,
    ZeroInverse,
    field_add,
    field_inv,
    field_mul,
    field_new,
)


def test_gf2_one_plus_one():
    f = field_new(2)
    assert field_add(f, 1, 1) == 0


def test_gf3_two_squared_and_inverse():
    f = field_new(3)
    assert field_mul(f, 2, 2) == 1
    assert field_inv(f, 2) == 2


def test_gf5_inverse_of_three():
    assert field_inv(field_new(5), 3) == 2


@pytest.mark.parametrize("q", [0, 1, 4, 6, 8, 9, 25, -3])
def test_non_prime_rejected(q):
    with pytest.raises(NonPrimeModulus):
        field_new(q)


def test_zero_inverse():
    with pytest.raises(ZeroInverse):
        field_inv(field_new(5), 0)


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_field_axioms_exhaustive(q):
    f = field_new(q)
    els = range(q)
    for a in els:
        assert f.add(a, 0) == a and f.mul(a, 1) == a and f.mul(a, 0) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
            assert f.inv(f.inv(a)) == a
    for a, b in itertools.product(els, repeat=2):
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert 0 <= f.add(a, b) < q and 0 <= f.mul(a, b) < q
    for a, b, c in itertools.product(els, repeat=3):
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_tables_are_read_only():
    f = field_new(3)
    with pytest.raises(ValueError):
        f.add_table[0, 0] = 1
