import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sdcyclic.exceptions import DegreeMismatch, DivisionByZero, ReducibleModulus, SpecMismatch
from sdcyclic.gf2m import (
    FieldElement,
    clmul,
    field_add,
    field_inv,
    field_mul,
    field_new,
    is_irreducible,
    smallest_irreducible,
)


def _has_root_in_f2(poly):
    return any(sum(((poly >> i) & 1) * (x**i) for i in range(poly.bit_length())) % 2 == 0 for x in (0, 1))


def _brute_irreducible(poly):
    # product of every pair of lower-degree polynomials
    deg = poly.bit_length() - 1
    for da in range(1, deg):
        for a in range(1 << da, 1 << (da + 1)):
            for b in range(1 << (deg - da), 1 << (deg - da + 1)):
                if clmul(a, b) == poly:
                    return False
    return True


def test_field_new_small():
    assert field_new(1, 0b11).order == 2
    assert field_new(2, 0b111).order == 4
    F8 = field_new(3, 0b1011)
    # cubic over F_2 is irreducible iff it has no root
    assert not _has_root_in_f2(0b1011)
    assert F8.modulus == 0b1011


@pytest.mark.parametrize("poly", range(0b100, 1 << 8))
def test_irreducibility_matches_factor_search(poly):
    assert is_irreducible(poly) == _brute_irreducible(poly)


def test_default_moduli_are_lexicographically_smallest():
    assert [smallest_irreducible(m) for m in range(1, 9)] == [
        0b11, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011, 0b10000011, 0x11B,
    ]
    for m in range(2, 9):
        p = smallest_irreducible(m)
        assert not any(is_irreducible(c) for c in range((1 << m) | 1, p, 2))


@pytest.mark.parametrize(
    "m, modulus, err",
    [
        (2, 0b101, ReducibleModulus),  # (x+1)^2
        (3, 0b1111, ReducibleModulus),
        (2, 0b110, ReducibleModulus),
        (3, 0b111, DegreeMismatch),
        (0, 0b1, DegreeMismatch),
        (17, (1 << 17) | 0b1001, DegreeMismatch),
    ],
)
def test_field_new_rejects(m, modulus, err):
    with pytest.raises(err):
        field_new(m, modulus)


def test_f4_tables_by_hand(F4):
    g = F4.generator
    one = F4.one
    assert g.bits == 0b10
    assert field_add(g, one).bits == 0b11
    assert field_mul(g, g) == g + one  # x^2 = x + 1
    assert field_inv(g) == g + one
    assert field_mul(g, g + one) == one
    a = F4.element(3)
    assert field_add(a, a) == F4.zero
    assert field_add(a, F4.zero) == a
    assert field_mul(a, one) == a


def test_inverse_of_zero(F4):
    with pytest.raises(DivisionByZero):
        field_inv(F4.zero)
    with pytest.raises(ZeroDivisionError):
        F4.inv(0)


def test_spec_mismatch():
    a = field_new(2).one
    b = field_new(3).one
    with pytest.raises(SpecMismatch):
        a + b
    with pytest.raises(SpecMismatch):
        a * b


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_field_axioms_exhaustive(m):
    F = field_new(m)
    q = F.order
    els = range(q)
    for a, b in itertools.product(els, els):
        assert F.mul(a, b) == F.mul(b, a)
        # Frobenius
        assert F.mul(a ^ b, a ^ b) == F.mul(a, a) ^ F.mul(b, b)
    for a, b, c in itertools.product(els, els, els):
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)
    for a in range(1, q):
        assert F.mul(F.inv(a), a) == 1
    # the multiplicative group is cyclic of order q - 1
    assert sorted(F.antilog(i) for i in range(q - 1)) == list(range(1, q))


@pytest.mark.parametrize("m", [5, 8, 9, 12, 16])
def test_field_axioms_randomised(m):
    F = field_new(m)

    @given(*(st.integers(0, F.order - 1),) * 3)
    def check(a, b, c):
        assert F.mul(a, b) == F.mul(b, a)
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)
        assert F.mul(a ^ b, a ^ b) == F.mul(a, a) ^ F.mul(b, b)
        if a:
            assert F.mul(F.inv(a), a) == 1

    check()


@pytest.mark.parametrize("m", [3, 8, 11])
def test_vector_kernels_match_scalar(m):
    F = field_new(m)
    rng = np.random.default_rng(7)
    a = rng.integers(0, F.order, 200)
    b = rng.integers(0, F.order, 200)
    assert F.mul_array(a, b).tolist() == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
    nz = a[a > 0]
    assert F.inv_array(nz).tolist() == [F.inv(int(x)) for x in nz]


def test_table_and_clmul_paths_agree():
    F = field_new(8)
    assert F.has_tables
    from sdcyclic.gf2m import polymod

    for a, b in [(0x57, 0x83), (0xFF, 0xFF), (1, 0x80)]:
        assert F.mul(a, b) == polymod(clmul(a, b), F.modulus)
    # AES field: 0x57 * 0x83 = 0xc1
    assert F.mul(0x57, 0x83) == 0xC1
    assert field_new(9).has_tables is False


def test_element_boxing(F8):
    a = F8.element(5)
    assert isinstance(a, FieldElement)
    assert a ** (F8.order - 1) == F8.one
    assert a / a == F8.one
    assert a ** -1 == a.inverse()
    with pytest.raises(ValueError):
        F8.element(8)
