import pytest
from hypothesis import given

from rmghw import gf
from rmghw.errors import DegreeTooLarge, DivisionByZero, FieldMismatch, NotPrime
from rmghw.gf import enumerate_field, field_of_order, is_irreducible, make_field, prime_power

from conftest import field_and_elems


def carryless_mul_mod(a, b, modulus, e):
    """Independent GF(2^e) product: shift-and-xor with bitwise reduction."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> e & 1:
            a ^= modulus
    return out


def test_gf8_canonical_modulus():
    F = make_field(2, 3)
    assert F.modulus == (1, 1, 0, 1)
    # the smallest-encoding irreducible cubic, by brute force
    cubics = [(c0, c1, c2, 1) for c2 in (0, 1) for c1 in (0, 1) for c0 in (0, 1)]
    irreducible = [c for c in cubics if all(sum(ci * x**i for i, ci in enumerate(c)) % 2 for x in (0, 1))]
    assert min(irreducible, key=lambda c: sum(ci * 2**i for i, ci in enumerate(c))) == F.modulus


def test_prime_field():
    F = make_field(5, 1)
    assert F.q == 5 and F.is_prime_field
    assert F.inv(2) == 3
    assert [int(x) for x in enumerate_field(F)] == [0, 1, 2, 3, 4]


def test_errors():
    with pytest.raises(NotPrime):
        make_field(4, 1)
    with pytest.raises(NotPrime):
        field_of_order(12)
    with pytest.raises(DegreeTooLarge):
        make_field(2, 40)
    with pytest.raises(DivisionByZero):
        field_of_order(8).inv(0)
    with pytest.raises(ZeroDivisionError):
        field_of_order(5)(3) / 0
    with pytest.raises(FieldMismatch):
        field_of_order(5)(1) + field_of_order(7)(1)


def test_gf8_mul_by_reduction():
    F = field_of_order(8)
    x, x2 = 0b010, 0b100
    assert F.mul(x, x2) == 0b011  # x^3 = x + 1
    for a in range(8):
        for b in range(8):
            assert F.mul(a, b) == carryless_mul_mod(a, b, 0b1011, 3)


def test_gf256_mul_by_reduction():
    F = field_of_order(256)
    mod = sum(c << i for i, c in enumerate(F.modulus))
    assert is_irreducible(F.modulus, 2)
    for a in range(0, 256, 7):
        for b in range(0, 256, 5):
            assert F.mul(a, b) == carryless_mul_mod(a, b, mod, 8)


def test_gf9_by_schoolbook():
    F = field_of_order(9)
    assert F.modulus == (1, 0, 1)  # x^2 + 1
    for a in range(9):
        for b in range(9):
            a0, a1 = a % 3, a // 3
            b0, b1 = b % 3, b // 3
            # (a0 + a1 x)(b0 + b1 x) with x^2 = -1
            c0 = (a0 * b0 - a1 * b1) % 3
            c1 = (a0 * b1 + a1 * b0) % 3
            assert F.mul(a, b) == c0 + 3 * c1


def test_enumeration():
    assert [int(x) for x in enumerate_field(field_of_order(2))] == [0, 1]
    els = [int(x) for x in enumerate_field(field_of_order(8))]
    assert len(els) == len(set(els)) == 8


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 125, 128, 243, 256, 343, 512, 1024])
def test_group_order(q):
    F = field_of_order(q)
    p, e = prime_power(q)
    assert (F.p, F.e) == (p, e)
    assert is_irreducible(F.modulus, p)
    sample = range(1, q) if q <= 256 else range(1, q, q // 97)
    for g in sample:
        assert F.pow(g, q - 1) == 1
        assert F.mul(g, F.inv(g)) == 1


def test_elem_wrapper():
    F = field_of_order(8)
    a, b = F(3), F(5)
    assert int(a * b) == F.mul(3, 5)
    assert int(a - b) == F.sub(3, 5)
    assert int(a / b) == F.div(3, 5)
    assert a ** 7 == F(1)
    assert int(gf.power(a, 3)) == F.pow(3, 3)
    assert gf.add(a, gf.neg(a)) == F(0)
    assert gf.mul(a, gf.inv(a)) == F(1)
    assert F((1, 1, 0)) == F(3)
    assert a.coeffs == (1, 1, 0)


@given(field_and_elems())
def test_field_axioms(fe):
    F, (a, b, c) = fe
    assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a


@given(field_and_elems(n=2))
def test_frobenius(fe):
    F, (a, b) = fe
    p = F.p
    assert F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p))


@given(field_and_elems(n=1))
def test_units(fe):
    F, (a,) = fe
    if a:
        assert F.pow(a, F.q - 1) == 1
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(a, a) == 1


@given(field_and_elems(n=8))
def test_vector_ops_match_scalar(fe):
    import numpy as np

    F, xs = fe
    a = np.array(xs[:4])
    b = np.array(xs[4:])
    assert list(F.vadd(a, b)) == [F.add(x, y) for x, y in zip(a, b)]
    assert list(F.vmul(a, b)) == [F.mul(x, y) for x, y in zip(a, b)]
    assert list(F.vsub(a, b)) == [F.sub(x, y) for x, y in zip(a, b)]
    assert list(F.vneg(a)) == [F.neg(x) for x in a]
    assert list(F.vpow(a, 3)) == [F.pow(x, 3) for x in a]
    nz = b[b != 0]
    assert list(F.vinv(nz)) == [F.inv(x) for x in nz]
