import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from synfuzz.errors import (
    NoDefaultModulusError,
    NonPrimitiveAlphaError,
    NotInAlgebraError,
    NotPrimeError,
    ReducibleModulusError,
)
from synfuzz.gf import MUL_COUNTER, PrimeField, build_ext_field, default_modulus

import oracle


@pytest.fixture(scope="module")
def f8():
    return build_ext_field(2, 3)


@pytest.fixture(scope="module")
def f16():
    return build_ext_field(2, 4)


def test_prime_field_rejects_composites():
    with pytest.raises(NotPrimeError):
        PrimeField(6)
    with pytest.raises(NotPrimeError):
        build_ext_field(4, 2)


def test_f8_construction(f8):
    # x^3 + x + 1 has no roots over gf(2) and x has order 7
    assert f8.order == 8
    assert f8.modulus == (1, 1, 0, 1)
    assert f8.alpha_is_primitive
    assert f8.alpha_order == 7


def test_degree_one_extension_is_the_prime_field():
    f2 = build_ext_field(2, 1)
    assert f2.order == 2
    assert f2.mul(1, 1) == 1
    assert f2.add(1, 1) == 0
    assert f2.to_base_vector(1) == [1]


def test_reducible_modulus_rejected():
    # x^3 + 1 = (x + 1)(x^2 + x + 1)
    with pytest.raises(ReducibleModulusError):
        build_ext_field(2, 3, modulus=[1, 0, 0, 1])


def test_no_default_modulus_for_large_fields():
    with pytest.raises(NoDefaultModulusError):
        default_modulus(2, 17)


def test_non_primitive_modulus_flagged():
    # x^2 + 1 is irreducible over gf(3) but x has order 4, not 8
    fld = build_ext_field(3, 2, modulus=[1, 0, 1])
    assert not fld.alpha_is_primitive
    with pytest.raises(NonPrimitiveAlphaError):
        build_ext_field(3, 2, modulus=[1, 0, 1], require_primitive=True)


def test_all_binary_defaults_are_primitive():
    for m in range(1, 17):
        fld = build_ext_field(2, m)
        assert fld.alpha_is_primitive, f"default modulus for m={m} is not primitive"


def test_f8_spot_products(f8):
    # alpha * alpha^2 = alpha + 1 and (alpha+1)^2 = alpha^2 + 1
    assert f8.mul(2, 4) == 3
    assert f8.mul(3, 3) == 5


def test_f8_multiplication_matches_polynomial_oracle(f8):
    for a in range(8):
        for b in range(8):
            assert f8.mul(a, b) == oracle.elem_mul(2, 3, f8.modulus, a, b)


def test_f8_inverses(f8):
    assert f8.inv(2) == 5
    assert f8.mul(2, 5) == 1
    assert f8.inv(1) == 1
    with pytest.raises(ZeroDivisionError):
        f8.inv(0)
    for a in range(1, 8):
        assert f8.mul(a, f8.inv(a)) == 1


def test_mul_identity_for_all_elements(f8):
    for a in range(8):
        assert f8.mul(a, 1) == a


def test_field_axioms_exhaustive_f8(f8):
    add, mul = f8.add, f8.mul
    for a in range(8):
        for b in range(8):
            assert add(a, b) == add(b, a)
            assert mul(a, b) == mul(b, a)
            for c in range(8):
                assert mul(a, mul(b, c)) == mul(mul(a, b), c)
                assert add(a, add(b, c)) == add(add(a, b), c)
                assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 15), st.integers(0, 15), st.integers(0, 15))
def test_field_axioms_sampled_f16(a, b, c):
    fld = build_ext_field(2, 4)
    assert fld.mul(a, fld.mul(b, c)) == fld.mul(fld.mul(a, b), c)
    assert fld.mul(a, fld.add(b, c)) == fld.add(fld.mul(a, b), fld.mul(a, c))
    if a:
        assert fld.mul(a, fld.inv(a)) == 1


def test_base_vector_round_trip(f8):
    assert f8.to_base_vector(3) == [1, 1, 0]
    assert f8.to_base_vector(0) == [0, 0, 0]
    for a in range(8):
        assert f8.from_base_vector(f8.to_base_vector(a)) == a


def test_base_vector_addition_is_componentwise(f8):
    for a in range(8):
        for b in range(8):
            va = f8.to_base_vector(a)
            vb = f8.to_base_vector(b)
            assert f8.to_base_vector(f8.add(a, b)) == [(x + y) % 2 for x, y in zip(va, vb)]


def test_companion_matrix_f4():
    f4 = build_ext_field(2, 2)
    assert f4.to_companion_matrix(2) == [[0, 1], [1, 1]]  # alpha -> P
    assert f4.to_companion_matrix(3) == [[1, 1], [1, 0]]  # alpha^2 = alpha + 1 -> P^2
    assert f4.to_companion_matrix(1) == [[1, 0], [0, 1]]
    # P^2 really is P + I
    p_mat = f4.to_companion_matrix(2)
    psq = [
        [sum(p_mat[r][k] * p_mat[k][c] for k in range(2)) % 2 for c in range(2)]
        for r in range(2)
    ]
    assert psq == f4.to_companion_matrix(3)


def test_companion_representation_is_multiplicative(f8):
    m = f8.m
    for a in range(8):
        for b in range(8):
            ma = f8.to_companion_matrix(a)
            mb = f8.to_companion_matrix(b)
            prod = [
                [sum(ma[r][k] * mb[k][c] for k in range(m)) % 2 for c in range(m)]
                for r in range(m)
            ]
            assert prod == f8.to_companion_matrix(f8.mul(a, b))


def test_companion_round_trip_and_rejection(f8):
    for a in range(8):
        assert f8.from_companion_matrix(f8.to_companion_matrix(a)) == a
    bad = f8.to_companion_matrix(5)
    bad[0][2] ^= 1
    with pytest.raises(NotInAlgebraError):
        f8.from_companion_matrix(bad)


def test_nonbinary_field_arithmetic():
    f9 = build_ext_field(3, 2)
    assert f9.alpha_is_primitive
    for a in range(9):
        for b in range(9):
            assert f9.mul(a, b) == oracle.elem_mul(3, 2, f9.modulus, a, b)
            assert f9.add(a, b) == oracle.elem_add(3, 2, a, b)
        assert f9.add(a, f9.neg(a)) == 0


def test_alpha_pow_matches_repeated_multiplication(f16):
    cur = 1
    for e in range(30):
        assert f16.alpha_pow(e) == cur
        cur = f16.mul(cur, f16.alpha)


def test_mul_counter_monotone_and_resettable(f8):
    MUL_COUNTER.reset()
    assert MUL_COUNTER.count == 0
    f8.mul(3, 6)
    after_one = MUL_COUNTER.count
    assert after_one >= 1
    f8.mul(7, 7)
    assert MUL_COUNTER.count > after_one
    MUL_COUNTER.reset()
    assert MUL_COUNTER.count == 0


def test_spec_strings():
    assert build_ext_field(2, 3).spec_string() == "gf(2^3)"
    assert PrimeField(5).spec_string() == "gf(5)"
    custom = build_ext_field(2, 3, modulus=[1, 1, 0, 1])
    assert custom.spec_string() == "gf(2^3)"  # matches the default table
    f9 = build_ext_field(3, 2)
    assert "modulus=" in f9.canonical_spec()


def test_default_modulus_search_is_deterministic():
    assert default_modulus(3, 2) == default_modulus(3, 2)
    fld = build_ext_field(5, 2)
    assert fld.alpha_is_primitive
    assert fld.order == 25
