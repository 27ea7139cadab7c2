import itertools

import pytest

from convgoppa import FieldSpec, FieldTable, build_field, gf8
from convgoppa.errors import (
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NotPrimitive,
    ReducibleModulus,
)


class TestConstruction:
    def test_gf8_defining_relation(self, f8):
        a = f8.gen
        assert a ** 3 == a ** 2 + f8.one

    def test_gf8_generator_order(self, f8):
        a = f8.gen
        assert a ** 7 == f8.one
        for k in range(1, 7):
            assert a ** k != f8.one

    def test_gf8_power_table(self, f8):
        # repeated multiplication by a, reducing by a^3 = a^2 + 1
        a = f8.gen
        assert (a ** 4).coeffs() == (1, 1, 1)
        assert (a ** 5).coeffs() == (1, 1, 0)
        assert (a ** 6).coeffs() == (0, 1, 1)

    def test_build_field_from_spec(self):
        table = build_field(FieldSpec(2, 3, (1, 0, 1, 1)))
        assert table.q == 8
        assert table.gen.log == 1

    def test_reducible_modulus_rejected(self):
        # x^3 + 1 = (x + 1)(x^2 + x + 1) over GF(2)
        with pytest.raises(ReducibleModulus):
            FieldTable(2, 3, (1, 0, 0, 1))

    def test_non_primitive_generator_rejected(self):
        # in GF(9) with modulus x^2 + 1 the class of x has order 4
        with pytest.raises(NotPrimitive):
            FieldTable(3, 2, (1, 0, 1), generator=(0, 1))

    def test_unit_generator_rejected(self):
        with pytest.raises(NotPrimitive):
            FieldTable(2, 2, (1, 1, 1), generator=(1, 0))

    def test_table_limit(self):
        with pytest.raises(FieldTooLarge):
            FieldTable(2, 17, (1,) + (0,) * 16 + (1,))

    def test_nonprime_characteristic_rejected(self):
        with pytest.raises(ValueError):
            FieldTable(4, 1, (1, 1))

    def test_prime_field(self, f2):
        assert f2.q == 2
        assert f2.one + f2.one == f2.zero


class TestArithmetic:
    def test_add_example(self, f8):
        a = f8.gen
        assert a ** 2 + a == a ** 6

    def test_inverse_law(self, f8):
        for x in f8.elements():
            if x:
                assert x * x.inverse() == f8.one

    def test_pow_reduces_mod_group_order(self, f8):
        a = f8.gen
        assert (a ** 4) ** 2 == a  # a^8 = a
        assert a ** -1 == a ** 6

    def test_inv_zero_raises(self, f8):
        with pytest.raises(DivisionByZero):
            f8.zero.inverse()
        with pytest.raises(DivisionByZero):
            f8.zero ** -1

    def test_mixed_fields_rejected(self, f8):
        other = FieldTable(2, 3, (1, 1, 0, 1))  # x^3 + x + 1
        with pytest.raises(FieldMismatch):
            f8.one + other.one

    def test_subtraction_and_negation_gf9(self):
        f9 = FieldTable(3, 2, (2, 2, 1))  # x^2 + 2x + 2, x primitive
        for x in f9.elements():
            assert x + (-x) == f9.zero
            assert x - x == f9.zero


class TestFieldAxioms:
    def test_frobenius_exhaustive(self, small_fields):
        for q, f in small_fields.items():
            for x in f.elements():
                assert x ** q == x

    def test_distributivity_exhaustive_gf8(self, f8):
        elems = list(f8.elements())
        for x, y, w in itertools.product(elems, repeat=3):
            assert x * (y + w) == x * y + x * w

    def test_commutativity_and_associativity_gf8(self, f8):
        elems = list(f8.elements())
        for x, y in itertools.product(elems, repeat=2):
            assert x + y == y + x
            assert x * y == y * x
        for x, y, w in itertools.product(elems[1:], repeat=3):
            assert (x * y) * w == x * (y * w)
            assert (x + y) + w == x + (y + w)

    def test_log_antilog_roundtrip(self, small_fields):
        for f in small_fields.values():
            for x in f.elements():
                if x:
                    assert f.from_log(x.log) == x
                else:
                    assert x.log == -1

    def test_characteristic_fold_sum(self, f8):
        f9 = FieldTable(3, 2, (2, 2, 1))
        for f in (f8, f9):
            for x in f.elements():
                acc = f.zero
                for _ in range(f.p):
                    acc = acc + x
                assert acc == f.zero


class TestDisplay:
    def test_power_notation(self, f8):
        a = f8.gen
        assert str(f8.zero) == "0"
        assert str(f8.one) == "1"
        assert str(a) == "a"
        assert str(a ** 5) == "a^5"

    def test_polynomial_notation(self, f8):
        assert (f8.gen ** 3).poly_str() == "1 + x^2"
        assert f8.zero.poly_str() == "0"
