import random

import pytest

from sccc.errors import DivisionByZero, FieldMismatch, NotADivisor
from sccc.field import FieldSpec, canonical_primitive, field_spec_for_order, root_of_unity


def test_canonical_moduli():
    assert FieldSpec.get(2, 2).modulus == (1, 1, 1)  # x^2 + x + 1
    assert FieldSpec.get(2, 3).modulus == (1, 0, 1, 1)  # x^3 + x^2 + 1
    assert FieldSpec.get(3, 2).modulus == (1, 0, 1)  # x^2 + 1


def test_prime_modulus_is_linear():
    # for m = 1 any monic linear polynomial is irreducible; lexicographic
    # order picks constant term 0, i.e. the modulus x
    assert FieldSpec.get(5).modulus == (0, 1)
    assert FieldSpec.get(7).modulus == (0, 1)


def test_interning():
    assert FieldSpec.get(5) is FieldSpec.get(5, 1)
    assert field_spec_for_order(8) is FieldSpec.get(2, 3)
    assert field_spec_for_order(9) is FieldSpec.get(3, 2)
    with pytest.raises(ValueError):
        field_spec_for_order(6)
    with pytest.raises(ValueError):
        FieldSpec.get(4)


def test_primitive_elements():
    # encoding sum(c_i p^i): the generator alpha is the smallest code of
    # multiplicative order q-1
    assert canonical_primitive(FieldSpec.get(5)).code == 2
    assert canonical_primitive(FieldSpec.get(7)).code == 3
    f4 = FieldSpec.get(2, 2)
    assert f4.alpha.code == 2  # alpha = x
    assert (f4.alpha * f4.alpha).code == 3  # alpha^2 = alpha + 1
    f8 = FieldSpec.get(2, 3)
    assert f8.alpha.code == 2
    assert (f8.alpha ** 3).code == 5  # alpha^3 = alpha^2 + 1
    f9 = FieldSpec.get(3, 2)
    assert f9.alpha.order() == 8


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_field_axioms(p, m):
    spec = FieldSpec.get(p, m)
    rng = random.Random(p * 100 + m)
    elems = spec.elements()
    for _ in range(50):
        a, b, c = (rng.choice(elems) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == spec.zero()
        if b:
            assert b * b.inverse() == spec.one()
            assert (a / b) * b == a
    # multiplicative orders divide q - 1
    for x in elems[1:]:
        assert (spec.q - 1) % x.order() == 0


def test_division_by_zero():
    spec = FieldSpec.get(5)
    with pytest.raises(DivisionByZero):
        spec.one() / spec.zero()
    with pytest.raises(DivisionByZero):
        spec.zero().inverse()
    with pytest.raises(DivisionByZero):
        spec.zero().order()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        FieldSpec.get(5).one() + FieldSpec.get(7).one()


def test_root_of_unity():
    spec = FieldSpec.get(5)
    w = root_of_unity(spec, 4)
    assert w.code == 2 and w.order() == 4
    assert root_of_unity(spec, 2).code == 4  # alpha^2 = -1
    with pytest.raises(NotADivisor):
        root_of_unity(spec, 3)


def test_coeffs_encoding():
    f8 = FieldSpec.get(2, 3)
    # code 6 = 0 + 1*2 + 1*4 -> coefficients (0, 1, 1), i.e. x + x^2
    assert f8.element(6).coeffs == (0, 1, 1)
    assert (f8.alpha ** 6).code == 6
