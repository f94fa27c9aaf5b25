import itertools
import random

import pytest

from sccc.errors import BothZero, RankDeficient, SizeError
from sccc.field import FieldSpec
from sccc.polymat import (
    NEG_INF,
    Poly,
    PolyMatrix,
    determinant,
    external_degree,
    is_basic,
    is_minimal,
    minors,
    poly_gcd,
    row_degrees,
)

F5 = FieldSpec.get(5)


def _random_poly(rng, spec, max_deg=6):
    return Poly.from_ints(spec, [rng.randrange(spec.q) for _ in range(rng.randrange(max_deg + 2))])


def test_normalization_and_degree():
    p = Poly.from_ints(F5, [1, 2, 0, 0])
    assert p.coeffs == (F5.element(1), F5.element(2))
    assert p.degree == 1
    assert Poly.zero(F5).degree == NEG_INF
    assert Poly.monomial(F5, F5.element(3), 4).to_ints() == [0, 0, 0, 0, 3]


def test_divmod_property():
    rng = random.Random(11)
    for _ in range(200):
        a = _random_poly(rng, F5)
        b = _random_poly(rng, F5)
        if b.is_zero():
            continue
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree


def test_gcd():
    rng = random.Random(12)
    for _ in range(100):
        a, b = _random_poly(rng, F5), _random_poly(rng, F5)
        if a.is_zero() and b.is_zero():
            continue
        g = poly_gcd(a, b)
        assert g.is_zero() or g.leading() == F5.one()
        for f in (a, b):
            if not f.is_zero():
                _, rem = f.divmod(g)
                assert rem.is_zero()
    with pytest.raises(BothZero):
        poly_gcd(Poly.zero(F5), Poly.zero(F5))


def test_evaluate_horner():
    p = Poly.from_ints(F5, [1, 2, 3])  # 1 + 2x + 3x^2
    assert p.evaluate(F5.element(2)).code == (1 + 4 + 12) % 5


def _naive_det(mat):
    n = mat.rows
    total = Poly.zero(mat.spec)
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = Poly.one(mat.spec)
        for i in range(n):
            term = term * mat[i, perm[i]]
        total = total + (term if sign == 1 else -term)
    return total


def test_determinant_against_permanent_expansion():
    rng = random.Random(13)
    for _ in range(30):
        mat = PolyMatrix(
            F5, [[_random_poly(rng, F5, 3) for _ in range(3)] for _ in range(3)]
        )
        assert determinant(mat) == _naive_det(mat)


def test_determinant_errors():
    with pytest.raises(SizeError):
        determinant(PolyMatrix.from_ints(F5, [[[1], [2]]]))


def test_minors_count():
    mat = PolyMatrix.from_ints(F5, [[[1], [0], [2]], [[0, 1], [1], [3]]])
    assert len(minors(mat, 2)) == 3
    assert len(minors(mat, 1)) == 6


def test_basicness():
    # coprime maximal minors
    assert is_basic(PolyMatrix.from_ints(F5, [[[1], [0, 1]]]))
    # common factor t
    assert not is_basic(PolyMatrix.from_ints(F5, [[[0, 1], [0, 0, 1]]]))
    with pytest.raises(RankDeficient):
        is_basic(PolyMatrix.from_ints(F5, [[[], []]]))
    with pytest.raises(SizeError):
        is_basic(PolyMatrix.from_ints(F5, [[[1]], [[1]]]))


def test_encoder_invariants_on_reference_matrix():
    # 3x4 minimal encoder with row degrees 1, 1, 2 and degree 4
    grid = [
        [[3, 4], [3, 2], [3, 1], [3, 3]],
        [[4, 2], [2, 3], [1, 2], [3, 3]],
        [[4, 4, 1], [1, 3, 1], [4, 1, 1], [1, 2, 1]],
    ]
    G = PolyMatrix.from_ints(F5, grid)
    assert row_degrees(G) == [1, 1, 2]
    assert external_degree(G) == 4
    assert is_basic(G)
    assert is_minimal(G)


def test_not_minimal():
    G = PolyMatrix.from_ints(F5, [[[1], [], [0, 1]], [[], [1], [0, 1]]])
    assert is_basic(G)
    assert not is_minimal(G)


def test_matrix_ops():
    a = PolyMatrix.from_ints(F5, [[[1], [2]], [[0, 1], [3]]])
    ident = PolyMatrix.identity(F5, 2)
    assert a * ident == a
    assert (a + a).to_ints() == [[[2], [4]], [[0, 2], [6 % 5]]]
    assert a.transpose().transpose() == a
