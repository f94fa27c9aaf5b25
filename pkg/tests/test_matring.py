import random

import pytest

from sccc.errors import InvalidParameters, NotBasic, NotDelayFree
from sccc.field import FieldSpec
from sccc.polymat import NEG_INF, PolyMatrix, determinant
from sccc.matring import (
    MMatrix,
    complete_to_unit,
    degree_matrix,
    elementary_unit,
    is_basic_member,
    is_semi_reduced_mat,
    is_unit,
    semi_reduce,
    xi,
    xi_inv,
)
from sccc.skew import RingContext, SkewPoly

F5 = FieldSpec.get(5)
CTX = RingContext(F5, 4)

M_RAW_INTS = [
    [[2, 1], [1], [4], [4]],
    [[], [1], [3], []],
    [[0, 4], [0, 2], [1, 1], [1]],
    [[], [], [], []],
]
M_BAR_INTS = [
    [[2], [1], [], []],
    [[], [1], [3], []],
    [[0, 4], [], [1], [1]],
    [[], [], [], []],
]
G_RAW = SkewPoly.from_ints(
    CTX,
    [[2, 1, 1, 0], [0, 1, 3, 1], [4, 0, 4, 0], [0, 2, 0, 4], [1, 0, 1, 0]],
)


def test_membership_constraint():
    with pytest.raises(ValueError):
        MMatrix.from_ints(CTX, [[[1], [], [], []]] + [[[1], [1], [1], [1]]] * 3)


def test_xi_reference_matrix():
    assert xi(G_RAW).to_ints() == M_RAW_INTS
    assert xi_inv(MMatrix.from_ints(CTX, M_RAW_INTS)) == G_RAW


def test_xi_round_trip_random():
    rng = random.Random(31)
    for q, n in ((4, 3), (5, 4), (8, 7)):
        spec = FieldSpec.get(2, 2) if q == 4 else FieldSpec.get(2, 3) if q == 8 else F5
        ctx = RingContext(spec, n)
        for _ in range(30):
            grid = [
                [rng.randrange(q) for _ in range(n)] for _ in range(rng.randrange(7))
            ]
            g = SkewPoly.from_ints(ctx, grid)
            assert xi_inv(xi(g)) == g


def test_xi_multiplicative():
    rng = random.Random(32)
    for _ in range(50):
        f = SkewPoly.from_ints(
            CTX, [[rng.randrange(5) for _ in range(4)] for _ in range(rng.randrange(6))]
        )
        g = SkewPoly.from_ints(
            CTX, [[rng.randrange(5) for _ in range(4)] for _ in range(rng.randrange(6))]
        )
        assert xi(f * g) == xi(f) * xi(g)


def test_degree_matrix_reference():
    D = degree_matrix(MMatrix.from_ints(CTX, M_RAW_INTS))
    assert D.entries == (
        (4, 1, 2, 3),
        (NEG_INF, 0, 1, NEG_INF),
        (2, 3, 4, 1),
        (NEG_INF, NEG_INF, NEG_INF, NEG_INF),
    )
    assert D.row_max == ((4, 1), (1, 3), (4, 3), None)


def test_semi_reduced_detection():
    assert not is_semi_reduced_mat(MMatrix.from_ints(CTX, M_RAW_INTS))
    assert is_semi_reduced_mat(MMatrix.from_ints(CTX, M_BAR_INTS))


def test_semi_reduce_reference():
    result = semi_reduce(MMatrix.from_ints(CTX, M_RAW_INTS))
    assert result.reduced == MMatrix.from_ints(CTX, M_BAR_INTS)
    assert list(result.factors) == [("lower", 3, 2, 1, 3), ("upper", 1, 3, 0, 1)]
    assert result.unit * MMatrix.from_ints(CTX, M_RAW_INTS) == result.reduced
    assert is_unit(result.unit)


def test_semi_reduce_idempotent_on_reduced():
    result = semi_reduce(MMatrix.from_ints(CTX, M_BAR_INTS))
    assert result.factors == []
    assert result.reduced == MMatrix.from_ints(CTX, M_BAR_INTS)


def test_elementary_units():
    assert is_unit(elementary_unit(CTX, ("scale", 2, 3)))
    assert is_unit(elementary_unit(CTX, ("upper", 1, 3, 0, 1)))
    assert is_unit(elementary_unit(CTX, ("lower", 3, 2, 1, 3)))
    with pytest.raises(InvalidParameters):
        elementary_unit(CTX, ("scale", 1, 0))
    with pytest.raises(InvalidParameters):
        elementary_unit(CTX, ("lower", 3, 2, 0, 1))  # below-diagonal needs t
    with pytest.raises(InvalidParameters):
        elementary_unit(CTX, ("upper", 3, 2, 1, 1))


def test_complete_to_unit_reference():
    bar = MMatrix.from_ints(CTX, M_BAR_INTS)
    # the naive fill (0,0,0,1) does not give a unit: its determinant is 2+2t
    naive_rows = [list(r) for r in bar.mat.entries[:3]]
    naive_rows.append(list(PolyMatrix.from_ints(F5, [[[], [], [], [1]]]).entries[0]))
    assert determinant(PolyMatrix(F5, naive_rows)).to_ints() == [2, 2]
    N = complete_to_unit(bar)
    assert is_unit(N)
    for a in range(3):
        assert N.mat.entries[a] == bar.mat.entries[a]


def test_complete_to_unit_errors():
    with pytest.raises(NotDelayFree):
        complete_to_unit(
            MMatrix.from_ints(CTX, [[[0, 1], [1], [], []]] + [[[], [], [], []]] * 3)
        )
    # support rows with a common factor 1+t in every maximal minor
    rows = [
        [[1, 1], [2, 2], [], []],
        [[], [], [], []],
        [[0, 1], [], [1, 1], []],
        [[], [], [], []],
    ]
    with pytest.raises(NotBasic):
        complete_to_unit(MMatrix.from_ints(CTX, rows))


def test_is_basic_member():
    assert is_basic_member(MMatrix.from_ints(CTX, M_BAR_INTS))
    zero = MMatrix.from_ints(CTX, [[[], [], [], []]] * 4)
    assert is_basic_member(zero)
    assert complete_to_unit(zero) == MMatrix.identity(CTX)
    # common factor 1 + t across the only support row
    assert not is_basic_member(
        MMatrix.from_ints(CTX, [[[1, 1], [2, 2], [], []]] + [[[], [], [], []]] * 3)
    )


def test_full_support_unit_passthrough():
    ident = MMatrix.identity(CTX)
    assert complete_to_unit(ident) == ident
    # full support but not a unit
    bad = MMatrix.from_ints(
        CTX, [[[1, 1], [], [], []], [[], [1], [], []], [[], [], [1], []], [[], [], [], [1]]]
    )
    with pytest.raises(NotBasic):
        complete_to_unit(bad)


def test_completion_random():
    rng = random.Random(33)
    ctx = RingContext(F5, 3)
    done = 0
    for _ in range(60):
        grid = []
        supp = sorted(rng.sample(range(3), rng.randrange(1, 3)))
        for a in range(3):
            if a not in supp:
                grid.append([[], [], []])
                continue
            row = []
            for b in range(3):
                coeffs = [rng.randrange(5) for _ in range(3)]
                if b < a:
                    coeffs[0] = 0
                if b == a and coeffs[0] == 0:
                    coeffs[0] = rng.randrange(1, 5)
                row.append(coeffs)
            grid.append(row)
        M = MMatrix.from_ints(ctx, grid)
        if not is_basic_member(M):
            continue
        N = complete_to_unit(M)
        assert is_unit(N)
        for a in supp:
            assert N.mat.entries[a] == M.mat.entries[a]
        done += 1
    assert done > 10
