"""The matrix ring M of n x n polynomial matrices over F[t] whose
below-diagonal entries vanish at t = 0, together with the ring isomorphism
between A[z;sigma] (standard cycle) and M.

Covers degree matrices, semi-reduction by elementary units, the unit test
(constant nonzero determinant), and completion of zero rows to a unit.
"""

from __future__ import annotations

from collections import namedtuple

from .errors import (
    ContextMismatch,
    InvalidParameters,
    NotBasic,
    NotDelayFree,
)
from .polymat import NEG_INF, Poly, PolyMatrix, determinant, is_basic
from .skew import SkewPoly, _require_cyclic


class MMatrix:
    """Member of M: ctx plus an n x n PolyMatrix in the variable t."""

    __slots__ = ("ctx", "mat")

    def __init__(self, ctx, mat):
        if mat.rows != ctx.n or mat.cols != ctx.n:
            raise ValueError(f"expected a {ctx.n}x{ctx.n} matrix")
        if mat.spec is not ctx.spec:
            raise ContextMismatch("matrix over the wrong field")
        for a in range(ctx.n):
            for b in range(a):
                if mat[a, b].constant_term():
                    raise ValueError(
                        f"entry ({a + 1},{b + 1}) below the diagonal must vanish at t=0"
                    )
        self.ctx = ctx
        self.mat = mat

    @staticmethod
    def from_ints(ctx, grid):
        return MMatrix(ctx, PolyMatrix.from_ints(ctx.spec, grid))

    @staticmethod
    def identity(ctx):
        return MMatrix(ctx, PolyMatrix.identity(ctx.spec, ctx.n))

    def __getitem__(self, ab):
        return self.mat[ab]

    def __mul__(self, other):
        if other.ctx != self.ctx:
            raise ContextMismatch("matrices in different rings")
        return MMatrix(self.ctx, self.mat * other.mat)

    def __eq__(self, other):
        return isinstance(other, MMatrix) and other.ctx == self.ctx and other.mat == self.mat

    def __hash__(self):
        return hash((self.ctx, self.mat))

    def support(self):
        """1-based indices of nonzero rows."""
        return [a + 1 for a, row in enumerate(self.mat.entries) if any(row)]

    def is_delay_free(self):
        return all(self.mat[a - 1, a - 1].constant_term() for a in self.support())

    def to_ints(self):
        return self.mat.to_ints()

    def __repr__(self):
        return f"MMatrix(n={self.ctx.n}, q={self.ctx.spec.q})"


def xi(g):
    """Ring isomorphism from A[z;sigma] (standard cycle) onto M.

    Entry (a,b) collects, per block l, the coefficient of z^{nl+i} at
    position b, where i = b - a + sgn(a-b)*n, shifted by t^{l+sgn(a-b)}.
    """
    ctx = g.ctx
    _require_cyclic(ctx)
    n = ctx.n
    spec = ctx.spec
    zero = spec.zero()
    blocks = (len(g.coeffs) + n - 1) // n if g.coeffs else 0
    rows = []
    for a in range(1, n + 1):
        row = []
        for b in range(1, n + 1):
            sgn = 1 if a > b else 0
            i = b - a + sgn * n
            coeffs = [zero] * sgn
            for l in range(blocks):
                coeffs.append(g.coeff(n * l + i)[b - 1])
            row.append(Poly(spec, tuple(coeffs)))
        rows.append(row)
    return MMatrix(ctx, PolyMatrix(spec, rows))


def xi_inv(M):
    """Inverse of xi: rebuild the A-coefficients from the matrix entries."""
    ctx = M.ctx
    _require_cyclic(ctx)
    n = ctx.n
    grid = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            entry = M[a - 1, b - 1]
            sgn = 1 if a > b else 0
            i = b - a + sgn * n
            for s, c in enumerate(entry.coeffs):
                if c:
                    grid[(n * (s - sgn) + i, b - 1)] = c
    if not grid:
        return SkewPoly.zero(ctx)
    top = max(nu for nu, _ in grid)
    coeffs = []
    for nu in range(top + 1):
        vec = list(ctx.zero_vector())
        for b in range(n):
            if (nu, b) in grid:
                vec[b] = grid[(nu, b)]
        coeffs.append(tuple(vec))
    return SkewPoly(ctx, coeffs)


class DegreeMatrix:
    """Integer/-inf matrix with entries n*deg(m_ab) - a + b.

    row_max[a-1] is None for a trivial row, else the pair (value, b_a) where
    b_a is the 1-based column of the unique row maximum (equivalently the
    rightmost entry of maximal t-degree in row a of M).
    """

    __slots__ = ("entries", "row_max")

    def __init__(self, entries):
        self.entries = tuple(tuple(row) for row in entries)
        row_max = []
        for row in self.entries:
            best, col = NEG_INF, None
            for b, v in enumerate(row, start=1):
                if v != NEG_INF and v > best:
                    best, col = v, b
            row_max.append(None if col is None else (best, col))
        self.row_max = tuple(row_max)

    def __getitem__(self, ab):
        return self.entries[ab[0]][ab[1]]

    def __repr__(self):
        return f"DegreeMatrix({self.entries})"


def degree_matrix(M):
    n = M.ctx.n
    rows = []
    for a in range(1, n + 1):
        row = []
        for b in range(1, n + 1):
            d = M[a - 1, b - 1].degree
            row.append(NEG_INF if d == NEG_INF else n * int(d) - a + b)
        rows.append(row)
    return DegreeMatrix(rows)


def is_semi_reduced_mat(M):
    """True iff the row maxima of the degree matrix sit in distinct columns."""
    cols = [rm[1] for rm in degree_matrix(M).row_max if rm is not None]
    return len(cols) == len(set(cols))


def is_unit(M):
    det = determinant(M.mat)
    return det.degree == 0


# factor descriptors: ("scale", a, alpha_code), ("upper", a, b, N, alpha_code),
# ("lower", a, b, N, alpha_code); indices 1-based, alpha as integer code.


def elementary_unit(ctx, kind):
    """Build an elementary unit of M from its descriptor tuple."""
    spec = ctx.spec
    tag = kind[0]
    ident = PolyMatrix.identity(spec, ctx.n)
    rows = [list(r) for r in ident.entries]
    if tag == "scale":
        _, a, alpha = kind
        alpha = spec.element(alpha)
        if not alpha:
            raise InvalidParameters("scale factor must be nonzero")
        rows[a - 1][a - 1] = Poly(spec, (alpha,))
    elif tag in ("upper", "lower"):
        _, a, b, N, alpha = kind
        alpha = spec.element(alpha)
        if tag == "upper" and not (a < b and N >= 0):
            raise InvalidParameters("upper shear needs a < b and N >= 0")
        if tag == "lower" and not (b < a and N > 0):
            raise InvalidParameters("lower shear needs b < a and N > 0")
        rows[a - 1][b - 1] = Poly.monomial(spec, alpha, N)
    else:
        raise InvalidParameters(f"unknown elementary unit kind {tag!r}")
    return MMatrix(ctx, PolyMatrix(spec, rows))


SemiReduceResult = namedtuple("SemiReduceResult", ["unit", "reduced", "factors"])


def semi_reduce(M):
    """Left-reduce M to semi-reduced form by elementary units.

    Returns (U, R, factors) with R = U * M semi-reduced; factors lists the
    elementary unit descriptors in order of application (first applied first).
    Scan order: the lexicographically first row pair (a, b), a < b, whose
    degree-matrix row maxima share a column is resolved; the row with the
    smaller maximum absorbs a shear from the other row.
    """
    ctx = M.ctx
    n = ctx.n
    R = M
    factors = []
    U = MMatrix.identity(ctx)
    while True:
        D = degree_matrix(R)
        conflict = None
        for a in range(1, n):
            if D.row_max[a - 1] is None:
                continue
            for b in range(a + 1, n + 1):
                if D.row_max[b - 1] is None:
                    continue
                if D.row_max[a - 1][1] == D.row_max[b - 1][1]:
                    conflict = (a, b, D.row_max[a - 1][1])
                    break
            if conflict:
                break
        if conflict is None:
            return SemiReduceResult(U, R, factors)
        a, b, c = conflict
        m_ac = R[a - 1, c - 1]
        m_bc = R[b - 1, c - 1]
        if D[a - 1, c - 1] >= D[b - 1, c - 1]:
            # reduce row a by row b
            N = int(m_ac.degree - m_bc.degree)
            alpha = -(m_ac.leading() / m_bc.leading())
            factor = ("upper", a, b, N, alpha.code)
        else:
            # reduce row b by row a
            N = int(m_bc.degree - m_ac.degree)
            alpha = -(m_bc.leading() / m_ac.leading())
            factor = ("lower", b, a, N, alpha.code)
        E = elementary_unit(ctx, factor)
        R = E * R
        U = E * U
        factors.append(factor)


def _column_euclid(work, vinv_rows, spec, k, n):
    """Column-reduce the k x n work matrix to [H 0], H lower triangular.

    Column operations are mirrored as inverse row operations on vinv_rows so
    that vinv_rows stays the inverse of the accumulated transform.
    """

    def swap_cols(i, j):
        for row in work:
            row[i], row[j] = row[j], row[i]
        vinv_rows[i], vinv_rows[j] = vinv_rows[j], vinv_rows[i]

    def add_col(src, dst, f):
        # col_dst += f * col_src  <=>  row_src -= f * row_dst on the inverse
        for row in work:
            row[dst] = row[dst] + row[src] * f
        vinv_rows[src] = [x - f * y for x, y in zip(vinv_rows[src], vinv_rows[dst])]

    for r in range(k):
        while True:
            nz = [c for c in range(r, n) if not work[r][c].is_zero()]
            if not nz:
                raise NotBasic("rows are not linearly independent")
            best = min(nz, key=lambda c: work[r][c].degree)
            if best != r:
                swap_cols(r, best)
            others = [c for c in range(r + 1, n) if not work[r][c].is_zero()]
            if not others:
                break
            for c in others:
                q, _ = work[r][c].divmod(work[r][r])
                add_col(r, c, -q)


def _unimodular_completion(rows, spec, n):
    """Given k basic rows over F[t], return n-k completion rows such that the
    stacked matrix lies in GL_n(F[t])."""
    k = len(rows)
    work = [list(r) for r in rows]
    one, zero = Poly.one(spec), Poly.zero(spec)
    vinv_rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
    _column_euclid(work, vinv_rows, spec, k, n)
    # work == [H 0] with H lower triangular; basic => det(H) is a nonzero
    # constant, hence every diagonal entry of H is a nonzero constant.
    for r in range(k):
        if work[r][r].degree != 0:
            raise NotBasic("maximal minors are not coprime")
    # rows k..n-1 of the inverse transform complete the input to GL_n
    return vinv_rows[k:]


def complete_to_unit(M):
    """Fill the zero rows of a delay-free M whose support rows are basic so
    that the result is a unit of M agreeing with M on the support rows."""
    ctx = M.ctx
    n = ctx.n
    spec = ctx.spec
    supp = M.support()
    if not M.is_delay_free():
        raise NotDelayFree("diagonal entry vanishes at t=0 on a support row")
    if not supp:
        return MMatrix.identity(ctx)
    k = len(supp)
    if k == n:
        if not is_unit(M):
            raise NotBasic("full-support matrix is not a unit")
        return M
    stacked = [list(M.mat.entries[i - 1]) for i in supp]
    if not is_basic(PolyMatrix(spec, stacked)):
        raise NotBasic("support rows do not form a basic matrix")
    completion = _unimodular_completion(stacked, spec, n)

    # clear the pivot columns of the completion rows at t = 0, using the
    # delay-free pivots m_{i_j i_j}
    for w in completion:
        for j, piv in enumerate(supp):
            v = w[piv - 1].constant_term()
            if v:
                f = v / stacked[j][piv - 1].constant_term()
                for c in range(n):
                    w[c] = w[c] - stacked[j][c].scale(f)

    # triangularize the completion rows over the free positions
    free = [c for c in range(1, n + 1) if c not in supp]
    for r, pos in enumerate(free):
        pivot_row = None
        for s in range(r, len(completion)):
            if completion[s][pos - 1].constant_term():
                pivot_row = s
                break
        assert pivot_row is not None, "unit completion lost invertibility at t=0"
        completion[r], completion[pivot_row] = completion[pivot_row], completion[r]
        lead = completion[r][pos - 1].constant_term()
        for s in range(r + 1, len(completion)):
            v = completion[s][pos - 1].constant_term()
            if v:
                f = v / lead
                completion[s] = [
                    x - y.scale(f) for x, y in zip(completion[s], completion[r])
                ]

    rows = []
    it = iter(completion)
    for a in range(1, n + 1):
        rows.append(list(M.mat.entries[a - 1]) if a in supp else next(it))
    N = MMatrix(ctx, PolyMatrix(spec, rows))
    assert is_unit(N), "completion failed to produce a unit"
    return N


def is_basic_member(M):
    """True iff M is delay-free and its nonzero rows form a basic matrix."""
    if not M.is_delay_free():
        return False
    supp = M.support()
    if not supp:
        return True
    stacked = PolyMatrix(M.ctx.spec, [M.mat.entries[i - 1] for i in supp])
    try:
        return is_basic(stacked)
    except Exception:
        return False
