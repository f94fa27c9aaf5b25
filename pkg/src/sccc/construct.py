"""Synthesis of codes with prescribed Forney indices.

Three layers:
  * the modified rook problem -- placing residues r_1..r_k into the circulant
    table D_hat (entry (a,b) = (b-a) mod n) in distinct rows and columns,
    with constructive solvers for certified families and an exhaustive
    backtracking fallback;
  * prescribed-degree basic matrices -- a recursive construction of an
    (n-1) x n basic matrix whose i-th row degree is d_i with the rightmost
    maximal-degree entry in column j_i;
  * the end-to-end pipeline turning a list of Forney indices into a code,
    plus assembly of generators for arbitrary idempotent permutations via
    cycle decomposition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .codes import encoder_from_generator
from .errors import (
    ConstructiveCaseUnavailable,
    CycleLengthMismatch,
    Infeasible,
    InvalidParameters,
    InvalidSpec,
    RookInfeasible,
)
from .matring import is_basic_member, is_semi_reduced_mat, xi_inv, MMatrix
from .polymat import Poly, PolyMatrix
from .skew import RingContext, SkewPoly, _require_cyclic


@dataclass(frozen=True)
class RookInstance:
    """Residues r_1..r_k to be placed in the n x n circulant table."""

    n: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        k = len(self.values)
        if not 1 <= k <= self.n - 1:
            raise InvalidParameters(f"need 1 <= k <= n-1, got k={k}, n={self.n}")
        if any(not 0 <= v < self.n for v in self.values):
            raise InvalidParameters("residues must lie in 0..n-1")

    def to_dict(self):
        return {"n": self.n, "values": list(self.values)}


@dataclass(frozen=True)
class RookSolution:
    """Placements (i_l, j_l) with (j_l - i_l) mod n = r_l, distinct rows and
    distinct columns."""

    n: int
    values: tuple
    pairs: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        object.__setattr__(
            self, "pairs", tuple((int(i), int(j)) for i, j in self.pairs)
        )
        n = self.n
        rows = [i for i, _ in self.pairs]
        cols = [j for _, j in self.pairs]
        if len(self.pairs) != len(self.values):
            raise InvalidParameters("one placement required per residue")
        if any(not (1 <= i <= n and 1 <= j <= n) for i, j in self.pairs):
            raise InvalidParameters("placements must lie in 1..n")
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise InvalidParameters("rows and columns must be pairwise distinct")
        for (i, j), r in zip(self.pairs, self.values):
            if (j - i) % n != r:
                raise InvalidParameters(f"placement ({i},{j}) has residue {(j - i) % n}, not {r}")

    def to_dict(self):
        return {"pairs": [list(p) for p in self.pairs]}


@dataclass(frozen=True)
class DegreeSpec:
    """Pivot columns j_1..j_{n-1} (distinct, in 1..n) and row degrees
    d_1..d_{n-1}, with d_i > 0 whenever j_i < i."""

    n: int
    pivots: tuple
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "pivots", tuple(int(j) for j in self.pivots))
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        n = self.n
        if n < 2:
            raise InvalidSpec("n must be at least 2")
        if len(self.pivots) != n - 1 or len(self.degrees) != n - 1:
            raise InvalidSpec("expected n-1 pivots and n-1 degrees")
        if len(set(self.pivots)) != n - 1 or any(not 1 <= j <= n for j in self.pivots):
            raise InvalidSpec("pivots must be distinct values in 1..n")
        if any(d < 0 for d in self.degrees):
            raise InvalidSpec("degrees must be nonnegative")
        for i, (j, d) in enumerate(zip(self.pivots, self.degrees), start=1):
            if j < i and d == 0:
                raise InvalidSpec(f"pivot {j} left of row {i} requires a positive degree")


# ---------------------------------------------------------------------------
# the modified rook problem
# ---------------------------------------------------------------------------


def _pairs_from_xy(n, xs, ys):
    """Placements from a decomposition r = x + y with x, y injective:
    row -x mod n, column y, so that (j - i) mod n = x + y = r."""
    return [(((-x) % n) + 1, (y % n) + 1) for x, y in zip(xs, ys)]


def _solve_constant(inst):
    """All residues equal: walk down a diagonal of the table."""
    n, values = inst.n, inst.values
    if len(set(values)) != 1:
        return None
    g = values[0]
    xs = list(range(len(values)))
    ys = [(g - x) % n for x in xs]
    return _pairs_from_xy(n, xs, ys)


def _solve_two_valued(inst):
    """At most two distinct residues: order the group elements along the
    cosets of the subgroup generated by the difference beta; then x = the
    ordering with one entry dropped and y = (-x or beta - x) works."""
    n, values = inst.n, inst.values
    k = len(values)
    distinct = sorted(set(values))
    if len(distinct) > 2:
        return None
    # extend to n-1 entries (any sub-collection of a solution still solves)
    full = list(values) + [values[0]] * (n - 1 - k)
    a = full[0]
    shifted = [(v - a) % n for v in full]
    beta = next(v for v in shifted if v)  # nonzero since len(distinct) == 2
    # stable sort: zeros first, betas last
    order = sorted(range(n - 1), key=lambda l: shifted[l] != 0)
    f = sum(1 for v in shifted if v)  # number of beta entries

    ell = n // gcd(n, beta)  # additive order of beta
    reps = range(gcd(n, beta))  # coset representatives
    t = [(m + u * beta) % n for m in reps for u in range(ell)]

    xs0 = t[: n - f - 1] + t[n - f :]
    ys0 = [(-ti) % n for ti in t[: n - f - 1]] + [(beta - ti) % n for ti in t[n - f :]]
    # undo the sorting and the shift by a (folded into x)
    xs = [0] * (n - 1)
    ys = [0] * (n - 1)
    for slot, l in enumerate(order):
        xs[l] = (xs0[slot] + a) % n
        ys[l] = ys0[slot]
    pairs = _pairs_from_xy(n, xs, ys)
    return pairs[:k]


def _permutation_seed(n):
    """Injective x with y = s + x also injective, for s = (1, ..., n-1)."""
    if n % 2 == 1:
        xs = list(range(2, n)) + [0]
    else:
        xs = list(range(n // 2, n)) + list(range(1, n // 2))
    ys = [(s + x) % n for s, x in zip(range(1, n), xs)]
    return xs, ys


def _solve_permutation_type(inst):
    """All n-1 residues pairwise distinct: reduce to s = (1, ..., n-1) by a
    cyclic shift and apply the explicit seed decomposition."""
    n, values = inst.n, inst.values
    if len(values) != n - 1 or len(set(values)) != n - 1:
        return None
    alpha = next(v for v in range(n) if v not in set(values))
    xs_s, ys_s = _permutation_seed(n)  # s + xs_s = ys_s with s_t = t
    xs, ys = [], []
    for v in values:
        t = (v - alpha) % n  # position of v in the shifted chain
        xs.append((alpha - xs_s[t - 1]) % n)
        ys.append(ys_s[t - 1])
    return _pairs_from_xy(n, xs, ys)


def _solve_greedy(inst):
    """First-fit row scan; guaranteed whenever 2k <= n + 1 by the counting
    argument: fewer than half the rows can be blocked at each step."""
    n, values = inst.n, inst.values
    if 2 * len(values) > n + 1:
        return None
    used_rows, used_cols, pairs = set(), set(), []
    for r in values:
        for i in range(1, n + 1):
            if i in used_rows:
                continue
            j = ((i - 1 + r) % n) + 1
            if j in used_cols:
                continue
            used_rows.add(i)
            used_cols.add(j)
            pairs.append((i, j))
            break
        else:
            return None  # unreachable for 2k <= n+1
    return pairs


def _solve_exhaustive(inst):
    """Backtracking over rows in increasing order; the column is forced by
    the residue.  Returns None only after exhausting the search space."""
    n, values = inst.n, inst.values
    k = len(values)
    pairs = [None] * k
    used_rows, used_cols = set(), set()

    def place(l):
        if l == k:
            return True
        r = values[l]
        for i in range(1, n + 1):
            if i in used_rows:
                continue
            j = ((i - 1 + r) % n) + 1
            if j in used_cols:
                continue
            used_rows.add(i)
            used_cols.add(j)
            pairs[l] = (i, j)
            if place(l + 1):
                return True
            used_rows.discard(i)
            used_cols.discard(j)
        return False

    return pairs if place(0) else None


_CONSTRUCTIVE = (
    _solve_constant,
    _solve_two_valued,
    _solve_permutation_type,
    _solve_greedy,
)


def rook_solve(inst, strategy="auto"):
    """Solve the placement problem; strategy is one of exhaustive,
    constructive or auto (certified constructions first, then search)."""
    if strategy == "exhaustive":
        pairs = _solve_exhaustive(inst)
        if pairs is None:
            raise Infeasible(f"no placement exists for {inst.values} mod {inst.n}")
        return RookSolution(inst.n, inst.values, tuple(pairs))
    if strategy == "constructive":
        for solver in _CONSTRUCTIVE:
            pairs = solver(inst)
            if pairs is not None:
                return RookSolution(inst.n, inst.values, tuple(pairs))
        raise ConstructiveCaseUnavailable(
            f"no certified construction covers {inst.values} mod {inst.n}"
        )
    if strategy == "auto":
        for solver in _CONSTRUCTIVE:
            pairs = solver(inst)
            if pairs is not None:
                return RookSolution(inst.n, inst.values, tuple(pairs))
        return rook_solve(inst, "exhaustive")
    raise InvalidParameters(f"unknown strategy {strategy!r}")


def shift_to_first_rows(sol):
    """Cyclically relabel rows and columns so that every row index is at
    most n-1; residues are preserved.  The shift is the identity whenever
    row n is already unused."""
    n = sol.n
    rows = {i for i, _ in sol.pairs}
    if n not in rows:
        return sol
    alpha = next(a for a in range(1, n + 1) if a not in rows)
    pairs = tuple(
        (((i - alpha - 1) % n) + 1, ((j - alpha - 1) % n) + 1) for i, j in sol.pairs
    )
    return RookSolution(n, sol.values, pairs)


def rook_sweep(n, strategy="auto"):
    """Solve every residue multiset in Z_n^{n-1}; returns the list of
    unsolvable multisets (conjectured, and verified for n <= 10, to be
    empty)."""
    failures = []
    for values in itertools.combinations_with_replacement(range(n), n - 1):
        try:
            rook_solve(RookInstance(n, values), strategy)
        except Infeasible:
            failures.append(values)
    return failures


# ---------------------------------------------------------------------------
# prescribed-degree basic matrices
# ---------------------------------------------------------------------------


def _build(spec, K, fill):
    """K x (K+1) grid of zero polynomials, then apply fill(rows)."""
    zero = Poly.zero(spec)
    rows = [[zero] * (K + 1) for _ in range(K)]
    fill(rows)
    return rows


def _one_plus_t(spec, d):
    """The polynomial 1 + t^d for d > 0."""
    one = spec.one()
    return Poly(spec, (one,) + (spec.zero(),) * (d - 1) + (one,))


def _solve_degrees(spec, js, ds):
    """Rows of a basic K x (K+1) matrix realizing pivots js and degrees ds;
    recursion on the last row."""
    one = Poly.one(spec)
    zero = Poly.zero(spec)
    K = len(js)
    if K == 1:
        j, d = js[0], ds[0]
        if j == 1:
            return [[_one_plus_t(spec, d), one]] if d > 0 else [[one, zero]]
        return [[one, Poly.monomial(spec, spec.one(), d)]]

    jn, dn = js[-1], ds[-1]
    if jn == K + 1:
        sub = _solve_degrees(spec, js[:-1], ds[:-1])
        rows = [row + [zero] for row in sub]
        last = [zero] * (K + 1)
        last[K - 1] = one
        last[K] = Poly.monomial(spec, spec.one(), dn)
        rows.append(last)
        return rows

    if jn == K:
        capped = tuple(j if j <= K else K for j in js[:-1])
        sub = _solve_degrees(spec, capped, ds[:-1])
        if dn == 0:
            rows = [row[: K - 1] + [zero, row[K - 1]] for row in sub]
            last = [zero] * (K + 1)
            last[K - 1] = one
        else:
            rows = [row[: K - 1] + [row[K - 1], row[K - 1]] for row in sub]
            last = [zero] * (K + 1)
            last[K - 1] = _one_plus_t(spec, dn)
            last[K] = one
        rows.append(last)
        return rows

    # pivot of the last row lies strictly left of the diagonal
    alpha = jn  # < K, hence dn > 0 by the spec invariant
    beta = next((i for i in range(1, K) if js[i - 1] == K + 1), None)

    if beta is None:
        sub = _solve_degrees(spec, js[:-1], ds[:-1])
        rows = [row + [zero] for row in sub]
        last = [zero] * (K + 1)
        last[alpha - 1] = Poly.monomial(spec, spec.one(), dn)
        last[K - 1] = one
        last[K] = one
        rows.append(last)
        return rows

    if beta <= alpha:
        rerouted = tuple(alpha if i == beta else js[i - 1] for i in range(1, K))
        sub = _solve_degrees(spec, rerouted, ds[:-1])
        rows = [row + [row[alpha - 1]] for row in sub]
        last = [zero] * (K + 1)
        last[alpha - 1] = Poly.monomial(spec, spec.one(), dn)
        last[K - 1] = one
        rows.append(last)
        # the copied column may violate the strict degree bound to the right
        # of a pivot; cancel top coefficients column by column
        for l in range(alpha + 1, K + 1):
            i0 = next((i for i in range(1, K) if js[i - 1] == l), None)
            if i0 is None:
                continue
            d0 = ds[i0 - 1]
            entry = rows[i0 - 1][K]
            if entry.degree == d0:
                c = -(entry.leading() / rows[i0 - 1][l - 1].leading())
                for row in rows:
                    row[K] = row[K] + row[l - 1].scale(c)
        return rows

    # beta > alpha: fold the last degree into row beta, then subtract a
    # t^{d_beta} multiple of the last row to restore its shape
    rerouted = tuple(alpha if i == beta else js[i - 1] for i in range(1, K))
    bumped = tuple(
        dn + ds[i - 1] if i == beta else ds[i - 1] for i in range(1, K)
    )
    sub = _solve_degrees(spec, rerouted, bumped)
    rows = [row + [zero] for row in sub]
    last = [zero] * (K + 1)
    last[alpha - 1] = Poly.monomial(spec, spec.one(), dn)
    last[K - 1] = one
    last[K] = one
    rows.append(last)
    shift = Poly.monomial(spec, spec.one(), ds[beta - 1])
    rows[beta - 1] = [x - shift * y for x, y in zip(rows[beta - 1], last)]
    return rows


def prescribed_degree_matrix(spec, dspec):
    """Basic (n-1) x n matrix whose i-th row degree is d_i, rightmost maximal
    entry in column j_i, unit constant diagonal and below-diagonal entries
    vanishing at t = 0."""
    rows = _solve_degrees(spec, dspec.pivots, dspec.degrees)
    M = PolyMatrix(spec, rows)
    violations = prescribed_properties(M, dspec)
    assert not violations, f"construction violated {violations}"
    return M


def prescribed_properties(M, dspec):
    """Check the degree/shape contract; returns the list of violated clause
    labels (empty when the matrix conforms)."""
    bad = []
    n = dspec.n
    if M.rows != n - 1 or M.cols != n:
        return ["shape"]
    for i in range(1, n):
        j_i, d_i = dspec.pivots[i - 1], dspec.degrees[i - 1]
        row = M.entries[i - 1]
        if any(row[j - 1].degree > d_i for j in range(1, j_i)):
            bad.append(f"(i) row {i}")
        if row[j_i - 1].degree != d_i:
            bad.append(f"(ii) row {i}")
        if any(row[j - 1].degree >= d_i for j in range(j_i + 1, n + 1)):
            bad.append(f"(iii) row {i}")
        if row[i - 1].constant_term().code != 1:
            bad.append(f"(iv) row {i}")
        if any(row[j - 1].constant_term() for j in range(1, i)):
            bad.append(f"(v) row {i}")
        for j in range(1, i):
            e = row[j - 1]
            if e.is_zero():
                continue
            if j != j_i or e != Poly.monomial(M.spec, M.spec.one(), d_i):
                bad.append(f"(vi) row {i} col {j}")
        if j_i < i:
            if any(row[j - 1].degree > 0 for j in range(1, n + 1) if j != j_i):
                bad.append(f"(vii) row {i}")
    return bad


# ---------------------------------------------------------------------------
# end-to-end synthesis
# ---------------------------------------------------------------------------


def construct_code(ctx, indices, strategy="auto"):
    """Code over ctx with the given Forney indices.

    Splits each index as d*n + r, places the residues in the circulant table,
    normalizes the placement into the first n-1 rows, pads it with the
    smallest free row/column pairs, realizes the induced degree data as a
    basic matrix, and extracts a minimal encoder from the resulting ideal
    generator.
    """
    _require_cyclic(ctx)
    ctx.omega  # noqa: B018 -- fails fast when n does not divide q - 1
    n = ctx.n
    indices = [int(v) for v in indices]
    k = len(indices)
    if not 1 <= k <= n - 1:
        raise InvalidParameters(f"need 1 <= k <= n-1 Forney indices, got {k}")
    if any(v < 0 for v in indices):
        raise InvalidParameters("Forney indices must be nonnegative")

    residues = [v % n for v in indices]
    try:
        sol = rook_solve(RookInstance(n, residues), strategy)
    except Infeasible as exc:
        raise RookInfeasible(
            f"residues {residues} mod {n} admit no placement; "
            "no code with these Forney indices can be built this way"
        ) from exc
    sol = shift_to_first_rows(sol)

    # pad to n-1 placements with the smallest free rows/columns
    placements = [
        {"row": i, "col": j, "nu": nu, "orig": l}
        for l, ((i, j), nu) in enumerate(zip(sol.pairs, indices))
    ]
    used_rows = {p["row"] for p in placements}
    used_cols = {p["col"] for p in placements}
    for _ in range(n - 1 - k):
        i = next(r for r in range(1, n) if r not in used_rows)
        j = next(c for c in range(1, n + 1) if c not in used_cols)
        used_rows.add(i)
        used_cols.add(j)
        placements.append({"row": i, "col": j, "nu": (j - i) % n, "orig": None})

    placements.sort(key=lambda p: p["row"])  # row l now literally is l
    pivots, degrees = [], []
    for l, p in enumerate(placements, start=1):
        j = p["col"]
        d_hat = p["nu"] // n
        pivots.append(j)
        degrees.append(d_hat + 1 if j < l else d_hat)
    dspec = DegreeSpec(n, tuple(pivots), tuple(degrees))
    top = prescribed_degree_matrix(ctx.spec, dspec)

    zero_row = (Poly.zero(ctx.spec),) * n
    rows = [
        list(row) if placements[a]["orig"] is not None else list(zero_row)
        for a, row in enumerate(top.entries)
    ]
    rows.append(list(zero_row))
    N = MMatrix(ctx, PolyMatrix(ctx.spec, rows))
    assert is_semi_reduced_mat(N) and is_basic_member(N)

    code = encoder_from_generator(xi_inv(N))
    assert sorted(code.forney) == sorted(indices)
    return code


def _cycles(perm):
    """Disjoint cycles of a 1-based permutation, each starting at its
    smallest element, ordered by that element."""
    seen = set()
    cycles = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        cur = perm[start - 1]
        while cur != start:
            cycle.append(cur)
            seen.add(cur)
            cur = perm[cur - 1]
        cycles.append(tuple(cycle))
    return cycles


def construct_general(ctx, generators):
    """Assemble a generator of A[z;sigma] for an arbitrary permutation sigma
    from one generator per cycle, each given as a matrix of the cycle-length
    ring; the result is semi-reduced/basic iff every factor is."""
    cycles = _cycles(ctx.perm)
    generators = list(generators)
    if len(generators) != len(cycles):
        raise CycleLengthMismatch(
            f"sigma has {len(cycles)} cycles but {len(generators)} generators were given"
        )
    total = SkewPoly.zero(ctx)
    for cycle, M in zip(cycles, generators):
        L = len(cycle)
        if not isinstance(M, MMatrix) or M.ctx.n != L or M.ctx.spec is not ctx.spec:
            raise CycleLengthMismatch(
                f"cycle {cycle} needs a {L}x{L} matrix over F_{ctx.spec.q}"
            )
        local = xi_inv(M)
        coeffs = []
        for vec in local.coeffs:
            out = list(ctx.zero_vector())
            for a, pos in enumerate(cycle):
                out[pos - 1] = vec[a]
            coeffs.append(tuple(out))
        total = total + SkewPoly(ctx, coeffs)
    return total


def local_context(ctx, length):
    """Ring context of one cycle factor: same field, standard cycle of the
    given length."""
    return RingContext(ctx.spec, length)
