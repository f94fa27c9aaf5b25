"""Univariate polynomials over F_q and polynomial matrices.

Provides the encoder vocabulary: minors (fraction-free Bareiss determinants),
gcds, basicness, external degree, row degrees and minimality.  Polynomials are
stored as coefficient tuples, lowest degree first, with no trailing zeros; the
zero polynomial has an empty tuple and degree -inf.
"""

from __future__ import annotations

from itertools import combinations

from .errors import BothZero, FieldMismatch, RankDeficient, SizeError

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("spec", "coeffs")

    def __init__(self, spec, coeffs=()):
        while coeffs and not coeffs[-1]:
            coeffs = coeffs[:-1]
        self.spec = spec
        self.coeffs = tuple(coeffs)

    @staticmethod
    def from_ints(spec, ints):
        return Poly(spec, tuple(spec.element(c % spec.q if c >= 0 else c) for c in ints))

    @staticmethod
    def zero(spec):
        return Poly(spec, ())

    @staticmethod
    def one(spec):
        return Poly(spec, (spec.one(),))

    @staticmethod
    def monomial(spec, coeff, deg):
        if not coeff:
            return Poly(spec, ())
        return Poly(spec, (spec.zero(),) * deg + (coeff,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.spec.zero()

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other):
        if self.spec is not other.spec:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.spec, tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.spec, tuple(self.coeff(i) - other.coeff(i) for i in range(n)))

    def __neg__(self):
        return Poly(self.spec, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, Poly):  # scalar
            return self.scale(other)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly(self.spec, ())
        zero = self.spec.zero()
        res = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    res[i + j] = res[i + j] + a * b
        return Poly(self.spec, tuple(res))

    def scale(self, c):
        return Poly(self.spec, tuple(c * a for a in self.coeffs))

    def shift(self, k):
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return Poly(self.spec, (self.spec.zero(),) * k + self.coeffs)

    def divmod(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = len(other.coeffs) - 1
        inv_lead = other.leading().inverse()
        quo = [self.spec.zero()] * max(0, len(rem) - dd)
        while len(rem) - 1 >= dd and rem:
            if not rem[-1]:
                rem.pop()
                continue
            c = rem[-1] * inv_lead
            shift = len(rem) - 1 - dd
            quo[shift] = c
            for j in range(dd + 1):
                rem[shift + j] = rem[shift + j] - c * other.coeffs[j]
            rem.pop()
        return Poly(self.spec, tuple(quo)), Poly(self.spec, tuple(rem))

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.leading().inverse())

    def evaluate(self, x):
        acc = self.spec.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def constant_term(self):
        return self.coeff(0)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and other.spec is self.spec
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((id(self.spec), self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def to_ints(self):
        return [c.code for c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c.code}" if i == 0 else f"{c.code}*t^{i}")
        return "Poly(" + " + ".join(terms) + ")"


def poly_gcd(f, g):
    """Monic gcd via the Euclidean algorithm."""
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic()


class PolyMatrix:
    """Rectangular matrix of Poly entries over one field."""

    __slots__ = ("spec", "entries")

    def __init__(self, spec, entries):
        entries = tuple(tuple(row) for row in entries)
        if entries:
            width = len(entries[0])
            if any(len(row) != width for row in entries):
                raise SizeError("ragged matrix")
        for row in entries:
            for e in row:
                if e.spec is not spec:
                    raise FieldMismatch("matrix entries over different fields")
        self.spec = spec
        self.entries = entries

    @staticmethod
    def from_ints(spec, grid):
        return PolyMatrix(spec, [[Poly.from_ints(spec, e) for e in row] for row in grid])

    @staticmethod
    def identity(spec, n):
        one, zero = Poly.one(spec), Poly.zero(spec)
        return PolyMatrix(spec, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and other.spec is self.spec
            and other.entries == self.entries
        )

    def __hash__(self):
        return hash((id(self.spec), self.entries))

    def __mul__(self, other):
        if self.cols != other.rows:
            raise SizeError("incompatible shapes for matrix product")
        zero = Poly.zero(self.spec)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for l in range(self.cols):
                    a = self.entries[i][l]
                    if a:
                        acc = acc + a * other.entries[l][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.spec, out)

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise SizeError("incompatible shapes for matrix sum")
        return PolyMatrix(
            self.spec,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def submatrix(self, row_idx, col_idx):
        return PolyMatrix(
            self.spec, [[self.entries[i][j] for j in col_idx] for i in row_idx]
        )

    def transpose(self):
        return PolyMatrix(self.spec, list(zip(*self.entries)))

    def evaluate(self, x):
        """Entrywise evaluation; returns nested lists of FieldElement."""
        return [[e.evaluate(x) for e in row] for row in self.entries]

    def to_ints(self):
        return [[e.to_ints() for e in row] for row in self.entries]

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"


def determinant(mat):
    """Fraction-free Bareiss determinant over F_q[t]."""
    if mat.rows != mat.cols:
        raise SizeError("determinant of a non-square matrix")
    n = mat.rows
    spec = mat.spec
    if n == 0:
        return Poly.one(spec)
    a = [list(row) for row in mat.entries]
    sign = 1
    prev = Poly.one(spec)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Poly.zero(spec)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def minors(mat, k):
    """All k-minors in lexicographic row/column-subset order."""
    if k > min(mat.rows, mat.cols) or k < 0:
        raise SizeError(f"no {k}-minors of a {mat.rows}x{mat.cols} matrix")
    result = []
    for ri in combinations(range(mat.rows), k):
        for ci in combinations(range(mat.cols), k):
            result.append(determinant(mat.submatrix(ri, ci)))
    return result


def _maximal_minors(mat):
    mm = minors(mat, mat.rows)
    if all(m.is_zero() for m in mm):
        raise RankDeficient("all maximal minors vanish")
    return mm


def is_basic(mat):
    """True iff the gcd of all maximal minors is a nonzero constant."""
    if mat.rows > mat.cols:
        raise SizeError("basicness requires rows <= cols")
    mm = _maximal_minors(mat)
    g = None
    for m in mm:
        if m.is_zero():
            continue
        g = m if g is None else poly_gcd(g, m)
        if g.degree == 0:
            return True
    return g.degree == 0


def external_degree(mat):
    """Maximal degree over all maximal minors."""
    return max(m.degree for m in _maximal_minors(mat))


def row_degrees(mat):
    """Per-row maximal entry degree (-inf for zero rows)."""
    return [max((e.degree for e in row), default=NEG_INF) for row in mat.entries]


def is_minimal(mat):
    """True iff the row degree sum equals the external degree."""
    degs = row_degrees(mat)
    if any(d == NEG_INF for d in degs):
        raise RankDeficient("zero row in encoder")
    return sum(degs) == external_degree(mat)
