"""The skew polynomial ring A[z;sigma] over A = F x ... x F (n copies).

Coefficients sit on the right of powers of z and multiplication is twisted by
a*z = z*sigma(a).  The automorphism sigma permutes the primitive idempotents
e_1..e_n; the default permutation is the full cycle e_i -> e_{i+1}.  For the
default cycle, and when n divides q - 1, the ring is identified with F[z]^n
through evaluation at the powers 1, w, ..., w^{n-1} of the canonical n-th
root of unity w.
"""

from __future__ import annotations

from .errors import ContextMismatch, NoRootOfUnity, NotCyclicSigma
from .field import root_of_unity
from .polymat import Poly, PolyMatrix


def default_cycle(n):
    """The permutation i -> i + 1 (mod n) on {1..n}, as a 1-based tuple."""
    return tuple((i % n) + 1 for i in range(1, n + 1))


class RingContext:
    """Field, length n and idempotent permutation fixing one ring A[z;sigma]."""

    __slots__ = ("spec", "n", "perm", "_omega", "_order")

    def __init__(self, spec, n, perm=None):
        if n < 1:
            raise ValueError("length n must be at least 1")
        if perm is None:
            perm = default_cycle(n)
        perm = tuple(perm)
        if sorted(perm) != list(range(1, n + 1)):
            raise ValueError("sigma must be a permutation of 1..n")
        self.spec = spec
        self.n = n
        self.perm = perm
        self._omega = None
        self._order = None

    @property
    def is_default_cycle(self):
        return self.perm == default_cycle(self.n)

    @property
    def omega(self):
        """Canonical primitive n-th root of unity; requires n | q - 1."""
        if self._omega is None:
            if (self.spec.q - 1) % self.n != 0:
                raise NoRootOfUnity(f"n = {self.n} does not divide q - 1 = {self.spec.q - 1}")
            self._omega = root_of_unity(self.spec, self.n)
        return self._omega

    def sigma_power(self, a, j):
        """sigma^j applied to the idempotent index a (1-based)."""
        for _ in range(j % self._perm_order()):
            a = self.perm[a - 1]
        return a

    def _perm_order(self):
        if self._order is None:
            order = 1
            cur = self.perm
            ident = tuple(range(1, self.n + 1))
            while cur != ident:
                cur = tuple(self.perm[i - 1] for i in cur)
                order += 1
            self._order = order
        return self._order

    def sigma_vector(self, vec):
        """sigma applied to a coefficient vector [a_1..a_n] of A.

        sigma(e_i) = e_{perm(i)} means the entry at position i moves to
        position perm(i).
        """
        out = [None] * self.n
        for i in range(1, self.n + 1):
            out[self.perm[i - 1] - 1] = vec[i - 1]
        return tuple(out)

    def zero_vector(self):
        return (self.spec.zero(),) * self.n

    def __eq__(self, other):
        return (
            isinstance(other, RingContext)
            and other.spec is self.spec
            and other.n == self.n
            and other.perm == self.perm
        )

    def __hash__(self):
        return hash((id(self.spec), self.n, self.perm))

    def __repr__(self):
        return f"RingContext(q={self.spec.q}, n={self.n})"


class SkewPoly:
    """Element of A[z;sigma]: a tuple of A-coefficients, z^0 first."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=()):
        coeffs = [tuple(v) for v in coeffs]
        for v in coeffs:
            if len(v) != ctx.n:
                raise ValueError("coefficient vector of wrong length")
        while coeffs and not any(coeffs[-1]):
            coeffs.pop()
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    @staticmethod
    def from_ints(ctx, grid):
        """grid[nu] is the list of n integer-coded entries of the z^nu coefficient."""
        spec = ctx.spec
        return SkewPoly(ctx, [tuple(spec.element(c) for c in v) for v in grid])

    @staticmethod
    def zero(ctx):
        return SkewPoly(ctx, ())

    @staticmethod
    def one(ctx):
        return SkewPoly(ctx, ((ctx.spec.one(),) * ctx.n,))

    @staticmethod
    def idempotent(ctx, a):
        """The primitive idempotent e_a as a skew polynomial."""
        vec = [ctx.spec.zero()] * ctx.n
        vec[a - 1] = ctx.spec.one()
        return SkewPoly(ctx, (tuple(vec),))

    @staticmethod
    def z_power(ctx, j):
        zero = (ctx.spec.zero(),) * ctx.n
        return SkewPoly(ctx, (zero,) * j + ((ctx.spec.one(),) * ctx.n,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self):
        return not self.coeffs

    def coeff(self, nu):
        if 0 <= nu < len(self.coeffs):
            return self.coeffs[nu]
        return self.ctx.zero_vector()

    def _check(self, other):
        if other.ctx != self.ctx:
            raise ContextMismatch("skew polynomials in different rings")

    def __add__(self, other):
        self._check(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(
            self.ctx,
            [tuple(x + y for x, y in zip(self.coeff(i), other.coeff(i))) for i in range(m)],
        )

    def __sub__(self, other):
        self._check(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(
            self.ctx,
            [tuple(x - y for x, y in zip(self.coeff(i), other.coeff(i))) for i in range(m)],
        )

    def __neg__(self):
        return SkewPoly(self.ctx, [tuple(-x for x in v) for v in self.coeffs])

    def __mul__(self, other):
        return skew_mul(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, SkewPoly)
            and other.ctx == self.ctx
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def to_ints(self):
        return [[x.code for x in v] for v in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return "SkewPoly(0)"
        parts = []
        for nu, v in enumerate(self.coeffs):
            if any(v):
                vec = "[" + ",".join(str(x.code) for x in v) + "]"
                parts.append(vec if nu == 0 else (f"z*{vec}" if nu == 1 else f"z^{nu}*{vec}"))
        return "SkewPoly(" + " + ".join(parts) + ")"


def skew_mul(f, g):
    """Product under a*z = z*sigma(a): (z^i a)(z^j b) = z^{i+j} sigma^j(a) b."""
    f._check(g)
    ctx = f.ctx
    if f.is_zero() or g.is_zero():
        return SkewPoly.zero(ctx)
    out = [list(ctx.zero_vector()) for _ in range(len(f.coeffs) + len(g.coeffs) - 1)]
    for j, b in enumerate(g.coeffs):
        if not any(b):
            continue
        for i, a in enumerate(f.coeffs):
            if not any(a):
                continue
            twisted = a
            for _ in range(j):
                twisted = ctx.sigma_vector(twisted)
            tgt = out[i + j]
            for pos in range(ctx.n):
                if twisted[pos] and b[pos]:
                    tgt[pos] = tgt[pos] + twisted[pos] * b[pos]
    return SkewPoly(ctx, [tuple(v) for v in out])


def component(g, a):
    """The a-th component e_a * g."""
    ctx = g.ctx
    out = []
    for nu, v in enumerate(g.coeffs):
        vec = list(ctx.zero_vector())
        pos = ctx.sigma_power(a, nu)
        vec[pos - 1] = v[pos - 1]
        out.append(tuple(vec))
    return SkewPoly(ctx, out)


def support(g):
    """Indices a with e_a * g != 0, as a sorted list."""
    ctx = g.ctx
    found = set()
    for nu, v in enumerate(g.coeffs):
        for a in range(1, ctx.n + 1):
            if a not in found and v[ctx.sigma_power(a, nu) - 1]:
                found.add(a)
    return sorted(found)


def is_delay_free(g):
    """True iff the constant term has the same support as g."""
    const = g.coeff(0)
    const_support = {a for a in range(1, g.ctx.n + 1) if const[a - 1]}
    return const_support == set(support(g))


def leading_idempotent_index(g, a):
    """Idempotent index of the leading coefficient of the component e_a*g."""
    comp = component(g, a)
    if comp.is_zero():
        return None
    return g.ctx.sigma_power(a, int(comp.degree))


def is_semi_reduced_skew(g):
    """Leading coefficients of nonzero components lie in distinct ideals."""
    seen = set()
    for a in support(g):
        idx = leading_idempotent_index(g, a)
        if idx in seen:
            return False
        seen.add(idx)
    return True


def idempotent_poly(ctx, a):
    """The polynomial of degree < n with value 1 at w^{a-1}, 0 at other w^i."""
    spec = ctx.spec
    w = ctx.omega  # raises NoRootOfUnity when absent
    point = w ** (a - 1)
    num = Poly.one(spec)
    denom = spec.one()
    for i in range(ctx.n):
        if i == a - 1:
            continue
        other = w**i
        num = num * Poly(spec, (-other, spec.one()))
        denom = denom * (point - other)
    return num.scale(denom.inverse())


def _require_cyclic(ctx):
    if not ctx.is_default_cycle:
        raise NotCyclicSigma("operation defined only for the standard cycle")


def p_map(ctx, polys):
    """Identify a vector of n polynomials in z with an element of A[z;sigma].

    Coefficientwise: the z^nu coefficient vector (v_0..v_{n-1}) becomes the
    A-element [f(1), f(w), ..., f(w^{n-1})] with f = sum v_i x^i.  Depends
    only on the field and n (through w), not on the permutation sigma.
    """
    if len(polys) != ctx.n:
        raise ValueError("expected a vector of n polynomials")
    w = ctx.omega
    points = [w**i for i in range(ctx.n)]
    top = max((p.degree for p in polys if not p.is_zero()), default=-1)
    if top < 0:
        return SkewPoly.zero(ctx)
    coeffs = []
    for nu in range(int(top) + 1):
        f = Poly(ctx.spec, tuple(p.coeff(nu) for p in polys))
        coeffs.append(tuple(f.evaluate(pt) for pt in points))
    return SkewPoly(ctx, coeffs)


def p_inverse(g):
    """Inverse of p_map: a 1 x n PolyMatrix of polynomials in z."""
    ctx = g.ctx
    idems = [idempotent_poly(ctx, a) for a in range(1, ctx.n + 1)]
    zero = Poly.zero(ctx.spec)
    rows = [[] for _ in range(ctx.n)]  # rows[i] = z-coefficients of entry i
    for v in g.coeffs:
        f = zero
        for a in range(1, ctx.n + 1):
            if v[a - 1]:
                f = f + idems[a - 1].scale(v[a - 1])
        for i in range(ctx.n):
            rows[i].append(f.coeff(i))
    return PolyMatrix(ctx.spec, [[Poly(ctx.spec, tuple(r)) for r in rows]])
