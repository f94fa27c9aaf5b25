"""Exact arithmetic in small finite fields F_q, q = p^m.

Elements are represented in the polynomial basis modulo a canonical
irreducible polynomial: the lexicographically smallest monic irreducible of
degree m over F_p, coefficients compared constant term first.  An element is
encoded as the integer sum(c_i * p^i) in [0, q); this encoding is also the
serialization format and the enumeration order used to fix the canonical
primitive element.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import DivisionByZero, FieldMismatch, NotADivisor


def _poly_mul_mod(a, b, modulus, p):
    # dense coefficient lists over F_p, constant term first
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    m = len(modulus) - 1
    for i in range(len(res) - 1, m - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(m + 1):
                res[i - m + j] = (res[i - m + j] - c * modulus[j]) % p
    res = res[:m] + [0] * max(0, m - len(res))
    return res[:m]


def _is_irreducible(poly, p):
    """Trial division by all monic polynomials of degree <= deg/2."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            div = list(tail) + [1]
            if _poly_divides(div, poly, p):
                return False
    return True


def _poly_divides(div, poly, p):
    rem = list(poly)
    dd = len(div) - 1
    inv_lead = pow(div[-1], p - 2, p)
    while len(rem) - 1 >= dd:
        if rem[-1] == 0:
            rem.pop()
            continue
        c = rem[-1] * inv_lead % p
        shift = len(rem) - 1 - dd
        for j in range(dd + 1):
            rem[shift + j] = (rem[shift + j] - c * div[j]) % p
        rem.pop()
    return all(c == 0 for c in rem)


def _canonical_modulus(p, m):
    """Lexicographically smallest monic irreducible of degree m over F_p."""
    for tail in itertools.product(range(p), repeat=m):
        poly = list(tail) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _factorize(n):
    factors = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors.append(d)
            n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return sorted(set(factors))


class FieldSpec:
    """A finite field F_q with q = p^m, with precomputed operation tables.

    Instances are interned per (p, m) so identity comparison is safe.
    """

    def __init__(self, p, m, _token=None):
        if _token is not _SPEC_TOKEN:
            raise TypeError("use FieldSpec.get(p, m)")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = _canonical_modulus(p, m)
        self._build_tables()
        self.alpha = FieldElement(self, self._alpha_code)

    @staticmethod
    def get(p, m=1):
        return _get_spec(p, m)

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        coeffs = []
        for code in range(q):
            c, vec = code, []
            for _ in range(m):
                c, r = divmod(c, p)
                vec.append(r)
            coeffs.append(vec)
        self._coeffs = coeffs

        def encode(vec):
            code = 0
            for c in reversed(vec):
                code = code * p + c
            return code

        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(q):
                add[a][b] = encode([(x + y) % p for x, y in zip(coeffs[a], coeffs[b])])
                mul[a][b] = encode(_poly_mul_mod(coeffs[a], coeffs[b], self.modulus, p))
        self._add = add
        self._mul = mul
        self._neg = [encode([(-x) % p for x in coeffs[a]]) for a in range(q)]

        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        self._inv = inv

        # smallest element (in integer encoding order) of order q - 1
        prime_factors = _factorize(q - 1) if q > 2 else []
        self._alpha_code = 1
        for a in range(2, q):
            if all(self._pow_code(a, (q - 1) // f) != 1 for f in prime_factors):
                self._alpha_code = a
                break

    def _pow_code(self, a, e):
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul[result][base]
            base = self._mul[base][base]
            e >>= 1
        return result

    def zero(self):
        return FieldElement(self, 0)

    def one(self):
        return FieldElement(self, 1)

    def element(self, code):
        if not 0 <= code < self.q:
            raise ValueError(f"element code {code} out of range for F_{self.q}")
        return FieldElement(self, code)

    def elements(self):
        return [FieldElement(self, c) for c in range(self.q)]

    def serialize(self):
        return (self.p, self.m)

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m})"


_SPEC_TOKEN = object()


@lru_cache(maxsize=None)
def _get_spec(p, m):
    if m < 1:
        raise ValueError("extension degree must be positive")
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    return FieldSpec(p, m, _token=_SPEC_TOKEN)


def field_spec_for_order(q):
    """FieldSpec for the prime power q, factoring q as p^m."""
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            qq = q
            while qq % p == 0:
                qq //= p
                m += 1
            if qq != 1:
                raise ValueError(f"{q} is not a prime power")
            return FieldSpec.get(p, m)
    raise ValueError(f"{q} is not a prime power")


class FieldElement:
    """Immutable element of a FieldSpec, identified by its integer code."""

    __slots__ = ("spec", "code")

    def __init__(self, spec, code):
        self.spec = spec
        self.code = code

    @property
    def coeffs(self):
        return tuple(self.spec._coeffs[self.code])

    def _check(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.spec is not self.spec:
            raise FieldMismatch(f"{self.spec!r} vs {other.spec!r}")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.spec, self.spec._add[self.code][other.code])

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.spec, self.spec._add[self.code][self.spec._neg[other.code]])

    def __neg__(self):
        return FieldElement(self.spec, self.spec._neg[self.code])

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.spec, self.spec._mul[self.code][other.code])

    def __truediv__(self, other):
        self._check(other)
        if other.code == 0:
            raise DivisionByZero("division by zero field element")
        return FieldElement(self.spec, self.spec._mul[self.code][self.spec._inv[other.code]])

    def inverse(self):
        if self.code == 0:
            raise DivisionByZero("zero has no inverse")
        return FieldElement(self.spec, self.spec._inv[self.code])

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(self.spec, self.spec._pow_code(self.code, e))

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and other.spec is self.spec
            and other.code == self.code
        )

    def __hash__(self):
        return hash((id(self.spec), self.code))

    def order(self):
        """Multiplicative order; raises on zero."""
        if self.code == 0:
            raise DivisionByZero("zero has no multiplicative order")
        k, acc = 1, self
        while acc.code != 1:
            acc = acc * self
            k += 1
        return k

    def __repr__(self):
        return f"F{self.spec.q}({self.code})"


def canonical_primitive(spec):
    """Smallest element in enumeration order with multiplicative order q - 1."""
    return spec.alpha


def root_of_unity(spec, n):
    """The canonical primitive n-th root of unity alpha^((q-1)/n)."""
    if n <= 0:
        raise ValueError("n must be positive")
    if (spec.q - 1) % n != 0:
        raise NotADivisor(f"{n} does not divide q - 1 = {spec.q - 1}")
    return spec.alpha ** ((spec.q - 1) // n)
