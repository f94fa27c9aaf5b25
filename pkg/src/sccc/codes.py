"""Convolutional code objects: encoder extraction from ideal generators,
Forney indices, and free distance by shortest-path search on the encoder's
state graph.

The free distance uses a controller-style realization: one shift register of
length nu_i per encoder row.  Branch metrics are Hamming weights of the
emitted n-tuples; the minimum-weight nonzero codeword is the cheapest path
leaving the zero state on a nonzero input and returning to it.  Correct for
basic (hence non-catastrophic) minimal encoders.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from .errors import (
    NotBasic,
    NotDelayFree,
    NotMinimal,
    NotSemiReduced,
    StateSpaceTooLarge,
)
from .polymat import PolyMatrix, external_degree, is_basic, is_minimal, row_degrees
from .skew import SkewPoly, component, is_delay_free, is_semi_reduced_skew, p_inverse, support


@dataclass(frozen=True)
class ConvCode:
    """A convolutional code given by a basic minimal encoder G (k x n in z)."""

    G: PolyMatrix
    k: int
    n: int
    delta: int
    forney: tuple
    generator: Optional[SkewPoly] = dc_field(default=None, compare=False)

    @property
    def spec(self):
        return self.G.spec

    def to_dict(self):
        return {
            "q": self.spec.q,
            "n": self.n,
            "k": self.k,
            "forney": list(self.forney),
            "G": self.G.to_ints(),
        }

    @staticmethod
    def from_encoder(G, generator=None):
        if not is_basic(G):
            raise NotBasic("encoder is not basic")
        if not is_minimal(G):
            raise NotMinimal("encoder is not minimal")
        degs = [int(d) for d in row_degrees(G)]
        return ConvCode(
            G=G,
            k=G.rows,
            n=G.cols,
            delta=int(external_degree(G)),
            forney=tuple(sorted(degs)),
            generator=generator,
        )


def encoder_from_generator(g):
    """Minimal encoder of the code generated by a semi-reduced, delay-free,
    basic skew polynomial: rows are the identified components over the sorted
    support."""
    if not is_delay_free(g):
        raise NotDelayFree("generator is not delay-free")
    if not is_semi_reduced_skew(g):
        raise NotSemiReduced("generator is not semi-reduced")
    supp = support(g)
    rows = []
    for a in supp:
        rows.append(p_inverse(component(g, a)).entries[0])
    G = PolyMatrix(g.ctx.spec, rows)
    if not is_basic(G):
        raise NotBasic("generator does not yield a basic encoder")
    code = ConvCode.from_encoder(G, generator=g)
    return code


def forney_indices(code):
    return list(code.forney)


def code_degree(code):
    return code.delta


def codeword_weight(polys):
    """Total Hamming weight of a polynomial vector."""
    return sum(sum(1 for c in p.coeffs if c) for p in polys)


def encode_message(code, message):
    """message: list of k Polys in z; returns the codeword u*G as n Polys."""
    u = PolyMatrix(code.spec, [list(message)])
    return list((u * code.G).entries[0])


def _digit_table(count, width, q):
    """count x width array of base-q digits, least significant first."""
    idx = np.arange(count, dtype=np.int64)
    out = np.empty((count, width), dtype=np.int64)
    for pos in range(width):
        out[:, pos] = (idx // q**pos) % q
    return out


def free_distance(code, max_states=10**6):
    """Minimum Hamming weight over all nonzero codewords."""
    spec = code.spec
    q = spec.q
    k, n = code.k, code.n
    nus = [max(len(p.coeffs) - 1 for p in row) for row in code.G.entries]
    delta = sum(nus)
    if q**delta > max_states:
        raise StateSpaceTooLarge(f"q^delta = {q**delta} exceeds {max_states}")
    add = np.array(spec._add, dtype=np.int16)
    mul = np.array(spec._mul, dtype=np.int16)
    coef = [[p.to_ints() for p in row] for row in code.G.entries]

    def gcoef(i, j, d):
        c = coef[i][j]
        return c[d] if d < len(c) else 0

    Q = q**k
    if Q > max_states:
        raise StateSpaceTooLarge(f"q^k = {Q} exceeds {max_states}")
    U = _digit_table(Q, k, q)
    out0 = np.zeros((Q, n), dtype=np.int16)
    for i in range(k):
        for j in range(n):
            c = gcoef(i, j, 0)
            if c:
                out0[:, j] = add[out0[:, j], mul[c, U[:, i]]]

    if delta == 0:
        # block code: every nonzero input word is a codeword
        w = np.count_nonzero(out0, axis=1)
        return int(w[1:].min())

    S = q**delta
    offsets = list(itertools.accumulate([0] + nus[:-1]))
    D = _digit_table(S, delta, q)

    contrib = np.zeros((S, n), dtype=np.int16)
    for i in range(k):
        for d in range(1, nus[i] + 1):
            reg = D[:, offsets[i] + d - 1]
            for j in range(n):
                c = gcoef(i, j, d)
                if c:
                    contrib[:, j] = add[contrib[:, j], mul[c, reg]]

    # branch weights: emitted tuple = contrib(state) + out0(input)
    emitted = add[contrib[:, None, :], out0[None, :, :]]
    wts = np.count_nonzero(emitted, axis=2).astype(np.int64)

    # next state: shift each row register by one, feeding the input digit
    state_part = np.zeros(S, dtype=np.int64)
    for i in range(k):
        for d in range(1, nus[i]):
            state_part += D[:, offsets[i] + d - 1] * q ** (offsets[i] + d)
    input_part = np.zeros(Q, dtype=np.int64)
    for i in range(k):
        if nus[i] > 0:
            input_part += U[:, i] * q ** offsets[i]
    nxt = state_part[:, None] + input_part[None, :]

    # reversed graph: edge nxt -> state with the branch weight, minimum over
    # parallel edges; Dijkstra from the zero state then yields, for every s,
    # the cheapest forward path s -> 0.  Zero-weight branches are real edges,
    # so store the combined metric C*w + 1 per edge (C > any simple path
    # length); the optimum path under it is simple and weight-minimal, and
    # floor(dist / C) recovers the exact Hamming cost.
    C = S + 1
    rows = nxt.ravel()
    cols = np.repeat(np.arange(S, dtype=np.int64), Q)
    w = wts.ravel()
    order = np.lexsort((w, cols, rows))
    rows, cols, w = rows[order], cols[order], w[order]
    keep = np.ones(len(rows), dtype=bool)
    keep[1:] = (rows[1:] != rows[:-1]) | (cols[1:] != cols[:-1])
    graph = csr_matrix((w[keep] * C + 1, (rows[keep], cols[keep])), shape=(S, S))
    dist = dijkstra(graph, indices=0, directed=True)
    dist_to_zero = np.floor_divide(dist, C)

    first = wts[0, 1:].astype(np.float64) + dist_to_zero[nxt[0, 1:]]
    return int(first.min())
