"""The Grassmann graph G_q(n,k) and resolving-set verification.

Vertices are the k-subspaces of V(n,q); two are adjacent when they meet in
dimension k-1, and the graph distance is k minus the intersection
dimension.  A family S is resolving when no two vertices have the same
distance vector ("code") against S.

Verification computes intersection dimensions directly from stacked RREF
ranks rather than through incidence vectors, so it shares no machinery
with the integer-rank certificate and the two certification routes stay
independent.  Three interchangeable inner loops produce the code table:
a bitmask path for q = 2, a vectorized path for prime q with k = 2, and
a table-arithmetic fallback for everything else.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded, DimensionMismatch, InvalidArgs
from .gfq import FieldCtx
from .linalg import intersect_dim
from .subspaces import Subspace, SubspaceFamily, enumerate_k_subspaces, enumeration_budget


class GrassmannGraph:
    """Vertex list plus ordinal lookup; 2 <= k <= n/2 enforced."""

    __slots__ = ("ctx", "n", "k", "vertices", "vertex_index", "_dist_rows", "_adj")

    def __init__(self, ctx: FieldCtx, n: int, k: int):
        if not (2 <= k and 2 * k <= n):
            raise InvalidArgs(f"need 2 <= k <= n/2, got n={n} k={k}")
        vertices = enumerate_k_subspaces(ctx, n, k)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(
            self, "vertex_index", {s.basis.data: i for i, s in enumerate(vertices)}
        )
        object.__setattr__(self, "_dist_rows", None)
        object.__setattr__(self, "_adj", None)

    def __setattr__(self, name, value):
        raise AttributeError("GrassmannGraph is immutable")

    def __len__(self):
        return len(self.vertices)

    def ordinal(self, s: Subspace) -> int:
        try:
            return self.vertex_index[s.basis.data]
        except KeyError:
            raise InvalidArgs(f"{s!r} is not a vertex of G_{self.ctx.q}({self.n},{self.k})")

    def distance_rows(self) -> list:
        """All-pairs distance table: row i = bytes of distances from vertex i."""
        if self._dist_rows is None:
            fam = SubspaceFamily(self.vertices)
            object.__setattr__(self, "_dist_rows", codes_table(self.vertices, fam))
        return self._dist_rows

    def adjacency(self) -> list:
        """Neighbor ordinal lists, built from the distance-1 relation."""
        if self._adj is None:
            rows = self.distance_rows()
            adj = [[j for j, d in enumerate(row) if d == 1] for row in rows]
            object.__setattr__(self, "_adj", adj)
        return self._adj


@dataclass(frozen=True)
class Code:
    """Distance list of one vertex against a family, in family order."""

    dists: tuple


@dataclass(frozen=True)
class ResolvingVerdict:
    resolving: bool
    ordinals: tuple | None = None  # colliding (i, j), i < j, lexicographically first
    pair: tuple | None = None      # the colliding subspaces themselves

    def __bool__(self):
        return self.resolving


def distance(a: Subspace, b: Subspace) -> int:
    """k - dim(a ∩ b); zero iff a = b."""
    if a.ctx != b.ctx or a.n != b.n:
        raise DimensionMismatch("subspaces live in different spaces")
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
    return a.dim - intersect_dim(a.basis, b.basis)


def code_of(w: Subspace, family: SubspaceFamily) -> Code:
    return Code(tuple(distance(w, u) for u in family))


# --- code-table inner loops -------------------------------------------------
#
# All three produce, for each vertex A, the byte string of distances to each
# family member U.  They share one identity: reducing U's basis rows against
# A's RREF (subtract row i of A scaled by the entry at A's i-th pivot) leaves
# rows whose rank is exactly d(A, U) when dim A = dim U.


def _mask(row) -> int:
    m = 0
    for c, x in enumerate(row):
        if x:
            m |= 1 << c
    return m


def _codes_q2(vertices, family) -> list:
    fam = [tuple(_mask(r) for r in u.basis.data) for u in family]
    out = []
    for a in vertices:
        pv = tuple(zip(a.pivots, (_mask(r) for r in a.basis.data)))
        row_out = bytearray(len(fam))
        for j, urows in enumerate(fam):
            basis = []
            r = 0
            for u in urows:
                for p, vm in pv:
                    if (u >> p) & 1:
                        u ^= vm
                while u:
                    hb = u.bit_length()
                    for b in basis:
                        if b.bit_length() == hb:
                            u ^= b
                            break
                    else:
                        basis.append(u)
                        r += 1
                        break
            row_out[j] = r
        out.append(bytes(row_out))
    return out


def _codes_numpy_prime_k2(vertices, family, q: int, n: int) -> list:
    """Vectorized over vertices, grouped by pivot pattern; prime q, k = 2."""
    nv, m = len(vertices), len(family)
    groups = {}
    for i, s in enumerate(vertices):
        groups.setdefault(s.pivots, []).append(i)
    prepped = []
    for piv, idxs in groups.items():
        arr = np.array([vertices[i].basis.data for i in idxs], dtype=np.int64)
        prepped.append((piv, np.array(idxs), arr[:, 0, :], arr[:, 1, :]))
    codes = np.empty((nv, m), dtype=np.uint8)
    for j, u_sub in enumerate(family):
        u = np.array(u_sub.basis.data, dtype=np.int64)
        for (p0, p1), idxs, a0, a1 in prepped:
            r1 = (u[0] - a0 * u[0][p0] - a1 * u[0][p1]) % q
            r2 = (u[1] - a0 * u[1][p0] - a1 * u[1][p1]) % q
            nz1 = r1.any(axis=1)
            nz2 = r2.any(axis=1)
            # proportionality <=> every 2x2 minor of the two rows vanishes
            prop = np.ones(len(idxs), dtype=bool)
            for c1 in range(n):
                for c2 in range(c1 + 1, n):
                    prop &= (r1[:, c1] * r2[:, c2] - r1[:, c2] * r2[:, c1]) % q == 0
            rank = np.where(~(nz1 | nz2), 0, np.where(nz1 & nz2 & ~prop, 2, 1))
            codes[idxs, j] = rank.astype(np.uint8)
    return [codes[i].tobytes() for i in range(nv)]


def _codes_general(vertices, family, ctx: FieldCtx) -> list:
    add_t, mul_t, neg_t, inv_t = ctx.add_table, ctx.mul_table, ctx.neg_table, ctx.inv_table
    fam = [u.basis.data for u in family]
    out = []
    for a in vertices:
        pv = tuple(zip(a.pivots, a.basis.data))
        row_out = bytearray(len(fam))
        for j, urows in enumerate(fam):
            basis = []  # (lead column, row normalized to 1 at lead)
            r = 0
            for u in urows:
                for p, arow in pv:
                    f = u[p]
                    if f:
                        mrow = mul_t[neg_t[f]]
                        u = [add_t[x][mrow[y]] for x, y in zip(u, arow)]
                for lead, brow in basis:
                    f = u[lead]
                    if f:
                        mrow = mul_t[neg_t[f]]
                        u = [add_t[x][mrow[y]] for x, y in zip(u, brow)]
                for c, x in enumerate(u):
                    if x:
                        if x != 1:
                            mrow = mul_t[inv_t[x]]
                            u = [mrow[y] for y in u]
                        basis.append((c, u))
                        r += 1
                        break
            row_out[j] = r
        out.append(bytes(row_out))
    return out


def codes_table(vertices, family) -> list:
    """Distances of every vertex to every family member, one bytes row each."""
    ctx = vertices[0].ctx
    if ctx.q == 2:
        return _codes_q2(vertices, family)
    if ctx.e == 1 and all(s.dim == 2 for s in vertices) and all(u.dim == 2 for u in family):
        return _codes_numpy_prime_k2(vertices, family, ctx.q, vertices[0].n)
    return _codes_general(vertices, family, ctx)


def is_resolving(family: SubspaceFamily, g: GrassmannGraph) -> ResolvingVerdict:
    """Resolving verdict, or the lexicographically first colliding pair."""
    if len(family) == 0:
        raise InvalidArgs("family is empty")
    for s in family:
        g.ordinal(s)  # membership check
    if len(g) > enumeration_budget():
        raise BudgetExceeded(f"{len(g)} vertices exceed budget")
    rows = codes_table(g.vertices, family)
    first = {}
    best = None
    for i, key in enumerate(rows):
        prev = first.get(key)
        if prev is None:
            first[key] = i
        else:
            cand = (prev, i)
            if best is None or cand < best:
                best = cand
    if best is None:
        return ResolvingVerdict(True)
    a, b = best
    return ResolvingVerdict(False, best, (g.vertices[a], g.vertices[b]))


def bfs_distances_from(g: GrassmannGraph, src: int) -> list:
    """Shortest-path distances from one vertex ordinal to all others, by
    breadth-first search over the adjacency lists only."""
    adj = g.adjacency()
    dist = [-1] * len(g)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du + 1
                queue.append(v)
    if min(dist) < 0:
        raise InvalidArgs("graph is disconnected")  # cannot happen for 2 <= k <= n/2
    return dist


def bfs_distance(g: GrassmannGraph, a: Subspace, b: Subspace) -> int:
    """Shortest-path distance between two vertices; oracle for the
    algebraic distance formula."""
    src, dst = g.ordinal(a), g.ordinal(b)
    return bfs_distances_from(g, src)[dst]


def edge_list(g: GrassmannGraph) -> list:
    """Sorted 0-based ordinal pairs (u, v), u < v, of adjacent vertices."""
    rows = g.distance_rows()
    return [(u, v) for u in range(len(g)) for v in range(u + 1, len(g)) if rows[u][v] == 1]
