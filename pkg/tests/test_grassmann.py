"""Grassmann graph: distances, code tables, resolving verdicts, BFS oracle."""

import random

import pytest

from grassmd.errors import BudgetExceeded, DimensionMismatch, InvalidArgs
from grassmd.gfq import field_new
from grassmd.grassmann import (
    GrassmannGraph,
    bfs_distance,
    bfs_distances_from,
    code_of,
    codes_table,
    distance,
    edge_list,
    is_resolving,
)
from grassmd.linalg import intersect_dim
from grassmd.subspaces import Subspace, SubspaceFamily, gaussian_binomial


def graph(q, n, k):
    return GrassmannGraph(field_new(q), n, k)


def test_distance_pinned():
    ctx = field_new(2)
    a = Subspace.from_rows(ctx, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    b = Subspace.from_rows(ctx, 4, [[1, 0, 0, 0], [0, 0, 1, 0]])
    c = Subspace.from_rows(ctx, 4, [[0, 0, 1, 0], [0, 0, 0, 1]])
    assert distance(a, a) == 0
    assert distance(a, b) == 1
    assert distance(a, c) == 2
    assert distance(b, c) == 1


def test_distance_requires_matching_shapes():
    ctx = field_new(2)
    a = Subspace.from_rows(ctx, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    b = Subspace.from_rows(ctx, 4, [[1, 0, 0, 0]])
    with pytest.raises(DimensionMismatch):
        distance(a, b)
    c = Subspace.from_rows(ctx, 5, [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]])
    with pytest.raises(DimensionMismatch):
        distance(a, c)


@pytest.mark.parametrize("q,n,k", [(2, 4, 2), (3, 4, 2), (2, 5, 2), (2, 6, 3)])
def test_graph_vertex_count_and_ordinals(q, n, k):
    g = graph(q, n, k)
    assert len(g.vertices) == gaussian_binomial(n, k, q)
    for i in (0, 1, len(g.vertices) - 1):
        assert g.ordinal(g.vertices[i]) == i


@pytest.mark.parametrize("n,k", [(4, 1), (4, 3), (3, 2), (5, 3)])
def test_graph_rejects_out_of_range_k(n, k):
    with pytest.raises(InvalidArgs):
        graph(2, n, k)


@pytest.mark.parametrize("q,n,k", [(2, 4, 2), (3, 4, 2), (2, 6, 3)])
def test_distance_rows_structure(q, n, k):
    g = graph(q, n, k)
    rows = g.distance_rows()
    nv = len(g.vertices)
    deg = q * gaussian_binomial(k, 1, q) * gaussian_binomial(n - k, 1, q)
    assert len(rows) == nv
    assert max(max(r) for r in rows) == k  # diameter
    for i in range(nv):
        assert rows[i][i] == 0
        assert sum(1 for d in rows[i] if d == 1) == deg  # regular graph
    for i in range(0, nv, 7):
        for j in range(0, nv, 5):
            assert rows[i][j] == rows[j][i]


def test_distance_agrees_with_intersection_dim():
    g = graph(3, 4, 2)
    rng = random.Random(3)
    vs = g.vertices
    for _ in range(200):
        a, b = rng.choice(vs), rng.choice(vs)
        assert distance(a, b) == 2 - intersect_dim(a.basis, b.basis)


@pytest.mark.parametrize("q,n,k", [(2, 4, 2), (3, 4, 2), (4, 4, 2), (2, 6, 3)])
def test_codes_table_matches_per_vertex_codes(q, n, k):
    # codes_table picks a specialized inner loop depending on (q, k); the
    # element-by-element route through distance() is the reference
    g = graph(q, n, k)
    fam = SubspaceFamily(list(g.vertices[:7]))
    rows = codes_table(g.vertices, fam)
    rng = random.Random(q * 100 + n)
    picks = [rng.randrange(len(g.vertices)) for _ in range(25)]
    for i in picks:
        assert tuple(rows[i]) == code_of(g.vertices[i], fam).dists


def test_code_of_matches_distance():
    g = graph(2, 5, 2)
    fam = SubspaceFamily([g.vertices[0], g.vertices[10], g.vertices[100]])
    w = g.vertices[42]
    assert code_of(w, fam).dists == tuple(distance(w, m) for m in fam.members)


def test_full_vertex_set_is_resolving():
    g = graph(2, 4, 2)
    verdict = is_resolving(SubspaceFamily(list(g.vertices)), g)
    assert verdict.resolving and bool(verdict)
    assert verdict.ordinals is None and verdict.pair is None


def test_single_member_collision_is_lexicographically_first():
    g = graph(2, 4, 2)
    fam = SubspaceFamily([g.vertices[0]])
    verdict = is_resolving(fam, g)
    assert not verdict.resolving and not bool(verdict)
    # recompute the first colliding pair by brute force over all codes
    codes = [code_of(v, fam).dists for v in g.vertices]
    expected = None
    for i in range(len(codes)):
        for j in range(i + 1, len(codes)):
            if codes[i] == codes[j]:
                expected = (i, j)
                break
        if expected:
            break
    assert verdict.ordinals == expected
    a, b = verdict.pair
    assert g.ordinal(a) == expected[0] and g.ordinal(b) == expected[1]
    assert code_of(a, fam).dists == code_of(b, fam).dists


@pytest.mark.parametrize("q,n,k", [(2, 4, 2), (3, 4, 2), (2, 5, 2)])
def test_resolving_verdict_matches_profile_distinctness(q, n, k):
    # independent route: a family resolves iff the intersection-dimension
    # profiles of all vertices against it are pairwise distinct
    g = graph(q, n, k)
    rng = random.Random(90 * q + n)
    for size in (1, 2, 3, 5, 8):
        for _ in range(4):
            picks = rng.sample(range(len(g.vertices)), size)
            members = [g.vertices[i] for i in picks]
            profiles = [
                tuple(intersect_dim(v.basis, m.basis) for m in members)
                for v in g.vertices
            ]
            expect = len(set(profiles)) == len(profiles)
            assert is_resolving(SubspaceFamily(members), g).resolving == expect


def test_code_against_all_vertices_has_one_zero():
    g = graph(2, 4, 2)
    fam = SubspaceFamily(list(g.vertices))
    for i in (0, 9, 34):
        dists = code_of(g.vertices[i], fam).dists
        assert dists.count(0) == 1 and dists[i] == 0


def test_resolving_monotone_under_superset():
    g = graph(2, 4, 2)
    base = [g.vertices[i] for i in (0, 1, 2, 7, 9, 11)]
    assert is_resolving(SubspaceFamily(base), g).resolving
    bigger = base + [g.vertices[20]]
    assert is_resolving(SubspaceFamily(bigger), g).resolving


def test_is_resolving_rejects_bad_input():
    g = graph(2, 4, 2)
    with pytest.raises(InvalidArgs):
        is_resolving(SubspaceFamily([]), g)
    foreign = Subspace.from_rows(
        field_new(2), 4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
    )
    with pytest.raises(InvalidArgs):
        is_resolving(SubspaceFamily([foreign]), g)


def test_graph_budget(monkeypatch):
    monkeypatch.setenv("GRASSMANN_BUDGET", "100")
    with pytest.raises(BudgetExceeded):
        graph(2, 6, 3)


def test_bfs_matches_algebraic_distance():
    g = graph(2, 4, 2)
    rows = g.distance_rows()
    for src in range(len(g.vertices)):
        assert bfs_distances_from(g, src) == list(rows[src])
    a, b = g.vertices[0], g.vertices[34]
    assert bfs_distance(g, a, b) == distance(a, b)


def test_adjacency_and_edge_list():
    g = graph(2, 4, 2)
    adj = g.adjacency()
    edges = edge_list(g)
    assert len(edges) == 315  # 35 vertices, 18-regular
    assert all(i < j for i, j in edges)
    assert len(set(edges)) == len(edges)
    deg = [0] * len(g.vertices)
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    assert deg == [len(a) for a in adj]
