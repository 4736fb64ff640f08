"""Exact linear algebra: rref, kernels, solving, subspaces, closures."""

import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from phopf.fields import GF, QQ
from phopf.linalg import (Subspace, Tensor3, closure_fixpoint, mat_apply, mat_mul,
                          nullspace, rref, solve, subspace_span, unit_vec, zeros)


def _rand_matrix(rng, rows, cols, field):
    return [[field.of(rng.randrange(-3, 4)) for _ in range(cols)]
            for _ in range(rows)]


small = st.integers(min_value=-4, max_value=4)
shapes = st.tuples(st.integers(1, 5), st.integers(1, 5))


# ---------------------------------------------------------------------------
# rref


@settings(max_examples=50, deadline=None)
@given(shapes, st.integers(0, 2**31 - 1))
def test_rref_is_idempotent_and_bounded(shape, seed):
    rng = random.Random(seed)
    rows, cols = shape
    m = _rand_matrix(rng, rows, cols, QQ)
    rank, red, pivots = rref(m, QQ)
    assert rank == len(red) == len(pivots)
    assert rank <= min(rows, cols)
    rank2, red2, pivots2 = rref(red, QQ)
    assert (rank2, red2, pivots2) == (rank, red, pivots)
    for r, pc in enumerate(pivots):
        assert red[r][pc] == QQ.one
        assert all(red[other][pc] == QQ.zero for other in range(rank) if other != r)
        assert all(red[r][c] == QQ.zero for c in range(pc))


@settings(max_examples=30, deadline=None)
@given(shapes, st.integers(0, 2**31 - 1))
def test_rref_preserves_row_space(shape, seed):
    rng = random.Random(seed)
    rows, cols = shape
    m = _rand_matrix(rng, rows, cols, GF(5))
    rank, red, _ = rref(m, GF(5))
    a = Subspace(cols, GF(5), m)
    b = Subspace(cols, GF(5), red)
    assert a == b and a.dim == rank


# ---------------------------------------------------------------------------
# kernels and solving


@settings(max_examples=40, deadline=None)
@given(shapes, st.integers(0, 2**31 - 1))
def test_nullspace_vectors_are_killed(shape, seed):
    rng = random.Random(seed)
    rows, cols = shape
    m = _rand_matrix(rng, rows, cols, QQ)
    basis = nullspace(m, QQ, cols)
    rank, _, _ = rref(m, QQ)
    assert len(basis) == cols - rank
    for v in basis:
        assert all(c == QQ.zero for c in mat_apply(m, v))


@settings(max_examples=40, deadline=None)
@given(shapes, st.integers(0, 2**31 - 1))
def test_solve_reproduces_target(shape, seed):
    rng = random.Random(seed)
    rows, cols = shape
    m = _rand_matrix(rng, rows, cols, QQ)
    x = [QQ.of(rng.randrange(-3, 4)) for _ in range(cols)]
    target = mat_apply(m, x)
    columns = [[m[i][j] for i in range(rows)] for j in range(cols)]
    got = solve(columns, target, QQ)
    assert got is not None
    assert mat_apply(m, got) == target


def test_solve_detects_inconsistency():
    cols = [[QQ.one, QQ.zero]]          # span of e1 in k^2
    assert solve(cols, [QQ.zero, QQ.one], QQ) is None
    assert solve([], [QQ.zero, QQ.zero], QQ) == []
    assert solve([], [QQ.one], QQ) is None


def test_nullspace_of_empty_matrix_is_everything():
    basis = nullspace([], QQ, 3)
    assert basis == [unit_vec(QQ, 3, i) for i in range(3)]


# ---------------------------------------------------------------------------
# Tensor3


def test_tensor3_views_and_transpose():
    t = Tensor3((2, 3, 2))
    t.add(0, 1, 1, QQ.of(2))
    t.add(1, 2, 0, QQ.of(-1))
    t.add(0, 1, 1, QQ.of(-2))   # cancels the first entry
    assert (0, 1, 1) not in t.entries
    assert t.entries == {(1, 2, 0): QQ.of(-1)}
    assert t.pair_view() == {(1, 2): {0: QQ.of(-1)}}
    assert t.in1_view() == {1: {(2, 0): QQ.of(-1)}}
    s = t.transpose((2, 0, 1))
    assert s.dims == (2, 2, 3)
    assert s.entries == {(0, 1, 2): QQ.of(-1)}


def test_tensor3_apply_bilinear_matches_naive():
    rng = random.Random(7)
    t = Tensor3((3, 3, 3))
    for _ in range(10):
        t.add(rng.randrange(3), rng.randrange(3), rng.randrange(3),
              QQ.of(rng.randrange(-2, 3)))
    u = [QQ.of(rng.randrange(-2, 3)) for _ in range(3)]
    v = [QQ.of(rng.randrange(-2, 3)) for _ in range(3)]
    out = t.apply_bilinear(u, v, QQ)
    naive = zeros(QQ, 3)
    for (i, j, k), c in t.entries.items():
        naive[k] += c * u[i] * v[j]
    assert out == naive


# ---------------------------------------------------------------------------
# subspaces


def test_subspace_membership_and_coords():
    rows = [[QQ.one, QQ.zero, QQ.of(2)], [QQ.zero, QQ.one, QQ.of(-1)]]
    s = subspace_span(rows, 3, QQ)
    assert s.dim == 2
    v = [QQ.of(3), QQ.of(4), QQ.of(2)]
    assert s.contains(v)
    cs = s.coords(v)
    assert s.from_coords(cs) == v
    assert not s.contains([QQ.zero, QQ.zero, QQ.one])
    assert s.coords([QQ.zero, QQ.zero, QQ.one]) is None


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_join_and_intersect_dimensions(seed):
    rng = random.Random(seed)
    n = 5
    a = subspace_span(_rand_matrix(rng, 2, n, QQ), n, QQ)
    b = subspace_span(_rand_matrix(rng, 2, n, QQ), n, QQ)
    joined = a.join(b.rows)
    meet = a.intersect(b)
    # modular law of dimensions
    assert joined.dim + meet.dim == a.dim + b.dim
    for r in meet.rows:
        assert a.contains(r) and b.contains(r)
    for r in a.rows:
        assert joined.contains(r)


def test_constraint_matrix_cuts_exactly():
    s = subspace_span([[QQ.one, QQ.one, QQ.zero]], 3, QQ)
    c = s.constraint_matrix()
    assert len(c) == 2
    for r in s.rows:
        assert all(x == QQ.zero for x in mat_apply(c, r))
    back = Subspace(3, QQ, nullspace(c, QQ, 3))
    assert back == s


# ---------------------------------------------------------------------------
# closures


def test_closure_fixpoint_is_closed_and_minimal():
    f = QQ
    n = 4
    shift = [[f.zero] * n for _ in range(n)]       # cyclic shift operator
    for i in range(n):
        shift[(i + 1) % n][i] = f.one
    seed = subspace_span([unit_vec(f, n, 0)], n, f)
    span = closure_fixpoint(seed, [shift], [])
    assert span.dim == n
    proj = [[f.zero] * n for _ in range(n)]        # kills everything
    span2 = closure_fixpoint(seed, [proj], [])
    assert span2.dim == 1 and span2.contains(unit_vec(f, n, 0))
    # closure under a bilinear product: coordinatewise multiplication
    prod = Tensor3((n, n, n))
    for i in range(n):
        prod.add(i, i, i, f.one)
    vec = [f.one, f.one, f.zero, f.zero]
    span3 = closure_fixpoint(subspace_span([vec], n, f), [], [prod])
    assert span3.dim == 1
    span4 = closure_fixpoint(subspace_span([vec, unit_vec(f, n, 1)], n, f),
                             [], [prod])
    assert span4.dim == 2
    for u in span4.rows:
        for v in span4.rows:
            w = prod.apply_bilinear(u, v, f)
            assert span4.contains(w)


def test_mat_mul_matches_apply():
    rng = random.Random(3)
    a = _rand_matrix(rng, 3, 3, GF(7))
    b = _rand_matrix(rng, 3, 3, GF(7))
    v = [GF(7).of(rng.randrange(7)) for _ in range(3)]
    assert mat_apply(mat_mul(a, b), v) == mat_apply(a, mat_apply(b, v))
