"""Dense exact linear algebra plus the sparse order-3 tensors that hold
structure constants.

Vectors are plain lists of scalars, matrices are lists of rows acting on
column vectors (image of j-th basis vector = j-th column).  Tensor3 keeps
only nonzero entries, keyed (i, j, k); the meaning of the three slots is
fixed by whoever owns the tensor (multiplication: inputs (i, j), output k;
comultiplication: input i, outputs (j, k); actions: Hopf index first).
"""


def zeros(field, n):
    return [field.zero] * n


def unit_vec(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, u):
    return [c * a for a in u]


def vec_is_zero(u):
    return not any(u)


def vec_eq(u, v):
    return len(u) == len(v) and all(a == b for a, b in zip(u, v))


def mat_identity(field, n):
    return [unit_vec(field, n, i) for i in range(n)]


def mat_apply(m, v, field=None):
    out = []
    for r in m:
        s = r[0] * v[0]
        for j in range(1, len(v)):
            if v[j]:
                s = s + r[j] * v[j]
        out.append(s)
    return out


def mat_eq(a, b):
    return len(a) == len(b) and all(vec_eq(r, s) for r, s in zip(a, b))


def mat_mul(a, b):
    n = len(b)
    cols = len(b[0])
    out = []
    for r in a:
        row = []
        for j in range(cols):
            s = r[0] * b[0][j]
            for k in range(1, n):
                if r[k] and b[k][j]:
                    s = s + r[k] * b[k][j]
            row.append(s)
        out.append(row)
    return out


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


class Tensor3:
    """Sparse order-3 tensor over one field."""

    def __init__(self, dims, entries=None):
        self.dims = tuple(dims)
        self.entries = {}
        if entries:
            for key, c in entries.items():
                if c:
                    self.entries[key] = c
        self._pair = None
        self._in1 = None

    def add(self, i, j, k, c):
        if not c:
            return
        key = (i, j, k)
        cur = self.entries.get(key)
        new = c if cur is None else cur + c
        if new:
            self.entries[key] = new
        elif cur is not None:
            del self.entries[key]
        self._pair = None
        self._in1 = None

    def get(self, i, j, k, zero):
        return self.entries.get((i, j, k), zero)

    def pair_view(self):
        """{(i, j): {k: c}} — contract with the first two slots as inputs."""
        if self._pair is None:
            pv = {}
            for (i, j, k), c in self.entries.items():
                pv.setdefault((i, j), {})[k] = c
            self._pair = pv
        return self._pair

    def in1_view(self):
        """{i: {(j, k): c}} — contract with the first slot as input."""
        if self._in1 is None:
            iv = {}
            for (i, j, k), c in self.entries.items():
                iv.setdefault(i, {})[(j, k)] = c
            self._in1 = iv
        return self._in1

    def transpose(self, perm):
        """New tensor with new_key[t] = old_key[perm[t]]."""
        dims = tuple(self.dims[perm[t]] for t in range(3))
        out = Tensor3(dims)
        for key, c in self.entries.items():
            out.entries[(key[perm[0]], key[perm[1]], key[perm[2]])] = c
        return out

    def apply_bilinear(self, u, v, field):
        """Treat the tensor as a bilinear map: (u, v) -> w, w[k] = sum u_i v_j t_ijk."""
        out = zeros(field, self.dims[2])
        for (i, j), row in self.pair_view().items():
            ui = u[i]
            if not ui:
                continue
            vj = v[j]
            if not vj:
                continue
            c = ui * vj
            for k, t in row.items():
                out[k] = out[k] + c * t
        return out

    def __eq__(self, other):
        return (isinstance(other, Tensor3) and self.dims == other.dims
                and self.entries == other.entries)

    def __repr__(self):
        return "Tensor3(dims=%r, nnz=%d)" % (self.dims, len(self.entries))


def rref(rows, field):
    """Reduced row-echelon form.  Returns (rank, reduced_rows, pivot_cols);
    reduced_rows keeps only the nonzero rows."""
    m = [list(r) for r in rows]
    if not m:
        return 0, [], []
    ncols = len(m[0])
    for r in m:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    piv_r = 0
    pivots = []
    for c in range(ncols):
        pr = None
        for r in range(piv_r, len(m)):
            if m[r][c]:
                pr = r
                break
        if pr is None:
            continue
        m[piv_r], m[pr] = m[pr], m[piv_r]
        inv = field.one / m[piv_r][c]
        m[piv_r] = [inv * x for x in m[piv_r]]
        for r in range(len(m)):
            if r != piv_r and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[piv_r])]
        pivots.append(c)
        piv_r += 1
        if piv_r == len(m):
            break
    return piv_r, m[:piv_r], pivots


def nullspace(mat, field, ncols=None):
    """Basis of {x : mat . x = 0} (list of column vectors as lists)."""
    if not mat:
        if ncols is None:
            raise ValueError("cannot infer width of an empty matrix")
        return [unit_vec(field, ncols, i) for i in range(ncols)]
    ncols = len(mat[0])
    rank, red, pivots = rref(mat, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = zeros(field, ncols)
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(mat_cols, target, field):
    """One solution x of (columns) . x = target, or None.  mat_cols is a list
    of column vectors."""
    if not mat_cols:
        return None if any(target) else []
    n = len(target)
    aug = [[mat_cols[j][i] for j in range(len(mat_cols))] + [target[i]]
           for i in range(n)]
    rank, red, pivots = rref(aug, field)
    w = len(mat_cols)
    if w in pivots:
        return None  # inconsistent
    x = zeros(field, w)
    for r, pc in enumerate(pivots):
        x[pc] = red[r][w]
    return x


class Subspace:
    """A subspace of field^n held as a reduced row-echelon basis."""

    def __init__(self, ambient_dim, field, rows=(), _canonical=False):
        if ambient_dim <= 0:
            raise ValueError("ambient dimension must be positive")
        self.ambient_dim = ambient_dim
        self.field = field
        if _canonical:
            self.rows = list(rows)
            self.pivots = [next(j for j, x in enumerate(r) if x) for r in self.rows]
        else:
            rank, red, pivots = rref(list(rows), field) if rows else (0, [], [])
            self.rows = red
            self.pivots = pivots

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, v):
        """Residual of v after elimination against the basis (zero iff member)."""
        w = list(v)
        for r, pc in zip(self.rows, self.pivots):
            c = w[pc]
            if c:
                w = [a - c * b for a, b in zip(w, r)]
        return w

    def contains(self, v):
        if len(v) != self.ambient_dim:
            raise ValueError("dimension mismatch")
        return vec_is_zero(self.reduce(v))

    def coords(self, v):
        """Coefficients of v in the rref basis; None if v is not a member."""
        if not self.contains(v):
            return None
        return [v[pc] for pc in self.pivots]

    def from_coords(self, cs):
        v = zeros(self.field, self.ambient_dim)
        for c, r in zip(cs, self.rows):
            if c:
                v = [a + c * b for a, b in zip(v, r)]
        return v

    def join(self, vectors):
        """Span of this subspace together with extra vectors."""
        return Subspace(self.ambient_dim, self.field, self.rows + [list(v) for v in vectors])

    def intersect(self, other):
        """Subspace intersection via the kernel of the stacked constraints."""
        cons = self.constraint_matrix() + other.constraint_matrix()
        if not cons:
            return Subspace(self.ambient_dim, self.field,
                            [unit_vec(self.field, self.ambient_dim, i)
                             for i in range(self.ambient_dim)])
        return Subspace(self.ambient_dim, self.field,
                        nullspace(cons, self.field, self.ambient_dim))

    def constraint_matrix(self):
        """Rows C with: v is a member  iff  C . v = 0.
        C is the linear residual map of `reduce` restricted to non-pivot rows."""
        n = self.ambient_dim
        f = self.field
        piv_set = set(self.pivots)
        out = []
        for c in range(n):
            if c in piv_set:
                continue
            # residual coordinate c of reduce(v): v[c] - sum_r v[piv_r]*row_r[c]
            row = zeros(f, n)
            row[c] = f.one
            for r, pc in zip(self.rows, self.pivots):
                row[pc] = row[pc] - r[c]
            out.append(row)
        return out

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and len(self.rows) == len(other.rows)
                and all(vec_eq(r, s) for r, s in zip(self.rows, other.rows)))

    def __repr__(self):
        return "Subspace(dim=%d of %d)" % (self.dim, self.ambient_dim)


def subspace_span(vectors, ambient_dim=None, field=None):
    vectors = list(vectors)
    if ambient_dim is None:
        if not vectors:
            raise ValueError("need at least one vector or an explicit ambient dimension")
        ambient_dim = len(vectors[0])
    return Subspace(ambient_dim, field, vectors)


def closure_fixpoint(seed, linear_ops, bilinear_ops):
    """Smallest subspace containing `seed`, invariant under every matrix in
    linear_ops and closed under every Tensor3 in bilinear_ops applied to pairs
    of members.  Grows by image adjunction; the dimension strictly increases
    every productive round, so ambient_dim + 1 rounds is a hard bound."""
    cur = seed
    field = seed.field
    for _ in range(seed.ambient_dim + 1):
        new = []
        for b in cur.rows:
            for op in linear_ops:
                w = [sum((op[i][j] * b[j] for j in range(len(b)) if b[j]),
                         start=field.zero) for i in range(len(op))]
                if not cur.contains(w):
                    new.append(w)
        for t in bilinear_ops:
            for b1 in cur.rows:
                for b2 in cur.rows:
                    w = t.apply_bilinear(b1, b2, field)
                    if not cur.contains(w):
                        new.append(w)
        if not new:
            return cur
        nxt = cur.join(new)
        if nxt.dim == cur.dim:
            return cur
        cur = nxt
    raise RuntimeError("closure did not stabilize within ambient_dim + 1 rounds")
