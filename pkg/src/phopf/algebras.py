"""Structure-constant algebras and Hopf algebras, with exhaustive axiom suites.

All data is coordinates over an exact field: a multiplication or a
comultiplication is an order-3 tensor, a (co)unit is a vector, an antipode is
a matrix whose columns are the images of the basis vectors.  A law checked on
every basis tuple is thereby proved for all elements (multilinearity), so a
passing Report is a proof, not a sample.

Elements are passed around as sparse dicts {basis_index: scalar}; elements of
a tensor square live in dicts keyed by index pairs.
"""

from .fields import Field
from .linalg import Tensor3, mat_transpose, unit_vec, zeros
from ._groups import check_group_table, group_identity, group_inverses


# ---------------------------------------------------------------------------
# sparse element helpers

def dict_of_vec(v):
    return {i: c for i, c in enumerate(v) if c}


def vec_of_dict(d, n, field):
    v = zeros(field, n)
    for i, c in d.items():
        v[i] = c
    return v


def dict_acc(out, key, c):
    """out[key] += c, dropping the key when the sum cancels."""
    if not c:
        return
    cur = out.get(key)
    new = c if cur is None else cur + c
    if new:
        out[key] = new
    elif cur is not None:
        del out[key]


def mul_dicts(pv, x, y):
    """Product of two sparse elements through a pair_view of a mul tensor."""
    out = {}
    for i, ci in x.items():
        for j, cj in y.items():
            row = pv.get((i, j))
            if not row:
                continue
            c = ci * cj
            for k, t in row.items():
                dict_acc(out, k, c * t)
    return out


def t2_mul(pv_left, pv_right, x, y):
    """Componentwise product in a tensor square: (a⊗b)(c⊗d) = ac⊗bd.
    x, y are dicts {(i, j): c}."""
    out = {}
    for (i1, j1), c1 in x.items():
        for (i2, j2), c2 in y.items():
            row_l = pv_left.get((i1, i2))
            if not row_l:
                continue
            row_r = pv_right.get((j1, j2))
            if not row_r:
                continue
            c = c1 * c2
            for k1, t1 in row_l.items():
                ct = c * t1
                for k2, t2 in row_r.items():
                    dict_acc(out, (k1, k2), ct * t2)
    return out


def t2_of_dicts(x, y):
    """x ⊗ y as a pair-keyed dict."""
    out = {}
    for i, c in x.items():
        for j, d in y.items():
            out[(i, j)] = c * d
    return out


def t3_mul(pv0, pv1, pv2, x, y):
    """Componentwise product in a triple tensor:
    (a⊗b⊗c)(a'⊗b'⊗c') = aa'⊗bb'⊗cc'.  x, y are dicts {(i, j, k): c}."""
    out = {}
    for (i1, j1, k1), c1 in x.items():
        for (i2, j2, k2), c2 in y.items():
            row0 = pv0.get((i1, i2))
            if not row0:
                continue
            row1 = pv1.get((j1, j2))
            if not row1:
                continue
            row2 = pv2.get((k1, k2))
            if not row2:
                continue
            c = c1 * c2
            for t0, a0 in row0.items():
                ca = c * a0
                for t1, a1 in row1.items():
                    cb = ca * a1
                    for t2, a2 in row2.items():
                        dict_acc(out, (t0, t1, t2), cb * a2)
    return out


# ---------------------------------------------------------------------------
# report plumbing

class Report:
    """Outcome of an axiom suite.  Failures carry the violating basis indices
    and both evaluated sides, so a violation is reproducible from the report
    alone."""

    def __init__(self, subject=""):
        self.subject = subject
        self.laws = []
        self.failures = []  # (law_id, index_tuple, lhs, rhs)

    def law(self, law_id):
        if law_id not in self.laws:
            self.laws.append(law_id)

    def fail(self, law_id, idx, lhs, rhs):
        self.law(law_id)
        self.failures.append((law_id, tuple(idx), lhs, rhs))

    @property
    def passed(self):
        return not self.failures

    def __bool__(self):
        return self.passed

    def merge(self, other, prefix=""):
        for law in other.laws:
            self.law(prefix + law)
        for law, idx, lhs, rhs in other.failures:
            self.failures.append((prefix + law, idx, lhs, rhs))
        return self

    def failures_for(self, law_id):
        return [f for f in self.failures if f[0] == law_id]

    def lines(self):
        out = []
        for law in self.laws:
            bad = self.failures_for(law)
            if not bad:
                out.append("PASS  %s" % law)
            else:
                out.append("FAIL  %s  (%d violation%s; first at %s)"
                           % (law, len(bad), "" if len(bad) == 1 else "s", bad[0][1]))
        return out

    def to_json(self):
        return {
            "subject": self.subject,
            "passed": self.passed,
            "laws": list(self.laws),
            "failures": [{"law": law, "at": list(idx), "lhs": repr(lhs), "rhs": repr(rhs)}
                         for law, idx, lhs, rhs in self.failures],
        }

    def __repr__(self):
        state = "passed" if self.passed else "%d failure(s)" % len(self.failures)
        return "Report(%s: %s)" % (self.subject or "?", state)


# ---------------------------------------------------------------------------
# data types

class AlgebraData:
    """An algebra by structure constants.  Not assumed associative or unital;
    run algebra_check to certify."""

    def __init__(self, field, basis, mul, unit=None, name="A"):
        self.field = field
        self.basis = list(basis)
        self.dim = len(self.basis)
        if isinstance(mul, dict):
            mul = Tensor3((self.dim,) * 3, mul)
        if mul.dims != (self.dim,) * 3:
            raise ValueError("mul tensor shaped %r for dimension %d" % (mul.dims, self.dim))
        self.mul = mul
        if unit is not None:
            unit = list(unit)
            if len(unit) != self.dim:
                raise ValueError("unit vector has wrong length")
        self.unit = unit
        self.name = name

    def basis_vec(self, i):
        return unit_vec(self.field, self.dim, i)

    def mulvec(self, u, v):
        return self.mul.apply_bilinear(u, v, self.field)

    def mul_dict(self, x, y):
        return mul_dicts(self.mul.pair_view(), x, y)

    def unit_dict(self):
        if self.unit is None:
            raise ValueError("algebra %s has no unit" % self.name)
        return dict_of_vec(self.unit)

    def to_json(self):
        show = self.field.show
        doc = {
            "field": self.field.to_json(),
            "basis": list(self.basis),
            "mul": [[i, j, k, show(c)] for (i, j, k), c in sorted(self.mul.entries.items())],
        }
        if self.unit is not None:
            doc["unit"] = [show(c) for c in self.unit]
        return doc

    @classmethod
    def from_json(cls, doc, name="A"):
        field = Field.from_json(doc["field"])
        basis = list(doc["basis"])
        n = len(basis)
        mul = Tensor3((n, n, n))
        for i, j, k, c in doc["mul"]:
            mul.add(i, j, k, field.parse(c))
        unit = [field.parse(c) for c in doc["unit"]] if "unit" in doc else None
        return cls(field, basis, mul, unit, name=name)

    def __repr__(self):
        return "%s(%s, dim=%d)" % (type(self).__name__, self.name, self.dim)


class HopfData(AlgebraData):
    """A Hopf algebra by structure constants.  comul entry (i, j, k) is the
    coefficient of basis[j]⊗basis[k] in Δ(basis[i]); the antipode matrix has
    S(basis[j]) in column j.  Run hopf_check to certify."""

    def __init__(self, field, basis, mul, unit, comul, counit, antipode, name="H"):
        if unit is None:
            raise ValueError("a Hopf algebra needs a unit")
        AlgebraData.__init__(self, field, basis, mul, unit, name=name)
        if isinstance(comul, dict):
            comul = Tensor3((self.dim,) * 3, comul)
        if comul.dims != (self.dim,) * 3:
            raise ValueError("comul tensor shaped %r" % (comul.dims,))
        self.comul = comul
        self.counit = list(counit)
        self.antipode = [list(row) for row in antipode]
        if len(self.counit) != self.dim or len(self.antipode) != self.dim:
            raise ValueError("counit/antipode sized wrong")

    def comul_dict(self, i):
        """Δ(basis[i]) as {(j, k): c}."""
        return dict(self.comul.in1_view().get(i, {}))

    def comul_apply(self, x):
        """Δ on a sparse element."""
        iv = self.comul.in1_view()
        out = {}
        for i, c in x.items():
            for key, t in iv.get(i, {}).items():
                dict_acc(out, key, c * t)
        return out

    def counit_of(self, x):
        s = self.field.zero
        for i, c in x.items():
            if self.counit[i]:
                s = s + c * self.counit[i]
        return s

    def antipode_apply(self, x):
        out = {}
        for j, c in x.items():
            for i in range(self.dim):
                if self.antipode[i][j]:
                    dict_acc(out, i, c * self.antipode[i][j])
        return out

    def to_json(self):
        doc = AlgebraData.to_json(self)
        show = self.field.show
        doc["comul"] = [[i, j, k, show(c)] for (i, j, k), c in sorted(self.comul.entries.items())]
        doc["counit"] = [show(c) for c in self.counit]
        doc["antipode"] = [[i, j, show(self.antipode[i][j])]
                           for i in range(self.dim) for j in range(self.dim)
                           if self.antipode[i][j]]
        return doc

    @classmethod
    def from_json(cls, doc, name="H"):
        field = Field.from_json(doc["field"])
        basis = list(doc["basis"])
        n = len(basis)
        mul = Tensor3((n, n, n))
        for i, j, k, c in doc["mul"]:
            mul.add(i, j, k, field.parse(c))
        comul = Tensor3((n, n, n))
        for i, j, k, c in doc["comul"]:
            comul.add(i, j, k, field.parse(c))
        unit = [field.parse(c) for c in doc["unit"]]
        counit = [field.parse(c) for c in doc["counit"]]
        antipode = [[field.zero] * n for _ in range(n)]
        for i, j, c in doc["antipode"]:
            antipode[i][j] = field.parse(c)
        return cls(field, basis, mul, unit, comul, counit, antipode, name=name)


# ---------------------------------------------------------------------------
# axiom suites

def algebra_check(a):
    """Associativity on all basis triples; unit law when a unit is present."""
    rep = Report(a.name)
    n = a.dim
    f = a.field
    pv = a.mul.pair_view()
    empty = {}

    rep.law("associativity")
    for i in range(n):
        for j in range(n):
            pij = pv.get((i, j), empty)
            for k in range(n):
                lhs = {}
                for m, c in pij.items():
                    row = pv.get((m, k))
                    if row:
                        for t, d in row.items():
                            dict_acc(lhs, t, c * d)
                rhs = {}
                for m, c in pv.get((j, k), empty).items():
                    row = pv.get((i, m))
                    if row:
                        for t, d in row.items():
                            dict_acc(rhs, t, c * d)
                if lhs != rhs:
                    rep.fail("associativity", (i, j, k),
                             vec_of_dict(lhs, n, f), vec_of_dict(rhs, n, f))

    if a.unit is not None:
        rep.law("unit-law")
        u = dict_of_vec(a.unit)
        for i in range(n):
            e = {i: f.one}
            left = mul_dicts(pv, u, e)
            right = mul_dicts(pv, e, u)
            if left != e:
                rep.fail("unit-law", (i,), vec_of_dict(left, n, f), a.basis_vec(i))
            if right != e:
                rep.fail("unit-law", (i,), vec_of_dict(right, n, f), a.basis_vec(i))
    return rep


def hopf_check(h):
    """Full Hopf-algebra suite: algebra laws, coassociativity, counit law,
    Δ and ε are unital algebra maps, antipode convolution-inverts the
    identity.  Exhaustive over basis tuples."""
    rep = algebra_check(h)
    n = h.dim
    f = h.field
    pv = h.mul.pair_view()
    iv = h.comul.in1_view()
    empty = {}
    u = h.unit_dict()

    rep.law("coassociativity")
    rep.law("counit-law")
    for i in range(n):
        di = iv.get(i, empty)
        lhs = {}
        for (j, c3), w in di.items():
            for (a, b), w2 in iv.get(j, empty).items():
                dict_acc(lhs, (a, b, c3), w * w2)
        rhs = {}
        for (a, k), w in di.items():
            for (b, c3), w2 in iv.get(k, empty).items():
                dict_acc(rhs, (a, b, c3), w * w2)
        if lhs != rhs:
            rep.fail("coassociativity", (i,), sorted(lhs.items()), sorted(rhs.items()))
        vl, vr = {}, {}
        for (j, k), w in di.items():
            if h.counit[j]:
                dict_acc(vl, k, h.counit[j] * w)
            if h.counit[k]:
                dict_acc(vr, j, w * h.counit[k])
        e = {i: f.one}
        if vl != e:
            rep.fail("counit-law", (i,), vec_of_dict(vl, n, f), h.basis_vec(i))
        if vr != e:
            rep.fail("counit-law", (i,), vec_of_dict(vr, n, f), h.basis_vec(i))

    rep.law("comultiplication-multiplicative")
    rep.law("counit-multiplicative")
    for i in range(n):
        for j in range(n):
            prod = pv.get((i, j), empty)
            lhs = h.comul_apply(prod)
            rhs = t2_mul(pv, pv, iv.get(i, empty), iv.get(j, empty))
            if lhs != rhs:
                rep.fail("comultiplication-multiplicative", (i, j),
                         sorted(lhs.items()), sorted(rhs.items()))
            le = h.counit_of(prod)
            re = h.counit[i] * h.counit[j]
            if le != re:
                rep.fail("counit-multiplicative", (i, j), le, re)

    rep.law("comultiplication-unit")
    if h.comul_apply(u) != t2_of_dicts(u, u):
        rep.fail("comultiplication-unit", (), sorted(h.comul_apply(u).items()),
                 sorted(t2_of_dicts(u, u).items()))
    rep.law("counit-unit")
    if h.counit_of(u) != f.one:
        rep.fail("counit-unit", (), h.counit_of(u), f.one)

    rep.law("antipode-law")
    for i in range(n):
        left, right = {}, {}
        for (j, k), w in iv.get(i, empty).items():
            sj = h.antipode_apply({j: w})
            for t, c in mul_dicts(pv, sj, {k: f.one}).items():
                dict_acc(left, t, c)
            sk = h.antipode_apply({k: w})
            for t, c in mul_dicts(pv, {j: f.one}, sk).items():
                dict_acc(right, t, c)
        target = {t: h.counit[i] * c for t, c in u.items()} if h.counit[i] else {}
        if left != target:
            rep.fail("antipode-law", (i,), vec_of_dict(left, n, f), vec_of_dict(target, n, f))
        if right != target:
            rep.fail("antipode-law", (i,), vec_of_dict(right, n, f), vec_of_dict(target, n, f))
    return rep


def _certify(rep):
    if not rep.passed:
        law, idx, lhs, rhs = rep.failures[0]
        raise AssertionError("constructor output failed %s at %s: %r != %r"
                             % (law, idx, lhs, rhs))


# ---------------------------------------------------------------------------
# constructors

def group_algebra(table, field, labels=None, name=None):
    """Group algebra of a finite group given by its multiplication table:
    basis u_g with u_g u_h = u_{gh}, Δ(u_g) = u_g⊗u_g, ε(u_g) = 1,
    S(u_g) = u_{g⁻¹}."""
    bad = check_group_table(table)
    if bad is not None:
        raise ValueError("not a group table: fails %s" % bad)
    n = len(table)
    if labels is None:
        labels = ["g%d" % i for i in range(n)]
    e = group_identity(table)
    inv = group_inverses(table)
    one = field.one
    mul = {(i, j, table[i][j]): one for i in range(n) for j in range(n)}
    comul = {(i, i, i): one for i in range(n)}
    counit = [one] * n
    antipode = [[field.zero] * n for _ in range(n)]
    for j in range(n):
        antipode[inv[j]][j] = one
    h = HopfData(field, labels, mul, unit_vec(field, n, e), comul, counit, antipode,
                 name=name or "kG")
    _certify(hopf_check(h))
    return h


def sweedler_h4(field):
    """The 4-dimensional Sweedler Hopf algebra ⟨1, g, x, xg⟩ with g² = 1,
    x² = 0, gx = −xg, Δ(g) = g⊗g, Δ(x) = x⊗g + 1⊗x, S(g) = g, S(x) = −xg.
    Needs characteristic ≠ 2."""
    if field.char == 2:
        raise ValueError("the Sweedler algebra degenerates in characteristic 2")
    one = field.one
    mul = {}
    for i in range(1, 4):
        mul[(0, i, i)] = one
        mul[(i, 0, i)] = one
    mul[(0, 0, 0)] = one
    mul[(1, 1, 0)] = one          # g·g = 1
    mul[(1, 2, 3)] = -one         # g·x = -xg
    mul[(1, 3, 2)] = -one         # g·xg = -x
    mul[(2, 1, 3)] = one          # x·g = xg
    mul[(3, 1, 2)] = one          # xg·g = x
    comul = {
        (0, 0, 0): one,
        (1, 1, 1): one,
        (2, 2, 1): one, (2, 0, 2): one,   # Δ(x) = x⊗g + 1⊗x
        (3, 3, 0): one, (3, 1, 3): one,   # Δ(xg) = xg⊗1 + g⊗xg
    }
    counit = [one, one, field.zero, field.zero]
    antipode = [[field.zero] * 4 for _ in range(4)]
    antipode[0][0] = one
    antipode[1][1] = one
    antipode[3][2] = -one         # S(x) = -xg
    antipode[2][3] = one          # S(xg) = x
    h = HopfData(field, ["1", "g", "x", "xg"], mul, unit_vec(field, 4, 0),
                 comul, counit, antipode, name="H4")
    _certify(hopf_check(h))
    return h


def dual_hopf(h):
    """Dual Hopf algebra on the dual basis: multiplication is the transpose
    of comul (convolution), comultiplication the transpose of mul, unit the
    counit vector, counit evaluation at 1, antipode the transposed matrix."""
    dual = HopfData(
        h.field,
        [b + "*" for b in h.basis],
        h.comul.transpose((1, 2, 0)),
        list(h.counit),
        h.mul.transpose((2, 0, 1)),
        list(h.unit),
        mat_transpose(h.antipode),
        name=h.name + "*",
    )
    _certify(hopf_check(dual))
    return dual


def scalar_algebra(field):
    """The base field as a 1-dimensional unital algebra."""
    return AlgebraData(field, ["1"], {(0, 0, 0): field.one}, [field.one], name="k")


# ---------------------------------------------------------------------------
# ambient algebras for globalization

class HomHHA:
    """The convolution algebra Hom(H⊗H, A) together with the two families of
    translation operators (h ▷ f)(k⊗k') = f(kh⊗k') and (f ◁ h)(k⊗k') =
    f(k⊗hk'), one matrix per basis element of H on each side.

    Basis functional E[i,j,m] sends e_i⊗e_j to a_m and every other basis pair
    to 0.  Unpacks as (algebra, left_ops, right_ops).
    """

    def __init__(self, algebra, left_ops, right_ops, n, dima):
        self.algebra = algebra
        self.left_ops = left_ops
        self.right_ops = right_ops
        self.n = n
        self.dima = dima

    def index(self, i, j, m):
        return (i * self.n + j) * self.dima + m

    def __iter__(self):
        return iter((self.algebra, self.left_ops, self.right_ops))


def hom_hh_a(h, a):
    """Build Hom(H⊗H, A) with convolution product
    (F*G)(k⊗k') = Σ F(k₁⊗k'₁) G(k₂⊗k'₂) and unit (k⊗k') ↦ ε(k)ε(k')1_A."""
    if a.unit is None:
        raise ValueError("hom_hh_a needs a unital coefficient algebra")
    n, da = h.dim, a.dim
    f = h.field
    big = n * n * da

    def idx(i, j, m):
        return (i * n + j) * da + m

    mul = Tensor3((big, big, big))
    for (p, i, i2), c1 in h.comul.entries.items():
        for (q, j, j2), c2 in h.comul.entries.items():
            c12 = c1 * c2
            for (m, m2, t), c3 in a.mul.entries.items():
                mul.add(idx(i, j, m), idx(i2, j2, m2), idx(p, q, t), c12 * c3)

    unit = zeros(f, big)
    for i in range(n):
        if not h.counit[i]:
            continue
        for j in range(n):
            if not h.counit[j]:
                continue
            c = h.counit[i] * h.counit[j]
            for m in range(da):
                if a.unit[m]:
                    unit[idx(i, j, m)] = unit[idx(i, j, m)] + c * a.unit[m]

    left_ops = [[[f.zero] * big for _ in range(big)] for _ in range(n)]
    right_ops = [[[f.zero] * big for _ in range(big)] for _ in range(n)]
    for (k, g, i), c in h.mul.entries.items():
        mat = left_ops[g]
        for j in range(n):
            for m in range(da):
                mat[idx(k, j, m)][idx(i, j, m)] = mat[idx(k, j, m)][idx(i, j, m)] + c
    for (g, q, j), c in h.mul.entries.items():
        mat = right_ops[g]
        for i in range(n):
            for m in range(da):
                mat[idx(i, q, m)][idx(i, j, m)] = mat[idx(i, q, m)][idx(i, j, m)] + c

    names = ["E[%s,%s,%s]" % (h.basis[i], h.basis[j], a.basis[m])
             for i in range(n) for j in range(n) for m in range(da)]
    alg = AlgebraData(f, names, mul, unit, name="Hom(%s⊗%s,%s)" % (h.name, h.name, a.name))
    _certify(algebra_check(alg))
    return HomHHA(alg, left_ops, right_ops, n, da)


class TensorHAH:
    """The componentwise-product algebra on H⊗A⊗H with the outer-leg
    comultiplications as coactions: ρ = I⊗I⊗Δ on the right leg and
    λ = Δ⊗I⊗I on the left leg, plus the dual-basis translation operators
    f▷(h⊗a⊗k) = h⊗a⊗k₁ f(k₂) and (h⊗a⊗k)◁f = f(h₁) h₂⊗a⊗k.

    Unpacks as (algebra, rho, lam).
    """

    def __init__(self, algebra, rho, lam, dual_left_ops, dual_right_ops, n, dima):
        self.algebra = algebra
        self.rho = rho
        self.lam = lam
        self.dual_left_ops = dual_left_ops
        self.dual_right_ops = dual_right_ops
        self.n = n
        self.dima = dima

    def index(self, i, m, j):
        return (i * self.dima + m) * self.n + j

    def __iter__(self):
        return iter((self.algebra, self.rho, self.lam))


def tensor_hah(h, a):
    """Build X = H⊗A⊗H with (h⊗a⊗k)(h'⊗a'⊗k') = hh'⊗aa'⊗kk' and the
    coactions given by comultiplying an outer leg."""
    if a.unit is None:
        raise ValueError("tensor_hah needs a unital coefficient algebra")
    n, da = h.dim, a.dim
    f = h.field
    big = n * da * n

    def idx(i, m, j):
        return (i * da + m) * n + j

    mul = Tensor3((big, big, big))
    for (i, i2, p), c1 in h.mul.entries.items():
        for (m, m2, t), c2 in a.mul.entries.items():
            c12 = c1 * c2
            for (j, j2, q), c3 in h.mul.entries.items():
                mul.add(idx(i, m, j), idx(i2, m2, j2), idx(p, t, q), c12 * c3)

    unit = zeros(f, big)
    for i in range(n):
        if not h.unit[i]:
            continue
        for m in range(da):
            if not a.unit[m]:
                continue
            c = h.unit[i] * a.unit[m]
            for j in range(n):
                if h.unit[j]:
                    unit[idx(i, m, j)] = c * h.unit[j]

    rho = Tensor3((big, big, n))
    lam = Tensor3((big, n, big))
    for (j, j1, j2), c in h.comul.entries.items():
        for i in range(n):
            for m in range(da):
                rho.add(idx(i, m, j), idx(i, m, j1), j2, c)
    for (i, i1, i2), c in h.comul.entries.items():
        for m in range(da):
            for j in range(n):
                lam.add(idx(i, m, j), i1, idx(i2, m, j), c)

    dual_left = [[[f.zero] * big for _ in range(big)] for _ in range(n)]
    dual_right = [[[f.zero] * big for _ in range(big)] for _ in range(n)]
    for (k, j1, g), c in h.comul.entries.items():
        mat = dual_left[g]
        for i in range(n):
            for m in range(da):
                mat[idx(i, m, j1)][idx(i, m, k)] = mat[idx(i, m, j1)][idx(i, m, k)] + c
    for (i, g, j2), c in h.comul.entries.items():
        mat = dual_right[g]
        for m in range(da):
            for k in range(n):
                mat[idx(j2, m, k)][idx(i, m, k)] = mat[idx(j2, m, k)][idx(i, m, k)] + c

    names = ["%s⊗%s⊗%s" % (h.basis[i], a.basis[m], h.basis[j])
             for i in range(n) for m in range(da) for j in range(n)]
    alg = AlgebraData(f, names, mul, unit, name="%s⊗%s⊗%s" % (h.name, a.name, h.name))
    _certify(algebra_check(alg))
    return TensorHAH(alg, rho, lam, dual_left, dual_right, n, da)
