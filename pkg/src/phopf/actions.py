"""Partial module-algebra structures for a Hopf algebra acting on a unital
algebra, on either side or both.

An action is a coefficient table: entry (i, j, k) of the map tensor is the
coefficient of a_k in h_i ⇀ a_j (left) or in a_j ↼ h_i (right).  Every law is
checked on all basis tuples, which proves it outright by multilinearity.

The module also houses the dictionary between symmetric unital partial
actions of a group algebra kG and partial group actions given by ideals
D_g = A·1_g (central idempotents 1_g) and isomorphisms α_g: D_{g⁻¹} → D_g.
"""

from fractions import Fraction

from .algebras import (AlgebraData, HopfData, Report, algebra_check, dict_acc,
                       dict_of_vec, dual_hopf, group_algebra, mul_dicts,
                       vec_of_dict)
from .linalg import Subspace, Tensor3, unit_vec
from ._groups import check_group_table, group_identity, group_inverses


def same_algebra(a, b):
    return (a is b) or (a.field == b.field and a.basis == b.basis
                        and a.mul.entries == b.mul.entries and a.unit == b.unit)


def same_hopf(a, b):
    return same_algebra(a, b) and isinstance(a, HopfData) and isinstance(b, HopfData) \
        and a.comul.entries == b.comul.entries and a.counit == b.counit \
        and a.antipode == b.antipode


class PartialActionData:
    """One-sided partial action.  `map` entry (i, j, k): coefficient of
    basis a_k in h_i ⇀ a_j (side 'left') or a_j ↼ h_i (side 'right').
    Construction enforces that 1_H acts as the identity map; everything else
    is certified by check_lpma / check_rpma."""

    def __init__(self, hopf, alg, side, map_entries, symmetric=False, name=""):
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        if alg.unit is None:
            raise ValueError("partial actions need a unital algebra")
        self.hopf = hopf
        self.alg = alg
        self.side = side
        if isinstance(map_entries, dict):
            map_entries = Tensor3((hopf.dim, alg.dim, alg.dim), map_entries)
        if map_entries.dims != (hopf.dim, alg.dim, alg.dim):
            raise ValueError("action tensor shaped %r" % (map_entries.dims,))
        self.map = map_entries
        self.symmetric = symmetric
        self.name = name or ("%s %s-acts on %s" % (hopf.name, side, alg.name))
        pv = self.map.pair_view()
        one = hopf.field.one
        u_h = hopf.unit_dict()
        for j in range(alg.dim):
            if mul_dicts(pv, u_h, {j: one}) != {j: one}:
                raise ValueError("1_H must act as the identity (violated at basis %s)"
                                 % alg.basis[j])

    def apply(self, h, a):
        """h ⇀ a (left) or a ↼ h (right); h, a sparse dicts."""
        return mul_dicts(self.map.pair_view(), h, a)

    def matrix(self, i):
        """Dense operator matrix of basis element h_i (columns = images)."""
        f = self.hopf.field
        m = self.alg.dim
        out = [[f.zero] * m for _ in range(m)]
        for (j, k), c in ((key[1:], c) for key, c in self.map.entries.items()
                          if key[0] == i):
            out[k][j] = c
        return out

    def to_json(self, hopf_ref=None, algebra_ref=None):
        show = self.hopf.field.show
        return {
            "hopf": hopf_ref if hopf_ref is not None else self.hopf.to_json(),
            "algebra": algebra_ref if algebra_ref is not None else self.alg.to_json(),
            "side": self.side,
            "map": [[i, j, k, show(c)] for (i, j, k), c in sorted(self.map.entries.items())],
            "symmetric": bool(self.symmetric),
        }

    def __repr__(self):
        return "PartialActionData(%s)" % self.name


class PartialBimoduleData:
    """A left and a right partial action of the same Hopf algebra on the same
    algebra; compatibility h⇀(a↼g) = (h⇀a)↼g certified by check_bimodule."""

    def __init__(self, left, right):
        if left.side != "left" or right.side != "right":
            raise ValueError("need one left and one right action")
        if not same_hopf(left.hopf, right.hopf):
            raise ValueError("the two actions use different Hopf algebras")
        if not same_algebra(left.alg, right.alg):
            raise ValueError("the two actions act on different algebras")
        self.left = left
        self.right = right
        self.hopf = left.hopf
        self.alg = left.alg

    def to_json(self, hopf_ref=None, algebra_ref=None):
        return {
            "hopf": hopf_ref if hopf_ref is not None else self.hopf.to_json(),
            "algebra": algebra_ref if algebra_ref is not None else self.alg.to_json(),
            "left": {"map": self.left.to_json()["map"], "symmetric": self.left.symmetric},
            "right": {"map": self.right.to_json()["map"], "symmetric": self.right.symmetric},
        }

    def __repr__(self):
        return "PartialBimoduleData(%s on %s)" % (self.hopf.name, self.alg.name)


# ---------------------------------------------------------------------------
# axiom suites

def _action_suite(p, symmetric, left):
    rep = Report(p.name)
    H, A = p.hopf, p.alg
    n, m = H.dim, A.dim
    f = H.field
    pv_a = A.mul.pair_view()
    pv_h = H.mul.pair_view()
    iv = H.comul.in1_view()
    pv_act = p.map.pair_view()
    empty = {}
    one = f.one
    u_a = A.unit_dict()

    def act(h, a):
        return mul_dicts(pv_act, h, a)

    rep.law("unit-action")
    u_h = H.unit_dict()
    for j in range(m):
        got = act(u_h, {j: one})
        if got != {j: one}:
            rep.fail("unit-action", (j,), vec_of_dict(got, m, f), A.basis_vec(j))

    # multiplicativity: h⇀(ab) = (h₁⇀a)(h₂⇀b)   [right: (ab)↼h = (a↼h₁)(b↼h₂)]
    rep.law("action-multiplicativity")
    for i in range(n):
        di = iv.get(i, empty)
        for ja in range(m):
            for jb in range(m):
                lhs = act({i: one}, pv_a.get((ja, jb), empty))
                rhs = {}
                for (h1, h2), w in di.items():
                    t1 = act({h1: one}, {ja: one})
                    t2 = act({h2: one}, {jb: one})
                    for k, c in mul_dicts(pv_a, t1, t2).items():
                        dict_acc(rhs, k, w * c)
                if lhs != rhs:
                    rep.fail("action-multiplicativity", (i, ja, jb),
                             vec_of_dict(lhs, m, f), vec_of_dict(rhs, m, f))

    # composition against the unit:
    #   left:  h⇀(g⇀b)   = (h₁⇀1_A)(h₂g⇀b)
    #   right: (b↼g)↼h   = (b↼gh₁)(1_A↼h₂)
    rep.law("action-composition")
    comp_ok = True
    for i in range(n):
        di = iv.get(i, empty)
        for g in range(n):
            for jb in range(m):
                inner = act({g: one}, {jb: one})
                lhs = act({i: one}, inner)
                rhs = {}
                for (h1, h2), w in di.items():
                    if left:
                        t1 = act({h1: one}, u_a)
                        t2 = act(mul_dicts(pv_h, {h2: one}, {g: one}), {jb: one})
                        prod = mul_dicts(pv_a, t1, t2)
                    else:
                        t1 = act(mul_dicts(pv_h, {g: one}, {h1: one}), {jb: one})
                        t2 = act({h2: one}, u_a)
                        prod = mul_dicts(pv_a, t1, t2)
                    for k, c in prod.items():
                        dict_acc(rhs, k, w * c)
                if lhs != rhs:
                    comp_ok = False
                    rep.fail("action-composition", (i, g, jb),
                             vec_of_dict(lhs, m, f), vec_of_dict(rhs, m, f))

    # the same composition law with an extra algebra factor in place of 1_A:
    #   left:  h⇀[a(g⇀b)] = (h₁⇀a)(h₂g⇀b)
    #   right: [(b↼g)a]↼h = (b↼gh₁)(a↼h₂)
    rep.law("action-composition-nonunital")
    nonunital_ok = True
    for i in range(n):
        di = iv.get(i, empty)
        for g in range(n):
            for jb in range(m):
                inner = act({g: one}, {jb: one})
                for ja in range(m):
                    if left:
                        lhs = act({i: one}, mul_dicts(pv_a, {ja: one}, inner))
                    else:
                        lhs = act({i: one}, mul_dicts(pv_a, inner, {ja: one}))
                    rhs = {}
                    for (h1, h2), w in di.items():
                        if left:
                            t1 = act({h1: one}, {ja: one})
                            t2 = act(mul_dicts(pv_h, {h2: one}, {g: one}), {jb: one})
                            prod = mul_dicts(pv_a, t1, t2)
                        else:
                            t1 = act(mul_dicts(pv_h, {g: one}, {h1: one}), {jb: one})
                            t2 = act({h2: one}, {ja: one})
                            prod = mul_dicts(pv_a, t1, t2)
                        for k, c in prod.items():
                            dict_acc(rhs, k, w * c)
                    if lhs != rhs:
                        nonunital_ok = False
                        rep.fail("action-composition-nonunital", (i, g, ja, jb),
                                 vec_of_dict(lhs, m, f), vec_of_dict(rhs, m, f))

    # for unital algebras the two composition forms must agree as predicates
    rep.law("composition-forms-equivalence")
    unital_ok = comp_ok and not rep.failures_for("action-multiplicativity")
    if unital_ok != nonunital_ok:
        rep.fail("composition-forms-equivalence", (),
                 "unital form %s" % ("holds" if unital_ok else "fails"),
                 "general form %s" % ("holds" if nonunital_ok else "fails"))

    if symmetric:
        # left:  h⇀[(g⇀b)a] = (h₁g⇀b)(h₂⇀a)
        # right: [a(b↼g)]↼h = (a↼h₁)(b↼gh₂)
        rep.law("action-symmetry")
        for i in range(n):
            di = iv.get(i, empty)
            for g in range(n):
                for jb in range(m):
                    inner = act({g: one}, {jb: one})
                    for ja in range(m):
                        if left:
                            lhs = act({i: one}, mul_dicts(pv_a, inner, {ja: one}))
                        else:
                            lhs = act({i: one}, mul_dicts(pv_a, {ja: one}, inner))
                        rhs = {}
                        for (h1, h2), w in di.items():
                            if left:
                                t1 = act(mul_dicts(pv_h, {h1: one}, {g: one}), {jb: one})
                                t2 = act({h2: one}, {ja: one})
                                prod = mul_dicts(pv_a, t1, t2)
                            else:
                                t1 = act({h1: one}, {ja: one})
                                t2 = act(mul_dicts(pv_h, {g: one}, {h2: one}), {jb: one})
                                prod = mul_dicts(pv_a, t1, t2)
                            for k, c in prod.items():
                                dict_acc(rhs, k, w * c)
                        if lhs != rhs:
                            rep.fail("action-symmetry", (i, g, ja, jb),
                                     vec_of_dict(lhs, m, f), vec_of_dict(rhs, m, f))
    return rep


def check_lpma(p, symmetric=None):
    """Left partial module-algebra suite; `symmetric` adds the symmetry law
    (defaults to the action's own flag)."""
    if p.side != "left":
        raise ValueError("check_lpma expects a left action")
    return _action_suite(p, p.symmetric if symmetric is None else symmetric, left=True)


def check_rpma(p, symmetric=None):
    """Right partial module-algebra suite (mirror of check_lpma)."""
    if p.side != "right":
        raise ValueError("check_rpma expects a right action")
    return _action_suite(p, p.symmetric if symmetric is None else symmetric, left=False)


def check_bimodule(b):
    """Both one-sided suites plus the compatibility law h⇀(a↼g) = (h⇀a)↼g
    on all basis triples."""
    rep = Report("%s bimodule on %s" % (b.hopf.name, b.alg.name))
    rep.merge(check_lpma(b.left), prefix="left/")
    rep.merge(check_rpma(b.right), prefix="right/")
    n, m = b.hopf.dim, b.alg.dim
    f = b.hopf.field
    one = f.one
    rep.law("bimodule-compatibility")
    for i in range(n):
        for j in range(m):
            for g in range(n):
                lhs = b.left.apply({i: one}, b.right.apply({g: one}, {j: one}))
                rhs = b.right.apply({g: one}, b.left.apply({i: one}, {j: one}))
                if lhs != rhs:
                    rep.fail("bimodule-compatibility", (i, j, g),
                             vec_of_dict(lhs, m, f), vec_of_dict(rhs, m, f))
    return rep


def is_global(p):
    """True iff the action of every h on 1_A is ε(h)·1_A."""
    H, A = p.hopf, p.alg
    u_a = A.unit_dict()
    for i in range(H.dim):
        got = p.apply({i: H.field.one}, u_a)
        want = {k: H.counit[i] * c for k, c in u_a.items()} if H.counit[i] else {}
        if got != want:
            return False
    return True


def _certify_action(p, expect_symmetric=None):
    """Run the full suite with the symmetry law included; demote the flag if
    only symmetry fails, raise if anything else does."""
    suite = check_lpma if p.side == "left" else check_rpma
    rep = suite(p, symmetric=True)
    other = [x for x in rep.failures if x[0] != "action-symmetry"]
    if other:
        law, idx, lhs, rhs = other[0]
        raise AssertionError("constructed action failed %s at %s" % (law, idx))
    sym = not rep.failures_for("action-symmetry")
    if expect_symmetric and not sym:
        raise AssertionError("constructed action unexpectedly non-symmetric")
    p.symmetric = sym
    return p


# ---------------------------------------------------------------------------
# constructors

def trivial_action(hopf, alg, side="left"):
    """h⇀a = ε(h)a (or the right mirror) — the global action through the counit."""
    ent = {}
    for i in range(hopf.dim):
        if hopf.counit[i]:
            for j in range(alg.dim):
                ent[(i, j, j)] = hopf.counit[i]
    p = PartialActionData(hopf, alg, side, ent, symmetric=True,
                          name="trivial %s ε-action of %s on %s" % (side, hopf.name, alg.name))
    return _certify_action(p, expect_symmetric=True)


def trivialize_right(left):
    """Pair a certified left action with the trivial right ε-action."""
    right = trivial_action(left.hopf, left.alg, side="right")
    b = PartialBimoduleData(left, right)
    rep = check_bimodule(b)
    if not rep.passed:
        raise AssertionError("trivial right action failed compatibility: %s"
                             % rep.failures[0][0])
    return b


def sweedler_k_bimodule(field, r, s):
    """The two-parameter family of partial bimodule structures of the
    Sweedler algebra on the base field: g acts as zero on both sides,
    x⇀1 = r, xg⇀1 = −r from the left and 1↼x = s, 1↼xg = +s from the
    right.  (Flipping either sign of the xg value breaks the composition law
    — the exhaustive checker exhibits the witness.)"""
    from .algebras import scalar_algebra, sweedler_h4
    H = sweedler_h4(field)
    A = scalar_algebra(field)
    r = field.of(r)
    s = field.of(s)
    one = field.one
    left = PartialActionData(H, A, "left",
                             {(0, 0, 0): one, (2, 0, 0): r, (3, 0, 0): -r},
                             name="H4 left (r=%s) on k" % field.show(r))
    right = PartialActionData(H, A, "right",
                              {(0, 0, 0): one, (2, 0, 0): s, (3, 0, 0): s},
                              name="H4 right (s=%s) on k" % field.show(s))
    _certify_action(left)
    _certify_action(right)
    b = PartialBimoduleData(left, right)
    rep = check_bimodule(b)
    if not rep.passed:
        raise AssertionError("Sweedler (r,s) pair failed %s" % rep.failures[0][0])
    return b


def dual_regular_action(h):
    """The global left action of H* on H dual to comultiplication:
    f ▷ a = a₁ f(a₂).  For a group algebra this is p_g ▷ u_h = δ_{g,h} u_h."""
    dual = dual_hopf(h)
    ent = {}
    for (i, j, k), c in h.comul.entries.items():
        dict_acc(ent, (k, i, j), c)
    p = PartialActionData(dual, h, "left", ent,
                          name="%s regular-dual action on %s" % (dual.name, h.name))
    _certify_action(p)
    if not is_global(p):
        raise AssertionError("regular dual action must be global")
    return p


def induce_left(glob, e):
    """Restrict a global left action on B to A = e·B (e idempotent) by
    h⇀a = e·(h▷a).  Returns the induced partial action on A's row-reduced
    basis."""
    if glob.side != "left":
        raise ValueError("induce_left needs a left action")
    if not is_global(glob):
        raise ValueError("induce_left needs a global action")
    B = glob.alg
    f = B.field
    e_d = dict_of_vec(e)
    if B.mul_dict(e_d, e_d) != e_d:
        raise ValueError("e is not idempotent")
    n_b = B.dim
    span = Subspace(n_b, f,
                    [vec_of_dict(B.mul_dict(e_d, {j: f.one}), n_b, f) for j in range(n_b)])
    m = span.dim
    rows = [dict_of_vec(r) for r in span.rows]
    for r in rows:
        if B.mul_dict(e_d, r) != r:
            raise ValueError("e is not a left identity on e·B")
    unit_a = span.coords(e)
    if unit_a is None:
        raise ValueError("e does not lie in e·B")

    def coords(d):
        c = span.coords(vec_of_dict(d, n_b, f))
        if c is None:
            raise ValueError("induced value escapes the subalgebra")
        return c

    mul_a = Tensor3((m, m, m))
    for i in range(m):
        for j in range(m):
            for k, c in enumerate(coords(B.mul_dict(rows[i], rows[j]))):
                mul_a.add(i, j, k, c)
    A = AlgebraData(f, ["a%d" % i for i in range(m)], mul_a, unit_a,
                    name="e·%s" % B.name)

    act = Tensor3((glob.hopf.dim, m, m))
    one = f.one
    for g in range(glob.hopf.dim):
        for j in range(m):
            moved = B.mul_dict(e_d, glob.apply({g: one}, rows[j]))
            for k, c in enumerate(coords(moved)):
                act.add(g, j, k, c)
    p = PartialActionData(glob.hopf, A, "left", act,
                          name="%s induced on e·%s" % (glob.hopf.name, B.name))
    return _certify_action(p)


def induce_bimodule(bim, a_span, unit_a):
    """Restrict a global bimodule structure on B to a unital subalgebra A
    (given as a subspace with its own unit) by h⇀a = 1_A(h▷a) and
    a↼h = (a◁h)1_A.  Requires the corner condition
    (a◁h)(k▷b) = (a◁h)·1_A·(k▷b) with both sides inside A; rejected with a
    witness (a, h, k, b) otherwise."""
    B = bim.alg
    H = bim.hopf
    f = B.field
    if not (is_global(bim.left) and is_global(bim.right)):
        raise ValueError("induce_bimodule needs global actions on both sides")
    one = f.one
    rows = [dict_of_vec(r) for r in a_span.rows]
    m = len(rows)
    u_d = dict_of_vec(unit_a)
    if not a_span.contains(list(unit_a)):
        raise ValueError("unit_A must lie in A")
    for i, r in enumerate(rows):
        if B.mul_dict(u_d, r) != r or B.mul_dict(r, u_d) != r:
            raise ValueError("unit_A is not an identity on A (basis %d)" % i)
        for j, r2 in enumerate(rows):
            if not a_span.contains(vec_of_dict(B.mul_dict(r, r2), B.dim, f)):
                raise ValueError("A is not closed under multiplication at (%d, %d)" % (i, j))

    # corner condition: (a◁h)(k▷b) = (a◁h)·1_A·(k▷b), both sides in A
    for ia, a in enumerate(rows):
        for h in range(H.dim):
            a_h = bim.right.apply({h: one}, a)
            for k in range(H.dim):
                for ib, b in enumerate(rows):
                    k_b = bim.left.apply({k: one}, b)
                    lhs = B.mul_dict(a_h, k_b)
                    rhs = B.mul_dict(a_h, B.mul_dict(u_d, k_b))
                    if lhs != rhs or not a_span.contains(vec_of_dict(lhs, B.dim, f)):
                        raise ValueError("corner condition fails at witness "
                                         "(a=%d, h=%s, k=%s, b=%d)"
                                         % (ia, H.basis[h], H.basis[k], ib))

    def coords(d, what):
        c = a_span.coords(vec_of_dict(d, B.dim, f))
        if c is None:
            raise ValueError("induced %s value escapes A" % what)
        return c

    mul_a = Tensor3((m, m, m))
    for i in range(m):
        for j in range(m):
            for k, c in enumerate(coords(B.mul_dict(rows[i], rows[j]), "product")):
                mul_a.add(i, j, k, c)
    A = AlgebraData(f, ["a%d" % i for i in range(m)], mul_a,
                    a_span.coords(list(unit_a)), name="corner of %s" % B.name)
    rep = algebra_check(A)
    if not rep.passed:
        raise AssertionError("induced corner is not a unital algebra: %s" % rep.failures[0][0])

    lt = Tensor3((H.dim, m, m))
    rt = Tensor3((H.dim, m, m))
    for g in range(H.dim):
        for j in range(m):
            lv = B.mul_dict(u_d, bim.left.apply({g: one}, rows[j]))
            for k, c in enumerate(coords(lv, "left-action")):
                lt.add(g, j, k, c)
            rv = B.mul_dict(bim.right.apply({g: one}, rows[j]), u_d)
            for k, c in enumerate(coords(rv, "right-action")):
                rt.add(g, j, k, c)
    left = PartialActionData(H, A, "left", lt, name="induced left on corner")
    right = PartialActionData(H, A, "right", rt, name="induced right on corner")
    _certify_action(left)
    _certify_action(right)
    out = PartialBimoduleData(left, right)
    rep = check_bimodule(out)
    if not rep.passed:
        raise AssertionError("induced bimodule failed %s" % rep.failures[0][0])
    return out


# ---------------------------------------------------------------------------
# partial group actions vs. partial kG-actions

class GroupPartialActionData:
    """Unital partial action of a finite group on a unital algebra A:
    for each group element g a central idempotent 1_g (cutting the ideal
    D_g = A·1_g) and an algebra isomorphism α_g: D_{g⁻¹} → D_g.

    α_g is stored as a full operator matrix on A, normalized so that the
    matrix already includes the projection onto its domain:
    M_g = M_g ∘ (right multiplication by 1_{g⁻¹}).  The checker enforces the
    normalization, which makes the kG round-trip an exact coordinate
    identity."""

    def __init__(self, table, alg, idempotents, alphas, labels=None):
        bad = check_group_table(table)
        if bad is not None:
            raise ValueError("not a group table: fails %s" % bad)
        self.table = [list(r) for r in table]
        self.alg = alg
        self.idempotents = [list(v) for v in idempotents]
        self.alphas = [[list(r) for r in mat] for mat in alphas]
        self.labels = list(labels) if labels else ["g%d" % i for i in range(len(table))]
        n = len(self.table)
        if len(self.idempotents) != n or len(self.alphas) != n:
            raise ValueError("need one idempotent and one map per group element")
        self.identity = group_identity(self.table)
        self.inverses = group_inverses(self.table)

    def to_json(self, algebra_ref=None):
        show = self.alg.field.show
        return {
            "group": [list(r) for r in self.table],
            "labels": list(self.labels),
            "algebra": algebra_ref if algebra_ref is not None else self.alg.to_json(),
            "idempotents": [[show(c) for c in v] for v in self.idempotents],
            "alphas": [[[i, j, show(row[j])]
                        for i, row in enumerate(mat) for j in range(len(row)) if row[j]]
                       for mat in self.alphas],
        }

    def __repr__(self):
        return "GroupPartialActionData(|G|=%d on %s)" % (len(self.table), self.alg.name)


def check_group_partial_action(gpa):
    """Certify a partial group action: central idempotents, identity
    component trivial, canonical normalization of the α matrices,
    multiplicative isomorphisms with the right domains and ranges, the
    domain-translation law α_g(1_{g⁻¹}1_h) = 1_g 1_{gh}, and the composition
    law α_g∘α_h = α_{gh} on D_{h⁻¹} ∩ D_{(gh)⁻¹}."""
    A = gpa.alg
    f = A.field
    n = len(gpa.table)
    m = A.dim
    one = f.one
    rep = Report("partial %d-group action on %s" % (n, A.name))
    ids = [dict_of_vec(v) for v in gpa.idempotents]
    inv = gpa.inverses

    def mat_vec(mat, d):
        out = {}
        for j, c in d.items():
            for i in range(m):
                if mat[i][j]:
                    dict_acc(out, i, c * mat[i][j])
        return out

    rep.law("idempotent-central")
    for g in range(n):
        u = ids[g]
        if A.mul_dict(u, u) != u:
            rep.fail("idempotent-central", (g,),
                     vec_of_dict(A.mul_dict(u, u), m, f), vec_of_dict(u, m, f))
        for j in range(m):
            lhs = A.mul_dict(u, {j: one})
            rhs = A.mul_dict({j: one}, u)
            if lhs != rhs:
                rep.fail("idempotent-central", (g, j),
                         vec_of_dict(lhs, m, f), vec_of_dict(rhs, m, f))

    rep.law("identity-component")
    e = gpa.identity
    if ids[e] != A.unit_dict():
        rep.fail("identity-component", (e,), gpa.idempotents[e], A.unit)
    ident = [[one if i == j else f.zero for j in range(m)] for i in range(m)]
    if gpa.alphas[e] != ident:
        rep.fail("identity-component", (e,), gpa.alphas[e], "identity matrix")

    rep.law("canonical-normalization")
    for g in range(n):
        for j in range(m):
            dom = A.mul_dict({j: one}, ids[inv[g]])
            lhs = mat_vec(gpa.alphas[g], dom)
            rhs = mat_vec(gpa.alphas[g], {j: one})
            if lhs != rhs:
                rep.fail("canonical-normalization", (g, j),
                         vec_of_dict(lhs, m, f), vec_of_dict(rhs, m, f))

    rep.law("image-in-range")
    for g in range(n):
        for j in range(m):
            img = mat_vec(gpa.alphas[g], {j: one})
            cut = A.mul_dict(img, ids[g])
            if img != cut:
                rep.fail("image-in-range", (g, j),
                         vec_of_dict(img, m, f), vec_of_dict(cut, m, f))

    rep.law("unit-translation")
    for g in range(n):
        got = mat_vec(gpa.alphas[g], ids[inv[g]])
        if got != ids[g]:
            rep.fail("unit-translation", (g,),
                     vec_of_dict(got, m, f), gpa.idempotents[g])

    rep.law("iso-multiplicative")
    for g in range(n):
        for i in range(m):
            di = A.mul_dict({i: one}, ids[inv[g]])
            for j in range(m):
                dj = A.mul_dict({j: one}, ids[inv[g]])
                lhs = mat_vec(gpa.alphas[g], A.mul_dict(di, dj))
                rhs = A.mul_dict(mat_vec(gpa.alphas[g], di), mat_vec(gpa.alphas[g], dj))
                if lhs != rhs:
                    rep.fail("iso-multiplicative", (g, i, j),
                             vec_of_dict(lhs, m, f), vec_of_dict(rhs, m, f))

    rep.law("domain-translation")
    for g in range(n):
        for h in range(n):
            got = mat_vec(gpa.alphas[g], A.mul_dict(ids[inv[g]], ids[h]))
            want = A.mul_dict(ids[g], ids[gpa.table[g][h]])
            if got != want:
                rep.fail("domain-translation", (g, h),
                         vec_of_dict(got, m, f), vec_of_dict(want, m, f))

    rep.law("composition")
    for g in range(n):
        for h in range(n):
            gh = gpa.table[g][h]
            for j in range(m):
                r = A.mul_dict(A.mul_dict({j: one}, ids[inv[h]]), ids[inv[gh]])
                lhs = mat_vec(gpa.alphas[g], mat_vec(gpa.alphas[h], r))
                rhs = mat_vec(gpa.alphas[gh], r)
                if lhs != rhs:
                    rep.fail("composition", (g, h, j),
                             vec_of_dict(lhs, m, f), vec_of_dict(rhs, m, f))
    return rep


def group_to_kg(gpa):
    """Partial kG-action g⇀a = α_g(a·1_{g⁻¹}) from a certified partial group
    action; always symmetric."""
    rep = check_group_partial_action(gpa)
    if not rep.passed:
        law, idx, lhs, rhs = rep.failures[0]
        raise ValueError("partial group action fails %s at %s" % (law, idx))
    f = gpa.alg.field
    hopf = group_algebra(gpa.table, f, ["u_%s" % s for s in gpa.labels],
                         name="k[%d-group]" % len(gpa.table))
    n, m = len(gpa.table), gpa.alg.dim
    act = Tensor3((n, m, m))
    # normalized matrices already include ·1_{g⁻¹}, so columns are the action
    for g in range(n):
        for j in range(m):
            for i in range(m):
                act.add(g, j, i, gpa.alphas[g][i][j])
    p = PartialActionData(hopf, gpa.alg, "left", act,
                          name="kG-action from partial group action")
    return _certify_action(p, expect_symmetric=True)


def kg_to_group(p):
    """Recover the partial group action 1_g = g⇀1_A, α_g(a·1_{g⁻¹}) = g⇀a
    from a certified symmetric partial action of a group algebra."""
    if p.side != "left":
        raise ValueError("kg_to_group expects a left action")
    H = p.hopf
    n = H.dim
    one = H.field.one
    # the Hopf algebra must be an honest group algebra on its basis
    if H.comul.entries != {(i, i, i): one for i in range(n)}:
        raise ValueError("the acting Hopf algebra is not a group algebra "
                         "(basis not group-like)")
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = H.mul.pair_view().get((i, j), {})
            if len(prod) != 1 or set(prod.values()) != {one}:
                raise ValueError("the acting Hopf algebra is not a group algebra")
            row.append(next(iter(prod)))
        table.append(row)
    rep = check_lpma(p, symmetric=True)
    if not rep.passed:
        raise ValueError("kg_to_group needs a certified symmetric action; fails %s"
                         % rep.failures[0][0])
    A = p.alg
    m = A.dim
    f = A.field
    idempotents = [vec_of_dict(p.apply({g: one}, A.unit_dict()), m, f) for g in range(n)]
    alphas = [p.matrix(g) for g in range(n)]
    gpa = GroupPartialActionData(table, A, idempotents, alphas,
                                 labels=[b[2:] if b.startswith("u_") else b for b in H.basis])
    out = check_group_partial_action(gpa)
    if not out.passed:
        law, idx, lhs, rhs = out.failures[0]
        raise ValueError("derived group data fails %s at %s "
                         "(input was not a symmetric partial kG-action)" % (law, idx))
    return gpa


# ---------------------------------------------------------------------------
# the averaged-idempotent example on a group algebra

def en_kg_example(table, normal_subgroup, field, labels=None):
    """A = e_N·kG for a normal subgroup N with e_N = (1/|N|) Σ_{n∈N} u_n,
    acted on by the dual group algebra: p_g ⇀ e_N u_h = (1/|N|) e_N u_h when
    g⁻¹h ∈ N and 0 otherwise.  Returns (A, action); the action is partial
    (not global) as soon as |N| > 1."""
    bad = check_group_table(table)
    if bad is not None:
        raise ValueError("not a group table: fails %s" % bad)
    n = len(table)
    if labels is None:
        labels = ["g%d" % i for i in range(n)]
    N = sorted(set(normal_subgroup))
    e = group_identity(table)
    inv = group_inverses(table)
    if not N or any(not (0 <= x < n) for x in N):
        raise ValueError("subgroup indices out of range")
    nset = set(N)
    if e not in nset:
        raise ValueError("N must contain the identity")
    for a in N:
        if inv[a] not in nset:
            raise ValueError("N is not closed under inverses")
        for b in N:
            if table[a][b] not in nset:
                raise ValueError("N is not closed under multiplication")
    for g in range(n):
        for a in N:
            if table[table[g][a]][inv[g]] not in nset:
                raise ValueError("N is not normal in G")
    if field.char and len(N) % field.char == 0:
        raise ValueError("characteristic divides |N|")

    # coset representatives: minimal index in each coset N·h
    rep_of = {}
    reps = []
    for h in range(n):
        r = min(table[a][h] for a in N)
        rep_of[h] = r
    for h in range(n):
        if rep_of[h] == h:
            reps.append(h)
    idx = {r: t for t, r in enumerate(reps)}
    m = len(reps)
    one = field.one
    scale = field.of(Fraction(1, len(N)))

    mul = Tensor3((m, m, m))
    for r1 in reps:
        for r2 in reps:
            mul.add(idx[r1], idx[r2], idx[rep_of[table[r1][r2]]], one)
    A = AlgebraData(field, ["eN·u_%s" % labels[r] for r in reps], mul,
                    unit_vec(field, m, idx[rep_of[e]]), name="eN·kG")
    rep = algebra_check(A)
    if not rep.passed:
        raise AssertionError("coset algebra failed %s" % rep.failures[0][0])

    hopf = dual_hopf(group_algebra(table, field, ["u_%s" % s for s in labels], name="kG"))
    act = Tensor3((n, m, m))
    for g in range(n):
        for h in reps:
            if table[inv[g]][h] in nset:
                act.add(g, idx[h], idx[h], scale)
    p = PartialActionData(hopf, A, "left", act,
                          name="dual action on eN·kG")
    return A, _certify_action(p)
